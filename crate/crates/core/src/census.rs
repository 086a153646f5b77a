//! Exact brute-force statistics of the alpha-positioned prime factor:
//! per-prime censuses, parity splits, empirical CDFs, and the mean logarithm.
//!
//! Every count comes from a full scan of [2, x] against the factor table.
//! Scans run segment-parallel; integer counts use atomic adds (exact and
//! order-independent), float sums are merged per-segment in a fixed order,
//! so all results are independent of the thread count.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::sieve::{primes_slice, primes_up_to, scan_segments, FactorTable, MAX_OMEGA};

/// Maps a prime to its index in the ascending prime list; O(1) below 2^16,
/// binary search above.
struct PrimeIndex<'a> {
    primes: &'a [u32],
    small: Vec<u32>,
}

const SMALL_INDEX_BOUND: usize = 1 << 16;

impl<'a> PrimeIndex<'a> {
    fn new(primes: &'a [u32]) -> Self {
        let mut small = vec![u32::MAX; SMALL_INDEX_BOUND];
        for (i, &p) in primes.iter().enumerate() {
            if (p as usize) < SMALL_INDEX_BOUND {
                small[p as usize] = i as u32;
            } else {
                break;
            }
        }
        PrimeIndex { primes, small }
    }

    #[inline]
    fn index_of(&self, p: u32) -> usize {
        if (p as usize) < SMALL_INDEX_BOUND {
            self.small[p as usize] as usize
        } else {
            self.primes.partition_point(|&q| q < p)
        }
    }
}

/// Per-prime counts M_p^(alpha)(x) for a fixed (x, alpha).
pub struct CensusTable {
    x: u64,
    alpha: Alpha,
    primes: Arc<Vec<u32>>,
    n_primes: usize,
    counts: Vec<u64>,
}

impl CensusTable {
    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn alpha(&self) -> &Alpha {
        &self.alpha
    }

    /// Count for one prime; None when p is not a prime <= x.
    pub fn count_for(&self, p: u64) -> Option<u64> {
        let list = &self.primes[..self.n_primes];
        let i = list.partition_point(|&q| (q as u64) < p);
        (i < list.len() && list[i] as u64 == p).then(|| self.counts[i])
    }

    /// Ascending (prime, count) pairs over all primes <= x.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.primes[..self.n_primes]
            .iter()
            .zip(&self.counts)
            .map(|(&p, &c)| (p as u64, c))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Exact census of P^(alpha)(n) over 2 <= n <= x.
pub fn census(table: &FactorTable, x: u64, alpha: &Alpha) -> Result<CensusTable> {
    check_x(table, x)?;
    let primes = primes_up_to(x);
    let n_primes = primes_slice(&primes, x).len();
    let index = PrimeIndex::new(&primes[..n_primes]);
    let counts: Vec<AtomicU64> = (0..n_primes).map(|_| AtomicU64::new(0)).collect();

    scan_segments(x).into_par_iter().for_each(|(lo, hi)| {
        let mut buf = [0u32; MAX_OMEGA];
        for n in lo..=hi {
            let omega = table.factor_stack(n, &mut buf);
            let idx = alpha.position_index(omega as u32) as usize;
            let p = buf[idx - 1];
            counts[index.index_of(p)].fetch_add(1, Ordering::Relaxed);
        }
    });

    Ok(CensusTable {
        x,
        alpha: *alpha,
        primes: Arc::clone(&primes),
        n_primes,
        counts: counts.into_iter().map(AtomicU64::into_inner).collect(),
    })
}

/// Middle-prime counts split by the parity of Omega(n), for one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCensus {
    pub x: u64,
    pub p: u64,
    /// Omega odd: the exact middle factor equals p.
    pub overline: u64,
    /// Omega even: the smaller of the two middle factors equals p.
    pub underline: u64,
}

/// Parity-split middle-prime census for every prime at once.
pub struct ParityCensusTable {
    x: u64,
    primes: Arc<Vec<u32>>,
    n_primes: usize,
    overline: Vec<u64>,
    underline: Vec<u64>,
}

impl ParityCensusTable {
    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn get(&self, p: u64) -> Option<ParityCensus> {
        let list = &self.primes[..self.n_primes];
        let i = list.partition_point(|&q| (q as u64) < p);
        (i < list.len() && list[i] as u64 == p).then(|| ParityCensus {
            x: self.x,
            p,
            overline: self.overline[i],
            underline: self.underline[i],
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = ParityCensus> + '_ {
        self.primes[..self.n_primes]
            .iter()
            .zip(self.overline.iter().zip(&self.underline))
            .map(|(&p, (&o, &u))| ParityCensus {
                x: self.x,
                p: p as u64,
                overline: o,
                underline: u,
            })
    }
}

/// Full-scan parity census: one pass fills both parities for all primes.
pub fn census_parity_all(table: &FactorTable, x: u64) -> Result<ParityCensusTable> {
    check_x(table, x)?;
    let primes = primes_up_to(x);
    let n_primes = primes_slice(&primes, x).len();
    let index = PrimeIndex::new(&primes[..n_primes]);
    let overline: Vec<AtomicU64> = (0..n_primes).map(|_| AtomicU64::new(0)).collect();
    let underline: Vec<AtomicU64> = (0..n_primes).map(|_| AtomicU64::new(0)).collect();

    scan_segments(x).into_par_iter().for_each(|(lo, hi)| {
        let mut buf = [0u32; MAX_OMEGA];
        for n in lo..=hi {
            let omega = table.factor_stack(n, &mut buf);
            // ceil(omega/2): the exact middle for odd omega, the smaller of
            // the two choices for even omega.
            let p = buf[omega.div_ceil(2) - 1];
            let slot = index.index_of(p);
            if omega % 2 == 1 {
                overline[slot].fetch_add(1, Ordering::Relaxed);
            } else {
                underline[slot].fetch_add(1, Ordering::Relaxed);
            }
        }
    });

    Ok(ParityCensusTable {
        x,
        primes: Arc::clone(&primes),
        n_primes,
        overline: overline.into_iter().map(AtomicU64::into_inner).collect(),
        underline: underline.into_iter().map(AtomicU64::into_inner).collect(),
    })
}

/// Parity census for a single prime, scanning only multiples of p.
pub fn census_parity(table: &FactorTable, x: u64, p: u64) -> Result<ParityCensus> {
    check_x(table, x)?;
    if !table.is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let mut overline = 0u64;
    let mut underline = 0u64;
    let mut buf = [0u32; MAX_OMEGA];
    let mut n = p;
    while n <= x {
        let omega = table.factor_stack(n, &mut buf);
        if buf[omega.div_ceil(2) - 1] as u64 == p {
            if omega % 2 == 1 {
                overline += 1;
            } else {
                underline += 1;
            }
        }
        n += p;
    }
    Ok(ParityCensus {
        x,
        p,
        overline,
        underline,
    })
}

/// (1/x) sum_{n <= x} log P^(alpha)(n), accumulated directly per n.
pub fn mean_log_alpha(table: &FactorTable, x: u64, alpha: &Alpha) -> Result<f64> {
    check_x(table, x)?;
    let partials: Vec<KahanSum> = scan_segments(x)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut buf = [0u32; MAX_OMEGA];
            let mut acc = KahanSum::new();
            for n in lo..=hi {
                let omega = table.factor_stack(n, &mut buf);
                let idx = alpha.position_index(omega as u32) as usize;
                acc.add((buf[idx - 1] as f64).ln());
            }
            acc
        })
        .collect();
    let mut total = KahanSum::new();
    for part in partials {
        total.merge(part);
    }
    Ok(total.value() / x as f64)
}

/// A weighted step CDF: value jumps at sorted breakpoints.
#[derive(Debug, Clone)]
pub struct EmpiricalCdf {
    /// Strictly increasing jump locations.
    breakpoints: Vec<f64>,
    /// cum[i] = fraction of mass at breakpoints[..=i].
    cum: Vec<f64>,
}

impl EmpiricalCdf {
    /// Build from (value, weight) pairs; weights are exact counts.
    pub fn from_weighted(mut pairs: Vec<(f64, u64)>, denominator: u64) -> Self {
        pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut breakpoints = Vec::new();
        let mut cum = Vec::new();
        let mut running = 0u64;
        for (t, w) in pairs {
            if w == 0 {
                continue;
            }
            running += w;
            if breakpoints.last() == Some(&t) {
                *cum.last_mut().unwrap() = running as f64 / denominator as f64;
            } else {
                breakpoints.push(t);
                cum.push(running as f64 / denominator as f64);
            }
        }
        EmpiricalCdf { breakpoints, cum }
    }

    /// Fraction of mass strictly below t.
    pub fn eval(&self, t: f64) -> f64 {
        let i = self.breakpoints.partition_point(|&b| b < t);
        if i == 0 {
            0.0
        } else {
            self.cum[i - 1]
        }
    }

    pub fn jumps(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.breakpoints.iter().copied().zip(self.cum.iter().copied())
    }

    /// Exact sup-distance against a continuous CDF: the supremum is attained
    /// at a jump, approaching from either side.
    pub fn ks_distance<G: Fn(f64) -> f64>(&self, reference: G) -> f64 {
        let mut best: f64 = 0.0;
        let mut before = 0.0;
        for (&t, &after) in self.breakpoints.iter().zip(&self.cum) {
            let g = reference(t);
            best = best.max((before - g).abs()).max((after - g).abs());
            before = after;
        }
        best
    }
}

/// Empirical CDF of (log_2 P^(alpha)(n) - alpha log_2 x)/sqrt(log_2 x) over
/// n in [2, x]; log_2 is the iterated natural log, so p = 2 contributes a
/// negative but perfectly valid breakpoint.
pub fn loglog_empirical_cdf(census: &CensusTable) -> Result<EmpiricalCdf> {
    if census.x() < 16 {
        return Err(Error::Domain(format!(
            "normalized CDF needs x >= 16 so that log_2 x > 0, got {}",
            census.x()
        )));
    }
    let llx = (census.x() as f64).ln().ln();
    let scale = llx.sqrt();
    let a = census.alpha().value();
    let pairs = census
        .iter()
        .map(|(p, c)| (((p as f64).ln().ln() - a * llx) / scale, c))
        .collect();
    Ok(EmpiricalCdf::from_weighted(pairs, census.x() - 1))
}

/// One point of the normalized loglog CDF.
pub fn loglog_cdf(census: &CensusTable, t: f64) -> Result<f64> {
    Ok(loglog_empirical_cdf(census)?.eval(t))
}

/// Relative positions of p across the multiples of p up to x, aggregated by
/// the exact fraction k/Omega.
pub struct RpSample {
    pub x: u64,
    pub p: u64,
    /// ((k, omega), count), aggregated; k is the largest index of p.
    pub positions: Vec<((u32, u32), u64)>,
    /// floor(x/p): the number of multiples of p up to x.
    pub denominator: u64,
}

/// Scan the multiples of p and record R_p(n) = k/Omega(n) for each.
pub fn rp_sample(table: &FactorTable, x: u64, p: u64) -> Result<RpSample> {
    check_x(table, x)?;
    if !table.is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if p > x {
        return Err(Error::Domain(format!("p = {p} exceeds x = {x}")));
    }
    let n_mult = x / p;
    let chunk = (1u64 << 18).max(1);
    let n_chunks = n_mult.div_ceil(chunk);
    let maps: Vec<Vec<((u32, u32), u64)>> = (0..n_chunks)
        .into_par_iter()
        .map(|ci| {
            let m_lo = 1 + ci * chunk;
            let m_hi = (m_lo + chunk - 1).min(n_mult);
            let mut buf = [0u32; MAX_OMEGA];
            let mut local: Vec<((u32, u32), u64)> = Vec::new();
            for m in m_lo..=m_hi {
                let n = m * p;
                let omega = table.factor_stack(n, &mut buf);
                let k = buf[..omega]
                    .iter()
                    .rposition(|&q| q as u64 == p)
                    .expect("p divides n")
                    + 1;
                let key = (k as u32, omega as u32);
                match local.iter_mut().find(|(kk, _)| *kk == key) {
                    Some((_, c)) => *c += 1,
                    None => local.push((key, 1)),
                }
            }
            local
        })
        .collect();
    let mut agg: std::collections::BTreeMap<(u32, u32), u64> = std::collections::BTreeMap::new();
    for map in maps {
        for (key, c) in map {
            *agg.entry(key).or_insert(0) += c;
        }
    }
    Ok(RpSample {
        x,
        p,
        positions: agg.into_iter().collect(),
        denominator: n_mult,
    })
}

/// Empirical CDF of (R_p(n) - beta) / (log_2 x)^{-1/2} over the multiples
/// of p up to x.
pub fn rp_empirical_cdf(sample: &RpSample) -> EmpiricalCdf {
    let llx = (sample.x as f64).ln().ln();
    let beta = (sample.p as f64).ln().ln() / llx;
    let scale = llx.sqrt();
    let pairs = sample
        .positions
        .iter()
        .map(|&((k, omega), c)| (((k as f64 / omega as f64) - beta) * scale, c))
        .collect();
    EmpiricalCdf::from_weighted(pairs, sample.denominator)
}

/// One point of the normalized relative-position CDF.
pub fn rp_cdf(sample: &RpSample, t: f64) -> f64 {
    rp_empirical_cdf(sample).eval(t)
}

fn check_x(table: &FactorTable, x: u64) -> Result<()> {
    if x > table.limit() {
        return Err(Error::Resource(format!(
            "x = {x} exceeds the factor table limit {}",
            table.limit()
        )));
    }
    if x < 2 {
        return Err(Error::Domain("census needs x >= 2".into()));
    }
    Ok(())
}

//! Smallest-prime-factor table and the factorization queries built on it.
//!
//! The table stores, for every n in [2, limit], the smallest prime factor of
//! n as a 32-bit entry. Construction is segment-parallel; afterwards the
//! table is immutable and all queries are read-only.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Rational64;
use rayon::prelude::*;

use crate::alpha::Alpha;
use crate::error::{Error, Result};

/// Default segment length (entries) for table construction and scans.
pub const SEGMENT_LEN: usize = 1 << 22;

/// Upper bound on Omega(n) for n < 2^32 (2^32 > 2^31 means at most 31 factors,
/// padded for safety).
pub(crate) const MAX_OMEGA: usize = 40;

/// Sieve-backed smallest-prime-factor table for [2, limit].
pub struct FactorTable {
    limit: u64,
    /// spf[n - 2] = smallest prime factor of n.
    spf: Vec<u32>,
    primes: OnceLock<Vec<u32>>,
}

/// Ordered prime factorization of a single integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// (prime, multiplicity) pairs with strictly increasing primes.
    pub factors: Vec<(u64, u32)>,
    /// Omega(n): number of prime factors with multiplicity.
    pub big_omega: u32,
    /// omega(n): number of distinct prime factors.
    pub small_omega: u32,
}

impl Factorization {
    /// Multiply the factorization back out.
    pub fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product::<u64>()
            .max(1)
    }
}

/// Build the table for every n in [2, limit].
pub fn build_factor_table(limit: u64) -> Result<FactorTable> {
    if !(2..1u64 << 32).contains(&limit) {
        return Err(Error::Config(format!(
            "factor table limit must lie in [2, 2^32), got {limit}"
        )));
    }
    let len = (limit - 1) as usize;
    let mut spf = Vec::new();
    spf.try_reserve_exact(len)
        .map_err(|_| Error::Resource(format!("cannot allocate {len} table entries")))?;
    spf.resize(len, 0u32);

    let sqrt = (limit as f64).sqrt() as u64 + 1;
    let base = simple_primes(sqrt.min(limit));

    spf.par_chunks_mut(SEGMENT_LEN)
        .enumerate()
        .for_each(|(seg, chunk)| {
            let lo = 2 + (seg * SEGMENT_LEN) as u64;
            let hi = lo + chunk.len() as u64 - 1;
            for &p in &base {
                let p = p as u64;
                let pp = p * p;
                if pp > hi {
                    break;
                }
                let mut m = pp.max(lo.div_ceil(p) * p);
                while m <= hi {
                    let cell = &mut chunk[(m - lo) as usize];
                    if *cell == 0 {
                        *cell = p as u32;
                    }
                    m += p;
                }
            }
            for (i, cell) in chunk.iter_mut().enumerate() {
                if *cell == 0 {
                    *cell = (lo + i as u64) as u32;
                }
            }
        });

    Ok(FactorTable {
        limit,
        spf,
        primes: OnceLock::new(),
    })
}

impl FactorTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of n, 2 <= n <= limit.
    #[inline]
    pub fn spf(&self, n: u64) -> u32 {
        debug_assert!((2..=self.limit).contains(&n));
        self.spf[(n - 2) as usize]
    }

    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf(n) as u64 == n
    }

    /// Ascending primes up to the table limit (computed once, then shared).
    pub fn primes(&self) -> &[u32] {
        self.primes.get_or_init(|| {
            let mut out: Vec<Vec<u32>> = Vec::new();
            self.spf
                .par_chunks(SEGMENT_LEN)
                .enumerate()
                .map(|(seg, chunk)| {
                    let lo = 2 + (seg * SEGMENT_LEN) as u64;
                    chunk
                        .iter()
                        .enumerate()
                        .filter(|&(i, &s)| s as u64 == lo + i as u64)
                        .map(|(i, _)| (lo + i as u64) as u32)
                        .collect()
                })
                .collect_into_vec(&mut out);
            out.concat()
        })
    }

    /// Number of primes <= limit.
    pub fn prime_count(&self) -> usize {
        self.primes().len()
    }

    fn check_range(&self, n: u64) -> Result<()> {
        if n == 0 || n > self.limit {
            return Err(Error::Domain(format!(
                "n = {n} outside table range [1, {}]",
                self.limit
            )));
        }
        Ok(())
    }

    /// Fill `buf` with the nondecreasing flattened prime factor list of m.
    /// Returns Omega(m). The spf chain yields the factors already sorted.
    #[inline]
    pub(crate) fn factor_stack(&self, mut m: u64, buf: &mut [u32; MAX_OMEGA]) -> usize {
        let mut cnt = 0;
        while m > 1 {
            let p = self.spf(m);
            buf[cnt] = p;
            cnt += 1;
            m /= p as u64;
        }
        cnt
    }

    /// Omega(m) without materializing the factor list.
    #[inline]
    pub(crate) fn big_omega_of(&self, mut m: u64) -> u32 {
        let mut cnt = 0;
        while m > 1 {
            m /= self.spf(m) as u64;
            cnt += 1;
        }
        cnt
    }

    /// Prime factorization of n, 1 <= n <= limit.
    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        self.check_range(n)?;
        let mut factors: Vec<(u64, u32)> = Vec::new();
        let mut big_omega = 0u32;
        let mut m = n;
        while m > 1 {
            let p = self.spf(m) as u64;
            let mut mult = 0u32;
            while m % p == 0 {
                m /= p;
                mult += 1;
            }
            big_omega += mult;
            factors.push((p, mult));
        }
        let small_omega = factors.len() as u32;
        Ok(Factorization {
            factors,
            big_omega,
            small_omega,
        })
    }

    /// The prime in position ceil(alpha * Omega(n)) of the flattened
    /// nondecreasing factor list; 1 for n = 1.
    pub fn alpha_position_prime(&self, n: u64, alpha: &Alpha) -> Result<u64> {
        let a = alpha.value();
        if !(a > 0.0 && a < 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0,1), got {a}")));
        }
        self.check_range(n)?;
        if n == 1 {
            return Ok(1);
        }
        let mut buf = [0u32; MAX_OMEGA];
        let omega = self.factor_stack(n, &mut buf);
        let idx = alpha.position_index(omega as u32) as usize;
        Ok(buf[idx - 1] as u64)
    }

    /// Relative position k/Omega(n) of p among the factors of n, where k is
    /// the largest index holding a copy of p.
    pub fn relative_position(&self, n: u64, p: u64) -> Result<Rational64> {
        self.check_range(n)?;
        if !self.is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if n % p != 0 {
            return Err(Error::Domain(format!("{p} does not divide {n}")));
        }
        let mut buf = [0u32; MAX_OMEGA];
        let omega = self.factor_stack(n, &mut buf);
        let k = buf[..omega]
            .iter()
            .rposition(|&q| q as u64 == p)
            .expect("divisor must appear in factor list")
            + 1;
        Ok(Rational64::new(k as i64, omega as i64))
    }

    /// Persist the table; see the module cache format notes.
    pub fn save_cache<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let file = File::create(path)?;
        let mut w = BufWriter::with_capacity(1 << 20, file);
        let mut hash = Fnv1a::new();
        w.write_all(CACHE_MAGIC)?;
        let limit_bytes = self.limit.to_le_bytes();
        hash.update(&limit_bytes);
        w.write_all(&limit_bytes)?;
        for &entry in &self.spf {
            let bytes = entry.to_le_bytes();
            hash.update(&bytes);
            w.write_all(&bytes)?;
        }
        w.write_all(&hash.finish().to_le_bytes())?;
        w.flush()?;
        Ok(())
    }
}

impl PartialEq for FactorTable {
    fn eq(&self, other: &Self) -> bool {
        self.limit == other.limit && self.spf == other.spf
    }
}

/// Cache file layout: magic "SPF1", u64 LE limit, (limit-1) u32 LE entries
/// for n = 2..=limit, u64 LE FNV-1a checksum of the limit and entry bytes.
const CACHE_MAGIC: &[u8; 4] = b"SPF1";

/// Load a table persisted with [`FactorTable::save_cache`].
pub fn load_cache<P: AsRef<Path>>(path: P) -> Result<FactorTable> {
    let file = File::open(path)?;
    let mut r = BufReader::with_capacity(1 << 20, file);

    let mut magic = [0u8; 4];
    read_fully(&mut r, &mut magic, "magic")?;
    if &magic != CACHE_MAGIC {
        return Err(Error::Format(format!(
            "bad magic {magic:?}, expected {CACHE_MAGIC:?}"
        )));
    }

    let mut hash = Fnv1a::new();
    let mut limit_bytes = [0u8; 8];
    read_fully(&mut r, &mut limit_bytes, "limit")?;
    hash.update(&limit_bytes);
    let limit = u64::from_le_bytes(limit_bytes);
    if !(2..1u64 << 32).contains(&limit) {
        return Err(Error::Format(format!("cache limit {limit} out of range")));
    }

    let len = (limit - 1) as usize;
    let mut spf = Vec::new();
    spf.try_reserve_exact(len)
        .map_err(|_| Error::Resource(format!("cannot allocate {len} table entries")))?;
    let mut buf = vec![0u8; 1 << 20];
    let mut remaining = len * 4;
    while remaining > 0 {
        let take = remaining.min(buf.len());
        read_fully(&mut r, &mut buf[..take], "entries")?;
        hash.update(&buf[..take]);
        for chunk in buf[..take].chunks_exact(4) {
            spf.push(u32::from_le_bytes(chunk.try_into().unwrap()));
        }
        remaining -= take;
    }

    let mut check_bytes = [0u8; 8];
    read_fully(&mut r, &mut check_bytes, "checksum")?;
    let stored = u64::from_le_bytes(check_bytes);
    if stored != hash.finish() {
        return Err(Error::Format("checksum mismatch".into()));
    }
    let mut extra = [0u8; 1];
    if r.read(&mut extra)? != 0 {
        return Err(Error::Format("trailing data after checksum".into()));
    }

    Ok(FactorTable {
        limit,
        spf,
        primes: OnceLock::new(),
    })
}

fn read_fully<R: Read>(r: &mut R, buf: &mut [u8], what: &str) -> Result<()> {
    r.read_exact(buf)
        .map_err(|_| Error::Format(format!("truncated file while reading {what}")))
}

struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    #[inline]
    fn update(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= b as u64;
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

/// Plain sieve of Eratosthenes, used for base primes and small requests.
fn simple_primes(limit: u64) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut comp = vec![false; limit + 1];
    let mut out = Vec::new();
    for n in 2..=limit {
        if !comp[n] {
            out.push(n as u32);
            let mut m = n * n;
            while m <= limit {
                comp[m] = true;
                m += n;
            }
        }
    }
    out
}

/// Ascending primes in [lo, hi], segment-sieved with the given base primes
/// (which must cover sqrt(hi)).
fn segment_primes(base: &[u32], lo: u64, hi: u64) -> Vec<u32> {
    let len = (hi - lo + 1) as usize;
    let mut comp = vec![false; len];
    for &p in base {
        let p = p as u64;
        if p * p > hi {
            break;
        }
        let mut m = (p * p).max(lo.div_ceil(p) * p);
        while m <= hi {
            comp[(m - lo) as usize] = true;
            m += p;
        }
    }
    comp.iter()
        .enumerate()
        .filter(|&(i, &c)| !c && lo + i as u64 >= 2)
        .map(|(i, _)| (lo + i as u64) as u32)
        .collect()
}

struct PrimeCache {
    covered: u64,
    primes: Arc<Vec<u32>>,
}

static PRIME_CACHE: Mutex<Option<PrimeCache>> = Mutex::new(None);

/// Shared ascending list of all primes <= limit (possibly more). Grown
/// geometrically and cached for the lifetime of the process; constants-lab
/// and the Mertens dissection share it immutably.
pub fn primes_up_to(limit: u64) -> Arc<Vec<u32>> {
    assert!(limit < 1u64 << 32, "prime enumeration capped below 2^32");
    let mut guard = PRIME_CACHE.lock().unwrap();
    if let Some(cache) = guard.as_ref() {
        if cache.covered >= limit {
            return Arc::clone(&cache.primes);
        }
    }
    let target = limit
        .max(guard.as_ref().map_or(0, |c| c.covered * 2))
        .max(1 << 20);
    let sqrt = (target as f64).sqrt() as u64 + 1;
    let base = simple_primes(sqrt);
    let seg = SEGMENT_LEN as u64;
    let n_segs = (target - 1).div_ceil(seg);
    let chunks: Vec<Vec<u32>> = (0..n_segs)
        .into_par_iter()
        .map(|i| {
            let lo = 2 + i * seg;
            let hi = (lo + seg - 1).min(target);
            segment_primes(&base, lo, hi)
        })
        .collect();
    let primes = Arc::new(chunks.concat());
    *guard = Some(PrimeCache {
        covered: target,
        primes: Arc::clone(&primes),
    });
    primes
}

/// Primes of `list` that are <= bound (the list is ascending).
pub fn primes_slice(list: &[u32], bound: u64) -> &[u32] {
    let cut = list.partition_point(|&p| p as u64 <= bound);
    &list[..cut]
}

/// Fixed segmentation of [2, x] as (lo, hi) pairs, for parallel scans whose
/// per-segment partials are merged in segment order. The segmentation does
/// not depend on the thread count, so merged results never do either.
pub fn scan_segments(x: u64) -> Vec<(u64, u64)> {
    if x < 2 {
        return Vec::new();
    }
    let seg = SEGMENT_LEN as u64;
    let n_segs = (x - 1).div_ceil(seg);
    (0..n_segs)
        .map(|i| {
            let lo = 2 + i * seg;
            let hi = (lo + seg - 1).min(x);
            (lo, hi)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spf_small_examples() {
        let t = build_factor_table(100).unwrap();
        assert_eq!(t.spf(4), 2);
        assert_eq!(t.spf(9), 3);
        assert_eq!(t.spf(7), 7);
        assert_eq!(t.spf(91), 7);
        for p in [2u64, 3, 5, 7] {
            assert_eq!(t.spf(p) as u64, p);
        }
    }

    #[test]
    fn spf_invariants_exhaustive() {
        let t = build_factor_table(20_000).unwrap();
        for n in 2..=20_000u64 {
            let s = t.spf(n) as u64;
            assert_eq!(n % s, 0, "spf must divide n at {n}");
            assert!(t.is_prime(s), "spf must be prime at {n}");
            assert!(s * s <= n || s == n, "spf bound fails at {n}");
        }
    }

    #[test]
    fn factorize_examples() {
        let t = build_factor_table(100).unwrap();
        let f = t.factorize(12).unwrap();
        assert_eq!(f.factors, vec![(2, 2), (3, 1)]);
        assert_eq!(f.big_omega, 3);
        assert_eq!(f.small_omega, 2);
        let one = t.factorize(1).unwrap();
        assert!(one.factors.is_empty());
        assert_eq!(one.big_omega, 0);
        let p = t.factorize(97).unwrap();
        assert_eq!(p.factors, vec![(97, 1)]);
        assert_eq!(p.big_omega, 1);
        assert!(t.factorize(0).is_err());
        assert!(t.factorize(101).is_err());
    }

    #[test]
    fn alpha_position_examples() {
        let t = build_factor_table(100).unwrap();
        let half = Alpha::rational(1, 2).unwrap();
        assert_eq!(t.alpha_position_prime(12, &half).unwrap(), 2);
        assert_eq!(t.alpha_position_prime(18, &half).unwrap(), 3);
        let nine_tenths = Alpha::rational(9, 10).unwrap();
        assert_eq!(t.alpha_position_prime(12, &nine_tenths).unwrap(), 3);
        for a in [0.1, 0.33, 0.5, 0.77, 0.99] {
            let alpha = Alpha::real(a).unwrap();
            assert_eq!(t.alpha_position_prime(1, &alpha).unwrap(), 1);
            for p in [2u64, 53, 97] {
                assert_eq!(t.alpha_position_prime(p, &alpha).unwrap(), p);
            }
        }
    }

    #[test]
    fn relative_position_examples() {
        let t = build_factor_table(100).unwrap();
        assert_eq!(t.relative_position(12, 2).unwrap(), Rational64::new(2, 3));
        assert_eq!(t.relative_position(12, 3).unwrap(), Rational64::new(1, 1));
        assert!(t.relative_position(12, 5).is_err());
        assert!(t.relative_position(12, 4).is_err());
    }

    #[test]
    fn primes_listing_and_cache() {
        let t = build_factor_table(1000).unwrap();
        let ps = t.primes();
        assert_eq!(ps.len(), 168);
        assert_eq!(ps[0], 2);
        assert_eq!(*ps.last().unwrap(), 997);
        let shared = primes_up_to(1000);
        assert_eq!(primes_slice(&shared, 1000), ps);
    }
}

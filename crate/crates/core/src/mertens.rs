//! Dissected Mertens sums S(y,k), rough-number counts Phi_k(x,y), and the
//! asymptotic main terms they are compared against.
//!
//! S(y,k) is the k-th coefficient of prod_{p <= y} (1 - z/p)^{-1}; the table
//! builds it by multiplying one geometric series per prime with the in-place
//! recurrence c_k += c_{k-1}/p, compensated per coefficient. A rational mode
//! produces the same coefficients exactly for small y.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::sieve::{primes_slice, primes_up_to, scan_segments, FactorTable};
use crate::special::{gamma, ln_factorial, EULER_GAMMA};

/// Reciprocal sums of y-smooth numbers split by number of prime factors.
#[derive(Debug, Clone)]
pub struct DissectTable {
    pub y: u64,
    /// s[k] = sum over y-smooth A with Omega(A) = k of 1/A, k = 0..=K.
    pub s: Vec<f64>,
}

/// Exact coefficients: s[k] = sum_{P+(A) <= y, Omega(A) = k} 1/A.
pub fn dissect_exact(y: u64, k_max: usize) -> Result<DissectTable> {
    if y < 2 {
        return Err(Error::Domain(format!("smoothness bound must be >= 2, got {y}")));
    }
    let primes = primes_up_to(y);
    let mut coeff = vec![0.0f64; k_max + 1];
    let mut comp = vec![0.0f64; k_max + 1];
    coeff[0] = 1.0;
    for &p in primes_slice(&primes, y) {
        let inv = 1.0 / p as f64;
        for k in 1..=k_max {
            // Kahan step of coeff[k] += coeff[k-1] * inv; coeff[k-1] already
            // carries this prime's update, which is what the geometric-series
            // multiplication wants.
            let add = coeff[k - 1] * inv - comp[k];
            let t = coeff[k] + add;
            comp[k] = (t - coeff[k]) - add;
            coeff[k] = t;
        }
    }
    Ok(DissectTable { y, s: coeff })
}

/// Exact-rational variant, for oracle tests at small y.
pub fn dissect_exact_rational(y: u64, k_max: usize) -> Result<Vec<BigRational>> {
    if y < 2 {
        return Err(Error::Domain(format!("smoothness bound must be >= 2, got {y}")));
    }
    if y > 1000 || k_max > 64 {
        return Err(Error::Resource(
            "rational dissection is sized for y <= 1000, K <= 64".into(),
        ));
    }
    let primes = primes_up_to(y);
    let mut coeff = vec![BigRational::zero(); k_max + 1];
    coeff[0] = BigRational::one();
    for &p in primes_slice(&primes, y) {
        let inv = BigRational::new(BigInt::one(), BigInt::from(p));
        for k in 1..=k_max {
            let add = &coeff[k - 1] * &inv;
            coeff[k] += add;
        }
    }
    Ok(coeff)
}

/// prod_{p <= y} (1 - z/p)^{-1}, the generating function the dissection
/// coefficients come from. Needs z < 2.
pub fn generating_product(y: u64, z: f64) -> Result<f64> {
    if y < 2 {
        return Err(Error::Domain(format!("smoothness bound must be >= 2, got {y}")));
    }
    if z >= 2.0 {
        return Err(Error::Domain(format!(
            "generating product needs z < 2 (pole at p = 2), got {z}"
        )));
    }
    let primes = primes_up_to(y);
    let mut log = KahanSum::new();
    for &p in primes_slice(&primes, y) {
        log.add(-(-z / p as f64).ln_1p());
    }
    Ok(log.value().exp())
}

/// Lichtman main term eta(r) (log_2 y)^k / k! with r = k / log_2 y,
/// valid below the r = 2 pole.
pub fn lichtman_term(y: u64, k: u64) -> Result<f64> {
    let ll = check_loglog(y)?;
    let r = k as f64 / ll;
    if r >= 2.0 {
        return Err(Error::Regime(format!(
            "k/log_2 y = {r:.4} >= 2: beyond the pole, use extended_term"
        )));
    }
    let eta = crate::constants::eta(r, 1e-6 * (1.0 + 1.0 / (2.0 - r)))?;
    Ok(eta.value * (k as f64 * ll.ln() - ln_factorial(k)).exp())
}

/// Large-k main term eta_o(2) log^2 y / 2^k.
pub fn extended_term(y: u64, k: u64) -> Result<f64> {
    check_loglog(y)?;
    let ln_y = (y as f64).ln();
    Ok(crate::constants::eta_o_two().value * ln_y * ln_y * (-(k as f64) * 2f64.ln()).exp())
}

/// Range labels for one (y, k) evaluation against the two asymptotic
/// descriptions. `epsilon` is the fixed slack used for the window edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DissectRangeFlags {
    /// k <= (2 - eps) log_2 y: the small-k main term applies.
    pub lichtman_in_range: bool,
    /// (2 + sqrt(5 eps)) log_2 y <= k <= (log y)^{1/2 - eps}: the proven
    /// large-k window.
    pub extended_in_range: bool,
    /// k > 2 log_2 y and k <= (log y)^{1/2 - eps}: the widened window from
    /// the epsilon_y refinement.
    pub extended_relaxed_in_range: bool,
}

pub const RANGE_EPSILON: f64 = 0.05;

pub fn dissect_range_flags(y: u64, k: u64) -> Result<DissectRangeFlags> {
    let ll = check_loglog(y)?;
    let k = k as f64;
    let upper = (y as f64).ln().powf(0.5 - RANGE_EPSILON);
    Ok(DissectRangeFlags {
        lichtman_in_range: k <= (2.0 - RANGE_EPSILON) * ll,
        extended_in_range: k >= (2.0 + (5.0 * RANGE_EPSILON).sqrt()) * ll && k <= upper,
        extended_relaxed_in_range: k > 2.0 * ll && k <= upper,
    })
}

/// Rankin-style upper bound 4 J log^2 y / 2^J on S(y, J).
pub fn rankin_bound(y: u64, j: u64) -> Result<f64> {
    if y < 3 {
        return Err(Error::Domain(format!("Rankin bound needs y >= 3, got {y}")));
    }
    if j < 1 {
        return Err(Error::Domain("Rankin bound needs J >= 1".into()));
    }
    let ln_y = (y as f64).ln();
    Ok(4.0 * j as f64 * ln_y * ln_y * (-(j as f64) * 2f64.ln()).exp())
}

/// Closed form for sum_{k > K} rankin_bound(y,k) z^k, used to bound the
/// truncated generating-function identity. Needs z < 2.
pub fn dissect_tail_bound(y: u64, k_from_exclusive: usize, z: f64) -> Result<f64> {
    if z >= 2.0 || z < 0.0 {
        return Err(Error::Domain(format!("tail bound needs 0 <= z < 2, got {z}")));
    }
    let ln_y = (y as f64).ln();
    let t = z / 2.0;
    let m = (k_from_exclusive + 1) as f64;
    // sum_{k >= m} k t^k = t^m (m - (m-1) t) / (1-t)^2
    let geom = t.powf(m) * (m - (m - 1.0) * t) / ((1.0 - t) * (1.0 - t));
    Ok(4.0 * ln_y * ln_y * geom)
}

/// Counts Phi_k(x, y) of n <= x with least prime factor >= y and
/// Omega(n) = k, for every k at once. Index k of the result; n = 1 counts
/// toward k = 0.
pub fn phi_k_all(table: &FactorTable, x: u64, y: u64) -> Result<Vec<u64>> {
    check_scan_args(table, x, y)?;
    const K_SLOTS: usize = 64;
    let mut counts = scan_segments(x)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut acc = vec![0u64; K_SLOTS];
            for n in lo..=hi {
                if table.spf(n) as u64 >= y {
                    acc[table.big_omega_of(n) as usize] += 1;
                }
            }
            acc
        })
        .reduce(
            || vec![0u64; K_SLOTS],
            |mut a, b| {
                for (ai, bi) in a.iter_mut().zip(b) {
                    *ai += bi;
                }
                a
            },
        );
    counts[0] += 1; // n = 1: P^-(1) = infinity, Omega = 0
    Ok(counts)
}

/// Single Phi_k(x, y) value.
pub fn phi_k_exact(table: &FactorTable, x: u64, y: u64, k: usize) -> Result<u64> {
    let all = phi_k_all(table, x, y)?;
    Ok(all.get(k).copied().unwrap_or(0))
}

/// Directly sieved count of n <= x with least prime factor >= y (n = 1
/// included); the independent side of the Phi_k partition identity.
pub fn rough_count(table: &FactorTable, x: u64, y: u64) -> Result<u64> {
    check_scan_args(table, x, y)?;
    let roughs: u64 = scan_segments(x)
        .into_par_iter()
        .map(|(lo, hi)| (lo..=hi).filter(|&n| table.spf(n) as u64 >= y).count() as u64)
        .sum();
    Ok(roughs + 1)
}

/// Which of Alladi's two asymptotic descriptions of Phi_k to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlladiRegime {
    /// exp((log_2 x)^3) <= y <= sqrt(x): main term through xi = k/(log u - gamma).
    LargeY,
    /// 3 <= y <= exp((log x)^{2/5}): main term through g(y, mu).
    SmallY,
}

#[derive(Debug, Clone)]
pub struct AlladiEval {
    pub value: f64,
    /// Whether (x, y) sits inside the stated window of the chosen regime.
    pub in_window: bool,
}

/// Main-term value for Phi_k(x, y) in the requested regime. Out-of-window
/// parameters evaluate anyway and are flagged, not rejected.
pub fn alladi_term(x: u64, y: u64, k: u64, regime: AlladiRegime) -> Result<AlladiEval> {
    if k == 0 {
        return Err(Error::Domain("Alladi main terms need k >= 1 ((k-1)! appears)".into()));
    }
    if y < 3 || x < 16 || y >= x {
        return Err(Error::Domain(format!("need 3 <= y < x and x >= 16, got x={x}, y={y}")));
    }
    let xf = x as f64;
    let ln_x = xf.ln();
    let ll_x = ln_x.ln();
    match regime {
        AlladiRegime::LargeY => {
            let u = ln_x / (y as f64).ln();
            let log_u = u.ln();
            if log_u <= EULER_GAMMA {
                return Err(Error::Regime(format!(
                    "log u = {log_u:.4} <= gamma: xi undefined this close to y = x"
                )));
            }
            let xi = k as f64 / (log_u - EULER_GAMMA);
            let main = xf * (-EULER_GAMMA * xi).exp() / (ln_x * gamma(1.0 + xi))
                * ((k as f64 - 1.0) * log_u.ln() - ln_factorial(k - 1)).exp();
            let in_window = (y as f64) >= (ll_x * ll_x * ll_x).exp() && y * y <= x;
            Ok(AlladiEval {
                value: main,
                in_window,
            })
        }
        AlladiRegime::SmallY => {
            let mu = (k as f64 - 1.0) / ll_x;
            if mu >= 2.0 {
                return Err(Error::Regime(format!(
                    "mu = (k-1)/log_2 x = {mu:.4} >= 2: beyond the small-y description"
                )));
            }
            let g = crate::constants::g_factor(y, mu, 1e-7)?;
            let main = xf * g.value / (ln_x * gamma(1.0 + mu))
                * ((k as f64 - 1.0) * ll_x.ln() - ln_factorial(k - 1)).exp();
            let in_window = (y as f64) <= ln_x.powf(0.4).exp() && (k as f64) <= 2.0 * ll_x;
            Ok(AlladiEval {
                value: main,
                in_window,
            })
        }
    }
}

fn check_loglog(y: u64) -> Result<f64> {
    if y < 16 {
        return Err(Error::Domain(format!(
            "asymptotic terms need y >= 16 so that log_2 y > 0, got {y}"
        )));
    }
    Ok((y as f64).ln().ln())
}

fn check_scan_args(table: &FactorTable, x: u64, y: u64) -> Result<()> {
    if x > table.limit() {
        return Err(Error::Resource(format!(
            "x = {x} exceeds the factor table limit {}",
            table.limit()
        )));
    }
    if x < 1 {
        return Err(Error::Domain("x must be >= 1".into()));
    }
    if y < 2 {
        return Err(Error::Domain(format!("roughness bound must be >= 2, got {y}")));
    }
    Ok(())
}

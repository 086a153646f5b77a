//! Closed-form constants: Euler products with rigorous truncation tails,
//! fractional-power averages, theorem constants, exponent branches, and the
//! phase-transition point.
//!
//! Every product is evaluated in log space over the shared ascending prime
//! list. Truncation beyond the cutoff P0 is bounded through a second-order
//! expansion of each log factor and sum_{p > P0} p^-2 < 1/(P0 - 1); the
//! cutoff is grown until the reported absolute error meets the requested
//! tolerance. Rounding is tracked as a small compensated-summation estimate
//! on top of the rigorous truncation bound.

use std::sync::OnceLock;

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::sieve::{primes_slice, primes_up_to};
use crate::special::{gamma, EULER_GAMMA};

/// Default absolute tolerance for named constants.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Hard cap on product cutoffs; past this the truncation bound is reported
/// as-is rather than refined further.
const P0_CAP: f64 = 3.2e8;

/// A numeric constant with a rigorous truncation bound.
#[derive(Debug, Clone)]
pub struct ConstantValue {
    pub value: f64,
    /// Bound on truncation plus estimated rounding.
    pub abs_error: f64,
    /// Human-readable description of the cutoff used.
    pub truncation: String,
}

impl ConstantValue {
    fn exact(value: f64) -> Self {
        ConstantValue {
            value,
            abs_error: 1e-15 * value.abs(),
            truncation: "closed form, rounding only".into(),
        }
    }
}

struct LogProduct {
    log: f64,
    abs_sum: f64,
    tail_log: f64,
    p0: u64,
}

impl LogProduct {
    /// Turn the truncated log-sum into a value with error bound, after
    /// multiplying by an exactly-known prefactor.
    fn finish(&self, prefactor: f64, extra_log: f64) -> ConstantValue {
        let value = prefactor * (self.log + extra_log).exp();
        let rounding_log = 5e-16 * (self.abs_sum + extra_log.abs()) + 1e-15;
        let abs_error = value.abs() * (self.tail_log + rounding_log).exp_m1();
        ConstantValue {
            value,
            abs_error,
            truncation: format!(
                "Euler product over p <= {}; log-tail <= {:.3e} via sum p^-2 < 1/(P0-1)",
                self.p0, self.tail_log
            ),
        }
    }
}

fn initial_p0(tail_coeff: f64, tol: f64, floor: f64) -> f64 {
    (2.0 * tail_coeff / tol.max(1e-14))
        .max(floor)
        .max(64.0)
        .min(P0_CAP)
}

/// log of prod_{lo <= p <= p0} (1 - 1/p)^z (1 - z/p)^{-1}, with |log factor|
/// bounded by (z^2 + |z|)/p^2 beyond p >= 2(|z| + 1).
fn eta_log_part(z: f64, lo: u64, p0: u64) -> LogProduct {
    let primes = primes_up_to(p0);
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    for &p in primes_slice(&primes, p0) {
        let p = p as f64;
        if (p as u64) < lo {
            continue;
        }
        let term = z * (-1.0 / p).ln_1p() - (-z / p).ln_1p();
        sum.add(term);
        abs_sum += term.abs();
    }
    let coeff = z * z + z.abs();
    LogProduct {
        log: sum.value(),
        abs_sum,
        tail_log: coeff / (p0 as f64 - 1.0),
        p0,
    }
}

/// The product prod_{2 < q} (1 + 1/(q(q-2))) shared by C, C_bar, C_under and
/// C_alpha. Cached at one fixed cutoff so every consumer sees identical bits
/// and the exact relations between those constants survive truncation.
fn odd_quadratic_shared() -> &'static LogProduct {
    static CELL: OnceLock<LogProduct> = OnceLock::new();
    CELL.get_or_init(|| odd_quadratic_log_part(80_000_000))
}

/// log of prod_{2 < q <= p0} (1 + 1/(q(q-2))); log factor <= 2/q^2 for q >= 4.
fn odd_quadratic_log_part(p0: u64) -> LogProduct {
    let primes = primes_up_to(p0);
    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    for &p in primes_slice(&primes, p0) {
        if p <= 2 {
            continue;
        }
        let q = p as f64;
        let term = (1.0 / (q * (q - 2.0))).ln_1p();
        sum.add(term);
        abs_sum += term;
    }
    LogProduct {
        log: sum.value(),
        abs_sum,
        tail_log: 2.0 / (p0 as f64 - 1.0),
        p0,
    }
}

/// prefactor times the shared odd quadratic product, refined past the cached
/// cutoff only when the requested tolerance demands it.
fn odd_shared_value(prefactor: f64, tol: f64) -> ConstantValue {
    let shared = odd_quadratic_shared();
    let cv = shared.finish(prefactor, 0.0);
    if cv.abs_error <= tol {
        return cv;
    }
    refine(
        tol,
        initial_p0(2.0, tol, shared.p0 as f64 * 4.0),
        |p0| odd_quadratic_log_part(p0).finish(prefactor, 0.0),
    )
}

/// Run `make` with growing cutoffs until the result is within `tol`.
fn refine<F: Fn(u64) -> ConstantValue>(tol: f64, start_p0: f64, make: F) -> ConstantValue {
    let mut p0 = start_p0;
    loop {
        let out = make(p0 as u64);
        if out.abs_error <= tol || p0 >= P0_CAP {
            return out;
        }
        p0 = (p0 * 4.0).min(P0_CAP);
    }
}

/// eta(z) = e^{gamma z} prod_p (1 - 1/p)^z (1 - z/p)^{-1}, z < 2.
pub fn eta(z: f64, tol: f64) -> Result<ConstantValue> {
    check_tol(tol)?;
    if z >= 2.0 {
        return Err(Error::Domain(format!("eta has a pole at z = 2 (got z = {z})")));
    }
    let coeff = z * z + z.abs();
    let p0 = initial_p0(coeff, tol, 2.0 * (z.abs() + 1.0));
    Ok(refine(tol, p0, |p0| {
        eta_log_part(z, 2, p0).finish(1.0, EULER_GAMMA * z)
    }))
}

/// eta_o(z) = e^{gamma z} 2^{-z} prod_{p > 2} (1 - 1/p)^z (1 - z/p)^{-1},
/// z < 3; satisfies eta_o(z) = (1 - z/2) eta(z) away from z = 2.
pub fn eta_o(z: f64, tol: f64) -> Result<ConstantValue> {
    check_tol(tol)?;
    if z >= 3.0 {
        return Err(Error::Domain(format!(
            "eta_o has a pole at z = 3 (got z = {z})"
        )));
    }
    let coeff = z * z + z.abs();
    let p0 = initial_p0(coeff, tol, 2.0 * (z.abs() + 1.0));
    Ok(refine(tol, p0, |p0| {
        eta_log_part(z, 3, p0).finish(1.0, EULER_GAMMA * z - z * 2f64.ln())
    }))
}

/// Cached eta_o(2) = 1.201303..., shared by the extended dissection term.
/// At z = 2 the factors collapse to e^{2 gamma}/4 * prod_{p>2}(1 + 1/(p(p-2))),
/// the same product behind C, so the cached cutoff is reused.
pub fn eta_o_two() -> &'static ConstantValue {
    static CELL: OnceLock<ConstantValue> = OnceLock::new();
    CELL.get_or_init(|| odd_shared_value((2.0 * EULER_GAMMA).exp() / 4.0, DEFAULT_TOL))
}

/// g(y, mu) = prod_{p < y} (1 - 1/p)^mu * prod_{p >= y} (1 - 1/p)^mu (1 - mu/p)^{-1}.
pub fn g_factor(y: u64, mu: f64, tol: f64) -> Result<ConstantValue> {
    check_tol(tol)?;
    if y < 2 {
        return Err(Error::Domain(format!("g(y, mu) needs y >= 2, got {y}")));
    }
    if !(0.0..2.0).contains(&mu) {
        return Err(Error::Domain(format!("g(y, mu) needs 0 <= mu < 2, got {mu}")));
    }
    let coeff = mu * mu + mu;
    let p0_start = initial_p0(coeff, tol, 2.0 * (mu + 1.0)).max(y as f64);
    Ok(refine(tol, p0_start, |p0| {
        let primes = primes_up_to(p0);
        let mut sum = KahanSum::new();
        let mut abs_sum = 0.0;
        for &p in primes_slice(&primes, p0) {
            let pf = p as f64;
            let term = if (p as u64) < y {
                mu * (-1.0 / pf).ln_1p()
            } else {
                mu * (-1.0 / pf).ln_1p() - (-mu / pf).ln_1p()
            };
            sum.add(term);
            abs_sum += term.abs();
        }
        LogProduct {
            log: sum.value(),
            abs_sum,
            tail_log: coeff / (p0 as f64 - 1.0),
            p0,
        }
        .finish(1.0, 0.0)
    }))
}

/// Evaluation mode for the fractional-power average rho_{c,alpha}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RhoMode {
    /// Closed form (c-1)/(b (c^{1/b} - 1)) for 1 - alpha = a/b.
    Rational,
    /// Equidistribution closed form (c-1)/log c.
    Irrational,
    /// Direct Cesaro average over N terms; error bar is empirical.
    Direct(u64),
}

/// Long-run average of c^{(n(1-alpha)) mod 1}.
pub fn rho(c: f64, alpha: &Alpha, mode: RhoMode) -> Result<ConstantValue> {
    if c <= 0.0 {
        return Err(Error::Domain(format!("rho needs c > 0, got {c}")));
    }
    match mode {
        RhoMode::Rational => {
            let (_, b) = alpha.one_minus_fraction().ok_or_else(|| {
                Error::Usage("rho rational mode needs an exact rational alpha".into())
            })?;
            if c == 1.0 {
                return Ok(ConstantValue::exact(1.0));
            }
            let b = b as f64;
            Ok(ConstantValue::exact(
                (c - 1.0) / (b * (c.powf(1.0 / b) - 1.0)),
            ))
        }
        RhoMode::Irrational => {
            if c == 1.0 {
                return Ok(ConstantValue::exact(1.0));
            }
            Ok(ConstantValue::exact((c - 1.0) / c.ln()))
        }
        RhoMode::Direct(n_terms) => {
            if n_terms < 10 {
                return Err(Error::Usage("direct rho average needs N >= 10".into()));
            }
            let mut sum = KahanSum::new();
            let window_start = n_terms - n_terms / 10;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for n in 1..=n_terms {
                sum.add(c.powf(alpha.frac_one_minus_times(n)));
                if n >= window_start {
                    let mean = sum.value() / n as f64;
                    lo = lo.min(mean);
                    hi = hi.max(mean);
                }
            }
            let value = sum.value() / n_terms as f64;
            Ok(ConstantValue {
                value,
                abs_error: (hi - lo).max(1e-15 * value.abs()),
                truncation: format!(
                    "Cesaro average over N = {n_terms}; error bar is the observed \
                     oscillation over the last N/10 terms (empirical, not rigorous)"
                ),
            })
        }
    }
}

/// Automatic rho mode for an Alpha: exact rationals use the rational closed
/// form, reals the equidistribution one.
pub fn rho_auto(c: f64, alpha: &Alpha) -> Result<ConstantValue> {
    match alpha {
        Alpha::Rational { .. } => rho(c, alpha, RhoMode::Rational),
        Alpha::Real(_) => rho(c, alpha, RhoMode::Irrational),
    }
}

/// The golden ratio and its reciprocal.
pub const PHI: f64 = 1.618_033_988_749_894_8;
pub const PHI_PRIME: f64 = 0.618_033_988_749_894_9;

/// The named theorem constants.
#[derive(Debug, Clone)]
pub struct TheoremConstants {
    /// Small-beta constant for the middle prime factor, 1.523555...
    pub c: ConstantValue,
    /// Odd-Omega share, 0.507851...
    pub c_bar: ConstantValue,
    /// Even-Omega share (= 2 c_bar), 1.015703...
    pub c_under: ConstantValue,
    /// Geometric-mean growth constant, 1.313314...
    pub a: ConstantValue,
}

pub fn theorem_constants() -> TheoremConstants {
    theorem_constants_with_tol(DEFAULT_TOL)
}

pub fn theorem_constants_with_tol(tol: f64) -> TheoremConstants {
    let pi = std::f64::consts::PI;
    let base = (1.5 * EULER_GAMMA).exp() / (4.0 * pi.sqrt());
    let c = odd_shared_value(3.0 * base, tol);
    let c_bar = odd_shared_value(base, tol);
    let c_under = odd_shared_value(2.0 * base, tol);

    let coeff = PHI_PRIME * PHI_PRIME + PHI_PRIME;
    let a = refine(tol, initial_p0(coeff, tol, 4.0), |p0| {
        let part = eta_log_part(PHI_PRIME, 2, p0);
        let prefactor = (-EULER_GAMMA).exp() * (PHI + 1.0) / (gamma(1.0 + PHI) * 5f64.sqrt());
        part.finish(prefactor, 0.0)
    });

    TheoremConstants {
        c,
        c_bar,
        c_under,
        a,
    }
}

/// C_beta from the large-beta branch of the middle-prime theorem.
pub fn c_beta(beta: f64) -> Result<ConstantValue> {
    c_beta_with_tol(beta, DEFAULT_TOL)
}

pub fn c_beta_with_tol(beta: f64, tol: f64) -> Result<ConstantValue> {
    check_beta(beta)?;
    let z = ((1.0 - beta) / beta).sqrt();
    if z >= 2.0 {
        return Err(Error::Domain(format!(
            "C_beta product hits its pole for beta <= 1/5 (beta = {beta})"
        )));
    }
    let pi = std::f64::consts::PI;
    let prefactor = (EULER_GAMMA * (1.0 - 2.0 * beta) / (beta * (1.0 - beta)).sqrt()).exp()
        / gamma(1.0 + (beta / (1.0 - beta)).sqrt())
        * (beta.sqrt() + (1.0 - beta).sqrt())
        / (2.0 * pi.sqrt() * beta.powf(0.25) * (1.0 - beta).powf(0.75));
    let coeff = z * z + z;
    Ok(refine(tol, initial_p0(coeff, tol, 2.0 * (z + 1.0)), |p0| {
        eta_log_part(z, 2, p0).finish(prefactor, 0.0)
    }))
}

/// Parity split of C_beta: (odd-Omega share, even-Omega share), with
/// C_under_beta = C_bar_beta * sqrt((1-beta)/beta).
pub fn c_beta_parity(beta: f64) -> Result<(ConstantValue, ConstantValue)> {
    c_beta_parity_with_tol(beta, DEFAULT_TOL)
}

pub fn c_beta_parity_with_tol(beta: f64, tol: f64) -> Result<(ConstantValue, ConstantValue)> {
    check_beta(beta)?;
    let z = ((1.0 - beta) / beta).sqrt();
    if z >= 2.0 {
        return Err(Error::Domain(format!(
            "parity constants hit their pole for beta <= 1/5 (beta = {beta})"
        )));
    }
    let pi = std::f64::consts::PI;
    let prefactor = (EULER_GAMMA * (1.0 - 2.0 * beta) / (beta * (1.0 - beta)).sqrt()).exp()
        / gamma(1.0 + (beta / (1.0 - beta)).sqrt())
        * beta.powf(0.25)
        / (2.0 * pi.sqrt() * (1.0 - beta).powf(0.75));
    let coeff = z * z + z;
    let bar = refine(tol, initial_p0(coeff, tol, 2.0 * (z + 1.0)), |p0| {
        eta_log_part(z, 2, p0).finish(prefactor, 0.0)
    });
    let under = ConstantValue {
        value: bar.value * z,
        abs_error: bar.abs_error * z + 1e-15 * bar.value * z,
        truncation: bar.truncation.clone(),
    };
    Ok((bar, under))
}

/// C_{beta,alpha} from the general large-beta branch. Requires
/// beta > beta_alpha (the product exponent chi^{alpha-1} must stay below 2).
pub fn c_beta_alpha(beta: f64, alpha: &Alpha) -> Result<ConstantValue> {
    c_beta_alpha_with_tol(beta, alpha, DEFAULT_TOL)
}

pub fn c_beta_alpha_with_tol(beta: f64, alpha: &Alpha, tol: f64) -> Result<ConstantValue> {
    check_beta(beta)?;
    let a = alpha.value();
    let chi = (1.0 - a) * beta / ((1.0 - beta) * a);
    let z = chi.powf(a - 1.0);
    if z >= 2.0 {
        return Err(Error::Domain(format!(
            "C_(beta,alpha) product hits its pole for beta <= beta_alpha \
             (beta = {beta}, alpha = {a}, chi^(alpha-1) = {z:.6})"
        )));
    }
    let chi_a = chi.powf(a);
    let rho_chi = rho_auto(chi, alpha)?;
    let pi = std::f64::consts::PI;
    let prefactor = (EULER_GAMMA * (z - chi_a)).exp() / gamma(1.0 + chi_a)
        * chi.powf(1.5 * a - 1.0)
        * rho_chi.value
        / (2.0 * pi * a * (1.0 - beta)).sqrt();
    let coeff = z * z + z.abs();
    Ok(refine(tol, initial_p0(coeff, tol, 2.0 * (z.abs() + 1.0)), |p0| {
        eta_log_part(z, 2, p0).finish(prefactor, 0.0)
    }))
}

/// C_alpha from the general small-beta branch.
pub fn c_alpha(alpha: &Alpha) -> Result<ConstantValue> {
    c_alpha_with_tol(alpha, DEFAULT_TOL)
}

pub fn c_alpha_with_tol(alpha: &Alpha, tol: f64) -> Result<ConstantValue> {
    let a = alpha.value();
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!("alpha must lie in (0,1), got {a}")));
    }
    let nu = 2f64.powf(-1.0 / (1.0 - a));
    let nu_a = nu.powf(a);
    let rho_nu = rho_auto(nu, alpha)?;
    let prefactor = nu_a * rho_nu.value * (EULER_GAMMA * (2.0 - nu_a)).exp()
        / (2.0 * (1.0 - a) * gamma(1.0 + nu_a));
    Ok(odd_shared_value(prefactor, tol))
}

/// Phase-transition point beta_alpha = 1/(1 + 2^{1/(1-alpha)} (1/alpha - 1)).
pub fn beta_alpha(alpha: f64) -> f64 {
    1.0 / (1.0 + 2f64.powf(1.0 / (1.0 - alpha)) * (1.0 / alpha - 1.0))
}

/// The two exponent branches of the main terms.
#[derive(Debug, Clone, Copy)]
pub struct ExponentPair {
    /// 1 - (beta/alpha)^alpha ((1-beta)/(1-alpha))^(1-alpha), active above
    /// the transition.
    pub large_beta: f64,
    /// 1 - 2 beta - 2 nu (1 - beta), active below the transition.
    pub small_beta: f64,
    /// Whether beta sits above beta_alpha.
    pub large_active: bool,
}

/// Q_{alpha,beta} = (beta/alpha)^alpha ((1-beta)/(1-alpha))^(1-alpha).
pub fn q_exponent_factor(alpha: f64, beta: f64) -> f64 {
    (beta / alpha).powf(alpha) * ((1.0 - beta) / (1.0 - alpha)).powf(1.0 - alpha)
}

pub fn exponents(alpha: f64, beta: f64) -> ExponentPair {
    let nu = 2f64.powf(-1.0 / (1.0 - alpha));
    ExponentPair {
        large_beta: 1.0 - q_exponent_factor(alpha, beta),
        small_beta: 1.0 - 2.0 * beta - 2.0 * nu * (1.0 - beta),
        large_active: beta > beta_alpha(alpha),
    }
}

/// Closed-form maximum of beta + 2 sqrt(beta (1-beta)) - 1: the abscissa
/// B0 = 1/2 + 1/(2 sqrt 5) and the value (sqrt 5 - 1)/2.
pub fn golden_max() -> (f64, f64) {
    let s5 = 5f64.sqrt();
    (0.5 + 0.5 / s5, (s5 - 1.0) / 2.0)
}

/// Numeric maximum over beta of beta + Q_{alpha,beta} - 1, located by a
/// coarse grid scan followed by golden-section refinement to 1e-10.
pub fn b_alpha_max(alpha: f64) -> (f64, f64) {
    let f = |beta: f64| beta + q_exponent_factor(alpha, beta) - 1.0;
    let n = 400;
    let mut best_i = 1;
    let mut best = f64::NEG_INFINITY;
    for i in 1..n {
        let beta = i as f64 / n as f64;
        let v = f(beta);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let mut lo = (best_i as f64 - 1.0) / n as f64;
    let mut hi = (best_i as f64 + 1.0) / n as f64;
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > 1e-11 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let beta_star = 0.5 * (lo + hi);
    (beta_star, f(beta_star))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Usage(format!("tolerance must be positive, got {tol}")))
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("beta must lie in (0,1), got {beta}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_at_zero_is_one() {
        let v = eta(0.0, 1e-10).unwrap();
        assert_eq!(v.value, 1.0);
        assert!(v.abs_error <= 1e-10);
    }

    #[test]
    fn eta_rejects_pole() {
        assert!(eta(2.0, 1e-6).is_err());
        assert!(eta_o(3.0, 1e-6).is_err());
        assert!(eta_o(2.0, 1e-6).is_ok());
    }

    #[test]
    fn rho_closed_forms() {
        let half = Alpha::rational(1, 2).unwrap();
        let r = rho(4.0, &half, RhoMode::Rational).unwrap();
        assert!((r.value - 1.5).abs() < 1e-14);
        for mode in [RhoMode::Rational, RhoMode::Irrational, RhoMode::Direct(100)] {
            let one = rho(1.0, &half, mode).unwrap();
            assert!((one.value - 1.0).abs() < 1e-12);
        }
        let e = std::f64::consts::E;
        let r = rho(e, &half, RhoMode::Irrational).unwrap();
        assert!((r.value - (e - 1.0)).abs() < 1e-14);
        let real = Alpha::real(0.41).unwrap();
        assert!(rho(2.0, &real, RhoMode::Rational).is_err());
        assert!(rho(-1.0, &half, RhoMode::Rational).is_err());
    }

    #[test]
    fn beta_alpha_transition_points() {
        assert_eq!(beta_alpha(0.5), 0.2);
        for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let b = beta_alpha(a);
            assert!(b > 0.0 && b < a, "beta_alpha must sit below alpha");
        }
    }

    #[test]
    fn exponent_branches_at_half() {
        for beta in [0.1, 0.25, 0.4, 0.6, 0.85] {
            let pair = exponents(0.5, beta);
            let expect_large = 1.0 - 2.0 * (beta * (1.0 - beta)).sqrt();
            let expect_small = 0.5 - 1.5 * beta;
            assert!((pair.large_beta - expect_large).abs() < 1e-12);
            assert!((pair.small_beta - expect_small).abs() < 1e-12);
            assert_eq!(pair.large_active, beta > 0.2);
        }
    }

    #[test]
    fn nu_identity() {
        for a in [0.1, 0.25, 0.5, 0.61, 0.9] {
            let nu = 2f64.powf(-1.0 / (1.0 - a));
            assert!((nu.powf(a) - 2.0 * nu).abs() < 1e-15, "nu^alpha = 2 nu at {a}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(c_beta(0.15).is_err());
        assert!(c_beta(0.0).is_err());
        assert!(c_beta(1.0).is_err());
        let half = Alpha::rational(1, 2).unwrap();
        assert!(c_beta_alpha(0.1, &half).is_err());
        assert!(g_factor(10, 2.0, 1e-6).is_err());
        assert!(g_factor(1, 0.5, 1e-6).is_err());
        assert!(eta(0.5, 0.0).is_err());
    }

    #[test]
    fn golden_max_closed_form() {
        let (b0, expo) = golden_max();
        assert!((b0 - 0.723_606_797_749_979).abs() < 1e-15);
        assert!((expo - 0.618_033_988_749_894_9).abs() < 1e-15);
    }
}

/// Re-export for probes and the harness.
pub const EULER_GAMMA_REEXPORT: f64 = crate::special::EULER_GAMMA;

//! Truncated and twisted sums of the exponential series, evaluated directly
//! in log space, plus the closed-form bounds they are checked against.

use crate::alpha::Alpha;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::special::ln_factorial;

/// Largest W for which e^W stays inside f64 range with headroom.
const MAX_W: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailSide {
    Lower,
    Upper,
}

/// sum_{a <= k <= b} w^k / k!, inclusive integer bounds, each term from its
/// own log-space evaluation.
pub fn exp_window_sum(w: f64, a: u64, b: u64) -> f64 {
    if a > b {
        return 0.0;
    }
    let ln_w = w.ln();
    let mut sum = KahanSum::new();
    for k in a..=b {
        sum.add((k as f64 * ln_w - ln_factorial(k)).exp());
    }
    sum.value()
}

/// The exact truncated exponential sum below W - E or above W + E.
pub fn truncated_exp_tail(w: f64, e: f64, side: TailSide) -> Result<f64> {
    if !(w > 0.0 && w <= MAX_W) {
        return Err(Error::Domain(format!("W must lie in (0, {MAX_W}], got {w}")));
    }
    if !(e > 0.0 && e < w) {
        return Err(Error::Domain(format!("E must lie in (0, W), got {e}")));
    }
    match side {
        TailSide::Lower => Ok(exp_window_sum(w, 0, (w - e).floor() as u64)),
        TailSide::Upper => {
            let start = (w + e).ceil() as u64;
            let ln_w = w.ln();
            let mut term = (start as f64 * ln_w - ln_factorial(start)).exp();
            let mut sum = KahanSum::new();
            let mut k = start;
            loop {
                sum.add(term);
                k += 1;
                term *= w / k as f64;
                if term < sum.value() * 1e-19 || k > start + 100_000_000 {
                    break;
                }
            }
            Ok(sum.value())
        }
    }
}

/// The window-tail bound shape W^{1/2}/E * exp(W - E^2/(2W)); the direct
/// sums are checked against 10x this (the calibrated implicit constant).
pub fn window_tail_bound(w: f64, e: f64) -> f64 {
    w.sqrt() / e * (w - e * e / (2.0 * w)).exp()
}

/// R(theta) = theta - (theta + 1) log(theta + 1), the exponent rate in
/// Norton's truncated-series bounds.
pub fn norton_r(theta: f64) -> f64 {
    theta - (theta + 1.0) * theta.ln_1p()
}

/// Strict upper bound on sum_{k <= (1-theta)v} v^k/k!.
pub fn norton_lower_bound(v: f64, theta: f64) -> f64 {
    1.0 / (theta * (v * (1.0 - theta)).sqrt()) * ((norton_r(-theta) + 1.0) * v).exp()
}

/// Strict upper bound on sum_{k >= (1+theta)v} v^k/k!.
pub fn norton_upper_bound(v: f64, theta: f64) -> f64 {
    (1.0 + theta).sqrt() / (theta * (2.0 * std::f64::consts::PI * v).sqrt())
        * ((norton_r(theta) + 1.0) * v).exp()
}

/// sum_{V-E <= k <= V+E} (V^k/k!) c^{{(1-alpha) k}}.
pub fn twisted_exp_sum(v: f64, e: f64, alpha: &Alpha, c: f64) -> Result<f64> {
    check_twisted_args(v, e, c)?;
    let lo = (v - e).ceil().max(0.0) as u64;
    let hi = (v + e).floor() as u64;
    let ln_v = v.ln();
    let ln_c = c.ln();
    let mut sum = KahanSum::new();
    for k in lo..=hi {
        let twist = alpha.frac_one_minus_times(k) * ln_c;
        sum.add((k as f64 * ln_v - ln_factorial(k) + twist).exp());
    }
    Ok(sum.value())
}

/// sum over (V-E)/(1-alpha) <= k <= (V+E)/(1-alpha) of
/// V^{floor((1-alpha)k)} / floor((1-alpha)k)! * c^{{(1-alpha) k}}.
pub fn twisted_floor_sum(v: f64, e: f64, alpha: &Alpha, c: f64) -> Result<f64> {
    check_twisted_args(v, e, c)?;
    let one_minus = 1.0 - alpha.value();
    let lo = ((v - e) / one_minus).ceil().max(1.0) as u64;
    let hi = ((v + e) / one_minus).floor() as u64;
    let ln_v = v.ln();
    let ln_c = c.ln();
    let mut sum = KahanSum::new();
    for k in lo..=hi {
        let m = alpha.floor_one_minus_times(k);
        let twist = alpha.frac_one_minus_times(k) * ln_c;
        sum.add((m as f64 * ln_v - ln_factorial(m) + twist).exp());
    }
    Ok(sum.value())
}

fn check_twisted_args(v: f64, e: f64, c: f64) -> Result<()> {
    if !(v > 0.0 && v <= MAX_W) {
        return Err(Error::Domain(format!("V must lie in (0, {MAX_W}], got {v}")));
    }
    if !(e > 0.0 && e < v) {
        return Err(Error::Domain(format!("E must lie in (0, V), got {e}")));
    }
    if c <= 0.0 {
        return Err(Error::Domain(format!("twist base must be positive, got {c}")));
    }
    Ok(())
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A position parameter in (0,1).
///
/// Rational values keep their numerator/denominator so that indices
/// `ceil(alpha * omega)`, floors of `(1-alpha)*k` and fractional parts
/// `{(1-alpha)*k}` are computed in exact integer arithmetic. Real values
/// fall back to f64 and are documented as approximate at the boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha {
    /// num/den in lowest terms, 0 < num < den.
    Rational { num: u64, den: u64 },
    Real(f64),
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Alpha {
    pub fn rational(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 || num >= den {
            return Err(Error::Domain(format!(
                "alpha must satisfy 0 < {num}/{den} < 1"
            )));
        }
        let g = gcd(num, den);
        Ok(Alpha::Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn real(value: f64) -> Result<Self> {
        if !(value > 0.0 && value < 1.0) {
            return Err(Error::Domain(format!("alpha must lie in (0,1), got {value}")));
        }
        Ok(Alpha::Real(value))
    }

    pub fn value(&self) -> f64 {
        match *self {
            Alpha::Rational { num, den } => num as f64 / den as f64,
            Alpha::Real(v) => v,
        }
    }

    /// `1 - alpha` as a reduced fraction a/b, when alpha is rational.
    pub fn one_minus_fraction(&self) -> Option<(u64, u64)> {
        match *self {
            Alpha::Rational { num, den } => {
                let a = den - num;
                let g = gcd(a, den);
                Some((a / g, den / g))
            }
            Alpha::Real(_) => None,
        }
    }

    /// Index of the alpha-positioned factor: `ceil(alpha * omega)`, always in
    /// [1, omega] for omega >= 1.
    pub fn position_index(&self, omega: u32) -> u32 {
        debug_assert!(omega >= 1);
        match *self {
            Alpha::Rational { num, den } => {
                let t = num as u128 * omega as u128;
                t.div_ceil(den as u128) as u32
            }
            Alpha::Real(v) => {
                let idx = (v * omega as f64).ceil() as u32;
                idx.clamp(1, omega)
            }
        }
    }

    /// `floor((1-alpha) * k)`.
    pub fn floor_one_minus_times(&self, k: u64) -> u64 {
        match *self {
            Alpha::Rational { num, den } => {
                let a = den - num;
                (a as u128 * k as u128 / den as u128) as u64
            }
            Alpha::Real(v) => ((1.0 - v) * k as f64).floor() as u64,
        }
    }

    /// Fractional part `{(1-alpha) * k}`.
    pub fn frac_one_minus_times(&self, k: u64) -> f64 {
        match *self {
            Alpha::Rational { num, den } => {
                let a = den - num;
                let r = (a as u128 * k as u128 % den as u128) as u64;
                r as f64 / den as f64
            }
            Alpha::Real(v) => {
                let t = (1.0 - v) * k as f64;
                t - t.floor()
            }
        }
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alpha::Rational { num, den } => write!(f, "{num}/{den}"),
            Alpha::Real(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts `A/B` (exact) or a decimal in (0,1).
    fn from_str(s: &str) -> Result<Self> {
        if let Some((n, d)) = s.split_once('/') {
            let num: u64 = n
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad alpha numerator in {s:?}")))?;
            let den: u64 = d
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad alpha denominator in {s:?}")))?;
            Alpha::rational(num, den)
        } else {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad alpha value {s:?}")))?;
            Alpha::real(v)
        }
    }
}

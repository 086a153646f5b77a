//! Per-(x, p, alpha) theory context: the derived quantities the asymptotic
//! main terms are built from, regime selection around the phase transition,
//! and the main-term values themselves.

use crate::alpha::Alpha;
use crate::constants::{
    c_alpha, c_beta_alpha, c_beta_parity, exponents, theorem_constants, ConstantValue,
};
use crate::error::{Error, Result};
use crate::special::EULER_GAMMA;

/// Which asymptotic branch covers a (x, p, alpha) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    LargeBeta,
    SmallBeta,
    /// Inside the transition band around beta_alpha: both branches are
    /// reported, neither is asserted on.
    NearTransition,
    /// Outside every theorem hypothesis (beta <= 0, beta too close to 1,
    /// p below the double-log threshold, or p >= x).
    OutOfTheory,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::LargeBeta => "large_beta",
            Regime::SmallBeta => "small_beta",
            Regime::NearTransition => "near_transition",
            Regime::OutOfTheory => "out_of_theory",
        }
    }
}

/// Default half-width of the near-transition band around beta_alpha.
pub const DEFAULT_TRANSITION_BAND: f64 = 0.03;

/// Primes below this have log_2 p <= 0 and sit outside every hypothesis.
pub const MIN_THEORY_PRIME: u64 = 17;

/// Upper cap on beta: the theorems need beta < 1 - eps, and the paper keeps
/// the beta -> 1 range open.
pub const BETA_CAP: f64 = 0.9;

/// All derived quantities for one (x, p, alpha) triple.
#[derive(Debug, Clone)]
pub struct TheoryContext {
    pub x: u64,
    pub p: u64,
    pub alpha: Alpha,
    /// log_2 p / log_2 x (iterated natural logs).
    pub beta: f64,
    /// (1-alpha) beta / ((1-beta) alpha).
    pub chi: f64,
    /// 2^{-1/(1-alpha)}.
    pub nu: f64,
    /// Phase-transition point for this alpha.
    pub beta_alpha: f64,
    /// log x / log p.
    pub u: f64,
    /// Saddle center Q_{alpha,beta} log_2 x of the large-beta sum.
    pub w: f64,
    /// Saddle value of k/(log u - gamma) entering the rough-count term.
    pub xi: f64,
    /// Saddle value nu^alpha of (k-1)/log_2 x in the small-y description.
    pub mu: f64,
    pub regime: Regime,
}

impl TheoryContext {
    pub fn new(x: u64, p: u64, alpha: &Alpha, transition_band: f64) -> Result<Self> {
        if x < 16 {
            return Err(Error::Domain(format!("theory context needs x >= 16, got {x}")));
        }
        if p < 2 {
            return Err(Error::Domain(format!("p must be prime-like (>= 2), got {p}")));
        }
        let a = alpha.value();
        let llx = (x as f64).ln().ln();
        let llp = (p as f64).ln().ln();
        let beta = llp / llx;
        let nu = 2f64.powf(-1.0 / (1.0 - a));
        let beta_alpha = crate::constants::beta_alpha(a);
        let chi = (1.0 - a) * beta / ((1.0 - beta) * a);
        let u = (x as f64).ln() / (p as f64).ln();
        let q = crate::constants::q_exponent_factor(a, beta);
        let w = q * llx;
        let log_u = u.ln();
        let xi = if log_u > EULER_GAMMA {
            (1.0 - a) * w / (log_u - EULER_GAMMA)
        } else {
            f64::NAN
        };
        let mu = nu.powf(a);

        let regime = if p < MIN_THEORY_PRIME || p >= x || beta <= 0.0 || beta >= BETA_CAP {
            Regime::OutOfTheory
        } else if (beta - beta_alpha).abs() <= transition_band {
            Regime::NearTransition
        } else if beta > beta_alpha {
            Regime::LargeBeta
        } else {
            Regime::SmallBeta
        };

        Ok(TheoryContext {
            x,
            p,
            alpha: *alpha,
            beta,
            chi,
            nu,
            beta_alpha,
            u,
            w,
            xi,
            mu,
            regime,
        })
    }
}

/// Evaluated main term(s) for one context. Near the transition both branches
/// are carried; elsewhere only the active one.
#[derive(Debug, Clone)]
pub struct MainTermEval {
    pub regime: Regime,
    pub large: Option<f64>,
    pub small: Option<f64>,
}

impl MainTermEval {
    /// The single active branch value; near the transition, the branch on
    /// beta's side of beta_alpha (for labeling, never for assertions).
    pub fn representative(&self, ctx: &TheoryContext) -> Option<f64> {
        match self.regime {
            Regime::LargeBeta => self.large,
            Regime::SmallBeta => self.small,
            Regime::NearTransition => {
                if ctx.beta > ctx.beta_alpha {
                    self.large.or(self.small)
                } else {
                    self.small.or(self.large)
                }
            }
            Regime::OutOfTheory => None,
        }
    }
}

fn large_branch(ctx: &TheoryContext) -> Result<f64> {
    let a = ctx.alpha.value();
    let c: ConstantValue = c_beta_alpha(ctx.beta, &ctx.alpha)?;
    let expo = exponents(a, ctx.beta).large_beta;
    let xf = ctx.x as f64;
    let llx = xf.ln().ln();
    Ok(c.value * xf / (ctx.p as f64 * xf.ln().powf(expo) * llx.sqrt()))
}

fn small_branch(ctx: &TheoryContext) -> Result<f64> {
    let a = ctx.alpha.value();
    let c = c_alpha(&ctx.alpha)?;
    let expo = exponents(a, ctx.beta).small_beta;
    let xf = ctx.x as f64;
    Ok(c.value * xf / (ctx.p as f64 * xf.ln().powf(expo)))
}

/// Main term for M_p^(alpha)(x) per the context's regime.
pub fn theory_main_term(ctx: &TheoryContext) -> Result<MainTermEval> {
    match ctx.regime {
        Regime::OutOfTheory => Err(Error::Regime(format!(
            "(x={}, p={}, alpha={}) sits outside the theory: beta = {:.4}, \
             transition at {:.4}, cap at {}",
            ctx.x, ctx.p, ctx.alpha, ctx.beta, ctx.beta_alpha, BETA_CAP
        ))),
        Regime::LargeBeta => Ok(MainTermEval {
            regime: ctx.regime,
            large: Some(large_branch(ctx)?),
            small: None,
        }),
        Regime::SmallBeta => Ok(MainTermEval {
            regime: ctx.regime,
            large: None,
            small: Some(small_branch(ctx)?),
        }),
        Regime::NearTransition => Ok(MainTermEval {
            regime: ctx.regime,
            // The large branch's product diverges at beta_alpha; on the small
            // side of the band it may be unavailable.
            large: large_branch(ctx).ok(),
            small: Some(small_branch(ctx)?),
        }),
    }
}

/// Main terms for the parity-split counts (exact middle / smaller middle),
/// stated for alpha = 1/2 only.
pub struct ParityMainTerms {
    pub regime: Regime,
    pub overline: f64,
    pub underline: f64,
}

pub fn parity_main_terms(ctx: &TheoryContext) -> Result<ParityMainTerms> {
    if ctx.alpha != (Alpha::Rational { num: 1, den: 2 }) {
        return Err(Error::Usage(
            "parity main terms are stated for alpha = 1/2 only".into(),
        ));
    }
    let xf = ctx.x as f64;
    let llx = xf.ln().ln();
    let pf = ctx.p as f64;
    match ctx.regime {
        Regime::OutOfTheory | Regime::NearTransition => Err(Error::Regime(format!(
            "parity main terms not asserted in regime {}",
            ctx.regime.as_str()
        ))),
        Regime::LargeBeta => {
            let (bar, under) = c_beta_parity(ctx.beta)?;
            let expo = 1.0 - 2.0 * (ctx.beta * (1.0 - ctx.beta)).sqrt();
            let shape = xf / (pf * xf.ln().powf(expo) * llx.sqrt());
            Ok(ParityMainTerms {
                regime: ctx.regime,
                overline: bar.value * shape,
                underline: under.value * shape,
            })
        }
        Regime::SmallBeta => {
            let consts = theorem_constants();
            let expo = 0.5 - 1.5 * ctx.beta;
            let shape = xf / (pf * xf.ln().powf(expo));
            Ok(ParityMainTerms {
                regime: ctx.regime,
                overline: consts.c_bar.value * shape,
                underline: consts.c_under.value * shape,
            })
        }
    }
}

//! The algebraic-identity suite for the constants lab, the quadrature oracle
//! for the Gaussian CDF, and error-bound honoring.

use anatomy_core::alpha::Alpha;
use anatomy_core::constants::{
    b_alpha_max, beta_alpha, c_alpha, c_beta, c_beta_alpha, c_beta_parity, eta, eta_o, exponents,
    g_factor, golden_max, rho, theorem_constants, RhoMode,
};
use anatomy_core::expsums::{
    truncated_exp_tail, twisted_exp_sum, twisted_floor_sum, window_tail_bound, TailSide,
};
use anatomy_core::gaussian_cdf;
use anatomy_core::special::EULER_GAMMA;

fn half() -> Alpha {
    Alpha::rational(1, 2).unwrap()
}

#[test]
fn eta_o_factors_eta() {
    for z in [0.3f64, 1.5] {
        let lhs = eta_o(z, 1e-11).unwrap().value;
        let rhs = (1.0 - z / 2.0) * eta(z, 1e-11).unwrap().value;
        assert!((lhs - rhs).abs() < 1e-10, "eta_o identity failed at z={z}");
    }
}

#[test]
fn theorem_constant_relations() {
    let tc = theorem_constants();
    assert!((tc.c_under.value - 2.0 * tc.c_bar.value).abs() < 1e-10);
    assert!((tc.c.value - 3.0 * tc.c_bar.value).abs() < 1e-10);
    assert!((tc.c.value - (tc.c_bar.value + tc.c_under.value)).abs() < 1e-10);
}

#[test]
fn c_beta_alpha_reduces_to_c_beta_at_half() {
    for beta in [0.25f64, 0.4, 0.5, 0.6, 0.75] {
        let lhs = c_beta_alpha(beta, &half()).unwrap().value;
        let rhs = c_beta(beta).unwrap().value;
        assert!(
            (lhs - rhs).abs() < 1e-9,
            "C_(beta,1/2) != C_beta at beta={beta}: {lhs} vs {rhs}"
        );
    }
}

#[test]
fn c_alpha_alpha_closed_form() {
    for (num, den) in [(3u64, 10u64), (1, 2), (7, 10)] {
        let alpha = Alpha::rational(num, den).unwrap();
        let a = alpha.value();
        let got = c_beta_alpha(a, &alpha).unwrap().value;
        let expect = 1.0 / (2.0 * std::f64::consts::PI * a * (1.0 - a)).sqrt();
        assert!(
            (got - expect).abs() < 1e-9,
            "C_(alpha,alpha) failed at {alpha}: {got} vs {expect}"
        );
    }
}

#[test]
fn c_half_is_sqrt_two_over_pi() {
    let got = c_beta(0.5).unwrap().value;
    let expect = (2.0 / std::f64::consts::PI).sqrt();
    assert!((got - expect).abs() < 1e-9);
}

#[test]
fn c_alpha_at_half_equals_c() {
    let lhs = c_alpha(&half()).unwrap().value;
    let rhs = theorem_constants().c.value;
    assert!((lhs - rhs).abs() < 1e-9, "{lhs} vs {rhs}");
}

#[test]
fn parity_constants_sum_and_ratio() {
    for beta in [0.3f64, 0.5, 0.7] {
        let (bar, under) = c_beta_parity(beta).unwrap();
        let total = c_beta(beta).unwrap().value;
        assert!((bar.value + under.value - total).abs() < 1e-9);
        let ratio = under.value / bar.value;
        assert!((ratio - ((1.0 - beta) / beta).sqrt()).abs() < 1e-12);
    }
}

#[test]
fn transition_point_and_branch_coincidence() {
    assert_eq!(beta_alpha(0.5), 0.2);
    for a in [0.3f64, 0.5, 0.7] {
        let ba = beta_alpha(a);
        let pair = exponents(a, ba);
        assert!(
            (pair.large_beta - pair.small_beta).abs() < 1e-10,
            "branches must coincide at beta_alpha for alpha={a}"
        );
    }
}

#[test]
fn general_exponent_matches_half_form() {
    for beta in [0.05f64, 0.21, 0.5, 0.77, 0.95] {
        let pair = exponents(0.5, beta);
        let closed = 1.0 - 2.0 * (beta * (1.0 - beta)).sqrt();
        assert!((pair.large_beta - closed).abs() < 1e-12);
    }
}

#[test]
fn rho_direct_cross_validation() {
    // ten fixed rationals standing in for "random" draws, deterministic
    let alphas = [
        (1u64, 3u64),
        (2, 5),
        (3, 7),
        (1, 4),
        (5, 8),
        (4, 9),
        (7, 11),
        (2, 7),
        (5, 6),
        (9, 13),
    ];
    for (num, den) in alphas {
        let alpha = Alpha::rational(num, den).unwrap();
        for c in [0.5f64, 1.5, 4.0] {
            let closed = rho(c, &alpha, RhoMode::Rational).unwrap().value;
            let direct = rho(c, &alpha, RhoMode::Direct(1_000_000)).unwrap().value;
            assert!(
                (direct - closed).abs() < 1e-3,
                "rho direct drifted at alpha={alpha}, c={c}: {direct} vs {closed}"
            );
        }
    }
    // spec'd spot check at (c = 3/2, alpha = 2/5) with the tighter band
    let alpha = Alpha::rational(2, 5).unwrap();
    let closed = rho(1.5, &alpha, RhoMode::Rational).unwrap().value;
    let direct = rho(1.5, &alpha, RhoMode::Direct(1_000_000)).unwrap().value;
    assert!((direct - closed).abs() < 1e-4);
}

#[test]
fn abs_error_fields_are_honored() {
    let cases: Vec<(f64, Box<dyn Fn(f64) -> f64>)> = vec![
        (1e-6, Box::new(|tol| eta(0.5, tol).unwrap().value)),
        (1e-6, Box::new(|tol| eta_o(2.0, tol).unwrap().value)),
        (1e-6, Box::new(|tol| g_factor(1000, 0.5, tol).unwrap().value)),
    ];
    for (tol, eval) in cases {
        let coarse = eval(tol);
        let fine = eval(tol / 10.0);
        assert!(
            (coarse - fine).abs() <= tol,
            "refinement moved the value more than the claimed bound"
        );
    }
    let claimed = eta(0.5, 1e-6).unwrap();
    let refined = eta(0.5, 1e-9).unwrap();
    assert!((claimed.value - refined.value).abs() <= claimed.abs_error);
}

#[test]
fn g_factor_mertens_asymptotic() {
    // g(p, 1/2) = e^{-gamma/2} (log p)^{-1/2} (1 + O(1/log p))
    let p = 1_000_000u64;
    let g = g_factor(p, 0.5, 1e-9).unwrap().value;
    let main = (-EULER_GAMMA / 2.0).exp() / (p as f64).ln().sqrt();
    assert!((g / main - 1.0).abs() < 0.01, "{g} vs {main}");
    // g(y, 0) = 1 and g(2, mu) has no finite part
    assert_eq!(g_factor(50, 0.0, 1e-9).unwrap().value, 1.0);
    let full = g_factor(2, 0.7, 1e-9).unwrap().value;
    let eta_like = eta(0.7, 1e-9).unwrap().value * (-EULER_GAMMA * 0.7).exp();
    assert!((full - eta_like).abs() < 1e-8);
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
        left + right + (left + right - whole) / 15.0
    } else {
        adaptive(f, a, m, left, tol / 2.0, depth - 1) + adaptive(f, m, b, right, tol / 2.0, depth - 1)
    }
}

#[test]
fn gaussian_cdf_matches_quadrature_oracle() {
    let density = |v: f64| (-v * v / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
    // anchor at -9: the mass below is ~1e-19, far under the tolerance
    for i in 0..20 {
        let t = -3.8 + 0.4 * i as f64;
        let whole = simpson(&density, -9.0, t);
        let oracle = adaptive(&density, -9.0, t, whole, 1e-13, 40);
        assert!(
            (gaussian_cdf(t) - oracle).abs() < 1e-10,
            "quadrature mismatch at t={t}"
        );
    }
    assert!((gaussian_cdf(1.959964) - 0.975).abs() < 1e-6);
}

#[test]
fn golden_maximization_reproduces_closed_form() {
    let (b0, expo) = golden_max();
    let (beta_star, val) = b_alpha_max(0.5);
    assert!((beta_star - b0).abs() < 1e-8);
    assert!((val - expo).abs() < 1e-8);
    // B_alpha >= alpha (take beta = alpha)
    for a in [0.2f64, 0.5, 0.8] {
        let (_, v) = b_alpha_max(a);
        assert!(v >= a - 1e-12);
    }
}

#[test]
fn twisted_window_sums_match_rho_averages() {
    let v = 400.0f64;
    let e = 80.0f64;
    let ev = v.exp();
    for (num, den) in [(1u64, 2u64), (2, 5)] {
        let alpha = Alpha::rational(num, den).unwrap();
        for c in [1.5f64, 4.0] {
            let r = rho(c, &alpha, RhoMode::Rational).unwrap().value;
            let window = twisted_exp_sum(v, e, &alpha, c).unwrap();
            assert!(
                (window / (r * ev) - 1.0).abs() < 0.02,
                "twisted window off at alpha={alpha}, c={c}"
            );
            let floor_sum = twisted_floor_sum(v, e, &alpha, c).unwrap();
            let scale = r * ev / (1.0 - alpha.value());
            assert!(
                (floor_sum / scale - 1.0).abs() < 0.05,
                "floor window off at alpha={alpha}, c={c}"
            );
        }
    }
}

#[test]
fn window_tail_bound_with_calibrated_constant() {
    let (w, e) = (100.0f64, 30.0f64);
    let bound = 10.0 * window_tail_bound(w, e);
    let lower = truncated_exp_tail(w, e, TailSide::Lower).unwrap();
    let upper = truncated_exp_tail(w, e, TailSide::Upper).unwrap();
    assert!(lower <= bound);
    assert!(upper <= bound);
}

//! Table-wide invariants of the factor table and the cache format.

use std::sync::OnceLock;

use proptest::prelude::*;

use anatomy_core::alpha::Alpha;
use anatomy_core::sieve::{build_factor_table, load_cache, primes_slice, primes_up_to, FactorTable};

const TABLE_LIMIT: u64 = 1_000_000;

fn table() -> &'static FactorTable {
    static TABLE: OnceLock<FactorTable> = OnceLock::new();
    TABLE.get_or_init(|| build_factor_table(TABLE_LIMIT).unwrap())
}

#[test]
fn factorization_reconstructs_exhaustively_to_1e6() {
    let t = table();
    for n in 2..=TABLE_LIMIT {
        let f = t.factorize(n).unwrap();
        assert_eq!(f.product(), n, "reconstruction failed at {n}");
    }
}

#[test]
fn omega_sum_matches_prime_power_identity() {
    // sum_{n <= x} Omega(n) = sum_{p^a <= x} floor(x / p^a), exactly.
    let t = table();
    for x in [1_000u64, 10_000, 100_000] {
        let mut from_table = 0u64;
        for n in 2..=x {
            from_table += t.factorize(n).unwrap().big_omega as u64;
        }
        let primes = primes_up_to(x);
        let mut from_powers = 0u64;
        for &p in primes_slice(&primes, x) {
            let mut q = p as u64;
            while q <= x {
                from_powers += x / q;
                match q.checked_mul(p as u64) {
                    Some(next) => q = next,
                    None => break,
                }
            }
        }
        assert_eq!(from_table, from_powers, "Omega identity failed at x={x}");
    }
}

#[test]
fn cache_round_trip_is_bit_identical() {
    let t = table();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spf.cache");
    t.save_cache(&path).unwrap();
    let loaded = load_cache(&path).unwrap();
    assert!(*t == loaded, "cache round trip changed the table");
}

#[test]
fn cache_rejects_corruption() {
    let t = build_factor_table(1000).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spf.cache");
    t.save_cache(&path).unwrap();
    let bytes = std::fs::read(&path).unwrap();

    // wrong magic
    let mut bad = bytes.clone();
    bad[0] = b'X';
    let bad_path = dir.path().join("magic.cache");
    std::fs::write(&bad_path, &bad).unwrap();
    assert!(matches!(
        load_cache(&bad_path),
        Err(anatomy_core::Error::Format(_))
    ));

    // truncation
    let cut_path = dir.path().join("cut.cache");
    std::fs::write(&cut_path, &bytes[..bytes.len() - 5]).unwrap();
    assert!(matches!(
        load_cache(&cut_path),
        Err(anatomy_core::Error::Format(_))
    ));

    // flipped payload byte -> checksum mismatch
    let mut flipped = bytes.clone();
    let mid = 12 + (flipped.len() - 20) / 2;
    flipped[mid] ^= 0x40;
    let flip_path = dir.path().join("flip.cache");
    std::fs::write(&flip_path, &flipped).unwrap();
    assert!(matches!(
        load_cache(&flip_path),
        Err(anatomy_core::Error::Format(_))
    ));

    // trailing garbage
    let mut long = bytes;
    long.push(0);
    let long_path = dir.path().join("long.cache");
    std::fs::write(&long_path, &long).unwrap();
    assert!(matches!(
        load_cache(&long_path),
        Err(anatomy_core::Error::Format(_))
    ));
}

proptest! {
    #[test]
    fn alpha_position_nondecreasing_in_alpha(n in 2u64..=TABLE_LIMIT, a in 1u64..99, b in 1u64..99) {
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assume!(lo != hi);
        let alpha_lo = Alpha::rational(lo, 100).unwrap();
        let alpha_hi = Alpha::rational(hi, 100).unwrap();
        let t = table();
        let p_lo = t.alpha_position_prime(n, &alpha_lo).unwrap();
        let p_hi = t.alpha_position_prime(n, &alpha_hi).unwrap();
        prop_assert!(p_lo <= p_hi, "position not monotone at n={n}: {p_lo} > {p_hi}");
    }

    #[test]
    fn primes_are_their_own_position(i in 0usize..78_498, a in 1u64..200) {
        let t = table();
        let p = t.primes()[i] as u64;
        let alpha = Alpha::rational(a, 201).unwrap();
        prop_assert_eq!(t.alpha_position_prime(p, &alpha).unwrap(), p);
    }

    #[test]
    fn factorize_matches_trial_division(n in 2u64..=100_000) {
        let f = table().factorize(n).unwrap();
        // independent trial-division factorization
        let mut m = n;
        let mut trial: Vec<(u64, u32)> = Vec::new();
        let mut d = 2u64;
        while d * d <= m {
            if m % d == 0 {
                let mut mult = 0;
                while m % d == 0 {
                    m /= d;
                    mult += 1;
                }
                trial.push((d, mult));
            }
            d += 1;
        }
        if m > 1 {
            trial.push((m, 1));
        }
        prop_assert_eq!(f.factors, trial);
    }
}

mod common;

use common::{interlaced_pairs, sweep_ts};
use hlrsk::hl_kernel::{s_factor_via_psi, t_factor_via_psi};
use hlrsk::{rat, Rational};
use num_traits::{One, Zero};

#[test]
fn case_tables_match_products_and_psi_ratios() {
    let pairs = interlaced_pairs(8, 2);
    for t in sweep_ts() {
        for (nu, lam, pr) in &pairs {
            for i in 1..=pr.ell() {
                let a: Rational = pr.t_factor(i, &t).unwrap_or_else(|e| panic!("T{i} {pr:?}: {e}"));
                let b: Rational = pr.t_factor_product(i, &t).unwrap_or_else(|e| panic!("T{i} product {pr:?}: {e}"));
                let c: Rational = t_factor_via_psi(nu, lam, i, &t).unwrap();
                assert_eq!(a, b, "T_{i} table vs product at {pr:?}");
                assert_eq!(a, c, "T_{i} table vs psi ratio at {pr:?}");
            }
            for j in 1..=pr.ell() + 1 {
                let a: Rational = pr.s_factor(j, &t).unwrap_or_else(|e| panic!("S{j} {pr:?}: {e}"));
                let b: Rational = pr.s_factor_product(j, &t).unwrap_or_else(|e| panic!("S{j} product {pr:?}: {e}"));
                let c: Rational = s_factor_via_psi(nu, lam, j, &t).unwrap();
                assert_eq!(a, b, "S_{j} table vs product at {pr:?}");
                assert_eq!(a, c, "S_{j} table vs psi ratio at {pr:?}");
            }
        }
    }
}

#[test]
fn push_probabilities_match_sum_forms_and_lie_in_unit_interval() {
    let pairs = interlaced_pairs(8, 2);
    for t in sweep_ts() {
        for (_, _, pr) in &pairs {
            for j in 1..=pr.ell() {
                if pr.lower.get(j) <= pr.upper.get(j + 1) {
                    assert!(pr.push_prob_alpha::<Rational>(j, &t).is_err());
                    continue;
                }
                let ra: Rational = pr.push_prob_alpha(j, &t).unwrap();
                assert_eq!(ra, pr.push_prob_alpha_via_sums(j, &t).unwrap(), "alpha r-sum at {pr:?} j={j}");
                let rb: Rational = pr.push_prob_beta(j, &t).unwrap();
                assert_eq!(rb, pr.push_prob_beta_via_sums(j, &t).unwrap(), "beta r-sum at {pr:?} j={j}");
                for r in [&ra, &rb] {
                    assert!(*r >= Rational::zero() && *r <= Rational::one(), "{r} outside [0,1] at {pr:?} j={j}");
                }
            }
        }
    }
}

#[test]
fn schur_degeneration_is_deterministic() {
    let t = rat(0, 1);
    for (_, _, pr) in interlaced_pairs(8, 1) {
        for j in 1..=pr.ell() {
            if pr.lower.get(j) <= pr.upper.get(j + 1) {
                continue;
            }
            let ra: Rational = pr.push_prob_alpha(j, &t).unwrap();
            let rb: Rational = pr.push_prob_beta(j, &t).unwrap();
            assert!(ra.is_one(), "alpha at t=0: {ra}");
            assert!(rb.is_zero(), "beta at t=0: {rb}");
        }
    }
}

#[test]
fn float_mode_matches_exact_mode() {
    let t = rat(1, 3);
    for (_, _, pr) in interlaced_pairs(6, 1) {
        for j in 1..=pr.ell() {
            if pr.lower.get(j) <= pr.upper.get(j + 1) {
                continue;
            }
            let e: Rational = pr.push_prob_alpha(j, &t).unwrap();
            let f: f64 = pr.push_prob_alpha(j, &(1.0 / 3.0)).unwrap();
            assert!((hlrsk::Scalar::to_f64(&e) - f).abs() < 1e-14);
            let e: Rational = pr.push_prob_beta(j, &t).unwrap();
            let f: f64 = pr.push_prob_beta(j, &(1.0 / 3.0)).unwrap();
            assert!((hlrsk::Scalar::to_f64(&e) - f).abs() < 1e-14);
        }
    }
}

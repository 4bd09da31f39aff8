mod common;

use std::collections::BTreeMap;

use common::p;
use hlrsk::oracle::{build_basis, Specialization};
use hlrsk::particle_systems::{coupled_q_run, coupled_tasep_check, q_speed_targets, q_speeds, tasep_speeds};
use hlrsk::partitions::Partition;
use hlrsk::rng::stream_rng;
use hlrsk::rsk_sampler::{
    column_rsk_reference, exact_distribution, run, univariate_run, InterlacingArrayState, Letter, LetterOrder, SamplerConfig,
};
use hlrsk::stats::{chi_square, frequency_report, lln_experiment};
use hlrsk::{rat, Rational};
use proptest::prelude::*;
use rand::Rng;

fn pure_alpha(alphas: Vec<Rational>, t: Rational) -> SamplerConfig {
    SamplerConfig::new(Specialization::hl(alphas, vec![], rat(0, 1), t).unwrap(), LetterOrder::UsualFirst, 0).unwrap()
}

#[test]
fn column_rsk_reference_small_words() {
    assert_eq!(column_rsk_reference(&[1, 1, 1]), vec![p(&[1]), p(&[2]), p(&[3])]);
    assert_eq!(column_rsk_reference(&[3, 2, 1]), vec![p(&[1]), p(&[2]), p(&[3])]);
    assert_eq!(column_rsk_reference(&[1, 2, 3]), vec![p(&[1]), p(&[1, 1]), p(&[1, 1, 1])]);
    assert_eq!(column_rsk_reference(&[2, 1, 2]), vec![p(&[1]), p(&[2]), p(&[2, 1])]);
}

#[test]
fn t_zero_sampler_is_column_insertion() {
    let mut rng = stream_rng(7, 0);
    for _ in 0..300 {
        let len = rng.random_range(1..=12);
        let word: Vec<u32> = (0..len).map(|_| rng.random_range(1..=3)).collect();
        let mut s = InterlacingArrayState::new(LetterOrder::UsualFirst);
        let mut shapes = Vec::new();
        for &w in &word {
            s.insert(Letter::Usual(w), 0.0, &mut rng).unwrap();
            shapes.push(s.top_shape());
        }
        assert_eq!(shapes, column_rsk_reference(&word), "word {word:?}");
    }
}

fn letter_of(code: u8) -> Letter {
    match code {
        0..=3 => Letter::Usual(code as u32 + 1),
        _ => Letter::Dual(code as u32 - 3),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn squashing(first in 0u8..7, reps in 1usize..6, tail in proptest::collection::vec(0u8..7, 0..10), t in 0.05f64..0.95, seed in any::<u64>()) {
        let mut rng = stream_rng(seed, 0);
        let mut s = InterlacingArrayState::new(LetterOrder::UsualFirst);
        let lead = letter_of(first);
        let word: Vec<Letter> = std::iter::repeat_n(lead, reps).chain(tail.iter().map(|&c| letter_of(c))).collect();
        let all: Vec<Letter> = (0..7).map(letter_of).collect();
        for (k, &letter) in word.iter().enumerate() {
            s.insert(letter, t, &mut rng).unwrap();
            s.check_invariants().unwrap();
            if k + 1 == reps {
                let n = reps as u32;
                let want = match lead {
                    Letter::Usual(_) => Partition::new(vec![n]).unwrap(),
                    _ => Partition::new(vec![1; reps]).unwrap(),
                };
                prop_assert_eq!(s.levels().len(), 1);
                prop_assert_eq!(s.top_shape(), want);
            }
            let seen = &word[..=k];
            for (a, x) in all.iter().enumerate() {
                for y in &all[a + 1..] {
                    let between = seen.iter().any(|l| LetterOrder::UsualFirst.compare(l, x).is_gt() && LetterOrder::UsualFirst.compare(l, y).is_le());
                    prop_assert_eq!(s.tower_shape(x) == s.tower_shape(y), !between, "{:?} {:?} after {:?}", x, y, seen);
                }
            }
        }
    }
}

#[test]
fn univariate_chain_matches_the_table() {
    let t = rat(1, 2);
    let cfg = pure_alpha(vec![rat(1, 2), rat(1, 2)], t.clone());
    let basis = build_basis(3, &rat(0, 1), &t).unwrap();
    let table = basis.measure_table(3, &cfg.spec).unwrap().to_f64();
    let mut rng = stream_rng(3, 0);
    let mut counts = BTreeMap::new();
    for _ in 0..20_000 {
        *counts.entry(univariate_run(&basis, &cfg.spec, 3, &mut rng).unwrap()).or_insert(0u64) += 1;
    }
    assert!(chi_square(&counts, &table).unwrap().p_value > 1e-4);
}

#[test]
fn sampled_tables_pass_and_wrong_t_fails() {
    let cfg = pure_alpha(vec![rat(1, 2), rat(1, 4), rat(1, 4)], rat(1, 2));
    let right = exact_distribution(&cfg, 3).unwrap().to_f64();
    let wrong = exact_distribution(&pure_alpha(vec![rat(1, 2), rat(1, 4), rat(1, 4)], rat(3, 10)), 3).unwrap().to_f64();
    let mut rng = stream_rng(11, 0);
    let mut counts = BTreeMap::new();
    for _ in 0..100_000 {
        *counts.entry(run(&cfg, 3, &mut rng).unwrap().state.top_shape()).or_insert(0u64) += 1;
    }
    assert!(chi_square(&counts, &right).unwrap().p_value > 1e-4);
    assert!(chi_square(&counts, &wrong).unwrap().p_value < 1e-6);
}

#[test]
fn trivial_specs_are_deterministic() {
    let mut rng = stream_rng(1, 0);
    let one = pure_alpha(vec![rat(1, 1)], rat(1, 2));
    assert_eq!(run(&one, 5, &mut rng).unwrap().state.top_shape(), p(&[5]));
    let col = SamplerConfig::new(
        Specialization::hl(vec![], vec![rat(1, 2)], rat(0, 1), rat(1, 2)).unwrap(),
        LetterOrder::UsualFirst,
        0,
    )
    .unwrap();
    assert_eq!(run(&col, 5, &mut rng).unwrap().state.top_shape(), p(&[1, 1, 1, 1, 1]));
}

#[test]
fn frequency_report_rows_sum_to_one_and_ignore_order() {
    let t = rat(1, 2);
    let cfg = pure_alpha(vec![rat(1, 2), rat(3, 10), rat(1, 5)], t);
    let mut rng = stream_rng(5, 0);
    let mut samples: Vec<Partition> = (0..20).map(|_| run(&cfg, 200, &mut rng).unwrap().state.top_shape()).collect();
    let a = frequency_report(&samples, 200, &[0.5, 0.3, 0.2], &[]).unwrap();
    let total: f64 = a.rows.iter().map(|r| r.mean).sum();
    assert!((total - 1.0).abs() < 1e-12);
    samples.reverse();
    let b = frequency_report(&samples, 200, &[0.5, 0.3, 0.2], &[]).unwrap();
    for (x, y) in a.rows.iter().zip(&b.rows) {
        assert!((x.mean - y.mean).abs() < 1e-12);
    }
}

#[test]
fn schur_case_frequencies() {
    let cfg = pure_alpha(vec![rat(1, 2), rat(3, 10), rat(1, 5)], rat(0, 1));
    let out = lln_experiment(&cfg, 5000, 20, 9).unwrap();
    assert!(out.report.max_row_deviation <= 0.02, "{:?}", out.report.rows);
}

#[test]
fn couplings_on_a_handful_of_seeds() {
    for seed in 0..10 {
        let mut rng = stream_rng(seed, 0);
        assert_eq!(coupled_tasep_check(&[0.5, 0.3, 0.2], 0.5, 400, &mut rng).unwrap().violations, 0);
        let mut rng = stream_rng(seed, 1);
        assert_eq!(coupled_q_run(&[0.25, 0.15, 0.1], 0.5, 400, &mut rng).unwrap().violations, 0);
    }
}

#[test]
fn particle_speeds_short_runs() {
    let v = tasep_speeds(&[0.5, 0.3, 0.2], 5000, 20, 1).unwrap();
    for (s, a) in v.iter().zip([0.5, 0.3, 0.2]) {
        assert!((s - a).abs() < 0.03, "{v:?}");
    }
    let betas = [0.25, 0.15, 0.1];
    let v = q_speeds(&betas, 0.5, 5000, 20, 1).unwrap();
    for (s, a) in v.iter().zip(q_speed_targets(&betas, 0.5)) {
        assert!((s - a).abs() < 0.03, "{v:?}");
    }
}

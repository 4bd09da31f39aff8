//! Two hand-checked single-insertion examples, used by the CLI `verify` command.

use crate::partitions::Partition;
use crate::rsk_sampler::{InterlacingArrayState, Letter, LetterOrder, SamplerError};
use crate::scalar::{Rational, Scalar};

/// Plancherel key for a value in (0,1).
pub fn plancherel_key(u: f64) -> u64 {
    (u * 18_446_744_073_709_551_616.0) as u64
}

fn shape(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn col(v: &[u32]) -> Partition {
    shape(v).transpose()
}

pub type ProbabilityFn = fn(&Rational) -> Rational;

/// An initial state, a letter, and the expected outcomes with probabilities as
/// functions of t.
pub struct WorkedExample {
    pub name: &'static str,
    pub initial: InterlacingArrayState,
    pub letter: Letter,
    pub outcomes: Vec<(InterlacingArrayState, ProbabilityFn)>,
}

fn state(levels: &[(Letter, Partition)]) -> InterlacingArrayState {
    InterlacingArrayState::from_shapes(LetterOrder::UsualFirst, levels).expect("worked example is valid")
}

/// Four usual levels; the letter 2 has two outcomes.
pub fn four_level_example() -> WorkedExample {
    let u = Letter::Usual;
    WorkedExample {
        name: "four usual levels, letter 2",
        initial: state(&[(u(1), shape(&[5])), (u(2), shape(&[6, 2])), (u(3), shape(&[9, 2, 2])), (u(4), shape(&[10, 6, 2, 1]))]),
        letter: u(2),
        outcomes: vec![
            (
                state(&[(u(1), shape(&[5])), (u(2), shape(&[6, 3])), (u(3), shape(&[9, 3, 2])), (u(4), shape(&[10, 7, 2, 1]))]),
                |t| Rational::from_int(1) / (Rational::from_int(1) + t.clone()),
            ),
            (
                state(&[(u(1), shape(&[5])), (u(2), shape(&[6, 3])), (u(3), shape(&[9, 3, 2])), (u(4), shape(&[10, 6, 3, 1]))]),
                |t| t.clone() / (Rational::from_int(1) + t.clone()),
            ),
        ],
    }
}

/// Mixed tableau with usual, dual and Plancherel letters; the letter 3 has four outcomes.
pub fn mixed_example() -> WorkedExample {
    let u = Letter::Usual;
    let d = Letter::Dual;
    let p1 = Letter::Plancherel(plancherel_key(0.1));
    let p2 = Letter::Plancherel(plancherel_key(0.34));
    let build = |l3: &[u32], l5: &[u32], c: [&[u32]; 5]| {
        state(&[
            (u(2), shape(&[2])),
            (u(3), shape(l3)),
            (u(5), shape(l5)),
            (d(2), col(c[0])),
            (d(5), col(c[1])),
            (d(7), col(c[2])),
            (p1, col(c[3])),
            (p2, col(c[4])),
        ])
    };
    let initial = build(&[3, 1], &[4, 3, 1], [&[5, 2, 2, 1], &[5, 4, 2, 1], &[5, 4, 2, 2], &[5, 4, 2, 2, 1], &[5, 4, 2, 2, 2]]);
    let outcomes: Vec<(InterlacingArrayState, ProbabilityFn)> = vec![
        (
            build(
                &[3, 2],
                &[5, 3, 1],
                [&[5, 2, 2, 1, 1], &[5, 4, 2, 1, 1], &[5, 4, 2, 2, 1], &[5, 4, 2, 2, 1, 1], &[5, 4, 2, 2, 2, 1]],
            ),
            |t| (Rational::from_int(1) - t.clone()) / (Rational::from_int(1) + t.clone()),
        ),
        (
            build(
                &[3, 2],
                &[5, 3, 1],
                [&[5, 2, 2, 1, 1], &[5, 4, 2, 1, 1], &[5, 4, 2, 2, 1], &[5, 4, 2, 2, 2], &[5, 4, 2, 2, 2, 1]],
            ),
            |t| (Rational::from_int(1) - t.clone()) * t.clone() / (Rational::from_int(1) + t.clone()),
        ),
        (build(&[3, 2], &[4, 3, 2], [&[5, 3, 2, 1], &[5, 4, 3, 1], &[5, 4, 3, 2], &[5, 4, 3, 2, 1], &[5, 4, 3, 2, 2]]), |t| {
            t.clone() * (Rational::from_int(1) + t.clone()) / (Rational::from_int(1) + t.clone() + t.powi(2))
        }),
        (build(&[3, 2], &[4, 3, 2], [&[5, 3, 2, 1], &[5, 5, 2, 1], &[5, 5, 2, 2], &[5, 5, 2, 2, 1], &[5, 5, 2, 2, 2]]), |t| {
            t.powi(3) / (Rational::from_int(1) + t.clone() + t.powi(2))
        }),
    ];
    WorkedExample { name: "mixed tableau, letter 3", initial, letter: u(3), outcomes }
}

/// Compares the computed outcome distribution against the expected one at `t`.
pub fn check(example: &WorkedExample, t: &Rational) -> Result<bool, SamplerError> {
    let got = example.initial.step_distribution(example.letter, t)?;
    if got.len() != example.outcomes.len() {
        return Ok(false);
    }
    Ok(example.outcomes.iter().all(|(s, f)| {
        let want = f(t);
        got.iter().any(|(g, p)| g == s && *p == want)
    }))
}

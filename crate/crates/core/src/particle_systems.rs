//! Auxiliary particle systems: discrete-time TASEP with speeds, t-pushing
//! Q-dynamics, a reflected random walk, and their couplings with the sampler.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::partitions::Partition;
use crate::rng::stream_rng;
use crate::rsk_sampler::{InterlacingArrayState, Letter, LetterOrder, SamplerError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParticleError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Sampler(#[from] SamplerError),
}

fn draw_index<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if u < acc {
            return i + 1;
        }
    }
    weights.iter().rposition(|w| *w > 0.0).unwrap_or(0) + 1
}

fn check_distribution(w: &[f64], what: &str) -> Result<(), ParticleError> {
    if w.is_empty() || w.iter().any(|x| x.is_nan() || *x < 0.0) || (w.iter().sum::<f64>() - 1.0).abs() > 1e-9 {
        return Err(ParticleError::InvalidParams(format!("{what} must be nonnegative and sum to 1")));
    }
    Ok(())
}

/// Discrete-time TASEP: T₁ ≥ T₂ ≥ … ≥ T_a.
#[derive(Debug, Clone, PartialEq)]
pub struct TasepState {
    pub positions: Vec<i64>,
    pub speeds: Vec<f64>,
}

impl TasepState {
    pub fn new(speeds: Vec<f64>) -> Result<Self, ParticleError> {
        check_distribution(&speeds, "speeds")?;
        Ok(TasepState { positions: vec![0; speeds.len()], speeds })
    }

    /// Applies a jumping signal to particle `i` (1-based); returns whether it moved.
    pub fn signal(&mut self, i: usize) -> bool {
        if i == 1 || self.positions[i - 1] < self.positions[i - 2] {
            self.positions[i - 1] += 1;
            true
        } else {
            false
        }
    }

    /// Draws a signal with probabilities α_i and applies it; returns the signal.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> usize {
        let i = draw_index(&self.speeds, rng);
        self.signal(i);
        i
    }

    pub fn is_ordered(&self) -> bool {
        self.positions.windows(2).all(|w| w[0] >= w[1])
    }
}

/// t-pushing dynamics: Q₁ ≤ Q₂ ≤ … ≤ Q_b.
#[derive(Debug, Clone, PartialEq)]
pub struct QState {
    pub positions: Vec<i64>,
    pub betas: Vec<f64>,
    pub t: f64,
}

impl QState {
    pub fn new(betas: Vec<f64>, t: f64) -> Result<Self, ParticleError> {
        if !(0.0..1.0).contains(&t) {
            return Err(ParticleError::InvalidParams("t must lie in [0,1)".into()));
        }
        let probs: Vec<f64> = betas.iter().map(|b| b / (1.0 - t)).collect();
        check_distribution(&probs, "beta/(1-t)")?;
        Ok(QState { positions: vec![0; betas.len()], betas, t })
    }

    /// P(signal i) = β_{b+1−i}/(1−t).
    pub fn signal_probabilities(&self) -> Vec<f64> {
        self.betas.iter().rev().map(|b| b / (1.0 - self.t)).collect()
    }

    /// t^{Q_{i+1}−Q_i}, or 0 for the last particle.
    pub fn push_probability(&self, i: usize) -> f64 {
        if i >= self.positions.len() {
            return 0.0;
        }
        self.t.powi((self.positions[i] - self.positions[i - 1]) as i32)
    }

    /// Moves Q_i, and every Q_j with j > i when `push` holds.
    pub fn apply(&mut self, i: usize, push: bool) {
        self.positions[i - 1] += 1;
        if push {
            for q in &mut self.positions[i..] {
                *q += 1;
            }
        }
    }

    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) -> usize {
        let i = draw_index(&self.signal_probabilities(), rng);
        let p = self.push_probability(i);
        let push = rng.random::<f64>() < p;
        self.apply(i, push);
        i
    }

    pub fn is_ordered(&self) -> bool {
        self.positions.windows(2).all(|w| w[0] <= w[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkParams {
    pub p_plus: f64,
    pub p_minus: f64,
    pub p0: f64,
    pub c: f64,
}

/// Lazy walk on Z≥0: ±1 with p₊/p₋ away from 0, and 0 → 1 with probability p₀.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectedWalk {
    pub m: u64,
    pub params: WalkParams,
}

impl ReflectedWalk {
    pub fn new(params: WalkParams) -> Result<Self, ParticleError> {
        let WalkParams { p_plus, p_minus, p0, c } = params;
        let ok = p_plus >= p_minus && p_minus > 0.0 && p_plus + p_minus <= 1.0 && p0 > 0.0 && p0 <= 1.0 && c > 0.0 && c < 1.0;
        if !ok {
            return Err(ParticleError::InvalidParams("need p+ >= p- > 0, p+ + p- <= 1, p0 in (0,1], c in (0,1)".into()));
        }
        Ok(ReflectedWalk { m: 0, params })
    }

    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let u: f64 = rng.random();
        if self.m == 0 {
            if u < self.params.p0 {
                self.m = 1;
            }
        } else if u < self.params.p_plus {
            self.m += 1;
        } else if u < self.params.p_plus + self.params.p_minus {
            self.m -= 1;
        }
    }
}

/// (w(n), φ(n)) = (Σ_{i≤n} 1_{m(i)=0}, Σ_{i≤n} c^{m(i)}) for a walk started at 0.
pub fn reflected_walk_stats<R: Rng + ?Sized>(params: WalkParams, n: u64, rng: &mut R) -> Result<(u64, f64), ParticleError> {
    let mut walk = ReflectedWalk::new(params)?;
    let (mut w, mut phi) = (0u64, 0.0f64);
    for i in 0..=n {
        if i > 0 {
            walk.step(rng);
        }
        if walk.m == 0 {
            w += 1;
        }
        phi += params.c.powi(walk.m.min(i32::MAX as u64) as i32);
    }
    Ok((w, phi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CouplingReport {
    pub steps: u32,
    pub violations: u32,
}

/// Drives the pure-α sampler and TASEP with one signal stream; counts steps with
/// λ^(i)_i < T_i for some i.
pub fn coupled_tasep_check<R: Rng + ?Sized>(
    alphas: &[f64],
    t: f64,
    n: u32,
    rng: &mut R,
) -> Result<CouplingReport, ParticleError> {
    let mut tasep = TasepState::new(alphas.to_vec())?;
    let mut state = InterlacingArrayState::new(LetterOrder::UsualFirst);
    let mut violations = 0;
    for _ in 0..n {
        let i = draw_index(alphas, rng);
        tasep.signal(i);
        state.insert(Letter::Usual(i as u32), t, rng)?;
        let bad = (1..=alphas.len()).any(|k| {
            let shape = state.tower_shape(&Letter::Usual(k as u32));
            (shape.part(k) as i64) < tasep.positions[k - 1]
        });
        if bad {
            violations += 1;
        }
    }
    Ok(CouplingReport { steps: n, violations })
}

fn first_column(state: &InterlacingArrayState, b: usize) -> Vec<i64> {
    (0..b).map(|d| state.levels()[d].coords.first().copied().unwrap_or(0) as i64).collect()
}

/// Runs the β-only sampler jointly with the Q-dynamics. Push counts of the first
/// column particle τ₁ and the Q push are coupled through one uniform; counts steps
/// with τ^(i)_1 > Q_i for some i.
pub fn coupled_q_run<R: Rng + ?Sized>(betas: &[f64], t: f64, n: u32, rng: &mut R) -> Result<CouplingReport, ParticleError> {
    let mut q = QState::new(betas.to_vec(), t)?;
    let b = betas.len();
    let shapes: Vec<(Letter, Partition)> = (1..=b as u32).map(|i| (Letter::Dual(i), Partition::empty())).collect();
    let mut state = InterlacingArrayState::from_shapes(LetterOrder::UsualFirst, &shapes)?;
    let probs = q.signal_probabilities();
    let mut violations = 0;
    for _ in 0..n {
        let i = draw_index(&probs, rng);
        let tau = first_column(&state, b);
        // Law of η, the number of levels above i that push τ₁.
        let mut cont = 1.0;
        let mut cumulative = Vec::with_capacity(b - i + 1);
        let mut acc = 0.0;
        for m in i + 1..=b {
            let rho = t.powi((tau[m - 1] - tau[m - 2]) as i32);
            acc += cont * (1.0 - rho);
            cumulative.push(acc);
            cont *= rho;
        }
        cumulative.push(1.0);
        let u: f64 = rng.random();
        let eta = cumulative.iter().position(|&c| u < c).unwrap_or(cumulative.len() - 1);
        let r_minus = 1.0 - q.push_probability(i);
        q.apply(i, u >= r_minus);
        let base = i - 1;
        state.insert_with(Letter::Dual(i as u32), &t, |ctx, r| {
            if ctx.j == 1 {
                ctx.level - base <= eta
            } else {
                rng.random::<f64>() < *r
            }
        })?;
        let tau = first_column(&state, b);
        if (0..b).any(|k| tau[k] > q.positions[k]) {
            violations += 1;
        }
    }
    Ok(CouplingReport { steps: n, violations })
}

/// Mean T_i(n)/n over `runs` independent TASEP runs.
pub fn tasep_speeds(alphas: &[f64], n: u32, runs: u32, seed: u64) -> Result<Vec<f64>, ParticleError> {
    TasepState::new(alphas.to_vec())?;
    let finals: Vec<Vec<i64>> = (0..runs)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(seed, r as u64);
            let mut s = TasepState::new(alphas.to_vec()).expect("validated");
            for _ in 0..n {
                s.step(&mut rng);
            }
            s.positions
        })
        .collect();
    Ok(mean_speeds(&finals, n))
}

/// Mean Q_j(n)/n over `runs` independent runs.
pub fn q_speeds(betas: &[f64], t: f64, n: u32, runs: u32, seed: u64) -> Result<Vec<f64>, ParticleError> {
    QState::new(betas.to_vec(), t)?;
    let finals: Vec<Vec<i64>> = (0..runs)
        .into_par_iter()
        .map(|r| {
            let mut rng = stream_rng(seed, r as u64);
            let mut s = QState::new(betas.to_vec(), t).expect("validated");
            for _ in 0..n {
                s.step(&mut rng);
            }
            s.positions
        })
        .collect();
    Ok(mean_speeds(&finals, n))
}

fn mean_speeds(finals: &[Vec<i64>], n: u32) -> Vec<f64> {
    let k = finals.first().map(Vec::len).unwrap_or(0);
    (0..k).map(|i| finals.iter().map(|f| f[i] as f64 / n.max(1) as f64).sum::<f64>() / finals.len().max(1) as f64).collect()
}

/// Speed targets of the Q-dynamics: β_{b+1−j}/(1−t).
pub fn q_speed_targets(betas: &[f64], t: f64) -> Vec<f64> {
    betas.iter().rev().map(|b| b / (1.0 - t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_particles() {
        let mut rng = stream_rng(1, 0);
        let mut s = TasepState::new(vec![1.0]).unwrap();
        for _ in 0..50 {
            s.step(&mut rng);
        }
        assert_eq!(s.positions, vec![50]);
        let mut q = QState::new(vec![0.5], 0.5).unwrap();
        for _ in 0..50 {
            q.step(&mut rng);
        }
        assert_eq!(q.positions, vec![50]);
    }

    #[test]
    fn blocked_and_zero_gap() {
        let mut s = TasepState::new(vec![0.5, 0.5]).unwrap();
        assert!(!s.signal(2));
        assert!(s.signal(1));
        assert!(s.signal(2));
        let q = QState::new(vec![0.3, 0.2], 0.5).unwrap();
        assert_eq!(q.push_probability(1), 1.0);
        assert_eq!(q.push_probability(2), 0.0);
    }

    #[test]
    fn walk_edge_cases() {
        let mut rng = stream_rng(1, 0);
        let params = WalkParams { p_plus: 0.3, p_minus: 0.3, p0: 1.0, c: 0.5 };
        assert_eq!(reflected_walk_stats(params, 0, &mut rng).unwrap(), (1, 1.0));
        let (w, phi) = reflected_walk_stats(params, 1000, &mut rng).unwrap();
        assert!(phi >= w as f64);
        assert!(ReflectedWalk::new(WalkParams { p_plus: 0.1, p_minus: 0.3, p0: 1.0, c: 0.5 }).is_err());
    }

    #[test]
    fn couplings_hold_on_a_few_seeds() {
        for seed in 0..5 {
            let mut rng = stream_rng(seed, 0);
            assert_eq!(coupled_tasep_check(&[0.6, 0.4], 0.5, 300, &mut rng).unwrap().violations, 0);
            let mut rng = stream_rng(seed, 1);
            assert_eq!(coupled_q_run(&[0.3, 0.2], 0.5, 300, &mut rng).unwrap().violations, 0);
        }
    }
}

//! Randomized RSK insertion on interlacing arrays, with exact outcome enumeration
//! and degenerate-case references.
//!
//! Each level stores trimmed native coordinates: row lengths for usual letters,
//! column lengths for dual and Plancherel letters. The padded length of a level is
//! derived from the level below it, so cloning and zero-particle padding need no
//! bookkeeping of their own.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::hl_kernel::{next_free, push_prob_alpha, push_prob_beta, ColView, Coords, KernelError, RowView};
use crate::oracle::{Basis, MeasureTable, OracleError, Specialization};
use crate::partitions::{transpose_parts, Partition};
use crate::scalar::{Rational, Scalar};

/// Default cap on `n` for [`exact_distribution`].
pub const DEFAULT_EXACT_CAP: u32 = 6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SamplerError {
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("n = {n} exceeds the cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    Usual(u32),
    Dual(u32),
    /// A uniform value in (0,1), encoded as `(u + 1/2) / 2^64`.
    Plancherel(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoordKind {
    Row,
    Col,
}

impl Letter {
    pub fn coord_kind(&self) -> CoordKind {
        match self {
            Letter::Usual(_) => CoordKind::Row,
            _ => CoordKind::Col,
        }
    }

    pub fn plancherel_value(u: u64) -> f64 {
        (u as f64 + 0.5) / 18_446_744_073_709_551_616.0
    }

    pub fn label(&self) -> String {
        match self {
            Letter::Usual(i) => format!("{i}"),
            Letter::Dual(i) => format!("{i}^"),
            Letter::Plancherel(u) => format!("pl:{}", Letter::plancherel_value(*u)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum LetterOrder {
    /// 1 < 2 < … < 1̂ < 2̂ < … < Plancherel letters.
    #[default]
    UsualFirst,
    /// 1̂ < 2̂ < … < Plancherel letters < 1 < 2 < ….
    DualFirst,
}

impl LetterOrder {
    fn key(&self, l: &Letter) -> (u8, u64) {
        match (self, l) {
            (LetterOrder::UsualFirst, Letter::Usual(i)) => (0, *i as u64),
            (LetterOrder::UsualFirst, Letter::Dual(i)) => (1, *i as u64),
            (LetterOrder::UsualFirst, Letter::Plancherel(u)) => (2, *u),
            (LetterOrder::DualFirst, Letter::Dual(i)) => (0, *i as u64),
            (LetterOrder::DualFirst, Letter::Plancherel(u)) => (1, *u),
            (LetterOrder::DualFirst, Letter::Usual(i)) => (2, *i as u64),
        }
    }

    pub fn compare(&self, a: &Letter, b: &Letter) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Level {
    pub letter: Letter,
    /// Trimmed native coordinates.
    pub coords: Vec<u32>,
}

impl Level {
    /// The diagram in row coordinates.
    pub fn shape(&self) -> Partition {
        match self.letter.coord_kind() {
            CoordKind::Row => Partition::from_vec_unchecked(self.coords.clone()),
            CoordKind::Col => Partition::from_vec_unchecked(transpose_parts(&self.coords)),
        }
    }
}

/// Context handed to a push/pull decision.
#[derive(Debug, Clone, Copy)]
pub struct DecisionCtx {
    /// Position of the target level in the tower.
    pub level: usize,
    /// Index of the moved lower particle, in target coordinates.
    pub j: usize,
}

enum Step<S> {
    Forced(usize),
    Split { r: S, push: usize, pull: usize },
}

enum View<'a> {
    Direct(RowView<'a>),
    Transposed(ColView<'a>),
}

impl Coords for View<'_> {
    fn len(&self) -> usize {
        match self {
            View::Direct(v) => v.len(),
            View::Transposed(v) => v.len(),
        }
    }
    fn at(&self, i: usize) -> u32 {
        match self {
            View::Direct(v) => v.at(i),
            View::Transposed(v) => v.at(i),
        }
    }
    fn mult(&self, x: u32) -> usize {
        match self {
            View::Direct(v) => v.mult(x),
            View::Transposed(v) => v.mult(x),
        }
    }
}

/// A tower of nested diagrams, one level per letter seen so far.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterlacingArrayState {
    order: LetterOrder,
    levels: Vec<Level>,
}

impl InterlacingArrayState {
    pub fn new(order: LetterOrder) -> Self {
        InterlacingArrayState { order, levels: Vec::new() }
    }

    /// Builds a state from `(letter, shape)` pairs given in row coordinates.
    pub fn from_shapes(order: LetterOrder, shapes: &[(Letter, Partition)]) -> Result<Self, SamplerError> {
        let mut levels: Vec<Level> = shapes
            .iter()
            .map(|(l, p)| Level {
                letter: *l,
                coords: match l.coord_kind() {
                    CoordKind::Row => p.parts().to_vec(),
                    CoordKind::Col => p.transpose().parts().to_vec(),
                },
            })
            .collect();
        levels.sort_by(|a, b| order.compare(&a.letter, &b.letter));
        if levels.windows(2).any(|w| w[0].letter == w[1].letter) {
            return Err(SamplerError::InvalidConfig("duplicate letter".into()));
        }
        let s = InterlacingArrayState { order, levels };
        s.check_invariants()?;
        Ok(s)
    }

    pub fn order(&self) -> LetterOrder {
        self.order
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Shape of an existing level.
    pub fn shape(&self, letter: &Letter) -> Option<Partition> {
        self.levels.iter().find(|l| l.letter == *letter).map(Level::shape)
    }

    /// Tower value at `letter`: the shape of the largest existing level not above it.
    pub fn tower_shape(&self, letter: &Letter) -> Partition {
        self.levels
            .iter()
            .rev()
            .find(|l| self.order.compare(&l.letter, letter) != Ordering::Greater)
            .map(Level::shape)
            .unwrap_or_default()
    }

    /// λ^max in row coordinates.
    pub fn top_shape(&self) -> Partition {
        self.levels.last().map(Level::shape).unwrap_or_default()
    }

    /// |λ^max|.
    pub fn size(&self) -> u32 {
        self.levels.last().map(|l| l.coords.iter().sum()).unwrap_or(0)
    }

    pub fn plancherel_keys(&self) -> Vec<u64> {
        self.levels
            .iter()
            .filter_map(|l| match l.letter {
                Letter::Plancherel(u) => Some(u),
                _ => None,
            })
            .collect()
    }

    fn next_len(&self, d: usize, len_c: usize) -> usize {
        if d == 0 {
            return 1;
        }
        let c = &self.levels[d - 1];
        if c.letter.coord_kind() == self.levels[d].letter.coord_kind() {
            len_c + 1
        } else {
            c.coords.first().copied().unwrap_or(0) as usize + 1
        }
    }

    /// Padded length of every level.
    pub fn padded_lengths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.levels.len());
        let mut len = 0;
        for d in 0..self.levels.len() {
            len = self.next_len(d, len);
            out.push(len);
        }
        out
    }

    fn view(&self, c: usize, kind: CoordKind, len: usize) -> View<'_> {
        let lv = &self.levels[c];
        if lv.letter.coord_kind() == kind {
            View::Direct(RowView { parts: &lv.coords, len })
        } else {
            View::Transposed(ColView { parts: &lv.coords, len })
        }
    }

    /// Checks trimmed storage, padded lengths and interlacing between neighbors.
    pub fn check_invariants(&self) -> Result<(), SamplerError> {
        let lens = self.padded_lengths();
        for (d, lv) in self.levels.iter().enumerate() {
            if lv.coords.contains(&0) || lv.coords.windows(2).any(|w| w[0] < w[1]) {
                return Err(SamplerError::Invariant(format!("level {d} coordinates {:?}", lv.coords)));
            }
            if lv.coords.len() > lens[d] {
                return Err(SamplerError::Invariant(format!("level {d} exceeds padded length {}", lens[d])));
            }
            if d > 0 {
                let lower = self.view(d - 1, lv.letter.coord_kind(), lens[d] - 1);
                let upper = RowView { parts: &lv.coords, len: lens[d] };
                for i in 1..=lens[d] - 1 {
                    if !(upper.at(i) >= lower.at(i) && lower.at(i) >= upper.at(i + 1)) {
                        return Err(SamplerError::Invariant(format!("levels {} and {d} do not interlace at {i}", d - 1)));
                    }
                }
            }
        }
        for w in self.levels.windows(2) {
            if self.order.compare(&w[0].letter, &w[1].letter) != Ordering::Less {
                return Err(SamplerError::Invariant("levels out of order".into()));
            }
        }
        Ok(())
    }

    /// Ensures a level for `letter` exists, cloning the nearest level below it.
    fn prepare(&mut self, letter: Letter) -> usize {
        let pos = self.levels.partition_point(|l| self.order.compare(&l.letter, &letter) == Ordering::Less);
        if pos < self.levels.len() && self.levels[pos].letter == letter {
            return pos;
        }
        let coords = match pos.checked_sub(1).map(|p| &self.levels[p]) {
            None => Vec::new(),
            Some(below) if below.letter.coord_kind() == letter.coord_kind() => below.coords.clone(),
            Some(below) => transpose_parts(&below.coords),
        };
        self.levels.insert(pos, Level { letter, coords });
        pos
    }

    fn len_at(&self, x: usize) -> usize {
        let mut len = 0;
        for d in 0..=x {
            len = self.next_len(d, len);
        }
        len
    }

    fn initial_target(&self, x: usize, len_x: usize) -> Result<usize, SamplerError> {
        let lv = &self.levels[x];
        match lv.letter.coord_kind() {
            CoordKind::Col => Ok(1),
            CoordKind::Row => {
                let upper = RowView { parts: &lv.coords, len: len_x };
                if x == 0 {
                    let lower = RowView { parts: &[], len: 0 };
                    Ok(next_free(&lower, &upper, len_x)?)
                } else {
                    let lower = self.view(x - 1, CoordKind::Row, len_x - 1);
                    Ok(next_free(&lower, &upper, len_x)?)
                }
            }
        }
    }

    /// Increments coordinate `j` of level `d`.
    fn bump(&mut self, d: usize, j: usize) -> Result<usize, SamplerError> {
        let coords = &mut self.levels[d].coords;
        if j == coords.len() + 1 {
            if j > 1 && coords[j - 2] == 0 {
                return Err(SamplerError::Invariant("bump past trimmed end".into()));
            }
            coords.push(1);
        } else if j >= 1 && j <= coords.len() {
            if j > 1 && coords[j - 2] == coords[j - 1] {
                return Err(SamplerError::Invariant(format!("bump at {j} breaks ordering of level {d}")));
            }
            coords[j - 1] += 1;
        } else {
            return Err(SamplerError::Invariant(format!("bump index {j} out of reach at level {d}")));
        }
        Ok(j)
    }

    fn propagation_step<S: Scalar>(&self, d: usize, j_c: usize, len_d: usize, t: &S) -> Result<Step<S>, SamplerError> {
        let c = &self.levels[d - 1];
        let target = &self.levels[d];
        let kind = target.letter.coord_kind();
        let j = if c.letter.coord_kind() == kind { j_c } else { c.coords[j_c - 1] as usize };
        if j == 0 || j > len_d - 1 {
            return Err(SamplerError::Invariant(format!("moved index {j} outside level {d}")));
        }
        let lower = self.view(d - 1, kind, len_d - 1);
        let upper = RowView { parts: &target.coords, len: len_d };
        if lower.at(j) > upper.at(j) {
            return Ok(Step::Forced(j));
        }
        match kind {
            CoordKind::Row => {
                let r = push_prob_alpha(&lower, &upper, j, t)?;
                let push = next_free(&lower, &upper, j)?;
                Ok(Step::Split { r, push, pull: j + 1 })
            }
            CoordKind::Col => {
                let r = push_prob_beta(&lower, &upper, j, t)?;
                let free = j == 1 || upper.at(j) < lower.at(j - 1);
                if !free && r != S::zero() {
                    return Err(SamplerError::Invariant("donation requested on a column level".into()));
                }
                Ok(Step::Split { r, push: j, pull: j + 1 })
            }
        }
    }

    /// Inserts `letter`, resolving every push/pull split through `decide(ctx, r)`,
    /// which returns true to push.
    pub fn insert_with<S: Scalar>(
        &mut self,
        letter: Letter,
        t: &S,
        mut decide: impl FnMut(&DecisionCtx, &S) -> bool,
    ) -> Result<(), SamplerError> {
        let x = self.prepare(letter);
        let mut len = self.len_at(x);
        let j0 = self.initial_target(x, len)?;
        let mut j = self.bump(x, j0)?;
        for d in x + 1..self.levels.len() {
            let len_d = self.next_len(d, len);
            let step = self.propagation_step(d, j, len_d, t)?;
            let target = match step {
                Step::Forced(jj) => jj,
                Step::Split { r, push, pull } => {
                    let ctx = DecisionCtx { level: d, j: pull - 1 };
                    if decide(&ctx, &r) {
                        push
                    } else {
                        pull
                    }
                }
            };
            j = self.bump(d, target)?;
            len = len_d;
        }
        Ok(())
    }

    /// Random insertion in floating point.
    pub fn insert<R: Rng + ?Sized>(&mut self, letter: Letter, t: f64, rng: &mut R) -> Result<(), SamplerError> {
        self.insert_with(letter, &t, |_, r| rng.random::<f64>() < *r)
    }

    /// All outcomes of one insertion with their probabilities.
    pub fn step_distribution<S: Scalar>(&self, letter: Letter, t: &S) -> Result<Vec<(InterlacingArrayState, S)>, SamplerError> {
        let mut s = self.clone();
        let x = s.prepare(letter);
        let len = s.len_at(x);
        let j0 = s.initial_target(x, len)?;
        let j = s.bump(x, j0)?;
        let mut out = Vec::new();
        expand(s, x + 1, j, len, S::one(), t, &mut out)?;
        Ok(out)
    }

    /// Serializable dump of every level keyed by letter label.
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "levels": self.levels.iter().map(|l| json!({
                "letter": l.letter.label(),
                "coordinates": match l.letter.coord_kind() { CoordKind::Row => "rows", CoordKind::Col => "columns" },
                "coords": l.coords,
                "shape": l.shape(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Replaces Plancherel keys by their ranks 0, 1, ….
    fn canonicalize_plancherel(&mut self) {
        let mut rank = 0;
        for lv in &mut self.levels {
            if let Letter::Plancherel(_) = lv.letter {
                lv.letter = Letter::Plancherel(rank);
                rank += 1;
            }
        }
    }

    /// Respaces canonical Plancherel keys to even values, returning the letter of rank `r`.
    fn plancherel_slot(&mut self, r: u64) -> Letter {
        for lv in &mut self.levels {
            if let Letter::Plancherel(k) = lv.letter {
                lv.letter = Letter::Plancherel(2 * k + 2);
            }
        }
        Letter::Plancherel(2 * r + 1)
    }
}

fn expand<S: Scalar>(
    state: InterlacingArrayState,
    d: usize,
    j_c: usize,
    len_c: usize,
    prob: S,
    t: &S,
    out: &mut Vec<(InterlacingArrayState, S)>,
) -> Result<(), SamplerError> {
    if d == state.levels.len() {
        out.push((state, prob));
        return Ok(());
    }
    let len_d = state.next_len(d, len_c);
    match state.propagation_step(d, j_c, len_d, t)? {
        Step::Forced(j) => {
            let mut s = state;
            let j = s.bump(d, j)?;
            expand(s, d + 1, j, len_d, prob, t, out)
        }
        Step::Split { r, push, pull } => {
            if r != S::zero() {
                let mut s = state.clone();
                let j = s.bump(d, push)?;
                expand(s, d + 1, j, len_d, prob.clone() * r.clone(), t, out)?;
            }
            if r != S::one() {
                let mut s = state;
                let j = s.bump(d, pull)?;
                expand(s, d + 1, j, len_d, prob * (S::one() - r), t, out)?;
            }
            Ok(())
        }
    }
}

/// Floating-point view of a normalized Hall–Littlewood specialization.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatSpec {
    pub alphas: Vec<f64>,
    pub betas: Vec<f64>,
    pub gamma: f64,
    pub t: f64,
}

impl FloatSpec {
    pub fn from_spec(spec: &Specialization) -> Self {
        FloatSpec {
            alphas: spec.alphas.iter().map(Scalar::to_f64).collect(),
            betas: spec.betas.iter().map(Scalar::to_f64).collect(),
            gamma: spec.gamma.to_f64(),
            t: spec.t.to_f64(),
        }
    }

    /// Letter masses: α_i, β_i/(1−t), and the total Plancherel mass γ/(1−t).
    pub fn letter_masses(&self) -> (Vec<f64>, Vec<f64>, f64) {
        let s = 1.0 - self.t;
        (self.alphas.clone(), self.betas.iter().map(|b| b / s).collect(), self.gamma / s)
    }
}

#[derive(Debug, Clone)]
pub struct SamplerConfig {
    /// Normalized spec with q = 0.
    pub spec: Specialization,
    pub order: LetterOrder,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(spec: Specialization, order: LetterOrder, seed: u64) -> Result<Self, SamplerError> {
        if !spec.q.is_zero() {
            return Err(SamplerError::InvalidConfig("sampling needs q = 0".into()));
        }
        if !spec.is_normalized() {
            return Err(SamplerError::InvalidConfig("sampling needs p1 = 1".into()));
        }
        Ok(SamplerConfig { spec, order, seed })
    }

    pub fn float_spec(&self) -> FloatSpec {
        FloatSpec::from_spec(&self.spec)
    }
}

/// Draws a letter; Plancherel values avoid the keys in `taken`.
pub fn sample_letter<R: Rng + ?Sized>(spec: &FloatSpec, taken: &[u64], rng: &mut R) -> Letter {
    let (a, b, g) = spec.letter_masses();
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, w) in a.iter().enumerate() {
        acc += w;
        if u < acc {
            return Letter::Usual(i as u32 + 1);
        }
    }
    for (i, w) in b.iter().enumerate() {
        acc += w;
        if u < acc {
            return Letter::Dual(i as u32 + 1);
        }
    }
    if g > 0.0 {
        return loop {
            let v: u64 = rng.random();
            if !taken.contains(&v) {
                break Letter::Plancherel(v);
            }
        };
    }
    // Rounding left a sliver of mass past the last category.
    if let Some(i) = b.iter().rposition(|w| *w > 0.0) {
        Letter::Dual(i as u32 + 1)
    } else {
        Letter::Usual(a.iter().rposition(|w| *w > 0.0).unwrap_or(0) as u32 + 1)
    }
}

/// Result of [`run`].
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub letters: Vec<Letter>,
    /// λ^max after each step.
    pub shapes: Vec<Partition>,
    pub state: InterlacingArrayState,
}

/// Runs `n` insertions, calling `on_step(step, letter, state)` after each one.
pub fn run_with<R: Rng + ?Sized>(
    config: &SamplerConfig,
    n: u32,
    rng: &mut R,
    mut on_step: impl FnMut(u32, Letter, &InterlacingArrayState),
) -> Result<InterlacingArrayState, SamplerError> {
    let fs = config.float_spec();
    let mut state = InterlacingArrayState::new(config.order);
    for k in 1..=n {
        let taken = if fs.gamma > 0.0 { state.plancherel_keys() } else { Vec::new() };
        let letter = sample_letter(&fs, &taken, rng);
        state.insert(letter, fs.t, rng)?;
        on_step(k, letter, &state);
    }
    Ok(state)
}

pub fn run<R: Rng + ?Sized>(config: &SamplerConfig, n: u32, rng: &mut R) -> Result<Trajectory, SamplerError> {
    let mut letters = Vec::new();
    let mut shapes = Vec::new();
    let state = run_with(config, n, rng, |_, l, s| {
        letters.push(l);
        shapes.push(s.top_shape());
    })?;
    Ok(Trajectory { letters, shapes, state })
}

/// Draws a Poisson(τ) insertion count.
pub fn poisson_count<R: Rng + ?Sized>(tau: f64, rng: &mut R) -> Result<u32, SamplerError> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(SamplerError::InvalidConfig("tau must be finite and nonnegative".into()));
    }
    if tau == 0.0 {
        return Ok(0);
    }
    Ok(Poisson::new(tau).map_err(|e| SamplerError::InvalidConfig(e.to_string()))?.sample(rng) as u32)
}

/// Draws n ~ Poisson(τ) and runs n insertions.
pub fn run_poissonized<R: Rng + ?Sized>(
    config: &SamplerConfig,
    tau: f64,
    rng: &mut R,
) -> Result<InterlacingArrayState, SamplerError> {
    let n = poisson_count(tau, rng)?;
    run_with(config, n, rng, |_, _, _| {})
}

/// Exact law of λ^max after `n` insertions, by enumerating letters and push outcomes.
pub fn exact_distribution(config: &SamplerConfig, n: u32) -> Result<MeasureTable<Rational>, SamplerError> {
    exact_distribution_capped(config, n, DEFAULT_EXACT_CAP)
}

pub fn exact_distribution_capped(config: &SamplerConfig, n: u32, cap: u32) -> Result<MeasureTable<Rational>, SamplerError> {
    if n > cap {
        return Err(SamplerError::CapExceeded { n, cap });
    }
    let spec = &config.spec;
    let t = spec.t.clone();
    let one_t = Rational::one() - t.clone();
    let mut choices: Vec<(Letter, Rational)> = Vec::new();
    for (i, a) in spec.alphas.iter().enumerate() {
        if !a.is_zero() {
            choices.push((Letter::Usual(i as u32 + 1), a.clone()));
        }
    }
    for (i, b) in spec.betas.iter().enumerate() {
        if !b.is_zero() {
            choices.push((Letter::Dual(i as u32 + 1), b.clone() / one_t.clone()));
        }
    }
    let pl_mass = spec.gamma.clone() / one_t;
    let mut dist: HashMap<InterlacingArrayState, Rational> = HashMap::new();
    dist.insert(InterlacingArrayState::new(config.order), Rational::one());
    for _ in 0..n {
        let mut next: HashMap<InterlacingArrayState, Rational> = HashMap::new();
        for (state, p) in &dist {
            let mut push_outcomes = |base: &InterlacingArrayState, letter: Letter, w: Rational| -> Result<(), SamplerError> {
                for (mut s, q) in base.step_distribution(letter, &t)? {
                    s.canonicalize_plancherel();
                    *next.entry(s).or_insert_with(Rational::zero) += p.clone() * w.clone() * q;
                }
                Ok(())
            };
            for (letter, w) in &choices {
                push_outcomes(state, *letter, w.clone())?;
            }
            if !pl_mass.is_zero() {
                let k = state.plancherel_keys().len() as u64;
                let w = pl_mass.clone() / Rational::from_int(k as i64 + 1);
                for r in 0..=k {
                    let mut base = state.clone();
                    let letter = base.plancherel_slot(r);
                    push_outcomes(&base, letter, w.clone())?;
                }
            }
        }
        dist = next;
    }
    let mut weights: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (s, p) in dist {
        *weights.entry(s.top_shape()).or_insert_with(Rational::zero) += p;
    }
    Ok(MeasureTable { n, t, weights })
}

/// One-box growth chain driven by exact oracle transition probabilities.
pub fn univariate_run<R: Rng + ?Sized>(
    basis: &Basis,
    spec: &Specialization,
    n: u32,
    rng: &mut R,
) -> Result<Partition, SamplerError> {
    if n > basis.n_max {
        return Err(SamplerError::CapExceeded { n, cap: basis.n_max });
    }
    let mut lam = Partition::empty();
    for _ in 0..n {
        let probs = basis.growth_probabilities(&lam, spec)?;
        let u: f64 = rng.random();
        let mut acc = 0.0;
        let mut row = probs.last().map(|p| p.0).unwrap_or(1);
        for (j, pr) in &probs {
            acc += pr.to_f64();
            if u < acc {
                row = *j;
                break;
            }
        }
        lam = lam.add_box(row).expect("addable row");
    }
    Ok(lam)
}

/// Shape sequence of classical column insertion.
pub fn column_rsk_reference(word: &[u32]) -> Vec<Partition> {
    let mut columns: Vec<Vec<u32>> = Vec::new();
    let mut out = Vec::with_capacity(word.len());
    for &letter in word {
        let mut x = letter;
        let mut c = 0;
        loop {
            if c == columns.len() {
                columns.push(vec![x]);
                break;
            }
            let col = &mut columns[c];
            match col.iter().position(|&y| y >= x) {
                Some(p) => {
                    std::mem::swap(&mut col[p], &mut x);
                    c += 1;
                }
                None => {
                    col.push(x);
                    break;
                }
            }
        }
        let lens: Vec<u32> = columns.iter().map(|c| c.len() as u32).collect();
        out.push(Partition::new(lens).expect("column lengths decrease").transpose());
    }
    out
}

//! Hall–Littlewood structural quantities: ψ, ψ′, one-box φ′, the factors T_i and S_j,
//! their (t,0) counterparts, and the pushing probabilities used by the sampler.
//!
//! Indices are 1-based throughout. A pair is always `(lower, upper)` with `lower` of
//! length ℓ and `upper` of length ℓ+1 satisfying `upper_i ≥ lower_i ≥ upper_{i+1}`.

use thiserror::Error;

use crate::partitions::{is_horizontal_strip, PaddedVector, Partition};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("{0} is not a horizontal strip over {1}")]
    NotHorizontalStrip(Partition, Partition),
    #[error("row {row} is not addable for {shape}")]
    RowNotAddable { shape: Partition, row: usize },
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("pull target absent at index {0}")]
    PullTargetAbsent(usize),
    #[error("no free index at or below {0}")]
    NoFreeIndex(usize),
    #[error("upper length {upper} must be lower length {lower} plus one")]
    LengthMismatch { lower: usize, upper: usize },
    #[error("coordinates do not interlace at index {0}")]
    NotInterlaced(usize),
    #[error("negative power of q in factor at index {0}")]
    NegativeExponent(usize),
    #[error("multiplicity pattern outside the case table at index {0}")]
    CaseMismatch(usize),
}

/// Read access to a weakly decreasing coordinate vector of fixed length.
#[allow(clippy::len_without_is_empty)]
pub trait Coords {
    fn len(&self) -> usize;
    /// Coordinate `i` for `1 ≤ i ≤ len`.
    fn at(&self, i: usize) -> u32;
    /// Number of coordinates equal to `v`, zeros included.
    fn mult(&self, v: u32) -> usize;
}

impl Coords for PaddedVector {
    fn len(&self) -> usize {
        PaddedVector::len(self)
    }
    fn at(&self, i: usize) -> u32 {
        self.get(i)
    }
    fn mult(&self, v: u32) -> usize {
        self.multiplicity(v)
    }
}

/// Trimmed positive coordinates padded with zeros up to `len`.
#[derive(Clone, Copy, Debug)]
pub struct RowView<'a> {
    pub parts: &'a [u32],
    pub len: usize,
}

impl Coords for RowView<'_> {
    fn len(&self) -> usize {
        self.len
    }
    fn at(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }
    fn mult(&self, v: u32) -> usize {
        if v == 0 {
            return self.len - self.parts.len();
        }
        let a = self.parts.partition_point(|&x| x > v);
        let b = self.parts.partition_point(|&x| x >= v);
        b - a
    }
}

/// The transpose of a trimmed partition, padded with zeros up to `len`.
#[derive(Clone, Copy, Debug)]
pub struct ColView<'a> {
    pub parts: &'a [u32],
    pub len: usize,
}

impl ColView<'_> {
    fn part(&self, k: usize) -> u32 {
        self.parts.get(k - 1).copied().unwrap_or(0)
    }
}

impl Coords for ColView<'_> {
    fn len(&self) -> usize {
        self.len
    }
    fn at(&self, i: usize) -> u32 {
        self.parts.partition_point(|&x| x as usize >= i) as u32
    }
    fn mult(&self, v: u32) -> usize {
        if v == 0 {
            self.len - self.part(1) as usize
        } else {
            (self.part(v as usize) - self.part(v as usize + 1)) as usize
        }
    }
}

fn qpow<S: Scalar>(q: &S, m: u32) -> S {
    if m == 0 {
        S::one()
    } else {
        q.powi(m)
    }
}

/// `1 - q^m t^k` at general parameters.
fn one_minus<S: Scalar>(q: &S, m: u32, t: &S, k: u32) -> S {
    S::one() - qpow(q, m) * qpow(t, k)
}

/// `1 - q^m t^k` at q = 0 with an integer exponent that must be nonnegative.
fn q0_factor<S: Scalar>(m: i64, k: u32, t: &S, at: usize) -> Result<S, KernelError> {
    match m {
        m if m > 0 => Ok(S::one()),
        0 => Ok(t.one_minus_pow(k)),
        _ => Err(KernelError::NegativeExponent(at)),
    }
}

/// ψ_{λ/μ}(0,t).
pub fn psi_hl<S: Scalar>(mu: &Partition, lam: &Partition, t: &S) -> Result<S, KernelError> {
    if !is_horizontal_strip(mu, lam) {
        return Err(KernelError::NotHorizontalStrip(lam.clone(), mu.clone()));
    }
    // f(q^m t^k) at q = 0.
    let f = |m: u32, k: u32| if m > 0 { S::one() } else { t.one_minus_pow(k + 1) };
    let l = mu.len();
    let mut num = S::one();
    let mut den = S::one();
    for i in 1..=l {
        for j in i..=l {
            let k = (j - i) as u32;
            num = num * f(mu.part(i) - mu.part(j), k) * f(lam.part(i) - lam.part(j + 1), k);
            den = den * f(lam.part(i) - mu.part(j), k) * f(mu.part(i) - lam.part(j + 1), k);
        }
    }
    Ok(num / den)
}

/// ψ_{λ/μ}(0,t), or zero when λ/μ is not a horizontal strip.
pub fn psi_hl_or_zero<S: Scalar>(mu: &Partition, lam: &Partition, t: &S) -> S {
    psi_hl(mu, lam, t).unwrap_or_else(|_| S::zero())
}

/// ψ′_{μ+e_j/μ}(q,t).
pub fn psi_prime_box<S: Scalar>(mu: &Partition, j: usize, q: &S, t: &S) -> Result<S, KernelError> {
    let lam = mu.add_box(j).ok_or_else(|| KernelError::RowNotAddable { shape: mu.clone(), row: j })?;
    let mut num = S::one();
    let mut den = S::one();
    for i in 1..j {
        let dm = mu.part(i) - mu.part(j);
        let dl = lam.part(i) - lam.part(j);
        let k = (j - i) as u32;
        num = num * one_minus(q, dm, t, k - 1) * one_minus(q, dl, t, k + 1);
        den = den * one_minus(q, dm, t, k) * one_minus(q, dl, t, k);
    }
    Ok(num / den)
}

/// One-box ψ_{μ+e_j/μ}(q,t), through ψ′ of the transposed box at swapped parameters.
pub fn psi_box<S: Scalar>(mu: &Partition, j: usize, q: &S, t: &S) -> Result<S, KernelError> {
    if mu.add_box(j).is_none() {
        return Err(KernelError::RowNotAddable { shape: mu.clone(), row: j });
    }
    let c = mu.part(j) as usize + 1;
    psi_prime_box(&mu.transpose(), c, t, q)
}

/// φ′_{μ+e_j/μ}(q,t) = (1−q)/(1−t)·ψ_{μ+e_j/μ}(q,t).
pub fn phi_prime_box<S: Scalar>(mu: &Partition, j: usize, q: &S, t: &S) -> Result<S, KernelError> {
    let psi = psi_box(mu, j, q, t)?;
    Ok((S::one() - q.clone()) / (S::one() - t.clone()) * psi)
}

/// One-box φ_{μ+e_j/μ}(q,t) = (1−t)/(1−q)·ψ′_{μ+e_j/μ}(q,t).
pub fn phi_box<S: Scalar>(mu: &Partition, j: usize, q: &S, t: &S) -> Result<S, KernelError> {
    let psi = psi_prime_box(mu, j, q, t)?;
    Ok((S::one() - t.clone()) / (S::one() - q.clone()) * psi)
}

fn check_index(index: usize, max: usize) -> Result<(), KernelError> {
    if index == 0 || index > max {
        Err(KernelError::IndexOutOfRange { index, max })
    } else {
        Ok(())
    }
}

/// T_i(ν̄,λ | 0,t) from the multiplicity case table.
pub fn t_factor<S: Scalar>(lower: &impl Coords, upper: &impl Coords, i: usize, t: &S) -> Result<S, KernelError> {
    check_index(i, lower.len())?;
    let (nu, l0, l1) = (lower.at(i), upper.at(i), upper.at(i + 1));
    if nu == l1 {
        return Ok(S::zero());
    }
    if l0 > nu && l1 + 1 < nu {
        return Ok(S::one());
    }
    let r = lower.mult(nu) - 1;
    let l = lower.mult(nu - 1);
    let a = upper.mult(nu - 1);
    let b = upper.mult(nu);
    let one_t = S::one() - t.clone();
    let p = |e: usize| t.one_minus_pow(e as u32);
    match (a == l, a == l + 1, b == r, b == r + 1) {
        (true, _, true, _) => Ok(p(l + 1) / one_t),
        (true, _, _, true) => Ok(p(l + 1) * p(r + 1) / one_t),
        (_, true, true, _) => Ok(S::one() / one_t),
        (_, true, _, true) => Ok(p(r + 1) / one_t),
        _ => Err(KernelError::CaseMismatch(i)),
    }
}

/// S_j(ν̄,λ | 0,t) from the multiplicity case table.
pub fn s_factor<S: Scalar>(lower: &impl Coords, upper: &impl Coords, j: usize, t: &S) -> Result<S, KernelError> {
    check_index(j, upper.len())?;
    let lam = upper.at(j);
    if j > 1 && lam == lower.at(j - 1) {
        return Ok(S::zero());
    }
    let below = if j <= lower.len() { lower.at(j) } else { 0 };
    if lam > below && (j == 1 || lam + 1 < lower.at(j - 1)) {
        return Ok(S::one());
    }
    let r = upper.mult(lam + 1);
    let l = upper.mult(lam) - 1;
    let a = lower.mult(lam);
    let b = lower.mult(lam + 1);
    let one_t = S::one() - t.clone();
    let p = |e: usize| t.one_minus_pow(e as u32);
    match (a == l, a == l + 1, b == r, b == r + 1) {
        (true, _, true, _) => Ok(p(r + 1) / one_t),
        (true, _, _, true) => Ok(S::one() / one_t),
        (_, true, true, _) => Ok(p(l + 1) * p(r + 1) / one_t),
        (_, true, _, true) => Ok(p(l + 1) / one_t),
        _ => Err(KernelError::CaseMismatch(j)),
    }
}

/// T_i(ν̄,λ | 0,t) from the generic product, reduced factor by factor at q = 0.
pub fn t_factor_product<S: Scalar>(lower: &impl Coords, upper: &impl Coords, i: usize, t: &S) -> Result<S, KernelError> {
    let ell = lower.len();
    check_index(i, ell)?;
    let nb = |k: usize| lower.at(k) as i64;
    let lm = |k: usize| upper.at(k) as i64;
    if nb(i) == lm(i + 1) {
        return Ok(S::zero());
    }
    let f = |m: i64, k: usize| q0_factor::<S>(m, k as u32, t, i);
    let mut num = f(lm(i) - nb(i), 1)? * f(nb(i) - lm(i + 1), 0)?;
    let mut den = f(lm(i) - nb(i) + 1, 0)? * f(nb(i) - 1 - lm(i + 1), 1)?;
    for r in 1..i {
        let d = i - r;
        num = num * f(lm(r) - nb(i), d + 1)? * f(nb(r) - nb(i) + 1, d - 1)?;
        den = den * f(lm(r) - nb(i) + 1, d)? * f(nb(r) - nb(i), d)?;
    }
    for s in i + 1..=ell {
        let d = s - i;
        num = num * f(nb(i) - nb(s) - 1, d + 1)? * f(nb(i) - lm(s + 1), d)?;
        den = den * f(nb(i) - nb(s), d)? * f(nb(i) - lm(s + 1) - 1, d + 1)?;
    }
    Ok(num / den)
}

/// S_j(ν̄,λ | 0,t) from the generic product, reduced factor by factor at q = 0.
pub fn s_factor_product<S: Scalar>(lower: &impl Coords, upper: &impl Coords, j: usize, t: &S) -> Result<S, KernelError> {
    let ell = lower.len();
    check_index(j, ell + 1)?;
    let nb = |k: usize| lower.at(k) as i64;
    let lm = |k: usize| upper.at(k) as i64;
    if j > 1 && lm(j) == nb(j - 1) {
        return Ok(S::zero());
    }
    let f = |m: i64, k: usize| q0_factor::<S>(m, k as u32, t, j);
    let mut num = S::one();
    let mut den = S::one();
    for r in 1..j {
        let d = j - r;
        num = num * f(nb(r) - lm(j), d - 1)? * f(lm(r) - lm(j) - 1, d + 1)?;
        den = den * f(nb(r) - lm(j) - 1, d)? * f(lm(r) - lm(j), d)?;
    }
    for s in j..=ell {
        let d = s - j;
        num = num * f(lm(j) - lm(s + 1) + 1, d)? * f(lm(j) - nb(s), d + 1)?;
        den = den * f(lm(j) - lm(s + 1), d + 1)? * f(lm(j) - nb(s) + 1, d)?;
    }
    Ok(num / den)
}

/// T_i through the ratio ψ_{λ/ν̄−e_i}/ψ_{λ/ν̄} times ψ′_{ν̄/ν̄−e_i}, all at (0,t).
pub fn t_factor_via_psi<S: Scalar>(lower: &Partition, upper: &Partition, i: usize, t: &S) -> Result<S, KernelError> {
    let base = psi_hl::<S>(lower, upper, t)?;
    let Some(smaller) = lower.remove_box(i) else {
        return Ok(S::zero());
    };
    let num = psi_hl_or_zero::<S>(&smaller, upper, t);
    if num == S::zero() {
        return Ok(S::zero());
    }
    Ok(num / base * psi_prime_box(&smaller, i, &S::zero(), t)?)
}

/// S_j through the ratio ψ_{λ+e_j/ν̄}/ψ_{λ/ν̄} times ψ′_{λ+e_j/λ}, all at (0,t).
pub fn s_factor_via_psi<S: Scalar>(lower: &Partition, upper: &Partition, j: usize, t: &S) -> Result<S, KernelError> {
    let base = psi_hl::<S>(lower, upper, t)?;
    let Some(bigger) = upper.add_box(j) else {
        return Ok(S::zero());
    };
    let num = psi_hl_or_zero::<S>(lower, &bigger, t);
    if num == S::zero() {
        return Ok(S::zero());
    }
    Ok(num / base * psi_prime_box(upper, j, &S::zero(), t)?)
}

/// T_i(ν̄,λ | t,0) closed form.
pub fn t_factor_swapped<S: Scalar>(lower: &impl Coords, upper: &impl Coords, i: usize, t: &S) -> Result<S, KernelError> {
    check_index(i, lower.len())?;
    let (nu, l0, l1) = (lower.at(i), upper.at(i), upper.at(i + 1));
    let mut v = t.one_minus_pow(nu - l1);
    if i > 1 {
        v = v * t.one_minus_pow(lower.at(i - 1) - nu + 1);
    }
    Ok(v / t.one_minus_pow(l0 - nu + 1))
}

/// S_j(ν̄,λ | t,0) closed form.
pub fn s_factor_swapped<S: Scalar>(lower: &impl Coords, upper: &impl Coords, j: usize, t: &S) -> Result<S, KernelError> {
    let ell = lower.len();
    check_index(j, ell + 1)?;
    let lam = upper.at(j);
    let mut v = S::one();
    if j > 1 {
        v = v * t.one_minus_pow(lower.at(j - 1) - lam);
    }
    if j < ell + 1 {
        v = v * t.one_minus_pow(lam - upper.at(j + 1) + 1) / t.one_minus_pow(lam - lower.at(j) + 1);
    }
    Ok(v)
}

fn check_pull(lower: &impl Coords, upper: &impl Coords, j: usize) -> Result<(), KernelError> {
    check_index(j, lower.len())?;
    if lower.at(j) <= upper.at(j + 1) {
        return Err(KernelError::PullTargetAbsent(j));
    }
    Ok(())
}

/// r_j^{+∞}(ν̄,λ | 0,t): probability that the move of lower particle j is pushed
/// (to the next free upper particle at or below j) rather than pulled to j+1.
pub fn push_prob_alpha<S: Scalar>(lower: &impl Coords, upper: &impl Coords, j: usize, t: &S) -> Result<S, KernelError> {
    check_pull(lower, upper, j)?;
    let v = lower.at(j) - 1;
    let d = lower.mult(v);
    let u = upper.mult(v);
    if u == d {
        Ok((S::one() - t.clone()) / t.one_minus_pow(d as u32 + 1))
    } else if u == d + 1 {
        Ok(S::one() - t.clone())
    } else {
        Err(KernelError::CaseMismatch(j))
    }
}

/// r_j^1(ν̄,λ | t,0) closed form.
pub fn push_prob_beta<S: Scalar>(lower: &impl Coords, upper: &impl Coords, j: usize, t: &S) -> Result<S, KernelError> {
    check_pull(lower, upper, j)?;
    let (nu, lam) = (lower.at(j), upper.at(j));
    let mut v = t.powi(lam - nu + 1);
    if j > 1 {
        let prev = lower.at(j - 1);
        v = v * t.one_minus_pow(prev - lam) / t.one_minus_pow(prev - nu + 1);
    }
    Ok(v)
}

/// r_j^h = (Σ_{i≤j} S_i − Σ_{i<j} T_i − 1_{j≥h}) / T_j for caller-supplied factors.
pub fn push_prob_from_factors<S: Scalar>(
    j: usize,
    h: Option<usize>,
    t_of: impl Fn(usize) -> Result<S, KernelError>,
    s_of: impl Fn(usize) -> Result<S, KernelError>,
) -> Result<S, KernelError> {
    let mut acc = S::zero();
    for i in 1..=j {
        acc = acc + s_of(i)?;
    }
    for i in 1..j {
        acc = acc - t_of(i)?;
    }
    if h.is_some_and(|h| j >= h) {
        acc = acc - S::one();
    }
    let tj = t_of(j)?;
    if tj == S::zero() {
        return Err(KernelError::PullTargetAbsent(j));
    }
    Ok(acc / tj)
}

/// Indices of upper particles free to move right: 1 and every j with λ_j < ν̄_{j−1}.
pub fn free_indices(lower: &impl Coords, upper: &impl Coords) -> Vec<usize> {
    (1..=upper.len()).filter(|&j| j == 1 || upper.at(j) < lower.at(j - 1)).collect()
}

/// max{ j free : j ≤ m }.
pub fn next_free(lower: &impl Coords, upper: &impl Coords, m: usize) -> Result<usize, KernelError> {
    let top = m.min(upper.len());
    (1..=top).rev().find(|&j| j == 1 || upper.at(j) < lower.at(j - 1)).ok_or(KernelError::NoFreeIndex(m))
}

/// An interlaced pair lower ≺_h upper with explicit lengths ℓ and ℓ+1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacedPair {
    pub lower: PaddedVector,
    pub upper: PaddedVector,
}

impl InterlacedPair {
    pub fn new(lower: PaddedVector, upper: PaddedVector) -> Result<Self, KernelError> {
        if upper.len() != lower.len() + 1 {
            return Err(KernelError::LengthMismatch { lower: lower.len(), upper: upper.len() });
        }
        for i in 1..=lower.len() {
            if !(upper.get(i) >= lower.get(i) && lower.get(i) >= upper.get(i + 1)) {
                return Err(KernelError::NotInterlaced(i));
            }
        }
        Ok(InterlacedPair { lower, upper })
    }

    /// Builds a pair from raw coordinate lists.
    pub fn from_coords(lower: &[u32], upper: &[u32]) -> Result<Self, KernelError> {
        let lo = PaddedVector::new(lower.to_vec()).map_err(|_| KernelError::NotInterlaced(0))?;
        let up = PaddedVector::new(upper.to_vec()).map_err(|_| KernelError::NotInterlaced(0))?;
        InterlacedPair::new(lo, up)
    }

    /// ℓ, the lower length.
    pub fn ell(&self) -> usize {
        self.lower.len()
    }

    pub fn t_factor<S: Scalar>(&self, i: usize, t: &S) -> Result<S, KernelError> {
        t_factor(&self.lower, &self.upper, i, t)
    }
    pub fn s_factor<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        s_factor(&self.lower, &self.upper, j, t)
    }
    pub fn t_factor_product<S: Scalar>(&self, i: usize, t: &S) -> Result<S, KernelError> {
        t_factor_product(&self.lower, &self.upper, i, t)
    }
    pub fn s_factor_product<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        s_factor_product(&self.lower, &self.upper, j, t)
    }
    pub fn t_factor_swapped<S: Scalar>(&self, i: usize, t: &S) -> Result<S, KernelError> {
        t_factor_swapped(&self.lower, &self.upper, i, t)
    }
    pub fn s_factor_swapped<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        s_factor_swapped(&self.lower, &self.upper, j, t)
    }
    pub fn push_prob_alpha<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        push_prob_alpha(&self.lower, &self.upper, j, t)
    }
    pub fn push_prob_beta<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        push_prob_beta(&self.lower, &self.upper, j, t)
    }
    /// r_j^{+∞} via the sum of case-table factors.
    pub fn push_prob_alpha_via_sums<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        push_prob_from_factors(j, None, |i| self.t_factor(i, t), |i| self.s_factor(i, t))
    }
    /// r_j^1 via the sum of (t,0) factors.
    pub fn push_prob_beta_via_sums<S: Scalar>(&self, j: usize, t: &S) -> Result<S, KernelError> {
        push_prob_from_factors(j, Some(1), |i| self.t_factor_swapped(i, t), |i| self.s_factor_swapped(i, t))
    }
    pub fn free_indices(&self) -> Vec<usize> {
        free_indices(&self.lower, &self.upper)
    }
    pub fn next_free(&self, m: usize) -> Result<usize, KernelError> {
        next_free(&self.lower, &self.upper, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn pair(lo: &[u32], up: &[u32]) -> InterlacedPair {
        InterlacedPair::from_coords(lo, up).unwrap()
    }
    fn one() -> Rational {
        rat(1, 1)
    }

    #[test]
    fn psi_examples() {
        let t = rat(1, 3);
        assert_eq!(psi_hl(&p(&[3, 1]), &p(&[3, 1]), &t).unwrap(), one());
        assert_eq!(psi_hl(&p(&[1]), &p(&[2]), &t).unwrap(), one() - t.clone());
        assert_eq!(psi_hl(&p(&[1]), &p(&[1, 1]), &t).unwrap(), one());
        assert!(psi_hl::<Rational>(&p(&[2]), &p(&[1, 1]), &t).is_err());
    }

    #[test]
    fn psi_prime_examples() {
        let (q, t) = (rat(1, 5), rat(2, 7));
        assert_eq!(psi_prime_box(&p(&[]), 1, &q, &t).unwrap(), one());
        let z = rat(0, 1);
        assert_eq!(psi_prime_box(&p(&[1]), 2, &z, &t).unwrap(), one() + t.clone());
        assert_eq!(psi_prime_box(&p(&[2, 1]), 2, &z, &t).unwrap(), one() + t.clone());
        assert!(psi_prime_box(&p(&[1]), 3, &z, &t).is_err());
    }

    #[test]
    fn phi_prime_examples() {
        let t = rat(1, 3);
        let z = rat(0, 1);
        assert_eq!(phi_prime_box(&p(&[]), 1, &z, &t).unwrap(), one() / (one() - t.clone()));
        assert_eq!(phi_prime_box(&p(&[1]), 1, &z, &t).unwrap(), one());
        // q = t: prefactor 1
        let s = rat(2, 5);
        let mu = p(&[2, 1]);
        for j in [1, 2, 3] {
            assert_eq!(phi_prime_box(&mu, j, &s, &s).unwrap(), psi_box(&mu, j, &s, &s).unwrap());
        }
    }

    #[test]
    fn t_and_s_examples() {
        let t = rat(1, 3);
        assert_eq!(pair(&[1], &[1, 1]).t_factor(1, &t).unwrap(), rat(0, 1));
        assert_eq!(pair(&[1], &[2, 0]).t_factor(1, &t).unwrap(), one() / (one() - t.clone()));
        assert_eq!(pair(&[1], &[2, 0]).t_factor_product(1, &t).unwrap(), one() / (one() - t.clone()));
        assert_eq!(pair(&[3, 1], &[4, 1, 0]).t_factor(1, &t).unwrap(), one());
        assert_eq!(pair(&[3, 1], &[4, 1, 0]).t_factor_product(1, &t).unwrap(), one());
        assert_eq!(pair(&[3, 2], &[4, 3, 1]).t_factor(1, &t).unwrap(), rat(0, 1));
        assert_eq!(pair(&[3, 2], &[4, 3, 1]).t_factor_product(1, &t).unwrap(), rat(0, 1));
        assert_eq!(pair(&[1], &[1, 0]).s_factor(1, &t).unwrap(), one() - t.clone());
        assert_eq!(pair(&[1], &[1, 0]).s_factor_product(1, &t).unwrap(), one() - t.clone());
        assert_eq!(pair(&[2, 1], &[3, 2, 0]).s_factor(2, &t).unwrap(), rat(0, 1));
        assert_eq!(pair(&[4, 1], &[5, 2, 0]).s_factor(2, &t).unwrap(), one());
        assert!(pair(&[1], &[1, 0]).t_factor::<Rational>(2, &t).is_err());
        assert!(pair(&[1], &[1, 0]).s_factor::<Rational>(3, &t).is_err());
    }

    #[test]
    fn swapped_examples() {
        let t = rat(1, 3);
        assert_eq!(pair(&[1], &[1, 1]).t_factor_swapped(1, &t).unwrap(), rat(0, 1));
        assert_eq!(pair(&[2], &[3, 0]).t_factor_swapped(1, &t).unwrap(), one());
        assert_eq!(pair(&[2], &[2, 1]).s_factor_swapped(1, &t).unwrap(), one() + t.clone());
    }

    #[test]
    fn push_alpha_examples() {
        let t = rat(2, 5);
        // D = 2, U = D
        let pr = pair(&[3, 2, 2], &[3, 2, 2, 1]).push_prob_alpha(1, &t).unwrap();
        assert_eq!(pr, (one() - t.clone()) / t.one_minus_pow(3));
        let pr = pair(&[9, 3, 2], &[10, 6, 2, 1]).push_prob_alpha(2, &t).unwrap();
        assert_eq!(pr, one() / (one() + t.clone()));
        let pr = pair(&[3, 2], &[4, 3, 1]).push_prob_alpha(2, &t).unwrap();
        assert_eq!(pr, one() - t.clone());
        assert!(pair(&[1], &[1, 1]).push_prob_alpha::<Rational>(1, &t).is_err());
    }

    #[test]
    fn push_beta_examples() {
        let t = rat(2, 5);
        let pr = pair(&[5, 4, 2, 2, 1, 0, 0, 0], &[5, 4, 2, 2, 1, 0, 0, 0, 0]).push_prob_beta(5, &t).unwrap();
        assert_eq!(pr, t.clone() / (one() + t.clone()));
        let pr = pair(&[5, 3, 2, 1, 0], &[5, 4, 2, 1, 0, 0]).push_prob_beta(2, &t).unwrap();
        assert_eq!(pr, t.powi(2) / (one() + t.clone() + t.powi(2)));
        let pr = pair(&[5, 4, 2, 2, 2, 0, 0, 0, 0], &[5, 4, 2, 2, 2, 0, 0, 0, 0, 0]).push_prob_beta(5, &t).unwrap();
        assert_eq!(pr, rat(0, 1));
    }

    #[test]
    fn next_free_examples() {
        // Free set {1,2,4}.
        let pr = pair(&[5, 3, 3], &[6, 4, 3, 2]);
        assert_eq!(pr.free_indices(), vec![1, 2, 4]);
        assert_eq!(pr.next_free(usize::MAX).unwrap(), 4);
        assert_eq!(pr.next_free(3).unwrap(), 2);
        let strict = pair(&[5, 3, 1], &[6, 4, 2, 0]);
        for m in 1..=4 {
            assert_eq!(strict.next_free(m).unwrap(), m);
        }
    }

    #[test]
    fn views_match_padded_vectors() {
        let lam = p(&[5, 3, 3, 2]);
        let row = RowView { parts: lam.parts(), len: 6 };
        let pv = lam.padded(6).unwrap();
        for i in 1..=6 {
            assert_eq!(row.at(i), pv.get(i));
        }
        for v in 0..7 {
            assert_eq!(row.mult(v), pv.multiplicity(v));
        }
        let col = ColView { parts: lam.parts(), len: 7 };
        let tv = lam.transpose().padded(7).unwrap();
        for i in 1..=7 {
            assert_eq!(col.at(i), tv.get(i));
        }
        for v in 0..8 {
            assert_eq!(col.mult(v), tv.multiplicity(v), "v={v}");
        }
    }
}

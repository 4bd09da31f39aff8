//! Integer partitions, Young diagrams, strips and enumeration.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default upper bound on `n` for [`enumerate_partitions`].
pub const DEFAULT_ENUMERATION_CAP: u32 = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("coordinates must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition of length {len} does not fit in {target} coordinates")]
    TooLong { len: usize, target: usize },
    #[error("enumeration of Y_{n} exceeds the cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
}

/// A partition stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;
    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Validates weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Trims trailing zeros, then validates.
    pub fn from_padded(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_vec_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// λ_i for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of parts equal to `v` (positive `v` only).
    pub fn multiplicity(&self, v: u32) -> usize {
        self.0.iter().filter(|&&x| x == v).count()
    }

    pub fn transpose(&self) -> Partition {
        Partition(transpose_parts(&self.0))
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// Adds a box in 1-based row `row`, if the result is a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 {
            return None;
        }
        if row > 1 && self.part(row) >= self.part(row - 1) {
            return None;
        }
        let mut v = self.0.clone();
        if row == v.len() + 1 {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Some(Partition(v))
    }

    /// Removes a box from 1-based row `row`, if the result is a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut v = self.0.clone();
        v[row - 1] -= 1;
        if v[row - 1] == 0 {
            v.pop();
        }
        Some(Partition(v))
    }

    /// Rows where a box can be added and rows where one can be removed (1-based).
    pub fn boundary_rows(&self) -> (Vec<usize>, Vec<usize>) {
        let l = self.len();
        let addable = (1..=l + 1).filter(|&i| i == 1 || self.part(i) < self.part(i - 1)).collect();
        let removable = (1..=l).filter(|&i| self.part(i) > self.part(i + 1)).collect();
        (addable, removable)
    }

    pub fn padded(&self, len: usize) -> Result<PaddedVector, PartitionError> {
        PaddedVector::from_partition(self, len)
    }

    /// Whole-diagram comparison in lexicographic order on parts.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        for i in 1..=n {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Dominance order: partial sums of `self` dominate those of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return false;
            }
        }
        true
    }
}

pub(crate) fn transpose_parts(parts: &[u32]) -> Vec<u32> {
    let first = parts.first().copied().unwrap_or(0) as usize;
    let mut out = Vec::with_capacity(first);
    let mut k = parts.len();
    for c in 1..=first as u32 {
        while k > 0 && parts[k - 1] < c {
            k -= 1;
        }
        out.push(k as u32);
    }
    out
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by size, then reverse-lexicographically, so `(n)` precedes `(1^n)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.lex_cmp(self))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripRelation {
    NotContained,
    Contained,
    Horizontal,
    Vertical,
    Both,
}

impl StripRelation {
    pub fn is_horizontal(self) -> bool {
        matches!(self, StripRelation::Horizontal | StripRelation::Both)
    }
    pub fn is_vertical(self) -> bool {
        matches!(self, StripRelation::Vertical | StripRelation::Both)
    }
}

/// μ ≺_h λ: λ_i ≥ μ_i ≥ λ_{i+1} for all i.
pub fn is_horizontal_strip(mu: &Partition, lam: &Partition) -> bool {
    if lam.len() > mu.len() + 1 {
        return false;
    }
    (1..=lam.len()).all(|i| lam.part(i) >= mu.part(i) && mu.part(i) >= lam.part(i + 1)) && mu.len() <= lam.len()
}

pub fn is_vertical_strip(mu: &Partition, lam: &Partition) -> bool {
    lam.contains(mu) && (1..=lam.len()).all(|i| lam.part(i) - mu.part(i) <= 1)
}

pub fn strip_relation(mu: &Partition, lam: &Partition) -> StripRelation {
    if !lam.contains(mu) {
        return StripRelation::NotContained;
    }
    match (is_horizontal_strip(mu, lam), is_vertical_strip(mu, lam)) {
        (true, true) => StripRelation::Both,
        (true, false) => StripRelation::Horizontal,
        (false, true) => StripRelation::Vertical,
        (false, false) => StripRelation::Contained,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StripKind {
    Horizontal,
    Vertical,
}

/// All partitions of `n` in reverse-lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>, PartitionError> {
    enumerate_partitions_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_partitions_capped(n: u32, cap: u32) -> Result<Vec<Partition>, PartitionError> {
    if n > cap {
        return Err(PartitionError::CapExceeded { n, cap });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    Ok(out)
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: u32) -> Result<Vec<Partition>, PartitionError> {
    let mut all = Vec::new();
    for k in 0..=n {
        all.extend(enumerate_partitions(k)?);
    }
    Ok(all)
}

/// All λ ⊇ μ with |λ/μ| = size forming a strip of the given kind, in reverse-lex order.
pub fn enumerate_strips(mu: &Partition, kind: StripKind, size: u32) -> Vec<Partition> {
    match kind {
        StripKind::Horizontal => {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            horizontal_rec(mu, 1, size, &mut cur, &mut out);
            out
        }
        StripKind::Vertical => {
            let mut out: Vec<Partition> =
                enumerate_strips(&mu.transpose(), StripKind::Horizontal, size).into_iter().map(|p| p.transpose()).collect();
            out.sort();
            out
        }
    }
}

fn horizontal_rec(mu: &Partition, i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let lo = mu.part(i);
    if i > mu.len() + 1 {
        if rest == 0 {
            out.push(Partition::from_padded(cur.clone()).expect("strip is a partition"));
        }
        return;
    }
    let hi = if i == 1 { lo + rest } else { (lo + rest).min(mu.part(i - 1)) };
    for v in (lo..=hi).rev() {
        cur.push(v);
        horizontal_rec(mu, i + 1, rest - (v - lo), cur, out);
        cur.pop();
    }
}

/// All μ with μ ≺_h λ.
pub fn horizontal_strips_below(lam: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(lam: &Partition, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > lam.len() {
            out.push(Partition::from_padded(cur.clone()).expect("interlaced"));
            return;
        }
        for v in (lam.part(i + 1)..=lam.part(i)).rev() {
            cur.push(v);
            rec(lam, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(lam, 1, &mut cur, &mut out);
    out
}

/// A weakly decreasing vector of nonnegative integers of explicit length.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PaddedVector {
    coords: Vec<u32>,
}

impl PaddedVector {
    pub fn new(coords: Vec<u32>) -> Result<Self, PartitionError> {
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(coords));
        }
        Ok(PaddedVector { coords })
    }

    pub fn from_partition(p: &Partition, len: usize) -> Result<Self, PartitionError> {
        if p.len() > len {
            return Err(PartitionError::TooLong { len: p.len(), target: len });
        }
        let mut coords = p.0.clone();
        coords.resize(len, 0);
        Ok(PaddedVector { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// 1-based coordinate access.
    pub fn get(&self, i: usize) -> u32 {
        self.coords[i - 1]
    }

    /// Number of coordinates equal to `v`, zeros included.
    pub fn multiplicity(&self, v: u32) -> usize {
        self.coords.iter().filter(|&&x| x == v).count()
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_padded(self.coords.clone()).expect("decreasing coordinates")
    }
}

impl fmt::Debug for PaddedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5, 3, 3, 2]).transpose(), p(&[4, 4, 3, 1, 1]));
        assert_eq!(p(&[]).transpose(), p(&[]));
        assert_eq!(p(&[4]).transpose(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(strip_relation(&p(&[1]), &p(&[2, 1])), StripRelation::Both);
        assert_eq!(strip_relation(&p(&[1]), &p(&[3, 1])), StripRelation::Horizontal);
        assert_eq!(strip_relation(&p(&[2]), &p(&[1])), StripRelation::NotContained);
        assert_eq!(strip_relation(&p(&[1]), &p(&[3, 2])), StripRelation::Contained);
        assert_eq!(strip_relation(&p(&[1]), &p(&[1, 1, 1])), StripRelation::Vertical);
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(p(&[5, 3, 3]).boundary_rows(), (vec![1, 2, 4], vec![1, 3]));
        assert_eq!(p(&[]).boundary_rows(), (vec![1], vec![]));
        assert_eq!(p(&[2, 2]).boundary_rows(), (vec![1, 3], vec![2]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![p(&[])]);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert_eq!(enumerate_partitions(31), Err(PartitionError::CapExceeded { n: 31, cap: 30 }));
        let four = enumerate_partitions(4).unwrap();
        assert_eq!(four, vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
    }

    #[test]
    fn strip_enumeration_examples() {
        assert_eq!(enumerate_strips(&p(&[]), StripKind::Horizontal, 3), vec![p(&[3])]);
        assert_eq!(enumerate_strips(&p(&[]), StripKind::Vertical, 3), vec![p(&[1, 1, 1])]);
        let got = enumerate_strips(&p(&[2, 1]), StripKind::Horizontal, 2);
        let brute: Vec<_> =
            enumerate_partitions(5).unwrap().into_iter().filter(|l| is_horizontal_strip(&p(&[2, 1]), l)).collect();
        assert_eq!(got, brute);
        assert_eq!(got, vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]);
    }

    #[test]
    fn padded_multiplicity_counts_zeros() {
        let v = p(&[2, 1]).padded(4).unwrap();
        assert_eq!(v.coords(), &[2, 1, 0, 0]);
        assert_eq!(v.multiplicity(0), 2);
        assert_eq!(v.to_partition(), p(&[2, 1]));
        assert!(p(&[2, 1]).padded(1).is_err());
        assert!(PaddedVector::new(vec![1, 2]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let lam = p(&[5, 3, 3, 2]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, "[5,3,3,2]");
        assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), lam);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}

//! Exact symmetric-function ground truth: Macdonald / Hall–Littlewood P and Q in the
//! power-sum basis, specializations, Plancherel values and measure weights.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::hl_kernel::{phi_prime_box, psi_hl, psi_prime_box, KernelError};
use crate::partitions::{enumerate_partitions, horizontal_strips_below, Partition, PartitionError};
use crate::scalar::{format_rational, Rational, Scalar};

/// Default degree cap for exact basis tables.
pub const DEFAULT_BASIS_CAP: u32 = 10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("degree {n} exceeds the cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("partition of size {size} exceeds basis degree {max}")]
    DegreeExceeded { size: u32, max: u32 },
    #[error("invalid specialization: {0}")]
    InvalidSpec(String),
    #[error("p1 of the specialization is zero")]
    ZeroP1,
    #[error("specialization (q,t) does not match the basis")]
    ParameterMismatch,
    #[error("operation needs a pure-alpha specialization")]
    NotPureAlpha,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    P,
    Q,
}

/// A specialization (α; β; γ) together with the parameters (q,t).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
    pub gamma: Rational,
    pub q: Rational,
    pub t: Rational,
}

impl Specialization {
    pub fn new(
        alphas: Vec<Rational>,
        betas: Vec<Rational>,
        gamma: Rational,
        q: Rational,
        t: Rational,
    ) -> Result<Self, OracleError> {
        let zero = Rational::zero();
        let one = Rational::one();
        let dec = |v: &[Rational]| v.windows(2).all(|w| w[0] >= w[1]);
        if alphas.iter().chain(&betas).any(|x| *x < zero) || gamma < zero {
            return Err(OracleError::InvalidSpec("parameters must be nonnegative".into()));
        }
        if !dec(&alphas) || !dec(&betas) {
            return Err(OracleError::InvalidSpec("alphas and betas must be weakly decreasing".into()));
        }
        if t < zero || t >= one || q < zero || q >= one {
            return Err(OracleError::InvalidSpec("q and t must lie in [0,1)".into()));
        }
        let s = Specialization { alphas, betas, gamma, q, t };
        if s.p1().is_zero() {
            return Err(OracleError::ZeroP1);
        }
        Ok(s)
    }

    /// Hall–Littlewood specialization (q = 0); alphas and betas are sorted.
    pub fn hl(mut alphas: Vec<Rational>, mut betas: Vec<Rational>, gamma: Rational, t: Rational) -> Result<Self, OracleError> {
        alphas.sort_by(|a, b| b.cmp(a));
        betas.sort_by(|a, b| b.cmp(a));
        alphas.retain(|a| !a.is_zero());
        betas.retain(|b| !b.is_zero());
        Specialization::new(alphas, betas, gamma, Rational::zero(), t)
    }

    pub fn is_pure_alpha(&self) -> bool {
        self.betas.is_empty() && self.gamma.is_zero()
    }

    pub fn p1(&self) -> Rational {
        let sa: Rational = self.alphas.iter().cloned().sum();
        let sb: Rational = self.betas.iter().cloned().sum();
        let one = Rational::one();
        sa + (self.gamma.clone() + sb) * (one.clone() - self.q.clone()) / (one - self.t.clone())
    }

    /// Rescales α, β, γ so that p₁ = 1; returns the new spec and the factor applied.
    pub fn normalized(&self) -> (Specialization, Rational) {
        let c = Rational::one() / self.p1();
        let scale = |v: &[Rational]| v.iter().map(|x| x.clone() * c.clone()).collect();
        let s = Specialization {
            alphas: scale(&self.alphas),
            betas: scale(&self.betas),
            gamma: self.gamma.clone() * c.clone(),
            q: self.q.clone(),
            t: self.t.clone(),
        };
        (s, c)
    }

    pub fn is_normalized(&self) -> bool {
        self.p1().is_one()
    }

    pub fn to_json(&self) -> Value {
        let f = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        json!({
            "alpha": f(&self.alphas),
            "beta": f(&self.betas),
            "gamma": format_rational(&self.gamma),
            "q": format_rational(&self.q),
            "t": format_rational(&self.t),
        })
    }
}

/// p₁..p_{k_max} of the specialization; index 0 of the result holds p₁.
pub fn power_sum_values(spec: &Specialization, k_max: u32) -> Vec<Rational> {
    let one = Rational::one();
    (1..=k_max)
        .map(|k| {
            if k == 1 {
                return spec.p1();
            }
            let sa: Rational = spec.alphas.iter().map(|a| a.powi(k)).sum();
            let sb: Rational = spec.betas.iter().map(|b| b.powi(k)).sum();
            let sign = if k % 2 == 1 { one.clone() } else { -one.clone() };
            sa + sign * spec.q.one_minus_pow(k) / spec.t.one_minus_pow(k) * sb
        })
        .collect()
}

/// Power sums of the Plancherel specialization with γ = 1.
pub fn plancherel_power_sums(q: &Rational, t: &Rational, k_max: u32) -> Vec<Rational> {
    (1..=k_max)
        .map(|k| if k == 1 { (Rational::one() - q.clone()) / (Rational::one() - t.clone()) } else { Rational::zero() })
        .collect()
}

/// Σ c_μ p_μ with all μ of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpansion {
    pub degree: u32,
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl SymExpansion {
    pub fn zero(degree: u32) -> Self {
        SymExpansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SymExpansion, c: &Rational) {
        for (mu, v) in &other.coeffs {
            let e = self.coeffs.entry(mu.clone()).or_insert_with(Rational::zero);
            *e += v.clone() * c.clone();
        }
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    /// Value under a specialization with the given p₁, p₂, … (index 0 is p₁).
    pub fn eval(&self, psums: &[Rational]) -> Rational {
        self.coeffs.iter().map(|(mu, c)| mu.parts().iter().fold(c.clone(), |acc, &k| acc * psums[k as usize - 1].clone())).sum()
    }

    /// ⟨self, other⟩_{q,t}.
    pub fn inner(&self, other: &SymExpansion, q: &Rational, t: &Rational) -> Rational {
        self.coeffs.iter().filter_map(|(mu, a)| other.coeffs.get(mu).map(|b| a.clone() * b.clone() * z_qt(mu, q, t))).sum()
    }
}

/// z_λ = ∏ i^{m_i} m_i!.
pub fn z_classical(lam: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let p = lam.parts();
    while i < p.len() {
        let v = p[i];
        let mut m = 0u32;
        while i < p.len() && p[i] == v {
            m += 1;
            i += 1;
            z *= BigInt::from(v) * BigInt::from(m);
        }
    }
    z
}

/// z_λ(q,t) = z_λ ∏ (1−q^{λ_i})/(1−t^{λ_i}).
pub fn z_qt(lam: &Partition, q: &Rational, t: &Rational) -> Rational {
    lam.parts().iter().fold(Rational::from_integer(z_classical(lam)), |acc, &k| acc * q.one_minus_pow(k) / t.one_minus_pow(k))
}

/// Number of maps from the parts of `mu` to the rows of `lam` whose fibers sum to the row lengths.
fn p_to_m_count(mu: &[u32], caps: Vec<u32>, memo: &mut HashMap<(Vec<u32>, Vec<u32>), BigInt>) -> BigInt {
    if mu.is_empty() {
        return if caps.iter().all(|&c| c == 0) { BigInt::one() } else { BigInt::zero() };
    }
    let key = (mu.to_vec(), caps.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for r in 0..caps.len() {
        if caps[r] >= mu[0] {
            let mut next = caps.clone();
            next[r] -= mu[0];
            next.sort_unstable_by(|a, b| b.cmp(a));
            total += p_to_m_count(&mu[1..], next, memo);
        }
    }
    memo.insert(key, total.clone());
    total
}

/// Inverts a square rational matrix by Gauss–Jordan elimination.
fn invert(mut a: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("transition matrix is invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let d = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].clone() / d.clone();
            inv[col][j] = inv[col][j].clone() / d.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let (x, y) = (a[col][j].clone(), inv[col][j].clone());
                    a[r][j] -= f.clone() * x;
                    inv[r][j] -= f.clone() * y;
                }
            }
        }
    }
    inv
}

/// Monomial symmetric functions m_λ of degree n, expressed in the power-sum basis.
pub fn monomials_in_power_sums(n: u32) -> Result<Vec<(Partition, SymExpansion)>, OracleError> {
    let parts = enumerate_partitions(n)?;
    let mut memo = HashMap::new();
    let r: Vec<Vec<Rational>> = parts
        .iter()
        .map(|mu| {
            parts.iter().map(|lam| Rational::from_integer(p_to_m_count(mu.parts(), lam.parts().to_vec(), &mut memo))).collect()
        })
        .collect();
    let rinv = invert(r);
    Ok(parts
        .iter()
        .enumerate()
        .map(|(li, lam)| {
            let mut e = SymExpansion::zero(n);
            for (mi, mu) in parts.iter().enumerate() {
                if !rinv[li][mi].is_zero() {
                    e.coeffs.insert(mu.clone(), rinv[li][mi].clone());
                }
            }
            (lam.clone(), e)
        })
        .collect())
}

#[derive(Debug, Clone)]
struct BasisEntry {
    p: SymExpansion,
    b: Rational,
}

/// P_λ and b_λ for all |λ| ≤ n_max at fixed (q,t).
#[derive(Debug, Clone)]
pub struct Basis {
    pub q: Rational,
    pub t: Rational,
    pub n_max: u32,
    entries: HashMap<Partition, BasisEntry>,
}

pub fn build_basis(n_max: u32, q: &Rational, t: &Rational) -> Result<Basis, OracleError> {
    build_basis_capped(n_max, q, t, DEFAULT_BASIS_CAP)
}

pub fn build_basis_capped(n_max: u32, q: &Rational, t: &Rational, cap: u32) -> Result<Basis, OracleError> {
    if n_max > cap {
        return Err(OracleError::CapExceeded { n: n_max, cap });
    }
    let mut entries = HashMap::new();
    for n in 0..=n_max {
        let mons = monomials_in_power_sums(n)?;
        // Lex-increasing: (1^n) first.
        let mut done: Vec<(SymExpansion, Rational)> = Vec::new();
        for (lam, m) in mons.into_iter().rev() {
            let mut p = m.clone();
            for (pk, norm) in &done {
                let c = m.inner(pk, q, t) / norm.clone();
                p.add_scaled(pk, &(-c));
            }
            let norm = p.inner(&p, q, t);
            entries.insert(lam, BasisEntry { p: p.clone(), b: Rational::one() / norm.clone() });
            done.push((p, norm));
        }
    }
    Ok(Basis { q: q.clone(), t: t.clone(), n_max, entries })
}

impl Basis {
    fn entry(&self, lam: &Partition) -> Result<&BasisEntry, OracleError> {
        if lam.size() > self.n_max {
            return Err(OracleError::DegreeExceeded { size: lam.size(), max: self.n_max });
        }
        Ok(self.entries.get(lam).expect("all partitions up to n_max are present"))
    }

    /// P_λ in the power-sum basis.
    pub fn p(&self, lam: &Partition) -> Result<&SymExpansion, OracleError> {
        Ok(&self.entry(lam)?.p)
    }

    /// b_λ = 1/⟨P_λ,P_λ⟩.
    pub fn b(&self, lam: &Partition) -> Result<Rational, OracleError> {
        Ok(self.entry(lam)?.b.clone())
    }

    fn check_params(&self, spec: &Specialization) -> Result<(), OracleError> {
        if spec.q != self.q || spec.t != self.t {
            return Err(OracleError::ParameterMismatch);
        }
        Ok(())
    }

    /// P_λ(spec) or Q_λ(spec).
    pub fn evaluate(&self, lam: &Partition, spec: &Specialization, which: Which) -> Result<Rational, OracleError> {
        self.check_params(spec)?;
        let ps = power_sum_values(spec, lam.size().max(1));
        self.evaluate_with(lam, &ps, which)
    }

    /// Evaluation against precomputed power sums (index 0 holds p₁).
    pub fn evaluate_with(&self, lam: &Partition, psums: &[Rational], which: Which) -> Result<Rational, OracleError> {
        let e = self.entry(lam)?;
        let v = e.p.eval(psums);
        Ok(match which {
            Which::P => v,
            Which::Q => v * e.b.clone(),
        })
    }

    /// P_λ(Pl₁).
    pub fn plancherel_p(&self, lam: &Partition) -> Result<Rational, OracleError> {
        let ps = plancherel_power_sums(&self.q, &self.t, lam.size().max(1));
        self.evaluate_with(lam, &ps, Which::P)
    }

    /// M_n(λ) = n!·P_λ(spec)·Q_λ(Pl₁) for a spec with p₁ = 1.
    pub fn coherent_weight(&self, lam: &Partition, spec: &Specialization) -> Result<Rational, OracleError> {
        self.check_params(spec)?;
        let ps = power_sum_values(spec, lam.size().max(1));
        self.coherent_weight_with(lam, &ps)
    }

    fn coherent_weight_with(&self, lam: &Partition, ps: &[Rational]) -> Result<Rational, OracleError> {
        let n = lam.size();
        let fact: BigInt = (1..=n as u64).map(BigInt::from).product();
        let p = self.evaluate_with(lam, ps, Which::P)?;
        let ql = self.plancherel_p(lam)? * self.b(lam)?;
        Ok(Rational::from_integer(fact) * p * ql)
    }

    /// Exact coherent measure on Y_n.
    pub fn measure_table(&self, n: u32, spec: &Specialization) -> Result<MeasureTable<Rational>, OracleError> {
        self.check_params(spec)?;
        if spec.p1().is_zero() {
            return Err(OracleError::ZeroP1);
        }
        if n > self.n_max {
            return Err(OracleError::DegreeExceeded { size: n, max: self.n_max });
        }
        if !spec.is_normalized() {
            return Err(OracleError::InvalidSpec("measure weights need p1 = 1".into()));
        }
        let ps = power_sum_values(spec, n.max(1));
        let mut weights = BTreeMap::new();
        for lam in enumerate_partitions(n)? {
            let w = self.coherent_weight_with(&lam, &ps)?;
            weights.insert(lam, w);
        }
        Ok(MeasureTable { n, t: spec.t.clone(), weights })
    }

    /// Poissonized weight e^{−τp₁}·P_λ(spec)·Q_λ(Pl_τ), in floating point.
    pub fn macdonald_weight(&self, lam: &Partition, spec: &Specialization, tau: f64) -> Result<f64, OracleError> {
        self.check_params(spec)?;
        let n = lam.size();
        let p = self.evaluate(lam, spec, Which::P)?.to_f64();
        let ql = (self.plancherel_p(lam)? * self.b(lam)?).to_f64();
        let p1 = spec.p1().to_f64();
        Ok((-tau * p1).exp() * p * tau.powi(n as i32) * ql)
    }

    /// One-box growth probabilities P_{λ+□}(A)/P_λ(A)·ψ′_{λ+□/λ}/p₁ over addable rows.
    pub fn growth_probabilities(&self, lam: &Partition, spec: &Specialization) -> Result<Vec<(usize, Rational)>, OracleError> {
        self.check_params(spec)?;
        let n = lam.size() + 1;
        let ps = power_sum_values(spec, n);
        let base = self.evaluate_with(lam, &ps, Which::P)?;
        if base.is_zero() {
            return Err(OracleError::InvalidSpec(format!("P_{lam}(spec) vanishes")));
        }
        let p1 = ps[0].clone();
        let (addable, _) = lam.boundary_rows();
        let mut out = Vec::new();
        for j in addable {
            let next = lam.add_box(j).expect("addable");
            let v = self.evaluate_with(&next, &ps, Which::P)?;
            let w = psi_prime_box(lam, j, &self.q, &self.t)?;
            out.push((j, v / base.clone() * w / p1.clone()));
        }
        Ok(out)
    }
}

/// Normalized weights over Y_n.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureTable<S> {
    pub n: u32,
    pub t: S,
    pub weights: BTreeMap<Partition, S>,
}

impl<S: Scalar> MeasureTable<S> {
    pub fn total(&self) -> S {
        self.weights.values().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn weight(&self, lam: &Partition) -> S {
        self.weights.get(lam).cloned().unwrap_or_else(S::zero)
    }

    pub fn to_f64(&self) -> MeasureTable<f64> {
        MeasureTable {
            n: self.n,
            t: self.t.to_f64(),
            weights: self.weights.iter().map(|(k, v)| (k.clone(), v.to_f64())).collect(),
        }
    }

    /// Drops zero-weight entries.
    pub fn support(&self) -> MeasureTable<S> {
        MeasureTable {
            n: self.n,
            t: self.t.clone(),
            weights: self.weights.iter().filter(|(_, v)| **v != S::zero()).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }
}

impl MeasureTable<Rational> {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "t": format_rational(&self.t),
            "weights": self.weights.iter().map(|(k, v)| json!({"partition": k, "weight": format_rational(v)})).collect::<Vec<_>>(),
        })
    }
}

impl MeasureTable<f64> {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "t": self.t,
            "weights": self.weights.iter().map(|(k, v)| json!({"partition": k, "weight": v})).collect::<Vec<_>>(),
        })
    }
}

/// n!·P_κ(Pl₁) as a sum over box-adding paths ∅ → κ of products of one-box φ′.
pub fn plancherel_path_sum(kappa: &Partition, q: &Rational, t: &Rational) -> Result<Rational, OracleError> {
    fn rec(k: &Partition, q: &Rational, t: &Rational, memo: &mut HashMap<Partition, Rational>) -> Result<Rational, OracleError> {
        if k.is_empty() {
            return Ok(Rational::one());
        }
        if let Some(v) = memo.get(k) {
            return Ok(v.clone());
        }
        let (_, removable) = k.boundary_rows();
        let mut total = Rational::zero();
        for r in removable {
            let smaller = k.remove_box(r).expect("removable");
            total += rec(&smaller, q, t, memo)? * phi_prime_box(&smaller, r, q, t)?;
        }
        memo.insert(k.clone(), total.clone());
        Ok(total)
    }
    rec(kappa, q, t, &mut HashMap::new())
}

/// P_κ(Pl₁) via the path sum.
pub fn plancherel_p_paths(kappa: &Partition, q: &Rational, t: &Rational) -> Result<Rational, OracleError> {
    let fact: BigInt = (1..=kappa.size() as u64).map(BigInt::from).product();
    Ok(plancherel_path_sum(kappa, q, t)? / Rational::from_integer(fact))
}

/// P_λ(α₁,…,α_k | 0,t) by branching one variable at a time.
pub fn branching_eval_alpha(lam: &Partition, alphas: &[Rational], t: &Rational) -> Result<Rational, OracleError> {
    skew_p_alpha(lam, &Partition::empty(), alphas, t)
}

/// P_{ν/λ}(α₁,…,α_k | 0,t) as a sum over chains of horizontal strips.
pub fn skew_p_alpha(nu: &Partition, lam: &Partition, alphas: &[Rational], t: &Rational) -> Result<Rational, OracleError> {
    fn rec(
        nu: &Partition,
        lam: &Partition,
        alphas: &[Rational],
        t: &Rational,
        memo: &mut HashMap<(Partition, usize), Rational>,
    ) -> Result<Rational, OracleError> {
        if !nu.contains(lam) {
            return Ok(Rational::zero());
        }
        let k = alphas.len();
        if k == 0 {
            return Ok(if nu == lam { Rational::one() } else { Rational::zero() });
        }
        if let Some(v) = memo.get(&(nu.clone(), k)) {
            return Ok(v.clone());
        }
        let a = &alphas[k - 1];
        let mut total = Rational::zero();
        for mu in horizontal_strips_below(nu) {
            if !mu.contains(lam) {
                continue;
            }
            let inner = rec(&mu, lam, &alphas[..k - 1], t, memo)?;
            if inner.is_zero() {
                continue;
            }
            total += inner * a.powi(nu.size() - mu.size()) * psi_hl(&mu, nu, t)?;
        }
        memo.insert((nu.clone(), k), total.clone());
        Ok(total)
    }
    rec(nu, lam, alphas, t, &mut HashMap::new())
}

/// Coefficient of u^N in ∏_{i,j} Σ_k g_k (u x_i y_j)^k, with g_k = ∏_{m<k} (1−tq^m)/(1−q^{m+1}).
pub fn cauchy_series_coefficient(x: &[Rational], y: &[Rational], q: &Rational, t: &Rational, degree: u32) -> Rational {
    let d = degree as usize;
    let mut g = vec![Rational::one()];
    for m in 0..d as u32 {
        let next = g[m as usize].clone() * (Rational::one() - t.clone() * q.powi(m)) / q.one_minus_pow(m + 1);
        g.push(next);
    }
    let mut series = vec![Rational::zero(); d + 1];
    series[0] = Rational::one();
    for xi in x {
        for yj in y {
            let z = xi.clone() * yj.clone();
            let factor: Vec<Rational> = (0..=d).map(|k| g[k].clone() * z.powi(k as u32)).collect();
            let mut out = vec![Rational::zero(); d + 1];
            for (a, sa) in series.iter().enumerate() {
                if sa.is_zero() {
                    continue;
                }
                for (b, fb) in factor.iter().enumerate().take(d + 1 - a) {
                    out[a + b] += sa.clone() * fb.clone();
                }
            }
            series = out;
        }
    }
    series[d].clone()
}

/// Σ_{|λ|=N} P_λ(x)Q_λ(y) for finite-alpha specs x and y sharing (q,t).
pub fn cauchy_sum(basis: &Basis, x: &Specialization, y: &Specialization, degree: u32) -> Result<Rational, OracleError> {
    let px = power_sum_values(x, degree.max(1));
    let py = power_sum_values(y, degree.max(1));
    let mut total = Rational::zero();
    for lam in enumerate_partitions(degree)? {
        total += basis.evaluate_with(&lam, &px, Which::P)? * basis.evaluate_with(&lam, &py, Which::Q)?;
    }
    Ok(total)
}

/// Checks a table is a probability vector with nonnegative entries.
pub fn is_probability_table(table: &MeasureTable<Rational>) -> bool {
    table.weights.values().all(|w| !w.is_negative()) && table.total().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_basis_examples() {
        let t = rat(1, 3);
        let z = rat(0, 1);
        let b = build_basis(3, &z, &t).unwrap();
        // P_(1) = p1
        assert_eq!(b.p(&p(&[1])).unwrap().coeff(&p(&[1])), rat(1, 1));
        assert_eq!(b.b(&p(&[1])).unwrap(), rat(1, 1) - t.clone());
        let p2 = b.p(&p(&[2])).unwrap();
        assert_eq!(p2.coeff(&p(&[1, 1])), (rat(1, 1) - t.clone()) / rat(2, 1));
        assert_eq!(p2.coeff(&p(&[2])), (rat(1, 1) + t.clone()) / rat(2, 1));
        assert_eq!(b.b(&p(&[2])).unwrap(), rat(1, 1) - t.clone());
        let s = build_basis(3, &t, &t).unwrap();
        for lam in crate::partitions::partitions_up_to(3).unwrap() {
            assert_eq!(s.b(&lam).unwrap(), rat(1, 1));
        }
        assert!(build_basis(11, &z, &t).is_err());
    }

    #[test]
    fn power_sum_examples() {
        let t = rat(1, 2);
        let spec = Specialization::new(vec![], vec![rat(1, 5)], rat(0, 1), rat(0, 1), t.clone()).unwrap();
        let ps = power_sum_values(&spec, 2);
        assert_eq!(ps[1], -rat(1, 25) / (rat(1, 1) - t.clone().powi(2)));
        let pl = Specialization::new(vec![], vec![], rat(2, 1), rat(0, 1), t.clone()).unwrap();
        let ps = power_sum_values(&pl, 3);
        assert_eq!(ps, vec![rat(4, 1), rat(0, 1), rat(0, 1)]);
    }

    #[test]
    fn evaluate_examples() {
        let t = rat(2, 7);
        let z = rat(0, 1);
        let b = build_basis(4, &z, &t).unwrap();
        let pl = Specialization::new(vec![], vec![], rat(1, 1), z.clone(), t.clone()).unwrap();
        assert_eq!(b.evaluate(&p(&[2]), &pl, Which::Q).unwrap(), rat(1, 2));
        assert_eq!(b.evaluate(&p(&[1, 1]), &pl, Which::Q).unwrap(), (rat(1, 1) + t.clone()) / rat(2, 1));
        let one = Specialization::new(vec![rat(1, 1)], vec![], z.clone(), z.clone(), t.clone()).unwrap();
        for n in 1..=4 {
            assert_eq!(b.evaluate(&p(&[n]), &one, Which::P).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn two_variable_weight() {
        let t = rat(1, 2);
        let z = rat(0, 1);
        let b = build_basis(2, &z, &t).unwrap();
        let spec = Specialization::new(vec![rat(3, 5), rat(2, 5)], vec![], z.clone(), z, t).unwrap();
        let tab = b.measure_table(2, &spec).unwrap();
        assert_eq!(tab.weight(&p(&[2])), rat(16, 25));
        assert_eq!(tab.weight(&p(&[1, 1])), rat(9, 25));
    }

    #[test]
    fn macdonald_weight_examples() {
        let t = rat(1, 2);
        let z = rat(0, 1);
        let b = build_basis(2, &z, &t).unwrap();
        let spec = Specialization::new(vec![rat(1, 1)], vec![], z.clone(), z, t).unwrap();
        assert!((b.macdonald_weight(&p(&[1]), &spec, 1.0).unwrap() - (-1f64).exp()).abs() < 1e-14);
        assert_eq!(b.macdonald_weight(&p(&[]), &spec, 0.0).unwrap(), 1.0);
        assert_eq!(b.macdonald_weight(&p(&[1]), &spec, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn plancherel_examples() {
        let t = rat(1, 4);
        let z = rat(0, 1);
        assert_eq!(plancherel_p_paths(&p(&[1]), &z, &t).unwrap(), rat(1, 1) / (rat(1, 1) - t.clone()));
        assert_eq!(plancherel_p_paths(&p(&[]), &z, &t).unwrap(), rat(1, 1));
        assert_eq!(plancherel_path_sum(&p(&[2, 1]), &t, &t).unwrap(), rat(2, 1));
    }

    #[test]
    fn branching_examples() {
        let t = rat(1, 3);
        let (a1, a2) = (rat(2, 5), rat(1, 7));
        let v = branching_eval_alpha(&p(&[2]), &[a1.clone(), a2.clone()], &t).unwrap();
        assert_eq!(v, a1.powi(2) + a2.powi(2) + (rat(1, 1) - t.clone()) * a1.clone() * a2.clone());
        assert_eq!(branching_eval_alpha(&p(&[1, 1]), &[a1.clone(), a2.clone()], &t).unwrap(), a1.clone() * a2);
        assert_eq!(branching_eval_alpha(&p(&[1, 1]), &[a1], &t).unwrap(), rat(0, 1));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_classical(&p(&[1, 1, 1])), BigInt::from(6));
        assert_eq!(z_classical(&p(&[2, 1, 1])), BigInt::from(4));
        assert_eq!(z_classical(&p(&[])), BigInt::from(1));
    }
}

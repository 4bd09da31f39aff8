//! Exact verification routines shared by the CLI and the acceptance harness.

use std::fmt::Display;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::hl_kernel::{psi_prime_box, s_factor_via_psi, t_factor_via_psi, InterlacedPair};
use crate::oracle::{
    branching_eval_alpha, build_basis, cauchy_series_coefficient, cauchy_sum, plancherel_p_paths, skew_p_alpha, Basis,
    MeasureTable, Specialization, Which,
};
use crate::partitions::{horizontal_strips_below, partitions_up_to};
use crate::rsk_sampler::{exact_distribution, SamplerConfig};
use crate::scalar::{format_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<String, String>) -> Self {
        match r {
            Ok(d) => Check::new(name, true, d),
            Err(d) => Check::new(name, false, d),
        }
    }
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

/// Largest absolute entrywise difference between two tables.
pub fn max_residual(a: &MeasureTable<Rational>, b: &MeasureTable<Rational>) -> Rational {
    let mut worst = Rational::zero();
    for lam in a.weights.keys().chain(b.weights.keys()) {
        let d = (a.weight(lam) - b.weight(lam)).abs();
        if d > worst {
            worst = d;
        }
    }
    worst
}

/// exact_distribution against the oracle table for each n in 0..=n_max.
pub fn table_check(config: &SamplerConfig, n_max: u32, basis: Option<&Basis>) -> Check {
    let name = format!("table t={} n<={n_max}", format_rational(&config.spec.t));
    let owned;
    let basis = match basis {
        Some(b) => b,
        None => match build_basis(n_max, &rat(0, 1), &config.spec.t) {
            Ok(b) => {
                owned = b;
                &owned
            }
            Err(e) => return Check::new(name, false, e.to_string()),
        },
    };
    let run = || -> Result<String, String> {
        for n in 0..=n_max {
            let got = exact_distribution(config, n).map_err(err)?;
            let want = basis.measure_table(n, &config.spec).map_err(err)?;
            let r = max_residual(&got, &want);
            if !r.is_zero() {
                return Err(format!("n={n}: residual {}", format_rational(&r)));
            }
        }
        Ok("residual 0".into())
    };
    Check::from_result(name, run())
}

/// Per-identity size limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityLimits {
    pub normalization: u32,
    pub diagonal_rate: u32,
    pub cauchy: u32,
    pub skew_cauchy: u32,
    pub plancherel: u32,
    pub branching: u32,
}

impl IdentityLimits {
    pub const fn standard() -> Self {
        IdentityLimits { normalization: 8, diagonal_rate: 6, cauchy: 6, skew_cauchy: 5, plancherel: 8, branching: 6 }
    }

    pub const fn uniform(d: u32) -> Self {
        IdentityLimits { normalization: d, diagonal_rate: d, cauchy: d, skew_cauchy: d, plancherel: d, branching: d }
    }

    fn max(&self) -> u32 {
        [self.normalization, self.diagonal_rate + 1, self.cauchy, self.plancherel, self.branching].into_iter().max().unwrap_or(0)
    }
}

fn suite_specs(t: &Rational) -> Result<Vec<Specialization>, String> {
    let z = rat(0, 1);
    let specs = vec![
        Specialization::hl(vec![rat(1, 2), rat(1, 2)], vec![], z.clone(), t.clone()),
        Specialization::hl(vec![rat(1, 2), rat(1, 4), rat(1, 4)], vec![], z.clone(), t.clone()),
        Specialization::hl(vec![], vec![rat(1, 3), rat(1, 5)], z.clone(), t.clone()),
        Specialization::hl(vec![rat(1, 4)], vec![rat(1, 4)], rat(1, 8), t.clone()),
    ];
    specs.into_iter().map(|s| s.map(|s| s.normalized().0).map_err(err)).collect()
}

fn normalization(basis: &Basis, specs: &[Specialization], n_max: u32) -> Result<String, String> {
    for spec in specs {
        for n in 0..=n_max {
            let table = basis.measure_table(n, spec).map_err(err)?;
            if !table.total().is_one() || table.weights.values().any(|w| w.is_negative()) {
                return Err(format!("n={n}: total {}", format_rational(&table.total())));
            }
        }
    }
    Ok(format!("{} specs, n<={n_max}", specs.len()))
}

fn diagonal_rate(basis: &Basis, specs: &[Specialization], n_max: u32) -> Result<String, String> {
    let mut count = 0;
    for spec in specs {
        for nu in partitions_up_to(n_max).map_err(err)? {
            if basis.evaluate(&nu, spec, Which::P).map_err(err)?.is_zero() {
                continue;
            }
            let total: Rational = basis.growth_probabilities(&nu, spec).map_err(err)?.into_iter().map(|(_, w)| w).sum();
            if !total.is_one() {
                return Err(format!("nu={nu}: rates sum to {}", format_rational(&total)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} diagrams"))
}

fn cauchy(t: &Rational, degree: u32) -> Result<String, String> {
    let x = [rat(1, 2), rat(1, 3)];
    let y = [rat(2, 5), rat(1, 4), rat(1, 7)];
    for q in [rat(0, 1), rat(1, 3)] {
        let basis = build_basis(degree, &q, t).map_err(err)?;
        let sx = Specialization::new(x.to_vec(), vec![], rat(0, 1), q.clone(), t.clone()).map_err(err)?;
        let sy = Specialization::new(y.to_vec(), vec![], rat(0, 1), q.clone(), t.clone()).map_err(err)?;
        for d in 0..=degree {
            let lhs = cauchy_sum(&basis, &sx, &sy, d).map_err(err)?;
            let rhs = cauchy_series_coefficient(&x, &y, &q, t, d);
            if lhs != rhs {
                return Err(format!("q={q} degree {d}: residual {}", format_rational(&(lhs - rhs))));
            }
        }
    }
    Ok(format!("degrees 0..={degree}"))
}

fn skew_cauchy(t: &Rational, n_max: u32) -> Result<String, String> {
    let q = rat(0, 1);
    let alphas = [rat(1, 2), rat(1, 3), rat(1, 6)];
    let p1: Rational = alphas.iter().cloned().sum();
    let all = partitions_up_to(n_max).map_err(err)?;
    for lam in &all {
        for nu in &all {
            let skew = |a: &crate::Partition, b: &crate::Partition| skew_p_alpha(a, b, &alphas, t).map_err(err);
            let mut lhs = Rational::zero();
            for j in nu.boundary_rows().0 {
                lhs += skew(&nu.add_box(j).expect("addable"), lam)? * psi_prime_box(nu, j, &q, t).map_err(err)?;
            }
            let mut rhs = p1.clone() * skew(nu, lam)?;
            for j in lam.boundary_rows().1 {
                let below = lam.remove_box(j).expect("removable");
                rhs += skew(nu, &below)? * psi_prime_box(&below, j, &q, t).map_err(err)?;
            }
            if lhs != rhs {
                return Err(format!("lambda={lam} nu={nu}"));
            }
        }
    }
    Ok(format!("{} pairs", all.len() * all.len()))
}

fn plancherel(basis: &Basis, t: &Rational, n_max: u32) -> Result<String, String> {
    let mut count = 0;
    for lam in partitions_up_to(n_max).map_err(err)? {
        let a = plancherel_p_paths(&lam, &rat(0, 1), t).map_err(err)?;
        let b = basis.plancherel_p(&lam).map_err(err)?;
        if a != b {
            return Err(format!("{lam}: {} vs {}", format_rational(&a), format_rational(&b)));
        }
        count += 1;
    }
    Ok(format!("{count} diagrams"))
}

fn branching(basis: &Basis, t: &Rational, n_max: u32) -> Result<String, String> {
    let lists =
        [vec![rat(1, 2), rat(1, 2)], vec![rat(1, 2), rat(1, 4), rat(1, 4)], vec![rat(3, 5), rat(2, 9), rat(1, 5), rat(1, 7)]];
    for alphas in lists {
        let spec = Specialization::hl(alphas, vec![], rat(0, 1), t.clone()).map_err(err)?;
        for lam in partitions_up_to(n_max).map_err(err)? {
            let a = branching_eval_alpha(&lam, &spec.alphas, t).map_err(err)?;
            if a != basis.evaluate(&lam, &spec, Which::P).map_err(err)? {
                return Err(format!("{lam}"));
            }
        }
    }
    Ok(format!("|lambda|<={n_max}"))
}

/// Runs the oracle identities at q = 0 and the given t.
pub fn identity_suite(t: &Rational, limits: IdentityLimits) -> Vec<Check> {
    let basis = match build_basis(limits.max(), &rat(0, 1), t) {
        Ok(b) => b,
        Err(e) => return vec![Check::new("basis", false, e.to_string())],
    };
    let specs = match suite_specs(t) {
        Ok(s) => s,
        Err(e) => return vec![Check::new("specs", false, e)],
    };
    vec![
        Check::from_result("normalization", normalization(&basis, &specs, limits.normalization)),
        Check::from_result("diagonal rate", diagonal_rate(&basis, &specs, limits.diagonal_rate)),
        Check::from_result("cauchy", cauchy(t, limits.cauchy)),
        Check::from_result("infinitesimal skew cauchy", skew_cauchy(t, limits.skew_cauchy)),
        Check::from_result("plancherel routes", plancherel(&basis, t, limits.plancherel)),
        Check::from_result("branching", branching(&basis, t, limits.branching)),
    ]
}

/// Case tables vs products vs ψ ratios, and push probabilities in [0,1], over every
/// interlaced pair with |λ| ≤ max_size padded by up to `extra` zeros.
pub fn kernel_sweep(max_size: u32, extra: usize, ts: &[Rational]) -> Check {
    let run = || -> Result<String, String> {
        let mut pairs = Vec::new();
        for lam in partitions_up_to(max_size).map_err(err)? {
            for nu in horizontal_strips_below(&lam) {
                let base = nu.len().max(lam.len().saturating_sub(1));
                for ell in base..=base + extra {
                    let pr = InterlacedPair::new(nu.padded(ell).map_err(err)?, lam.padded(ell + 1).map_err(err)?).map_err(err)?;
                    pairs.push((nu.clone(), lam.clone(), pr));
                }
            }
        }
        let mut evaluations = 0usize;
        for t in ts {
            for (nu, lam, pr) in &pairs {
                for i in 1..=pr.ell() {
                    let a: Rational = pr.t_factor(i, t).map_err(err)?;
                    let b: Rational = pr.t_factor_product(i, t).map_err(err)?;
                    let c: Rational = t_factor_via_psi(nu, lam, i, t).map_err(err)?;
                    if a != b || a != c {
                        return Err(format!("T_{i} at {nu}/{lam} t={t}"));
                    }
                }
                for j in 1..=pr.ell() + 1 {
                    let a: Rational = pr.s_factor(j, t).map_err(err)?;
                    let b: Rational = pr.s_factor_product(j, t).map_err(err)?;
                    let c: Rational = s_factor_via_psi(nu, lam, j, t).map_err(err)?;
                    if a != b || a != c {
                        return Err(format!("S_{j} at {nu}/{lam} t={t}"));
                    }
                }
                for j in 1..=pr.ell() {
                    if pr.lower.get(j) <= pr.upper.get(j + 1) {
                        continue;
                    }
                    let ra: Rational = pr.push_prob_alpha(j, t).map_err(err)?;
                    let rb: Rational = pr.push_prob_beta(j, t).map_err(err)?;
                    for r in [&ra, &rb] {
                        if r.is_negative() || *r > Rational::one() {
                            return Err(format!("r={r} at {nu}/{lam} j={j} t={t}"));
                        }
                    }
                    evaluations += 2;
                }
            }
        }
        Ok(format!("{} pairs, {evaluations} push probabilities", pairs.len()))
    };
    Check::from_result(format!("kernel sweep |lambda|<={max_size}"), run())
}

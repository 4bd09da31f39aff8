#![allow(dead_code)]

use hlrsk::hl_kernel::InterlacedPair;
use hlrsk::partitions::{horizontal_strips_below, partitions_up_to, Partition};
use hlrsk::{rat, Rational};

pub fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn sweep_ts() -> Vec<Rational> {
    vec![rat(1, 5), rat(1, 3), rat(1, 2), rat(7, 10)]
}

/// Every ν̄ ≺_h λ with |λ| ≤ n, at each admissible lower length plus up to `extra` zeros.
pub fn interlaced_pairs(n: u32, extra: usize) -> Vec<(Partition, Partition, InterlacedPair)> {
    let mut out = Vec::new();
    for lam in partitions_up_to(n).unwrap() {
        for nu in horizontal_strips_below(&lam) {
            let base = nu.len().max(lam.len().saturating_sub(1));
            for ell in base..=base + extra {
                let pair = InterlacedPair::new(nu.padded(ell).unwrap(), lam.padded(ell + 1).unwrap()).unwrap();
                out.push((nu.clone(), lam.clone(), pair));
            }
        }
    }
    out
}

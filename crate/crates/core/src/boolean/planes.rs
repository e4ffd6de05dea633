//! Zero-sum quadruples of GF(2)^n against the affine planes of AG(n, 2).

use std::collections::BTreeSet;

use crate::combinatorics::{binomial, Budget, Combinations};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanesReport {
    pub n: u32,
    pub zero_sum_quadruples: usize,
    pub affine_planes: usize,
}

/// Every coset `x + S` of every 2-dimensional subspace `S`, as sorted quadruples.
pub fn affine_planes(n: u32) -> BTreeSet<[u32; 4]> {
    let size = 1u32 << n;
    let mut subspaces = BTreeSet::new();
    for a in 1..size {
        for b in a + 1..size {
            let mut s = [0, a, b, a ^ b];
            s.sort_unstable();
            subspaces.insert(s);
        }
    }
    let mut planes = BTreeSet::new();
    for s in &subspaces {
        for x in 0..size {
            let mut coset = s.map(|y| y ^ x);
            coset.sort_unstable();
            planes.insert(coset);
        }
    }
    planes
}

/// Checks that the zero-sum 4-subsets of GF(2)^n are exactly the affine planes.
pub fn quadruples_are_planes_audit(n: u32, budget: Budget) -> Result<PlanesReport> {
    if !(2..=16).contains(&n) {
        return Err(Error::SpecInvalid(format!("dimension {n} outside 2..=16")));
    }
    let size = 1usize << n;
    budget.check(&binomial(size as u64, 4))?;
    let quadruples: BTreeSet<[u32; 4]> = Combinations::new(size, 4)
        .filter(|s| s.iter().fold(0, |acc, &x| acc ^ x) == 0)
        .map(|s| [s[0] as u32, s[1] as u32, s[2] as u32, s[3] as u32])
        .collect();
    let planes = affine_planes(n);
    if quadruples != planes {
        let witness = quadruples.symmetric_difference(&planes).next();
        return Err(Error::audit(
            "zero-sum quadruples = affine planes",
            format!("sets differ, e.g. at {witness:?}"),
        ));
    }
    Ok(PlanesReport {
        n,
        zero_sum_quadruples: quadruples.len(),
        affine_planes: planes.len(),
    })
}

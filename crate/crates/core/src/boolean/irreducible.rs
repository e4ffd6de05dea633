//! Reducibility of zero-sum blocks of nonzero vectors.
//!
//! A zero-sum block is reducible when it splits into two disjoint zero-sum
//! blocks. A block of `k` distinct nonzero vectors summing to zero spans a
//! space of dimension at most `k − 1`; it is irreducible exactly when that
//! dimension is reached, i.e. any `k − 1` of its members are independent.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::{subsets_of, Budget};
use crate::error::{Error, Result};

use super::construct::{block_vectors, build_design, BooleanDesignSpec};
use super::gf2::{gf2_rank, xor_fold};

fn validate_block(n: u32, block: &[u32]) -> Result<()> {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    let in_range = sorted.iter().all(|&x| x != 0 && u64::from(x) < 1u64 << n);
    if block.is_empty() || !distinct || !in_range || xor_fold(block) != 0 {
        return Err(Error::NotAZeroSumBlock(block.to_vec()));
    }
    Ok(())
}

/// Whether a zero-sum block of nonzero vectors of GF(2)^n is irreducible.
pub fn is_irreducible(n: u32, block: &[u32]) -> Result<bool> {
    validate_block(n, block)?;
    Ok(gf2_rank(block) == block.len() - 1)
}

/// Irreducible blocks counted three ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleCount {
    pub n: u32,
    pub k: usize,
    /// Exhaustive count over the zero-sum `k`-blocks.
    pub oracle: BigUint,
    /// `∏_{i=1}^{k} (2^n − 2^{i−1})`, the number of ordered independent `k`-tuples.
    pub product_formula: BigUint,
    /// `∏_{i=1}^{k−1} (2^n − 2^{i−1}) / k!`: each irreducible block arises from
    /// exactly `k!` ordered independent `(k−1)`-tuples.
    pub corrected_formula: BigUint,
}

impl IrreducibleCount {
    pub fn corrected_matches(&self) -> bool {
        self.oracle == self.corrected_formula
    }

    pub fn product_matches(&self) -> bool {
        self.oracle == self.product_formula
    }
}

/// `∏_{i=1}^{m} (2^n − 2^{i−1})`.
pub fn independent_tuple_count(n: u32, m: usize) -> BigUint {
    let q = BigUint::one() << n;
    (0..m)
        .map(|i| {
            let p = BigUint::one() << i;
            if p > q {
                BigUint::zero()
            } else {
                &q - p
            }
        })
        .product()
}

pub fn irreducible_count(n: u32, k: usize, budget: Budget) -> Result<IrreducibleCount> {
    if k < 3 {
        return Err(Error::SpecInvalid(format!(
            "irreducible blocks need k >= 3, got {k}"
        )));
    }
    let built = build_design(BooleanDesignSpec::Projective { n, k }, budget)?;
    let mut oracle = 0u64;
    for block in built.design.blocks() {
        if is_irreducible(n, &block_vectors(block))? {
            oracle += 1;
        }
    }
    let factorial: BigUint = (1..=k as u64).map(BigUint::from).product();
    let (corrected, rem) = independent_tuple_count(n, k - 1).div_rem(&factorial);
    debug_assert!(rem.is_zero());
    Ok(IrreducibleCount {
        n,
        k,
        oracle: BigUint::from(oracle),
        product_formula: independent_tuple_count(n, k),
        corrected_formula: corrected,
    })
}

/// Unordered splittings of `block` into disjoint zero-sum parts of sizes
/// `first_size` and `block.len() − first_size`, in deterministic order.
///
/// Parts smaller than 3 are never zero-sum for distinct nonzero vectors, so
/// sizes outside `3..=k−3` yield an empty list.
pub fn decompositions(block: &[u32], first_size: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let k = block.len();
    if first_size < 3 || first_size + 3 > k {
        return Vec::new();
    }
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let second_size = k - first_size;
    let mut out = Vec::new();
    for part in subsets_of(&sorted, first_size) {
        // count a balanced split once: the first part holds the smallest element
        if first_size == second_size && part[0] != sorted[0] {
            continue;
        }
        if xor_fold(&part) != 0 {
            continue;
        }
        let rest: Vec<u32> = sorted.iter().copied().filter(|x| !part.contains(x)).collect();
        if xor_fold(&rest) == 0 {
            out.push((part, rest));
        }
    }
    out.sort();
    out
}

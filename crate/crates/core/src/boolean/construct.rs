//! Zero-sum and dependent-tuple designs over GF(q) and GF(2)^n.

use std::fmt;

use crate::combinatorics::{binomial, Budget, Combinations};
use crate::design::{verify_design, Design, DesignParams};
use crate::error::{Error, Result};

use super::field::FiniteField;
use super::gf2::{bit_label, gf2_rank, xor_fold};

/// Largest supported dimension for the binary variants.
pub const MAX_DIMENSION: u32 = 24;

/// Which zero-sum family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BooleanDesignSpec {
    /// `k`-subsets of GF(p^t) summing to zero; needs `p | k` and `2 < k < q`.
    Field { p: u64, t: u32, k: usize },
    /// `k`-subsets of all of GF(2)^n summing to zero; needs `k` even and `2 < k < 2^n`.
    Affine { n: u32, k: usize },
    /// `k`-subsets of the nonzero vectors of GF(2)^n summing to zero; `2 <= k <= 2^n − 2`.
    Projective { n: u32, k: usize },
    /// Linearly dependent `k`-subsets of nonzero vectors; `2 <= k <= 2^n − 2`.
    Dependent { n: u32, k: usize },
}

impl BooleanDesignSpec {
    pub fn field_of_order(q: u64, k: usize) -> Result<Self> {
        let (p, t) = super::field::prime_power(q)
            .ok_or_else(|| Error::SpecInvalid(format!("{q} is not a prime power")))?;
        Ok(BooleanDesignSpec::Field { p, t, k })
    }

    pub fn k(&self) -> usize {
        match *self {
            BooleanDesignSpec::Field { k, .. }
            | BooleanDesignSpec::Affine { k, .. }
            | BooleanDesignSpec::Projective { k, .. }
            | BooleanDesignSpec::Dependent { k, .. } => k,
        }
    }

    /// Number of points of the construction.
    pub fn point_count(&self) -> Result<usize> {
        let size = match *self {
            BooleanDesignSpec::Field { p, t, .. } => p
                .checked_pow(t)
                .ok_or_else(|| Error::SpecInvalid(format!("{p}^{t} overflows")))?,
            BooleanDesignSpec::Affine { n, .. } => {
                check_dimension(n)?;
                1u64 << n
            }
            BooleanDesignSpec::Projective { n, .. } | BooleanDesignSpec::Dependent { n, .. } => {
                check_dimension(n)?;
                (1u64 << n) - 1
            }
        };
        usize::try_from(size).map_err(|_| Error::SpecInvalid(format!("{size} points")))
    }

    /// Strength at which the construction is a design.
    pub fn strength(&self) -> usize {
        match self {
            BooleanDesignSpec::Affine { .. } => 3,
            _ => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.k();
        let points = self.point_count()?;
        let ok = match *self {
            BooleanDesignSpec::Field { p, .. } => {
                if !crate::normal_form::is_prime(p) {
                    return Err(Error::SpecInvalid(format!("characteristic {p} is not prime")));
                }
                (k as u64).is_multiple_of(p) && 2 < k && k < points
            }
            BooleanDesignSpec::Affine { .. } => k.is_multiple_of(2) && 2 < k && k < points,
            BooleanDesignSpec::Projective { .. } | BooleanDesignSpec::Dependent { .. } => {
                2 <= k && k < points
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::SpecInvalid(format!("block size {k} is out of range for {self}")))
        }
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::SpecInvalid(format!(
            "dimension {n} outside 1..={MAX_DIMENSION}"
        )))
    }
}

impl fmt::Display for BooleanDesignSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BooleanDesignSpec::Field { p, t, k } => write!(f, "field(q={}, k={k})", p.pow(t)),
            BooleanDesignSpec::Affine { n, k } => write!(f, "affine(n={n}, k={k})"),
            BooleanDesignSpec::Projective { n, k } => write!(f, "projective(n={n}, k={k})"),
            BooleanDesignSpec::Dependent { n, k } => write!(f, "dependent(n={n}, k={k})"),
        }
    }
}

/// A constructed family together with the spec that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanDesign {
    pub spec: BooleanDesignSpec,
    pub design: Design,
}

impl BooleanDesign {
    /// True when no `k`-subset qualified.
    pub fn is_degenerate(&self) -> bool {
        self.design.is_empty()
    }

    /// Parameters at the construction's strength; `None` for degenerate families.
    pub fn verify(&self) -> Result<Option<DesignParams>> {
        if self.is_degenerate() {
            return Ok(None);
        }
        verify_design(&self.design, self.spec.strength()).map(Some)
    }

    /// Vector behind each point index (binary variants) or field element code.
    pub fn point_value(&self, index: usize) -> u64 {
        match self.spec {
            BooleanDesignSpec::Projective { .. } | BooleanDesignSpec::Dependent { .. } => {
                index as u64 + 1
            }
            _ => index as u64,
        }
    }
}

/// Nonzero vectors of GF(2)^n; point `i` is the vector `i + 1`.
pub fn nonzero_vectors(n: u32) -> Vec<u32> {
    (1..1u32 << n).collect()
}

/// Enumerates the family described by `spec`.
pub fn build_design(spec: BooleanDesignSpec, budget: Budget) -> Result<BooleanDesign> {
    spec.validate()?;
    let v = spec.point_count()?;
    let k = spec.k();
    budget.check(&binomial(v as u64, k as u64))?;

    let (blocks, labels): (Vec<Vec<usize>>, Vec<String>) = match spec {
        BooleanDesignSpec::Field { p, t, .. } => {
            let field = FiniteField::new(p, t)?;
            let blocks = Combinations::new(v, k)
                .filter(|s| s.iter().fold(0, |acc, &x| field.add(acc, x as u64)) == 0)
                .collect();
            (blocks, (0..v as u64).map(|x| field.label(x)).collect())
        }
        BooleanDesignSpec::Affine { n, .. } => {
            let blocks = Combinations::new(v, k)
                .filter(|s| s.iter().fold(0, |acc, &x| acc ^ x as u32) == 0)
                .collect();
            (blocks, (0..v as u32).map(|x| bit_label(x, n)).collect())
        }
        BooleanDesignSpec::Projective { n, .. } => {
            let blocks = Combinations::new(v, k)
                .filter(|s| s.iter().fold(0, |acc, &i| acc ^ (i as u32 + 1)) == 0)
                .collect();
            (blocks, nonzero_vectors(n).into_iter().map(|x| bit_label(x, n)).collect())
        }
        BooleanDesignSpec::Dependent { n, .. } => {
            let vectors = nonzero_vectors(n);
            let blocks = Combinations::new(v, k)
                .filter(|s| {
                    let members: Vec<u32> = s.iter().map(|&i| vectors[i]).collect();
                    gf2_rank(&members) < k
                })
                .collect();
            (blocks, vectors.iter().map(|&x| bit_label(x, n)).collect())
        }
    };
    let design = Design::new(v, k, blocks)?.with_labels(labels)?;
    Ok(BooleanDesign { spec, design })
}

/// Vectors of a projective block, given as point indices.
pub fn block_vectors(block: &[usize]) -> Vec<u32> {
    block.iter().map(|&i| i as u32 + 1).collect()
}

/// Whether the vectors of GF(2)^n in `block` sum to zero.
pub fn is_zero_sum(block: &[u32]) -> bool {
    xor_fold(block) == 0
}

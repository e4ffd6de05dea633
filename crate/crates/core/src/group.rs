//! The universal abelian group of a design.
//!
//! For a design on points `0..v`, let `G` be the free abelian group on the
//! points and `R` the subgroup generated by the block sums (the rows of the
//! incidence matrix). `G_D = G / R` is the largest abelian group in which
//! every block sums to zero, and each point maps to its coset.
//!
//! With `U·A·V = S` in Smith form, `x ↦ x·V` carries the row lattice of `A`
//! onto that of `S`, so the image of point `i` is row `i` of `V`, read
//! modulo the invariant factors.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::design::{Design, DesignParams};
use crate::error::{Error, Result};
use crate::matrix::int_to_json;
use crate::normal_form::{hermite_normal_form, smith_diagonal_and_columns};
use crate::partition::find_block_partition;

/// A finitely generated abelian group `Z_{d1} ⊕ … ⊕ Z_{dm} ⊕ Z^free_rank`
/// with `d1 | d2 | … | dm` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    /// Builds the group from invariant factors; factors equal to 1 are dropped.
    pub fn new(mut torsion: Vec<BigInt>, free_rank: usize) -> Result<Self> {
        torsion.retain(|d| !d.is_one());
        if let Some(d) = torsion.iter().find(|d| d.is_zero() || d.is_negative()) {
            return Err(Error::audit("invariant factors", format!("factor {d} is not positive")));
        }
        if let Some(w) = torsion.windows(2).find(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::audit(
                "invariant factors",
                format!("{} does not divide {}", w[0], w[1]),
            ));
        }
        Ok(AbelianGroup { torsion, free_rank })
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Least `e > 0` with `e·x = 0` for all `x`; `None` for infinite groups.
    pub fn exponent(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.last().cloned().unwrap_or_else(BigInt::one))
    }

    /// Prime-power cyclic factors, sorted ascending.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for d in &self.torsion {
            let mut rest = d.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= rest {
                if rest.is_multiple_of(&p) {
                    let mut q = BigInt::one();
                    while rest.is_multiple_of(&p) {
                        rest /= &p;
                        q *= &p;
                    }
                    out.push(q);
                }
                p += 1;
            }
            if !rest.is_one() {
                out.push(rest);
            }
        }
        out.sort();
        out
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            torsion_coords: vec![BigInt::zero(); self.torsion.len()],
            free_coords: vec![BigInt::zero(); self.free_rank],
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            torsion_coords: a
                .torsion_coords
                .iter()
                .zip(&b.torsion_coords)
                .zip(&self.torsion)
                .map(|((x, y), d)| (x + y).mod_floor(d))
                .collect(),
            free_coords: a
                .free_coords
                .iter()
                .zip(&b.free_coords)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    /// `n·x` for an integer `n`.
    pub fn scale(&self, n: &BigInt, x: &GroupElement) -> GroupElement {
        GroupElement {
            torsion_coords: x
                .torsion_coords
                .iter()
                .zip(&self.torsion)
                .map(|(c, d)| (n * c).mod_floor(d))
                .collect(),
            free_coords: x.free_coords.iter().map(|c| n * c).collect(),
        }
    }

    pub fn is_zero(&self, x: &GroupElement) -> bool {
        x.torsion_coords.iter().all(Zero::is_zero) && x.free_coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .torsion
            .iter()
            .map(|d| format!("Z{d}"))
            .chain(std::iter::repeat_n("Z".to_string(), self.free_rank))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// An element of an [`AbelianGroup`] in invariant-factor coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub torsion_coords: Vec<BigInt>,
    pub free_coords: Vec<BigInt>,
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion_coords.iter().map(ToString::to_string).collect();
        write!(f, "({}", t.join(","))?;
        if !self.free_coords.is_empty() {
            let z: Vec<String> = self.free_coords.iter().map(ToString::to_string).collect();
            write!(f, ";{}", z.join(","))?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub group: AbelianGroup,
    pub images: Vec<GroupElement>,
    pub injective: bool,
}

impl EmbeddingResult {
    /// First pair of points `i < j` sharing an image.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut seen: HashMap<&GroupElement, usize> = HashMap::new();
        for (j, img) in self.images.iter().enumerate() {
            if let Some(&i) = seen.get(img) {
                return Some((i, j));
            }
            seen.insert(img, j);
        }
        None
    }

    /// Sum of the images of the points of `block`.
    pub fn block_sum(&self, block: &[usize]) -> GroupElement {
        block.iter().fold(self.group.zero(), |acc, &p| {
            self.group.add(&acc, &self.images[p])
        })
    }

    pub fn report(&self) -> GroupReport {
        GroupReport {
            torsion: self.group.torsion.iter().map(int_to_json).collect(),
            free_rank: self.group.free_rank,
            injective: self.injective,
            exponent: self.group.exponent().map(|e| int_to_json(&e)),
            order: self.group.order().map(|o| o.to_string()),
        }
    }
}

/// Wire form: `{"torsion":[..],"free_rank":n,"injective":b,"exponent":e,"order":"<decimal>"}`.
///
/// `exponent` and `order` are `null` for infinite groups.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupReport {
    pub torsion: Vec<Value>,
    pub free_rank: usize,
    pub injective: bool,
    pub exponent: Option<Value>,
    pub order: Option<String>,
}

/// Computes `G_D` and the image of every point.
///
/// # Panics
///
/// Panics if some block fails to sum to zero, which would mean the Smith
/// reduction is wrong.
pub fn embedding_group(design: &Design) -> EmbeddingResult {
    let a = design.incidence_matrix();
    let v = design.v();
    let (diag, col_transform) = smith_diagonal_and_columns(&a);
    // column j of S carries factor d_j; columns past the diagonal are free
    let factor = |j: usize| diag.get(j).cloned().unwrap_or_else(BigInt::zero);
    let torsion_cols: Vec<usize> = (0..v).filter(|&j| factor(j) > BigInt::one()).collect();
    let free_cols: Vec<usize> = (0..v).filter(|&j| factor(j).is_zero()).collect();
    let group = AbelianGroup::new(
        torsion_cols.iter().map(|&j| factor(j)).collect(),
        free_cols.len(),
    )
    .expect("Smith diagonal is a divisibility chain");
    let images: Vec<GroupElement> = (0..v)
        .map(|i| GroupElement {
            torsion_coords: torsion_cols
                .iter()
                .map(|&j| col_transform.get(i, j).mod_floor(&factor(j)))
                .collect(),
            free_coords: free_cols
                .iter()
                .map(|&j| col_transform.get(i, j).clone())
                .collect(),
        })
        .collect();
    let mut result = EmbeddingResult {
        group,
        images,
        injective: false,
    };
    for block in design.blocks() {
        assert!(
            result.group.is_zero(&result.block_sum(block)),
            "block {block:?} does not sum to zero in G_D"
        );
    }
    result.injective = result.collision().is_none();
    result
}

/// Whether distinct points have distinct images in `G_D`.
pub fn is_embeddable(design: &Design) -> bool {
    embedding_group(design).injective
}

/// Integer block coefficients `w` with `w·A = e_i − e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityWitness {
    pub coefficients: Vec<BigInt>,
    pub i: usize,
    pub j: usize,
    /// `⟨wA, wA⟩ = w·A·Aᵀ·wᵀ`, always 2 for a genuine witness.
    pub norm: BigInt,
}

/// A certificate that two points collapse in `G_D`, or `None` if the
/// embedding is injective.
pub fn non_injectivity_witness(design: &Design) -> Result<Option<InjectivityWitness>> {
    let Some((i, j)) = embedding_group(design).collision() else {
        return Ok(None);
    };
    let a = design.incidence_matrix();
    let mut target = vec![BigInt::zero(); design.v()];
    target[i] = BigInt::one();
    target[j] = -BigInt::one();
    let hermite = hermite_normal_form(&a);
    let coefficients = hermite.solve(&target)?.ok_or_else(|| {
        Error::audit(
            "non-injectivity witness",
            format!("points {i} and {j} collide but e_i − e_j is not in the row lattice"),
        )
    })?;
    let combo = a.left_mul_vec(&coefficients)?;
    if combo != target {
        return Err(Error::audit("non-injectivity witness", "w·A differs from e_i − e_j"));
    }
    // w·A·Aᵀ·wᵀ computed through AAᵀ, independently of `combo`
    let aat = &a * &a.transpose();
    let w_aat = aat.left_mul_vec(&coefficients)?;
    let norm: BigInt = w_aat.iter().zip(&coefficients).map(|(x, y)| x * y).sum();
    let direct: BigInt = combo.iter().map(|x| x * x).sum();
    if norm != direct || norm != BigInt::from(2) {
        return Err(Error::audit(
            "⟨vA, vA⟩ = 2",
            format!("quadratic form gives {norm}, squared norm gives {direct}"),
        ));
    }
    Ok(Some(InjectivityWitness {
        coefficients,
        i,
        j,
        norm,
    }))
}

/// Result of checking that the exponent of `G_D` divides `k(r−λ)`, and
/// `r−λ` when the blocks contain a partition of the points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentReport {
    pub group: AbelianGroup,
    pub exponent: BigInt,
    pub bound: BigInt,
    /// Block indices of a partition of the points, when one exists.
    pub partition: Option<Vec<usize>>,
    pub partition_bound: Option<BigInt>,
}

pub fn exponent_audit(design: &Design, params: &DesignParams) -> Result<ExponentReport> {
    let lambda = params.lambda.ok_or(Error::InvalidStrength {
        t: params.t,
        k: params.k,
    })?;
    let group = embedding_group(design).group;
    let exponent = group.exponent().ok_or_else(|| {
        Error::audit(
            "exponent | k(r−λ)",
            format!("G_D = {group} is infinite"),
        )
    })?;
    let r_minus_lambda = BigInt::from(params.r) - BigInt::from(lambda);
    let bound = BigInt::from(params.k) * &r_minus_lambda;
    if !bound.is_multiple_of(&exponent) {
        return Err(Error::audit(
            "exponent | k(r−λ)",
            format!("{exponent} does not divide {bound}"),
        ));
    }
    let partition = find_block_partition(design);
    let partition_bound = partition.as_ref().map(|_| r_minus_lambda);
    if let Some(pb) = &partition_bound {
        if !pb.is_multiple_of(&exponent) {
            return Err(Error::audit(
                "exponent | (r−λ)",
                format!("{exponent} does not divide {pb}"),
            ));
        }
    }
    Ok(ExponentReport {
        group,
        exponent,
        bound,
        partition,
        partition_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::verify_design;
    use crate::fixtures;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn affine_plane_group() {
        let e = embedding_group(&fixtures::ag23_lines());
        assert_eq!(e.group.torsion(), ints(&[3, 3, 3]).as_slice());
        assert_eq!(e.group.free_rank(), 0);
        assert!(e.injective);
        assert_eq!(e.group.to_string(), "Z3 x Z3 x Z3");
    }

    #[test]
    fn parallel_pairs_group() {
        let e = embedding_group(&fixtures::ag23_parallel_pairs());
        assert_eq!(e.group.torsion(), ints(&[3, 3, 6]).as_slice());
        assert_eq!(e.group.elementary_divisors(), ints(&[2, 3, 3, 3]));
        assert_eq!(e.group.order(), Some(BigInt::from(54)));
        assert!(e.injective);
    }

    #[test]
    fn fano_group() {
        let e = embedding_group(&fixtures::fano());
        assert_eq!(e.group.torsion(), ints(&[2, 2, 6]).as_slice());
        assert_eq!(e.group.order(), Some(BigInt::from(24)));
        assert!(e.injective);
        assert_eq!(non_injectivity_witness(&fixtures::fano()).unwrap(), None);
    }

    #[test]
    fn sts13_collapses() {
        let d = fixtures::sts13();
        let e = embedding_group(&d);
        assert_eq!(e.group.torsion(), ints(&[3]).as_slice());
        assert!(!e.injective);
        let w = non_injectivity_witness(&d).unwrap().unwrap();
        assert_eq!(w.norm, BigInt::from(2));
        assert_eq!(w.coefficients.len(), 26);
    }

    #[test]
    fn empty_family_gives_free_group() {
        let d = Design::new(3, 2, vec![]).unwrap();
        let e = embedding_group(&d);
        assert_eq!(e.group.free_rank(), 3);
        assert!(e.injective);
        assert_eq!(e.group.to_string(), "Z x Z x Z");
        let r = e.report();
        assert_eq!(r.order, None);
        assert_eq!(r.exponent, None);
    }

    #[test]
    fn exponent_audits() {
        let ag = fixtures::ag23_lines();
        let report = exponent_audit(&ag, &verify_design(&ag, 2).unwrap()).unwrap();
        assert_eq!(report.exponent, BigInt::from(3));
        assert_eq!(report.bound, BigInt::from(9));
        assert_eq!(report.partition_bound, Some(BigInt::from(3)));

        let fano = fixtures::fano();
        let report = exponent_audit(&fano, &verify_design(&fano, 2).unwrap()).unwrap();
        assert_eq!(report.bound, BigInt::from(6));
        assert!(report.partition.is_none());
    }

    #[test]
    fn report_json_shape() {
        let r = embedding_group(&fixtures::ag23_lines()).report();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"torsion":[3,3,3],"free_rank":0,"injective":true,"exponent":3,"order":"27"}"#
        );
    }

    #[test]
    fn group_rejects_broken_chain() {
        assert!(AbelianGroup::new(ints(&[2, 3]), 0).is_err());
        let g = AbelianGroup::new(ints(&[1, 2, 4]), 1).unwrap();
        assert_eq!(g.torsion(), ints(&[2, 4]).as_slice());
        assert_eq!(g.exponent(), None);
    }
}

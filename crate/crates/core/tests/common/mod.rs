//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use designlattice::boolean::{build_design, BooleanDesignSpec};
use designlattice::{Budget, Design, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &[Vec<i64>]) -> i128 {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    permutations(n)
        .into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let prod: i128 = (0..n).map(|i| i128::from(m[i][p[i]])).product();
            if inversions % 2 == 0 {
                prod
            } else {
                -prod
            }
        })
        .sum()
}

fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = index_subsets(n - 1, k);
    for mut s in index_subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `i × i` minors, for `i = 1..=min(rows, cols)`.
pub fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|i| {
            let mut g: i128 = 0;
            for rs in index_subsets(rows, i) {
                for cs in index_subsets(cols, i) {
                    let minor: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                        .collect();
                    g = g.gcd(&leibniz_det(&minor));
                }
            }
            g
        })
        .collect()
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect()
}

pub fn to_matrix(m: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(m)
}

pub fn abs_det_is_one(m: &IntMatrix) -> bool {
    let d = m.determinant().unwrap();
    d == BigInt::from(1) || d == BigInt::from(-1)
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn as_i128(x: &BigInt) -> i128 {
    x.to_i128().expect("small integer")
}

/// Checks every defining property of a Smith decomposition; returns a failure message.
pub fn check_smith(m: &[Vec<i64>]) -> Result<(), String> {
    let a = to_matrix(m);
    let sd = designlattice::smith_normal_form(&a);
    if &(&sd.u * &a) * &sd.v != sd.s {
        return Err(format!("U·A·V != S for {m:?}"));
    }
    if !abs_det_is_one(&sd.u) || !abs_det_is_one(&sd.v) {
        return Err(format!("transform not unimodular for {m:?}"));
    }
    for i in 0..sd.s.rows() {
        for j in 0..sd.s.cols() {
            if i != j && !sd.s.get(i, j).is_zero() {
                return Err(format!("S not diagonal for {m:?}"));
            }
        }
    }
    if sd.diag.iter().any(|d| d < &BigInt::zero()) {
        return Err(format!("negative invariant for {m:?}"));
    }
    for w in sd.diag.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            w[1].is_multiple_of(&w[0])
        };
        if !ok {
            return Err(format!("divisibility chain broken {:?} for {m:?}", sd.diag));
        }
    }
    if m.len() <= 5 && m[0].len() <= 5 {
        let divisors = determinantal_divisors(m);
        let mut prefix: i128 = 1;
        for (i, d) in sd.diag.iter().enumerate() {
            prefix *= as_i128(d);
            if prefix != divisors[i].abs() {
                return Err(format!(
                    "d_1..d_{} = {prefix}, minors gcd = {} for {m:?}",
                    i + 1,
                    divisors[i]
                ));
            }
        }
    }
    Ok(())
}

/// Checks the Hermite decomposition of `m`; returns a failure message.
pub fn check_hermite(m: &[Vec<i64>]) -> Result<(), String> {
    let a = to_matrix(m);
    let hd = designlattice::hermite_normal_form(&a);
    if &hd.u * &a != hd.h {
        return Err(format!("U·M != H for {m:?}"));
    }
    if !abs_det_is_one(&hd.u) {
        return Err(format!("U not unimodular for {m:?}"));
    }
    for (r, &c) in hd.pivots.iter().enumerate() {
        let pivot = hd.h.get(r, c);
        if pivot <= &BigInt::zero() {
            return Err(format!("nonpositive pivot for {m:?}"));
        }
        if hd.h.row(r)[..c].iter().any(|e| !e.is_zero()) {
            return Err(format!("nonzero left of pivot for {m:?}"));
        }
        for above in 0..r {
            let e = hd.h.get(above, c);
            if e < &BigInt::zero() || e >= pivot {
                return Err(format!("unreduced entry above pivot for {m:?}"));
            }
        }
        if r > 0 && c <= hd.pivots[r - 1] {
            return Err(format!("pivots not increasing for {m:?}"));
        }
    }
    for r in hd.pivots.len()..hd.h.rows() {
        if hd.h.row(r).iter().any(|e| !e.is_zero()) {
            return Err(format!("nonzero row after pivots for {m:?}"));
        }
    }
    let sd = designlattice::smith_normal_form(&a);
    if hd.rank() != sd.rank() || a.rank() != sd.rank() {
        return Err(format!("ranks disagree for {m:?}"));
    }
    for r in 0..a.rows() {
        if !designlattice::lattice_contains(&hd.h, a.row(r)).unwrap() {
            return Err(format!("generating row {r} not in lattice for {m:?}"));
        }
    }
    Ok(())
}

/// All invertible `n × n` matrices over GF(2), as column bitmasks.
pub fn general_linear_group(n: u32) -> Vec<Vec<u32>> {
    let size = 1u32 << n;
    let mut out = Vec::new();
    let total = (size as u64).pow(n);
    for code in 0..total {
        let cols: Vec<u32> = (0..n)
            .map(|i| ((code / (size as u64).pow(i)) % size as u64) as u32)
            .collect();
        // invertible iff the columns span: check all 2^n − 1 nonzero combinations are nonzero
        let ok = (1..size).all(|mask| {
            (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0, |acc, i| acc ^ cols[i as usize])
                != 0
        });
        if ok {
            out.push(cols);
        }
    }
    out
}

pub fn apply_linear(cols: &[u32], x: u32) -> u32 {
    cols.iter()
        .enumerate()
        .filter(|&(i, _)| x >> i & 1 == 1)
        .fold(0, |acc, (_, &c)| acc ^ c)
}

/// Orbit of a set of vectors under a matrix group.
pub fn orbit(group: &[Vec<u32>], block: &[u32]) -> BTreeSet<Vec<u32>> {
    group
        .iter()
        .map(|g| {
            let mut image: Vec<u32> = block.iter().map(|&x| apply_linear(g, x)).collect();
            image.sort_unstable();
            image
        })
        .collect()
}

/// Number of blocks through each `s`-subset, brute force over all `C(v, s)` subsets.
pub fn exhaustive_level_counts(design: &Design, s: usize) -> BTreeSet<usize> {
    index_subsets(design.v(), s)
        .iter()
        .map(|sub| design.count_containing(sub))
        .collect()
}

pub fn build(spec: BooleanDesignSpec) -> Design {
    build_design(spec, Budget::default()).unwrap().design
}

/// Every fixture that is a 2-design, with a name.
pub fn two_design_fixtures() -> Vec<(String, Design)> {
    use designlattice::fixtures;
    let mut out = vec![
        ("fano".to_string(), fixtures::fano()),
        ("fano complement".to_string(), fixtures::fano().complement().unwrap()),
        ("AG(2,3) lines".to_string(), fixtures::ag23_lines()),
        ("AG(2,3) parallel pairs".to_string(), fixtures::ag23_parallel_pairs()),
        ("STS(13)".to_string(), fixtures::sts13()),
        ("BQS(8)".to_string(), build(BooleanDesignSpec::Affine { n: 3, k: 4 })),
        ("BQS(16)".to_string(), build(BooleanDesignSpec::Affine { n: 4, k: 4 })),
        ("GF(9) k=3".to_string(), build(BooleanDesignSpec::Field { p: 3, t: 2, k: 3 })),
        ("GF(8) k=4".to_string(), build(BooleanDesignSpec::Field { p: 2, t: 3, k: 4 })),
    ];
    for n in 3..=4u32 {
        for k in 3..=(1usize << n) - 2 {
            let d = build(BooleanDesignSpec::Projective { n, k });
            if !d.is_empty() {
                out.push((format!("projective({n},{k})"), d));
            }
        }
    }
    out
}

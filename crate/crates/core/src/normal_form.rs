//! Hermite and Smith normal forms with unimodular transforms, ranks over
//! finite prime fields, and membership in integer row lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Row-style Hermite form `H = U·M`.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and zero
/// rows come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HermiteDecomposition {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `c` with `c·H = x`, or `None` if `x` is outside the row lattice.
    pub fn coordinates(&self, x: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        solve_against_pivots(&self.h, &self.pivots, x)
    }

    /// A vector `w` with `w·M = x` for the original matrix `M`, if one exists.
    pub fn solve(&self, x: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        let Some(coords) = self.coordinates(x)? else {
            return Ok(None);
        };
        let mut padded = coords;
        padded.resize(self.h.rows(), BigInt::zero());
        Ok(Some(self.u.left_mul_vec(&padded)?))
    }
}

/// Computes `H = U·M` in row-style Hermite normal form.
pub fn hermite_normal_form(m: &IntMatrix) -> HermiteDecomposition {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        while let Some(p) = (r..rows)
            .filter(|&i| !h.get(i, c).is_zero())
            .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()))
        {
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -(h.get(i, c) / h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                clean &= h.get(i, c).is_zero();
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q = -h.get(i, c).div_floor(&pivot);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HermiteDecomposition { h, u, pivots }
}

fn solve_against_pivots(
    h: &IntMatrix,
    pivots: &[usize],
    x: &[BigInt],
) -> Result<Option<Vec<BigInt>>> {
    if x.len() != h.cols() {
        return Err(Error::DimensionMismatch {
            expected: h.cols(),
            found: x.len(),
        });
    }
    let mut residual = x.to_vec();
    let mut coords = Vec::with_capacity(pivots.len());
    for (i, &c) in pivots.iter().enumerate() {
        // entries left of this pivot are past every earlier pivot and must be zero already
        let start = if i == 0 { 0 } else { pivots[i - 1] + 1 };
        if residual[start..c].iter().any(|e| !e.is_zero()) {
            return Ok(None);
        }
        let (q, rem) = residual[c].div_rem(h.get(i, c));
        if !rem.is_zero() {
            return Ok(None);
        }
        if !q.is_zero() {
            for (res, e) in residual.iter_mut().zip(h.row(i)).skip(c) {
                if !e.is_zero() {
                    *res -= &q * e;
                }
            }
        }
        coords.push(q);
    }
    Ok(residual.iter().all(Zero::is_zero).then_some(coords))
}

/// Whether `x` lies in the integer row span of the Hermite form `h`.
pub fn lattice_contains(h: &IntMatrix, x: &[BigInt]) -> Result<bool> {
    let pivots: Vec<usize> = (0..h.rows())
        .map_while(|i| h.row(i).iter().position(|e| !e.is_zero()))
        .collect();
    Ok(solve_against_pivots(h, &pivots, x)?.is_some())
}

/// `S = U·A·V` with `S` diagonal and `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Nonnegative diagonal of `s`, length `min(rows, cols)`.
    pub diag: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

/// The Smith form of `m` together with both unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (s, u, v) = smith_reduce(m, true);
    let diag = (0..m.rows().min(m.cols()))
        .map(|i| s.get(i, i).clone())
        .collect();
    SmithDecomposition {
        s,
        u: u.expect("left transform tracked"),
        v,
        diag,
    }
}

/// Diagonal and column transform only; skips the (often large) left transform.
pub(crate) fn smith_diagonal_and_columns(m: &IntMatrix) -> (Vec<BigInt>, IntMatrix) {
    let (s, _, v) = smith_reduce(m, false);
    let diag = (0..m.rows().min(m.cols()))
        .map(|i| s.get(i, i).clone())
        .collect();
    (diag, v)
}

fn smallest_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    // row-major scan with strict comparison: ties keep the lowest row, then column
    for i in t..s.rows() {
        for j in t..s.cols() {
            let e = s.get(i, j);
            if e.is_zero() {
                continue;
            }
            let a = e.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                if a.is_one() {
                    return Some((i, j));
                }
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn smith_reduce(m: &IntMatrix, track_left: bool) -> (IntMatrix, Option<IntMatrix>, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = track_left.then(|| IntMatrix::identity(rows));
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&s, t) else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = -(s.get(i, t) / s.get(t, t));
                s.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                clean &= s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = -(s.get(t, j) / s.get(t, t));
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }

            // divisibility repair: fold an offending row into the pivot row
            let pivot = s.get(t, t).clone();
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    (s, u, v)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of `m` reduced modulo the prime `p`.
pub fn rank_over_gf(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let modulus = BigInt::from(p);
    let mut a: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|e| e.mod_floor(&modulus).to_u64().expect("residue below p"))
                .collect()
        })
        .collect();
    let p128 = u128::from(p);
    let mulmod = |x: u64, y: u64| (u128::from(x) * u128::from(y) % p128) as u64;
    let inverse = |x: u64| {
        // Fermat: x^(p-2)
        let (mut base, mut exp, mut acc) = (x, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(pr) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(pr, rank);
        let inv = inverse(a[rank][c]);
        for e in a[rank].iter_mut() {
            *e = mulmod(*e, inv);
        }
        let pivot_row = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mulmod(f, y)) % p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    Ok(rank)
}

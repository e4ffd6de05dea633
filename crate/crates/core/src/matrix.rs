//! Dense matrices of arbitrary-precision integers.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// A row-major `rows × cols` matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// # Panics
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(rows.len(), cols, |i, j| {
            assert_eq!(rows[i].len(), cols, "ragged row {i}");
            rows[i][j].into()
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: x.len(),
            });
        }
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += xi * a;
                }
            }
        }
        Ok(out)
    }

    /// Exact product, or `DimensionMismatch` when the inner sizes differ.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor · row[source]`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            let s = &self.entries[source * c + j];
            if !s.is_zero() {
                let delta = factor * s;
                self.entries[target * c + j] += delta;
            }
        }
    }

    /// `col[target] += factor · col[source]`.
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        let c = self.cols;
        for i in 0..self.rows {
            let s = &self.entries[i * c + source];
            if !s.is_zero() {
                let delta = factor * s;
                self.entries[i * c + target] += delta;
            }
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for e in &mut self.entries[i * self.cols..(i + 1) * self.cols] {
            *e = -std::mem::take(e);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, val);
                }
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1))
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, rank);
            let pivot = m.get(rank, col).clone();
            for i in rank + 1..m.rows {
                let a = m.get(i, col).clone();
                if a.is_zero() {
                    continue;
                }
                let g = pivot.gcd(&a);
                let (mp, ma) = (&pivot / &g, &a / &g);
                for j in col..m.cols {
                    let val = m.get(i, j) * &mp - m.get(rank, j) * &ma;
                    m.set(i, j, val);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Largest absolute entry, zero for the empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatrixJson::from(self)).expect("matrix JSON serialization")
    }

    /// Parses `{"rows":r,"cols":c,"entries":[[...],...]}`; entries may be JSON
    /// integers or decimal strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MatrixJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} ", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", e.to_string())?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Wire form of [`IntMatrix`].
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
}

/// JSON number when the value fits in 64 bits, decimal string otherwise.
pub fn int_to_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(small) => Value::from(small),
        None => Value::String(x.to_string()),
    }
}

pub fn int_from_json(value: &Value) -> Result<BigInt> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::MalformedMatrix(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::MalformedMatrix(format!("{s:?} is not a decimal integer"))),
        other => Err(Error::MalformedMatrix(format!("unexpected entry {other}"))),
    }
}

impl From<&IntMatrix> for MatrixJson {
    fn from(m: &IntMatrix) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            entries: (0..m.rows)
                .map(|i| m.row(i).iter().map(int_to_json).collect())
                .collect(),
        }
    }
}

impl TryFrom<MatrixJson> for IntMatrix {
    type Error = Error;

    fn try_from(raw: MatrixJson) -> Result<Self> {
        if raw.entries.len() != raw.rows {
            return Err(Error::MalformedMatrix(format!(
                "declared {} rows, found {}",
                raw.rows,
                raw.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(raw.rows * raw.cols);
        for (i, row) in raw.entries.iter().enumerate() {
            if row.len() != raw.cols {
                return Err(Error::MalformedMatrix(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    raw.cols
                )));
            }
            for v in row {
                entries.push(int_from_json(v)?);
            }
        }
        IntMatrix::from_entries(raw.rows, raw.cols, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let m = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant().unwrap(), BigInt::zero());
        assert_eq!(m.rank(), 2);
        let id = IntMatrix::identity(4);
        assert_eq!(id.determinant().unwrap(), BigInt::one());
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.determinant().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn products() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(&a * &b, IntMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        let x = [BigInt::from(1), BigInt::from(-1)];
        assert_eq!(
            a.left_mul_vec(&x).unwrap(),
            vec![BigInt::from(-2), BigInt::from(-2)]
        );
        assert!(a.checked_mul(&IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn json_keeps_large_entries_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut m = IntMatrix::zeros(1, 2);
        m.set(0, 0, big.clone());
        m.set(0, 1, BigInt::from(-7));
        let text = m.to_json();
        assert_eq!(
            text,
            r#"{"rows":1,"cols":2,"entries":[["123456789012345678901234567890",-7]]}"#
        );
        assert_eq!(IntMatrix::from_json(&text).unwrap(), m);
    }

    #[test]
    fn json_rejects_ragged_rows() {
        let err = IntMatrix::from_json(r#"{"rows":2,"cols":2,"entries":[[1,2],[3]]}"#);
        assert!(matches!(err, Err(Error::MalformedMatrix(_))));
        let err = IntMatrix::from_json(r#"{"rows":1,"cols":1,"entries":[[1.5]]}"#);
        assert!(err.is_err());
    }
}

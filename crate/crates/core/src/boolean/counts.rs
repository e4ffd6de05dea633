//! Block counts `b_k` of the projective zero-sum designs on the `v = 2^n − 1`
//! nonzero vectors of GF(2)^n, by three independent routes:
//!
//! * exhaustive enumeration of zero-sum subsets,
//! * the closed form `b_k = C(v,k)·α_h` with `h = ⌊(k−1)/2⌋`,
//! * the weight distribution of the `[v, v−n]` Hamming code, obtained from
//!   its dual (the simplex code) by the MacWilliams transform.
//!
//! A zero-sum `k`-subset of nonzero vectors is exactly the support of a
//! weight-`k` codeword of the Hamming code whose parity-check columns are
//! all nonzero vectors, which is why the three agree.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, Budget};
use crate::error::{Error, Result};

use super::construct::nonzero_vectors;
use super::gf2::count_zero_sum_subsets;

/// Largest dimension accepted by the closed-form and MacWilliams routes.
pub const MAX_COUNT_DIMENSION: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Brute,
    ClosedForm,
    MacWilliams,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Brute => "brute",
            CountMethod::ClosedForm => "closed-form",
            CountMethod::MacWilliams => "macwilliams",
        })
    }
}

/// `b[k]` for `k = 0..=v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u32,
    pub v: u64,
    pub b: Vec<BigUint>,
}

impl CountTable {
    pub fn get(&self, k: usize) -> &BigUint {
        &self.b[k]
    }

    /// Checks `(k+1)·b_{k+1} + b_k + (v−k+1)·b_{k−1} = C(v,k)` for `1 <= k <= v−1`,
    /// returning the first `k` where it fails.
    pub fn recurrence_violation(&self) -> Option<usize> {
        let v = self.v as usize;
        (1..v).find(|&k| {
            let lhs = &self.b[k + 1] * (k as u64 + 1)
                + &self.b[k]
                + &self.b[k - 1] * (v as u64 - k as u64 + 1);
            lhs != binomial(self.v, k as u64)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CountTableJson::from(self)).expect("count table serialization")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CountTableJson = serde_json::from_str(text)?;
        let b = raw
            .b
            .iter()
            .map(|s| {
                s.parse::<BigUint>()
                    .map_err(|_| Error::SpecInvalid(format!("{s:?} is not a decimal count")))
            })
            .collect::<Result<Vec<_>>>()?;
        if b.len() as u64 != raw.v + 1 {
            return Err(Error::SpecInvalid(format!(
                "{} counts for v = {}",
                b.len(),
                raw.v
            )));
        }
        Ok(CountTable {
            n: raw.n,
            v: raw.v,
            b,
        })
    }
}

/// Wire form: `{"n":n,"v":v,"b":["<decimal>",...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct CountTableJson {
    pub n: u32,
    pub v: u64,
    pub b: Vec<String>,
}

impl From<&CountTable> for CountTableJson {
    fn from(t: &CountTable) -> Self {
        CountTableJson {
            n: t.n,
            v: t.v,
            b: t.b.iter().map(ToString::to_string).collect(),
        }
    }
}

fn check_count_dimension(n: u32) -> Result<u64> {
    if (1..=MAX_COUNT_DIMENSION).contains(&n) {
        Ok((1u64 << n) - 1)
    } else {
        Err(Error::SpecInvalid(format!(
            "dimension {n} outside 1..={MAX_COUNT_DIMENSION}"
        )))
    }
}

/// The full table `b_0..b_v` by the chosen method.
pub fn block_counts(n: u32, method: CountMethod, budget: Budget) -> Result<CountTable> {
    let v = check_count_dimension(n)?;
    let b = match method {
        CountMethod::Brute => {
            // every subset of the v points is visited once across all k
            budget.check(&(BigUint::one() << v))?;
            let points = nonzero_vectors(n);
            (0..=v as usize)
                .map(|k| BigUint::from(count_zero_sum_subsets(&points, k)))
                .collect()
        }
        CountMethod::ClosedForm => (0..=v).map(|k| closed_form_count(v, k)).collect::<Result<_>>()?,
        CountMethod::MacWilliams => hamming_weight_distribution(n),
    };
    Ok(CountTable { n, v, b })
}

/// `b_k` for a single `k` by exhaustive enumeration of `C(v, k)` subsets.
pub fn brute_count(n: u32, k: usize, budget: Budget) -> Result<BigUint> {
    let v = check_count_dimension(n)?;
    budget.check(&binomial(v, k as u64))?;
    Ok(BigUint::from(count_zero_sum_subsets(&nonzero_vectors(n), k)))
}

/// `α_h` as the alternating sum of running products
/// `∏_{j=0}^{i} (1 + 2(h−j)) / (v − 2(h−j−1))`.
pub fn alpha_product_form(v: u64, h: u64) -> BigRational {
    let int = |x: i128| BigRational::from_integer(BigInt::from(x));
    let (v, h) = (i128::from(v), i128::from(h));
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for i in 0..h - 1 {
        term *= BigRational::new(
            BigInt::from(1 + 2 * (h - i)),
            BigInt::from(v - 2 * (h - i - 1)),
        );
        if i % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    (int(1) - sum) / int(v - 2 * h)
}

/// `n!!`, with `0!! = (−1)!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut m = n;
    while m > 1 {
        acc *= m as u64;
        m -= 2;
    }
    acc
}

/// `α_h` as `1/(v−2h) · Σ_{i<h} (−1)^i (2h+1)!!/(2(h−i)+1)!! · (v−2h)!!/(v−2(h−i))!!`.
pub fn alpha_double_factorial_form(v: u64, h: u64) -> BigRational {
    let (v, h) = (v as i64, h as i64);
    let big = |x: BigUint| BigInt::from(x);
    let top_odd = big(double_factorial(2 * h + 1));
    let top_v = big(double_factorial(v - 2 * h));
    let mut sum = BigRational::zero();
    for i in 0..h {
        let term = BigRational::new(
            &top_odd * &top_v,
            big(double_factorial(2 * (h - i) + 1)) * big(double_factorial(v - 2 * (h - i))),
        );
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum / BigRational::from_integer(BigInt::from(v - 2 * h))
}

/// `b_k` from the closed form; `b_0 = 1` and `b_1 = b_2 = 0` directly.
///
/// Both expressions for `α_h` are evaluated and must agree.
pub fn closed_form_count(v: u64, k: u64) -> Result<BigUint> {
    match k {
        0 => return Ok(BigUint::one()),
        1 | 2 => return Ok(BigUint::zero()),
        _ => {}
    }
    if k > v {
        return Ok(BigUint::zero());
    }
    let h = (k - 1) / 2;
    let alpha = alpha_product_form(v, h);
    let alt = alpha_double_factorial_form(v, h);
    if alpha != alt {
        return Err(Error::audit(
            "α_h forms agree",
            format!("v = {v}, h = {h}: {alpha} vs {alt}"),
        ));
    }
    let count = alpha * BigRational::from_integer(BigInt::from(binomial(v, k)));
    if !count.is_integer() || count.is_negative() {
        return Err(Error::audit(
            "b_k integral",
            format!("v = {v}, k = {k}: {count}"),
        ));
    }
    Ok(count
        .to_integer()
        .to_biguint()
        .expect("nonnegative count"))
}

/// Weight distribution of the Hamming code of length `v = 2^n − 1`.
///
/// The dual simplex code has one word of weight 0 and `v` words of weight
/// `(v+1)/2`, so its enumerator is `x^v + v·x^{(v−1)/2}·y^{(v+1)/2}` and
///
/// `A(x,y) = 2^{−n}[(x+y)^v + v·(x+y)^{(v−1)/2}(x−y)^{(v+1)/2}]`.
///
/// The second product equals `(x²−y²)^a·(x−y)` with `a = (v−1)/2`, whose
/// `y^k` coefficient is `(−1)^{⌈k/2⌉}·C(a, ⌊k/2⌋)`.
pub fn hamming_weight_distribution(n: u32) -> Vec<BigUint> {
    let v = (1u64 << n) - 1;
    let a = (v - 1) / 2;
    let scale = BigInt::one() << n;
    let vb = BigInt::from(v);
    let mut out = Vec::with_capacity(v as usize + 1);
    // running binomials C(v, k) and C(a, ⌊k/2⌋)
    let mut c_v = BigInt::one();
    let mut c_a = BigInt::one();
    for k in 0..=v {
        if k > 0 {
            c_v = c_v * BigInt::from(v - k + 1) / BigInt::from(k);
            if k % 2 == 0 {
                let m = k / 2;
                c_a = if m > a {
                    BigInt::zero()
                } else {
                    c_a * BigInt::from(a - m + 1) / BigInt::from(m)
                };
            }
        }
        let sign_negative = k.div_ceil(2) % 2 == 1;
        let mixed = if sign_negative { -&c_a } else { c_a.clone() };
        let total = &c_v + &vb * mixed;
        let (q, r) = total.div_rem(&scale);
        debug_assert!(r.is_zero(), "weight count not divisible by 2^n");
        out.push(q.to_biguint().expect("nonnegative weight count"));
    }
    out
}

/// `b_k` as a machine integer, when it fits.
pub fn count_u64(table: &CountTable, k: usize) -> Option<u64> {
    table.b.get(k).and_then(ToPrimitive::to_u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn n3_table_all_methods() {
        let expected = table(&[1, 0, 0, 7, 7, 0, 0, 1]);
        for method in [CountMethod::Brute, CountMethod::ClosedForm, CountMethod::MacWilliams] {
            let t = block_counts(3, method, Budget::default()).unwrap();
            assert_eq!(t.b, expected, "{method}");
            assert_eq!(t.recurrence_violation(), None);
        }
    }

    #[test]
    fn alpha_values() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(alpha_product_form(7, 1), r(1, 5));
        assert_eq!(alpha_product_form(7, 2), r(0, 1));
        assert_eq!(alpha_product_form(7, 3), r(1, 1));
        assert_eq!(alpha_double_factorial_form(7, 1), r(1, 5));
        assert_eq!(alpha_double_factorial_form(15, 2), r(8, 143));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), BigUint::one());
        assert_eq!(double_factorial(0), BigUint::one());
        assert_eq!(double_factorial(7), BigUint::from(105u32));
        assert_eq!(double_factorial(8), BigUint::from(384u32));
    }

    #[test]
    fn recurrence_instance() {
        let t = block_counts(3, CountMethod::Brute, Budget::default()).unwrap();
        // 4·b_4 + b_3 + 5·b_2 = C(7,3)
        let lhs = t.get(4) * 4u32 + t.get(3) + t.get(2) * 5u32;
        assert_eq!(lhs, BigUint::from(35u32));
    }

    #[test]
    fn recurrence_detects_corruption() {
        let mut t = block_counts(4, CountMethod::MacWilliams, Budget::default()).unwrap();
        t.b[5] += 1u32;
        assert_eq!(t.recurrence_violation(), Some(4));
    }

    #[test]
    fn brute_respects_budget() {
        assert!(matches!(
            block_counts(5, CountMethod::Brute, Budget::default()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            brute_count(5, 3, Budget::default()).unwrap(),
            BigUint::from(155u32)
        );
    }

    #[test]
    fn json_round_trip() {
        let t = block_counts(3, CountMethod::MacWilliams, Budget::default()).unwrap();
        let text = t.to_json();
        assert_eq!(text, r#"{"n":3,"v":7,"b":["1","0","0","7","7","0","0","1"]}"#);
        assert_eq!(CountTable::from_json(&text).unwrap(), t);
        assert!(CountTable::from_json(r#"{"n":3,"v":7,"b":["1"]}"#).is_err());
    }

    #[test]
    fn rejects_dimension_out_of_range() {
        assert!(block_counts(0, CountMethod::MacWilliams, Budget::default()).is_err());
        assert!(block_counts(17, CountMethod::MacWilliams, Budget::default()).is_err());
    }
}

//! Finite fields GF(p^t) as polynomial residues modulo a monic irreducible.
//!
//! An element is encoded as the integer `c0 + c1·p + … + c_{t−1}·p^{t−1}`
//! of its coefficient vector, so the elements are exactly `0..q`.

use crate::error::{Error, Result};
use crate::normal_form::is_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    t: u32,
    q: u64,
    /// Monic modulus, coefficients from degree 0 up to degree `t`.
    modulus: Vec<u64>,
}

/// Remainder of `f` modulo the monic `g`, coefficients low to high.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &c) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `code`.
fn monic_from_code(code: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut coeffs = Vec::with_capacity(deg as usize + 1);
    let mut c = code;
    for _ in 0..deg {
        coeffs.push(c % p);
        c /= p;
    }
    coeffs.push(1);
    coeffs
}

/// Irreducibility over GF(p) by trial division with every monic polynomial
/// of degree `1..=deg/2`.
pub fn is_irreducible_poly(f: &[u64], p: u64) -> bool {
    let deg = f.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let g = monic_from_code(code, d, p);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^t) with the smallest monic irreducible modulus, ordering
    /// candidates by the base-`p` value of their lower coefficients.
    pub fn new(p: u64, t: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if t == 0 {
            return Err(Error::SpecInvalid("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(t)
            .filter(|&q| q <= u64::from(u32::MAX))
            .ok_or_else(|| Error::SpecInvalid(format!("field of order {p}^{t} is too large")))?;
        let modulus = (0..q)
            .map(|code| monic_from_code(code, t, p))
            .find(|f| is_irreducible_poly(f, p))
            .expect("an irreducible polynomial exists in every degree");
        Ok(FiniteField { p, t, q, modulus })
    }

    /// The field with `q` elements, `q` a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, t) = prime_power(q)
            .ok_or_else(|| Error::SpecInvalid(format!("{q} is not a prime power")))?;
        Self::new(p, t)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn coefficients(&self, x: u64) -> Vec<u64> {
        let mut c = x;
        (0..self.t)
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.t {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        let c: Vec<u64> = self
            .coefficients(a)
            .into_iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.encode(&c)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u64; 2 * self.t as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.t as usize, 0);
        self.encode(&r)
    }

    /// Human-readable polynomial form, e.g. `2+x` or `x^2`.
    pub fn label(&self, x: u64) -> String {
        let terms: Vec<String> = self
            .coefficients(x)
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// `(p, t)` with `q = p^t`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut t) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        t += 1;
    }
    (rest == 1).then_some((p, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_inverses(f: &FiniteField) -> bool {
        (1..f.order()).all(|a| (1..f.order()).any(|b| f.mul(a, b) == 1))
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(5, 1).unwrap().modulus(), &[0, 1]);
    }

    #[test]
    fn fields_are_fields() {
        for (p, t) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 1)] {
            let f = FiniteField::new(p, t).unwrap();
            assert!(has_inverses(&f), "GF({p}^{t})");
            for a in 0..f.order() {
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn multiplication_distributes() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::NotPrime(4))));
        assert!(FiniteField::new(2, 0).is_err());
        assert!(FiniteField::of_order(12).is_err());
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn labels() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.label(0), "0");
        assert_eq!(f.label(5), "2+x");
        assert_eq!(f.label(6), "2x");
    }
}

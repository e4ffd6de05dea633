//! Binomial coefficients, colex subset enumeration and the enumeration budget.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default cap on the number of candidate subsets an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on the number of candidates an exhaustive enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget(limit.max(1))
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    /// Fails with [`Error::BudgetExceeded`] when `required` candidates exceed the cap.
    pub fn check(self, required: &BigUint) -> Result<()> {
        match required.to_u64() {
            Some(r) if r <= self.0 => Ok(()),
            _ => Err(Error::BudgetExceeded {
                required: required.clone(),
                budget: self.0,
            }),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

/// `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` in machine words, `None` on overflow.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    binomial(n, k).to_u64()
}

/// `k`-subsets of `0..n` as strictly increasing index arrays, in colex order.
///
/// Colex order sorts subsets by their largest element first, so the first
/// `C(m, k)` subsets are exactly the subsets of `0..m`.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let k = self.current.len();
        // smallest position that can move up without colliding with its successor
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            let limit = if i + 1 < k { self.current[i + 1] } else { self.n };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current[..i].iter_mut().enumerate() {
                    *slot = j;
                }
                break;
            }
            i += 1;
        }
        Some(out)
    }
}

/// All `size`-subsets of `items`, each as a sorted vector, in colex order of positions.
pub fn subsets_of<T: Copy>(items: &[T], size: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    Combinations::new(items.len(), size).map(move |idx| idx.iter().map(|&i| items[i]).collect())
}

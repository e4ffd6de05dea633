//! Vectors of GF(2)^n packed into bitmasks; bit `i` is coordinate `i`.

/// Sum of the vectors, i.e. their XOR.
pub fn xor_fold(vectors: &[u32]) -> u32 {
    vectors.iter().fold(0, |acc, &x| acc ^ x)
}

/// Dimension of the span of `vectors` over GF(2).
pub fn gf2_rank(vectors: &[u32]) -> usize {
    // basis[b] holds a vector whose highest set bit is b
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for &x in vectors {
        let mut x = x;
        while x != 0 {
            let top = 31 - x.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = x;
                rank += 1;
                break;
            }
            x ^= basis[top];
        }
    }
    rank
}

/// Coordinates of `x` as a bit string, coordinate 0 first.
pub fn bit_label(x: u32, n: u32) -> String {
    (0..n)
        .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Number of `k`-subsets of `points` whose XOR is zero.
pub fn count_zero_sum_subsets(points: &[u32], k: usize) -> u64 {
    fn go(points: &[u32], k: usize, acc: u32) -> u64 {
        if k == 0 {
            return u64::from(acc == 0);
        }
        if points.len() < k {
            return 0;
        }
        let mut total = 0;
        for i in 0..=points.len() - k {
            total += go(&points[i + 1..], k - 1, acc ^ points[i]);
        }
        total
    }
    go(points, k, 0)
}

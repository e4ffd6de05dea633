//! Small named designs used throughout the tests, the book and the CLI.

use crate::design::Design;

fn from_rows(rows: &[[u8; 9]]) -> Vec<Vec<usize>> {
    rows.iter()
        .map(|row| (0..9).filter(|&i| row[i] == 1).collect())
        .collect()
}

/// The Fano plane, 2-(7,3,1).
pub fn fano() -> Design {
    Design::new(
        7,
        3,
        vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![1, 3, 5],
            vec![1, 4, 6],
            vec![2, 3, 6],
            vec![2, 4, 5],
        ],
    )
    .expect("valid fixture")
}

/// Lines of the affine plane of order 3 as a 2-(9,3,1) design, in the
/// incidence-matrix row order of the classical worked example.
pub fn ag23_lines() -> Design {
    let rows = [
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1],
        [1, 0, 0, 1, 0, 0, 1, 0, 0],
        [0, 1, 0, 0, 1, 0, 0, 1, 0],
        [0, 0, 1, 0, 0, 1, 0, 0, 1],
        [1, 0, 0, 0, 0, 1, 0, 1, 0],
        [0, 1, 0, 1, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 1, 0, 0],
        [1, 0, 0, 0, 1, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 1, 0],
    ];
    Design::new(9, 3, from_rows(&rows)).expect("valid fixture")
}

/// Unions of two parallel lines of the affine plane of order 3, a 2-(9,6,5) design.
pub fn ag23_parallel_pairs() -> Design {
    let rows = [
        [1, 1, 1, 1, 1, 1, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 1, 1, 1],
        [1, 1, 0, 1, 1, 0, 1, 1, 0],
        [1, 0, 1, 1, 0, 1, 1, 0, 1],
        [1, 1, 0, 0, 1, 1, 1, 0, 1],
        [1, 0, 1, 1, 1, 0, 0, 1, 1],
        [1, 1, 0, 1, 0, 1, 0, 1, 1],
        [1, 0, 1, 0, 1, 1, 1, 1, 0],
        [0, 1, 1, 0, 1, 1, 0, 1, 1],
        [0, 0, 0, 1, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 0, 1, 0, 1],
        [0, 1, 1, 1, 0, 1, 1, 1, 0],
    ];
    Design::new(9, 6, from_rows(&rows)).expect("valid fixture")
}

/// Develops base blocks cyclically modulo `v`.
pub fn cyclic_development(v: usize, base_blocks: &[Vec<usize>]) -> Design {
    let k = base_blocks.first().map_or(0, Vec::len);
    let mut blocks: Vec<Vec<usize>> = base_blocks
        .iter()
        .flat_map(|base| {
            (0..v).map(move |shift| {
                let mut b: Vec<usize> = base.iter().map(|&x| (x + shift) % v).collect();
                b.sort_unstable();
                b
            })
        })
        .collect();
    blocks.sort_unstable();
    blocks.dedup();
    Design::new(v, k, blocks).expect("cyclic development stays in range")
}

/// The cyclic Steiner triple system of order 13 with base blocks {0,1,4} and {0,2,7}.
pub fn sts13() -> Design {
    cyclic_development(13, &[vec![0, 1, 4], vec![0, 2, 7]])
}

/// The complete 2-(3,2,1) design, the excluded "triangle".
pub fn triangle() -> Design {
    Design::new(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).expect("valid fixture")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::verify_design;

    #[test]
    fn fixtures_are_designs() {
        let p = verify_design(&sts13(), 2).unwrap();
        assert_eq!((p.v, p.k, p.r_t, p.b), (13, 3, 1, 26));
        let p = verify_design(&ag23_parallel_pairs(), 2).unwrap();
        assert_eq!((p.v, p.k, p.r_t, p.b, p.r), (9, 6, 5, 12, 8));
        let p = verify_design(&triangle(), 2).unwrap();
        assert!(p.is_symmetric());
    }
}

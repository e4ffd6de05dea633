mod common;

use designlattice::{
    fixtures, hermite_normal_form, lattice_contains, rank_over_gf, smith_normal_form, IntMatrix,
};
use num_bigint::BigInt;
use proptest::prelude::*;

use common::{check_hermite, check_smith, ints};

fn small_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-12i64..=12, c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_properties(m in small_matrix(5)) {
        prop_assert_eq!(check_smith(&m), Ok(()));
    }

    #[test]
    fn hermite_properties(m in small_matrix(6)) {
        prop_assert_eq!(check_hermite(&m), Ok(()));
    }

    #[test]
    fn hermite_is_canonical(m in small_matrix(5), seed in any::<u64>()) {
        // mixing the rows by a unimodular transform leaves the Hermite form unchanged
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = IntMatrix::from_rows(&m);
        let mut mixed = m.clone();
        for _ in 0..6 {
            let i = rng.gen_range(0..m.len());
            let j = rng.gen_range(0..m.len());
            if i != j {
                let f: i64 = rng.gen_range(-3..=3);
                let source = mixed[j].clone();
                for (x, y) in mixed[i].iter_mut().zip(source) {
                    *x += f * y;
                }
            }
        }
        mixed.swap(0, m.len() - 1);
        let b = IntMatrix::from_rows(&mixed);
        prop_assert_eq!(hermite_normal_form(&a).h, hermite_normal_form(&b).h);
    }

    #[test]
    fn determinant_matches_leibniz(n in 1usize..=5, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let det = IntMatrix::from_rows(&m).determinant().unwrap();
        prop_assert_eq!(det, BigInt::from(common::leibniz_det(&m)));
    }

    #[test]
    fn gf_rank_bounded_by_integer_rank(m in small_matrix(6), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let a = IntMatrix::from_rows(&m);
        let rp = rank_over_gf(&a, p).unwrap();
        prop_assert!(rp <= a.rank());
        // invariant factors not divisible by p survive reduction mod p
        let sd = smith_normal_form(&a);
        let expected = sd.diag.iter().filter(|d| (*d % BigInt::from(p)) != BigInt::from(0)).count();
        prop_assert_eq!(rp, expected);
    }
}

fn example_rows_lines_reduced() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 0, 1, 0, 1, 0],
        vec![0, 1, 0, 0, 0, -2, 0, -1, -1],
        vec![0, 0, 1, 0, 0, 1, 0, 0, -2],
        vec![0, 0, 0, 1, 0, -1, 0, -2, -1],
        vec![0, 0, 0, 0, 1, 2, 0, 2, 1],
        vec![0, 0, 0, 0, 0, 3, 0, 3, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 1, -2],
        vec![0, 0, 0, 0, 0, 0, 0, 3, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 3],
    ]
}

fn example_rows_pairs_reduced() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 0, 1, 0, -2, 0],
        vec![0, 1, 0, 0, 0, -2, 0, 2, -1],
        vec![0, 0, 1, 0, 0, 1, 0, 0, -2],
        vec![0, 0, 0, 1, 0, -1, 0, 1, -1],
        vec![0, 0, 0, 0, 1, 2, 0, -1, -2],
        vec![0, 0, 0, 0, 0, 3, 0, -3, 0],
        vec![0, 0, 0, 0, 0, 0, 1, 1, -2],
        vec![0, 0, 0, 0, 0, 0, 0, 3, -3],
        vec![0, 0, 0, 0, 0, 0, 0, 0, 6],
    ]
}

fn same_row_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    let da = hermite_normal_form(a);
    let db = hermite_normal_form(b);
    let (ha, hb) = (&da.h, &db.h);
    let a_in_b = (0..a.rows()).all(|r| lattice_contains(hb, a.row(r)).unwrap());
    let b_in_a = (0..b.rows()).all(|r| lattice_contains(ha, b.row(r)).unwrap());
    let basis_a: Vec<_> = (0..da.rank()).map(|r| ha.row(r).to_vec()).collect();
    let basis_b: Vec<_> = (0..db.rank()).map(|r| hb.row(r).to_vec()).collect();
    a_in_b && b_in_a && basis_a == basis_b
}

#[test]
fn worked_example_reductions_span_the_block_lattice() {
    let lines = fixtures::ag23_lines().incidence_matrix();
    let reduced = IntMatrix::from_rows(&example_rows_lines_reduced());
    assert!(same_row_lattice(&lines, &reduced));

    let pairs = fixtures::ag23_parallel_pairs().incidence_matrix();
    let reduced = IntMatrix::from_rows(&example_rows_pairs_reduced());
    assert!(same_row_lattice(&pairs, &reduced));
}

#[test]
fn worked_example_smith_diagonals() {
    let lines = smith_normal_form(&fixtures::ag23_lines().incidence_matrix());
    assert_eq!(lines.diag, ints(&[1, 1, 1, 1, 1, 1, 3, 3, 3]));
    let pairs = smith_normal_form(&fixtures::ag23_parallel_pairs().incidence_matrix());
    assert_eq!(pairs.diag, ints(&[1, 1, 1, 1, 1, 1, 3, 3, 6]));
}

#[test]
fn known_ranks_mod_p() {
    let sts = fixtures::sts13().incidence_matrix();
    assert_eq!(rank_over_gf(&sts, 3).unwrap(), 12);
    assert_eq!(rank_over_gf(&sts, 2).unwrap(), 13);
    let fano = fixtures::fano().incidence_matrix();
    assert_eq!(rank_over_gf(&fano, 2).unwrap(), 4);
    assert_eq!(rank_over_gf(&fano, 3).unwrap(), 6);
    assert!(rank_over_gf(&fano, 4).is_err());
}

#[test]
fn fixture_smith_diagonals() {
    let fano = smith_normal_form(&fixtures::fano().incidence_matrix());
    assert_eq!(fano.diag, ints(&[1, 1, 1, 1, 2, 2, 6]));
    let sts = smith_normal_form(&fixtures::sts13().incidence_matrix());
    let mut expected = vec![1i64; 12];
    expected.push(3);
    assert_eq!(sts.diag, ints(&expected));
}

#[test]
fn edge_shapes() {
    for m in [
        vec![vec![0i64; 4]; 3],
        vec![vec![5]],
        vec![vec![0]],
        vec![vec![2, 4, 6]],
        vec![vec![2], vec![4], vec![7]],
    ] {
        assert_eq!(check_smith(&m), Ok(()));
        assert_eq!(check_hermite(&m), Ok(()));
    }
}

#[test]
fn large_entries_stay_exact() {
    let big = BigInt::from(10).pow(40);
    let m = IntMatrix::from_fn(3, 3, |i, j| {
        if i == j {
            &big + BigInt::from(i as i64)
        } else {
            BigInt::from((i + 2 * j) as i64)
        }
    });
    let sd = smith_normal_form(&m);
    assert_eq!(&(&sd.u * &m) * &sd.v, sd.s);
    let prod: BigInt = sd.diag.iter().product();
    let det = m.determinant().unwrap();
    assert_eq!(prod, if det < BigInt::from(0) { -det } else { det });
}

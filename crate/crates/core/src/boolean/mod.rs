//! Zero-sum designs over finite fields and binary vector spaces.

mod construct;
mod counts;
mod field;
mod gf2;
mod irreducible;
mod planes;

pub use construct::{
    block_vectors, build_design, is_zero_sum, nonzero_vectors, BooleanDesign, BooleanDesignSpec,
    MAX_DIMENSION,
};
pub use counts::{
    alpha_double_factorial_form, alpha_product_form, block_counts, brute_count,
    closed_form_count, count_u64, double_factorial, hamming_weight_distribution, CountMethod,
    CountTable, CountTableJson, MAX_COUNT_DIMENSION,
};
pub use field::{is_irreducible_poly, prime_power, FiniteField};
pub use gf2::{bit_label, count_zero_sum_subsets, gf2_rank, xor_fold};
pub use irreducible::{
    decompositions, independent_tuple_count, irreducible_count, is_irreducible,
    IrreducibleCount,
};
pub use planes::{affine_planes, quadruples_are_planes_audit, PlanesReport};

//! Block designs embedded in finite abelian groups, and zero-sum designs over
//! GF(q) and GF(2)^n.
//!
//! The crate is organised around four pieces:
//!
//! - [`design`]: incidence structures in canonical form, `t`-design
//!   verification, complementary, supplementary and derived designs, and the
//!   Gram identity `AᵀA = (r−λ)I + λJ`.
//! - [`normal_form`]: exact Hermite and Smith normal forms over the integers,
//!   ranks modulo primes, and integer lattice membership.
//! - [`group`]: the group `G_D` obtained from the free abelian group on the
//!   points by forcing every block to sum to zero, the map from points into
//!   it, and certificates when that map is not injective.
//! - [`boolean`]: families of zero-sum `k`-subsets of GF(q) and of GF(2)^n,
//!   their block counts, and the reducibility of their blocks.
//!
//! ```
//! use designlattice::{fixtures, group::embedding_group};
//!
//! let embedding = embedding_group(&fixtures::ag23_lines());
//! assert_eq!(embedding.group.to_string(), "Z3 x Z3 x Z3");
//! assert!(embedding.injective);
//! ```
//!
//! A longer guide lives in the `book/` directory of the repository; its code
//! listings are compiled as doc-tests of this crate.

pub mod boolean;
pub mod combinatorics;
pub mod design;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod matrix;
pub mod normal_form;
pub mod partition;

pub use combinatorics::Budget;
pub use design::{gram_audit, level_parameters, verify_design, Design, DesignParams};
pub use error::{Error, Result};
pub use group::{
    embedding_group, exponent_audit, is_embeddable, non_injectivity_witness, AbelianGroup,
    EmbeddingResult, GroupElement,
};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, lattice_contains, rank_over_gf, smith_normal_form,
    HermiteDecomposition, SmithDecomposition,
};
pub use partition::block_partition_exists;

// mdbook cannot resolve crate dependencies in its own test runner, so the
// chapters (and the README) are pulled in here and checked by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    mod normal_forms {}
    #[doc = include_str!("../../../book/src/embedding.md")]
    mod embedding {}
    #[doc = include_str!("../../../book/src/boolean-designs.md")]
    mod boolean_designs {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/reducibility.md")]
    mod reducibility {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}

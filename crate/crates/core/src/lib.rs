//! Exact G-module structure of the first homology of finite Galois covers
//! of surfaces, computed from monodromy data.
//!
//! A cover is given by a [`CoverSpec`]: a permutation group `G` and the
//! images in `G` of the standard generators of the punctured base. From it
//! the crate computes the character of `G` on `H_1` of the punctured and of
//! the closed cover, its decomposition into irreducibles, and the split of
//! the closed cover's character into holomorphic and antiholomorphic parts.
//! The [`oracle`] module recomputes the same characters from an explicit
//! cell complex.

pub mod catalog;
pub mod character;
pub mod chevalley_weil;
pub mod cover;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod hyperelliptic;
pub mod oracle;
pub mod perm;

pub use character::{
    character_table, commutant_unitary_dim, decompose, inner_product, permutation_character,
    standard_characters, CharacterTable, ClassFunction, ModuleExpr,
};
pub use chevalley_weil::{
    closed_homology_character, extend_to_closed_surface, hodge_is_real, hodge_split,
    is_topological_perm_rep, pa_double_cover_module, punctured_homology_character,
    HodgeCharacterPair, Orientation,
};
pub use cover::{Base, BranchFiber, CoverSpec};
pub use cyclotomic::Cyclo;
pub use error::{Error, Result};
pub use group::{enumerate_group, ConjugacyClass, Elem, FiniteGroup, GSet, Subgroup};
pub use hyperelliptic::{hyperelliptic_obstruction, HyperellipticCyclicCover, Obstruction};
pub use oracle::{build_punctured_cover, fill_cover, h1_character, CellComplex};
pub use perm::Perm;

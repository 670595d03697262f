//! Combinatorics of bipartitions under a two-parameter weight (a, b):
//! entry multisets (symbols), a-invariants, families, and the order
//! relations they induce, including the recursively built representation
//! order and its restriction to the index-two subgroup layer.
//!
//! The main entry points:
//!
//! - [`partition::Partition`] and [`beta::BetaSet`]: partitions, beta-set
//!   encodings, conjugation, dominance.
//! - [`symbol::SymbolMultiset`]: the entry multiset of a bipartition at a
//!   weight, with shift, conjugation, dominance, and the a-invariant.
//! - [`biporder`]: the induced pre-order on bipartitions, combinatorial
//!   families, special bipartitions, and the doubling transforms.
//! - [`rep`]: sign twists, vertical-strip induction, and the recursive
//!   order on irreducible labels.
//! - [`dn`]: labels and the order for the index-two subgroup at weight
//!   (1, 0).
//! - [`verify`]: named exhaustive checks for every structural claim the
//!   crate relies on, with failure witnesses.

pub mod beta;
pub mod bipartition;
pub mod biporder;
pub mod dn;
pub mod error;
pub mod order;
pub mod params;
pub mod partition;
pub mod rep;
pub mod symbol;
pub mod verify;

pub use bipartition::Bipartition;
pub use error::{Error, Result};
pub use order::OrderRelation;
pub use params::WeightParams;
pub use partition::Partition;
pub use symbol::SymbolMultiset;

//! Bits (bi-trees): representation, validation, enumeration, sub-bits and
//! percolation moves.

#[allow(clippy::module_inception)]
mod bit;
mod canon;
mod enumerate;
mod graph;
mod percolate;
mod planar;
mod subbit;
pub mod text;

pub use bit::{Bit, VertexClass};
pub use canon::{all_isomorphisms, automorphisms, canonical_form, iso_bits, CanonForm, Iso};
pub use enumerate::{enumerate_bits, DEFAULT_SKELETON_BOUND, MAX_SKELETON_BOUND};
pub use graph::{EdgeId, Graph, VertexId};
pub use percolate::{movable_edges, normal_form, percolate};
pub use planar::{corolla_bit, Corolla, PlanarBit, Sign};
pub use subbit::{one_sub_bits, sub_bits_oracle, subset_boundaries, subset_is_bit, Derivation, Stage, SubBit, SubBits};

//! The category of bits: attached bios, flat maps, elementary moves, and
//! the degeneracy-isomorphism-face factorization.

pub mod hom;
pub mod map;
pub mod moves;
pub mod sg;


pub use hom::bit_hom;
pub use map::{compose_bit_maps, corolla_image, eval_derivation, flatness_of_edge_map, BitMap, CorollaImageSource, Flatness};
pub use sg::{stage_value, value_stage, SgElem};
pub use moves::{elementary_moves, ElementaryMove, MoveKind};

pub use sg::SgBio;

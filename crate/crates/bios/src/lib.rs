//! Bi-operads (bios), bi-trees (bits), bital sets, and the arithmetic
//! geometry of distributive bios: spectra, localization, structure sheaves
//! and A-sets, all at exact desk scale with brute-force verification
//! oracles alongside the fast paths.

pub mod bio;
pub mod bitcat;
pub mod bit;
pub mod error;
pub mod rig;

pub use error::{Error, Result};

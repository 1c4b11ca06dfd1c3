//! Rigs, their bios of row and column vectors, the field with one element,
//! and the l_p sub-bios.

pub mod fone;
pub mod lp;
pub mod pa;
#[allow(clippy::module_inception)]
pub mod rig;

pub use fone::FOneBio;
pub use lp::{LpBio, LpExp};
pub use pa::PaBio;
pub use rig::{builtin_rig, FiniteRig, IntRig, RigHandle, RigOps, BUILTIN_RIGS};

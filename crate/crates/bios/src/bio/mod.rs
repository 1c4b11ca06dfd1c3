//! Bios behind a uniform handle: elements, operations, audits, and the
//! structural functors.

pub mod elem;
pub mod handle;

pub mod audit;
pub mod bipo;
pub mod maps;
pub mod nat;
pub mod distributive;
pub mod involution;
pub mod opposite;
pub mod sigma;

pub use elem::{Elem, HomType, Value};
pub use handle::{ops, BioHandle, BioImpl, HomSet};

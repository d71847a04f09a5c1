//! Exact computation in character groups of graded connected Hopf algebras.

pub mod characters;
pub mod error;
pub mod evolution;
pub mod functional;
pub mod funcalc;
pub mod hopf;
pub mod ideals;
pub mod json;
pub mod linalg;
pub mod ring;
pub mod sample;
pub mod trees;

pub use error::{Error, Result};

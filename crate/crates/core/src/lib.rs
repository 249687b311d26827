//! Pentavalent symmetric graphs of order `2p^n`: constructions, voltage covers
//! of the five-edge dipole, and automorphism-group verification tools.

pub mod acceptance;
pub mod algebra;
pub mod constructions;
pub mod error;
pub mod gdgroup;
pub mod graph;
pub mod perm;
pub mod permgrp;
pub mod symmetry;
pub mod voltage;

pub use constructions::{family, FamilyId, FamilyParams, NamedGraph};
pub use error::{Error, Result};
pub use graph::Graph;
pub use perm::Perm;
pub use permgrp::PermGroup;

//! Finite-level workbench for smooth mod-p representations: exact linear algebra
//! over `F_{p^k}`, finite groups by multiplication table, representations and
//! induction, the relative exact structure `E_U` with its stable categories, and
//! fairness certificates for finite groups and `SL₂`.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod fairness;
pub mod field;
pub mod group;
pub mod matrix;
pub mod par;
pub mod rep;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use field::{FieldDescriptor, FiniteField, Scalar};
pub use group::{Elem, FinGroup, GroupRef, Subgroup};
pub use matrix::{Matrix, Subspace};
pub use par::Exec;
pub use rep::{GMap, Rep};

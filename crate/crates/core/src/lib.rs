//! Exact computations with unipotent numerical monoids: cofinite submonoids of
//! the nonnegative integer points of a unipotent matrix group.
//!
//! A monoid is stored by its finite gap set inside a [`PatternGroup`]. On top
//! of that sit Apery sets, Frobenius and pseudo-Frobenius sets, relative
//! ideals with the torsion monoid and its lattice of idempotents, and the
//! irreducibility and symmetry classification.
//!
//! Scans over boxes and gap lists run on rayon when the `parallel` feature is
//! enabled (the default) and sequentially otherwise; results are identical.

pub mod apery;
pub mod classify;
pub mod dot;
pub mod error;
pub mod group;
pub mod ideals;
pub mod invariants;
pub mod json;
pub mod matrix;
pub mod monoid;
pub mod orders;
pub mod par;

pub use apery::{apery, apery_maximal, factor_via_apery, AperySet};
pub use classify::{
    classify, enumerate_irreducible, enumerate_monoids, is_irreducible, verify_theorems, CheckStatus,
    ClassificationReport, Method, Symmetry, TheoremCheck,
};
pub use error::{Error, MatrixError};
pub use group::{PatternGroup, PatternKind};
pub use ideals::{
    oversemigroups, torsion_idempotents, torsion_monoid, IdealExpr, IdempotentLattice, RelativeIdeal,
    TorsionElement, DEFAULT_MAX_NODES,
};
pub use invariants::{frobenius, pseudo_frobenius, special_gaps, type_numbers, FrobeniusData};
pub use matrix::UnipotentMatrix;
pub use monoid::{Generated, Invariants, Monoid};
pub use orders::{preceq, Order, OrderKind, Side};

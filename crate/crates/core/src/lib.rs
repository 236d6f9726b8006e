//! Finite quandles represented by their operation matrices.
//!
//! A quandle of order `n` is stored as the `n × n` table whose entry in row
//! `i`, column `j` is `i ▷ j`, with elements labeled `1..=n`. The crate
//! validates such tables, builds the standard families, decides isomorphism
//! by searching for a relabeling permutation, computes automorphism groups
//! and enumerates every quandle of small order up to isomorphism.

pub mod cli;
pub mod constructors;
mod det;
pub mod enumeration;
mod error;
pub mod group;
mod matrix;
mod perm;
mod props;
pub mod symmetry;
mod verify;

/// Largest supported order; entries are stored in one byte each.
pub const MAX_ORDER: usize = 255;

pub use constructors::{
    alexander, conjugation, conjugation_class, dihedral, trivial, AlexanderPresentation,
    ConstructorSpec,
};
pub use det::determinant;
pub use enumeration::{
    column_candidates, enumerate, enumerate_all, enumerate_classes, ClassRecord, Emit,
    EnumerationOptions, EnumerationOutput, EnumerationReport, Strategy,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use group::{identify_group, Fingerprint, GroupId, GroupLabel, PermGroup};
pub use matrix::{parse_matrix, QuandleMatrix};
pub use perm::{all_permutations, Permutation};
pub use symmetry::{
    are_isomorphic, automorphism_group, canonical_form, np_count, np_count_by_orbit, permute,
};
pub use verify::{standardize, verify_quandle, Condition, Failure, VerificationReport};

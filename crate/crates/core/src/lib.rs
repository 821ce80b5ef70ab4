//! Exact arithmetic on the power semigroups of numerical semigroups.
//!
//! Elements of `P(H)` that are finite or eventually full are represented
//! canonically by [`PSet`]; [`sumset`] implements the semigroup operation.
//! The [`lemmas`] and [`quotient`] modules turn the combinatorial facts about
//! these semigroups into executable checks, and [`autosearch`] builds finite
//! window truncations of `P_0(H)` and `P(H)` and searches their automorphisms.

pub mod autosearch;
pub mod bits;
pub mod config;
pub mod error;
pub mod lemmas;
pub mod numsgp;
pub mod oracle;
pub mod quotient;
pub mod sample;
pub mod setrep;
pub mod sumset;
pub mod verify;

pub use bits::BitSet;
pub use config::Limits;
pub use error::{Error, Result};
pub use numsgp::NumericalSemigroup;
pub use setrep::{Kind, PSet, PSetJson};

//! Malcev nilpotency of finite semigroups.
//!
//! Semigroups are Cayley tables ([`Semigroup`]). The crate decides
//! nilpotency with a replayable certificate, builds Rees matrix semigroups
//! and glued unions, certifies minimal non-nilpotency, sorts minimal
//! non-nilpotent semigroups into their structural types, and enumerates all
//! semigroups of small order.

pub mod catalog;
pub mod census;
pub mod classify;
pub mod cli;
pub mod error;
pub mod formats;
pub mod groups;
pub mod nilpotency;
pub mod rees;
pub mod semigroup;
pub mod structure;

pub use error::{Error, Result};
pub use nilpotency::{decide_nilpotent, nilpotency_class, verify_witness, NilpotencyResult, Witness};
pub use semigroup::{adjoin_identity, closure, is_isomorphic, validate_semigroup, Semigroup, SubsetClosure};
pub use structure::{is_minimal_non_nilpotent, MinimalityMode, MnnVerdict};

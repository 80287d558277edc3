//! Finite monoids and simple semigroups, their minimal ideals and groups, and
//! the two-object categories that connect them.

pub mod bimodule;
pub mod category;
pub mod checks;
pub mod connectivity;
pub mod corpus;
pub mod error;
pub mod ideals;
pub mod rees;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{FiniteSemigroup, Monoid, Subset};

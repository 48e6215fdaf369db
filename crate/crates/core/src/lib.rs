//! Finite groups as Cayley tables, with exhaustive and structural routes to
//! the socle, the prime socle `P(G)` and the intersection `δ(G)` of all
//! proper essential subgroups.

pub mod arith;
pub mod bitset;
pub mod corpus;
pub mod dedekind;
pub mod error;
pub mod expr;
pub mod group;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod perm;
pub mod socle;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result, TableError};
pub use group::{GroupTable, Limits};
pub use subgroup::Subgroup;

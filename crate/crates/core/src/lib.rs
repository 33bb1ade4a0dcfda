//! Exact combinatorics for the reduction modulo an odd prime `p` of two-part
//! spin supermodules of the double covers of the symmetric groups.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, strict and p-strict restricted labels, `β_n`,
//!   dominance and the two regularization cases needed for two-row shapes.
//! - [`blocks`]: residues, contents, p-bar cores and normal nodes.
//! - [`superchar`]: the characteristic-0 Grothendieck group of supermodules and
//!   residue induction, with a shifted-tableaux dimension oracle.
//! - [`projectives`]: the residue-sequence recipes producing the projective
//!   characters that witness the diagonal decomposition numbers.
//! - [`theorems`]: decomposition labels `D_j`, diagonal multiplicities and the
//!   verified matrix fragment.
//! - [`cli`]: the command-line front end.

pub mod blocks;
pub mod cli;
pub mod error;
pub mod partition;
pub mod prime;
pub mod projectives;
pub mod report;
pub mod superchar;
pub mod theorems;

pub use error::{Error, Result};
pub use partition::{PStrictRestricted, Partition, StrictPartition};
pub use prime::OddPrime;
pub use superchar::SuperVec;

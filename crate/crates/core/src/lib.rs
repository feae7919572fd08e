//! Exact braid-group computations for deciding strong Nielsen equivalence of
//! periodic orbits of disc homeomorphisms relative to an invariant finite set.

pub mod cli;
pub mod error;
pub mod garside;
pub mod invariants;
pub mod mixed;
pub mod partition;
pub mod random;
pub mod sn;
pub mod word;

pub use error::{BraidError, Result};
pub use word::{BraidWord, Permutation};

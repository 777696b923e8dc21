//! Exact decomposition of the permutation module `k Ξ_{2n}` of `Sym(2n)` on
//! its fixed-point-free involutions over a field of characteristic 2.

pub mod chars;
pub mod error;
pub mod fps;
pub mod gf2;
pub mod partition;
pub mod perm;
pub mod pipeline;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::{GroupAction, PermGroup, Permutation};

//! Exact linear algebra over GF(2) and `Z/2^k` for permutation modules.

pub mod brauer;
pub mod decompose;
pub mod lift;
pub mod matrix;
pub mod module;

pub use brauer::{brauer_quotient, brauer_quotient_fixed_points, FixedPointBrauer};
pub use decompose::{decompose, fitting_split, is_projective_over_2group, Component, Decomposition};
pub use lift::{hensel_lift_idempotent, lift_decomposition, lift_idempotent, LiftedIdempotent};
pub use matrix::Gf2Matrix;
pub use module::{restrict_module, EndAlgebra, EndAlgebraBasis, PermModule};

//! Fused currents: exactly stabilized products of shifted perpendicular
//! currents, the subalgebra relation suites they satisfy, corner
//! commutativity, and the classical-limit oracle.

pub mod chain;
pub mod classical;
pub mod corners;
pub mod subalg;
pub mod tilde;

pub use chain::{Chain, Fusion};
pub use classical::{classical_fused_mode, ClassicalElt};
pub use corners::check_corner_commute;
pub use subalg::check_subalgebra;
pub use tilde::TildeAction;

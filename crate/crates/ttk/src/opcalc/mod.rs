//! Symbolic operator calculus: q-bracket expression trees over the standard
//! mode atoms, the finite dictionary for the perpendicular generators, mode
//! raising and lowering by degree-one Cartan commutators, and evaluation on
//! any module with aggressive memoization.

pub mod eval;
pub mod expr;
pub mod perp;
pub mod sexpr;

pub use eval::Evaluator;
pub use expr::{Node, OpArena, OpId};
pub use perp::{PerpDict, PerpGen};

//! Concrete modules with exact operator actions: the vector representation,
//! Fock modules on colored partitions, tensor products via the formal
//! coproduct, and interlacing submodules of tensor products.

pub mod module;
pub mod relations;
pub mod reltable;

pub use module::{FockFactor, Label, ModVec, Module, ModuleKind, Params};
pub use reltable::RelTable;

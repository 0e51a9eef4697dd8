//! Exact computer algebra for quantum toroidal gl_n.
//!
//! The crate implements explicit module actions (vector, Fock, tensor
//! products and their interlacing submodules), the perpendicular-generator
//! dictionary, fused currents with exact stabilization, branching-rule
//! character censuses, and a classical-limit oracle. All arithmetic is exact:
//! rational functions in q, d and evaluation parameters with arbitrary
//! precision integer coefficients.

pub mod symrat;

pub mod combin;
pub mod repcore;

pub mod opcalc;

pub mod fusion;

pub mod branchkit;

pub mod cli;

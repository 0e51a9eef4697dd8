//! Branching-rule verification: sector bookkeeping, character censuses for
//! the decomposition theorems, lowest-weight scans and the degree-one
//! Cartan gap check.

pub mod census;
pub mod scan;
pub mod sector;

pub use census::{branch_census, CensusReport, CensusTheorem};
pub use scan::{h1_gap_check, lw_scan, GapReport};
pub use sector::{rho, sectors_up_to, weight_w};

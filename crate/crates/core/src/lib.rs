//! Alt ν-Tamari lattices, their rowmotion orbits, and checks of the closed
//! forms known for the hook and two-row families.

pub mod bracket;
pub mod cli;
pub mod closed_forms;
pub mod families;
pub mod lattice;
pub mod path;
pub mod scan;
pub mod stats;
pub mod tamari;
pub mod verify;

/// Exact rational used for orbit averages and closed-form sums.
pub type Rational = num_rational::Ratio<i64>;

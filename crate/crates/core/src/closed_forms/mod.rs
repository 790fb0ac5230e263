//! Closed-form predictions for the hook and two-row families.

use thiserror::Error;

pub mod congruence;
pub mod csp;
pub mod hasse;
pub mod hook;
pub mod two_row;

pub use congruence::{congruence_brute_force, congruence_solution_sets, CongruenceSolutions};
pub use csp::{csp_verify, hook_csp_polynomial, CspMismatch, CspPolynomial};
pub use hasse::{hook_hasse_prediction, two_row_hasse_prediction};
pub use hook::{hook_prediction, HookPrediction};
pub use two_row::{two_row_prediction, two_row_rowmotion_formula, TwoRowPrediction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
}

//! Polynomial projections of the twistor total space: the coefficient
//! recursion, the projection columns and their partition of unity, the
//! quotient onto the Podles sphere, and the Fredholm index pairings.

mod coeff;
mod pairing;
mod podles;
mod psi;

pub use coeff::{compositions, CoeffTable};
pub use pairing::{
    calibrate_convention, pair_trace, pair_with_checks, pairing, pairing_determinant,
    printed_p2_summand, quotient_trace, Module, PairingValue, ProjectionPairing,
};
pub use podles::{
    character, numeric_pairing, pairing_summand_poly, sigma_diagonal_poly, sum_summand,
    PairingConvention,
};
pub use psi::{psi_column, quotient_to_podles, PsiColumn, PsiEntry};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("element does not live in the z3/z4 quotient")]
    NotInQuotient,
    #[error("element is not invariant under the circle action")]
    NotInvariant,
    #[error("pairing diverges: nonzero constant summand")]
    DivergentPairing,
    #[error("exact pairing is not a q-free integer: {value}")]
    NonIntegerPairing { value: String },
    #[error("no representation convention reproduces the printed summand")]
    ConventionNotFound,
}

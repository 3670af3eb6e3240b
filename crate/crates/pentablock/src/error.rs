//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A map was evaluated at (or within guard distance of) one of its poles.
    #[error("evaluation point is within {guard:e} of a pole")]
    PoleAtDomain { guard: f64 },

    /// A parameter required to lie on the unit circle was too far from it.
    #[error("|{name}| = {modulus} deviates from 1 by more than the accepted slack")]
    NotUnimodular { name: &'static str, modulus: f64 },

    /// A parameter required to lie strictly inside the unit disc did not.
    #[error("|{name}| = {modulus} is not strictly less than 1")]
    NotInDisc { name: &'static str, modulus: f64 },

    /// A coordinate was NaN or infinite.
    #[error("non-finite coordinate in {place}")]
    NonFinite { place: &'static str },

    /// The operation requires a point of the domain (or its closure) but the
    /// input lies outside.
    #[error("input point lies outside the domain closure")]
    ExteriorInput,

    /// The base point degenerates the fibre-radius formula (|p| too close
    /// to 1 for the beta quotient).
    #[error("base point degenerates the potential: |1 - |p|^2| < {guard:e}")]
    DegenerateBase { guard: f64 },

    /// A rational map's denominator vanished to within guard distance.
    #[error("denominator smaller than {guard:e} in a rational map")]
    DenominatorDegenerate { guard: f64 },

    /// The Minkowski functional of the origin is not defined by bisection.
    #[error("Minkowski functional is undefined at the origin")]
    ZeroPoint,

    /// The witness search could not produce a feasible matrix.
    #[error("witness optimizer failed: {reason}")]
    OptimizerFailure { reason: &'static str },

    /// A royal-slice operation was applied off the royal variety.
    #[error("point is not on the royal slice: |s^2 - 4p| = {deviation:e}")]
    NotOnRoyalSlice { deviation: f64 },

    /// A caller violated a documented structural precondition.
    #[error("precondition violated: {what}")]
    PreconditionViolated { what: &'static str },

    /// Levi analysis requires a point of the smooth boundary stratum.
    #[error("point does not classify as smooth boundary")]
    NotOnSmoothBoundary,

    /// Flatness analysis requires a point of the Levi-flat stratum.
    #[error("point does not classify as Levi-flat boundary")]
    NotOnLeviFlat,

    /// The boundary-defining function has (numerically) vanishing gradient.
    #[error("gradient norm {norm:e} below threshold; cannot build tangent frame")]
    DegenerateGradient { norm: f64 },

    /// A finite-difference stencil left the domain of the evaluated function.
    #[error("function evaluation failed inside a finite-difference stencil")]
    EvaluationDomain,

    /// Degree-zero products need the dedicated rotation constructor.
    #[error("empty zero list: use the rotation constructor for degree 0")]
    EmptyZeros,

    /// Text input could not be parsed.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

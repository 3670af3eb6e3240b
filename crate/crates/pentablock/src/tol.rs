//! Centralized numeric tolerances.
//!
//! Every comparison against an analytic identity goes through one of these
//! constants so that test expectations and library behaviour cannot drift
//! apart silently.

/// Default tolerance for algebraic identities (root recovery, group laws,
/// closed-form agreement between independent evaluation paths).
pub const ALGEBRAIC: f64 = 1e-10;

/// Boundary-band half-width used when classifying points given with exact
/// (typed-in) coordinates.
pub const EXACT_BOUNDARY: f64 = 1e-9;

/// Boundary-band half-width for points that went through a chain of
/// floating-point operations (samplers, images under maps).
pub const SAMPLED_BOUNDARY: f64 = 1e-6;

/// Guard against division by a vanishing denominator. Anything smaller is
/// treated as a pole or a degenerate configuration.
pub const POLE_GUARD: f64 = 1e-14;

/// Deviation from unit modulus accepted when a parameter is required to lie
/// on the unit circle; inputs within this band are renormalized exactly.
pub const UNIT_MODULUS_SLACK: f64 = 1e-6;

/// Default step for finite-difference derivative schemes.
pub const FD_STEP: f64 = 1e-4;

/// Relative eigenvalue threshold when estimating the rank of a restricted
/// Levi form.
pub const LEVI_RANK_REL: f64 = 1e-3;

/// Classification band used inside the Minkowski-functional bisection. Kept
/// well below the bisection target accuracy so the band does not bias the
/// crossing location.
pub const MINKOWSKI_INNER: f64 = 1e-13;

/// Relative accuracy target of the Minkowski-functional bisection.
pub const MINKOWSKI_REL: f64 = 1e-9;

/// Smallest gradient norm at which a boundary defining function is still
/// considered to have a well-defined tangent space.
pub const GRADIENT_FLOOR: f64 = 1e-10;

//! Geometry of the pentablock and the symmetrized bidisc.
//!
//! The pentablock is the set of triples (a, s, p) realizable as the
//! lower-left entry, trace and determinant of a 2x2 complex matrix of
//! operator norm below one. It fibres over the symmetrized bidisc
//! { (s, p) : |s - conj(s) p| + |p|^2 < 1 } as a Hartogs domain
//! |a|^2 < exp(-u(s, p)), and that description drives everything here:
//!
//! - membership classification for both domains, stratified over the
//!   boundary (smooth part, Levi-flat part, distinguished part, royal
//!   variety) with explicit membership defects;
//! - the potential u, the fibre radius and its closed parametrized form;
//! - matrix witnesses: recovering a realizing matrix of (near-)minimal
//!   norm for a given point;
//! - the automorphism group in normal form (unimodular fibre factor plus
//!   a disc automorphism acting through symmetrization), with
//!   composition, inversion and structural checks;
//! - Blaschke products and their induced proper self-maps of the base;
//! - finite-difference Wirtinger calculus, Levi forms on the smooth
//!   boundary stratum, flatness probes on the Levi-flat stratum;
//! - the Minkowski gauge of the quasi-homogeneous scaling;
//! - seeded samplers, verification suites and line-oriented JSON reports
//!   used by the companion command-line tool.
//!
//! Numeric comparisons all run through the pinned tolerances in [`tol`].

pub mod algebra;
pub mod aut;
pub mod bidisc;
pub mod blaschke;
pub mod error;
mod optim;
pub mod parse;
pub mod penta;
pub mod point;
pub mod report;
pub mod sample;
pub mod suites;
pub mod tol;
pub mod wirtinger;

pub use algebra::{solve_quadratic_roots, Matrix2, RootPair};
pub use aut::{
    check_fiber_preservation, check_origin_fixing_form, hartogs_modulus_gap, PentaAutomorphism,
};
pub use bidisc::{
    apply_moebius, apply_moebius_via_roots, g2_classify, g2_defect, lift_blaschke,
    royal_membership, sigma, G2Class, G2Verdict, RoyalPoint,
};
pub use blaschke::{BlaschkeProduct, MoebiusMap};
pub use error::{Error, Result};
pub use parse::{parse_automorphism, parse_blaschke, parse_complex, parse_point2, parse_point3};
pub use penta::{
    beta, ellipsoid_membership, fibre_radius, matrix_witness, minkowski_functional, penta_classify,
    radius_via_parametrization, scale_point, slice_to_ellipsoid, u_potential, MatrixWitness,
    PentaClass, PentaVerdict,
};
pub use point::{G2Point, PentaPoint};
pub use report::{fmt_f64, SampleRecord, SuiteReport, RNG_NAME};
pub use sample::{Region, RegionSample};
pub use suites::{run_all, run_suite, Suite};
pub use wirtinger::{
    first_derivative_cross_check, levi_flat_check_d2, levi_form_on_boundary,
    pluriharmonicity_defect, wirtinger_first, wirtinger_hessian, LeviReport, WirtingerHessian,
};

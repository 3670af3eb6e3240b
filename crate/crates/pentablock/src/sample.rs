//! Random point generators for every region the tooling knows about.
//!
//! Each sampler is constructive (points are built from disc or circle
//! parameters, not by rejection from a bounding box) and then confirmed by
//! the classifier; the rare draw that lands inside the classifier's
//! tolerance band of a neighbouring region is redrawn. Distributions:
//! disc values use radius = sqrt(uniform) with a uniform angle, fibre
//! moduli use a uniform factor in [0, 1).

use num_complex::Complex64;
use rand::Rng;

use crate::bidisc::{g2_classify, sigma, G2Verdict};
use crate::penta::{fibre_radius, penta_classify, radius_via_parametrization, PentaVerdict};
use crate::point::{G2Point, PentaPoint};
use crate::tol;

/// Uniform point of the open disc of the given radius.
pub fn disc_point<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.random_range(0.0f64..1.0).sqrt();
    Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
}

/// Uniform point of the unit circle.
pub fn circle_point<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

fn unit_factor<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.random_range(0.0f64..1.0), rng.random_range(0.0..std::f64::consts::TAU))
}

/// Interior base point, symmetrized from two disc values.
pub fn g2_interior_point<R: Rng>(rng: &mut R) -> G2Point {
    loop {
        let pt = sigma(disc_point(rng, 0.99), disc_point(rng, 0.99));
        if let Ok(class) = g2_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == G2Verdict::Interior {
                return pt;
            }
        }
    }
}

/// Point of the base boundary off the distinguished part: exactly one of
/// the two symmetrized values sits on the circle. The inner value is kept
/// away from the circle and from the outer one so the draw cannot fall in
/// the Shilov or royal tolerance bands.
pub fn g2_flat_boundary_point<R: Rng>(rng: &mut R) -> G2Point {
    loop {
        let inner = disc_point(rng, 0.95);
        let outer = circle_point(rng);
        if (inner - outer).norm() < 0.05 {
            continue;
        }
        let pt = sigma(inner, outer);
        if let Ok(class) = g2_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == G2Verdict::Boundary {
                return pt;
            }
        }
    }
}

/// Distinguished-boundary base point: both symmetrized values unimodular,
/// separated so the royal band is avoided.
pub fn g2_shilov_point<R: Rng>(rng: &mut R) -> G2Point {
    loop {
        let z1 = circle_point(rng);
        let z2 = circle_point(rng);
        if (z1 - z2).norm() < 0.05 {
            continue;
        }
        let pt = sigma(z1, z2);
        if let Ok(class) = g2_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == G2Verdict::ShilovBoundary {
                return pt;
            }
        }
    }
}

/// Point of the royal variety inside the base: (2 l, l^2).
pub fn royal_point<R: Rng>(rng: &mut R) -> G2Point {
    let l = disc_point(rng, 0.95);
    G2Point::new(2.0 * l, l * l)
}

/// Interior point of the full domain: interior base plus a fibre value
/// strictly below the fibre radius.
pub fn penta_interior_point<R: Rng>(rng: &mut R) -> PentaPoint {
    loop {
        let (l1, l2) = (disc_point(rng, 0.95), disc_point(rng, 0.95));
        let base = sigma(l1, l2);
        let a = unit_factor(rng) * radius_via_parametrization(l1, l2);
        let pt = PentaPoint::new(a, base.s, base.p);
        if let Ok(class) = penta_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == PentaVerdict::Interior {
                return pt;
            }
        }
    }
}

/// Point of the smooth boundary stratum: interior base, fibre modulus
/// exactly at the fibre radius.
pub fn penta_smooth_boundary_point<R: Rng>(rng: &mut R) -> PentaPoint {
    loop {
        let (l1, l2) = (disc_point(rng, 0.9), disc_point(rng, 0.9));
        let base = sigma(l1, l2);
        let a = Complex64::from_polar(
            radius_via_parametrization(l1, l2),
            rng.random_range(0.0..std::f64::consts::TAU),
        );
        let pt = PentaPoint::new(a, base.s, base.p);
        if let Ok(class) = penta_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == PentaVerdict::SmoothBoundary {
                return pt;
            }
        }
    }
}

/// Point of the Levi-flat boundary stratum: flat base, fibre value
/// strictly inside the fibre disc of the extended potential.
pub fn penta_flat_boundary_point<R: Rng>(rng: &mut R) -> PentaPoint {
    loop {
        let base = g2_flat_boundary_point(rng);
        let radius = match fibre_radius(base) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let pt = PentaPoint::new(unit_factor(rng) * radius, base.s, base.p);
        if let Ok(class) = penta_classify(pt, tol::EXACT_BOUNDARY) {
            if class.verdict == PentaVerdict::LeviFlatBoundary {
                return pt;
            }
        }
    }
}

/// Named sampling regions exposed by the command-line tools.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    PentaInterior,
    PentaD1,
    PentaD2,
    G2Interior,
    G2Boundary,
    G2Shilov,
    Royal,
}

/// A sampled point, tagged by which space it lives in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RegionSample {
    Base(G2Point),
    Full(PentaPoint),
}

impl Region {
    pub const ALL: [Region; 7] = [
        Region::PentaInterior,
        Region::PentaD1,
        Region::PentaD2,
        Region::G2Interior,
        Region::G2Boundary,
        Region::G2Shilov,
        Region::Royal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Region::PentaInterior => "penta-interior",
            Region::PentaD1 => "penta-d1",
            Region::PentaD2 => "penta-d2",
            Region::G2Interior => "g2-interior",
            Region::G2Boundary => "g2-boundary",
            Region::G2Shilov => "g2-shilov",
            Region::Royal => "royal",
        }
    }

    pub fn parse(name: &str) -> Option<Region> {
        Region::ALL.iter().copied().find(|r| r.name() == name)
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> RegionSample {
        match self {
            Region::PentaInterior => RegionSample::Full(penta_interior_point(rng)),
            Region::PentaD1 => RegionSample::Full(penta_smooth_boundary_point(rng)),
            Region::PentaD2 => RegionSample::Full(penta_flat_boundary_point(rng)),
            Region::G2Interior => RegionSample::Base(g2_interior_point(rng)),
            Region::G2Boundary => RegionSample::Base(g2_flat_boundary_point(rng)),
            Region::G2Shilov => RegionSample::Base(g2_shilov_point(rng)),
            Region::Royal => RegionSample::Base(royal_point(rng)),
        }
    }
}

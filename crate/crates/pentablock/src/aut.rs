//! Automorphisms of the pentablock.
//!
//! Each one is determined by a unimodular fibre factor omega and a disc
//! automorphism nu acting on the base through the symmetrization:
//!
//!   (a, s, p) -> ( omega (1 - |alpha|^2) a / q,  nu . (s, p) )
//!   q = 1 - conj(alpha) s + conj(alpha)^2 p
//!
//! with alpha the disc parameter of nu. The group is closed under
//! composition; composite parameters are recovered by composing the base
//! maps and fitting omega at a fixed probe point, which keeps every
//! automorphism in the same two-parameter normal form.

use num_complex::Complex64;

use crate::bidisc::{apply_moebius_raw, g2_defect};
use crate::blaschke::MoebiusMap;
use crate::error::{Error, Result};
use crate::penta::{penta_classify, u_potential, PentaVerdict};
use crate::point::{G2Point, PentaPoint};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentaAutomorphism {
    omega: Complex64,
    nu: MoebiusMap,
}

/// Probe used to fit the fibre factor of composites and inverses. Any
/// interior point with nonzero fibre coordinate over the base origin works;
/// over (0, 0) the denominator q is exactly 1.
const PROBE_A: f64 = 0.1;

impl PentaAutomorphism {
    pub fn new(omega: Complex64, nu: MoebiusMap) -> Result<Self> {
        if !omega.is_finite() {
            return Err(Error::NonFinite { place: "omega" });
        }
        let m = omega.norm();
        if (m - 1.0).abs() > tol::UNIT_MODULUS_SLACK {
            return Err(Error::NotUnimodular { name: "omega", modulus: m });
        }
        Ok(Self { omega: omega / m, nu })
    }

    pub fn from_parameters(omega: Complex64, eta: Complex64, alpha: Complex64) -> Result<Self> {
        Self::new(omega, MoebiusMap::new(eta, alpha)?)
    }

    pub fn identity() -> Self {
        Self { omega: Complex64::new(1.0, 0.0), nu: MoebiusMap::identity() }
    }

    pub fn omega(&self) -> Complex64 {
        self.omega
    }

    pub fn nu(&self) -> &MoebiusMap {
        &self.nu
    }

    /// The map formula without any membership gate. Callers must keep the
    /// input where q is bounded away from zero (any point of the domain
    /// closure qualifies, since q factors over the base roots).
    fn raw_apply(&self, pt: &PentaPoint) -> PentaPoint {
        let alpha = self.nu.alpha();
        let ac = alpha.conj();
        let q = 1.0 - ac * pt.s + ac * ac * pt.p;
        debug_assert!(q.norm() > tol::POLE_GUARD);
        let a = self.omega * (1.0 - alpha.norm_sqr()) * pt.a / q;
        let base = apply_moebius_raw(&self.nu, &G2Point::new(pt.s, pt.p));
        PentaPoint::new(a, base.s, base.p)
    }

    /// Apply to a point of the domain closure. Points classifying exterior
    /// at band width `tol` are rejected.
    pub fn apply(&self, pt: &PentaPoint, tol: f64) -> Result<PentaPoint> {
        let class = penta_classify(*pt, tol)?;
        if class.verdict == PentaVerdict::Exterior {
            return Err(Error::ExteriorInput);
        }
        Ok(self.raw_apply(pt))
    }

    /// self after other, in normal form. The base parameter composes
    /// exactly; omega is fitted from the action on the probe point, where
    /// the a-component of a normal-form map is omega (1 - |alpha|^2) a.
    pub fn compose(&self, other: &Self) -> Self {
        let nu = self.nu.compose(other.nu());
        let probe = PentaPoint::new(
            Complex64::new(PROBE_A, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        let image = self.raw_apply(&other.raw_apply(&probe));
        let omega = image.a / (PROBE_A * (1.0 - nu.alpha().norm_sqr()));
        Self { omega: omega / omega.norm(), nu }
    }

    /// Group inverse, again fitted at the probe point: the inverse must
    /// return the probe's image to the probe.
    pub fn inverse(&self) -> Self {
        let nu = self.nu.inverse();
        let probe = PentaPoint::new(
            Complex64::new(PROBE_A, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        let image = self.raw_apply(&probe);
        let ac = nu.alpha().conj();
        let q = 1.0 - ac * image.s + ac * ac * image.p;
        let omega = Complex64::new(PROBE_A, 0.0) * q
            / ((1.0 - nu.alpha().norm_sqr()) * image.a);
        Self { omega: omega / omega.norm(), nu }
    }
}

/// Maximal change of the base coordinates across fibre directions: for
/// `samples` random interior base points, two distinct fibre values are
/// mapped and their image bases compared. The action reads only (s, p), so
/// the deviation is zero up to representation noise.
pub fn check_fiber_preservation<R: rand::Rng>(
    f: &PentaAutomorphism,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let base = crate::sample::g2_interior_point(rng);
        let radius = crate::penta::fibre_radius(base)?;
        let (a1, a2) = (
            fibre_value(rng, radius),
            fibre_value(rng, radius),
        );
        let img1 = f.apply(&PentaPoint::new(a1, base.s, base.p), tol::EXACT_BOUNDARY)?;
        let img2 = f.apply(&PentaPoint::new(a2, base.s, base.p), tol::EXACT_BOUNDARY)?;
        worst = worst
            .max((img1.s - img2.s).norm())
            .max((img1.p - img2.p).norm());
    }
    Ok(worst)
}

fn fibre_value<R: rand::Rng>(rng: &mut R, radius: f64) -> Complex64 {
    Complex64::from_polar(
        0.95 * radius * rng.random_range(0.0f64..1.0),
        rng.random_range(0.0..std::f64::consts::TAU),
    )
}

/// For an automorphism fixing the origin fibre (alpha = 0), the action on
/// points over the royal variety must reduce to coordinatewise rotations
/// (a, s, p) -> (omega a, eta s, eta^2 p); in ellipsoid coordinates that is
/// (a, s) -> (omega a, eta s). Returns the maximal deviation over
/// `samples` random points of the slice.
pub fn check_origin_fixing_form<R: rand::Rng>(
    f: &PentaAutomorphism,
    samples: usize,
    rng: &mut R,
) -> Result<f64> {
    if f.nu().alpha().norm() != 0.0 {
        return Err(Error::PreconditionViolated {
            what: "origin-fixing form requires alpha = 0",
        });
    }
    let eta = f.nu().eta();
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let l = crate::sample::disc_point(rng, 0.95);
        let a = Complex64::from_polar(
            0.95 * (1.0 - l.norm_sqr()) * rng.random_range(0.0f64..1.0),
            rng.random_range(0.0..std::f64::consts::TAU),
        );
        let pt = PentaPoint::new(a, 2.0 * l, l * l);
        let img = f.apply(&pt, tol::EXACT_BOUNDARY)?;
        worst = worst
            .max((img.a - f.omega() * a).norm())
            .max((img.s - eta * pt.s).norm())
            .max((img.p - eta * eta * pt.p).norm());
        let (ea, es) = crate::penta::slice_to_ellipsoid(img, tol::SAMPLED_BOUNDARY)?;
        worst = worst
            .max((ea - f.omega() * a).norm())
            .max((es - eta * pt.s).norm());
    }
    Ok(worst)
}

/// Convenience for tests and suites: the two sides of the fibre-modulus
/// law at a point of the smooth boundary, |a'|^2 against exp(-u(s', p')).
pub fn hartogs_modulus_gap(f: &PentaAutomorphism, pt: &PentaPoint) -> Result<f64> {
    let img = f.apply(pt, tol::SAMPLED_BOUNDARY)?;
    let eu = (-u_potential(img.base())?).exp();
    Ok((img.a.norm_sqr() - eu).abs())
}

/// Defect of the image base, for flat-stratum preservation checks.
pub fn image_base_defect(f: &PentaAutomorphism, pt: &PentaPoint) -> Result<f64> {
    let img = f.apply(pt, tol::SAMPLED_BOUNDARY)?;
    Ok(g2_defect(img.base()))
}

//! The symmetrized bidisc G2 in C^2: membership, boundary strata, the royal
//! variety, and the action lifted from disc self-maps.
//!
//! A point (s, p) lies in G2 exactly when both roots of z^2 - s z + p lie in
//! the open unit disc, equivalently when |s - conj(s) p| + |p|^2 < 1. The
//! closure decomposes into the interior, the Levi-flat part of the boundary
//! (one root inside, one on the circle), the distinguished part (both roots
//! on the circle), and within the distinguished part the royal points where
//! the two roots collide.

use num_complex::Complex64;

use crate::algebra::solve_quadratic_roots;
use crate::blaschke::{BlaschkeProduct, MoebiusMap};
use crate::error::{Error, Result};
use crate::point::G2Point;
use crate::tol;

/// Symmetrization map: an unordered pair of disc points to (sum, product).
pub fn sigma(l1: Complex64, l2: Complex64) -> G2Point {
    G2Point::new(l1 + l2, l1 * l2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum G2Verdict {
    Interior,
    /// Boundary point off the distinguished part: one root strictly inside
    /// the disc, one on the circle.
    Boundary,
    /// Distinguished (Shilov) boundary: both roots on the circle.
    ShilovBoundary,
    /// Shilov point with coinciding roots, s^2 = 4p.
    RoyalBoundary,
    Exterior,
}

impl G2Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            G2Verdict::Interior => "interior",
            G2Verdict::Boundary => "boundary",
            G2Verdict::ShilovBoundary => "shilov-boundary",
            G2Verdict::RoyalBoundary => "royal-boundary",
            G2Verdict::Exterior => "exterior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct G2Class {
    pub verdict: G2Verdict,
    /// |s - conj(s) p| + |p|^2 - 1. Negative inside, zero on the boundary.
    pub defect: f64,
}

impl G2Class {
    pub fn is_shilov(&self) -> bool {
        matches!(self.verdict, G2Verdict::ShilovBoundary | G2Verdict::RoyalBoundary)
    }

    pub fn is_boundary(&self) -> bool {
        matches!(
            self.verdict,
            G2Verdict::Boundary | G2Verdict::ShilovBoundary | G2Verdict::RoyalBoundary
        )
    }
}

/// Membership defect |s - conj(s) p| + |p|^2 - 1 without classification.
pub fn g2_defect(pt: G2Point) -> f64 {
    (pt.s - pt.s.conj() * pt.p).norm() + pt.p.norm_sqr() - 1.0
}

/// Stratified membership test at band half-width `tol`.
///
/// The defect criterion alone does not suffice on the boundary: points like
/// (4, 1) zero the defect while lying far outside, so boundary status also
/// requires |s| <= 2.
pub fn g2_classify(pt: G2Point, tol: f64) -> Result<G2Class> {
    pt.ensure_finite()?;
    let defect = g2_defect(pt);
    let verdict = if defect < -tol {
        G2Verdict::Interior
    } else if defect.abs() <= tol && pt.s.norm() <= 2.0 + tol {
        let roots = solve_quadratic_roots(pt.s, pt.p);
        let shilov = roots
            .as_array()
            .iter()
            .all(|l| (l.norm() - 1.0).abs() <= tol);
        if shilov {
            let royal = (pt.s * pt.s - 4.0 * pt.p).norm() < tol;
            if royal {
                G2Verdict::RoyalBoundary
            } else {
                G2Verdict::ShilovBoundary
            }
        } else {
            G2Verdict::Boundary
        }
    } else {
        G2Verdict::Exterior
    };
    Ok(G2Class { verdict, defect })
}

/// A point of the royal variety, the image of the diagonal disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoyalPoint {
    pub lambda: Complex64,
}

impl RoyalPoint {
    pub fn embed(&self) -> G2Point {
        G2Point::new(2.0 * self.lambda, self.lambda * self.lambda)
    }
}

/// Test for membership in the royal variety (s, p) = (2 lambda, lambda^2)
/// with lambda in the closed disc; returns the diagonal parameter.
pub fn royal_membership(pt: G2Point, tol: f64) -> Option<RoyalPoint> {
    if !pt.is_finite() {
        return None;
    }
    let deviation = (pt.s * pt.s - 4.0 * pt.p).norm();
    let lambda = 0.5 * pt.s;
    if deviation < tol && lambda.norm() <= 1.0 + tol {
        Some(RoyalPoint { lambda })
    } else {
        None
    }
}

/// Push a point of the closure forward along a finite Blaschke product:
/// split into roots, map each, resymmetrize.
pub fn lift_blaschke(b: &BlaschkeProduct, pt: G2Point, tol: f64) -> Result<G2Point> {
    let class = g2_classify(pt, tol)?;
    if class.verdict == G2Verdict::Exterior {
        return Err(Error::ExteriorInput);
    }
    let roots = solve_quadratic_roots(pt.s, pt.p);
    Ok(sigma(b.eval(roots.first)?, b.eval(roots.second)?))
}

/// Root-splitting evaluation of the automorphism action. Reference path
/// for [`apply_moebius`].
pub fn apply_moebius_via_roots(m: &MoebiusMap, pt: G2Point, tol: f64) -> Result<G2Point> {
    let class = g2_classify(pt, tol)?;
    if class.verdict == G2Verdict::Exterior {
        return Err(Error::ExteriorInput);
    }
    let roots = solve_quadratic_roots(pt.s, pt.p);
    Ok(sigma(m.eval(roots.first)?, m.eval(roots.second)?))
}

/// Automorphism action in closed rational form, no root extraction:
///
///   s' = eta ((s - 2 alpha) - conj(alpha)(2p - alpha s)) / q
///   p' = eta^2 (p - alpha s + alpha^2) / q
///   q  = 1 - conj(alpha) s + conj(alpha)^2 p
///
/// where q factors as (1 - conj(alpha) l1)(1 - conj(alpha) l2) over the
/// roots, so it stays away from zero on the closure.
pub fn apply_moebius(m: &MoebiusMap, pt: G2Point, tol: f64) -> Result<G2Point> {
    let class = g2_classify(pt, tol)?;
    if class.verdict == G2Verdict::Exterior {
        return Err(Error::ExteriorInput);
    }
    let ac = m.alpha().conj();
    let q = 1.0 - ac * pt.s + ac * ac * pt.p;
    if q.norm() < tol::POLE_GUARD {
        return Err(Error::DenominatorDegenerate { guard: tol::POLE_GUARD });
    }
    Ok(apply_moebius_raw(m, &pt))
}

/// The rational formula with no membership gate; callers keep the input in
/// the closure, where q is bounded below by (1 - |alpha|)^2.
pub(crate) fn apply_moebius_raw(m: &MoebiusMap, pt: &G2Point) -> G2Point {
    let (eta, alpha) = (m.eta(), m.alpha());
    let ac = alpha.conj();
    let q = 1.0 - ac * pt.s + ac * ac * pt.p;
    debug_assert!(q.norm() > tol::POLE_GUARD);
    let s = eta * ((pt.s - 2.0 * alpha) - ac * (2.0 * pt.p - alpha * pt.s)) / q;
    let p = eta * eta * (pt.p - alpha * pt.s + alpha * alpha) / q;
    G2Point::new(s, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
        let r = radius * rng.random_range(0.0f64..1.0).sqrt();
        Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
    }

    fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
    }

    const T: f64 = tol::EXACT_BOUNDARY;

    #[test]
    fn royal_corner_is_both_shilov_and_royal() {
        let class = g2_classify(G2Point::new(c(2.0, 0.0), c(1.0, 0.0)), T).unwrap();
        assert_eq!(class.verdict, G2Verdict::RoyalBoundary);
        assert!(class.is_shilov());
        assert!(class.defect.abs() < 1e-15);
    }

    #[test]
    fn one_interior_root_is_plain_boundary() {
        let class = g2_classify(G2Point::new(c(1.0, 0.0), c(0.0, 0.0)), T).unwrap();
        assert_eq!(class.verdict, G2Verdict::Boundary);
        assert!(!class.is_shilov());
    }

    #[test]
    fn zero_defect_alone_is_not_boundary() {
        // (4, 1) zeroes the defect but has |s| > 2 and a root near 3.73.
        let class = g2_classify(G2Point::new(c(4.0, 0.0), c(1.0, 0.0)), T).unwrap();
        assert!(class.defect.abs() < 1e-15);
        assert_eq!(class.verdict, G2Verdict::Exterior);
    }

    #[test]
    fn plain_exterior() {
        let class = g2_classify(G2Point::new(c(3.0, 0.0), c(0.0, 0.0)), T).unwrap();
        assert_eq!(class.verdict, G2Verdict::Exterior);
        assert!((class.defect - 2.0).abs() < 1e-15);
    }

    #[test]
    fn sigma_images_of_disc_pairs_are_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..10_000 {
            let pt = sigma(disc(&mut rng, 0.999), disc(&mut rng, 0.999));
            let class = g2_classify(pt, T).unwrap();
            assert_eq!(class.verdict, G2Verdict::Interior, "defect {}", class.defect);
        }
    }

    #[test]
    fn strata_from_root_positions() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for _ in 0..5_000 {
            // One root inside, one on the circle, kept apart: flat boundary.
            let inner = disc(&mut rng, 0.95);
            let mut edge = unit(&mut rng);
            while (inner - edge).norm() < 0.05 {
                edge = unit(&mut rng);
            }
            let class = g2_classify(sigma(inner, edge), T).unwrap();
            assert_eq!(class.verdict, G2Verdict::Boundary, "defect {}", class.defect);

            // Two separated circle roots: distinguished boundary.
            let e1 = unit(&mut rng);
            let mut e2 = unit(&mut rng);
            while (e1 - e2).norm() < 0.05 {
                e2 = unit(&mut rng);
            }
            let class = g2_classify(sigma(e1, e2), T).unwrap();
            assert_eq!(class.verdict, G2Verdict::ShilovBoundary);

            // Collided circle roots: royal corner.
            let class = g2_classify(sigma(e1, e1), T).unwrap();
            assert_eq!(class.verdict, G2Verdict::RoyalBoundary);
        }
    }

    #[test]
    fn verdict_consistent_with_defect_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        for _ in 0..10_000 {
            let pt = G2Point::new(
                c(rng.random_range(-2.5..2.5), rng.random_range(-2.5..2.5)),
                c(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5)),
            );
            let class = g2_classify(pt, T).unwrap();
            match class.verdict {
                G2Verdict::Interior => assert!(class.defect < -T),
                G2Verdict::Exterior => {
                    assert!(class.defect > T || pt.s.norm() > 2.0 + T)
                }
                _ => assert!(class.defect.abs() <= T && pt.s.norm() <= 2.0 + T),
            }
        }
    }

    #[test]
    fn royal_membership_reads_diagonal_parameter() {
        let pt = G2Point::new(c(1.0, 0.0), c(0.25, 0.0));
        let royal = royal_membership(pt, T).unwrap();
        assert!((royal.lambda - c(0.5, 0.0)).norm() < 1e-15);
        let back = royal.embed();
        assert!((back.s - pt.s).norm() < 1e-15 && (back.p - pt.p).norm() < 1e-15);

        assert!(royal_membership(G2Point::new(c(1.0, 0.0), c(0.3, 0.0)), T).is_none());
        // Diagonal parameter outside the closed disc.
        assert!(royal_membership(G2Point::new(c(3.0, 0.0), c(2.25, 0.0)), T).is_none());
    }

    #[test]
    fn royal_interior_points_classify_interior() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        for _ in 0..2_000 {
            let l = disc(&mut rng, 0.99);
            let pt = RoyalPoint { lambda: l }.embed();
            assert_eq!(g2_classify(pt, T).unwrap().verdict, G2Verdict::Interior);
            assert!(royal_membership(pt, T).is_some());
        }
    }

    #[test]
    fn lift_single_zero_product_at_origin() {
        let b = BlaschkeProduct::new(c(1.0, 0.0), vec![c(0.5, 0.0)]).unwrap();
        let out = lift_blaschke(&b, G2Point::new(c(0.0, 0.0), c(0.0, 0.0)), T).unwrap();
        assert!((out.s - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((out.p - c(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn lift_rejects_exterior_input() {
        let b = BlaschkeProduct::new(c(1.0, 0.0), vec![c(0.5, 0.0)]).unwrap();
        assert!(matches!(
            lift_blaschke(&b, G2Point::new(c(3.0, 0.0), c(0.0, 0.0)), T),
            Err(Error::ExteriorInput)
        ));
    }

    #[test]
    fn lift_preserves_royal_variety() {
        let mut rng = ChaCha8Rng::seed_from_u64(65);
        for _ in 0..2_000 {
            let deg = rng.random_range(1..=4);
            let zeros: Vec<_> = (0..deg).map(|_| disc(&mut rng, 0.9)).collect();
            let b = BlaschkeProduct::new(unit(&mut rng), zeros).unwrap();
            let pt = RoyalPoint { lambda: disc(&mut rng, 0.95) }.embed();
            let out = lift_blaschke(&b, pt, T).unwrap();
            assert!(
                royal_membership(out, T).is_some(),
                "royal image lost: s^2-4p = {:e}",
                (out.s * out.s - 4.0 * out.p).norm()
            );
        }
    }

    #[test]
    fn closed_form_matches_frozen_reference() {
        // Reference values computed at 50-digit precision through the
        // root-splitting path for eta = 0.6 + 0.8i, alpha = 0.3 - 0.2i
        // applied to sigma(0.3 + 0.4i, -0.2 + 0.1i).
        let m = MoebiusMap::new(c(0.6, 0.8), c(0.3, -0.2)).unwrap();
        let pt = G2Point::new(c(0.1, 0.5), c(-0.1, -0.05));
        let out = apply_moebius(&m, pt, T).unwrap();
        assert!((out.s - c(-1.0351764537791113, 0.067_609_658_522_646_1)).norm() < 1e-13);
        assert!((out.p - c(0.32073153307615374, -0.027_661_094_442_063_15)).norm() < 1e-13);
    }

    #[test]
    fn closed_form_agrees_with_root_path() {
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for _ in 0..10_000 {
            let m = MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.9)).unwrap();
            let pt = sigma(disc(&mut rng, 0.99), disc(&mut rng, 0.99));
            let a = apply_moebius(&m, pt, T).unwrap();
            let b = apply_moebius_via_roots(&m, pt, T).unwrap();
            assert!(
                (a.s - b.s).norm() < tol::ALGEBRAIC && (a.p - b.p).norm() < tol::ALGEBRAIC,
                "paths split: {:e}",
                (a.s - b.s).norm().max((a.p - b.p).norm())
            );
        }
    }

    #[test]
    fn denominator_factors_over_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for _ in 0..10_000 {
            let alpha = disc(&mut rng, 0.95);
            let (l1, l2) = (disc(&mut rng, 0.999), disc(&mut rng, 0.999));
            let pt = sigma(l1, l2);
            let ac = alpha.conj();
            let q = 1.0 - ac * pt.s + ac * ac * pt.p;
            let factored = (1.0 - ac * l1) * (1.0 - ac * l2);
            assert!((q - factored).norm() < 1e-12);
        }
    }

    #[test]
    fn boundary_maps_to_boundary_under_lifts() {
        let mut rng = ChaCha8Rng::seed_from_u64(68);
        for _ in 0..2_000 {
            let deg = rng.random_range(1..=4);
            let zeros: Vec<_> = (0..deg).map(|_| disc(&mut rng, 0.9)).collect();
            let b = BlaschkeProduct::new(unit(&mut rng), zeros).unwrap();

            let inner = disc(&mut rng, 0.95);
            let mut edge = unit(&mut rng);
            while (inner - edge).norm() < 0.05 {
                edge = unit(&mut rng);
            }
            let out = lift_blaschke(&b, sigma(inner, edge), T).unwrap();
            assert!(g2_defect(out).abs() < 1e-8);

            // Distinguished boundary stays distinguished: both mapped roots
            // keep unit modulus.
            let (e1, e2) = (unit(&mut rng), unit(&mut rng));
            let (w1, w2) = (b.eval(e1).unwrap(), b.eval(e2).unwrap());
            assert!((w1.norm() - 1.0).abs() < 1e-8 && (w2.norm() - 1.0).abs() < 1e-8);
            assert!(g2_defect(sigma(w1, w2)).abs() < 1e-8);
        }
    }
}

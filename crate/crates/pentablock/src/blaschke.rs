//! Disc automorphisms and finite Blaschke products.
//!
//! A disc automorphism is stored in the normal form eta (z - alpha) /
//! (1 - conj(alpha) z) with |eta| = 1 and |alpha| < 1. Compositions go
//! through the 2x2 matrix representative, then the parameters are read back
//! off the product and eta is renormalized onto the unit circle, so the
//! normal-form invariant survives long chains of group operations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    eta: Complex64,
    alpha: Complex64,
}

impl MoebiusMap {
    /// Normal-form constructor. `eta` may deviate from the unit circle by
    /// at most the documented slack and is renormalized exactly; `alpha`
    /// must lie strictly inside the disc.
    pub fn new(eta: Complex64, alpha: Complex64) -> Result<Self> {
        if !eta.is_finite() || !alpha.is_finite() {
            return Err(Error::NonFinite { place: "moebius parameters" });
        }
        let m = eta.norm();
        if (m - 1.0).abs() > tol::UNIT_MODULUS_SLACK {
            return Err(Error::NotUnimodular { name: "eta", modulus: m });
        }
        if alpha.norm() >= 1.0 {
            return Err(Error::NotInDisc { name: "alpha", modulus: alpha.norm() });
        }
        Ok(Self { eta: eta / m, alpha })
    }

    pub fn identity() -> Self {
        Self { eta: Complex64::new(1.0, 0.0), alpha: Complex64::new(0.0, 0.0) }
    }

    pub fn eta(&self) -> Complex64 {
        self.eta
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let den = 1.0 - self.alpha.conj() * z;
        if den.norm() < tol::POLE_GUARD {
            return Err(Error::PoleAtDomain { guard: tol::POLE_GUARD });
        }
        Ok(self.eta * (z - self.alpha) / den)
    }

    /// The inverse in normal form: parameters (conj(eta), -eta alpha).
    pub fn inverse(&self) -> Self {
        Self {
            eta: self.eta.conj(),
            alpha: -self.eta * self.alpha,
        }
    }

    /// self after other, read back into normal form from the matrix product.
    ///
    /// The representative of eta (z - alpha)/(1 - conj(alpha) z) is
    /// [[eta, -eta alpha], [-conj(alpha), 1]]. For parameters inside the
    /// disc the relevant product entries are bounded away from zero, so the
    /// parameter extraction below cannot divide by zero.
    pub fn compose(&self, other: &Self) -> Self {
        let (e1, a1) = (self.eta, self.alpha);
        let (e2, a2) = (other.eta, other.alpha);
        // Product of the two representatives.
        let m11 = e1 * e2 + (-e1 * a1) * (-a2.conj());
        let m12 = e1 * (-e2 * a2) + (-e1 * a1);
        let m21 = -a1.conj() * e2 + (-a2.conj());
        let m22 = -a1.conj() * (-e2 * a2) + Complex64::new(1.0, 0.0);
        let mut alpha = -m12 / m11;
        let eta = m11 / m22;
        debug_assert!(m21.is_finite());
        // Long chains of compositions can push the true |alpha| so close to
        // 1 that rounding lands on or past the circle; pull such a value
        // back to the nearest representable interior point.
        if alpha.norm() >= 1.0 {
            alpha *= (1.0 - f64::EPSILON) / alpha.norm();
        }
        Self { eta: eta / eta.norm(), alpha }
    }
}

/// Finite Blaschke product eta prod_j (z - z_j)/(1 - conj(z_j) z).
///
/// Zeros form a multiset; repeated entries raise the multiplicity. The
/// zero-carrying constructor requires at least one zero; plain rotations
/// z -> eta z come only from [`BlaschkeProduct::rotation`], so an
/// accidentally empty zero list cannot silently change the map class.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    eta: Complex64,
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn new(eta: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::EmptyZeros);
        }
        Self::build(eta, zeros)
    }

    /// The rotation z -> eta z, reported with degree 0.
    ///
    /// In product form a rotation is the degree-one map with its zero at
    /// the origin; this constructor leaves the zero list empty instead and
    /// [`BlaschkeProduct::eval`] supplies the factor z, so rotations built
    /// here stay distinguishable from zero-carrying products.
    pub fn rotation(eta: Complex64) -> Result<Self> {
        Self::build(eta, Vec::new())
    }

    fn build(eta: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        if !eta.is_finite() || zeros.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite { place: "blaschke parameters" });
        }
        let m = eta.norm();
        if (m - 1.0).abs() > tol::UNIT_MODULUS_SLACK {
            return Err(Error::NotUnimodular { name: "eta", modulus: m });
        }
        for z in &zeros {
            if z.norm() >= 1.0 {
                return Err(Error::NotInDisc { name: "zero", modulus: z.norm() });
            }
        }
        Ok(Self { eta: eta / m, zeros })
    }

    pub fn eta(&self) -> Complex64 {
        self.eta
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if self.zeros.is_empty() {
            // Rotation constructor: see [`BlaschkeProduct::rotation`].
            return Ok(self.eta * z);
        }
        let mut acc = self.eta;
        for zero in &self.zeros {
            let den = 1.0 - zero.conj() * z;
            if den.norm() < tol::POLE_GUARD {
                return Err(Error::PoleAtDomain { guard: tol::POLE_GUARD });
            }
            acc *= (z - zero) / den;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
        Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
    }

    fn disc(rng: &mut ChaCha8Rng, radius: f64) -> Complex64 {
        let r = radius * rng.random_range(0.0f64..1.0).sqrt();
        Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
    }

    #[test]
    fn eval_normal_form_examples() {
        let m = MoebiusMap::new(c(1.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((m.eval(c(0.0, 0.0)).unwrap() - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((m.eval(c(1.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn constructor_rejects_bad_parameters() {
        assert!(matches!(
            MoebiusMap::new(c(1.1, 0.0), c(0.0, 0.0)),
            Err(Error::NotUnimodular { .. })
        ));
        assert!(matches!(
            MoebiusMap::new(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::NotInDisc { .. })
        ));
        // Slightly off-circle eta is renormalized exactly.
        let m = MoebiusMap::new(c(1.0 + 1e-7, 0.0), c(0.0, 0.0)).unwrap();
        assert!((m.eta().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn inverse_of_rotation() {
        let m = MoebiusMap::new(c(0.0, 1.0), c(0.0, 0.0)).unwrap();
        let inv = m.inverse();
        assert!((inv.eta() - c(0.0, -1.0)).norm() < 1e-15);
        assert!(inv.alpha().norm() < 1e-15);
    }

    #[test]
    fn inverse_round_trip_bulk() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..10_000 {
            let m = MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.95)).unwrap();
            let z = disc(&mut rng, 0.999);
            let w = m.eval(z).unwrap();
            assert!(w.norm() < 1.0);
            let back = m.inverse().eval(w).unwrap();
            assert!((back - z).norm() < tol::ALGEBRAIC, "round trip drift {}", (back - z).norm());
        }
    }

    #[test]
    fn compose_matches_sequential_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for _ in 0..10_000 {
            let f = MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.9)).unwrap();
            let g = MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.9)).unwrap();
            let z = disc(&mut rng, 0.99);
            let seq = f.eval(g.eval(z).unwrap()).unwrap();
            let joint = f.compose(&g).eval(z).unwrap();
            assert!((seq - joint).norm() < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn compose_keeps_normal_form_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let mut m = MoebiusMap::identity();
        for _ in 0..200 {
            m = m.compose(&MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.6)).unwrap());
            assert!((m.eta().norm() - 1.0).abs() < 1e-12);
            assert!(m.alpha().norm() < 1.0);
        }
    }

    #[test]
    fn identity_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..1_000 {
            let f = MoebiusMap::new(unit(&mut rng), disc(&mut rng, 0.9)).unwrap();
            let z = disc(&mut rng, 0.9);
            let e = MoebiusMap::identity();
            let li = f.compose(&e).eval(z).unwrap();
            let ri = e.compose(&f).eval(z).unwrap();
            let fv = f.eval(z).unwrap();
            assert!((li - fv).norm() < tol::ALGEBRAIC && (ri - fv).norm() < tol::ALGEBRAIC);
            let both = f.compose(&f.inverse()).eval(z).unwrap();
            assert!((both - z).norm() < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn blaschke_requires_rotation_constructor_for_degree_zero() {
        assert!(matches!(
            BlaschkeProduct::new(c(1.0, 0.0), vec![]),
            Err(Error::EmptyZeros)
        ));
        let r = BlaschkeProduct::rotation(c(0.0, 1.0)).unwrap();
        assert_eq!(r.degree(), 0);
        assert!((r.eval(c(0.3, 0.2)).unwrap() - c(-0.2, 0.3)).norm() < 1e-15);
    }

    #[test]
    fn blaschke_single_zero_at_origin_evaluates() {
        let b = BlaschkeProduct::new(c(1.0, 0.0), vec![c(0.5, 0.0)]).unwrap();
        assert!((b.eval(c(0.0, 0.0)).unwrap() - c(-0.5, 0.0)).norm() < 1e-15);
    }

    /// Oracle: expand numerator and denominator into polynomial
    /// coefficients by convolution and evaluate both by Horner.
    fn eval_via_expanded_polynomials(b: &BlaschkeProduct, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        let mut num = vec![one];
        let mut den = vec![one];
        for zero in b.zeros() {
            num = convolve(&num, &[-zero, one]);
            den = convolve(&den, &[one, -zero.conj()]);
        }
        let horner = |coeffs: &[Complex64]| {
            coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &cf| acc * z + cf)
        };
        b.eta() * horner(&num) / horner(&den)
    }

    fn convolve(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn blaschke_matches_polynomial_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..2_000 {
            let deg = rng.random_range(1..=4);
            let zeros: Vec<_> = (0..deg).map(|_| disc(&mut rng, 0.9)).collect();
            let b = BlaschkeProduct::new(unit(&mut rng), zeros).unwrap();
            let z = disc(&mut rng, 0.999);
            let direct = b.eval(z).unwrap();
            let oracle = eval_via_expanded_polynomials(&b, z);
            assert!((direct - oracle).norm() < 1e-10);
        }
    }

    #[test]
    fn blaschke_modulus_one_on_circle_and_below_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        for _ in 0..10_000 {
            let deg = rng.random_range(1..=4);
            let zeros: Vec<_> = (0..deg).map(|_| disc(&mut rng, 0.9)).collect();
            let b = BlaschkeProduct::new(unit(&mut rng), zeros).unwrap();
            let on_circle = b.eval(unit(&mut rng)).unwrap();
            assert!((on_circle.norm() - 1.0).abs() < tol::ALGEBRAIC);
            let inside = b.eval(disc(&mut rng, 0.999)).unwrap();
            assert!(inside.norm() < 1.0);
        }
    }
}

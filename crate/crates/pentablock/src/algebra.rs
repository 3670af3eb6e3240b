//! 2x2 complex matrices and the quadratic that recovers an unordered pair
//! from its symmetric functions.

use num_complex::Complex64;

use crate::point::PentaPoint;

/// Dense 2x2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub a11: Complex64,
    pub a12: Complex64,
    pub a21: Complex64,
    pub a22: Complex64,
}

impl Matrix2 {
    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn trace(&self) -> Complex64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> Complex64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn is_finite(&self) -> bool {
        self.a11.is_finite() && self.a12.is_finite() && self.a21.is_finite() && self.a22.is_finite()
    }

    /// Largest singular value, in closed form.
    ///
    /// The two squared singular values of a 2x2 matrix are the roots of
    /// x^2 - F x + |det|^2 with F the squared Frobenius norm, so the larger
    /// one is (F + sqrt(F^2 - 4 |det|^2)) / 2. The discriminant is clamped
    /// at zero; it can only go negative through rounding.
    pub fn operator_norm(&self) -> f64 {
        let f = self.a11.norm_sqr() + self.a12.norm_sqr() + self.a21.norm_sqr()
            + self.a22.norm_sqr();
        let d = self.det().norm();
        let disc = (f * f - 4.0 * d * d).max(0.0);
        (0.5 * (f + disc.sqrt())).sqrt()
    }

    pub fn penta_point(&self) -> PentaPoint {
        PentaPoint::from_matrix(self)
    }
}

/// Unordered root pair of z^2 - s z + p. `first` is the root obtained
/// without cancellation (the one of larger modulus).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootPair {
    pub first: Complex64,
    pub second: Complex64,
}

impl RootPair {
    pub fn as_array(&self) -> [Complex64; 2] {
        [self.first, self.second]
    }

    /// Symmetric functions of the pair, for round-trip checks.
    pub fn symmetrize(&self) -> (Complex64, Complex64) {
        (self.first + self.second, self.first * self.second)
    }
}

/// Roots of z^2 - s z + p, numerically stable.
///
/// The larger root is formed as (s + w)/2 with w = +-sqrt(s^2 - 4p) signed
/// to add constructively to s; the smaller root is recovered as p divided
/// by the larger one, which avoids the classic cancellation when the two
/// roots differ by many orders of magnitude.
pub fn solve_quadratic_roots(s: Complex64, p: Complex64) -> RootPair {
    let disc = s * s - 4.0 * p;
    let mut w = disc.sqrt();
    // Re(conj(s) * w) >= 0 picks the branch that adds constructively.
    if (s.conj() * w).re < 0.0 {
        w = -w;
    }
    let first = 0.5 * (s + w);
    let second = if first.norm() > 0.0 {
        p / first
    } else {
        Complex64::new(0.0, 0.0)
    };
    RootPair { first, second }
}

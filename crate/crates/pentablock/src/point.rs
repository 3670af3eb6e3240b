//! Points of the ambient spaces C^2 and C^3.
//!
//! `G2Point` carries the symmetric-function coordinates (s, p) of an
//! unordered pair of disc points; `PentaPoint` adds the fibre coordinate a
//! in front, so a point reads (a, s, p).

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct G2Point {
    pub s: Complex64,
    pub p: Complex64,
}

impl G2Point {
    pub fn new(s: Complex64, p: Complex64) -> Self {
        Self { s, p }
    }

    pub fn is_finite(&self) -> bool {
        self.s.is_finite() && self.p.is_finite()
    }

    /// Errors out on NaN or infinite coordinates; domain predicates never
    /// admit non-finite input.
    pub fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite { place: "(s, p)" })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PentaPoint {
    pub a: Complex64,
    pub s: Complex64,
    pub p: Complex64,
}

impl PentaPoint {
    pub fn new(a: Complex64, s: Complex64, p: Complex64) -> Self {
        Self { a, s, p }
    }

    /// Coordinates read off a 2x2 matrix: lower-left entry, trace,
    /// determinant.
    pub fn from_matrix(m: &crate::algebra::Matrix2) -> Self {
        Self {
            a: m.a21,
            s: m.trace(),
            p: m.det(),
        }
    }

    /// The base point under the fibration over the symmetrized bidisc.
    pub fn base(&self) -> G2Point {
        G2Point::new(self.s, self.p)
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.s.is_finite() && self.p.is_finite()
    }

    pub fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite { place: "(a, s, p)" })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness_guard() {
        let bad = G2Point::new(Complex64::new(f64::NAN, 0.0), Complex64::new(0.0, 0.0));
        assert!(bad.ensure_finite().is_err());
        let good = PentaPoint::new(
            Complex64::new(0.1, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
        );
        assert!(good.ensure_finite().is_ok());
        assert!(PentaPoint::new(
            Complex64::new(0.0, f64::INFINITY),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0)
        )
        .ensure_finite()
        .is_err());
    }
}

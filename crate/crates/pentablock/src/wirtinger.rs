//! Finite-difference Wirtinger calculus for real-valued functions of
//! several complex variables, and the Levi-form probes built on it.
//!
//! Derivatives are taken per real coordinate with central differences and
//! combined into the standard Wirtinger operators:
//!
//!   d/dz_i       = (d/dx_i - i d/dy_i) / 2
//!   d^2/dz_i dconj(z_j) = ((f_{x_i x_j} + f_{y_i y_j}) + i (f_{x_i y_j} - f_{y_i x_j})) / 4
//!
//! Mixed real seconds use the symmetric 4-point stencil, so the assembled
//! matrix is Hermitian exactly, not just up to truncation error.

use num_complex::Complex64;

use crate::algebra::solve_quadratic_roots;
use crate::bidisc::g2_defect;
use crate::error::{Error, Result};
use crate::penta::{penta_classify, u_potential, PentaVerdict};
use crate::point::{G2Point, PentaPoint};
use crate::tol;

/// Real-valued function of n complex variables, allowed to refuse points
/// outside its domain.
pub trait RealField {
    fn eval(&self, z: &[Complex64]) -> Result<f64>;
}

impl<F: Fn(&[Complex64]) -> Result<f64>> RealField for F {
    fn eval(&self, z: &[Complex64]) -> Result<f64> {
        self(z)
    }
}

fn shifted(point: &[Complex64], i: usize, dx: f64, dy: f64) -> Vec<Complex64> {
    let mut z = point.to_vec();
    z[i] += Complex64::new(dx, dy);
    z
}

fn shifted2(point: &[Complex64], i: usize, di: (f64, f64), j: usize, dj: (f64, f64)) -> Vec<Complex64> {
    let mut z = point.to_vec();
    z[i] += Complex64::new(di.0, di.1);
    z[j] += Complex64::new(dj.0, dj.1);
    z
}

/// Second derivative along one real coordinate, 3-point central.
fn second_same<F: RealField>(f: &F, point: &[Complex64], i: usize, re: bool, h: f64) -> Result<f64> {
    let d = |s: f64| if re { (s, 0.0) } else { (0.0, s) };
    let plus = f.eval(&shifted(point, i, d(h).0, d(h).1))?;
    let center = f.eval(point)?;
    let minus = f.eval(&shifted(point, i, d(-h).0, d(-h).1))?;
    Ok((plus - 2.0 * center + minus) / (h * h))
}

/// Mixed second derivative across two real coordinates, 4-point stencil.
/// The stencil is symmetric under swapping the two coordinates, which is
/// what makes the assembled complex Hessian exactly Hermitian.
fn second_mixed<F: RealField>(
    f: &F,
    point: &[Complex64],
    i: usize,
    re_i: bool,
    j: usize,
    re_j: bool,
    h: f64,
) -> Result<f64> {
    debug_assert!(i != j || re_i != re_j);
    let di = |s: f64| if re_i { (s, 0.0) } else { (0.0, s) };
    let dj = |s: f64| if re_j { (s, 0.0) } else { (0.0, s) };
    let pp = f.eval(&shifted2(point, i, di(h), j, dj(h)))?;
    let pm = f.eval(&shifted2(point, i, di(h), j, dj(-h)))?;
    let mp = f.eval(&shifted2(point, i, di(-h), j, dj(h)))?;
    let mm = f.eval(&shifted2(point, i, di(-h), j, dj(-h)))?;
    Ok((pp - pm - mp + mm) / (4.0 * h * h))
}

/// First Wirtinger derivative d f / d z_i, 2-point central in each real
/// coordinate.
pub fn wirtinger_first<F: RealField>(f: &F, point: &[Complex64], i: usize, h: f64) -> Result<Complex64> {
    let fx = (f.eval(&shifted(point, i, h, 0.0))? - f.eval(&shifted(point, i, -h, 0.0))?) / (2.0 * h);
    let fy = (f.eval(&shifted(point, i, 0.0, h))? - f.eval(&shifted(point, i, 0.0, -h))?) / (2.0 * h);
    Ok(Complex64::new(fx, -fy) * 0.5)
}

/// Same derivative from the 5-point fourth-order scheme, for cross-checks.
pub fn wirtinger_first_order4<F: RealField>(
    f: &F,
    point: &[Complex64],
    i: usize,
    h: f64,
) -> Result<Complex64> {
    let line = |re: bool| -> Result<f64> {
        let d = |s: f64| if re { (s, 0.0) } else { (0.0, s) };
        let f2p = f.eval(&shifted(point, i, d(2.0 * h).0, d(2.0 * h).1))?;
        let f1p = f.eval(&shifted(point, i, d(h).0, d(h).1))?;
        let f1m = f.eval(&shifted(point, i, d(-h).0, d(-h).1))?;
        let f2m = f.eval(&shifted(point, i, d(-2.0 * h).0, d(-2.0 * h).1))?;
        Ok((-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * h))
    };
    let fx = line(true)?;
    let fy = line(false)?;
    Ok(Complex64::new(fx, -fy) * 0.5)
}

/// Full mixed complex Hessian H_ij = d^2 f / d z_i d conj(z_j).
#[derive(Debug, Clone, PartialEq)]
pub struct WirtingerHessian {
    dim: usize,
    entries: Vec<Complex64>,
}

impl WirtingerHessian {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    /// Largest deviation from Hermitian symmetry; zero by construction of
    /// the stencils, kept as an explicit observable.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Largest eigenvalue magnitude of the (Hermitian) matrix, computed by
    /// shifted power iteration. Gershgorin bounds make both shifts positive
    /// definite, so the iteration converges to the extreme eigenvalues.
    pub fn spectral_radius(&self) -> f64 {
        let shift = 1.0
            + (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j).norm()).sum::<f64>())
                .fold(0.0f64, f64::max);
        let extreme = |sign: f64| -> f64 {
            let mut v: Vec<Complex64> = (0..self.dim)
                .map(|k| Complex64::new(1.0 + k as f64 * 0.25, 0.5 - k as f64 * 0.125))
                .collect();
            let mut mu = 0.0;
            for _ in 0..200 {
                let hv = self.apply(&v);
                let w: Vec<Complex64> = (0..self.dim).map(|i| sign * hv[i] + shift * v[i]).collect();
                let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return 0.0;
                }
                v = w.into_iter().map(|z| z / norm).collect();
                mu = norm;
            }
            // mu approximates shift + sign * lambda_extreme.
            sign * (mu - shift)
        };
        extreme(1.0).abs().max(extreme(-1.0).abs())
    }
}

/// Assemble the mixed Hessian at `point` with step `h`. Every entry comes
/// from its own real stencils; Hermitian symmetry is exact because the
/// stencil for (i, j) reuses the evaluations of the one for (j, i).
pub fn wirtinger_hessian<F: RealField>(f: &F, point: &[Complex64], h: f64) -> Result<WirtingerHessian> {
    let n = point.len();
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            let (xx, yy, xy, yx) = if i == j {
                (
                    second_same(f, point, i, true, h)?,
                    second_same(f, point, i, false, h)?,
                    second_mixed(f, point, i, true, i, false, h)?,
                    second_mixed(f, point, i, false, i, true, h)?,
                )
            } else {
                (
                    second_mixed(f, point, i, true, j, true, h)?,
                    second_mixed(f, point, i, false, j, false, h)?,
                    second_mixed(f, point, i, true, j, false, h)?,
                    second_mixed(f, point, i, false, j, true, h)?,
                )
            };
            entries[i * n + j] = Complex64::new(xx + yy, xy - yx) * 0.25;
        }
    }
    Ok(WirtingerHessian { dim: n, entries })
}

/// How far `f` is from pluriharmonic at `point`: the spectral radius of its
/// mixed Hessian.
pub fn pluriharmonicity_defect<F: RealField>(f: &F, point: &[Complex64], h: f64) -> Result<f64> {
    Ok(wirtinger_hessian(f, point, h)?.spectral_radius())
}

/// Gap between the second-order and fourth-order first-derivative schemes,
/// a cheap self-diagnostic for step choice.
pub fn first_derivative_cross_check<F: RealField>(
    f: &F,
    point: &[Complex64],
    i: usize,
    h: f64,
) -> Result<f64> {
    Ok((wirtinger_first(f, point, i, h)? - wirtinger_first_order4(f, point, i, h)?).norm())
}

/// Levi data of the smooth boundary stratum at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct LeviReport {
    pub point: PentaPoint,
    /// Orthonormal basis of the complex tangent space of the defining
    /// function at the point.
    pub tangent_basis: [[Complex64; 3]; 2],
    /// Eigenvalues of the Levi form restricted to that basis, descending.
    pub restricted_eigenvalues: [f64; 2],
    pub rank_estimate: usize,
}

fn smooth_defining_function(z: &[Complex64]) -> Result<f64> {
    let base = G2Point::new(z[1], z[2]);
    Ok(z[0].norm_sqr() - (-u_potential(base)?).exp())
}

fn inner(a: &[Complex64; 3], b: &[Complex64; 3]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

fn scale(v: &[Complex64; 3], s: Complex64) -> [Complex64; 3] {
    [v[0] * s, v[1] * s, v[2] * s]
}

fn sub(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Eigenvalues of a 2x2 Hermitian matrix [[d1, b], [conj(b), d2]].
fn hermitian2_eigs(d1: f64, d2: f64, b: Complex64) -> [f64; 2] {
    let mean = 0.5 * (d1 + d2);
    let disc = (0.25 * (d1 - d2) * (d1 - d2) + b.norm_sqr()).sqrt();
    [mean + disc, mean - disc]
}

/// Restricted Levi form of the smooth stratum's defining function
/// rho = |a|^2 - exp(-u), evaluated at a point of that stratum.
///
/// The complex tangent space is the orthogonal complement of the conjugate
/// gradient; the mixed Hessian restricted to it is a 2x2 Hermitian matrix
/// whose eigenvalue pattern gives the rank estimate.
pub fn levi_form_on_boundary(pt: PentaPoint, h: f64, rank_tol: f64) -> Result<LeviReport> {
    let class = penta_classify(pt, tol::SAMPLED_BOUNDARY)?;
    if class.verdict != PentaVerdict::SmoothBoundary {
        return Err(Error::NotOnSmoothBoundary);
    }
    let z = [pt.a, pt.s, pt.p];
    let f = smooth_defining_function;

    let grad = [
        wirtinger_first(&f, &z, 0, h)?,
        wirtinger_first(&f, &z, 1, h)?,
        wirtinger_first(&f, &z, 2, h)?,
    ];
    // The complex tangent space is { w : sum_i grad_i w_i = 0 }, i.e. the
    // Hermitian-orthogonal complement of the conjugated gradient.
    let normal = [grad[0].conj(), grad[1].conj(), grad[2].conj()];
    let normal_norm = inner(&normal, &normal).re.sqrt();
    if normal_norm < tol::GRADIENT_FLOOR {
        return Err(Error::DegenerateGradient { norm: normal_norm });
    }
    let unit_normal = scale(&normal, Complex64::new(1.0 / normal_norm, 0.0));

    // Seed Gram-Schmidt with the two standard basis vectors least aligned
    // with the normal, so the projections cannot degenerate.
    let mut order = [0usize, 1, 2];
    order.sort_by(|&a, &b| unit_normal[a].norm().total_cmp(&unit_normal[b].norm()));
    let mut basis: Vec<[Complex64; 3]> = Vec::with_capacity(2);
    for &k in order.iter().take(2) {
        let mut e = [Complex64::new(0.0, 0.0); 3];
        e[k] = Complex64::new(1.0, 0.0);
        let mut v = sub(&e, &scale(&unit_normal, inner(&e, &unit_normal)));
        for done in &basis {
            v = sub(&v, &scale(done, inner(&v, done)));
        }
        let norm = inner(&v, &v).re.sqrt();
        if norm < tol::GRADIENT_FLOOR {
            return Err(Error::DegenerateGradient { norm });
        }
        basis.push(scale(&v, Complex64::new(1.0 / norm, 0.0)));
    }

    let hess = wirtinger_hessian(&f, &z, h)?;
    // L_kl = sum_ij H_ij (w_k)_i conj((w_l)_j)
    let restricted = |k: usize, l: usize| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                acc += hess.get(i, j) * basis[k][i] * basis[l][j].conj();
            }
        }
        acc
    };
    let d1 = restricted(0, 0).re;
    let d2 = restricted(1, 1).re;
    let b = restricted(0, 1);
    let eigs = hermitian2_eigs(d1, d2, b);

    let top = eigs[0].abs().max(eigs[1].abs());
    let rank = if top == 0.0 {
        0
    } else {
        eigs.iter().filter(|e| e.abs() > rank_tol * top).count()
    };
    Ok(LeviReport {
        point: pt,
        tangent_basis: [basis[0], basis[1]],
        restricted_eigenvalues: eigs,
        rank_estimate: rank,
    })
}

/// Flatness probe for the Levi-flat stratum: the magnitude of the mixed
/// second derivative of the stratum's defining function along the analytic
/// disc direction through the point.
///
/// The base of the stratum is swept by discs l -> sigma(l, z0) with z0 the
/// unimodular root of the base point; differentiating sigma gives the
/// direction (0, 1, z0), and the fibre coordinate is held constant. Along
/// that line the defining function vanishes identically, so the returned
/// value is pure discretization noise when the stratum really is flat.
pub fn levi_flat_check_d2(pt: PentaPoint, h: f64) -> Result<f64> {
    let class = penta_classify(pt, tol::SAMPLED_BOUNDARY)?;
    if class.verdict != PentaVerdict::LeviFlatBoundary {
        return Err(Error::NotOnLeviFlat);
    }
    let roots = solve_quadratic_roots(pt.s, pt.p);
    // `first` is the larger-modulus root: the unimodular one on this stratum.
    let z0 = roots.first / roots.first.norm();
    let dir = scale(
        &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), z0],
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
    );
    let along = |l: &[Complex64]| -> Result<f64> {
        let s = pt.s + l[0] * dir[1];
        let p = pt.p + l[0] * dir[2];
        Ok(g2_defect(G2Point::new(s, p)))
    };
    let origin = [Complex64::new(0.0, 0.0)];
    let hess = wirtinger_hessian(&along, &origin, h)?;
    Ok(hess.get(0, 0).norm())
}

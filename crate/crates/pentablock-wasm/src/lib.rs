//! Browser bindings for the pentablock toolkit.
//!
//! Three operations are exported: `classify_point` and `apply_map` return
//! JSON strings (an `{"error": ...}` object on bad input, so the page has a
//! single decode path), and `render_slice` rasterizes a two-dimensional
//! slice of the domain into an RGBA buffer.

use pentablock::{
    fmt_f64, g2_classify, minkowski_functional, parse_automorphism, parse_point2, parse_point3,
    penta_classify, royal_membership, solve_quadratic_roots, G2Point, G2Verdict, PentaPoint,
    PentaVerdict, Result,
};
use wasm_bindgen::prelude::*;

fn json_escape(raw: &str) -> String {
    raw.replace('\\', "\\\\").replace('"', "\\\"")
}

fn error_json(e: impl std::fmt::Display) -> String {
    format!("{{\"error\":\"{}\"}}", json_escape(&e.to_string()))
}

fn complex_json(z: num_complex::Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}

fn penta_point_json(pt: PentaPoint) -> String {
    format!(
        "{{\"a\":{},\"s\":{},\"p\":{}}}",
        complex_json(pt.a),
        complex_json(pt.s),
        complex_json(pt.p)
    )
}

/// Gauge with the origin closed up by continuity.
fn gauge_of(pt: PentaPoint) -> Result<f64> {
    if pt.a.norm() == 0.0 && pt.s.norm() == 0.0 && pt.p.norm() == 0.0 {
        return Ok(0.0);
    }
    minkowski_functional(pt)
}

fn classify_full(pt: PentaPoint, tol: f64) -> Result<String> {
    let class = penta_classify(pt, tol)?;
    let gauge = gauge_of(pt)?;
    let hartogs = match class.hartogs_defect {
        Some(d) => fmt_f64(d),
        None => "null".to_owned(),
    };
    Ok(format!(
        "{{\"kind\":\"penta\",\"classification\":\"{}\",\"base\":\"{}\",\"base_defect\":{},\"hartogs_defect\":{},\"minkowski\":{}}}",
        class.verdict.name(),
        class.base.verdict.name(),
        fmt_f64(class.base.defect),
        hartogs,
        fmt_f64(gauge)
    ))
}

fn classify_base(pt: G2Point, tol: f64) -> Result<String> {
    let class = g2_classify(pt, tol)?;
    let royal = royal_membership(pt, tol).is_some();
    Ok(format!(
        "{{\"kind\":\"base\",\"classification\":\"{}\",\"defect\":{},\"royal\":{}}}",
        class.verdict.name(),
        fmt_f64(class.defect),
        royal
    ))
}

/// Classify "a,s,p" (full domain) or "s,p" (base) at tolerance `tol`.
#[wasm_bindgen]
pub fn classify_point(literal: &str, tol: f64) -> String {
    let result = if literal.matches(',').count() == 2 {
        parse_point3(literal).and_then(|pt| classify_full(pt, tol))
    } else {
        parse_point2(literal).and_then(|pt| classify_base(pt, tol))
    };
    result.unwrap_or_else(error_json)
}

/// Apply the automorphism "omega=...; eta=...; alpha=..." to "a,s,p".
#[wasm_bindgen]
pub fn apply_map(map: &str, point: &str, tol: f64) -> String {
    let run = || -> Result<String> {
        let f = parse_automorphism(map)?;
        let pt = parse_point3(point)?;
        let before = penta_classify(pt, tol)?;
        let image = f.apply(&pt, tol)?;
        let after = penta_classify(image, tol)?;
        Ok(format!(
            "{{\"input\":{},\"input_classification\":\"{}\",\"image\":{},\"image_classification\":\"{}\",\"agree\":{}}}",
            penta_point_json(pt),
            before.verdict.name(),
            penta_point_json(image),
            after.verdict.name(),
            before.verdict == after.verdict
        ))
    };
    run().unwrap_or_else(error_json)
}

const EXTERIOR: [u8; 3] = [244, 244, 244];
const EDGE: [u8; 3] = [15, 23, 42];
const FLAT: [u8; 3] = [245, 158, 11];
const SHILOV: [u8; 3] = [220, 38, 38];
const ROYAL: [u8; 3] = [250, 204, 21];
const BLUE_DEEP: [u8; 3] = [37, 99, 235];
const BLUE_PALE: [u8; 3] = [219, 234, 254];
const TEAL_DEEP: [u8; 3] = [13, 148, 136];
const TEAL_PALE: [u8; 3] = [204, 251, 241];

/// Quantized lerp: twelve bands make the gauge level sets visible.
fn shade(deep: [u8; 3], pale: [u8; 3], t: f64) -> [u8; 3] {
    let t = ((t.clamp(0.0, 1.0) * 12.0).floor() / 12.0).clamp(0.0, 1.0);
    let mix = |d: u8, p: u8| (f64::from(d) + t * (f64::from(p) - f64::from(d))).round() as u8;
    [mix(deep[0], pale[0]), mix(deep[1], pale[1]), mix(deep[2], pale[2])]
}

fn penta_pixel(pt: PentaPoint, tol: f64) -> [u8; 3] {
    let Ok(class) = penta_classify(pt, tol) else { return EXTERIOR };
    match class.verdict {
        PentaVerdict::Interior => {
            shade(BLUE_DEEP, BLUE_PALE, gauge_of(pt).unwrap_or(0.0))
        }
        PentaVerdict::SmoothBoundary => EDGE,
        PentaVerdict::LeviFlatBoundary => FLAT,
        PentaVerdict::OverShilov => SHILOV,
        PentaVerdict::Exterior => EXTERIOR,
    }
}

fn base_pixel(pt: G2Point, tol: f64, royal_band: f64) -> [u8; 3] {
    let Ok(class) = g2_classify(pt, tol) else { return EXTERIOR };
    if class.verdict != G2Verdict::Exterior
        && (pt.s * pt.s - 4.0 * pt.p).norm() < royal_band
    {
        return ROYAL;
    }
    match class.verdict {
        G2Verdict::Interior => {
            let roots = solve_quadratic_roots(pt.s, pt.p);
            let spectral = roots.first.norm().max(roots.second.norm());
            shade(TEAL_DEEP, TEAL_PALE, spectral)
        }
        G2Verdict::Boundary => EDGE,
        G2Verdict::ShilovBoundary => SHILOV,
        G2Verdict::RoyalBoundary => ROYAL,
        G2Verdict::Exterior => EXTERIOR,
    }
}

/// Rasterize a slice into `size * size` RGBA pixels (row-major, top row
/// first). Modes:
///
/// - "pentagon": real (a, p) slice of the full domain over fixed s = c;
///   x is a in [-1.15, 1.15], y is p in [1.15, -1.15].
/// - "fiber": the complex a-fibre over the base point (s, p) = (c, d);
///   x, y are Re a, Im a in [-1.15, 1.15].
/// - "base": real (s, p) slice of the base; x is s in [-2.3, 2.3], y is p
///   in [1.15, -1.15]; points near s^2 = 4p are highlighted.
///
/// Interiors are shaded by the scaling gauge (pentagon, fiber) or by the
/// larger root modulus (base), in twelve bands. Unknown modes return an
/// empty buffer.
#[wasm_bindgen]
pub fn render_slice(
    mode: &str,
    c_re: f64,
    c_im: f64,
    d_re: f64,
    d_im: f64,
    size: u32,
    tol: f64,
) -> Vec<u8> {
    use num_complex::Complex64;
    let n = size as usize;
    if n == 0 {
        return Vec::new();
    }
    let c = Complex64::new(c_re, c_im);
    let d = Complex64::new(d_re, d_im);
    let pixel: Box<dyn Fn(f64, f64) -> [u8; 3]> = match mode {
        "pentagon" => Box::new(move |x, y| {
            let (a, p) = (2.3 * x - 1.15, 1.15 - 2.3 * y);
            penta_pixel(PentaPoint::new(a.into(), c, p.into()), tol)
        }),
        "fiber" => Box::new(move |x, y| {
            let a = Complex64::new(2.3 * x - 1.15, 1.15 - 2.3 * y);
            penta_pixel(PentaPoint::new(a, c, d), tol)
        }),
        "base" => {
            let royal_band = 16.0 / f64::from(size);
            Box::new(move |x, y| {
                let (s, p) = (4.6 * x - 2.3, 1.15 - 2.3 * y);
                base_pixel(G2Point::new(s.into(), p.into()), tol, royal_band)
            })
        }
        _ => return Vec::new(),
    };

    let mut buf = vec![0u8; n * n * 4];
    for row in 0..n {
        let y = (row as f64 + 0.5) / n as f64;
        for col in 0..n {
            let x = (col as f64 + 0.5) / n as f64;
            let rgb = pixel(x, y);
            let at = (row * n + col) * 4;
            buf[at..at + 3].copy_from_slice(&rgb);
            buf[at + 3] = 255;
        }
    }
    buf
}

//! Text input: complex literals, points, and map parameter strings.
//!
//! The literal grammar is `re`, `imi`, or `re+imi` with optional signs and
//! ordinary float syntax (exponents allowed), e.g. `-0.5+0.25i`, `1e-3i`,
//! `2`. Points are comma-separated literals. Every error carries the byte
//! position of the offending token within the original input.

use num_complex::Complex64;

use crate::aut::PentaAutomorphism;
use crate::blaschke::BlaschkeProduct;
use crate::error::{Error, Result};
use crate::point::{G2Point, PentaPoint};

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { position, message: message.into() })
}

fn parse_real_part(term: &str, at: usize) -> Result<f64> {
    match term.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(_) => err(at, "non-finite value"),
        Err(_) => err(at, format!("expected a number, found '{term}'")),
    }
}

fn parse_imag_part(term: &str, at: usize) -> Result<f64> {
    let coeff = &term[..term.len() - 1];
    match coeff {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real_part(coeff, at),
    }
}

/// Parse one complex literal occupying the whole of `input`; `offset` is
/// added to reported positions so callers can parse slices of a larger
/// string and still point at the original text.
fn parse_complex_at(input: &str, offset: usize) -> Result<Complex64> {
    let trimmed_start = input.len() - input.trim_start().len();
    let body = input.trim();
    let at = offset + trimmed_start;
    if body.is_empty() {
        return err(at, "empty complex literal");
    }

    // A sign is a term separator unless it starts the literal or belongs to
    // a float exponent.
    let bytes = body.as_bytes();
    let mut separators = Vec::new();
    for (k, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && k > 0 && !matches!(bytes[k - 1], b'e' | b'E') {
            separators.push(k);
        }
    }

    let (real_term, imag_term) = match separators.len() {
        0 => {
            if body.ends_with('i') {
                (None, Some((body, at)))
            } else {
                (Some((body, at)), None)
            }
        }
        1 => {
            let k = separators[0];
            (Some((&body[..k], at)), Some((&body[k..], at + k)))
        }
        _ => return err(at + separators[1], "too many terms in complex literal"),
    };

    if let Some((term, pos)) = real_term {
        if term.ends_with('i') && imag_term.is_some() {
            return err(pos, "imaginary part must come last");
        }
    }
    if let Some((term, pos)) = imag_term {
        if !term.ends_with('i') {
            return err(pos, "expected imaginary part ending in 'i'");
        }
    }

    let re = match real_term {
        Some((term, pos)) => parse_real_part(term, pos)?,
        None => 0.0,
    };
    let im = match imag_term {
        Some((term, pos)) => parse_imag_part(term, pos)?,
        None => 0.0,
    };
    Ok(Complex64::new(re, im))
}

pub fn parse_complex(input: &str) -> Result<Complex64> {
    parse_complex_at(input, 0)
}

fn split_components(input: &str) -> Vec<(&str, usize)> {
    let mut parts = Vec::new();
    let mut start = 0;
    for (k, ch) in input.char_indices() {
        if ch == ',' {
            parts.push((&input[start..k], start));
            start = k + 1;
        }
    }
    parts.push((&input[start..], start));
    parts
}

/// Parse `a,s,p` into a full-domain point.
pub fn parse_point3(input: &str) -> Result<PentaPoint> {
    let parts = split_components(input);
    if parts.len() != 3 {
        return err(input.len(), format!("expected 3 comma-separated components, found {}", parts.len()));
    }
    let a = parse_complex_at(parts[0].0, parts[0].1)?;
    let s = parse_complex_at(parts[1].0, parts[1].1)?;
    let p = parse_complex_at(parts[2].0, parts[2].1)?;
    Ok(PentaPoint::new(a, s, p))
}

/// Parse `s,p` into a base point.
pub fn parse_point2(input: &str) -> Result<G2Point> {
    let parts = split_components(input);
    if parts.len() != 2 {
        return err(input.len(), format!("expected 2 comma-separated components, found {}", parts.len()));
    }
    let s = parse_complex_at(parts[0].0, parts[0].1)?;
    let p = parse_complex_at(parts[1].0, parts[1].1)?;
    Ok(G2Point::new(s, p))
}

/// Parse automorphism parameters of the form
/// `omega=-0.8+0.6i; eta=0.6+0.8i; alpha=0.3-0.2i`.
///
/// All three keys are required, each exactly once; separator is ';'
/// and whitespace around keys and values is ignored.
pub fn parse_automorphism(input: &str) -> Result<PentaAutomorphism> {
    let mut omega = None;
    let mut eta = None;
    let mut alpha = None;
    let mut cursor = 0;
    for chunk in input.split(';') {
        let chunk_at = cursor;
        cursor += chunk.len() + 1;
        if chunk.trim().is_empty() {
            continue;
        }
        let eq = match chunk.find('=') {
            Some(k) => k,
            None => return err(chunk_at, "expected 'key=value'"),
        };
        let key = chunk[..eq].trim();
        let value_at = chunk_at + eq + 1;
        let value = parse_complex_at(&chunk[eq + 1..], value_at)?;
        let slot = match key {
            "omega" => &mut omega,
            "eta" => &mut eta,
            "alpha" => &mut alpha,
            _ => return err(chunk_at, format!("unknown parameter '{key}'")),
        };
        if slot.replace(value).is_some() {
            return err(chunk_at, format!("duplicate parameter '{key}'"));
        }
    }
    let missing = |name| err(input.len(), format!("missing parameter '{name}'"));
    let Some(omega) = omega else { return missing("omega") };
    let Some(eta) = eta else { return missing("eta") };
    let Some(alpha) = alpha else { return missing("alpha") };
    PentaAutomorphism::from_parameters(omega, eta, alpha)
}

/// Parse a Blaschke product of the form `eta=0.6+0.8i; zeros=[0.5, -0.2i]`.
///
/// Both keys are required, each exactly once. An empty zero list `[]`
/// yields the rotation constructor; a non-empty one the factored product.
pub fn parse_blaschke(input: &str) -> Result<BlaschkeProduct> {
    let mut eta = None;
    let mut zeros: Option<Vec<Complex64>> = None;
    let mut cursor = 0;
    for chunk in input.split(';') {
        let chunk_at = cursor;
        cursor += chunk.len() + 1;
        if chunk.trim().is_empty() {
            continue;
        }
        let eq = match chunk.find('=') {
            Some(k) => k,
            None => return err(chunk_at, "expected 'key=value'"),
        };
        let key = chunk[..eq].trim();
        let value_at = chunk_at + eq + 1;
        let value = &chunk[eq + 1..];
        match key {
            "eta" => {
                let parsed = parse_complex_at(value, value_at)?;
                if eta.replace(parsed).is_some() {
                    return err(chunk_at, "duplicate parameter 'eta'");
                }
            }
            "zeros" => {
                let parsed = parse_zero_list(value, value_at)?;
                if zeros.replace(parsed).is_some() {
                    return err(chunk_at, "duplicate parameter 'zeros'");
                }
            }
            _ => return err(chunk_at, format!("unknown parameter '{key}'")),
        }
    }
    let Some(eta) = eta else { return err(input.len(), "missing parameter 'eta'") };
    let Some(zeros) = zeros else { return err(input.len(), "missing parameter 'zeros'") };
    if zeros.is_empty() {
        BlaschkeProduct::rotation(eta)
    } else {
        BlaschkeProduct::new(eta, zeros)
    }
}

/// Parse `[z1, z2, ...]`; `[]` is the empty list.
fn parse_zero_list(input: &str, offset: usize) -> Result<Vec<Complex64>> {
    let trimmed_start = input.len() - input.trim_start().len();
    let body = input.trim();
    let at = offset + trimmed_start;
    let Some(inner) = body.strip_prefix('[').and_then(|rest| rest.strip_suffix(']')) else {
        return err(at, "expected a bracketed list '[...]'");
    };
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let inner_at = at + 1;
    split_components(inner)
        .into_iter()
        .map(|(term, term_at)| parse_complex_at(term, inner_at + term_at))
        .collect()
}

//! Rendering polynomials and integers as text, LaTeX, and JSON.
//!
//! All three formats list terms in the canonical order the polynomial type
//! iterates in, so a rendered string is a stable fingerprint of its value.
//! The JSON form is compact (no whitespace) and round-trips byte-identically
//! through a parse and re-serialization.

use bellkit::{BigInt, Polynomial};
use num_traits::{One, Signed};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::OutputFormat;

pub fn polynomial(format: OutputFormat, n: u32, k: u32, p: &Polynomial<BigInt>) -> String {
    match format {
        OutputFormat::Text => p.to_string(),
        OutputFormat::Latex => latex(p),
        OutputFormat::Json => json(n, k, p),
    }
}

pub fn integer(format: OutputFormat, n: u32, k: u32, value: &BigInt) -> String {
    match format {
        OutputFormat::Text | OutputFormat::Latex => value.to_string(),
        OutputFormat::Json => {
            let mut root = Map::new();
            root.insert("n".into(), Value::from(n));
            root.insert("k".into(), Value::from(k));
            root.insert("value".into(), Value::String(value.to_string()));
            Value::Object(root).to_string()
        }
    }
}

/// Hex SHA-256 of the canonical text form, used by `bench` to cross-check
/// algorithms without storing whole polynomials.
pub fn digest(p: &Polynomial<BigInt>) -> String {
    let mut hasher = Sha256::new();
    hasher.update(p.to_string().as_bytes());
    hex::encode(hasher.finalize())
}

/// Typeset like `378 x_{1}^{5} x_{2}^{2} + 84 x_{1}^{6} x_{3}`.
fn latex(p: &Polynomial<BigInt>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (monomial, coeff) in p.terms() {
        if first {
            if coeff.is_negative() {
                out.push('-');
            }
            first = false;
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = coeff.abs();
        if monomial.is_one() {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push(' ');
        }
        let factors: Vec<String> = monomial
            .iter()
            .map(|(var, exp)| {
                if exp == 1 {
                    format!("x_{{{var}}}")
                } else {
                    format!("x_{{{var}}}^{{{exp}}}")
                }
            })
            .collect();
        out.push_str(&factors.join(" "));
    }
    out
}

/// Compact JSON: `{"n":4,"k":2,"terms":[{"coeff":"3","exps":{"2":2}},...]}`.
///
/// Coefficients are decimal strings so arbitrarily large values survive any
/// JSON parser; exponent maps key variable index to exponent, ascending.
fn json(n: u32, k: u32, p: &Polynomial<BigInt>) -> String {
    let mut root = Map::new();
    root.insert("n".into(), Value::from(n));
    root.insert("k".into(), Value::from(k));
    let terms: Vec<Value> = p
        .terms()
        .map(|(monomial, coeff)| {
            let mut term = Map::new();
            term.insert("coeff".into(), Value::String(coeff.to_string()));
            let mut exps = Map::new();
            for (var, exp) in monomial.iter() {
                exps.insert(var.to_string(), Value::from(exp));
            }
            term.insert("exps".into(), Value::Object(exps));
            Value::Object(term)
        })
        .collect();
    root.insert("terms".into(), Value::Array(terms));
    Value::Object(root).to_string()
}

//! Text output: exact rationals as `"p/q"` strings in JSON, decimals with 12
//! significant digits in CSV. Polynomials are always written in the monomial
//! basis, coefficient of `x^j` at position `j`.

use serde::Serializer;
use serde_json::{json, Value};

use crate::eigen::{EigenPair, Spectrum};
use crate::exact::rational_to_f64;
use crate::operators::OperatorMatrix;
use crate::{Rational, RationalPolynomial};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `"p/q"` with `q > 0`, also for integers.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_string))
}

/// C's `%.12g`: shortest of fixed and scientific notation, trailing zeros removed.
pub fn format_float(x: f64) -> String {
    format_significant(x, SIGNIFICANT_DIGITS)
}

pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let p = digits.max(1);
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn rational_decimal(r: &Rational) -> String {
    format_float(rational_to_f64(r))
}

fn coefficients_json(p: &RationalPolynomial, len: usize) -> Value {
    Value::from(p.padded(len).iter().map(rational_string).collect::<Vec<_>>())
}

pub fn polynomial_json(p: &RationalPolynomial) -> Value {
    let len = p.degree().map_or(1, |d| d + 1);
    json!({ "basis": "monomial", "coefficients": coefficients_json(p, len) })
}

pub fn operator_json(op: &OperatorMatrix) -> Value {
    let size = op.n() + 1;
    let columns: Vec<Value> = (0..size).map(|j| coefficients_json(&op.image(j), size)).collect();
    json!({
        "operator": op.kind().name(),
        "n": op.n(),
        "basis": "monomial",
        "columns": columns,
    })
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    json!({
        "operator": s.kind.name(),
        "n": s.n,
        "eigenvalues": s.values.iter().map(rational_string).collect::<Vec<_>>(),
    })
}

pub fn eigenpair_json(label: &str, n: usize, pair: &EigenPair) -> Value {
    json!({
        "operator": label,
        "n": n,
        "k": pair.k,
        "basis": "monomial",
        "eigenvalue": rational_string(&pair.eigenvalue),
        "eigenpolynomial": coefficients_json(&pair.eigenpolynomial, pair.k + 1),
    })
}

/// Header line shared by all CSV tables.
pub fn csv_preamble(operator: &str, n: usize) -> String {
    format!("# operator={operator},n={n},basis=monomial\n")
}

/// One row per polynomial: `label,c_0,...,c_{len-1}`.
pub fn polynomials_csv(operator: &str, n: usize, rows: &[(String, RationalPolynomial)]) -> String {
    let len = rows
        .iter()
        .filter_map(|(_, p)| p.degree())
        .max()
        .map_or(1, |d| d + 1);
    let mut out = csv_preamble(operator, n);
    out.push_str("label");
    for j in 0..len {
        out.push_str(&format!(",e{j}"));
    }
    out.push('\n');
    for (label, p) in rows {
        out.push_str(label);
        for c in p.padded(len) {
            out.push(',');
            out.push_str(&rational_decimal(&c));
        }
        out.push('\n');
    }
    out
}

pub fn operator_csv(op: &OperatorMatrix) -> String {
    let rows: Vec<_> = (0..=op.n()).map(|j| (format!("e{j}"), op.image(j))).collect();
    polynomials_csv(op.kind().name(), op.n(), &rows)
}

pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = csv_preamble(s.kind.name(), s.n);
    out.push_str("k,eigenvalue\n");
    for (k, v) in s.values.iter().enumerate() {
        out.push_str(&format!("{k},{}\n", rational_decimal(v)));
    }
    out
}

/// Numeric table with a header row; every value printed with [`format_float`].
pub fn table_csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format_float(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

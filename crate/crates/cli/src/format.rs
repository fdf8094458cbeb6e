//! Serialization of polynomials and the three output formats.
//!
//! Polynomials serialize as arrays of monomials with coefficients written as
//! decimal strings, so big integers survive any JSON reader:
//!
//! * `QPoly`: `[[exponent, "coeff"], ...]`
//! * `CharPoly`: `[[z2, degree, "coeff"], ...]` where `z2` is twice the
//!   sl2 weight
//! * `RatPoly`: `[[exponent, "num/den"], ...]`
//!
//! Monomials appear in increasing order of their keys.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use fusionlab_core::{CharPoly, QPoly, RatPoly, Rational};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn qpoly_json(p: &QPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn charpoly_json(p: &CharPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|((z2, d), c)| json!([z2, d, c.to_string()]))
            .collect(),
    )
}

pub fn ratpoly_json(p: &RatPoly) -> Value {
    Value::Array(p.terms().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn rational_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn rationals_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &[Vec<Rational>]) -> Value {
    Value::Array(m.iter().map(|row| rationals_json(row)).collect())
}

fn int_at(v: &Value, what: &str) -> Result<i64, String> {
    v.as_i64()
        .ok_or_else(|| format!("{what} must be an integer, got {v}"))
}

fn bigint_at(v: &Value) -> Result<BigInt, String> {
    let s = v
        .as_str()
        .ok_or_else(|| format!("coefficient must be a string, got {v}"))?;
    BigInt::from_str(s).map_err(|_| format!("bad coefficient '{s}'"))
}

fn monomials(v: &Value, width: usize) -> Result<Vec<&[Value]>, String> {
    let terms = v.as_array().ok_or("polynomial must be a JSON array")?;
    terms
        .iter()
        .map(|t| match t.as_array() {
            Some(parts) if parts.len() == width => Ok(parts.as_slice()),
            _ => Err(format!(
                "monomial must be an array of {width} entries, got {t}"
            )),
        })
        .collect()
}

pub fn qpoly_from_json(v: &Value) -> Result<QPoly, String> {
    let mut terms = Vec::new();
    for t in monomials(v, 2)? {
        terms.push((int_at(&t[0], "exponent")?, bigint_at(&t[1])?));
    }
    Ok(QPoly::from_terms(terms))
}

pub fn charpoly_from_json(v: &Value) -> Result<CharPoly, String> {
    let mut terms = Vec::new();
    for t in monomials(v, 3)? {
        let key = (int_at(&t[0], "z2")?, int_at(&t[1], "degree")?);
        terms.push((key, bigint_at(&t[2])?));
    }
    Ok(CharPoly::from_terms(terms))
}

/// Renders a `z2` value as the weight it stands for, `3/2` for `z2 = 3`.
pub fn half(z2: i64) -> String {
    if z2 % 2 == 0 {
        (z2 / 2).to_string()
    } else {
        format!("{z2}/2")
    }
}

/// What a command produced, already rendered for every format.
pub struct Report {
    pub json: Value,
    /// Header first.
    pub csv: Vec<Vec<String>>,
    pub text: String,
    /// False when a verification inside the command failed.
    pub passed: bool,
    /// Diagnostics for stderr.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(json: Value, csv: Vec<Vec<String>>, text: String) -> Self {
        Report {
            json,
            csv,
            text,
            passed: true,
            notes: Vec::new(),
        }
    }

    pub fn poly(p: &QPoly) -> Self {
        let mut csv = vec![row(["exponent", "coefficient"])];
        csv.extend(p.terms().map(|(e, c)| vec![e.to_string(), c.to_string()]));
        Report::new(qpoly_json(p), csv, format!("{p}\n"))
    }

    pub fn char(p: &CharPoly) -> Self {
        let mut csv = vec![row(["z2", "degree", "coefficient"])];
        csv.extend(
            p.terms()
                .map(|((z2, d), c)| vec![z2.to_string(), d.to_string(), c.to_string()]),
        );
        let mut text = String::new();
        if p.is_zero() {
            text.push_str("0\n");
        }
        for z2 in p.z2_values() {
            let _ = writeln!(text, "z^{}: {}", half(z2), p.column(z2));
        }
        Report::new(charpoly_json(p), csv, text)
    }

    /// A flat list of named values. Nested arrays are spelled out as
    /// `name[i]` in text and CSV, with 1-based indices.
    pub fn record(fields: Vec<(&str, Value)>) -> Self {
        let mut flat = Vec::new();
        let mut obj = serde_json::Map::new();
        for (k, v) in fields {
            flatten(k, &v, &mut flat);
            obj.insert(k.to_string(), v);
        }
        let mut csv = vec![row(["name", "value"])];
        let width = flat.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut text = String::new();
        for (k, v) in flat {
            let _ = writeln!(text, "{k:width$}  {v}");
            csv.push(vec![k, v]);
        }
        Report::new(Value::Object(obj), csv, text)
    }

    /// Rows of scalar cells. `json` carries the structured form.
    pub fn table(
        json: Value,
        header: Vec<String>,
        rows: Vec<Vec<String>>,
        preamble: String,
    ) -> Self {
        let mut widths: Vec<usize> = header.iter().map(String::len).collect();
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.len());
            }
        }
        let mut text = preamble;
        for r in std::iter::once(&header).chain(&rows) {
            let line: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            let _ = writeln!(text, "{}", line.join("  ").trim_end());
        }
        let mut csv = vec![header];
        csv.extend(rows);
        Report::new(json, csv, text)
    }

    pub fn note(mut self, msg: impl Into<String>) -> Self {
        self.notes.push(msg.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in &self.csv {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 cells")
            }
        }
    }
}

pub fn row<const N: usize>(cells: [&str; N]) -> Vec<String> {
    cells.iter().map(|c| c.to_string()).collect()
}

pub fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(key: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&format!("{key}[{}]", i + 1), item, out);
            }
        }
        Value::Object(map) => {
            for (k, item) in map {
                flatten(&format!("{key}.{k}"), item, out);
            }
        }
        other => out.push((key.to_string(), scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qpoly_round_trip() {
        let p = QPoly::from_terms([(-2, -3), (0, 1), (40, 7)]);
        let big = QPoly::monomial(5, BigInt::from(10).pow(40));
        for p in [p, big, QPoly::zero()] {
            assert_eq!(qpoly_from_json(&qpoly_json(&p)).unwrap(), p);
        }
    }

    #[test]
    fn charpoly_round_trip() {
        let p = CharPoly::from_terms([((-3, 1), 2), ((4, 0), -1)]);
        assert_eq!(charpoly_from_json(&charpoly_json(&p)).unwrap(), p);
    }

    #[test]
    fn malformed_polys_are_rejected() {
        for bad in [
            json!(3),
            json!([[1]]),
            json!([[1, 2]]),
            json!([[1.5, "2"]]),
            json!([[1, "x"]]),
        ] {
            assert!(qpoly_from_json(&bad).is_err(), "{bad}");
        }
        assert!(charpoly_from_json(&json!([[0, 1]])).is_err());
    }

    #[test]
    fn records_flatten_arrays() {
        let r = Report::record(vec![("mean", json!(["1/2", "3"])), ("ok", json!(true))]);
        assert_eq!(r.text, "mean[1]  1/2\nmean[2]  3\nok       true\n");
        assert_eq!(
            r.render(Format::Csv),
            "name,value\nmean[1],1/2\nmean[2],3\nok,true\n"
        );
        assert_eq!(
            r.render(Format::Json),
            "{\"mean\":[\"1/2\",\"3\"],\"ok\":true}\n"
        );
    }

    #[test]
    fn half_weights() {
        assert_eq!(half(4), "2");
        assert_eq!(half(-3), "-3/2");
    }
}

//! Serialization of invariants: plain text, JSON, CSV and LaTeX.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, LaurentPoly, Monomial, Rational, Var};
use crate::error::{Error, Result};
use crate::invariants::{InvariantResult, Kind};
use crate::moduli::{Group, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTerm {
    exp: Vec<i32>,
    num: String,
    den: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonResult {
    invariant: String,
    group: Group,
    side: Option<Side>,
    genus: u32,
    variables: Vec<Var>,
    terms: Vec<JsonTerm>,
}

pub fn render(r: &InvariantResult, format: Format) -> String {
    match format {
        Format::Text => r.poly.to_string(),
        Format::Json => to_json(r),
        Format::Csv => to_csv(&r.poly),
        Format::Latex => to_latex(&r.poly),
    }
}

pub fn to_json(r: &InvariantResult) -> String {
    let variables = r.poly.variables();
    let terms = r
        .poly
        .terms()
        .iter()
        .map(|(m, c)| JsonTerm {
            exp: variables.iter().map(|&v| m.exp(v)).collect(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect();
    let doc = JsonResult {
        invariant: r.kind.name().to_string(),
        group: r.group,
        side: r.side,
        genus: r.genus,
        variables,
        terms,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<InvariantResult> {
    let doc: JsonResult = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let kind: Kind = doc.invariant.parse()?;
    let mut seen = [false; 4];
    for v in &doc.variables {
        if std::mem::replace(&mut seen[v.index()], true) {
            return Err(Error::Parse(format!("variable {v} listed twice")));
        }
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.exp.len() != doc.variables.len() {
            return Err(Error::Parse(format!(
                "exponent vector {:?} does not match variables",
                t.exp
            )));
        }
        let mut e = [0; 4];
        for (v, x) in doc.variables.iter().zip(&t.exp) {
            e[v.index()] = *x;
        }
        let c = parse_rational(&format!("{}/{}", t.num, t.den))?;
        terms.push((Monomial(e), c));
    }
    Ok(InvariantResult {
        kind,
        group: doc.group,
        side: doc.side,
        genus: doc.genus,
        poly: LaurentPoly::from_terms(terms)?,
        torsion: doc.group.torsion(doc.genus),
    })
}

/// One row per term: exponents, then numerator and denominator.
pub fn to_csv(p: &LaurentPoly) -> String {
    let vars = p.variables();
    let mut out = String::new();
    for v in &vars {
        let _ = write!(out, "{v},");
    }
    out.push_str("num,den\n");
    for (m, c) in p.terms() {
        for &v in &vars {
            let _ = write!(out, "{},", m.exp(v));
        }
        let _ = writeln!(out, "{},{}", c.numer(), c.denom());
    }
    out
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => s.push(v.symbol()),
            e => {
                let _ = write!(s, "{v}^{{{e}}}");
            }
        }
    }
    s
}

fn latex_magnitude(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn to_latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = latex_monomial(m);
        if mono.is_empty() {
            out.push_str(&latex_magnitude(c));
        } else {
            if !c.abs().is_one() {
                out.push_str(&latex_magnitude(c));
            }
            out.push_str(&mono);
        }
    }
    out
}

//! Line-oriented algebra files.
//!
//! ```text
//! # quadratic algebra with weights
//! field Q
//! vars x y z
//! weights 1 4 2
//! rel y*x = x*y + x*z + z^2
//! rel z*y = y*z - z^2
//! ```
//!
//! Pairs without a `rel` line commute.

use crate::coeff::Field;
use crate::engine::{Element, Monomial, Presentation, PresentationBuilder, Relation};
use crate::error::{Error, Result};

fn at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Shifts an expression error to its position in the file.
fn relocate(e: Error, line: usize, offset: usize) -> Error {
    match e {
        Error::Parse { column, message, .. } => at(line, column + offset, message),
        other => other,
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub fn parse_algebra_file(text: &str) -> Result<Presentation> {
    let mut field: Option<Field> = None;
    let mut builder: Option<PresentationBuilder> = None;
    let mut weights_seen = false;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed.trim_end(), ""));
        let rest_col = indent + keyword.len() + 2 + (rest.len() - rest.trim_start().len());
        let rest = rest.trim();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(at(line, indent + 1, "duplicate `field` line"));
                }
                field = Some(rest.parse().map_err(|e: String| at(line, rest_col, e))?);
            }
            "vars" => {
                let f = field.ok_or_else(|| at(line, indent + 1, "`field` must come before `vars`"))?;
                if builder.is_some() {
                    return Err(at(line, indent + 1, "duplicate `vars` line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() {
                    return Err(at(line, rest_col, "expected at least one variable"));
                }
                for (a, name) in names.iter().enumerate() {
                    if !is_name(name) || name == crate::engine::expr::PARAM {
                        return Err(at(line, rest_col, format!("invalid variable name `{name}`")));
                    }
                    if names[..a].contains(name) {
                        return Err(at(line, rest_col, format!("duplicate variable `{name}`")));
                    }
                }
                builder = Some(PresentationBuilder::from_names(f, names));
            }
            "weights" => {
                let b = builder.take().ok_or_else(|| at(line, indent + 1, "`vars` must come before `weights`"))?;
                if weights_seen {
                    return Err(at(line, indent + 1, "duplicate `weights` line"));
                }
                let ws: std::result::Result<Vec<u32>, _> = rest.split_whitespace().map(str::parse).collect();
                let ws = ws.map_err(|_| at(line, rest_col, "weights must be positive integers"))?;
                if ws.len() != b.names().len() {
                    return Err(at(line, rest_col, format!("expected {} weights, got {}", b.names().len(), ws.len())));
                }
                builder = Some(b.weights(&ws));
                weights_seen = true;
            }
            "rel" => {
                let b = builder.as_mut().ok_or_else(|| at(line, indent + 1, "`vars` must come before `rel`"))?;
                b.add_rel(rest).map_err(|e| relocate(e, line, rest_col - 1))?;
            }
            other => return Err(at(line, indent + 1, format!("unknown directive `{other}`"))),
        }
    }
    let b = builder.ok_or_else(|| at(text.lines().count().max(1), 1, "missing `vars` line"))?;
    b.build()
}

fn rhs(p: &Presentation, rel: &Relation) -> Element {
    let n = p.ngens();
    let mut el = Element::monomial(Monomial::from_word(n, &[rel.i, rel.j]), rel.leading.clone());
    for (w, c) in &rel.tail {
        el.add_term(Monomial::from_word(n, w), c.clone());
    }
    el
}

/// Canonical file text for `p`; `parse_algebra_file` inverts it.
pub fn unparse(p: &Presentation) -> String {
    let mut out = format!("field {}\nvars {}\n", p.field(), p.names().join(" "));
    let ws = p.weights();
    if ws.iter().any(|&w| w != 1) {
        let ws: Vec<String> = ws.iter().map(u32::to_string).collect();
        out.push_str(&format!("weights {}\n", ws.join(" ")));
    }
    for rel in p.relations().filter(|r| !r.is_trivial()) {
        out.push_str(&format!("rel {}*{} = {}\n", p.name(rel.j), p.name(rel.i), p.show(&rhs(p, rel))));
    }
    out
}

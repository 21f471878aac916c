//! Text and JSON formats for complexes.
//!
//! The `.facets` format has one facet per line as whitespace-separated labels.
//! `#` starts a comment. An optional `vertices: a b c` line fixes the universe
//! and its order; otherwise the universe is the union of facet labels in order
//! of first appearance.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
}

impl From<&Complex> for ComplexJson {
    fn from(c: &Complex) -> Self {
        ComplexJson {
            vertices: Some(c.universe().names().to_vec()),
            facets: c.facet_labels(),
        }
    }
}

impl ComplexJson {
    pub fn into_complex(self) -> Result<Complex> {
        match self.vertices {
            Some(v) => Complex::new(&v, &self.facets),
            None => Complex::from_facets(&self.facets),
        }
    }
}

pub fn parse_facets(text: &str) -> Result<Complex> {
    let mut header: Option<Vec<String>> = None;
    let mut facets: Vec<Vec<String>> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if header.is_some() {
                return Err(Error::Parse {
                    line: n + 1,
                    msg: "duplicate vertices header".into(),
                });
            }
            header = Some(rest.split_whitespace().map(str::to_string).collect());
            continue;
        }
        facets.push(line.split_whitespace().map(str::to_string).collect());
    }
    match header {
        Some(v) => Complex::new(&v, &facets),
        None => Complex::from_facets(&facets),
    }
}

/// Reads either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<Complex> {
    if text.trim_start().starts_with('{') {
        let j: ComplexJson = serde_json::from_str(text)?;
        j.into_complex()
    } else {
        parse_facets(text)
    }
}

pub fn to_facets_text(c: &Complex) -> String {
    let mut out = format!("vertices: {}\n", c.universe().names().join(" "));
    for f in c.facet_labels() {
        out.push_str(&f.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(c: &Complex) -> String {
    serde_json::to_string(&ComplexJson::from(c)).expect("complex serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_header() {
        let c =
            parse_facets("# example\nvertices: x y z u v\nx y u\nx y z # tail\n\nx z v\n").unwrap();
        assert_eq!(c.universe().names(), &["x", "y", "z", "u", "v"]);
        assert_eq!(c.num_facets(), 3);
    }

    #[test]
    fn infers_universe_order() {
        let c = parse_facets("b a\nc a\n").unwrap();
        assert_eq!(c.universe().names(), &["b", "a", "c"]);
    }

    #[test]
    fn json_mirror() {
        let c = parse_any(r#"{"vertices":["x","y","z"],"facets":[["x","y"],["x","z"]]}"#).unwrap();
        assert_eq!(c.num_facets(), 2);
        let again = parse_any(&to_json(&c)).unwrap();
        assert_eq!(again, c);
        assert_eq!(parse_facets(&to_facets_text(&c)).unwrap(), c);
        let c = parse_any(r#"{"facets":[["a"]]}"#).unwrap();
        assert_eq!(c.universe().names(), &["a"]);
    }

    #[test]
    fn rejects_double_header() {
        assert!(matches!(
            parse_facets("vertices: a\nvertices: b\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}

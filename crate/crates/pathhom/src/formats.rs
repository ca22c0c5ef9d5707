//! JSON input formats: digraphs, operator files, and the coefficient
//! field descriptor.

use std::collections::BTreeMap;

use pathhom_core::{DiffElement, Digraph, Field};
use serde::Deserialize;

use crate::CliError;

/// `{"vertices": ["v0", ...], "edges": [["v0","v1"], ...]}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

/// Parses and validates a digraph document.
pub fn parse_digraph(text: &str) -> Result<Digraph, CliError> {
    let file: DigraphFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("digraph: {e}")))?;
    let mut edges = Vec::with_capacity(file.edges.len());
    for (from, to) in &file.edges {
        let u = lookup(&file.vertices, from)?;
        let v = lookup(&file.vertices, to)?;
        edges.push((u, v));
    }
    Digraph::new(file.vertices, edges).map_err(|e| CliError::Input(e.to_string()))
}

fn lookup(vertices: &[String], label: &str) -> Result<u32, CliError> {
    vertices
        .iter()
        .position(|v| v == label)
        .map(|i| i as u32)
        .ok_or_else(|| CliError::Input(format!("unknown vertex label \"{label}\"")))
}

/// A coefficient literal: a string `"num"` / `"num/den"` or a bare
/// integer.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum CoeffLit {
    Int(i64),
    Str(String),
}

impl CoeffLit {
    fn into_scalar(self, field: Field) -> Result<pathhom_core::K, CliError> {
        match self {
            CoeffLit::Int(n) => Ok(field.from_i64(n)),
            CoeffLit::Str(s) => field
                .parse(&s)
                .map_err(|e| CliError::Input(e.to_string())),
        }
    }
}

/// Operator document. Either explicit wedge terms
/// `{"degree": k, "terms": [{"monomial": ["v0","v1"], "coeff": "3/2"}]}`
/// or the degree-1 weight shorthand
/// `{"degree": 1, "weights": {"v0": "1", ...}}` for the element
/// `sum f(v) d/dv`; vertices missing from the map get weight 0.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffElementFile {
    pub degree: u32,
    #[serde(default)]
    pub terms: Option<Vec<TermFile>>,
    #[serde(default)]
    pub weights: Option<BTreeMap<String, CoeffLit>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub monomial: Vec<String>,
    pub coeff: CoeffLit,
}

/// Parses an operator document against a digraph's vertex labels.
/// Monomials may arrive unsorted; normalization folds the permutation sign
/// and drops repeated-generator terms. Rejected: unknown labels, monomial
/// lengths that do not match the declared degree, and documents carrying
/// both terms and weights.
pub fn parse_diff_element(
    text: &str,
    g: &Digraph,
    field: Field,
) -> Result<DiffElement, CliError> {
    let file: DiffElementFile =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("operator: {e}")))?;
    match (file.terms, file.weights) {
        (Some(_), Some(_)) => Err(CliError::Input(
            "operator document has both terms and weights".into(),
        )),
        (None, Some(weights)) => {
            if file.degree != 1 {
                return Err(CliError::Input(format!(
                    "weight shorthand requires degree 1, found {}",
                    file.degree
                )));
            }
            let mut coeffs = vec![field.zero(); g.vertex_count()];
            for (label, lit) in weights {
                let v = g
                    .vertex_index(&label)
                    .ok_or_else(|| CliError::Input(format!("unknown vertex label \"{label}\"")))?;
                coeffs[v as usize] = lit.into_scalar(field)?;
            }
            Ok(DiffElement::weighted_boundary(field, &coeffs))
        }
        (terms, None) => {
            let mut out = DiffElement::zero(field, file.degree);
            for term in terms.unwrap_or_default() {
                if term.monomial.len() as u32 != file.degree {
                    return Err(CliError::Input(format!(
                        "monomial {:?} has length {}, expected degree {}",
                        term.monomial,
                        term.monomial.len(),
                        file.degree
                    )));
                }
                let mut verts = Vec::with_capacity(term.monomial.len());
                for label in &term.monomial {
                    let v = g.vertex_index(label).ok_or_else(|| {
                        CliError::Input(format!("unknown vertex label \"{label}\""))
                    })?;
                    verts.push(v);
                }
                out.add_term(&verts, term.coeff.into_scalar(field)?);
            }
            Ok(out)
        }
    }
}

/// Parses the field descriptor: `rational` or `gf:P` with P an odd prime.
pub fn parse_field(text: &str) -> Result<Field, CliError> {
    if text == "rational" {
        return Ok(Field::Rational);
    }
    if let Some(p) = text.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::Input(format!("bad field modulus \"{p}\"")))?;
        return Field::gf(p).map_err(|e| CliError::Input(e.to_string()));
    }
    Err(CliError::Input(format!(
        "unknown field \"{text}\" (expected \"rational\" or \"gf:P\")"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph() -> Digraph {
        parse_digraph(
            r#"{"vertices":["v0","v1","v2"],"edges":[["v0","v1"],["v1","v2"]]}"#,
        )
        .unwrap()
    }

    #[test]
    fn digraph_validation_errors() {
        let loops = r#"{"vertices":["v0"],"edges":[["v0","v0"]]}"#;
        let err = parse_digraph(loops).unwrap_err().to_string();
        assert!(err.contains("self-loop edge (\"v0\", \"v0\")"), "{err}");

        let dup = r#"{"vertices":["v0","v1"],"edges":[["v0","v1"],["v0","v1"]]}"#;
        assert!(parse_digraph(dup).is_err());

        let unknown = r#"{"vertices":["v0"],"edges":[["v0","vX"]]}"#;
        let err = parse_digraph(unknown).unwrap_err().to_string();
        assert!(err.contains("unknown vertex label \"vX\""));
    }

    #[test]
    fn monomials_fold_signs_on_load() {
        let g = graph();
        let unsorted = r#"{"degree":2,"terms":[
            {"monomial":["v1","v0"],"coeff":"1"},
            {"monomial":["v0","v1"],"coeff":"2"}
        ]}"#;
        let e = parse_diff_element(unsorted, &g, Field::Rational).unwrap();
        let (m, k) = e.terms().next().unwrap();
        assert_eq!(m.verts(), &[0, 1]);
        assert_eq!(*k, Field::Rational.one());
        // repeated generator normalizes to zero
        let dup = r#"{"degree":2,"terms":[{"monomial":["v1","v1"],"coeff":"5"}]}"#;
        assert!(parse_diff_element(dup, &g, Field::Rational)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn weight_shorthand_expands() {
        let g = graph();
        let text = r#"{"degree":1,"weights":{"v0":"1","v2":3}}"#;
        let e = parse_diff_element(text, &g, Field::Rational).unwrap();
        assert_eq!(e.degree(), 1);
        assert_eq!(e.terms().count(), 2);
        let bad = r#"{"degree":3,"weights":{"v0":"1"}}"#;
        assert!(parse_diff_element(bad, &g, Field::Rational).is_err());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let g = graph();
        let bad = r#"{"degree":2,"terms":[{"monomial":["v0"],"coeff":"1"}]}"#;
        assert!(parse_diff_element(bad, &g, Field::Rational).is_err());
    }

    #[test]
    fn field_descriptors() {
        assert_eq!(parse_field("rational").unwrap(), Field::Rational);
        assert_eq!(parse_field("gf:101").unwrap(), Field::gf(101).unwrap());
        assert!(parse_field("gf:4").is_err());
        assert!(parse_field("gf:2").is_err());
        assert!(parse_field("float").is_err());
    }
}

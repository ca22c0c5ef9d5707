//! Report structures and rendering for the CLI. JSON output is canonical:
//! struct field order is fixed and every collection is ordered, so equal
//! inputs produce byte-identical documents.

use std::fmt::Write as _;

use pathhom_core::{
    DiffElement, Digraph, Field, HomologyResult, InducedMap, Matrix, OmegaComplex, PathChain,
};
use serde::Serialize;

pub fn field_name(field: Field) -> String {
    match field {
        Field::Rational => "rational".into(),
        Field::GfP(p) => format!("gf:{p}"),
    }
}

/// One dumped matrix: sparse entries as `[row, col, coeff]` triples in
/// row-major order.
#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixDump {
    pub fn of(m: &Matrix) -> MatrixDump {
        let mut entries: Vec<(usize, usize, String)> = m
            .entries()
            .map(|(r, c, v)| (r, c, v.to_string()))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        MatrixDump {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BoundaryDump {
    pub degree: u64,
    #[serde(flatten)]
    pub matrix: MatrixDump,
}

#[derive(Debug, Serialize)]
pub struct ChainTerm {
    pub path: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Serialize)]
pub struct GeneratorDump {
    pub degree: u64,
    pub cycles: Vec<Vec<ChainTerm>>,
}

#[derive(Debug, Serialize)]
pub struct HomologyReport {
    pub field: String,
    pub alpha_degree: u32,
    pub t: u32,
    pub p: i64,
    pub q: u32,
    pub shift: i64,
    pub max_n: u64,
    pub path_lens: Vec<i64>,
    pub omega_dims: Vec<usize>,
    pub boundary_ranks: Vec<usize>,
    pub betti: Vec<usize>,
    pub euler: Option<i64>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorDump>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundaries: Option<Vec<BoundaryDump>>,
}

fn chain_terms(g: &Digraph, chain: &PathChain) -> Vec<ChainTerm> {
    chain
        .terms()
        .map(|(path, coeff)| ChainTerm {
            path: path.verts().iter().map(|&v| g.label(v).to_string()).collect(),
            coeff: coeff.to_string(),
        })
        .collect()
}

impl HomologyReport {
    pub fn new(
        g: &Digraph,
        alpha: &DiffElement,
        result: &HomologyResult,
        complex: Option<&OmegaComplex>,
        dump_matrices: bool,
    ) -> HomologyReport {
        let generators = result.degrees.iter().any(|d| d.generators.is_some()).then(|| {
            result
                .degrees
                .iter()
                .enumerate()
                .map(|(n, d)| GeneratorDump {
                    degree: n as u64,
                    cycles: d
                        .generators
                        .as_ref()
                        .map(|gens| gens.iter().map(|c| chain_terms(g, c)).collect())
                        .unwrap_or_default(),
                })
                .collect()
        });
        let boundaries = (dump_matrices && complex.is_some()).then(|| {
            let complex = complex.unwrap();
            (0..=complex.max_n())
                .map(|n| BoundaryDump {
                    degree: n,
                    matrix: MatrixDump::of(&complex.degree(n).boundary_allowed),
                })
                .collect()
        });
        HomologyReport {
            field: field_name(result.field),
            alpha_degree: alpha.degree(),
            t: result.index.t(),
            p: result.index.p(),
            q: result.index.q(),
            shift: result.index.shift(),
            max_n: result.max_n,
            path_lens: result.path_lens.clone(),
            omega_dims: result.omega_dims.clone(),
            boundary_ranks: result.boundary_ranks.clone(),
            betti: result.betti(),
            euler: result.euler,
            truncated: result.truncated,
            generators,
            boundaries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "field: {}   alpha degree: {} (t={})   p: {} (q={}, shift={})",
            self.field, self.alpha_degree, self.t, self.p, self.q, self.shift
        );
        let _ = writeln!(out, "degree  path_len  dim_omega  rank_boundary  betti");
        for n in 0..=self.max_n {
            let i = n as usize;
            let betti = if i < self.betti.len() {
                self.betti[i].to_string()
            } else {
                "-".into()
            };
            let _ = writeln!(
                out,
                "{:<6}  {:<8}  {:<9}  {:<13}  {}",
                n, self.path_lens[i], self.omega_dims[i], self.boundary_ranks[i], betti
            );
        }
        match self.euler {
            Some(e) => {
                let _ = writeln!(out, "euler characteristic: {e}");
            }
            None => {
                let _ = writeln!(out, "euler characteristic: unavailable (truncated)");
            }
        }
        let _ = writeln!(
            out,
            "truncated: {}",
            if self.truncated { "yes" } else { "no" }
        );
        if let Some(gens) = &self.generators {
            for dump in gens {
                let _ = writeln!(out, "generators at degree {}:", dump.degree);
                if dump.cycles.is_empty() {
                    let _ = writeln!(out, "  (none)");
                }
                for cycle in &dump.cycles {
                    let parts: Vec<String> = cycle
                        .iter()
                        .map(|t| format!("{}*[{}]", t.coeff, t.path.join(" ")))
                        .collect();
                    let _ = writeln!(out, "  {}", parts.join(" + "));
                }
            }
        }
        if let Some(bounds) = &self.boundaries {
            for dump in bounds {
                let _ = writeln!(
                    out,
                    "boundary at degree {}: {}x{} {:?}",
                    dump.degree, dump.matrix.rows, dump.matrix.cols, dump.matrix.entries
                );
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct InducedDegreeReport {
    pub degree: u64,
    pub rank: usize,
    pub source_betti: usize,
    pub target_betti: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixDump>,
}

#[derive(Debug, Serialize)]
pub struct InducedReport {
    pub field: String,
    pub alpha_degree: u32,
    pub beta_degree: u32,
    pub max_n: u64,
    pub p_source: i64,
    pub q_source: u32,
    pub shift_source: i64,
    pub p_target: i64,
    pub q_target: u32,
    pub shift_target: i64,
    pub degrees: Vec<InducedDegreeReport>,
    pub truncated: bool,
}

impl InducedReport {
    pub fn new(field: Field, alpha: &DiffElement, map: &InducedMap, max_n: u64) -> InducedReport {
        InducedReport {
            field: field_name(field),
            alpha_degree: alpha.degree(),
            beta_degree: map.beta_degree,
            max_n,
            p_source: map.source.p(),
            q_source: map.source.q(),
            shift_source: map.source.shift(),
            p_target: map.target.p(),
            q_target: map.target.q(),
            shift_target: map.target.shift(),
            degrees: map
                .degrees
                .iter()
                .enumerate()
                .map(|(n, d)| InducedDegreeReport {
                    degree: n as u64,
                    rank: d.rank,
                    source_betti: d.source_betti,
                    target_betti: d.target_betti,
                    matrix: d.matrix.as_ref().map(MatrixDump::of),
                })
                .collect(),
            truncated: map.truncated,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "field: {}   alpha degree: {}   beta degree: {}",
            self.field, self.alpha_degree, self.beta_degree
        );
        let _ = writeln!(
            out,
            "source p: {} (q={}, shift={})   target p: {} (q={}, shift={})",
            self.p_source, self.q_source, self.shift_source, self.p_target, self.q_target,
            self.shift_target
        );
        let _ = writeln!(out, "degree  rank  source_betti  target_betti");
        for d in &self.degrees {
            let _ = writeln!(
                out,
                "{:<6}  {:<4}  {:<12}  {}",
                d.degree, d.rank, d.source_betti, d.target_betti
            );
        }
        let _ = writeln!(
            out,
            "truncated: {}",
            if self.truncated { "yes" } else { "no" }
        );
        out
    }
}

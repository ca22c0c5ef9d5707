//! Seeded randomized verification suites: the algebraic laws the engine is
//! built on, re-checked on random instances. Every suite is deterministic
//! for a fixed seed and prints concrete witnesses on failure.

use pathhom_core::{
    chain_map_matrices, linalg::SparseVec, partial, DiffElement, Digraph, Field, Matrix,
    OmegaComplex, Path, PathChain, Subspace,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 1729;
pub const DEFAULT_TRIALS: u64 = 500;

/// Enumeration cap for randomly built complexes; oversized instances are
/// skipped, not failed.
const SUITE_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub seed: u64,
    pub trials: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

#[derive(Debug)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: u64,
    pub skipped: u64,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(name: &'static str) -> Self {
        SuiteOutcome {
            name,
            trials: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn rng_for(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(tag))
}

fn trial_field(trial: u64) -> Field {
    if trial % 2 == 0 {
        Field::Rational
    } else {
        Field::gf(101).expect("101 is an odd prime")
    }
}

fn random_path(rng: &mut ChaCha8Rng, vcount: u32, len: u64) -> Path {
    Path::new((0..=len).map(|_| rng.gen_range(0..vcount)).collect())
}

fn random_chain(rng: &mut ChaCha8Rng, field: Field, vcount: u32, len: u64) -> PathChain {
    let mut c = PathChain::zero(len as i64);
    for _ in 0..rng.gen_range(1..=3) {
        let coeff = field.from_i64(nonzero_coeff(rng));
        c.add_term(random_path(rng, vcount, len), coeff);
    }
    c
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> i64 {
    let v: i64 = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn random_element(rng: &mut ChaCha8Rng, field: Field, vcount: u32, degree: u32) -> DiffElement {
    if degree == 0 {
        return DiffElement::scalar(field.from_i64(rng.gen_range(-3..=3)));
    }
    let mut e = DiffElement::zero(field, degree);
    let mut verts: Vec<u32> = Vec::with_capacity(degree as usize);
    for _ in 0..(vcount as usize * 2).max(3) {
        verts.clear();
        for _ in 0..degree {
            verts.push(rng.gen_range(0..vcount));
        }
        if rng.gen_bool(0.6) {
            e.add_term(&verts, field.from_i64(nonzero_coeff(rng)));
        }
    }
    e
}

fn random_digraph(rng: &mut ChaCha8Rng, max_v: u32, edge_prob: f64) -> Digraph {
    let vcount = rng.gen_range(1..=max_v);
    let labels: Vec<String> = (0..vcount).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for u in 0..vcount {
        for v in 0..vcount {
            if u != v && rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Digraph::new(labels, edges).expect("random digraph is structurally valid")
}

fn digraph_witness(g: &Digraph) -> String {
    format!("digraph(|V|={}, E={:?})", g.vertex_count(), g.edges())
}

/// Type of the single-generator action, injectable so a deliberately broken
/// operator can demonstrate that the suite catches it.
pub type PartialFn<'a> = &'a dyn Fn(u32, &PathChain) -> PathChain;

/// Generators anticommute: applying two of them in either order differs
/// only by sign, including on paths with repeated vertices.
pub fn anticommutation_suite(cfg: &CheckConfig) -> SuiteOutcome {
    anticommutation_suite_with(cfg, &|v, c| partial(v, c))
}

pub fn anticommutation_suite_with(cfg: &CheckConfig, op: PartialFn<'_>) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("anticommutation");
    let mut rng = rng_for(cfg.seed, 1);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = trial_field(trial);
        let vcount = rng.gen_range(1..=6);
        let len = rng.gen_range(0..=4);
        let c = random_chain(&mut rng, field, vcount, len);
        let u = rng.gen_range(0..vcount);
        let v = rng.gen_range(0..vcount);
        let lhs = op(u, &op(v, &c));
        let rhs = op(v, &op(u, &c));
        if lhs != rhs.scale(&field.from_i64(-1)) {
            out.failures.push(format!(
                "trial {trial}: u=v{u} v=v{v} chain={c} gave {lhs} vs {rhs}"
            ));
        }
    }
    out
}

/// Odd-degree elements square to zero as operators.
pub fn square_zero_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("square-zero");
    let mut rng = rng_for(cfg.seed, 2);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = trial_field(trial);
        let vcount = rng.gen_range(2..=6);
        let degree = if rng.gen_bool(0.5) { 1 } else { 3 };
        let alpha = random_element(&mut rng, field, vcount, degree);
        let len = degree as u64 + rng.gen_range(0..=2);
        let c = random_chain(&mut rng, field, vcount, len);
        let twice = alpha.apply(&alpha.apply(&c));
        if !twice.is_zero() {
            out.failures.push(format!(
                "trial {trial}: alpha={alpha} chain={c} gave nonzero square {twice}"
            ));
        }
    }
    out
}

/// The sign law for the exterior product on homogeneous elements.
pub fn wedge_sign_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("wedge-sign");
    let mut rng = rng_for(cfg.seed, 3);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = trial_field(trial);
        let vcount = rng.gen_range(2..=6);
        let ka = rng.gen_range(0..=3);
        let kb = rng.gen_range(0..=3);
        let a = random_element(&mut rng, field, vcount, ka);
        let b = random_element(&mut rng, field, vcount, kb);
        let lhs = a.wedge(&b);
        let mut rhs = b.wedge(&a);
        if (ka * kb) % 2 == 1 {
            rhs = rhs.scale(&field.from_i64(-1));
        }
        if lhs != rhs {
            out.failures.push(format!(
                "trial {trial}: deg {ka} element {a} and deg {kb} element {b} violate the sign law"
            ));
        }
    }
    out
}

/// Even-degree elements commute with odd-degree ones, both as elements and
/// as composed operators.
pub fn commuting_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("commuting-squares");
    let mut rng = rng_for(cfg.seed, 4);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = trial_field(trial);
        let vcount = rng.gen_range(2..=6);
        let alpha_degree = if rng.gen_bool(0.5) { 1 } else { 3 };
        let beta_degree = if rng.gen_bool(0.7) { 2 } else { 0 };
        let alpha = random_element(&mut rng, field, vcount, alpha_degree);
        let beta = random_element(&mut rng, field, vcount, beta_degree);
        if alpha.wedge(&beta) != beta.wedge(&alpha) {
            out.failures.push(format!(
                "trial {trial}: alpha={alpha} beta={beta} do not commute in the algebra"
            ));
            continue;
        }
        let len = (alpha.degree() + beta.degree()) as u64 + rng.gen_range(0..=1);
        let c = random_chain(&mut rng, field, vcount, len);
        let lhs = beta.apply(&alpha.apply(&c));
        let rhs = alpha.apply(&beta.apply(&c));
        if lhs != rhs {
            out.failures.push(format!(
                "trial {trial}: alpha={alpha} beta={beta} chain={c} gave {lhs} vs {rhs}"
            ));
        }
    }
    out
}

/// Built complexes close under the boundary: every boundary image lies in
/// the next group down, consecutive boundaries compose to zero, and chain
/// maps land inside the destination groups.
pub fn omega_closure_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("omega-closure");
    let mut rng = rng_for(cfg.seed, 5);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = trial_field(trial);
        let vcount = rng.gen_range(2..=6);
        let g = random_digraph(&mut rng, vcount, 0.3);
        let cubic = rng.gen_bool(0.35);
        let (alpha, p, max_n) = if cubic {
            (
                random_element(&mut rng, field, vcount, 3),
                rng.gen_range(0..=2),
                1,
            )
        } else {
            (random_element(&mut rng, field, vcount, 1), 0, 3)
        };
        let complex = match OmegaComplex::build(&g, &alpha, p, max_n, SUITE_CAP) {
            Ok(c) => c,
            Err(pathhom_core::Error::CapExceeded { .. }) => {
                out.skipped += 1;
                continue;
            }
            Err(e) => {
                out.failures.push(format!(
                    "trial {trial}: {} alpha={alpha} p={p}: build failed: {e}",
                    digraph_witness(&g)
                ));
                continue;
            }
        };
        for n in 1..=max_n {
            let deg = complex.degree(n);
            let lower = complex.degree(n - 1);
            for col in 0..deg.boundary_allowed.cols() {
                let column = deg.boundary_allowed.column(col);
                if !lower.omega.contains(&column) {
                    out.failures.push(format!(
                        "trial {trial}: {} alpha={alpha} p={p}: boundary column {col} at \
                         degree {n} escapes the lower group",
                        digraph_witness(&g)
                    ));
                }
            }
            match lower.boundary_allowed.mul(&deg.boundary_omega) {
                Ok(square) if square.is_zero() => {}
                _ => out.failures.push(format!(
                    "trial {trial}: {} alpha={alpha} p={p}: boundary square nonzero at {n}",
                    digraph_witness(&g)
                )),
            }
        }
        if !cubic && trial % 3 == 0 {
            let beta = random_element(&mut rng, field, vcount, 2);
            let dst = match OmegaComplex::build(&g, &alpha, p - 2, max_n, SUITE_CAP) {
                Ok(c) => c,
                Err(_) => {
                    out.skipped += 1;
                    continue;
                }
            };
            match chain_map_matrices(&complex, &dst, &beta) {
                Ok(_) => {}
                // a detected escape is correct behavior: the operator
                // genuinely fails to preserve the allowed subcomplex here
                Err(pathhom_core::Error::ChainMapEscape { .. }) => out.skipped += 1,
                Err(e) => out.failures.push(format!(
                    "trial {trial}: {} alpha={alpha} beta={beta}: chain map failed: {e}",
                    digraph_witness(&g)
                )),
            }
        }
    }
    out
}

/// Rank plus nullity equals the column count; dense and sparse elimination
/// agree; reduction is idempotent; spanning-set canonicalization is stable.
pub fn rank_nullity_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("rank-nullity");
    let mut rng = rng_for(cfg.seed, 6);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let field = match trial % 3 {
            0 => Field::Rational,
            1 => Field::gf(101).expect("odd prime"),
            _ => Field::gf(32003).expect("odd prime"),
        };
        let rows = rng.gen_range(0..=7);
        let cols = rng.gen_range(1..=7);
        let mut m = Matrix::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v: i64 = rng.gen_range(-4..=4);
                m.set(r, c, field.from_i64(v));
            }
        }
        let dense = m.rref_with_dense_limit(usize::MAX);
        let sparse = m.rref_with_dense_limit(0);
        if dense.matrix != sparse.matrix || dense.pivots != sparse.pivots {
            out.failures
                .push(format!("trial {trial}: dense and sparse reduction disagree"));
            continue;
        }
        let again = dense.matrix.rref();
        if again.matrix != dense.matrix {
            out.failures
                .push(format!("trial {trial}: reduction is not idempotent"));
        }
        let ker = m.kernel();
        if dense.rank + ker.dim() != cols {
            out.failures.push(format!(
                "trial {trial}: rank {} + nullity {} != cols {cols}",
                dense.rank,
                ker.dim()
            ));
        }
        for b in ker.basis() {
            if !m.mul_vec(b).is_empty() {
                out.failures
                    .push(format!("trial {trial}: kernel vector not annihilated"));
            }
        }
        if ker.dim() >= 2 {
            // respanning with mixed vectors must canonicalize identically
            let basis = ker.basis();
            let mut mixed: Vec<SparseVec> = basis.to_vec();
            let sum = {
                let mut m0 = Matrix::zero(field, ker.ambient(), 1);
                for (i, v) in basis[0].iter() {
                    m0.set(*i, 0, v.clone());
                }
                for (i, v) in basis[1].iter() {
                    let old = m0.get(*i, 0).cloned().unwrap_or_else(|| field.zero());
                    m0.set(*i, 0, old.add(&v.mul(&field.from_i64(3))));
                }
                m0.column(0)
            };
            mixed[0] = sum;
            let respanned = Subspace::from_spanning(field, ker.ambient(), mixed);
            if respanned != ker {
                out.failures.push(format!(
                    "trial {trial}: canonical form depends on the spanning set"
                ));
            }
        }
    }
    out
}

/// Homology dimensions agree between the rationals and large prime fields.
pub fn field_cross_suite(cfg: &CheckConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::new("field-cross-check");
    let mut rng = rng_for(cfg.seed, 7);
    for trial in 0..cfg.trials {
        out.trials += 1;
        let vcount = rng.gen_range(2..=5);
        let g = random_digraph(&mut rng, vcount, 0.3);
        let weights: Vec<i64> = (0..g.vertex_count()).map(|_| rng.gen_range(-2..=2)).collect();
        let mut betti = Vec::new();
        let mut failed = false;
        for field in [
            Field::Rational,
            Field::gf(101).expect("odd prime"),
            Field::gf(32003).expect("odd prime"),
        ] {
            let ks: Vec<pathhom_core::K> =
                weights.iter().map(|&w| field.from_i64(w)).collect();
            let alpha = DiffElement::weighted_boundary(field, &ks);
            match pathhom_core::homology(&g, &alpha, 0, 3, false, SUITE_CAP) {
                Ok(h) => betti.push(h.betti()),
                Err(pathhom_core::Error::CapExceeded { .. }) => {
                    out.skipped += 1;
                    failed = true;
                    break;
                }
                Err(e) => {
                    out.failures.push(format!(
                        "trial {trial}: {} weights={weights:?}: {e}",
                        digraph_witness(&g)
                    ));
                    failed = true;
                    break;
                }
            }
        }
        if !failed && (betti[0] != betti[1] || betti[0] != betti[2]) {
            out.failures.push(format!(
                "trial {trial}: {} weights={weights:?}: betti {:?} vs {:?} vs {:?}",
                digraph_witness(&g),
                betti[0],
                betti[1],
                betti[2]
            ));
        }
    }
    out
}

/// Runs every suite with the shared configuration.
pub fn run_all(cfg: &CheckConfig) -> Vec<SuiteOutcome> {
    vec![
        anticommutation_suite(cfg),
        square_zero_suite(cfg),
        wedge_sign_suite(cfg),
        commuting_suite(cfg),
        omega_closure_suite(cfg),
        rank_nullity_suite(cfg),
        field_cross_suite(cfg),
    ]
}

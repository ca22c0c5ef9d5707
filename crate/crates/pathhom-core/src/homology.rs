//! Homology of the allowed-path complexes: Betti numbers, representative
//! cycles, Euler characteristics, and the maps induced by even-degree
//! elements.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::chain::PathChain;
use crate::complexes::{chain_map_matrices, DegreeIndex, OmegaComplex};
use crate::diff::DiffElement;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::linalg::{quotient_rank, Matrix, SparseVec, Subspace};
use crate::scalar::Field;

/// Homology of one degree.
#[derive(Debug, Clone)]
pub struct DegreeHomology {
    pub omega_dim: usize,
    /// Rank of the boundary leaving this degree.
    pub boundary_rank: usize,
    pub betti: usize,
    /// Representative cycles over allowed paths, when requested. They are
    /// cycles, reduced and independent modulo the boundary subspace.
    pub generators: Option<Vec<PathChain>>,
}

/// Betti numbers of a built complex. Degrees `0..max_n-1` are reported;
/// the top computed degree only feeds the incoming boundary, so every
/// reported number is exact under the truncation.
#[derive(Debug, Clone)]
pub struct HomologyResult {
    pub field: Field,
    pub index: DegreeIndex,
    pub max_n: u64,
    /// Path length per computed degree `0..=max_n`.
    pub path_lens: Vec<i64>,
    /// Group dimension per computed degree `0..=max_n`.
    pub omega_dims: Vec<usize>,
    /// Boundary rank per computed degree `0..=max_n` (degree 0 is 0).
    pub boundary_ranks: Vec<usize>,
    /// Reported homology, degrees `0..max_n-1`.
    pub degrees: Vec<DegreeHomology>,
    /// Alternating sum of group dimensions; absent when truncated.
    pub euler: Option<i64>,
    pub truncated: bool,
}

impl HomologyResult {
    pub fn betti(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }
}

/// Homology of the complex at parameter `p`, degrees `0..max_n-1`.
pub fn homology(
    g: &Digraph,
    alpha: &DiffElement,
    p: i64,
    max_n: u64,
    want_generators: bool,
    cap: usize,
) -> Result<HomologyResult> {
    if max_n == 0 {
        return Err(Error::Parameter("max_n must be at least 1".to_string()));
    }
    let complex = OmegaComplex::build(g, alpha, p, max_n, cap)?;
    homology_of_complex(&complex, want_generators)
}

/// Homology of an already-built complex.
pub fn homology_of_complex(
    complex: &OmegaComplex,
    want_generators: bool,
) -> Result<HomologyResult> {
    let max_n = complex.max_n();
    let omega_dims = complex.omega_dims();
    let path_lens: Vec<i64> = (0..=max_n).map(|n| complex.degree(n).path_len).collect();
    let boundary_ranks: Vec<usize> = (0..=max_n)
        .map(|n| complex.degree(n).boundary_allowed.rank())
        .collect();
    let mut degrees = Vec::with_capacity(max_n as usize);
    for n in 0..max_n {
        let omega_dim = omega_dims[n as usize];
        let outgoing = boundary_ranks[n as usize];
        let incoming = boundary_ranks[n as usize + 1];
        let betti = omega_dim - outgoing - incoming;
        let generators = if want_generators {
            let z = cycle_space(complex, n);
            let b = boundary_space(complex, n);
            let gens = quotient_generators(&z, &b);
            if gens.len() != betti {
                return Err(Error::Internal(
                    "rank formula disagrees with the cycle/boundary quotient".to_string(),
                ));
            }
            let deg = complex.degree(n);
            Some(
                gens.into_iter()
                    .map(|row| {
                        let mut chain = PathChain::zero(deg.path_len);
                        for (i, coeff) in row {
                            chain.add_term(deg.allowed[i].clone(), coeff);
                        }
                        chain
                    })
                    .collect(),
            )
        } else {
            None
        };
        degrees.push(DegreeHomology {
            omega_dim,
            boundary_rank: outgoing,
            betti,
            generators,
        });
    }
    let euler = euler_characteristic(complex).ok();
    Ok(HomologyResult {
        field: complex.field(),
        index: complex.index(),
        max_n,
        path_lens,
        omega_dims,
        boundary_ranks,
        degrees,
        euler,
        truncated: complex.truncated(),
    })
}

/// Cycles of degree `n` as a canonical subspace in allowed-path
/// coordinates.
pub fn cycle_space(complex: &OmegaComplex, n: u64) -> Subspace {
    let deg = complex.degree(n);
    if deg.boundary_allowed.rows() == 0 {
        return deg.omega.clone();
    }
    let in_group = deg.boundary_allowed.kernel();
    let vectors: Vec<SparseVec> = in_group
        .basis()
        .iter()
        .map(|v| deg.omega.basis_columns().mul_vec(v))
        .collect();
    Subspace::from_spanning(complex.field(), deg.allowed.len(), vectors)
}

/// Boundaries landing in degree `n`, as a canonical subspace in
/// allowed-path coordinates.
pub fn boundary_space(complex: &OmegaComplex, n: u64) -> Subspace {
    let above = complex.degree(n + 1);
    let ambient = complex.degree(n).allowed.len();
    let cols: Vec<SparseVec> = (0..above.boundary_allowed.cols())
        .map(|c| above.boundary_allowed.column(c))
        .collect();
    Subspace::from_spanning(complex.field(), ambient, cols)
}

/// Representatives of the quotient `z / b`: the rows of the cycle basis
/// whose pivots are not pivots of the boundary basis. Such rows are
/// automatically zero at every boundary pivot, so they are reduced modulo
/// the boundaries and independent in the quotient.
fn quotient_generators(z: &Subspace, b: &Subspace) -> Vec<SparseVec> {
    let b_pivots: BTreeSet<usize> = b.pivots().iter().copied().collect();
    z.basis()
        .iter()
        .zip(z.pivots())
        .filter(|(_, pivot)| !b_pivots.contains(pivot))
        .map(|(row, _)| row.clone())
        .collect()
}

/// Alternating sum of the group dimensions. Refuses when the truncation
/// may have cut a nonzero part of the complex, since the sum would then
/// not be an invariant.
pub fn euler_characteristic(complex: &OmegaComplex) -> Result<i64> {
    if complex.truncated() {
        return Err(Error::TruncatedComplex);
    }
    let mut sum = 0i64;
    for n in 0..=complex.max_n() {
        let dim = complex.omega_dim(n) as i64;
        if n % 2 == 0 {
            sum += dim;
        } else {
            sum -= dim;
        }
    }
    Ok(sum)
}

/// Classical path homology: the degree-1 all-ones operator at parameter 0.
pub fn classical_path_homology(
    g: &Digraph,
    field: Field,
    max_n: u64,
    cap: usize,
) -> Result<HomologyResult> {
    let alpha = DiffElement::classical_boundary(field, g.vertex_count());
    homology(g, &alpha, 0, max_n, false, cap)
}

/// One degree of an induced homology map.
#[derive(Debug, Clone)]
pub struct InducedDegree {
    pub rank: usize,
    pub source_betti: usize,
    pub target_betti: usize,
    /// The map over homology generator bases, when requested:
    /// `target_betti` rows by `source_betti` columns.
    pub matrix: Option<Matrix>,
}

/// The homology homomorphism induced by an even-degree element, from the
/// complex at `p` to the one at `p - deg(beta)` degree by degree.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub source: DegreeIndex,
    pub target: DegreeIndex,
    pub beta_degree: u32,
    /// Degrees `0..max_n-1`.
    pub degrees: Vec<InducedDegree>,
    pub truncated: bool,
}

/// Computes the induced map. The destination complex is built at the
/// shifted parameter; when that is negative the low degrees are zero
/// spaces, which realizes the degree alignment of the reindexing.
pub fn induced_map(
    g: &Digraph,
    alpha: &DiffElement,
    p: i64,
    beta: &DiffElement,
    max_n: u64,
    want_matrices: bool,
    cap: usize,
) -> Result<InducedMap> {
    if max_n == 0 {
        return Err(Error::Parameter("max_n must be at least 1".to_string()));
    }
    if beta.degree() % 2 != 0 {
        return Err(Error::Parity {
            role: "beta",
            need_odd: false,
            found_degree: beta.degree(),
        });
    }
    let src = OmegaComplex::build(g, alpha, p, max_n, cap)?;
    let dst = OmegaComplex::build(g, alpha, p - beta.degree() as i64, max_n, cap)?;
    let maps = chain_map_matrices(&src, &dst, beta)?;
    let mut degrees = Vec::with_capacity(max_n as usize);
    for n in 0..max_n {
        let z_src = cycle_space(&src, n);
        let b_dst = boundary_space(&dst, n);
        let src_deg = src.degree(n);
        let images: Vec<SparseVec> = z_src
            .basis()
            .iter()
            .map(|row| {
                let coords = src_deg
                    .omega
                    .coordinates_of(row)
                    .expect("cycles lie in the degree group");
                let sparse: SparseVec = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                maps[n as usize].matrix_allowed.mul_vec(&sparse)
            })
            .collect();
        let rank = quotient_rank(&images, &b_dst)?;
        let b_src = boundary_space(&src, n);
        let z_dst = cycle_space(&dst, n);
        let source_betti = z_src.dim() - b_src.dim();
        let target_betti = z_dst.dim() - b_dst.dim();
        let matrix = if want_matrices {
            Some(generator_matrix(
                &src, &dst, &maps[n as usize].matrix_allowed, n, &z_src, &b_src, &z_dst, &b_dst,
            )?)
        } else {
            None
        };
        degrees.push(InducedDegree {
            rank,
            source_betti,
            target_betti,
            matrix,
        });
    }
    Ok(InducedMap {
        source: src.index(),
        target: dst.index(),
        beta_degree: beta.degree(),
        degrees,
        truncated: src.truncated() || dst.truncated(),
    })
}

/// Expresses the induced map over the canonical homology generator bases.
#[allow(clippy::too_many_arguments)]
fn generator_matrix(
    src: &OmegaComplex,
    dst: &OmegaComplex,
    map_allowed: &Matrix,
    n: u64,
    z_src: &Subspace,
    b_src: &Subspace,
    z_dst: &Subspace,
    b_dst: &Subspace,
) -> Result<Matrix> {
    let field = src.field();
    let src_gens = quotient_generators(z_src, b_src);
    let dst_gens = quotient_generators(z_dst, b_dst);
    // solve against [generators | boundaries]; those columns are
    // independent, so the generator coordinates are unique
    let mut columns: Vec<SparseVec> = dst_gens.clone();
    columns.extend(b_dst.basis().iter().cloned());
    let ambient = z_dst.ambient();
    let mut out = Matrix::zero(field, dst_gens.len(), src_gens.len());
    for (j, gen) in src_gens.iter().enumerate() {
        let coords = src
            .degree(n)
            .omega
            .coordinates_of(gen)
            .expect("generators lie in the degree group");
        let sparse: SparseVec = coords
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let image = map_allowed.mul_vec(&sparse);
        let solution = solve_in_columns(field, ambient, &columns, &image).ok_or_else(|| {
            Error::Internal("induced image is not a cycle class of the target".to_string())
        })?;
        for (i, v) in solution.iter().take(dst_gens.len()).enumerate() {
            out.set(i, j, v.clone());
        }
    }
    let _ = dst;
    Ok(out)
}

/// Solves `sum(x_i * columns_i) = target` by row reduction of the
/// augmented matrix; free variables are set to zero.
fn solve_in_columns(
    field: Field,
    ambient: usize,
    columns: &[SparseVec],
    target: &SparseVec,
) -> Option<Vec<K2>> {
    let mut cols: Vec<SparseVec> = columns.to_vec();
    cols.push(target.clone());
    let m = Matrix::from_columns(field, ambient, cols);
    let r = m.rref();
    let last = columns.len();
    if r.pivots.contains(&last) {
        return None;
    }
    let mut x = alloc::vec![field.zero(); columns.len()];
    for (row, &col) in r.pivots.iter().enumerate() {
        if let Some(v) = r.matrix.get(row, last) {
            x[col] = v.clone();
        }
    }
    Some(x)
}

type K2 = crate::scalar::K;

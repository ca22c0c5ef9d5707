//! Test support: an independent classical path-homology oracle and the
//! shared digraph corpus. The oracle works straight from the signed
//! deletion boundary with its own enumeration and its own dense fraction
//! elimination; it never touches the operator algebra or the engine's
//! linear algebra.

use std::collections::BTreeMap;

use pathhom_core::Digraph;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// The fixed ten-digraph corpus: paths, triangles both ways, the digon,
/// the square, the six-vertex diamond, a 5-cycle, and isolated vertices.
pub fn corpus() -> Vec<(&'static str, Digraph)> {
    vec![
        (
            "single-edge",
            Digraph::new(labels(2), vec![(0, 1)]).unwrap(),
        ),
        (
            "path-3",
            Digraph::new(labels(3), vec![(0, 1), (1, 2)]).unwrap(),
        ),
        (
            "path-4",
            Digraph::new(labels(4), vec![(0, 1), (1, 2), (2, 3)]).unwrap(),
        ),
        (
            "transitive-triangle",
            Digraph::new(labels(3), vec![(0, 1), (0, 2), (1, 2)]).unwrap(),
        ),
        (
            "cycle-3",
            Digraph::new(labels(3), vec![(0, 1), (1, 2), (2, 0)]).unwrap(),
        ),
        (
            "digon",
            Digraph::new(labels(2), vec![(0, 1), (1, 0)]).unwrap(),
        ),
        (
            "square",
            Digraph::new(labels(4), vec![(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap(),
        ),
        ("diamond", diamond()),
        (
            "cycle-5",
            Digraph::new(labels(5), vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        ),
        (
            "two-isolated",
            Digraph::new(labels(2), vec![]).unwrap(),
        ),
    ]
}

pub fn diamond() -> Digraph {
    Digraph::new(
        labels(6),
        vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (5, 3), (5, 4)],
    )
    .unwrap()
}

pub fn tournament4() -> Digraph {
    Digraph::new(
        labels(4),
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    )
    .unwrap()
}

#[derive(Clone, Copy, PartialEq, Debug)]
struct Frac(i128, i128);

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

impl Frac {
    fn new(n: i128, d: i128) -> Frac {
        assert!(d != 0);
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        Frac(s * n / g, s * d / g)
    }
    fn zero() -> Frac {
        Frac(0, 1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
    fn div(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1, self.1 * o.0)
    }
    fn neg(self) -> Frac {
        Frac(-self.0, self.1)
    }
}

fn rank_naive(mut rows: Vec<Vec<Frac>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = Frac::new(1, 1).div(rows[rank][c]);
        for v in rows[rank].iter_mut() {
            *v = v.mul(inv);
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (j, v) in row.iter_mut().enumerate() {
                *v = v.add(f.mul(pivot[j]).neg());
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn kernel_naive(matrix: &[Vec<Frac>], cols: usize) -> Vec<Vec<Frac>> {
    let mut rows = matrix.to_vec();
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for c in 0..cols {
        let Some(found) = (next_row..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(next_row, found);
        let inv = Frac::new(1, 1).div(rows[next_row][c]);
        for v in rows[next_row].iter_mut() {
            *v = v.mul(inv);
        }
        let pivot = rows[next_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next_row || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (j, v) in row.iter_mut().enumerate() {
                *v = v.add(f.mul(pivot[j]).neg());
            }
        }
        pivots.push(c);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Frac::zero(); cols];
        v[free] = Frac::new(1, 1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        out.push(v);
    }
    out
}

fn enumerate_allowed(g: &Digraph, len: u64) -> Vec<Vec<u32>> {
    let mut acc = Vec::new();
    let mut stack = Vec::new();
    fn dfs(g: &Digraph, len: u64, stack: &mut Vec<u32>, acc: &mut Vec<Vec<u32>>) {
        if stack.len() as u64 == len + 1 {
            acc.push(stack.clone());
            return;
        }
        let last = *stack.last().unwrap();
        for &next in g.out_neighbors(last) {
            stack.push(next);
            dfs(g, len, stack, acc);
            stack.pop();
        }
    }
    for start in 0..g.vertex_count() as u32 {
        stack.push(start);
        dfs(g, len, &mut stack, &mut acc);
        stack.pop();
    }
    acc
}

/// Alternating-sum boundary with irregular terms dropped.
fn boundary(path: &[u32]) -> Vec<(Vec<u32>, i128)> {
    let mut out = Vec::new();
    if path.len() <= 1 {
        return out;
    }
    for i in 0..path.len() {
        let mut shorter = path.to_vec();
        shorter.remove(i);
        if shorter.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        out.push((shorter, if i % 2 == 0 { 1 } else { -1 }));
    }
    out
}

struct OracleDegree {
    allowed: Vec<Vec<u32>>,
    /// Group basis vectors over the allowed paths.
    omega: Vec<Vec<Frac>>,
    /// Boundary on the group basis, over the lower allowed basis.
    boundary_on_omega: Vec<Vec<Frac>>, // columns
}

fn oracle_degree(g: &Digraph, len: u64) -> OracleDegree {
    let allowed = enumerate_allowed(g, len);
    if len == 0 {
        let dim = allowed.len();
        let omega = (0..dim)
            .map(|i| {
                let mut v = vec![Frac::zero(); dim];
                v[i] = Frac::new(1, 1);
                v
            })
            .collect();
        return OracleDegree {
            allowed,
            omega,
            boundary_on_omega: Vec::new(),
        };
    }
    let lower_allowed = enumerate_allowed(g, len - 1);
    let lower_index: BTreeMap<Vec<u32>, usize> = lower_allowed
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    // image columns split into allowed rows and everything else
    let mut bad_rows: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let images: Vec<Vec<(Vec<u32>, i128)>> =
        allowed.iter().map(|p| boundary(p)).collect();
    for img in &images {
        for (p, _) in img {
            if !lower_index.contains_key(p) && !bad_rows.contains_key(p) {
                let next = bad_rows.len();
                bad_rows.insert(p.clone(), next);
            }
        }
    }
    let mut blocked = vec![vec![Frac::zero(); allowed.len()]; bad_rows.len()];
    let mut good = vec![vec![Frac::zero(); allowed.len()]; lower_allowed.len()];
    for (col, img) in images.iter().enumerate() {
        for (p, sign) in img {
            let val = Frac::new(*sign, 1);
            match lower_index.get(p) {
                Some(&r) => good[r][col] = good[r][col].add(val),
                None => {
                    let r = bad_rows[p];
                    blocked[r][col] = blocked[r][col].add(val);
                }
            }
        }
    }
    let omega = kernel_naive(&blocked, allowed.len());
    let boundary_on_omega = omega
        .iter()
        .map(|v| {
            (0..lower_allowed.len())
                .map(|r| {
                    let mut acc = Frac::zero();
                    for (c, coeff) in v.iter().enumerate() {
                        if !coeff.is_zero() && !good[r][c].is_zero() {
                            acc = acc.add(coeff.mul(good[r][c]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    OracleDegree {
        allowed,
        omega,
        boundary_on_omega,
    }
}

/// Betti numbers of classical path homology for degrees `0..max_n-1`,
/// computed from explicit cycle and boundary spaces.
pub fn classical_betti_oracle(g: &Digraph, max_n: u64) -> Vec<usize> {
    let degrees: Vec<OracleDegree> = (0..=max_n).map(|n| oracle_degree(g, n)).collect();
    let mut betti = Vec::new();
    for n in 0..max_n as usize {
        let deg = &degrees[n];
        let dim_omega = deg.omega.len();
        let ambient_below = if n == 0 { 0 } else { degrees[n - 1].allowed.len() };
        let out_rank = if n == 0 || ambient_below == 0 {
            0
        } else {
            rank_naive(deg.boundary_on_omega.clone(), ambient_below)
        };
        let above = &degrees[n + 1];
        let in_rank = if above.boundary_on_omega.is_empty() {
            0
        } else {
            rank_naive(above.boundary_on_omega.clone(), deg.allowed.len())
        };
        let cycles = dim_omega - out_rank;
        betti.push(cycles - in_rank);
    }
    betti
}

//! Finite digraphs and elementary path enumeration.
//!
//! Vertex labels are external strings; everything downstream works with dense
//! integer indices in input order. That order is fixed at construction and
//! defines every basis ordering and sign convention in the engine, so it must
//! never change after `Digraph::new`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite digraph: ordered vertex labels plus loop-free directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    edges: Vec<(u32, u32)>,
    out: Vec<Vec<u32>>,
}

impl Digraph {
    /// Builds a digraph from labels and index pairs. Rejects duplicate
    /// labels, out-of-range endpoints, self-loops, and duplicate edges.
    pub fn new(labels: Vec<String>, mut edges: Vec<(u32, u32)>) -> Result<Self> {
        let n = labels.len();
        for i in 0..n {
            for j in (i + 1)..n {
                if labels[i] == labels[j] {
                    return Err(Error::Digraph(format!(
                        "duplicate vertex label \"{}\"",
                        labels[i]
                    )));
                }
            }
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                let (u, v) = w[0];
                return Err(Error::Digraph(format!(
                    "duplicate edge (\"{}\", \"{}\")",
                    labels[u as usize], labels[v as usize]
                )));
            }
        }
        let mut out = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Digraph(format!(
                    "edge ({u}, {v}) references a missing vertex"
                )));
            }
            if u == v {
                return Err(Error::Digraph(format!(
                    "self-loop edge (\"{}\", \"{}\") is not allowed",
                    labels[u as usize], labels[u as usize]
                )));
            }
            out[u as usize].push(v);
        }
        Ok(Digraph { labels, edges, out })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    /// Out-neighbors of `v` in increasing index order.
    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    /// True iff every consecutive pair of `p` is a directed edge.
    /// Single vertices are always allowed.
    pub fn is_allowed(&self, p: &Path) -> bool {
        p.verts()
            .windows(2)
            .all(|w| self.has_edge(w[0], w[1]))
    }

    /// All allowed `n`-paths in lexicographic order by vertex index.
    ///
    /// This order is the canonical basis order of the allowed-path module at
    /// length `n` for every matrix built downstream. Errors when more than
    /// `cap` paths would be produced (cyclic digraphs grow without bound).
    pub fn allowed_paths(&self, n: u64, cap: usize) -> Result<Vec<Path>> {
        let mut acc = Vec::new();
        let mut stack: Vec<u32> = Vec::with_capacity(n as usize + 1);
        for start in 0..self.vertex_count() as u32 {
            stack.push(start);
            self.dfs_allowed(n, cap, &mut stack, &mut acc)?;
            stack.pop();
        }
        Ok(acc)
    }

    fn dfs_allowed(
        &self,
        n: u64,
        cap: usize,
        stack: &mut Vec<u32>,
        acc: &mut Vec<Path>,
    ) -> Result<()> {
        if stack.len() as u64 == n + 1 {
            if acc.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "allowed path enumeration",
                    cap,
                });
            }
            acc.push(Path::new(stack.clone()));
            return Ok(());
        }
        let last = *stack.last().expect("stack never empty");
        for &next in self.out_neighbors(last) {
            stack.push(next);
            self.dfs_allowed(n, cap, stack, acc)?;
            stack.pop();
        }
        Ok(())
    }

    /// Longest length of any allowed path, or `None` when the digraph has a
    /// directed cycle (allowed paths of every length exist). An empty or
    /// edgeless digraph without vertices yields `Some(-1)`.
    pub fn max_allowed_len(&self) -> Option<i64> {
        let n = self.vertex_count();
        if n == 0 {
            return Some(-1);
        }
        // Longest-path DP over a topological order; cycle detection by
        // Kahn count.
        let mut indeg = vec![0usize; n];
        for &(_, v) in &self.edges {
            indeg[v as usize] += 1;
        }
        let mut queue: Vec<u32> = (0..n as u32).filter(|&v| indeg[v as usize] == 0).collect();
        let mut order = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            order.push(v);
            for &w in self.out_neighbors(v) {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() < n {
            return None;
        }
        let mut longest = vec![0i64; n];
        for &v in order.iter().rev() {
            for &w in self.out_neighbors(v) {
                longest[v as usize] = longest[v as usize].max(1 + longest[w as usize]);
            }
        }
        Some(longest.iter().copied().max().unwrap_or(-1))
    }
}

/// An elementary path: a sequence of `n+1` vertex indices for length `n`.
/// Repeats are permitted; the sequence is never empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<u32>);

impl Path {
    /// Panics on an empty vertex sequence; paths have length n >= 0.
    pub fn new(verts: Vec<u32>) -> Self {
        assert!(!verts.is_empty(), "a path has at least one vertex");
        Path(verts)
    }

    pub fn verts(&self) -> &[u32] {
        &self.0
    }

    /// Path length n (one less than the number of vertices).
    pub fn length(&self) -> u64 {
        (self.0.len() - 1) as u64
    }

    /// True iff no two consecutive vertices are equal.
    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// The path with the vertex at `i` deleted; `None` when only one
    /// vertex remains.
    pub fn delete(&self, i: usize) -> Option<Path> {
        if self.0.len() <= 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Path(v))
    }
}

/// All regular `n`-paths on `vcount` vertices in lexicographic order.
/// Count is `vcount * (vcount-1)^n` for n >= 1. Verification scale only.
pub fn regular_paths(vcount: usize, n: u64, cap: usize) -> Result<Vec<Path>> {
    let mut acc = Vec::new();
    let mut stack = Vec::with_capacity(n as usize + 1);
    for start in 0..vcount as u32 {
        stack.push(start);
        regular_dfs(vcount, n, cap, &mut stack, &mut acc)?;
        stack.pop();
    }
    Ok(acc)
}

fn regular_dfs(
    vcount: usize,
    n: u64,
    cap: usize,
    stack: &mut Vec<u32>,
    acc: &mut Vec<Path>,
) -> Result<()> {
    if stack.len() as u64 == n + 1 {
        if acc.len() >= cap {
            return Err(Error::CapExceeded {
                what: "regular path enumeration",
                cap,
            });
        }
        acc.push(Path::new(stack.clone()));
        return Ok(());
    }
    let last = *stack.last().expect("stack never empty");
    for next in 0..vcount as u32 {
        if next == last {
            continue;
        }
        stack.push(next);
        regular_dfs(vcount, n, cap, stack, acc)?;
        stack.pop();
    }
    Ok(())
}

/// All elementary `n`-paths on `vcount` vertices (repeats included) in
/// lexicographic order. Count is `vcount^(n+1)`. Verification scale only.
pub fn elementary_paths(vcount: usize, n: u64, cap: usize) -> Result<Vec<Path>> {
    if vcount == 0 {
        return Ok(Vec::new());
    }
    let need = (vcount as u128).checked_pow(n as u32 + 1);
    if need.map_or(true, |c| c > cap as u128) {
        return Err(Error::CapExceeded {
            what: "elementary path enumeration",
            cap,
        });
    }
    let mut acc = Vec::new();
    let mut current = vec![0u32; n as usize + 1];
    loop {
        acc.push(Path::new(current.clone()));
        // odometer increment, most significant digit first
        let mut i = current.len();
        loop {
            if i == 0 {
                return Ok(acc);
            }
            i -= 1;
            if current[i] as usize + 1 < vcount {
                current[i] += 1;
                for d in &mut current[i + 1..] {
                    *d = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::{diamond, labels};
    use alloc::string::ToString;

    #[test]
    fn rejects_self_loop_naming_edge() {
        let err = Digraph::new(labels(2), vec![(1, 1)]).unwrap_err();
        assert_eq!(
            err.to_string(),
            "invalid digraph: self-loop edge (\"v1\", \"v1\") is not allowed"
        );
    }

    #[test]
    fn rejects_duplicate_edge_and_bad_index() {
        assert!(Digraph::new(labels(2), vec![(0, 1), (0, 1)]).is_err());
        assert!(Digraph::new(labels(2), vec![(0, 5)]).is_err());
        assert!(Digraph::new(vec!["a".into(), "a".into()], vec![]).is_err());
    }

    #[test]
    fn regularity() {
        assert!(Path::new(vec![0, 1, 0]).is_regular());
        assert!(!Path::new(vec![0, 0]).is_regular());
        assert!(Path::new(vec![3]).is_regular());
    }

    #[test]
    fn allowedness_on_diamond() {
        let g = diamond();
        assert!(g.is_allowed(&Path::new(vec![0, 1, 3])));
        assert!(!g.is_allowed(&Path::new(vec![0, 3])));
        assert!(g.is_allowed(&Path::new(vec![5])));
    }

    #[test]
    fn allowed_enumeration_matches_worked_bases() {
        let g = diamond();
        let a2 = g.allowed_paths(2, 1000).unwrap();
        let want: Vec<Path> = [
            vec![0, 1, 3],
            vec![0, 1, 4],
            vec![0, 2, 3],
            vec![0, 2, 4],
        ]
        .into_iter()
        .map(Path::new)
        .collect();
        assert_eq!(a2, want);
        assert_eq!(g.allowed_paths(1, 1000).unwrap().len(), 8);
        assert_eq!(g.allowed_paths(3, 1000).unwrap().len(), 0);
    }

    #[test]
    fn edgeless_digraph_has_no_one_paths() {
        let g = Digraph::new(labels(3), vec![]).unwrap();
        assert!(g.allowed_paths(1, 10).unwrap().is_empty());
        assert_eq!(g.allowed_paths(0, 10).unwrap().len(), 3);
    }

    #[test]
    fn regular_counts() {
        assert_eq!(
            regular_paths(2, 1, 100).unwrap(),
            vec![Path::new(vec![0, 1]), Path::new(vec![1, 0])]
        );
        assert_eq!(regular_paths(3, 2, 100).unwrap().len(), 12);
        assert!(regular_paths(1, 1, 100).unwrap().is_empty());
    }

    #[test]
    fn allowed_is_regular_filtered_by_allowedness() {
        let g = diamond();
        for n in 0..4 {
            let allowed = g.allowed_paths(n, 100_000).unwrap();
            let filtered: Vec<Path> = regular_paths(g.vertex_count(), n, 100_000)
                .unwrap()
                .into_iter()
                .filter(|p| g.is_allowed(p))
                .collect();
            assert_eq!(allowed, filtered);
            assert!(allowed.iter().all(|p| p.is_regular()));
        }
    }

    #[test]
    fn enumeration_is_sorted_and_cap_fires() {
        let g = diamond();
        let a = g.allowed_paths(2, 1000).unwrap();
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(a, sorted);
        assert!(matches!(
            g.allowed_paths(1, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn longest_allowed_length() {
        let g = diamond();
        assert_eq!(g.max_allowed_len(), Some(2));
        let cycle = Digraph::new(labels(3), vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(cycle.max_allowed_len(), None);
        let empty = Digraph::new(Vec::new(), Vec::new()).unwrap();
        assert_eq!(empty.max_allowed_len(), Some(-1));
        let isolated = Digraph::new(labels(2), vec![]).unwrap();
        assert_eq!(isolated.max_allowed_len(), Some(0));
    }

    #[test]
    fn elementary_counts() {
        assert_eq!(elementary_paths(2, 1, 100).unwrap().len(), 4);
        assert_eq!(elementary_paths(3, 2, 100).unwrap().len(), 27);
        assert!(elementary_paths(10, 9, 100).is_err());
    }
}

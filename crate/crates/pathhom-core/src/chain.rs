//! Sparse linear combinations of elementary paths with exact coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::digraph::Path;
use crate::scalar::K;

/// A homogeneous chain: degree `n` plus a sparse map from `n`-paths to
/// nonzero scalars. Keys are kept in lexicographic order by the map itself,
/// which makes serialization and iteration deterministic. Chains of negative
/// degree exist and are always empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathChain {
    degree: i64,
    terms: BTreeMap<Path, K>,
}

impl PathChain {
    pub fn zero(degree: i64) -> Self {
        PathChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(path: Path, coeff: K) -> Self {
        let mut c = PathChain::zero(path.length() as i64);
        c.add_term(path, coeff);
        c
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, path: &Path) -> Option<&K> {
        self.terms.get(path)
    }

    pub fn support(&self) -> impl Iterator<Item = &Path> {
        self.terms.keys()
    }

    /// Adds `coeff * path`, folding with any existing term and dropping the
    /// entry when it cancels to zero.
    pub fn add_term(&mut self, path: Path, coeff: K) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(self.degree >= 0, "nonzero term in a negative degree");
        debug_assert_eq!(path.length() as i64, self.degree, "term length mismatch");
        match self.terms.remove(&path) {
            None => {
                self.terms.insert(path, coeff);
            }
            Some(old) => {
                let folded = old.add(&coeff);
                if !folded.is_zero() {
                    self.terms.insert(path, folded);
                }
            }
        }
    }

    pub fn add(&self, other: &PathChain) -> PathChain {
        debug_assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (p, k) in other.terms() {
            out.add_term(p.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, other: &PathChain) -> PathChain {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> PathChain {
        PathChain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, k)| (p.clone(), k.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &K) -> PathChain {
        if factor.is_zero() {
            return PathChain::zero(self.degree);
        }
        PathChain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, k)| (p.clone(), k.mul(factor)))
                .collect(),
        }
    }

    /// Projection onto the regular-path span: drops every term whose path
    /// has two equal consecutive vertices. This realizes the quotient of the
    /// full path module by the irregular submodule.
    pub fn regular_part(&self) -> PathChain {
        PathChain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.is_regular())
                .map(|(p, k)| (p.clone(), k.clone()))
                .collect(),
        }
    }

    /// Coordinates over an ordered path basis. Every support path must occur
    /// in the basis; returns `None` otherwise.
    pub fn coordinates(&self, basis: &[Path]) -> Option<Vec<Option<K>>> {
        let mut coords: Vec<Option<K>> = alloc::vec![None; basis.len()];
        for (p, k) in self.terms() {
            let idx = basis.binary_search(p).ok()?;
            coords[idx] = Some(k.clone());
        }
        Some(coords)
    }
}

impl fmt::Display for PathChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*[", k)?;
            for (j, v) in p.verts().iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

//! The differential algebra on a vertex set: wedge monomials of partial
//! derivatives, their normalization, and their action on path chains.
//!
//! The generator for vertex `v` deletes occurrences of `v` from a path with
//! an alternating sign per position. Generators anticommute, so a monomial
//! is normalized to strictly increasing vertex order with the sign of the
//! sorting permutation folded into its coefficient; a repeated generator
//! kills the monomial because 2 is invertible in the field. A monomial acts
//! on chains as the composition of its generators applied left to right,
//! and degree 0 is the scalar field acting by multiplication (the empty
//! monomial), so even-degree elements with s = 0 act as the identity.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::PathChain;
use crate::scalar::{Field, K};

/// Signed-deletion action of a single generator on a chain: each occurrence
/// of `v` at position `i` contributes `(-1)^i` times the path with that
/// position removed. Chains of degree 0 map to the zero chain of degree -1.
pub fn partial(v: u32, c: &PathChain) -> PathChain {
    let mut out = PathChain::zero(c.degree() - 1);
    for (path, coeff) in c.terms() {
        for (i, &u) in path.verts().iter().enumerate() {
            if u != v {
                continue;
            }
            let Some(shorter) = path.delete(i) else {
                continue; // degree 0: image lives in the zero module
            };
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.add_term(shorter, coeff.with_sign(sign));
        }
    }
    out
}

/// A product of distinct generators in strictly increasing vertex order.
/// The empty monomial is the algebra unit (degree 0).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WedgeMonomial(Vec<u32>);

impl WedgeMonomial {
    pub fn unit() -> Self {
        WedgeMonomial(Vec::new())
    }

    pub fn verts(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.len() as u32
    }
}

/// Sorts a raw generator sequence into a monomial. Returns the sorted
/// monomial together with the sign of the sorting permutation, or `None`
/// when a generator repeats (the monomial is zero).
pub fn normalize_monomial(raw: &[u32]) -> Option<(WedgeMonomial, i32)> {
    let mut verts = raw.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting transpositions
    for i in 1..verts.len() {
        let mut j = i;
        while j > 0 && verts[j - 1] > verts[j] {
            verts.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if verts.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((WedgeMonomial(verts), sign))
}

/// A homogeneous element of the differential algebra: a degree plus a sparse
/// map from normalized monomials to nonzero scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffElement {
    degree: u32,
    field: Field,
    terms: BTreeMap<WedgeMonomial, K>,
}

impl DiffElement {
    pub fn zero(field: Field, degree: u32) -> Self {
        DiffElement {
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    /// Degree-0 element: a bare scalar acting by multiplication.
    pub fn scalar(value: K) -> Self {
        let field = value.field();
        let mut e = DiffElement::zero(field, 0);
        e.add_term(&[], value);
        e
    }

    /// The single generator for vertex `v`.
    pub fn generator(field: Field, v: u32) -> Self {
        let mut e = DiffElement::zero(field, 1);
        e.add_term(&[v], field.one());
        e
    }

    /// The degree-1 element with coefficient `weights[v]` on the generator
    /// of each vertex. With all weights 1 this is the classical boundary
    /// operator of path homology.
    pub fn weighted_boundary(field: Field, weights: &[K]) -> Self {
        let mut e = DiffElement::zero(field, 1);
        for (v, w) in weights.iter().enumerate() {
            e.add_term(&[v as u32], w.clone());
        }
        e
    }

    /// The classical (unweighted) boundary on `vcount` vertices.
    pub fn classical_boundary(field: Field, vcount: usize) -> Self {
        let ones: Vec<K> = (0..vcount).map(|_| field.one()).collect();
        DiffElement::weighted_boundary(field, &ones)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WedgeMonomial, &K)> {
        self.terms.iter()
    }

    /// Adds `coeff` times the monomial on `raw` generators. The sequence is
    /// normalized first: sign folded in, repeated-generator terms dropped.
    /// Panics when the sequence length does not match the element's degree.
    pub fn add_term(&mut self, raw: &[u32], coeff: K) {
        assert_eq!(raw.len() as u32, self.degree, "monomial degree mismatch");
        if coeff.is_zero() {
            return;
        }
        let Some((mono, sign)) = normalize_monomial(raw) else {
            return;
        };
        let signed = coeff.with_sign(sign);
        match self.terms.remove(&mono) {
            None => {
                self.terms.insert(mono, signed);
            }
            Some(old) => {
                let folded = old.add(&signed);
                if !folded.is_zero() {
                    self.terms.insert(mono, folded);
                }
            }
        }
    }

    pub fn add(&self, other: &DiffElement) -> DiffElement {
        assert_eq!(self.degree, other.degree, "degree mismatch in add");
        let mut out = self.clone();
        for (m, k) in other.terms() {
            out.add_term(m.verts(), k.clone());
        }
        out
    }

    pub fn scale(&self, factor: &K) -> DiffElement {
        let mut out = DiffElement::zero(self.field, self.degree);
        for (m, k) in self.terms() {
            out.add_term(m.verts(), k.mul(factor));
        }
        out
    }

    /// Exterior product. Distributes over terms; each concatenated monomial
    /// is renormalized, so repeated generators vanish and the sign law
    /// `a ∧ b = (-1)^{deg a * deg b} b ∧ a` holds.
    pub fn wedge(&self, other: &DiffElement) -> DiffElement {
        let mut out = DiffElement::zero(self.field, self.degree + other.degree);
        for (ma, ka) in self.terms() {
            for (mb, kb) in other.terms() {
                let mut raw = ma.verts().to_vec();
                raw.extend_from_slice(mb.verts());
                out.add_term(&raw, ka.mul(kb));
            }
        }
        out
    }

    /// Action on a chain: each monomial applies its generators left to
    /// right, extended bilinearly. The result has degree
    /// `c.degree() - self.degree()` and is the zero chain when that is
    /// negative. The empty monomial multiplies by its scalar.
    pub fn apply(&self, c: &PathChain) -> PathChain {
        let target = c.degree() - self.degree as i64;
        let mut out = PathChain::zero(target);
        for (mono, coeff) in self.terms() {
            let mut cur = c.clone();
            for &v in mono.verts() {
                if cur.is_zero() {
                    break;
                }
                cur = partial(v, &cur);
            }
            if cur.is_zero() {
                continue;
            }
            out = out.add(&cur.scale(coeff));
        }
        out
    }
}

impl fmt::Display for DiffElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 (degree {})", self.degree);
        }
        for (i, (m, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{k}*d[")?;
            for (j, v) in m.verts().iter().enumerate() {
                if j > 0 {
                    write!(f, "^")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

//! Quivers and enough path-algebra arithmetic to verify graded algebra
//! homomorphisms into them, Veronese constructions, isomorphism testing, and
//! McKay quivers of diagonal cyclic actions on free algebras.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::exactnum::{EisensteinScalar, IntMatrix};
use crate::ncalg::Presentation;

/// A finite directed multigraph with labeled arrows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// Errors from quiver operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuiverError {
    /// Isomorphism search is brute force and refuses large vertex sets.
    TooLarge { vertex_count: usize, bound: usize },
    OutOfRange,
    DuplicateLabel { label: String },
}

impl fmt::Display for QuiverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverError::TooLarge { vertex_count, bound } => write!(
                f,
                "isomorphism search limited to {} vertices, got {}",
                bound, vertex_count
            ),
            QuiverError::OutOfRange => write!(f, "arrow endpoint out of range"),
            QuiverError::DuplicateLabel { label } => {
                write!(f, "duplicate arrow label `{}`", label)
            }
        }
    }
}

impl core::error::Error for QuiverError {}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(QuiverError::OutOfRange);
            }
            if arrows[..i].iter().any(|b| b.label == a.label) {
                return Err(QuiverError::DuplicateLabel { label: a.label.clone() });
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Builds a quiver whose arrow counts match `matrix`, with generated
    /// labels.
    pub fn from_adjacency(matrix: &IntMatrix) -> Self {
        let n = matrix.rows();
        assert!(matrix.is_square(), "adjacency matrices are square");
        let mut arrows = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let count: usize = matrix.entry(s, t).try_into().expect("nonnegative count");
                for k in 0..count {
                    let label = if count > 1 {
                        format!("a{}_{}x{}", s + 1, t + 1, k + 1)
                    } else {
                        format!("a{}_{}", s + 1, t + 1)
                    };
                    arrows.push(Arrow { source: s, target: t, label });
                }
            }
        }
        Quiver { vertex_count: n, arrows }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn loop_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.source == a.target).count()
    }

    /// Entry `(i, j)` counts arrows `i -> j`.
    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.vertex_count, self.vertex_count);
        for a in &self.arrows {
            *m.entry_mut(a.source, a.target) += 1;
        }
        m
    }

    /// Number of length-`n` paths, via the adjacency power.
    pub fn path_count(&self, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::from(self.vertex_count);
        }
        self.adjacency().pow(n).expect("adjacency is square").entry_sum()
    }

    /// All length-`n` paths as arrow-index sequences, in lexicographic order
    /// of arrow indices.
    pub fn paths(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        self.extend_paths(n, &mut stack, &mut out);
        out
    }

    fn extend_paths(&self, n: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() == n {
            out.push(stack.clone());
            return;
        }
        let from = stack.last().map(|&i| self.arrows[i].target);
        for (i, a) in self.arrows.iter().enumerate() {
            if from.is_none_or(|v| v == a.source) {
                stack.push(i);
                self.extend_paths(n, stack, out);
                stack.pop();
            }
        }
    }

    /// The quiver on the same vertices whose arrows are the length-`n` paths;
    /// its adjacency matrix is the `n`-th power of the original one.
    pub fn veronese(&self, n: usize) -> Quiver {
        assert!(n >= 1, "veronese power must be positive");
        let arrows = self
            .paths(n)
            .into_iter()
            .map(|path| {
                let label = path
                    .iter()
                    .map(|&i| self.arrows[i].label.clone())
                    .collect::<Vec<_>>()
                    .join(".");
                Arrow {
                    source: self.arrows[path[0]].source,
                    target: self.arrows[*path.last().unwrap()].target,
                    label,
                }
            })
            .collect();
        Quiver { vertex_count: self.vertex_count, arrows }
    }

    /// Graphviz rendering: vertices as 1-based nodes, then one edge per
    /// arrow in stored order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in 0..self.vertex_count {
            out.push_str(&format!("  {};\n", v + 1));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                a.source + 1,
                a.target + 1,
                a.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// An element of the path algebra, homogeneous of a fixed path length.
/// Paths are composable arrow sequences read left to right: a path through
/// `a` then `b` requires `target(a) = source(b)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PathElement {
    degree: usize,
    terms: BTreeMap<Vec<usize>, EisensteinScalar>,
}

impl PathElement {
    pub fn zero(degree: usize) -> Self {
        PathElement { degree, terms: BTreeMap::new() }
    }

    /// A single arrow with coefficient one.
    pub fn arrow(index: usize) -> Self {
        PathElement {
            degree: 1,
            terms: BTreeMap::from([(alloc::vec![index], EisensteinScalar::one())]),
        }
    }

    /// Sum of the arrows leaving `vertex`, the image of a letter under the
    /// canonical map into the path algebra of its normal-word graph.
    pub fn sum_of_arrows_from(q: &Quiver, vertex: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (i, a) in q.arrows().iter().enumerate() {
            if a.source == vertex {
                terms.insert(alloc::vec![i], EisensteinScalar::one());
            }
        }
        PathElement { degree: 1, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, path: Vec<usize>, coeff: EisensteinScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&path) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&path);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(path, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &PathElement) -> PathElement {
        assert_eq!(self.degree, rhs.degree, "degrees must match");
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &EisensteinScalar) -> PathElement {
        if c.is_zero() {
            return PathElement::zero(self.degree);
        }
        PathElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    /// Concatenation product; non-composable pairs contribute zero.
    pub fn mul(&self, rhs: &PathElement, q: &Quiver) -> PathElement {
        let mut out = PathElement::zero(self.degree + rhs.degree);
        for (pa, ca) in &self.terms {
            let end = pa.last().map(|&i| q.arrows()[i].target);
            for (pb, cb) in &rhs.terms {
                let start = pb.first().map(|&i| q.arrows()[i].source);
                match (end, start) {
                    (Some(e), Some(s)) if e != s => continue,
                    _ => {}
                }
                let mut path = pa.clone();
                path.extend_from_slice(pb);
                out.add_term(path, ca * cb);
            }
        }
        out
    }
}

/// Checks that sending each generator of `p` to the assigned degree-one path
/// element kills every relation, i.e. the assignment extends to a graded
/// algebra homomorphism into the path algebra.
pub fn algebra_hom_check(p: &Presentation, q: &Quiver, assignment: &[PathElement]) -> bool {
    assert_eq!(
        assignment.len(),
        p.generator_count(),
        "assignment must cover all generators"
    );
    for rel in p.relations() {
        let mut image: Option<PathElement> = None;
        for (word, coeff) in rel.terms() {
            let mut product = assignment[word.letters()[0]].clone();
            for &letter in &word.letters()[1..] {
                product = product.mul(&assignment[letter], q);
            }
            let term = product.scale(coeff);
            image = Some(match image {
                None => term,
                Some(acc) => acc.add(&term),
            });
        }
        if image.is_some_and(|im| !im.is_zero()) {
            return false;
        }
    }
    true
}

/// The canonical assignment sending the `i`-th letter to the sum of the
/// arrows out of vertex `i`.
pub fn letter_assignment(q: &Quiver, letters: usize) -> Vec<PathElement> {
    (0..letters).map(|v| PathElement::sum_of_arrows_from(q, v)).collect()
}

const ISO_VERTEX_BOUND: usize = 8;

/// Searches for a vertex bijection matching arrow multiplicities. Brute
/// force over permutations with degree-profile pruning; intended for the
/// small quivers in this crate.
pub fn quiver_iso(q1: &Quiver, q2: &Quiver) -> Result<Option<Vec<usize>>, QuiverError> {
    let n = q1.vertex_count();
    if n > ISO_VERTEX_BOUND || q2.vertex_count() > ISO_VERTEX_BOUND {
        return Err(QuiverError::TooLarge {
            vertex_count: n.max(q2.vertex_count()),
            bound: ISO_VERTEX_BOUND,
        });
    }
    if n != q2.vertex_count() || q1.arrow_count() != q2.arrow_count() {
        return Ok(None);
    }
    if q1.loop_count() != q2.loop_count() {
        return Ok(None);
    }
    let a1 = q1.adjacency();
    let a2 = q2.adjacency();
    let profile = |m: &IntMatrix, v: usize| -> (Vec<BigInt>, Vec<BigInt>, BigInt) {
        let mut out: Vec<BigInt> = (0..m.cols()).map(|c| m.entry(v, c).clone()).collect();
        let mut inc: Vec<BigInt> = (0..m.rows()).map(|r| m.entry(r, v).clone()).collect();
        let diag = m.entry(v, v).clone();
        out.sort();
        inc.sort();
        (out, inc, diag)
    };
    let p1: Vec<_> = (0..n).map(|v| profile(&a1, v)).collect();
    let p2: Vec<_> = (0..n).map(|v| profile(&a2, v)).collect();

    let mut perm = alloc::vec![usize::MAX; n];
    let mut used = alloc::vec![false; n];
    fn assign(
        v: usize,
        n: usize,
        a1: &IntMatrix,
        a2: &IntMatrix,
        p1: &[(Vec<BigInt>, Vec<BigInt>, BigInt)],
        p2: &[(Vec<BigInt>, Vec<BigInt>, BigInt)],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || p1[v] != p2[w] {
                continue;
            }
            // arrow counts against already-assigned vertices must agree
            let consistent = (0..v).all(|u| {
                a1.entry(v, u) == a2.entry(w, perm[u]) && a1.entry(u, v) == a2.entry(perm[u], w)
            }) && a1.entry(v, v) == a2.entry(w, w);
            if !consistent {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            if assign(v + 1, n, a1, a2, p1, p2, perm, used) {
                return true;
            }
            used[w] = false;
            perm[v] = usize::MAX;
        }
        false
    }
    if assign(0, n, &a1, &a2, &p1, &p2, &mut perm, &mut used) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

/// Weights of a diagonal action of a cyclic group of order `n` on a free
/// algebra: generator `i` is scaled by the `weights[i]`-th power of the
/// chosen character.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct McKayWeights {
    group_order: usize,
    generator_weights: Vec<usize>,
}

impl McKayWeights {
    pub fn new(group_order: usize, generator_weights: Vec<usize>) -> Self {
        assert!(group_order >= 1, "group order must be positive");
        let generator_weights =
            generator_weights.into_iter().map(|w| w % group_order).collect();
        McKayWeights { group_order, generator_weights }
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn generator_weights(&self) -> &[usize] {
        &self.generator_weights
    }
}

/// The McKay quiver of the action: one vertex per character residue, and for
/// each free generator of weight `d` an arrow `i -> i + d (mod n)` at every
/// vertex `i` (acting by a weight-`d` generator raises the character index).
pub fn mckay_quiver(w: &McKayWeights) -> Quiver {
    let n = w.group_order;
    let mut arrows = Vec::new();
    for (g, &d) in w.generator_weights.iter().enumerate() {
        for i in 0..n {
            arrows.push(Arrow {
                source: i,
                target: (i + d) % n,
                label: format!("g{}_{}", g + 1, i),
            });
        }
    }
    Quiver { vertex_count: n, arrows }
}

/// Dimension of the degree-`d` part of the smash product of a free algebra
/// on `g` generators with a cyclic group of order `n`: the group algebra
/// tensored with the word space, so `n * g^d`.
pub fn skew_group_graded_dim(g: usize, n: usize, d: usize) -> BigInt {
    BigInt::from(n) * BigInt::from(g).pow(d as u32)
}

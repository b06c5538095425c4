//! Degree-by-degree analysis of the right-module map from shifted copies of
//! an algebra into the algebra itself.
//!
//! Given degree-one elements `e_1, ..., e_m` of an algebra `A`, the map sends
//! `(a_1, ..., a_m)` to `e_1 a_1 + ... + e_m a_m`, viewed as a map of right
//! modules `A(-1)^m -> A`. The report carries exact kernel and cokernel
//! dimensions per degree, so freeness of the image and the structure of the
//! quotient can be read off.
//!
//! For monomial presentations the graded pieces have normal words as a basis;
//! otherwise the graded pieces are computed as quotients of the full word
//! space by the degree slice of the two-sided ideal, which is exact but only
//! practical in low degrees.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exactnum::EisensteinScalar;

use super::linalg::{self, EchelonSpace};
use super::ncpoly::NCPoly;
use super::presentation::Presentation;
use super::word::{all_words, words_avoiding, Word};
use super::NcError;

/// Exact per-degree data for the map `(a_i) -> sum e_i a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingReport {
    /// Largest degree `d <= maxdeg` such that the map is injective in every
    /// degree up to `d`.
    pub injective_up_to: usize,
    /// Kernel dimension of the degree-`n` component, for `n = 0..=maxdeg`.
    pub kernel_dims: Vec<usize>,
    /// Cokernel dimension of the degree-`n` component, for `n = 0..=maxdeg`.
    pub cokernel_dims: Vec<usize>,
    /// Dimension of the algebra's degree-`n` component, for `n = 0..=maxdeg`.
    pub graded_dims: Vec<usize>,
}

/// Computes the report for `p` and the given degree-one elements up to
/// `maxdeg`.
pub fn verify_module_splitting(
    p: &Presentation,
    elements: &[NCPoly],
    maxdeg: usize,
) -> Result<SplittingReport, NcError> {
    if p.generator_degrees().iter().any(|&d| d != 1) {
        return Err(NcError::InvalidDegree);
    }
    for e in elements {
        if e.is_zero() || e.homogeneous_degree() != Some(1) {
            return Err(NcError::InhomogeneousInput);
        }
        if e.max_letter().is_some_and(|m| m >= p.generator_count()) {
            return Err(NcError::DimensionMismatch);
        }
    }
    let g = p.generator_count();
    let graded: Box<dyn GradedPieces> = match p.forbidden_words() {
        Some(words) => Box::new(MonomialPieces::new(g, words)),
        None => Box::new(QuotientPieces::new(p)),
    };

    let mut kernel_dims = Vec::with_capacity(maxdeg + 1);
    let mut cokernel_dims = Vec::with_capacity(maxdeg + 1);
    let mut graded_dims = Vec::with_capacity(maxdeg + 1);
    let mut prev_dim = 0usize; // dim of degree -1 is zero
    for n in 0..=maxdeg {
        let dim_n = graded.dimension(n);
        let rank = if n == 0 || prev_dim == 0 {
            0
        } else {
            let mut rows: Vec<Vec<EisensteinScalar>> = Vec::with_capacity(elements.len() * prev_dim);
            for e in elements {
                for b in 0..prev_dim {
                    rows.push(graded.image_row(e, n, b));
                }
            }
            linalg::rank(rows)
        };
        kernel_dims.push(elements.len() * prev_dim - rank);
        cokernel_dims.push(dim_n - rank);
        graded_dims.push(dim_n);
        prev_dim = dim_n;
    }
    let injective_up_to = kernel_dims
        .iter()
        .position(|&k| k != 0)
        .map_or(maxdeg, |d| d.saturating_sub(1));
    Ok(SplittingReport { injective_up_to, kernel_dims, cokernel_dims, graded_dims })
}

/// Access to the graded pieces of the algebra: dimensions and the
/// coordinates of `e * (basis vector)` one degree up.
trait GradedPieces {
    fn dimension(&self, n: usize) -> usize;
    /// Coordinates in degree `n` of `e` times the `b`-th basis vector of
    /// degree `n - 1`.
    fn image_row(&self, e: &NCPoly, n: usize, b: usize) -> Vec<EisensteinScalar>;
}

/// Normal words as a basis, for monomial presentations.
struct MonomialPieces {
    g: usize,
    forbidden: BTreeSet<Word>,
    // normal words per degree, with index lookup
    bases: core::cell::RefCell<BTreeMap<usize, (Vec<Word>, BTreeMap<Word, usize>)>>,
}

impl MonomialPieces {
    fn new(g: usize, forbidden: Vec<Word>) -> Self {
        MonomialPieces {
            g,
            forbidden: forbidden.into_iter().collect(),
            bases: core::cell::RefCell::new(BTreeMap::new()),
        }
    }

    fn ensure(&self, n: usize) {
        let mut bases = self.bases.borrow_mut();
        bases.entry(n).or_insert_with(|| {
            let words = words_avoiding(self.g, &self.forbidden, n);
            let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            (words, index)
        });
    }
}

impl GradedPieces for MonomialPieces {
    fn dimension(&self, n: usize) -> usize {
        self.ensure(n);
        self.bases.borrow()[&n].0.len()
    }

    fn image_row(&self, e: &NCPoly, n: usize, b: usize) -> Vec<EisensteinScalar> {
        self.ensure(n);
        self.ensure(n - 1);
        let bases = self.bases.borrow();
        let word = bases[&(n - 1)].0[b].clone();
        let (words_n, index_n) = &bases[&n];
        let mut row = alloc::vec![EisensteinScalar::zero(); words_n.len()];
        for (lw, c) in e.terms() {
            let product = lw.concat(&word);
            // The product of normal words is either normal or zero.
            if let Some(&i) = index_n.get(&product) {
                row[i] = &row[i] + c;
            }
        }
        row
    }
}

/// Word space modulo the degree slice of the two-sided ideal, for general
/// homogeneous presentations.
struct QuotientPieces {
    g: usize,
    relations: Vec<NCPoly>,
    spaces: core::cell::RefCell<BTreeMap<usize, EchelonSpace>>,
}

impl QuotientPieces {
    fn new(p: &Presentation) -> Self {
        QuotientPieces {
            g: p.generator_count(),
            relations: p.relations().to_vec(),
            spaces: core::cell::RefCell::new(BTreeMap::new()),
        }
    }

    fn ensure(&self, n: usize) {
        let mut spaces = self.spaces.borrow_mut();
        if spaces.contains_key(&n) {
            return;
        }
        let width = self.g.pow(n as u32);
        let mut rows = Vec::new();
        for r in &self.relations {
            let d = r.homogeneous_degree().expect("relations are homogeneous");
            if d > n {
                continue;
            }
            for left_len in 0..=(n - d) {
                let right_len = n - d - left_len;
                for left in all_words(self.g, left_len) {
                    for right in all_words(self.g, right_len) {
                        let padded = &(&NCPoly::monomial(left.clone()) * r)
                            * &NCPoly::monomial(right.clone());
                        rows.push(padded.coefficient_vector(self.g, n));
                    }
                }
            }
        }
        spaces.insert(n, EchelonSpace::new(rows, width));
    }
}

impl GradedPieces for QuotientPieces {
    fn dimension(&self, n: usize) -> usize {
        self.ensure(n);
        self.spaces.borrow()[&n].complement_columns().len()
    }

    fn image_row(&self, e: &NCPoly, n: usize, b: usize) -> Vec<EisensteinScalar> {
        self.ensure(n);
        self.ensure(n - 1);
        let spaces = self.spaces.borrow();
        let rep_col = spaces[&(n - 1)].complement_columns()[b];
        let rep = index_to_word(rep_col, self.g, n - 1);
        let product_poly = e * &NCPoly::monomial(rep);
        spaces[&n].reduce(product_poly.coefficient_vector(self.g, n))
    }
}

fn index_to_word(mut index: usize, g: usize, len: usize) -> Word {
    let mut letters = alloc::vec![0usize; len];
    for slot in (0..len).rev() {
        letters[slot] = index % g;
        index /= g;
    }
    Word::new(letters)
}

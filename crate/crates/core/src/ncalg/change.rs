//! Linear changes of generators, graded automorphisms, and the graded twist
//! of a quadratic presentation.

use alloc::vec::Vec;

use crate::exactnum::EisensteinScalar;

use super::linalg;
use super::ncpoly::NCPoly;
use super::presentation::Presentation;
use super::word::Word;
use super::NcError;

/// An invertible matrix over the scalar field; row `i` is the expansion of
/// generator `i` of one presentation as a linear combination of the
/// generators of another (or the same) presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearChange {
    matrix: Vec<Vec<EisensteinScalar>>,
}

impl LinearChange {
    /// Checks squareness and invertibility.
    pub fn new(matrix: Vec<Vec<EisensteinScalar>>) -> Result<Self, NcError> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(NcError::DimensionMismatch);
        }
        if !linalg::is_invertible(&matrix) {
            return Err(NcError::NotInvertible);
        }
        Ok(LinearChange { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearChange { matrix: unit_matrix(n) }
    }

    /// Generator `i` maps to generator `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self, NcError> {
        let n = perm.len();
        let mut matrix = alloc::vec![alloc::vec![EisensteinScalar::zero(); n]; n];
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(NcError::DimensionMismatch);
            }
            matrix[i][j] = EisensteinScalar::one();
        }
        Self::new(matrix)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn rows(&self) -> &[Vec<EisensteinScalar>] {
        &self.matrix
    }

    /// Row `i` as a degree-one polynomial.
    pub fn image_of(&self, i: usize) -> NCPoly {
        linear_form(&self.matrix[i])
    }

    pub fn inverse(&self) -> LinearChange {
        let inv = linalg::invert(&self.matrix).expect("invertible by construction");
        LinearChange { matrix: inv }
    }
}

fn unit_matrix(n: usize) -> Vec<Vec<EisensteinScalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { EisensteinScalar::one() } else { EisensteinScalar::zero() })
                .collect()
        })
        .collect()
}

fn linear_form(row: &[EisensteinScalar]) -> NCPoly {
    NCPoly::from_terms(
        row.iter()
            .enumerate()
            .map(|(j, c)| (Word::single(j), c.clone())),
    )
}

/// Replaces each generator of `p` by its linear image under `change` and
/// expands. Degrees are preserved; the substitution is multiplicative.
pub fn substitute(p: &NCPoly, change: &LinearChange) -> Result<NCPoly, NcError> {
    if p.max_letter().is_some_and(|m| m >= change.dim()) {
        return Err(NcError::DimensionMismatch);
    }
    let images: Vec<NCPoly> = (0..change.dim()).map(|i| change.image_of(i)).collect();
    let mut out = NCPoly::zero();
    for (word, coeff) in p.terms() {
        let mut product = NCPoly::term(Word::empty(), coeff.clone());
        for &letter in word.letters() {
            product = &product * &images[letter];
        }
        out = &out + &product;
    }
    Ok(out)
}

/// A degree-one automorphism of a presentation: an invertible matrix on the
/// generators that carries the relation span onto itself, checked at
/// construction.
#[derive(Clone, Debug)]
pub struct GradedAutomorphism {
    change: LinearChange,
}

impl GradedAutomorphism {
    pub fn new(p: &Presentation, matrix: Vec<Vec<EisensteinScalar>>) -> Result<Self, NcError> {
        if matrix.len() != p.generator_count() {
            return Err(NcError::DimensionMismatch);
        }
        let change = LinearChange::new(matrix)?;
        let mapped: Result<Vec<NCPoly>, NcError> =
            p.relations().iter().map(|r| substitute(r, &change)).collect();
        let image = Presentation::with_degrees(
            p.generator_names().to_vec(),
            p.generator_degrees().to_vec(),
            mapped?,
        )?;
        if !p.same_relation_span(&image)? {
            return Err(NcError::SpanNotPreserved);
        }
        Ok(GradedAutomorphism { change })
    }

    /// Automorphism sending generator `i` to generator `perm[i]`.
    pub fn from_permutation(p: &Presentation, perm: &[usize]) -> Result<Self, NcError> {
        let change = LinearChange::from_permutation(perm)?;
        Self::new(p, change.rows().to_vec())
    }

    pub fn as_change(&self) -> &LinearChange {
        &self.change
    }
}

/// The twist of a quadratic presentation by a graded automorphism.
///
/// The twisted multiplication is `x * y = x · τ(y)`, so the twisted algebra
/// is presented by the relations with `τ^{-1}` applied to the right-hand
/// tensor factor: a term `c · e_i e_j` becomes `c · e_i τ^{-1}(e_j)`.
pub fn zhang_twist(p: &Presentation, tau: &GradedAutomorphism) -> Result<Presentation, NcError> {
    if p.generator_degrees().iter().any(|&d| d != 1) {
        return Err(NcError::NonQuadratic);
    }
    if p.relations().iter().any(|r| p.weighted_degree(r) != Some(2)) {
        return Err(NcError::NonQuadratic);
    }
    if tau.as_change().dim() != p.generator_count() {
        return Err(NcError::DimensionMismatch);
    }
    let inv = tau.as_change().inverse();
    let mut twisted = Vec::with_capacity(p.relations().len());
    for rel in p.relations() {
        let mut out = NCPoly::zero();
        for (word, coeff) in rel.terms() {
            let (i, j) = (word.letters()[0], word.letters()[1]);
            for (k, c) in inv.rows()[j].iter().enumerate() {
                out.add_term(Word::new(alloc::vec![i, k]), coeff * c);
            }
        }
        twisted.push(out);
    }
    Presentation::with_degrees(
        p.generator_names().to_vec(),
        p.generator_degrees().to_vec(),
        twisted,
    )
}

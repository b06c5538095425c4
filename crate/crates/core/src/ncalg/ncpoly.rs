//! Noncommutative polynomials: finite linear combinations of words with
//! scalar coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::EisensteinScalar;

use super::word::Word;

/// Map from words to nonzero coefficients; the zero polynomial stores
/// nothing.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, EisensteinScalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        Self::term(Word::empty(), EisensteinScalar::one())
    }

    pub fn term(word: Word, coeff: EisensteinScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NCPoly { terms }
    }

    pub fn monomial(word: Word) -> Self {
        Self::term(word, EisensteinScalar::one())
    }

    pub fn generator(index: usize) -> Self {
        Self::monomial(Word::single(index))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, EisensteinScalar)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, word: Word, coeff: EisensteinScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&word);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &EisensteinScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> EisensteinScalar {
        self.terms.get(word).cloned().unwrap_or_else(EisensteinScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The single term, if the polynomial is a scalar multiple of one word.
    pub fn as_single_term(&self) -> Option<(&Word, &EisensteinScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Common length of all words, when there is one. The zero polynomial is
    /// homogeneous of every degree, reported as `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.len();
        it.all(|w| w.len() == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.terms.keys().filter_map(Word::max_letter).max()
    }

    pub fn scale(&self, c: &EisensteinScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Coefficient vector over the lexicographic basis of length-`degree`
    /// words on `g` generators.
    pub fn coefficient_vector(&self, g: usize, degree: usize) -> Vec<EisensteinScalar> {
        let mut row = alloc::vec![EisensteinScalar::zero(); g.pow(degree as u32)];
        for (w, c) in &self.terms {
            debug_assert_eq!(w.len(), degree, "caller must pass a homogeneous polynomial");
            row[w.lex_index(g)] = c.clone();
        }
        row
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

//! Presentations: named degree-one generators and homogeneous relations.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::exactnum::EisensteinScalar;

use super::ncpoly::NCPoly;
use super::word::Word;
use super::NcError;

/// Generators with degrees plus a list of homogeneous relations. Two
/// presentations describe the same algebra when their relation spans agree
/// degree by degree, which is how the rest of the crate compares them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generator_names: Vec<String>,
    generator_degrees: Vec<usize>,
    relations: Vec<NCPoly>,
}

impl Presentation {
    /// All generators in degree one.
    pub fn new(names: &[&str], relations: Vec<NCPoly>) -> Result<Self, NcError> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::with_degrees(owned, alloc::vec![1; names.len()], relations)
    }

    pub fn with_degrees(
        generator_names: Vec<String>,
        generator_degrees: Vec<usize>,
        relations: Vec<NCPoly>,
    ) -> Result<Self, NcError> {
        if generator_names.len() != generator_degrees.len() {
            return Err(NcError::DimensionMismatch);
        }
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(NcError::DuplicateGenerator { name: name.clone() });
            }
        }
        if generator_degrees.iter().any(|&d| d == 0) {
            return Err(NcError::InvalidDegree);
        }
        let p = Presentation { generator_names, generator_degrees, relations };
        for (i, rel) in p.relations.iter().enumerate() {
            if rel.is_zero() {
                return Err(NcError::ZeroRelation { index: i });
            }
            if rel.max_letter().is_some_and(|m| m >= p.generator_count()) {
                return Err(NcError::DimensionMismatch);
            }
            match p.weighted_degree(rel) {
                None => return Err(NcError::InhomogeneousRelation { index: i }),
                Some(0) => return Err(NcError::InvalidDegree),
                Some(_) => {}
            }
        }
        Ok(p)
    }

    /// Free algebra: no relations.
    pub fn free(names: &[&str]) -> Self {
        Self::new(names, Vec::new()).expect("free presentation is always valid")
    }

    /// Monomial presentation: each relation is a single word.
    pub fn monomial(names: &[&str], forbidden: &[Word]) -> Result<Self, NcError> {
        let relations = forbidden.iter().cloned().map(NCPoly::monomial).collect();
        Self::new(names, relations)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn generator_degrees(&self) -> &[usize] {
        &self.generator_degrees
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    /// The degree common to all terms of `p` under this grading, if any.
    pub fn weighted_degree(&self, p: &NCPoly) -> Option<usize> {
        let mut it = p.terms();
        let first = it.next()?.0.degree(&self.generator_degrees);
        for (w, _) in it {
            if w.degree(&self.generator_degrees) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Common degree of all relations, when they share one.
    pub fn uniform_relation_degree(&self) -> Option<usize> {
        let mut degrees = self.relations.iter().map(|r| self.weighted_degree(r));
        let first = degrees.next()??;
        for d in degrees {
            if d != Some(first) {
                return None;
            }
        }
        Some(first)
    }

    /// True when every relation is a scalar multiple of a single word.
    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(|r| r.as_single_term().is_some())
    }

    /// The relation words of a monomial presentation.
    pub fn forbidden_words(&self) -> Option<Vec<Word>> {
        self.relations
            .iter()
            .map(|r| r.as_single_term().map(|(w, _)| w.clone()))
            .collect()
    }

    /// Relation spans compared degree by degree.
    pub fn same_relation_span(&self, other: &Presentation) -> Result<bool, NcError> {
        if self.generator_count() != other.generator_count() {
            return Err(NcError::DimensionMismatch);
        }
        let g = self.generator_count();
        let mut degrees: Vec<usize> = self
            .relations
            .iter()
            .chain(&other.relations)
            .filter_map(|r| self.weighted_degree(r))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            let mine = self.relation_rows(g, d);
            let theirs = other.relation_rows(g, d);
            if !super::linalg::same_row_space(&mine, &theirs) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn relation_rows(&self, g: usize, d: usize) -> Vec<Vec<EisensteinScalar>> {
        self.relations
            .iter()
            .filter(|r| self.weighted_degree(r) == Some(d))
            .map(|r| r.coefficient_vector(g, d))
            .collect()
    }

    /// Renders a polynomial in the presentation's text format.
    pub fn render_poly(&self, p: &NCPoly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in p.terms().enumerate() {
            let word_str = word
                .letters()
                .iter()
                .map(|&l| self.generator_names[l].as_str())
                .collect::<Vec<_>>()
                .join("*");
            let (sign, magnitude) = coeff_text(coeff);
            if i == 0 {
                if sign {
                    out.push('-');
                }
            } else {
                out.push_str(if sign { " - " } else { " + " });
            }
            match (magnitude.as_str(), word.is_empty()) {
                ("1", false) => out.push_str(&word_str),
                (_, false) => {
                    out.push_str(&magnitude);
                    out.push('*');
                    out.push_str(&word_str);
                }
                (_, true) => out.push_str(&magnitude),
            }
        }
        out
    }

    /// Serializes to the text format the parser reads back.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("gens:");
        for name in &self.generator_names {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
        for rel in &self.relations {
            out.push_str(&format!("rel: {}\n", self.render_poly(rel)));
        }
        out
    }
}

/// Splits a coefficient into a leading-sign flag and a magnitude string.
/// Non-rational coefficients are always parenthesized so the `w` unit cannot
/// be confused with a generator named `w` when parsed back.
fn coeff_text(c: &EisensteinScalar) -> (bool, String) {
    if c.is_rational() {
        let r = c.rational_part();
        (r.is_negative(), r.abs().to_string())
    } else {
        let s = c.to_string();
        if s.starts_with('(') {
            (false, s)
        } else {
            (false, format!("({})", s))
        }
    }
}

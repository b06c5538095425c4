//! Quadratic monomial algebras: normal words, the normal-word graph whose
//! adjacency matrix transfers word counts, and exact Hilbert series as
//! rational functions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{ExactError, Rational, RationalFunction, UniPoly};
use crate::ncalg::{words_avoiding, NcError, Presentation, Word};
use crate::quiver::{Arrow, Quiver};

/// A free algebra modulo length-two monomial relations, given by its
/// alphabet and the set of forbidden two-letter words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialAlgebra {
    letter_names: Vec<String>,
    forbidden: BTreeSet<Word>,
}

/// Errors from building monomial algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialError {
    /// A presentation relation is not a single quadratic word.
    NotQuadraticMonomial,
    ForbiddenWordOutOfRange,
    Nc(NcError),
}

impl fmt::Display for MonomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialError::NotQuadraticMonomial => {
                write!(f, "relations must be single words of length two")
            }
            MonomialError::ForbiddenWordOutOfRange => {
                write!(f, "forbidden word uses a letter outside the alphabet")
            }
            MonomialError::Nc(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for MonomialError {}

impl From<NcError> for MonomialError {
    fn from(e: NcError) -> Self {
        MonomialError::Nc(e)
    }
}

const DEFAULT_LETTERS: [&str; 6] = ["u", "v", "w", "x", "y", "z"];

fn default_names(g: usize) -> Vec<String> {
    if g <= DEFAULT_LETTERS.len() {
        DEFAULT_LETTERS[..g].iter().map(|s| s.to_string()).collect()
    } else {
        (0..g).map(|i| format!("x{}", i + 1)).collect()
    }
}

impl MonomialAlgebra {
    pub fn new(alphabet_size: usize, forbidden: &[(usize, usize)]) -> Result<Self, MonomialError> {
        Self::with_names(default_names(alphabet_size), forbidden)
    }

    pub fn with_names(
        letter_names: Vec<String>,
        forbidden: &[(usize, usize)],
    ) -> Result<Self, MonomialError> {
        let g = letter_names.len();
        let mut set = BTreeSet::new();
        for &(a, b) in forbidden {
            if a >= g || b >= g {
                return Err(MonomialError::ForbiddenWordOutOfRange);
            }
            set.insert(Word::new(alloc::vec![a, b]));
        }
        Ok(MonomialAlgebra { letter_names, forbidden: set })
    }

    /// Squared-generator relations: every `x x` is forbidden. With one
    /// letter this is the dual numbers.
    pub fn squares(g: usize) -> Self {
        let pairs: Vec<_> = (0..g).map(|l| (l, l)).collect();
        Self::new(g, &pairs).expect("diagonal pairs are in range")
    }

    /// Cyclic relations `x_i x_{i+1}` for consecutive letters mod `g`.
    pub fn cycle(g: usize) -> Self {
        let pairs: Vec<_> = (0..g).map(|l| (l, (l + 1) % g)).collect();
        Self::new(g, &pairs).expect("cyclic pairs are in range")
    }

    /// The free algebra: nothing forbidden.
    pub fn free(g: usize) -> Self {
        Self::new(g, &[]).expect("empty forbidden set")
    }

    /// Reads a quadratic monomial presentation.
    pub fn from_presentation(p: &Presentation) -> Result<Self, MonomialError> {
        let mut pairs = Vec::new();
        for rel in p.relations() {
            let Some((word, _)) = rel.as_single_term() else {
                return Err(MonomialError::NotQuadraticMonomial);
            };
            if word.len() != 2 {
                return Err(MonomialError::NotQuadraticMonomial);
            }
            pairs.push((word.letters()[0], word.letters()[1]));
        }
        Self::with_names(p.generator_names().to_vec(), &pairs)
    }

    /// The presentation with one monomial relation per forbidden word.
    pub fn to_presentation(&self) -> Presentation {
        let names: Vec<&str> = self.letter_names.iter().map(String::as_str).collect();
        let words: Vec<Word> = self.forbidden.iter().cloned().collect();
        Presentation::monomial(&names, &words).expect("monomial relations are valid")
    }

    pub fn alphabet_size(&self) -> usize {
        self.letter_names.len()
    }

    pub fn letter_names(&self) -> &[String] {
        &self.letter_names
    }

    pub fn forbidden(&self) -> &BTreeSet<Word> {
        &self.forbidden
    }

    pub fn is_forbidden(&self, a: usize, b: usize) -> bool {
        self.forbidden.contains(&Word::new(alloc::vec![a, b]))
    }

    /// True when the word avoids every forbidden subword.
    pub fn is_normal(&self, w: &Word) -> bool {
        !self.forbidden.iter().any(|f| w.contains_subword(f))
    }

    /// All normal words of length `n`, lexicographically.
    pub fn normal_words(&self, n: usize) -> Vec<Word> {
        words_avoiding(self.alphabet_size(), &self.forbidden, n)
    }

    /// Number of normal words of length `n`, computed independently of the
    /// enumeration as a transfer-matrix count: the all-ones vector pushed
    /// through `n - 1` powers of the normal-word graph adjacency.
    pub fn count_normal_words(&self, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        self.normal_word_graph()
            .adjacency()
            .pow(n - 1)
            .expect("adjacency is square")
            .entry_sum()
    }

    /// The graph with one vertex per letter and an arrow `x -> y` whenever
    /// `xy` is normal. Arrows out of `x` are labeled `x1, x2, ...` in
    /// ascending target order.
    pub fn normal_word_graph(&self) -> Quiver {
        let g = self.alphabet_size();
        let mut arrows = Vec::new();
        for a in 0..g {
            let mut counter = 0;
            for b in 0..g {
                if !self.is_forbidden(a, b) {
                    counter += 1;
                    arrows.push(Arrow {
                        source: a,
                        target: b,
                        label: format!("{}{}", self.letter_names[a], counter),
                    });
                }
            }
        }
        Quiver::new(g, arrows).expect("labels are distinct by construction")
    }

    /// The Hilbert series `1 + t * 1ᵀ (I - tA)⁻¹ 1` as a reduced rational
    /// function, with `A` the normal-word graph adjacency. The inverse is
    /// computed exactly through the adjugate, not by series truncation.
    pub fn hilbert_series(&self) -> Result<RationalFunction, ExactError> {
        let adj = self.normal_word_graph().adjacency();
        let g = self.alphabet_size();
        // I - tA as a polynomial matrix.
        let m: Vec<Vec<UniPoly>> = (0..g)
            .map(|r| {
                (0..g)
                    .map(|c| {
                        let a: i64 = adj.entry(r, c).try_into().expect("small entry");
                        let mut coeffs = alloc::vec![Rational::zero(); 2];
                        coeffs[0] = if r == c { Rational::one() } else { Rational::zero() };
                        coeffs[1] = -Rational::from(BigInt::from(a));
                        UniPoly::new(coeffs)
                    })
                    .collect()
            })
            .collect();
        let det = poly_det(&m);
        // 1ᵀ adj(I - tA) 1 is the sum of all cofactors.
        let mut cof_sum = UniPoly::zero();
        for r in 0..g {
            for c in 0..g {
                let minor = poly_det(&delete_row_col(&m, r, c));
                let signed = if (r + c) % 2 == 0 { minor } else { -&minor };
                cof_sum = &cof_sum + &signed;
            }
        }
        let num = &det + &(&UniPoly::monomial(Rational::one(), 1) * &cof_sum);
        RationalFunction::reduce(num, det)
    }
}

fn delete_row_col(m: &[Vec<UniPoly>], r: usize, c: usize) -> Vec<Vec<UniPoly>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != c)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row; fine for the small matrices here.
fn poly_det(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = UniPoly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor = poly_det(&delete_row_col(m, 0, c));
        let term = &m[0][c] * &minor;
        det = if c % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// Hilbert series of a coproduct of connected graded algebras from the
/// series of the factors: the inverses satisfy
/// `H⁻¹ = H_1⁻¹ + ... + H_k⁻¹ - (k - 1)`.
pub fn free_product_hilbert(series: &[RationalFunction]) -> Result<RationalFunction, ExactError> {
    let k = series.len();
    let mut sum = RationalFunction::constant(-Rational::from(BigInt::from(k as i64 - 1)));
    for h in series {
        if h.constant_term().is_zero() {
            return Err(ExactError::ZeroConstantTerm);
        }
        sum = &sum + &h.inverse()?;
    }
    sum.inverse()
}

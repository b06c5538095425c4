//! Point modules over the squared-generator algebra.
//!
//! A point module is a cyclic graded module with one-dimensional pieces; its
//! generator actions are recorded as a sequence of projective points. Over
//! the algebra with relations `u^2 = v^2 = w^2 = 0` every such point lies on
//! the coordinate triangle `uvw = 0`, and consecutive points obey a rigid
//! successor rule:
//!
//! * from a corner of the triangle, the next point is any point on the
//!   opposite edge;
//! * from any other point of an edge, the next point is the opposite corner.
//!
//! The twist functors carry these results to the cyclic-relation algebra and
//! to every degenerate member of the three-parameter family, so only the
//! squared-generator case is computed here.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::exactnum::EisensteinScalar;
use crate::monomial::MonomialAlgebra;
use crate::ncalg::{linalg, Word};

/// A point of the projective plane in coordinates dual to the ordered
/// generators `(u, v, w)`, normalized so the first nonzero coordinate is one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjPoint {
    coords: [EisensteinScalar; 3],
}

/// The three coordinate lines of the triangle: `U` is `u = 0`, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Line {
    U,
    V,
    W,
}

impl Line {
    pub const ALL: [Line; 3] = [Line::U, Line::V, Line::W];

    pub fn index(self) -> usize {
        match self {
            Line::U => 0,
            Line::V => 1,
            Line::W => 2,
        }
    }

    pub fn from_index(i: usize) -> Line {
        Line::ALL[i]
    }

    /// The corner not lying on this line.
    pub fn opposite_corner(self) -> ProjPoint {
        ProjPoint::unit(self.index())
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::U => write!(f, "u=0"),
            Line::V => write!(f, "v=0"),
            Line::W => write!(f, "w=0"),
        }
    }
}

/// Where a point sits relative to the triangle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointClass {
    /// On two coordinate lines: a corner of the triangle.
    IntersectionPoint(Line, Line),
    /// On exactly one coordinate line.
    GenericOnLine(Line),
    /// Not on the triangle at all.
    OffTriangle,
}

/// The admissible positions after a given point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SuccessorSet {
    /// Any point of the line.
    AnyPointOn(Line),
    /// Exactly this point.
    Single(ProjPoint),
}

/// Errors from the point-module operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointsError {
    /// `(0,0,0)` is not a point.
    ZeroPoint,
    /// Points off the triangle have no successor.
    OffTriangle,
    /// The word has a repeated adjacent letter or a letter outside `u,v,w`.
    NotNormalWord,
}

impl fmt::Display for PointsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointsError::ZeroPoint => write!(f, "(0,0,0) is not a projective point"),
            PointsError::OffTriangle => write!(f, "point does not lie on the triangle"),
            PointsError::NotNormalWord => write!(f, "word is not a normal word on three letters"),
        }
    }
}

impl core::error::Error for PointsError {}

impl ProjPoint {
    pub fn new(
        a: EisensteinScalar,
        b: EisensteinScalar,
        c: EisensteinScalar,
    ) -> Result<Self, PointsError> {
        let coords = [a, b, c];
        let first = coords
            .iter()
            .find(|s| !s.is_zero())
            .ok_or(PointsError::ZeroPoint)?;
        let inv = first.inverse().expect("nonzero");
        Ok(ProjPoint { coords: coords.clone().map(|s| &s * &inv) })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, PointsError> {
        Self::new(
            EisensteinScalar::from_int(a),
            EisensteinScalar::from_int(b),
            EisensteinScalar::from_int(c),
        )
    }

    /// The corner with a one in position `i`.
    pub fn unit(i: usize) -> ProjPoint {
        let mut coords = [
            EisensteinScalar::zero(),
            EisensteinScalar::zero(),
            EisensteinScalar::zero(),
        ];
        coords[i] = EisensteinScalar::one();
        ProjPoint { coords }
    }

    pub fn coords(&self) -> &[EisensteinScalar; 3] {
        &self.coords
    }

    pub fn lies_on(&self, line: Line) -> bool {
        self.coords[line.index()].is_zero()
    }

    /// For a corner, the coordinate line it does not touch.
    pub fn opposite_line(&self) -> Option<Line> {
        match classify_point(self) {
            PointClass::IntersectionPoint(_, _) => {
                let i = self.coords.iter().position(|c| !c.is_zero()).unwrap();
                Some(Line::from_index(i))
            }
            _ => None,
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// Classifies by the number of vanishing coordinates.
pub fn classify_point(p: &ProjPoint) -> PointClass {
    let on: Vec<Line> = Line::ALL.into_iter().filter(|&l| p.lies_on(l)).collect();
    match on.len() {
        2 => PointClass::IntersectionPoint(on[0], on[1]),
        1 => PointClass::GenericOnLine(on[0]),
        _ => PointClass::OffTriangle,
    }
}

/// The successor rule: a corner may be followed by any point of the
/// opposite edge, an edge point by the opposite corner, and a point off the
/// triangle by nothing.
pub fn successors(p: &ProjPoint) -> Result<SuccessorSet, PointsError> {
    match classify_point(p) {
        PointClass::IntersectionPoint(_, _) => {
            Ok(SuccessorSet::AnyPointOn(p.opposite_line().expect("corner")))
        }
        PointClass::GenericOnLine(line) => Ok(SuccessorSet::Single(line.opposite_corner())),
        PointClass::OffTriangle => Err(PointsError::OffTriangle),
    }
}

/// Whether `q` may follow `p`.
pub fn admissible_step(p: &ProjPoint, q: &ProjPoint) -> bool {
    match successors(p) {
        Err(_) => false,
        Ok(SuccessorSet::AnyPointOn(line)) => q.lies_on(line),
        Ok(SuccessorSet::Single(point)) => *q == point,
    }
}

/// Whether every consecutive pair of the sequence obeys the successor rule.
/// The equivalent module-theoretic test is [`sequence_module_is_valid`].
pub fn validate_sequence(seq: &[ProjPoint]) -> bool {
    seq.windows(2).all(|pair| admissible_step(&pair[0], &pair[1]))
}

/// Independent oracle for [`validate_sequence`]: builds the truncated module
/// with the sequence as action data and checks that the squared generators
/// act as zero degree by degree and that some top-degree action survives.
pub fn sequence_module_is_valid(seq: &[ProjPoint]) -> bool {
    let module = TruncatedPointModule::from_sequence(seq);
    module.relations_act_as_zero() && module.has_nonzero_top_action()
}

/// A truncated point module of length `n + 2`: basis vectors indexed
/// `0..=n+1` with `e_i * u = coords_i[0] * e_{i+1}` and so on, everything
/// above the top degree acting as zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedPointModule {
    action: Vec<ProjPoint>,
}

impl TruncatedPointModule {
    pub fn from_sequence(seq: &[ProjPoint]) -> Self {
        TruncatedPointModule { action: seq.to_vec() }
    }

    /// Basis size `n + 2` for a sequence `p_0..p_n`.
    pub fn length(&self) -> usize {
        self.action.len() + 1
    }

    pub fn point_sequence(&self) -> &[ProjPoint] {
        &self.action
    }

    /// Degree-wise nilpotency: consecutive actions of one generator cannot
    /// both be nonzero.
    pub fn relations_act_as_zero(&self) -> bool {
        self.action.windows(2).all(|pair| {
            (0..3).all(|i| {
                pair[0].coords()[i].is_zero() || pair[1].coords()[i].is_zero()
            })
        })
    }

    /// Some word of full length acts nontrivially on the bottom basis
    /// vector; with nonzero action points this always holds.
    pub fn has_nonzero_top_action(&self) -> bool {
        self.action
            .iter()
            .all(|p| p.coords().iter().any(|c| !c.is_zero()))
    }

    /// The scalar `c` with `e_0 * word = c * e_{len(word)}`, or zero when the
    /// word is too long or dies along the way.
    pub fn act_from_bottom(&self, word: &Word) -> EisensteinScalar {
        if word.len() > self.action.len() {
            return EisensteinScalar::zero();
        }
        let mut acc = EisensteinScalar::one();
        for (i, &letter) in word.letters().iter().enumerate() {
            if letter >= 3 {
                return EisensteinScalar::zero();
            }
            acc = &acc * &self.action[i].coords()[letter];
            if acc.is_zero() {
                return acc;
            }
        }
        acc
    }
}

/// All successor-valid sequences `p_0..p_n` of corners, in lexicographic
/// order of corner indices. There are `3 * 2^n` of them.
pub fn special_sequences(n: usize) -> Vec<Vec<ProjPoint>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(n: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<ProjPoint>>) {
        if stack.len() == n + 1 {
            out.push(stack.iter().map(|&i| ProjPoint::unit(i)).collect());
            return;
        }
        for i in 0..3 {
            // A corner may follow another corner exactly when it lies on the
            // opposite edge, i.e. the corner index changes.
            if stack.last().is_some_and(|&prev| prev == i) {
                continue;
            }
            stack.push(i);
            go(n, stack, out);
            stack.pop();
        }
    }
    go(n, &mut stack, &mut out);
    out
}

/// Count of special sequences `p_0..p_n`, which is `3 * 2^n`.
pub fn special_sequence_count(n: usize) -> BigInt {
    BigInt::from(3) * BigInt::from(2).pow(n as u32)
}

/// The special truncated module attached to a normal word `s = s_0..s_n`:
/// `e_i * a = e_{i+1}` when `a = s_i` and zero otherwise. Its point sequence
/// has the corner for letter `s_i` in position `i`, it does not annihilate
/// `s`, and it kills every other word of the same length.
pub fn special_module_for_word(s: &Word) -> Result<TruncatedPointModule, PointsError> {
    if s.is_empty() || s.letters().iter().any(|&l| l >= 3) {
        return Err(PointsError::NotNormalWord);
    }
    if s.letters().windows(2).any(|p| p[0] == p[1]) {
        return Err(PointsError::NotNormalWord);
    }
    Ok(TruncatedPointModule {
        action: s.letters().iter().map(|&l| ProjPoint::unit(l)).collect(),
    })
}

/// The complement of one normal word: all other normal words of the same
/// length, realized lazily.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordComplement {
    base: Word,
}

impl WordComplement {
    pub fn new(base: Word) -> Result<Self, PointsError> {
        special_module_for_word(&base)?;
        Ok(WordComplement { base })
    }

    pub fn base(&self) -> &Word {
        &self.base
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.base.len()
            && *w != self.base
            && MonomialAlgebra::squares(3).is_normal(w)
    }

    /// Enumerates the complement.
    pub fn words(&self) -> Vec<Word> {
        MonomialAlgebra::squares(3)
            .normal_words(self.base.len())
            .into_iter()
            .filter(|w| *w != self.base)
            .collect()
    }
}

/// Dimension of the joint kernel of the bottom-evaluation maps of the given
/// modules on the degree-`n` part of the squared-generator algebra.
pub fn joint_annihilator_dimension(modules: &[TruncatedPointModule], n: usize) -> usize {
    let algebra = MonomialAlgebra::squares(3);
    let basis = algebra.normal_words(n);
    if basis.is_empty() {
        return 0;
    }
    // One row per basis word: its evaluations under all modules. The kernel
    // of the resulting matrix (acting on coefficient vectors) is the space
    // of elements killed by every module.
    let mut columns: Vec<Vec<EisensteinScalar>> = Vec::with_capacity(basis.len());
    for word in &basis {
        columns.push(modules.iter().map(|m| m.act_from_bottom(word)).collect());
    }
    basis.len() - linalg::rank(columns)
}

/// Dimension of the space of degree-`n` elements annihilated by every
/// special truncated module of length `n + 1`; this is always zero, which is
/// what the operation certifies.
pub fn annihilator_degree(n: usize) -> usize {
    assert!(n >= 1, "degree must be positive");
    let algebra = MonomialAlgebra::squares(3);
    let modules: Vec<TruncatedPointModule> = algebra
        .normal_words(n)
        .iter()
        .map(|s| special_module_for_word(s).expect("normal words are admissible"))
        .collect();
    joint_annihilator_dimension(&modules, n)
}

/// Graphviz rendering of the successor rule as a six-state automaton: three
/// corner states, three edge states (a generic point of the edge), and an
/// arrow for every admissible transition.
pub fn successor_automaton_dot() -> String {
    use alloc::format;
    let corner_name = |i: usize| ["p100", "p010", "p001"][i];
    let corner_label = |i: usize| ["(1,0,0)", "(0,1,0)", "(0,0,1)"][i];
    let line_name = |l: Line| match l {
        Line::U => "lineU",
        Line::V => "lineV",
        Line::W => "lineW",
    };
    let mut out = String::from("digraph successors {\n");
    for i in 0..3 {
        out.push_str(&format!("  {} [label=\"{}\"];\n", corner_name(i), corner_label(i)));
    }
    for l in Line::ALL {
        out.push_str(&format!("  {} [label=\"{}\"];\n", line_name(l), l));
    }
    // Corner -> both corners of the opposite edge, and the edge itself.
    for i in 0..3 {
        let opposite = Line::from_index(i);
        for j in 0..3 {
            if j != i {
                out.push_str(&format!("  {} -> {};\n", corner_name(i), corner_name(j)));
            }
        }
        out.push_str(&format!("  {} -> {};\n", corner_name(i), line_name(opposite)));
    }
    // Edge -> the opposite corner.
    for l in Line::ALL {
        out.push_str(&format!("  {} -> {};\n", line_name(l), corner_name(l.index())));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::from_ints(a, b, c).unwrap()
    }

    #[test]
    fn classification_by_vanishing_coordinates() {
        assert_eq!(
            classify_point(&pt(1, 0, 0)),
            PointClass::IntersectionPoint(Line::V, Line::W)
        );
        assert_eq!(classify_point(&pt(0, 1, 1)), PointClass::GenericOnLine(Line::U));
        assert_eq!(classify_point(&pt(1, 1, 1)), PointClass::OffTriangle);
    }

    #[test]
    fn successor_rule() {
        assert_eq!(
            successors(&pt(1, 0, 0)).unwrap(),
            SuccessorSet::AnyPointOn(Line::U)
        );
        let generic = ProjPoint::new(
            EisensteinScalar::zero(),
            EisensteinScalar::one(),
            EisensteinScalar::omega(),
        )
        .unwrap();
        assert_eq!(
            successors(&generic).unwrap(),
            SuccessorSet::Single(pt(1, 0, 0))
        );
        assert_eq!(successors(&pt(1, 1, 1)).unwrap_err(), PointsError::OffTriangle);
    }

    #[test]
    fn sequence_validation() {
        assert!(validate_sequence(&[pt(1, 0, 0), pt(0, 1, 0), pt(1, 0, 0)]));
        assert!(validate_sequence(&[pt(1, 0, 0), pt(0, 1, 1), pt(1, 0, 0)]));
        assert!(!validate_sequence(&[pt(1, 0, 0), pt(1, 0, 0)]));
        // A single point is vacuously fine, even off the triangle.
        assert!(validate_sequence(&[pt(1, 1, 1)]));
    }

    #[test]
    fn module_oracle_agrees_on_mixed_sequences() {
        let cases = vec![
            vec![pt(1, 0, 0), pt(0, 1, 0), pt(1, 0, 0)],
            vec![pt(1, 0, 0), pt(0, 1, 1), pt(1, 0, 0)],
            vec![pt(1, 0, 0), pt(0, 1, 1), pt(0, 1, 0)],
            vec![pt(1, 0, 0), pt(1, 0, 0)],
            vec![pt(1, 1, 1), pt(1, 0, 0)],
            vec![pt(0, 1, 1), pt(1, 0, 0), pt(0, 0, 1)],
            vec![pt(0, 1, 1), pt(0, 0, 1)],
        ];
        for seq in cases {
            assert_eq!(
                validate_sequence(&seq),
                sequence_module_is_valid(&seq),
                "disagreement on {:?}",
                seq
            );
        }
    }

    #[test]
    fn successor_cycle_from_a_generic_point() {
        // Generic on an edge -> opposite corner -> the same edge again.
        for l in Line::ALL {
            let mut coords = [
                EisensteinScalar::from_int(1),
                EisensteinScalar::from_int(2),
                EisensteinScalar::omega(),
            ];
            coords[l.index()] = EisensteinScalar::zero();
            let generic =
                ProjPoint::new(coords[0].clone(), coords[1].clone(), coords[2].clone()).unwrap();
            let SuccessorSet::Single(corner) = successors(&generic).unwrap() else {
                panic!("generic points have a unique successor");
            };
            assert_eq!(corner, l.opposite_corner());
            assert_eq!(
                successors(&corner).unwrap(),
                SuccessorSet::AnyPointOn(l),
                "the corner leads back to the edge it avoids"
            );
        }
    }

    #[test]
    fn special_sequence_counts() {
        assert_eq!(special_sequences(0).len(), 3);
        assert_eq!(special_sequences(2).len(), 12);
        for n in 0..=6 {
            let seqs = special_sequences(n);
            assert_eq!(BigInt::from(seqs.len()), special_sequence_count(n));
            assert!(seqs.iter().all(|s| validate_sequence(s)));
        }
    }

    #[test]
    fn special_module_for_short_words() {
        let m = special_module_for_word(&Word::new(vec![0, 1])).unwrap();
        assert_eq!(m.point_sequence()[0], pt(1, 0, 0));
        assert_eq!(m.point_sequence()[1], pt(0, 1, 0));
        assert_eq!(m.length(), 3);
        let single = special_module_for_word(&Word::new(vec![0])).unwrap();
        assert_eq!(single.length(), 2);
        assert!(single.act_from_bottom(&Word::new(vec![0])).is_one());
        assert!(single.act_from_bottom(&Word::new(vec![1])).is_zero());
        assert_eq!(
            special_module_for_word(&Word::new(vec![0, 0])).unwrap_err(),
            PointsError::NotNormalWord
        );
    }

    #[test]
    fn module_separates_its_own_word() {
        let s = Word::new(vec![0, 1, 0]);
        let m = special_module_for_word(&s).unwrap();
        let complement = WordComplement::new(s.clone()).unwrap();
        let others = complement.words();
        assert_eq!(others.len(), 11);
        assert!(!m.act_from_bottom(&s).is_zero());
        for t in &others {
            assert!(complement.contains(t));
            assert!(m.act_from_bottom(t).is_zero(), "{t:?} should die");
        }
    }

    #[test]
    fn annihilator_vanishes() {
        for n in 1..=5 {
            assert_eq!(annihilator_degree(n), 0, "degree {}", n);
        }
    }

    #[test]
    fn restricted_family_leaves_a_large_kernel() {
        let n = 4;
        let s = Word::new(vec![0, 1, 0, 1]);
        let single = vec![special_module_for_word(&s).unwrap()];
        let expected = 3 * 2usize.pow(n as u32 - 1) - 1;
        assert_eq!(joint_annihilator_dimension(&single, n), expected);
    }

    #[test]
    fn automaton_has_six_states_and_twelve_edges() {
        let dot = successor_automaton_dot();
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 12);
    }
}

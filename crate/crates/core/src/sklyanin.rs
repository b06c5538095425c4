//! The three-parameter family of quadratic algebras on `x, y, z` with
//! relations
//!
//! ```text
//! a*y*z + b*z*y + c*x*x
//! a*z*x + b*x*z + c*y*y
//! a*x*y + b*y*x + c*z*z
//! ```
//!
//! The twelve degenerate parameter points are the three coordinate points of
//! the projective plane together with the nine points where `a^3 = b^3 = c^3`.
//! Each degenerate member is isomorphic, by an explicit linear change of
//! generators, to one of two quadratic monomial algebras: squared-generator
//! relations when `a = b`, cyclic relations when `a != b`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::EisensteinScalar;
use crate::ncalg::{
    is_isomorphism_witness, LinearChange, NCPoly, NcError, Presentation, Word,
};

/// Projective parameters `(a, b, c)`, normalized so the first nonzero
/// coordinate is one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SklyaninParams {
    a: EisensteinScalar,
    b: EisensteinScalar,
    c: EisensteinScalar,
}

/// Which degeneracy condition a parameter point satisfies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegeneracyCondition {
    /// Exactly one coordinate is nonzero.
    CoordinatePoint,
    /// `a^3 = b^3 = c^3` (all coordinates nonzero).
    EqualCubes,
}

/// Classification of a parameter point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyClass {
    /// Not in the degeneracy locus.
    NonDegenerate,
    /// Degenerate with `a = b`: isomorphic to the squared-generator algebra.
    DegenerateSquares(DegeneracyCondition),
    /// Degenerate with `a != b`: isomorphic to the cyclic monomial algebra.
    DegenerateCycle(DegeneracyCondition),
}

impl FamilyClass {
    pub fn is_degenerate(&self) -> bool {
        !matches!(self, FamilyClass::NonDegenerate)
    }
}

impl fmt::Display for FamilyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyClass::NonDegenerate => write!(f, "non-degenerate"),
            FamilyClass::DegenerateSquares(DegeneracyCondition::CoordinatePoint) => {
                write!(f, "degenerate (coordinate point), type squares")
            }
            FamilyClass::DegenerateSquares(DegeneracyCondition::EqualCubes) => {
                write!(f, "degenerate (equal cubes), type squares")
            }
            FamilyClass::DegenerateCycle(DegeneracyCondition::CoordinatePoint) => {
                write!(f, "degenerate (coordinate point), type cycle")
            }
            FamilyClass::DegenerateCycle(DegeneracyCondition::EqualCubes) => {
                write!(f, "degenerate (equal cubes), type cycle")
            }
        }
    }
}

/// Errors from the family operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SklyaninError {
    /// `(0, 0, 0)` is not a projective point.
    ZeroPoint,
    /// A witness change only exists for degenerate points.
    NotDegenerate,
    Nc(NcError),
}

impl fmt::Display for SklyaninError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SklyaninError::ZeroPoint => write!(f, "(0,0,0) is not a projective point"),
            SklyaninError::NotDegenerate => write!(f, "parameter point is not degenerate"),
            SklyaninError::Nc(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for SklyaninError {}

impl From<NcError> for SklyaninError {
    fn from(e: NcError) -> Self {
        SklyaninError::Nc(e)
    }
}

impl SklyaninParams {
    /// Normalizes projectively; rejects the zero triple.
    pub fn new(
        a: EisensteinScalar,
        b: EisensteinScalar,
        c: EisensteinScalar,
    ) -> Result<Self, SklyaninError> {
        let coords = [a, b, c];
        let first = coords
            .iter()
            .find(|s| !s.is_zero())
            .ok_or(SklyaninError::ZeroPoint)?;
        let inv = first.inverse().expect("nonzero scalar");
        let [a, b, c] = coords.clone().map(|s| &s * &inv);
        Ok(SklyaninParams { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, SklyaninError> {
        Self::new(
            EisensteinScalar::from_int(a),
            EisensteinScalar::from_int(b),
            EisensteinScalar::from_int(c),
        )
    }

    pub fn coords(&self) -> (&EisensteinScalar, &EisensteinScalar, &EisensteinScalar) {
        (&self.a, &self.b, &self.c)
    }
}

impl fmt::Display for SklyaninParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The three defining relations on generators `x, y, z`.
pub fn build_relations(p: &SklyaninParams) -> Presentation {
    let (a, b, c) = p.coords();
    let word = |l0: usize, l1: usize| Word::new(vec![l0, l1]);
    // Generators indexed x = 0, y = 1, z = 2.
    let rel = |pair: (usize, usize), square: usize| {
        NCPoly::from_terms([
            (word(pair.0, pair.1), a.clone()),
            (word(pair.1, pair.0), b.clone()),
            (word(square, square), c.clone()),
        ])
    };
    let relations = vec![rel((1, 2), 0), rel((2, 0), 1), rel((0, 1), 2)];
    Presentation::new(&["x", "y", "z"], relations).expect("relations are homogeneous quadratics")
}

/// Membership in the degeneracy locus, and the squares/cycle split by the
/// `a = b` test: coordinate points have at most one of `a, b` nonzero, so
/// `a = b` there means both vanish, which reproduces the direct inspection
/// of their monomial relations.
pub fn classify(p: &SklyaninParams) -> FamilyClass {
    let (a, b, c) = p.coords();
    let zeros = [a, b, c].iter().filter(|s| s.is_zero()).count();
    let condition = if zeros == 2 {
        Some(DegeneracyCondition::CoordinatePoint)
    } else if a.cube() == b.cube() && b.cube() == c.cube() {
        Some(DegeneracyCondition::EqualCubes)
    } else {
        None
    };
    match condition {
        None => FamilyClass::NonDegenerate,
        Some(cond) => {
            if a == b {
                FamilyClass::DegenerateSquares(cond)
            } else {
                FamilyClass::DegenerateCycle(cond)
            }
        }
    }
}

/// The full degeneracy locus: three coordinate points and the nine points
/// `(1, w^i, w^j)`.
pub fn degenerate_points() -> Vec<SklyaninParams> {
    let mut points = vec![
        SklyaninParams::from_ints(1, 0, 0).unwrap(),
        SklyaninParams::from_ints(0, 1, 0).unwrap(),
        SklyaninParams::from_ints(0, 0, 1).unwrap(),
    ];
    for i in 0..3 {
        for j in 0..3 {
            points.push(
                SklyaninParams::new(
                    EisensteinScalar::one(),
                    EisensteinScalar::omega_pow(i),
                    EisensteinScalar::omega_pow(j),
                )
                .unwrap(),
            );
        }
    }
    points
}

/// The squared-generator monomial presentation on `u, v, w`.
pub fn squares_presentation() -> Presentation {
    let words: Vec<Word> = (0..3).map(|l| Word::new(vec![l, l])).collect();
    Presentation::monomial(&["u", "v", "w"], &words).unwrap()
}

/// The cyclic monomial presentation `uv, vw, wu`.
pub fn cycle_presentation() -> Presentation {
    let words = vec![
        Word::new(vec![0, 1]),
        Word::new(vec![1, 2]),
        Word::new(vec![2, 0]),
    ];
    Presentation::monomial(&["u", "v", "w"], &words).unwrap()
}

/// The monomial presentation a degenerate point is isomorphic to.
pub fn target_presentation(class: &FamilyClass) -> Option<Presentation> {
    match class {
        FamilyClass::NonDegenerate => None,
        FamilyClass::DegenerateSquares(_) => Some(squares_presentation()),
        FamilyClass::DegenerateCycle(_) => Some(cycle_presentation()),
    }
}

/// The explicit change of generators carrying the target monomial relations
/// onto the relations of a degenerate point; row `i` expands the `i`-th
/// monomial generator in `x, y, z`.
///
/// Dispatch mirrors the isomorphism proof: coordinate points use a
/// permutation; `(1, 1, 1)` uses the discrete Fourier rows `(1, 1, 1)`,
/// `(1, w, w^2)`, `(1, w^2, w)`; `(1, 1, c)` uses rows `(1, 1, 1/c)`,
/// `(1, 1/c, 1)`, `(1/c, 1, 1)`; and `a != b` uses rows `(1/a, 1/b, 1/c)`,
/// `(1/b, 1/a, 1/c)`, `(abc, abc, 1)`.
pub fn witness_change(p: &SklyaninParams) -> Result<LinearChange, SklyaninError> {
    let class = classify(p);
    let (a, b, c) = p.coords();
    let one = EisensteinScalar::one();
    let zero = EisensteinScalar::zero();
    let rows: Vec<Vec<EisensteinScalar>> = match class {
        FamilyClass::NonDegenerate => return Err(SklyaninError::NotDegenerate),
        FamilyClass::DegenerateSquares(DegeneracyCondition::CoordinatePoint) => {
            // (0, 0, 1): relations are already x^2, y^2, z^2.
            vec![
                vec![one.clone(), zero.clone(), zero.clone()],
                vec![zero.clone(), one.clone(), zero.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
            ]
        }
        FamilyClass::DegenerateCycle(DegeneracyCondition::CoordinatePoint) => {
            if !a.is_zero() {
                // (1, 0, 0): relations yz, zx, xy; send u, v, w to y, z, x.
                vec![
                    vec![zero.clone(), one.clone(), zero.clone()],
                    vec![zero.clone(), zero.clone(), one.clone()],
                    vec![one.clone(), zero.clone(), zero.clone()],
                ]
            } else {
                // (0, 1, 0): relations zy, xz, yx; send u, v, w to z, y, x.
                vec![
                    vec![zero.clone(), zero.clone(), one.clone()],
                    vec![zero.clone(), one.clone(), zero.clone()],
                    vec![one.clone(), zero.clone(), zero.clone()],
                ]
            }
        }
        FamilyClass::DegenerateSquares(DegeneracyCondition::EqualCubes) => {
            if a == c {
                // (1, 1, 1): Fourier rows.
                let w = EisensteinScalar::omega();
                let w2 = EisensteinScalar::omega_pow(2);
                vec![
                    vec![one.clone(), one.clone(), one.clone()],
                    vec![one.clone(), w.clone(), w2.clone()],
                    vec![one.clone(), w2, w],
                ]
            } else {
                // (1, 1, c) with c != 1.
                let ci = c.inverse().expect("equal-cube coordinates are nonzero");
                vec![
                    vec![one.clone(), one.clone(), ci.clone()],
                    vec![one.clone(), ci.clone(), one.clone()],
                    vec![ci, one.clone(), one.clone()],
                ]
            }
        }
        FamilyClass::DegenerateCycle(DegeneracyCondition::EqualCubes) => {
            let ai = a.inverse().expect("nonzero");
            let bi = b.inverse().expect("nonzero");
            let ci = c.inverse().expect("nonzero");
            let abc = &(a * b) * c;
            vec![
                vec![ai.clone(), bi.clone(), ci.clone()],
                vec![bi, ai, ci],
                vec![abc.clone(), abc, one.clone()],
            ]
        }
    };
    Ok(LinearChange::new(rows)?)
}

/// Convenience: builds the witness and validates it against the classified
/// target, returning the full story for reports.
pub fn classify_with_witness(
    p: &SklyaninParams,
) -> Result<(FamilyClass, Option<(LinearChange, bool)>), SklyaninError> {
    let class = classify(p);
    if !class.is_degenerate() {
        return Ok((class, None));
    }
    let change = witness_change(p)?;
    let target = target_presentation(&class).expect("degenerate class has a target");
    let valid = is_isomorphism_witness(&build_relations(p), &target, &change)?;
    Ok((class, Some((change, valid))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::substitute;

    #[test]
    fn relations_at_symmetric_point() {
        let p = SklyaninParams::from_ints(1, 1, 1).unwrap();
        let pres = build_relations(&p);
        assert_eq!(
            pres.serialize(),
            "gens: x y z\nrel: x*x + y*z + z*y\nrel: x*z + y*y + z*x\nrel: x*y + y*x + z*z\n"
        );
    }

    #[test]
    fn relations_at_coordinate_points() {
        let squares = build_relations(&SklyaninParams::from_ints(0, 0, 1).unwrap());
        assert_eq!(squares.serialize(), "gens: x y z\nrel: x*x\nrel: y*y\nrel: z*z\n");
        let cycle = build_relations(&SklyaninParams::from_ints(1, 0, 0).unwrap());
        assert_eq!(cycle.serialize(), "gens: x y z\nrel: y*z\nrel: z*x\nrel: x*y\n");
    }

    #[test]
    fn classification_matches_the_locus() {
        let sym = SklyaninParams::from_ints(1, 1, 1).unwrap();
        assert_eq!(
            classify(&sym),
            FamilyClass::DegenerateSquares(DegeneracyCondition::EqualCubes)
        );
        let skew = SklyaninParams::new(
            EisensteinScalar::one(),
            EisensteinScalar::omega(),
            EisensteinScalar::one(),
        )
        .unwrap();
        assert_eq!(
            classify(&skew),
            FamilyClass::DegenerateCycle(DegeneracyCondition::EqualCubes)
        );
        let generic = SklyaninParams::from_ints(1, 2, 3).unwrap();
        assert_eq!(classify(&generic), FamilyClass::NonDegenerate);
    }

    #[test]
    fn locus_has_twelve_points() {
        let points = degenerate_points();
        assert_eq!(points.len(), 12);
        for p in &points {
            assert!(classify(p).is_degenerate(), "{} should be degenerate", p);
        }
        // The nine non-coordinate points satisfy the cube condition exactly.
        let cubes = points
            .iter()
            .filter(|p| matches!(classify(p), FamilyClass::DegenerateSquares(DegeneracyCondition::EqualCubes) | FamilyClass::DegenerateCycle(DegeneracyCondition::EqualCubes)))
            .count();
        assert_eq!(cubes, 9);
        for p in points.iter().skip(3) {
            let (a, b, c) = p.coords();
            assert_eq!(a.cube(), EisensteinScalar::one());
            assert_eq!(b.cube(), EisensteinScalar::one());
            assert_eq!(c.cube(), EisensteinScalar::one());
        }
    }

    #[test]
    fn every_degenerate_point_has_a_valid_witness() {
        for p in degenerate_points() {
            let (class, witness) = classify_with_witness(&p).unwrap();
            assert!(class.is_degenerate());
            let (change, valid) = witness.unwrap();
            assert!(valid, "witness for {} must validate", p);
            // The inverse change witnesses the reverse identification.
            let target = target_presentation(&class).unwrap();
            let reverse =
                is_isomorphism_witness(&target, &build_relations(&p), &change.inverse()).unwrap();
            assert!(reverse, "inverse witness for {} must validate", p);
        }
    }

    #[test]
    fn squares_of_fourier_rows_match_the_relation_combinations() {
        // At (1,1,1): (x+y+z)^2 = f1+f2+f3,
        // (x+wy+w^2 z)^2 = f1 + w^2 f2 + w f3,
        // (x+w^2 y+w z)^2 = f1 + w f2 + w^2 f3.
        let p = SklyaninParams::from_ints(1, 1, 1).unwrap();
        let pres = build_relations(&p);
        let rels = pres.relations();
        let change = witness_change(&p).unwrap();
        let w = EisensteinScalar::omega();
        let w2 = EisensteinScalar::omega_pow(2);
        let expected = [
            &(&rels[0] + &rels[1]) + &rels[2],
            &(&rels[0] + &rels[1].scale(&w2)) + &rels[2].scale(&w),
            &(&rels[0] + &rels[1].scale(&w)) + &rels[2].scale(&w2),
        ];
        for (i, want) in expected.iter().enumerate() {
            let gen = NCPoly::generator(i);
            let square = substitute(&(&gen * &gen), &change).unwrap();
            assert_eq!(&square, want, "square {}", i);
        }
    }

    #[test]
    fn squares_of_case_two_change_match_the_scaled_relations() {
        // At (1, 1, c), writing d = 1/c:
        //   (x + y + dz)^2 = d f1 + d f2 + f3
        //   (x + dy + z)^2 = d f1 + f2 + d f3
        //   (dx + y + z)^2 = f1 + d f2 + d f3
        for k in [1u32, 2] {
            let c = EisensteinScalar::omega_pow(k);
            let p = SklyaninParams::new(
                EisensteinScalar::one(),
                EisensteinScalar::one(),
                c.clone(),
            )
            .unwrap();
            let pres = build_relations(&p);
            let rels = pres.relations();
            let change = witness_change(&p).unwrap();
            let d = c.inverse().unwrap();
            let one = EisensteinScalar::one();
            let coeffs = [
                [d.clone(), d.clone(), one.clone()],
                [d.clone(), one.clone(), d.clone()],
                [one.clone(), d.clone(), d.clone()],
            ];
            for (i, expect) in coeffs.iter().enumerate() {
                let gen = NCPoly::generator(i);
                let square = substitute(&(&gen * &gen), &change).unwrap();
                let expected = &(&rels[0].scale(&expect[0]) + &rels[1].scale(&expect[1]))
                    + &rels[2].scale(&expect[2]);
                assert_eq!(square, expected, "square {} at c = w^{}", i, k);
            }
        }
    }

    #[test]
    fn case_three_products_match_the_relation_combinations() {
        // At any cycle point, with u, v, w the witness rows:
        //   uv = (f1 + f2)/(abc) + f3
        //   vw = a f1 + b f2 + c f3
        //   wu = b f1 + a f2 + c f3
        let p = SklyaninParams::new(
            EisensteinScalar::one(),
            EisensteinScalar::omega(),
            EisensteinScalar::omega_pow(2),
        )
        .unwrap();
        let (a, b, c) = p.coords();
        let (a, b, c) = (a.clone(), b.clone(), c.clone());
        let pres = build_relations(&p);
        let rels = pres.relations();
        let change = witness_change(&p).unwrap();
        let u = NCPoly::generator(0);
        let v = NCPoly::generator(1);
        let w = NCPoly::generator(2);
        let abc_inv = (&(&a * &b) * &c).inverse().unwrap();
        let uv = substitute(&(&u * &v), &change).unwrap();
        let expected_uv = &(&rels[0].scale(&abc_inv) + &rels[1].scale(&abc_inv)) + &rels[2];
        assert_eq!(uv, expected_uv);
        let vw = substitute(&(&v * &w), &change).unwrap();
        let expected_vw = &(&rels[0].scale(&a) + &rels[1].scale(&b)) + &rels[2].scale(&c);
        assert_eq!(vw, expected_vw);
        let wu = substitute(&(&w * &u), &change).unwrap();
        let expected_wu = &(&rels[0].scale(&b) + &rels[1].scale(&a)) + &rels[2].scale(&c);
        assert_eq!(wu, expected_wu);
    }

    #[test]
    fn case_two_determinant_is_nonzero() {
        // det of the (1,1,c) rows is (1/c - 1)^2 (1/c + 2).
        for k in [1u32, 2] {
            let c = EisensteinScalar::omega_pow(k);
            let ci = c.inverse().unwrap();
            let diff = &ci - &EisensteinScalar::one();
            let det = &(&diff * &diff) * &(&ci + &EisensteinScalar::from_int(2));
            assert!(!det.is_zero());
        }
    }

    #[test]
    fn witness_requires_degeneracy() {
        let p = SklyaninParams::from_ints(1, 2, 3).unwrap();
        assert_eq!(witness_change(&p).unwrap_err(), SklyaninError::NotDegenerate);
    }

    #[test]
    fn zero_point_rejected() {
        assert_eq!(
            SklyaninParams::from_ints(0, 0, 0).unwrap_err(),
            SklyaninError::ZeroPoint
        );
    }
}

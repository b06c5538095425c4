//! Span comparison of relation lists, and the witness check that a linear
//! change of generators identifies two presentations.

use alloc::vec::Vec;

use crate::exactnum::EisensteinScalar;

use super::change::{substitute, LinearChange};
use super::linalg;
use super::ncpoly::NCPoly;
use super::presentation::Presentation;
use super::NcError;

fn relation_rows(
    rels: &[NCPoly],
    generator_count: usize,
    degree: usize,
) -> Result<Vec<Vec<EisensteinScalar>>, NcError> {
    let mut rows = Vec::with_capacity(rels.len());
    for r in rels {
        if !r.is_zero() && r.homogeneous_degree() != Some(degree) {
            return Err(NcError::InhomogeneousInput);
        }
        if r.max_letter().is_some_and(|m| m >= generator_count) {
            return Err(NcError::DimensionMismatch);
        }
        rows.push(r.coefficient_vector(generator_count, degree));
    }
    Ok(rows)
}

/// Whether two lists of degree-`degree` polynomials over `generator_count`
/// generators span the same subspace of the word space.
pub fn span_equal(
    rels1: &[NCPoly],
    rels2: &[NCPoly],
    generator_count: usize,
    degree: usize,
) -> Result<bool, NcError> {
    let a = relation_rows(rels1, generator_count, degree)?;
    let b = relation_rows(rels2, generator_count, degree)?;
    Ok(linalg::same_row_space(&a, &b))
}

/// Whether `change` witnesses an isomorphism `source ≅ target`.
///
/// Row `i` of `change` expands the `i`-th generator of `target` inside the
/// degree-one space of `source`; the check is that the target relations,
/// rewritten through that expansion, span exactly the source relations. The
/// witness direction is immaterial: `change.inverse()` witnesses the reverse.
pub fn is_isomorphism_witness(
    source: &Presentation,
    target: &Presentation,
    change: &LinearChange,
) -> Result<bool, NcError> {
    let g = source.generator_count();
    if target.generator_count() != g || change.dim() != g {
        return Err(NcError::DimensionMismatch);
    }
    if source.relations().is_empty() && target.relations().is_empty() {
        return Ok(true);
    }
    let (Some(ds), Some(dt)) = (source.uniform_relation_degree(), target.uniform_relation_degree())
    else {
        return Err(NcError::InhomogeneousInput);
    };
    if ds != dt {
        return Ok(false);
    }
    let mapped: Result<Vec<NCPoly>, NcError> =
        target.relations().iter().map(|r| substitute(r, change)).collect();
    span_equal(&mapped?, source.relations(), g, ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::parse_presentation;
    use alloc::vec;
    use alloc::vec::Vec;

    fn omega() -> EisensteinScalar {
        EisensteinScalar::omega()
    }

    fn omega2() -> EisensteinScalar {
        EisensteinScalar::omega_pow(2)
    }

    fn one() -> EisensteinScalar {
        EisensteinScalar::one()
    }

    /// f1, f2, f3 at parameters (1, 1, 1) on generators x, y, z.
    fn symmetric_relations() -> Vec<NCPoly> {
        parse_presentation(
            "gens: x y z\n\
             rel: y*z + z*y + x*x\n\
             rel: z*x + x*z + y*y\n\
             rel: x*y + y*x + z*z",
        )
        .unwrap()
        .relations()
        .to_vec()
    }

    #[test]
    fn fourier_combinations_span_the_same_space() {
        let f = symmetric_relations();
        let combos = vec![
            &(&f[0] + &f[1]) + &f[2],
            &(&f[0] + &f[1].scale(&omega2())) + &f[2].scale(&omega()),
            &(&f[0] + &f[1].scale(&omega())) + &f[2].scale(&omega2()),
        ];
        assert!(span_equal(&combos, &f, 3, 2).unwrap());
    }

    #[test]
    fn distinct_relations_do_not_span() {
        let f = symmetric_relations();
        assert!(!span_equal(&f[..1].to_vec(), &f[1..2].to_vec(), 3, 2).unwrap());
    }

    #[test]
    fn scaling_does_not_change_the_span() {
        let f = symmetric_relations();
        let doubled = vec![f[0].scale(&EisensteinScalar::from_int(2))];
        assert!(span_equal(&f[..1].to_vec(), &doubled, 3, 2).unwrap());
    }

    #[test]
    fn inhomogeneous_input_is_rejected() {
        let mixed = parse_presentation("gens: x\nrel: x*x").unwrap().relations().to_vec();
        assert_eq!(
            span_equal(&mixed, &mixed, 1, 3).unwrap_err(),
            NcError::InhomogeneousInput
        );
    }

    #[test]
    fn fourier_witness_identifies_symmetric_parameters_with_squares() {
        let source = parse_presentation(
            "gens: x y z\n\
             rel: y*z + z*y + x*x\n\
             rel: z*x + x*z + y*y\n\
             rel: x*y + y*x + z*z",
        )
        .unwrap();
        let target = parse_presentation("gens: u v w\nrel: u*u\nrel: v*v\nrel: w*w").unwrap();
        let change = LinearChange::new(vec![
            vec![one(), one(), one()],
            vec![one(), omega(), omega2()],
            vec![one(), omega2(), omega()],
        ])
        .unwrap();
        assert!(is_isomorphism_witness(&source, &target, &change).unwrap());
        // And symmetrically with the inverse change.
        assert!(is_isomorphism_witness(&target, &source, &change.inverse()).unwrap());
    }

    #[test]
    fn identity_is_not_a_witness_between_squares_and_cycle() {
        let squares = parse_presentation("gens: u v w\nrel: u*u\nrel: v*v\nrel: w*w").unwrap();
        let cycle = parse_presentation("gens: u v w\nrel: u*v\nrel: v*w\nrel: w*u").unwrap();
        let id = LinearChange::identity(3);
        assert!(!is_isomorphism_witness(&squares, &cycle, &id).unwrap());
    }
}

//! Stationary Bratteli diagrams and the K-theory of their direct limits.
//!
//! The limit of `Z^k -> Z^k -> ...` along an integer matrix `M` with nonzero
//! determinant is realized concretely as the increasing union of the
//! lattices `M^{-n} Z^k` inside `Q^k`. Membership in the union is decidable
//! exactly, which is the primary interface; the eigen decomposition is a
//! secondary descriptor computed only when the spectrum is rational.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{smith_normal_form, IntMatrix, Rational};

/// A stationary Bratteli diagram: one nonnegative incidence matrix repeated
/// at every level, plus the sizes at level zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BratteliDiagram {
    matrix: IntMatrix,
    initial_sizes: Vec<BigInt>,
}

/// Errors from the K-theory operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K0Error {
    /// The incidence matrix must be square and nonnegative with sizes
    /// matching the initial vector.
    MalformedDiagram,
    /// The lattice-chain realization needs `det != 0`.
    SingularMatrix,
    /// The characteristic polynomial has an irrational root; the descriptor
    /// is unavailable (membership still works).
    IrrationalSpectrum,
    /// A repeated root without a full eigenspace; no eigenbasis exists.
    RepeatedRoots,
}

impl fmt::Display for K0Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K0Error::MalformedDiagram => write!(f, "malformed Bratteli diagram"),
            K0Error::SingularMatrix => write!(f, "matrix has determinant zero"),
            K0Error::IrrationalSpectrum => write!(f, "characteristic polynomial has irrational roots"),
            K0Error::RepeatedRoots => write!(f, "repeated roots without a rational eigenbasis"),
        }
    }
}

impl core::error::Error for K0Error {}

impl BratteliDiagram {
    pub fn new(matrix: IntMatrix, initial_sizes: Vec<BigInt>) -> Result<Self, K0Error> {
        if !matrix.is_square()
            || matrix.rows() != initial_sizes.len()
            || !matrix.is_nonnegative()
        {
            return Err(K0Error::MalformedDiagram);
        }
        Ok(BratteliDiagram { matrix, initial_sizes })
    }

    pub fn from_i64(matrix: &[Vec<i64>], initial: &[i64]) -> Result<Self, K0Error> {
        Self::new(
            IntMatrix::from_rows(matrix),
            initial.iter().map(|&x| BigInt::from(x)).collect(),
        )
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn initial_sizes(&self) -> &[BigInt] {
        &self.initial_sizes
    }

    /// Sizes at level `n`: the `n`-th power of the matrix applied to the
    /// initial sizes.
    pub fn level_sizes(&self, n: usize) -> Vec<BigInt> {
        let power = self.matrix.pow(n).expect("matrix is square");
        power.apply(&self.initial_sizes)
    }

    /// Graphviz rendering of levels `0..=levels`, one ranked row per level,
    /// nodes labeled by size, and one edge per unit of the incidence matrix.
    pub fn to_dot(&self, levels: usize) -> String {
        let k = self.matrix.rows();
        let mut out = String::from("graph bratteli {\n  rankdir=TB;\n");
        for n in 0..=levels {
            let sizes = self.level_sizes(n);
            out.push_str("  { rank=same;");
            for (i, size) in sizes.iter().enumerate() {
                out.push_str(&format!(" l{}_{} [label=\"{}\"];", n, i, size));
            }
            out.push_str(" }\n");
        }
        for n in 0..levels {
            for r in 0..k {
                for c in 0..k {
                    let mult: usize = self.matrix.entry(r, c).try_into().expect("nonnegative");
                    for _ in 0..mult {
                        out.push_str(&format!("  l{}_{} -- l{}_{};\n", n, c, n + 1, r));
                    }
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Primitivity test: the diagram's limit is simple exactly when some power
/// of the matrix is entrywise positive. Returns the least such power within
/// the Wielandt-style bound `k^2`, or `None`.
pub fn is_simple_stationary(m: &IntMatrix) -> (bool, Option<usize>) {
    assert!(m.is_square() && m.is_nonnegative(), "need a square nonnegative matrix");
    let bound = m.rows() * m.rows();
    let mut power = IntMatrix::identity(m.rows());
    for n in 1..=bound {
        power = &power * m;
        if power.is_strictly_positive() {
            return (true, Some(n));
        }
    }
    (false, None)
}

/// Least `n <= bound` with `M^n v` integral, certifying membership of `v` in
/// the union of the lattices `M^{-n} Z^k`, or `None` if no such `n` exists
/// within the bound.
pub fn limit_membership(
    m: &IntMatrix,
    v: &[Rational],
    bound: usize,
) -> Result<Option<usize>, K0Error> {
    if !m.is_square() || v.len() != m.rows() {
        return Err(K0Error::MalformedDiagram);
    }
    if m.det().expect("square").is_zero() {
        return Err(K0Error::SingularMatrix);
    }
    let mut current = v.to_vec();
    for n in 0..=bound {
        if current.iter().all(|x| x.is_integer()) {
            return Ok(Some(n));
        }
        current = m.apply_rational(&current);
    }
    Ok(None)
}

/// Orders of the successive quotients `M^{-(i+1)} Z^k / M^{-i} Z^k` for
/// `i < n`, each computed from the invariant factors of consecutive powers;
/// every entry equals `|det M|`.
pub fn lattice_chain_quotients(m: &IntMatrix, n: usize) -> Result<Vec<BigInt>, K0Error> {
    if !m.is_square() {
        return Err(K0Error::MalformedDiagram);
    }
    if m.det().expect("square").is_zero() {
        return Err(K0Error::SingularMatrix);
    }
    let order = |power: &IntMatrix| -> BigInt {
        smith_normal_form(power).invariant_factors().iter().product()
    };
    let mut out = Vec::with_capacity(n);
    let mut prev = BigInt::one(); // order for M^0 = identity
    let mut power = IntMatrix::identity(m.rows());
    for _ in 0..n {
        power = &power * m;
        let next = order(&power);
        out.push(&next / &prev);
        prev = next;
    }
    Ok(out)
}

/// One eigenvalue of `M^period` with a primitive integer eigenvector and the
/// subgroup of the rationals it contributes to the limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenComponent {
    pub eigenvalue: BigInt,
    pub eigenvector: Vec<BigInt>,
    /// `Z` for eigenvalue of modulus one, `Z[1/λ]` otherwise.
    pub component: String,
}

/// Eigen decomposition of `M^period` as a descriptor for the direct limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionGroupDescriptor {
    pub rank: usize,
    pub period: usize,
    pub eigen_data: Vec<EigenComponent>,
    /// Index in `Z^rank` of the lattice spanned by the eigenvectors, via the
    /// Smith normal form of the eigenvector matrix. An index above one means
    /// the direct-sum reading is only valid up to that finite index; callers
    /// should surface it as a caveat rather than a proof.
    pub eigenbasis_index: BigInt,
}

impl DimensionGroupDescriptor {
    /// Rendering like `Z[1/8] (+) Z (+) Z`.
    pub fn component_summary(&self) -> String {
        let parts: Vec<&str> = self.eigen_data.iter().map(|e| e.component.as_str()).collect();
        parts.join(" (+) ")
    }
}

/// Computes the eigen descriptor of `M^period`.
///
/// Requires the characteristic polynomial of `M^period` to split over the
/// rationals (its roots are then integers, the matrix being integral) and
/// each eigenspace to be as large as the root's multiplicity. Eigenvalues
/// are listed in decreasing absolute value, largest first.
pub fn dimension_group(m: &IntMatrix, period: usize) -> Result<DimensionGroupDescriptor, K0Error> {
    if !m.is_square() || period == 0 {
        return Err(K0Error::MalformedDiagram);
    }
    if m.det().expect("square").is_zero() {
        return Err(K0Error::SingularMatrix);
    }
    let k = m.rows();
    let p = m.pow(period).expect("square");
    let char_coeffs = char_poly(&p);
    let roots = rational_roots(&char_coeffs)?;
    let mut eigen_data = Vec::new();
    let mut vectors: Vec<Vec<BigInt>> = Vec::new();
    for (root, multiplicity) in &roots {
        let shifted = shift_by(&p, root);
        let basis = shifted.integer_kernel_basis();
        if basis.len() != *multiplicity {
            return Err(K0Error::RepeatedRoots);
        }
        for v in basis {
            let component = if root.abs().is_one() {
                String::from("Z")
            } else {
                format!("Z[1/{}]", root.abs())
            };
            eigen_data.push(EigenComponent {
                eigenvalue: root.clone(),
                eigenvector: v.clone(),
                component,
            });
            vectors.push(v);
        }
    }
    let mut flat = Vec::with_capacity(k * k);
    for v in &vectors {
        flat.extend(v.iter().cloned());
    }
    let eig_matrix = IntMatrix::new(vectors.len(), k, flat);
    let eigenbasis_index: BigInt =
        smith_normal_form(&eig_matrix).invariant_factors().iter().product();
    Ok(DimensionGroupDescriptor { rank: k, period, eigen_data, eigenbasis_index })
}

/// `M - λI`.
fn shift_by(m: &IntMatrix, lambda: &BigInt) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        *out.entry_mut(i, i) -= lambda;
    }
    out
}

/// Coefficients of `det(tI - M)`, low degree first, by the trace recursion
/// (Faddeev-LeVerrier) over the rationals; the output is integral.
fn char_poly(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.rows();
    // c[n] = 1; iterate N_0 = 0, N_{i+1} = M (N_i + c_{n-i} I).
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut rational_coeffs = alloc::vec![Rational::zero(); n + 1];
    rational_coeffs[n] = Rational::one();
    let mut work: Vec<Vec<Rational>> =
        (0..n).map(|_| alloc::vec![Rational::zero(); n]).collect();
    for step in 1..=n {
        // work = M * (work + c_{n-step+1} I)
        let mut shifted = work.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = &row[i] + &rational_coeffs[n - step + 1];
        }
        let mut next = alloc::vec![alloc::vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for l in 0..n {
                    acc += Rational::from(m.entry(i, l).clone()) * &shifted[l][j];
                }
                next[i][j] = acc;
            }
        }
        let trace: Rational = (0..n).map(|i| next[i][i].clone()).sum();
        rational_coeffs[n - step] = -trace / Rational::from(BigInt::from(step as i64));
        work = next;
    }
    for (i, c) in rational_coeffs.iter().enumerate() {
        debug_assert!(c.is_integer(), "characteristic coefficients are integers");
        coeffs[i] = c.to_integer();
    }
    coeffs
}

/// All roots of a monic integer polynomial with multiplicity, or an error if
/// it does not split over the rationals. Rational roots of a monic integer
/// polynomial are integers dividing the constant term.
fn rational_roots(coeffs: &[BigInt]) -> Result<Vec<(BigInt, usize)>, K0Error> {
    let mut remaining = coeffs.to_vec();
    let mut roots: Vec<(BigInt, usize)> = Vec::new();
    while remaining.len() > 1 {
        let root = find_integer_root(&remaining).ok_or(K0Error::IrrationalSpectrum)?;
        remaining = synthetic_divide(&remaining, &root);
        match roots.iter_mut().find(|(r, _)| *r == root) {
            Some((_, mult)) => *mult += 1,
            None => roots.push((root.clone(), 1)),
        }
    }
    roots.sort_by(|a, b| b.0.abs().cmp(&a.0.abs()).then(b.0.cmp(&a.0)));
    Ok(roots)
}

fn eval_at(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn find_integer_root(coeffs: &[BigInt]) -> Option<BigInt> {
    let constant = &coeffs[0];
    if constant.is_zero() {
        return Some(BigInt::zero());
    }
    let limit = constant.abs();
    let mut d = BigInt::one();
    while &d <= &limit {
        if (&limit % &d).is_zero() {
            for cand in [d.clone(), -d.clone()] {
                if eval_at(coeffs, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
        d += 1;
    }
    None
}

/// Divides a monic polynomial by `x - root` (exact by construction).
fn synthetic_divide(coeffs: &[BigInt], root: &BigInt) -> Vec<BigInt> {
    let n = coeffs.len() - 1;
    let mut out = alloc::vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        let c = &coeffs[i + 1] + &carry;
        carry = &c * root;
        out[i] = c;
    }
    debug_assert!((&coeffs[0] + &carry).is_zero(), "root must divide exactly");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};
    use alloc::vec;

    fn incidence() -> IntMatrix {
        IntMatrix::from_i64(3, 3, &[0, 1, 1, 1, 0, 1, 1, 1, 0])
    }

    fn diagram() -> BratteliDiagram {
        BratteliDiagram::new(incidence(), vec![BigInt::one(); 3]).unwrap()
    }

    #[test]
    fn level_sizes_double_along_the_diagram() {
        let d = diagram();
        assert_eq!(d.level_sizes(0), vec![BigInt::from(1); 3]);
        assert_eq!(d.level_sizes(1), vec![BigInt::from(2); 3]);
        assert_eq!(d.level_sizes(2), vec![BigInt::from(4); 3]);
    }

    #[test]
    fn level_sizes_compose_additively() {
        let d = diagram();
        for (a, b) in [(1usize, 2usize), (2, 3), (0, 4)] {
            let via_power = d.matrix().pow(a).unwrap().apply(&d.level_sizes(b));
            assert_eq!(d.level_sizes(a + b), via_power);
        }
    }

    #[test]
    fn doubling_chain() {
        let d = BratteliDiagram::from_i64(&[vec![2]], &[1]).unwrap();
        assert_eq!(d.level_sizes(3), vec![BigInt::from(8)]);
        let sizes: Vec<BigInt> = (0..4).map(|n| d.level_sizes(n)[0].clone()).collect();
        assert_eq!(sizes, vec![1.into(), 2.into(), 4.into(), 8.into()]);
    }

    #[test]
    fn the_two_standard_diagrams_share_their_level_sizes() {
        // The loops-and-cycle incidence matrix also has row sums two, so its
        // stationary diagram grows identically from (1,1,1).
        let other = BratteliDiagram::from_i64(
            &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]],
            &[1, 1, 1],
        )
        .unwrap();
        for n in 0..=4 {
            assert_eq!(other.level_sizes(n), diagram().level_sizes(n));
        }
    }

    #[test]
    fn simplicity_detection() {
        assert_eq!(is_simple_stationary(&incidence()), (true, Some(2)));
        assert_eq!(is_simple_stationary(&IntMatrix::identity(3)), (false, None));
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(is_simple_stationary(&swap), (false, None));
    }

    #[test]
    fn membership_certificates() {
        let m = incidence();
        let eighth = ratio(1, 8);
        let v = vec![eighth.clone(), eighth.clone(), eighth];
        assert_eq!(limit_membership(&m, &v, 10).unwrap(), Some(3));
        let third = vec![ratio(1, 3), rat(0), rat(0)];
        assert_eq!(limit_membership(&m, &third, 24).unwrap(), None);
        let integral = vec![rat(-1), rat(1), rat(0)];
        assert_eq!(limit_membership(&m, &integral, 5).unwrap(), Some(0));
        // Odd primes never leave the denominators: det M = 2.
        for p in [3i64, 5, 7] {
            let v = vec![ratio(1, p), ratio(1, p), rat(1)];
            assert_eq!(limit_membership(&m, &v, 24).unwrap(), None, "prime {p}");
        }
    }

    #[test]
    fn membership_needs_nonzero_determinant() {
        let singular = IntMatrix::from_i64(2, 2, &[1, 1, 1, 1]);
        assert_eq!(
            limit_membership(&singular, &[rat(1), rat(1)], 3).unwrap_err(),
            K0Error::SingularMatrix
        );
    }

    #[test]
    fn quotient_orders_equal_the_determinant() {
        assert_eq!(
            lattice_chain_quotients(&incidence(), 3).unwrap(),
            vec![BigInt::from(2); 3]
        );
        let two = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(
            lattice_chain_quotients(&two, 4).unwrap(),
            vec![BigInt::from(2); 4]
        );
        assert_eq!(
            lattice_chain_quotients(&IntMatrix::identity(2), 3).unwrap(),
            vec![BigInt::one(); 3]
        );
    }

    #[test]
    fn characteristic_polynomial_of_the_incidence_matrix() {
        // det(tI - M) = t^3 - 3t - 2 = (t - 2)(t + 1)^2.
        assert_eq!(
            char_poly(&incidence()),
            vec![BigInt::from(-2), BigInt::from(-3), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn descriptor_for_the_cubed_incidence_matrix() {
        let d = dimension_group(&incidence(), 3).unwrap();
        assert_eq!(d.rank, 3);
        assert_eq!(d.period, 3);
        assert_eq!(d.eigenbasis_index, BigInt::from(3));
        assert_eq!(d.component_summary(), "Z[1/8] (+) Z (+) Z");
        let p3 = incidence().pow(3).unwrap();
        for e in &d.eigen_data {
            let image = p3.apply(&e.eigenvector);
            let scaled: Vec<BigInt> =
                e.eigenvector.iter().map(|x| x * &e.eigenvalue).collect();
            assert_eq!(image, scaled, "eigen equation for {:?}", e.eigenvalue);
        }
        assert_eq!(d.eigen_data[0].eigenvalue, BigInt::from(8));
        assert_eq!(d.eigen_data[0].eigenvector, vec![BigInt::one(); 3]);
    }

    #[test]
    fn descriptor_for_the_doubling_matrix() {
        let two = IntMatrix::from_i64(1, 1, &[2]);
        let d = dimension_group(&two, 1).unwrap();
        assert_eq!(d.component_summary(), "Z[1/2]");
        assert_eq!(d.eigenbasis_index, BigInt::one());
    }

    #[test]
    fn descriptor_for_the_identity() {
        let d = dimension_group(&IntMatrix::identity(3), 2).unwrap();
        assert_eq!(d.component_summary(), "Z (+) Z (+) Z");
        assert_eq!(d.eigenbasis_index, BigInt::one());
    }

    #[test]
    fn irrational_spectrum_is_reported() {
        // [[0, 1], [2, 0]] has eigenvalues ±sqrt(2).
        let m = IntMatrix::from_i64(2, 2, &[0, 1, 2, 0]);
        assert_eq!(dimension_group(&m, 1).unwrap_err(), K0Error::IrrationalSpectrum);
    }

    #[test]
    fn non_diagonalizable_is_reported() {
        // Jordan block: eigenvalue 1 with a one-dimensional eigenspace.
        let m = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert_eq!(dimension_group(&m, 1).unwrap_err(), K0Error::RepeatedRoots);
    }

    #[test]
    fn dot_output_levels() {
        let dot = diagram().to_dot(2);
        assert_eq!(dot.matches("rank=same").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 12);
        assert!(dot.contains("l0_0 [label=\"1\"]"));
        assert!(dot.contains("l2_0 [label=\"4\"]"));
    }
}

//! Dense integer matrices with exact arithmetic: products, powers,
//! determinants, rational kernels, and Smith normal form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// A `rows x cols` matrix of arbitrary-precision integers in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// Builds from a slice of equal-length rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&e| BigInt::from(e)));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|e| !e.is_negative())
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.data.iter().all(|e| e.is_positive())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.entry(r, c).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.entry_mut(c, r) = self.entry(r, c).clone();
            }
        }
        t
    }

    /// Matrix-vector product over the integers.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.entry(r, c) * &v[c]).sum())
            .collect()
    }

    /// Matrix-vector product over the rationals.
    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| Rational::from(self.entry(r, c).clone()) * &v[c])
                    .sum()
            })
            .collect()
    }

    /// `self^n` for a square matrix, with `self^0` the identity.
    pub fn pow(&self, n: usize) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare);
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..n {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Sum of all entries; with powers of an adjacency matrix this counts
    /// paths.
    pub fn entry_sum(&self) -> BigInt {
        self.data.iter().sum()
    }

    /// Determinant by the fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NonSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        Ok(sign * m[(n - 1) * n + (n - 1)].clone())
    }

    /// A basis of primitive integer vectors for the rational kernel.
    ///
    /// Gauss-Jordan over the rationals, then each free-variable solution is
    /// scaled to integer entries with content one.
    pub fn integer_kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| (0..cols).map(|c| Rational::from(self.entry(r, c).clone())).collect())
            .collect();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap(r, p);
            }
            let inv = m[r][c].recip();
            for j in c..cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..cols {
                        let s = &m[r][j] * &f;
                        m[i][j] = &m[i][j] - &s;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            basis.push(primitive_integer_vector(&v));
        }
        basis
    }
}

/// Clears denominators and divides by the content, preferring a positive
/// leading nonzero entry... the sign is kept as produced by the solver so the
/// output is deterministic.
fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from(lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if content.is_zero() || content.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &content).collect()
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let add = a * rhs.entry(k, c);
                    *out.entry_mut(r, c) += add;
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
        }
        write!(f, "]")
    }
}

/// Unimodular `u`, diagonal `d`, unimodular `v` with `u * m * v = d`, the
/// diagonal nonnegative and each entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithNormalForm {
    /// Positive diagonal entries (the invariant factors).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.entry(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Smith normal form by pivot-and-reduce: the pivot is the smallest nonzero
/// entry in absolute value, ties broken by lowest `(row, col)`, which makes
/// the transforms deterministic.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    for k in 0..steps {
        loop {
            let Some((pr, pc)) = select_pivot(&a, k) else {
                break;
            };
            if pr != k {
                swap_rows(&mut a, k, pr);
                swap_rows(&mut u, k, pr);
            }
            if pc != k {
                swap_cols(&mut a, k, pc);
                swap_cols(&mut v, k, pc);
            }
            // Reduce the pivot column, then the pivot row. Remainders can
            // reappear, so loop until both are clear.
            let mut clean = true;
            for i in k + 1..rows {
                if !a.entry(i, k).is_zero() {
                    let q = div_round(a.entry(i, k), a.entry(k, k));
                    row_axpy(&mut a, i, k, &q);
                    row_axpy(&mut u, i, k, &q);
                    if !a.entry(i, k).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !a.entry(k, j).is_zero() {
                    let q = div_round(a.entry(k, j), a.entry(k, k));
                    col_axpy(&mut a, j, k, &q);
                    col_axpy(&mut v, j, k, &q);
                    if !a.entry(k, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Divisibility fix-up: fold a non-divisible entry into row k and
            // start the reduction over.
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(a.entry(i, j) % a.entry(k, k)).is_zero() {
                        let one = BigInt::from(-1);
                        row_axpy(&mut a, k, i, &one);
                        row_axpy(&mut u, k, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a.entry(k, k).is_negative() {
            negate_row(&mut a, k);
            negate_row(&mut u, k);
        }
    }
    SmithNormalForm { u, d: a, v }
}

/// Smallest nonzero entry of the trailing submatrix starting at `(k, k)`,
/// ties broken by `(row, col)` order.
fn select_pivot(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let x = a.entry(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if x.abs() < a.entry(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Rounded division, so |remainder| <= |divisor| / 2; keeps entries small.
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(n, d);
    if (BigInt::from(2) * r.abs()) > d.abs() {
        if (r.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..m.cols() {
        let (x, y) = (m.entry(a, c).clone(), m.entry(b, c).clone());
        *m.entry_mut(a, c) = y;
        *m.entry_mut(b, c) = x;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in 0..m.rows() {
        let (x, y) = (m.entry(r, a).clone(), m.entry(r, b).clone());
        *m.entry_mut(r, a) = y;
        *m.entry_mut(r, b) = x;
    }
}

/// row_i -= q * row_k
fn row_axpy(m: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    for c in 0..m.cols() {
        let s = q * m.entry(k, c);
        *m.entry_mut(i, c) -= s;
    }
}

/// col_j -= q * col_k
fn col_axpy(m: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    for r in 0..m.rows() {
        let s = q * m.entry(r, k);
        *m.entry_mut(r, j) -= s;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for c in 0..m.cols() {
        let x = -m.entry(r, c).clone();
        *m.entry_mut(r, c) = x;
    }
}

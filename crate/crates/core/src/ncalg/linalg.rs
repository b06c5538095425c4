//! Exact Gaussian elimination over the cube-root-of-unity field.
//!
//! Pivots are chosen first-nonzero (topmost row in the leftmost unfinished
//! column), so echelon forms, ranks, and kernels are deterministic. All
//! divisions are exact field divisions.

use alloc::vec::Vec;

use crate::exactnum::EisensteinScalar;

type Row = Vec<EisensteinScalar>;

/// Reduces `rows` in place to row-echelon form with pivots normalized to one
/// and returns the pivot columns.
pub fn row_echelon(rows: &mut [Row]) -> Vec<usize> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..height).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("pivot is nonzero");
        for j in col..width {
            rows[r][j] = &rows[r][j] * &inv;
        }
        for i in 0..height {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..width {
                    let s = &rows[r][j] * &f;
                    rows[i][j] = &rows[i][j] - &s;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == height {
            break;
        }
    }
    pivots
}

pub fn rank(mut rows: Vec<Row>) -> usize {
    row_echelon(&mut rows).len()
}

/// Rank of the two row sets stacked together.
pub fn rank_of_union(a: &[Row], b: &[Row]) -> usize {
    let mut rows: Vec<Row> = a.to_vec();
    rows.extend_from_slice(b);
    rank(rows)
}

/// Whether the two row sets span the same subspace.
pub fn same_row_space(a: &[Row], b: &[Row]) -> bool {
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    ra == rb && rank_of_union(a, b) == ra
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert(matrix: &[Row]) -> Option<Vec<Row>> {
    let n = matrix.len();
    let mut work: Vec<Row> = Vec::with_capacity(n);
    for (i, row) in matrix.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        let mut augmented = row.clone();
        augmented.extend((0..n).map(|j| {
            if i == j {
                EisensteinScalar::one()
            } else {
                EisensteinScalar::zero()
            }
        }));
        work.push(augmented);
    }
    let pivots = row_echelon(&mut work);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn is_invertible(matrix: &[Row]) -> bool {
    let n = matrix.len();
    rank(matrix.to_vec()) == n
}

/// A subspace given by an echelonized set of spanning rows, supporting
/// reduction of vectors to canonical coordinates on the complementary
/// (non-pivot) coordinates.
pub struct EchelonSpace {
    rows: Vec<Row>,
    pivots: Vec<usize>,
    complement: Vec<usize>,
}

impl EchelonSpace {
    pub fn new(mut rows: Vec<Row>, width: usize) -> Self {
        let pivots = row_echelon(&mut rows);
        rows.truncate(pivots.len());
        let complement = (0..width).filter(|c| !pivots.contains(c)).collect();
        EchelonSpace { rows, pivots, complement }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns indexing a basis of the quotient by this subspace.
    pub fn complement_columns(&self) -> &[usize] {
        &self.complement
    }

    /// Coordinates of `v + subspace` on the complement columns.
    pub fn reduce(&self, mut v: Row) -> Row {
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if !v[col].is_zero() {
                let f = v[col].clone();
                for j in col..v.len() {
                    let s = &row[j] * &f;
                    v[j] = &v[j] - &s;
                }
            }
        }
        self.complement.iter().map(|&c| v[c].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn e(a: i64, b: i64) -> EisensteinScalar {
        EisensteinScalar::new(crate::exactnum::rat(a), crate::exactnum::rat(b))
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![e(1, 0), e(2, 0)],
            vec![e(2, 0), e(4, 0)],
        ];
        assert_eq!(rank(rows), 1);
    }

    #[test]
    fn fourier_style_matrix_is_invertible() {
        // Rows (1,1,1), (1,w,w^2), (1,w^2,w).
        let w = EisensteinScalar::omega();
        let w2 = EisensteinScalar::omega_pow(2);
        let one = EisensteinScalar::one();
        let m = vec![
            vec![one.clone(), one.clone(), one.clone()],
            vec![one.clone(), w.clone(), w2.clone()],
            vec![one.clone(), w2.clone(), w.clone()],
        ];
        let inv = invert(&m).unwrap();
        // Check m * inv = identity.
        for i in 0..3 {
            for j in 0..3 {
                let mut sum = EisensteinScalar::zero();
                for k in 0..3 {
                    sum = &sum + &(&m[i][k] * &inv[k][j]);
                }
                assert_eq!(sum, if i == j { EisensteinScalar::one() } else { EisensteinScalar::zero() });
            }
        }
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        let m = vec![
            vec![e(1, 0), e(1, 0)],
            vec![e(1, 0), e(1, 0)],
        ];
        assert!(invert(&m).is_none());
        assert!(!is_invertible(&m));
    }

    #[test]
    fn echelon_space_reduction() {
        // Subspace spanned by (1, 1, 0); quotient coordinates on columns 1, 2.
        let space = EchelonSpace::new(vec![vec![e(1, 0), e(1, 0), e(0, 0)]], 3);
        assert_eq!(space.rank(), 1);
        assert_eq!(space.complement_columns(), &[1, 2]);
        let coords = space.reduce(vec![e(2, 0), e(3, 0), e(4, 0)]);
        assert_eq!(coords, vec![e(1, 0), e(4, 0)]);
    }
}

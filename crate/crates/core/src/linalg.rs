//! Exact linear algebra over prime fields and the rationals.
//!
//! Matrices are row-major `Vec<Vec<_>>`. Everything here is elimination over
//! a [`FieldTract`], so GF(p) and ℚ share one implementation.

use crate::tract::FieldTract;

/// Determinant of the square submatrix of `rows` on the columns `cols`.
pub fn minor<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>], cols: &[usize]) -> T::Elem {
    assert_eq!(rows.len(), cols.len(), "minor must be square");
    let mut m: Vec<Vec<T::Elem>> = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    determinant(field, &mut m)
}

/// Determinant by elimination; consumes the contents of `m`.
pub fn determinant<T: FieldTract>(field: &T, m: &mut [Vec<T::Elem>]) -> T::Elem {
    let k = m.len();
    let mut det = field.one();
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&i| !field.is_zero(&m[i][col])) else {
            return field.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = field.negate(&det);
        }
        let p = m[col][col].clone();
        det = field.mul(&det, &p);
        let p_inv = field.inv(&p).expect("nonzero pivot");
        for i in col + 1..k {
            if field.is_zero(&m[i][col]) {
                continue;
            }
            let factor = field.mul(&m[i][col], &p_inv);
            for j in col..k {
                let delta = field.mul(&factor, &m[col][j]);
                m[i][j] = field.sub(&m[i][j], &delta);
            }
        }
    }
    det
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>]) -> (Vec<Vec<T::Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<T::Elem>> = rows.to_vec();
    let width = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(p) = (next..m.len()).find(|&i| !field.is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(p, next);
        let inv = field.inv(&m[next][col]).expect("nonzero pivot");
        for v in m[next].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for i in 0..m.len() {
            if i == next || field.is_zero(&m[i][col]) {
                continue;
            }
            let factor = m[i][col].clone();
            for j in 0..width {
                let delta = field.mul(&factor, &m[next][j]);
                m[i][j] = field.sub(&m[i][j], &delta);
            }
        }
        pivots.push(col);
        next += 1;
        if next == m.len() {
            break;
        }
    }
    m.truncate(next);
    (m, pivots)
}

pub fn rank<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>]) -> usize {
    rref(field, rows).1.len()
}

/// Column rank of the columns `cols`.
pub fn column_rank<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>], cols: &[usize]) -> usize {
    let sub: Vec<Vec<T::Elem>> = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    rank(field, &sub)
}

/// A basis of `{x : rows · x = 0}` for vectors of length `width`, one vector
/// per free column, with a `1` in that column.
pub fn kernel<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>], width: usize) -> Vec<Vec<T::Elem>> {
    let (reduced, pivots) = rref(field, rows);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); width];
            x[f] = field.one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                x[p] = field.negate(&row[f]);
            }
            x
        })
        .collect()
}

/// Whether `x` lies in the row space of `rows`.
pub fn in_row_space<T: FieldTract>(field: &T, rows: &[Vec<T::Elem>], x: &[T::Elem]) -> bool {
    let mut extended = rows.to_vec();
    extended.push(x.to_vec());
    rank(field, &extended) == rank(field, rows)
}

/// Equality of row spaces, by comparing reduced echelon forms.
pub fn same_row_space<T: FieldTract>(field: &T, a: &[Vec<T::Elem>], b: &[Vec<T::Elem>]) -> bool {
    rref(field, a).0 == rref(field, b).0
}

/// A basis of `{y·A : (y·A)_i = 0 for i ∈ zeros}`, the subspace of the row
/// space of `A` vanishing on the given coordinates.
pub fn row_space_vanishing_on<T: FieldTract>(
    field: &T,
    rows: &[Vec<T::Elem>],
    zeros: &[usize],
) -> Vec<Vec<T::Elem>> {
    let r = rows.len();
    let width = rows.first().map_or(0, |row| row.len());
    // Conditions on y: sum_k y_k A[k][i] = 0 for i in zeros.
    let conditions: Vec<Vec<T::Elem>> = zeros
        .iter()
        .map(|&i| (0..r).map(|k| rows[k][i].clone()).collect())
        .collect();
    let ys = if conditions.is_empty() {
        (0..r)
            .map(|k| (0..r).map(|j| if j == k { field.one() } else { field.zero() }).collect())
            .collect()
    } else {
        kernel(field, &conditions, r)
    };
    let vectors: Vec<Vec<T::Elem>> = ys
        .iter()
        .map(|y| {
            (0..width)
                .map(|c| {
                    (0..r).fold(field.zero(), |acc, k| field.add(&acc, &field.mul(&y[k], &rows[k][c])))
                })
                .collect()
        })
        .collect();
    rref(field, &vectors).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tract::{PrimeField, Rationals};
    use num_bigint::BigInt;
    use num_rational::Ratio;

    fn q(v: i64) -> Ratio<BigInt> {
        Ratio::from_integer(BigInt::from(v))
    }

    /// Leibniz expansion, as an independent check of the elimination.
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(m.len())
            .into_iter()
            .map(|p| {
                let sign = if crate::subset::sort_sign(&p) { 1 } else { -1 };
                sign * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i64>()
            })
            .sum()
    }

    #[test]
    fn determinants_match_leibniz() {
        let field = Rationals::<BigInt>::new();
        let m = vec![vec![2, -1, 3], vec![0, 4, 1], vec![5, 2, -2]];
        let rows: Vec<Vec<_>> = m.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        assert_eq!(minor(&field, &rows, &[0, 1, 2]), q(leibniz(&m)));
        let f7 = PrimeField::new(7).unwrap();
        let rows7: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&v| f7.from_i64(v)).collect()).collect();
        assert_eq!(minor(&f7, &rows7, &[0, 1, 2]), f7.from_i64(leibniz(&m)));
    }

    #[test]
    fn kernels_and_ranks() {
        let f3 = PrimeField::new(3).unwrap();
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank(&f3, &rows), 2);
        let k = kernel(&f3, &rows, 3);
        assert_eq!(k, vec![vec![2, 2, 1]]);
        assert!(in_row_space(&f3, &rows, &[1, 1, 2]));
        assert!(!in_row_space(&f3, &rows, &[1, 1, 1]));
        let vanish = row_space_vanishing_on(&f3, &rows, &[0]);
        assert_eq!(vanish, vec![vec![0, 1, 1]]);
        assert!(same_row_space(&f3, &rows, &[vec![1, 1, 2], vec![0, 1, 1]]));
    }
}

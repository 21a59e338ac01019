//! Row-major square matrices over any [`FieldElement`], with exact elimination.

use crate::scalar::FieldElement;

#[derive(Debug, Clone, PartialEq)]
pub struct Dense<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: FieldElement> Dense<T> {
    pub fn zeros(n: usize) -> Self {
        Dense { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square matrix");
        Dense { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.n + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.n + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// The submatrix on rows `rows` and columns `cols`, which need not be square.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<T>> {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect()
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        Dense { n: idx.len(), data: self.block(idx, idx).into_iter().flatten().collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let mut acc = T::zero();
                for k in 0..self.n {
                    acc = acc.add(&self.get(r, k).mul(rhs.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(self.n, x.len());
        (0..self.n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Rank by forward row elimination.
    pub fn rank(&self) -> usize {
        rank_of_rows(self.block(&(0..self.n).collect::<Vec<_>>(), &(0..self.n).collect::<Vec<_>>()))
    }

    /// Rank computed on the transpose, i.e. by column elimination.
    pub fn column_rank(&self) -> usize {
        self.transpose().rank()
    }

    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Determinant by elimination with row swaps. The empty matrix has determinant one.
    pub fn determinant(&self) -> T {
        let n = self.n;
        let mut m = self.data.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return T::zero();
            };
            if p != col {
                for c in 0..n {
                    m.swap(p * n + c, col * n + c);
                }
                det = det.neg();
            }
            let pivot = m[col * n + col].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = m[r * n + col].mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m[r * n + c].sub(&f.mul(&m[col * n + c]));
                    m[r * n + c] = v;
                }
            }
        }
        det
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if p != col {
                for c in 0..n {
                    a.swap(p * n + c, col * n + c);
                    inv.swap(p * n + c, col * n + c);
                }
            }
            let pinv = a[col * n + col].inv().expect("nonzero pivot");
            for c in 0..n {
                a[col * n + c] = a[col * n + c].mul(&pinv);
                inv[col * n + c] = inv[col * n + c].mul(&pinv);
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for c in 0..n {
                    let v = a[r * n + c].sub(&f.mul(&a[col * n + c]));
                    a[r * n + c] = v;
                    let w = inv[r * n + c].sub(&f.mul(&inv[col * n + c]));
                    inv[r * n + c] = w;
                }
            }
        }
        Some(Dense { n, data: inv })
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Dense<U> {
        Dense { n: self.n, data: self.data.iter().map(f).collect() }
    }
}

/// Rank of a (possibly rectangular) list of rows.
pub fn rank_of_rows<T: FieldElement>(mut rows: Vec<Vec<T>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("nonzero pivot");
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].mul(&inv);
            let (top, bottom) = rows.split_at_mut(r);
            let pivot_row = &top[rank];
            for (dst, src) in bottom[0][col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                *dst = dst.sub(&f.mul(src));
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use num_rational::BigRational;

    fn q(rows: &[&[i64]]) -> Dense<BigRational> {
        Dense::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_two_by_two() {
        let m = q(&[&[1, 2], &[1, 4]]);
        assert_eq!(m.determinant(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn empty_conventions() {
        let m: Dense<BigRational> = Dense::zeros(0);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullity(), 0);
        assert_eq!(m.determinant(), BigRational::from_integer(1.into()));
        assert_eq!(m.inverse(), Some(Dense::zeros(0)));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = q(&[&[1, 2, 5], &[1, 4, 2], &[3, 2, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Dense::identity(3));
        assert!(q(&[&[4, 2], &[2, 1]]).inverse().is_none());
    }

    #[test]
    fn gf2_permutation_is_self_inverse() {
        let m = Dense::from_rows(vec![vec![Gf2(false), Gf2(true)], vec![Gf2(true), Gf2(false)]]);
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn row_and_column_rank_agree() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.column_rank(), 2);
    }
}

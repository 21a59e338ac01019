//! GF(2) matrices with each row packed into one `u64`.
//!
//! Bit `j` of row `i` is entry `(i, j)`. This is the representation used by
//! every subset sweep, where rank is the inner-loop cost.

use crate::dense::Dense;
use crate::domain::{compress_bits, iter_bits};
use crate::scalar::Gf2;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRows {
    n: usize,
    rows: Vec<u64>,
}

impl BitRows {
    pub fn zeros(n: usize) -> Self {
        assert!(n <= 64, "packed GF(2) rows hold at most 64 columns");
        BitRows { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for (i, r) in m.rows.iter_mut().enumerate() {
            *r = 1 << i;
        }
        m
    }

    pub fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        assert!(n <= 64 && rows.len() == n);
        let full = crate::domain::full_mask(n);
        assert!(rows.iter().all(|r| r & !full == 0), "row bits beyond column count");
        BitRows { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.rows[r] >> c) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        if v {
            self.rows[r] |= 1 << c;
        } else {
            self.rows[r] &= !(1 << c);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn rank(&self) -> usize {
        rank_packed(self.rows.clone())
    }

    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Nullity of the principal submatrix selected by `mask`, without materializing it.
    pub fn principal_nullity(&self, mask: u64) -> usize {
        let k = mask.count_ones() as usize;
        let rows: Vec<u64> = iter_bits(mask).map(|i| compress_bits(self.rows[i], mask)).collect();
        k - rank_packed(rows)
    }

    pub fn principal(&self, mask: u64) -> BitRows {
        let rows: Vec<u64> = iter_bits(mask).map(|i| compress_bits(self.rows[i], mask)).collect();
        BitRows { n: rows.len(), rows }
    }

    pub fn to_dense(&self) -> Dense<Gf2> {
        Dense::from_rows(
            (0..self.n)
                .map(|r| (0..self.n).map(|c| Gf2(self.get(r, c))).collect())
                .collect(),
        )
    }

    pub fn from_dense(d: &Dense<Gf2>) -> Self {
        let n = d.size();
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, d.get(r, c).0);
            }
        }
        m
    }
}

/// Rank of packed rows by XOR elimination, consuming the rows.
pub fn rank_packed(mut rows: Vec<u64>) -> usize {
    let mut rank = 0;
    let mut i = 0;
    while i < rows.len() {
        let r = rows[i];
        if r == 0 {
            i += 1;
            continue;
        }
        let low = r & r.wrapping_neg();
        for other in rows[i + 1..].iter_mut() {
            if *other & low != 0 {
                *other ^= r;
            }
        }
        rank += 1;
        i += 1;
    }
    rank
}

//! Strategies and independent oracles shared by the property suites.
#![allow(dead_code)]

use num_rational::BigRational;
use ppt_core::scalar::{FieldElement, Gf2};
use ppt_core::{Domain, Field, Graph, Matrix, Scalar, Subset};
use proptest::prelude::*;

pub fn gf2_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            Matrix::from_bits(Domain::numbered(n), rows.into_iter().map(|r| r & mask).collect())
        })
    })
}

pub fn rational_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, n), n)
            .prop_map(move |rows| Matrix::from_integers(Domain::numbered(n), Field::Q, &rows).unwrap())
    })
}

pub fn matrix(max_f2: usize, max_q: usize) -> impl Strategy<Value = Matrix> {
    prop_oneof![gf2_matrix(max_f2), rational_matrix(max_q)]
}

pub fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), n).prop_map(move |bits| {
            let mut rows = vec![0u64; n];
            for i in 0..n {
                for j in i..n {
                    if bits[i] >> j & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
            }
            Graph::from_rows(Domain::numbered(n), rows).unwrap()
        })
    })
}

pub fn subset_of(domain: &Domain, bits: u64) -> Subset {
    Subset::from_mask(domain, bits & domain.full_mask()).unwrap()
}

/// The first `X = bits ⊕ k` (k = 0, 1, …) with `A[X]` nonsingular; `∅` guarantees one exists.
pub fn nonsingular_near(a: &Matrix, bits: u64) -> Subset {
    let full = a.domain().full_mask();
    let start = bits & full;
    (0..=full)
        .map(|k| start ^ k)
        .find(|&m| a.principal_nullity(m) == 0)
        .map(|m| Subset::from_mask(a.domain(), m).unwrap())
        .expect("the empty set is nonsingular")
}

pub fn to_gf2(a: &Matrix) -> Vec<Vec<Gf2>> {
    a.rows_as_scalars()
        .into_iter()
        .map(|r| r.into_iter().map(|s| if let Scalar::F2(b) = s { Gf2(b) } else { panic!("not GF(2)") }).collect())
        .collect()
}

pub fn to_rational(a: &Matrix) -> Vec<Vec<BigRational>> {
    a.rows_as_scalars()
        .into_iter()
        .map(|r| r.into_iter().map(|s| if let Scalar::Q(q) = s { q } else { panic!("not rational") }).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det<T: FieldElement>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut total = T::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = m[0][c].mul(&cofactor_det(&minor));
        total = if c % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Rank as the largest order of a nonzero minor.
pub fn minor_rank<T: FieldElement>(m: &[Vec<T>]) -> usize {
    let n = m.len();
    for k in (1..=n).rev() {
        for rows in 0u64..1 << n {
            if rows.count_ones() as usize != k {
                continue;
            }
            for cols in 0u64..1 << n {
                if cols.count_ones() as usize != k {
                    continue;
                }
                let sub: Vec<Vec<T>> = (0..n)
                    .filter(|r| rows >> r & 1 == 1)
                    .map(|r| (0..n).filter(|c| cols >> c & 1 == 1).map(|c| m[r][c].clone()).collect())
                    .collect();
                if !cofactor_det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Row-reduction rank on unpacked booleans, one entry at a time.
pub fn naive_gf2_rank(mut m: Vec<Vec<bool>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (dst, &src) in row.iter_mut().zip(&pivot_row) {
                    *dst ^= src;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `P z = b` by Cramer's rule.
fn cramer<T: FieldElement>(p: &[Vec<T>], b: &[T]) -> Vec<T> {
    let d = cofactor_det(p).inv().expect("nonsingular block");
    (0..p.len())
        .map(|i| {
            let replaced: Vec<Vec<T>> = p
                .iter()
                .zip(b)
                .map(|(row, bi)| row.iter().enumerate().map(|(j, v)| if j == i { bi.clone() } else { v.clone() }).collect())
                .collect();
            cofactor_det(&replaced).mul(&d)
        })
        .collect()
}

/// The pivot built column by column from the defining relation
/// `A(x₁,x₂) = (y₁,y₂)  ⇔  B(y₁,x₂) = (x₁,y₂)`.
pub fn pivot_by_relation<T: FieldElement>(a: &[Vec<T>], x: u64) -> Vec<Vec<T>> {
    let n = a.len();
    let inside: Vec<usize> = (0..n).filter(|i| x >> i & 1 == 1).collect();
    let outside: Vec<usize> = (0..n).filter(|i| x >> i & 1 == 0).collect();
    let p: Vec<Vec<T>> = inside.iter().map(|&r| inside.iter().map(|&c| a[r][c].clone()).collect()).collect();
    let mut b = vec![vec![T::zero(); n]; n];
    for j in 0..n {
        // Input (y₁, x₂) = e_j; recover x₁ from y₁ = P x₁ + Q x₂.
        let rhs: Vec<T> = inside
            .iter()
            .map(|&r| {
                let y1 = if r == j { T::one() } else { T::zero() };
                let qx2 = if x >> j & 1 == 0 { a[r][j].clone() } else { T::zero() };
                y1.sub(&qx2)
            })
            .collect();
        let x1 = cramer(&p, &rhs);
        let mut full_x = vec![T::zero(); n];
        for (k, &i) in inside.iter().enumerate() {
            full_x[i] = x1[k].clone();
        }
        if x >> j & 1 == 0 {
            full_x[j] = T::one();
        }
        for (k, &i) in inside.iter().enumerate() {
            b[i][j] = x1[k].clone();
        }
        for &i in &outside {
            b[i][j] = (0..n).fold(T::zero(), |acc, c| acc.add(&a[i][c].mul(&full_x[c])));
        }
    }
    b
}

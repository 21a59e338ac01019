//! Principal pivot transform and the identities it satisfies.
//!
//! For `A = (P Q; R S)` with `P = A[X]` nonsingular,
//!
//! ```text
//! A*X = ( P⁻¹     -P⁻¹Q      )
//!       ( RP⁻¹    S - RP⁻¹Q  )
//! ```
//!
//! computed in the original label order. Each `*_check` function evaluates
//! both sides of an identity exactly and reports whether they agree, so
//! callers can count failures over many random trials.

use num_rational::BigRational;

use crate::dense::Dense;
use crate::domain::Subset;
use crate::error::{Error, Result};
use crate::gf2::BitRows;
use crate::matrix::{Entries, Matrix};
use crate::scalar::{FieldElement, Scalar};

/// `A*X`. Fails with [`Error::PivotUndefined`] when `A[X]` is singular.
pub fn pivot(a: &Matrix, x: &Subset) -> Result<Matrix> {
    a.check_subset(x)?;
    let inside: Vec<usize> = x.indices().collect();
    let outside: Vec<usize> = x.complement().indices().collect();
    let undefined = || Error::PivotUndefined { subset: x.clone() };
    let entries = match a.entries() {
        Entries::F2(b) => {
            let d = pivot_dense(&b.to_dense(), &inside, &outside).ok_or_else(undefined)?;
            Entries::F2(BitRows::from_dense(&d))
        }
        Entries::Q(d) => Entries::Q(pivot_dense::<BigRational>(d, &inside, &outside).ok_or_else(undefined)?),
    };
    Ok(Matrix::from_parts(a.domain().clone(), entries))
}

fn pivot_dense<T: FieldElement>(a: &Dense<T>, inside: &[usize], outside: &[usize]) -> Option<Dense<T>> {
    let p_inv = a.principal(inside).inverse()?;
    let k = inside.len();
    let q = a.block(inside, outside);
    let r = a.block(outside, inside);

    // P⁻¹Q (k × m) and RP⁻¹ (m × k)
    let p_inv_q: Vec<Vec<T>> = (0..k)
        .map(|i| {
            (0..outside.len())
                .map(|j| (0..k).fold(T::zero(), |acc, t| acc.add(&p_inv.get(i, t).mul(&q[t][j]))))
                .collect()
        })
        .collect();
    let r_p_inv: Vec<Vec<T>> = (0..outside.len())
        .map(|i| {
            (0..k)
                .map(|j| (0..k).fold(T::zero(), |acc, t| acc.add(&r[i][t].mul(p_inv.get(t, j)))))
                .collect()
        })
        .collect();

    let mut out = a.clone();
    for (i, &gi) in inside.iter().enumerate() {
        for (j, &gj) in inside.iter().enumerate() {
            out.set(gi, gj, p_inv.get(i, j).clone());
        }
        for (j, &gj) in outside.iter().enumerate() {
            out.set(gi, gj, p_inv_q[i][j].neg());
        }
    }
    for (i, &gi) in outside.iter().enumerate() {
        for (j, &gj) in inside.iter().enumerate() {
            out.set(gi, gj, r_p_inv[i][j].clone());
        }
        for (j, &gj) in outside.iter().enumerate() {
            let correction = (0..k).fold(T::zero(), |acc, t| acc.add(&r_p_inv[i][t].mul(&q[t][j])));
            out.set(gi, gj, a.get(gi, gj).sub(&correction));
        }
    }
    Some(out)
}

/// Checks the partial-inverse relation: `A(x₁,x₂) = (y₁,y₂)` implies `(A*X)(y₁,x₂) = (x₁,y₂)`.
pub fn verify_partial_inverse(a: &Matrix, x: &Subset, vector: &[Scalar]) -> Result<bool> {
    let pivoted = pivot(a, x)?;
    let y = a.mul_vec(vector)?;
    let swapped: Vec<Scalar> = (0..a.size())
        .map(|i| if x.contains(i) { y[i].clone() } else { vector[i].clone() })
        .collect();
    let image = pivoted.mul_vec(&swapped)?;
    Ok((0..a.size()).all(|i| {
        let expected = if x.contains(i) { &vector[i] } else { &y[i] };
        &image[i] == expected
    }))
}

/// `(n((A*X)[Y]), n(A[X ⊕ Y]))`; the two components agree by the nullity invariant.
pub fn nullity_after_pivot(a: &Matrix, x: &Subset, y: &Subset) -> Result<(usize, usize)> {
    let pivoted = pivot(a, x)?;
    nullity_pair(a, &pivoted, x, y)
}

/// Same as [`nullity_after_pivot`] when `A*X` has already been computed.
pub fn nullity_pair(a: &Matrix, pivoted: &Matrix, x: &Subset, y: &Subset) -> Result<(usize, usize)> {
    a.check_subset(y)?;
    let xy = x.symmetric_difference(y)?;
    Ok((pivoted.principal_nullity(y.mask()), a.principal_nullity(xy.mask())))
}

/// `det (A*X)[Y] = det A[X ⊕ Y] / det A[X]`, both sides evaluated exactly.
pub fn tucker_determinant_check(a: &Matrix, x: &Subset, y: &Subset) -> Result<bool> {
    let pivoted = pivot(a, x)?;
    tucker_pair(a, &pivoted, x, y).map(|(lhs, rhs)| lhs == rhs)
}

/// Both sides of the determinant identity, for reporting.
pub fn tucker_pair(a: &Matrix, pivoted: &Matrix, x: &Subset, y: &Subset) -> Result<(Scalar, Scalar)> {
    let xy = x.symmetric_difference(y)?;
    let lhs = pivoted.principal_submatrix(y)?.determinant();
    let num = a.principal_submatrix(&xy)?.determinant();
    let den = a.principal_submatrix(x)?.determinant();
    let rhs = num
        .checked_div(&den)
        .ok_or_else(|| Error::PivotUndefined { subset: x.clone() })?;
    Ok((lhs, rhs))
}

/// `(A*X)*Y` next to `A*(X ⊕ Y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PivotComposition {
    pub composed: Matrix,
    pub direct: Matrix,
}

impl PivotComposition {
    pub fn holds(&self) -> bool {
        self.composed == self.direct
    }
}

pub fn pivot_composition(a: &Matrix, x: &Subset, y: &Subset) -> Result<PivotComposition> {
    let first = pivot(a, x).map_err(|_| Error::CompositionUndefined { stage: 1, subset: x.clone() })?;
    let composed = pivot(&first, y).map_err(|e| match e {
        Error::PivotUndefined { subset } => Error::CompositionUndefined { stage: 2, subset },
        other => other,
    })?;
    let direct = pivot(a, &x.symmetric_difference(y)?)?;
    Ok(PivotComposition { composed, direct })
}

/// `n((A*X)[V ∖ X]) = n(A)`.
pub fn schur_nullity_check(a: &Matrix, x: &Subset) -> Result<bool> {
    Ok(a.schur_complement(x)?.nullity() == a.nullity())
}

/// `((A*X) ♯ Y)(A ♯ X) = A ♯ (X ⊕ Y)` as an exact matrix product.
pub fn sharp_composition_check(a: &Matrix, x: &Subset, y: &Subset) -> Result<bool> {
    let pivoted = pivot(a, x)?;
    let lhs = pivoted.sharp(y)?.mul(&a.sharp(x)?)?;
    let rhs = a.sharp(&x.symmetric_difference(y)?)?;
    Ok(lhs == rhs)
}

/// For nonsingular `A`: `n(A⁻¹[Y]) = n(A[V ∖ Y])`.
pub fn fiedler_check(a: &Matrix, y: &Subset) -> Result<bool> {
    let inv = a.inverse()?;
    Ok(inv.principal_submatrix(y)?.nullity() == a.principal_submatrix(&y.complement())?.nullity())
}

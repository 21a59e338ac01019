//! The interlace (nullity) polynomial.
//!
//! `q'(A) = Σ_S y^{n(A[S])}` has the norm `‖P_A‖` as its coefficient list, and
//! `q(A) = q'(A)` evaluated at `y - 1`. For graphs, `q` is also computed by the
//! deletion recursion over elementary pivots, which gives an independent route.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::domain::Subset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::pivot::pivot;
use crate::set_systems::norm_of;

/// Integer polynomial in `y`, constant term first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = IntPolynomial { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::new([1])
    }

    /// `yⁿ`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `(y + c)ⁿ`.
    pub fn binomial_power(c: i64, n: usize) -> Self {
        let base = IntPolynomial::new([c, 1]);
        (0..n).fold(IntPolynomial::one(), |acc, _| acc.mul(&base))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    /// `p(y + c)`, expanded by repeated synthetic division (Taylor shift).
    pub fn shift(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &a[j + 1] * &c;
                a[j] += t;
            }
        }
        IntPolynomial::new(a)
    }

    /// Space-separated coefficients, constant term first (`0` for the zero polynomial).
    pub fn coefficient_line(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 if c.is_one() => "y".into(),
                1 => format!("{c}y"),
                _ if c.is_one() => format!("y^{i}"),
                _ => format!("{c}y^{i}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `q'(A)` with coefficients `‖P_A‖`.
///
/// Vertices whose row and column are both zero are split off first: each one
/// multiplies the result by `1 + y`.
pub fn q_prime_direct(a: &Matrix) -> Result<IntPolynomial> {
    let zero_lines = zero_line_mask(a);
    let core = a.principal_by_mask(a.domain().full_mask() & !zero_lines);
    let base = IntPolynomial::new(norm_of(&core)?.0);
    Ok(base.mul(&IntPolynomial::binomial_power(1, zero_lines.count_ones() as usize)))
}

/// `q'(A)` by the plain subset sweep with no shortcuts.
pub fn q_prime_naive(a: &Matrix) -> Result<IntPolynomial> {
    Ok(IntPolynomial::new(norm_of(a)?.0))
}

fn zero_line_mask(a: &Matrix) -> u64 {
    let t = a.transpose();
    (0..a.size())
        .filter(|&i| (0..a.size()).all(|j| a.get(i, j).is_zero() && t.get(i, j).is_zero()))
        .fold(0u64, |m, i| m | (1 << i))
}

/// `q(y) = q'(y - 1)`.
pub fn q_from_q_prime(p: &IntPolynomial) -> IntPolynomial {
    p.shift(-1)
}

/// `q'(y) = q(y + 1)`.
pub fn q_prime_from_q(p: &IntPolynomial) -> IntPolynomial {
    p.shift(1)
}

/// `q(A)` by direct enumeration.
pub fn q_direct(a: &Matrix) -> Result<IntPolynomial> {
    Ok(q_from_q_prime(&q_prime_direct(a)?))
}

/// `q(G)` by the deletion recursion:
/// `yⁿ` for a discrete graph; otherwise `q(G∖u) + q(G*{u}∖u)` on the smallest
/// looped vertex `u`, or `q(G∖u) + q(G*{u,v}∖u)` on the smallest edge between
/// loopless vertices.
pub fn q_recursive(g: &Graph) -> IntPolynomial {
    if g.is_discrete() {
        return IntPolynomial::monomial(g.size());
    }
    if let Some(u) = (0..g.size()).find(|&u| g.has_loop(u)) {
        let pivoted = g.local_complement_at(u).expect("u has a loop");
        return q_recursive(&g.delete(u)).add(&q_recursive(&pivoted.delete(u)));
    }
    // No loops remain and at least one edge does.
    let (u, v) = g
        .edges()
        .into_iter()
        .find(|&(u, v)| u != v)
        .expect("non-discrete loopless graph has an edge");
    let pivoted = g.edge_complement_at(u, v).expect("loopless edge");
    q_recursive(&g.delete(u)).add(&q_recursive(&pivoted.delete(u)))
}

/// Both sides of `q(A) = q(A∖u) + q(A*X∖u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionCheck {
    pub deleted: IntPolynomial,
    pub pivoted_deleted: IntPolynomial,
    pub direct: IntPolynomial,
}

impl RecursionCheck {
    pub fn sum(&self) -> IntPolynomial {
        self.deleted.add(&self.pivoted_deleted)
    }

    pub fn holds(&self) -> bool {
        self.sum() == self.direct
    }
}

/// Evaluates the general recursion for any matrix, given `A[X]` nonsingular and `u ∈ X`.
pub fn q_general_recursive(a: &Matrix, u: &str, x: &Subset) -> Result<RecursionCheck> {
    a.check_subset(x)?;
    if !x.contains_label(u) {
        return Err(Error::Precondition(format!("{u} is not in {x}")));
    }
    let pivoted = pivot(a, x)?;
    Ok(RecursionCheck {
        deleted: q_direct(&a.delete(u)?)?,
        pivoted_deleted: q_direct(&pivoted.delete(u)?)?,
        direct: q_direct(a)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::Domain;
    use crate::scalar::Field;

    fn four_vertex_graph() -> Graph {
        Graph::parse("graph\n1 2 3 4\n1 3\n2 3\n2 4\n3 4\n2 2\n3 3\n").unwrap()
    }

    #[test]
    fn polynomial_basics() {
        let p = IntPolynomial::new([8, 7, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coefficient_line(), "8 7 1");
        assert_eq!(p.to_string(), "y^2 + 7y + 8");
        assert_eq!(IntPolynomial::zero().coefficient_line(), "0");
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::from(16));
    }

    #[test]
    fn shift_by_hand() {
        // (y-1)^2 + 7(y-1) + 8 = y^2 + 5y + 2
        let q_prime = IntPolynomial::new([8, 7, 1]);
        assert_eq!(q_from_q_prime(&q_prime), IntPolynomial::new([2, 5, 1]));
        assert_eq!(q_prime_from_q(&q_from_q_prime(&q_prime)), q_prime);
        assert_eq!(q_from_q_prime(&IntPolynomial::one()), IntPolynomial::one());
        for n in 0..6 {
            assert_eq!(q_from_q_prime(&IntPolynomial::binomial_power(1, n)), IntPolynomial::monomial(n));
        }
    }

    #[test]
    fn four_vertex_graph_direct() {
        let g = four_vertex_graph().to_matrix();
        assert_eq!(q_prime_direct(&g).unwrap(), IntPolynomial::new([8, 7, 1]));
        assert_eq!(q_direct(&g).unwrap(), IntPolynomial::new([2, 5, 1]));
        assert_eq!(q_recursive(&four_vertex_graph()), IntPolynomial::new([2, 5, 1]));
    }

    #[test]
    fn rational_3x3_direct() {
        let a = Matrix::parse("field q\na b c\n1 2 5\n1 4 2\n3 2 1\n").unwrap();
        assert_eq!(q_prime_direct(&a).unwrap(), IntPolynomial::new([7, 1]));
        assert_eq!(q_direct(&a).unwrap(), IntPolynomial::new([6, 1]));
        let x = Subset::parse(a.domain(), "a,b").unwrap();
        let check = q_general_recursive(&a, "a", &x).unwrap();
        assert!(check.holds());
        assert_eq!(check.direct, IntPolynomial::new([6, 1]));
    }

    #[test]
    fn discrete_graphs() {
        for n in 0..6 {
            let g = Graph::discrete(Domain::numbered(n));
            assert_eq!(q_recursive(&g), IntPolynomial::monomial(n));
            assert_eq!(q_prime_direct(&g.to_matrix()).unwrap(), IntPolynomial::binomial_power(1, n));
        }
    }

    #[test]
    fn single_looped_vertex_gives_two() {
        // Both S = ∅ and S = {u} have nullity 0.
        let g = Graph::parse("graph\nu\nu u\n").unwrap();
        assert_eq!(q_prime_direct(&g.to_matrix()).unwrap(), IntPolynomial::new([2]));
        assert_eq!(q_direct(&g.to_matrix()).unwrap(), IntPolynomial::new([2]));
        assert_eq!(q_recursive(&g), IntPolynomial::new([2]));
    }

    #[test]
    fn zero_line_shortcut_agrees_with_sweep() {
        let m = Matrix::parse("field q\na b c d\n1 0 2 0\n0 0 0 0\n3 0 1 0\n0 0 0 0\n").unwrap();
        assert_eq!(q_prime_direct(&m).unwrap(), q_prime_naive(&m).unwrap());
        let z = Matrix::zeros(Domain::numbered(4), Field::F2);
        assert_eq!(q_prime_direct(&z).unwrap(), q_prime_naive(&z).unwrap());
    }

    #[test]
    fn general_recursion_preconditions() {
        let g = four_vertex_graph().to_matrix();
        let x = Subset::parse(g.domain(), "1,2,3").unwrap();
        assert!(q_general_recursive(&g, "2", &x).unwrap().holds());
        assert!(matches!(q_general_recursive(&g, "4", &x), Err(Error::Precondition(_))));
        let bad = Subset::parse(g.domain(), "1,4").unwrap();
        assert!(matches!(q_general_recursive(&g, "1", &bad), Err(Error::PivotUndefined { .. })));
    }
}

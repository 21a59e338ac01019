//! Label-indexed square matrices over GF(2) or the rationals.

use std::fmt;

use num_rational::BigRational;

use crate::dense::Dense;
use crate::domain::{Domain, Subset};
use crate::error::{Error, Result};
use crate::gf2::BitRows;
use crate::scalar::{format_rational, Field, FieldElement, Gf2, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Entries {
    F2(BitRows),
    Q(Dense<BigRational>),
}

/// A `V × V` matrix whose rows and columns follow the sorted label order of `V`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    domain: Domain,
    entries: Entries,
}

impl Matrix {
    pub(crate) fn from_parts(domain: Domain, entries: Entries) -> Self {
        let n = match &entries {
            Entries::F2(b) => b.size(),
            Entries::Q(d) => d.size(),
        };
        assert_eq!(domain.len(), n, "domain size must match matrix size");
        Matrix { domain, entries }
    }

    pub fn from_bits(domain: Domain, rows: Vec<u64>) -> Self {
        let n = domain.len();
        Matrix::from_parts(domain, Entries::F2(BitRows::from_rows(n, rows)))
    }

    pub fn from_rationals(domain: Domain, rows: Vec<Vec<BigRational>>) -> Result<Self> {
        check_shape(domain.len(), &rows)?;
        Ok(Matrix::from_parts(domain, Entries::Q(Dense::from_rows(rows))))
    }

    /// Integer matrix over `field` (entries reduced mod 2 for GF(2)).
    pub fn from_integers(domain: Domain, field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        check_shape(domain.len(), rows)?;
        Ok(match field {
            Field::F2 => Matrix::from_bits(
                domain,
                rows.iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .fold(0u64, |acc, (c, &v)| acc | (u64::from(v.rem_euclid(2) == 1) << c))
                    })
                    .collect(),
            ),
            Field::Q => Matrix::from_parts(
                domain,
                Entries::Q(Dense::from_rows(
                    rows.iter()
                        .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                        .collect(),
                )),
            ),
        })
    }

    pub fn from_scalars(domain: Domain, field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        check_shape(domain.len(), &rows)?;
        if rows.iter().flatten().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(match field {
            Field::F2 => Matrix::from_bits(
                domain,
                rows.iter()
                    .map(|r| {
                        r.iter().enumerate().fold(0u64, |acc, (c, s)| {
                            acc | (u64::from(matches!(s, Scalar::F2(true))) << c)
                        })
                    })
                    .collect(),
            ),
            Field::Q => {
                let rows = rows
                    .into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|s| match s {
                                Scalar::Q(q) => q,
                                Scalar::F2(_) => unreachable!("field checked above"),
                            })
                            .collect()
                    })
                    .collect();
                Matrix::from_parts(domain, Entries::Q(Dense::from_rows(rows)))
            }
        })
    }

    pub fn identity(domain: Domain, field: Field) -> Self {
        let n = domain.len();
        match field {
            Field::F2 => Matrix::from_parts(domain, Entries::F2(BitRows::identity(n))),
            Field::Q => Matrix::from_parts(domain, Entries::Q(Dense::identity(n))),
        }
    }

    pub fn zeros(domain: Domain, field: Field) -> Self {
        let n = domain.len();
        match field {
            Field::F2 => Matrix::from_parts(domain, Entries::F2(BitRows::zeros(n))),
            Field::Q => Matrix::from_parts(domain, Entries::Q(Dense::zeros(n))),
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn field(&self) -> Field {
        match self.entries {
            Entries::F2(_) => Field::F2,
            Entries::Q(_) => Field::Q,
        }
    }

    pub(crate) fn entries(&self) -> &Entries {
        &self.entries
    }

    /// Packed rows, for GF(2) matrices only.
    pub fn bit_rows(&self) -> Option<&[u64]> {
        match &self.entries {
            Entries::F2(b) => Some(b.rows()),
            Entries::Q(_) => None,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match &self.entries {
            Entries::F2(b) => Scalar::F2(b.get(r, c)),
            Entries::Q(d) => Scalar::Q(d.get(r, c).clone()),
        }
    }

    pub fn entry(&self, row: &str, col: &str) -> Option<Scalar> {
        Some(self.get(self.domain.index_of(row)?, self.domain.index_of(col)?))
    }

    pub fn is_symmetric(&self) -> bool {
        match &self.entries {
            Entries::F2(b) => b.is_symmetric(),
            Entries::Q(d) => d == &d.transpose(),
        }
    }

    pub fn full(&self) -> Subset {
        Subset::full(&self.domain)
    }

    pub(crate) fn check_subset(&self, x: &Subset) -> Result<()> {
        self.domain.check_same(x.domain())
    }

    /// `A[X]`, indexed by the labels of `X` in sorted order.
    pub fn principal_submatrix(&self, x: &Subset) -> Result<Matrix> {
        self.check_subset(x)?;
        Ok(self.principal_by_mask(x.mask()))
    }

    pub(crate) fn principal_by_mask(&self, mask: u64) -> Matrix {
        let domain = self.domain.restrict(mask);
        match &self.entries {
            Entries::F2(b) => Matrix::from_parts(domain, Entries::F2(b.principal(mask))),
            Entries::Q(d) => {
                let idx: Vec<usize> = crate::domain::iter_bits(mask).collect();
                Matrix::from_parts(domain, Entries::Q(d.principal(&idx)))
            }
        }
    }

    /// `A \ u`: the principal submatrix on every label except `u`.
    pub fn delete(&self, label: &str) -> Result<Matrix> {
        let i = self
            .domain
            .index_of(label)
            .ok_or_else(|| Error::Labels(format!("unknown label {label:?}")))?;
        Ok(self.principal_by_mask(self.domain.full_mask() & !(1u64 << i)))
    }

    pub fn rank(&self) -> usize {
        match &self.entries {
            Entries::F2(b) => b.rank(),
            Entries::Q(d) => d.rank(),
        }
    }

    pub fn nullity(&self) -> usize {
        self.size() - self.rank()
    }

    /// `n(A[X])` for a mask over this matrix's domain.
    pub fn principal_nullity(&self, mask: u64) -> usize {
        match &self.entries {
            Entries::F2(b) => b.principal_nullity(mask),
            Entries::Q(d) => {
                let idx: Vec<usize> = crate::domain::iter_bits(mask).collect();
                d.principal(&idx).nullity()
            }
        }
    }

    pub fn determinant(&self) -> Scalar {
        match &self.entries {
            // Over GF(2) the determinant is 1 exactly when the matrix has full rank.
            Entries::F2(b) => Scalar::F2(b.nullity() == 0),
            Entries::Q(d) => Scalar::Q(d.determinant()),
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let entries = match &self.entries {
            Entries::F2(b) => {
                Entries::F2(BitRows::from_dense(&b.to_dense().inverse().ok_or(Error::Singular)?))
            }
            Entries::Q(d) => Entries::Q(d.inverse().ok_or(Error::Singular)?),
        };
        Ok(Matrix::from_parts(self.domain.clone(), entries))
    }

    pub fn transpose(&self) -> Matrix {
        let entries = match &self.entries {
            Entries::F2(b) => Entries::F2(BitRows::from_dense(&b.to_dense().transpose())),
            Entries::Q(d) => Entries::Q(d.transpose()),
        };
        Matrix::from_parts(self.domain.clone(), entries)
    }

    /// `A ♯ X`: every row outside `X` replaced by the matching standard basis row.
    pub fn sharp(&self, x: &Subset) -> Result<Matrix> {
        self.check_subset(x)?;
        let mut out = self.clone();
        match &mut out.entries {
            Entries::F2(b) => {
                let mut rows = b.rows().to_vec();
                for i in x.complement().indices() {
                    rows[i] = 1 << i;
                }
                *b = BitRows::from_rows(rows.len(), rows);
            }
            Entries::Q(d) => {
                for i in x.complement().indices() {
                    for c in 0..d.size() {
                        d.set(i, c, if c == i { FieldElement::one() } else { FieldElement::zero() });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Schur complement `S - R P⁻¹ Q` of `P = A[X]`, indexed by `V ∖ X`.
    pub fn schur_complement(&self, x: &Subset) -> Result<Matrix> {
        let pivoted = crate::pivot::pivot(self, x)?;
        pivoted.principal_submatrix(&x.complement())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.domain.check_same(&rhs.domain)?;
        let entries = match (&self.entries, &rhs.entries) {
            (Entries::F2(a), Entries::F2(b)) => {
                Entries::F2(BitRows::from_dense(&a.to_dense().mul(&b.to_dense())))
            }
            (Entries::Q(a), Entries::Q(b)) => Entries::Q(a.mul(b)),
            _ => return Err(Error::FieldMismatch),
        };
        Ok(Matrix::from_parts(self.domain.clone(), entries))
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.size() {
            return Err(Error::Dimension { expected: self.size(), actual: x.len() });
        }
        match &self.entries {
            Entries::F2(b) => {
                let v: Vec<Gf2> = x.iter().map(to_gf2).collect::<Result<_>>()?;
                Ok(b.to_dense().mul_vec(&v).into_iter().map(|g| Scalar::F2(g.0)).collect())
            }
            Entries::Q(d) => {
                let v: Vec<BigRational> = x.iter().map(to_rational).collect::<Result<_>>()?;
                Ok(d.mul_vec(&v).into_iter().map(Scalar::Q).collect())
            }
        }
    }

    /// Rank by column elimination: an independent route for cross-checking [`Matrix::rank`].
    pub fn column_rank(&self) -> usize {
        match &self.entries {
            Entries::F2(b) => b.to_dense().column_rank(),
            Entries::Q(d) => d.column_rank(),
        }
    }

    pub fn rows_as_scalars(&self) -> Vec<Vec<Scalar>> {
        (0..self.size())
            .map(|r| (0..self.size()).map(|c| self.get(r, c)).collect())
            .collect()
    }

    /// Parses the `field` / labels / rows text format.
    pub fn parse(text: &str) -> Result<Matrix> {
        let mut lines = crate::io::content_lines(text);
        let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
        let field = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["field", f] => f.parse::<Field>().map_err(|m| perr(ln, &m))?,
            _ => return Err(perr(ln, "expected `field f2` or `field q`")),
        };
        let (ln, label_line) = lines.next().ok_or_else(|| perr(ln + 1, "missing label line"))?;
        let file_labels: Vec<&str> = label_line.split_whitespace().collect();
        let domain = Domain::new(file_labels.iter().copied()).map_err(|e| perr(ln, &e.to_string()))?;
        let n = domain.len();
        // Position in the sorted domain of each file row/column.
        let perm: Vec<usize> = file_labels.iter().map(|l| domain.index_of(l).unwrap()).collect();
        let mut rows = vec![vec![Scalar::zero(field); n]; n];
        for (fr, &r) in perm.iter().enumerate() {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| perr(ln + 1 + fr, &format!("expected {n} matrix rows, got {fr}")))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n {
                return Err(perr(ln, &format!("expected {n} entries, got {}", toks.len())));
            }
            for (fc, tok) in toks.iter().enumerate() {
                rows[r][perm[fc]] = Scalar::parse(field, tok).map_err(|m| perr(ln, &m))?;
            }
        }
        if let Some((ln, _)) = lines.next() {
            return Err(perr(ln, "trailing content after matrix rows"));
        }
        Matrix::from_scalars(domain, field, rows)
    }
}

fn perr(line: usize, message: &str) -> Error {
    Error::Parse { line, message: message.to_string() }
}

fn check_shape<T>(n: usize, rows: &[Vec<T>]) -> Result<()> {
    if rows.len() != n {
        return Err(Error::Dimension { expected: n, actual: rows.len() });
    }
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension { expected: n, actual: r.len() });
    }
    Ok(())
}

fn to_gf2(s: &Scalar) -> Result<Gf2> {
    match s {
        Scalar::F2(b) => Ok(Gf2(*b)),
        Scalar::Q(_) => Err(Error::FieldMismatch),
    }
}

fn to_rational(s: &Scalar) -> Result<BigRational> {
    match s {
        Scalar::Q(q) => Ok(q.clone()),
        Scalar::F2(_) => Err(Error::FieldMismatch),
    }
}

/// Writes the matrix text format in sorted label order.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field())?;
        writeln!(f, "{}", self.domain)?;
        for r in 0..self.size() {
            let row: Vec<String> = match &self.entries {
                Entries::F2(b) => (0..self.size()).map(|c| u8::from(b.get(r, c)).to_string()).collect(),
                Entries::Q(d) => d.row(r).iter().map(format_rational).collect(),
            };
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn rational_3x3() -> Matrix {
        Matrix::parse("field q\na b c\n1 2 5\n1 4 2\n3 2 1\n").unwrap()
    }

    #[test]
    fn principal_submatrix_of_rational_3x3() {
        let a = rational_3x3();
        let x = Subset::parse(a.domain(), "b,c").unwrap();
        let sub = a.principal_submatrix(&x).unwrap();
        assert_eq!(sub.to_string(), "field q\nb c\n4 2\n2 1\n");
        assert_eq!(sub.nullity(), 1);
        assert_eq!(a.principal_submatrix(&a.full()).unwrap(), a);
    }

    #[test]
    fn empty_submatrix_conventions() {
        let a = rational_3x3();
        let e = a.principal_submatrix(&Subset::empty(a.domain())).unwrap();
        assert_eq!(e.size(), 0);
        assert_eq!(e.nullity(), 0);
        assert_eq!(e.determinant(), Scalar::integer(Field::Q, 1));
    }

    #[test]
    fn parse_permutes_rows_into_sorted_order() {
        let m = Matrix::parse("field q\nb a\n1 2\n3 4\n").unwrap();
        // file row b = [b,b]=1 [b,a]=2 ; row a = [a,b]=3 [a,a]=4
        assert_eq!(m.to_string(), "field q\na b\n4 3\n2 1\n");
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(Matrix::parse("field r\na\n1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(Matrix::parse("field f2\na b\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Matrix::parse("field f2\na b\n1 0\n2 1\n"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(Matrix::parse("field q\na\n1/0\n"), Err(Error::Parse { .. })));
        assert!(matches!(Matrix::parse("field q\na a\n1 0\n0 1\n"), Err(Error::Parse { .. })));
        assert!(Matrix::parse("# comment\nfield q\na\n-3/6\n").is_ok());
    }

    #[test]
    fn rational_entries_print_canonically() {
        let m = Matrix::parse("field q\na b\n2/4 -3\n0 6/-4\n").unwrap();
        assert_eq!(m.to_string(), "field q\na b\n1/2 -3\n0 -3/2\n");
    }

    #[test]
    fn sharp_edge_cases() {
        let a = rational_3x3();
        assert_eq!(a.sharp(&a.full()).unwrap(), a);
        assert_eq!(
            a.sharp(&Subset::empty(a.domain())).unwrap(),
            Matrix::identity(a.domain().clone(), Field::Q)
        );
        let x = Subset::parse(a.domain(), "b,c").unwrap();
        assert_eq!(a.sharp(&x).unwrap().nullity(), 1);
    }

    #[test]
    fn inverse_errors_when_singular() {
        let m = Matrix::parse("field q\na b\n4 2\n2 1\n").unwrap();
        assert_eq!(m.inverse(), Err(Error::Singular));
        let p = Matrix::parse("field f2\na b\n0 1\n1 0\n").unwrap();
        assert_eq!(p.inverse().unwrap(), p);
        let i = Matrix::identity(Domain::numbered(4), Field::Q);
        assert_eq!(i.inverse().unwrap(), i);
    }

    #[test]
    fn determinant_examples() {
        let m = Matrix::parse("field q\na b\n1 2\n1 4\n").unwrap();
        assert_eq!(m.determinant(), Scalar::integer(Field::Q, 2));
        let g = Matrix::parse("field f2\n1 2 3\n0 0 1\n0 1 1\n1 1 1\n").unwrap();
        assert_eq!(g.determinant(), Scalar::F2(true));
    }

    #[test]
    fn schur_complement_of_rational_3x3() {
        let a = rational_3x3();
        let x = Subset::parse(a.domain(), "a,b").unwrap();
        let s = a.schur_complement(&x).unwrap();
        assert_eq!(s.to_string(), "field q\nc\n-20\n");
        assert_eq!(a.schur_complement(&Subset::empty(a.domain())).unwrap(), a);
        let bad = Subset::parse(a.domain(), "b,c").unwrap();
        assert!(matches!(a.schur_complement(&bad), Err(Error::PivotUndefined { .. })));
    }

    #[test]
    fn domain_mismatch_is_reported() {
        let a = rational_3x3();
        let other = Domain::new(["x", "y", "z"]).unwrap();
        assert!(matches!(
            a.principal_submatrix(&Subset::full(&other)),
            Err(Error::DomainMismatch(_))
        ));
        assert!(a.sharp(&Subset::full(&other)).is_err());
    }
}

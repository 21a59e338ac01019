//! Seeded generators for the verification suites.
//!
//! All randomness flows from a `ChaCha8Rng` seeded with a `u64`, so a seed
//! fixes every matrix, graph, subset and string drawn from it:
//!
//! * GF(2) matrices: each entry an independent fair bit.
//! * Graphs: the upper triangle and diagonal as fair bits, mirrored.
//! * Rational matrices: independent integers uniform in `[-3, 3]`.
//! * Subsets: each label included with probability one half.
//! * Double occurrence strings: a uniform shuffle of `0 0 1 1 …`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuits::DoubleOccurrenceString;
use crate::domain::{Domain, Subset};
use crate::graph::Graph;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Range of the integer entries of random rational matrices.
pub const RATIONAL_ENTRY_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A size in `1..=max`.
    pub fn size(&mut self, max: usize) -> usize {
        self.rng.gen_range(1..=max.max(1))
    }

    pub fn matrix(&mut self, n: usize, field: Field) -> Matrix {
        let domain = Domain::numbered(n);
        match field {
            Field::F2 => {
                let rows = (0..n).map(|_| self.bits(n)).collect();
                Matrix::from_bits(domain, rows)
            }
            Field::Q => {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|_| (0..n).map(|_| self.rng.gen_range(RATIONAL_ENTRY_RANGE)).collect())
                    .collect();
                Matrix::from_integers(domain, Field::Q, &rows).expect("square")
            }
        }
    }

    /// A symmetric matrix; over GF(2) this is a random graph.
    #[allow(clippy::needless_range_loop)]
    pub fn symmetric_matrix(&mut self, n: usize, field: Field) -> Matrix {
        match field {
            Field::F2 => self.graph(n).to_matrix(),
            Field::Q => {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in i..n {
                        let v = self.rng.gen_range(RATIONAL_ENTRY_RANGE);
                        rows[i][j] = v;
                        rows[j][i] = v;
                    }
                }
                Matrix::from_integers(Domain::numbered(n), Field::Q, &rows).expect("square")
            }
        }
    }

    pub fn graph(&mut self, n: usize) -> Graph {
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in i..n {
                if self.rng.gen::<bool>() {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows(Domain::numbered(n), rows).expect("symmetric")
    }

    pub fn subset(&mut self, domain: &Domain) -> Subset {
        let bits = self.bits(domain.len());
        Subset::from_mask(domain, bits).expect("mask within domain")
    }

    /// A subset `X` with `A[X]` nonsingular, by rejection; falls back to `∅`.
    pub fn nonsingular_subset(&mut self, a: &Matrix) -> Subset {
        for _ in 0..64 {
            let x = self.subset(a.domain());
            if a.principal_nullity(x.mask()) == 0 {
                return x;
            }
        }
        Subset::empty(a.domain())
    }

    /// A nonempty subset with `A[X]` nonsingular, by rejection.
    pub fn nonempty_nonsingular_subset(&mut self, a: &Matrix) -> Option<Subset> {
        (0..256)
            .map(|_| self.subset(a.domain()))
            .find(|x| !x.is_empty() && a.principal_nullity(x.mask()) == 0)
    }

    pub fn vector(&mut self, n: usize, field: Field) -> Vec<Scalar> {
        (0..n)
            .map(|_| match field {
                Field::F2 => Scalar::F2(self.rng.gen()),
                Field::Q => Scalar::integer(Field::Q, self.rng.gen_range(RATIONAL_ENTRY_RANGE)),
            })
            .collect()
    }

    /// A uniform shuffle of two copies of each of `n` letters; panics when `n` is 0.
    pub fn double_occurrence_string(&mut self, n: usize) -> DoubleOccurrenceString {
        let domain = Domain::numbered(n);
        let mut letters: Vec<String> = domain
            .labels()
            .iter()
            .flat_map(|l| [l.clone(), l.clone()])
            .collect();
        letters.shuffle(&mut self.rng);
        DoubleOccurrenceString::from_letters(letters).expect("every letter twice")
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> Option<&'a T> {
        items.choose(&mut self.rng)
    }

    fn bits(&mut self, n: usize) -> u64 {
        self.rng.gen::<u64>() & crate::domain::full_mask(n)
    }
}

//! Randomized verification suites, shared by the `verify` subcommand and the tests.
//!
//! Each trial draws fresh inputs from a seeded [`Generator`] and evaluates one
//! identity exactly. A trial either passes or records a one-line description
//! of the failing input.

use std::fmt;
use std::str::FromStr;

use crate::circuits::cohn_lempel_check;
use crate::domain::Subset;
use crate::error::Result;
use crate::graph::{elementary_decomposition, Graph};
use crate::interlace::{q_direct, q_general_recursive, q_recursive};
use crate::matrix::Matrix;
use crate::pivot::{nullity_pair, pivot, tucker_pair, verify_partial_inverse};
use crate::random::Generator;
use crate::scalar::Field;
use crate::set_systems::partition_sequence_of;

/// Above this size, identities quantified over every `Y ⊆ V` sample `Y` instead.
pub const EXHAUSTIVE_LIMIT: usize = 12;
const SAMPLED_SUBSETS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    NullityInvariance,
    Tucker,
    PartialInverse,
    Twist,
    Recursion,
    CohnLempel,
    PivotInvariance,
    Elementary,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::NullityInvariance,
        Property::Tucker,
        Property::PartialInverse,
        Property::Twist,
        Property::Recursion,
        Property::CohnLempel,
        Property::PivotInvariance,
        Property::Elementary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::NullityInvariance => "nullity-invariance",
            Property::Tucker => "tucker",
            Property::PartialInverse => "partial-inverse",
            Property::Twist => "twist",
            Property::Recursion => "recursion",
            Property::CohnLempel => "cohn-lempel",
            Property::PivotInvariance => "pivot-invariance",
            Property::Elementary => "elementary",
        }
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
                format!("unknown property {s:?} (expected one of {})", names.join(", "))
            })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub trials: usize,
    /// Largest matrix size; each trial draws its size from `1..=size`.
    pub size: usize,
    pub seed: u64,
    pub field: Field,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub property: Property,
    pub trials: usize,
    pub passed: usize,
    /// Descriptions of the first few failing trials.
    pub failures: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} pass", self.passed, self.trials)
    }
}

const MAX_REPORTED_FAILURES: usize = 5;

pub fn run(property: Property, config: &VerifyConfig) -> Result<Report> {
    let mut gen = Generator::new(config.seed);
    let mut passed = 0;
    let mut failures = Vec::new();
    for trial in 0..config.trials {
        match run_trial(property, config, &mut gen)? {
            None => passed += 1,
            Some(detail) => {
                if failures.len() < MAX_REPORTED_FAILURES {
                    failures.push(format!("trial {trial}: {detail}"));
                }
            }
        }
    }
    Ok(Report { property, trials: config.trials, passed, failures })
}

/// Subsets `Y` to quantify over: all of them for small domains, a sample otherwise.
fn subsets_to_check(a: &Matrix, gen: &mut Generator) -> Vec<Subset> {
    if a.size() <= EXHAUSTIVE_LIMIT {
        (0..1u64 << a.size())
            .map(|m| Subset::from_mask(a.domain(), m).expect("mask in domain"))
            .collect()
    } else {
        (0..SAMPLED_SUBSETS).map(|_| gen.subset(a.domain())).collect()
    }
}

/// Runs one trial; `Some(description)` on failure.
fn run_trial(property: Property, config: &VerifyConfig, gen: &mut Generator) -> Result<Option<String>> {
    let n = gen.size(config.size);
    let field = config.field;
    Ok(match property {
        Property::NullityInvariance => {
            let a = gen.matrix(n, field);
            let x = gen.nonsingular_subset(&a);
            let pivoted = pivot(&a, &x)?;
            subsets_to_check(&a, gen).into_iter().find_map(|y| {
                let (lhs, rhs) = nullity_pair(&a, &pivoted, &x, &y).expect("same domain");
                (lhs != rhs).then(|| format!("X={x} Y={y}: {lhs} != {rhs}\n{a}"))
            })
        }
        Property::Tucker => {
            let a = gen.matrix(n, field);
            let x = gen.nonsingular_subset(&a);
            let pivoted = pivot(&a, &x)?;
            subsets_to_check(&a, gen).into_iter().find_map(|y| {
                let (lhs, rhs) = tucker_pair(&a, &pivoted, &x, &y).expect("X nonsingular");
                (lhs != rhs).then(|| format!("X={x} Y={y}: {lhs} != {rhs}\n{a}"))
            })
        }
        Property::PartialInverse => {
            let a = gen.matrix(n, field);
            let x = gen.nonsingular_subset(&a);
            let v = gen.vector(n, field);
            (!verify_partial_inverse(&a, &x, &v)?).then(|| format!("X={x}\n{a}"))
        }
        Property::Twist => {
            let a = gen.matrix(n, field);
            let x = gen.nonsingular_subset(&a);
            let twisted = partition_sequence_of(&a)?.twist(&x)?;
            let direct = partition_sequence_of(&pivot(&a, &x)?)?;
            (twisted != direct).then(|| format!("X={x}\n{a}"))
        }
        Property::Recursion => {
            let a = match field {
                Field::F2 => gen.graph(n).to_matrix(),
                Field::Q => gen.matrix(n, field),
            };
            let mut failure = None;
            if field == Field::F2 {
                let g = Graph::from_matrix(&a)?;
                let rec = q_recursive(&g);
                let direct = q_direct(&a)?;
                if rec != direct {
                    failure = Some(format!("recursive {rec} != direct {direct}\n{g}"));
                }
            }
            if failure.is_none() {
                if let Some(x) = gen.nonempty_nonsingular_subset(&a) {
                    let labels = x.labels().into_iter().map(str::to_owned).collect::<Vec<_>>();
                    let u = gen.pick(&labels).expect("nonempty").clone();
                    let check = q_general_recursive(&a, &u, &x)?;
                    if !check.holds() {
                        failure = Some(format!(
                            "X={x} u={u}: {} + {} != {}\n{a}",
                            check.deleted, check.pivoted_deleted, check.direct
                        ));
                    }
                }
            }
            failure
        }
        Property::CohnLempel => {
            let s = gen.double_occurrence_string(n);
            (0..1u64 << n).find_map(|m| {
                let x = Subset::from_mask(s.domain(), m).expect("mask in domain");
                let (walks, expected) = cohn_lempel_check(&s, &x).expect("same domain");
                (walks != expected).then(|| format!("s={s} X={x}: {walks} walks, nullity+1 = {expected}"))
            })
        }
        Property::PivotInvariance => {
            let a = gen.matrix(n, field);
            let x = gen.nonsingular_subset(&a);
            let before = q_direct(&a)?;
            let after = q_direct(&pivot(&a, &x)?)?;
            (before != after).then(|| format!("X={x}: {before} != {after}\n{a}"))
        }
        Property::Elementary => {
            let g = gen.graph(n);
            elementary_failure(&g)?
        }
    })
}

/// Checks every elementary pivot and every nonsingular `Y` of `g` against the matrix pivot.
pub fn elementary_failure(g: &Graph) -> Result<Option<String>> {
    let m = g.to_matrix();
    for x in g.elementary_pivots() {
        let x = Subset::from_mask(g.domain(), x)?;
        let by_ops = g.elementary_pivot(&x)?.to_matrix();
        if by_ops != pivot(&m, &x)? {
            return Ok(Some(format!("elementary pivot {x} disagrees\n{g}")));
        }
    }
    for mask in 0..1u64 << g.size() {
        if m.principal_nullity(mask) != 0 {
            continue;
        }
        let y = Subset::from_mask(g.domain(), mask)?;
        let parts = elementary_decomposition(g, &y)?;
        let union = parts.iter().fold(0u64, |acc, p| acc | p.mask());
        let disjoint = parts.iter().map(Subset::len).sum::<usize>() == y.len();
        let composed = parts.iter().try_fold(g.clone(), |h, p| h.elementary_pivot(p))?;
        if union != mask || !disjoint || composed.to_matrix() != pivot(&m, &y)? {
            return Ok(Some(format!("decomposition of {y} disagrees\n{g}")));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("nope".parse::<Property>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for p in Property::ALL {
            for field in [Field::F2, Field::Q] {
                let cfg = VerifyConfig { trials: 20, size: 5, seed: 3, field };
                let report = run(p, &cfg).unwrap();
                assert!(report.all_passed(), "{p} {field}: {:?}", report.failures);
            }
        }
    }

    #[test]
    fn report_format() {
        let cfg = VerifyConfig { trials: 4, size: 3, seed: 0, field: Field::F2 };
        assert_eq!(run(Property::Twist, &cfg).unwrap().to_string(), "4/4 pass");
    }
}

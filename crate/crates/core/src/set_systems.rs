//! Set systems `M_A`, partition sequences `P_A`, twist and norms.
//!
//! Everything here comes from one exhaustive sweep over the `2ⁿ` principal
//! submatrices of a matrix, so domains are capped at [`MAX_ENUMERATION`].

use std::fmt;

use crate::domain::{compress_bits, format_mask, Domain, Subset};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Largest domain the subset sweep accepts.
pub const MAX_ENUMERATION: usize = 24;

pub(crate) fn check_enumerable(n: usize) -> Result<()> {
    if n > MAX_ENUMERATION {
        Err(Error::CapExceeded { what: "subset enumeration", size: n, cap: MAX_ENUMERATION })
    } else {
        Ok(())
    }
}

/// `n(A[X])` for every mask `X`, indexed by mask value.
pub fn subset_nullities(a: &Matrix) -> Result<Vec<u8>> {
    check_enumerable(a.size())?;
    let count = 1u64 << a.size();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..count).into_par_iter().map(|m| a.principal_nullity(m) as u8).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..count).map(|m| a.principal_nullity(m) as u8).collect())
    }
}

/// A family of subsets of a domain, kept sorted by mask value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    domain: Domain,
    members: Vec<u64>,
}

impl SetSystem {
    pub fn new<I: IntoIterator<Item = u64>>(domain: Domain, masks: I) -> Result<Self> {
        let full = domain.full_mask();
        let mut members: Vec<u64> = masks.into_iter().collect();
        if let Some(m) = members.iter().find(|&&m| m & !full != 0) {
            return Err(Error::DomainMismatch(format!("mask {m:#x} outside the domain")));
        }
        members.sort_unstable();
        members.dedup();
        Ok(SetSystem { domain, members })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.iter().map(|&m| Subset::from_mask(&self.domain, m).expect("member in domain"))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, x: &Subset) -> bool {
        x.domain() == &self.domain && self.contains_mask(x.mask())
    }

    /// `M * X = {Y ⊕ X | Y ∈ M}`.
    pub fn twist(&self, x: &Subset) -> Result<SetSystem> {
        self.domain.check_same(x.domain())?;
        SetSystem::new(self.domain.clone(), self.members.iter().map(|m| m ^ x.mask()))
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_class(&self.domain, &self.members))
    }
}

/// `M_A`: the subsets `X` with `A[X]` nonsingular.
pub fn set_system_of(a: &Matrix) -> Result<SetSystem> {
    let nullities = subset_nullities(a)?;
    SetSystem::new(
        a.domain().clone(),
        (0..nullities.len() as u64).filter(|&m| nullities[m as usize] == 0),
    )
}

/// Class sizes `(|P₀|, …, |Pₙ|)` of a partition sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormVector(pub Vec<u64>);

impl NormVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for NormVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `P = (P₀, …, Pₙ)`: class `i` holds the subsets of nullity `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSequence {
    domain: Domain,
    classes: Vec<Vec<u64>>,
}

impl PartitionSequence {
    /// Builds from explicit classes, checking that they partition `2^V`.
    pub fn new(domain: Domain, mut classes: Vec<Vec<u64>>) -> Result<Self> {
        let n = domain.len();
        check_enumerable(n)?;
        if classes.len() > n + 1 {
            return Err(Error::Dimension { expected: n + 1, actual: classes.len() });
        }
        classes.resize(n + 1, Vec::new());
        let mut seen = vec![false; 1usize << n];
        for class in &mut classes {
            class.sort_unstable();
            for &m in class.iter() {
                let slot = seen
                    .get_mut(m as usize)
                    .ok_or_else(|| Error::DomainMismatch(format!("mask {m:#x} outside the domain")))?;
                if *slot {
                    return Err(Error::Precondition(format!(
                        "{} appears twice",
                        format_mask(&domain, m)
                    )));
                }
                *slot = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Precondition("classes do not cover every subset".into()));
        }
        Ok(PartitionSequence { domain, classes })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn class(&self, i: usize) -> &[u64] {
        self.classes.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class_of(&self, mask: u64) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&mask).is_ok())
    }

    pub fn norm(&self) -> NormVector {
        NormVector(self.classes.iter().map(|c| c.len() as u64).collect())
    }

    /// Class 0 as a set system.
    pub fn nonsingular(&self) -> SetSystem {
        SetSystem { domain: self.domain.clone(), members: self.classes[0].clone() }
    }

    /// `P * X`: every member `Y` becomes `Y ⊕ X`, keeping its class.
    pub fn twist(&self, x: &Subset) -> Result<PartitionSequence> {
        self.domain.check_same(x.domain())?;
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let mut t: Vec<u64> = c.iter().map(|m| m ^ x.mask()).collect();
                t.sort_unstable();
                t
            })
            .collect();
        Ok(PartitionSequence { domain: self.domain.clone(), classes })
    }

    /// Keeps the members inside `X`, re-indexed over the domain `X`.
    pub fn restrict(&self, x: &Subset) -> Result<PartitionSequence> {
        self.domain.check_same(x.domain())?;
        let within = x.mask();
        let classes = self.classes[..=x.len()]
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|&&m| m & !within == 0)
                    .map(|&m| compress_bits(m, within))
                    .collect::<Vec<_>>()
            })
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(PartitionSequence { domain: self.domain.restrict(within), classes })
    }
}

/// `P_A`, classifying every subset by the nullity of its principal submatrix.
pub fn partition_sequence_of(a: &Matrix) -> Result<PartitionSequence> {
    let nullities = subset_nullities(a)?;
    let mut classes = vec![Vec::new(); a.size() + 1];
    for (mask, &k) in nullities.iter().enumerate() {
        classes[k as usize].push(mask as u64);
    }
    Ok(PartitionSequence { domain: a.domain().clone(), classes })
}

/// `‖P_A‖` without materializing the classes.
pub fn norm_of(a: &Matrix) -> Result<NormVector> {
    let nullities = subset_nullities(a)?;
    let mut counts = vec![0u64; a.size() + 1];
    for &k in &nullities {
        counts[k as usize] += 1;
    }
    Ok(NormVector(counts))
}

fn format_class(domain: &Domain, masks: &[u64]) -> String {
    let sets: Vec<String> = masks.iter().map(|&m| format_mask(domain, m)).collect();
    format!("{{{}}}", sets.join(","))
}

/// One `i: {…}` line per nonempty class, then `norm: (…)`.
impl fmt::Display for PartitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if !c.is_empty() {
                writeln!(f, "{i}: {}", format_class(&self.domain, c))?;
            }
        }
        writeln!(f, "norm: {}", self.norm())
    }
}

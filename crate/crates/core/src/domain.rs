//! Label domains and subsets of them.
//!
//! A [`Domain`] is a sorted list of distinct labels; every matrix, graph and
//! set system in the crate indexes its rows by position in this list. A
//! [`Subset`] is a bitmask over a domain, so domains hold at most
//! [`MAX_LABELS`] labels.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest domain a [`Subset`] bitmask can describe.
pub const MAX_LABELS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domain(Arc<[String]>);

impl Domain {
    /// Builds a domain from arbitrary labels, sorting them.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) || l.contains(',') {
                return Err(Error::Labels(format!("bad label {l:?}")));
            }
        }
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Labels(format!("duplicate label {:?}", w[0])));
        }
        if labels.len() > MAX_LABELS {
            return Err(Error::CapExceeded {
                what: "a label domain",
                size: labels.len(),
                cap: MAX_LABELS,
            });
        }
        Ok(Domain(labels.into()))
    }

    /// `n` labels `0, 1, ..., n-1`, zero-padded to a common width.
    pub fn numbered(n: usize) -> Self {
        let width = n.saturating_sub(1).to_string().len();
        Domain::new((0..n).map(|i| format!("{i:0width$}"))).expect("valid generated labels")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Mask with every label set.
    pub fn full_mask(&self) -> u64 {
        full_mask(self.len())
    }

    /// The subdomain selected by `mask`, in sorted order.
    pub fn restrict(&self, mask: u64) -> Domain {
        let labels: Vec<String> = iter_bits(mask).map(|i| self.0[i].clone()).collect();
        Domain(labels.into())
    }

    pub(crate) fn check_same(&self, other: &Domain) -> Result<()> {
        if Arc::ptr_eq(&self.0, &other.0) || self == other {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Domain{:?}", &*self.0)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(" "))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices of set bits, ascending.
pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Gathers the bits of `value` at the positions set in `mask` into the low bits.
#[inline]
pub(crate) fn compress_bits(value: u64, mask: u64) -> u64 {
    iter_bits(mask)
        .enumerate()
        .fold(0u64, |out, (k, i)| out | (((value >> i) & 1) << k))
}

/// A subset `X` of a domain `V`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    domain: Domain,
    bits: u64,
}

impl Subset {
    pub fn empty(domain: &Domain) -> Self {
        Subset { domain: domain.clone(), bits: 0 }
    }

    pub fn full(domain: &Domain) -> Self {
        Subset { domain: domain.clone(), bits: domain.full_mask() }
    }

    pub fn from_mask(domain: &Domain, bits: u64) -> Result<Self> {
        if bits & !domain.full_mask() != 0 {
            return Err(Error::DomainMismatch(format!(
                "mask {bits:#x} has bits beyond a domain of size {}",
                domain.len()
            )));
        }
        Ok(Subset { domain: domain.clone(), bits })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(domain: &Domain, indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i >= domain.len() {
                return Err(Error::Dimension { expected: domain.len(), actual: i + 1 });
            }
            bits |= 1 << i;
        }
        Ok(Subset { domain: domain.clone(), bits })
    }

    pub fn from_labels<I, S>(domain: &Domain, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u64;
        for l in labels {
            let l = l.as_ref();
            let i = domain
                .index_of(l)
                .ok_or_else(|| Error::Labels(format!("unknown label {l:?}")))?;
            bits |= 1 << i;
        }
        Ok(Subset { domain: domain.clone(), bits })
    }

    /// Parses a comma-separated label list such as `b,c`. The empty string is `∅`.
    pub fn parse(domain: &Domain, text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(text);
        Subset::from_labels(domain, text.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn mask(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 64 && (self.bits >> index) & 1 == 1
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.domain.index_of(label).is_some_and(|i| self.contains(i))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        iter_bits(self.bits)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.domain.label(i)).collect()
    }

    pub fn complement(&self) -> Subset {
        Subset { domain: self.domain.clone(), bits: !self.bits & self.domain.full_mask() }
    }

    /// `X ⊕ Y`.
    pub fn symmetric_difference(&self, other: &Subset) -> Result<Subset> {
        self.domain.check_same(&other.domain)?;
        Ok(Subset { domain: self.domain.clone(), bits: self.bits ^ other.bits })
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.domain.check_same(&other.domain)?;
        Ok(Subset { domain: self.domain.clone(), bits: self.bits | other.bits })
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Re-expresses this subset over the subdomain selected by `within`.
    pub fn restrict_to(&self, within: &Subset) -> Result<Subset> {
        self.domain.check_same(&within.domain)?;
        if !self.is_subset_of(within) {
            return Err(Error::DomainMismatch(format!("{self} is not inside {within}")));
        }
        Ok(Subset {
            domain: self.domain.restrict(within.bits),
            bits: compress_bits(self.bits, within.bits),
        })
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by domain, then by mask value.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.domain.cmp(&other.domain).then_with(|| self.bits.cmp(&other.bits))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{self}")
    }
}

/// Formats a mask over `domain` as `{a,b}`.
pub(crate) fn format_mask(domain: &Domain, mask: u64) -> String {
    let labels: Vec<&str> = iter_bits(mask).map(|i| domain.label(i)).collect();
    format!("{{{}}}", labels.join(","))
}

//! Double occurrence strings, their overlap graphs and the closed-walk
//! partitions of the associated 2-in, 2-out digraph.
//!
//! A string `s` of length `2n` is read cyclically: arc `i` runs from `s[i]` to
//! `s[i+1]`. Each vertex is visited twice, and a subset `X` of vertices
//! selects where a walk takes the other route. The number of closed walks is
//! then `n(O_s[X]) + 1`, which makes this module an oracle for the linear
//! algebra upstream.

use std::collections::BTreeSet;
use std::fmt;

use crate::domain::{Domain, Subset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set_systems::{check_enumerable, NormVector};

/// A cyclic string in which every letter occurs exactly twice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleOccurrenceString {
    letters: Vec<String>,
    domain: Domain,
    /// Letter index (into `domain`) at each position.
    at: Vec<usize>,
    /// The two positions of each letter, ascending.
    occurrences: Vec<[usize; 2]>,
}

impl DoubleOccurrenceString {
    /// Splits on whitespace when present, otherwise takes one character per letter.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let letters: Vec<String> = if text.chars().any(char::is_whitespace) {
            text.split_whitespace().map(str::to_string).collect()
        } else {
            text.chars().map(String::from).collect()
        };
        Self::from_letters(letters)
    }

    pub fn from_letters(letters: Vec<String>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidString("empty string".into()));
        }
        let distinct: BTreeSet<&str> = letters.iter().map(String::as_str).collect();
        let domain = Domain::new(distinct.iter().copied())
            .map_err(|e| Error::InvalidString(e.to_string()))?;
        let mut occurrences = vec![Vec::with_capacity(2); domain.len()];
        let mut at = Vec::with_capacity(letters.len());
        for (pos, l) in letters.iter().enumerate() {
            let i = domain.index_of(l).expect("letter in domain");
            occurrences[i].push(pos);
            at.push(i);
        }
        if let Some((i, occ)) = occurrences.iter().enumerate().find(|(_, o)| o.len() != 2) {
            return Err(Error::InvalidString(format!(
                "letter {:?} occurs {} times",
                domain.label(i),
                occ.len()
            )));
        }
        let occurrences = occurrences.into_iter().map(|o| [o[0], o[1]]).collect();
        Ok(DoubleOccurrenceString { letters, domain, at, occurrences })
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters joined without separators when all are single characters.
    pub fn render(&self) -> String {
        if self.letters.iter().all(|l| l.chars().count() == 1) {
            self.letters.concat()
        } else {
            self.letters.join(" ")
        }
    }

    /// Rotation starting at the lexicographically smallest position.
    pub fn canonical_rotation(&self) -> Vec<String> {
        let n = self.letters.len();
        let best = (0..n)
            .min_by(|&a, &b| {
                (0..n)
                    .map(|k| &self.letters[(a + k) % n])
                    .cmp((0..n).map(|k| &self.letters[(b + k) % n]))
            })
            .unwrap_or(0);
        (0..n).map(|k| self.letters[(best + k) % n].clone()).collect()
    }

    /// Equality up to rotation (not reversal).
    pub fn cyclically_equal(&self, other: &DoubleOccurrenceString) -> bool {
        self.len() == other.len() && self.canonical_rotation() == other.canonical_rotation()
    }

    /// Position reached from position `p` when entering `s[p]` under `X`.
    #[inline]
    fn next_arc(&self, p: usize, flip: u64) -> usize {
        let v = self.at[p];
        if (flip >> v) & 1 == 1 {
            let [a, b] = self.occurrences[v];
            if p == a {
                b
            } else {
                a
            }
        } else {
            p
        }
    }
}

impl fmt::Display for DoubleOccurrenceString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `O_s`: `{u, v}` is an edge when the occurrences of `u` and `v` interleave.
pub fn overlap_graph(s: &DoubleOccurrenceString) -> Graph {
    let n = s.domain.len();
    let mut rows = vec![0u64; n];
    for u in 0..n {
        let [a, b] = s.occurrences[u];
        for v in u + 1..n {
            let inside = s.occurrences[v].iter().filter(|&&p| a < p && p < b).count();
            if inside == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
    }
    Graph::from_rows(s.domain.clone(), rows).expect("symmetric by construction")
}

/// A directed multigraph whose arcs are numbered; parallel arcs stay distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoInTwoOutDigraph {
    domain: Domain,
    arcs: Vec<(usize, usize)>,
}

impl TwoInTwoOutDigraph {
    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    /// `(tail, head)` vertex indices, by arc number.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.domain.len()];
        for &(_, h) in &self.arcs {
            d[h] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.domain.len()];
        for &(t, _) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    pub fn is_two_in_two_out(&self) -> bool {
        self.in_degrees().iter().all(|&d| d == 2) && self.out_degrees().iter().all(|&d| d == 2)
    }

    /// Number of Euler circuits, by backtracking over unused outgoing arcs from arc 0.
    pub fn euler_circuit_count(&self) -> u64 {
        if self.arcs.is_empty() {
            return 1;
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.domain.len()];
        for (i, &(t, _)) in self.arcs.iter().enumerate() {
            out[t].push(i);
        }
        let mut used = vec![false; self.arcs.len()];
        used[0] = true;
        self.extend(0, 1, &out, &mut used)
    }

    fn extend(&self, last: usize, placed: usize, out: &[Vec<usize>], used: &mut [bool]) -> u64 {
        let head = self.arcs[last].1;
        if placed == self.arcs.len() {
            return u64::from(head == self.arcs[0].0);
        }
        let mut total = 0;
        for &a in &out[head] {
            if !used[a] {
                used[a] = true;
                total += self.extend(a, placed + 1, out, used);
                used[a] = false;
            }
        }
        total
    }
}

/// The digraph traced by `s`: one arc per cyclically consecutive pair.
pub fn digraph_of(s: &DoubleOccurrenceString) -> TwoInTwoOutDigraph {
    let n = s.len();
    let arcs = (0..n).map(|i| (s.at[i], s.at[(i + 1) % n])).collect();
    TwoInTwoOutDigraph { domain: s.domain.clone(), arcs }
}

/// A partition of the arcs into closed walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPartition {
    /// Arc sequences, each rotated to start at its smallest arc, sorted by that arc.
    pub walks: Vec<Vec<usize>>,
    pub inducing_set: Subset,
}

impl WalkPartition {
    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    /// The walks as sets of arcs, for comparing partitions.
    pub fn arc_sets(&self) -> BTreeSet<BTreeSet<usize>> {
        self.walks.iter().map(|w| w.iter().copied().collect()).collect()
    }
}

/// Traces the closed walks that follow `s` at vertices outside `X` and take
/// the other route at vertices in `X`.
pub fn trace_partition(s: &DoubleOccurrenceString, x: &Subset) -> Result<WalkPartition> {
    s.domain.check_same(x.domain())?;
    let flip = x.mask();
    let n = s.len();
    let mut visited = vec![false; n];
    let mut walks = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut arc = start;
        while !visited[arc] {
            visited[arc] = true;
            walk.push(arc);
            arc = s.next_arc((arc + 1) % n, flip);
        }
        debug_assert_eq!(arc, start);
        walks.push(walk);
    }
    Ok(WalkPartition { walks, inducing_set: x.clone() })
}

/// Number of closed walks induced by a mask, without recording them.
pub(crate) fn count_walks(s: &DoubleOccurrenceString, flip: u64) -> usize {
    let n = s.len();
    let mut visited = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        count += 1;
        let mut arc = start;
        while !visited[arc] {
            visited[arc] = true;
            arc = s.next_arc((arc + 1) % n, flip);
        }
    }
    count
}

/// The string read along a single closed walk, and for each of its positions
/// the arc of `s` it came from. `None` when `X` induces more than one walk.
pub fn walk_string(s: &DoubleOccurrenceString, x: &Subset) -> Result<Option<(DoubleOccurrenceString, Vec<usize>)>> {
    let p = trace_partition(s, x)?;
    if p.len() != 1 {
        return Ok(None);
    }
    let arcs = p.walks.into_iter().next().unwrap_or_default();
    let letters = arcs.iter().map(|&a| s.letters[a].clone()).collect();
    Ok(Some((DoubleOccurrenceString::from_letters(letters)?, arcs)))
}

/// `(number of walks induced by X, n(O_s[X]) + 1)`.
pub fn cohn_lempel_check(s: &DoubleOccurrenceString, x: &Subset) -> Result<(usize, usize)> {
    let walks = trace_partition(s, x)?.len();
    let nullity = overlap_graph(s).to_matrix().principal_nullity(x.mask());
    Ok((walks, nullity + 1))
}

/// Histogram over all `X` of (walk count − 1).
pub fn walk_distribution(s: &DoubleOccurrenceString) -> Result<NormVector> {
    let n = s.domain.len();
    check_enumerable(n)?;
    let mut counts = vec![0u64; n + 1];
    for flip in 0..1u64 << n {
        counts[count_walks(s, flip) - 1] += 1;
    }
    Ok(NormVector(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> DoubleOccurrenceString {
        DoubleOccurrenceString::parse("146543625123").unwrap()
    }

    fn subset(s: &DoubleOccurrenceString, t: &str) -> Subset {
        Subset::parse(s.domain(), t).unwrap()
    }

    #[test]
    fn parse_rejects_bad_counts() {
        assert!(matches!(DoubleOccurrenceString::parse("1123"), Err(Error::InvalidString(_))));
        assert!(matches!(DoubleOccurrenceString::parse("111"), Err(Error::InvalidString(_))));
        let multi = DoubleOccurrenceString::parse("ab cd ab cd").unwrap();
        assert_eq!(multi.domain().labels(), ["ab", "cd"]);
        assert_eq!(multi.render(), "ab cd ab cd");
    }

    #[test]
    fn overlap_graph_of_circle_string() {
        let g = overlap_graph(&s());
        let expected = Graph::parse(
            "graph\n1 2 3 4 5 6\n1 2\n1 3\n2 5\n3 5\n4 5\n5 6\n3 6\n4 6\n",
        )
        .unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.to_matrix().nullity(), 0);
        assert_eq!(g.to_matrix().principal_nullity(subset(&s(), "3,4,5,6").mask()), 2);
    }

    #[test]
    fn small_overlap_graphs() {
        let d = DoubleOccurrenceString::parse("1122").unwrap();
        assert!(overlap_graph(&d).is_discrete());
        let e = DoubleOccurrenceString::parse("1212").unwrap();
        assert_eq!(overlap_graph(&e), Graph::parse("graph\n1 2\n1 2\n").unwrap());
    }

    #[test]
    fn digraph_degrees() {
        let d = digraph_of(&s());
        assert_eq!(d.arcs().len(), 12);
        assert!(d.is_two_in_two_out());
        let e = digraph_of(&DoubleOccurrenceString::parse("1212").unwrap());
        assert_eq!(e.arcs(), [(0, 1), (1, 0), (0, 1), (1, 0)]);
    }

    #[test]
    fn switching_four_vertices_gives_three_walks() {
        let p = trace_partition(&s(), &subset(&s(), "3,4,5,6")).unwrap();
        assert_eq!(p.len(), 3);
        let arcs: usize = p.walks.iter().map(Vec::len).sum();
        assert_eq!(arcs, 12);
    }

    #[test]
    fn empty_flip_is_the_euler_circuit() {
        let p = trace_partition(&s(), &Subset::empty(s().domain())).unwrap();
        assert_eq!(p.walks, vec![(0..12).collect::<Vec<_>>()]);
        assert_eq!(cohn_lempel_check(&s(), &Subset::empty(s().domain())).unwrap(), (1, 1));
    }

    #[test]
    fn flip_13_gives_s_prime() {
        let (sp, _) = walk_string(&s(), &subset(&s(), "1,3")).unwrap().unwrap();
        let expected = DoubleOccurrenceString::parse("123625146543").unwrap();
        assert!(sp.cyclically_equal(&expected), "{sp}");
    }

    #[test]
    fn cohn_lempel_on_circle_string() {
        assert_eq!(cohn_lempel_check(&s(), &subset(&s(), "3,4,5,6")).unwrap(), (3, 3));
    }

    #[test]
    fn two_letter_distribution() {
        let e = DoubleOccurrenceString::parse("1212").unwrap();
        let counts: Vec<usize> = (0..4).map(|m| count_walks(&e, m)).collect();
        assert_eq!(counts, [1, 2, 2, 1]);
        assert_eq!(walk_distribution(&e).unwrap(), NormVector(vec![2, 2, 0]));
        assert_eq!(digraph_of(&e).euler_circuit_count(), 2);
    }

    #[test]
    fn rotation_but_not_reversal() {
        let a = DoubleOccurrenceString::parse("1122").unwrap();
        let b = DoubleOccurrenceString::parse("1221").unwrap();
        let c = DoubleOccurrenceString::parse("2211").unwrap();
        assert!(a.cyclically_equal(&b));
        assert!(a.cyclically_equal(&c));
        let d = DoubleOccurrenceString::parse("123123").unwrap();
        let r = DoubleOccurrenceString::parse("321321").unwrap();
        assert!(!d.cyclically_equal(&r));
    }
}

//! Graphs with loops, viewed as symmetric GF(2) matrices, and the elementary
//! pivots on them: local complementation on a looped vertex and edge
//! complementation on an edge between two loopless vertices.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::domain::{format_mask, iter_bits, Domain, Subset};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::set_systems::SetSystem;

/// Default cap on the number of graphs [`pivot_orbit`] may visit.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// Adjacency rows over a sorted domain; bit `j` of row `i` is the edge `{i, j}`,
/// and the diagonal bit is a loop.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    domain: Domain,
    rows: Vec<u64>,
}

impl Graph {
    /// The discrete graph on `domain`.
    pub fn discrete(domain: Domain) -> Self {
        let rows = vec![0; domain.len()];
        Graph { domain, rows }
    }

    pub fn from_rows(domain: Domain, rows: Vec<u64>) -> Result<Self> {
        let m = Matrix::from_bits(domain, rows);
        Graph::from_matrix(&m)
    }

    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        let rows = m
            .bit_rows()
            .ok_or_else(|| Error::Precondition("a graph must be a GF(2) matrix".into()))?;
        if !m.is_symmetric() {
            return Err(Error::Precondition("a graph must be a symmetric matrix".into()));
        }
        Ok(Graph { domain: m.domain().clone(), rows: rows.to_vec() })
    }

    /// Builds a graph from `(u, v)` label pairs; `(u, u)` is a loop.
    pub fn from_edges<'a, I>(domain: Domain, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut g = Graph::discrete(domain);
        for (u, v) in edges {
            let i = g.index(u)?;
            let j = g.index(v)?;
            g.rows[i] |= 1 << j;
            g.rows[j] |= 1 << i;
        }
        Ok(g)
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_bits(self.domain.clone(), self.rows.clone())
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn index(&self, label: &str) -> Result<usize> {
        self.domain
            .index_of(label)
            .ok_or_else(|| Error::Labels(format!("unknown vertex {label:?}")))
    }

    pub fn has_loop(&self, i: usize) -> bool {
        (self.rows[i] >> i) & 1 == 1
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    /// `N(u)`: neighbours other than `u` itself.
    pub fn neighbourhood(&self, i: usize) -> u64 {
        self.rows[i] & !(1 << i)
    }

    /// Edges `(i, j)` with `i <= j`, loops included, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|i| iter_bits(self.rows[i] >> i).map(move |k| (i, i + k)))
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// `G ∖ u`.
    pub fn delete(&self, i: usize) -> Graph {
        let mask = self.domain.full_mask() & !(1 << i);
        self.induced(mask)
    }

    /// `G[X]` for a mask over the domain.
    pub fn induced(&self, mask: u64) -> Graph {
        let rows = iter_bits(mask)
            .map(|r| crate::domain::compress_bits(self.rows[r], mask))
            .collect();
        Graph { domain: self.domain.restrict(mask), rows }
    }

    /// `G * {u}` for a looped vertex `u`.
    pub fn local_complement(&self, u: &str) -> Result<Graph> {
        self.local_complement_at(self.index(u)?)
    }

    pub fn local_complement_at(&self, u: usize) -> Result<Graph> {
        if !self.has_loop(u) {
            return Err(Error::ElementaryUndefined(format!(
                "no loop at {}",
                self.domain.label(u)
            )));
        }
        let nbhd = self.neighbourhood(u);
        let mut rows = self.rows.clone();
        for v in iter_bits(nbhd) {
            rows[v] ^= nbhd;
        }
        Ok(Graph { domain: self.domain.clone(), rows })
    }

    /// `G * {u, v}` for an edge between two loopless vertices.
    pub fn edge_complement(&self, u: &str, v: &str) -> Result<Graph> {
        self.edge_complement_at(self.index(u)?, self.index(v)?)
    }

    pub fn edge_complement_at(&self, u: usize, v: usize) -> Result<Graph> {
        let (lu, lv) = (self.domain.label(u), self.domain.label(v));
        if u == v {
            return Err(Error::ElementaryUndefined(format!("{lu} and {lv} are the same vertex")));
        }
        if !self.adjacent(u, v) {
            return Err(Error::ElementaryUndefined(format!("no edge between {lu} and {lv}")));
        }
        if self.has_loop(u) || self.has_loop(v) {
            return Err(Error::ElementaryUndefined(format!("loop on {lu} or {lv}")));
        }
        let closed_u = self.rows[u] | (1 << u);
        let closed_v = self.rows[v] | (1 << v);
        let only_u = closed_u & !closed_v;
        let only_v = closed_v & !closed_u;
        let both = closed_u & closed_v;
        let mut rows = self.rows.clone();
        for x in iter_bits(only_u) {
            rows[x] ^= only_v | both;
        }
        for x in iter_bits(only_v) {
            rows[x] ^= only_u | both;
        }
        for x in iter_bits(both) {
            rows[x] ^= only_u | only_v;
        }
        Ok(Graph { domain: self.domain.clone(), rows })
    }

    /// Applies the elementary pivot `X` (a looped singleton or a loopless edge).
    pub fn elementary_pivot(&self, x: &Subset) -> Result<Graph> {
        self.domain.check_same(x.domain())?;
        let idx: Vec<usize> = x.indices().collect();
        match idx.as_slice() {
            [u] => self.local_complement_at(*u),
            [u, v] => self.edge_complement_at(*u, *v),
            _ => Err(Error::ElementaryUndefined(format!("{x} is not a vertex or an edge"))),
        }
    }

    /// Every elementary pivot applicable to this graph, loops first, then edges.
    pub fn elementary_pivots(&self) -> Vec<u64> {
        let loops = (0..self.size()).filter(|&u| self.has_loop(u)).map(|u| 1u64 << u);
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| u != v && !self.has_loop(u) && !self.has_loop(v))
            .map(|(u, v)| (1u64 << u) | (1u64 << v));
        loops.chain(edges).collect()
    }

    /// Parses the `graph` / labels / `u v` edge-line format.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = crate::io::content_lines(text);
        let perr = |line, message: &str| Error::Parse { line, message: message.to_string() };
        let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
        if header != "graph" {
            return Err(perr(ln, "expected `graph`"));
        }
        let (ln, label_line) = lines.next().ok_or_else(|| perr(ln + 1, "missing label line"))?;
        let domain = Domain::new(label_line.split_whitespace()).map_err(|e| perr(ln, &e.to_string()))?;
        let mut g = Graph::discrete(domain);
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = toks.as_slice() else {
                return Err(perr(ln, "expected an edge line `u v`"));
            };
            let i = g.index(u).map_err(|e| perr(ln, &e.to_string()))?;
            let j = g.index(v).map_err(|e| perr(ln, &e.to_string()))?;
            g.rows[i] |= 1 << j;
            g.rows[j] |= 1 << i;
        }
        Ok(g)
    }

    /// Compact one-line description, e.g. `{p,q} {p,r} loops {q}`.
    pub fn summary(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| format!("{{{},{}}}", self.domain.label(u), self.domain.label(v)))
            .collect();
        let loops: u64 = (0..self.size()).filter(|&u| self.has_loop(u)).map(|u| 1u64 << u).sum();
        format!("edges [{}] loops {}", edges.join(" "), format_mask(&self.domain, loops))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by domain, then by adjacency rows in label order.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.domain.cmp(&other.domain).then_with(|| self.rows.cmp(&other.rows))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph")?;
        writeln!(f, "{}", self.domain)?;
        for (u, v) in self.edges() {
            writeln!(f, "{} {}", self.domain.label(u), self.domain.label(v))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {})", self.domain, self.summary())
    }
}

/// Splits `Y` into looped singletons and loopless edges whose elementary
/// pivots, applied left to right, compose to `G * Y`.
///
/// At each step the smallest looped vertex of the remaining part is taken,
/// otherwise its lexicographically smallest edge.
pub fn elementary_decomposition(g: &Graph, y: &Subset) -> Result<Vec<Subset>> {
    g.domain.check_same(y.domain())?;
    if g.to_matrix().principal_nullity(y.mask()) != 0 {
        return Err(Error::PivotUndefined { subset: y.clone() });
    }
    let mut parts = Vec::new();
    let mut current = g.clone();
    let mut remaining = y.mask();
    while remaining != 0 {
        let part = iter_bits(remaining)
            .find(|&u| current.has_loop(u))
            .map(|u| 1u64 << u)
            .or_else(|| {
                iter_bits(remaining).find_map(|u| {
                    iter_bits(current.rows[u] & remaining & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0))
                        .next()
                        .map(|v| (1u64 << u) | (1u64 << v))
                })
            })
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "no elementary pivot inside {}",
                    format_mask(&g.domain, remaining)
                ))
            })?;
        let x = Subset::from_mask(&g.domain, part)?;
        current = current.elementary_pivot(&x)?;
        remaining &= !part;
        parts.push(x);
    }
    Ok(parts)
}

/// One elementary pivot between two members of an orbit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Move {
    pub from: usize,
    pub to: usize,
    pub pivot: Subset,
}

/// The members of a pivot orbit in canonical order and the elementary moves between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub graphs: Vec<Graph>,
    pub moves: Vec<Move>,
}

impl Orbit {
    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.graphs.binary_search(g).ok()
    }

    /// Whether an elementary move labelled `pivot` connects `a` and `b` (in either direction).
    pub fn connects(&self, a: &Graph, b: &Graph, pivot: &Subset) -> bool {
        let (Some(i), Some(j)) = (self.position(a), self.position(b)) else {
            return false;
        };
        self.moves
            .iter()
            .any(|m| &m.pivot == pivot && ((m.from, m.to) == (i, j) || (m.from, m.to) == (j, i)))
    }
}

pub fn pivot_orbit(g: &Graph) -> Result<Orbit> {
    pivot_orbit_with_cap(g, DEFAULT_ORBIT_CAP)
}

/// Breadth-first closure of `g` under elementary pivots.
pub fn pivot_orbit_with_cap(g: &Graph, cap: usize) -> Result<Orbit> {
    let mut seen: HashMap<Graph, usize> = HashMap::new();
    let mut found: Vec<Graph> = Vec::new();
    let mut raw_moves: Vec<(usize, usize, u64)> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(g.clone(), 0);
    found.push(g.clone());
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        let current = found[i].clone();
        for x in current.elementary_pivots() {
            let next = current.elementary_pivot(&Subset::from_mask(&g.domain, x)?)?;
            let j = match seen.get(&next) {
                Some(&j) => j,
                None => {
                    if found.len() >= cap {
                        return Err(Error::OrbitOverflow { cap });
                    }
                    let j = found.len();
                    seen.insert(next.clone(), j);
                    found.push(next);
                    queue.push_back(j);
                    j
                }
            };
            raw_moves.push((i, j, x));
        }
    }

    // Renumber into canonical (sorted) order.
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| found[a].cmp(&found[b]));
    let mut rank = vec![0; found.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let graphs: Vec<Graph> = order.iter().map(|&old| found[old].clone()).collect();
    let moves: BTreeSet<Move> = raw_moves
        .into_iter()
        .map(|(a, b, x)| Move {
            from: rank[a],
            to: rank[b],
            pivot: Subset::from_mask(&g.domain, x).expect("mask within domain"),
        })
        .collect();
    Ok(Orbit { graphs, moves: moves.into_iter().collect() })
}

/// Rebuilds `G` from `M_G`: `{u}` is a loop iff `{u} ∈ M`, and `{u,v}` is an
/// edge iff `({u,v} ∈ M) ⊕ ({u} ∈ M ∧ {v} ∈ M)`.
///
/// The input is not checked to come from a graph.
pub fn graph_from_set_system(m: &SetSystem) -> Graph {
    let domain = m.domain().clone();
    let n = domain.len();
    let mut g = Graph::discrete(domain);
    for u in 0..n {
        if m.contains_mask(1 << u) {
            g.rows[u] |= 1 << u;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let pair = m.contains_mask((1 << u) | (1 << v));
            let singles = m.contains_mask(1 << u) && m.contains_mask(1 << v);
            if pair ^ singles {
                g.rows[u] |= 1 << v;
                g.rows[v] |= 1 << u;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pivot::pivot;

    fn graph(labels: &str, edges: &[(&str, &str)]) -> Graph {
        Graph::from_edges(Domain::new(labels.split_whitespace()).unwrap(), edges.iter().copied()).unwrap()
    }

    fn orbit_members() -> [Graph; 5] {
        [
            graph("p q r", &[("p", "q"), ("p", "r"), ("q", "q")]),
            graph("p q r", &[("p", "q"), ("p", "r"), ("p", "p"), ("q", "q")]),
            graph("p q r", &[("p", "q"), ("p", "r"), ("q", "r"), ("p", "p"), ("r", "r")]),
            graph("p q r", &[("p", "r"), ("q", "r"), ("q", "q"), ("r", "r")]),
            graph("p q r", &[("p", "r"), ("q", "r"), ("q", "q")]),
        ]
    }

    #[test]
    fn orbit_local_complements() {
        let [i, ii, iii, iv, v] = orbit_members();
        assert_eq!(i.local_complement("q").unwrap(), ii);
        assert_eq!(ii.local_complement("p").unwrap(), iii);
        assert_eq!(iii.local_complement("r").unwrap(), iv);
        assert_eq!(iv.local_complement("q").unwrap(), v);
    }

    #[test]
    fn orbit_edge_complement() {
        let [i, .., v] = orbit_members();
        assert_eq!(v.edge_complement("p", "r").unwrap(), i);
        assert_eq!(i.edge_complement("p", "r").unwrap(), v);
    }

    #[test]
    fn elementary_errors() {
        let [i, ..] = orbit_members();
        assert!(matches!(i.local_complement("p"), Err(Error::ElementaryUndefined(_))));
        // q has a loop
        assert!(matches!(i.edge_complement("p", "q"), Err(Error::ElementaryUndefined(_))));
        // no edge q-r
        assert!(matches!(i.edge_complement("q", "r"), Err(Error::ElementaryUndefined(_))));
        assert!(matches!(i.local_complement("z"), Err(Error::Labels(_))));
    }

    #[test]
    fn trivial_elementary_cases() {
        let single = graph("a", &[("a", "a")]);
        assert_eq!(single.local_complement("a").unwrap(), single);
        let edge = graph("u v", &[("u", "v")]);
        assert_eq!(edge.edge_complement("u", "v").unwrap(), edge);
    }

    #[test]
    fn elementary_pivots_match_matrix_pivot_on_orbit() {
        for g in orbit_members() {
            for x in g.elementary_pivots() {
                let x = Subset::from_mask(g.domain(), x).unwrap();
                let by_ops = g.elementary_pivot(&x).unwrap();
                let by_matrix = Graph::from_matrix(&pivot(&g.to_matrix(), &x).unwrap()).unwrap();
                assert_eq!(by_ops, by_matrix);
            }
        }
    }

    #[test]
    fn orbit_has_five_members() {
        let [i, ii, iii, iv, v] = orbit_members();
        let orbit = pivot_orbit(&i).unwrap();
        assert_eq!(orbit.graphs.len(), 5);
        let d = i.domain().clone();
        let s = |t: &str| Subset::parse(&d, t).unwrap();
        assert!(orbit.connects(&i, &ii, &s("q")));
        assert!(orbit.connects(&ii, &iii, &s("p")));
        assert!(orbit.connects(&iii, &iv, &s("r")));
        assert!(orbit.connects(&iv, &v, &s("q")));
        assert!(orbit.connects(&v, &i, &s("p,r")));
    }

    #[test]
    fn trivial_orbits() {
        let d = graph("a b c", &[]);
        assert_eq!(pivot_orbit(&d).unwrap().graphs, vec![d.clone()]);
        let l = graph("a", &[("a", "a")]);
        assert_eq!(pivot_orbit(&l).unwrap().graphs.len(), 1);
    }

    #[test]
    fn orbit_cap_is_enforced() {
        let [i, ..] = orbit_members();
        assert_eq!(pivot_orbit_with_cap(&i, 3), Err(Error::OrbitOverflow { cap: 3 }));
    }

    #[test]
    fn decomposition_of_four_vertex_graph() {
        let g = graph("1 2 3 4", &[("1", "3"), ("2", "3"), ("2", "4"), ("3", "4"), ("2", "2"), ("3", "3")]);
        let y = Subset::parse(g.domain(), "1,2,3").unwrap();
        let parts = elementary_decomposition(&g, &y).unwrap();
        let shown: Vec<String> = parts.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["{2}", "{1,3}"]);
        let composed = parts.iter().try_fold(g.clone(), |h, x| h.elementary_pivot(x)).unwrap();
        assert_eq!(composed.to_matrix(), pivot(&g.to_matrix(), &y).unwrap());
        let singular = Subset::parse(g.domain(), "1,4").unwrap();
        assert!(matches!(elementary_decomposition(&g, &singular), Err(Error::PivotUndefined { .. })));
        let lp = Subset::parse(g.domain(), "2").unwrap();
        assert_eq!(elementary_decomposition(&g, &lp).unwrap(), vec![lp]);
    }

    #[test]
    fn graph_text_round_trip() {
        let text = "graph\n1 2 3\n1 2\n2 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.to_string(), text);
        assert_eq!(Graph::parse(&g.to_string()).unwrap(), g);
        assert!(matches!(Graph::parse("graph\n1 2\n1 3\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(Graph::parse("grph\n1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn from_matrix_requires_symmetric_gf2() {
        let m = Matrix::parse("field f2\na b\n0 1\n0 0\n").unwrap();
        assert!(Graph::from_matrix(&m).is_err());
        let q = Matrix::parse("field q\na\n1\n").unwrap();
        assert!(Graph::from_matrix(&q).is_err());
    }
}

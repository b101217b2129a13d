//! Immutable simple graphs on dense vertex labels `0..n-1`.
//!
//! Adjacency is stored as one bit row per vertex, so neighborhood tests and
//! set operations reduce to word operations. All constructors and operators
//! keep the two representation invariants: the adjacency relation is
//! symmetric and loop-free, and the edge count `m` equals half the total
//! population count of the rows.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family `{family}` expects {expected}")]
    Arity {
        family: &'static str,
        expected: &'static str,
    },
    #[error("family `{family}` parameter out of range: {detail}")]
    Range {
        family: &'static str,
        detail: String,
    },
}

/// Simple undirected graph with vertices `0..n-1` and bit-row adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, "])")
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Panics on loops or out-of-range
    /// endpoints; duplicate edges are idempotent.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "loop at vertex {u}");
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1u64 << (u % 64);
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Adjacency rows as single words; `None` when the graph has more than
    /// 64 vertices. This is the representation the search engine runs on.
    pub fn adjacency64(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some((0..self.n).map(|v| self.row(v).first().copied().unwrap_or(0)).collect())
    }

    /// Internal consistency check: symmetry, loop-freedom, edge count.
    pub fn check_invariants(&self) -> bool {
        let mut bits = 0usize;
        for v in 0..self.n {
            if self.has_edge(v, v) {
                return false;
            }
            for u in self.neighbors(v) {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
            bits += self.degree(v);
        }
        bits == 2 * self.m
    }

    // ---- standard families ----------------------------------------------

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star on `n` vertices: center 0 with `n - 1` leaves.
    pub fn star(n: usize) -> Graph {
        assert!(n >= 1);
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Complete multipartite graph; part `i` occupies the next `parts[i]`
    /// vertex labels. A single part yields the edgeless graph.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        let n: usize = parts.iter().sum();
        let mut g = Graph::empty(n);
        let mut starts = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        for &p in parts {
            starts.push(acc);
            acc += p;
        }
        starts.push(acc);
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                for u in starts[i]..starts[i + 1] {
                    for v in starts[j]..starts[j + 1] {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }

    /// Complete split graph: clique `0..h` joined to independent set
    /// `h..h+r`.
    pub fn complete_split(h: usize, r: usize) -> Graph {
        let mut g = Graph::complete(h).disjoint_union(&Graph::empty(r));
        for u in 0..h {
            for v in h..h + r {
                g.add_edge(u, v);
            }
        }
        g
    }

    // ---- operators --------------------------------------------------------

    /// Join: both graphs plus every edge between them. `self`'s vertices
    /// keep their labels; `other`'s are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Mycielski construction. Output labels: originals `v_i = i`, shadows
    /// `u_i = n + i`, apex `w = 2n`. Edges are `E(G)`, `{w u_i}`, and
    /// `{v_i u_j : v_i v_j in E(G)}`, so the size is `3m + n`.
    pub fn mycielski(&self) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(2 * n + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
            g.add_edge(u, n + v);
            g.add_edge(v, n + u);
        }
        for i in 0..n {
            g.add_edge(2 * n, n + i);
        }
        g
    }

    /// Cartesian product. Vertex `(u, v)` gets label `u * other.n() + v`;
    /// `(u,v) ~ (u',v')` iff one coordinate is equal and the other adjacent.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n;
        let mut g = Graph::empty(self.n * nh);
        for u in 0..self.n {
            for (v, w) in other.edges() {
                g.add_edge(u * nh + v, u * nh + w);
            }
        }
        for (u, w) in self.edges() {
            for v in 0..nh {
                g.add_edge(u * nh + v, w * nh + v);
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`; the i-th listed vertex becomes label
    /// `i`. Duplicates are rejected.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), vertices.len(), "duplicate vertex in induced set");
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Graph with the given vertex set removed (complement of `induced_subgraph`).
    pub fn without_vertices(&self, removed: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep).expect("kept vertices are in range")
    }

    // ---- structural metrics ----------------------------------------------

    /// BFS distances from `src`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != u32::MAX)
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn diameter(&self) -> Diameter {
        if self.n == 0 {
            return Diameter::Finite(0);
        }
        let mut best = 0u32;
        for v in 0..self.n {
            for &d in &self.bfs_distances(v) {
                if d == u32::MAX {
                    return Diameter::Unbounded;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// All unordered twin pairs. `Open` means `N(u) = N(v)` (false twins),
    /// `Closed` means `N[u] = N[v]` (true twins); for distinct vertices the
    /// two cases are mutually exclusive.
    pub fn twin_pairs(&self) -> Vec<(usize, usize, TwinKind)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.row(u) == self.row(v) {
                    out.push((u, v, TwinKind::Open));
                } else {
                    let eq_closed = self.row(u).iter().enumerate().all(|(w, &word)| {
                        let mut a = word;
                        let mut b = self.row(v)[w];
                        if u / 64 == w {
                            a |= 1 << (u % 64);
                        }
                        if v / 64 == w {
                            b |= 1 << (v % 64);
                        }
                        a == b
                    });
                    if eq_closed {
                        out.push((u, v, TwinKind::Closed));
                    }
                }
            }
        }
        out
    }

    pub fn is_twin_free(&self) -> bool {
        self.twin_pairs().is_empty()
    }

    /// Independence number by branch-and-bound: branch on a candidate of
    /// maximum residual degree, either excluding it or taking it and
    /// discarding its neighborhood. Exponential; intended for desk-scale
    /// inputs.
    pub fn independence_number(&self) -> u32 {
        fn expand(g: &Graph, cand: &VSet, size: u32, best: &mut u32) {
            let count = cand.count();
            if size + count <= *best {
                return;
            }
            if count == 0 {
                *best = (*best).max(size);
                return;
            }
            let (v, deg) = cand
                .iter()
                .map(|v| (v, cand.count_intersection(g.row(v))))
                .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
                .unwrap();
            if deg == 0 {
                *best = (*best).max(size + count);
                return;
            }
            // take v
            let mut taken = cand.clone();
            taken.remove(v);
            taken.and_not_row(g.row(v));
            expand(g, &taken, size + 1, best);
            // skip v
            let mut skipped = cand.clone();
            skipped.remove(v);
            expand(g, &skipped, size, best);
        }
        if self.n == 0 {
            return 0;
        }
        let mut best = 0;
        expand(self, &VSet::full(self.n), 0, &mut best);
        best
    }

    /// Clique number by branch-and-bound with a greedy-coloring bound.
    pub fn clique_number(&self) -> u32 {
        fn expand(g: &Graph, p: &VSet, size: u32, best: &mut u32) {
            if p.count() == 0 {
                *best = (*best).max(size);
                return;
            }
            // Greedy color classes over p; a clique meets each class once.
            let mut order: Vec<(usize, u32)> = Vec::new();
            let mut rest = p.clone();
            let mut color = 0;
            while rest.count() != 0 {
                color += 1;
                let mut avail = rest.clone();
                while let Some(v) = avail.first() {
                    order.push((v, color));
                    rest.remove(v);
                    avail.remove(v);
                    avail.and_not_row(g.row(v));
                }
            }
            let mut p = p.clone();
            for &(v, c) in order.iter().rev() {
                if size + c <= *best {
                    return;
                }
                let mut np = p.clone();
                np.remove(v);
                np.and_row(g.row(v));
                expand(g, &np, size + 1, best);
                p.remove(v);
            }
        }
        if self.n == 0 {
            return 0;
        }
        let mut best = 0;
        expand(self, &VSet::full(self.n), 0, &mut best);
        best
    }

    pub fn metrics(&self) -> GraphMetrics {
        let degrees = self.degrees();
        GraphMetrics {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            diameter: self.diameter(),
            connected: self.is_connected(),
            alpha: self.independence_number(),
            omega: self.clique_number(),
            isolated: self.isolated_vertices(),
            twin_pairs: self.twin_pairs(),
        }
    }
}

/// Diameter of a graph; disconnected graphs have no finite diameter and
/// report `Unbounded` rather than a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(u32),
    Unbounded,
}

impl Diameter {
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    /// False twins: equal open neighborhoods, necessarily non-adjacent.
    Open,
    /// True twins: equal closed neighborhoods, necessarily adjacent.
    Closed,
}

#[derive(Debug, Clone)]
pub struct GraphMetrics {
    pub max_degree: usize,
    pub min_degree: usize,
    pub diameter: Diameter,
    pub connected: bool,
    pub alpha: u32,
    pub omega: u32,
    pub isolated: Vec<usize>,
    pub twin_pairs: Vec<(usize, usize, TwinKind)>,
}

/// Named graph families buildable from a tag and integer parameters; this
/// is the vocabulary the command-line `generate`/`compute` specs use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    CompleteSplit { clique: usize, independent: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match self {
            FamilySpec::Path(n) => {
                require(*n >= 1, "path", "n >= 1", *n)?;
                Ok(Graph::path(*n))
            }
            FamilySpec::Cycle(n) => {
                require(*n >= 3, "cycle", "n >= 3", *n)?;
                Ok(Graph::cycle(*n))
            }
            FamilySpec::Complete(n) => {
                require(*n >= 1, "complete", "n >= 1", *n)?;
                Ok(Graph::complete(*n))
            }
            FamilySpec::Empty(n) => Ok(Graph::empty(*n)),
            FamilySpec::Star(n) => {
                require(*n >= 1, "star", "n >= 1", *n)?;
                Ok(Graph::star(*n))
            }
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return Err(FamilyError::Arity {
                        family: "multipartite",
                        expected: "at least one part size",
                    });
                }
                if parts.iter().any(|&p| p == 0) {
                    return Err(FamilyError::Range {
                        family: "multipartite",
                        detail: "part sizes must be positive".into(),
                    });
                }
                Ok(Graph::complete_multipartite(parts))
            }
            FamilySpec::CompleteSplit { clique, independent } => {
                require(*clique >= 1, "completesplit", "clique size >= 1", *clique)?;
                require(
                    *independent >= 1,
                    "completesplit",
                    "independent size >= 1",
                    *independent,
                )?;
                Ok(Graph::complete_split(*clique, *independent))
            }
        }
    }
}

fn require(ok: bool, family: &'static str, what: &str, got: usize) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Range {
            family,
            detail: format!("need {what}, got {got}"),
        })
    }
}

// ---- small word-vector set used by the exact search routines --------------

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct VSet(pub(crate) Vec<u64>);

impl VSet {
    pub fn full(n: usize) -> VSet {
        let mut words = vec![u64::MAX; words_for(n)];
        if n % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        VSet(words)
    }

    pub fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    pub fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn and_row(&mut self, row: &[u64]) {
        for (w, &r) in self.0.iter_mut().zip(row) {
            *w &= r;
        }
    }

    pub fn and_not_row(&mut self, row: &[u64]) {
        for (w, &r) in self.0.iter_mut().zip(row) {
            *w &= !r;
        }
    }

    pub fn count_intersection(&self, row: &[u64]) -> u32 {
        self.0
            .iter()
            .zip(row)
            .map(|(w, r)| (w & r).count_ones())
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.0)
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_basics() {
        let g = Graph::path(10);
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 9);
        assert_eq!(g.diameter(), Diameter::Finite(9));
        assert!(g.check_invariants());
    }

    #[test]
    fn multipartite_star() {
        let g = FamilySpec::CompleteMultipartite(vec![1, 4]).build().unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 4);
        let s = Graph::star(5);
        assert_eq!(g, s);
    }

    #[test]
    fn cycle_basics() {
        let g = Graph::cycle(4);
        assert_eq!(g.m(), 4);
        let degs = g.degrees();
        assert!(degs.iter().all(|&d| d == 2));
    }

    #[test]
    fn join_of_cliques() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.join(&k2), Graph::complete(4));
    }

    #[test]
    fn join_fan() {
        // fan = single vertex joined to a path
        let f5 = Graph::empty(1).join(&Graph::path(4));
        assert_eq!(f5.n(), 5);
        assert_eq!(f5.m(), 3 + 4);
        assert_eq!(f5.diameter(), Diameter::Finite(2));
    }

    #[test]
    fn join_bipartite() {
        let g = Graph::empty(2).join(&Graph::empty(3));
        assert_eq!(g, Graph::complete_multipartite(&[2, 3]));
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn union_examples() {
        let g = Graph::complete(1).disjoint_union(&Graph::complete(1));
        assert_eq!(g, Graph::empty(2));
        let two_p4 = Graph::path(4).disjoint_union(&Graph::path(4));
        assert_eq!(two_p4.n(), 8);
        assert_eq!(two_p4.m(), 6);
        let g = Graph::complete(3).disjoint_union(&Graph::cycle(4));
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 7);
        assert_eq!(g.connected_components().len(), 2);
    }

    #[test]
    fn mycielski_of_k2_is_c5() {
        let g = Graph::complete(2).mycielski();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 5);
        assert!(g.is_connected());
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn mycielski_of_c5_is_grotzsch_sized() {
        let g = Graph::cycle(5).mycielski();
        assert_eq!(g.n(), 11);
        assert_eq!(g.m(), 20);
    }

    #[test]
    fn mycielski_of_single_vertex() {
        let g = Graph::empty(1).mycielski();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn product_examples() {
        let p2 = Graph::path(2);
        assert_eq!(p2.cartesian_product(&p2).m(), 4);
        let degs = p2.cartesian_product(&p2).degrees();
        assert!(degs.iter().all(|&d| d == 2)); // C4
        let grid = p2.cartesian_product(&Graph::path(3));
        assert_eq!(grid.n(), 6);
        assert_eq!(grid.m(), 7);
        let g = Graph::cycle(5);
        assert_eq!(Graph::complete(1).cartesian_product(&g), g);
    }

    #[test]
    fn metrics_examples() {
        let m = Graph::path(10).metrics();
        assert_eq!(m.max_degree, 2);
        assert_eq!(m.min_degree, 1);
        assert_eq!(m.diameter, Diameter::Finite(9));
        assert_eq!(m.alpha, 5);
        assert!(m.connected);

        let m = Graph::cycle(4).metrics();
        let opens: Vec<_> = m
            .twin_pairs
            .iter()
            .filter(|&&(_, _, k)| k == TwinKind::Open)
            .collect();
        assert_eq!(opens.len(), 2); // the two diagonals

        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        let m = g.metrics();
        assert_eq!(m.diameter, Diameter::Unbounded);
        assert_eq!(m.isolated, vec![3]);
    }

    #[test]
    fn induced_and_complement() {
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        let p3 = Graph::cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let c4c = Graph::cycle(4).complement();
        assert_eq!(c4c.m(), 2); // 2K2
        assert_eq!(c4c.connected_components().len(), 2);
        assert!(Graph::path(3).induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn complement_involution() {
        for n in 0..6 {
            let g = Graph::path(n.max(1));
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn alpha_omega_duality_small() {
        // alpha computed by independent-set search, omega by clique search:
        // the two must agree through complementation.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u64..1 << pairs {
                let g = graph_from_mask(n, mask);
                assert_eq!(g.independence_number(), g.complement().clique_number());
            }
        }
    }

    pub(crate) fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(Graph::complete(6).clique_number(), 6);
        assert_eq!(Graph::cycle(5).clique_number(), 2);
        assert_eq!(Graph::cycle(5).independence_number(), 2);
        assert_eq!(Graph::empty(4).independence_number(), 4);
    }
}

//! Color partitions and the locating verifiers.
//!
//! A [`Coloring`] is an ordered partition of the vertex set into non-empty
//! classes, held in canonical form (classes sorted by their minimum vertex,
//! members ascending) so that witnesses compare bit-exactly across runs.
//! Independence of the classes is a property checked by [`is_proper`], not
//! an invariant of the type: the verifiers must be able to reject improper
//! partitions with a reason.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("class {class} is empty")]
    EmptyClass { class: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {v} appears in more than one class")]
    DuplicateVertex { v: usize },
    #[error("vertex {v} not covered by any class")]
    UncoveredVertex { v: usize },
    #[error("coloring line: {0}")]
    BadLine(String),
}

/// Ordered partition of `0..n-1` into `k` non-empty color classes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    n: usize,
    assignment: Vec<u32>,
    classes: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Coloring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Coloring({:?})", self.classes)
    }
}

impl Coloring {
    /// Builds a coloring from explicit classes, validating that they
    /// partition `0..n` and normalizing to canonical order.
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Coloring, ColoringError> {
        let mut assignment = vec![u32::MAX; n];
        for (ci, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass { class: ci });
            }
            for &v in class {
                if v >= n {
                    return Err(ColoringError::VertexOutOfRange { v, n });
                }
                if assignment[v] != u32::MAX {
                    return Err(ColoringError::DuplicateVertex { v });
                }
                assignment[v] = ci as u32;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == u32::MAX) {
            return Err(ColoringError::UncoveredVertex { v });
        }
        Ok(Self::canonicalize(assignment))
    }

    /// Builds a coloring from a per-vertex color assignment. Color values
    /// are relabeled canonically (by first appearance, i.e. by each class's
    /// minimum vertex); gaps in the value range are tolerated.
    pub fn from_assignment(colors: &[u32]) -> Coloring {
        Self::canonicalize(colors.to_vec())
    }

    fn canonicalize(raw: Vec<u32>) -> Coloring {
        let n = raw.len();
        let mut relabel: std::collections::HashMap<u32, u32> = std::collections::HashMap::new();
        let mut assignment = vec![0u32; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (v, &c) in raw.iter().enumerate() {
            let next = relabel.len() as u32;
            let id = *relabel.entry(c).or_insert(next);
            if id as usize == classes.len() {
                classes.push(Vec::new());
            }
            assignment[v] = id;
            classes[id as usize].push(v);
        }
        Coloring {
            n,
            assignment,
            classes,
        }
    }

    /// One singleton class per vertex.
    pub fn singletons(n: usize) -> Coloring {
        Coloring::from_assignment(&(0..n as u32).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes (equals the number of used colors).
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v] as usize
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Space-separated 0-based color indices, one per vertex; the line form
    /// used in result records next to a graph6 string.
    pub fn to_line(&self) -> String {
        self.assignment
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the line form. `expected_n` guards length mismatches.
    pub fn parse_line(line: &str, expected_n: usize) -> Result<Coloring, ColoringError> {
        let values: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| ColoringError::BadLine(format!("bad color index `{tok}`")))
            })
            .collect::<Result<_, _>>()?;
        if values.len() != expected_n {
            return Err(ColoringError::BadLine(format!(
                "expected {expected_n} color indices, got {}",
                values.len()
            )));
        }
        Ok(Coloring::from_assignment(&values))
    }
}

/// Per-vertex signature against a partition: entry `i` is 0 on the vertex's
/// own class, 1 when the vertex has a neighbor in class `i`, 2 otherwise.
/// Exactly one entry is 0; on connected graphs entry `i` equals
/// `min(2, d(v, S_i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NrTuple(pub Vec<u8>);

impl NrTuple {
    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    /// The word over `{0,1,2}` this tuple spells, e.g. `012`.
    pub fn word(&self) -> String {
        self.0.iter().map(|e| char::from(b'0' + e)).collect()
    }
}

/// Vector of graph distances from a vertex to each class; defined for
/// connected graphs only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector(pub Vec<u32>);

/// Outcome of a locating-coloring verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// Some class contains the edge `(u, v)`.
    NotProper { u: usize, v: usize },
    /// `u` and `v` share a class but are not located (equal signatures).
    Clash { u: usize, v: usize },
}

impl Verdict {
    pub fn accepted(&self) -> bool {
        matches!(self, Verdict::Accepted)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Accepted => write!(f, "accepted"),
            Verdict::NotProper { u, v } => write!(f, "rejected: class contains edge ({u},{v})"),
            Verdict::Clash { u, v } => write!(f, "rejected: clash between {u} and {v}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph is disconnected; distance-based location is undefined")]
pub struct Disconnected;

fn assert_matches(g: &Graph, c: &Coloring) {
    assert_eq!(
        g.n(),
        c.n(),
        "coloring on {} vertices applied to graph on {}",
        c.n(),
        g.n()
    );
}

/// The nr-tuple of `v` against partition `c`. Neighborhood-based, so it is
/// well defined on disconnected graphs.
pub fn nr_tuple(g: &Graph, c: &Coloring, v: usize) -> NrTuple {
    assert_matches(g, c);
    assert!(v < g.n(), "vertex {v} out of range");
    let mut entries = vec![2u8; c.k()];
    entries[c.class_of(v)] = 0;
    for u in g.neighbors(v) {
        let cu = c.class_of(u);
        if entries[cu] == 2 {
            entries[cu] = 1;
        }
    }
    NrTuple(entries)
}

/// Checks that every class is independent; on failure reports the first
/// offending edge in canonical order (classes in order, pairs lexicographic).
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<(), (usize, usize)> {
    assert_matches(g, c);
    for class in c.classes() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if g.has_edge(u, v) {
                    return Err((u, v));
                }
            }
        }
    }
    Ok(())
}

/// Neighbor-locating verification: proper, and within every class the
/// nr-tuples are pairwise distinct. Distinctness within classes is
/// equivalent to distinctness over all vertex pairs, because tuples from
/// different classes differ at their zero position; debug builds assert the
/// two formulations agree.
pub fn is_nl(g: &Graph, c: &Coloring) -> Verdict {
    assert_matches(g, c);
    let verdict = (|| {
        if let Err((u, v)) = is_proper(g, c) {
            return Verdict::NotProper { u, v };
        }
        for class in c.classes() {
            let tuples: Vec<NrTuple> = class.iter().map(|&v| nr_tuple(g, c, v)).collect();
            for (i, &u) in class.iter().enumerate() {
                for (j, &v) in class.iter().enumerate().skip(i + 1) {
                    if tuples[i] == tuples[j] {
                        return Verdict::Clash { u, v };
                    }
                }
            }
        }
        Verdict::Accepted
    })();
    #[cfg(debug_assertions)]
    {
        if is_proper(g, c).is_ok() {
            let mut seen = std::collections::HashSet::new();
            let global_distinct = (0..g.n()).all(|v| seen.insert(nr_tuple(g, c, v)));
            debug_assert_eq!(
                global_distinct,
                verdict.accepted(),
                "within-class and global nr distinctness disagree"
            );
        }
    }
    verdict
}

/// Distance vector of `v` against the classes of `c`.
pub fn distance_vector(g: &Graph, c: &Coloring, v: usize) -> Result<DistanceVector, Disconnected> {
    assert_matches(g, c);
    let dist = g.bfs_distances(v);
    if dist.iter().any(|&d| d == u32::MAX) {
        return Err(Disconnected);
    }
    Ok(DistanceVector(
        c.classes()
            .iter()
            .map(|class| class.iter().map(|&u| dist[u]).min().expect("non-empty class"))
            .collect(),
    ))
}

/// Metric-locating verification: proper, and within every class the
/// distance vectors are pairwise distinct. Connected graphs only.
pub fn is_ml(g: &Graph, c: &Coloring) -> Result<Verdict, Disconnected> {
    assert_matches(g, c);
    if !g.is_connected() {
        return Err(Disconnected);
    }
    if let Err((u, v)) = is_proper(g, c) {
        return Ok(Verdict::NotProper { u, v });
    }
    // One BFS per vertex, shared across classes.
    let vectors: Vec<DistanceVector> = (0..g.n())
        .map(|v| distance_vector(g, c, v).expect("connected"))
        .collect();
    for class in c.classes() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                if vectors[u] == vectors[v] {
                    return Ok(Verdict::Clash { u, v });
                }
            }
        }
    }
    Ok(Verdict::Accepted)
}

/// Dominating partition test: every vertex is at distance exactly 1 from
/// some class, i.e. has a neighbor outside its own class. For proper
/// partitions this reduces to the absence of isolated vertices.
pub fn is_dominating(g: &Graph, c: &Coloring) -> bool {
    assert_matches(g, c);
    (0..g.n()).all(|v| g.neighbors(v).any(|u| c.class_of(u) != c.class_of(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn coloring(classes: &[&[usize]]) -> Coloring {
        let n = classes.iter().map(|c| c.len()).sum();
        Coloring::from_classes(n, classes.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let c = Coloring::from_classes(4, vec![vec![1, 3], vec![0, 2]]).unwrap();
        assert_eq!(c.classes(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(c.assignment(), &[0, 1, 0, 1]);
        let c2 = Coloring::from_assignment(&[5, 9, 5, 9]);
        assert_eq!(c, c2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Coloring::from_classes(2, vec![vec![0, 1], vec![]]),
            Err(ColoringError::EmptyClass { class: 1 })
        );
        assert_eq!(
            Coloring::from_classes(2, vec![vec![0]]),
            Err(ColoringError::UncoveredVertex { v: 1 })
        );
        assert_eq!(
            Coloring::from_classes(2, vec![vec![0, 0], vec![1]]),
            Err(ColoringError::DuplicateVertex { v: 0 })
        );
    }

    #[test]
    fn nr_tuple_examples() {
        let p3 = Graph::path(3);
        let c = coloring(&[&[0, 2], &[1]]);
        assert_eq!(nr_tuple(&p3, &c, 0).entries(), &[0, 1]);

        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        let c = Coloring::from_classes(4, vec![vec![0, 3], vec![1], vec![2]]).unwrap();
        assert_eq!(nr_tuple(&g, &c, 3).entries(), &[0, 2, 2]);

        let c5 = Graph::cycle(5);
        let c = Coloring::from_assignment(&[0, 1, 0, 1, 2]);
        assert_eq!(nr_tuple(&c5, &c, 2).entries(), &[0, 1, 2]);
    }

    #[test]
    fn proper_examples() {
        let k2 = Graph::complete(2);
        let all_one = Coloring::from_classes(2, vec![vec![0, 1]]).unwrap();
        assert_eq!(is_proper(&k2, &all_one), Err((0, 1)));
        assert!(is_proper(&k2, &Coloring::singletons(2)).is_ok());
        let p4 = Graph::path(4);
        let bip = Coloring::from_assignment(&[0, 1, 0, 1]);
        assert!(is_proper(&p4, &bip).is_ok());
    }

    #[test]
    fn nl_examples() {
        // hand-checked 4-class neighbor-locating coloring of the 10-path
        let p10 = Graph::path(10);
        let c = Coloring::parse_line("0 1 0 2 1 0 3 2 1 3", 10).unwrap();
        assert_eq!(is_nl(&p10, &c), Verdict::Accepted);

        let c4 = Graph::cycle(4);
        let bip = Coloring::from_assignment(&[0, 1, 0, 1]);
        assert_eq!(is_nl(&c4, &bip), Verdict::Clash { u: 0, v: 2 });

        let c5 = Graph::cycle(5);
        let c = Coloring::from_classes(5, vec![vec![0, 2], vec![1, 3], vec![4]]).unwrap();
        assert_eq!(is_nl(&c5, &c), Verdict::Accepted);
    }

    #[test]
    fn ml_examples() {
        // hand-checked 3-class metric-locating coloring of the 10-path:
        // evens, odds below 9, and {9}; distances to {9} separate classmates
        let p10 = Graph::path(10);
        let c = Coloring::parse_line("0 1 0 1 0 1 0 1 0 2", 10).unwrap();
        assert_eq!(is_ml(&p10, &c), Ok(Verdict::Accepted));

        assert_eq!(
            is_ml(&p10, &Coloring::singletons(10)),
            Ok(Verdict::Accepted)
        );

        let bip = Coloring::from_assignment(&[0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(is_ml(&p10, &bip), Ok(Verdict::Clash { u: 0, v: 2 }));

        let disc = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(is_ml(&disc, &Coloring::singletons(4)), Err(Disconnected));
    }

    #[test]
    fn dominating_examples() {
        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        let c = Coloring::from_classes(4, vec![vec![0, 3], vec![1], vec![2]]).unwrap();
        assert!(!is_dominating(&g, &c)); // isolated vertex

        let k2 = Graph::complete(2);
        assert!(is_dominating(&k2, &Coloring::singletons(2)));

        let c5 = Graph::cycle(5);
        let c = Coloring::from_classes(5, vec![vec![0, 2], vec![1, 3], vec![4]]).unwrap();
        assert!(is_nl(&c5, &c).accepted());
        assert!(is_dominating(&c5, &c));
    }

    #[test]
    fn line_roundtrip() {
        let c = Coloring::parse_line("0 1 0 2", 4).unwrap();
        assert_eq!(c.to_line(), "0 1 0 2");
        assert!(Coloring::parse_line("0 1", 4).is_err());
        assert!(Coloring::parse_line("0 x 0 2", 4).is_err());
    }
}

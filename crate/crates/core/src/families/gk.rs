//! The capacity-tight graphs `G_k`: vertices are the words of length `k`
//! over `{0,1,2}` with exactly one 0 and at least one 1; a word with its 0
//! in position `i` is adjacent to a word with its 0 in position `j != i`
//! exactly when each carries a 1 at the other's zero position. The word
//! classes `W_1..W_k` form a neighbor-locating coloring, and the order
//! meets the counting bound `k (2^{k-1} - 1)` exactly.

use super::FamiliesError;
use crate::coloring::{is_nl, nr_tuple, Coloring};
use crate::graph::Graph;

pub const GK_MIN: usize = 3;
pub const GK_MAX: usize = 8;

/// Closed-form parameters of `G_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GkSpec {
    pub k: usize,
    /// order: `k (2^{k-1} - 1)`
    pub order: u64,
    /// size: `k (k-1) 2^{2k-5}`
    pub size: u64,
    /// minimum degree: `2^{k-2}`
    pub min_degree: u64,
    /// maximum degree: `(k-1) 2^{k-2}`
    pub max_degree: u64,
    /// least size of a spanning subgraph of `G_k` of full order whose
    /// NL-number is still `k`: `k (k-1) 2^{k-3}`
    pub min_size_full_order: u64,
}

impl GkSpec {
    pub fn new(k: usize) -> GkSpec {
        assert!(k >= 3);
        let kk = k as u64;
        GkSpec {
            k,
            order: kk * ((1 << (k - 1)) - 1),
            size: kk * (kk - 1) * (1 << (2 * k - 5)),
            min_degree: 1 << (k - 2),
            max_degree: (kk - 1) * (1 << (k - 2)),
            min_size_full_order: kk * (kk - 1) * (1 << (k - 3)),
        }
    }
}

/// `G_k` together with its canonical coloring and the vertex↔word table.
#[derive(Debug, Clone)]
pub struct GkGraph {
    pub graph: Graph,
    pub coloring: Coloring,
    pub spec: GkSpec,
    /// `words[v]` is the `{0,1,2}` word of vertex `v`.
    pub words: Vec<Vec<u8>>,
}

impl GkGraph {
    /// Text sidecar mapping each vertex to its word, one `v<TAB>word` line.
    pub fn word_table(&self) -> String {
        self.words
            .iter()
            .enumerate()
            .map(|(v, w)| {
                let word: String = w.iter().map(|&d| char::from(b'0' + d)).collect();
                format!("{v}\t{word}\n")
            })
            .collect()
    }
}

/// Vertex id of the word with zero position `zero` and 1/2 pattern `bits`
/// over the remaining positions (bit set = digit 2, most significant bit =
/// first non-zero position). Words sort lexicographically within a class.
fn vertex_id(k: usize, zero: usize, bits: u64) -> usize {
    zero * ((1usize << (k - 1)) - 1) + bits as usize
}

fn word_of(k: usize, zero: usize, bits: u64) -> Vec<u8> {
    let mut word = Vec::with_capacity(k);
    let mut t = 0;
    for pos in 0..k {
        if pos == zero {
            word.push(0);
        } else {
            let bit = bits >> (k - 2 - t) & 1;
            word.push(if bit == 1 { 2 } else { 1 });
            t += 1;
        }
    }
    word
}

pub fn generate_gk(k: usize) -> Result<GkGraph, FamiliesError> {
    if !(GK_MIN..=GK_MAX).contains(&k) {
        return Err(FamiliesError::KRange {
            k,
            min: GK_MIN,
            max: GK_MAX,
        });
    }
    let spec = GkSpec::new(k);
    let per_class = (1usize << (k - 1)) - 1; // all-2 pattern excluded
    let n = k * per_class;
    let mut words = Vec::with_capacity(n);
    for zero in 0..k {
        for bits in 0..per_class as u64 {
            debug_assert_eq!(words.len(), vertex_id(k, zero, bits));
            words.push(word_of(k, zero, bits));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        let zu = u / per_class;
        for v in u + 1..n {
            let zv = v / per_class;
            if zu != zv && words[u][zv] == 1 && words[v][zu] == 1 {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges);
    let assignment: Vec<u32> = (0..n).map(|v| (v / per_class) as u32).collect();
    let coloring = Coloring::from_assignment(&assignment);

    assert_eq!(graph.n() as u64, spec.order);
    assert_eq!(graph.m() as u64, spec.size);
    let degrees = graph.degrees();
    assert_eq!(degrees.iter().copied().min().unwrap() as u64, spec.min_degree);
    assert_eq!(degrees.iter().copied().max().unwrap() as u64, spec.max_degree);
    Ok(GkGraph {
        graph,
        coloring,
        spec,
        words,
    })
}

/// Embeds a graph with an accepted `k`-class NL-coloring into `G_k` by
/// identifying each vertex with its nr-tuple word. The map is injective
/// (signatures are globally distinct under an accepted coloring) and
/// edge-preserving; both are re-checked before returning.
pub fn embed_into_gk(h: &Graph, c: &Coloring) -> Result<Vec<usize>, FamiliesError> {
    if let Some(&v) = h.isolated_vertices().first() {
        return Err(FamiliesError::IsolatedVertex { v });
    }
    let verdict = is_nl(h, c);
    if !verdict.accepted() {
        return Err(FamiliesError::NotNeighborLocating(verdict.to_string()));
    }
    let k = c.k();
    let gk = generate_gk(k)?;
    let map: Vec<usize> = (0..h.n())
        .map(|v| {
            let tuple = nr_tuple(h, c, v);
            let zero = c.class_of(v);
            let mut bits = 0u64;
            let mut t = 0;
            for (pos, &e) in tuple.entries().iter().enumerate() {
                if pos != zero {
                    if e == 2 {
                        bits |= 1 << (k - 2 - t);
                    }
                    t += 1;
                }
            }
            vertex_id(k, zero, bits)
        })
        .collect();
    // injectivity
    let mut seen = vec![false; gk.graph.n()];
    for &img in &map {
        assert!(!seen[img], "embedding collided; coloring was not locating");
        seen[img] = true;
    }
    // edge preservation
    for (u, v) in h.edges() {
        assert!(
            gk.graph.has_edge(map[u], map[v]),
            "embedding dropped edge ({u},{v})"
        );
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_nl;
    use crate::graph::Diameter;
    use crate::solver::{chi_nl, counting_lower_bound};

    #[test]
    fn g3_parameters() {
        let gk = generate_gk(3).unwrap();
        assert_eq!(gk.graph.n(), 9);
        assert_eq!(gk.graph.m(), 12);
        let degs = gk.graph.degrees();
        assert_eq!(degs.iter().copied().min().unwrap(), 2);
        assert_eq!(degs.iter().copied().max().unwrap(), 4);
        assert_eq!(gk.graph.diameter(), Diameter::Finite(3));
        assert!(is_nl(&gk.graph, &gk.coloring).accepted());
    }

    #[test]
    fn g4_parameters() {
        let gk = generate_gk(4).unwrap();
        assert_eq!(gk.graph.n(), 28);
        assert_eq!(gk.graph.m(), 96);
        let degs = gk.graph.degrees();
        assert_eq!(degs.iter().copied().min().unwrap(), 4);
        assert_eq!(degs.iter().copied().max().unwrap(), 12);
    }

    #[test]
    fn g3_value_is_exactly_k() {
        let gk = generate_gk(3).unwrap();
        assert_eq!(counting_lower_bound(9, 4, false), 3);
        assert_eq!(chi_nl(&gk.graph), 3);
    }

    #[test]
    fn k_range_guard() {
        assert!(generate_gk(2).is_err());
        assert!(generate_gk(9).is_err());
    }

    #[test]
    fn self_embedding_is_identity() {
        for k in [3, 4] {
            let gk = generate_gk(k).unwrap();
            let map = embed_into_gk(&gk.graph, &gk.coloring).unwrap();
            assert!(map.iter().enumerate().all(|(v, &img)| v == img));
            // full-order instance: the size sits in the admissible band
            let m = gk.graph.m() as u64;
            assert!(gk.spec.min_size_full_order <= m && m <= gk.spec.size);
        }
    }

    #[test]
    fn embed_c4_and_p4() {
        let c4 = Graph::cycle(4);
        let w = crate::solver::chi_nl_exact(&c4, &crate::solver::SolveOptions::search_only())
            .expect_solved("c4")
            .witness;
        assert_eq!(w.k(), 4);
        let map = embed_into_gk(&c4, &w).unwrap();
        let gk = generate_gk(4).unwrap();
        for (u, v) in c4.edges() {
            assert!(gk.graph.has_edge(map[u], map[v]));
        }

        let p4 = Graph::path(4);
        let w = crate::solver::chi_nl_exact(&p4, &crate::solver::SolveOptions::search_only())
            .expect_solved("p4")
            .witness;
        assert_eq!(w.k(), 3);
        let map = embed_into_gk(&p4, &w).unwrap();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 4);
    }

    #[test]
    fn embed_rejects_bad_inputs() {
        let g = Graph::path(3).disjoint_union(&Graph::empty(1));
        let c = Coloring::singletons(4);
        assert_eq!(
            embed_into_gk(&g, &c),
            Err(FamiliesError::IsolatedVertex { v: 3 })
        );
        let c4 = Graph::cycle(4);
        let bip = Coloring::from_assignment(&[0, 1, 0, 1]);
        assert!(matches!(
            embed_into_gk(&c4, &bip),
            Err(FamiliesError::NotNeighborLocating(_))
        ));
    }
}

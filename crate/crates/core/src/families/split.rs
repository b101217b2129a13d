//! Split graphs: recognition by the degree-sequence characterization, the
//! clique/independent decomposition with a maximal independent side, the
//! neighborhood-class map over the independent side, and the closed-form
//! value with a constructive witness.

use crate::coloring::{is_nl, Coloring};
use crate::graph::Graph;
use std::collections::BTreeMap;

/// A split decomposition with `W` maximal: every clique vertex has a
/// neighbor in `W`. `classes` groups the independent side by neighborhood
/// (every `N(w)` is a subset of the clique), ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    /// clique side `U`, sorted
    pub clique: Vec<usize>,
    /// independent side `W`, sorted
    pub independent: Vec<usize>,
    /// `(X, P(X))` pairs for each distinct neighborhood `X = N(w)`
    pub classes: Vec<(Vec<usize>, Vec<usize>)>,
    /// `max { |X| + |P(X)| }`, which is at least `|U|`
    pub rho: u32,
}

/// Splits a connected graph into a clique and a maximal independent set, or
/// returns `None` when the graph is not split (or not connected). Uses the
/// degree-sequence characterization: with degrees `d_1 >= ... >= d_n` and
/// `h = max { i : d_i >= i - 1 }`, the graph is split iff
/// `sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i`, in which case the `h` vertices
/// of largest degree form the clique. If one clique vertex has no neighbor
/// in `W` it moves to `W` (at most one can lack a `W`-neighbor, since after
/// the move the rest gain it as a neighbor).
pub fn split_decompose(g: &Graph) -> Option<SplitDecomposition> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let h = (1..=n).filter(|&i| degs[i - 1] >= i - 1).max().unwrap_or(0);
    let left: usize = degs[..h].iter().sum();
    let right: usize = h * (h - 1) + degs[h..].iter().sum::<usize>();
    if left != right {
        return None;
    }
    let mut clique: Vec<usize> = by_degree[..h].to_vec();
    let mut independent: Vec<usize> = by_degree[h..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            assert!(g.has_edge(u, v), "degree characterization: clique side");
        }
    }
    for (i, &u) in independent.iter().enumerate() {
        for &v in &independent[i + 1..] {
            assert!(!g.has_edge(u, v), "degree characterization: independent side");
        }
    }
    // restore maximality of W
    let lacking: Vec<usize> = clique
        .iter()
        .copied()
        .filter(|&u| !independent.iter().any(|&w| g.has_edge(u, w)))
        .collect();
    if let Some(&moved) = lacking.first() {
        clique.retain(|&u| u != moved);
        independent.push(moved);
        independent.sort_unstable();
        for &u in &clique {
            assert!(
                independent.iter().any(|&w| g.has_edge(u, w)),
                "moving one clique vertex restores maximality"
            );
        }
    }

    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &w in &independent {
        let nbrs: Vec<usize> = g.neighbors(w).collect();
        groups.entry(nbrs).or_default().push(w);
    }
    let mut classes: Vec<(Vec<usize>, Vec<usize>)> = groups.into_iter().collect();
    classes.sort_by_key(|(_, members)| members[0]);
    let rho = classes
        .iter()
        .map(|(x, p)| (x.len() + p.len()) as u32)
        .max()
        .unwrap_or(0)
        .max(clique.len() as u32);
    Some(SplitDecomposition {
        clique,
        independent,
        classes,
        rho,
    })
}

/// Closed-form value for a connected split graph, with a constructive
/// accepted witness.
///
/// The value is `rho` when no neighborhood class sits on `|U| - 1` clique
/// vertices, and `max(|U| + 1, rho)` otherwise. The witness colors the
/// clique injectively; in the second case one twin-free set of class
/// representatives takes the extra color, which separates every clique
/// vertex from the independent vertices that see all of the clique but one.
pub fn chi_nl_split(g: &Graph, d: &SplitDecomposition) -> (u32, Coloring) {
    let r = d.clique.len();
    let second_case = d.classes.iter().any(|(x, _)| x.len() + 1 == r);
    let k = if second_case {
        (r as u32 + 1).max(d.rho)
    } else {
        d.rho
    };
    let mut colors = vec![u32::MAX; g.n()];
    let mut color_of_clique = vec![u32::MAX; g.n()];
    for (i, &u) in d.clique.iter().enumerate() {
        colors[u] = i as u32;
        color_of_clique[u] = i as u32;
    }
    let extra = r as u32; // used in the second case only
    for (x, members) in &d.classes {
        let forbidden: Vec<u32> = x.iter().map(|&u| color_of_clique[u]).collect();
        let mut rest: Vec<usize> = Vec::new();
        let mut iter = members.iter();
        if second_case {
            // least member represents the class and takes the extra color
            let rep = *iter.next().expect("class is non-empty");
            colors[rep] = extra;
        }
        rest.extend(iter.copied());
        let mut next = 0u32;
        for &w in &rest {
            while forbidden.contains(&next) || (second_case && next == extra) {
                next += 1;
            }
            assert!(next < k, "per-class color budget exceeded");
            colors[w] = next;
            next += 1;
        }
    }
    let witness = Coloring::from_assignment(&colors);
    assert_eq!(witness.k() as u32, k, "witness must use exactly k classes");
    assert!(
        is_nl(g, &witness).accepted(),
        "split witness failed verification"
    );
    (k, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solver::chi_nl_bruteforce;

    #[test]
    fn p4_decomposition() {
        let d = split_decompose(&Graph::path(4)).unwrap();
        assert_eq!(d.clique, vec![1, 2]);
        assert_eq!(d.independent, vec![0, 3]);
        assert_eq!(d.rho, 2);
        let (k, _) = chi_nl_split(&Graph::path(4), &d);
        assert_eq!(k, 3);
        assert_eq!(chi_nl_bruteforce(&Graph::path(4)).unwrap().0, 3);
    }

    #[test]
    fn star_decomposition() {
        let g = Graph::star(4); // center + 3 leaves
        let d = split_decompose(&g).unwrap();
        assert_eq!(d.clique, vec![0]);
        assert_eq!(d.independent, vec![1, 2, 3]);
        assert_eq!(d.rho, 4);
        let (k, _) = chi_nl_split(&g, &d);
        assert_eq!(k, 4);
    }

    #[test]
    fn complete_split_value_is_order() {
        let g = Graph::complete_split(2, 3);
        let d = split_decompose(&g).unwrap();
        let (k, _) = chi_nl_split(&g, &d);
        assert_eq!(k, 5);
    }

    #[test]
    fn cycles_are_not_split() {
        assert!(split_decompose(&Graph::cycle(5)).is_none());
        assert!(split_decompose(&Graph::cycle(4)).is_none());
    }

    #[test]
    fn complete_graph_decomposition() {
        let g = Graph::complete(4);
        let d = split_decompose(&g).unwrap();
        assert_eq!(d.clique.len(), 3);
        assert_eq!(d.independent.len(), 1);
        let (k, _) = chi_nl_split(&g, &d);
        assert_eq!(k, 4);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::complete(1);
        let d = split_decompose(&g).unwrap();
        assert_eq!(d.clique.len(), 0);
        assert_eq!(d.independent, vec![0]);
        assert_eq!(d.rho, 1);
        let (k, _) = chi_nl_split(&g, &d);
        assert_eq!(k, 1);
    }

    #[test]
    fn paper_construction_gap_instance() {
        // K_3 with two twins on {u1,u2} and one pendant on u3: the witness
        // must put one of the twins on the extra color or it runs out of
        // colors for the twin class.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 1), (5, 2)],
        );
        let d = split_decompose(&g).unwrap();
        assert_eq!(d.clique, vec![0, 1, 2]);
        let (k, w) = chi_nl_split(&g, &d);
        assert_eq!(k, 4);
        assert_eq!(chi_nl_bruteforce(&g).unwrap().0, 4);
        assert!(is_nl(&g, &w).accepted());
    }
}

//! Polynomial recognizers for the graphs whose neighbor-locating chromatic
//! number equals the order or the order minus one.
//!
//! Value `n` (order at least 3): complete multipartite graphs and the
//! edgeless graph. Value `n - 1` (order at least 5): family F (a vertex
//! whose removal leaves a complete multipartite graph, with constrained
//! attachment counts), family G (join of `2K_2` with a complete multipartite
//! core), and a complete multipartite graph plus one isolated vertex.

use crate::graph::Graph;

/// Which extremal family matched, with enough structure to reconstruct the
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalTag {
    CompleteMultipartite { parts: Vec<usize> },
    EmptyGraph,
    FamilyF {
        removed: usize,
        partite_sizes: Vec<usize>,
        attachments: Vec<usize>,
        clause: u8,
    },
    FamilyG { core_parts: Vec<usize> },
    MultipartitePlusK1 { core_parts: Vec<usize> },
}

/// The partite sets of a complete multipartite graph (the complement's
/// connected components, each of which must be independent in the graph),
/// or `None` when the graph is not complete multipartite. A single part
/// means the graph is edgeless.
pub fn multipartite_parts(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if g.n() == 0 {
        return None;
    }
    let parts = g.complement().connected_components();
    for part in &parts {
        for (i, &u) in part.iter().enumerate() {
            for &v in &part[i + 1..] {
                if g.has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    Some(parts)
}

fn part_sizes(parts: &[Vec<usize>]) -> Vec<usize> {
    let mut sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// Recognizes graphs with neighbor-locating chromatic number `n` (order at
/// least 3) or `n - 1` (order at least 5) and returns the certified value;
/// `None` when no family matches.
pub fn recognize_extremal(g: &Graph) -> Option<(ExtremalTag, u32)> {
    let n = g.n();
    if n >= 3 {
        if let Some(parts) = multipartite_parts(g) {
            return Some(if parts.len() == 1 {
                (ExtremalTag::EmptyGraph, n as u32)
            } else {
                (
                    ExtremalTag::CompleteMultipartite {
                        parts: part_sizes(&parts),
                    },
                    n as u32,
                )
            });
        }
    }
    if n >= 5 {
        let iso = g.isolated_vertices();
        if iso.len() == 1 {
            let rest = g.without_vertices(&iso);
            if let Some(parts) = multipartite_parts(&rest) {
                if parts.len() >= 2 {
                    return Some((
                        ExtremalTag::MultipartitePlusK1 {
                            core_parts: part_sizes(&parts),
                        },
                        n as u32 - 1,
                    ));
                }
            }
        }
        if g.is_connected() {
            if let Some(tag) = family_g(g) {
                return Some((tag, n as u32 - 1));
            }
            if let Some(tag) = family_f(g) {
                return Some((tag, n as u32 - 1));
            }
        }
    }
    None
}

/// Family G: join of `2K_2` with a complete multipartite core, detected on
/// the complement, where the `2K_2` side appears as a 4-cycle component and
/// the core parts as clique components.
fn family_g(g: &Graph) -> Option<ExtremalTag> {
    let comp = g.complement();
    let components = comp.connected_components();
    if components.len() < 2 {
        return None;
    }
    let mut four_cycle = false;
    let mut core_parts: Vec<usize> = Vec::new();
    for part in &components {
        let clique = part.iter().enumerate().all(|(i, &u)| {
            part[i + 1..].iter().all(|&v| comp.has_edge(u, v))
        });
        if clique {
            core_parts.push(part.len());
            continue;
        }
        // only a 4-cycle component may appear besides the cliques
        let is_c4 = part.len() == 4
            && part.iter().all(|&v| comp.degree(v) == 2);
        if !is_c4 || four_cycle {
            return None;
        }
        four_cycle = true;
    }
    if four_cycle && !core_parts.is_empty() {
        core_parts.sort_unstable();
        Some(ExtremalTag::FamilyG { core_parts })
    } else {
        None
    }
}

/// Family F: some vertex `v` leaves a complete multipartite graph with
/// parts `V_1..V_k` (k >= 2) when removed, and the attachment counts
/// `a_i = |N(v) ∩ V_i|` satisfy clause 1 (every `a_i` is 0 or the full part,
/// with at least two zeros) or clause 2 (exactly one part is partially
/// attached, missing exactly one vertex).
fn family_f(g: &Graph) -> Option<ExtremalTag> {
    let n = g.n();
    for v in 0..n {
        let kept: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        let rest = g.induced_subgraph(&kept).expect("in range");
        let Some(parts) = multipartite_parts(&rest) else {
            continue;
        };
        if parts.len() < 2 {
            continue;
        }
        let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        let attachments: Vec<usize> = parts
            .iter()
            .map(|p| p.iter().filter(|&&u| g.has_edge(v, kept[u])).count())
            .collect();
        let zeros = attachments.iter().filter(|&&a| a == 0).count();
        let clause1 = attachments
            .iter()
            .zip(&sizes)
            .all(|(&a, &s)| a == 0 || a == s)
            && zeros >= 2;
        let partial: Vec<usize> = attachments
            .iter()
            .zip(&sizes)
            .enumerate()
            .filter(|(_, (&a, &s))| a != 0 && a != s)
            .map(|(i, _)| i)
            .collect();
        let clause2 = partial.len() == 1 && attachments[partial[0]] == sizes[partial[0]] - 1;
        if clause1 || clause2 {
            return Some(ExtremalTag::FamilyF {
                removed: v,
                partite_sizes: sizes,
                attachments,
                clause: if clause1 { 1 } else { 2 },
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn recognizes_complete_multipartite() {
        let (tag, value) = recognize_extremal(&Graph::complete_multipartite(&[2, 3])).unwrap();
        assert_eq!(value, 5);
        assert_eq!(
            tag,
            ExtremalTag::CompleteMultipartite { parts: vec![2, 3] }
        );
        let (tag, value) = recognize_extremal(&Graph::empty(4)).unwrap();
        assert_eq!((tag, value), (ExtremalTag::EmptyGraph, 4));
    }

    #[test]
    fn recognizes_multipartite_plus_isolated() {
        let g = Graph::complete_multipartite(&[2, 2, 1]).disjoint_union(&Graph::empty(1));
        let (tag, value) = recognize_extremal(&g).unwrap();
        assert_eq!(value, 5);
        assert_eq!(
            tag,
            ExtremalTag::MultipartitePlusK1 {
                core_parts: vec![1, 2, 2]
            }
        );
    }

    #[test]
    fn recognizes_family_g() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let g = two_k2.join(&Graph::complete_multipartite(&[1, 1]));
        let (tag, value) = recognize_extremal(&g).unwrap();
        assert_eq!(value, 5);
        assert_eq!(
            tag,
            ExtremalTag::FamilyG {
                core_parts: vec![1, 1]
            }
        );
    }

    #[test]
    fn recognizes_family_f() {
        // triangle with a pendant vertex attached to exactly one part of
        // K_{1,1,1}; two parts untouched, one fully attached
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)]);
        // remove vertex 4: K_4 = multipartite(1,1,1,1); attachments (1,0,0,0)...
        // v=4 attaches fully to the part {3} and not to the others
        let (tag, value) = recognize_extremal(&g).unwrap();
        assert_eq!(value, 4);
        assert!(matches!(tag, ExtremalTag::FamilyF { clause: 1, .. }));
    }

    #[test]
    fn rejects_paths() {
        assert_eq!(recognize_extremal(&Graph::path(10)), None);
        assert_eq!(recognize_extremal(&Graph::cycle(7)), None);
    }
}

//! Value composition for graph operations: join additivity, disjoint-union
//! bounds with their exactness clauses, the realizability constructions for
//! unions, and the coloring extenders for Mycielski graphs and Cartesian
//! products.

use super::{generate_gk, FamiliesError};
use crate::coloring::{is_nl, Coloring};
use crate::graph::Graph;

/// Join additivity: the value of `g ∨ h` is the sum of the factor values;
/// the returned witness is the union of the factor witnesses on disjoint
/// color sets (labels: `g` first, then `h`).
pub fn chi_nl_join<F>(g: &Graph, h: &Graph, mut solve: F) -> (u32, Coloring)
where
    F: FnMut(&Graph) -> (u32, Coloring),
{
    let (kg, cg) = solve(g);
    let (kh, ch) = solve(h);
    let mut assignment = vec![0u32; g.n() + h.n()];
    for v in 0..g.n() {
        assignment[v] = cg.class_of(v) as u32;
    }
    for v in 0..h.n() {
        assignment[g.n() + v] = kg + ch.class_of(v) as u32;
    }
    (kg + kh, Coloring::from_assignment(&assignment))
}

/// Bounds on the value of a disjoint union `g + h` in terms of the factor
/// values `k` and `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionBounds {
    /// `max` of the factor values; always valid.
    pub lower: u32,
    /// `k + h` when both factors have exactly as many isolated vertices as
    /// their value, `k + h - 1` otherwise (possibly improved to `k + 1` for
    /// the union of two copies of a graph with a universal vertex).
    pub upper: u32,
    /// Set when the isolated-vertex clause pins the value exactly.
    pub exact: Option<u32>,
}

/// Computes the union bounds, querying `solve` for the factor values.
/// A null factor contributes nothing: the other factor's value is exact.
pub fn union_bounds<F>(g: &Graph, h: &Graph, mut solve: F) -> UnionBounds
where
    F: FnMut(&Graph) -> u32,
{
    let kg = solve(g);
    let kh = solve(h);
    if g.n() == 0 || h.n() == 0 {
        let v = kg.max(kh);
        return UnionBounds {
            lower: v,
            upper: v,
            exact: Some(v),
        };
    }
    let lower = kg.max(kh);
    let g_iso = g.isolated_vertices().len() as u32;
    let h_iso = h.isolated_vertices().len() as u32;
    if g_iso == kg && h_iso == kh {
        return UnionBounds {
            lower,
            upper: kg + kh,
            exact: Some(kg + kh),
        };
    }
    let mut upper = kg + kh - 1;
    if g == h && (0..g.n()).any(|v| g.degree(v) == g.n() - 1) {
        upper = upper.min(kg + 1);
    }
    UnionBounds {
        lower,
        upper,
        exact: None,
    }
}

/// Complete graph on `clique_size` vertices with `leaf_counts[i]` pendant
/// leaves hanging from clique vertex `i`. Labels: clique first, then leaves
/// grouped by owner in ascending order.
pub fn clique_with_leaves(clique_size: usize, leaf_counts: &[usize]) -> Graph {
    assert!(clique_size >= 1);
    assert_eq!(leaf_counts.len(), clique_size);
    let n = clique_size + leaf_counts.iter().sum::<usize>();
    let mut edges = Vec::new();
    for u in 0..clique_size {
        for v in u + 1..clique_size {
            edges.push((u, v));
        }
    }
    let mut next = clique_size;
    for (owner, &count) in leaf_counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((owner, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Witness pair for the union realizability range: for `3 <= h <= k` and
/// any target `t` in `[k, k+h]` there are graphs with values `k` and `h`
/// whose union has value exactly `t`. The instances are stars at `t = k`,
/// edgeless graphs at `t = k + h`, and otherwise the capacity-tight graph
/// paired with a clique of `t - k` vertices carrying `h - 1` leaves each.
pub fn realizability_instance(
    h: usize,
    k: usize,
    target: usize,
) -> Result<(Graph, Graph), FamiliesError> {
    if !(3..=k).contains(&h) || k > 5 {
        return Err(FamiliesError::Realizability(format!(
            "need 3 <= h <= k <= 5, got h={h} k={k}"
        )));
    }
    if !(k..=k + h).contains(&target) {
        return Err(FamiliesError::Realizability(format!(
            "target {target} outside [{k}, {}]",
            k + h
        )));
    }
    Ok(if target == k {
        (Graph::star(k), Graph::star(h))
    } else if target == k + h {
        (Graph::empty(k), Graph::empty(h))
    } else {
        let g = generate_gk(k)?.graph;
        let r = target - k;
        (g, clique_with_leaves(r, &vec![h - 1; r]))
    })
}

/// Extends an accepted coloring of `g` to one of the Mycielski graph of `g`
/// with one more class: each shadow vertex inherits its original's color
/// and the apex takes the new color. The extension is re-verified.
pub fn mycielski_extend(g: &Graph, c: &Coloring) -> Result<Coloring, FamiliesError> {
    let verdict = is_nl(g, c);
    if !verdict.accepted() {
        return Err(FamiliesError::NotNeighborLocating(verdict.to_string()));
    }
    let n = g.n();
    let k = c.k() as u32;
    let mut assignment = vec![0u32; 2 * n + 1];
    for v in 0..n {
        assignment[v] = c.class_of(v) as u32;
        assignment[n + v] = c.class_of(v) as u32;
    }
    assignment[2 * n] = k;
    Ok(Coloring::from_assignment(&assignment))
}

/// Pair coloring of the Cartesian product from accepted colorings of the
/// factors: vertex `(u, v)` takes class `(class(u), class(v))`. The result
/// is re-verified, certifying the product upper bound instance-wise.
pub fn product_coloring(
    g: &Graph,
    cg: &Coloring,
    h: &Graph,
    ch: &Coloring,
) -> Result<Coloring, FamiliesError> {
    for (graph, coloring) in [(g, cg), (h, ch)] {
        let verdict = is_nl(graph, coloring);
        if !verdict.accepted() {
            return Err(FamiliesError::NotNeighborLocating(verdict.to_string()));
        }
    }
    let kh = ch.k() as u32;
    let mut assignment = vec![0u32; g.n() * h.n()];
    for u in 0..g.n() {
        for v in 0..h.n() {
            assignment[u * h.n() + v] = cg.class_of(u) as u32 * kh + ch.class_of(v) as u32;
        }
    }
    let product = Coloring::from_assignment(&assignment);
    assert!(
        is_nl(&g.cartesian_product(h), &product).accepted(),
        "product coloring must be accepted"
    );
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{chi_nl, chi_nl_bruteforce, chi_nl_exact, SolveOptions};

    fn solve_pair(g: &Graph) -> (u32, Coloring) {
        let r = chi_nl_exact(g, &SolveOptions::default()).expect_solved("factor");
        (r.chi_nl, r.witness)
    }

    #[test]
    fn join_examples() {
        let p10 = Graph::path(10);
        let (k, w) = chi_nl_join(&p10, &p10, solve_pair);
        assert_eq!(k, 8);
        assert!(is_nl(&p10.join(&p10), &w).accepted());

        let (k, _) = chi_nl_join(&Graph::empty(2), &Graph::empty(3), solve_pair);
        assert_eq!(k, 5);

        let (k, _) = chi_nl_join(&Graph::complete(1), &Graph::complete(1), solve_pair);
        assert_eq!(k, 2);
    }

    #[test]
    fn union_bounds_examples() {
        // both factors all-isolated: exact
        let b = union_bounds(&Graph::empty(3), &Graph::empty(2), chi_nl);
        assert_eq!(b.exact, Some(5));

        // stars: interval [3,5], exact solve gives 3
        let s3 = Graph::star(3);
        let b = union_bounds(&s3, &s3, chi_nl);
        assert_eq!((b.lower, b.upper, b.exact), (3, 5, None));
        assert_eq!(chi_nl(&s3.disjoint_union(&s3)), 3);

        // identical factors with a universal vertex
        let k3 = Graph::complete(3);
        let b = union_bounds(&k3, &k3, chi_nl);
        assert_eq!(b.upper, 4);
        assert_eq!(chi_nl(&k3.disjoint_union(&k3)), 4);
    }

    #[test]
    fn clique_with_leaves_examples() {
        // clique of 3 with two leaves on one vertex: chromatic 3, value 3
        let g = clique_with_leaves(3, &[2, 0, 0]);
        assert_eq!(crate::solver::chi_exact(&g).unwrap(), 3);
        assert_eq!(chi_nl(&g), 3);

        // twin-free tightness instance
        let g = clique_with_leaves(3, &[1, 1, 0]);
        assert!(g.is_twin_free());
        assert_eq!(chi_nl(&g), 3);

        assert_eq!(clique_with_leaves(1, &[4]), Graph::star(5));
    }

    #[test]
    fn realizability_examples() {
        let (g, h) = realizability_instance(3, 3, 3).unwrap();
        assert_eq!((chi_nl(&g), chi_nl(&h)), (3, 3));
        assert_eq!(chi_nl(&g.disjoint_union(&h)), 3);

        let (g, h) = realizability_instance(3, 3, 6).unwrap();
        assert_eq!(chi_nl(&g.disjoint_union(&h)), 6);

        let (g, h) = realizability_instance(3, 3, 4).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(h, Graph::star(3));
        assert_eq!(chi_nl(&g.disjoint_union(&h)), 4);

        assert!(realizability_instance(2, 3, 3).is_err());
        assert!(realizability_instance(3, 3, 7).is_err());
    }

    #[test]
    fn mycielski_extend_examples() {
        // a 2-coloring of K2 extends to an accepted 3-coloring of C5
        let k2 = Graph::complete(2);
        let ext = mycielski_extend(&k2, &Coloring::singletons(2)).unwrap();
        assert_eq!(ext.k(), 3);
        assert_eq!(chi_nl_bruteforce(&k2.mycielski()).unwrap().0, 3);

        // an optimal 3-coloring of C5 extends over the 11-vertex Mycielskian
        let c5 = Graph::cycle(5);
        let (_, w) = chi_nl_bruteforce(&c5).unwrap();
        let ext = mycielski_extend(&c5, &w).unwrap();
        assert_eq!(ext.k(), 4);

        let e2 = Graph::empty(2);
        let ext = mycielski_extend(&e2, &Coloring::singletons(2)).unwrap();
        assert_eq!(ext.k(), 3);

        let c4 = Graph::cycle(4);
        let bip = Coloring::from_assignment(&[0, 1, 0, 1]);
        assert!(mycielski_extend(&c4, &bip).is_err());
    }

    #[test]
    fn product_coloring_examples() {
        let p2 = Graph::path(2);
        let c = product_coloring(&p2, &Coloring::singletons(2), &p2, &Coloring::singletons(2))
            .unwrap();
        assert_eq!(c.k(), 4);
        // and the product (a 4-cycle) needs exactly 4, so this is tight
        assert_eq!(chi_nl(&p2.cartesian_product(&p2)), 4);

        let k1 = Graph::complete(1);
        let c5 = Graph::cycle(5);
        let (_, w) = chi_nl_bruteforce(&c5).unwrap();
        let c = product_coloring(&k1, &Coloring::singletons(1), &c5, &w).unwrap();
        assert_eq!(c.k(), w.k());

        let p3 = Graph::path(3);
        let (_, w3) = chi_nl_bruteforce(&p3).unwrap();
        let c = product_coloring(&p3, &w3, &p3, &w3).unwrap();
        assert_eq!(c.k(), 9);
    }
}

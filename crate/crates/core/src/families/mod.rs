//! Constructions, closed forms, recognizers, and coloring composers for the
//! structured graph families: the capacity-tight `G_k` graphs, the graphs
//! with neighbor-locating chromatic number `n` or `n - 1`, connected split
//! graphs, joins and disjoint unions, Mycielski graphs, and Cartesian
//! products.

mod extremal;
mod gk;
mod ops;
mod split;

pub use extremal::{multipartite_parts, recognize_extremal, ExtremalTag};
pub use gk::{embed_into_gk, generate_gk, GkGraph, GkSpec};
pub use ops::{
    chi_nl_join, clique_with_leaves, mycielski_extend, product_coloring, realizability_instance,
    union_bounds, UnionBounds,
};
pub use split::{chi_nl_split, split_decompose, SplitDecomposition};

use crate::coloring::{is_nl, Coloring};
use crate::graph::Graph;
use crate::solver::{
    self, Certificate, DriverState, FastRule, SolveOptions, SolveOutcome, SolveResult, SolveRule,
};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamiliesError {
    #[error("k={k} outside the supported range {min}..={max}")]
    KRange { k: usize, min: usize, max: usize },
    #[error("graph has an isolated vertex ({v})")]
    IsolatedVertex { v: usize },
    #[error("coloring is not an accepted neighbor-locating coloring: {0}")]
    NotNeighborLocating(String),
    #[error("realizability parameters out of range: {0}")]
    Realizability(String),
}

/// Tries the structured rules in order — isolated-vertex reduction,
/// extremal recognizers, join decomposition, split formula — and returns a
/// certified result when one applies. Every answer carries its rule id and
/// a witness that has been re-verified by the NL checker.
pub fn fastpath(g: &Graph) -> Option<SolveResult> {
    let opts = SolveOptions::default();
    let mut state = DriverState::new(&opts.budget);
    let outcome = fastpath_full(g, &opts, &mut state)?;
    Some(outcome.expect_solved("fastpath with unlimited budget"))
}

pub(crate) fn fastpath_full(
    g: &Graph,
    opts: &SolveOptions,
    state: &mut DriverState,
) -> Option<SolveOutcome> {
    if let Some(outcome) = solver::reduce_isolated(g, opts, state) {
        return Some(outcome);
    }
    fastpath_structured(g, opts, state)
}

/// The recognizer/decomposition rules, without the isolated-vertex
/// reduction (the solve driver has already applied it).
pub(crate) fn fastpath_structured(
    g: &Graph,
    opts: &SolveOptions,
    state: &mut DriverState,
) -> Option<SolveOutcome> {
    if let Some((tag, value)) = recognize_extremal(g) {
        let rule = match tag {
            ExtremalTag::CompleteMultipartite { .. } => FastRule::CompleteMultipartite,
            ExtremalTag::EmptyGraph => FastRule::EmptyGraph,
            ExtremalTag::FamilyF { .. } => FastRule::FamilyF,
            ExtremalTag::FamilyG { .. } => FastRule::FamilyG,
            ExtremalTag::MultipartitePlusK1 { .. } => FastRule::MultipartitePlusK1,
        };
        let witness = extremal_witness(g, value);
        return Some(SolveOutcome::Solved(certified(g, value, witness, rule, state)));
    }
    if let Some(outcome) = join_rule(g, opts, state) {
        return Some(outcome);
    }
    if let Some(decomposition) = split_decompose(g) {
        let (value, witness) = chi_nl_split(g, &decomposition);
        return Some(SolveOutcome::Solved(certified(
            g,
            value,
            witness,
            FastRule::Split,
            state,
        )));
    }
    None
}

fn certified(
    g: &Graph,
    value: u32,
    witness: Coloring,
    rule: FastRule,
    state: &DriverState,
) -> SolveResult {
    assert!(
        witness.k() as u32 == value && is_nl(g, &witness).accepted(),
        "fast-path rule {rule} produced an invalid witness"
    );
    SolveResult {
        chi_nl: value,
        witness,
        certificate: Certificate::FastPath(rule),
        nodes: state.nodes,
        rule: SolveRule::Fast(rule),
    }
}

/// Witness for a recognized extremal graph: singletons when the value is
/// `n`; otherwise the first doubleton-plus-singletons coloring that the
/// verifier accepts (an (n-1)-coloring has exactly one doubleton class, so
/// this scan is complete).
fn extremal_witness(g: &Graph, value: u32) -> Coloring {
    let n = g.n();
    if value == n as u32 {
        return Coloring::singletons(n);
    }
    debug_assert_eq!(value, n as u32 - 1);
    for u in 0..n {
        for v in u + 1..n {
            let mut assignment: Vec<u32> = (0..n as u32).collect();
            assignment[v] = assignment[u];
            let c = Coloring::from_assignment(&assignment);
            if is_nl(g, &c).accepted() {
                return c;
            }
        }
    }
    panic!("no (n-1)-witness found for a graph recognized as extremal");
}

/// Join decomposition: the complement's connected components are the join
/// factors; the value is the sum of the factors' values and the witness is
/// the union of their witnesses on disjoint color sets.
fn join_rule(g: &Graph, opts: &SolveOptions, state: &mut DriverState) -> Option<SolveOutcome> {
    let components = g.complement().connected_components();
    if components.len() < 2 {
        return None;
    }
    let mut assignment = vec![0u32; g.n()];
    let mut lower = 0u32;
    let mut upper = 0u32;
    let mut all_solved = true;
    for comp in &components {
        let factor = g.induced_subgraph(comp).expect("component in range");
        match solver::solve_rec(&factor, opts, state) {
            SolveOutcome::Solved(r) => {
                for (i, &v) in comp.iter().enumerate() {
                    assignment[v] = upper + r.witness.class_of(i) as u32;
                }
                lower += r.chi_nl;
                upper += r.chi_nl;
            }
            SolveOutcome::Indeterminate {
                lower: fl,
                upper: fu,
                witness,
                ..
            } => {
                all_solved = false;
                for (i, &v) in comp.iter().enumerate() {
                    assignment[v] = upper + witness.class_of(i) as u32;
                }
                lower += fl;
                upper += fu;
            }
        }
    }
    let witness = Coloring::from_assignment(&assignment);
    Some(if all_solved {
        SolveOutcome::Solved(certified(g, upper, witness, FastRule::Join, state))
    } else {
        SolveOutcome::Indeterminate {
            lower,
            upper,
            witness,
            nodes: state.nodes,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solver::chi_nl_bruteforce;

    #[test]
    fn fastpath_examples() {
        let r = fastpath(&Graph::complete_multipartite(&[2, 3])).unwrap();
        assert_eq!(r.chi_nl, 5);
        assert_eq!(r.rule, SolveRule::Fast(FastRule::CompleteMultipartite));

        let r = fastpath(&Graph::path(4)).unwrap();
        assert_eq!(r.chi_nl, 3);
        assert_eq!(r.rule, SolveRule::Fast(FastRule::Split));
        assert_eq!(chi_nl_bruteforce(&Graph::path(4)).unwrap().0, 3);

        assert!(fastpath(&Graph::cycle(7)).is_none());
    }

    #[test]
    fn fastpath_join() {
        let g = Graph::path(4).join(&Graph::path(4));
        let r = fastpath(&g).unwrap();
        assert_eq!(r.rule, SolveRule::Fast(FastRule::Join));
        assert_eq!(r.chi_nl, 6); // 3 + 3
    }

    #[test]
    fn fastpath_isolated() {
        let g = Graph::path(4).disjoint_union(&Graph::empty(2));
        let r = fastpath(&g).unwrap();
        assert_eq!(r.rule, SolveRule::Fast(FastRule::IsolatedReduction));
        assert_eq!(r.chi_nl, 3); // max(3, 2)
    }
}

//! Exact computation of the neighbor-locating chromatic number, with
//! certificates, plus small-scale exhaustive oracles for the chromatic
//! number, the metric-locating chromatic number, and the location-domination
//! number.
//!
//! The exact engine first removes isolated vertices (their count and the
//! reduced graph determine the answer), then tries the structured fast paths
//! from [`crate::families`], and otherwise runs an iterative-deepening
//! branch-and-bound over restricted-growth color assignments: the i-th
//! branched vertex may open at most one new class, which eliminates class
//! relabeling symmetry exactly and makes exhaustion certificates sound.

use crate::coloring::{is_nl, Coloring};
use crate::families;
use crate::graph::Graph;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} supports at most {max} vertices, got {n}")]
    SizeGuard {
        what: &'static str,
        max: usize,
        n: usize,
    },
    #[error("{what} requires a connected graph")]
    Disconnected { what: &'static str },
}

// ---------------------------------------------------------------------------
// counting bounds
// ---------------------------------------------------------------------------

/// Number of admissible nr-tuples per color class when `k` colors are in
/// play: the class position is 0, at most `min(max_degree, k-1)` entries are
/// 1, and — unless isolated vertices are allowed — at least one entry is 1.
/// Clamped to `clamp` to keep the arithmetic cheap.
pub fn class_capacity(k: usize, max_degree: usize, allow_isolated: bool, clamp: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    let d = max_degree.min(k - 1);
    let lo = usize::from(!allow_isolated);
    let mut sum: u128 = 0;
    let mut binom: u128 = 1; // C(k-1, 0)
    for j in 0..=d {
        if j > 0 {
            binom = binom * (k - j) as u128 / j as u128;
        }
        if j >= lo {
            sum += binom;
        }
        if sum >= clamp as u128 {
            return clamp;
        }
    }
    sum.min(clamp as u128) as u64
}

/// Smallest `k` admitted by the counting bounds: the order of a graph with
/// an NL-coloring in `k` colors is at most `k` times the per-class tuple
/// capacity. Uses the isolated-free variants when `has_isolated` is false.
pub fn counting_lower_bound(n: usize, max_degree: usize, has_isolated: bool) -> u32 {
    if n == 0 {
        return 0;
    }
    debug_assert!(
        max_degree > 0 || has_isolated,
        "a graph with max degree 0 and n >= 1 has isolated vertices"
    );
    for k in 1..=n {
        let per_class = class_capacity(k, max_degree, has_isolated, n as u64);
        if (k as u64).saturating_mul(per_class) >= n as u64 {
            return k as u32;
        }
    }
    n as u32
}

// ---------------------------------------------------------------------------
// solve configuration and results
// ---------------------------------------------------------------------------

/// Resource limits for one exact solve; exceeding either produces an
/// explicit indeterminate outcome, never a wrong value.
#[derive(Debug, Clone, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Apply the structured family rules before searching. The census
    /// disables this when the family rules themselves are under test.
    pub fastpath: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::default(),
            fastpath: true,
        }
    }
}

impl SolveOptions {
    pub fn search_only() -> Self {
        SolveOptions {
            budget: Budget::default(),
            fastpath: false,
        }
    }
}

/// Which rule established that fewer classes are impossible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBoundRule {
    Counting,
    Clique,
}

/// Structured rule that produced a closed-form answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastRule {
    IsolatedReduction,
    CompleteMultipartite,
    EmptyGraph,
    FamilyF,
    FamilyG,
    MultipartitePlusK1,
    Join,
    Split,
}

impl FastRule {
    pub fn id(self) -> &'static str {
        match self {
            FastRule::IsolatedReduction => "isolated-reduction",
            FastRule::CompleteMultipartite => "complete-multipartite",
            FastRule::EmptyGraph => "empty-graph",
            FastRule::FamilyF => "family-f",
            FastRule::FamilyG => "family-g",
            FastRule::MultipartitePlusK1 => "multipartite-plus-k1",
            FastRule::Join => "join",
            FastRule::Split => "split",
        }
    }
}

impl std::fmt::Display for FastRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

/// How the reported value was certified optimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// The value matches a lower bound, so no search below it was needed.
    Bound(LowerBoundRule),
    /// The canonical enumeration with this many colors found no accepted
    /// coloring (and, inductively, neither did any smaller count).
    Exhausted(u32),
    /// A structured rule yielded the value directly.
    FastPath(FastRule),
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::Bound(LowerBoundRule::Counting) => write!(f, "bound:counting"),
            Certificate::Bound(LowerBoundRule::Clique) => write!(f, "bound:clique"),
            Certificate::Exhausted(k) => write!(f, "exhausted:{k}"),
            Certificate::FastPath(r) => write!(f, "fastpath:{r}"),
        }
    }
}

/// Provenance of the answer: plain search or a structured fast path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveRule {
    Search,
    Fast(FastRule),
}

impl std::fmt::Display for SolveRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveRule::Search => write!(f, "search"),
            SolveRule::Fast(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chi_nl: u32,
    pub witness: Coloring,
    pub certificate: Certificate,
    pub nodes: u64,
    pub rule: SolveRule,
}

impl SolveResult {
    /// Stable line-record form, paired with the graph's graph6 string.
    pub fn to_record(&self, graph6: &str) -> String {
        format!(
            "graph6={} chi_nl={} witness=\"{}\" certificate={} rule={} nodes={}",
            graph6,
            self.chi_nl,
            self.witness.to_line(),
            self.certificate,
            self.rule,
            self.nodes
        )
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Solved(SolveResult),
    /// The budget ran out. `lower..=upper` is guaranteed to contain the
    /// answer and `witness` is an accepted coloring with `upper` classes.
    Indeterminate {
        lower: u32,
        upper: u32,
        witness: Coloring,
        nodes: u64,
    },
}

impl SolveOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            SolveOutcome::Solved(r) => Some(r.chi_nl),
            SolveOutcome::Indeterminate { .. } => None,
        }
    }

    pub fn expect_solved(self, context: &str) -> SolveResult {
        match self {
            SolveOutcome::Solved(r) => r,
            SolveOutcome::Indeterminate { lower, upper, .. } => {
                panic!("{context}: solve was indeterminate (bounds {lower}..={upper})")
            }
        }
    }

    pub fn to_record(&self, graph6: &str) -> String {
        match self {
            SolveOutcome::Solved(r) => r.to_record(graph6),
            SolveOutcome::Indeterminate {
                lower,
                upper,
                witness,
                nodes,
            } => format!(
                "graph6={} chi_nl=? lower={} upper={} witness=\"{}\" nodes={}",
                graph6,
                lower,
                upper,
                witness.to_line(),
                nodes
            ),
        }
    }
}

pub(crate) struct DriverState {
    pub nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl DriverState {
    pub(crate) fn new(budget: &Budget) -> DriverState {
        DriverState {
            nodes: 0,
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|t| Instant::now() + t),
        }
    }

    #[inline]
    fn out_of_budget(&self) -> bool {
        if self.nodes >= self.max_nodes {
            return true;
        }
        if self.nodes & 1023 == 0 {
            if let Some(d) = self.deadline {
                return Instant::now() >= d;
            }
        }
        false
    }
}

// ---------------------------------------------------------------------------
// greedy upper bound
// ---------------------------------------------------------------------------

/// Deterministic accepted coloring: first-fit proper coloring in descending
/// degree order, then repeatedly eject the second vertex of the first clash
/// into a fresh class. Each ejection increases the class count, so this
/// terminates (at worst with singletons, which are always accepted).
pub fn greedy_upper(g: &Graph) -> (u32, Coloring) {
    let n = g.n();
    if n == 0 {
        return (0, Coloring::from_assignment(&[]));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![u32::MAX; n];
    let mut k = 0u32;
    for &v in &order {
        let mut taken = vec![false; k as usize + 1];
        for u in g.neighbors(v) {
            if colors[u] != u32::MAX {
                let c = colors[u] as usize;
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        let c = (0..).find(|&c| c >= k || !taken[c as usize]).unwrap();
        colors[v] = c;
        k = k.max(c + 1);
    }
    let mut next_fresh = k;
    loop {
        let coloring = Coloring::from_assignment(&colors);
        match is_nl(g, &coloring) {
            crate::coloring::Verdict::Accepted => {
                return (coloring.k() as u32, coloring);
            }
            crate::coloring::Verdict::Clash { v, .. } => {
                colors[v] = next_fresh;
                next_fresh += 1;
            }
            crate::coloring::Verdict::NotProper { .. } => {
                unreachable!("first-fit coloring is proper and ejection preserves properness")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// fixed-k exhaustive search (n <= 64)
// ---------------------------------------------------------------------------

enum SearchStatus {
    Found(Vec<u32>),
    Exhausted,
    Aborted,
}

const NO_COLOR: u8 = u8::MAX;

struct KSearch<'a> {
    adj: &'a [u64],
    n: usize,
    k: usize,
    cap: u32,
    order: &'a [usize],
    color: Vec<u8>,
    members: Vec<u64>,
    size: Vec<u32>,
    pending: Vec<u32>,
    nmask: Vec<u64>,
    finalized: u64,
    used: usize,
}

struct Undo {
    v: usize,
    c: usize,
    opened: bool,
    finalized_added: Vec<usize>,
}

impl<'a> KSearch<'a> {
    fn new(adj: &'a [u64], k: usize, cap: u32, order: &'a [usize]) -> KSearch<'a> {
        let n = adj.len();
        KSearch {
            adj,
            n,
            k,
            cap,
            order,
            color: vec![NO_COLOR; n],
            members: vec![0; k],
            size: vec![0; k],
            pending: (0..n).map(|v| adj[v].count_ones()).collect(),
            nmask: vec![0; n],
            finalized: 0,
            used: 0,
        }
    }

    /// Neighbor-color mask of a vertex whose whole neighborhood is colored.
    /// Two same-class vertices with final equal masks can never be located
    /// by any completion, so the branch is dead. Partial masks are never
    /// used: pruning fires only on fully decided neighborhoods.
    fn finalize(&mut self, x: usize, undo: &mut Undo) -> bool {
        let mut mask = 0u64;
        let mut nb = self.adj[x];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            mask |= 1u64 << self.color[w];
        }
        let mut same = self.members[self.color[x] as usize] & self.finalized;
        while same != 0 {
            let z = same.trailing_zeros() as usize;
            same &= same - 1;
            if self.nmask[z] == mask {
                return false;
            }
        }
        self.finalized |= 1u64 << x;
        self.nmask[x] = mask;
        undo.finalized_added.push(x);
        true
    }

    fn apply(&mut self, v: usize, c: usize) -> Result<Undo, Undo> {
        let mut undo = Undo {
            v,
            c,
            opened: c == self.used,
            finalized_added: Vec::new(),
        };
        self.color[v] = c as u8;
        self.members[c] |= 1u64 << v;
        self.size[c] += 1;
        if undo.opened {
            self.used += 1;
        }
        let mut nb = self.adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            self.pending[w] -= 1;
            if self.pending[w] == 0 && self.color[w] != NO_COLOR && !self.finalize(w, &mut undo) {
                return Err(undo);
            }
        }
        if self.pending[v] == 0 && !self.finalize(v, &mut undo) {
            return Err(undo);
        }
        Ok(undo)
    }

    fn undo(&mut self, undo: Undo) {
        for &x in &undo.finalized_added {
            self.finalized &= !(1u64 << x);
        }
        let mut nb = self.adj[undo.v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            self.pending[w] += 1;
        }
        if undo.opened {
            self.used -= 1;
        }
        self.size[undo.c] -= 1;
        self.members[undo.c] &= !(1u64 << undo.v);
        self.color[undo.v] = NO_COLOR;
    }

    fn dfs(&mut self, pos: usize, state: &mut DriverState) -> SearchStatus {
        if self.k - self.used > self.n - pos {
            // cannot open enough classes with the vertices left
            return SearchStatus::Exhausted;
        }
        if pos == self.n {
            return SearchStatus::Found(self.color.iter().map(|&c| c as u32).collect());
        }
        let v = self.order[pos];
        let row = self.adj[v];
        let last = self.used.min(self.k - 1);
        for c in 0..=last {
            if self.members[c] & row != 0 || self.size[c] == self.cap {
                continue;
            }
            if state.out_of_budget() {
                return SearchStatus::Aborted;
            }
            state.nodes += 1;
            match self.apply(v, c) {
                Err(undo) => self.undo(undo),
                Ok(undo) => {
                    let status = self.dfs(pos + 1, state);
                    self.undo(undo);
                    match status {
                        SearchStatus::Exhausted => {}
                        done => return done,
                    }
                }
            }
        }
        SearchStatus::Exhausted
    }
}

fn branch_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Exhaustive search for an accepted coloring with exactly `k` classes.
/// Exposed for certification tests that want to drive single levels.
pub fn search_with_k_classes(g: &Graph, k: usize) -> Option<Coloring> {
    let adj = g.adjacency64().expect("search supports at most 64 vertices");
    if g.n() == 0 || k == 0 || k > g.n() {
        return None;
    }
    let order = branch_order(g);
    let has_isolated = !g.isolated_vertices().is_empty();
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    let cap = class_capacity(k, max_degree, has_isolated, g.n() as u64) as u32;
    let mut state = DriverState::new(&Budget::default());
    let mut search = KSearch::new(&adj, k, cap, &order);
    match search.dfs(0, &mut state) {
        SearchStatus::Found(colors) => Some(Coloring::from_assignment(&colors)),
        SearchStatus::Exhausted => None,
        SearchStatus::Aborted => unreachable!("unlimited budget"),
    }
}

// ---------------------------------------------------------------------------
// the exact solver
// ---------------------------------------------------------------------------

/// Exact neighbor-locating chromatic number with witness and certificate.
pub fn chi_nl_exact(g: &Graph, opts: &SolveOptions) -> SolveOutcome {
    let mut state = DriverState::new(&opts.budget);
    let outcome = solve_rec(g, opts, &mut state);
    if let SolveOutcome::Solved(r) = &outcome {
        assert!(
            is_nl(g, &r.witness).accepted() && r.witness.k() as u32 == r.chi_nl,
            "solver returned an invalid witness"
        );
    }
    outcome
}

/// Convenience wrapper: unlimited budget, panics if the solve cannot finish
/// (which only happens past the search engine's 64-vertex limit).
pub fn chi_nl(g: &Graph) -> u32 {
    chi_nl_exact(g, &SolveOptions::default())
        .expect_solved("chi_nl")
        .chi_nl
}

pub(crate) fn solve_rec(g: &Graph, opts: &SolveOptions, state: &mut DriverState) -> SolveOutcome {
    if let Some(outcome) = reduce_isolated(g, opts, state) {
        return outcome;
    }
    if opts.fastpath {
        if let Some(outcome) = families::fastpath_structured(g, opts, state) {
            return outcome;
        }
    }
    solve_by_search(g, state)
}

/// Isolated-vertex reduction: with `W` the isolated vertices, the answer is
/// `max` of the reduced graph's value and `|W|`; a witness is obtained by
/// placing at most one isolated vertex per class.
pub(crate) fn reduce_isolated(
    g: &Graph,
    opts: &SolveOptions,
    state: &mut DriverState,
) -> Option<SolveOutcome> {
    let iso = g.isolated_vertices();
    if iso.is_empty() {
        return None;
    }
    let kept: Vec<usize> = (0..g.n()).filter(|v| !iso.contains(v)).collect();
    let core = g.induced_subgraph(&kept).expect("kept vertices in range");
    let sub = solve_rec(&core, opts, state);
    Some(match sub {
        SolveOutcome::Solved(r) => {
            let chi = r.chi_nl.max(iso.len() as u32);
            let witness = distribute_isolated(&r.witness, &kept, &iso, g.n());
            SolveOutcome::Solved(SolveResult {
                chi_nl: chi,
                witness,
                certificate: Certificate::FastPath(FastRule::IsolatedReduction),
                nodes: state.nodes,
                rule: SolveRule::Fast(FastRule::IsolatedReduction),
            })
        }
        SolveOutcome::Indeterminate {
            lower,
            upper,
            witness,
            ..
        } => SolveOutcome::Indeterminate {
            lower: lower.max(iso.len() as u32),
            upper: upper.max(iso.len() as u32),
            witness: distribute_isolated(&witness, &kept, &iso, g.n()),
            nodes: state.nodes,
        },
    })
}

fn distribute_isolated(core: &Coloring, kept: &[usize], iso: &[usize], n: usize) -> Coloring {
    let k = core.k().max(iso.len());
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (ci, class) in core.classes().iter().enumerate() {
        for &v in class {
            classes[ci].push(kept[v]);
        }
    }
    for (i, &v) in iso.iter().enumerate() {
        classes[i].push(v);
    }
    Coloring::from_classes(n, classes).expect("distribution forms a partition")
}

fn lower_bound(g: &Graph) -> (u32, LowerBoundRule) {
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    let has_isolated = !g.isolated_vertices().is_empty();
    let counting = counting_lower_bound(g.n(), max_degree, has_isolated);
    let clique = g.clique_number();
    if clique > counting {
        (clique, LowerBoundRule::Clique)
    } else {
        (counting, LowerBoundRule::Counting)
    }
}

fn solve_by_search(g: &Graph, state: &mut DriverState) -> SolveOutcome {
    let (lb, lb_rule) = lower_bound(g);
    let (greedy_k, greedy_witness) = greedy_upper(g);
    debug_assert!(greedy_k >= lb, "upper bound below lower bound");
    if greedy_k <= lb {
        return SolveOutcome::Solved(SolveResult {
            chi_nl: lb,
            witness: greedy_witness,
            certificate: Certificate::Bound(lb_rule),
            nodes: state.nodes,
            rule: SolveRule::Search,
        });
    }
    let Some(adj) = g.adjacency64() else {
        return SolveOutcome::Indeterminate {
            lower: lb,
            upper: greedy_k,
            witness: greedy_witness,
            nodes: state.nodes,
        };
    };
    let order = branch_order(g);
    let has_isolated = !g.isolated_vertices().is_empty();
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    for k in lb..greedy_k {
        let cap = class_capacity(k as usize, max_degree, has_isolated, g.n() as u64) as u32;
        let mut search = KSearch::new(&adj, k as usize, cap, &order);
        match search.dfs(0, state) {
            SearchStatus::Found(colors) => {
                let certificate = if k == lb {
                    Certificate::Bound(lb_rule)
                } else {
                    Certificate::Exhausted(k - 1)
                };
                return SolveOutcome::Solved(SolveResult {
                    chi_nl: k,
                    witness: Coloring::from_assignment(&colors),
                    certificate,
                    nodes: state.nodes,
                    rule: SolveRule::Search,
                });
            }
            SearchStatus::Exhausted => {}
            SearchStatus::Aborted => {
                return SolveOutcome::Indeterminate {
                    lower: k,
                    upper: greedy_k,
                    witness: greedy_witness,
                    nodes: state.nodes,
                };
            }
        }
    }
    // every level below the greedy value is exhausted
    SolveOutcome::Solved(SolveResult {
        chi_nl: greedy_k,
        witness: greedy_witness,
        certificate: Certificate::Exhausted(greedy_k - 1),
        nodes: state.nodes,
        rule: SolveRule::Search,
    })
}

// ---------------------------------------------------------------------------
// brute-force oracle
// ---------------------------------------------------------------------------

/// Independent oracle: enumerate every set partition of the vertices as a
/// restricted-growth string (pruning only on properness), test the
/// neighbor-locating condition on each, and take the minimum class count.
/// Deliberately shares no search machinery with the exact engine.
pub fn chi_nl_bruteforce(g: &Graph) -> Result<(u32, Coloring), OracleError> {
    const MAX_N: usize = 10;
    let n = g.n();
    if n > MAX_N {
        return Err(OracleError::SizeGuard {
            what: "chi_nl_bruteforce",
            max: MAX_N,
            n,
        });
    }
    if n == 0 {
        return Ok((0, Coloring::from_assignment(&[])));
    }
    let adj = g.adjacency64().expect("n <= 10");

    fn accepted(adj: &[u64], colors: &[u32]) -> bool {
        let n = adj.len();
        let masks: Vec<u64> = (0..n)
            .map(|v| {
                let mut mask = 0u64;
                let mut nb = adj[v];
                while nb != 0 {
                    let w = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    mask |= 1u64 << colors[w];
                }
                mask
            })
            .collect();
        for u in 0..n {
            for v in u + 1..n {
                if colors[u] == colors[v] && masks[u] == masks[v] {
                    return false;
                }
            }
        }
        true
    }

    fn enumerate(
        adj: &[u64],
        colors: &mut Vec<u32>,
        v: usize,
        used: u32,
        best: &mut Option<(u32, Vec<u32>)>,
    ) {
        let n = adj.len();
        if v == n {
            if best.as_ref().is_none_or(|(bk, _)| used < *bk) && accepted(adj, colors) {
                *best = Some((used, colors.clone()));
            }
            return;
        }
        for c in 0..=used.min(n as u32 - 1) {
            // properness against already-assigned neighbors
            let mut nb = adj[v] & ((1u64 << v) - 1);
            let mut proper = true;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colors[w] == c {
                    proper = false;
                    break;
                }
            }
            if !proper {
                continue;
            }
            colors[v] = c;
            enumerate(adj, colors, v + 1, used.max(c + 1), best);
        }
    }

    let mut best = None;
    enumerate(&adj, &mut vec![0; n], 0, 0, &mut best);
    let (k, colors) = best.expect("singleton partition is always accepted");
    Ok((k, Coloring::from_assignment(&colors)))
}

// ---------------------------------------------------------------------------
// chi, chi_L, lambda oracles
// ---------------------------------------------------------------------------

/// Exact chromatic number by restricted-growth search; desk scale.
pub fn chi_exact(g: &Graph) -> Result<u32, OracleError> {
    const MAX_N: usize = 12;
    let n = g.n();
    if n > MAX_N {
        return Err(OracleError::SizeGuard {
            what: "chi_exact",
            max: MAX_N,
            n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = g.adjacency64().expect("n <= 12");

    fn colorable(adj: &[u64], colors: &mut [u32], v: usize, used: u32, k: u32) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..=used.min(k - 1) {
            let mut nb = adj[v] & ((1u64 << v) - 1);
            let mut ok = true;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colors[w] == c {
                    ok = false;
                    break;
                }
            }
            if ok {
                colors[v] = c;
                if colorable(adj, colors, v + 1, used.max(c + 1), k) {
                    return true;
                }
            }
        }
        false
    }

    let start = g.clique_number().max(1);
    for k in start..=n as u32 {
        if colorable(&adj, &mut vec![0; n], 0, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

/// Exact metric-locating chromatic number by partition enumeration over a
/// precomputed distance matrix. Connected graphs only.
pub fn chi_l_exact(g: &Graph) -> Result<u32, OracleError> {
    const MAX_N: usize = 10;
    let n = g.n();
    if n > MAX_N {
        return Err(OracleError::SizeGuard {
            what: "chi_l_exact",
            max: MAX_N,
            n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected { what: "chi_l_exact" });
    }
    let adj = g.adjacency64().expect("n <= 10");
    let dist: Vec<Vec<u32>> = (0..n).map(|v| g.bfs_distances(v)).collect();

    fn located(dist: &[Vec<u32>], colors: &[u32], k: u32) -> bool {
        let n = colors.len();
        let vectors: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut vec = vec![u32::MAX; k as usize];
                for u in 0..n {
                    let c = colors[u] as usize;
                    vec[c] = vec[c].min(dist[v][u]);
                }
                vec
            })
            .collect();
        for u in 0..n {
            for v in u + 1..n {
                if colors[u] == colors[v] && vectors[u] == vectors[v] {
                    return false;
                }
            }
        }
        true
    }

    fn try_k(
        adj: &[u64],
        dist: &[Vec<u32>],
        colors: &mut [u32],
        v: usize,
        used: u32,
        k: u32,
    ) -> bool {
        let n = adj.len();
        if (k - used) as usize > n - v {
            return false;
        }
        if v == n {
            return located(dist, colors, k);
        }
        for c in 0..=used.min(k - 1) {
            let mut nb = adj[v] & ((1u64 << v) - 1);
            let mut ok = true;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if colors[w] == c {
                    ok = false;
                    break;
                }
            }
            if ok {
                colors[v] = c;
                if try_k(adj, dist, colors, v + 1, used.max(c + 1), k) {
                    return true;
                }
            }
        }
        false
    }

    for k in 1..=n as u32 {
        if try_k(&adj, &dist, &mut vec![0; n], 0, 0, k) {
            return Ok(k);
        }
    }
    unreachable!("singletons form a metric-locating coloring of a connected graph")
}

/// Exact location-domination number: enumerate vertex subsets in increasing
/// cardinality; a set qualifies when it dominates every outside vertex and
/// the traces `N(v) ∩ S` are pairwise distinct outside `S`.
pub fn lambda_exact(g: &Graph) -> Result<u32, OracleError> {
    const MAX_N: usize = 12;
    let n = g.n();
    if n > MAX_N {
        return Err(OracleError::SizeGuard {
            what: "lambda_exact",
            max: MAX_N,
            n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = g.adjacency64().expect("n <= 12");
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    let qualifies = |s: u64| -> bool {
        let mut outside = full & !s;
        let mut traces = Vec::new();
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let trace = adj[v] & s;
            if trace == 0 {
                return false; // not dominated
            }
            traces.push(trace);
        }
        traces.sort_unstable();
        traces.windows(2).all(|w| w[0] != w[1])
    };

    for size in 0..=n as u32 {
        // iterate subsets of the given popcount in increasing numeric order
        if size == 0 {
            if qualifies(0) {
                return Ok(0);
            }
            continue;
        }
        let mut s: u64 = (1 << size) - 1;
        while s <= full {
            if s & !full == 0 && qualifies(s) {
                return Ok(size);
            }
            // Gosper's hack: next subset with the same popcount
            let c = s & s.wrapping_neg();
            let r = s + c;
            if r > full || c == 0 {
                break;
            }
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("the full vertex set is locating-dominating")
}

// ---------------------------------------------------------------------------
// bound report
// ---------------------------------------------------------------------------

/// Bundle of cheap lower and upper bounds bracketing the answer.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub lb_counting: u32,
    pub lb_chi: Option<u32>,
    pub ub_greedy: u32,
    pub ub_formula: Option<u32>,
}

pub fn bound_report(g: &Graph) -> BoundReport {
    let n = g.n();
    let max_degree = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let has_isolated = !g.isolated_vertices().is_empty();
    let lb_counting = counting_lower_bound(n, max_degree, has_isolated);
    let lb_chi = chi_exact(g).ok();
    let (ub_greedy, _) = greedy_upper(g);
    let mut formula: Option<u32> = if n > 0 { Some(n as u32) } else { None };
    if n > 0 && n <= 64 && g.is_twin_free() {
        let alpha = g.independence_number();
        formula = Some(formula.unwrap().min(n as u32 - alpha + 1));
    }
    if let (Some(chi), Ok(lambda)) = (lb_chi, lambda_exact(g)) {
        formula = Some(formula.map_or(chi + lambda, |f| f.min(chi + lambda)));
    }
    BoundReport {
        lb_counting,
        lb_chi,
        ub_greedy,
        ub_formula: formula,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn counting_examples() {
        assert_eq!(counting_lower_bound(10, 2, false), 4);
        assert_eq!(counting_lower_bound(9, 4, false), 3);
        assert_eq!(counting_lower_bound(1, 0, true), 1);
        assert_eq!(counting_lower_bound(0, 0, true), 0);
        // empty graphs need one class per vertex
        assert_eq!(counting_lower_bound(5, 0, true), 5);
    }

    #[test]
    fn greedy_examples() {
        let (k, w) = greedy_upper(&Graph::complete(6));
        assert_eq!(k, 6);
        assert_eq!(w.k(), 6);
        let p10 = Graph::path(10);
        let (k, w) = greedy_upper(&p10);
        assert!((4..=10).contains(&k));
        assert!(is_nl(&p10, &w).accepted());
        let (k, w) = greedy_upper(&Graph::empty(3));
        assert_eq!(k, 3);
        assert!(is_nl(&Graph::empty(3), &w).accepted());
    }

    #[test]
    fn exact_small_values() {
        assert_eq!(chi_nl(&Graph::path(10)), 4);
        assert_eq!(chi_nl(&Graph::cycle(4)), 4);
        assert_eq!(chi_nl(&Graph::path(4)), 3);
        assert_eq!(chi_nl(&Graph::complete_multipartite(&[1, 4])), 5);
    }

    #[test]
    fn exact_matches_brute_on_examples() {
        for g in [
            Graph::path(4),
            Graph::path(10).induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap(),
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::complete(4),
            Graph::star(5),
            Graph::path(4).disjoint_union(&Graph::path(4)),
        ] {
            let (bk, bw) = chi_nl_bruteforce(&g).unwrap();
            assert!(is_nl(&g, &bw).accepted());
            assert_eq!(chi_nl(&g), bk, "mismatch on {g:?}");
        }
    }

    #[test]
    fn brute_examples() {
        assert_eq!(chi_nl_bruteforce(&Graph::path(3)).unwrap().0, 3);
        assert_eq!(chi_nl_bruteforce(&Graph::cycle(5)).unwrap().0, 3);
        let two_p4 = Graph::path(4).disjoint_union(&Graph::path(4));
        assert_eq!(chi_nl_bruteforce(&two_p4).unwrap().0, 4);
        assert!(chi_nl_bruteforce(&Graph::empty(11)).is_err());
    }

    #[test]
    fn search_only_matches_default_on_structured_graphs() {
        for g in [
            Graph::complete_multipartite(&[2, 3]),
            Graph::complete_split(2, 3),
            Graph::path(4),
            Graph::star(4).disjoint_union(&Graph::complete(1)),
        ] {
            let a = chi_nl_exact(&g, &SolveOptions::default()).expect_solved("default");
            let b = chi_nl_exact(&g, &SolveOptions::search_only()).expect_solved("search");
            assert_eq!(a.chi_nl, b.chi_nl, "mismatch on {g:?}");
        }
    }

    #[test]
    fn certificates_and_rules() {
        // P10 needs search past the counting bound of 3
        let r = chi_nl_exact(&Graph::path(10), &SolveOptions::search_only())
            .expect_solved("p10");
        assert_eq!(r.chi_nl, 4);
        assert_eq!(r.certificate, Certificate::Exhausted(3));
        assert_eq!(r.rule, SolveRule::Search);

        // the complete graph is settled by the clique bound without search
        let r = chi_nl_exact(&Graph::complete(5), &SolveOptions::search_only())
            .expect_solved("k5");
        assert_eq!(r.chi_nl, 5);
        assert_eq!(r.certificate, Certificate::Bound(LowerBoundRule::Clique));

        // empty graph goes through the isolated-vertex reduction
        let r = chi_nl_exact(&Graph::empty(4), &SolveOptions::default()).expect_solved("e4");
        assert_eq!(r.chi_nl, 4);
        assert_eq!(r.rule, SolveRule::Fast(FastRule::IsolatedReduction));
    }

    #[test]
    fn budget_yields_indeterminate() {
        let opts = SolveOptions {
            budget: Budget {
                max_nodes: Some(1),
                max_time: None,
            },
            fastpath: false,
        };
        match chi_nl_exact(&Graph::cycle(4), &opts) {
            SolveOutcome::Indeterminate { lower, upper, witness, .. } => {
                assert!(lower <= 4 && 4 <= upper);
                assert!(is_nl(&Graph::cycle(4), &witness).accepted());
            }
            SolveOutcome::Solved(_) => panic!("one node cannot settle C4"),
        }
    }

    #[test]
    fn isolated_reduction_combines() {
        let g = Graph::cycle(4).disjoint_union(&Graph::empty(5));
        let r = chi_nl_exact(&g, &SolveOptions::default()).expect_solved("c4+5iso");
        assert_eq!(r.chi_nl, 5); // max(4, 5)
        assert!(is_nl(&g, &r.witness).accepted());
    }

    #[test]
    fn chi_chi_l_lambda_examples() {
        let p10 = Graph::path(10);
        assert_eq!(chi_exact(&p10).unwrap(), 2);
        assert_eq!(chi_l_exact(&p10).unwrap(), 3);
        assert_eq!(chi_exact(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(lambda_exact(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(lambda_exact(&Graph::complete(6)).unwrap(), 5);
        assert_eq!(lambda_exact(&Graph::cycle(4)).unwrap(), 2);
        assert!(chi_l_exact(&Graph::empty(2)).is_err());
        assert!(chi_exact(&Graph::empty(13)).is_err());
    }

    #[test]
    fn deterministic_witness() {
        let g = Graph::cycle(6);
        let a = chi_nl_exact(&g, &SolveOptions::default()).expect_solved("a");
        let b = chi_nl_exact(&g, &SolveOptions::default()).expect_solved("b");
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.nodes, b.nodes);
    }

    #[test]
    fn bound_report_brackets_answer() {
        for g in [Graph::path(7), Graph::cycle(5), Graph::complete(4)] {
            let r = bound_report(&g);
            let exact = chi_nl(&g);
            assert!(r.lb_counting <= exact);
            if let Some(chi) = r.lb_chi {
                assert!(chi <= exact);
            }
            assert!(exact <= r.ub_greedy);
            if let Some(f) = r.ub_formula {
                assert!(exact <= f);
            }
        }
    }

    #[test]
    fn record_form() {
        let r = chi_nl_exact(&Graph::complete(3), &SolveOptions::search_only())
            .expect_solved("k3");
        let rec = r.to_record("Bw");
        assert!(rec.starts_with("graph6=Bw chi_nl=3 witness=\"0 1 2\""));
    }
}

//! Exact saturation numbers at small order by iterative deepening on the
//! edge count.
//!
//! For each candidate `m` the graphs with `k = 0, 1, ..., m` edges are grown
//! one edge at a time. With isomorph rejection on, each level is kept as a
//! set of canonical forms; with it off, a depth-first search walks labelled
//! pairs in lexicographic order. In the saturated modes an edge is only added
//! when it creates no `K_p`, so every graph visited is `K_p`-free and a graph
//! is saturated exactly when no further edge can be added.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::bounds;
use crate::canon::{canonical_code, canonical_form, SmallGraph, MAX_ORDER};
use crate::error::{ensure, Result};
use crate::graph::Graph;
use crate::verify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// Saturated with minimum degree at least `t`.
    AtLeast,
    /// Saturated with minimum degree exactly `t`.
    Exactly,
    /// Semi-saturated with minimum degree at least `t`.
    Semi,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::AtLeast => "sat",
            Mode::Exactly => "sat-exact",
            Mode::Semi => "semi",
        }
    }

    /// Whether `g` qualifies for this mode with parameters `p` and `t`.
    pub fn admits(self, g: &Graph, p: usize, t: usize) -> bool {
        let degree_ok = match (self, g.min_degree()) {
            (_, Err(_)) => false,
            (Mode::Exactly, Ok(d)) => d == t,
            (_, Ok(d)) => d >= t,
        };
        degree_ok
            && match self {
                Mode::Semi => verify::is_semi_saturated(g, p),
                _ => verify::is_saturated(g, p),
            }
    }

    fn kp_free(self) -> bool {
        self != Mode::Semi
    }
}

pub const DEFAULT_MAX_NODES: u64 = 1_000_000_000;
pub const DEFAULT_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub n: usize,
    pub p: usize,
    pub t: usize,
    pub mode: Mode,
    pub iso_rejection: bool,
    pub max_nodes: u64,
    pub max_order: usize,
    /// A known qualifying graph. Once every smaller edge count is ruled out
    /// its size is optimal and its canonical form becomes the witness, so the
    /// last level need not be built. Ignored when enumerating.
    pub upper: Option<Graph>,
}

impl SearchProblem {
    pub fn new(n: usize, p: usize, t: usize, mode: Mode) -> Self {
        Self {
            n,
            p,
            t,
            mode,
            iso_rejection: true,
            max_nodes: DEFAULT_MAX_NODES,
            max_order: DEFAULT_MAX_ORDER,
            upper: None,
        }
    }

    /// Sets [`SearchProblem::upper`]; fails if `g` does not qualify.
    pub fn with_upper(mut self, g: Graph) -> Result<Self> {
        ensure!(g.order() == self.n, "upper witness has {} vertices, expected {}", g.order(), self.n);
        ensure!(
            self.mode.admits(&g, self.p, self.t),
            "upper witness does not qualify for mode {}",
            self.mode.name()
        );
        self.upper = Some(g);
        Ok(self)
    }

    pub fn without_iso_rejection(mut self) -> Self {
        self.iso_rejection = false;
        self
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = nodes;
        self
    }

    fn validate(&self) -> Result<()> {
        ensure!(self.n >= 1, "need n >= 1");
        ensure!(self.p >= 3, "need p >= 3, got {}", self.p);
        ensure!(self.p <= self.n, "need p <= n, got p = {} and n = {}", self.p, self.n);
        ensure!(self.max_nodes > 0, "node budget must be positive");
        ensure!(
            self.n <= self.max_order.min(MAX_ORDER),
            "n = {} exceeds the configured maximum {}",
            self.n,
            self.max_order.min(MAX_ORDER)
        );
        Ok(())
    }

    /// First edge count worth trying.
    pub fn start(&self) -> usize {
        let degree = (self.t * self.n).div_ceil(2);
        if self.mode.kp_free() {
            let ehm = bounds::ehm_bound(self.n, self.p).expect("validated");
            degree.max(usize::try_from(ehm).unwrap_or(0))
        } else {
            degree
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Optimal(usize),
    Infeasible,
    /// Budget or interrupt hit while deciding `m`; every smaller count is infeasible.
    ResourceLimit { m: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    /// Canonical form with the least code among optimal graphs.
    pub witness: Option<Graph>,
    pub nodes: u64,
    /// Every optimal graph up to isomorphism, canonical forms by increasing code.
    pub extremal: Option<Vec<Graph>>,
}

impl SearchResult {
    pub fn value(&self) -> Option<usize> {
        match self.outcome {
            Outcome::Optimal(m) => Some(m),
            _ => None,
        }
    }
}

/// Expands a whole level: applies the given function to every graph and
/// returns the outputs in input order. Lets callers parallelise.
pub type LevelMap<'a> =
    &'a (dyn Fn(&[SmallGraph], &(dyn Fn(&SmallGraph) -> Vec<(u128, SmallGraph)> + Sync)) -> Vec<Vec<(u128, SmallGraph)>>
         + Sync);

#[derive(Default, Clone, Copy)]
pub struct Hooks<'a> {
    /// Polled periodically; returning true stops the search with a resource limit.
    pub interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
    pub level_map: Option<LevelMap<'a>>,
}

struct Budget<'a> {
    nodes: u64,
    max: u64,
    interrupt: Option<&'a (dyn Fn() -> bool + Sync)>,
}

impl Budget<'_> {
    /// Charges `k` nodes; false once the budget or interrupt trips.
    fn charge(&mut self, k: u64) -> bool {
        let before = self.nodes;
        self.nodes += k;
        if self.nodes > self.max {
            return false;
        }
        if before >> 12 != self.nodes >> 12 {
            if let Some(stop) = self.interrupt {
                return !stop();
            }
        }
        true
    }
}

/// Bitmask of vertices `v > u` that `u` may still be joined to.
#[inline]
fn addable(g: &SmallGraph, p: usize, kp_free: bool, u: usize, v: usize) -> bool {
    !kp_free || !g.has_clique_in(g.row(u) & g.row(v), p - 2)
}

/// Whether every non-edge closes a `K_p` through itself.
fn saturating(g: &SmallGraph, p: usize) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) || g.has_clique_in(g.row(u) & g.row(v), p - 2)))
}

fn degree_ok(g: &SmallGraph, t: usize, mode: Mode) -> bool {
    let d = g.min_degree().unwrap_or(0);
    match mode {
        Mode::Exactly => d == t,
        _ => d >= t,
    }
}

fn is_leaf(g: &SmallGraph, prob: &SearchProblem) -> bool {
    degree_ok(g, prob.t, prob.mode) && saturating(g, prob.p)
}

fn deficit(g: &SmallGraph, t: usize) -> usize {
    (0..g.order()).map(|v| t.saturating_sub(g.degree(v))).sum()
}

/// Sound pruning for a partial graph with `k` edges aiming at `m`.
fn viable(g: &SmallGraph, prob: &SearchProblem, k: usize, m: usize) -> bool {
    if deficit(g, prob.t).div_ceil(2) > m - k {
        return false;
    }
    if prob.mode == Mode::Exactly && k < m && (0..g.order()).all(|v| g.degree(v) > prob.t) {
        return false;
    }
    true
}

fn children(g: &SmallGraph, prob: &SearchProblem) -> Vec<(u128, SmallGraph)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && addable(g, prob.p, prob.mode.kp_free(), u, v) {
                let mut c = *g;
                c.add_edge(u, v);
                let form = canonical_form(&c);
                out.push((form.code(), form));
            }
        }
    }
    out
}

enum Decision {
    /// Canonical codes of every feasible graph with `m` edges.
    Feasible(BTreeSet<u128>),
    Infeasible,
    Stopped,
}

fn decide_iso(prob: &SearchProblem, m: usize, budget: &mut Budget, hooks: &Hooks) -> Decision {
    let mut level: Vec<SmallGraph> = alloc::vec![SmallGraph::new(prob.n)];
    for k in 0..m {
        let expand = |g: &SmallGraph| children(g, prob);
        let expanded = match hooks.level_map {
            Some(map) => map(&level, &expand),
            None => level.iter().map(expand).collect(),
        };
        let mut next: BTreeMap<u128, SmallGraph> = BTreeMap::new();
        for batch in expanded {
            if !budget.charge(batch.len() as u64) {
                return Decision::Stopped;
            }
            for (code, c) in batch {
                if viable(&c, prob, k + 1, m) {
                    next.entry(code).or_insert(c);
                }
            }
        }
        if next.is_empty() {
            return Decision::Infeasible;
        }
        level = next.into_values().collect();
    }
    let found: BTreeSet<u128> = level.iter().filter(|g| is_leaf(g, prob)).map(|g| g.code()).collect();
    if found.is_empty() {
        Decision::Infeasible
    } else {
        Decision::Feasible(found)
    }
}

struct Dfs<'p, 'b, 'h> {
    prob: &'p SearchProblem,
    pairs: Vec<(usize, usize)>,
    /// For each vertex, how many pairs at or after position `i` touch it.
    remaining: Vec<[u8; MAX_ORDER]>,
    m: usize,
    budget: &'b mut Budget<'h>,
    found: BTreeSet<u128>,
    stopped: bool,
}

impl Dfs<'_, '_, '_> {
    fn go(&mut self, g: &mut SmallGraph, i: usize, k: usize) {
        if self.stopped {
            return;
        }
        if !self.budget.charge(1) {
            self.stopped = true;
            return;
        }
        if k == self.m {
            if is_leaf(g, self.prob) {
                self.found.insert(canonical_code(g));
            }
            return;
        }
        if self.pairs.len() - i < self.m - k || !viable(g, self.prob, k, self.m) {
            return;
        }
        let rem = &self.remaining[i];
        if (0..g.order()).any(|v| g.degree(v) + (rem[v] as usize) < self.prob.t) {
            return;
        }
        let (u, v) = self.pairs[i];
        if !g.has_edge(u, v) && addable(g, self.prob.p, self.prob.mode.kp_free(), u, v) {
            g.add_edge(u, v);
            self.go(g, i + 1, k + 1);
            g.remove_edge(u, v);
        }
        self.go(g, i + 1, k);
    }
}

fn decide_labelled(prob: &SearchProblem, m: usize, budget: &mut Budget) -> Decision {
    let n = prob.n;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut remaining = alloc::vec![[0u8; MAX_ORDER]; pairs.len() + 1];
    for i in (0..pairs.len()).rev() {
        let mut row = remaining[i + 1];
        row[pairs[i].0] += 1;
        row[pairs[i].1] += 1;
        remaining[i] = row;
    }
    let mut dfs = Dfs {
        prob,
        pairs,
        remaining,
        m,
        budget,
        found: BTreeSet::new(),
        stopped: false,
    };
    dfs.go(&mut SmallGraph::new(n), 0, 0);
    if dfs.stopped {
        Decision::Stopped
    } else if dfs.found.is_empty() {
        Decision::Infeasible
    } else {
        Decision::Feasible(dfs.found)
    }
}

/// Runs the search for any mode, returning every optimal class when
/// `enumerate` is set.
pub fn solve(prob: &SearchProblem, enumerate: bool, hooks: &Hooks) -> Result<SearchResult> {
    prob.validate()?;
    let mut budget = Budget {
        nodes: 0,
        max: prob.max_nodes,
        interrupt: hooks.interrupt,
    };
    let n = prob.n;
    let top = n * (n - 1) / 2;
    let result = |outcome, found: Option<BTreeSet<u128>>, nodes| {
        let witness = found.as_ref().and_then(|f| f.first()).map(|&c| SmallGraph::from_code(n, c).to_graph());
        let extremal = if enumerate {
            found.map(|f| f.iter().map(|&c| SmallGraph::from_code(n, c).to_graph()).collect())
        } else {
            None
        };
        SearchResult {
            outcome,
            witness,
            nodes,
            extremal,
        }
    };
    if prob.t >= n {
        return Ok(result(Outcome::Infeasible, None, 0));
    }
    let shortcut = prob.upper.as_ref().filter(|_| !enumerate);
    for m in prob.start()..=top {
        if let Some(g) = shortcut.filter(|g| g.edge_count() == m) {
            let small = SmallGraph::from_graph(g).expect("order validated");
            let found = BTreeSet::from([canonical_code(&small)]);
            return Ok(result(Outcome::Optimal(m), Some(found), budget.nodes));
        }
        let decision = if prob.iso_rejection {
            decide_iso(prob, m, &mut budget, hooks)
        } else {
            decide_labelled(prob, m, &mut budget)
        };
        match decision {
            Decision::Feasible(found) => return Ok(result(Outcome::Optimal(m), Some(found), budget.nodes)),
            Decision::Infeasible => {}
            Decision::Stopped => return Ok(result(Outcome::ResourceLimit { m }, None, budget.nodes)),
        }
    }
    Ok(result(Outcome::Infeasible, None, budget.nodes))
}

/// `sat_t(n, p)` (or `sat'_t` for [`Mode::Exactly`]).
pub fn exact_sat(prob: &SearchProblem) -> Result<SearchResult> {
    ensure!(prob.mode != Mode::Semi, "use exact_semi_sat for the semi-saturated mode");
    solve(prob, false, &Hooks::default())
}

/// `s-sat_t(n, p)`; the problem's mode is ignored.
pub fn exact_semi_sat(prob: &SearchProblem) -> Result<SearchResult> {
    let prob = SearchProblem {
        mode: Mode::Semi,
        ..prob.clone()
    };
    solve(&prob, false, &Hooks::default())
}

/// Every optimal graph up to isomorphism.
pub fn enumerate_extremal(prob: &SearchProblem) -> Result<SearchResult> {
    ensure!(prob.n <= 9, "enumeration is limited to n <= 9, got {}", prob.n);
    solve(prob, true, &Hooks::default())
}

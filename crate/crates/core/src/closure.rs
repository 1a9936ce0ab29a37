//! The closure-refinement engine: grows a vertex set `R` until no vertex
//! outside its closure is light, then certifies `e(G) >= t (n - |R*|)`.
//!
//! Weights and controls are integers scaled by `2t`, so every comparison is
//! exact.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::antichain::{lym_check, maximal_members};
use crate::error::Error;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::verify;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A representative has no neighbour outside the closure.
    #[error("integrity error at step {step}: vertex {vertex} has no neighbour outside the closure")]
    Integrity { step: usize, vertex: usize },
    /// A step broke an invariant the refinement argument guarantees.
    #[error("inconsistency at step {step}: {check} (vertex {vertex:?})")]
    Inconsistency {
        step: usize,
        check: &'static str,
        vertex: Option<usize>,
    },
}

/// Least superset of `r` closed under adding vertices with at least `t`
/// neighbours inside.
pub fn closure(g: &Graph, t: usize, r: &VertexSet) -> VertexSet {
    let mut rbar = r.clone();
    let mut counts: Vec<usize> = (0..g.order()).map(|v| g.degree_in(v, r)).collect();
    let mut queue: Vec<usize> = (0..g.order()).filter(|&v| !rbar.contains(v) && counts[v] >= t).collect();
    while let Some(v) = queue.pop() {
        if !rbar.insert(v) {
            continue;
        }
        for u in g.neighbors(v).iter() {
            counts[u] += 1;
            if counts[u] == t && !rbar.contains(u) {
                queue.push(u);
            }
        }
    }
    rbar
}

/// Snapshot of the engine: `R`, its closure and the outside set `Y`.
#[derive(Clone)]
pub struct ClosureState<'g> {
    g: &'g Graph,
    t: usize,
    r: VertexSet,
    rbar: VertexSet,
    y: VertexSet,
    step: usize,
}

impl<'g> ClosureState<'g> {
    pub fn new(g: &'g Graph, t: usize, r: VertexSet) -> Result<Self, Error> {
        crate::error::ensure!(t >= 1, "t must be at least 1");
        crate::error::ensure!(
            r.bound() <= g.order(),
            "initial set {r:?} leaves the vertex range 0..{}",
            g.order()
        );
        Ok(Self::at_step(g, t, r, 0))
    }

    fn at_step(g: &'g Graph, t: usize, r: VertexSet, step: usize) -> Self {
        let rbar = closure(g, t, &r);
        let y = g.vertices().difference(&rbar);
        Self { g, t, r, rbar, y, step }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn r(&self) -> &VertexSet {
        &self.r
    }

    pub fn rbar(&self) -> &VertexSet {
        &self.rbar
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// `2t * w(v)` where `w(v) = d_Rbar(v) + d_Y(v) / 2`.
    pub fn weight_scaled(&self, v: usize) -> u64 {
        let t = self.t as u64;
        2 * t * self.g.degree_in(v, &self.rbar) as u64 + t * self.g.degree_in(v, &self.y) as u64
    }

    /// `2t * l(v) = 2t d_R(v) + t d_{Rbar \ R}(v) + sum over y in N_Y(v) of d_R(y)`.
    pub fn control_scaled(&self, v: usize) -> u64 {
        let t = self.t as u64;
        let nv = self.g.neighbors(v);
        let in_r = nv.intersection_len(&self.r) as u64;
        let in_rbar = nv.intersection_len(&self.rbar) as u64;
        let fuel: u64 = nv
            .intersection(&self.y)
            .iter()
            .map(|y| self.g.degree_in(y, &self.r) as u64)
            .sum();
        2 * t * in_r + t * (in_rbar - in_r) + fuel
    }

    /// Vertices of `Y` with weight below `t`.
    pub fn bad_vertices(&self) -> VertexSet {
        let threshold = 2 * (self.t as u64) * (self.t as u64);
        self.y.iter().filter(|&v| self.weight_scaled(v) < threshold).collect()
    }

    /// Maximal traces `N_R(y)` over bad `y`, each with its smallest bad
    /// representative; ordered by representative.
    pub fn trace_antichain(&self) -> Result<(Vec<VertexSet>, Vec<usize>), Error> {
        let bad = self.bad_vertices().to_vec();
        crate::error::ensure!(!bad.is_empty(), "no bad vertices at step {}", self.step);
        let traces: Vec<VertexSet> = bad.iter().map(|&y| self.g.neighbors(y).intersection(&self.r)).collect();
        let family = maximal_members(&traces);
        let reps = family
            .iter()
            .map(|c| bad[traces.iter().position(|tr| tr == c).expect("trace came from a bad vertex")])
            .collect();
        Ok((family, reps))
    }

    /// One refinement `R -> R'`, checking the growth bound, the antichain
    /// bound and the control increment of every bad vertex that survives.
    pub fn refine(&self) -> Result<(ClosureState<'g>, StepRecord), CertError> {
        let step = self.step;
        let t = self.t;
        let bad = self.bad_vertices();
        let (traces, reps) = self.trace_antichain()?;

        let mut xs = Vec::with_capacity(reps.len());
        let mut r_after = self.r.clone();
        for &y in &reps {
            let x = self
                .g
                .neighbors(y)
                .intersection(&self.y)
                .first()
                .ok_or(CertError::Integrity { step, vertex: y })?;
            xs.push(x);
            r_after.insert(x);
            r_after.union_with(&self.g.neighbors(x).intersection(&self.rbar));
        }

        let inconsistency = |check, vertex| CertError::Inconsistency { step, check, vertex };
        let m = self.r.len();
        let power = BigUint::from(m).pow(t as u32 - 1);
        if let Some(c) = traces.iter().find(|c| c.len() + 1 > t) {
            return Err(inconsistency("trace larger than t - 1", c.first()));
        }
        if BigUint::from(traces.len()) > power {
            return Err(inconsistency("antichain larger than |R|^(t-1)", None));
        }
        let lym = lym_check(&relative_to(&self.r, &traces), m);
        if !(lym.is_antichain && lym.lym_holds() && lym.within_power_bound) {
            return Err(inconsistency("trace family fails the LYM check", None));
        }
        if BigUint::from(r_after.len()) > BigUint::from(m) + BigUint::from(t) * &power {
            return Err(inconsistency("|R'| exceeds |R| + t |R|^(t-1)", None));
        }

        let next = ClosureState::at_step(self.g, t, r_after, step + 1);
        for y in next.bad_vertices().iter() {
            if next.control_scaled(y) < self.control_scaled(y) + 1 {
                return Err(inconsistency("control of a bad vertex did not grow", Some(y)));
            }
        }
        let record = StepRecord {
            r_before: self.r.clone(),
            bad,
            traces,
            reps,
            xs,
            r_after: next.r.clone(),
        };
        Ok((next, record))
    }
}

/// Re-indexes subsets of `r` into `0..|r|` by rank.
fn relative_to(r: &VertexSet, family: &[VertexSet]) -> Vec<VertexSet> {
    let order = r.to_vec();
    family
        .iter()
        .map(|c| c.iter().map(|v| order.binary_search(&v).expect("trace inside R")).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub r_before: VertexSet,
    pub bad: VertexSet,
    pub traces: Vec<VertexSet>,
    pub reps: Vec<usize>,
    pub xs: Vec<usize>,
    pub r_after: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub p: usize,
    pub t: usize,
    pub n: usize,
    pub r0: VertexSet,
    pub steps: Vec<StepRecord>,
    pub r_star: VertexSet,
    pub iterations: usize,
    /// `t (n - |R*|)`.
    pub bound: usize,
    pub edges: usize,
    pub verified: bool,
}

/// Standard starting sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `{0}`.
    Single,
    /// `{0, ..., t}`.
    FirstTPlusOne,
}

pub fn preset(preset: Preset, t: usize) -> VertexSet {
    match preset {
        Preset::Single => VertexSet::singleton(0),
        Preset::FirstTPlusOne => (0..=t).collect(),
    }
}

fn check_input(g: &Graph, p: usize, t: usize, r0: &VertexSet) -> Result<(), CertError> {
    if t == 0 {
        return Err(CertError::Precondition("t must be at least 1".into()));
    }
    if r0.is_empty() || r0.bound() > g.order() {
        return Err(CertError::Precondition(alloc::format!(
            "initial set {r0:?} must be a nonempty subset of 0..{}",
            g.order()
        )));
    }
    if p < 3 || !verify::is_saturated(g, p) {
        return Err(CertError::Precondition(alloc::format!("graph is not K_{p}-saturated")));
    }
    let delta = g.min_degree()?;
    if delta < t {
        return Err(CertError::Precondition(alloc::format!(
            "minimum degree {delta} is below t = {t}"
        )));
    }
    Ok(())
}

/// Runs refinements from `r0` until no bad vertex remains.
pub fn run(g: &Graph, p: usize, t: usize, r0: &VertexSet) -> Result<Certificate, CertError> {
    check_input(g, p, t, r0)?;
    let limit = 2 * t * t;
    let mut state = ClosureState::new(g, t, r0.clone())?;
    let mut steps = Vec::new();
    while !state.bad_vertices().is_empty() {
        if steps.len() == limit {
            return Err(CertError::Inconsistency {
                step: steps.len(),
                check: "more than 2t^2 refinements",
                vertex: None,
            });
        }
        let (next, record) = state.refine()?;
        steps.push(record);
        state = next;
    }
    let n = g.order();
    let bound = t * (n - state.r.len());
    let edges = g.edge_count();
    if bound > edges {
        return Err(CertError::Inconsistency {
            step: steps.len(),
            check: "bound exceeds the edge count",
            vertex: None,
        });
    }
    Ok(Certificate {
        p,
        t,
        n,
        r0: r0.clone(),
        iterations: steps.len(),
        steps,
        r_star: state.r,
        bound,
        edges,
        verified: true,
    })
}

fn naive_closure(g: &Graph, t: usize, r: &VertexSet) -> VertexSet {
    let mut cur = r.clone();
    loop {
        let grown: VertexSet = (0..g.order())
            .filter(|&v| cur.contains(v) || g.degree_in(v, &cur) >= t)
            .collect();
        if grown == cur {
            return cur;
        }
        cur = grown;
    }
}

/// The control `l(v)` as an exact rational, straight from its definition.
fn control_exact(g: &Graph, t: usize, r: &VertexSet, rbar: &VertexSet, v: usize) -> BigRational {
    let q = |a: usize, b: usize| BigRational::new(BigInt::from(a), BigInt::from(b));
    let mut l = q(0, 1);
    for u in g.neighbors(v).iter() {
        if r.contains(u) {
            l += q(1, 1);
        } else if rbar.contains(u) {
            l += q(1, 2);
        } else {
            l += q(g.degree_in(u, r), 2 * t);
        }
    }
    l
}

fn weight_exact(g: &Graph, rbar: &VertexSet, v: usize) -> BigRational {
    let inside = g.degree_in(v, rbar);
    BigRational::new(BigInt::from(2 * inside + (g.degree(v) - inside)), BigInt::from(2))
}

/// Re-derives every step of `cert` from its initial set with separately
/// written closure and potential computations, and re-checks each invariant.
pub fn replay(g: &Graph, cert: &Certificate) -> Result<(), CertError> {
    let t = cert.t;
    check_input(g, cert.p, t, &cert.r0)?;
    let fail = |step, check| Err(CertError::Inconsistency { step, check, vertex: None });
    let step_size = BigRational::new(BigInt::from(1), BigInt::from(2 * t));
    let tq = BigRational::from(BigInt::from(t));
    let mut r = cert.r0.clone();
    for (i, s) in cert.steps.iter().enumerate() {
        if s.r_before != r {
            return fail(i, "recorded R differs from replayed R");
        }
        let rbar = naive_closure(g, t, &r);
        let y = g.vertices().difference(&rbar);
        let bad: VertexSet = y.iter().filter(|&v| weight_exact(g, &rbar, v) < tq).collect();
        if bad != s.bad || bad.is_empty() {
            return fail(i, "recorded bad set differs");
        }
        // every bad trace lies under some recorded trace, and the traces are antichain members
        for v in bad.iter() {
            let tr = g.neighbors(v).intersection(&r);
            if !s.traces.iter().any(|c| tr.is_subset(c)) {
                return fail(i, "a bad trace is not covered");
            }
        }
        if s.traces.len() != s.reps.len() || s.reps.len() != s.xs.len() {
            return fail(i, "ragged step record");
        }
        for ((c, &rep), &x) in s.traces.iter().zip(&s.reps).zip(&s.xs) {
            if !bad.contains(rep) || g.neighbors(rep).intersection(&r) != *c {
                return fail(i, "representative does not realise its trace");
            }
            if !y.contains(x) || !g.has_edge(rep, x) {
                return fail(i, "x is not a neighbour of its representative in Y");
            }
        }
        let lym = lym_check(&relative_to(&r, &s.traces), r.len());
        if !(lym.is_antichain && lym.lym_holds() && lym.within_power_bound) {
            return fail(i, "trace family fails the LYM check");
        }
        let mut next = r.clone();
        for &x in &s.xs {
            next.insert(x);
            next.union_with(&g.neighbors(x).intersection(&rbar));
        }
        if next != s.r_after {
            return fail(i, "recorded R' differs");
        }
        let growth = BigUint::from(r.len()) + BigUint::from(t) * BigUint::from(r.len()).pow(t as u32 - 1);
        if BigUint::from(next.len()) > growth {
            return fail(i, "|R'| exceeds |R| + t |R|^(t-1)");
        }
        let next_bar = naive_closure(g, t, &next);
        for v in g.vertices().difference(&next_bar).iter() {
            if weight_exact(g, &next_bar, v) < tq
                && control_exact(g, t, &next, &next_bar, v) < control_exact(g, t, &r, &rbar, v) + &step_size
            {
                return fail(i, "control of a bad vertex did not grow");
            }
        }
        r = next;
    }
    let k = cert.steps.len();
    if k != cert.iterations || k > 2 * t * t {
        return fail(k, "iteration count");
    }
    if r != cert.r_star {
        return fail(k, "recorded R* differs");
    }
    let rbar = naive_closure(g, t, &r);
    if g.vertices().difference(&rbar).iter().any(|v| weight_exact(g, &rbar, v) < tq) {
        return fail(k, "bad vertices remain at R*");
    }
    if cert.bound != t * (g.order() - r.len()) || cert.bound > g.edge_count() || cert.edges != g.edge_count() {
        return fail(k, "bound");
    }
    Ok(())
}

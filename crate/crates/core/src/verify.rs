//! Saturation, semi-saturation and freeness checks with lexicographically
//! minimal witnesses, plus the aggregated bound report.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bounds::{self, TowerBound};
use crate::error::{ensure, Result};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

/// Evidence that a property fails.
///
/// `clique` refutes freeness, `non_edge` refutes (semi-)saturation and
/// `low_degree` names a vertex below the requested minimum degree (for a
/// hypergraph, the first `(r-1)`-set with too small a codegree).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witness {
    pub clique: Option<Vec<usize>>,
    pub non_edge: Option<Vec<usize>>,
    pub low_degree: Option<Vec<usize>>,
}

impl Witness {
    pub fn clique(c: Vec<usize>) -> Self {
        Self { clique: Some(c), ..Self::default() }
    }

    pub fn non_edge(e: Vec<usize>) -> Self {
        Self { non_edge: Some(e), ..Self::default() }
    }

    pub fn is_empty(&self) -> bool {
        self.clique.is_none() && self.non_edge.is_none() && self.low_degree.is_none()
    }
}

/// First non-edge `{u, v}` whose common neighbourhood holds no `K_{p-2}`.
pub fn dead_non_edge(g: &Graph, p: usize) -> Option<(usize, usize)> {
    assert!(p >= 2, "cliques of order {p} are not meaningful here");
    g.non_edges()
        .find(|&(u, v)| g.find_clique_in(&g.common_neighbors(u, v), p - 2).is_none())
}

pub fn is_kp_free(g: &Graph, p: usize) -> bool {
    !g.contains_clique(p)
}

/// `Ok` iff `g` is `K_p`-free and every non-edge closes a `K_p`.
pub fn check_saturated(g: &Graph, p: usize) -> core::result::Result<(), Witness> {
    if let Some(c) = g.find_clique(p) {
        return Err(Witness::clique(c));
    }
    match dead_non_edge(g, p) {
        Some((u, v)) => Err(Witness::non_edge(alloc::vec![u, v])),
        None => Ok(()),
    }
}

pub fn is_saturated(g: &Graph, p: usize) -> bool {
    check_saturated(g, p).is_ok()
}

/// `Ok` iff every non-edge closes a new `K_p`; `g` itself may contain `K_p`.
pub fn check_semi_saturated(g: &Graph, p: usize) -> core::result::Result<(), Witness> {
    match dead_non_edge(g, p) {
        Some((u, v)) => Err(Witness::non_edge(alloc::vec![u, v])),
        None => Ok(()),
    }
}

pub fn is_semi_saturated(g: &Graph, p: usize) -> bool {
    check_semi_saturated(g, p).is_ok()
}

pub fn has_conical_vertex(g: &Graph) -> bool {
    !g.conical_vertices().is_empty()
}

/// First `r`-set outside `h` whose addition creates no `K_p^r`.
pub fn dead_hyper_non_edge(h: &Hypergraph, p: usize) -> Option<Vec<usize>> {
    h.non_edges().find(|e| h.find_clique_through(e, p).is_none())
}

pub fn check_r_saturated(h: &Hypergraph, p: usize) -> core::result::Result<(), Witness> {
    assert!(p > h.uniformity(), "need p > r");
    if let Some(c) = h.find_clique(p) {
        return Err(Witness::clique(c));
    }
    match dead_hyper_non_edge(h, p) {
        Some(e) => Err(Witness::non_edge(e)),
        None => Ok(()),
    }
}

pub fn is_r_saturated(h: &Hypergraph, p: usize) -> bool {
    check_r_saturated(h, p).is_ok()
}

/// When a bound is guaranteed to hold for the subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applies {
    /// Lower bound valid for every saturated subject meeting the degree condition.
    Saturated,
    /// Lower bound valid for every semi-saturated subject meeting the degree condition.
    SemiSaturated,
    /// Shown for comparison only; never an inconsistency.
    Informational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Rational(BigRational),
    Tower(TowerBound),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub value: BoundValue,
    /// Lower bounds: `edges >= value`; upper bounds: `edges <= value`.
    pub upper: bool,
    pub satisfied: bool,
    pub applies: Applies,
    /// Whether the degree condition the bound assumes holds for the subject.
    pub degree_condition: bool,
}

/// Outcome of verifying one graph or hypergraph against `K_p` (or `K_p^r`).
///
/// `min_degree` is the vertex minimum degree for graphs and the minimum
/// `(r-1)`-codegree for hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub r: Option<usize>,
    pub p: usize,
    pub t: Option<usize>,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub kp_free: bool,
    pub saturated: bool,
    pub semi_saturated: bool,
    pub bounds: Vec<BoundCheck>,
    pub witness: Option<Witness>,
}

impl VerifyReport {
    /// Whether the minimum degree meets the requested `t` (vacuous without one).
    pub fn degree_ok(&self) -> bool {
        match (self.t, self.min_degree) {
            (Some(t), Some(d)) => d >= t,
            (Some(t), None) => t == 0,
            (None, _) => true,
        }
    }

    /// Bounds that are guaranteed for this subject yet fail: each one would
    /// contradict a proven theorem.
    pub fn fatal(&self) -> Vec<&'static str> {
        self.bounds
            .iter()
            .filter(|b| !b.satisfied && b.degree_condition)
            .filter(|b| match b.applies {
                Applies::Saturated => self.saturated,
                Applies::SemiSaturated => self.semi_saturated,
                Applies::Informational => false,
            })
            .map(|b| b.name)
            .collect()
    }
}

fn lower(name: &'static str, value: BigRational, edges: usize, applies: Applies, degree_condition: bool) -> BoundCheck {
    let satisfied = BigRational::from(BigInt::from(edges)) >= value;
    BoundCheck {
        name,
        value: BoundValue::Rational(value),
        upper: false,
        satisfied,
        applies,
        degree_condition,
    }
}

fn upper(name: &'static str, value: BigRational, edges: usize) -> BoundCheck {
    let satisfied = BigRational::from(BigInt::from(edges)) <= value;
    BoundCheck {
        name,
        value: BoundValue::Rational(value),
        upper: true,
        satisfied,
        applies: Applies::Informational,
        degree_condition: true,
    }
}

/// Full verification of a graph: freeness, (semi-)saturation, minimum degree
/// against `t`, and every bound whose parameter range covers `(n, p, t)`.
pub fn check_bounds(g: &Graph, p: usize, t: Option<usize>) -> Result<VerifyReport> {
    ensure!(p >= 3, "verification needs p >= 3, got {p}");
    let n = g.order();
    let e = g.edge_count();
    let min_degree = g.min_degree().ok();
    let clique = g.find_clique(p);
    let dead = dead_non_edge(g, p);
    let kp_free = clique.is_none();
    let semi_saturated = dead.is_none();
    let saturated = kp_free && semi_saturated;

    let mut witness = Witness {
        clique,
        non_edge: dead.map(|(u, v)| alloc::vec![u, v]),
        low_degree: None,
    };
    if let (Some(t), Some(_)) = (t, min_degree) {
        witness.low_degree = (0..n).find(|&v| g.degree(v) < t).map(|v| alloc::vec![v]);
    }

    let degree_ok = match (t, min_degree) {
        (Some(t), Some(d)) => d >= t,
        _ => true,
    };
    let q = |x: BigInt| BigRational::from(x);
    let mut checks = Vec::new();
    if n >= p {
        checks.push(lower("ehm", q(bounds::ehm_bound(n, p)?), e, Applies::Saturated, true));
    }
    if let Some(d) = min_degree {
        checks.push(lower("duffus_hanson_semi", bounds::dh_semi_bound(n, d, p)?, e, Applies::SemiSaturated, true));
    }
    if let Some(t) = t {
        if t <= bounds::turan_max_min_degree(n, p) {
            checks.push(lower("duffus_hanson", bounds::dh_mixed_bound(n, p, t)?, e, Applies::Saturated, degree_ok));
        }
        if t >= 1 {
            let tower = bounds::closure_tower_bound(n, p, t)?;
            checks.push(BoundCheck {
                name: "closure_tower",
                satisfied: tower.admits(&BigInt::from(e)),
                value: BoundValue::Tower(tower),
                upper: false,
                applies: Applies::Saturated,
                degree_condition: degree_ok,
            });
        }
        if t + 2 >= p && n > t {
            let applies = if bounds::semi_sat_lower_proven(n, p, t) {
                Applies::SemiSaturated
            } else {
                Applies::Informational
            };
            checks.push(lower("semi_sat_lower", bounds::semi_sat_lower(n, p, t)?, e, applies, degree_ok));
            checks.push(upper("semi_sat_upper", q(bounds::semi_sat_upper(n, p, t)?), e));
        }
        if t + 2 >= p && n + p >= 2 * t + 3 {
            checks.push(upper("clique_join_upper", q(bounds::clique_join_upper(n, p, t)?), e));
        }
    }

    Ok(VerifyReport {
        n,
        r: None,
        p,
        t,
        edges: e,
        min_degree,
        kp_free,
        saturated,
        semi_saturated,
        bounds: checks,
        witness: (!witness.is_empty()).then_some(witness),
    })
}

/// Full verification of an `r`-graph against `K_p^r`; `min_degree` is the
/// minimum `(r-1)`-codegree.
pub fn check_hyper_bounds(h: &Hypergraph, p: usize, t: Option<usize>) -> Result<VerifyReport> {
    let r = h.uniformity();
    ensure!(r >= 2 && p > r, "hypergraph verification needs p > r >= 2, got r = {r}, p = {p}");
    let n = h.order();
    let e = h.edge_count();
    let codegree = if n >= r - 1 { h.min_codegree(r - 1).ok() } else { None };
    let clique = h.find_clique(p);
    let dead = dead_hyper_non_edge(h, p);
    let kp_free = clique.is_none();
    let semi_saturated = dead.is_none();
    let mut witness = Witness {
        clique,
        non_edge: dead,
        low_degree: None,
    };
    if let (Some(t), Some(d)) = (t, codegree) {
        if d < t {
            witness.low_degree = crate::combinatorics::combinations(n, r - 1).find(|s| h.degree_of(s) < t);
        }
    }
    let mut checks = Vec::new();
    if n >= p {
        checks.push(lower(
            "bollobas",
            BigRational::from(bounds::bollobas_bound(n, r, p)?),
            e,
            Applies::Saturated,
            true,
        ));
    }
    Ok(VerifyReport {
        n,
        r: Some(r),
        p,
        t,
        edges: e,
        min_degree: codegree,
        kp_free,
        saturated: kp_free && semi_saturated,
        semi_saturated,
        bounds: checks,
        witness: (!witness.is_empty()).then_some(witness),
    })
}

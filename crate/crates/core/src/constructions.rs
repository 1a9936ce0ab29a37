//! Named families of saturated and semi-saturated graphs.
//!
//! Vertex classes are laid out as consecutive index ranges in the order each
//! construction names them.

use alloc::vec::Vec;
use core::ops::Range;

use crate::combinatorics::{binomial_u128, combinations};
use crate::error::{ensure, Result};
use crate::graph::Graph;

fn join_all(g: &mut Graph, a: Range<usize>, b: Range<usize>) {
    for u in a {
        for v in b.clone() {
            g.insert_unchecked(u, v);
        }
    }
}

fn make_clique(g: &mut Graph, a: Range<usize>) {
    for u in a.clone() {
        for v in u + 1..a.end {
            g.insert_unchecked(u, v);
        }
    }
}

/// `K_{p-2}` joined to an independent set of `n - p + 2` vertices; the clique
/// takes indices `0..p-2`.
pub fn ehm_extremal(n: usize, p: usize) -> Result<Graph> {
    ensure!(p >= 3, "ehm_extremal needs p >= 3, got {p}");
    ensure!(n >= p, "ehm_extremal needs n >= p, got n = {n}, p = {p}");
    let mut g = Graph::new(n);
    make_clique(&mut g, 0..p - 2);
    join_all(&mut g, 0..p - 2, p - 2..n);
    Ok(g)
}

/// `K_{t, n-t}` with the `t`-side at indices `0..t`.
pub fn complete_bipartite(t: usize, n: usize) -> Result<Graph> {
    ensure!(t >= 1 && n >= 2 * t, "complete_bipartite needs n >= 2t >= 2, got t = {t}, n = {n}");
    let mut g = Graph::new(n);
    join_all(&mut g, 0..t, t..n);
    Ok(g)
}

/// A clique on `p - 3` vertices joined to `K_{t-(p-3), n-t}`.
///
/// Layout: clique, then the small side, then the large side.
pub fn clique_join_bipartite(n: usize, p: usize, t: usize) -> Result<Graph> {
    ensure!(p >= 3, "clique_join_bipartite needs p >= 3, got {p}");
    ensure!(t + 2 >= p, "clique_join_bipartite needs t >= p - 2, got t = {t}, p = {p}");
    let k = p - 3;
    ensure!(
        n + k >= 2 * t,
        "clique_join_bipartite needs n >= 2t - (p - 3), got n = {n}, t = {t}, p = {p}"
    );
    let small = t - k;
    let mut g = Graph::new(n);
    make_clique(&mut g, 0..k);
    join_all(&mut g, 0..k, k..n);
    join_all(&mut g, k..k + small, k + small..n);
    Ok(g)
}

/// The 5-cycle grown by repeatedly duplicating the smallest degree-2 vertex.
pub fn duffus_hanson_t2(n: usize) -> Result<Graph> {
    ensure!(n >= 5, "duffus_hanson_t2 needs n >= 5, got {n}");
    let mut g = Graph::cycle(5)?;
    while g.order() < n {
        let v = (0..g.order()).find(|&v| g.degree(v) == 2).expect("vertex 0 keeps degree 2");
        g = g.duplicate_vertex(v)?;
    }
    Ok(g)
}

/// Outer 5-cycle on `0..5`, inner pentagram on `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.insert_unchecked(i, (i + 1) % 5);
        g.insert_unchecked(i, i + 5);
        g.insert_unchecked(i + 5, (i + 2) % 5 + 5);
    }
    g
}

/// Index layout of [`hub_family`].
///
/// The hub set `H` is `0..t`; hub offset `k` plays the role of label `k + 1`.
/// `v_sets[i]` is joined to the hubs in `hub_sets[i]`, `w_sets[i]` to the hubs
/// in `co_hub_sets[i]`, and `v_sets[i]` is joined to `w_sets[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HubFamilyLayout {
    pub t: usize,
    pub n: usize,
    pub hubs: Range<usize>,
    pub v_sets: Vec<Range<usize>>,
    pub w_sets: Vec<Range<usize>>,
    pub common: Range<usize>,
    /// All `floor(t/2)`-subsets of hub offsets containing offset 0, lexicographic.
    pub hub_sets: Vec<Vec<usize>>,
    pub co_hub_sets: Vec<Vec<usize>>,
}

/// Smallest order accepted by [`hub_family`] for degree `t`.
pub fn hub_family_min_order(t: usize) -> usize {
    t + (t / 2) * binomial_u128(t as u64, (t / 2) as u64) as usize
}

/// Triangle-saturated graph with minimum degree `t >= 4` built from `t` hubs
/// and one `(V_i, W_i)` pair per half-size hub subset containing hub 0.
pub fn hub_family(t: usize, n: usize) -> Result<(Graph, HubFamilyLayout)> {
    ensure!(t >= 4, "hub_family needs t >= 4, got {t}");
    let min = hub_family_min_order(t);
    ensure!(n >= min, "hub_family needs n >= {min} for t = {t}, got {n}");
    let half = t / 2;
    let hub_sets: Vec<Vec<usize>> = combinations(t - 1, half - 1)
        .map(|rest| core::iter::once(0).chain(rest.into_iter().map(|k| k + 1)).collect())
        .collect();
    let co_hub_sets: Vec<Vec<usize>> = hub_sets
        .iter()
        .map(|x| (0..t).filter(|k| !x.contains(k)).collect())
        .collect();
    let r = hub_sets.len();
    let mut next = t;
    let mut take = |size: usize| {
        let range = next..next + size;
        next += size;
        range
    };
    let v_sets: Vec<_> = (0..r).map(|_| take(half)).collect();
    let w_sets: Vec<_> = (0..r).map(|_| take(t - half)).collect();
    let common = next..n;

    let mut g = Graph::new(n);
    join_all(&mut g, common.clone(), 0..t);
    for i in 0..r {
        for &k in &hub_sets[i] {
            join_all(&mut g, v_sets[i].clone(), k..k + 1);
        }
        for &k in &co_hub_sets[i] {
            join_all(&mut g, w_sets[i].clone(), k..k + 1);
        }
        join_all(&mut g, v_sets[i].clone(), w_sets[i].clone());
    }
    let layout = HubFamilyLayout {
        t,
        n,
        hubs: 0..t,
        v_sets,
        w_sets,
        common,
        hub_sets,
        co_hub_sets,
    };
    Ok((g, layout))
}

/// A graph on `m` vertices with minimum degree exactly `s` and `ceil(ms/2)`
/// edges: the circulant on offsets `1..=floor(s/2)`, plus for odd `s` a
/// diameter matching (even `m`) or a near-perfect matching with one extra
/// edge (odd `m`).
pub fn min_degree_circulant(m: usize, s: usize) -> Result<Graph> {
    ensure!(m > s, "min_degree_circulant needs m > s, got m = {m}, s = {s}");
    let mut g = Graph::new(m);
    for i in 0..m {
        for d in 1..=s / 2 {
            g.insert_unchecked(i, (i + d) % m);
        }
    }
    if s % 2 == 1 {
        if m % 2 == 0 {
            for i in 0..m / 2 {
                g.insert_unchecked(i, i + m / 2);
            }
        } else {
            let h = (m - 1) / 2;
            for i in 0..h {
                g.insert_unchecked(i, i + h);
            }
            // m - 1 is the only unmatched vertex; its partner is at circular distance h
            g.insert_unchecked(m - 1, h - 1);
        }
    }
    Ok(g)
}

/// `K_{p-2}` joined to `min_degree_circulant(n - (p - 2), t - (p - 2))`.
///
/// The clique occupies `0..p-2`.
pub fn semi_sat(n: usize, p: usize, t: usize) -> Result<Graph> {
    ensure!(p >= 3, "semi_sat needs p >= 3, got {p}");
    ensure!(t + 2 >= p, "semi_sat needs t >= p - 2, got t = {t}, p = {p}");
    ensure!(n > t, "semi_sat needs n > t, got n = {n}, t = {t}");
    let k = p - 2;
    let base = min_degree_circulant(n - k, t - k)?;
    let mut g = Graph::new(n);
    make_clique(&mut g, 0..k);
    join_all(&mut g, 0..k, k..n);
    for (u, v) in base.edges() {
        g.insert_unchecked(u + k, v + k);
    }
    Ok(g)
}

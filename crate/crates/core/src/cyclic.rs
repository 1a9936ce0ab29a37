//! Saturated `r`-graphs with prescribed `(r-1)`-codegree, built from `r`
//! cyclically ordered vertex classes.

use alloc::vec::Vec;

use crate::combinatorics::{binomial_u128, combinations};
use crate::error::{domain, ensure, Result};
use crate::hypergraph::Hypergraph;

/// Classes `A_1, ..., A_r` (0-based here) with `|A_1| = n - t(r-1)` and
/// `|A_i| = t` otherwise, laid out in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPartition {
    pub r: usize,
    pub t: usize,
    pub n: usize,
}

impl CyclicPartition {
    pub fn new(r: usize, t: usize, n: usize) -> Result<Self> {
        ensure!(r >= 2, "need r >= 2, got {r}");
        ensure!(t >= 1, "need t >= 1, got {t}");
        ensure!(n >= r * t, "need n >= rt = {}, got {n}", r * t);
        Ok(Self { r, t, n })
    }

    pub fn first_size(&self) -> usize {
        self.n - self.t * (self.r - 1)
    }

    /// Index range of class `i` (0-based).
    pub fn class(&self, i: usize) -> core::ops::Range<usize> {
        assert!(i < self.r);
        let a = self.first_size();
        if i == 0 {
            0..a
        } else {
            let start = a + (i - 1) * self.t;
            start..start + self.t
        }
    }

    pub fn class_of(&self, v: usize) -> usize {
        assert!(v < self.n);
        let a = self.first_size();
        if v < a {
            0
        } else {
            1 + (v - a) / self.t
        }
    }

    /// How many members of `b` fall in each class.
    pub fn counts(&self, b: &[usize]) -> Vec<usize> {
        let mut c = alloc::vec![0; self.r];
        for &v in b {
            c[self.class_of(v)] += 1;
        }
        c
    }
}

/// Whether some cyclic start `j` gives `c_j + ... + c_{j+s-1} >= s + 1` for
/// every `s = 1..r-1`, where `c_i` counts members of `b` in class `i`.
/// Such sets are the non-edges of the base.
pub fn fuel_criterion(b: &[usize], part: &CyclicPartition) -> Result<bool> {
    ensure!(b.len() == part.r, "set {b:?} has {} vertices, expected {}", b.len(), part.r);
    Ok(fuel_from_counts(&part.counts(b)))
}

pub fn fuel_from_counts(c: &[usize]) -> bool {
    let r = c.len();
    (0..r).any(|j| {
        let mut sum = 0;
        (1..r).all(|s| {
            sum += c[(j + s - 1) % r];
            sum > s
        })
    })
}

/// All `r`-sets failing the fuel criterion.
pub fn cyclic_base(r: usize, t: usize, n: usize) -> Result<(Hypergraph, CyclicPartition)> {
    let part = CyclicPartition::new(r, t, n)?;
    let h = Hypergraph::from_edges(r, n, combinations(n, r).filter(|b| !fuel_from_counts(&part.counts(b))))?;
    Ok((h, part))
}

/// Checks that every `(r-1)`-set `R` misses some class `A_i` with
/// `R + a` an edge for all `a` in `A_i`; returns the first failing `R`.
pub fn codegree_class_check(h: &Hypergraph, part: &CyclicPartition) -> core::result::Result<(), Vec<usize>> {
    for set in combinations(part.n, part.r - 1) {
        let ok = (0..part.r).any(|i| {
            part.class(i).all(|a| {
                if set.contains(&a) {
                    return false;
                }
                let mut e = set.clone();
                let pos = e.partition_point(|&x| x < a);
                e.insert(pos, a);
                h.contains_sorted(&e)
            })
        });
        if !ok {
            return Err(set);
        }
    }
    Ok(())
}

/// Adds, in lexicographic order, every `r`-set whose addition creates no
/// `K_p^r`.
pub fn greedy_complete(h: &Hypergraph, p: usize) -> Result<Hypergraph> {
    let order: Vec<Vec<usize>> = combinations(h.order(), h.uniformity()).collect();
    greedy_complete_in_order(h, p, &order)
}

/// Greedy completion examining candidates in the given order; sets already
/// present are skipped.
pub fn greedy_complete_in_order(h: &Hypergraph, p: usize, order: &[Vec<usize>]) -> Result<Hypergraph> {
    ensure!(p > h.uniformity(), "need p > r");
    if let Some(c) = h.find_clique(p) {
        return Err(domain!("input already contains K_{p} on {c:?}"));
    }
    let mut out = h.clone();
    for e in order {
        let e = out.normalize(e.clone())?;
        if !out.contains_sorted(&e) && out.find_clique_through(&e, p).is_none() {
            out.add_edge(e)?;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicLayout {
    /// Partition of the base, on the first `n - (p - r - 1)` vertices.
    pub partition: CyclicPartition,
    /// The added universal vertices, highest indices.
    pub universal: core::ops::Range<usize>,
}

/// `K_p^r`-saturated `r`-graph on `n` vertices with `(r-1)`-codegree `t`:
/// a completed base with codegree `t - (p - r - 1)`, plus `p - r - 1`
/// universal vertices.
pub fn cyclic_saturated(r: usize, p: usize, t: usize, n: usize) -> Result<(Hypergraph, CyclicLayout)> {
    ensure!(r >= 2, "need r >= 2, got {r}");
    ensure!(p > r && t + r >= p, "need t >= p - r >= 1, got r = {r}, p = {p}, t = {t}");
    let k = p - r - 1;
    ensure!(
        n + (r - 1) * k >= r * t,
        "need n >= rt - (r-1)(p-r-1) = {}, got {n}",
        r * t - (r - 1) * k
    );
    let (base, partition) = cyclic_base(r, t - k, n - k)?;
    let done = greedy_complete(&base, r + 1)?;
    let h = done.lift_universal(k);
    Ok((
        h,
        CyclicLayout {
            partition,
            universal: n - k..n,
        },
    ))
}

/// Edges with `r - 1` vertices in the first class and one in the last.
pub fn main_type_edges(h: &Hypergraph, part: &CyclicPartition) -> usize {
    h.edges()
        .filter(|e| e.iter().all(|&v| v < part.n))
        .filter(|e| {
            let c = part.counts(e);
            c[0] == part.r - 1 && c[part.r - 1] == 1
        })
        .count()
}

/// Edges with at least `r - 1` vertices in the first class.
pub fn heavy_edges(h: &Hypergraph, part: &CyclicPartition) -> usize {
    h.edges()
        .filter(|e| e.iter().all(|&v| v < part.n))
        .filter(|e| part.counts(e)[0] + 1 >= part.r)
        .count()
}

/// `t C(n - t(r-1), r-1)`.
pub fn main_type_count(part: &CyclicPartition) -> u128 {
    part.t as u128 * binomial_u128(part.first_size() as u64, part.r as u64 - 1)
}

/// `C(t(r-1), 2) C(n, r-2)`, the cap on edges outside the main type.
pub fn residual_cap(part: &CyclicPartition) -> u128 {
    binomial_u128((part.t * (part.r - 1)) as u64, 2) * binomial_u128(part.n as u64, part.r as u64 - 2)
}

/// All `r`-sets meeting `{0, ..., p - r - 1}`.
pub fn bollobas_extremal(n: usize, r: usize, p: usize) -> Result<Hypergraph> {
    ensure!(r >= 2 && p > r && n >= p, "need n >= p > r >= 2, got n = {n}, r = {r}, p = {p}");
    let s = p - r;
    Hypergraph::from_edges(r, n, combinations(n, r).filter(|e| e[0] < s))
}

//! r-uniform hypergraphs with sorted edges kept in lexicographic order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::combinatorics::{combinations, subsets_of};
use crate::error::{ensure, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: BTreeSet<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        ensure!(r >= 1, "uniformity must be at least 1");
        Ok(Self {
            r,
            n,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges<I>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut h = Self::new(r, n)?;
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    /// Every `r`-subset of `0..n`.
    pub fn complete(r: usize, n: usize) -> Result<Self> {
        Self::from_edges(r, n, combinations(n, r))
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorts `edge` and validates it against `r` and `n`.
    pub fn normalize(&self, mut edge: Vec<usize>) -> Result<Vec<usize>> {
        edge.sort_unstable();
        if edge.len() != self.r {
            return Err(Error::InvalidEdge(format!(
                "{edge:?} has {} vertices, expected {}",
                edge.len(),
                self.r
            )));
        }
        if edge.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(format!("{edge:?} repeats a vertex")));
        }
        if let Some(&v) = edge.last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(edge)
    }

    /// Adds an edge given in any order; returns whether it was new.
    pub fn add_edge(&mut self, edge: Vec<usize>) -> Result<bool> {
        let edge = self.normalize(edge)?;
        Ok(self.edges.insert(edge))
    }

    pub fn remove_edge(&mut self, edge: &[usize]) -> bool {
        self.edges.remove(edge)
    }

    /// Membership test for a strictly increasing tuple.
    #[inline]
    pub fn contains_sorted(&self, edge: &[usize]) -> bool {
        self.edges.contains(edge)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.edges.iter()
    }

    /// The `r`-subsets of `0..n` that are not edges, lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        combinations(self.n, self.r).filter(move |e| !self.edges.contains(e))
    }

    /// Number of edges containing the sorted set `s`.
    pub fn degree_of(&self, s: &[usize]) -> usize {
        self.edges.iter().filter(|e| is_sorted_subset(s, e)).count()
    }

    /// Minimum over all `s`-subsets of the number of edges containing them.
    pub fn min_codegree(&self, s: usize) -> Result<usize> {
        ensure!(
            s >= 1 && s < self.r,
            "codegree order s = {s} must lie in 1..={}",
            self.r.saturating_sub(1)
        );
        ensure!(self.n >= s, "need at least s = {s} vertices, have {}", self.n);
        let mut counts = alloc::collections::BTreeMap::<Vec<usize>, usize>::new();
        for e in &self.edges {
            for sub in subsets_of(e, s) {
                *counts.entry(sub).or_default() += 1;
            }
        }
        Ok(combinations(self.n, s)
            .map(|sub| counts.get(&sub).copied().unwrap_or(0))
            .min()
            .unwrap_or(0))
    }

    /// Finds a vertex set of size `p` all of whose `r`-subsets are edges, the
    /// lexicographically first one.
    pub fn find_clique(&self, p: usize) -> Option<Vec<usize>> {
        if p < self.r {
            return None;
        }
        let mut chosen = Vec::with_capacity(p);
        self.extend_clique(&mut chosen, 0, p).then_some(chosen)
    }

    pub fn contains_clique(&self, p: usize) -> bool {
        self.find_clique(p).is_some()
    }

    /// Looks for a `p`-clique of `self + extra` that contains the sorted
    /// `r`-set `extra`; returns the clique in sorted order.
    pub fn find_clique_through(&self, extra: &[usize], p: usize) -> Option<Vec<usize>> {
        debug_assert_eq!(extra.len(), self.r);
        if p < self.r {
            return None;
        }
        let mut chosen = extra.to_vec();
        self.extend_clique_around(&mut chosen, 0, p, extra).then_some(chosen)
    }

    fn extend_clique(&self, chosen: &mut Vec<usize>, from: usize, p: usize) -> bool {
        if chosen.len() == p {
            return true;
        }
        let need = p - chosen.len();
        for v in from..self.n {
            if self.n - v < need {
                break;
            }
            if self.closes_cliques(chosen, v, None) {
                chosen.push(v);
                if self.extend_clique(chosen, v + 1, p) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    fn extend_clique_around(&self, chosen: &mut Vec<usize>, from: usize, p: usize, extra: &[usize]) -> bool {
        if chosen.len() == p {
            return true;
        }
        for v in from..self.n {
            if extra.contains(&v) {
                continue;
            }
            if self.closes_cliques(chosen, v, Some(extra)) {
                let pos = chosen.partition_point(|&x| x < v);
                chosen.insert(pos, v);
                if self.extend_clique_around(chosen, v + 1, p, extra) {
                    return true;
                }
                chosen.remove(pos);
            }
        }
        false
    }

    /// Whether every `r`-set made of `v` and `r - 1` members of the sorted
    /// `chosen` is an edge (or equals `extra`).
    fn closes_cliques(&self, chosen: &[usize], v: usize, extra: Option<&[usize]>) -> bool {
        if chosen.len() + 1 < self.r {
            return true;
        }
        subsets_of(chosen, self.r - 1).all(|mut s| {
            let pos = s.partition_point(|&x| x < v);
            s.insert(pos, v);
            extra.is_some_and(|e| e == s.as_slice()) || self.edges.contains(&s)
        })
    }

    /// Adds `k` new vertices and every `r`-set meeting them.
    pub fn lift_universal(&self, k: usize) -> Hypergraph {
        let n = self.n + k;
        let mut h = self.clone();
        h.n = n;
        for e in combinations(n, self.r) {
            if e.last().is_some_and(|&v| v >= self.n) {
                h.edges.insert(e);
            }
        }
        h
    }
}

/// Whether sorted `small` is a subset of sorted `big`.
pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

impl core::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Hypergraph(r={}, n={}, edges={:?})", self.r, self.n, self.edges)
    }
}

//! Simple undirected graphs on the vertex set `0..n`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{ensure, Error, Result};
use crate::set::VertexSet;

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is kept symmetric and irreflexive by every mutator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: alloc::vec![VertexSet::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        ensure!(n >= 3, "a cycle needs at least 3 vertices, got {n}");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for i in 1..n {
            g.insert_unchecked(i - 1, i);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    /// Adds `{u, v}`; returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidEdge(format!("loop at vertex {u}")));
        }
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `{u, v}`; returns whether the edge was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let present = self.adj[u].remove(v);
        if present {
            self.adj[v].remove(u);
            self.edges -= 1;
        }
        Ok(present)
    }

    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        let fresh = self.adj[u].insert(v);
        if fresh {
            self.adj[v].insert(u);
            self.edges += 1;
        }
        fresh
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Minimum degree; undefined for the graph on zero vertices.
    pub fn min_degree(&self) -> Result<usize> {
        ensure!(self.order() > 0, "minimum degree of the empty vertex set");
        Ok(self.adj.iter().map(VertexSet::len).min().unwrap_or(0))
    }

    /// Number of neighbours of `v` inside `set`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        self.adj[u].intersection(&self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].above(u).to_vec().into_iter().map(move |v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)`, `u < v`, lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v)))
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        set.iter().map(|v| self.degree_in(v, set)).sum::<usize>() / 2
    }

    /// Finds a `p`-clique, returning the lexicographically first one.
    pub fn find_clique(&self, p: usize) -> Option<Vec<usize>> {
        self.find_clique_in(&self.vertices(), p)
    }

    pub fn contains_clique(&self, p: usize) -> bool {
        self.find_clique(p).is_some()
    }

    /// Finds a `k`-clique using only vertices of `candidates`, the
    /// lexicographically first such clique.
    pub fn find_clique_in(&self, candidates: &VertexSet, k: usize) -> Option<Vec<usize>> {
        if k == 0 {
            return Some(Vec::new());
        }
        // a vertex of a k-clique inside `candidates` needs k-1 neighbours there
        let pool: VertexSet = candidates
            .iter()
            .filter(|&v| self.degree_in(v, candidates) + 1 >= k)
            .collect();
        let mut stack = Vec::with_capacity(k);
        self.extend_clique(&pool, k, &mut stack).then_some(stack)
    }

    fn extend_clique(&self, pool: &VertexSet, k: usize, stack: &mut Vec<usize>) -> bool {
        if stack.len() == k {
            return true;
        }
        let need = k - stack.len();
        if pool.len() < need {
            return false;
        }
        for v in pool.iter() {
            let next = pool.intersection(&self.adj[v]).above(v);
            if next.len() + 1 < need {
                continue;
            }
            stack.push(v);
            if self.extend_clique(&next, k, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }

    /// Adds a vertex with neighbourhood `adj(v)`; the new vertex gets index `n`.
    pub fn duplicate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let new = g.order();
        g.adj.push(VertexSet::new());
        for u in self.adj[v].iter() {
            g.insert_unchecked(new, u);
        }
        Ok(g)
    }

    /// Adds a vertex adjacent to every existing vertex.
    pub fn cone(&self) -> Graph {
        let mut g = self.clone();
        let apex = g.order();
        g.adj.push(VertexSet::new());
        for u in 0..apex {
            g.insert_unchecked(apex, u);
        }
        g
    }

    /// Vertices of degree `n - 1`.
    pub fn conical_vertices(&self) -> VertexSet {
        let n = self.order();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// The graph relabelled so that old vertex `perm[i]` becomes vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        ensure!(perm.len() == n, "permutation length {} differs from n = {n}", perm.len());
        let mut inverse = alloc::vec![usize::MAX; n];
        for (i, &old) in perm.iter().enumerate() {
            self.check_vertex(old)?;
            ensure!(inverse[old] == usize::MAX, "vertex {old} repeated in permutation");
            inverse[old] = i;
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (inverse[u], inverse[v])))
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

//! Canonical labelling of graphs on at most 16 vertices.
//!
//! A labelling is scored by its code: the upper triangle read in graph6
//! order `(0,1), (0,2), (1,2), (0,3), ...`, first pair most significant.
//! The canonical form has the largest code over the leaves of an
//! individualisation-refinement tree. Twin vertices are explored once.

use crate::graph::Graph;

pub const MAX_ORDER: usize = 16;

/// Dense graph on at most [`MAX_ORDER`] vertices, one bit row per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: u8,
    rows: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "small graphs hold at most {MAX_ORDER} vertices");
        Self {
            n: n as u8,
            rows: [0; MAX_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Option<Self> {
        if g.order() > MAX_ORDER {
            return None;
        }
        let mut s = Self::new(g.order());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Some(s)
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges() {
            g.insert_unchecked(u, v);
        }
        g
    }

    /// Inverse of [`SmallGraph::code`].
    pub fn from_code(n: usize, code: u128) -> Self {
        let mut s = Self::new(n);
        let mut bit = n * n.saturating_sub(1) / 2;
        for j in 1..n {
            for i in 0..j {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    s.add_edge(i, j);
                }
            }
        }
        s
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn row(&self, v: usize) -> u16 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.order()].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order()).map(|v| self.degree(v)).min()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| (u + 1..self.order()).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    /// Code of the labelling as stored.
    pub fn code(&self) -> u128 {
        let mut ident = [0u8; MAX_ORDER];
        for (i, x) in ident.iter_mut().enumerate() {
            *x = i as u8;
        }
        self.code_under(&ident)
    }

    /// Code of the labelling where vertex `order[i]` becomes `i`.
    fn code_under(&self, order: &[u8; MAX_ORDER]) -> u128 {
        let mut code = 0u128;
        for j in 1..self.order() {
            let rj = order[j] as usize;
            for &oi in &order[..j] {
                code = code << 1 | (self.rows[oi as usize] >> rj & 1) as u128;
            }
        }
        code
    }

    /// Whether the vertices of `cand` contain a `k`-clique.
    pub fn has_clique_in(&self, cand: u16, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < k {
            return false;
        }
        if k == 1 {
            return true;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.has_clique_in(rest & self.rows[v], k - 1) {
                return true;
            }
        }
        false
    }

    pub fn has_clique(&self, k: usize) -> bool {
        self.has_clique_in(self.all(), k)
    }

    #[inline]
    pub fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Relabelled copy where vertex `order[i]` becomes `i`.
    pub fn permuted(&self, order: &[u8]) -> Self {
        let n = self.order();
        let mut pos = [0u8; MAX_ORDER];
        for (i, &v) in order[..n].iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let mut s = Self::new(n);
        for (u, v) in self.edges() {
            s.add_edge(pos[u] as usize, pos[v] as usize);
        }
        s
    }
}

impl core::fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("SmallGraph")
            .field("n", &self.n)
            .field("edges", &alloc::vec::Vec::from_iter(self.edges()))
            .finish()
    }
}

/// Ordered partition of the vertices, one bitmask per cell.
#[derive(Clone, Copy)]
struct Partition {
    cells: [u16; MAX_ORDER],
    len: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cells = [0; MAX_ORDER];
        cells[0] = ((1u32 << n) - 1) as u16;
        Self {
            cells,
            len: usize::from(n > 0),
        }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    /// Splits cells by the packed vector of neighbour counts per cell until
    /// stable. Pieces of a cell are ordered by that vector.
    fn refine(&mut self, g: &SmallGraph) {
        loop {
            let mut sig = [0u64; MAX_ORDER];
            for v in 0..g.order() {
                let row = g.rows[v];
                let mut s = 0u64;
                for c in &self.cells[..self.len] {
                    s = s << 4 | (row & c).count_ones() as u64;
                }
                sig[v] = s;
            }
            let mut next = [0u16; MAX_ORDER];
            let mut len = 0;
            for &cell in &self.cells[..self.len] {
                let mut members = [0u8; MAX_ORDER];
                let mut k = 0;
                let mut rest = cell;
                while rest != 0 {
                    members[k] = rest.trailing_zeros() as u8;
                    rest &= rest - 1;
                    k += 1;
                }
                let members = &mut members[..k];
                members.sort_unstable_by_key(|&v| sig[v as usize]);
                let mut prev = None;
                for &v in members.iter() {
                    let s = sig[v as usize];
                    if prev != Some(s) {
                        len += 1;
                        prev = Some(s);
                    }
                    next[len - 1] |= 1 << v;
                }
            }
            let changed = len != self.len;
            self.cells = next;
            self.len = len;
            if !changed {
                return;
            }
        }
    }

    fn individualize(&self, cell: usize, v: usize) -> Self {
        let mut out = Self {
            cells: [0; MAX_ORDER],
            len: self.len + 1,
        };
        out.cells[..cell].copy_from_slice(&self.cells[..cell]);
        out.cells[cell] = 1 << v;
        out.cells[cell + 1] = self.cells[cell] & !(1 << v);
        out.cells[cell + 2..=self.len].copy_from_slice(&self.cells[cell + 1..self.len]);
        out
    }

    fn order(&self) -> [u8; MAX_ORDER] {
        let mut order = [0u8; MAX_ORDER];
        for (i, c) in self.cells[..self.len].iter().enumerate() {
            order[i] = c.trailing_zeros() as u8;
        }
        order
    }
}

struct Best {
    code: u128,
    order: [u8; MAX_ORDER],
    found: bool,
}

fn explore(g: &SmallGraph, mut part: Partition, best: &mut Best) {
    part.refine(g);
    let n = g.order();
    if part.is_discrete(n) {
        let order = part.order();
        let code = g.code_under(&order);
        if !best.found || code > best.code {
            *best = Best { code, order, found: true };
        }
        return;
    }
    let target = (0..part.len).find(|&i| part.cells[i].count_ones() > 1).expect("not discrete");
    let cell = part.cells[target];
    let mut explored: u16 = 0;
    let mut rest = cell;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut twin = false;
        let mut seen = explored;
        while seen != 0 {
            let u = seen.trailing_zeros() as usize;
            seen &= seen - 1;
            let mask = !((1u16 << u) | (1u16 << v));
            if g.rows[u] & mask == g.rows[v] & mask {
                twin = true;
                break;
            }
        }
        if twin {
            continue;
        }
        explored |= 1 << v;
        explore(g, part.individualize(target, v), best);
    }
}

/// Vertex order of the canonical labelling: `order[i]` becomes vertex `i`.
pub fn canonical_order(g: &SmallGraph) -> [u8; MAX_ORDER] {
    let mut best = Best {
        code: 0,
        order: [0; MAX_ORDER],
        found: false,
    };
    if g.order() == 0 {
        return best.order;
    }
    explore(g, Partition::unit(g.order()), &mut best);
    best.order
}

pub fn canonical_code(g: &SmallGraph) -> u128 {
    g.code_under(&canonical_order(g))
}

pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    g.permuted(&canonical_order(g))
}

pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

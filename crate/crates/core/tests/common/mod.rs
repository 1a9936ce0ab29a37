//! Brute-force reference implementations on plain adjacency matrices.
#![allow(dead_code)]

use kpsat_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect()).collect()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn is_clique(m: &Matrix, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| m[u][v]))
}

pub fn count_cliques(m: &Matrix, p: usize) -> usize {
    subsets(m.len(), p).iter().filter(|s| is_clique(m, s)).count()
}

pub fn has_clique(m: &Matrix, p: usize) -> bool {
    subsets(m.len(), p).iter().any(|s| is_clique(m, s))
}

fn non_edges(m: &Matrix) -> Vec<(usize, usize)> {
    let n = m.len();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !m[u][v]).collect()
}

/// Adds the edge and counts copies of K_p before and after.
pub fn creates_new_copy(m: &Matrix, u: usize, v: usize, p: usize) -> bool {
    let before = count_cliques(m, p);
    let mut m2 = m.clone();
    m2[u][v] = true;
    m2[v][u] = true;
    count_cliques(&m2, p) > before
}

pub fn saturated(m: &Matrix, p: usize) -> bool {
    !has_clique(m, p) && non_edges(m).iter().all(|&(u, v)| creates_new_copy(m, u, v, p))
}

pub fn semi_saturated(m: &Matrix, p: usize) -> bool {
    non_edges(m).iter().all(|&(u, v)| creates_new_copy(m, u, v, p))
}

pub fn min_degree(m: &Matrix) -> usize {
    m.iter().map(|row| row.iter().filter(|&&b| b).count()).min().unwrap_or(0)
}

pub fn independence_number(m: &Matrix) -> usize {
    let n = m.len();
    (0u32..1 << n)
        .filter(|mask| (0..n).all(|u| (u + 1..n).all(|v| mask >> u & mask >> v & 1 == 0 || !m[u][v])))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// A uniformly shuffled maximal K_p-free graph: saturated by construction.
pub fn random_saturated<R: Rng>(rng: &mut R, n: usize, p: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        g.add_edge(u, v).unwrap();
        if g.contains_clique(p) {
            g.remove_edge(u, v).unwrap();
        }
    }
    g
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

mod common;

use common::*;
use kpsat_core::search::{exact_sat, exact_semi_sat, Mode, Outcome, SearchProblem};
use kpsat_core::verify::{is_kp_free, is_saturated, is_semi_saturated};
use kpsat_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SAMPLES: usize = 10_000;

#[test]
fn clique_search_matches_enumeration() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=10 {
        for _ in 0..300 {
            let g = {
                let d = rng.gen_range(0.2..0.9);
                random_graph(&mut rng, n, d)
            };
            let m = matrix(&g);
            for p in 1..=n.min(6) {
                assert_eq!(g.contains_clique(p), has_clique(&m, p), "n={n} p={p} {:?}", g.edges().collect::<Vec<_>>());
                if let Some(c) = g.find_clique(p) {
                    assert!(is_clique(&m, &c) && c.len() == p);
                }
            }
        }
    }
}

#[test]
fn saturation_matches_definition() {
    let mut rng = StdRng::seed_from_u64(7);
    for n in 1..=9 {
        let mut positives = 0;
        for i in 0..SAMPLES {
            let p = rng.gen_range(3..=5);
            let g = if i % 2 == 0 {
                random_saturated(&mut rng, n, p)
            } else {
                let d = rng.gen_range(0.1..0.95);
                random_graph(&mut rng, n, d)
            };
            let m = matrix(&g);
            let sat = saturated(&m, p);
            positives += usize::from(sat);
            assert_eq!(is_saturated(&g, p), sat, "n={n} p={p} {:?}", g.edges().collect::<Vec<_>>());
            assert_eq!(is_semi_saturated(&g, p), semi_saturated(&m, p));
            assert_eq!(is_kp_free(&g, p), !has_clique(&m, p));
        }
        assert!(positives >= SAMPLES / 2 || n < 3, "n={n}: only {positives} saturated samples");
    }
}

/// Optimum over every labelled graph on `n` vertices, `None` if nothing qualifies.
fn naive_optimum(graphs: &[(usize, Matrix, Vec<bool>, Vec<bool>)], p: usize, t: usize, mode: Mode) -> Option<usize> {
    graphs
        .iter()
        .filter(|(_, m, sat, semi)| {
            let d = min_degree(m);
            match mode {
                Mode::AtLeast => sat[p] && d >= t,
                Mode::Exactly => sat[p] && d == t,
                Mode::Semi => semi[p] && d >= t,
            }
        })
        .map(|(e, ..)| *e)
        .min()
}

#[test]
fn exact_search_matches_full_scan() {
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let graphs: Vec<_> = (0u32..1 << pairs.len())
            .map(|mask| {
                let mut m = vec![vec![false; n]; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        m[u][v] = true;
                        m[v][u] = true;
                    }
                }
                let sat: Vec<bool> = (0..=5).map(|p| p >= 3 && p <= n && saturated(&m, p)).collect();
                let semi: Vec<bool> = (0..=5).map(|p| p >= 3 && p <= n && semi_saturated(&m, p)).collect();
                (mask.count_ones() as usize, m, sat, semi)
            })
            .collect();
        for p in 3..=n.min(5) {
            for t in 0..=3 {
                for mode in [Mode::AtLeast, Mode::Exactly, Mode::Semi] {
                    let expected = naive_optimum(&graphs, p, t, mode);
                    for iso in [true, false] {
                        let mut prob = SearchProblem::new(n, p, t, mode);
                        prob.iso_rejection = iso;
                        let res = if mode == Mode::Semi { exact_semi_sat(&prob) } else { exact_sat(&prob) }.unwrap();
                        let case = format!("n={n} p={p} t={t} mode={} iso={iso}", mode.name());
                        match expected {
                            Some(v) => {
                                assert_eq!(res.outcome, Outcome::Optimal(v), "{case}");
                                let w = res.witness.expect("witness");
                                let m = matrix(&w);
                                assert_eq!(w.edge_count(), v, "{case}");
                                let d = min_degree(&m);
                                let ok = match mode {
                                    Mode::AtLeast => saturated(&m, p) && d >= t,
                                    Mode::Exactly => saturated(&m, p) && d == t,
                                    Mode::Semi => semi_saturated(&m, p) && d >= t,
                                };
                                assert!(ok, "{case}: bad witness {:?}", w.edges().collect::<Vec<_>>());
                            }
                            None => assert_eq!(res.outcome, Outcome::Infeasible, "{case}"),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn independence_times_degree_is_at_most_size() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in 2..=9 {
        for _ in 0..200 {
            let d = rng.gen_range(0.1..0.9);
            let g: Graph = random_graph(&mut rng, n, d);
            let m = matrix(&g);
            assert!(independence_number(&m) * min_degree(&m) <= g.edge_count());
        }
    }
}

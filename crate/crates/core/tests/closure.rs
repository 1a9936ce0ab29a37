mod common;

use kpsat_core::antichain::lym_check;
use kpsat_core::closure::{closure, preset, replay, run, ClosureState, Preset};
use kpsat_core::constructions::*;
use kpsat_core::{Graph, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn suite() -> Vec<(&'static str, Graph, usize, usize)> {
    vec![
        ("K_3,27", complete_bipartite(3, 30).unwrap(), 3, 3),
        ("petersen", petersen(), 3, 3),
        ("hub_family(4,20)", hub_family(4, 20).unwrap().0, 3, 4),
        ("clique_join(12,4,3)", clique_join_bipartite(12, 4, 3).unwrap(), 4, 3),
        ("duffus_hanson(9)", duffus_hanson_t2(9).unwrap(), 3, 2),
    ]
}

#[test]
fn certificates_for_the_suite() {
    for (name, g, p, t) in suite() {
        for pre in [Preset::Single, Preset::FirstTPlusOne] {
            let cert = run(&g, p, t, &preset(pre, t)).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(cert.verified);
            assert!(cert.iterations <= 2 * t * t, "{name}");
            assert_eq!(cert.bound, t * (g.order() - cert.r_star.len()));
            assert!(cert.bound <= g.edge_count(), "{name}");
            replay(&g, &cert).unwrap_or_else(|e| panic!("{name}: replay: {e}"));
        }
    }
}

#[test]
fn frozen_outcomes() {
    let cert = run(&petersen(), 3, 3, &set(&[0])).unwrap();
    assert_eq!(cert.r_star, set(&[0, 2, 3, 4, 5, 6, 7]));
    assert_eq!((cert.iterations, cert.bound), (4, 9));

    let (g, _) = hub_family(4, 20).unwrap();
    let cert = run(&g, 3, 4, &set(&[0])).unwrap();
    assert_eq!(cert.r_star, set(&[0, 1, 2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15]));
    assert_eq!((cert.iterations, cert.bound, cert.edges), (7, 24, 52));

    let g = complete_bipartite(3, 30).unwrap();
    let cert = run(&g, 3, 3, &set(&[0, 1, 2])).unwrap();
    assert_eq!((cert.iterations, cert.bound), (0, 81));
    assert_eq!(cert.r_star, set(&[0, 1, 2]));
}

#[test]
fn every_step_keeps_its_invariants() {
    for (name, g, _, t) in suite() {
        let mut state = ClosureState::new(&g, t, set(&[0])).unwrap();
        let mut steps = 0;
        while !state.bad_vertices().is_empty() {
            let r = state.r().clone();
            let (traces, reps) = state.trace_antichain().unwrap();
            assert_eq!(traces.len(), reps.len());
            assert!(traces.iter().all(|c| c.len() < t), "{name}");
            let order = r.to_vec();
            let rel: Vec<VertexSet> = traces
                .iter()
                .map(|c| c.iter().map(|v| order.binary_search(&v).unwrap()).collect())
                .collect();
            let lym = lym_check(&rel, r.len());
            assert!(lym.is_antichain && lym.lym_holds() && lym.within_power_bound, "{name}");
            let (next, rec) = state.refine().unwrap();
            assert!(r.is_subset(next.r()));
            assert!(next.r().len() <= r.len() + t * r.len().pow(t as u32 - 1), "{name}");
            for y in next.bad_vertices().iter() {
                assert!(next.control_scaled(y) > state.control_scaled(y), "{name} step {steps} vertex {y}");
            }
            assert_eq!(rec.r_after, *next.r());
            state = next;
            steps += 1;
        }
        assert!(steps <= 2 * t * t);
    }
}

#[test]
fn hand_traced_states() {
    // K_{1,5}, t = 2: closure of the centre stops, every leaf is bad with trace {centre}
    let star = complete_bipartite(1, 6).unwrap();
    let s = ClosureState::new(&star, 2, set(&[0])).unwrap();
    assert_eq!(*s.rbar(), set(&[0]));
    assert_eq!(s.bad_vertices(), set(&[1, 2, 3, 4, 5]));
    assert!(s.bad_vertices().iter().all(|v| s.weight_scaled(v) == 4));
    let (traces, reps) = s.trace_antichain().unwrap();
    assert_eq!((traces, reps), (vec![set(&[0])], vec![1]));

    // K_{3,7} with t = 4 and R the 3-side: nothing joins, 7-side weight is 3
    let g = complete_bipartite(3, 10).unwrap();
    let s = ClosureState::new(&g, 4, set(&[0, 1, 2])).unwrap();
    assert_eq!(*s.rbar(), set(&[0, 1, 2]));
    assert!((3..10).all(|v| s.weight_scaled(v) == 8 * 3));
    assert_eq!(closure(&g, 3, &set(&[0, 1, 2])), g.vertices());

    // K_{2,4} with t = 3 and R the 2-side: l(y) = d_R(y) = 2 on the 4-side
    let g = complete_bipartite(2, 6).unwrap();
    let s = ClosureState::new(&g, 3, set(&[0, 1])).unwrap();
    assert!((2..6).all(|v| s.control_scaled(v) == 6 * 2));
    let c5 = Graph::cycle(5).unwrap();
    assert_eq!(closure(&c5, 2, &set(&[3])), set(&[3]));
}

#[test]
fn monotone_in_the_initial_set() {
    let mut rng = StdRng::seed_from_u64(21);
    for _ in 0..400 {
        let n = rng.gen_range(4..=14);
        let p = rng.gen_range(3..=4);
        let g = common::random_saturated(&mut rng, n, p);
        let t = rng.gen_range(1..=3);
        let small: VertexSet = (0..n).filter(|_| rng.gen_bool(0.25)).collect();
        let mut big = small.clone();
        big.union_with(&(0..n).filter(|_| rng.gen_bool(0.25)).collect());
        let a = ClosureState::new(&g, t, small.clone()).unwrap();
        let b = ClosureState::new(&g, t, big.clone()).unwrap();
        assert!(a.rbar().is_subset(b.rbar()));
        assert_eq!(closure(&g, t, a.rbar()), *a.rbar());
        for v in 0..n {
            assert!(a.weight_scaled(v) <= b.weight_scaled(v));
            assert!(a.control_scaled(v) <= b.control_scaled(v));
            assert!(a.control_scaled(v) <= a.weight_scaled(v));
            assert!(b.control_scaled(v) <= b.weight_scaled(v));
        }
    }
}

#[test]
fn random_saturated_inputs_certify() {
    let mut rng = StdRng::seed_from_u64(4);
    let mut done = 0;
    while done < 300 {
        let n = rng.gen_range(5..=16);
        let p = rng.gen_range(3..=5);
        let g = common::random_saturated(&mut rng, n, p);
        let delta = g.min_degree().unwrap();
        if delta == 0 {
            continue;
        }
        let t = rng.gen_range(1..=delta.min(4));
        let cert = run(&g, p, t, &set(&[0])).unwrap();
        assert!(cert.bound <= g.edge_count());
        replay(&g, &cert).unwrap();
        done += 1;
    }
}

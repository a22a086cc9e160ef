use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdkernel::kernel::{check_state, reduce, Outcome};
use tdkernel::lift::{lift_detailed, SolutionKind};
use tdkernel::oracle::{opt_ctds, optimal_ctds};
use tdkernel::{verify_ctds, ExactParams, Graph, Rational, Scalar};

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_dedup(n, &edges).unwrap()
}

fn custom(eta: usize, k: usize) -> ExactParams {
    ExactParams::custom(eta, Rational::parse_scalar("1").unwrap(), k, 2, 2, 2).unwrap()
}

#[test]
fn random_reductions_are_consistent_and_lift_soundly() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let n = rng.gen_range(4..=11);
        let g = random_connected(&mut rng, n, 0.3);
        let eta = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=4);
        let params = custom(eta, k);
        let state = reduce(&g, &params).unwrap();
        assert!(check_state(&state).is_empty(), "{:?}", check_state(&state));
        if state.outcome == Outcome::NoInstance {
            assert_eq!(opt_ctds(&g, k, eta, false).unwrap().opt_value, k + 1);
            continue;
        }
        for s in optimal_ctds(&state.reduced, state.k_reduced, eta).unwrap() {
            let report = lift_detailed(&state, &s);
            let sol = report.solution;
            if sol.kind == SolutionKind::Feasible {
                assert!(verify_ctds(&g, &sol.vertices, eta).unwrap());
                assert!(sol.value <= k);
            } else {
                assert_eq!(sol.value, k + 1);
            }
        }
    }
}

#[test]
fn reduction_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let g = random_connected(&mut rng, 12, 0.25);
    let params = custom(1, 3);
    let a = serde_json::to_string(&reduce(&g, &params).unwrap()).unwrap();
    let b = serde_json::to_string(&reduce(&g, &params).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn state_survives_json() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
    let state = reduce(&g, &custom(1, 3)).unwrap();
    let text = serde_json::to_string(&state).unwrap();
    let back: tdkernel::ExactKernelState = serde_json::from_str(&text).unwrap();
    assert_eq!(back, state);
}

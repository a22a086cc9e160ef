//! Randomized agreement runs between the fast algorithms and the
//! brute-force oracles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tdkernel::decompose::{decompose, verify_partition, Decomposition};
use tdkernel::flow::min_vertex_cut;
use tdkernel::oracle::{brute_min_separator, brute_steiner, treedepth_by_definition};
use tdkernel::steiner::steiner_tree;
use tdkernel::treedepth::check_diameter_bound;
use tdkernel::{treedepth, ExactParams, Graph, Rational, Scalar, VertexSet};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub agree: usize,
    pub total: usize,
    pub first_mismatch: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.agree += 1;
        } else if self.first_mismatch.is_none() {
            self.first_mismatch = Some(describe());
        }
    }

    pub fn all_agree(&self) -> bool {
        self.agree == self.total
    }
}

impl std::fmt::Display for Tally {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.agree, self.total)?;
        if let Some(m) = &self.first_mismatch {
            write!(f, " (first mismatch: {m})")?;
        }
        Ok(())
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// A random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (order[rng.gen_range(0..i)], order[i])).collect();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_dedup(n, &edges).expect("simple")
}

/// Every graph on `n` labelled vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).expect("simple")
    })
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.n(), edges.join(" "))
}

/// Exhaustive comparison on every connected labelled graph up to `max_n`.
pub fn treedepth_exhaustive(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 1..=max_n {
        for g in all_graphs(n).filter(Graph::is_connected) {
            let (fast, slow) = (treedepth(&g), treedepth_by_definition(&g).expect("small"));
            t.record(fast == slow, || format!("{} engine {fast} vs {slow}", describe(&g)));
        }
    }
    t
}

pub fn treedepth_random(seed: u64, cases: usize, max_n: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..cases {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.05..0.6);
        let g = random_connected(&mut rng, n, p);
        let (fast, slow) = (treedepth(&g), treedepth_by_definition(&g).expect("small"));
        t.record(fast == slow, || format!("{} engine {fast} vs {slow}", describe(&g)));
    }
    t
}

/// Steiner cost against the enumeration oracle; disconnected terminal sets
/// must be reported by both.
pub fn steiner_agreement(seed: u64, cases: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    for _ in 0..cases {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.15..0.6);
        let g = random_graph(&mut rng, n, p);
        let size = rng.gen_range(1..=4.min(n));
        let terms: VertexSet = rand::seq::index::sample(&mut rng, n, size).into_iter().collect();
        let ok = match (steiner_tree(&g, &terms), brute_steiner(&g, &terms)) {
            (Ok(Some(tree)), Ok(brute)) => tree.validate(&g).is_ok() && tree.cost() == brute.edges.len(),
            (Ok(None), Err(tdkernel::Error::Disconnected)) => true,
            _ => false,
        };
        t.record(ok, || format!("{} terminals {{{terms}}}", describe(&g)));
    }
    t
}

/// Min vertex cut size against the exhaustive separator on non-adjacent
/// pairs; the cut must also separate.
pub fn min_cut_agreement(seed: u64, cases: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    while t.total < cases {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.15..0.7);
        let g = random_graph(&mut rng, n, p);
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if x == y || g.has_edge(x, y) {
            continue;
        }
        let cut = min_vertex_cut(&g, x, y).expect("valid pair");
        let brute = brute_min_separator(&g, x, y).expect("valid pair");
        let separates = g
            .components_of(&g.all().difference(&cut))
            .iter()
            .all(|c| !(c.contains(x) && c.contains(y)));
        t.record(separates && cut.len() == brute.len(), || {
            format!("{} pair {x},{y}: flow {} vs {}", describe(&g), cut.len(), brute.len())
        });
    }
    t
}

/// Random connected graphs kept only when `td <= eta`, each checked for
/// `diameter <= 2^eta`.
pub fn diameter_agreement(seed: u64, cases: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    while t.total < cases {
        let n = rng.gen_range(1..=16);
        let eta = rng.gen_range(1..=4);
        let p = rng.gen_range(0.0..0.15);
        let g = random_connected(&mut rng, n, p);
        if treedepth(&g) > eta {
            continue;
        }
        let ok = check_diameter_bound(&g, eta).unwrap_or(false);
        t.record(ok, || format!("{} eta {eta}", describe(&g)));
    }
    t
}

/// Partition properties 1–3 on random connected instances.
pub fn partition_agreement(seed: u64, cases: usize, max_n: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally::default();
    let one = Rational::parse_scalar("1").expect("literal");
    for _ in 0..cases {
        let n = rng.gen_range(2..=max_n);
        let eta = rng.gen_range(1..=2);
        let p = rng.gen_range(0.0..(3.0 / n as f64).min(0.9));
        let g = random_connected(&mut rng, n, p);
        let params = ExactParams::custom(eta, one.clone(), n, 2, 2, 2).expect("valid");
        let ok = match decompose(&g, &params) {
            Ok(Decomposition::Partition(p)) => verify_partition(&g, &params, &p).all_pass(),
            _ => false,
        };
        t.record(ok, || format!("{} eta {eta}", describe(&g)));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_agree() {
        assert!(treedepth_exhaustive(4).all_agree());
        assert_eq!(treedepth_exhaustive(3).total, 1 + 1 + 4);
        assert!(steiner_agreement(1, 20).all_agree());
        assert!(min_cut_agreement(1, 20).all_agree());
        assert!(diameter_agreement(1, 20).all_agree());
        assert!(partition_agreement(1, 10, 15).all_agree());
    }

    #[test]
    fn tally_display() {
        let mut t = Tally::default();
        t.record(true, String::new);
        t.record(false, || "x".into());
        assert_eq!(t.to_string(), "1/2 (first mismatch: x)");
    }
}

//! Seeded instance families.
//!
//! Vertex ids are laid out so the obstruction loop (which shrinks by
//! deleting low ids first) keeps the intended hub cliques: small pieces get
//! the low ids, hubs the high ones.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use tdkernel::{Error, Graph, Result, Vertex};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    RandomGnp { n: usize, density: f64 },
    /// Spider with `branches` paths of `depth` vertices plus a `K_{eta+1}`
    /// head on the centre. Legs of treedepth `eta - 1` make one big Rule 4
    /// class.
    Broom { branches: usize, depth: usize },
    /// `K_{eta+1}` with `branches` paths of `depth` vertices hanging off its
    /// first vertex; the legs form a single Rule 3 class.
    SubdividedStar { branches: usize, depth: usize },
    Grid { rows: usize, cols: usize },
    /// `classes` hub cliques `K_{eta+1}`, each with `per_class` pendant
    /// vertices, plus `bridges` vertices seeing every hub. With more than
    /// `k + eta` bridges and enough hubs, the bridges trigger Rule 2.
    ComponentSoup { classes: usize, per_class: usize, bridges: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::RandomGnp { .. } => "random-gnp",
            Family::Broom { .. } => "broom",
            Family::SubdividedStar { .. } => "subdivided-star",
            Family::Grid { .. } => "grid",
            Family::ComponentSoup { .. } => "component-soup",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Params(msg.into())
}

/// Builds the instance; `eta` sizes the hub cliques.
pub fn generate(spec: &GeneratorSpec, eta: usize) -> Result<Graph> {
    if eta == 0 {
        return Err(invalid("eta must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::RandomGnp { n, density } => {
            if n == 0 || !(0.0..=1.0).contains(&density) {
                return Err(invalid("gnp needs n >= 1 and density in [0, 1]"));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        Family::Broom { branches, depth } => {
            if branches == 0 || depth == 0 {
                return Err(invalid("broom needs branches >= 1 and depth >= 1"));
            }
            let centre = branches * depth;
            let mut edges = legs(0, branches, depth, centre);
            let head = centre + 1;
            edges.push((centre, head));
            edges.extend(clique(head, eta + 1));
            Graph::from_edges(head + eta + 1, &edges)
        }
        Family::SubdividedStar { branches, depth } => {
            if branches == 0 || depth == 0 {
                return Err(invalid("subdivided star needs branches >= 1 and depth >= 1"));
            }
            let head = branches * depth;
            let mut edges = legs(0, branches, depth, head);
            edges.extend(clique(head, eta + 1));
            Graph::from_edges(head + eta + 1, &edges)
        }
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(invalid("grid needs positive dimensions"));
            }
            Ok(tdkernel::graph::named::grid(rows, cols))
        }
        Family::ComponentSoup { classes, per_class, bridges } => {
            if classes == 0 || per_class == 0 {
                return Err(invalid("component soup needs classes >= 1 and per_class >= 1"));
            }
            let hub = eta + 1;
            let pendants = classes * per_class;
            let first_hub = pendants + bridges;
            let n = first_hub + classes * hub;
            let hubs = |c: usize| first_hub + c * hub..first_hub + (c + 1) * hub;
            let mut edges = Vec::new();
            for c in 0..classes {
                edges.extend(clique(hubs(c).start, hub));
                if c + 1 < classes {
                    edges.push((hubs(c).end - 1, hubs(c + 1).start));
                }
                for p in c * per_class..(c + 1) * per_class {
                    // Most pendants see the whole hub; a few see a random
                    // non-empty part, splitting the class.
                    let all = rng.gen_bool(0.8);
                    let mut seen: Vec<Vertex> = hubs(c).filter(|_| all || rng.gen_bool(0.5)).collect();
                    if seen.is_empty() {
                        seen.push(hubs(c).start + rng.gen_range(0..hub));
                    }
                    edges.extend(seen.into_iter().map(|h| (p, h)));
                }
            }
            for b in pendants..first_hub {
                edges.extend((first_hub..n).map(|h| (b, h)));
            }
            Graph::from_edges(n, &edges)
        }
    }
}

/// `branches` paths of `depth` vertices starting at `start`, each attached
/// by its first vertex to `anchor`.
fn legs(start: Vertex, branches: usize, depth: usize, anchor: Vertex) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for b in 0..branches {
        let base = start + b * depth;
        edges.push((base, anchor));
        edges.extend((base..base + depth - 1).map(|v| (v, v + 1)));
    }
    edges
}

fn clique(start: Vertex, size: usize) -> Vec<(Vertex, Vertex)> {
    (start..start + size)
        .flat_map(|a| (a + 1..start + size).map(move |b| (a, b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, seed: u64) -> GeneratorSpec {
        GeneratorSpec { family, seed }
    }

    #[test]
    fn gnp_is_reproducible() {
        let s = spec(Family::RandomGnp { n: 12, density: 0.3 }, 5);
        assert_eq!(generate(&s, 1).unwrap(), generate(&s, 1).unwrap());
        let other = spec(Family::RandomGnp { n: 12, density: 0.3 }, 6);
        assert_ne!(generate(&s, 1).unwrap(), generate(&other, 1).unwrap());
    }

    #[test]
    fn soup_shape() {
        let g = generate(&spec(Family::ComponentSoup { classes: 2, per_class: 5, bridges: 0 }, 1), 1).unwrap();
        assert_eq!(g.n(), 14);
        assert!(g.is_connected());
        let pendants = tdkernel::VertexSet::from((0..10).collect::<Vec<_>>());
        assert_eq!(g.components_of(&pendants).len(), 10);
    }

    #[test]
    fn broom_shape() {
        let g = generate(&spec(Family::Broom { branches: 6, depth: 2 }, 0), 3).unwrap();
        assert_eq!(g.n(), 17);
        assert_eq!(g.m(), 6 * 2 + 1 + 6);
        assert_eq!(tdkernel::treedepth(&g), 4);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(generate(&spec(Family::RandomGnp { n: 0, density: 0.5 }, 0), 1).is_err());
        assert!(generate(&spec(Family::RandomGnp { n: 3, density: 1.5 }, 0), 1).is_err());
        assert!(generate(&spec(Family::Grid { rows: 0, cols: 2 }, 0), 1).is_err());
        assert!(generate(&spec(Family::Broom { branches: 2, depth: 1 }, 0), 0).is_err());
    }

    #[test]
    fn spec_json_is_flat() {
        let s = spec(Family::Grid { rows: 2, cols: 3 }, 4);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"family":"grid","rows":2,"cols":3,"seed":4}"#);
        let back: GeneratorSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}

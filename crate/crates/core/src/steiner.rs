//! Unit-weight Steiner trees (Dreyfus–Wagner) and connector harvesting.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

const INF: usize = usize::MAX / 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinerTree {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
    pub terminals: VertexSet,
}

impl SteinerTree {
    /// Number of edges, which is one less than the number of vertices.
    pub fn cost(&self) -> usize {
        self.edges.len()
    }

    /// Tree shape, terminal coverage and terminal leaves.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if !self.terminals.is_subset(&self.vertices) {
            return Err("terminal missing from tree".into());
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err("edge count is not |V| - 1".into());
        }
        let mut degree = vec![0usize; g.n()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || !self.vertices.contains(u) || !self.vertices.contains(v) {
                return Err(format!("edge {u}-{v} not usable"));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        if !g.induces_connected(&self.vertices) || !edges_connect(&self.vertices, &self.edges) {
            return Err("tree is disconnected".into());
        }
        if self.vertices.len() > 1 {
            if let Some(v) = self.vertices.iter().find(|&v| degree[v] == 1 && !self.terminals.contains(v)) {
                return Err(format!("leaf {v} is not a terminal"));
            }
        }
        Ok(())
    }
}

fn edges_connect(vertices: &VertexSet, edges: &[(Vertex, Vertex)]) -> bool {
    let Some(root) = vertices.min() else { return true };
    let mut seen = VertexSet::singleton(root);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == u { b } else if b == u { a } else { continue };
            if seen.insert(other) {
                stack.push(other);
            }
        }
    }
    seen.len() == vertices.len()
}

/// All-pairs BFS data for one graph, shared by many Steiner queries.
pub struct SteinerSolver<'g> {
    g: &'g Graph,
    dist: Vec<Vec<usize>>,
    /// `toward[b][a]`: next vertex after `a` on the canonical shortest
    /// path from `a` to `b`.
    toward: Vec<Vec<Option<Vertex>>>,
}

impl<'g> SteinerSolver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut dist = vec![vec![INF; n]; n];
        let mut toward = vec![vec![None; n]; n];
        for b in g.vertices() {
            dist[b][b] = 0;
            let mut queue = VecDeque::from([b]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[b][w] == INF {
                        dist[b][w] = dist[b][u] + 1;
                        toward[b][w] = Some(u);
                        queue.push_back(w);
                    }
                }
            }
        }
        Self { g, dist, toward }
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> Option<usize> {
        let d = self.dist[b][a];
        (d < INF).then_some(d)
    }

    fn path_edges(&self, a: Vertex, b: Vertex, out: &mut Vec<(Vertex, Vertex)>) {
        let mut cur = a;
        while cur != b {
            let next = self.toward[b][cur].expect("reachable");
            out.push((cur.min(next), cur.max(next)));
            cur = next;
        }
    }

    /// Minimum Steiner tree for `terminals`, `None` when they are not all in
    /// one component.
    pub fn tree(&self, terminals: &VertexSet) -> Result<Option<SteinerTree>> {
        self.g.check_set(terminals)?;
        let terms: Vec<Vertex> = terminals.iter().collect();
        let Some(&first) = terms.first() else {
            return Err(Error::Precondition("no terminals".into()));
        };
        if terms.iter().any(|&t| self.dist[first][t] == INF) {
            return Ok(None);
        }
        if terms.len() == 1 {
            return Ok(Some(SteinerTree {
                vertices: terminals.clone(),
                edges: Vec::new(),
                terminals: terminals.clone(),
            }));
        }
        // Terminal 0 is the root; the table covers subsets of the others.
        // cost[mask][v]: fewest edges in a tree spanning `mask` and `v`.
        let rest = &terms[1..];
        let r = rest.len();
        let n = self.g.n();
        let full = (1usize << r) - 1;
        let mut cost = vec![vec![INF; n]; 1 << r];
        let mut split_at = vec![vec![0usize; n]; 1 << r];
        let mut relay = vec![vec![0 as Vertex; n]; 1 << r];
        for (i, &t) in rest.iter().enumerate() {
            for v in self.g.vertices() {
                cost[1 << i][v] = self.dist[t][v];
            }
        }
        for mask in 1..=full {
            if mask.count_ones() < 2 {
                continue;
            }
            let low = mask & mask.wrapping_neg();
            let mut split = vec![INF; n];
            for v in self.g.vertices() {
                // Submasks containing the lowest bit enumerate each split once;
                // strict improvement keeps the first (smallest) submask.
                let mut sub = low;
                while sub < mask {
                    if sub & low != 0 && sub & !mask == 0 {
                        let c = cost[sub][v].saturating_add(cost[mask ^ sub][v]);
                        if c < split[v] {
                            split[v] = c;
                            split_at[mask][v] = sub;
                        }
                    }
                    sub += 1;
                }
            }
            for v in self.g.vertices() {
                let mut best = INF;
                for u in self.g.vertices() {
                    let c = split[u].saturating_add(self.dist[u][v]);
                    if c < best {
                        best = c;
                        relay[mask][v] = u;
                    }
                }
                cost[mask][v] = best;
            }
        }
        let mut edges = Vec::new();
        let ctx = Rebuild { solver: self, rest, split_at: &split_at, relay: &relay };
        ctx.collect(full, first, &mut edges);
        Ok(Some(self.finish(terminals, edges)))
    }

    /// Union of reconstructed edges → spanning tree → prune non-terminal leaves.
    fn finish(&self, terminals: &VertexSet, mut raw: Vec<(Vertex, Vertex)>) -> SteinerTree {
        raw.sort_unstable();
        raw.dedup();
        let vertices: VertexSet = raw.iter().flat_map(|&(u, v)| [u, v]).collect::<VertexSet>().union(terminals);
        let root = terminals.min().expect("non-empty");
        let mut seen = VertexSet::singleton(root);
        let mut queue = VecDeque::from([root]);
        let mut edges = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &(a, b) in &raw {
                let w = if a == u { b } else if b == u { a } else { continue };
                if seen.insert(w) {
                    edges.push((a, b));
                    queue.push_back(w);
                }
            }
        }
        debug_assert_eq!(seen, vertices);
        loop {
            let mut degree = std::collections::BTreeMap::new();
            for &(a, b) in &edges {
                *degree.entry(a).or_insert(0) += 1;
                *degree.entry(b).or_insert(0) += 1;
            }
            let before = edges.len();
            edges.retain(|&(a, b)| {
                !(degree[&a] == 1 && !terminals.contains(a) || degree[&b] == 1 && !terminals.contains(b))
            });
            if edges.len() == before {
                break;
            }
        }
        edges.sort_unstable();
        let vertices = edges.iter().flat_map(|&(u, v)| [u, v]).collect::<VertexSet>().union(terminals);
        SteinerTree { vertices, edges, terminals: terminals.clone() }
    }
}

struct Rebuild<'a, 'g> {
    solver: &'a SteinerSolver<'g>,
    rest: &'a [Vertex],
    split_at: &'a [Vec<usize>],
    relay: &'a [Vec<Vertex>],
}

impl Rebuild<'_, '_> {
    fn collect(&self, mask: usize, v: Vertex, out: &mut Vec<(Vertex, Vertex)>) {
        if mask.count_ones() == 1 {
            let t = self.rest[mask.trailing_zeros() as usize];
            self.solver.path_edges(v, t, out);
            return;
        }
        let u = self.relay[mask][v];
        self.solver.path_edges(v, u, out);
        let sub = self.split_at[mask][u];
        self.collect(sub, u, out);
        self.collect(mask ^ sub, u, out);
    }
}

pub fn steiner_tree(g: &Graph, terminals: &VertexSet) -> Result<Option<SteinerTree>> {
    SteinerSolver::new(g).tree(terminals)
}

/// Union of the vertex sets of minimum Steiner trees for every
/// `L ⊆ candidates` with `1 ≤ |L| ≤ t`, keeping only trees with at most
/// `budget` vertices.
pub fn harvest_connectors(g: &Graph, candidates: &VertexSet, t: usize, budget: usize) -> Result<VertexSet> {
    g.check_set(candidates)?;
    let solver = SteinerSolver::new(g);
    let mut out = VertexSet::new();
    for size in 1..=t.min(candidates.len()) {
        for combo in candidates.iter().combinations(size) {
            // Cheap reject: a tree spanning L has more vertices than the
            // largest pairwise distance in L.
            let spread = combo
                .iter()
                .tuple_combinations()
                .map(|(&a, &b)| solver.distance(a, b).unwrap_or(INF))
                .max()
                .unwrap_or(0);
            if spread >= budget {
                continue;
            }
            let terminals = VertexSet::from(combo);
            if let Some(tree) = solver.tree(&terminals)? {
                if tree.vertices.len() <= budget {
                    out = out.union(&tree.vertices);
                }
            }
        }
    }
    Ok(out)
}

//! Minimum vertex cuts by vertex splitting and unit-capacity max flow.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self { arcs: (0..nodes).map(|_| Vec::new()).collect() }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc { to: from, cap: 0, rev: rev_to });
    }

    /// Breadth-first search in the residual network; returns the arc used to
    /// reach each node.
    fn bfs(&self, source: usize) -> Vec<Option<(usize, usize)>> {
        let mut via = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for (i, arc) in self.arcs[u].iter().enumerate() {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    via[arc.to] = Some((u, i));
                    queue.push_back(arc.to);
                }
            }
        }
        via[source] = Some((source, usize::MAX));
        via
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let via = self.bfs(source);
            if via[sink].is_none() {
                return flow;
            }
            let mut node = sink;
            while node != source {
                let (prev, i) = via[node].expect("node on augmenting path");
                self.arcs[prev][i].cap -= 1;
                let rev = self.arcs[prev][i].rev;
                self.arcs[node][rev].cap += 1;
                node = prev;
            }
            flow += 1;
        }
    }
}

fn node_in(v: Vertex) -> usize {
    2 * v
}

fn node_out(v: Vertex) -> usize {
    2 * v + 1
}

/// Minimum set of vertices other than `x` and `y` meeting every `x`–`y`
/// path. `x` and `y` must be distinct and non-adjacent.
pub fn min_vertex_cut(g: &Graph, x: Vertex, y: Vertex) -> Result<VertexSet> {
    min_vertex_cut_in(g, x, y, &vec![true; g.n()])
}

/// Same as [`min_vertex_cut`] in the subgraph induced by `allowed`
/// (which must contain `x` and `y`).
pub fn min_vertex_cut_in(g: &Graph, x: Vertex, y: Vertex, allowed: &[bool]) -> Result<VertexSet> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameEndpoint(x));
    }
    if g.has_edge(x, y) {
        return Err(Error::AdjacentPair(x, y));
    }
    if !allowed[x] || !allowed[y] {
        return Err(Error::Precondition("cut endpoints must be inside the allowed set".into()));
    }
    let n = g.n();
    let big = n + 1;
    let mut net = Network::new(2 * n);
    for v in g.vertices().filter(|&v| allowed[v]) {
        let cap = if v == x || v == y { big } else { 1 };
        net.add(node_in(v), node_out(v), cap);
        for &w in g.neighbors(v) {
            if allowed[w] {
                net.add(node_out(v), node_in(w), big);
            }
        }
    }
    net.max_flow(node_out(x), node_in(y));
    let reach = net.bfs(node_out(x));
    Ok(g.vertices()
        .filter(|&v| {
            allowed[v]
                && v != x
                && v != y
                && reach[node_in(v)].is_some()
                && reach[node_out(v)].is_none()
        })
        .collect())
}

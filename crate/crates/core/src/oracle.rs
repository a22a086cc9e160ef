//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the production algorithms: treedepth is
//! the plain recursive definition over bitmasks, solutions and Steiner
//! trees come from subset enumeration in (size, lexicographic) order.
//! Size guards fail loudly instead of truncating.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest graph accepted by the solution enumerators.
pub const ENUMERATION_LIMIT: usize = 24;
/// Largest graph accepted by the Steiner and separator brute force.
pub const STEINER_LIMIT: usize = 12;
pub const SEPARATOR_LIMIT: usize = 16;

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::SizeGuard { n: g.n(), limit })
    } else {
        Ok(())
    }
}

fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | (1u64 << v))
}

fn set_of(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// A graph as per-vertex neighbour masks, with a treedepth memo.
pub struct MaskGraph {
    adj: Vec<u64>,
    memo: HashMap<u64, usize>,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Result<Self> {
        guard(g, 64)?;
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        Ok(Self { adj, memo: HashMap::new() })
    }

    pub fn full(&self) -> u64 {
        if self.adj.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.adj.len()) - 1
        }
    }

    /// The component of `mask` containing its lowest vertex.
    fn first_component(&self, mask: u64) -> u64 {
        self.component_containing(mask, mask & mask.wrapping_neg())
    }

    fn component_containing(&self, mask: u64, start: u64) -> u64 {
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        comp
    }

    pub fn is_connected(&self, mask: u64) -> bool {
        mask != 0 && self.first_component(mask) == mask
    }

    /// Treedepth of the subgraph induced by `mask`, straight from the
    /// recursive definition: 0 for nothing, 1 for a single vertex, the
    /// maximum over components when disconnected, and
    /// `1 + min_v td(G - v)` when connected.
    pub fn td(&mut self, mask: u64) -> usize {
        match mask.count_ones() {
            0 => return 0,
            1 => return 1,
            _ => {}
        }
        if let Some(&t) = self.memo.get(&mask) {
            return t;
        }
        let comp = self.first_component(mask);
        let value = if comp != mask {
            self.td(comp).max(self.td(mask & !comp))
        } else {
            let mut best = usize::MAX;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                best = best.min(1 + self.td(mask & !bit));
            }
            best
        };
        self.memo.insert(mask, value);
        value
    }
}

pub fn treedepth_by_definition(g: &Graph) -> Result<usize> {
    guard(g, ENUMERATION_LIMIT)?;
    let mut mg = MaskGraph::new(g)?;
    let full = mg.full();
    Ok(mg.td(full))
}

/// Exact optimum of the capped objective together with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// `min(|S|, k + 1)` minimised over connected deletion sets.
    pub opt_value: usize,
    /// First optimal set in (size, lexicographic) order; `None` if no
    /// solution of size at most `k` exists.
    pub witness: Option<VertexSet>,
    pub optimal_count: usize,
    /// Every feasible set of size at most `k`, when requested.
    pub feasible: Option<Vec<VertexSet>>,
}

/// All vertex sets of size at most `k` in (size, lexicographic) order whose
/// removal leaves treedepth at most `eta`; with `connected`, only those that
/// induce a connected subgraph (the empty set counts as connected).
pub fn enumerate_tds(g: &Graph, k: usize, eta: usize, connected: bool) -> Result<Vec<VertexSet>> {
    guard(g, ENUMERATION_LIMIT)?;
    let mut mg = MaskGraph::new(g)?;
    let full = mg.full();
    let mut out = Vec::new();
    for size in 0..=k.min(g.n()) {
        for combo in (0..g.n()).combinations(size) {
            let s = combo.iter().fold(0u64, |m, &v| m | (1 << v));
            if connected && s != 0 && !mg.is_connected(s) {
                continue;
            }
            if mg.td(full & !s) <= eta {
                out.push(VertexSet::from(combo));
            }
        }
    }
    Ok(out)
}

pub fn opt_ctds(g: &Graph, k: usize, eta: usize, keep_all: bool) -> Result<OracleReport> {
    let all = enumerate_tds(g, k, eta, true)?;
    let report = match all.first() {
        None => OracleReport { opt_value: k + 1, witness: None, optimal_count: 0, feasible: None },
        Some(best) => OracleReport {
            opt_value: best.len(),
            witness: Some(best.clone()),
            optimal_count: all.iter().take_while(|s| s.len() == best.len()).count(),
            feasible: None,
        },
    };
    Ok(OracleReport { feasible: keep_all.then_some(all), ..report })
}

/// Every optimal connected deletion set (empty when none of size ≤ k exists).
pub fn optimal_ctds(g: &Graph, k: usize, eta: usize) -> Result<Vec<VertexSet>> {
    let all = enumerate_tds(g, k, eta, true)?;
    let best = all.first().map_or(0, VertexSet::len);
    Ok(all.into_iter().take_while(|s| s.len() == best).collect())
}

/// Size of a smallest (not necessarily connected) deletion set.
pub fn opt_td_deletion(g: &Graph, eta: usize) -> Result<usize> {
    guard(g, ENUMERATION_LIMIT)?;
    let mut mg = MaskGraph::new(g)?;
    let full = mg.full();
    for size in 0..=g.n() {
        for combo in (0..g.n()).combinations(size) {
            let s = combo.iter().fold(0u64, |m, &v| m | (1 << v));
            if mg.td(full & !s) <= eta {
                return Ok(size);
            }
        }
    }
    unreachable!("deleting every vertex leaves treedepth 0")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteTree {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Minimum-edge connected subgraph containing `terminals`: the first
/// connected vertex superset in size order, with a spanning tree of it.
pub fn brute_steiner(g: &Graph, terminals: &VertexSet) -> Result<BruteTree> {
    guard(g, STEINER_LIMIT)?;
    g.check_set(terminals)?;
    if terminals.is_empty() {
        return Err(Error::Precondition("no terminals".into()));
    }
    let mg = MaskGraph::new(g)?;
    let term = mask_of(terminals);
    let others: Vec<Vertex> = g.vertices().filter(|&v| !terminals.contains(v)).collect();
    for extra in 0..=others.len() {
        for combo in others.iter().combinations(extra) {
            let mask = combo.iter().fold(term, |m, &&v| m | (1 << v));
            if mg.is_connected(mask) {
                let vertices = set_of(mask);
                return Ok(BruteTree { edges: spanning_tree(g, &vertices), vertices });
            }
        }
    }
    Err(Error::Disconnected)
}

fn spanning_tree(g: &Graph, s: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let root = s.min().expect("non-empty");
    let mut seen = VertexSet::singleton(root);
    let mut stack = vec![root];
    let mut edges = Vec::new();
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if s.contains(w) && seen.insert(w) {
                edges.push((u.min(w), u.max(w)));
                stack.push(w);
            }
        }
    }
    edges
}

/// Smallest vertex set avoiding `x`, `y` whose removal disconnects them.
pub fn brute_min_separator(g: &Graph, x: Vertex, y: Vertex) -> Result<VertexSet> {
    guard(g, SEPARATOR_LIMIT)?;
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::SameEndpoint(x));
    }
    if g.has_edge(x, y) {
        return Err(Error::AdjacentPair(x, y));
    }
    let mg = MaskGraph::new(g)?;
    let full = mg.full();
    let others: Vec<Vertex> = g.vertices().filter(|&v| v != x && v != y).collect();
    for size in 0..=others.len() {
        for combo in others.iter().combinations(size) {
            let cut = combo.iter().fold(0u64, |m, &&v| m | (1 << v));
            let comp = mg.component_containing(full & !cut, 1 << x);
            if comp >> y & 1 == 0 {
                return Ok(set_of(cut));
            }
        }
    }
    unreachable!("removing every other vertex separates a non-adjacent pair")
}

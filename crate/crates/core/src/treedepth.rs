//! Exact treedepth: decision, value and optimal decompositions.
//!
//! The search follows the recursive characterisation directly: a connected
//! graph has treedepth at most `b` iff some vertex can be removed so that
//! every remaining component has treedepth at most `b - 1`. Results are
//! memoised per vertex subset as a `lower..=upper` interval and the search
//! is pruned with an edge-count bound and a long-path bound
//! (`td(P_l) = ceil(log2(l + 1))`).

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Rooted forest witnessing an upper bound on treedepth.
///
/// Indexed by host vertex id. A vertex with depth 0 is not part of the
/// forest; this lets a forest over `G - X` live in the id space of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdDecomposition {
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
}

impl TdDecomposition {
    pub fn empty(n: usize) -> Self {
        Self { parent: vec![None; n], depth: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.depth.get(v).is_some_and(|&d| d > 0)
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    /// Depth of `v`, roots have depth 1.
    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    /// Maximum depth over all vertices.
    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn roots(&self) -> VertexSet {
        (0..self.len()).filter(|&v| self.depth[v] == 1).collect()
    }

    fn set(&mut self, v: Vertex, parent: Option<Vertex>, depth: usize) {
        self.parent[v] = parent;
        self.depth[v] = depth;
    }

    /// Whether `a` is a (non-strict) ancestor of `b`.
    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let mut cur = Some(b);
        while let Some(v) = cur {
            if v == a {
                return true;
            }
            cur = self.parent[v];
        }
        false
    }

    /// Path from `v` up to its root, `v` first.
    pub fn ancestors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = vec![v];
        let mut cur = self.parent[v];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out
    }

    /// `s` together with every ancestor of a member of `s`.
    pub fn upward_closure(&self, s: &VertexSet) -> Result<VertexSet> {
        let mut out = Vec::new();
        for v in s.iter() {
            if !self.contains(v) {
                return Err(Error::InvalidVertex { vertex: v, n: self.len() });
            }
            out.extend(self.ancestors(v));
        }
        Ok(out.into_iter().collect())
    }

    /// Re-indexes a decomposition of `G[S]` (local ids) into the ids of `G`.
    /// `map[i]` is the host id of local vertex `i`.
    pub fn embed(&self, map: &[Vertex], host_n: usize) -> TdDecomposition {
        let mut out = TdDecomposition::empty(host_n);
        self.embed_into(map, &mut out);
        out
    }

    pub fn embed_into(&self, map: &[Vertex], out: &mut TdDecomposition) {
        for (local, &host) in map.iter().enumerate() {
            if self.contains(local) {
                out.set(host, self.parent[local].map(|p| map[p]), self.depth[local]);
            }
        }
    }

    /// Checks that this is a decomposition of `g` restricted to the
    /// vertices it contains: forest structure, consistent depths, and every
    /// edge between covered vertices joins an ancestor/descendant pair.
    /// With `complete`, every vertex of `g` must be covered.
    pub fn validate(&self, g: &Graph, complete: bool) -> std::result::Result<(), String> {
        if self.len() != g.n() {
            return Err(format!("forest indexed over {} vertices, graph has {}", self.len(), g.n()));
        }
        for v in g.vertices() {
            if !self.contains(v) {
                if complete {
                    return Err(format!("vertex {v} missing from the forest"));
                }
                continue;
            }
            match self.parent[v] {
                None if self.depth[v] != 1 => {
                    return Err(format!("root {v} has depth {}", self.depth[v]));
                }
                Some(p) if !self.contains(p) => {
                    return Err(format!("parent {p} of {v} is not in the forest"));
                }
                Some(p) if self.depth[v] != self.depth[p] + 1 => {
                    return Err(format!("depth({v}) != depth({p}) + 1"));
                }
                _ => {}
            }
        }
        for (u, v) in g.edges() {
            if self.contains(u)
                && self.contains(v)
                && !self.is_ancestor(u, v)
                && !self.is_ancestor(v, u)
            {
                return Err(format!("edge {u}-{v} joins incomparable vertices"));
            }
        }
        Ok(())
    }

    /// One line per covered vertex: `v <id> <parent|-1> <depth>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.len() {
            if self.contains(v) {
                let parent = self.parent[v].map_or("-1".to_string(), |p| p.to_string());
                writeln!(out, "v {v} {parent} {}", self.depth[v]).unwrap();
            }
        }
        out
    }

    pub fn parse_text(text: &str, n: usize) -> Result<TdDecomposition> {
        let mut out = TdDecomposition::empty(n);
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Parse { line: idx + 1, message: m.to_string() };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "v" {
                return Err(err("expected `v <id> <parent|-1> <depth>`"));
            }
            let v: Vertex = toks[1].parse().map_err(|_| err("invalid id"))?;
            let parent: i64 = toks[2].parse().map_err(|_| err("invalid parent"))?;
            let depth: usize = toks[3].parse().map_err(|_| err("invalid depth"))?;
            if v >= n || parent >= n as i64 || depth == 0 {
                return Err(err("value out of range"));
            }
            let parent = (parent >= 0).then_some(parent as Vertex);
            out.set(v, parent, depth);
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    lower: usize,
    upper: usize,
}

/// Branch-and-bound treedepth search over subsets of one host graph.
///
/// Memo tables live as long as the solver, so repeated queries on the same
/// graph (as during obstruction shrinking) share work.
pub struct TreedepthSolver<'g> {
    g: &'g Graph,
    memo: HashMap<FixedBitSet, Bounds>,
}

impl<'g> TreedepthSolver<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Self { g, memo: HashMap::new() }
    }

    fn bits(&self, s: &VertexSet) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.g.n());
        for v in s.iter() {
            bits.insert(v);
        }
        bits
    }

    fn components(&self, set: &FixedBitSet) -> Vec<FixedBitSet> {
        let n = self.g.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in set.ones() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = FixedBitSet::with_capacity(n);
            seen.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in self.g.neighbors(u) {
                    if set.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Whether `G[s]` has treedepth at most `budget`.
    pub fn at_most(&mut self, s: &VertexSet, budget: usize) -> bool {
        let bits = self.bits(s);
        self.set_at_most(&bits, budget)
    }

    /// Exact treedepth of `G[s]`.
    pub fn treedepth_of(&mut self, s: &VertexSet) -> usize {
        let bits = self.bits(s);
        self.components(&bits)
            .iter()
            .map(|c| self.component_exact(c))
            .max()
            .unwrap_or(0)
    }

    fn set_at_most(&mut self, set: &FixedBitSet, budget: usize) -> bool {
        let comps = self.components(set);
        // Largest components first: they are the likeliest to fail.
        let mut order: Vec<usize> = (0..comps.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(comps[i].count_ones(..)));
        order.into_iter().all(|i| self.component_at_most(&comps[i], budget))
    }

    /// Quick lower bound for a connected vertex set.
    fn static_lower_bound(&self, comp: &FixedBitSet, size: usize) -> usize {
        if size <= 1 {
            return size;
        }
        let edges: usize = comp
            .ones()
            .map(|v| self.g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count())
            .sum::<usize>()
            / 2;
        // td <= b implies every vertex has at most b - 1 neighbours among its
        // ancestors, so m <= n (b - 1).
        let by_edges = edges.div_ceil(size) + 1;
        let path = self.greedy_path_len(comp);
        // A path on l vertices has treedepth ceil(log2(l + 1)).
        let by_path = (usize::BITS - path.leading_zeros()) as usize;
        by_edges.max(by_path).max(2)
    }

    fn greedy_path_len(&self, comp: &FixedBitSet) -> usize {
        let deg = |v: Vertex| self.g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count();
        let start = comp.ones().min_by_key(|&v| (deg(v), v)).expect("non-empty component");
        let mut visited = FixedBitSet::with_capacity(self.g.n());
        visited.insert(start);
        let mut len = 1;
        let mut cur = start;
        loop {
            let next = self
                .g
                .neighbors(cur)
                .iter()
                .copied()
                .filter(|&w| comp.contains(w) && !visited.contains(w))
                .min_by_key(|&w| {
                    let free = self
                        .g
                        .neighbors(w)
                        .iter()
                        .filter(|&&x| comp.contains(x) && !visited.contains(x))
                        .count();
                    (free, w)
                });
            match next {
                Some(w) => {
                    visited.insert(w);
                    len += 1;
                    cur = w;
                }
                None => return len,
            }
        }
    }

    fn bounds(&mut self, comp: &FixedBitSet) -> Bounds {
        if let Some(b) = self.memo.get(comp) {
            return *b;
        }
        let size = comp.count_ones(..);
        let lower = self.static_lower_bound(comp, size);
        let b = Bounds { lower, upper: size };
        self.memo.insert(comp.clone(), b);
        b
    }

    fn component_at_most(&mut self, comp: &FixedBitSet, budget: usize) -> bool {
        let size = comp.count_ones(..);
        if size <= budget {
            return true;
        }
        if budget <= 1 {
            // size >= 2 and connected
            return false;
        }
        let b = self.bounds(comp);
        if b.upper <= budget {
            return true;
        }
        if b.lower > budget {
            return false;
        }
        let mut order: Vec<Vertex> = comp.ones().collect();
        let deg = |v: Vertex| self.g.neighbors(v).iter().filter(|&&w| comp.contains(w)).count();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
        let mut rest = comp.clone();
        for v in order {
            rest.set(v, false);
            let ok = self.set_at_most(&rest, budget - 1);
            rest.insert(v);
            if ok {
                let entry = self.memo.get_mut(comp).expect("bounds inserted above");
                entry.upper = entry.upper.min(budget);
                return true;
            }
        }
        let entry = self.memo.get_mut(comp).expect("bounds inserted above");
        entry.lower = entry.lower.max(budget + 1);
        false
    }

    fn component_exact(&mut self, comp: &FixedBitSet) -> usize {
        let size = comp.count_ones(..);
        if size <= 1 {
            return size;
        }
        let mut b = self.bounds(comp).lower;
        while !self.component_at_most(comp, b) {
            b += 1;
        }
        b
    }

    /// Optimal decomposition of `G[s]`, or `None` when its treedepth exceeds
    /// `eta`. Every subtree is optimal for its own component and the root of
    /// each is the smallest id attaining the optimum.
    pub fn decompose(&mut self, s: &VertexSet, eta: usize) -> Option<TdDecomposition> {
        let bits = self.bits(s);
        let comps = self.components(&bits);
        let mut targets = Vec::with_capacity(comps.len());
        for c in &comps {
            let td = self.component_exact(c);
            if td > eta {
                return None;
            }
            targets.push(td);
        }
        let mut out = TdDecomposition::empty(self.g.n());
        for (c, td) in comps.iter().zip(targets) {
            self.build(c, td, None, 1, &mut out);
        }
        Some(out)
    }

    fn build(
        &mut self,
        comp: &FixedBitSet,
        target: usize,
        parent: Option<Vertex>,
        depth: usize,
        out: &mut TdDecomposition,
    ) {
        let mut rest = comp.clone();
        let mut root = None;
        for v in comp.ones() {
            rest.set(v, false);
            if target == 1 || self.set_at_most(&rest, target - 1) {
                root = Some(v);
                break;
            }
            rest.insert(v);
        }
        let root = root.expect("some vertex attains the treedepth");
        out.set(root, parent, depth);
        for child in self.components(&rest) {
            let td = self.component_exact(&child);
            self.build(&child, td, Some(root), depth + 1, out);
        }
    }
}

/// Exact treedepth; the empty graph has treedepth 0.
pub fn treedepth(g: &Graph) -> usize {
    TreedepthSolver::new(g).treedepth_of(&g.all())
}

pub fn td_at_most(g: &Graph, eta: usize) -> bool {
    TreedepthSolver::new(g).at_most(&g.all(), eta)
}

/// Exact treedepth of the subgraph induced by `s`.
pub fn treedepth_within(g: &Graph, s: &VertexSet) -> usize {
    TreedepthSolver::new(g).treedepth_of(s)
}

pub fn build_decomposition(g: &Graph, eta: usize) -> Option<TdDecomposition> {
    TreedepthSolver::new(g).decompose(&g.all(), eta)
}

/// Test utility: a connected graph of treedepth at most `eta` has diameter
/// at most `2^eta`. Errors when the precondition does not hold.
pub fn check_diameter_bound(g: &Graph, eta: usize) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !td_at_most(g, eta) {
        return Err(Error::Precondition(format!("treedepth exceeds {eta}")));
    }
    let bound = 1usize.checked_shl(eta as u32).unwrap_or(usize::MAX);
    Ok(g.diameter()? <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_values() {
        assert_eq!(treedepth(&Graph::empty(0)), 0);
        assert_eq!(treedepth(&Graph::empty(1)), 1);
        assert_eq!(treedepth(&Graph::empty(5)), 1);
        for n in 2..=4 {
            assert_eq!(treedepth(&complete(n)), n);
        }
        assert_eq!(treedepth(&path(4)), 3);
        assert_eq!(treedepth(&cycle(4)), 3);
        assert_eq!(treedepth(&star(6)), 2);
    }

    #[test]
    fn decision_examples() {
        assert!(td_at_most(&Graph::empty(4), 1));
        assert!(!td_at_most(&complete(3), 2));
        assert!(td_at_most(&path(7), 3));
        assert!(!td_at_most(&path(8), 3));
        assert!(td_at_most(&Graph::empty(0), 0));
        assert!(!td_at_most(&Graph::empty(1), 0));
    }

    #[test]
    fn paths_follow_log_formula() {
        for n in 1..=20usize {
            let expected = (usize::BITS - n.leading_zeros()) as usize;
            assert_eq!(treedepth(&path(n)), expected, "P_{n}");
        }
    }

    #[test]
    fn star_decomposition() {
        let d = build_decomposition(&star(4), 2).unwrap();
        assert_eq!(d.parent(0), None);
        for leaf in 1..=4 {
            assert_eq!(d.parent(leaf), Some(0));
            assert_eq!(d.depth(leaf), 2);
        }
        d.validate(&star(4), true).unwrap();
    }

    #[test]
    fn exceeding_decomposition() {
        assert!(build_decomposition(&complete(4), 3).is_none());
        assert!(build_decomposition(&complete(4), 4).is_some());
    }

    #[test]
    fn p3_roots_at_middle() {
        let d = build_decomposition(&path(3), 2).unwrap();
        assert_eq!(d.parent(1), None);
        assert_eq!(d.parent(0), Some(1));
        assert_eq!(d.parent(2), Some(1));
    }

    #[test]
    fn upward_closures() {
        let d = build_decomposition(&path(7), 3).unwrap();
        let root = VertexSet::min(&d.roots()).unwrap();
        assert_eq!(d.upward_closure(&VertexSet::singleton(root)).unwrap(), VertexSet::singleton(root));
        let leaf = (0..7).find(|&v| d.depth(v) == 3).unwrap();
        let closure = d.upward_closure(&VertexSet::singleton(leaf)).unwrap();
        assert_eq!(closure.len(), 3);
        assert!(closure.contains(root));
        let s = build_decomposition(&star(4), 2).unwrap();
        assert_eq!(s.upward_closure(&VertexSet::from([1, 3])).unwrap(), VertexSet::from([0, 1, 3]));
        assert!(s.upward_closure(&VertexSet::from([9])).is_err());
    }

    #[test]
    fn diameter_bound_examples() {
        assert!(check_diameter_bound(&star(5), 2).unwrap());
        assert!(check_diameter_bound(&path(7), 3).unwrap());
        assert!(check_diameter_bound(&complete(5), 5).unwrap());
        assert!(check_diameter_bound(&path(8), 3).is_err());
        assert!(check_diameter_bound(&Graph::empty(2), 3).is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = build_decomposition(&grid(2, 3), 6).unwrap();
        let text = d.to_text();
        assert_eq!(TdDecomposition::parse_text(&text, 6).unwrap(), d);
        assert!(text.lines().all(|l| l.starts_with("v ")));
    }

    #[test]
    fn embedding_keeps_structure() {
        let d = build_decomposition(&path(3), 2).unwrap();
        let e = d.embed(&[4, 5, 6], 8);
        assert_eq!(e.parent(4), Some(5));
        assert!(!e.contains(0));
        assert_eq!(e.height(), 2);
    }
}

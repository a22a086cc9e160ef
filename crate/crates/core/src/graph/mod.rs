//! Immutable simple undirected graphs with dense vertex ids.
//!
//! Every vertex carries an optional `origin` label: the id it had in the
//! input graph. Induced subgraphs keep the labels of the vertices they
//! retain, so a solution found on a reduced graph can always be mapped back.
//! Vertices created later (gadget cliques) have no origin.

mod io;
pub mod named;
mod set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{read_graph, write_graph};
pub use set::VertexSet;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    origin: Vec<Option<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` isolated vertices whose origin labels are their own ids.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            origin: (0..n).map(Some).collect(),
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and bad ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        g.push_edges(edges.iter().copied())?;
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] but silently drops repeated edges.
    pub fn from_edges_dedup(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut normalized: Vec<(Vertex, Vertex)> = edges
            .iter()
            .map(|&(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        normalized.sort_unstable();
        normalized.dedup();
        Graph::from_edges(n, &normalized)
    }

    fn push_edges(&mut self, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<()> {
        let n = self.adj.len();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::InvalidVertex { vertex: u, n });
            }
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if self.adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.edge_count += 1;
        }
        for list in &mut self.adj {
            list.sort_unstable();
        }
        Ok(())
    }

    /// New graph with `extra` fresh vertices (ids `n..n+extra`, no origin)
    /// and the given additional edges.
    pub fn extended(&self, extra: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = self.clone();
        g.adj.extend(std::iter::repeat_with(Vec::new).take(extra));
        g.origin.extend(std::iter::repeat(None).take(extra));
        g.push_edges(edges.iter().copied())?;
        Ok(g)
    }

    pub fn with_origin(mut self, origin: Vec<Option<Vertex>>) -> Graph {
        assert_eq!(origin.len(), self.adj.len());
        self.origin = origin;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn origin(&self, v: Vertex) -> Option<Vertex> {
        self.origin[v]
    }

    pub fn origins(&self) -> &[Option<Vertex>] {
        &self.origin
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`. Vertex `i` of the result is `map[i]` of `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(s)?;
        let map: Vec<Vertex> = s.iter().collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = Vec::with_capacity(map.len());
        let mut edge_count = 0;
        for &v in &map {
            let list: Vec<Vertex> = self.adj[v]
                .iter()
                .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                .collect();
            edge_count += list.len();
            adj.push(list);
        }
        let origin = map.iter().map(|&v| self.origin[v]).collect();
        Ok((Graph { adj, origin, edge_count: edge_count / 2 }, map))
    }

    /// Graph with the vertices of `s` removed, plus the id map.
    pub fn without(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        self.check_set(s)?;
        self.induced_subgraph(&self.all().difference(s))
    }

    /// Connected components ordered by minimum vertex id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&vec![true; self.n()])
    }

    /// Components of the subgraph induced by the vertices with `alive[v]`.
    pub fn components_within(&self, alive: &[bool]) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if !alive[start] || seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if alive[w] && !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Components of `G[s]`.
    pub fn components_of(&self, s: &VertexSet) -> Vec<VertexSet> {
        self.components_within(&s.mask(self.n()))
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn induces_connected(&self, s: &VertexSet) -> bool {
        self.components_of(s).len() <= 1
    }

    /// Open neighbourhood `N(S)`.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let inside = s.mask(self.n());
        Ok(self.neighborhood_masked(s, &inside))
    }

    pub(crate) fn neighborhood_masked(&self, s: &VertexSet, inside: &[bool]) -> VertexSet {
        let mut out = Vec::new();
        for v in s.iter() {
            out.extend(self.adj[v].iter().copied().filter(|&w| !inside[w]));
        }
        out.into_iter().collect()
    }

    /// Hop distances from `source`; unreachable vertices map to `None`.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Maximum hop distance between two vertices. Errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in self.vertices() {
            for d in self.bfs_distances(v)? {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// Shortest path from `from` to `to` whose interior avoids vertices with
    /// `!allowed[v]`. Ties go to the smallest-id predecessor.
    pub fn shortest_path_within(
        &self,
        from: Vertex,
        to: Vertex,
        allowed: &[bool],
    ) -> Option<Vec<Vertex>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut pred = vec![usize::MAX; self.n()];
        pred[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if pred[w] != usize::MAX {
                    continue;
                }
                if w == to {
                    pred[w] = u;
                    let mut path = vec![to];
                    let mut cur = to;
                    while cur != from {
                        cur = pred[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                if allowed[w] {
                    pred[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn components_basic() {
        assert!(Graph::empty(0).connected_components().is_empty());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = two_triangles.connected_components();
        assert_eq!(comps, vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 5])]);
        assert_eq!(path(5).connected_components().len(), 1);
        assert_eq!(path(5).connected_components()[0].len(), 5);
    }

    #[test]
    fn components_ordered_by_min_id() {
        let g = Graph::from_edges(5, &[(4, 0), (1, 3)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(
            comps,
            vec![VertexSet::from([0, 4]), VertexSet::from([1, 3]), VertexSet::from([2])]
        );
    }

    #[test]
    fn induced_subgraphs() {
        let (k3, map) = complete(4).induced_subgraph(&VertexSet::from([0, 2, 3])).unwrap();
        assert_eq!(k3, complete(3).with_origin(vec![Some(0), Some(2), Some(3)]));
        assert_eq!(map, vec![0, 2, 3]);
        let (empty, _) = cycle(6).induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(empty.n(), 0);
        let (h, _) = cycle(6).induced_subgraph(&VertexSet::from([0, 1, 3])).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(h.degree(2), 0);
        assert!(cycle(6).induced_subgraph(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn neighborhoods() {
        let s = star(4);
        assert_eq!(s.neighborhood(&VertexSet::from([0])).unwrap(), VertexSet::from([1, 2, 3, 4]));
        assert!(s.neighborhood(&s.all()).unwrap().is_empty());
        assert_eq!(cycle(4).neighborhood(&VertexSet::from([0])).unwrap(), VertexSet::from([1, 3]));
        assert!(s.neighborhood(&VertexSet::from([9])).is_err());
    }

    #[test]
    fn diameters() {
        assert_eq!(path(4).diameter().unwrap(), 3);
        assert_eq!(complete(5).diameter().unwrap(), 1);
        assert_eq!(grid(3, 3).diameter().unwrap(), 4);
        assert_eq!(Graph::empty(2).diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(2, &[(0, 2)]), Err(Error::InvalidVertex { .. })));
        assert_eq!(Graph::from_edges_dedup(2, &[(0, 1), (1, 0)]).unwrap().m(), 1);
    }

    #[test]
    fn extension_adds_unlabelled_vertices() {
        let g = path(2).extended(2, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.origin(3), None);
        assert_eq!(g.origin(1), Some(1));
    }

    #[test]
    fn shortest_path_respects_allowed_interior() {
        let g = cycle(6);
        let mut allowed = vec![true; 6];
        assert_eq!(g.shortest_path_within(0, 2, &allowed), Some(vec![0, 1, 2]));
        allowed[1] = false;
        assert_eq!(g.shortest_path_within(0, 2, &allowed), Some(vec![0, 5, 4, 3, 2]));
    }
}

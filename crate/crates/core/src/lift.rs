//! Solution lifting: gadget stripping, nice-ification and the final case
//! analysis mapping a reduced solution back to the input graph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::kernel::{KernelState, Outcome};
use crate::scalar::Scalar;
use crate::treedepth::TreedepthSolver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    Feasible,
    Sentinel,
}

impl std::fmt::Display for SolutionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolutionKind::Feasible => "feasible",
            SolutionKind::Sentinel => "sentinel",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    /// Input-graph ids.
    pub vertices: VertexSet,
    pub kind: SolutionKind,
    /// `|vertices|` when feasible, `k + 1` for the sentinel.
    pub value: usize,
}

/// Whether `s` is a connected deletion set: `g[s]` connected and
/// `td(g - s) <= eta`. The empty set qualifies iff `td(g) <= eta`.
pub fn verify_ctds(g: &Graph, s: &VertexSet, eta: usize) -> Result<bool> {
    g.check_set(s)?;
    if !g.induces_connected(s) {
        return Ok(false);
    }
    Ok(TreedepthSolver::new(g).at_most(&g.all().difference(s), eta))
}

/// Components of `g - xz` grouped by `N(C) \ h`.
pub fn neighborhood_classes(g: &Graph, xz: &VertexSet, h: &VertexSet) -> BTreeMap<VertexSet, Vec<VertexSet>> {
    let mut classes: BTreeMap<VertexSet, Vec<VertexSet>> = BTreeMap::new();
    for c in g.components_of(&g.all().difference(xz)) {
        let t = g.neighborhood(&c).expect("valid").difference(h);
        classes.entry(t).or_default().push(c);
    }
    classes
}

fn violating(classes: &BTreeMap<VertexSet, Vec<VertexSet>>, s: &VertexSet, lambda: usize) -> Vec<VertexSet> {
    classes
        .iter()
        .filter(|(t, comps)| {
            let hit: usize = comps.iter().map(|c| c.intersection(s).len()).sum();
            hit > lambda && !t.is_subset(s)
        })
        .map(|(t, _)| t.clone())
        .collect()
}

/// Nice: every class `T` whose components meet `s` in more than `lambda`
/// vertices in total has `T ⊆ s`.
pub fn is_nice(g: &Graph, s: &VertexSet, lambda: usize, h: &VertexSet, xz: &VertexSet) -> Result<bool> {
    g.check_set(s)?;
    g.check_set(xz)?;
    Ok(violating(&neighborhood_classes(g, xz, h), s, lambda).is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceOutcome {
    pub set: VertexSet,
    /// Number of violating classes repaired.
    pub repaired: usize,
    pub added: usize,
}

/// Extends a connected deletion set `s` of `g - y` to a nice one.
///
/// Classes are computed once, on `g - y - xz`. For every violating class
/// `T`, adds `T` and, for each `w ∈ T \ s`, a shortest path from `w` to
/// `v = min(C ∩ s)` through the class member `C` holding the smallest
/// vertex of `s`.
pub fn make_nice(
    g: &Graph,
    y: &VertexSet,
    s: &VertexSet,
    lambda: usize,
    h: &VertexSet,
    xz: &VertexSet,
) -> Result<NiceOutcome> {
    g.check_set(y)?;
    g.check_set(s)?;
    if !y.is_disjoint(xz) {
        return Err(Error::Precondition("Y meets X ∪ Z".into()));
    }
    if !s.is_disjoint(y) {
        return Err(Error::Precondition("solution meets Y".into()));
    }
    if !h.is_subset(s) {
        return Err(Error::Precondition("solution misses a forced vertex".into()));
    }
    let (sub, map) = g.without(y)?;
    let mut back = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        back[v] = i;
    }
    let local = |set: &VertexSet| -> VertexSet { set.iter().filter(|&v| back[v] != usize::MAX).map(|v| back[v]).collect() };
    let (s_loc, h_loc, xz_loc) = (local(s), local(h), local(xz));

    let classes = neighborhood_classes(&sub, &xz_loc, &h_loc);
    let bad = violating(&classes, &s_loc, lambda);
    let mut out = s_loc.clone();
    for t in &bad {
        let comps = &classes[t];
        let host = comps
            .iter()
            .filter(|c| !c.is_disjoint(&s_loc))
            .min_by_key(|c| VertexSet::min(&c.intersection(&s_loc)))
            .expect("a violating class meets s");
        let v = VertexSet::min(&host.intersection(&s_loc)).expect("non-empty");
        let inside = host.mask(sub.n());
        for w in t.difference(&s_loc).iter() {
            let path = sub
                .shortest_path_within(w, v, &inside)
                .ok_or_else(|| Error::Precondition(format!("no path from {w} into its class")))?;
            out = out.union(&VertexSet::from(path));
        }
        out = out.union(t);
    }
    let set: VertexSet = out.iter().map(|v| map[v]).collect();
    Ok(NiceOutcome { added: set.len() - s.len(), set, repaired: bad.len() })
}

/// Maps a solution of the working graph to core ids: gadget interiors are
/// replaced by their anchors.
pub fn strip_gadgets<S: Scalar>(state: &KernelState<S>, s: &VertexSet) -> Result<VertexSet> {
    state.working.check_set(s)?;
    if !verify_ctds(&state.working, s, state.params.eta)? {
        return Err(Error::Precondition("input is not a connected deletion set of the working graph".into()));
    }
    Ok(strip_unchecked(state, s))
}

fn strip_unchecked<S: Scalar>(state: &KernelState<S>, s: &VertexSet) -> VertexSet {
    let core_n = state.core.n();
    let mut out: VertexSet = s.iter().filter(|&v| v < core_n).collect();
    for (&u, clique) in &state.gadgets {
        if clique.iter().any(|w| w != u && s.contains(w)) {
            out.insert(u);
        }
    }
    out
}

/// The component with treedepth above `eta` holding the smallest id, at
/// value `k + 1`; the empty solution when no such component exists.
pub fn sentinel(g: &Graph, eta: usize, k: usize) -> Solution {
    let mut solver = TreedepthSolver::new(g);
    match g.connected_components().into_iter().find(|c| !solver.at_most(c, eta)) {
        Some(c) => Solution { vertices: c, kind: SolutionKind::Sentinel, value: k + 1 },
        None => Solution { vertices: VertexSet::new(), kind: SolutionKind::Feasible, value: 0 },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftRoute {
    /// Pass-through kernel: the solution is used as is.
    Identity,
    /// Every component had small treedepth; the empty set is optimal.
    Empty,
    NoInstance,
    InvalidInput(String),
    OverBudget,
    NotASolution,
    /// Nice-ified, stripped and verified.
    Lifted,
    /// The lifted set failed verification or exceeded `k`.
    Fallback(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub solution: Solution,
    pub route: LiftRoute,
    pub nice: Option<NiceOutcome>,
}

/// Lifts a set of reduced-graph ids to a solution of the input. Never
/// fails: every problem falls back to the sentinel.
pub fn lift<S: Scalar>(state: &KernelState<S>, s: &VertexSet) -> Solution {
    lift_detailed(state, s).solution
}

pub fn lift_detailed<S: Scalar>(state: &KernelState<S>, s: &VertexSet) -> LiftReport {
    let eta = state.params.eta;
    let k = state.params.k;
    let g = &state.original;
    let fallback = |route: LiftRoute, nice: Option<NiceOutcome>| LiftReport { solution: sentinel(g, eta, k), route, nice };
    let feasible = |set: VertexSet, route: LiftRoute, nice: Option<NiceOutcome>| LiftReport {
        solution: Solution { value: set.len(), vertices: set, kind: SolutionKind::Feasible },
        route,
        nice,
    };

    match state.outcome {
        Outcome::NoInstance => return fallback(LiftRoute::NoInstance, None),
        Outcome::Empty => return feasible(VertexSet::new(), LiftRoute::Empty, None),
        _ => {}
    }
    if let Err(e) = state.reduced.check_set(s) {
        return fallback(LiftRoute::InvalidInput(e.to_string()), None);
    }
    if s.len() > state.k_reduced {
        return fallback(LiftRoute::OverBudget, None);
    }
    if !verify_ctds(&state.reduced, s, eta).unwrap_or(false) {
        return fallback(LiftRoute::NotASolution, None);
    }
    if state.outcome == Outcome::PassThrough {
        return feasible(s.clone(), LiftRoute::Identity, None);
    }

    let partition = state.partition.as_ref().expect("reduced states carry a partition");
    let in_working = state.to_working(s).expect("checked above");
    let nice = match make_nice(
        &state.working,
        &state.removed(),
        &in_working,
        state.params.lambda_usize(),
        &state.h,
        &partition.xz(),
    ) {
        Ok(n) => n,
        Err(e) => return fallback(LiftRoute::Fallback(format!("nice step: {e}")), None),
    };
    let stripped = strip_unchecked(state, &nice.set);
    let lifted = state.working_to_original(&stripped);
    if !verify_ctds(g, &lifted, eta).unwrap_or(false) {
        return fallback(LiftRoute::Fallback("lifted set is not a solution".into()), Some(nice));
    }
    if lifted.len() > k {
        return fallback(LiftRoute::Fallback(format!("lifted size {} exceeds k", lifted.len())), Some(nice));
    }
    feasible(lifted, LiftRoute::Lifted, Some(nice))
}

/// `(d + 2 eta) 2^eta r`, the growth allowed for `r` repaired classes.
pub fn nice_growth_bound(d: usize, eta: usize, repaired: usize) -> usize {
    d.saturating_add(2 * eta)
        .saturating_mul(1usize << eta.min(usize::BITS as usize - 1))
        .saturating_mul(repaired)
}

/// Convenience for callers holding plain vertex lists.
pub fn to_set(vertices: &[Vertex]) -> VertexSet {
    vertices.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::kernel::reduce;
    use crate::params::Params;
    use crate::{Rational, Scalar};

    #[test]
    fn verify_examples() {
        assert!(verify_ctds(&cycle(4), &VertexSet::from([0, 1, 2]), 1).unwrap());
        assert!(!verify_ctds(&cycle(4), &VertexSet::from([0, 2]), 1).unwrap());
        assert!(verify_ctds(&complete(3), &VertexSet::from([0]), 2).unwrap());
        assert!(verify_ctds(&star(3), &VertexSet::new(), 2).unwrap());
        assert!(!verify_ctds(&star(3), &VertexSet::new(), 1).unwrap());
        assert!(verify_ctds(&star(3), &VertexSet::from([7]), 1).is_err());
    }

    #[test]
    fn niceness_examples() {
        // x = 0 with three leaves; xz = {0}
        let g = star(3);
        let xz = VertexSet::singleton(0);
        let h = VertexSet::new();
        assert!(is_nice(&g, &VertexSet::new(), 0, &h, &xz).unwrap());
        assert!(!is_nice(&g, &VertexSet::singleton(1), 0, &h, &xz).unwrap());
        assert!(is_nice(&g, &VertexSet::from([0, 1]), 0, &h, &xz).unwrap());
        assert!(is_nice(&g, &VertexSet::singleton(1), 1, &h, &xz).unwrap());
    }

    #[test]
    fn make_nice_adds_separator_and_path() {
        // path 0-1-2-3 with X = {0}; class {0} holds component {1,2,3}.
        let g = path(4);
        let xz = VertexSet::singleton(0);
        let s = VertexSet::singleton(3);
        let out = make_nice(&g, &VertexSet::new(), &s, 0, &VertexSet::new(), &xz).unwrap();
        assert_eq!(out.set, VertexSet::from([0, 1, 2, 3]));
        assert_eq!(out.repaired, 1);
        assert!(is_nice(&g, &out.set, 0, &VertexSet::new(), &xz).unwrap());
        assert!(out.added <= nice_growth_bound(2, 1, 1));
        let already = make_nice(&g, &VertexSet::new(), &out.set, 0, &VertexSet::new(), &xz).unwrap();
        assert_eq!(already.set, out.set);
        assert_eq!(already.repaired, 0);
    }

    #[test]
    fn make_nice_checks_preconditions() {
        let g = path(4);
        let xz = VertexSet::singleton(0);
        let err = make_nice(&g, &VertexSet::singleton(0), &VertexSet::singleton(3), 0, &VertexSet::new(), &xz);
        assert!(err.is_err());
        let err = make_nice(&g, &VertexSet::new(), &VertexSet::singleton(3), 0, &VertexSet::singleton(0), &xz);
        assert!(err.is_err());
    }

    fn params(k: usize) -> Params<Rational> {
        Params::paper(1, Rational::parse_scalar("1").unwrap(), k).unwrap()
    }

    #[test]
    fn pass_through_lifting_is_identity() {
        let g = cycle(4);
        let state = reduce(&g, &params(3)).unwrap();
        let sol = lift(&state, &VertexSet::from([0, 1, 2]));
        assert_eq!(sol.kind, SolutionKind::Feasible);
        assert_eq!(sol.value, 3);
    }

    #[test]
    fn over_budget_gives_sentinel() {
        let g = cycle(4);
        let state = reduce(&g, &params(2)).unwrap();
        let sol = lift(&state, &VertexSet::from([0, 1, 2]));
        assert_eq!(sol.kind, SolutionKind::Sentinel);
        assert_eq!(sol.value, 3);
        assert_eq!(sol.vertices, g.all());
    }

    #[test]
    fn strip_keeps_anchor() {
        let g = Graph::from_edges(8, &[(4, 5), (5, 6), (6, 7), (0, 4), (0, 5), (0, 6), (0, 7), (1, 4), (1, 5), (1, 6), (1, 7), (2, 4), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (3, 6), (3, 7)]).unwrap();
        let p = Params::custom(1, Rational::parse_scalar("1").unwrap(), 2, 2, 2, 2).unwrap();
        let state = reduce(&g, &p).unwrap();
        assert_eq!(state.h, VertexSet::from([4, 5, 6, 7]));
        let (&u, j) = state.gadgets.iter().next().unwrap();
        let pendant = j.iter().find(|&w| w != u).unwrap();
        let s = VertexSet::from([4, 5, 6, 7, pendant]);
        assert!(verify_ctds(&state.working, &s, 1).unwrap());
        assert_eq!(strip_gadgets(&state, &s).unwrap(), VertexSet::from([4, 5, 6, 7]));
        assert!(strip_gadgets(&state, &VertexSet::singleton(pendant)).is_err());
    }
}

//! The reduction algorithm: early exits, Rules 1–4, the connector harvest
//! and emission of the reduced instance.
//!
//! Id spaces: the *core* graph is the input after Rule 1 (its origin labels
//! point into the input). The *working* graph `g1` keeps the core ids and
//! appends gadget vertices after them. The reduced graph is an induced
//! subgraph of `g1`; `reduced_to_working` maps its ids back.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::decompose::{decompose, Decomposition, Partition};
use crate::error::{Error, Result};
use crate::graph::named::{complete, disjoint_union};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::params::Params;
use crate::scalar::Scalar;
use crate::steiner::harvest_connectors;
use crate::treedepth::TreedepthSolver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Size gate: the input is its own kernel.
    PassThrough,
    /// No connected solution of size `k` exists; the constant no-instance
    /// is emitted.
    NoInstance,
    /// Every component already has treedepth at most `eta`.
    Empty,
    Reduced,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum RuleEvent {
    /// Two or more components with treedepth above `eta`.
    TwoHeavyComponents { components: Vec<VertexSet> },
    SizeGate { n: usize },
    Rule1 { dropped: Vec<VertexSet> },
    /// The obstruction loop found more than `k` disjoint obstructions.
    Infeasible { obstructions: usize },
    Rule2 { component: VertexSet, forced: VertexSet, new_gadgets: VertexSet },
    Rule3 { separator: VertexSet, depth: usize, class_size: usize, marked: VertexSet },
    Rule4 {
        host: VertexSet,
        separator: VertexSet,
        depth: usize,
        class_size: usize,
        marked: VertexSet,
    },
    Connectors { harvested: usize, restored: usize },
}

/// One Rule 2 application: `forced` is `N(C) ∩ X` for the triggering
/// component `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule2Application {
    pub component: VertexSet,
    pub forced: VertexSet,
    pub new_gadgets: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule2Result {
    pub h: VertexSet,
    /// Anchor → clique (anchor included), working ids.
    pub gadgets: BTreeMap<Vertex, VertexSet>,
    pub applications: Vec<Rule2Application>,
    pub working: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleCounts {
    pub rule1: usize,
    pub rule2: usize,
    pub rule3: usize,
    pub rule4: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct KernelState<S: Scalar> {
    pub params: Params<S>,
    pub outcome: Outcome,
    pub original: Graph,
    /// Input after Rule 1; equal to `original` for the early exits.
    pub core: Graph,
    /// `core` plus gadget cliques.
    pub working: Graph,
    pub partition: Option<Partition>,
    pub h: VertexSet,
    pub gadgets: BTreeMap<Vertex, VertexSet>,
    pub rule2: Vec<Rule2Application>,
    pub marked: VertexSet,
    pub connectors: VertexSet,
    pub reduced: Graph,
    pub reduced_to_working: Vec<Vertex>,
    pub k_reduced: usize,
    pub trace: Vec<RuleEvent>,
}

impl<S: Scalar> KernelState<S> {
    /// `M \ N`, the vertices deleted from the working graph.
    pub fn removed(&self) -> VertexSet {
        self.marked.difference(&self.connectors)
    }

    pub fn gadget_vertices(&self) -> VertexSet {
        self.gadgets
            .iter()
            .flat_map(|(&u, j)| j.iter().filter(move |&w| w != u))
            .collect()
    }

    pub fn counts(&self) -> RuleCounts {
        let mut c = RuleCounts { rule1: 0, rule2: 0, rule3: 0, rule4: 0 };
        for e in &self.trace {
            match e {
                RuleEvent::Rule1 { dropped } => c.rule1 += dropped.len(),
                RuleEvent::Rule2 { .. } => c.rule2 += 1,
                RuleEvent::Rule3 { .. } => c.rule3 += 1,
                RuleEvent::Rule4 { .. } => c.rule4 += 1,
                _ => {}
            }
        }
        c
    }

    /// Maps a reduced-graph set to working ids.
    pub fn to_working(&self, s: &VertexSet) -> Result<VertexSet> {
        self.reduced.check_set(s)?;
        Ok(s.iter().map(|v| self.reduced_to_working[v]).collect())
    }

    /// Maps a working (or core) set to input ids, dropping gadget vertices.
    pub fn working_to_original(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.working.origin(v)).collect()
    }

    /// Maps an input set into core ids, dropping vertices Rule 1 deleted.
    pub fn original_to_core(&self, s: &VertexSet) -> VertexSet {
        let mut back = vec![None; self.original.n()];
        for v in self.core.vertices() {
            if let Some(o) = self.core.origin(v) {
                back[o] = Some(v);
            }
        }
        s.iter().filter_map(|v| back[v]).collect()
    }

    fn early(params: &Params<S>, g: &Graph, outcome: Outcome, reduced: Graph, k: usize, trace: Vec<RuleEvent>) -> Self {
        let reduced_to_working = reduced.vertices().collect();
        KernelState {
            params: params.clone(),
            outcome,
            original: g.clone(),
            core: g.clone(),
            working: g.clone(),
            partition: None,
            h: VertexSet::new(),
            gadgets: BTreeMap::new(),
            rule2: Vec::new(),
            marked: VertexSet::new(),
            connectors: VertexSet::new(),
            reduced,
            reduced_to_working,
            k_reduced: k,
            trace,
        }
    }
}

/// The constant instance `(K_{eta+2} ⊎ K_{eta+2}, 1)`, which has no
/// connected solution of size 1.
pub fn emit_no_instance(eta: usize) -> (Graph, usize) {
    let k = complete(eta + 2);
    let g = disjoint_union(&k, &k);
    let n = g.n();
    (g.with_origin(vec![None; n]), 1)
}

/// Components of `g` with treedepth above `eta`, ordered by minimum id.
pub fn heavy_components(g: &Graph, eta: usize) -> Vec<VertexSet> {
    let mut solver = TreedepthSolver::new(g);
    g.connected_components()
        .into_iter()
        .filter(|c| !solver.at_most(c, eta))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule1Outcome {
    /// The surviving graph (induced on the heavy components).
    pub graph: Graph,
    pub dropped: Vec<VertexSet>,
    /// Two or more components survive: no connected solution exists.
    pub no_solution: bool,
}

/// Deletes every component of treedepth at most `eta`.
pub fn rule1_drop_low_td_components(g: &Graph, eta: usize) -> Rule1Outcome {
    let mut solver = TreedepthSolver::new(g);
    let (keep, dropped): (Vec<_>, Vec<_>) =
        g.connected_components().into_iter().partition(|c| !solver.at_most(c, eta));
    let kept: VertexSet = keep.iter().flat_map(|c| c.iter()).collect();
    let (graph, _) = g.induced_subgraph(&kept).expect("components are valid");
    Rule1Outcome { graph, dropped, no_solution: keep.len() >= 2 }
}

/// Applies Rule 2 exhaustively: while some component `C` of `g[R]` has more
/// than `d + eta` neighbours in `X \ H`, attach an `(eta+1)`-clique to every
/// vertex of `N(C) ∩ X` that has none yet and add `N(C) ∩ X` to `H`.
pub fn rule2_force_neighborhoods<S: Scalar>(core: &Graph, partition: &Partition, params: &Params<S>) -> Result<Rule2Result> {
    let threshold = params.rule2_threshold();
    let components = core.components_of(&partition.r);
    let mut h = VertexSet::new();
    let mut applications = Vec::new();
    loop {
        let mut fired = false;
        for c in &components {
            let forced = core.neighborhood(c)?.intersection(&partition.x);
            if forced.difference(&h).len() > threshold {
                let new_gadgets = forced.difference(&h);
                h = h.union(&forced);
                applications.push(Rule2Application { component: c.clone(), forced, new_gadgets });
                fired = true;
                break;
            }
        }
        if !fired {
            break;
        }
    }
    let eta = params.eta;
    let mut next = core.n();
    let mut edges = Vec::new();
    let mut gadgets = BTreeMap::new();
    for u in h.iter() {
        let fresh: Vec<Vertex> = (next..next + eta).collect();
        next += eta;
        for (i, &a) in fresh.iter().enumerate() {
            edges.push((u, a));
            for &b in &fresh[i + 1..] {
                edges.push((a, b));
            }
        }
        let mut clique = VertexSet::from(fresh);
        clique.insert(u);
        gadgets.insert(u, clique);
    }
    let working = core.extended(next - core.n(), &edges)?;
    Ok(Rule2Result { h, gadgets, applications, working })
}

/// Shared view for the marking rules: components of `g1[R \ M]` and their
/// neighbourhoods in `g1 - M`.
pub struct Marker<'a, S: Scalar> {
    pub g1: &'a Graph,
    pub partition: &'a Partition,
    pub h: &'a VertexSet,
    pub params: &'a Params<S>,
    pub marked: VertexSet,
    solver: TreedepthSolver<'a>,
}

impl<'a, S: Scalar> Marker<'a, S> {
    pub fn new(g1: &'a Graph, partition: &'a Partition, h: &'a VertexSet, params: &'a Params<S>) -> Self {
        Self { g1, partition, h, params, marked: VertexSet::new(), solver: TreedepthSolver::new(g1) }
    }

    fn live_components(&self) -> Vec<VertexSet> {
        self.g1.components_of(&self.partition.r.difference(&self.marked))
    }

    /// `N(D) \ (H ∪ M)`.
    fn separator(&self, d: &VertexSet) -> VertexSet {
        self.g1
            .neighborhood(d)
            .expect("valid set")
            .difference(&self.marked)
            .difference(self.h)
    }

    /// Marks all but the first `keep` members (by minimum id) of the first
    /// class with at least `keep + 1` members.
    fn mark_first_big_class(&mut self, classes: BTreeMap<(VertexSet, usize), Vec<VertexSet>>) -> Option<(VertexSet, usize, usize, VertexSet)> {
        let keep = self.params.keep();
        for ((t, depth), members) in classes {
            if members.len() > keep {
                let marked: VertexSet = members[keep..].iter().flat_map(|c| c.iter()).collect();
                self.marked = self.marked.union(&marked);
                return Some((t, depth, members.len(), marked));
            }
        }
        None
    }

    /// One Rule 3 marking step over the classes `(N(C) \ H, td(C))`.
    pub fn rule3_step(&mut self) -> Option<RuleEvent> {
        let mut classes: BTreeMap<(VertexSet, usize), Vec<VertexSet>> = BTreeMap::new();
        for c in self.live_components() {
            let key = (self.separator(&c), self.solver.treedepth_of(&c));
            classes.entry(key).or_default().push(c);
        }
        self.mark_first_big_class(classes)
            .map(|(separator, depth, class_size, marked)| RuleEvent::Rule3 { separator, depth, class_size, marked })
    }

    /// One Rule 4 marking step: inside a live component `C` with its
    /// decomposition `Y_C`, for each `U = UClos({v})`, classify the
    /// components `D` of `C - U` that see all of `U` by
    /// `(N(D) \ H, td(D))`.
    pub fn rule4_step(&mut self) -> Option<RuleEvent> {
        let eta = self.params.eta;
        for c in self.live_components() {
            let forest = self
                .solver
                .decompose(&c, eta)
                .expect("components of R have treedepth at most eta");
            let mut seen = BTreeSet::new();
            for v in c.iter() {
                let u = forest.upward_closure(&VertexSet::singleton(v)).expect("v in forest");
                if !seen.insert(u.clone()) {
                    continue;
                }
                let mut classes: BTreeMap<(VertexSet, usize), Vec<VertexSet>> = BTreeMap::new();
                for d in self.g1.components_of(&c.difference(&u)) {
                    let t = self.separator(&d);
                    if t.intersection(&c) != u {
                        continue;
                    }
                    let depth = self.solver.treedepth_of(&d);
                    classes.entry((t, depth)).or_default().push(d);
                }
                if let Some((separator, depth, class_size, marked)) = self.mark_first_big_class(classes) {
                    return Some(RuleEvent::Rule4 { host: c.clone(), separator, depth, class_size, marked });
                }
            }
        }
        None
    }

    /// Rule 3 to saturation, then Rule 4 to saturation, repeated until
    /// neither fires.
    pub fn saturate(&mut self) -> Vec<RuleEvent> {
        let mut events = Vec::new();
        loop {
            let before = events.len();
            while let Some(e) = self.rule3_step() {
                events.push(e);
            }
            while let Some(e) = self.rule4_step() {
                events.push(e);
            }
            if events.len() == before {
                return events;
            }
        }
    }
}

/// Connector harvest: vertices of every small Steiner tree for terminal sets
/// of at most `t` unmarked vertices, computed in the full working graph.
pub fn build_connector_set<S: Scalar>(g1: &Graph, marked: &VertexSet, params: &Params<S>) -> Result<VertexSet> {
    let candidates = g1.all().difference(marked);
    harvest_connectors(g1, &candidates, params.t_usize(), params.budget())
}

/// Runs the whole reduction.
pub fn reduce<S: Scalar>(g: &Graph, params: &Params<S>) -> Result<KernelState<S>> {
    let eta = params.eta;
    let k = params.k;
    let mut trace = Vec::new();

    let heavy = heavy_components(g, eta);
    if heavy.len() >= 2 {
        trace.push(RuleEvent::TwoHeavyComponents { components: heavy });
        let (no, k1) = emit_no_instance(eta);
        return Ok(KernelState::early(params, g, Outcome::NoInstance, no, k1, trace));
    }
    if params.passes_through(g.n()) {
        trace.push(RuleEvent::SizeGate { n: g.n() });
        return Ok(KernelState::early(params, g, Outcome::PassThrough, g.clone(), k, trace));
    }

    let r1 = rule1_drop_low_td_components(g, eta);
    debug_assert!(!r1.no_solution);
    if !r1.dropped.is_empty() {
        trace.push(RuleEvent::Rule1 { dropped: r1.dropped.clone() });
    }
    let core = r1.graph;
    if core.is_empty() {
        let mut state = KernelState::early(params, g, Outcome::Empty, Graph::empty(0), k, trace);
        state.core = core.clone();
        state.working = core;
        return Ok(state);
    }

    let partition = match decompose(&core, params)? {
        Decomposition::Partition(p) => p,
        Decomposition::Infeasible { obstructions } => {
            trace.push(RuleEvent::Infeasible { obstructions: obstructions.len() });
            let (no, k1) = emit_no_instance(eta);
            let mut state = KernelState::early(params, g, Outcome::NoInstance, no, k1, trace);
            state.core = core.clone();
            state.working = core;
            return Ok(state);
        }
    };

    let r2 = rule2_force_neighborhoods(&core, &partition, params)?;
    for a in &r2.applications {
        trace.push(RuleEvent::Rule2 {
            component: a.component.clone(),
            forced: a.forced.clone(),
            new_gadgets: a.new_gadgets.clone(),
        });
    }
    let working = r2.working;

    let mut marker = Marker::new(&working, &partition, &r2.h, params);
    trace.extend(marker.saturate());
    let marked = marker.marked;

    let connectors = build_connector_set(&working, &marked, params)?;
    let removed = marked.difference(&connectors);
    trace.push(RuleEvent::Connectors {
        harvested: connectors.len(),
        restored: marked.intersection(&connectors).len(),
    });
    let (reduced, reduced_to_working) = working.without(&removed)?;

    Ok(KernelState {
        params: params.clone(),
        outcome: Outcome::Reduced,
        original: g.clone(),
        core,
        working,
        partition: Some(partition),
        h: r2.h,
        gadgets: r2.gadgets,
        rule2: r2.applications,
        marked,
        connectors,
        reduced,
        reduced_to_working,
        k_reduced: k,
        trace,
    })
}

/// Checks the structural invariants of a finished state; returns the list
/// of violations.
pub fn check_state<S: Scalar>(state: &KernelState<S>) -> Vec<String> {
    let mut errors = Vec::new();
    let eta = state.params.eta;
    if state.outcome != Outcome::Reduced {
        if state.outcome == Outcome::PassThrough && state.reduced != state.original {
            errors.push("pass-through must output the input".into());
        }
        return errors;
    }
    let Some(p) = &state.partition else {
        return vec!["reduced state without partition".into()];
    };
    if !state.h.is_subset(&p.x) {
        errors.push("H is not inside X".into());
    }
    let core_n = state.core.n();
    for u in state.h.iter() {
        match state.gadgets.get(&u) {
            None => errors.push(format!("forced vertex {u} has no gadget")),
            Some(j) => {
                let interior = j.difference(&VertexSet::singleton(u));
                let fine = j.len() == eta + 1
                    && j.contains(u)
                    && interior.iter().all(|w| w >= core_n)
                    && state.working.neighborhood(&interior).ok() == Some(VertexSet::singleton(u))
                    && j.iter().all(|a| j.iter().all(|b| a == b || state.working.has_edge(a, b)));
                if !fine {
                    errors.push(format!("gadget at {u} is malformed"));
                }
            }
        }
    }
    if !state.marked.is_subset(&p.r) {
        errors.push("M is not inside R".into());
    }
    // After Rule 2: every component of g1[R] sees at most d + eta vertices
    // of X \ H and at most d + 2 eta vertices outside H.
    for c in state.working.components_of(&p.r) {
        let nb = state.working.neighborhood(&c).expect("valid");
        let outside_h = nb.difference(&state.h);
        if outside_h.intersection(&p.x).len() > state.params.rule2_threshold() {
            errors.push(format!("component {c:?} still triggers Rule 2"));
        }
        if outside_h.len() > state.params.d_usize() + 2 * eta {
            errors.push(format!("component {c:?} has more than d + 2 eta neighbours outside H"));
        }
    }
    let expected: VertexSet = state.working.all().difference(&state.removed());
    let kept: VertexSet = state.reduced_to_working.iter().copied().collect();
    if kept != expected {
        errors.push("reduced graph is not g1 - (M \\ N)".into());
    }
    match state.working.induced_subgraph(&expected) {
        Ok((sub, _)) if sub == state.reduced => {}
        _ => errors.push("reduced graph is not an induced subgraph of g1".into()),
    }
    if state.k_reduced != state.params.k {
        errors.push("k changed".into());
    }
    errors
}

pub fn require_valid<S: Scalar>(state: &KernelState<S>) -> Result<()> {
    let errors = check_state(state);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition(errors.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::{Rational, Scalar};

    fn custom(eta: usize, k: usize, d: u64, lambda: u64) -> Params<Rational> {
        Params::custom(eta, Rational::parse_scalar("1").unwrap(), k, d, lambda, 2).unwrap()
    }

    #[test]
    fn rule1_examples() {
        let g = disjoint_union(&complete(3), &path(2));
        assert!(rule1_drop_low_td_components(&g, 1).no_solution);
        let g = disjoint_union(&complete(3), &Graph::empty(1));
        let r = rule1_drop_low_td_components(&g, 1);
        assert!(!r.no_solution);
        assert_eq!(r.graph.n(), 3);
        assert_eq!(r.graph.origin(2), Some(2));
        let r = rule1_drop_low_td_components(&complete(3), 1);
        assert_eq!(r.graph, complete(3));
        assert!(r.dropped.is_empty());
    }

    #[test]
    fn no_instance_shapes() {
        let (g, k) = emit_no_instance(1);
        assert_eq!((g.n(), g.m(), k), (6, 6, 1));
        let (g, _) = emit_no_instance(2);
        assert_eq!((g.n(), g.m()), (8, 12));
    }

    #[test]
    fn default_profile_passes_small_graphs() {
        let p = Params::paper(1, Rational::parse_scalar("1").unwrap(), 3).unwrap();
        let g = cycle(5);
        let s = reduce(&g, &p).unwrap();
        assert_eq!(s.outcome, Outcome::PassThrough);
        assert_eq!(s.reduced, g);
        assert!(check_state(&s).is_empty());
    }

    #[test]
    fn two_heavy_components_give_no_instance() {
        let g = disjoint_union(&complete(3), &complete(3));
        let s = reduce(&g, &custom(1, 3, 2, 2)).unwrap();
        assert_eq!(s.outcome, Outcome::NoInstance);
        assert_eq!((s.reduced.n(), s.k_reduced), (6, 1));
    }

    /// Satellites 0..4 see every hub of the path 4-5-6-7.
    fn satellites(count: usize) -> Graph {
        let hubs = count..count + 4;
        let mut edges: Vec<_> = hubs.clone().zip(hubs.clone().skip(1)).collect();
        for s in 0..count {
            edges.extend(hubs.clone().map(|h| (s, h)));
        }
        Graph::from_edges(count + 4, &edges).unwrap()
    }

    #[test]
    fn rule2_pendant_gadgets() {
        let g = satellites(4);
        let p = custom(1, 2, 2, 2);
        let part = match decompose(&g, &p).unwrap() {
            Decomposition::Partition(p) => p,
            _ => panic!("feasible"),
        };
        assert_eq!(part.x, VertexSet::from([4, 5, 6, 7]));
        assert!(part.z.is_empty());
        let r2 = rule2_force_neighborhoods(&g, &part, &p).unwrap();
        assert_eq!(r2.applications.len(), 1);
        assert_eq!(r2.h, part.x);
        assert_eq!(r2.working.n(), 12);
        for (u, j) in &r2.gadgets {
            assert_eq!(j.len(), 2);
            assert!(j.contains(*u));
        }
        // a second satellite no longer triggers: everything it sees is in H
        assert!(r2.applications[0].component == VertexSet::singleton(0));
    }

    #[test]
    fn rule2_quiet_below_threshold() {
        let g = satellites(4);
        let p = custom(1, 2, 3, 2);
        let Decomposition::Partition(part) = decompose(&g, &p).unwrap() else { panic!() };
        let r2 = rule2_force_neighborhoods(&g, &part, &p).unwrap();
        assert!(r2.h.is_empty());
        assert_eq!(r2.working, g);
    }

    #[test]
    fn rule3_marks_extra_isolated_components() {
        // eta = 1, lambda = 1: keep 3 of the 4 leaves left in R.
        // Heavy part: triangle {0, 1, 2} with leaves 3..7 on vertex 2.
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7)];
        let g = Graph::from_edges(8, &edges).unwrap();
        let p = custom(1, 3, 2, 1);
        let s = reduce(&g, &p).unwrap();
        assert_eq!(s.outcome, Outcome::Reduced);
        let part = s.partition.as_ref().unwrap();
        assert_eq!(part.x, VertexSet::from([0, 1, 2, 7]));
        assert_eq!(s.counts().rule3, 1);
        assert_eq!(s.marked, VertexSet::singleton(6));
        assert_eq!(s.removed(), VertexSet::singleton(6));
        assert_eq!(s.reduced.n(), 7);
        assert!(check_state(&s).is_empty(), "{:?}", check_state(&s));
    }

    #[test]
    fn rule4_marks_broom_branches() {
        // centre 12 with six two-vertex legs (0..12), head K4 on 13..17.
        let mut edges = vec![];
        for leg in 0..6 {
            edges.push((2 * leg, 2 * leg + 1));
            edges.push((2 * leg, 12));
        }
        edges.push((12, 13));
        for a in 13..17 {
            for b in a + 1..17 {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(17, &edges).unwrap();
        let p = custom(3, 2, 2, 1);
        let s = reduce(&g, &p).unwrap();
        let part = s.partition.as_ref().unwrap();
        assert_eq!(part.x, VertexSet::from([13, 14, 15, 16]));
        assert_eq!(s.counts().rule4, 1);
        assert_eq!(s.marked, VertexSet::from([10, 11]));
        assert!(check_state(&s).is_empty(), "{:?}", check_state(&s));
    }

    #[test]
    fn determinism() {
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7)];
        let g = Graph::from_edges(8, &edges).unwrap();
        let p = custom(1, 3, 2, 1);
        assert_eq!(reduce(&g, &p).unwrap(), reduce(&g, &p).unwrap());
    }
}

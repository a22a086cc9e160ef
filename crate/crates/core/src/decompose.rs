//! The `X ⊎ Z ⊎ R` partition and the obstruction-based deletion-set
//! approximation it starts from.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::min_vertex_cut_in;
use crate::graph::{Graph, VertexSet};
use crate::params::Params;
use crate::scalar::Scalar;
use crate::treedepth::{TdDecomposition, TreedepthSolver};

/// Output of the obstruction loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionSet {
    /// Union of the extracted obstructions.
    pub x: VertexSet,
    /// Pairwise disjoint minimal vertex sets inducing treedepth `> eta`,
    /// in extraction order.
    pub obstructions: Vec<VertexSet>,
}

impl DeletionSet {
    /// Every solution meets every obstruction, so the number of obstructions
    /// lower-bounds the optimum.
    pub fn lower_bound(&self) -> usize {
        self.obstructions.len()
    }

    pub fn largest_obstruction(&self) -> usize {
        self.obstructions.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// Repeatedly takes the first component (by minimum id) of `g - X` with
/// treedepth above `eta`, shrinks it to a minimal obstruction by deleting
/// vertices in ascending id order while the treedepth stays above `eta`, and
/// adds the obstruction to `X`.
pub fn approx_td_deletion(g: &Graph, eta: usize) -> DeletionSet {
    approx_with_limit(g, eta, usize::MAX)
}

fn approx_with_limit(g: &Graph, eta: usize, max_obstructions: usize) -> DeletionSet {
    let mut solver = TreedepthSolver::new(g);
    let mut x = VertexSet::new();
    let mut obstructions = Vec::new();
    while obstructions.len() <= max_obstructions {
        let rest = g.all().difference(&x);
        let Some(comp) = g.components_of(&rest).into_iter().find(|c| !solver.at_most(c, eta)) else {
            break;
        };
        let mut current = comp.clone();
        for v in comp.iter() {
            let smaller = current.difference(&VertexSet::singleton(v));
            if !solver.at_most(&smaller, eta) {
                current = smaller;
            }
        }
        x = x.union(&current);
        obstructions.push(current);
    }
    DeletionSet { x, obstructions }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub x: VertexSet,
    pub z: VertexSet,
    pub r: VertexSet,
    /// Treedepth decomposition of `g - X`, indexed by the ids of `g`;
    /// vertices of `X` are absent.
    pub forest: TdDecomposition,
    pub obstructions: Vec<VertexSet>,
}

impl Partition {
    pub fn xz(&self) -> VertexSet {
        self.x.union(&self.z)
    }

    /// `X: ...`, `Z: ...`, `R: ...` on three lines.
    pub fn to_text(&self) -> String {
        format!("X: {}\nZ: {}\nR: {}\n", self.x, self.z, self.r)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decomposition {
    Partition(Partition),
    /// More than `k` disjoint obstructions: no deletion set of size `k`.
    Infeasible { obstructions: Vec<VertexSet> },
}

/// Builds the partition for a connected graph.
///
/// `Z` collects, for every non-adjacent pair `x < y` of `X`, the upward
/// closure of a minimum `x`–`y` vertex cut `Q` computed in
/// `g[(V \ X) ∪ {x, y}]`, whenever `|Q| <= k + eta`.
pub fn decompose<S: Scalar>(g: &Graph, params: &Params<S>) -> Result<Decomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let eta = params.eta;
    let k = params.k;
    let del = approx_with_limit(g, eta, k);
    if del.obstructions.len() > k {
        return Ok(Decomposition::Infeasible { obstructions: del.obstructions });
    }
    let x = del.x;
    let rest = g.all().difference(&x);
    let forest = TreedepthSolver::new(g)
        .decompose(&rest, eta)
        .expect("the obstruction loop leaves treedepth at most eta");

    let mut allowed = rest.mask(g.n());
    let mut z = VertexSet::new();
    let xs = x.as_slice();
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            if g.has_edge(a, b) {
                continue;
            }
            allowed[a] = true;
            allowed[b] = true;
            let cut = min_vertex_cut_in(g, a, b, &allowed)?;
            allowed[a] = false;
            allowed[b] = false;
            if cut.len() <= k + eta {
                z = z.union(&forest.upward_closure(&cut)?);
            }
        }
    }
    let r = rest.difference(&z);
    Ok(Decomposition::Partition(Partition { x, z, r, forest, obstructions: del.obstructions }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub partition: Check,
    /// `td(g - X) <= eta` and `|X| <= k 2^(2^(eta-1))`.
    pub property1: Check,
    /// `|Z| <= eta (k + eta) |X|^2`.
    pub property2: Check,
    /// Every component of `g[R]` has at most `eta` neighbours in `Z`.
    pub property3: Check,
}

impl PartitionReport {
    pub fn all_pass(&self) -> bool {
        self.partition.pass && self.property1.pass && self.property2.pass && self.property3.pass
    }
}

/// Largest possible minimal obstruction for treedepth `eta`: `2^(2^(eta-1))`.
pub fn obstruction_size_bound(eta: usize) -> usize {
    let inner = 1u32.checked_shl(eta.saturating_sub(1) as u32).unwrap_or(u32::MAX);
    1usize.checked_shl(inner).unwrap_or(usize::MAX)
}

pub fn verify_partition<S: Scalar>(g: &Graph, params: &Params<S>, p: &Partition) -> PartitionReport {
    let (eta, k) = (params.eta, params.k);
    let n = g.n();
    let sizes = p.x.len() + p.z.len() + p.r.len();
    let union = p.x.union(&p.z).union(&p.r);
    let partition_ok = sizes == n && union == g.all();
    let partition = Check::new(partition_ok, format!("|X|+|Z|+|R| = {sizes}, n = {n}"));

    let td_ok = TreedepthSolver::new(g).at_most(&g.all().difference(&p.x), eta);
    let x_bound = k.saturating_mul(obstruction_size_bound(eta));
    let property1 = Check::new(
        td_ok && p.x.len() <= x_bound,
        format!("td(g-X) <= {eta}: {td_ok}; |X| = {} <= {x_bound}", p.x.len()),
    );

    let z_bound = eta
        .saturating_mul(k + eta)
        .saturating_mul(p.x.len().saturating_mul(p.x.len()));
    let property2 = Check::new(p.z.len() <= z_bound, format!("|Z| = {} <= {z_bound}", p.z.len()));

    let worst = g
        .components_of(&p.r)
        .iter()
        .map(|c| g.neighborhood(c).map_or(usize::MAX, |nb| nb.intersection(&p.z).len()))
        .max()
        .unwrap_or(0);
    let property3 = Check::new(worst <= eta, format!("max |N(C) ∩ Z| = {worst}"));
    PartitionReport { partition, property1, property2, property3 }
}

/// Whether every component `C` of `g[R]` has `|(N(C) ∩ X) \ S| <= eta`.
pub fn property4_holds(g: &Graph, eta: usize, p: &Partition, s: &VertexSet) -> bool {
    g.components_of(&p.r).iter().all(|c| {
        let nb = g.neighborhood(c).expect("components are valid");
        nb.intersection(&p.x).difference(s).len() <= eta
    })
}

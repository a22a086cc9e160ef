//! Experiment driver: generate → kernelize → oracle → lift → verify, with
//! every invariant evaluated per instance.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tdkernel::decompose::{property4_holds, verify_partition};
use tdkernel::kernel::{check_state, heavy_components, reduce, Outcome};
use tdkernel::lift::{is_nice, lift, make_nice, nice_growth_bound, strip_gadgets, SolutionKind};
use tdkernel::oracle::{enumerate_tds, opt_ctds, optimal_ctds};
use tdkernel::treedepth::TreedepthSolver;
use tdkernel::{
    verify_ctds, Error, ExactKernelState, ExactParams, Graph, Profile, Rational, Result, Scalar, Vertex, VertexSet,
};

use crate::generate::{generate, Family, GeneratorSpec};

/// Oracles run only on graphs up to this many vertices ...
pub const ORACLE_VERTICES: usize = 22;
/// ... and when the number of candidate sets stays below this.
pub const ORACLE_SUBSETS: u128 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Which invariant suites to evaluate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Toggles {
    pub partition: bool,
    pub property4: bool,
    pub forcing: bool,
    pub rule2_claim1: bool,
    pub rule2_cost: bool,
    pub marking: bool,
    pub nice: bool,
    pub lifting: bool,
}

impl Default for Toggles {
    fn default() -> Self {
        Self {
            partition: true,
            property4: true,
            forcing: true,
            rule2_claim1: true,
            rule2_cost: true,
            marking: true,
            nice: true,
            lifting: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub id: usize,
    pub generator: GeneratorSpec,
    pub eta: usize,
    /// Exact decimal or fraction, e.g. `1` or `1/2`.
    pub eps: String,
    pub k: usize,
    pub profile: Profile,
    /// Overrides the profile's default size-gate setting.
    #[serde(default)]
    pub size_gate: Option<bool>,
    #[serde(default)]
    pub checks: Toggles,
}

impl ExperimentConfig {
    pub fn params(&self) -> Result<ExactParams> {
        let eps = Rational::parse_scalar(&self.eps).ok_or_else(|| Error::Params(format!("invalid eps `{}`", self.eps)))?;
        let p = tdkernel::derive_params(self.eta, eps, self.k, self.profile)?;
        Ok(match self.size_gate {
            Some(on) => p.with_size_gate(on),
            None => p,
        })
    }
}

/// One report line. Check columns hold `pass`, `fail` or `skip`; every
/// failure is explained in `notes`, prefixed by the name of the property.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub id: usize,
    pub family: String,
    pub seed: u64,
    pub eta: usize,
    pub k: usize,
    pub profile: String,
    pub n: usize,
    pub m: usize,
    pub outcome: String,
    pub reduced_n: usize,
    pub reduced_m: usize,
    pub h: usize,
    pub marked: usize,
    pub connectors: usize,
    pub rule1: usize,
    pub rule2: usize,
    pub rule3: usize,
    pub rule4: usize,
    pub opt_g: Option<usize>,
    pub opt_reduced: Option<usize>,
    pub lifted_kind: String,
    pub lifted_value: Option<usize>,
    /// Worst `value(lift) / OPT(g)` over the oracle-optimal reduced solutions.
    pub ratio: String,
    pub ratio_bound: String,
    pub state: Status,
    pub partition: Status,
    pub property4: Status,
    pub forcing: Status,
    pub rule2_claim1: Status,
    pub rule2_cost: Status,
    pub marking: Status,
    pub nice: Status,
    pub lifting: Status,
    pub ratio_check: Status,
    /// Violating classes repaired by the nice step, summed over the lifted solutions.
    pub nice_repairs: usize,
    pub notes: String,
    pub error: String,
}

impl Row {
    fn blank(cfg: &ExperimentConfig) -> Self {
        Row {
            id: cfg.id,
            family: cfg.generator.family.name().to_string(),
            seed: cfg.generator.seed,
            eta: cfg.eta,
            k: cfg.k,
            profile: match cfg.profile {
                Profile::Paper => "paper".into(),
                Profile::Custom { d, lambda, t } => format!("custom d={d} lambda={lambda} t={t}"),
            },
            n: 0,
            m: 0,
            outcome: String::new(),
            reduced_n: 0,
            reduced_m: 0,
            h: 0,
            marked: 0,
            connectors: 0,
            rule1: 0,
            rule2: 0,
            rule3: 0,
            rule4: 0,
            opt_g: None,
            opt_reduced: None,
            lifted_kind: String::new(),
            lifted_value: None,
            ratio: String::new(),
            ratio_bound: String::new(),
            state: Status::Skip,
            partition: Status::Skip,
            property4: Status::Skip,
            forcing: Status::Skip,
            rule2_claim1: Status::Skip,
            rule2_cost: Status::Skip,
            marking: Status::Skip,
            nice: Status::Skip,
            lifting: Status::Skip,
            ratio_check: Status::Skip,
            nice_repairs: 0,
            notes: String::new(),
            error: String::new(),
        }
    }

    pub fn statuses(&self) -> [(&'static str, Status); 10] {
        [
            ("state", self.state),
            ("partition", self.partition),
            ("property4", self.property4),
            ("forcing", self.forcing),
            ("rule2_claim1", self.rule2_claim1),
            ("rule2_cost", self.rule2_cost),
            ("marking", self.marking),
            ("nice", self.nice),
            ("lifting", self.lifting),
            ("ratio_check", self.ratio_check),
        ]
    }

    pub fn failed(&self) -> bool {
        !self.error.is_empty() || self.statuses().iter().any(|(_, s)| *s == Status::Fail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<Row>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| !r.failed())
    }

    /// `(pass, fail, skip)` counts for one check column.
    pub fn tally(&self, column: &str) -> (usize, usize, usize) {
        let mut t = (0, 0, 0);
        for r in &self.rows {
            if let Some((_, s)) = r.statuses().into_iter().find(|(c, _)| *c == column) {
                match s {
                    Status::Pass => t.0 += 1,
                    Status::Fail => t.1 += 1,
                    Status::Skip => t.2 += 1,
                }
            }
        }
        t
    }
}

struct Check {
    status: Status,
    note: Option<String>,
}

impl Check {
    fn pass() -> Self {
        Check { status: Status::Pass, note: None }
    }

    fn skip() -> Self {
        Check { status: Status::Skip, note: None }
    }

    fn fail(lemma: &str, detail: impl Into<String>) -> Self {
        Check { status: Status::Fail, note: Some(format!("{lemma}: {}", detail.into())) }
    }

    fn of(ok: bool, lemma: &str, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(lemma, detail())
        }
    }
}

fn binomial_prefix(n: usize, k: usize) -> u128 {
    let mut total = 0u128;
    let mut c = 1u128;
    for i in 0..=k.min(n) {
        total += c;
        c = c * (n - i) as u128 / (i as u128 + 1);
    }
    total
}

/// Whether the brute-force oracles are affordable on `g` with budget `k`.
pub fn oracle_feasible(g: &Graph, k: usize) -> bool {
    g.n() <= ORACLE_VERTICES && binomial_prefix(g.n(), k) <= ORACLE_SUBSETS
}

/// Runs the whole pipeline on one configuration. Stage errors end up in
/// `error`; they never abort a suite.
pub fn run_experiment(cfg: &ExperimentConfig) -> Row {
    let mut row = Row::blank(cfg);
    if let Err(e) = run_into(cfg, &mut row) {
        row.error = e.to_string();
    }
    row
}

pub fn run_suite(configs: &[ExperimentConfig]) -> Report {
    let mut rows: Vec<Row> = configs.par_iter().map(run_experiment).collect();
    rows.sort_by_key(|r| r.id);
    Report { rows }
}

fn run_into(cfg: &ExperimentConfig, row: &mut Row) -> Result<()> {
    let params = cfg.params()?;
    let g = generate(&cfg.generator, cfg.eta)?;
    row.n = g.n();
    row.m = g.m();
    let state = reduce(&g, &params)?;
    row.outcome = format!("{:?}", state.outcome).to_lowercase();
    row.reduced_n = state.reduced.n();
    row.reduced_m = state.reduced.m();
    row.h = state.h.len();
    row.marked = state.marked.len();
    row.connectors = state.connectors.len();
    let counts = state.counts();
    (row.rule1, row.rule2, row.rule3, row.rule4) = (counts.rule1, counts.rule2, counts.rule3, counts.rule4);
    row.ratio_bound = params.ratio_bound().to_string();

    let mut notes = Vec::new();
    let mut record = |slot: &mut Status, check: Check| {
        *slot = check.status;
        notes.extend(check.note);
    };

    let errors = check_state(&state);
    record(&mut row.state, Check::of(errors.is_empty(), "kernel state", || errors.join("; ")));
    let t = &cfg.checks;
    if t.partition {
        record(&mut row.partition, check_partition(&state));
    }
    if t.property4 {
        record(&mut row.property4, check_property4(&state)?);
    }
    if t.forcing {
        record(&mut row.forcing, check_forcing(&state)?);
    }
    if t.rule2_claim1 {
        record(&mut row.rule2_claim1, check_rule2_claim1(&state)?);
    }
    if t.rule2_cost {
        record(&mut row.rule2_cost, check_rule2_cost(&state)?);
    }
    if t.marking {
        record(&mut row.marking, check_marking(&state)?);
    }

    let k = params.k;
    let eta = params.eta;
    let opt_g = oracle_feasible(&g, k).then(|| opt_ctds(&g, k, eta, false)).transpose()?;
    row.opt_g = opt_g.as_ref().map(|r| r.opt_value);
    // Every feasible reduced solution feeds the nice step; the optimal ones
    // (a prefix, by size) feed the lifting checks.
    let feasible = if oracle_feasible(&state.reduced, state.k_reduced) {
        Some(enumerate_tds(&state.reduced, state.k_reduced, eta, true)?)
    } else {
        None
    };
    if let Some(feasible) = &feasible {
        let best = feasible.first().map_or(state.k_reduced + 1, VertexSet::len);
        row.opt_reduced = Some(best);
        let solutions: Vec<VertexSet> = feasible.iter().take_while(|s| s.len() == best).cloned().collect();
        let solutions = &solutions;
        if t.nice {
            let (check, repairs) = check_nice(&state, feasible)?;
            row.nice_repairs = repairs;
            record(&mut row.nice, check);
        }
        if t.lifting {
            let (sound, ratio, summary) = check_lifting(&state, solutions, row.opt_g)?;
            record(&mut row.lifting, sound);
            record(&mut row.ratio_check, ratio);
            if let Some((kind, value, r)) = summary {
                row.lifted_kind = kind.to_string();
                row.lifted_value = Some(value);
                row.ratio = r.map(|q| q.to_string()).unwrap_or_default();
            }
        }
    }
    row.notes = notes.join(" | ");
    Ok(())
}

fn check_partition(state: &ExactKernelState) -> Check {
    let Some(p) = &state.partition else { return Check::skip() };
    let report = verify_partition(&state.core, &state.params, p);
    Check::of(report.all_pass(), "decomposition lemma (properties 1-3)", || {
        format!(
            "{} / {} / {} / {}",
            report.partition.detail, report.property1.detail, report.property2.detail, report.property3.detail
        )
    })
}

fn check_property4(state: &ExactKernelState) -> Result<Check> {
    let Some(p) = &state.partition else { return Ok(Check::skip()) };
    let (eta, k) = (state.params.eta, state.params.k);
    if !oracle_feasible(&state.core, k) {
        return Ok(Check::skip());
    }
    for s in enumerate_tds(&state.core, k, eta, false)? {
        if !property4_holds(&state.core, eta, p, &s) {
            return Ok(Check::fail("decomposition property 4", format!("deletion set {{{s}}}")));
        }
    }
    Ok(Check::pass())
}

fn check_forcing(state: &ExactKernelState) -> Result<Check> {
    if state.rule2.is_empty() || !oracle_feasible(&state.working, state.params.k) {
        return Ok(Check::skip());
    }
    for s in enumerate_tds(&state.working, state.params.k, state.params.eta, true)? {
        if !state.h.is_subset(&s) {
            return Ok(Check::fail("forcing observation", format!("solution {{{s}}} misses part of H {{{}}}", state.h)));
        }
    }
    Ok(Check::pass())
}

fn check_rule2_claim1(state: &ExactKernelState) -> Result<Check> {
    if state.rule2.is_empty() || !oracle_feasible(&state.working, state.params.k) {
        return Ok(Check::skip());
    }
    let eta = state.params.eta;
    for s in enumerate_tds(&state.working, state.params.k, eta, true)? {
        let stripped = strip_gadgets(state, &s)?;
        let mapped = state.working_to_original(&stripped);
        if mapped.len() > s.len() || !verify_ctds(&state.original, &mapped, eta)? {
            return Ok(Check::fail("rule 2 safeness (claim 1)", format!("{{{s}}} strips to {{{mapped}}}")));
        }
    }
    Ok(Check::pass())
}

fn check_rule2_cost(state: &ExactKernelState) -> Result<Check> {
    let (eta, k) = (state.params.eta, state.params.k);
    if state.rule2.is_empty() || !oracle_feasible(&state.working, k) || !oracle_feasible(&state.core, k) {
        return Ok(Check::skip());
    }
    let opt_g1 = opt_ctds(&state.working, k, eta, false)?.opt_value;
    let optimal = optimal_ctds(&state.core, k, eta)?;
    if optimal.is_empty() {
        return Ok(Check::of(opt_g1 == k + 1, "rule 2 cost bound", || {
            format!("OPT(g) > k but OPT(g1) = {opt_g1}")
        }));
    }
    let two_eta = 1usize << eta;
    for s in &optimal {
        let misses: Vec<usize> = state.rule2.iter().map(|a| a.forced.difference(s).len()).collect();
        if let Some(m) = misses.iter().find(|&&m| m > eta) {
            return Ok(Check::fail("rule 2 cost bound", format!("|H_i \\ S*| = {m} > eta for S* = {{{s}}}")));
        }
        let bound = s.len() + two_eta * misses.iter().sum::<usize>();
        if opt_g1 > bound {
            return Ok(Check::fail(
                "rule 2 cost bound",
                format!("OPT(g1) = {opt_g1} > {bound} for S* = {{{s}}}"),
            ));
        }
    }
    Ok(Check::pass())
}

/// Maps `set` (ids of `g`) into the ids of the subgraph described by `map`.
fn localize(map: &[Vertex], n: usize, set: &VertexSet) -> VertexSet {
    let mut back = vec![usize::MAX; n];
    for (i, &v) in map.iter().enumerate() {
        back[v] = i;
    }
    set.iter().filter(|&v| back[v] != usize::MAX).map(|v| back[v]).collect()
}

fn check_marking(state: &ExactKernelState) -> Result<Check> {
    let Some(p) = &state.partition else { return Ok(Check::skip()) };
    let (eta, k) = (state.params.eta, state.params.k);
    let (sub, map) = state.working.without(&state.marked)?;
    if !oracle_feasible(&sub, k) {
        return Ok(Check::skip());
    }
    let n = state.working.n();
    let h = localize(&map, n, &state.h);
    let xz = localize(&map, n, &p.xz());
    let lambda = state.params.lambda_usize();
    let mut solver = TreedepthSolver::new(&state.working);
    for s in enumerate_tds(&sub, k, eta, false)? {
        if !h.is_subset(&s) || !is_nice(&sub, &s, lambda, &h, &xz)? {
            continue;
        }
        let lifted: VertexSet = s.iter().map(|v| map[v]).collect();
        if !solver.at_most(&state.working.all().difference(&lifted), eta) {
            return Ok(Check::fail("marking safeness", format!("nice set {{{lifted}}} is not a deletion set of g1")));
        }
    }
    Ok(Check::pass())
}

fn check_nice(state: &ExactKernelState, solutions: &[VertexSet]) -> Result<(Check, usize)> {
    let Some(p) = &state.partition else { return Ok((Check::skip(), 0)) };
    if state.outcome != Outcome::Reduced {
        return Ok((Check::skip(), 0));
    }
    let mut repairs = 0;
    let eta = state.params.eta;
    let lambda = state.params.lambda_usize();
    let y = state.removed();
    let (sub, map) = state.working.without(&y)?;
    let n = state.working.n();
    let (h, xz) = (localize(&map, n, &state.h), localize(&map, n, &p.xz()));
    let mut ran = false;
    for s in solutions {
        let s_w = state.to_working(s)?;
        if !state.h.is_subset(&s_w) {
            continue;
        }
        ran = true;
        let out = make_nice(&state.working, &y, &s_w, lambda, &state.h, &p.xz())?;
        repairs += out.repaired;
        let local = localize(&map, n, &out.set);
        let bound = nice_growth_bound(state.params.d_usize(), eta, out.repaired);
        let problems = [
            (!is_nice(&sub, &local, lambda, &h, &xz)?, "output is not nice"),
            (!verify_ctds(&sub, &local, eta)?, "output is not a connected deletion set"),
            (!s_w.is_subset(&out.set), "output drops input vertices"),
            (out.added > bound, "growth exceeds (d + 2 eta) 2^eta r"),
        ];
        if let Some((_, what)) = problems.iter().find(|(bad, _)| *bad) {
            let detail = format!("{what} (input {{{s_w}}}, r = {}, added {} of {bound})", out.repaired, out.added);
            return Ok((Check::fail("nice-construction lemma", detail), repairs));
        }
    }
    Ok((if ran { Check::pass() } else { Check::skip() }, repairs))
}

type LiftSummary = Option<(SolutionKind, usize, Option<Rational>)>;

fn check_lifting(
    state: &ExactKernelState,
    solutions: &[VertexSet],
    opt_g: Option<usize>,
) -> Result<(Check, Check, LiftSummary)> {
    let eta = state.params.eta;
    let k = state.params.k;
    let g = &state.original;
    // Without a reduced solution the lifter is exercised on an over-budget
    // set, which must come back as the sentinel.
    let inputs: Vec<VertexSet> = if solutions.is_empty() { vec![state.reduced.all()] } else { solutions.to_vec() };
    let bound = state.params.ratio_bound();
    let mut worst: LiftSummary = None;
    let mut sound = Check::pass();
    let mut ratio_ok = if opt_g.is_some() { Check::pass() } else { Check::skip() };
    let heavy = heavy_components(g, eta);
    for s in &inputs {
        let sol = lift(state, s);
        let ok = match sol.kind {
            SolutionKind::Feasible => sol.value == sol.vertices.len() && sol.value <= k && verify_ctds(g, &sol.vertices, eta)?,
            SolutionKind::Sentinel => sol.value == k + 1 && heavy.first() == Some(&sol.vertices),
        };
        if !ok && sound.status == Status::Pass {
            sound = Check::fail("lifting soundness", format!("{{{s}}} lifted to {} {{{}}}", sol.kind, sol.vertices));
        }
        let ratio = match opt_g {
            Some(0) if sol.value > 0 => {
                if ratio_ok.status == Status::Pass {
                    ratio_ok = Check::fail("approximation ratio", format!("OPT is 0 but the lift has value {}", sol.value));
                }
                None
            }
            Some(0) => Some(Rational::one()),
            Some(opt) => Some(Rational::ratio(sol.value as u64, opt as u64)),
            None => None,
        };
        if let Some(r) = &ratio {
            if *r > bound && ratio_ok.status == Status::Pass {
                ratio_ok = Check::fail("approximation ratio", format!("ratio {r} exceeds {bound}"));
            }
        }
        let replace = match &worst {
            None => true,
            Some((_, v, _)) => sol.value > *v,
        };
        if replace {
            worst = Some((sol.kind, sol.value, ratio));
        }
    }
    Ok((sound, ratio_ok, worst))
}

fn custom(d: u64, lambda: u64, t: u64) -> Profile {
    Profile::Custom { d, lambda, t }
}

fn config(id: usize, family: Family, seed: u64, eta: usize, k: usize, profile: Profile) -> ExperimentConfig {
    ExperimentConfig {
        id,
        generator: GeneratorSpec { family, seed },
        eta,
        eps: "1".into(),
        k,
        profile,
        size_gate: None,
        checks: Toggles::default(),
    }
}

/// Names accepted by [`suite`].
pub const SUITES: [&str; 3] = ["safeness-small", "paper-constants", "rule-triggers"];

/// Built-in experiment suites.
pub fn suite(name: &str) -> Result<Vec<ExperimentConfig>> {
    let mut out: Vec<(Family, u64, usize, usize, Profile)> = Vec::new();
    match name {
        "safeness-small" => {
            // Rule 2 (and Rule 3 on the freed pendants) on component soups.
            for seed in 0..20 {
                for (per_class, bridges, k) in [(1, 4, 2), (2, 4, 2), (1, 6, 4), (2, 6, 4)] {
                    let lambda = 1 + seed % 3;
                    out.push((Family::ComponentSoup { classes: 2, per_class, bridges }, seed, 1, k, custom(2, lambda, 2)));
                }
            }
            // A single bridge sits in Z, so solutions may cross a class
            // while missing part of its separator: the nice step has work.
            for seed in 0..6 {
                for (per_class, k) in [(2, 6), (3, 7)] {
                    out.push((Family::ComponentSoup { classes: 2, per_class, bridges: 1 }, seed, 1, k, custom(2, 1, 2)));
                }
            }
            // Rule 3 on leaves hanging off an edge.
            for branches in 3..=9 {
                for lambda in 1..=2 {
                    out.push((Family::SubdividedStar { branches, depth: 1 }, 0, 1, 2, custom(2, lambda, 2)));
                }
            }
            // Rule 4 on brooms.
            for branches in 4..=8 {
                out.push((Family::Broom { branches, depth: 1 }, 0, 2, 2, custom(2, 1, 2)));
            }
            out.push((Family::Broom { branches: 6, depth: 2 }, 0, 3, 2, custom(2, 1, 2)));
            for (rows, cols) in [(2, 3), (3, 3), (2, 5), (3, 4)] {
                out.push((Family::Grid { rows, cols }, 0, 1, 4, custom(2, 2, 2)));
                out.push((Family::Grid { rows, cols }, 0, 2, 3, custom(2, 2, 2)));
            }
            for seed in 0..40 {
                let n = 8 + (seed as usize % 6);
                let eta = 1 + (seed as usize % 2);
                let k = 2 + (seed as usize % 3);
                let density = [0.2, 0.3, 0.4][seed as usize % 3];
                out.push((Family::RandomGnp { n, density }, seed, eta, k, custom(2, 2, 2)));
            }
        }
        "paper-constants" => {
            // Dense enough to be connected, so the size gate is reached.
            for seed in 0..10 {
                out.push((Family::RandomGnp { n: 10, density: 0.5 }, seed, 3, 4, Profile::Paper));
            }
            out.push((Family::ComponentSoup { classes: 2, per_class: 2, bridges: 4 }, 1, 1, 2, Profile::Paper));
            out.push((Family::Broom { branches: 6, depth: 1 }, 0, 2, 2, Profile::Paper));
            out.push((Family::Grid { rows: 3, cols: 3 }, 0, 2, 3, Profile::Paper));
        }
        "rule-triggers" => {
            out.push((Family::ComponentSoup { classes: 2, per_class: 5, bridges: 0 }, 1, 1, 2, custom(2, 2, 2)));
            out.push((Family::ComponentSoup { classes: 2, per_class: 2, bridges: 4 }, 1, 1, 2, custom(2, 2, 2)));
            out.push((Family::SubdividedStar { branches: 6, depth: 1 }, 0, 1, 2, custom(2, 1, 2)));
            out.push((Family::Broom { branches: 6, depth: 2 }, 0, 3, 2, custom(2, 1, 2)));
        }
        other => return Err(Error::Params(format!("unknown suite `{other}` (known: {})", SUITES.join(", ")))),
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(id, (family, seed, eta, k, profile))| config(id, family, seed, eta, k, profile))
        .collect())
}

/// Rows keyed by family, for quick summaries.
pub fn by_family(report: &Report) -> BTreeMap<String, Vec<&Row>> {
    let mut out: BTreeMap<String, Vec<&Row>> = BTreeMap::new();
    for r in &report.rows {
        out.entry(r.family.clone()).or_default().push(r);
    }
    out
}

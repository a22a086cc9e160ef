//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the lines always reach the output.

use std::process::{Command, ExitCode};
use std::time::Instant;

use tdkernel_cli::agreement::{
    diameter_agreement, min_cut_agreement, partition_agreement, steiner_agreement, treedepth_exhaustive,
    treedepth_random, Tally,
};
use tdkernel_cli::experiment::{run_suite, suite, Report, Row, Status};

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_tally(t: &Tally, min_total: usize) -> Outcome {
    Outcome { pass: t.all_agree() && t.total >= min_total, detail: format!("agreement {t}") }
}

/// Rows selected by `filter` must have no failure in `column`, and at least
/// `min_ran` of them must have run the check.
fn from_rows(report: &Report, column: &str, min_ran: usize, filter: impl Fn(&Row) -> bool) -> Outcome {
    let mut ran = 0;
    let mut failures = Vec::new();
    for r in report.rows.iter().filter(|r| filter(r)) {
        let status = r.statuses().into_iter().find(|(c, _)| *c == column).map(|(_, s)| s);
        match status {
            Some(Status::Pass) => ran += 1,
            Some(Status::Fail) => {
                ran += 1;
                failures.push(format!("row {}: {}", r.id, r.notes));
            }
            _ => {}
        }
        if !r.error.is_empty() {
            failures.push(format!("row {} error: {}", r.id, r.error));
        }
    }
    let mut detail = format!("{} checked, {} failed (need >= {min_ran} checked)", ran, failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    Outcome { pass: failures.is_empty() && ran >= min_ran, detail }
}

fn small(r: &Row) -> bool {
    r.n <= 14
}

fn main() -> ExitCode {
    let started = Instant::now();
    let safeness = run_suite(&suite("safeness-small").expect("built-in"));
    let paper = run_suite(&suite("paper-constants").expect("built-in"));
    let triggers = run_suite(&suite("rule-triggers").expect("built-in"));

    let mut criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            "treedepth engine equals the recursive definition",
            Box::new(|| {
                let exhaustive = treedepth_exhaustive(6);
                let random = treedepth_random(1, 500, 12);
                Outcome {
                    pass: exhaustive.all_agree() && random.all_agree() && random.total == 500,
                    detail: format!("all connected n<=6: {exhaustive}; random n<=12: {random}"),
                }
            }),
        ),
        (
            "decomposition properties 1-3 on random instances",
            Box::new(|| from_tally(&partition_agreement(2, 200, 30), 200)),
        ),
        (
            "decomposition property 4 against every small deletion set",
            Box::new(|| from_rows(&safeness, "property4", 100, |r| small(r) && r.k <= 4)),
        ),
        (
            "forcing observation: feasible solutions of g1 contain H",
            Box::new(|| from_rows(&safeness, "forcing", 50, |r| r.rule2 > 0)),
        ),
        (
            "rule 2 safeness (claim 1): stripped solutions stay feasible",
            Box::new(|| from_rows(&safeness, "rule2_claim1", 50, |r| r.rule2 > 0)),
        ),
        (
            "rule 2 cost bound",
            Box::new(|| from_rows(&safeness, "rule2_cost", 50, |r| r.rule2 > 0)),
        ),
        (
            "marking safeness: nice deletion sets of g1 - M work in g1",
            Box::new(|| from_rows(&safeness, "marking", 50, |r| small(r) && r.marked > 0)),
        ),
        (
            "nice construction: nice, connected, superset, bounded growth",
            Box::new(|| {
                let mut o = from_rows(&safeness, "nice", 50, |_| true);
                let repairs: usize = safeness.rows.iter().map(|r| r.nice_repairs).sum();
                o.detail.push_str(&format!("; classes repaired in total: {repairs}"));
                o
            }),
        ),
        (
            "steiner dynamic programme equals enumeration",
            Box::new(|| from_tally(&steiner_agreement(3, 200), 200)),
        ),
        (
            "min vertex cut equals exhaustive separator",
            Box::new(|| from_tally(&min_cut_agreement(4, 200), 200)),
        ),
        (
            "end-to-end lifting soundness and ratio",
            Box::new(|| {
                let reports = [&safeness, &paper, &triggers];
                let sound: Vec<Outcome> = reports.iter().map(|r| from_rows(r, "lifting", 1, |_| true)).collect();
                let ratio: Vec<Outcome> = reports.iter().map(|r| from_rows(r, "ratio_check", 1, |_| true)).collect();
                let paper_identity = paper.rows.iter().all(|r| r.outcome == "passthrough" && r.ratio == "1");
                let worst = reports
                    .iter()
                    .flat_map(|r| r.rows.iter())
                    .filter_map(|r| r.ratio.parse::<tdkernel::Rational>().ok())
                    .max()
                    .map_or("-".to_string(), |q| q.to_string());
                Outcome {
                    pass: sound.iter().chain(&ratio).all(|o| o.pass) && paper_identity,
                    detail: format!(
                        "soundness [{}]; ratio [{}]; default constants pass through with ratio 1: {paper_identity}; worst observed ratio {worst}",
                        sound.iter().map(|o| o.detail.as_str()).collect::<Vec<_>>().join(" | "),
                        ratio.iter().map(|o| o.detail.as_str()).collect::<Vec<_>>().join(" | "),
                    ),
                }
            }),
        ),
        (
            "diameter at most 2^eta when treedepth is at most eta",
            Box::new(|| from_tally(&diameter_agreement(5, 500), 500)),
        ),
        (
            "bench is byte-for-byte deterministic",
            Box::new(|| {
                let run = || {
                    Command::new(env!("CARGO_BIN_EXE_tdkernel"))
                        .args(["bench", "--suite", "safeness-small", "--format", "csv"])
                        .output()
                        .expect("bench runs")
                };
                let (a, b) = (run(), run());
                let same = a.stdout == b.stdout && !a.stdout.is_empty();
                Outcome {
                    pass: same && a.status.success() && b.status.success(),
                    detail: format!(
                        "{} bytes, identical: {same}, exit codes {:?}/{:?}",
                        a.stdout.len(),
                        a.status.code(),
                        b.status.code()
                    ),
                }
            }),
        ),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter_mut().enumerate() {
        let t = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} [{:.1}s] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Report rendering. The CSV header is fixed by the field order of
//! [`Row`]; the table shows a compact subset.

use serde::{Deserialize, Serialize};

use crate::experiment::{Report, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
}

pub const CSV_HEADER: &str = "id,family,seed,eta,k,profile,n,m,outcome,reduced_n,reduced_m,h,marked,connectors,\
rule1,rule2,rule3,rule4,opt_g,opt_reduced,lifted_kind,lifted_value,ratio,ratio_bound,state,partition,property4,\
forcing,rule2_claim1,rule2_cost,marking,nice,lifting,ratio_check,nice_repairs,notes,error";

const TABLE_COLUMNS: [&str; 14] =
    ["id", "family", "eta", "k", "n", "n'", "|H|", "|M|", "|N|", "rules", "OPT", "OPT'", "lift", "checks"];

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Csv => to_csv(report),
        Format::Table => to_table(report),
    }
}

fn to_csv(report: &Report) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in &report.rows {
        w.serialize(row).expect("rows serialize");
    }
    out.push_str(std::str::from_utf8(&w.into_inner().expect("in-memory writer")).expect("utf-8"));
    out
}

pub fn parse_csv(text: &str) -> Result<Report, csv::Error> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let rows = r.deserialize::<Row>().collect::<Result<Vec<_>, _>>()?;
    Ok(Report { rows })
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |x| x.to_string())
}

fn to_table(report: &Report) -> String {
    let mut lines: Vec<Vec<String>> = vec![TABLE_COLUMNS.iter().map(|s| s.to_string()).collect()];
    for r in &report.rows {
        let failed: Vec<&str> =
            r.statuses().iter().filter(|(_, s)| *s == crate::experiment::Status::Fail).map(|(c, _)| *c).collect();
        let checks = if !r.error.is_empty() {
            "error".to_string()
        } else if failed.is_empty() {
            "ok".to_string()
        } else {
            format!("FAIL {}", failed.join(","))
        };
        let lift = match r.lifted_value {
            Some(v) => format!("{} {}", r.lifted_kind, v),
            None => "-".into(),
        };
        lines.push(vec![
            r.id.to_string(),
            r.family.clone(),
            r.eta.to_string(),
            r.k.to_string(),
            r.n.to_string(),
            r.reduced_n.to_string(),
            r.h.to_string(),
            r.marked.to_string(),
            r.connectors.to_string(),
            format!("{}/{}/{}/{}", r.rule1, r.rule2, r.rule3, r.rule4),
            opt(r.opt_g),
            opt(r.opt_reduced),
            lift,
            checks,
        ]);
    }
    let widths: Vec<usize> = (0..TABLE_COLUMNS.len())
        .map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{run_suite, suite};

    #[test]
    fn empty_report_is_header_only() {
        assert_eq!(emit_report(&Report::default(), Format::Csv), format!("{CSV_HEADER}\n"));
        assert_eq!(emit_report(&Report::default(), Format::Table).lines().count(), 1);
    }

    #[test]
    fn csv_round_trip() {
        let report = run_suite(&suite("rule-triggers").unwrap());
        let text = emit_report(&report, Format::Csv);
        assert!(text.starts_with(CSV_HEADER));
        assert_eq!(parse_csv(&text).unwrap(), report);
    }
}

use std::path::Path;
use std::process::{Command, Output};

fn tdkernel(args: &[&str], out_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdkernel"))
        .args(args)
        .env("TDKERNEL_OUT", out_dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("tdkernel-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_kernelize_lift_verify_round_trip() {
    let dir = scratch("flow");
    let gen = tdkernel(
        &["gen", "--family", "subdivided-star", "--branches", "8", "--depth", "1", "--eta", "1", "--out", "g.gr"],
        &dir,
    );
    assert!(gen.status.success(), "{gen:?}");
    let graph = dir.join("g.gr");
    assert!(graph.exists());

    let k = tdkernel(
        &["kernelize", graph.to_str().unwrap(), "--eta", "1", "--k", "2", "--d", "2", "--lambda", "1", "--t", "2"],
        &dir,
    );
    assert!(k.status.success(), "{}", stdout(&k));
    let text = stdout(&k);
    assert!(text.contains("outcome: Reduced"), "{text}");
    assert!(text.contains("guarantee void"));
    assert!(dir.join("reduced.gr").exists() && dir.join("state.json").exists());

    let oracle = tdkernel(&["oracle", dir.join("reduced.gr").to_str().unwrap(), "--eta", "1", "--k", "2"], &dir);
    let text = stdout(&oracle);
    assert!(text.contains("opt: 1"), "{text}");
    let witness = text.lines().find_map(|l| l.strip_prefix("witness: ")).unwrap().to_string();
    std::fs::write(dir.join("s.txt"), format!("{witness}\n")).unwrap();

    let lift = tdkernel(
        &["lift", "--state", dir.join("state.json").to_str().unwrap(), "--solution", dir.join("s.txt").to_str().unwrap()],
        &dir,
    );
    let text = stdout(&lift);
    assert!(text.contains("kind: feasible"), "{text}");
    assert!(text.contains("value: 1"), "{text}");
    let lifted = text.lines().find_map(|l| l.strip_prefix("vertices: ")).unwrap().to_string();
    std::fs::write(dir.join("lifted.txt"), format!("{lifted}\n")).unwrap();

    let ok = tdkernel(
        &["verify", graph.to_str().unwrap(), "--eta", "1", "--k", "2", "--solution", dir.join("lifted.txt").to_str().unwrap()],
        &dir,
    );
    assert!(ok.status.success(), "{}", stdout(&ok));

    std::fs::write(dir.join("bad.txt"), "0\n").unwrap();
    let bad = tdkernel(
        &["verify", graph.to_str().unwrap(), "--eta", "1", "--solution", dir.join("bad.txt").to_str().unwrap()],
        &dir,
    );
    assert_eq!(bad.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bench_writes_report_and_steiner_suite() {
    let dir = scratch("bench");
    let o = tdkernel(&["bench", "--suite", "rule-triggers", "--format", "csv", "--out", "r.csv"], &dir);
    assert!(o.status.success());
    let written = std::fs::read_to_string(dir.join("r.csv")).unwrap();
    assert_eq!(written, stdout(&o));
    assert_eq!(tdkernel_cli::parse_csv(&written).unwrap().rows.len(), 4);

    let s = tdkernel(&["bench", "--suite", "steiner-oracle"], &dir);
    assert!(s.status.success());
    assert!(stdout(&s).contains("agreement 200/200"), "{}", stdout(&s));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn errors_exit_with_code_two() {
    let dir = scratch("err");
    let o = tdkernel(&["bench", "--suite", "nope"], &dir);
    assert_eq!(o.status.code(), Some(2));
    let o = tdkernel(&["oracle", "/nonexistent.gr", "--eta", "1", "--k", "1"], &dir);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

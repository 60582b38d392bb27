use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypercount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(
        o.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

#[test]
fn count_edge_in_k4() {
    let out = ok(&["count", "--mode", "hom", "--l", "0", "--pattern", &fixture("edge.hg"), "--input", &fixture("k4.hg")]);
    assert_eq!(first_line(&out), "12");
    assert!(out.lines().any(|l| l.starts_with("term ")));
}

#[test]
fn count_sub_matches_oracle() {
    let args = ["--pattern", &fixture("c5.hg"), "--input", &fixture("k4.hg")];
    let engine = ok(&[&["count", "--mode", "sub", "--l", "inf"][..], &args].concat());
    let oracle = ok(&[&["oracle", "sub"][..], &args].concat());
    assert_eq!(first_line(&engine), first_line(&oracle));
    let engine = ok(&[&["count", "--mode", "hom", "--l", "1"][..], &args].concat());
    let oracle = ok(&[&["oracle", "hom"][..], &args].concat());
    assert_eq!(first_line(&engine), first_line(&oracle));
}

#[test]
fn count_appends_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("counts.csv");
    let csv = csv.to_str().unwrap();
    for _ in 0..2 {
        ok(&["count", "--l", "0", "--pattern", &fixture("triangle.hg"), "--input", &fixture("k4.hg"), "--csv", csv]);
    }
    let text = std::fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,m,kappa_l,pattern,l,mode,count,millis");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("4,6,3,triangle,0,hom,24,"));
}

#[test]
fn classify_c6_and_c5() {
    let out = ok(&["classify", "--l", "inf", &fixture("c6.hg")]);
    assert!(out.contains("its_free=false"));
    assert!(out.contains("tau=2"));
    assert!(out.contains("witness core"));
    let out = ok(&["classify", "--l", "inf", &fixture("c5.hg")]);
    assert!(out.contains("its_free=true"));
    assert!(out.contains("tau=1"));
    assert!(out.contains("certificate"));
}

#[test]
fn classify_level_sensitive_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("classify.csv");
    let at0 = ok(&["classify", "--l", "0", &fixture("level_sensitive.hg"), "--csv", csv.to_str().unwrap()]);
    assert!(at0.contains("its_free=false") && at0.contains("tau=2"));
    let row = std::fs::read_to_string(&csv).unwrap();
    assert!(row.lines().nth(1).unwrap().starts_with("level_sensitive,0,false,2,"));
    let at1 = ok(&["classify", "--l", "1", &fixture("level_sensitive.hg")]);
    assert!(at1.contains("its_free=true") && at1.contains("tau=1"));
}

#[test]
fn dtw_reports_decomposition() {
    let out = ok(&["dtw", "--l", "inf", &fixture("c6.hg")]);
    assert_eq!(first_line(&out), "tau=2");
    assert!(out.contains("root"));
}

#[test]
fn degeneracy_with_ordering() {
    let out = ok(&["degeneracy", "--l", "0", "--emit-ordering", &fixture("k4.hg")]);
    assert!(out.contains("kappa_l=3"));
    assert!(out.contains("max_l_outdegree=3"));
    assert!(out.contains("ordering 0 1 2 3"));
}

#[test]
fn gen_simplex_and_tensor() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.hg");
    ok(&["gen", "simplex", "--k", "3", "-o", s.to_str().unwrap()]);
    let text = std::fs::read_to_string(&s).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 4);
    let out = ok(&["oracle", "simplex", "--k", "3", "--input", s.to_str().unwrap()]);
    assert_eq!(first_line(&out), "true");

    let t = dir.path().join("t.hg");
    ok(&["gen", "tensor", &fixture("edge.hg"), &fixture("edge.hg"), "-o", t.to_str().unwrap()]);
    let text = std::fs::read_to_string(&t).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 7);
}

#[test]
fn gen_random_is_seeded_and_bounded() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.hg");
    let b = dir.path().join("b.hg");
    for p in [&a, &b] {
        ok(&["gen", "random", "--n", "60", "--m", "120", "--rank", "3", "--degeneracy", "3", "--seed", "9", "-o", p.to_str().unwrap()]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let out = ok(&["degeneracy", "--l", "0", a.to_str().unwrap()]);
    let kappa: usize = out.lines().next().unwrap().trim_start_matches("kappa_l=").parse().unwrap();
    assert!(kappa <= 3);
}

#[test]
fn gen_gadget_preserves_colorful_copy() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("gadget.hg");
    let out = ok(&[
        "gen", "gadget", "--pattern", &fixture("level_sensitive.hg"), "--witness", "auto",
        "--input", &fixture("colored_triangle.hg"), "--l", "0", "-o", g.to_str().unwrap(),
    ]);
    assert!(out.contains("core size 3"));
    let count = ok(&["oracle", "colhom", "--pattern", &fixture("level_sensitive.hg"), "--input", g.to_str().unwrap()]);
    assert!(first_line(&count).parse::<u128>().unwrap() > 0);
}

#[test]
fn gadget_rejects_free_pattern_and_unknown_witness() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("gadget.hg");
    let o = run(&[
        "gen", "gadget", "--pattern", &fixture("c5.hg"), "--input", &fixture("colored_triangle.hg"),
        "--l", "inf", "-o", g.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "gen", "gadget", "--pattern", &fixture("c6.hg"), "--witness", "first", "--input",
        &fixture("colored_triangle.hg"), "-o", g.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_colorful_triangle() {
    let out = ok(&["oracle", "colhom", "--pattern", &fixture("triangle.hg"), "--input", &fixture("colored_triangle.hg")]);
    assert_eq!(first_line(&out), "6");
}

#[test]
fn bench_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let p = dir.path().join(name);
        ok(&["bench", "--sizes", "200,400", "--reps", "2", "--seed", "5", "--csv", p.to_str().unwrap()]);
        let text = std::fs::read_to_string(&p).unwrap();
        let rows: Vec<String> = text
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect();
        bodies.push(rows);
    }
    assert_eq!(bodies[0], bodies[1]);
    assert_eq!(bodies[0].len(), 1 + 2 * 2);
    assert_eq!(bodies[0][0], "n,m,kappa_l,pattern,l,mode,count");
    assert!(bodies[0][1].starts_with("200,600,"));
}

#[test]
fn bench_to_stdout_with_pattern() {
    let out = ok(&["bench", "--pattern", &fixture("triangle.hg"), "--sizes", "100", "--reps", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].contains(",triangle,0,hom,"));
}

#[test]
fn difftest_passes() {
    let out = ok(&["difftest", "--trials", "40", "--seed", "7"]);
    assert!(out.contains("0 mismatches"));
}

#[test]
fn threads_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hypercount"))
        .env("HYPERCOUNT_THREADS", "2")
        .args(["count", "--pattern", &fixture("edge.hg"), "--input", &fixture("k4.hg")])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(first_line(&stdout(&o)), "12");
}

#[test]
fn exit_codes() {
    // parse errors name the line
    let o = run(&["count", "--pattern", &fixture("bad_tag.hg"), "--input", &fixture("k4.hg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = run(&["degeneracy", &fixture("bad_arity.hg")]);
    assert_eq!(o.status.code(), Some(2));
    // bad flag value
    let o = run(&["count", "--l", "x", "--pattern", &fixture("edge.hg"), "--input", &fixture("k4.hg")]);
    assert_eq!(o.status.code(), Some(2));
    // missing file
    let o = run(&["dtw", "/nonexistent/p.hg"]);
    assert_eq!(o.status.code(), Some(2));
    // oracle guard
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.hg");
    ok(&["gen", "random", "--n", "40", "--m", "60", "--degeneracy", "2", "-o", big.to_str().unwrap()]);
    let o = run(&["oracle", "hom", "--pattern", &fixture("c5.hg"), "--input", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

//! End-to-end tests driving the installed binary: spec'd flag combinations,
//! report round-trips, exit codes, and determinism.

use std::process::{Command, Output};

use codepth3::report::{Item, Report};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_codepth3"));
    cmd.env_remove("CODEPTH3_WINDOW");
    cmd
}

fn run_ok(args: &[&str]) -> Report {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).expect("utf8 stdout");
    Report::parse(&text).expect("stdout parses as a report")
}

fn run_raw(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn int_value(rep: &Report, key: &str) -> i64 {
    match rep.get(key) {
        Some(Item::Int { value, .. }) => value.to_string().parse().unwrap(),
        other => panic!("no int {key}: {other:?}"),
    }
}

fn text_value<'a>(rep: &'a Report, key: &str) -> &'a str {
    match rep.get(key) {
        Some(Item::Text { value, .. }) => value,
        other => panic!("no text {key}: {other:?}"),
    }
}

fn flag_value(rep: &Report, key: &str) -> bool {
    match rep.get(key) {
        Some(Item::Flag { value, .. }) => *value,
        other => panic!("no flag {key}: {other:?}"),
    }
}

fn taylor_values(rep: &Report, key: &str) -> (i64, Vec<i64>) {
    match rep.get(key) {
        Some(Item::Taylor { lo, coeffs, .. }) => {
            (*lo, coeffs.iter().map(|c| c.to_string().parse().unwrap()).collect())
        }
        other => panic!("no taylor {key}: {other:?}"),
    }
}

#[test]
fn series_tabulates_class_t() {
    let rep = run_ok(&[
        "series", "--class", "T", "--l", "2", "--n", "2", "--e", "3", "--d", "0", "--window",
        "10",
    ]);
    let Some(Item::Series { num, den, .. }) = rep.get("fg") else { panic!("no fg") };
    let f: Vec<(i64, i64)> =
        num.iter().map(|(e, c)| (*e, c.to_string().parse().unwrap())).collect();
    let g: Vec<(i64, i64)> =
        den.iter().map(|(e, c)| (*e, c.to_string().parse().unwrap())).collect();
    assert_eq!(f, vec![(0, 2), (1, 2), (2, -2), (3, -1), (4, 1)]);
    assert_eq!(g, vec![(0, 1), (1, -1), (2, -2), (3, 1), (5, -1)]);
    let (lo, mu) = taylor_values(&rep, "mu");
    assert_eq!(lo, 0);
    assert_eq!(&mu[..4], &[2, 4, 6, 11]);
    let (_, betti) = taylor_values(&rep, "betti");
    assert_eq!(&betti[..5], &[1, 3, 6, 11, 20]);
    assert_eq!(int_value(&rep, "h"), 1);
    assert!(!flag_value(&rep, "plateau"));
}

#[test]
fn series_complete_intersection_bass_is_a_monomial() {
    let rep = run_ok(&["series", "--class", "C", "--c", "3", "--e", "5", "--d", "2"]);
    let (lo, mu) = taylor_values(&rep, "mu");
    assert_eq!(lo, 0);
    let expected: Vec<i64> = (0..=10).map(|i| i64::from(i == 2)).collect();
    assert_eq!(mu, expected);
    assert_eq!(int_value(&rep, "e"), 5);
    assert_eq!(int_value(&rep, "d"), 2);
}

#[test]
fn series_reports_the_bass_plateau() {
    let rep = run_ok(&[
        "series", "--class", "H", "--p", "2", "--q", "1", "--l", "2", "--n", "1", "--e", "3",
        "--d", "0",
    ]);
    assert!(flag_value(&rep, "plateau"));
    assert_eq!(text_value(&rep, "exception"), "wxwyz");
    let (_, mu) = taylor_values(&rep, "mu");
    assert_eq!(&mu[..6], &[1, 2, 2, 4, 6, 10]);
}

#[test]
fn classify_corpus_matches_pinned_sextuples() {
    let rep = run_ok(&["classify", "--example", "squares3"]);
    assert_eq!(text_value(&rep, "class"), "C(3)");
    assert_eq!(text_value(&rep, "sextuple"), "0,2,1,3,1,3");
    assert!(flag_value(&rep, "gorenstein"));
    assert!(flag_value(&rep, "depth_certified"));

    let rep = run_ok(&["classify", "--example", "wxwy"]);
    assert_eq!(text_value(&rep, "class"), "S");
    assert_eq!(int_value(&rep, "l"), 1);
    assert_eq!(int_value(&rep, "d"), 1);
    assert_eq!(text_value(&rep, "exception_kind"), "wxwy");

    let rep = run_ok(&["classify", "--example", "h21"]);
    assert_eq!(text_value(&rep, "class"), "H(2,1)");
    assert_eq!(int_value(&rep, "n"), 1);
    assert_eq!(text_value(&rep, "exception_kind"), "wxwyz");
}

#[test]
fn classify_reads_presentation_files() {
    let dir = std::env::temp_dir().join("codepth3-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("squares3.ring");
    std::fs::write(&path, "ring v1\nfield 0\nvars 3\ngen 1:2,0,0\ngen 1:0,2,0\ngen 1:0,0,2\n")
        .unwrap();
    let rep = run_ok(&["classify", path.to_str().unwrap()]);
    assert_eq!(text_value(&rep, "class"), "C(3)");
    assert_eq!(text_value(&rep, "sextuple"), "0,2,1,3,1,3");
}

#[test]
fn growth_reports_exception_and_exact_gamma() {
    let rep = run_ok(&["growth", "--class", "S", "--l", "1"]);
    let (lo, mu) = taylor_values(&rep, "mu");
    assert_eq!(lo, 0);
    assert_eq!(&mu[..6], &[1, 2, 2, 4, 6, 10]);
    assert_eq!(text_value(&rep, "steps"), "<=<<<<<<<<<<");
    assert_eq!(text_value(&rep, "exception_kind"), "wxwy");
    match rep.get("gamma") {
        Some(Item::Rational { num, den, .. }) => {
            assert_eq!((num.to_string().as_str(), den.to_string().as_str()), ("3", "2"));
        }
        other => panic!("no gamma: {other:?}"),
    }
    assert_eq!(text_value(&rep, "gamma_label"), "window bound");
}

#[test]
fn verify_runs_one_formula_exactly() {
    let rep = run_ok(&["verify", "--formula", "shift", "--degree", "4"]);
    assert!(flag_value(&rep, "ok"));
    assert!(flag_value(&rep, "shift_ok"));
    assert!(int_value(&rep, "shift_fixtures") >= 10);
    assert_eq!(int_value(&rep, "shift_fixtures"), int_value(&rep, "shift_passes"));
}

#[test]
fn verify_dumps_fixture_structure_constants() {
    let rep = run_ok(&["verify", "--dump-fixture", "table_H21"]);
    let (_, dims) = taylor_values(&rep, "dims");
    assert_eq!(dims, vec![1, 3, 3, 1]);
    assert!(int_value(&rep, "mult_rows") > 0);
    assert!(text_value(&rep, "mult_0000").split(':').count() == 6);
}

#[test]
fn examples_lists_the_whole_corpus() {
    let rep = run_ok(&["examples"]);
    assert_eq!(int_value(&rep, "count"), 9);
    for name in
        ["squares3", "sqcube_l3", "sqcube_l4", "xh_l2", "xh_l3", "wxwy", "h21", "gor5", "golod_w"]
    {
        assert!(rep.get(name).is_some(), "missing example {name}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["series", "--class", "B", "--l", "3", "--n", "2"],
        vec!["classify", "--example", "h21"],
        vec!["examples"],
    ] {
        let a = run_raw(&args);
        let b = run_raw(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?} output changed between runs");
    }
}

#[test]
fn window_env_var_sets_the_default() {
    let out = bin()
        .env("CODEPTH3_WINDOW", "5")
        .args(["series", "--class", "S", "--l", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let rep = Report::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let (_, mu) = taylor_values(&rep, "mu");
    assert_eq!(mu.len(), 6);

    let out = bin()
        .env("CODEPTH3_WINDOW", "5")
        .args(["series", "--class", "S", "--l", "2", "--window", "3"])
        .output()
        .unwrap();
    let rep = Report::parse(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let (_, mu) = taylor_values(&rep, "mu");
    assert_eq!(mu.len(), 4, "explicit flag beats the env var");
}

#[test]
fn input_errors_exit_two() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["classify", "--example", "nosuch"],
        vec!["series", "--class", "T", "--l", "2"],
        vec!["series", "--class", "X", "--l", "2", "--n", "1"],
        vec!["series", "--class", "S", "--l", "2", "--e", "1"],
        vec!["growth", "--class", "C", "--c", "3"],
        vec!["verify", "--formula", "nosuch"],
        vec!["verify", "--all", "--field", "4"],
        vec!["classify", "--example", "squares3", "--window", "2"],
    ];
    for args in cases {
        let out = run_raw(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {:?}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty(), "{args:?} should explain itself");
    }
}

#[test]
fn pretty_renders_a_table() {
    let out = run_raw(&["classify", "--example", "squares3", "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("codepth3 classify\n"));
    assert!(text.contains("C(3)"));
    assert!(!text.contains("report v1"), "pretty mode replaces the machine format");
}

#[test]
fn machine_reports_round_trip() {
    for args in [
        vec!["series", "--class", "G", "--r", "2", "--l", "3", "--n", "1"],
        vec!["growth", "--class", "T", "--l", "2", "--n", "2"],
        vec!["classify", "--example", "gor5"],
        vec!["verify", "--dump-fixture", "exterior[1, 1]"],
        vec!["examples"],
    ] {
        let out = run_raw(&args);
        assert!(out.status.success(), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let rep = Report::parse(&text).expect("parses");
        assert_eq!(rep.render().unwrap(), text, "{args:?} does not round-trip");
    }
}

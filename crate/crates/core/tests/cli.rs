use std::path::{Path, PathBuf};

use eslab::cli::run;
use eslab::fixtures::FIXTURE_NAMES;
use eslab::label::Strategy;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn eslab(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("eslab").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn fixture_path(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.es"));
    p.to_str().unwrap().to_string()
}

fn value<'a>(r: &'a Run, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    r.stdout.lines().find_map(|l| l.strip_prefix(prefix.as_str())).unwrap_or_else(|| panic!("no {key} in {}", r.stdout))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn exact_label_of_s() {
    let r = eslab(&["label", &fixture_path("S"), "--strategy", "exact"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(value(&r, "alphabet_size"), "4");
}

#[test]
fn forest_label_of_s_fails_with_the_error_kind() {
    let r = eslab(&["label", &fixture_path("S"), "--strategy", "forest"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("NotAForest"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn random_theory_run_is_clean() {
    let r = eslab(&["verify-theory", "--random", "--count", "50", "--events", "30", "--seed", "9"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(value(&r, "result"), "ok");
    assert_eq!(r.stdout.lines().filter(|l| l.contains(": ok (")).count(), eslab::theory::LEMMAS.len());
}

#[test]
fn theory_run_on_a_file() {
    let r = eslab(&["verify-theory", &fixture_path("S")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("simple_twelve: ok"));
}

#[test]
fn check_accepts_what_label_emits() {
    let dir = tempfile::tempdir().unwrap();
    for name in FIXTURE_NAMES {
        for strategy in Strategy::ALL {
            let out = dir.path().join(format!("{name}.{strategy}.labels"));
            let r = eslab(&["label", &fixture_path(name), "--strategy", strategy.as_str(), "-o", p(&out)]);
            if r.code != 0 {
                // Forest and simple only apply to their classes.
                assert!(matches!(strategy, Strategy::Forest | Strategy::Simple), "{name} {strategy}: {}", r.stderr);
                continue;
            }
            let c = eslab(&["check", &fixture_path(name), "--labels", p(&out)]);
            assert_eq!(c.code, 0, "{name} {strategy}: {}", c.stderr);
            assert_eq!(value(&c, "nice"), "true");
        }
    }
}

#[test]
fn check_rejects_a_clash() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("bad.labels");
    std::fs::write(&labels, "label a 0\nlabel b 0\nlabel c 1\n").unwrap();
    let r = eslab(&["check", &fixture_path("ANTI3"), "--labels", p(&labels)]);
    assert_eq!(r.code, 1);
    assert_eq!(value(&r, "nice"), "false");
    assert!(r.stderr.contains("clash: a and b"), "{}", r.stderr);
}

#[test]
fn analyze_reports_exact_or_bounds() {
    let r = eslab(&["analyze", &fixture_path("S")]);
    assert_eq!(r.code, 0);
    assert_eq!(value(&r, "degree"), "3");
    assert_eq!(value(&r, "width"), "5");
    assert_eq!(value(&r, "height"), "2");
    assert_eq!(value(&r, "chromatic_number"), "4");
    assert_eq!(value(&r, "chromatic_status"), "exact");

    let r = eslab(&["analyze", &fixture_path("S"), "--max-events-exact", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(value(&r, "chromatic_status"), "bounds");
    assert_eq!(value(&r, "chromatic_lower_bound"), "3");
    let upper: usize = value(&r, "chromatic_upper_bound").parse().unwrap();
    assert!(upper >= 4);
}

#[test]
fn domain_and_graph_write_dot() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("s.labels");
    assert_eq!(eslab(&["label", &fixture_path("S"), "--strategy", "exact", "-o", p(&labels)]).code, 0);
    let dot = dir.path().join("d.dot");
    let r = eslab(&["domain", &fixture_path("S"), "--labels", p(&labels), "--dot", p(&dot)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(value(&r, "branching_degree"), "3");
    assert_eq!(value(&r, "perspective_violations"), "0");
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));

    let r = eslab(&["domain", &fixture_path("S"), "--max-configs", "5"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("DomainTooLarge"));

    let gdot = dir.path().join("g.dot");
    let r = eslab(&["graph", &fixture_path("S"), "--dot", p(&gdot)]);
    assert_eq!(r.code, 0);
    assert_eq!(value(&r, "edges"), "16");
    assert_eq!(value(&r, "maximal_concurrent_pairs"), "4");
    assert!(std::fs::read_to_string(&gdot).unwrap().contains("style=bold"));
}

#[test]
fn gen_is_deterministic_and_valid() {
    let a = eslab(&["gen", "simple", "--events", "25", "--seed", "3"]);
    let b = eslab(&["gen", "simple", "--events", "25", "--seed", "3"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let es = eslab::io::read_es(&a.stdout).unwrap();
    assert_eq!(es.len(), 25);
    assert!(eslab::label::check_simple(&es).is_ok());

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("S.es");
    let r = eslab(&["gen", "fixture", "S", "-o", p(&out)]);
    assert_eq!(r.code, 0);
    let golden = std::fs::read_to_string(fixture_path("S")).unwrap();
    let body: String = golden.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    assert_eq!(std::fs::read_to_string(&out).unwrap(), body);
    assert_eq!(eslab(&["validate", p(&out)]).code, 0);
}

#[test]
fn same_arguments_same_stdout() {
    for args in [
        vec!["analyze", "S"],
        vec!["graph", "S"],
        vec!["label", "S", "--strategy", "stratified"],
        vec!["verify-theory", "S"],
    ] {
        let path = fixture_path(args[1]);
        let mut full = args.clone();
        full[1] = &path;
        assert_eq!(eslab(&full).stdout, eslab(&full).stdout);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["label", "x.es"],
        vec!["frobnicate"],
        vec!["label", "x.es", "--strategy", "quotient"],
        vec!["gen", "random", "--events", "5"],
        vec!["gen", "lattice", "--events", "5", "--seed", "1"],
        vec!["gen", "fixture"],
        vec!["verify-theory"],
        vec!["verify-theory", "x.es", "--random", "--count", "1", "--events", "3", "--seed", "0"],
        vec!["verify-theory", "--random", "--count", "1"],
    ] {
        let r = eslab(&args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(!r.stderr.is_empty());
    }
    assert_eq!(eslab(&["--help"]).code, 0);
}

#[test]
fn bad_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.es");
    std::fs::write(&bad, "event a\nconflict a a\n").unwrap();
    let r = eslab(&["validate", p(&bad)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("SyntaxError at 2:"), "{}", r.stderr);

    let r = eslab(&["validate", p(&dir.path().join("missing.es"))]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("IoError"));

    let r = eslab(&["gen", "fixture", "NOPE"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("UnknownFixture"));
}

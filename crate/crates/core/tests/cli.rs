use std::path::PathBuf;
use std::process::{Command, Output};

use ctot::parse::parse_form;

fn ctot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(name: &str, contents: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(&format!("{key}: "))).unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

fn rank_one(name: &str, entry: &str, alpha: Option<&str>) -> String {
    let alpha = alpha.map(|a| format!(r#", "alpha": "{a}""#)).unwrap_or_default();
    write(name, &format!(r#"{{"dimension": 2, "rank": 1, "entries": [["{entry}"]]{alpha}}}"#))
}

#[test]
fn curvature_of_a_rank_one_connection() {
    let doc = rank_one("curv.json", "x1*dx2", None);
    let o = ctot(&["curvature", &doc]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "F[1,1] = dx1*dx2\n");
}

#[test]
fn total_chern_form() {
    let doc = rank_one("chern.json", "x1*dx2", None);
    let o = ctot(&["chern", &doc, "--poly", "ctot"]);
    assert_eq!(field(&stdout(&o), "form"), "1 + i*tau*dx1*dx2");
}

#[test]
fn chern_component_of_a_rank_two_connection() {
    let doc = write("rank2.json", r#"{"dimension": 4, "rank": 2, "entries": [["x1*dx2", "0"], ["0", "x3*dx4"]]}"#);
    let o = ctot(&["chern", &doc, "--poly", "ck:2"]);
    assert_eq!(field(&stdout(&o), "form"), "-tau^2*dx1*dx2*dx3*dx4");
}

#[test]
fn additive_transgression_from_the_trivial_connection() {
    let zero = rank_one("zero.json", "0", None);
    let a = rank_one("a.json", "x1*dx2", None);
    let o = ctot(&["transgress", &zero, &a, "--mode", "additive"]);
    let text = stdout(&o);
    assert_eq!(field(&text, "form"), "i*tau*x1*dx2");
    assert_eq!(field(&text, "d"), "i*tau*dx1*dx2");
}

#[test]
fn multiplicative_transgression_along_an_explicit_path() {
    let zero = rank_one("zero-p.json", "0", None);
    let a = rank_one("a-p.json", "x1*dx2", None);
    let path = rank_one("path.json", "t^2*x1*dx2", None);
    let o = ctot(&["transgress", &zero, &a, "--mode", "multiplicative", "--path", &path]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(field(&stdout(&o), "d"), "i*tau*dx1*dx2");
}

#[test]
fn normal_forms() {
    let t = rank_one("triple.json", "x1*dx2", Some("x2*dx1"));
    let mult = stdout(&ctot(&["normalize", &t, "--flavor", "mult"]));
    assert_eq!(field(&mult, "rank"), "1");
    let add = stdout(&ctot(&["normalize", &t, "--flavor", "add", "--minus", &t]));
    assert_eq!(field(&add, "rank"), "0");
    assert_eq!(field(&add, "alpha"), "0");
}

#[test]
fn borel_class_is_special_imaginary() {
    let t = rank_one("borel.json", "x1*dx2", None);
    let metric = write("metric.json", r#"[["1"]]"#);
    let text = stdout(&ctot(&["borel", &t, "--metric", &metric]));
    assert_eq!(field(&text, "special_imaginary"), "true");
}

#[test]
fn primitive_of_the_area_form() {
    let f = write("area.txt", "dx1*dx2");
    let o = ctot(&["primitive", &f, "--dim", "2"]);
    let eta = parse_form(field(&stdout(&o), "primitive"), 2).unwrap();
    assert_eq!(eta, parse_form("1/2*x1*dx2 - 1/2*x2*dx1", 2).unwrap());
}

#[test]
fn primitive_of_a_json_form_document() {
    let f = write("form.json", r#"{"dimension": 3, "form": "dx1*dx2*dx3"}"#);
    let o = ctot(&["primitive", &f]);
    let eta = parse_form(field(&stdout(&o), "primitive"), 3).unwrap();
    assert_eq!(eta.d(), parse_form("dx1*dx2*dx3", 3).unwrap());
}

#[test]
fn json_output_has_sorted_keys() {
    let doc = rank_one("json.json", "x1*dx2", None);
    let text = stdout(&ctot(&["--output", "json", "chern", &doc, "--poly", "ch"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["poly"], "ch");
    assert!(text.find("\"form\"").unwrap() < text.find("\"poly\"").unwrap());
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    let doc = rank_one("err.json", "x1*dx2", None);
    let bad = write("bad.txt", "x1 +");
    let non_closed = write("nonclosed.txt", "x1*dx2");
    for args in [
        vec!["verify", "--suite", "nope", "--seed", "1"],
        vec!["chern", &doc, "--poly", "nope"],
        vec!["primitive", &bad],
        vec!["primitive", &non_closed, "--dim", "2"],
        vec!["curvature", "/nonexistent/doc.json"],
    ] {
        let o = ctot(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_reports_pass() {
    let o = ctot(&["verify", "--suite", "cap-laws", "--seed", "3", "--profile", "small"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("result: PASS\n"));
}

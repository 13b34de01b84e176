use nilpotentia::cli::run;
use nilpotentia::formats::{parse_semigroup, semigroup_from_json, semigroup_json};
use nilpotentia::{catalog, decide_nilpotent, is_isomorphic};
use serde_json::{json, Value};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str], stdin: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nilpotentia").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json_out(args: &[&str], stdin: &str) -> Value {
    let o = cli(args, stdin);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn error_kind(o: &Output) -> String {
    let v: Value = serde_json::from_str(o.stderr.trim()).unwrap();
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn catalog_output_feeds_analyze() {
    let entry = json_out(&["catalog", "f7"], "");
    let text = entry.to_string();
    let report = json_out(&["analyze", "-"], &text);
    assert_eq!(report["input"]["order"], 7);
    assert_eq!(report["nilpotency"]["nilpotent"], false);
    assert_eq!(report["minimality"]["minimal"], true);
    assert_eq!(report["classification"]["verdict"]["type"], "U3");
}

#[test]
fn analyze_a_commutative_group() {
    let c2 = "2\n0 1\n1 0\n";
    let report = json_out(&["analyze", "-"], c2);
    assert_eq!(report["nilpotency"], json!({ "nilpotent": true, "class": 1 }));
    assert_eq!(report["minimality"]["minimal"], false);
    assert_eq!(report["classification"], Value::Null);
}

#[test]
fn analyze_is_deterministic_apart_from_timing() {
    let input = json_out(&["catalog", "u4_nonminimal"], "").to_string();
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = strip(json_out(&["--threads", "2", "analyze", "-"], &input));
    let b = strip(json_out(&["analyze", "-"], &input));
    assert_eq!(a, b);
    assert_eq!(a["minimality"]["offenders"][0]["kind"], "subsemigroup");
}

#[test]
fn class_reports_witnesses_that_replay() {
    let input = json_out(&["catalog", "u1"], "").to_string();
    let v = json_out(&["class", "--s-only", "-"], &input);
    assert_eq!(v["nilpotent"], false);
    let s = parse_semigroup(&input).unwrap();
    let w = nilpotentia::formats::witness_from_json(&s, &v["witness"]).unwrap();
    assert!(nilpotentia::verify_witness(&s, &w));
    assert!(v["s_only"].is_object());
}

#[test]
fn census_lines() {
    let o = cli(&["census", "--order", "2", "--filter", "mnn"], "");
    assert_eq!(o.code, 0);
    let lines: Vec<Value> = o.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    let mut types: Vec<&str> = lines.iter().map(|l| l["type"].as_str().unwrap()).collect();
    types.sort();
    assert_eq!(types, ["U1", "U2"]);
    let all = cli(&["census", "--order", "3", "--modulo", "isoanti", "--shards", "3"], "");
    assert_eq!(all.stdout.lines().count(), 18);
}

#[test]
fn emitted_semigroups_parse_back() {
    for name in ["u2", "f7", "u5_c2", "y(5)"] {
        let v = json_out(&["catalog", name], "");
        let s = semigroup_from_json(&v["semigroup"]).unwrap();
        let e = catalog::entry(name).unwrap();
        assert_eq!(s, e.semigroup, "{name}");
        let again = semigroup_from_json(&semigroup_json(&s)).unwrap();
        assert_eq!(again, s);
    }
}

#[test]
fn rees_build_and_glue() {
    let spec = json!({
        "group": { "elements": ["e", "g"], "table": [[0, 1], [1, 0]] },
        "rows": 2, "cols": 2,
        "sandwich": [["e", "0"], ["0", "g"]],
    });
    let v = json_out(&["rees", "build", "-"], &spec.to_string());
    assert_eq!(v["monomial"], true);
    assert_eq!(v["nilpotent_by_criterion"], true);
    let s = semigroup_from_json(&v["semigroup"]).unwrap();
    assert_eq!(s.order(), 9);
    assert!(decide_nilpotent(&s).is_nilpotent());

    let glue = json_out(&["catalog", "f7"], "")["glue"].clone();
    let built = json_out(&["glue", "-"], &glue.to_string());
    let s = semigroup_from_json(&built["semigroup"]).unwrap();
    assert!(is_isomorphic(&s, &catalog::f7().unwrap().semigroup).is_some());
}

#[test]
fn input_errors_exit_two() {
    // not associative: a·(a·b) = a·b = b but (a·a)·b = b·b = a
    let bad = cli(&["class", "-"], "2\n1 1\n1 0\n");
    assert_eq!(bad.code, 2);
    assert_eq!(error_kind(&bad), "NonAssociative");
    let garbage = cli(&["analyze", "-"], "{ not json");
    assert_eq!(garbage.code, 2);
    assert_eq!(cli(&["analyze", "/nonexistent/table.json"], "").code, 2);
    assert_eq!(cli(&["catalog", "u9"], "").code, 2);
    assert_eq!(cli(&["frobnicate"], "").code, 2);
}

#[test]
fn analysis_errors_exit_one() {
    let spec = json!({
        "group": { "elements": ["e"], "table": [[0]] },
        "rows": 2, "cols": 2,
        "sandwich": [["e", "e"], ["0", "0"]],
    });
    let o = cli(&["rees", "build", "-"], &spec.to_string());
    assert_eq!(o.code, 1);
    assert_eq!(error_kind(&o), "NotRegular");
    let o = cli(&["census", "--order", "9"], "");
    assert_eq!(o.code, 1);
    assert_eq!(error_kind(&o), "CapExceeded");
}

#[test]
fn pretty_output() {
    let o = cli(&["--pretty", "class", "-"], "1\n0\n");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("nilpotent: true"), "{}", o.stdout);
    assert!(o.stdout.contains("class: 0"), "{}", o.stdout);
}

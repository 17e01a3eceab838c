use assert_cmd::Command;
use serde_json::Value;

fn cgint() -> Command {
    Command::cargo_bin("cgint").unwrap()
}

fn stdout_of(args: &[&str]) -> (String, i32) {
    let out = cgint().args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn list_prints_every_entry() {
    let (text, code) = stdout_of(&["list"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 32);
    for line in text.lines() {
        assert_eq!(line.split('\t').count(), 3, "{line}");
    }
}

#[test]
fn list_filters_by_tag() {
    let ids = |tag: &str| -> Vec<String> {
        let (text, _) = stdout_of(&["list", "--tag", tag]);
        let mut v: Vec<String> = text.lines().map(|l| l.split('\t').next().unwrap().to_string()).collect();
        v.sort();
        v
    };
    assert_eq!(ids("twofold"), ["cg2", "dblsum", "k2mom", "logkk", "ram1", "ram2"]);
    let three = ids("threefold");
    assert_eq!(three.len(), 26);
    for id in ["m1", "m8", "wan-a", "wan-b", "z4", "wz3", "l3", "de4", "ex1", "ex2"] {
        assert!(three.iter().any(|x| x == id), "{id}");
    }
    assert!(ids("nosuchtag").is_empty());
}

#[test]
fn verify_single_entry_passes() {
    cgint().args(["verify", "--id", "cg2", "--tol", "1e-9"]).assert().code(0);
}

#[test]
fn verify_glob_selects_lattice_entries() {
    let (text, code) = stdout_of(&["verify", "--id", "wz*", "--tol", "1e-7", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    let entries = v["entries"].as_array().unwrap();
    let ids: Vec<&str> = entries.iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["wz1", "wz2", "wz3"]);
    assert!(entries.iter().all(|e| e["pass"].as_bool().unwrap()));
}

#[test]
fn usage_errors_exit_two() {
    cgint().args(["verify", "--id", "nosuch"]).assert().code(2);
    cgint().args(["verify", "--id", "cg2", "--tol", "0.5"]).assert().code(2);
    cgint().args(["verify", "--id", "cg2", "--tol", "1e-13"]).assert().code(2);
    cgint().args(["verify", "--id", "cg2", "--quad-levels", "2"]).assert().code(2);
    cgint().args(["verify", "--format", "xml"]).assert().code(2);
    cgint().args(["family", "--alpha", "0"]).assert().code(2);
    cgint().args(["family", "--alpha", "1.5"]).assert().code(2);
}

#[test]
fn failing_tolerance_exits_one() {
    // dblsum reaches only ~3.6e-4 with its fixed truncation
    cgint().args(["verify", "--id", "dblsum", "--tol", "1e-6"]).assert().code(1);
}

#[test]
fn json_report_round_trips() {
    let (text, code) = stdout_of(&["verify", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 32);
    for e in entries {
        for key in ["id", "anchor", "reference", "computed", "abs_err", "rel_err", "evals", "seconds", "pass"] {
            assert!(e.get(key).is_some(), "missing {key}");
        }
    }
    let pass = entries.iter().filter(|e| e["pass"] == true).count();
    let not_converged = entries.iter().filter(|e| e["converged"] == false).count();
    let fail = entries.len() - pass - not_converged;
    let s = &v["summary"];
    assert_eq!(s["pass"].as_u64().unwrap() as usize, pass);
    assert_eq!(s["fail"].as_u64().unwrap() as usize, fail);
    assert_eq!(s["not_converged"].as_u64().unwrap() as usize, not_converged);
    assert!(v["wall_time"].as_f64().unwrap() >= 0.0);
}

fn field(text: &str, name: &str) -> String {
    text.lines()
        .find(|l| l.starts_with(name))
        .unwrap_or_else(|| panic!("no `{name}` in\n{text}"))[name.len()..]
        .trim()
        .to_string()
}

#[test]
fn family_positive_branch() {
    let (text, code) = stdout_of(&["family", "--alpha", "0.75"]);
    assert_eq!(code, 0);
    let rel: f64 = field(&text, "rel_err").parse().unwrap();
    assert!(rel <= 1e-9);
    // the alpha = 3/4 member is sqrt 2 times the m8 integral
    assert!(field(&text, "catalog").starts_with("m8"));
    assert!(field(&text, "catalog").contains("1.414213562373"));

    let (text, code) = stdout_of(&["family", "--alpha", "0.9216"]);
    assert_eq!(code, 0);
    let catalog = field(&text, "catalog");
    assert!(catalog.starts_with("ex1") && catalog.contains("= 5.000000000000"), "{catalog}");
}

#[test]
fn family_negative_branch() {
    let (text, code) = stdout_of(&["family", "--alpha", "-1.7777777778"]);
    assert_eq!(code, 0);
    let ratio: f64 = field(&text, "value/pi").parse().unwrap();
    assert!((ratio - 1.0 / 3.0).abs() < 1e-10);
    assert!(field(&text, "nearest p/q").starts_with("1/3 "));
}

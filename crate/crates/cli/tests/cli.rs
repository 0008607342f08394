use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-reflections")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn irreps_of_the_smallest_h_algebra() {
    let o = run(&["irreps", "--family", "h2n2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("4 one-dim, 1 two-dim"), "{s}");
    assert_eq!(s.matches("  module").count(), 5);
}

#[test]
fn irreps_json_lists_every_simple_module() {
    let o = run(&["irreps", "--family", "b4m", "--m", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let irr = v["irreducibles"].as_array().unwrap();
    assert_eq!(irr.len(), 6);
    let squares: u64 = irr.iter().map(|r| r["dim"].as_u64().unwrap().pow(2)).sum();
    assert_eq!(squares, v["dimension"].as_u64().unwrap());
}

#[test]
fn group_counterpart_resolves() {
    let o = run(&["irreps", "--family", "group", "--of", "b4m", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn fusion_matches_closed_form() {
    let o = run(&["fusion", "--family", "a4m", "--m", "4", "--check-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("agree"));
}

#[test]
fn inner_faithful_reports_the_gcd() {
    for rep in ["pi_1_2", "pi_{1,2}"] {
        let o = run(&["inner-faithful", "--family", "h2n2", "--n", "4", "--rep", rep]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        assert!(s.contains("gcd with n = 1"), "{s}");
        assert!(s.contains("inner-faithful: true"), "{s}");
    }
    let o = run(&["inner-faithful", "--family", "h2n2", "--n", "4", "--rep", "pi_0_2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("inner-faithful: false"));
}

#[test]
fn documented_disagreement_exits_one() {
    let o = run(&["inner-faithful", "--family", "a4m", "--m", "6", "--rep", "pi_2^-,T_{1,-1,1}"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn invariants_of_the_dihedral_minus_algebra() {
    let o = run(&["invariants", "--family", "b4m", "--m", "2", "--algebra", "Aminus"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("degrees {2,4}, product 8"), "{s}");
    assert!(s.contains("regular-consistent"), "{s}");
}

#[test]
fn invariants_json_is_deterministic() {
    let args = ["invariants", "--family", "h2n2", "--n", "3", "--algebra", "Aplus", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["irreps", "--family", "b4m"],
        vec!["irreps", "--family", "nope", "--n", "2"],
        vec!["irreps", "--family", "h2n2", "--n", "1"],
        vec!["inner-faithful", "--family", "h2n2", "--n", "3", "--rep", "pi_1^+"],
        vec!["invariants", "--family", "b4m", "--m", "2", "--algebra", "Nope"],
        vec!["invariants", "--family", "b4m", "--m", "3", "--algebra", "Aminus", "--max-degree", "3"],
        vec!["verify", "--theorem", "No.such"],
        vec!["verify", "--theorem", "B4m.fixed.minus", "--range", "n=2"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn verify_passes_and_fails_honestly() {
    let o = run(&["verify", "--theorem", "B4m.fixed.minus", "--range", "m=2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = run(&["verify", "--theorem", "B4m.isomorphism", "--range", "m=3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
}

#[test]
fn verify_list_names_every_case() {
    let o = run(&["verify", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.lines().count() >= 30);
    assert!(s.contains("Lemma.skew"));
}

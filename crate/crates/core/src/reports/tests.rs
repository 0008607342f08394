use super::*;

fn all_pass(rows: &[CaseResult]) -> bool {
    !rows.is_empty() && rows.iter().all(|r| r.status != Status::Fail)
}

#[test]
fn ids_are_sorted_and_unique() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
    assert!(find_case("H2n2.fixed.minus").is_ok());
    assert!(matches!(find_case("H2n2.nothing"), Err(HopfError::UnknownName(_))));
    for c in registry() {
        assert_eq!(c.parameter.is_some(), !c.default_range.is_empty(), "{}", c.id);
    }
}

#[test]
fn ranges() {
    assert_eq!(parse_range("m=2,4,6", Some('m')).unwrap(), vec![2, 4, 6]);
    assert_eq!(parse_range("n=2..5", Some('n')).unwrap(), vec![2, 3, 4, 5]);
    assert_eq!(parse_range("3-5", Some('m')).unwrap(), vec![3, 4, 5]);
    assert_eq!(parse_range("2..=3", Some('m')).unwrap(), vec![2, 3]);
    assert!(parse_range("n=2", Some('m')).is_err());
    assert!(parse_range("m=1", Some('m')).is_err());
    assert!(parse_range("m=x", Some('m')).is_err());
    assert!(parse_range("", Some('m')).is_err());
}

#[test]
fn light_cases_pass() {
    for id in ["Lemma.skew", "Lemma.binomial", "H8.fixed", "Ore.convolution", "Ore.trivial-t"] {
        let rows = find_case(id).unwrap().run(None);
        assert!(all_pass(&rows), "{}", render_table(&rows));
    }
    let rows = find_case("B4m.fixed.plus.hilbert").unwrap().run(Some(&[2, 3]));
    assert!(all_pass(&rows), "{}", render_table(&rows));
    let rows = find_case("A4mEven.inner-faithful.two-dim").unwrap().run(Some(&[2, 4]));
    assert!(all_pass(&rows));
}

#[test]
fn parity_mismatch_is_an_error_row() {
    let rows = find_case("A4mOdd.fixed.minus").unwrap().run(Some(&[4]));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].status, Status::Fail);
    assert_eq!(rows[0].instance, "m=4");
}

/// ℬ_{12} has Z4 as its group of one-dimensional modules, D_{12} has Z2².
#[test]
fn odd_b_is_not_isomorphic_to_its_dihedral_counterpart() {
    let rows = find_case("B4m.isomorphism").unwrap().run(Some(&[2, 3, 4]));
    let fails: Vec<&str> = rows.iter().filter(|r| r.status == Status::Fail).map(|r| r.instance.as_str()).collect();
    assert_eq!(fails, ["B4m:3 vs D4m:3"]);
}

#[test]
fn reruns_are_identical() {
    let a = find_case("A4mOdd.fixed.plus").unwrap().run(Some(&[3]));
    let b = find_case("A4mOdd.fixed.plus").unwrap().run(Some(&[3]));
    assert_eq!(render_table(&a), render_table(&b));
    assert!(all_pass(&a));
}

#[test]
fn sweeps_cover_the_inner_faithful_parameters() {
    let specs = fixed_ring_specs("H2n2.fixed.minus", 5).unwrap();
    // (i, j) with i < j and i² ≠ j² mod 5
    assert_eq!(specs.len(), 8);
    assert!(specs.iter().all(|s| s.inner_faithful));
    let even = fixed_ring_specs("A4mEven.fixed", 4).unwrap();
    assert_eq!(even.len(), 20);
    assert_eq!(even.iter().filter(|s| !s.inner_faithful).count(), 4);
}

use derring::harness::{run_scenario, CheckId, Record, Report, ScenarioConfig, Verdict};
use derring::Error;

fn run(check: CheckId, rings: &[&str], groups: &[&str]) -> Report {
    let mut cfg = ScenarioConfig::new(check).with_rings(rings.iter().copied()).with_groups(groups.iter().copied());
    cfg.samples = 60;
    cfg.seed = 3;
    run_scenario(&cfg).unwrap()
}

fn of<'a>(r: &'a Report, ring: &str, group: Option<&str>) -> Vec<&'a Record> {
    r.records.iter().filter(|x| x.ring == ring && x.group.as_deref() == group).collect()
}

fn verdicts(recs: &[&Record]) -> Vec<Verdict> {
    recs.iter().map(|r| r.verdict).collect()
}

#[test]
fn empty_family_gives_empty_report() {
    let r = run_scenario(&ScenarioConfig::new(CheckId::C14)).unwrap();
    assert!(r.records.is_empty());
    assert_eq!(r.summary.total, 0);
    assert!(!r.has_failures());
}

#[test]
fn t2_passes_or_skips_by_hypothesis() {
    let r = run(CheckId::T2, &["Zmod(5)", "Zmod(2)"], &["C4", "C2"]);
    assert!(verdicts(&of(&r, "Zmod(5)", Some("C4"))).iter().all(|&v| v == Verdict::Pass));
    let modular = of(&r, "Zmod(2)", Some("C2"));
    assert!(!modular.is_empty());
    assert!(modular.iter().all(|x| x.verdict == Verdict::Skipped && !x.hypothesis_satisfied));
}

#[test]
fn c14_inner_with_witness() {
    let r = run(CheckId::C14, &["Zmod(5)", "Zmod(7)"], &["S3", "D4", "Q8"]);
    assert_eq!(r.summary.fail, 0);
    for (ring, group) in [("Zmod(5)", "S3"), ("Zmod(7)", "S3"), ("Zmod(5)", "Q8"), ("Zmod(7)", "D4")] {
        let recs = of(&r, ring, Some(group));
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|x| x.verdict == Verdict::Pass), "{ring}[{group}]");
    }
}

#[test]
fn l13_normal_subgroups_of_s3() {
    let r = run(CheckId::L13, &["Zmod(5)"], &["S3"]);
    let recs = of(&r, "Zmod(5)", Some("S3"));
    let part_ii: Vec<_> = recs.iter().filter(|x| x.claim.starts_with("(ii)")).collect();
    // {1}, A3 and S3 are the normal subgroups
    assert_eq!(part_ii.len(), 3);
    assert!(recs.iter().all(|x| x.verdict == Verdict::Pass));
}

#[test]
fn p28_skips_abelian_and_passes_class_two() {
    let r = run(CheckId::P28, &["Zmod(3)"], &["C4", "Q8", "D4"]);
    let abelian = of(&r, "Zmod(3)", Some("C4"));
    let class_claims: Vec<_> = abelian.iter().filter(|x| !x.claim.contains("abelian case")).collect();
    assert_eq!(class_claims.len(), 2);
    assert!(class_claims.iter().all(|x| x.verdict == Verdict::Skipped));
    for g in ["Q8", "D4"] {
        let recs: Vec<_> = of(&r, "Zmod(3)", Some(g)).into_iter().filter(|x| !x.claim.contains("abelian case")).collect();
        assert_eq!(recs.len(), 2);
        assert!(recs.iter().all(|x| x.verdict == Verdict::Pass), "{g}");
    }
}

#[test]
fn t5_examples() {
    let r = run(CheckId::T5SCAN, &["Zmod(6)", "Mat(2, Zmod(3))", "Mat(2, Zmod(2))"], &[]);
    assert!(verdicts(&of(&r, "Zmod(6)", None)).iter().all(|&v| v == Verdict::Pass));
    assert!(verdicts(&of(&r, "Mat(2, Zmod(3))", None)).iter().all(|&v| v == Verdict::Pass));
    let m2 = of(&r, "Mat(2, Zmod(2))", None);
    let solvable: Vec<_> = m2.iter().filter(|x| x.claim.contains("solvable")).collect();
    assert_eq!(solvable.len(), 1);
    assert_eq!(solvable[0].verdict, Verdict::Flagged);
    let nilpotent: Vec<_> = m2.iter().filter(|x| x.claim.contains("nilpotent")).collect();
    assert_eq!(nilpotent[0].verdict, Verdict::Pass);
}

#[test]
fn central_derivation_of_z12_c2_is_flagged() {
    let r = run(CheckId::L23, &["Zmod(12)"], &["C2"]);
    let rec = of(&r, "Zmod(12)", Some("C2")).into_iter().find(|x| x.claim.starts_with("(iii)(b)")).unwrap();
    assert_eq!(rec.verdict, Verdict::Flagged);
    // δ(1) = 0, δ(g) = 6: every derivation of ℤ/12[C2] lands in 6B, so δ commutes with all of them
    let images = &rec.witness.as_ref().unwrap()["central_derivation"];
    assert_eq!(images, &serde_json::json!([[0, 0], [6, 0]]));
}

#[test]
fn reports_are_reproducible() {
    let strip = |r: &Report| r.to_json().lines().filter(|l| !l.contains("\"timestamp\"")).collect::<Vec<_>>().join("\n");
    let a = run(CheckId::L25, &["Zmod(5)", "F4"], &["S3", "C4"]);
    let b = run(CheckId::L25, &["Zmod(5)", "F4"], &["S3", "C4"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn failures_drive_the_exit_status() {
    let fail = Record {
        check: CheckId::L8,
        claim: "x".into(),
        ring: "Zmod(2)".into(),
        group: None,
        hypothesis: String::new(),
        hypothesis_satisfied: true,
        verdict: Verdict::Fail,
        witness: Some(serde_json::json!(1)),
        detail: serde_json::json!({}),
    };
    assert!(Report::new(0, vec![CheckId::L8], vec![fail]).has_failures());
}

#[test]
fn config_errors() {
    assert!(matches!(ScenarioConfig::from_json(r#"{"check":"T9"}"#), Err(Error::Config(_))));
    assert!(matches!(ScenarioConfig::from_json(r#"{"check":"T2","extra":1}"#), Err(Error::Config(_))));
    let bad_ring = ScenarioConfig::from_json(r#"{"check":"T2","rings":["Zmod(0"],"groups":["C2"]}"#).unwrap();
    assert!(run_scenario(&bad_ring).is_err());
}

#[test]
fn table_specs_are_accepted() {
    // ℤ/3 as a table, C2 as a Cayley table
    let cfg = ScenarioConfig::from_json(
        r#"{"check":"T2","rings":[{"orders":[3],"mul":[[[1]]],"one":[1]}],"groups":[{"order":2,"table":[[0,1],[1,0]]}]}"#,
    )
    .unwrap();
    let r = run_scenario(&cfg).unwrap();
    assert!(r.summary.total > 0);
    assert_eq!(r.summary.total, r.summary.pass);
}

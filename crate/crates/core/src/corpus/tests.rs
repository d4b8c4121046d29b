use super::*;

#[test]
fn fixture_file_is_well_formed() {
    let list = corpus_list();
    assert!(list.len() >= 9);
    for fx in list {
        assert!(fx.metadata_problems().is_empty(), "{}: {:?}", fx.name, fx.metadata_problems());
    }
    assert!(matches!(fixture("nope"), Err(CorpusError::UnknownFixture(_))));
}

#[test]
fn every_fixture_verifies_over_both_fields() {
    for fx in corpus_list() {
        let r = corpus_verify(&fx.name, 8).unwrap();
        assert_eq!(r.runs.len(), fx.fields.len());
        assert!(r.passed(), "{}", r.to_json());
    }
}

#[test]
fn mismatches_report_both_values() {
    let mut fx = fixture("nak-2-1").unwrap().clone();
    fx.expected.get_mut("gldim").unwrap().value = json!(2);
    let run = run_over(&fx, &crate::exactlin::Fp::new(101).unwrap(), 8, DEFAULT_SEED);
    let bad = run.failures();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].invariant, "gldim");
    let j = bad[0].to_json();
    assert_eq!((j["expected"].clone(), j["actual"].clone()), (json!(2), json!(1)));
}

#[test]
fn unknown_invariants_are_errors() {
    let a = fixture("kxn-2").unwrap().build(&crate::exactlin::Fp::new(101).unwrap()).unwrap();
    assert!(matches!(compute_invariant(&a, "colour", 8, 1), Err(CorpusError::UnknownInvariant(_))));
    let mut fx = fixture("kxn-2").unwrap().clone();
    fx.expected.insert("colour".into(), Expected { value: json!(1), source: Source::Oracle, oracle: None, note: None });
    assert_eq!(fx.metadata_problems().len(), 2);
}

#[test]
fn unbounded_matches_lower_bounds_only() {
    assert!(value_matches(&json!("unbounded"), &json!({"at_least": 9})));
    assert!(!value_matches(&json!("unbounded"), &json!(9)));
    assert!(value_matches(&json!(2), &dimension_json(DimensionValue::Exact(2))));
    assert!(!value_matches(&json!(2), &dimension_json(DimensionValue::AtLeast(2))));
}

use h4_cli::{registry, run_checks, select, Context, Status};

#[test]
fn registry_ids_are_unique_and_selectable() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let mut dedup = ids.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(dedup.len(), ids.len());
    assert_eq!(select(&[]).unwrap().len(), ids.len());
    assert_eq!(select(&["facts/*".into()]).unwrap().len(), 10);
    assert_eq!(select(&["s7/*".into()]).unwrap().len(), 5);
    assert!(select(&["s9/*".into()]).is_err());
    assert!(select(&["[".into()]).is_err());
}

#[test]
fn selection_keeps_dependency_order() {
    let order: Vec<&str> = select(&["s7/lines".into(), "facts/fact1".into()])
        .unwrap()
        .iter()
        .map(|c| c.id)
        .collect();
    assert_eq!(order, vec!["facts/fact1", "s7/lines"]);
}

#[test]
fn every_check_passes_in_process() {
    let ctx = Context::new();
    let reports = run_checks(&ctx, &select(&[]).unwrap());
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{} {:?}", r.id, r.error);
        assert!(!r.observations.is_empty(), "{}", r.id);
    }
}

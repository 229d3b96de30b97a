use std::collections::BTreeMap;

use trace3::catalog::{
    all_entries, load_catalog, trace_expr, validate_group, CatalogEntry, Status,
};
use trace3::error::Error;

fn groups() -> BTreeMap<(usize, String), Vec<CatalogEntry>> {
    let mut out: BTreeMap<_, Vec<_>> = BTreeMap::new();
    for e in all_entries() {
        out.entry((e.degree, e.lambda.to_string()))
            .or_default()
            .push(e.clone());
    }
    out
}

#[test]
fn every_group_is_independent_and_highest_weight() {
    let groups = groups();
    assert!(!groups.is_empty());
    for ((deg, lambda), group) in &groups {
        let report = validate_group(group, None);
        assert!(report.passed(), "{deg} {lambda}: {report:?}");
    }
}

#[test]
fn repaired_entries_are_documented() {
    let repaired: Vec<&CatalogEntry> = all_entries()
        .iter()
        .filter(|e| e.status == Status::Repaired)
        .collect();
    assert_eq!(repaired.len(), 8);
    for e in repaired {
        assert!(e.note.is_some(), "{} {}", e.lambda, e.label);
        assert_ne!(e.printed, e.source, "{} {}", e.lambda, e.label);
    }
    for e in all_entries()
        .iter()
        .filter(|e| e.status == Status::Verbatim)
    {
        assert_eq!(e.printed, e.source);
    }
}

#[test]
fn printed_forms_of_repairs_fail_somewhere() {
    for e in all_entries()
        .iter()
        .filter(|e| e.status == Status::Repaired)
    {
        let ok = trace_expr(&e.printed).is_ok_and(|x| {
            let mut alt = e.clone();
            alt.expr = x;
            validate_group(&[alt], None).passed()
        });
        assert!(
            !ok,
            "printed form of {} {} already valid",
            e.lambda, e.label
        );
    }
}

#[test]
fn load_catalog_scope() {
    assert!(matches!(load_catalog(3, 3), Err(Error::OutOfScope(_))));
    assert!(matches!(load_catalog(8, 4), Err(Error::OutOfScope(_))));
    let d3 = load_catalog(7, 3).unwrap();
    assert!(d3.iter().all(|e| e.lambda.rows() <= 3));
    assert!(load_catalog(7, 7).unwrap().len() > d3.len());
}

use lexres::export::{from_json, to_json, ResolutionDocument};
use lexres::pipeline::Instance;
use lexres::resolution::{DecompositionRoute, ResolutionComplex};
use lexres::verify::{random_rank_check, verify_all, DEFAULT_NODE_BUDGET};

fn square() -> ResolutionComplex {
    Instance::parse(4, "x1x3", "x2x4").unwrap().resolve(2, false).unwrap()
}

/// Re-imports `rc` after editing its JSON document.
fn tampered(rc: &ResolutionComplex, edit: impl FnOnce(&mut ResolutionDocument)) -> ResolutionComplex {
    let mut doc: ResolutionDocument = serde_json::from_str(&to_json(rc)).unwrap();
    edit(&mut doc);
    from_json(&serde_json::to_string(&doc).unwrap()).unwrap()
}

#[test]
fn json_round_trip_is_lossless() {
    let rc = square();
    let back = from_json(&to_json(&rc)).unwrap();
    assert_eq!(back, rc);
}

#[test]
fn flipped_sign_breaks_composition_and_rank() {
    let rc = square();
    let bad = tampered(&rc, |doc| doc.differentials[0].entries[0].sign *= -1);
    assert!(!bad.compose_check(0) || !bad.compose_check(1));
    assert!(!random_rank_check(&bad, 1, 3).pass);
    assert!(!verify_all(&bad, 1, 3, DEFAULT_NODE_BUDGET).unwrap().pass());
}

#[test]
fn dropped_entry_breaks_composition() {
    let rc = square();
    let bad = tampered(&rc, |doc| {
        doc.differentials[1].entries.pop();
    });
    assert!(!bad.compose_check_all());
}

#[test]
fn wrong_variable_breaks_composition() {
    let rc = square();
    let bad = tampered(&rc, |doc| {
        let e = &mut doc.differentials[1].entries[0];
        e.var = if e.var == 1 { 2 } else { 1 };
    });
    assert!(!bad.compose_check_all());
}

#[test]
fn import_rejects_inconsistent_documents() {
    let rc = square();
    let mut doc: ResolutionDocument = serde_json::from_str(&to_json(&rc)).unwrap();
    doc.betti[1] += 1;
    assert!(from_json(&serde_json::to_string(&doc).unwrap()).is_err());
    let mut doc: ResolutionDocument = serde_json::from_str(&to_json(&rc)).unwrap();
    doc.generators.swap(0, 1);
    assert!(from_json(&serde_json::to_string(&doc).unwrap()).is_err());
    assert!(from_json("{}").is_err());
}

#[test]
fn oracle_route_resolves_unpatterned_segments() {
    for (n, u, v) in [(3, "x1x2", "x2x3"), (3, "x1^2", "x2x3"), (3, "x1x2", "x3^2")] {
        let inst = Instance::parse(n, u, v).unwrap();
        assert!(inst.spec.l().is_none());
        for k in 1..=3 {
            let rc = inst.resolve(k, true).unwrap();
            assert_eq!(rc.route(), DecompositionRoute::Oracle);
            let report = verify_all(&rc, 5, 3, DEFAULT_NODE_BUDGET).unwrap();
            assert!(report.pass(), "L({u}, {v})^{k}: {report:?}");
        }
    }
}

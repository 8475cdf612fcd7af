use zetakit::identity::{catalog, check, run_catalog, Backend, FaultTarget, GridSize, Sides};

#[test]
fn catalog_has_every_family() {
    let names: Vec<String> = catalog(GridSize::Full).into_iter().map(|s| s.name).collect();
    assert!(names.len() >= 16);
    for prefix in [
        "diff-eq-7.2", "diff-eq-7.6", "lerch-diff-7.7", "hurwitz-diff-7.11", "bisection-6.1", "fd-be-6.6",
        "duality-6.7", "evenodd-6.10", "cor-6.12-corrected", "mult-5.10", "mult-5.12", "mult-5.13", "mult-5.14",
        "weyl-selfrep-4.8", "xseries-4.14", "xseries-4.15", "nuseries-4.7", "nuseries-5.8", "negint-5.9",
        "negint-7.8", "negint-7.9", "functional-eq-1.2", "corrected-2.5", "corrected-2.6",
    ] {
        assert!(names.iter().any(|n| n == prefix || n.starts_with(&format!("{prefix}-"))), "{prefix}");
    }
}

#[test]
fn grids_are_nonempty_and_guarded() {
    for spec in catalog(GridSize::Full) {
        assert!(!spec.grid.is_empty(), "{}", spec.name);
        for p in &spec.grid {
            assert!((spec.guard)(p), "{} point {p} fails its own guard", spec.name);
        }
    }
}

/// Every grid point that passes a guard evaluates without a domain or pole error.
#[test]
fn guards_are_sound() {
    let b = Backend::default();
    for spec in catalog(GridSize::Full) {
        let r = check(&spec, &b);
        assert!(r.error.is_none(), "{}: {:?}", spec.name, r.error);
        assert_eq!(r.points_tested, spec.grid.len(), "{}", spec.name);
        if let Sides::Numeric { lhs, rhs } = &spec.sides {
            for p in &spec.grid {
                assert!(lhs(&b, p).is_ok() && rhs(&b, p).is_ok(), "{} at {p}", spec.name);
            }
        }
    }
}

#[test]
fn full_catalog_passes() {
    for r in run_catalog(None, &Backend::default(), GridSize::Full) {
        assert!(r.pass, "{} max_rel_err={:e} at {:?}", r.name, r.max_rel_err, r.worst_point);
    }
}

#[test]
fn reports_are_deterministic() {
    let b = Backend::default();
    let a = serde_json::to_string(&run_catalog(None, &b, GridSize::Full)).unwrap();
    let c = serde_json::to_string(&run_catalog(None, &b, GridSize::Full)).unwrap();
    assert_eq!(a, c);
}

#[test]
fn reduced_grids_are_subsets() {
    let full = catalog(GridSize::Full);
    for (size, cap) in [(GridSize::Reduced, 12), (GridSize::Quick, 3)] {
        for (small, big) in catalog(size).iter().zip(&full) {
            assert_eq!(small.name, big.name);
            assert!(small.grid.len() <= cap && !small.grid.is_empty());
            assert!(small.grid.iter().all(|p| big.grid.contains(p)));
        }
    }
}

#[test]
fn every_fault_is_detected() {
    for target in FaultTarget::ALL {
        let b = Backend::default().with_fault(Some(target));
        let failing: Vec<String> = run_catalog(None, &b, GridSize::Full)
            .into_iter()
            .filter(|r| !r.pass)
            .map(|r| r.name)
            .collect();
        assert!(!failing.is_empty(), "{target} went undetected");
    }
}

#[test]
fn report_json_field_names() {
    let r = &run_catalog(Some("mult-5.14"), &Backend::default(), GridSize::Quick)[0];
    let v = serde_json::to_value(r).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["max_rel_err", "mean_rel_err", "name", "pass", "points_tested", "worst_point"]);
}

//! Orders past built-in enumeration: random graphs plus the extremal
//! constructions, and sharpness of every threshold.

use kms::harness::{
    sampled_source, sharpness_check, verify_theorem, RunOptions, TheoremId, TheoremSpec,
};

fn large_cells() -> Vec<TheoremSpec> {
    let mut cells = Vec::new();
    for n in [10usize, 11, 12] {
        for (id, k, d) in [
            (TheoremId::T1, 3, None),
            (TheoremId::T2, 3, Some(if n % 2 == 0 { 2 } else { 1 })),
            (TheoremId::T3, 3, None),
            (TheoremId::T4, 3, None),
            (TheoremId::T5, 2, None),
        ] {
            if let Ok(spec) = TheoremSpec::new(id, n, k, d) {
                cells.push(spec);
            }
        }
    }
    cells
}

#[test]
fn sampled_cells_have_no_violations() {
    let opts = RunOptions::default();
    for spec in large_cells() {
        let source = sampled_source(&spec, 150, 11).unwrap();
        let report = verify_theorem(&spec, &source, &opts).unwrap();
        assert!(!report.metadata.exhaustive);
        assert_eq!(report.violations, 0, "{spec}");
        assert_eq!(report.exceptions, 1, "{spec}");
        assert!(report.exceptions_consistent, "{spec}");
    }
}

#[test]
fn every_threshold_is_sharp() {
    let opts = RunOptions::default();
    let cells = TheoremSpec::exhaustive_cells(8)
        .into_iter()
        .chain(large_cells());
    for spec in cells {
        let r = sharpness_check(&spec, &opts).unwrap();
        assert!(r.passed, "{spec}: {:?}", r.checks);
    }
}

#[test]
fn reports_are_identical_across_worker_counts() {
    let spec = TheoremSpec::new(TheoremId::T1, 8, 3, None).unwrap();
    let source = kms::enumerate::GraphSource::Enumerated(8);
    let render = |workers| {
        let opts = RunOptions {
            workers: Some(workers),
            ..RunOptions::default()
        };
        let mut buf = Vec::new();
        verify_theorem(&spec, &source, &opts)
            .unwrap()
            .write_csv(&mut buf)
            .unwrap();
        buf
    };
    assert_eq!(render(1), render(4));
}

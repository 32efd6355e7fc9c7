#![allow(clippy::needless_range_loop)]

mod common;

use kms::enumerate::connected_graphs;
use kms::quotient::{characteristic_polynomial, closed_form_lambda1, FamilySpec};
use kms::spectra::{
    distance_matrix, distance_spectral_radius, lambda1, rayleigh_lower_bound, wiener, SolverConfig,
};

use common::{distances, oracle_radius};

#[test]
fn power_iteration_matches_jacobi_on_all_small_graphs() {
    for n in 2..=7 {
        for g in connected_graphs(n).unwrap() {
            let got = lambda1(&g).unwrap();
            let want = oracle_radius(&g);
            assert!((got - want).abs() <= 1e-8, "{g:?}: {got} vs {want}");
        }
    }
}

#[test]
fn largest_charpoly_root_matches_power_iteration() {
    for n in 2..=6 {
        for g in connected_graphs(n).unwrap() {
            let d = distance_matrix(&g).unwrap();
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|u| d.row(u).iter().map(|&x| x as i64).collect())
                .collect();
            let root = characteristic_polynomial(&rows)
                .largest_real_root()
                .unwrap();
            assert!((root - lambda1(&g).unwrap()).abs() <= 1e-8, "{g:?}");
        }
    }
}

#[test]
fn distances_match_floyd_warshall() {
    for g in connected_graphs(6).unwrap() {
        let d = distance_matrix(&g).unwrap();
        let f = distances(&g);
        for u in 0..6 {
            for v in 0..6 {
                assert_eq!(d.get(u, v) as f64, f[u][v]);
            }
        }
        let w: f64 = (0..6)
            .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
            .map(|(u, v)| f[u][v])
            .sum();
        assert_eq!(wiener(&g).unwrap() as f64, w);
    }
}

#[test]
fn wiener_bound_and_perron_vector() {
    for g in connected_graphs(6).unwrap() {
        let e = distance_spectral_radius(&g, SolverConfig::default()).unwrap();
        let bound = rayleigh_lower_bound(&g).unwrap();
        assert!(bound <= e.lambda1 + 1e-12);
        assert!(e.vector.iter().all(|&x| x > 0.0));
        let norm: f64 = e.vector.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-9);
    }
}

#[test]
fn deleting_any_non_bridge_edge_never_lowers_the_radius() {
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            let base = lambda1(&g).unwrap();
            for (u, v) in g.edges().collect::<Vec<_>>() {
                let h = g.without_edge(u, v);
                if h.is_connected() {
                    assert!(lambda1(&h).unwrap() > base - 1e-12);
                }
            }
        }
    }
}

#[test]
fn every_family_radius_matches_its_construction() {
    for n in 2..=20usize {
        let mut specs = vec![FamilySpec::PendantClique { n }];
        if n >= 3 {
            specs.push(FamilySpec::TwoPendantClique { n });
        }
        for s in 1..=n / 2 {
            specs.push(FamilySpec::CoreEven { n, s });
            if n > 2 * s {
                specs.push(FamilySpec::CoreOdd { n, s });
            }
        }
        for k in 1..=n {
            specs.push(FamilySpec::SplitStar { n, k });
        }
        for spec in specs {
            let g = spec.build().unwrap();
            let closed = closed_form_lambda1(&spec).unwrap().value;
            let numeric = oracle_radius(&g);
            assert!(
                (closed - numeric).abs() <= 1e-8,
                "{spec}: {closed} vs {numeric}"
            );
        }
    }
}

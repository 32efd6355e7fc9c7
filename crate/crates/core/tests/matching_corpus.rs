//! Cross-checks of the matching deciders over every connected graph of
//! small order.

use kms::enumerate::connected_graphs;
use kms::matching::{
    decide_property, deficiency, direct_property_oracle, isolated_criterion, k_barriers,
    PropertyQuery,
};
use kms::{Error, VertexSet};

#[test]
fn deficiency_zero_iff_perfect() {
    for n in 2..=7 {
        for g in connected_graphs(n).unwrap() {
            for k in 1..=5 {
                let def = deficiency(&g, k).unwrap().value;
                match decide_property(&g, &PropertyQuery::perfect(k)) {
                    Ok(v) => assert_eq!(v.holds, def == 0, "{g:?} k={k}"),
                    Err(Error::Parity(_)) => assert!(k % 2 == 1 && n % 2 == 1 && def > 0),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}

#[test]
fn critical_properties_match_the_barrier_definition() {
    // GFC_k and GBC_k: the empty set is the only k-barrier
    for n in 3..=7 {
        for g in connected_graphs(n).unwrap() {
            for k in 2..=5 {
                let q = if n % 2 == 1 {
                    PropertyQuery::gfc(k)
                } else {
                    PropertyQuery::gbc(k)
                };
                let only_empty = k_barriers(&g, k).unwrap() == vec![VertexSet::EMPTY];
                assert_eq!(
                    decide_property(&g, &q).unwrap().holds,
                    only_empty,
                    "{g:?} {q}"
                );
            }
        }
    }
}

#[test]
fn kd_critical_implies_the_matching_parity_property() {
    for n in 3..=7 {
        for g in connected_graphs(n).unwrap() {
            for k in [3u32, 5] {
                for d in (1..k).filter(|d| *d as usize % 2 == n % 2) {
                    let kd = decide_property(&g, &PropertyQuery::kd_critical(k, d))
                        .unwrap()
                        .holds;
                    let weaker = if d % 2 == 1 {
                        PropertyQuery::gfc(k)
                    } else {
                        PropertyQuery::gbc(k)
                    };
                    if kd {
                        assert!(
                            decide_property(&g, &weaker).unwrap().holds,
                            "{g:?} k={k} d={d}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn even_k_verdicts_do_not_depend_on_k() {
    for n in 3..=7 {
        for g in connected_graphs(n).unwrap() {
            let q = |k| {
                if n % 2 == 1 {
                    PropertyQuery::gfc(k)
                } else {
                    PropertyQuery::gbc(k)
                }
            };
            assert_eq!(
                decide_property(&g, &q(2)).unwrap().holds,
                decide_property(&g, &q(4)).unwrap().holds
            );
            assert_eq!(
                decide_property(&g, &PropertyQuery::perfect(2))
                    .unwrap()
                    .holds,
                isolated_criterion(&g).unwrap()
            );
        }
    }
}

#[test]
fn kd_critical_deciders_agree_with_construction() {
    for n in 3..=6 {
        for g in connected_graphs(n).unwrap() {
            for d in (1..3u32).filter(|d| *d as usize % 2 == n % 2) {
                let q = PropertyQuery::kd_critical(3, d);
                assert_eq!(
                    decide_property(&g, &q).unwrap().holds,
                    direct_property_oracle(&g, &q).unwrap(),
                    "{g:?} d={d}"
                );
            }
        }
    }
}

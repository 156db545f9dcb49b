use super::*;
use crate::corpus::{abelian, corpus, dual, dual_yau, unital1};
use crate::exactlin::{frac, int};

fn op(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(rows)
}

#[test]
fn commutant_examples() {
    let a = abelian(2);
    assert_eq!(commutant(&a).dim(), 4);
    let diag = HomAlgebra::abelian("d", op(&[&[1, 0], &[0, 2]]));
    let w = commutant(&diag);
    assert_eq!(w.dim(), 2);
    for m in w.operators() {
        assert_eq!(m[(0, 1)], int(0));
        assert_eq!(m[(1, 0)], int(0));
    }
    let nil = HomAlgebra::abelian("j", op(&[&[0, 1], &[0, 0]]));
    let w = commutant(&nil);
    assert_eq!(w.dim(), 2);
    assert!(w.contains(&Matrix::identity(2)));
    assert!(w.contains(&op(&[&[0, 1], &[0, 0]])));
}

#[test]
fn der_examples() {
    for k in 0..3 {
        assert_eq!(der(&abelian(2), k).dim(), 4);
    }
    // d·e = 2d·e forces d = 0
    assert_eq!(der(&unital1(), 0).dim(), 0);
    // dual numbers: D e = 0, D f = f is the only solution up to scale
    let d = der(&dual(), 0);
    assert_eq!(d.dim(), 1);
    assert!(d.contains(&op(&[&[0, 0], &[0, 1]])));
}

#[test]
fn unital_hand_oracle() {
    // one unknown d with companions: der d = 2d; qder 2d = d′; gder d + d′ = d″;
    // c d = d = d; qc d = d; zder d = d = 0
    let a = unital1();
    let dims: Vec<usize> = SpaceKind::DERIVATION_TYPES
        .iter()
        .map(|&kind| space(&a, kind, 0).dim())
        .collect();
    assert_eq!(dims, vec![0, 1, 1, 1, 1, 0]);
    let (_, w) = qder(&a, 0);
    let gens = w.generators();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].companions[0][(0, 0)], int(2) * &gens[0].op[(0, 0)]);
    let (_, w) = gder(&a, 0);
    assert_eq!(w.solutions.dim(), 2);
    for g in w.generators().into_iter().chain(w.companion_kernel()) {
        let (d, d1, d2) = (
            &g.op[(0, 0)],
            &g.companions[0][(0, 0)],
            &g.companions[1][(0, 0)],
        );
        assert_eq!(d + d1, d2.clone());
    }
}

#[test]
fn abelian_spaces_are_full() {
    let a = abelian(2);
    for kind in SpaceKind::DERIVATION_TYPES {
        assert_eq!(space(&a, kind, 1).dim(), 4, "{kind}");
    }
}

#[test]
fn identity_is_a_centroid_element() {
    for a in corpus() {
        if a.check_multiplicative() {
            assert!(
                centroid(&a, 0).contains(&Matrix::identity(a.dim())),
                "{}",
                a.name()
            );
        }
    }
}

#[test]
fn aggregate_examples() {
    let a = abelian(2);
    let agg = aggregate(&a, SpaceKind::Der, 2);
    assert_eq!(agg.per_k.len(), 3);
    assert!(!agg.direct);
    assert_eq!(agg.total.dim(), 4);
    let agg = aggregate(&unital1(), SpaceKind::Der, 3);
    assert!(agg.total.is_zero());
    assert!(agg.direct);
    let a = dual_yau(2);
    let agg = aggregate(&a, SpaceKind::Der, 2);
    for s in &agg.per_k {
        for m in s.operators() {
            assert!(agg.total.contains(&m.flatten()).unwrap());
        }
    }
}

#[test]
fn products_on_operators() {
    let d = op(&[&[1, 2], &[3, 4]]);
    assert!(nu_prime(&d, &d).unwrap().is_zero());
    let id = Matrix::identity(2);
    assert_eq!(nu(&id, &id).unwrap(), id.scale(&int(2)));
    assert_eq!(sigma(&abelian(2), &d).unwrap(), d);
    assert!(nu(&d, &Matrix::identity(3)).is_err());
}

#[test]
fn soundness_on_corpus() {
    for a in corpus() {
        for kind in [SpaceKind::Der, SpaceKind::C, SpaceKind::Qc, SpaceKind::Zder] {
            for k in 0..=2 {
                for m in space(&a, kind, k).operators() {
                    assert_eq!(
                        identity_violation(&a, kind, k, &[m]),
                        None,
                        "{} {kind} {k}",
                        a.name()
                    );
                }
            }
        }
        for kind in [SpaceKind::Gder, SpaceKind::Qder] {
            for k in 0..=2 {
                let (_, w) = witnessed(&a, kind, k);
                for g in w.generators().into_iter().chain(w.companion_kernel()) {
                    assert_eq!(identity_violation(&a, kind, k, &g.blocks()), None);
                }
            }
        }
    }
}

#[test]
fn definitional_chain() {
    for a in corpus() {
        for k in 0..=2 {
            let chain = [
                SpaceKind::Zder,
                SpaceKind::Der,
                SpaceKind::Qder,
                SpaceKind::Gder,
            ];
            for pair in chain.windows(2) {
                let lo = space(&a, pair[0], k);
                let hi = space(&a, pair[1], k);
                assert!(
                    lo.space.is_subspace_of(&hi.space).unwrap(),
                    "{} {k}",
                    a.name()
                );
            }
            let c = centroid(&a, k);
            assert!(c
                .space
                .is_subspace_of(&space(&a, SpaceKind::Gder, k).space)
                .unwrap());
        }
    }
}

#[test]
fn derivations_close_under_bracket() {
    for a in corpus()
        .into_iter()
        .filter(HomAlgebra::check_multiplicative)
    {
        for k in 0..=1 {
            for s in 0..=1 {
                let target = der(&a, k + s);
                for d1 in der(&a, k).operators() {
                    for d2 in der(&a, s).operators() {
                        assert!(
                            target.contains(&nu_prime(&d1, &d2).unwrap()),
                            "{}",
                            a.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn witness_projection_consistency() {
    for a in corpus() {
        for kind in [SpaceKind::Gder, SpaceKind::Qder] {
            let (m, w) = witnessed(&a, kind, 1);
            let gens = w.generators();
            assert_eq!(gens.len(), m.dim());
            for g in &gens {
                assert!(m.contains(&g.op));
            }
            for d in m.operators() {
                let found = w.witness_for(&d).expect("projected generator extends");
                assert_eq!(found.op, d);
                assert_eq!(identity_violation(&a, kind, 1, &found.blocks()), None);
            }
            for z in w.companion_kernel() {
                assert!(z.op.is_zero());
            }
        }
    }
}

#[test]
fn witness_for_rejects_outsiders() {
    let a = unital1();
    let (_, w) = witnessed(&a, SpaceKind::Qder, 0);
    assert!(w
        .witness_for(&Matrix::from_vec(1, 1, vec![frac(3, 2)]))
        .is_some());
    let d = dual();
    let (m, w) = witnessed(&d, SpaceKind::Qder, 0);
    let outside = op(&[&[0, 1], &[0, 0]]);
    assert!(!m.contains(&outside));
    assert!(w.witness_for(&outside).is_none());
}

#[test]
fn violation_reports() {
    let a = dual();
    assert_eq!(
        identity_violation(&a, SpaceKind::Der, 0, &[Matrix::identity(2)]),
        Some(Violation::Pair { i: 0, j: 0 })
    );
    let tw = dual_yau(2);
    assert_eq!(
        identity_violation(&tw, SpaceKind::Der, 0, &[op(&[&[0, 1], &[0, 0]])]),
        Some(Violation::Commutation { block: 0 })
    );
}

#[test]
fn table_matches_direct_solves() {
    let a = dual_yau(3);
    let t = SpaceTable::compute(&a, 2);
    for kind in SpaceKind::DERIVATION_TYPES {
        for k in 0..=2 {
            assert_eq!(t.get(kind, k), &space(&a, kind, k));
        }
    }
    assert_eq!(t.get(SpaceKind::Commutant, 0), &commutant(&a));
    assert_eq!(
        t.witnesses(SpaceKind::Gder, 1),
        &witnessed(&a, SpaceKind::Gder, 1).1
    );
    assert_eq!(
        t.aggregate(SpaceKind::C).total,
        aggregate(&a, SpaceKind::C, 2).total
    );
}

#[test]
fn report_shape() {
    let r = der(&dual(), 0).report();
    assert_eq!(r.dim, 1);
    assert_eq!(r.basis, vec![vec!["0", "0", "0", "1"]]);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.starts_with(r#"{"kind":"der","k":0,"dim":1"#));
}

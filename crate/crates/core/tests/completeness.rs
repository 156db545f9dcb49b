//! Solver spaces against an independent constraint assembly and elimination.

#[path = "support/oracle.rs"]
mod oracle;

use homjordan::corpus::{corpus, random_abelian, random_yau};
use homjordan::solve::{identity_violation, space, SpaceKind, SpaceTable};
use homjordan::HomAlgebra;

const KINDS: [SpaceKind; 7] = [
    SpaceKind::Commutant,
    SpaceKind::Der,
    SpaceKind::Gder,
    SpaceKind::Qder,
    SpaceKind::C,
    SpaceKind::Qc,
    SpaceKind::Zder,
];

fn small_algebras() -> Vec<HomAlgebra> {
    let mut out: Vec<HomAlgebra> = corpus().into_iter().filter(|a| a.dim() <= 3).collect();
    out.extend((0..4).map(|s| random_abelian(2, s)));
    out.extend((0..4).map(random_yau));
    out
}

#[test]
fn solver_matches_oracle_on_small_algebras() {
    for a in small_algebras() {
        for kind in KINDS {
            for k in 0..=3 {
                let lib = space(&a, kind, k);
                let reference = oracle::space(&a, kind, k);
                assert_eq!(
                    lib.space.basis().to_rows(),
                    reference,
                    "{} {kind} k={k}",
                    a.name()
                );
                if kind == SpaceKind::Commutant {
                    break;
                }
            }
        }
    }
}

#[test]
fn witness_spaces_match_oracle_dimensions() {
    for a in small_algebras() {
        let table = SpaceTable::compute_kinds(&a, &[SpaceKind::Gder, SpaceKind::Qder], 2);
        for kind in [SpaceKind::Gder, SpaceKind::Qder] {
            for k in 0..=2 {
                assert_eq!(
                    table.witnesses(kind, k).solutions.dim(),
                    oracle::solution_dim(&a, kind, k),
                    "{} {kind} k={k}",
                    a.name()
                );
            }
        }
    }
}

#[test]
fn every_basis_operator_satisfies_its_identity() {
    for a in corpus() {
        let table = SpaceTable::compute(&a, 3);
        for kind in SpaceKind::DERIVATION_TYPES {
            for k in 0..=3 {
                for op in table.get(kind, k).operators() {
                    let ops = if kind.is_pointwise() {
                        vec![op]
                    } else {
                        table
                            .witnesses(kind, k)
                            .witness_for(&op)
                            .expect("basis operator has a witness")
                            .blocks()
                    };
                    assert_eq!(
                        identity_violation(&a, kind, k, &ops),
                        None,
                        "{} {kind} k={k}",
                        a.name()
                    );
                }
            }
        }
    }
}

#[test]
fn unital_hand_oracle() {
    let a = homjordan::corpus::unital1();
    let dims: Vec<usize> = SpaceKind::DERIVATION_TYPES
        .iter()
        .map(|&kind| oracle::space(&a, kind, 0).len())
        .collect();
    assert_eq!(dims, vec![0, 1, 1, 1, 1, 0]);
}

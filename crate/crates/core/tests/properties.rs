//! Property tests for the exact linear algebra layer and the algebraic
//! constructions built on it.

#[path = "support/oracle.rs"]
mod oracle;

use homjordan::algebra::quotient;
use homjordan::corpus::corpus;
use homjordan::exactlin::{frac, nullspace, rref, Matrix, Scalar, Subspace};
use homjordan::solve::{der, identity_violation, nu_prime, SpaceKind};
use num_traits::Zero;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    // sparse-ish entries so that kernels are often nontrivial
    prop_oneof![
        2 => Just(frac(0, 1)),
        3 => (-100i64..=100, 1i64..=100).prop_map(|(p, q)| frac(p, q)),
    ]
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(scalar(), r * c).prop_map(move |data| Matrix::from_vec(r, c, data))
    })
}

fn subspace_pair(ambient: usize) -> impl Strategy<Value = (Subspace, Subspace)> {
    let side = move || {
        (0..=ambient).prop_flat_map(move |k| {
            prop::collection::vec(scalar(), k * ambient).prop_map(move |data| {
                Subspace::span(
                    ambient,
                    data.chunks(ambient.max(1)).map(<[Scalar]>::to_vec).take(k),
                )
            })
        })
    };
    (side(), side())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn nullspace_is_sound_and_rank_nullity_holds(m in matrix(7, 8)) {
        let ker = nullspace(&m);
        for v in ker.basis_vectors() {
            prop_assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(m.rank() + ker.dim(), m.cols());
    }

    #[test]
    fn rref_agrees_with_dense_gauss_jordan(m in matrix(6, 7)) {
        let e = rref(&m);
        let (rows, pivots) = oracle::gauss_jordan(m.to_rows(), m.cols());
        prop_assert_eq!(e.matrix.to_rows(), rows);
        prop_assert_eq!(e.pivots, pivots);
    }

    #[test]
    fn grassmann_identity((u, w) in subspace_pair(5)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&w).unwrap());
        prop_assert!(u.is_subspace_of(&s).unwrap() && w.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn complement_is_a_direct_complement((u, _) in subspace_pair(6)) {
        let c = u.complement();
        prop_assert!(u.is_direct(&c).unwrap());
        prop_assert!(u.sum(&c).unwrap().is_full());
    }

    #[test]
    fn coordinates_reconstruct_members((u, _) in subspace_pair(5), coeffs in prop::collection::vec(scalar(), 5)) {
        let v = u.combine(&coeffs[..u.dim()]);
        prop_assert_eq!(u.coordinates(&v).unwrap(), Some(coeffs[..u.dim()].to_vec()));
    }

    #[test]
    fn invertible_matrices_invert(m in matrix(5, 5)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotients_by_generated_ideals_are_epimorphisms(
        idx in 0usize..22,
        seed in prop::collection::vec(-3i64..=3, 6),
    ) {
        let all = corpus();
        let a = &all[idx % all.len()];
        let n = a.dim();
        let v: Vec<Scalar> = seed.iter().take(n).map(|&x| frac(x, 1)).collect();
        let ideal = a.ideal_closure(&Subspace::span(n, [v])).unwrap();
        let q = quotient(a, &ideal).unwrap();
        prop_assert!(q.is_homomorphism());
        prop_assert!(q.is_surjective());
        prop_assert_eq!(q.kernel(), ideal.clone());
        prop_assert_eq!(q.pi.mul(&q.section), Matrix::identity(q.target.dim()));
        prop_assert!(q.target.check_hom_jordan().ok);
    }

    #[test]
    fn brackets_of_derivations_add_powers(
        idx in 0usize..22,
        k in 0usize..=1,
        s in 0usize..=1,
        c1 in prop::collection::vec(-2i64..=2, 16),
        c2 in prop::collection::vec(-2i64..=2, 16),
    ) {
        let all = corpus();
        let a = &all[idx % all.len()];
        prop_assume!(a.check_multiplicative());
        let pick = |k: usize, c: &[i64]| {
            let ops = der(a, k).operators();
            ops.iter().zip(c).fold(Matrix::zeros(a.dim(), a.dim()), |acc, (m, &x)| acc.add(&m.scale(&frac(x, 1))))
        };
        let (d1, d2) = (pick(k, &c1), pick(s, &c2));
        let b = nu_prime(&d1, &d2).unwrap();
        prop_assert_eq!(identity_violation(a, SpaceKind::Der, k + s, &[b]), None);
    }
}

//! Named example algebras used by the CLI generator, the tests and the
//! benchmarks. Every constructor returns an algebra with checked flags.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{commutant_plus_algebra, direct_sum, yau_twist, HomAlgebra};
use crate::exactlin::{frac, int, Matrix, Scalar};

/// `(i, j, [(k, c)])`: `μ(e_i, e_j) = Σ c e_k`, mirrored to `(j, i)`.
type Entry<'a> = (usize, usize, &'a [(usize, Scalar)]);

fn table(n: usize, entries: &[Entry]) -> Vec<Vec<Vec<Scalar>>> {
    let mut mu = vec![vec![vec![int(0); n]; n]; n];
    for (i, j, terms) in entries {
        for (k, c) in terms.iter() {
            mu[*i][*j][*k] = c.clone();
            mu[*j][*i][*k] = c.clone();
        }
    }
    mu
}

fn build(name: &str, mu: Vec<Vec<Vec<Scalar>>>) -> HomAlgebra {
    let n = mu.len();
    HomAlgebra::new(name, mu, Matrix::identity(n))
        .expect("well-formed table")
        .with_checked_flags()
}

fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
}

/// `μ = 0`, `α = id`.
pub fn abelian(n: usize) -> HomAlgebra {
    HomAlgebra::abelian(format!("abelian-{n}"), Matrix::identity(n)).with_checked_flags()
}

/// `μ = 0` with an arbitrary twist.
pub fn abelian_with(name: &str, alpha: Matrix) -> HomAlgebra {
    HomAlgebra::abelian(name, alpha).with_checked_flags()
}

/// `ℚ` itself: `e·e = e`.
pub fn unital1() -> HomAlgebra {
    build("unital-1", table(1, &[(0, 0, &[(0, int(1))])])).asserted_simple(true)
}

/// Dual numbers on `{e, f}`: `e·e = e`, `e·f = f`, `f·f = 0`.
pub fn dual() -> HomAlgebra {
    build(
        "dual",
        table(2, &[(0, 0, &[(0, int(1))]), (0, 1, &[(1, int(1))])]),
    )
}

/// `ℚ[x]/(x³)` on `{1, x, x²}`.
pub fn poly3() -> HomAlgebra {
    build(
        "poly3",
        table(
            3,
            &[
                (0, 0, &[(0, int(1))]),
                (0, 1, &[(1, int(1))]),
                (0, 2, &[(2, int(1))]),
                (1, 1, &[(2, int(1))]),
            ],
        ),
    )
}

/// Symmetric 2×2 matrices under `x∘y = (xy + yx)/2`, on the basis
/// `E11, E22, S = E12 + E21`.
pub fn sym2() -> HomAlgebra {
    let h = frac(1, 2);
    build(
        "sym2",
        table(
            3,
            &[
                (0, 0, &[(0, int(1))]),
                (1, 1, &[(1, int(1))]),
                (0, 2, &[(2, h.clone())]),
                (1, 2, &[(2, h)]),
                (2, 2, &[(0, int(1)), (1, int(1))]),
            ],
        ),
    )
    .asserted_simple(true)
}

/// `e·e = e`, `e·f = f/2`, `f·f = z`, `z` annihilates everything. Perfect,
/// with centralizer `span{z}`.
pub fn peirce3() -> HomAlgebra {
    build(
        "peirce-3",
        table(
            3,
            &[
                (0, 0, &[(0, int(1))]),
                (0, 1, &[(1, frac(1, 2))]),
                (1, 1, &[(2, int(1))]),
            ],
        ),
    )
}

/// Yau twist with a checked morphism; keeps `asserted_simple`, since the
/// Hom-ideals of a twist by an invertible morphism are those of the original.
pub fn twisted(a: &HomAlgebra, beta: &Matrix, name: &str) -> HomAlgebra {
    let simple = a.flags().asserted_simple && beta.is_invertible();
    yau_twist(a, beta)
        .expect("beta is a morphism commuting with alpha")
        .with_name(name)
        .with_checked_flags()
        .asserted_simple(simple)
}

/// Dual numbers twisted by `e ↦ e, f ↦ λf`.
pub fn dual_yau(lambda: i64) -> HomAlgebra {
    twisted(&dual(), &diag(&[1, lambda]), &format!("dual-yau-{lambda}"))
}

/// `ℚ[x]/(x³)` twisted by `x ↦ λx`.
pub fn poly3_yau(lambda: i64) -> HomAlgebra {
    twisted(
        &poly3(),
        &diag(&[1, lambda, lambda * lambda]),
        &format!("poly3-yau-{lambda}"),
    )
}

/// `sym2` twisted by conjugation with `diag(1, −1)`, which negates `S`.
pub fn sym2_conj() -> HomAlgebra {
    twisted(&sym2(), &diag(&[1, 1, -1]), "sym2-conj")
}

/// `sym2` twisted by the swap `E11 ↔ E22`.
pub fn sym2_swap() -> HomAlgebra {
    let beta = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    twisted(&sym2(), &beta, "sym2-swap")
}

/// The plus algebra on the commutant of `diag(entries)`.
pub fn plus_diag(entries: &[i64]) -> HomAlgebra {
    let tag: Vec<String> = entries.iter().map(i64::to_string).collect();
    commutant_plus_algebra(&diag(entries))
        .with_name(format!("plus-diag-{}", tag.join("-")))
        .with_checked_flags()
}

pub fn sum(a1: &HomAlgebra, a2: &HomAlgebra) -> HomAlgebra {
    direct_sum(a1, a2).with_checked_flags()
}

/// Abelian algebra with a seeded random integer twist.
pub fn random_abelian(n: usize, seed: u64) -> HomAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<Scalar> = (0..n * n).map(|_| int(rng.gen_range(-3..=3))).collect();
    abelian_with(
        &format!("random-abelian-{n}-{seed}"),
        Matrix::from_vec(n, n, entries),
    )
}

/// Dual numbers or `ℚ[x]/(x³)` twisted by a seeded random nonzero `λ`.
pub fn random_yau(seed: u64) -> HomAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lambda = 0;
    while lambda == 0 {
        lambda = rng.gen_range(-4..=4);
    }
    let a = if rng.gen_bool(0.5) {
        poly3_yau(lambda)
    } else {
        dual_yau(lambda)
    };
    let name = format!("random-yau-{seed}-{}", a.name());
    a.with_name(name)
}

/// The standard corpus, in a fixed order.
pub fn corpus() -> Vec<HomAlgebra> {
    vec![
        abelian(2),
        abelian(3),
        abelian_with("abelian-2-diag-1-2", diag(&[1, 2])),
        unital1(),
        dual(),
        dual_yau(2),
        dual_yau(3),
        dual_yau(0),
        poly3(),
        poly3_yau(2),
        sym2(),
        sym2_conj(),
        sym2_swap(),
        plus_diag(&[1, 1]).asserted_simple(true),
        plus_diag(&[1, 2]),
        plus_diag(&[1, 0]),
        peirce3(),
        sum(&unital1(), &unital1()),
        sum(&dual(), &dual()),
        sum(&unital1(), &abelian(1)),
        sum(&dual_yau(2), &unital1()),
        sum(&sym2(), &unital1()),
    ]
}

/// Looks up a corpus member by name.
pub fn by_name(name: &str) -> Option<HomAlgebra> {
    corpus().into_iter().find(|a| a.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid_hom_jordan() {
        let all = corpus();
        assert!(all.len() >= 15);
        for a in &all {
            let r = a.validate();
            assert!(r.commutative, "{}", a.name());
            assert!(
                r.hom_jordan.ok,
                "{} fails at {:?}",
                a.name(),
                r.hom_jordan.failing_tuple
            );
        }
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<String> = corpus().iter().map(|a| a.name().to_string()).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(names.len(), before);
    }

    #[test]
    fn expected_multiplicativity() {
        let non_mult: Vec<String> = corpus()
            .iter()
            .filter(|a| !a.check_multiplicative())
            .map(|a| a.name().to_string())
            .collect();
        assert_eq!(non_mult, vec!["plus-diag-1-2".to_string()]);
    }

    #[test]
    fn peirce3_is_perfect_with_centre() {
        let a = peirce3();
        assert!(a.is_perfect());
        assert_eq!(a.centralizer().dim(), 1);
    }

    #[test]
    fn seeded_generators_are_deterministic() {
        assert_eq!(random_abelian(3, 7), random_abelian(3, 7));
        assert_eq!(random_yau(11), random_yau(11));
    }
}

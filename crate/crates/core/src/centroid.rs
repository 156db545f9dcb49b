//! The centroid as an operator algebra: idempotents and decompositions,
//! symmetry against invariant forms, invariant subspaces, simple algebras
//! and maps induced on quotients.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{invariant_forms, HomAlgebra, QuotientMap};
use crate::error::{Error, Result};
use crate::exactlin::{int, solve_homogeneous, unit, Matrix, Scalar, Subspace};
use crate::solve::{commutant_of, identity_violation, SpaceKind, SpaceTable};
use crate::theorems::operator_span;
use crate::verdict::{gates, ser_matrix, Counterexample, Expectation, Gate, Outcome, Verdict};

/// `ψ ∈ C_{α^k}(V)`, checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentroidElement {
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Matrix,
    pub k: usize,
}

impl CentroidElement {
    pub fn new(a: &HomAlgebra, matrix: Matrix, k: usize) -> Result<Self> {
        let n = a.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.rows(),
            });
        }
        if identity_violation(a, SpaceKind::C, k, std::slice::from_ref(&matrix)).is_some() {
            return Err(Error::NotCentroid(k));
        }
        Ok(CentroidElement { matrix, k })
    }

    pub fn is_idempotent(&self) -> bool {
        self.matrix.mul(&self.matrix) == self.matrix
    }

    /// `2e − id`: the involution `x₁ + x₂ ↦ x₁ − x₂` of the same splitting.
    pub fn involution(&self) -> Matrix {
        self.matrix
            .scale(&int(2))
            .sub(&Matrix::identity(self.matrix.rows()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Generator {
    pub k: usize,
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Matrix,
}

/// `generators[left] ∘ generators[right]`.
#[derive(Debug, Clone, Serialize)]
pub struct Composite {
    pub left: usize,
    pub right: usize,
    pub power: usize,
    /// Membership in `C_{α^power}`, when `power ≤ K`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub in_power: Option<bool>,
    pub in_total: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionTable {
    pub algebra: String,
    pub max_power: usize,
    pub multiplicative: bool,
    pub dims: Vec<usize>,
    pub total_dim: usize,
    pub generators: Vec<Generator>,
    pub composites: Vec<Composite>,
    /// Every composite with `k + s ≤ K` lies in `C_{α^(k+s)}`.
    pub closed_within_bound: bool,
    /// Every composite lies in the bounded total.
    pub closed: bool,
}

pub fn centroid_composition_table(a: &HomAlgebra, max_k: usize) -> CompositionTable {
    let table = SpaceTable::compute_kinds(a, &[SpaceKind::C], max_k);
    let total = table.aggregate(SpaceKind::C);
    let generators: Vec<Generator> = (0..=max_k)
        .flat_map(|k| {
            table
                .get(SpaceKind::C, k)
                .operators()
                .into_iter()
                .map(move |m| Generator { k, matrix: m })
        })
        .collect();
    let mut composites = Vec::new();
    for (l, g) in generators.iter().enumerate() {
        for (r, h) in generators.iter().enumerate() {
            let m = g.matrix.mul(&h.matrix);
            let power = g.k + h.k;
            composites.push(Composite {
                left: l,
                right: r,
                power,
                in_power: (power <= max_k).then(|| table.get(SpaceKind::C, power).contains(&m)),
                in_total: total.total.contains(&m.flatten()).expect("n² ambient"),
            });
        }
    }
    CompositionTable {
        algebra: a.name().to_string(),
        max_power: max_k,
        multiplicative: a.check_multiplicative(),
        dims: total.per_k.iter().map(|s| s.dim()).collect(),
        total_dim: total.total.dim(),
        closed_within_bound: composites.iter().all(|c| c.in_power != Some(false)),
        closed: composites.iter().all(|c| c.in_total),
        generators,
        composites,
    }
}

fn is_direct_sum_of_ideals(a: &HomAlgebra, v1: &Subspace, v2: &Subspace) -> Result<bool> {
    Ok(a.is_hom_ideal(v1)?
        && a.is_hom_ideal(v2)?
        && v1.is_direct(v2)?
        && v1.dim() + v2.dim() == a.dim())
}

/// Projection onto `v1` along `v2`.
///
/// The involution `x₁ + x₂ ↦ x₁ − x₂` squares to the identity rather than
/// to itself, so the idempotent used here is `e₁ = (id + ψ)/2`.
pub fn idempotent_from_decomposition(
    a: &HomAlgebra,
    v1: &Subspace,
    v2: &Subspace,
) -> Result<CentroidElement> {
    let n = a.dim();
    if v1.ambient_dim() != n || v2.ambient_dim() != n {
        return Err(Error::AmbientMismatch {
            left: v1.ambient_dim(),
            right: n,
        });
    }
    if !is_direct_sum_of_ideals(a, v1, v2)? {
        return Err(Error::NotADirectSumOfIdeals);
    }
    let cols: Vec<Vec<Scalar>> = v1
        .basis_vectors()
        .chain(v2.basis_vectors())
        .map(<[Scalar]>::to_vec)
        .collect();
    let b = Matrix::from_columns(n, &cols);
    let keep: Vec<Scalar> = (0..n)
        .map(|i| {
            if i < v1.dim() {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let inv = b.inverse().expect("direct sum spanning V");
    let e = b.mul(&Matrix::diagonal(&keep)).mul(&inv);
    let el = CentroidElement::new(a, e, 0)?;
    debug_assert!(el.is_idempotent());
    Ok(el)
}

/// `(ker ψ, im ψ)` for a centroid idempotent; both are Hom-ideals when `α`
/// is invertible.
pub fn decomposition_from_idempotent(
    a: &HomAlgebra,
    psi: &CentroidElement,
) -> Result<(Subspace, Subspace)> {
    if !psi.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    if identity_violation(a, SpaceKind::C, psi.k, std::slice::from_ref(&psi.matrix)).is_some() {
        return Err(Error::NotCentroid(psi.k));
    }
    if !a.alpha().is_invertible() {
        return Err(Error::Precondition("twist map is not invertible".into()));
    }
    let n = a.dim();
    let ker = crate::exactlin::nullspace(&psi.matrix);
    let im = Subspace::full(n).image(&psi.matrix)?;
    if !is_direct_sum_of_ideals(a, &ker, &im)? {
        return Err(Error::NotADirectSumOfIdeals);
    }
    Ok((ker, im))
}

/// Idempotent from a splitting, checked and mapped back: `e₁` is a
/// nontrivial idempotent of `C_{α⁰}` when both ideals are proper, and
/// `(ker e₁, im e₁) = (v2, v1)`.
pub fn verify_prop52_1(a: &HomAlgebra, v1: &Subspace, v2: &Subspace) -> Result<Verdict> {
    let e = idempotent_from_decomposition(a, v1, v2)?;
    let gate = gates::invertible_twist(a);
    Ok(Verdict::decide(
        "prop52.1.idempotent_round_trip",
        a,
        0,
        gate,
        false,
        || {
            let n = a.dim();
            let proper = !v1.is_zero() && !v2.is_zero();
            if proper && (e.matrix.is_zero() || e.matrix == Matrix::identity(n)) {
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![],
                    e.matrix.clone(),
                    Expectation::InSubspace {
                        label: "idempotents other than 0 and id".into(),
                        space: Subspace::zero(0),
                    },
                ));
            }
            match decomposition_from_idempotent(a, &e) {
                Ok((ker, im)) if &ker == v2 && &im == v1 => Outcome::pass()
                    .note("idempotent is the projection (id + ψ)/2 for the involution ψ = x₁ − x₂"),
                Ok((ker, _)) => Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![e.matrix.clone()],
                    Matrix::from_columns(
                        n,
                        &ker.basis_vectors()
                            .map(<[Scalar]>::to_vec)
                            .collect::<Vec<_>>(),
                    ),
                    Expectation::InSubspace {
                        label: "v2".into(),
                        space: v2.clone(),
                    },
                )),
                Err(err) => Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![],
                    e.matrix.clone(),
                    Expectation::InSubspace {
                        label: format!("decomposable idempotent ({err})"),
                        space: Subspace::zero(0),
                    },
                )),
            }
        },
    ))
}

/// `f(ψ(μ(a, b)), α^k c) = f(α^k μ(a, b), ψ(c))` for every centroid
/// generator, every invariant form and all basis triples.
pub fn verify_prop52_2(a: &HomAlgebra, max_k: usize) -> Verdict {
    verify_prop52_2_with(a, max_k, false)
}

pub fn verify_prop52_2_with(a: &HomAlgebra, max_k: usize, explore: bool) -> Verdict {
    let gate = gates::all([perfect(a), gates::multiplicative(a)]);
    Verdict::decide("prop52.2.symmetric", a, max_k, gate, explore, || {
        let n = a.dim();
        let table = SpaceTable::compute_kinds(a, &[SpaceKind::C], max_k);
        let forms = invariant_forms(a);
        let products: Vec<Vec<Vec<Scalar>>> = (0..n)
            .map(|i| (0..n).map(|j| a.basis_product(i, j)).collect())
            .collect();
        for k in 0..=max_k {
            let ak = a.alpha().pow(k);
            for psi in table.get(SpaceKind::C, k).operators() {
                for f in &forms {
                    for (i, row) in products.iter().enumerate() {
                        for (j, p) in row.iter().enumerate() {
                            let (pp, ap) = (psi.apply(p), ak.apply(p));
                            for c in 0..n {
                                let ec = unit(n, c);
                                let lhs = f.eval(&pp, &ak.apply(&ec));
                                let rhs = f.eval(&ap, &psi.apply(&ec));
                                if lhs != rhs {
                                    return Outcome::fail(Counterexample::new(
                                        k,
                                        None,
                                        vec![psi.clone(), f.gram.clone()],
                                        Matrix::from_vec(1, 1, vec![lhs]),
                                        Expectation::Equals {
                                            label: format!("f(α^k μ(e{i}, e{j})), ψ(e{c}))"),
                                            expected: Matrix::from_vec(1, 1, vec![rhs]),
                                        },
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Outcome::pass().note(format!("{} invariant forms", forms.len()))
    })
}

fn perfect(a: &HomAlgebra) -> Gate {
    if a.is_perfect() {
        Ok(())
    } else {
        Err(format!(
            "not perfect: μ(V,V) has dimension {}",
            a.derived().dim()
        ))
    }
}

/// `Z_V(I) = {x : μ(x, y) = 0 ∀ y ∈ I}`.
pub fn z_of_subset(a: &HomAlgebra, i: &Subspace) -> Subspace {
    a.annihilator_of(i)
}

fn invertible_on(a: &HomAlgebra, i: &Subspace) -> Result<bool> {
    let image = i.image(a.alpha())?;
    Ok(image.is_subspace_of(i)? && image.dim() == i.dim())
}

fn maps_into(op: &Matrix, from: &Subspace, into: &Subspace) -> bool {
    from.basis_vectors()
        .all(|v| into.contains(&op.apply(v)).expect("ambient"))
}

fn centroid_invariance(a: &HomAlgebra, max_k: usize, s: &Subspace, label: &str) -> Outcome {
    let table = SpaceTable::compute_kinds(a, &[SpaceKind::C], max_k);
    for k in 0..=max_k {
        for psi in table.get(SpaceKind::C, k).operators() {
            if !maps_into(&psi, s, s) {
                return Outcome::fail(Counterexample::new(
                    k,
                    None,
                    vec![],
                    psi,
                    Expectation::MapsInto {
                        label: label.into(),
                        from: s.clone(),
                        into: s.clone(),
                    },
                ));
            }
        }
    }
    Outcome::pass().note(format!("{label} has dimension {}", s.dim()))
}

/// `Z_V(I)` is invariant under every centroid generator, `k ≤ K`. Requires
/// `I` to be `α`-invariant with `α|_I` invertible.
pub fn verify_prop53(a: &HomAlgebra, i: &Subspace, max_k: usize) -> Result<Verdict> {
    if i.ambient_dim() != a.dim() {
        return Err(Error::AmbientMismatch {
            left: i.ambient_dim(),
            right: a.dim(),
        });
    }
    if !invertible_on(a, i)? {
        return Err(Error::Precondition(
            "I must be α-invariant with α restricted to I invertible".into(),
        ));
    }
    let z = z_of_subset(a, i);
    Ok(Verdict::decide(
        "prop53.z_invariant",
        a,
        max_k,
        Ok(()),
        false,
        || centroid_invariance(a, max_k, &z, "Z_V(I)"),
    ))
}

/// A perfect Hom-ideal is invariant under every centroid generator.
pub fn verify_prop53_ideal(a: &HomAlgebra, j: &Subspace, max_k: usize) -> Result<Verdict> {
    if !a.is_hom_ideal(j)? {
        return Err(Error::NotAnIdeal);
    }
    if !a.product_subspace(j, j)?.equals(j)? {
        return Err(Error::Precondition("ideal is not perfect".into()));
    }
    Ok(Verdict::decide(
        "prop53.perfect_ideal_invariant",
        a,
        max_k,
        Ok(()),
        false,
        || centroid_invariance(a, max_k, j, "J"),
    ))
}

/// Number of seeded random probes used as simplicity evidence.
pub const SIMPLICITY_PROBES: usize = 50;
const SIMPLICITY_SEED: u64 = 0x5eed_0051;

/// Whether the ideal generated by every basis vector and by seeded random
/// vectors is the whole algebra. Necessary for simplicity, not sufficient.
pub fn simplicity_evidence(a: &HomAlgebra) -> Gate {
    let n = a.dim();
    if n == 0 {
        return Err("zero algebra".into());
    }
    if a.is_abelian() {
        return Err("product is identically zero".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SIMPLICITY_SEED);
    let probes = (0..n)
        .map(|i| unit(n, i))
        .chain((0..SIMPLICITY_PROBES).map(|_| {
            let v: Vec<Scalar> = (0..n).map(|_| int(rng.gen_range(-5..=5))).collect();
            v
        }));
    for v in probes {
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        let closure = a
            .ideal_closure(&Subspace::span(n, [v.clone()]))
            .expect("ambient matches");
        if !closure.is_full() {
            return Err(format!(
                "a nonzero vector generates a proper ideal of dimension {}",
                closure.dim()
            ));
        }
    }
    Ok(())
}

/// If the bounded centroid total is `span{id}` then `α = id`.
pub fn verify_prop51(a: &HomAlgebra, max_k: usize) -> Verdict {
    verify_prop51_with(a, max_k, false)
}

pub fn verify_prop51_with(a: &HomAlgebra, max_k: usize, explore: bool) -> Verdict {
    let n = a.dim();
    let asserted = if a.flags().asserted_simple {
        Ok(())
    } else {
        Err("algebra is not asserted simple".to_string())
    };
    let pre = gates::all([asserted, gates::multiplicative(a)]).and_then(|_| simplicity_evidence(a));
    let gate = pre.and_then(|_| {
        let total = crate::solve::aggregate(a, SpaceKind::C, max_k).total;
        let scalars = Subspace::span(n * n, [Matrix::identity(n).flatten()]);
        if total == scalars {
            Ok(())
        } else {
            Err(format!(
                "bounded centroid has dimension {}, not the scalars",
                total.dim()
            ))
        }
    });
    Verdict::decide("prop51.alpha_is_identity", a, max_k, gate, explore, || {
        if a.alpha() == &Matrix::identity(n) {
            Outcome::pass().note(format!(
                "simplicity evidence: {n} basis and {SIMPLICITY_PROBES} random ideal closures are full"
            ))
        } else {
            Outcome::fail(Counterexample::new(
                0,
                None,
                vec![],
                a.alpha().clone(),
                Expectation::Equals {
                    label: "identity".into(),
                    expected: Matrix::identity(n),
                },
            ))
        }
    })
}

/// `span{L_x : x ∈ V}` in `End(V)`.
pub fn mult_span(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    operator_span(
        n,
        (0..n).map(|i| a.left_mul(&unit(n, i)).expect("basis vector")),
    )
}

/// Closure of [`mult_span`] under composition (without the identity).
pub fn mult_envelope(a: &HomAlgebra) -> Subspace {
    let n = a.dim();
    let gens: Vec<Matrix> = (0..n)
        .map(|i| a.left_mul(&unit(n, i)).expect("basis vector"))
        .collect();
    let mut span = mult_span(a);
    loop {
        let ops: Vec<Matrix> = span
            .basis_vectors()
            .map(|v| Matrix::unflatten(n, v))
            .collect();
        let next = span
            .sum(&operator_span(
                n,
                ops.iter().flat_map(|m| gens.iter().map(move |g| m.mul(g))),
            ))
            .expect("n² ambient");
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}

/// `f̄` with `π ∘ f = f̄ ∘ π`.
#[derive(Debug, Clone)]
pub struct InducedMap {
    pub quotient: QuotientMap,
    pub source_op: Matrix,
    pub induced_op: Matrix,
}

/// `f̄ = π f s`, well defined because `f(ker π) ⊆ ker π`.
fn pi_end(q: &QuotientMap, f: &Matrix) -> Matrix {
    q.pi.mul(f).mul(&q.section)
}

pub fn induced_map(q: &QuotientMap, f: &Matrix) -> Result<InducedMap> {
    let n1 = q.source.dim();
    if f.rows() != n1 || f.cols() != n1 {
        return Err(Error::DimensionMismatch {
            expected: n1,
            found: f.rows(),
        });
    }
    let alpha = q.source.alpha();
    if f.mul(alpha) != alpha.mul(f) {
        return Err(Error::NotInCommutant);
    }
    if !maps_into(f, &q.ideal, &q.ideal) {
        return Err(Error::DoesNotPreserveIdeal);
    }
    let induced_op = pi_end(q, f);
    debug_assert_eq!(q.pi.mul(f), induced_op.mul(&q.pi));
    debug_assert_eq!(
        induced_op.mul(q.target.alpha()),
        q.target.alpha().mul(&induced_op)
    );
    Ok(InducedMap {
        quotient: q.clone(),
        source_op: f.clone(),
        induced_op,
    })
}

/// `End(V₁, ker π) = {f ∈ 𝒲₁ : f(ker π) ⊆ ker π}`.
pub fn ideal_preserving(q: &QuotientMap) -> Subspace {
    let n = q.source.dim();
    let w = q.ideal.annihilator();
    // w·(f z) = Σ w_r f_rc z_c for z ∈ ker π and w ⊥ ker π
    let rows = q.ideal.basis_vectors().flat_map(|z| {
        w.basis_vectors()
            .map(|wv| {
                let mut row = vec![Scalar::zero(); n * n];
                for (r, wr) in wv.iter().enumerate() {
                    if wr.is_zero() {
                        continue;
                    }
                    for (c, zc) in z.iter().enumerate() {
                        row[r * n + c] = wr * zc;
                    }
                }
                row
            })
            .collect::<Vec<_>>()
    });
    solve_homogeneous(n * n, rows)
        .intersect(&commutant_of(q.source.alpha()))
        .expect("n² ambient")
}

/// Reading of the undefined multiplication algebra used by the quotient checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MultReading {
    /// `span{L_x}`.
    #[default]
    Span,
    /// The composition closure of `span{L_x}`.
    Envelope,
}

fn unflatten_all(n: usize, s: &Subspace) -> Vec<Matrix> {
    s.basis_vectors().map(|v| Matrix::unflatten(n, v)).collect()
}

fn preserves_kernel_ce(q: &QuotientMap, k: usize, f: Matrix, label: &str) -> Counterexample {
    Counterexample::new(
        k,
        None,
        vec![],
        f,
        Expectation::MapsInto {
            label: label.into(),
            from: q.ideal.clone(),
            into: q.ideal.clone(),
        },
    )
}

fn preserve_all(q: &QuotientMap, c1: &SpaceTable, max_k: usize, label: &str) -> Outcome {
    for k in 0..=max_k {
        for f in c1.get(SpaceKind::C, k).operators() {
            if !maps_into(&f, &q.ideal, &q.ideal) {
                return Outcome::fail(preserves_kernel_ce(q, k, f, label));
            }
        }
    }
    Outcome::pass()
}

/// Quotient-induced maps on `End(V₁, ker π)` and the centroid.
pub fn verify_thm54(q: &QuotientMap, max_k: usize) -> Vec<Verdict> {
    verify_thm54_with(q, max_k, MultReading::Span, false)
}

pub fn verify_thm54_with(
    q: &QuotientMap,
    max_k: usize,
    reading: MultReading,
    explore: bool,
) -> Vec<Verdict> {
    let (v1, v2) = (&q.source, &q.target);
    let (n1, n2) = (v1.dim(), v2.dim());
    let end = ideal_preserving(q);
    let end_ops = unflatten_all(n1, &end);
    let c1 = SpaceTable::compute_kinds(v1, &[SpaceKind::C], max_k);
    let c2 = SpaceTable::compute_kinds(v2, &[SpaceKind::C], max_k);
    let z1 = v1.centralizer();
    let kernel_central = q.ideal.is_subspace_of(&z1).expect("ambient");
    let decide = |claim: &str, gate: Gate, run: &dyn Fn() -> Outcome| {
        Verdict::decide(claim, v1, max_k, gate, explore, run)
    };
    let surjective = || gates::invertible_twist(v1);
    let mut out = Vec::new();

    out.push(decide("thm54.induced_in_commutant", surjective(), &|| {
        for f in &end_ops {
            let fb = pi_end(q, f);
            if q.pi.mul(f) != fb.mul(&q.pi) {
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![f.clone(), fb.clone()],
                    q.pi.mul(f),
                    Expectation::Equals {
                        label: "f̄ ∘ π".into(),
                        expected: fb.mul(&q.pi),
                    },
                ));
            }
            if fb.mul(v2.alpha()) != v2.alpha().mul(&fb) {
                return Outcome::fail(
                    Counterexample::new(
                        0,
                        None,
                        vec![f.clone()],
                        fb,
                        Expectation::InSpace {
                            kind: SpaceKind::Commutant,
                            k: 0,
                        },
                    )
                    .on(v2),
                );
            }
        }
        Outcome::pass().note(format!("End(V₁, ker π) ∩ 𝒲₁ has dimension {}", end.dim()))
    }));

    out.push(decide("thm54.1.homomorphism", surjective(), &|| {
        let images: Vec<Matrix> = end_ops.iter().map(|f| pi_end(q, f)).collect();
        for (f, fb) in end_ops.iter().zip(&images) {
            let lhs = pi_end(q, &v1.alpha().mul(f));
            let rhs = v2.alpha().mul(fb);
            if lhs != rhs {
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![f.clone()],
                    lhs,
                    Expectation::Equals {
                        label: "σ₂(π_End(f))".into(),
                        expected: rhs,
                    },
                ));
            }
            for (g, gb) in end_ops.iter().zip(&images) {
                let lhs = pi_end(q, &f.mul(g));
                let rhs = fb.mul(gb);
                if lhs != rhs {
                    return Outcome::fail(Counterexample::new(
                        0,
                        None,
                        vec![f.clone(), g.clone()],
                        lhs,
                        Expectation::Equals {
                            label: "π_End(f) ∘ π_End(g)".into(),
                            expected: rhs,
                        },
                    ));
                }
            }
        }
        Outcome::pass()
    }));

    out.push(decide("thm54.1a.mult", surjective(), &|| {
        for i in 0..n1 {
            let lx = v1.left_mul(&unit(n1, i)).expect("basis vector");
            if !maps_into(&lx, &q.ideal, &q.ideal) {
                return Outcome::fail(preserves_kernel_ce(q, 0, lx, "ker π"));
            }
            let lhs = pi_end(q, &lx);
            let rhs = v2
                .left_mul(&q.project(&unit(n1, i)))
                .expect("projected vector");
            if lhs != rhs {
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![lx],
                    lhs,
                    Expectation::Equals {
                        label: format!("L_π(e{i})"),
                        expected: rhs,
                    },
                ));
            }
        }
        let (m1, m2) = match reading {
            MultReading::Span => (mult_span(v1), mult_span(v2)),
            MultReading::Envelope => (mult_envelope(v1), mult_envelope(v2)),
        };
        let image = operator_span(n2, unflatten_all(n1, &m1).iter().map(|f| pi_end(q, f)));
        let extra = image
            .basis_vectors()
            .find(|v| !m2.contains(v).expect("ambient"))
            .map(<[Scalar]>::to_vec);
        let missing = m2
            .basis_vectors()
            .find(|v| !image.contains(v).expect("ambient"))
            .map(<[Scalar]>::to_vec);
        match (extra, missing) {
            (None, None) => {
                Outcome::pass().note(format!("{reading:?} reading, dimension {}", m2.dim()))
            }
            (Some(v), _) => Outcome::fail(
                Counterexample::new(
                    0,
                    None,
                    vec![],
                    Matrix::unflatten(n2, &v),
                    Expectation::InSubspace {
                        label: "Mult(V₂)".into(),
                        space: m2.clone(),
                    },
                )
                .on(v2),
            ),
            (None, Some(v)) => Outcome::fail(
                Counterexample::new(
                    0,
                    None,
                    vec![],
                    Matrix::unflatten(n2, &v),
                    Expectation::InSubspace {
                        label: "π_End(Mult(V₁))".into(),
                        space: image.clone(),
                    },
                )
                .on(v2),
            ),
        }
    }));

    let c_cap_end = |k: usize| -> Subspace {
        c1.get(SpaceKind::C, k)
            .space
            .intersect(&end)
            .expect("n² ambient")
    };

    out.push(decide("thm54.1a.centroid", surjective(), &|| {
        for k in 0..=max_k {
            let target = c2.get(SpaceKind::C, k);
            for f in unflatten_all(n1, &c_cap_end(k)) {
                let fb = pi_end(q, &f);
                if !target.contains(&fb) {
                    return Outcome::fail(
                        Counterexample::new(
                            k,
                            None,
                            vec![f],
                            fb,
                            Expectation::InSpace {
                                kind: SpaceKind::C,
                                k,
                            },
                        )
                        .on(v2),
                    );
                }
            }
        }
        Outcome::pass()
    }));

    let kernel_is_centre = if q.ideal == z1 {
        Ok(())
    } else {
        Err("ker π differs from Z(V₁)".to_string())
    };
    out.push(decide(
        "thm54.1c.preserves_kernel",
        gates::all([surjective(), kernel_is_centre]),
        &|| preserve_all(q, &c1, max_k, "ker π = Z(V₁)"),
    ));

    let perfect_central = gates::all([
        surjective(),
        perfect(v1),
        if kernel_central {
            Ok(())
        } else {
            Err("ker π is not contained in Z(V₁)".to_string())
        },
    ]);
    out.push(decide(
        "thm54.2.injective",
        perfect_central.clone(),
        &|| {
            let dom = (0..=max_k)
                .map(c_cap_end)
                .try_fold(Subspace::zero(n1 * n1), |acc, s| acc.sum(&s))
                .expect("n² ambient");
            let ops = unflatten_all(n1, &dom);
            let image = operator_span(n2, ops.iter().map(|f| pi_end(q, f)));
            if image.dim() == dom.dim() {
                return Outcome::pass().note(format!(
                    "π_C injective on a space of dimension {}",
                    dom.dim()
                ));
            }
            // a nonzero kernel element of the induced linear map
            let cols: Vec<Vec<Scalar>> = ops.iter().map(|f| pi_end(q, f).flatten()).collect();
            let m = Matrix::from_columns(n2 * n2, &cols);
            let kernel = crate::exactlin::nullspace(&m);
            let coeffs = kernel.basis_vectors().next().expect("rank deficient");
            let f = ops
                .iter()
                .zip(coeffs)
                .fold(Matrix::zeros(n1, n1), |acc, (op, c)| acc.add(&op.scale(c)));
            let fb = pi_end(q, &f);
            Outcome::fail(Counterexample::new(
                0,
                None,
                vec![f],
                fb,
                Expectation::InSubspace {
                    label: "nonzero image of a nonzero centroid element".into(),
                    space: Subspace::zero(0),
                },
            ))
        },
    ));

    let total_gate = gates::all([
        perfect_central,
        gates::trivial_centralizer(v2).map_err(|r| format!("quotient {r}")),
    ]);
    out.push(decide("thm54.3.total", total_gate, &|| {
        if q.ideal != z1 {
            let v = z1
                .basis_vectors()
                .find(|v| !q.ideal.contains(v).expect("ambient"))
                .expect("ker π ⊊ Z(V₁)");
            return Outcome::fail(Counterexample::new(
                0,
                None,
                vec![],
                Matrix::from_columns(n1, &[v.to_vec()]),
                Expectation::InSubspace {
                    label: "ker π".into(),
                    space: q.ideal.clone(),
                },
            ));
        }
        preserve_all(q, &c1, max_k, "ker π")
    }));
    out
}

/// Subsets `I` used for the invariance check when none is supplied: `V`,
/// `μ(V, V)`, `Z(V)` and the summand blocks, kept when `α|_I` is invertible.
pub fn default_prop53_subsets(a: &HomAlgebra) -> Vec<(String, Subspace)> {
    let n = a.dim();
    let mut out = vec![
        ("V".to_string(), Subspace::full(n)),
        ("μ(V,V)".to_string(), a.derived()),
        ("Z(V)".to_string(), a.centralizer()),
    ];
    if let Some(blocks) = a.blocks() {
        let mut offset = 0;
        for (b, &len) in blocks.iter().enumerate() {
            out.push((
                format!("block {b}"),
                Subspace::coordinate(n, offset..offset + len),
            ));
            offset += len;
        }
    }
    out.retain(|(_, s)| invertible_on(a, s).unwrap_or(false));
    out.dedup_by(|x, y| x.1 == y.1);
    out
}

/// Candidate quotient ideals when none is supplied: `Z(V)` and the summand
/// blocks, kept when they are nonzero Hom-ideals.
pub fn default_quotient_ideals(a: &HomAlgebra) -> Vec<(String, Subspace)> {
    let n = a.dim();
    let mut out = vec![("Z(V)".to_string(), a.centralizer())];
    if let Some(blocks) = a.blocks() {
        let mut offset = 0;
        for (b, &len) in blocks.iter().enumerate() {
            out.push((
                format!("block {b}"),
                Subspace::coordinate(n, offset..offset + len),
            ));
            offset += len;
        }
    }
    out.retain(|(_, s)| !s.is_zero() && a.is_hom_ideal(s).unwrap_or(false));
    out
}

fn labelled(mut v: Verdict, label: &str) -> Verdict {
    v.notes.insert(0, label.to_string());
    v
}

/// Every centroid check on one algebra, with default instances for the
/// subset and quotient arguments.
pub fn section5(a: &HomAlgebra, max_k: usize, reading: MultReading, explore: bool) -> Vec<Verdict> {
    let n = a.dim();
    let mut out = vec![
        verify_prop51_with(a, max_k, explore),
        verify_prop52_2_with(a, max_k, explore),
    ];
    if let Some(blocks) = a.blocks() {
        let v1 = Subspace::coordinate(n, 0..blocks[0]);
        let v2 = Subspace::coordinate(n, blocks[0]..n);
        if let Ok(v) = verify_prop52_1(a, &v1, &v2) {
            out.push(v);
        }
    }
    for (label, i) in default_prop53_subsets(a) {
        let v = verify_prop53(a, &i, max_k).expect("preconditions filtered");
        out.push(labelled(v, &format!("I = {label}")));
        if a.is_hom_ideal(&i).unwrap_or(false)
            && a.product_subspace(&i, &i).map(|p| p == i).unwrap_or(false)
            && !i.is_zero()
        {
            let v = verify_prop53_ideal(a, &i, max_k).expect("perfect ideal");
            out.push(labelled(v, &format!("J = {label}")));
        }
    }
    for (label, k) in default_quotient_ideals(a) {
        let q = crate::algebra::quotient(a, &k).expect("filtered to ideals");
        out.extend(
            verify_thm54_with(&q, max_k, reading, explore)
                .into_iter()
                .map(|v| labelled(v, &format!("ker π = {label}"))),
        );
    }
    out
}

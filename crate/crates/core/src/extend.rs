//! The degree-two extension `V̆ = Vt + Vt²` and the embedding `φ` of
//! quasiderivations as derivations of `V̆`.
//!
//! Coordinates on `V̆`: the first `n` are the `t`-part, the last `n` the
//! `t²`-part. `μ̆(xt, yt) = μ(x, y)t²` and every other product vanishes;
//! `ᾰ = α ⊕ α`.

use num_traits::Zero;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit, Matrix, Scalar, Subspace};
use crate::solve::{identity_violation, SpaceKind, SpaceTable, Witness};
use crate::theorems::operator_span;
use crate::verdict::{gates, Counterexample, Expectation, Gate, Outcome, Verdict};

#[derive(Debug, Clone)]
pub struct ExtendedAlgebra {
    pub base: HomAlgebra,
    pub carrier: HomAlgebra,
    /// `μ(V, V)`.
    pub derived: Subspace,
    /// `U` with `V = U ∔ μ(V, V)`: the standard vectors at the non-pivot
    /// coordinates of `μ(V, V)`.
    pub u_complement: Subspace,
    /// Projection of `V` onto `μ(V, V)` along `U`.
    pub projection: Matrix,
}

pub fn extend_algebra(a: &HomAlgebra) -> ExtendedAlgebra {
    let n = a.dim();
    let carrier = HomAlgebra::from_products(
        format!("{}-ext", a.name()),
        2 * n,
        a.alpha().block_diag(a.alpha()),
        |i, j| {
            let mut out = vec![Scalar::zero(); 2 * n];
            if i < n && j < n {
                out[n..].clone_from_slice(&a.basis_product(i, j));
            }
            out
        },
    )
    .with_checked_flags();
    let derived = a.derived();
    let u_complement = derived.complement();
    // x − Σ x[p_r]·row_r vanishes at every pivot, so lies in U
    let mut projection = Matrix::zeros(n, n);
    for (row, &p) in derived.basis_vectors().zip(derived.pivots()) {
        for (i, x) in row.iter().enumerate() {
            projection[(i, p)] = x.clone();
        }
    }
    ExtendedAlgebra {
        base: a.clone(),
        carrier,
        derived,
        u_complement,
        projection,
    }
}

impl ExtendedAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `φ(D) = D ⊕ D′P`: `at + ut² + bt² ↦ D(a)t + D′(b)t²`.
    pub fn phi(&self, d: &Matrix, d_prime: &Matrix) -> Matrix {
        d.block_diag(&d_prime.mul(&self.projection))
    }

    /// `φ` of a checked witness `(D, D′)` of `QDer_{α^k}`.
    pub fn phi_witness(&self, k: usize, d: &Matrix, d_prime: &Matrix) -> Result<Matrix> {
        let n = self.base.dim();
        if d.rows() != n || d.cols() != n || d_prime.rows() != n || d_prime.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: d.rows(),
            });
        }
        let ops = [d.clone(), d_prime.clone()];
        if identity_violation(&self.base, SpaceKind::Qder, k, &ops).is_some() {
            return Err(Error::InvalidWitness(k));
        }
        Ok(self.phi(d, d_prime))
    }

    fn phi_of(&self, w: &Witness) -> Matrix {
        self.phi(&w.op, &w.companions[0])
    }

    /// `Vt²`.
    pub fn top_degree(&self) -> Subspace {
        let n = self.base.dim();
        Subspace::coordinate(2 * n, n..2 * n)
    }
}

/// Section-four checks on one base algebra.
pub struct ExtensionSuite<'a> {
    a: &'a HomAlgebra,
    max_k: usize,
    ext: ExtendedAlgebra,
    base: SpaceTable,
    carrier: SpaceTable,
    explore: bool,
}

impl<'a> ExtensionSuite<'a> {
    pub fn new(a: &'a HomAlgebra, max_k: usize) -> Self {
        let ext = extend_algebra(a);
        let base = SpaceTable::compute_kinds(a, &[SpaceKind::Qder], max_k);
        let carrier =
            SpaceTable::compute_kinds(&ext.carrier, &[SpaceKind::Der, SpaceKind::Zder], max_k);
        ExtensionSuite {
            a,
            max_k,
            ext,
            base,
            carrier,
            explore: false,
        }
    }

    pub fn exploring(mut self, explore: bool) -> Self {
        self.explore = explore;
        self
    }

    pub fn extension(&self) -> &ExtendedAlgebra {
        &self.ext
    }

    fn verdict<F: FnOnce() -> Outcome>(&self, claim: &str, gate: Gate, run: F) -> Verdict {
        Verdict::decide(claim, self.a, self.max_k, gate, self.explore, run)
    }

    /// `φ(D)` commutes with `ᾰ` only when `P` commutes with `α`.
    fn u_invariant(&self) -> Gate {
        let alpha = self.a.alpha();
        if self.ext.projection.mul(alpha) == alpha.mul(&self.ext.projection) {
            Ok(())
        } else {
            Err("complement U of μ(V,V) is not α-invariant, so φ(D) need not commute with the twist".into())
        }
    }

    /// `φ(QDer_k)` as a subspace of `End(V̆)`.
    pub fn phi_space(&self, k: usize) -> Subspace {
        let gens = self.base.witnesses(SpaceKind::Qder, k).generators();
        operator_span(self.ext.dim(), gens.iter().map(|w| self.ext.phi_of(w)))
    }

    /// `V̆` is Hom-Jordan; products of total degree ≥ 3 vanish; `V̆` is
    /// multiplicative when `V` is.
    pub fn prop41(&self) -> Verdict {
        self.verdict("prop41.extension_is_hom_jordan", Ok(()), || {
            let c = &self.ext.carrier;
            let n = self.a.dim();
            let report = c.check_hom_jordan();
            if let Some(t) = report.failing_tuple {
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![],
                    Matrix::zeros(0, 0),
                    Expectation::InSubspace {
                        label: format!("Hom-Jordan identity of the extension on tuple {t:?}"),
                        space: Subspace::zero(0),
                    },
                ));
            }
            for i in 0..2 * n {
                for j in n.max(i)..2 * n {
                    let p = c.basis_product(i, j);
                    if p.iter().any(|x| !x.is_zero()) {
                        return Outcome::fail(Counterexample::new(
                            0,
                            None,
                            vec![],
                            Matrix::from_columns(2 * n, &[p]),
                            Expectation::InSubspace {
                                label: format!("zero (product of basis {i}, {j} has degree ≥ 3)"),
                                space: Subspace::zero(2 * n),
                            },
                        ));
                    }
                }
            }
            let mut out = Outcome::pass().note(format!("extension dim {}", c.dim()));
            if self.a.check_multiplicative() {
                if let Some((i, j)) = c.non_multiplicative_pair() {
                    return Outcome::fail(Counterexample::new(
                        0,
                        None,
                        vec![],
                        c.alpha().clone(),
                        Expectation::InSubspace {
                            label: format!("multiplicative twist (fails on basis pair {i}, {j})"),
                            space: Subspace::zero(0),
                        },
                    ));
                }
                out = out.note("extension is multiplicative");
            }
            out
        })
    }

    /// Injectivity and witness independence of `φ`, and `φ(QDer_k) ⊆ Der_k(V̆)`.
    pub fn prop42(&self) -> Vec<Verdict> {
        let gate = gates::all([gates::multiplicative(self.a), self.u_invariant()]);
        let n2 = self.ext.dim();
        let injective = self.verdict("prop42.1.phi_injective", gate.clone(), || {
            for k in 0..=self.max_k {
                let dim = self.base.get(SpaceKind::Qder, k).dim();
                let image = self.phi_space(k);
                if image.dim() != dim {
                    let kernel_hint = self.base.witnesses(SpaceKind::Qder, k).generators();
                    let ops: Vec<Matrix> = kernel_hint.iter().map(|w| w.op.clone()).collect();
                    return Outcome::fail(Counterexample::new(
                        k,
                        None,
                        ops,
                        Matrix::zeros(0, 0),
                        Expectation::InSubspace {
                            label: format!("rank of φ(qder_{k}) = {dim}, found {}", image.dim()),
                            space: Subspace::zero(0),
                        },
                    ));
                }
            }
            Outcome::pass()
        });
        let independent = self.verdict("prop42.1.phi_witness_independent", gate.clone(), || {
            for k in 0..=self.max_k {
                for z in self.base.witnesses(SpaceKind::Qder, k).companion_kernel() {
                    let m = self.ext.phi_of(&z);
                    if !m.is_zero() {
                        return Outcome::fail(Counterexample::new(
                            k,
                            None,
                            z.blocks(),
                            m,
                            Expectation::Zero,
                        ));
                    }
                }
            }
            Outcome::pass().note("every alternative companion changes φ by zero")
        });
        let into_der = self.verdict("prop42.2.phi_into_der", gate, || {
            for k in 0..=self.max_k {
                let der = self.carrier.get(SpaceKind::Der, k);
                for w in self.base.witnesses(SpaceKind::Qder, k).generators() {
                    let m = self.ext.phi_of(&w);
                    debug_assert_eq!(m.rows(), n2);
                    if !der.contains(&m) {
                        return Outcome::fail(
                            Counterexample::new(
                                k,
                                None,
                                w.blocks(),
                                m,
                                Expectation::InSpace {
                                    kind: SpaceKind::Der,
                                    k,
                                },
                            )
                            .on(&self.ext.carrier),
                        );
                    }
                }
            }
            Outcome::pass()
        });
        vec![injective, independent, into_der]
    }

    /// `Z(V̆) = Vt²` and `Der(V̆) = φ(QDer(V)) ∔ ZDer(V̆)`, per power and for
    /// the bounded totals.
    pub fn prop43(&self) -> Vec<Verdict> {
        let n2 = self.ext.dim();
        let zero_centre = gates::trivial_centralizer(self.a);
        let centre = self.verdict("prop43.centralizer_is_vt2", zero_centre.clone(), || {
            let z = self.ext.carrier.centralizer();
            let top = self.ext.top_degree();
            if z == top {
                return Outcome::pass();
            }
            let (v, label, space) = match z
                .basis_vectors()
                .find(|v| !top.contains(v).expect("ambient"))
            {
                Some(v) => (v.to_vec(), "Vt²", top.clone()),
                None => {
                    let v = top
                        .basis_vectors()
                        .find(|v| !z.contains(v).expect("ambient"))
                        .expect("differ");
                    (v.to_vec(), "Z(V̆)", z.clone())
                }
            };
            Outcome::fail(Counterexample::new(
                0,
                None,
                vec![],
                Matrix::from_columns(n2, &[v]),
                Expectation::InSubspace {
                    label: label.into(),
                    space,
                },
            ))
        });
        let gate = gates::all([
            zero_centre,
            gates::invertible_twist(self.a),
            self.u_invariant(),
        ]);
        let per_k = self.verdict("prop43.decomposition_per_k", gate.clone(), || {
            for k in 0..=self.max_k {
                if let Err(ce) = self.decomposition(k) {
                    return Outcome::fail(ce);
                }
            }
            Outcome::pass()
        });
        let total = self.verdict("prop43.decomposition_total", gate, || {
            let der = self.carrier.aggregate(SpaceKind::Der);
            let zder = self.carrier.aggregate(SpaceKind::Zder);
            let phi = (0..=self.max_k)
                .map(|k| self.phi_space(k))
                .try_fold(Subspace::zero(n2 * n2), |acc, s| acc.sum(&s))
                .expect("same ambient");
            let sum = phi.sum(&zder.total).expect("same ambient");
            let direct = phi.is_direct(&zder.total).expect("same ambient");
            let note = format!(
                "bounded totals: der dim {}, φ(qder) dim {}, zder dim {}",
                der.total.dim(),
                phi.dim(),
                zder.total.dim()
            );
            if let Some(ce) = mismatch(&der.total, &sum, n2) {
                return Outcome::fail(ce.on(&self.ext.carrier)).note(note);
            }
            if !direct {
                let cap = phi.intersect(&zder.total).expect("same ambient");
                let v = cap.basis_vectors().next().expect("nonzero intersection");
                return Outcome::fail(Counterexample::new(
                    0,
                    None,
                    vec![],
                    Matrix::unflatten(n2, v),
                    Expectation::Zero,
                ))
                .note(note);
            }
            Outcome::pass().note(note)
        });
        vec![centre, per_k, total]
    }

    fn decomposition(&self, k: usize) -> std::result::Result<(), Counterexample> {
        let n2 = self.ext.dim();
        let der = &self.carrier.get(SpaceKind::Der, k).space;
        let zder = &self.carrier.get(SpaceKind::Zder, k).space;
        let phi = self.phi_space(k);
        let sum = phi.sum(zder).expect("same ambient");
        if let Some(mut ce) = mismatch(der, &sum, n2) {
            ce.k = k;
            if let Expectation::InSubspace { label, .. } = &mut ce.expectation {
                *label = format!("{label} at power {k}");
            }
            if ce.expectation
                == (Expectation::InSpace {
                    kind: SpaceKind::Der,
                    k: 0,
                })
            {
                ce.expectation = Expectation::InSpace {
                    kind: SpaceKind::Der,
                    k,
                };
            }
            return Err(ce.on(&self.ext.carrier));
        }
        if !phi.is_direct(zder).expect("same ambient") {
            let cap = phi.intersect(zder).expect("same ambient");
            let v = cap.basis_vectors().next().expect("nonzero intersection");
            return Err(Counterexample::new(
                k,
                None,
                vec![],
                Matrix::unflatten(n2, v),
                Expectation::Zero,
            ));
        }
        Ok(())
    }

    pub fn all(&self) -> Vec<Verdict> {
        let mut out = vec![self.prop41()];
        out.extend(self.prop42());
        out.extend(self.prop43());
        out
    }
}

/// A generator in one of `der`, `sum` but not the other.
fn mismatch(der: &Subspace, sum: &Subspace, n2: usize) -> Option<Counterexample> {
    if let Some(v) = der
        .basis_vectors()
        .find(|v| !sum.contains(v).expect("ambient"))
    {
        return Some(Counterexample::new(
            0,
            None,
            vec![],
            Matrix::unflatten(n2, v),
            Expectation::InSubspace {
                label: "φ(qder) + zder".into(),
                space: sum.clone(),
            },
        ));
    }
    sum.basis_vectors()
        .find(|v| !der.contains(v).expect("ambient"))
        .map(|v| {
            Counterexample::new(
                0,
                None,
                vec![],
                Matrix::unflatten(n2, v),
                Expectation::InSubspace {
                    label: "der".into(),
                    space: der.clone(),
                },
            )
        })
}

pub fn verify_prop41(a: &HomAlgebra) -> Verdict {
    ExtensionSuite::new(a, 0).prop41()
}

pub fn verify_prop42(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    ExtensionSuite::new(a, max_k).prop42()
}

pub fn verify_prop43(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    ExtensionSuite::new(a, max_k).prop43()
}

/// `e_i t` and `e_i t²` as coordinate vectors of `V̆`.
pub fn graded_unit(n: usize, i: usize, degree: usize) -> Vec<Scalar> {
    assert!(degree == 1 || degree == 2);
    unit(2 * n, i + (degree - 1) * n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{abelian, corpus, dual, unital1};
    use crate::exactlin::int;
    use crate::verdict::Status;

    #[test]
    fn extension_shape() {
        for a in [abelian(2), unital1(), dual()] {
            let e = extend_algebra(&a);
            assert_eq!(e.dim(), 2 * a.dim());
            assert!(e.carrier.check_hom_jordan().ok);
        }
        assert!(extend_algebra(&abelian(2)).carrier.is_abelian());
        let e = extend_algebra(&dual());
        assert!(e.carrier.check_multiplicative());
        // μ̆(e t, f t) = f t²
        let p = e.carrier.mul(&graded_unit(2, 0, 1), &graded_unit(2, 1, 1));
        assert_eq!(p, graded_unit(2, 1, 2));
    }

    #[test]
    fn phi_examples() {
        let e = extend_algebra(&dual());
        assert!(e.phi(&Matrix::zeros(2, 2), &Matrix::zeros(2, 2)).is_zero());
        // abelian base: μ(V,V) = 0, so the t² block of φ(D) vanishes
        let ab = extend_algebra(&abelian(2));
        let d = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
        let m = ab.phi(&d, &Matrix::identity(2));
        assert_eq!(m.block(0, 0, 2, 2), d);
        assert!(m.block(2, 2, 2, 2).is_zero());
        // unital base: witness (d, 2d) gives diag(d, 2d)
        let u = extend_algebra(&unital1());
        let m = u
            .phi_witness(0, &Matrix::from_i64(&[&[3]]), &Matrix::from_i64(&[&[6]]))
            .unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[3, 0], &[0, 6]]));
        assert_eq!(
            u.phi_witness(0, &Matrix::from_i64(&[&[3]]), &Matrix::from_i64(&[&[5]])),
            Err(Error::InvalidWitness(0))
        );
        assert_eq!(u.projection[(0, 0)], int(1));
    }

    #[test]
    fn unital_and_dual_decompose() {
        for a in [unital1(), dual()] {
            let vs = ExtensionSuite::new(&a, 2).all();
            for v in &vs {
                assert_eq!(
                    v.status,
                    Status::Holds,
                    "{} {}: {:?}",
                    a.name(),
                    v.claim_id,
                    v.counterexample
                );
            }
        }
    }

    #[test]
    fn abelian_gates_decomposition() {
        let vs = verify_prop43(&abelian(2), 1);
        assert!(vs.iter().all(|v| v.status == Status::NotApplicable));
        let vs = verify_prop42(&abelian(2), 1);
        assert!(vs.iter().all(|v| v.status == Status::Holds));
    }

    #[test]
    fn corpus_section_four_is_green() {
        for a in corpus() {
            for v in ExtensionSuite::new(&a, 2).all() {
                assert!(
                    !v.is_failure(),
                    "{} {}: {:?}",
                    a.name(),
                    v.claim_id,
                    v.counterexample
                );
            }
        }
    }
}

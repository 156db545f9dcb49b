//! Closure, decomposition and bracket identities among the operator spaces,
//! each checked exactly on a given algebra up to a power bound `K`.
//!
//! Closure claims are checked on basis generators, which suffices by
//! bilinearity, for all `k + s ≤ K`.

use num_traits::One;

use crate::algebra::{plus_closure, plus_subalgebra, HomAlgebra};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::solve::{nu, nu_prime, MapSpace, SpaceKind, SpaceTable};
use crate::verdict::{gates, Counterexample, Expectation, Gate, Outcome, Verdict};

type Check = Result<(), Counterexample>;

fn in_space(kind: SpaceKind, k: usize) -> Expectation {
    Expectation::InSpace { kind, k }
}

/// Span of flattened operators.
pub fn operator_span(n: usize, ops: impl IntoIterator<Item = Matrix>) -> Subspace {
    Subspace::span(n * n, ops.into_iter().map(|m| m.flatten()))
}

/// `m` placed as the diagonal block at `offset` of an `n × n` zero matrix.
pub fn embed_operator(m: &Matrix, n: usize, offset: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    out.set_block(offset, offset, m);
    out
}

/// Shared state for the section-three checks on one algebra.
pub struct Suite<'a> {
    a: &'a HomAlgebra,
    max_k: usize,
    table: SpaceTable,
    explore: bool,
}

impl<'a> Suite<'a> {
    pub fn new(a: &'a HomAlgebra, max_k: usize) -> Self {
        Suite {
            a,
            max_k,
            table: SpaceTable::compute(a, max_k),
            explore: false,
        }
    }

    /// Also run checks whose preconditions fail, recording the outcome in
    /// `Verdict::ungated`.
    pub fn exploring(mut self, explore: bool) -> Self {
        self.explore = explore;
        self
    }

    pub fn table(&self) -> &SpaceTable {
        &self.table
    }

    fn ops(&self, kind: SpaceKind, k: usize) -> Vec<Matrix> {
        self.table.get(kind, k).operators()
    }

    fn space(&self, kind: SpaceKind, k: usize) -> &MapSpace {
        self.table.get(kind, k)
    }

    fn verdict<F: FnOnce() -> Outcome>(&self, claim: &str, gate: Gate, run: F) -> Verdict {
        Verdict::decide(claim, self.a, self.max_k, gate, self.explore, run)
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let max = self.max_k;
        (0..=max).flat_map(move |k| (0..=max - k).map(move |s| (k, s)))
    }

    /// `f(X_k, Y_s) ⊆ T_{k+s}` for all `k + s ≤ K`.
    fn closed<F>(&self, x: SpaceKind, y: SpaceKind, target: SpaceKind, f: F) -> Check
    where
        F: Fn(&Matrix, &Matrix) -> Matrix,
    {
        for (k, s) in self.pairs() {
            let into = self.space(target, k + s);
            let ys = self.ops(y, s);
            for d1 in self.ops(x, k) {
                for d2 in &ys {
                    let m = f(&d1, d2);
                    if !into.contains(&m) {
                        return Err(Counterexample::new(
                            k,
                            Some(s),
                            vec![d1.clone(), d2.clone()],
                            m,
                            in_space(target, k + s),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `σ(X_k) ⊆ X_{k+1}` for `k + 1 ≤ K`.
    fn sigma_closed(&self, kind: SpaceKind) -> Check {
        let alpha = self.a.alpha();
        for k in 0..self.max_k {
            let into = self.space(kind, k + 1);
            for d in self.ops(kind, k) {
                let m = alpha.mul(&d);
                if !into.contains(&m) {
                    return Err(Counterexample::new(
                        k,
                        None,
                        vec![d],
                        m,
                        in_space(kind, k + 1),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `X_k ⊆ T_k` for every `k ≤ K`.
    fn included(&self, x: SpaceKind, target: SpaceKind) -> Check {
        for k in 0..=self.max_k {
            let into = self.space(target, k);
            for d in self.ops(x, k) {
                if !into.contains(&d) {
                    return Err(Counterexample::new(k, None, vec![], d, in_space(target, k)));
                }
            }
        }
        Ok(())
    }

    /// Hom-subalgebra and Hom-ideal claims for the derivation-type spaces.
    pub fn prop31(&self) -> Vec<Verdict> {
        let mult = gates::multiplicative(self.a);
        let bracket = |d1: &Matrix, d2: &Matrix| d1.mul(d2).sub(&d2.mul(d1));
        let mut out = Vec::new();
        for kind in [SpaceKind::Gder, SpaceKind::Qder, SpaceKind::C] {
            out.push(
                self.verdict(&format!("prop31.{kind}.sigma"), mult.clone(), || {
                    Outcome::from_result(self.sigma_closed(kind))
                }),
            );
            out.push(
                self.verdict(&format!("prop31.{kind}.bracket"), mult.clone(), || {
                    Outcome::from_result(self.closed(kind, kind, kind, bracket))
                }),
            );
        }
        out.push(self.verdict("prop31.zder.sigma", mult.clone(), || {
            Outcome::from_result(self.sigma_closed(SpaceKind::Zder))
        }));
        out.push(self.verdict("prop31.zder.ideal", mult, || {
            Outcome::from_result(self.closed(
                SpaceKind::Zder,
                SpaceKind::Der,
                SpaceKind::Zder,
                bracket,
            ))
        }));
        out
    }

    /// The six bracket and inclusion relations between the spaces.
    pub fn prop32(&self) -> Vec<Verdict> {
        use SpaceKind::*;
        let mult = gates::multiplicative(self.a);
        let bracket = |d1: &Matrix, d2: &Matrix| d1.mul(d2).sub(&d2.mul(d1));
        let compose = |d1: &Matrix, d2: &Matrix| d1.mul(d2);
        vec![
            self.verdict("prop32.1.bracket_der_c_in_c", mult.clone(), || {
                Outcome::from_result(self.closed(Der, C, C, bracket))
            }),
            self.verdict("prop32.2.bracket_qder_qc_in_qc", mult.clone(), || {
                Outcome::from_result(self.closed(Qder, Qc, Qc, bracket))
            }),
            self.verdict("prop32.3.bracket_qc_qc_in_qder", mult.clone(), || {
                Outcome::from_result(self.closed(Qc, Qc, Qder, bracket))
            }),
            self.verdict("prop32.4.c_in_qder", mult.clone(), || {
                Outcome::from_result(self.included(C, Qder))
            }),
            self.verdict("prop32.5.qder_plus_qc_in_gder", mult.clone(), || {
                Outcome::from_result(
                    self.included(Qder, Gder)
                        .and_then(|_| self.included(Qc, Gder)),
                )
            }),
            self.verdict("prop32.6.c_compose_der_in_der", mult, || {
                Outcome::from_result(self.closed(C, Der, Der, compose))
            }),
        ]
    }

    /// `GDer_k = QDer_k + QC_k` per `k`, plus the split of every witness
    /// `(D, D′, D″)` into `(D + D′)/2 ∈ QDer_k` and `(D − D′)/2 ∈ QC_k`.
    pub fn thm33(&self) -> Verdict {
        self.verdict(
            "thm33.gder_eq_qder_plus_qc",
            gates::multiplicative(self.a),
            || {
                let half = Scalar::one() / Scalar::from_integer(2.into());
                for k in 0..=self.max_k {
                    let gder = self.space(SpaceKind::Gder, k);
                    let sum = self
                        .space(SpaceKind::Qder, k)
                        .space
                        .sum(&self.space(SpaceKind::Qc, k).space)
                        .expect("same ambient");
                    for d in gder.operators() {
                        if !sum.contains(&d.flatten()).expect("same ambient") {
                            return Outcome::fail(Counterexample::new(
                                k,
                                None,
                                vec![],
                                d,
                                Expectation::InSubspace {
                                    label: format!("qder_{k} + qc_{k}"),
                                    space: sum.clone(),
                                },
                            ));
                        }
                    }
                    for v in sum.basis_vectors() {
                        let d = Matrix::unflatten(self.a.dim(), v);
                        if !gder.contains(&d) {
                            return Outcome::fail(Counterexample::new(
                                k,
                                None,
                                vec![],
                                d,
                                in_space(SpaceKind::Gder, k),
                            ));
                        }
                    }
                    for w in self.table.witnesses(SpaceKind::Gder, k).generators() {
                        let d1 = &w.companions[0];
                        let plus = w.op.add(d1).scale(&half);
                        let minus = w.op.sub(d1).scale(&half);
                        for (m, kind) in [(plus, SpaceKind::Qder), (minus, SpaceKind::Qc)] {
                            if !self.space(kind, k).contains(&m) {
                                return Outcome::fail(Counterexample::new(
                                    k,
                                    None,
                                    w.blocks(),
                                    m,
                                    in_space(kind, k),
                                ));
                            }
                        }
                    }
                }
                Outcome::pass().note(
                    "witness split (D ± D′)/2 checked on every generalized-derivation generator",
                )
            },
        )
    }

    /// `ν′(C, QC)` maps into `Z(V)`, and vanishes when `Z(V) = 0`.
    pub fn thm35(&self) -> Vec<Verdict> {
        let base = gates::all([
            gates::multiplicative(self.a),
            gates::invertible_twist(self.a),
        ]);
        let z = self.a.centralizer();
        let full = Subspace::full(self.a.dim());
        let bracket_check = |zero: bool| -> Check {
            for (k, s) in self.pairs() {
                let qcs = self.ops(SpaceKind::Qc, s);
                for d1 in self.ops(SpaceKind::C, k) {
                    for d2 in &qcs {
                        let m = d1.mul(d2).sub(&d2.mul(&d1));
                        let expectation = if zero {
                            (!m.is_zero()).then_some(Expectation::Zero)
                        } else {
                            full.basis_vectors()
                                .any(|v| !z.contains(&m.apply(v)).expect("ambient n"))
                                .then(|| Expectation::MapsInto {
                                    label: "V into Z(V)".into(),
                                    from: full.clone(),
                                    into: z.clone(),
                                })
                        };
                        if let Some(e) = expectation {
                            return Err(Counterexample::new(
                                k,
                                Some(s),
                                vec![d1.clone(), d2.clone()],
                                m,
                                e,
                            ));
                        }
                    }
                }
            }
            Ok(())
        };
        vec![
            self.verdict("thm35.bracket_c_qc_into_centralizer", base.clone(), || {
                Outcome::from_result(bracket_check(false))
            }),
            self.verdict(
                "thm35.bracket_c_qc_zero",
                gates::all([base, gates::trivial_centralizer(self.a)]),
                || Outcome::from_result(bracket_check(true)),
            ),
        ]
    }

    /// `ZDer_k = C_k ∩ Der_k` per `k`.
    pub fn thm36(&self) -> Verdict {
        self.verdict(
            "thm36.zder_eq_c_cap_der",
            gates::multiplicative(self.a),
            || {
                for k in 0..=self.max_k {
                    let zder = self.space(SpaceKind::Zder, k);
                    let cap = self
                        .space(SpaceKind::C, k)
                        .space
                        .intersect(&self.space(SpaceKind::Der, k).space)
                        .expect("same ambient");
                    for v in cap.basis_vectors() {
                        let d = Matrix::unflatten(self.a.dim(), v);
                        if !zder.contains(&d) {
                            return Outcome::fail(Counterexample::new(
                                k,
                                None,
                                vec![],
                                d,
                                in_space(SpaceKind::Zder, k),
                            ));
                        }
                    }
                    for d in zder.operators() {
                        if !cap.contains(&d.flatten()).expect("same ambient") {
                            return Outcome::fail(Counterexample::new(
                                k,
                                None,
                                vec![],
                                d,
                                Expectation::InSubspace {
                                    label: format!("c_{k} ∩ der_{k}"),
                                    space: cap,
                                },
                            ));
                        }
                    }
                }
                Outcome::pass()
            },
        )
    }

    /// `QC` is closed under `ν` and `σ`; the `ν`/`σ`-closure of the bounded
    /// `QC` total inside the commutant is instantiated as an algebra and put
    /// through the Hom-Jordan checker.
    pub fn thm37(&self) -> Verdict {
        self.verdict(
            "thm37.qc_plus_algebra",
            gates::multiplicative(self.a),
            || {
                let anti = |d1: &Matrix, d2: &Matrix| d1.mul(d2).add(&d2.mul(d1));
                if let Err(ce) = self
                    .sigma_closed(SpaceKind::Qc)
                    .and_then(|_| self.closed(SpaceKind::Qc, SpaceKind::Qc, SpaceKind::Qc, anti))
                {
                    return Outcome::fail(ce);
                }
                let total = self.table.aggregate(SpaceKind::Qc).total;
                let closure = plus_closure(self.a.alpha(), &total);
                let algebra = plus_subalgebra(self.a.alpha(), &closure, "qc-plus")
                    .expect("closure is closed under ν and σ");
                let report = algebra.check_hom_jordan();
                let note = format!(
                    "qc total dim {}, generated Hom-subalgebra dim {}",
                    total.dim(),
                    closure.dim()
                );
                match report.failing_tuple {
                    None => Outcome::pass().note(note),
                    Some(t) => Outcome::fail(Counterexample::new(
                        0,
                        None,
                        vec![],
                        Matrix::zeros(0, 0),
                        Expectation::InSubspace {
                            label: format!("Hom-Jordan identity on tuple {t:?}"),
                            space: Subspace::zero(0),
                        },
                    ))
                    .note(note),
                }
            },
        )
    }

    /// Hom-Lie equivalences for `(QC, ν′, σ)`: (A) `ν′`-closure,
    /// (B) composition closure, (C) `ν′(QC, QC) = 0`. Asserts A ⇔ B, and
    /// A ⇔ C when `α` is invertible and `Z(V) = 0`.
    pub fn thm38(&self) -> Vec<Verdict> {
        let mult = gates::multiplicative(self.a);
        let qc = SpaceKind::Qc;
        let a_check = || self.closed(qc, qc, qc, |d1, d2| d1.mul(d2).sub(&d2.mul(d1)));
        let b_check = || self.closed(qc, qc, qc, |d1, d2| d1.mul(d2));
        let c_check = || -> Check {
            for (k, s) in self.pairs() {
                for d1 in self.ops(qc, k) {
                    for d2 in self.ops(qc, s) {
                        let m = nu_prime(&d1, &d2).expect("square");
                        if !m.is_zero() {
                            return Err(Counterexample::new(
                                k,
                                Some(s),
                                vec![d1, d2],
                                m,
                                Expectation::Zero,
                            ));
                        }
                    }
                }
            }
            Ok(())
        };
        let summary = |a: bool, b: bool, c: bool| {
            format!(
                "A (bracket closed) = {a}, B (composition closed) = {b}, C (bracket zero) = {c}"
            )
        };

        let item1 = self.verdict("thm38.1.lie_iff_associative", mult.clone(), || {
            let (a, b) = (a_check(), b_check());
            let note = summary(a.is_ok(), b.is_ok(), c_check().is_ok());
            match (a, b) {
                (Ok(()), Err(ce)) | (Err(ce), Ok(())) => Outcome::fail(ce).note(note),
                _ => Outcome::pass().note(note),
            }
        });
        let gate2 = gates::all([
            mult,
            gates::invertible_twist(self.a),
            gates::trivial_centralizer(self.a),
        ]);
        let item2 = self.verdict("thm38.2.lie_iff_bracket_zero", gate2, || {
            let (a, c) = (a_check(), c_check());
            let note = summary(a.is_ok(), b_check().is_ok(), c.is_ok());
            match (a, c) {
                (Ok(()), Err(ce)) | (Err(ce), Ok(())) => Outcome::fail(ce).note(note),
                _ => Outcome::pass().note(note),
            }
        });
        vec![item1, item2]
    }

    /// Centralizer and space decompositions of a tagged direct sum.
    pub fn prop34(&self) -> Vec<Verdict> {
        let Some((a1, a2)) = self.a.summands() else {
            return vec![self.verdict(
                "prop34.direct_sum",
                Err("algebra is not tagged as a direct sum of two blocks".into()),
                Outcome::pass,
            )];
        };
        let n = self.a.dim();
        let n1 = a1.dim();
        let mut out = vec![self.verdict("prop34.1.centralizer", Ok(()), || {
            let expected = a1
                .centralizer()
                .embed(n, 0)
                .sum(&a2.centralizer().embed(n, n1))
                .expect("same ambient");
            let z = self.a.centralizer();
            let stray = z
                .basis_vectors()
                .chain(expected.basis_vectors())
                .find(|v| {
                    !(z.contains(v).expect("ambient n") && expected.contains(v).expect("ambient n"))
                })
                .map(<[Scalar]>::to_vec);
            match stray {
                None => Outcome::pass(),
                Some(v) => {
                    let in_z = z.contains(&v).expect("ambient n");
                    let offending = Matrix::from_columns(n, &[v]);
                    let (label, space) = if in_z {
                        ("Z(V1) + Z(V2)", expected.clone())
                    } else {
                        ("Z(V)", z.clone())
                    };
                    Outcome::fail(Counterexample::new(
                        0,
                        None,
                        vec![],
                        offending,
                        Expectation::InSubspace {
                            label: label.into(),
                            space,
                        },
                    ))
                }
            }
        })];

        let gate = gates::all([
            gates::multiplicative(self.a),
            gates::invertible_twist(self.a),
            gates::trivial_centralizer(self.a),
        ]);
        let kinds = [
            ("a", SpaceKind::Der),
            ("b", SpaceKind::Gder),
            ("c", SpaceKind::Qder),
            ("d", SpaceKind::C),
        ];
        let tables = gate.is_ok().then(|| {
            let ks: Vec<SpaceKind> = kinds.iter().map(|(_, k)| *k).collect();
            (
                SpaceTable::compute_kinds(&a1, &ks, self.max_k),
                SpaceTable::compute_kinds(&a2, &ks, self.max_k),
            )
        });
        for (item, kind) in kinds {
            out.push(
                self.verdict(&format!("prop34.2{item}.{kind}"), gate.clone(), || {
                    let (t1, t2) = tables.as_ref().expect("computed when the gate passes");
                    for k in 0..=self.max_k {
                        let embedded = operator_span(
                            n,
                            t1.get(kind, k)
                                .operators()
                                .iter()
                                .map(|m| embed_operator(m, n, 0))
                                .chain(
                                    t2.get(kind, k)
                                        .operators()
                                        .iter()
                                        .map(|m| embed_operator(m, n, n1)),
                                ),
                        );
                        let whole = self.space(kind, k);
                        for d in whole.operators() {
                            if !embedded.contains(&d.flatten()).expect("ambient n²") {
                                return Outcome::fail(Counterexample::new(
                                    k,
                                    None,
                                    vec![],
                                    d,
                                    Expectation::InSubspace {
                                        label: format!("{kind}_{k}(V1) + {kind}_{k}(V2)"),
                                        space: embedded,
                                    },
                                ));
                            }
                        }
                        for v in embedded.basis_vectors() {
                            let d = Matrix::unflatten(n, v);
                            if !whole.contains(&d) {
                                return Outcome::fail(Counterexample::new(
                                    k,
                                    None,
                                    vec![],
                                    d,
                                    in_space(kind, k),
                                ));
                            }
                        }
                    }
                    Outcome::pass()
                }),
            );
        }
        out
    }

    /// Every section-three verdict; the direct-sum claims only for algebras
    /// tagged with two blocks.
    pub fn all(&self) -> Vec<Verdict> {
        let mut out = self.prop31();
        out.extend(self.prop32());
        out.push(self.thm33());
        if self.a.summands().is_some() {
            out.extend(self.prop34());
        }
        out.extend(self.thm35());
        out.push(self.thm36());
        out.push(self.thm37());
        out.extend(self.thm38());
        out
    }
}

pub fn verify_prop31(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    Suite::new(a, max_k).prop31()
}

pub fn verify_prop32(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    Suite::new(a, max_k).prop32()
}

pub fn verify_thm33(a: &HomAlgebra, max_k: usize) -> Verdict {
    Suite::new(a, max_k).thm33()
}

/// Builds `a1 ⊕ a2` and checks the decompositions on it.
pub fn verify_prop34(a1: &HomAlgebra, a2: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    let sum = crate::algebra::direct_sum(a1, a2);
    Suite::new(&sum, max_k).prop34()
}

pub fn verify_thm35(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    Suite::new(a, max_k).thm35()
}

pub fn verify_thm36(a: &HomAlgebra, max_k: usize) -> Verdict {
    Suite::new(a, max_k).thm36()
}

pub fn verify_thm37(a: &HomAlgebra, max_k: usize) -> Verdict {
    Suite::new(a, max_k).thm37()
}

pub fn verify_thm38(a: &HomAlgebra, max_k: usize) -> Vec<Verdict> {
    Suite::new(a, max_k).thm38()
}

/// `ν(D₁, D₂)` re-exported for callers composing their own checks.
pub fn anticommutator(d1: &Matrix, d2: &Matrix) -> Matrix {
    nu(d1, d2).expect("square operators of equal size")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, abelian, dual, dual_yau, sum, unital1};
    use crate::verdict::Status;

    fn assert_green(vs: &[Verdict]) {
        for v in vs {
            assert!(
                !v.is_failure(),
                "{} on {}: {:?}",
                v.claim_id,
                v.algebra,
                v.counterexample
            );
        }
    }

    #[test]
    fn abelian_and_unital_hold() {
        for a in [abelian(2), unital1(), dual()] {
            let vs = Suite::new(&a, 2).all();
            assert_green(&vs);
            assert!(vs
                .iter()
                .filter(|v| v.claim_id.starts_with("prop31"))
                .all(|v| v.status == Status::Holds));
        }
    }

    #[test]
    fn gates_mark_not_applicable() {
        let a = corpus::plus_diag(&[1, 2]);
        let vs = Suite::new(&a, 1).exploring(true).all();
        assert!(vs.iter().all(|v| v.status == Status::NotApplicable));
        assert!(vs.iter().all(|v| v.ungated.is_some() && v.holds.is_none()));
        let abel = abelian(2);
        let item2 = &Suite::new(&abel, 1).thm38()[1];
        assert_eq!(item2.status, Status::NotApplicable);
        assert!(item2.reason.as_deref().unwrap().contains("centralizer"));
    }

    #[test]
    fn thm33_on_twisted_dual() {
        let v = verify_thm33(&dual_yau(2), 2);
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn prop34_on_sums() {
        let vs = verify_prop34(&unital1(), &unital1(), 2);
        assert_eq!(vs.len(), 5);
        assert!(vs.iter().all(|v| v.status == Status::Holds), "{vs:?}");
        let vs = verify_prop34(&dual(), &abelian(1), 1);
        assert_eq!(vs[0].status, Status::Holds);
        assert!(vs[1..].iter().all(|v| v.status == Status::NotApplicable));
        let zero = HomAlgebra::abelian("zero", Matrix::zeros(0, 0));
        let vs = verify_prop34(&unital1(), &zero, 1);
        assert_green(&vs);
        let vs = Suite::new(&dual(), 1).prop34();
        assert_eq!(vs[0].status, Status::NotApplicable);
    }

    #[test]
    fn thm35_bracket_vanishes_without_centre() {
        let vs = verify_thm35(&dual(), 2);
        assert!(vs.iter().all(|v| v.status == Status::Holds));
        let vs = verify_thm35(&abelian(2), 1);
        assert_eq!(vs[0].status, Status::Holds);
        assert_eq!(vs[1].status, Status::NotApplicable);
    }

    #[test]
    fn corpus_is_green() {
        for a in corpus::corpus() {
            assert_green(&Suite::new(&a, 2).all());
        }
        assert_green(&Suite::new(&sum(&dual(), &dual()), 1).all());
    }

    #[test]
    fn exploratory_failure_carries_a_rechecking_counterexample() {
        // ℚ[x]/(x³) with α = diag(1, 2, 3) is not multiplicative
        let alpha = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let a =
            HomAlgebra::new("poly3-diag", corpus::poly3().structure_constants(), alpha).unwrap();
        let vs = Suite::new(&a, 2).exploring(true).prop31();
        let failing: Vec<&Verdict> = vs.iter().filter(|v| v.ungated == Some(false)).collect();
        assert!(!failing.is_empty());
        for v in failing {
            assert_eq!(v.status, Status::NotApplicable);
            let ce = v.counterexample.as_ref().unwrap();
            assert!(ce.violation.is_some() || !ce.expectation_is_pointwise());
            assert_eq!(v.recheck(&a), Some(true));
        }
        let ce = Counterexample::new(
            0,
            None,
            vec![],
            Matrix::identity(2),
            in_space(SpaceKind::Der, 0),
        );
        assert!(ce.refails(&dual()));
        let fake = Counterexample::new(
            0,
            None,
            vec![],
            Matrix::zeros(2, 2),
            in_space(SpaceKind::Der, 0),
        );
        assert!(!fake.refails(&dual()));
    }
}

//! Verdicts produced by the verification suites and the self-validating
//! counterexamples they carry.

use serde::{Serialize, Serializer};

use crate::algebra::HomAlgebra;
use crate::exactlin::{format_scalar, Matrix, Subspace};
use crate::solve::{identity_violation, space, SpaceKind, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

fn rows_of(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_scalar).collect())
        .collect()
}

pub(crate) fn ser_matrix<S: Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
    rows_of(m).serialize(s)
}

pub(crate) fn ser_matrices<S: Serializer>(ms: &[Matrix], s: S) -> Result<S::Ok, S::Error> {
    ms.iter().map(rows_of).collect::<Vec<_>>().serialize(s)
}

pub(crate) fn ser_subspace<S: Serializer>(sp: &Subspace, s: S) -> Result<S::Ok, S::Error> {
    rows_of(sp.basis()).serialize(s)
}

/// What the offending operator was supposed to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Expectation {
    /// Membership in the solution space of `kind` at power `k`.
    InSpace {
        kind: SpaceKind,
        k: usize,
    },
    /// The operator (flattened) or vector lies in an explicit subspace.
    InSubspace {
        label: String,
        #[serde(serialize_with = "ser_subspace")]
        space: Subspace,
    },
    /// The operator maps `from` into `into`.
    MapsInto {
        label: String,
        #[serde(serialize_with = "ser_subspace")]
        from: Subspace,
        #[serde(serialize_with = "ser_subspace")]
        into: Subspace,
    },
    Zero,
    Equals {
        label: String,
        #[serde(serialize_with = "ser_matrix")]
        expected: Matrix,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(serialize_with = "ser_matrices")]
    pub operands: Vec<Matrix>,
    #[serde(serialize_with = "ser_matrix")]
    pub offending: Matrix,
    pub expectation: Expectation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    /// Algebra the expectation refers to, when it is not the verdict's own
    /// (an extension, a summand or a quotient).
    #[serde(skip)]
    pub context: Option<Box<HomAlgebra>>,
}

impl Counterexample {
    pub fn new(
        k: usize,
        s: Option<usize>,
        operands: Vec<Matrix>,
        offending: Matrix,
        expectation: Expectation,
    ) -> Self {
        Counterexample {
            k,
            s,
            operands,
            offending,
            expectation,
            violation: None,
            context: None,
        }
    }

    pub fn on(mut self, context: &HomAlgebra) -> Self {
        self.context = Some(Box::new(context.clone()));
        self
    }

    /// Fills in the first violated basis pair for pointwise kinds.
    pub(crate) fn locate(mut self, a: &HomAlgebra) -> Self {
        if let Expectation::InSpace { kind, k } = self.expectation {
            if kind.is_pointwise() {
                let ctx = self.context.as_deref().unwrap_or(a);
                self.violation = identity_violation(ctx, kind, k, &[self.offending.clone()]);
            }
        }
        self
    }

    pub fn expectation_is_pointwise(&self) -> bool {
        matches!(self.expectation, Expectation::InSpace { kind, .. } if kind.is_pointwise())
    }

    /// Re-evaluates the expectation from scratch; `true` iff it still fails.
    pub fn refails(&self, a: &HomAlgebra) -> bool {
        let ctx = self.context.as_deref().unwrap_or(a);
        match &self.expectation {
            Expectation::InSpace { kind, k } => {
                if kind.is_pointwise() {
                    identity_violation(ctx, *kind, *k, std::slice::from_ref(&self.offending))
                        .is_some()
                } else {
                    !space(ctx, *kind, *k).contains(&self.offending)
                }
            }
            Expectation::InSubspace { space, .. } => {
                let v =
                    if self.offending.cols() == 1 && space.ambient_dim() == self.offending.rows() {
                        self.offending.column(0)
                    } else {
                        self.offending.flatten()
                    };
                !space.contains(&v).unwrap_or(false)
            }
            Expectation::MapsInto { from, into, .. } => from
                .basis_vectors()
                .any(|v| !into.contains(&self.offending.apply(v)).unwrap_or(false)),
            Expectation::Zero => !self.offending.is_zero(),
            Expectation::Equals { expected, .. } => &self.offending != expected,
        }
    }
}

/// Result of running a check whose preconditions were met.
#[derive(Debug, Clone, Default)]
pub(crate) struct Outcome {
    pub failure: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome::default()
    }

    pub fn fail(ce: Counterexample) -> Self {
        Outcome {
            failure: Some(ce),
            notes: Vec::new(),
        }
    }

    pub fn from_result(r: Result<(), Counterexample>) -> Self {
        match r {
            Ok(()) => Outcome::pass(),
            Err(ce) => Outcome::fail(ce),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim_id: String,
    pub algebra: String,
    pub status: Status,
    /// `None` when the preconditions were not met.
    pub holds: Option<bool>,
    pub preconditions_met: bool,
    pub max_power: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Outcome of the check run despite unmet preconditions, when requested.
    /// A failing exploratory run still attaches its counterexample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ungated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

/// A precondition gate: `Err(reason)` marks the claim not applicable.
pub type Gate = std::result::Result<(), String>;

impl Verdict {
    pub(crate) fn decide<F>(
        claim: &str,
        a: &HomAlgebra,
        max_power: usize,
        gate: Gate,
        explore: bool,
        run: F,
    ) -> Verdict
    where
        F: FnOnce() -> Outcome,
    {
        let base = Verdict {
            claim_id: claim.to_string(),
            algebra: a.name().to_string(),
            status: Status::Holds,
            holds: Some(true),
            preconditions_met: true,
            max_power,
            reason: None,
            notes: Vec::new(),
            ungated: None,
            counterexample: None,
        };
        match gate {
            Err(reason) => {
                let out = explore.then(run);
                Verdict {
                    status: Status::NotApplicable,
                    holds: None,
                    preconditions_met: false,
                    reason: Some(reason),
                    ungated: out.as_ref().map(|o| o.failure.is_none()),
                    counterexample: out.and_then(|o| o.failure).map(|ce| ce.locate(a)),
                    ..base
                }
            }
            Ok(()) => {
                let out = run();
                match out.failure {
                    None => Verdict {
                        notes: out.notes,
                        ..base
                    },
                    Some(ce) => Verdict {
                        status: Status::Fails,
                        holds: Some(false),
                        notes: out.notes,
                        counterexample: Some(ce.locate(a)),
                        ..base
                    },
                }
            }
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fails
    }

    /// For failing verdicts, whether the counterexample re-fails when
    /// evaluated independently. `None` for verdicts without one.
    pub fn recheck(&self, a: &HomAlgebra) -> Option<bool> {
        self.counterexample.as_ref().map(|ce| ce.refails(a))
    }
}

/// Common gates.
pub(crate) mod gates {
    use super::Gate;
    use crate::algebra::HomAlgebra;

    pub fn all(gates: impl IntoIterator<Item = Gate>) -> Gate {
        gates
            .into_iter()
            .collect::<Result<Vec<()>, String>>()
            .map(|_| ())
    }

    pub fn multiplicative(a: &HomAlgebra) -> Gate {
        match a.non_multiplicative_pair() {
            None => Ok(()),
            Some((i, j)) => Err(format!("not multiplicative on basis pair ({i}, {j})")),
        }
    }

    pub fn invertible_twist(a: &HomAlgebra) -> Gate {
        if a.alpha().is_invertible() {
            Ok(())
        } else {
            Err("twist map is not invertible".into())
        }
    }

    pub fn trivial_centralizer(a: &HomAlgebra) -> Gate {
        let z = a.centralizer().dim();
        if z == 0 {
            Ok(())
        } else {
            Err(format!("centralizer has dimension {z}"))
        }
    }
}

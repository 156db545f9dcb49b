//! Solution spaces of the derivation-type identities, one power of `α` at a time.
//!
//! Operators on `V` are flattened row-major to vectors of length `n²`, so
//! `D[r][c]` sits at index `r * n + c` and `D e_c` is column `c`. Every space
//! is the nullspace of a linear system assembled by probing the defining
//! identity with the unit operators `E_rc`; the identity is imposed on all
//! ordered basis pairs together with `D∘α = α∘D` for every unknown block.

mod kind;
mod table;
mod witness;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{
    format_scalar, nullspace_of_echelon, unit, Matrix, RowReducer, Scalar, Subspace,
};

pub use kind::SpaceKind;
pub use table::SpaceTable;
pub use witness::{GDerWitness, Witness, WitnessSpace};

/// A subspace of `End(V)` tagged with the identity it solves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    pub kind: SpaceKind,
    pub k: usize,
    pub n: usize,
    pub space: Subspace,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn operators(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .map(|v| Matrix::unflatten(self.n, v))
            .collect()
    }

    pub fn contains(&self, op: &Matrix) -> bool {
        self.space
            .contains(&op.flatten())
            .expect("operator size matches the space")
    }

    pub fn report(&self) -> SpaceReport {
        SpaceReport {
            kind: self.kind,
            k: self.k,
            dim: self.dim(),
            basis: self
                .space
                .basis_vectors()
                .map(|v| v.iter().map(format_scalar).collect())
                .collect(),
        }
    }
}

/// JSON form of a [`MapSpace`]: `{"kind", "k", "dim", "basis"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub kind: SpaceKind,
    pub k: usize,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

/// Precomputed data for one algebra at one power `k`.
pub(crate) struct IdentityContext<'a> {
    pub a: &'a HomAlgebra,
    products: Vec<Vec<Scalar>>,
    twisted: Vec<Vec<Scalar>>,
}

impl<'a> IdentityContext<'a> {
    pub fn new(a: &'a HomAlgebra, k: usize) -> Self {
        let n = a.dim();
        let power = a.alpha().pow(k);
        IdentityContext {
            a,
            products: (0..n * n)
                .map(|ij| a.basis_product(ij / n, ij % n))
                .collect(),
            twisted: (0..n).map(|j| power.column(j)).collect(),
        }
    }

    fn n(&self) -> usize {
        self.a.dim()
    }

    /// `μ(D e_i, α^k e_j)`
    fn left(&self, d: &Matrix, i: usize, j: usize) -> Vec<Scalar> {
        self.a.mul(&d.column(i), &self.twisted[j])
    }

    /// `μ(α^k e_i, D e_j)`
    fn right(&self, d: &Matrix, i: usize, j: usize) -> Vec<Scalar> {
        self.a.mul(&self.twisted[i], &d.column(j))
    }

    /// `D μ(e_i, e_j)`
    fn image(&self, d: &Matrix, i: usize, j: usize) -> Vec<Scalar> {
        d.apply(&self.products[i * self.n() + j])
    }

    /// Concatenated residuals of the defining identities of `kind` on the
    /// pair `(e_i, e_j)`; all zero iff the identity holds there. `ops` holds
    /// `D` followed by the companions (`D′` for qder, `D′, D″` for gder).
    pub fn pair_residual(
        &self,
        kind: SpaceKind,
        ops: &[Matrix],
        i: usize,
        j: usize,
    ) -> Vec<Scalar> {
        let d = &ops[0];
        match kind {
            SpaceKind::Commutant => Vec::new(),
            SpaceKind::Der => combine(&[
                (1, self.image(d, i, j)),
                (-1, self.left(d, i, j)),
                (-1, self.right(d, i, j)),
            ]),
            SpaceKind::Qder => combine(&[
                (1, self.left(d, i, j)),
                (1, self.right(d, i, j)),
                (-1, self.image(&ops[1], i, j)),
            ]),
            SpaceKind::Gder => combine(&[
                (1, self.left(d, i, j)),
                (1, self.right(&ops[1], i, j)),
                (-1, self.image(&ops[2], i, j)),
            ]),
            SpaceKind::C => {
                let l = self.left(d, i, j);
                let mut out = combine(&[(1, l.clone()), (-1, self.right(d, i, j))]);
                out.extend(combine(&[(1, l), (-1, self.image(d, i, j))]));
                out
            }
            SpaceKind::Qc => combine(&[(1, self.left(d, i, j)), (-1, self.right(d, i, j))]),
            SpaceKind::Zder => {
                let mut out = self.left(d, i, j);
                out.extend(self.image(d, i, j));
                out
            }
        }
    }

    /// All residuals: commutation with `α` for each block, then every pair.
    fn residual(&self, kind: SpaceKind, ops: &[Matrix]) -> Vec<Scalar> {
        let n = self.n();
        let alpha = self.a.alpha();
        let mut out = Vec::new();
        for op in ops {
            out.extend(op.mul(alpha).sub(&alpha.mul(op)).into_vec());
        }
        for i in 0..n {
            for j in 0..n {
                out.extend(self.pair_residual(kind, ops, i, j));
            }
        }
        out
    }
}

fn combine(terms: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
    let len = terms[0].1.len();
    let mut out = vec![Scalar::zero(); len];
    for (sign, v) in terms {
        for (o, x) in out.iter_mut().zip(v) {
            if x.is_zero() {
                continue;
            }
            if *sign > 0 {
                *o += x;
            } else {
                *o -= x;
            }
        }
    }
    out
}

/// Solves the kind's identity in `blocks · n²` unknowns.
fn solve_system(ctx: &IdentityContext<'_>, kind: SpaceKind) -> Subspace {
    let n = ctx.n();
    let blocks = kind.blocks();
    let unknowns = blocks * n * n;
    // Column u of the constraint matrix is the residual of the u-th unit probe.
    let columns: Vec<Vec<Scalar>> = (0..unknowns)
        .map(|u| {
            let mut ops = vec![Matrix::zeros(n, n); blocks];
            let (b, rc) = (u / (n * n), u % (n * n));
            ops[b][(rc / n, rc % n)] = Scalar::one();
            ctx.residual(kind, &ops)
        })
        .collect();
    let rows = columns.first().map_or(0, Vec::len);
    let mut red = RowReducer::new(unknowns);
    for r in 0..rows {
        if red.is_saturated() {
            break;
        }
        if columns.iter().all(|c| c[r].is_zero()) {
            continue;
        }
        red.push(columns.iter().map(|c| c[r].clone()).collect());
    }
    nullspace_of_echelon(&red.finish())
}

/// `{W : Wα = αW}` as a subspace of flattened operators.
pub fn commutant_of(alpha: &Matrix) -> Subspace {
    let a = HomAlgebra::abelian("", alpha.clone());
    solve_system(&IdentityContext::new(&a, 0), SpaceKind::Commutant)
}

pub fn commutant(a: &HomAlgebra) -> MapSpace {
    map_space(a, SpaceKind::Commutant, 0, commutant_of(a.alpha()))
}

fn map_space(a: &HomAlgebra, kind: SpaceKind, k: usize, space: Subspace) -> MapSpace {
    MapSpace {
        kind,
        k,
        n: a.dim(),
        space,
    }
}

/// `Der_{α^k}(V)`.
pub fn der(a: &HomAlgebra, k: usize) -> MapSpace {
    simple(a, SpaceKind::Der, k)
}

/// `C_{α^k}(V)`.
pub fn centroid(a: &HomAlgebra, k: usize) -> MapSpace {
    simple(a, SpaceKind::C, k)
}

/// `QC_{α^k}(V)`.
pub fn quasi_centroid(a: &HomAlgebra, k: usize) -> MapSpace {
    simple(a, SpaceKind::Qc, k)
}

/// `ZDer_{α^k}(V)`.
pub fn central_der(a: &HomAlgebra, k: usize) -> MapSpace {
    simple(a, SpaceKind::Zder, k)
}

fn simple(a: &HomAlgebra, kind: SpaceKind, k: usize) -> MapSpace {
    debug_assert_eq!(kind.blocks(), 1);
    let ctx = IdentityContext::new(a, k);
    map_space(a, kind, k, solve_system(&ctx, kind))
}

/// `GDer_{α^k}(V)` with the full `(D, D′, D″)` solution space.
pub fn gder(a: &HomAlgebra, k: usize) -> (MapSpace, WitnessSpace) {
    witnessed(a, SpaceKind::Gder, k)
}

/// `QDer_{α^k}(V)` with the full `(D, D′)` solution space.
pub fn qder(a: &HomAlgebra, k: usize) -> (MapSpace, WitnessSpace) {
    witnessed(a, SpaceKind::Qder, k)
}

fn witnessed(a: &HomAlgebra, kind: SpaceKind, k: usize) -> (MapSpace, WitnessSpace) {
    let ctx = IdentityContext::new(a, k);
    let ws = WitnessSpace::new(kind, k, a.dim(), solve_system(&ctx, kind));
    (ws.projection(), ws)
}

/// Any kind, published as the projection onto the `D` block.
pub fn space(a: &HomAlgebra, kind: SpaceKind, k: usize) -> MapSpace {
    match kind {
        SpaceKind::Commutant => commutant(a),
        SpaceKind::Gder | SpaceKind::Qder => witnessed(a, kind, k).0,
        _ => simple(a, kind, k),
    }
}

/// A violated identity: either commutation with `α` or a basis pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    Commutation { block: usize },
    Pair { i: usize, j: usize },
}

/// First place where `ops` fails the identity of `kind` at power `k`.
pub fn identity_violation(
    a: &HomAlgebra,
    kind: SpaceKind,
    k: usize,
    ops: &[Matrix],
) -> Option<Violation> {
    assert_eq!(ops.len(), kind.blocks(), "wrong number of operator blocks");
    let alpha = a.alpha();
    for (b, op) in ops.iter().enumerate() {
        if op.mul(alpha) != alpha.mul(op) {
            return Some(Violation::Commutation { block: b });
        }
    }
    let ctx = IdentityContext::new(a, k);
    let n = a.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            ctx.pair_residual(kind, ops, i, j)
                .iter()
                .any(|x| !x.is_zero())
        })
        .map(|(i, j)| Violation::Pair { i, j })
}

/// Per-power spaces for `k = 0..=max_k` and their sum.
#[derive(Debug, Clone)]
pub struct Aggregate {
    pub kind: SpaceKind,
    pub per_k: Vec<MapSpace>,
    pub total: Subspace,
    /// `dim(total) = Σ dim(per_k)`.
    pub direct: bool,
}

impl Aggregate {
    pub fn from_spaces(kind: SpaceKind, n: usize, per_k: Vec<MapSpace>) -> Self {
        let total = per_k
            .iter()
            .try_fold(Subspace::zero(n * n), |acc, s| acc.sum(&s.space))
            .expect("operator spaces share ambient n²");
        let direct = total.dim() == per_k.iter().map(MapSpace::dim).sum::<usize>();
        Aggregate {
            kind,
            per_k,
            total,
            direct,
        }
    }

    pub fn total_operators(&self, n: usize) -> Vec<Matrix> {
        self.total
            .basis_vectors()
            .map(|v| Matrix::unflatten(n, v))
            .collect()
    }
}

pub fn aggregate(a: &HomAlgebra, kind: SpaceKind, max_k: usize) -> Aggregate {
    let per_k = (0..=max_k).map(|k| space(a, kind, k)).collect();
    Aggregate::from_spaces(kind, a.dim(), per_k)
}

fn check_square_pair(d1: &Matrix, d2: &Matrix) -> Result<()> {
    if !d1.is_square() || d1.rows() != d2.rows() || d1.cols() != d2.cols() {
        return Err(Error::DimensionMismatch {
            expected: d1.rows(),
            found: d2.rows(),
        });
    }
    Ok(())
}

/// `ν′(D₁, D₂) = D₁D₂ − D₂D₁`.
pub fn nu_prime(d1: &Matrix, d2: &Matrix) -> Result<Matrix> {
    check_square_pair(d1, d2)?;
    Ok(d1.mul(d2).sub(&d2.mul(d1)))
}

/// `ν(D₁, D₂) = D₁D₂ + D₂D₁`.
pub fn nu(d1: &Matrix, d2: &Matrix) -> Result<Matrix> {
    check_square_pair(d1, d2)?;
    Ok(d1.mul(d2).add(&d2.mul(d1)))
}

/// `σ(D) = α∘D`.
pub fn sigma(a: &HomAlgebra, d: &Matrix) -> Result<Matrix> {
    check_square_pair(a.alpha(), d)?;
    Ok(a.alpha().mul(d))
}

/// Operators `E_rc` probing, exposed for oracles that want the same basis.
pub fn unit_operator(n: usize, r: usize, c: usize) -> Matrix {
    Matrix::unflatten(n, &unit(n * n, r * n + c))
}

#[cfg(test)]
mod tests;

use super::{MapSpace, SpaceKind};
use crate::exactlin::{Matrix, Scalar, Subspace};

/// An operator together with the companion maps that certify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub op: Matrix,
    pub companions: Vec<Matrix>,
}

impl Witness {
    pub fn blocks(&self) -> Vec<Matrix> {
        std::iter::once(self.op.clone())
            .chain(self.companions.iter().cloned())
            .collect()
    }
}

/// Full solution space of a gder (`D, D′, D″`) or qder (`D, D′`) system,
/// flattened block after block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSpace {
    pub kind: SpaceKind,
    pub k: usize,
    pub n: usize,
    pub solutions: Subspace,
}

/// Alias kept for the generalized-derivation case.
pub type GDerWitness = WitnessSpace;

impl WitnessSpace {
    pub(crate) fn new(kind: SpaceKind, k: usize, n: usize, solutions: Subspace) -> Self {
        debug_assert_eq!(solutions.ambient_dim(), kind.blocks() * n * n);
        WitnessSpace {
            kind,
            k,
            n,
            solutions,
        }
    }

    pub fn blocks(&self) -> usize {
        self.kind.blocks()
    }

    /// The published space: projection onto the `D` block.
    pub fn projection(&self) -> MapSpace {
        MapSpace {
            kind: self.kind,
            k: self.k,
            n: self.n,
            space: self.solutions.project(0, self.n * self.n),
        }
    }

    fn split(&self, v: &[Scalar]) -> Witness {
        let nn = self.n * self.n;
        let mut parts = v.chunks(nn).map(|c| Matrix::unflatten(self.n, c));
        let op = parts.next().expect("at least one block");
        Witness {
            op,
            companions: parts.collect(),
        }
    }

    /// Solution rows whose pivot lies in the `D` block. Their `D` parts are
    /// exactly the canonical basis of [`WitnessSpace::projection`].
    pub fn generators(&self) -> Vec<Witness> {
        let nn = self.n * self.n;
        self.solutions
            .basis_vectors()
            .zip(self.solutions.pivots())
            .filter(|(_, &p)| p < nn)
            .map(|(v, _)| self.split(v))
            .collect()
    }

    /// Solutions with `D = 0`: the freedom in choosing companions.
    pub fn companion_kernel(&self) -> Vec<Witness> {
        let nn = self.n * self.n;
        self.solutions
            .basis_vectors()
            .zip(self.solutions.pivots())
            .filter(|(_, &p)| p >= nn)
            .map(|(v, _)| self.split(v))
            .collect()
    }

    /// Some witness for `op`, or `None` if `op` is not in the projection.
    pub fn witness_for(&self, op: &Matrix) -> Option<Witness> {
        let nn = self.n * self.n;
        let flat = op.flatten();
        let gens: Vec<(&[Scalar], usize)> = self
            .solutions
            .basis_vectors()
            .zip(self.solutions.pivots().iter().copied())
            .filter(|&(_, p)| p < nn)
            .collect();
        let mut acc = vec![Scalar::from_integer(0.into()); self.solutions.ambient_dim()];
        for (row, p) in &gens {
            let c = &flat[*p];
            for (a, r) in acc.iter_mut().zip(row.iter()) {
                *a += c * r;
            }
        }
        (acc[..nn] == flat[..]).then(|| self.split(&acc))
    }
}

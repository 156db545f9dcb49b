use num_traits::Zero;

use super::HomAlgebra;
use crate::exactlin::{solve_homogeneous, unit, Matrix, Scalar};

/// `f(x, y) = xᵀ G y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// `f(μ(x, y), z) = f(x, μ(y, z))` on all basis triples.
    pub fn is_invariant(&self, a: &HomAlgebra) -> bool {
        let n = a.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|l| {
                    let (ei, ej, el) = (unit(n, i), unit(n, j), unit(n, l));
                    self.eval(&a.mul(&ei, &ej), &el) == self.eval(&ei, &a.mul(&ej, &el))
                })
            })
        })
    }
}

/// Basis of the space of invariant bilinear forms.
pub fn invariant_forms(a: &HomAlgebra) -> Vec<BilinearForm> {
    let n = a.dim();
    // unknown G[p][q] sits at p * n + q
    let rows = (0..n).flat_map(|i| {
        (0..n).flat_map(move |j| {
            (0..n).map(move |l| {
                let mut row = vec![Scalar::zero(); n * n];
                for k in 0..n {
                    let c = a.structure_constant(i, j, k);
                    if !c.is_zero() {
                        row[k * n + l] += c;
                    }
                    let d = a.structure_constant(j, l, k);
                    if !d.is_zero() {
                        row[i * n + k] -= d;
                    }
                }
                row
            })
        })
    });
    solve_homogeneous(n * n, rows)
        .basis_vectors()
        .map(|v| BilinearForm {
            gram: Matrix::unflatten(n, v),
        })
        .collect()
}

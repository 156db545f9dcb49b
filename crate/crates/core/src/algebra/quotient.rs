use num_traits::{One, Zero};

use super::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{unit, Matrix, Scalar, Subspace};

/// `π : V₁ → V₂ = V₁/K`, with `V₂` coordinatized by the standard vectors at
/// the non-pivot coordinates of `K`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub source: HomAlgebra,
    pub ideal: Subspace,
    pub target: HomAlgebra,
    /// `n₂ × n₁` projection.
    pub pi: Matrix,
    /// `n₁ × n₂` coordinate section with `π ∘ s = id`.
    pub section: Matrix,
}

pub fn quotient(a: &HomAlgebra, k: &Subspace) -> Result<QuotientMap> {
    if !a.is_hom_ideal(k)? {
        return Err(Error::NotAnIdeal);
    }
    let n1 = a.dim();
    let keep = k.non_pivots();
    let n2 = keep.len();
    let mut slot = vec![None; n1];
    for (c, &j) in keep.iter().enumerate() {
        slot[j] = Some(c);
    }

    let mut pi = Matrix::zeros(n2, n1);
    let mut section = Matrix::zeros(n1, n2);
    for (c, &j) in keep.iter().enumerate() {
        pi[(c, j)] = Scalar::one();
        section[(j, c)] = Scalar::one();
    }
    // e_p ≡ e_p - row_p (mod K) for each pivot p of K's RREF basis
    for (row, &p) in k.basis_vectors().zip(k.pivots()) {
        for (j, x) in row.iter().enumerate() {
            if let (Some(c), false) = (slot[j], x.is_zero()) {
                pi[(c, p)] = -x.clone();
            }
        }
    }

    let lifts: Vec<Vec<Scalar>> = (0..n2).map(|c| section.column(c)).collect();
    let target = HomAlgebra::from_products(
        format!("{}/K", a.name()),
        n2,
        pi.mul(a.alpha()).mul(&section),
        |x, y| pi.apply(&a.mul(&lifts[x], &lifts[y])),
    )
    .with_checked_flags();

    Ok(QuotientMap {
        source: a.clone(),
        ideal: k.clone(),
        target,
        pi,
        section,
    })
}

impl QuotientMap {
    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.pi.apply(x)
    }

    /// `π∘μ₁ = μ₂∘(π×π)` and `π∘α₁ = α₂∘π` on the basis.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.pi.column(i)).collect();
        let products_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                self.project(&self.source.mul(&unit(n, i), &unit(n, j)))
                    == self.target.mul(&images[i], &images[j])
            })
        });
        products_ok && self.pi.mul(self.source.alpha()) == self.target.alpha().mul(&self.pi)
    }

    pub fn is_surjective(&self) -> bool {
        self.pi.rank() == self.target.dim()
    }

    /// `ker π` recomputed from the matrix.
    pub fn kernel(&self) -> Subspace {
        crate::exactlin::nullspace(&self.pi)
    }
}

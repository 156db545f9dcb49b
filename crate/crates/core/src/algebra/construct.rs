use num_traits::Zero;

use super::HomAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};
use crate::solve::commutant_of;

/// Block direct sum; the result remembers the block sizes.
pub fn direct_sum(a1: &HomAlgebra, a2: &HomAlgebra) -> HomAlgebra {
    let (n1, n2) = (a1.dim(), a2.dim());
    let n = n1 + n2;
    let sum = HomAlgebra::from_products(
        format!("{}+{}", a1.name(), a2.name()),
        n,
        a1.alpha().block_diag(a2.alpha()),
        |i, j| {
            let mut out = vec![Scalar::zero(); n];
            if i < n1 && j < n1 {
                out[..n1].clone_from_slice(&a1.basis_product(i, j));
            } else if i >= n1 && j >= n1 {
                out[n1..].clone_from_slice(&a2.basis_product(i - n1, j - n1));
            }
            out
        },
    );
    sum.with_blocks(Some(vec![n1, n2]))
}

/// `(V, β∘μ, β∘α)` for an algebra morphism `β` of `(V, μ)` commuting with `α`.
pub fn yau_twist(a: &HomAlgebra, beta: &Matrix) -> Result<HomAlgebra> {
    let n = a.dim();
    if beta.rows() != n || beta.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: beta.rows().max(beta.cols()),
        });
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| beta.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            if beta.apply(&a.basis_product(i, j)) != a.mul(&images[i], &images[j]) {
                return Err(Error::NotAMorphism(i, j));
            }
        }
    }
    if beta.mul(a.alpha()) != a.alpha().mul(beta) {
        return Err(Error::TwistDoesNotCommute);
    }
    Ok(HomAlgebra::from_products(
        format!("{}^beta", a.name()),
        n,
        beta.mul(a.alpha()),
        |i, j| beta.apply(&a.basis_product(i, j)),
    ))
}

/// The plus algebra `(𝒲, ν, σ)` on the commutant `𝒲 = {w : wα = αw}`, with
/// `ν(w₁, w₂) = w₁w₂ + w₂w₁` and `σ(w) = αw`, written in the canonical basis
/// of `𝒲` (operators flattened row-major).
pub fn commutant_plus_algebra(alpha: &Matrix) -> HomAlgebra {
    plus_subalgebra(alpha, &commutant_of(alpha), "plus")
        .expect("commutant is closed under the plus product and σ")
}

/// `(W, ν, σ)` for a subspace `W` of flattened operators closed under `ν`
/// and `σ`, in the canonical basis of `W`.
pub fn plus_subalgebra(alpha: &Matrix, w: &Subspace, name: &str) -> Result<HomAlgebra> {
    let n = alpha.rows();
    let ops: Vec<Matrix> = w.basis_vectors().map(|v| Matrix::unflatten(n, v)).collect();
    let coords = |m: &Matrix| -> Result<Vec<Scalar>> {
        w.coordinates(&m.flatten())?.ok_or_else(|| {
            Error::Precondition("subspace is not closed under the plus product and σ".into())
        })
    };
    let m = ops.len();
    let sigma_cols = ops
        .iter()
        .map(|op| coords(&alpha.mul(op)))
        .collect::<Result<Vec<_>>>()?;
    let mut products = Vec::with_capacity(m * m);
    for a in &ops {
        for b in &ops {
            products.push(coords(&a.mul(b).add(&b.mul(a)))?);
        }
    }
    Ok(HomAlgebra::from_products(
        name,
        m,
        Matrix::from_columns(m, &sigma_cols),
        |a, b| products[a * m + b].clone(),
    ))
}

/// Least subspace of flattened operators containing `seed` and closed under
/// `ν` and `σ`.
pub fn plus_closure(alpha: &Matrix, seed: &Subspace) -> Subspace {
    let n = alpha.rows();
    let mut s = seed.clone();
    loop {
        let ops: Vec<Matrix> = s.basis_vectors().map(|v| Matrix::unflatten(n, v)).collect();
        let mut red = s.clone();
        let mut grown = Vec::new();
        for (i, a) in ops.iter().enumerate() {
            grown.push(alpha.mul(a).flatten());
            for b in &ops[i..] {
                grown.push(a.mul(b).add(&b.mul(a)).flatten());
            }
        }
        red = red
            .sum(&Subspace::span(n * n, grown))
            .expect("operators share ambient n²");
        if red.dim() == s.dim() {
            return s;
        }
        s = red;
    }
}

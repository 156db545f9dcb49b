//! Hom-Jordan algebras given by structure constants and a twist map.
//!
//! `μ(e_i, e_j) = Σ_k c[i][j][k] e_k`, vectors are coordinate columns and
//! the twist `α` acts on them by matrix–vector product.

mod construct;
mod forms;
mod quotient;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{solve_homogeneous, unit, Matrix, Scalar, Subspace};

pub use construct::{commutant_plus_algebra, direct_sum, plus_closure, plus_subalgebra, yau_twist};
pub use forms::{invariant_forms, BilinearForm};
pub use quotient::{quotient, QuotientMap};

/// Which defining identities have been machine-checked on this value.
/// `asserted_simple` is caller metadata and is never derived here.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Flags {
    pub commutative_checked: bool,
    pub hom_jordan_checked: bool,
    pub multiplicative_checked: bool,
    pub asserted_simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    name: String,
    dim: usize,
    mu: Vec<Scalar>,
    alpha: Matrix,
    flags: Flags,
    blocks: Option<Vec<usize>>,
    // Sparse rows of the multiplication table, indexed by `i * dim + j`.
    table: Vec<Vec<(usize, Scalar)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomJordanReport {
    pub ok: bool,
    /// First basis tuple `(u, v, w, y)` on which the linearized identity fails.
    pub failing_tuple: Option<[usize; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub commutative: bool,
    pub non_commuting_pair: Option<(usize, usize)>,
    pub hom_jordan: HomJordanReport,
    pub multiplicative: bool,
    pub non_multiplicative_pair: Option<(usize, usize)>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.commutative && self.hom_jordan.ok && self.multiplicative
    }
}

impl HomAlgebra {
    /// `mu` is indexed as `mu[i][j][k]`; `alpha` must be `dim × dim`.
    pub fn new(name: impl Into<String>, mu: Vec<Vec<Vec<Scalar>>>, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        if !alpha.is_square() {
            return Err(Error::DimensionMismatch {
                expected: alpha.rows(),
                found: alpha.cols(),
            });
        }
        let mismatch = |found: usize| Error::DimensionMismatch {
            expected: dim,
            found,
        };
        if mu.len() != dim {
            return Err(mismatch(mu.len()));
        }
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for plane in mu {
            if plane.len() != dim {
                return Err(mismatch(plane.len()));
            }
            for row in plane {
                if row.len() != dim {
                    return Err(mismatch(row.len()));
                }
                flat.extend(row);
            }
        }
        Ok(HomAlgebra::from_flat(name.into(), dim, flat, alpha))
    }

    pub(crate) fn from_flat(name: String, dim: usize, mu: Vec<Scalar>, alpha: Matrix) -> Self {
        debug_assert_eq!(mu.len(), dim * dim * dim);
        let table = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &mu[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        HomAlgebra {
            name,
            dim,
            mu,
            alpha,
            flags: Flags::default(),
            blocks: None,
            table,
        }
    }

    /// Builds from a closure giving the product of two basis vectors.
    pub fn from_products<F>(name: impl Into<String>, dim: usize, alpha: Matrix, product: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<Scalar>,
    {
        let mut mu = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.len(), dim);
                mu.extend(p);
            }
        }
        HomAlgebra::from_flat(name.into(), dim, mu, alpha)
    }

    /// The abelian algebra (`μ = 0`) with twist `alpha`.
    pub fn abelian(name: impl Into<String>, alpha: Matrix) -> Self {
        let n = alpha.rows();
        HomAlgebra::from_flat(name.into(), n, vec![Scalar::zero(); n * n * n], alpha)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn with_flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    pub fn asserted_simple(mut self, simple: bool) -> Self {
        self.flags.asserted_simple = simple;
        self
    }

    /// Sizes of the summands when this algebra was built as a direct sum.
    pub fn blocks(&self) -> Option<&[usize]> {
        self.blocks.as_deref()
    }

    pub fn with_blocks(mut self, blocks: Option<Vec<usize>>) -> Self {
        self.blocks = blocks;
        self
    }

    /// Runs every check and records the outcome in the flags.
    pub fn with_checked_flags(mut self) -> Self {
        let r = self.validate();
        self.flags.commutative_checked = r.commutative;
        self.flags.hom_jordan_checked = r.hom_jordan.ok;
        self.flags.multiplicative_checked = r.multiplicative;
        self
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mu[(i * self.dim + j) * self.dim + k]
    }

    /// Structure constants as `mu[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.basis_product(i, j)).collect())
            .collect()
    }

    /// `μ(e_i, e_j)` as a dense vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let start = (i * self.dim + j) * self.dim;
        self.mu[start..start + self.dim].to_vec()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked bilinear product; callers guarantee lengths.
    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        let ys: Vec<usize> = (0..n).filter(|&j| !y[j].is_zero()).collect();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for &j in &ys {
                let row = &self.table[i * n + j];
                if row.is_empty() {
                    continue;
                }
                let coef = xi * &y[j];
                for (k, c) in row {
                    out[*k] += &coef * c;
                }
            }
        }
        out
    }

    pub fn twist(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.alpha.apply(x)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// First pair `(i, j)` with `μ(e_i, e_j) ≠ μ(e_j, e_i)`.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.table[i * n + j] != self.table[j * n + i])
    }

    pub fn check_commutative(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// First basis pair on which `α μ(e_i, e_j) = μ(α e_i, α e_j)` fails.
    pub fn non_multiplicative_pair(&self) -> Option<(usize, usize)> {
        let n = self.dim;
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.alpha.column(i)).collect();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| {
                self.twist(&self.basis_product(i, j)) != self.mul(&images[i], &images[j])
            })
    }

    pub fn check_multiplicative(&self) -> bool {
        self.non_multiplicative_pair().is_none()
    }

    /// Checks `μ(α²x, μ(y, μ(x,x))) = μ(μ(αx, y), α μ(x,x))` through its full
    /// polarization: the three occurrences of `x` become `u, v, w`, the
    /// difference is summed over all 3! slot assignments, and the result must
    /// vanish on every basis tuple. Over ℚ this is equivalent to the cubic
    /// identity for all `x, y`. The polarized form is symmetric in `u, v, w`,
    /// so only sorted triples are visited.
    pub fn check_hom_jordan(&self) -> HomJordanReport {
        let n = self.dim;
        let alpha2 = self.alpha.mul(&self.alpha);
        let a1: Vec<Vec<Scalar>> = (0..n).map(|p| self.alpha.column(p)).collect();
        let a2: Vec<Vec<Scalar>> = (0..n).map(|p| alpha2.column(p)).collect();
        let sq: Vec<Vec<Scalar>> = (0..n * n)
            .map(|qr| self.basis_product(qr / n, qr % n))
            .collect();
        let twisted_sq: Vec<Vec<Scalar>> = sq.iter().map(|v| self.twist(v)).collect();
        // inner[y][q][r] = μ(e_y, μ(e_q, e_r))
        let inner: Vec<Vec<Scalar>> = (0..n * n * n)
            .map(|t| self.mul(&unit(n, t / (n * n)), &sq[t % (n * n)]))
            .collect();
        // left[p][y] = μ(α e_p, e_y)
        let left: Vec<Vec<Scalar>> = (0..n * n)
            .map(|py| self.mul(&a1[py / n], &unit(n, py % n)))
            .collect();

        let term = |p: usize, q: usize, r: usize, y: usize, acc: &mut Vec<Scalar>| {
            let lhs = self.mul(&a2[p], &inner[(y * n + q) * n + r]);
            let rhs = self.mul(&left[p * n + y], &twisted_sq[q * n + r]);
            for ((a, l), r) in acc.iter_mut().zip(lhs).zip(rhs) {
                *a += l - r;
            }
        };

        for u in 0..n {
            for v in u..n {
                for w in v..n {
                    for y in 0..n {
                        let mut acc = vec![Scalar::zero(); n];
                        for (p, q, r) in [
                            (u, v, w),
                            (u, w, v),
                            (v, u, w),
                            (v, w, u),
                            (w, u, v),
                            (w, v, u),
                        ] {
                            term(p, q, r, y, &mut acc);
                        }
                        if acc.iter().any(|x| !x.is_zero()) {
                            return HomJordanReport {
                                ok: false,
                                failing_tuple: Some([u, v, w, y]),
                            };
                        }
                    }
                }
            }
        }
        HomJordanReport {
            ok: true,
            failing_tuple: None,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let non_commuting_pair = self.non_commuting_pair();
        let non_multiplicative_pair = self.non_multiplicative_pair();
        ValidationReport {
            commutative: non_commuting_pair.is_none(),
            non_commuting_pair,
            hom_jordan: self.check_hom_jordan(),
            multiplicative: non_multiplicative_pair.is_none(),
            non_multiplicative_pair,
        }
    }

    /// Matrix of `L_x : y ↦ μ(x, y)`.
    pub fn left_mul(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.mul(x, &unit(n, j))).collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    /// `Z(V) = {x : μ(x, y) = 0 ∀ y}`.
    pub fn centralizer(&self) -> Subspace {
        self.annihilator_of(&Subspace::full(self.dim))
    }

    /// `{x : μ(x, y) = 0 ∀ y ∈ s}`.
    pub fn annihilator_of(&self, s: &Subspace) -> Subspace {
        let n = self.dim;
        let rows = s.basis_vectors().flat_map(|y| {
            // coefficient of x_i in μ(x, y)_k is μ(e_i, y)_k
            let cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.mul(&unit(n, i), y)).collect();
            (0..n)
                .map(move |k| cols.iter().map(|c| c[k].clone()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        });
        solve_homogeneous(n, rows)
    }

    pub fn product_subspace(&self, s1: &Subspace, s2: &Subspace) -> Result<Subspace> {
        self.check_len(&vec![Scalar::zero(); s1.ambient_dim()])?;
        self.check_len(&vec![Scalar::zero(); s2.ambient_dim()])?;
        let products = s1
            .basis_vectors()
            .flat_map(|u| s2.basis_vectors().map(move |v| self.mul(u, v)));
        Ok(Subspace::span(self.dim, products))
    }

    /// `μ(V, V)`.
    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.product_subspace(&full, &full)
            .expect("full space has matching ambient")
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    pub fn is_alpha_invariant(&self, s: &Subspace) -> Result<bool> {
        s.image(&self.alpha)?.is_subspace_of(s)
    }

    pub fn is_hom_ideal(&self, s: &Subspace) -> Result<bool> {
        if !self.is_alpha_invariant(s)? {
            return Ok(false);
        }
        let n = self.dim;
        for b in s.basis_vectors() {
            for j in 0..n {
                if !s.contains(&self.mul(b, &unit(n, j)))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_hom_subalgebra(&self, s: &Subspace) -> Result<bool> {
        if !self.is_alpha_invariant(s)? {
            return Ok(false);
        }
        for a in s.basis_vectors() {
            for b in s.basis_vectors() {
                if !s.contains(&self.mul(a, b))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Least Hom-ideal containing `seed`: the fixpoint of
    /// `S ↦ S + α(S) + μ(S, V)`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Result<Subspace> {
        let full = Subspace::full(self.dim);
        let mut s = seed.clone();
        loop {
            let next = s
                .sum(&s.image(&self.alpha)?)?
                .sum(&self.product_subspace(&s, &full)?)?;
            if next.dim() == s.dim() {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Restricts the structure to a subspace spanned by coordinate block
    /// `[offset, offset + len)`. Only meaningful when that block is a
    /// subalgebra stable under `α`.
    pub fn restrict_block(&self, offset: usize, len: usize, name: impl Into<String>) -> HomAlgebra {
        let mu: Vec<Scalar> = (0..len)
            .flat_map(|i| {
                (0..len).flat_map(move |j| {
                    (0..len).map(move |k| {
                        self.structure_constant(offset + i, offset + j, offset + k)
                            .clone()
                    })
                })
            })
            .collect();
        let alpha = self.alpha.block(offset, offset, len, len);
        HomAlgebra::from_flat(name.into(), len, mu, alpha)
    }

    /// Splits an algebra tagged with two blocks into its summands.
    pub fn summands(&self) -> Option<(HomAlgebra, HomAlgebra)> {
        let blocks = self.blocks.as_ref()?;
        if blocks.len() != 2 || blocks[0] + blocks[1] != self.dim {
            return None;
        }
        let a1 = self.restrict_block(0, blocks[0], format!("{}[0]", self.name));
        let a2 = self.restrict_block(blocks[0], blocks[1], format!("{}[1]", self.name));
        Some((a1.with_checked_flags(), a2.with_checked_flags()))
    }
}

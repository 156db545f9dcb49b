use num_traits::{One, Zero};

use super::echelon::{rref, Echelon, RowReducer};
use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of `ℚ^ambient`, stored as its RREF basis.
///
/// The RREF is unique, so derived equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    fn from_echelon(e: Echelon) -> Self {
        Subspace {
            ambient: e.matrix.cols(),
            basis: e.matrix,
            pivots: e.pivots,
        }
    }

    pub(crate) fn from_reducer(red: RowReducer) -> Self {
        Subspace::from_echelon(red.finish())
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        Subspace::from_echelon(rref(m))
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<I, V>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<Scalar>>,
    {
        let mut red = RowReducer::new(ambient);
        for v in vectors {
            red.push(v.into());
        }
        Subspace::from_reducer(red)
    }

    /// Span of the standard basis vectors at `indices`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Subspace::span(ambient, indices.into_iter().map(|i| unit(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical (RREF) basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.dim()).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other,
            });
        }
        Ok(())
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v ∉ self`.
    ///
    /// In RREF the coefficient of basis row `i` is just `v[pivot_i]`.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_ambient(v.len())?;
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (x, r) in residual.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= c * r;
                }
            }
        }
        Ok(residual.iter().all(Zero::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            if c.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o += c * r;
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let mut red = RowReducer::new(self.ambient);
        for v in self.basis_vectors().chain(other.basis_vectors()) {
            red.push(v.to_vec());
        }
        Ok(Subspace::from_reducer(red))
    }

    /// Annihilator `{w : ⟨w, v⟩ = 0 ∀ v ∈ self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        nullspace(&self.basis)
    }

    /// Computed as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let dual = self.annihilator().sum(&other.annihilator())?;
        Ok(dual.annihilator())
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(self == other)
    }

    /// True iff `self ∩ other = {0}`.
    pub fn is_direct(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        Ok(self.dim() + other.dim() == self.sum(other)?.dim())
    }

    /// Span of the standard basis vectors at the non-pivot coordinates.
    pub fn complement(&self) -> Subspace {
        Subspace::coordinate(self.ambient, self.non_pivots())
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Image of the subspace under the linear map `m` (acting on columns).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        self.check_ambient(m.cols())?;
        Ok(Subspace::span(
            m.rows(),
            self.basis_vectors().map(|v| m.apply(v)),
        ))
    }

    /// Restriction to the coordinate window `[start, start + len)`.
    pub fn project(&self, start: usize, len: usize) -> Subspace {
        Subspace::span(
            len,
            self.basis_vectors().map(|v| v[start..start + len].to_vec()),
        )
    }

    /// Embeds into a larger ambient space, placing coordinates at `offset`.
    pub fn embed(&self, ambient: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= ambient);
        Subspace::span(
            ambient,
            self.basis_vectors().map(|v| {
                let mut w = vec![Scalar::zero(); ambient];
                w[offset..offset + v.len()].clone_from_slice(v);
                w
            }),
        )
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `{v : m·v = 0}`.
pub fn nullspace(m: &Matrix) -> Subspace {
    let e = rref(m);
    nullspace_of_echelon(&e)
}

/// Solution space of the homogeneous system whose constraint rows are
/// streamed in; rows past saturation are skipped cheaply.
pub fn solve_homogeneous<I>(unknowns: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut red = RowReducer::new(unknowns);
    for r in rows {
        if red.is_saturated() {
            break;
        }
        red.push(r);
    }
    nullspace_of_echelon(&red.finish())
}

pub(crate) fn nullspace_of_echelon(e: &Echelon) -> Subspace {
    let cols = e.matrix.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (i, &p) in e.pivots.iter().enumerate() {
            v[p] = -e.matrix[(i, f)].clone();
        }
        v
    });
    Subspace::span(cols, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn nullspace_examples() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let ns = nullspace(&m);
        assert_eq!(ns, Subspace::span(2, [v(&[-2, 1])]));
        for b in ns.basis_vectors() {
            assert!(m.apply(b).iter().all(Zero::is_zero));
        }
        assert!(nullspace(&Matrix::identity(4)).is_zero());
        assert!(nullspace(&Matrix::zeros(1, 3)).is_full());
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::coordinate(2, [0]);
        let e2 = Subspace::coordinate(2, [1]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert_eq!(e1.sum(&e1).unwrap(), e1);

        let a = Subspace::span(3, [v(&[1, 1, 0])]);
        let b = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s, b);
        assert!(s.is_subspace_of(&b).unwrap() && b.is_subspace_of(&s).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let e1 = Subspace::coordinate(2, [0]);
        let e2 = Subspace::coordinate(2, [1]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);

        let full = Subspace::span(2, [v(&[1, 0]), v(&[0, 1])]);
        let diag = Subspace::span(2, [v(&[1, 1])]);
        let i = full.intersect(&diag).unwrap();
        assert_eq!(i, diag);
        assert_eq!(
            i.dim() + full.sum(&diag).unwrap().dim(),
            full.dim() + diag.dim()
        );
    }

    #[test]
    fn membership_and_directness() {
        let e1 = Subspace::coordinate(2, [0]);
        assert!(e1.contains(&v(&[1, 0])).unwrap());
        assert!(!e1.contains(&v(&[1, 1])).unwrap());
        let d = Subspace::span(2, [v(&[1, 1])]);
        assert!(e1.is_direct(&d).unwrap());
        assert!(!e1.is_direct(&e1).unwrap());
        let a = Subspace::span(2, [v(&[2, 0])]);
        assert!(a.equals(&Subspace::span(2, [v(&[1, 0])])).unwrap());
    }

    #[test]
    fn ambient_mismatch_errors() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&v(&[1, 2, 3])).is_err());
        assert!(a.is_direct(&b).is_err());
        assert!(a.equals(&b).is_err());
    }

    #[test]
    fn complement_examples() {
        assert!(Subspace::zero(2).complement().is_full());
        assert!(Subspace::full(2).complement().is_zero());
        let d = Subspace::span(2, [v(&[1, 1])]);
        assert_eq!(d.complement(), Subspace::coordinate(2, [1]));
    }

    #[test]
    fn coordinates_recombine() {
        let s = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 7]);
        let c = s.coordinates(&x).unwrap().unwrap();
        assert_eq!(s.combine(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).unwrap().is_none());
    }
}

//! Reference computations for the solver tests.
//!
//! Constraint rows are written out directly from index formulas for each
//! identity, and eliminated by a dense Gauss–Jordan pass that picks the
//! pivot of smallest height in each column. Nothing here calls the
//! library's constraint assembly or its incremental row reducer.

#![allow(dead_code)]

use homjordan::{HomAlgebra, Matrix, Scalar, SpaceKind};
use num_traits::{One, Signed, Zero};

fn height(x: &Scalar) -> (usize, usize) {
    (x.numer().bits() as usize, x.denom().bits() as usize)
}

/// Reduced row echelon form of `rows` (each of length `cols`) and its pivot
/// columns. Zero rows are dropped.
pub fn gauss_jordan(mut rows: Vec<Vec<Scalar>>, cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let best = (top..rows.len())
            .filter(|&r| !rows[r][c].is_zero())
            .min_by_key(|&r| height(&rows[r][c]));
        let Some(p) = best else { continue };
        rows.swap(top, p);
        let inv = rows[top][c].recip();
        for x in rows[top].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

/// Basis of `{v : row·v = 0 for every row}`, one vector per free column.
pub fn kernel(rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let (r, pivots) = gauss_jordan(rows, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); cols];
            v[free] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Canonical (reduced echelon) basis of the span.
pub fn canonical(vectors: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    gauss_jordan(vectors, cols).0
}

pub fn rank(rows: Vec<Vec<Scalar>>, cols: usize) -> usize {
    gauss_jordan(rows, cols).0.len()
}

fn entry(m: &Matrix, r: usize, c: usize) -> Scalar {
    m[(r, c)].clone()
}

fn power(alpha: &Matrix, k: usize) -> Vec<Vec<Scalar>> {
    let n = alpha.rows();
    let mut p: Vec<Vec<Scalar>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    for _ in 0..k {
        p = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(Scalar::zero(), |acc, t| acc + &p[r][t] * entry(alpha, t, c))
                    })
                    .collect()
            })
            .collect();
    }
    p
}

/// Rows of the linear system whose unknowns are the blocks of `kind`
/// flattened row-major, block after block (`D`, then companions).
pub fn constraints(a: &HomAlgebra, kind: SpaceKind, k: usize) -> (usize, Vec<Vec<Scalar>>) {
    let n = a.dim();
    let nn = n * n;
    let blocks = match kind {
        SpaceKind::Gder => 3,
        SpaceKind::Qder => 2,
        _ => 1,
    };
    let unknowns = blocks * nn;
    let c = |i: usize, j: usize, m: usize| a.structure_constant(i, j, m).clone();
    let al = a.alpha();
    let ak = power(al, k);
    let mut rows = Vec::new();

    // X α − α X = 0 for each block X
    for b in 0..blocks {
        for r in 0..n {
            for s in 0..n {
                let mut row = vec![Scalar::zero(); unknowns];
                for t in 0..n {
                    row[b * nn + r * n + t] += entry(al, t, s);
                    row[b * nn + t * n + s] -= entry(al, r, t);
                }
                rows.push(row);
            }
        }
    }
    if kind == SpaceKind::Commutant {
        return (unknowns, rows);
    }

    // Component m of each term at the basis pair (i, j), as a row over the
    // unknowns of block `b`:
    //   image(X):  X μ(e_i, e_j)      coefficient of X[m][q] is c(i, j, q)
    //   left(X):   μ(X e_i, α^k e_j)  coefficient of X[p][i] is Σ_s A[s][j] c(p, s, m)
    //   right(X):  μ(α^k e_i, X e_j)  coefficient of X[p][j] is Σ_r A[r][i] c(r, p, m)
    let image = |row: &mut [Scalar], b: usize, sign: i64, i: usize, j: usize, m: usize| {
        for q in 0..n {
            row[b * nn + m * n + q] += Scalar::from_integer(sign.into()) * c(i, j, q);
        }
    };
    let left = |row: &mut [Scalar], b: usize, sign: i64, i: usize, j: usize, m: usize| {
        for p in 0..n {
            let v = (0..n).fold(Scalar::zero(), |acc, s| acc + &ak[s][j] * c(p, s, m));
            row[b * nn + p * n + i] += Scalar::from_integer(sign.into()) * v;
        }
    };
    let right = |row: &mut [Scalar], b: usize, sign: i64, i: usize, j: usize, m: usize| {
        for p in 0..n {
            let v = (0..n).fold(Scalar::zero(), |acc, r| acc + &ak[r][i] * c(r, p, m));
            row[b * nn + p * n + j] += Scalar::from_integer(sign.into()) * v;
        }
    };

    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let fresh = || vec![Scalar::zero(); unknowns];
                match kind {
                    SpaceKind::Der => {
                        let mut row = fresh();
                        image(&mut row, 0, 1, i, j, m);
                        left(&mut row, 0, -1, i, j, m);
                        right(&mut row, 0, -1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::Gder => {
                        let mut row = fresh();
                        left(&mut row, 0, 1, i, j, m);
                        right(&mut row, 1, 1, i, j, m);
                        image(&mut row, 2, -1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::Qder => {
                        let mut row = fresh();
                        left(&mut row, 0, 1, i, j, m);
                        right(&mut row, 0, 1, i, j, m);
                        image(&mut row, 1, -1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::C => {
                        let mut row = fresh();
                        left(&mut row, 0, 1, i, j, m);
                        right(&mut row, 0, -1, i, j, m);
                        rows.push(row);
                        let mut row = fresh();
                        image(&mut row, 0, 1, i, j, m);
                        right(&mut row, 0, -1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::Qc => {
                        let mut row = fresh();
                        left(&mut row, 0, 1, i, j, m);
                        right(&mut row, 0, -1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::Zder => {
                        let mut row = fresh();
                        left(&mut row, 0, 1, i, j, m);
                        rows.push(row);
                        let mut row = fresh();
                        image(&mut row, 0, 1, i, j, m);
                        rows.push(row);
                    }
                    SpaceKind::Commutant => unreachable!(),
                }
            }
        }
    }
    (unknowns, rows)
}

/// Canonical basis of the published space: the `D` block of the solutions.
pub fn space(a: &HomAlgebra, kind: SpaceKind, k: usize) -> Vec<Vec<Scalar>> {
    let nn = a.dim() * a.dim();
    let (unknowns, rows) = constraints(a, kind, k);
    let sols = kernel(rows, unknowns);
    canonical(sols.into_iter().map(|v| v[..nn].to_vec()).collect(), nn)
}

/// Dimension of the full solution space including companion blocks.
pub fn solution_dim(a: &HomAlgebra, kind: SpaceKind, k: usize) -> usize {
    let (unknowns, rows) = constraints(a, kind, k);
    unknowns - rank(rows, unknowns)
}

/// `M v` computed entrywise.
pub fn apply(rows: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(v)
                .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Whether every entry is at most `bound` in absolute value.
pub fn bounded(v: &[Scalar], bound: i64) -> bool {
    let b = Scalar::from_integer(bound.into());
    v.iter().all(|x| x.abs() <= b)
}

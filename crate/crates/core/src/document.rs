//! JSON form of an algebra.
//!
//! ```json
//! {"name": "dual", "dim": 2,
//!  "alpha": [["1","0"],["0","1"]],
//!  "mu": [[["1","0"],["0","1"]],[["0","1"],["0","0"]]],
//!  "flags": {"asserted_simple": false}}
//! ```
//!
//! `mu[i][j][k]` is the coefficient of `e_k` in `μ(e_i, e_j)`; `alpha` is
//! given by rows. An optional `blocks` array records direct-sum summand sizes.

use serde::{Deserialize, Serialize};

use crate::algebra::{Flags, HomAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{format_scalar, parse_scalar, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub name: String,
    pub dim: usize,
    pub alpha: Vec<Vec<String>>,
    pub mu: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<usize>>,
}

fn parse_row(row: &[String]) -> Result<Vec<Scalar>> {
    row.iter().map(|t| parse_scalar(t)).collect()
}

impl AlgebraDocument {
    pub fn from_algebra(a: &HomAlgebra) -> Self {
        let fmt = |v: &[Scalar]| v.iter().map(format_scalar).collect::<Vec<_>>();
        AlgebraDocument {
            name: a.name().to_string(),
            dim: a.dim(),
            alpha: a.alpha().to_rows().iter().map(|r| fmt(r)).collect(),
            mu: a
                .structure_constants()
                .iter()
                .map(|plane| plane.iter().map(|r| fmt(r)).collect())
                .collect(),
            flags: a.flags(),
            blocks: a.blocks().map(<[usize]>::to_vec),
        }
    }

    /// Builds the algebra. Stated `*_checked` flags are not trusted: they
    /// are recomputed, while `asserted_simple` is kept as given.
    pub fn to_algebra(&self) -> Result<HomAlgebra> {
        let n = self.dim;
        let shape = |what: &str, found: usize| {
            Error::MalformedDocument(format!("{what} has length {found}, expected {n}"))
        };
        if self.alpha.len() != n {
            return Err(shape("alpha", self.alpha.len()));
        }
        let mut alpha_rows = Vec::with_capacity(n);
        for row in &self.alpha {
            if row.len() != n {
                return Err(shape("alpha row", row.len()));
            }
            alpha_rows.push(parse_row(row)?);
        }
        let alpha = if n == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_rows(alpha_rows)?
        };
        if self.mu.len() != n {
            return Err(shape("mu", self.mu.len()));
        }
        let mut mu = Vec::with_capacity(n);
        for plane in &self.mu {
            if plane.len() != n {
                return Err(shape("mu plane", plane.len()));
            }
            let mut rows = Vec::with_capacity(n);
            for row in plane {
                if row.len() != n {
                    return Err(shape("mu row", row.len()));
                }
                rows.push(parse_row(row)?);
            }
            mu.push(rows);
        }
        if let Some(b) = &self.blocks {
            if b.iter().sum::<usize>() != n {
                return Err(Error::MalformedDocument(format!(
                    "blocks {b:?} do not add up to dim {n}"
                )));
            }
        }
        Ok(HomAlgebra::new(self.name.clone(), mu, alpha)?
            .with_blocks(self.blocks.clone())
            .with_checked_flags()
            .asserted_simple(self.flags.asserted_simple))
    }
}

pub fn parse_algebra(json: &str) -> Result<HomAlgebra> {
    let doc: AlgebraDocument =
        serde_json::from_str(json).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    doc.to_algebra()
}

/// Pretty-printed JSON with a trailing newline.
pub fn algebra_to_json(a: &HomAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraDocument::from_algebra(a))
        .expect("document serializes");
    s.push('\n');
    s
}

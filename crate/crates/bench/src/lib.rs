//! Fixed algebras for the benchmarks, chosen to span the corpus sizes.

use homjordan::corpus;
use homjordan::HomAlgebra;

/// `(label, algebra)` pairs from dimension 1 up to the largest sums.
pub fn fixtures() -> Vec<(&'static str, HomAlgebra)> {
    vec![
        ("unital-1", corpus::unital1()),
        ("dual", corpus::dual()),
        ("peirce-3", corpus::peirce3()),
        ("poly3-yau-2", corpus::poly3_yau(2)),
        (
            "sym2+unital-1",
            corpus::sum(&corpus::sym2(), &corpus::unital1()),
        ),
    ]
}

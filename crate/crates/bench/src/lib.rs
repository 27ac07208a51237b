//! Inputs shared by the benchmarks.

use lbraid::equiv::Seed;
use lbraid::exactla::{Matrix, Scalar};
use lbraid::fixtures::standard_seeds;

/// The `n × n` Hilbert matrix, a dense full-rank rational worst case for
/// row reduction.
pub fn hilbert(n: usize) -> Matrix {
    let entries = (0..n * n).map(|k| Scalar::new(1, (k / n + k % n + 1) as i64)).collect();
    Matrix::from_entries(n, n, entries)
}

pub fn seeds() -> Vec<Seed> {
    standard_seeds().into_iter().map(|(n, z)| Seed::XMod(n, z)).collect()
}

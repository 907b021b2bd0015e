//! Dense fraction-free (Bareiss) elimination over the integers.
//!
//! Exact rank over `Q`; slow, and meant only as a reference for the modular
//! sparse path.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::sparse::SparseTriplets;

/// Largest column count accepted by [`rational_rank`].
pub const ORACLE_MAX_COLS: usize = 2000;

/// Rank over the rationals. Panics above [`ORACLE_MAX_COLS`] columns.
pub fn rational_rank(m: &SparseTriplets) -> usize {
    assert!(m.cols <= ORACLE_MAX_COLS, "oracle limited to {ORACLE_MAX_COLS} columns");
    let mut a: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        a[r][c] += BigInt::from(v);
    }
    let rows = m.rows;
    let cols = m.cols;
    let mut prev = BigInt::one();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in rank + 1..rows {
            for k in col + 1..cols {
                let v = &a[r][k] * &a[rank][col] - &a[r][col] * &a[rank][k];
                debug_assert!((&v % &prev).is_zero());
                a[r][k] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

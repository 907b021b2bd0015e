//! Exact rank computation over word-size prime fields.

mod eliminate;
mod field;
pub mod oracle;
mod sparse;

use std::time::{Duration, Instant};

pub use field::{PrimeField, DEFAULT_PRIMES};
pub use sparse::SparseTriplets;

use crate::error::{Result, SyzygyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub prime: PrimeField,
    pub pivots: usize,
    pub elapsed: Duration,
}

/// Rank of `m` over `F_p`. Deterministic in `(m, p)`.
pub fn rank(m: &SparseTriplets, field: PrimeField) -> RankResult {
    let start = Instant::now();
    let r = eliminate::sparse_rank(m, field);
    RankResult { rank: r, prime: field, pivots: r, elapsed: start.elapsed() }
}

/// Rank checked over several primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifiedRank {
    /// Maximum over the primes; never exceeds the rank over `Q`.
    pub rank: usize,
    /// Whether every prime produced the same rank.
    pub agree: bool,
}

pub fn rank_certified(m: &SparseTriplets, primes: &[PrimeField]) -> Result<CertifiedRank> {
    let mut distinct = primes.to_vec();
    distinct.sort();
    distinct.dedup();
    if distinct.len() < 2 {
        return Err(SyzygyError::FieldFailure("certification needs at least two distinct primes".into()));
    }
    let ranks: Vec<usize> = distinct.iter().map(|&f| rank(m, f).rank).collect();
    let max = *ranks.iter().max().expect("non-empty");
    Ok(CertifiedRank { rank: max, agree: ranks.iter().all(|&r| r == max) })
}

/// Rank over `F_p` of a dense integer matrix; used by tests and small blocks.
pub fn dense_rank_mod(m: &SparseTriplets, field: PrimeField) -> usize {
    let mut data = vec![0u32; m.rows * m.cols];
    for &(r, c, v) in &m.entries {
        let cell = &mut data[r * m.cols + c];
        *cell = field.add(*cell, field.reduce(v));
    }
    eliminate::dense_rank(&mut data, m.rows, m.cols, field)
}

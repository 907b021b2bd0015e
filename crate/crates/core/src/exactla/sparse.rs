use std::collections::HashSet;

use serde::{Deserialize, Serialize};

/// A sparse integer matrix given as `(row, col, value)` triplets.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SparseTriplets {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseTriplets {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseTriplets { rows, cols, entries: Vec::new() }
    }

    pub fn with_entries(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Self {
        debug_assert!(entries.iter().all(|&(r, c, _)| r < rows && c < cols));
        SparseTriplets { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        SparseTriplets::with_entries(n, n, (0..n).map(|k| (k, k, 1)).collect())
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = SparseTriplets::new(rows, cols);
        for (r, row) in dense.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.entries.push((r, c, v));
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            out[r][c] += v;
        }
        out
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        self.entries.push((row, col, value));
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> Self {
        SparseTriplets {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
        }
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &SparseTriplets) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|&(r, c, v)| (r + self.rows, c + self.cols, v)));
        SparseTriplets { rows: self.rows + other.rows, cols: self.cols + other.cols, entries }
    }

    pub fn has_duplicates(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.entries.len());
        !self.entries.iter().all(|&(r, c, _)| seen.insert((r, c)))
    }

    /// Nonzero count per column.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.cols];
        for &(_, c, v) in &self.entries {
            if v != 0 {
                counts[c] += 1;
            }
        }
        counts
    }
}

//! Sparse Gaussian elimination over `F_p`, rank only.
//!
//! Pivots are chosen Markowitz-style: singleton rows first, then among the
//! columns of minimal count (at most `CANDIDATE_COLUMNS` of them, lowest column
//! index first) the entry minimizing `(row_len - 1) * (col_count - 1)`, ties
//! broken by lowest `(row, col)`. Once the active submatrix becomes dense
//! enough the remainder is finished by dense elimination.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::field::PrimeField;
use super::sparse::SparseTriplets;

const CANDIDATE_COLUMNS: usize = 4;
const DENSE_CHECK_INTERVAL: usize = 32;
const DENSE_FILL_RATIO: f64 = 0.12;
const DENSE_MAX_CELLS: usize = 40_000_000;

type Row = Vec<(u32, u32)>;

struct Eliminator {
    field: PrimeField,
    rows: Vec<Row>,
    row_alive: Vec<bool>,
    col_rows: Vec<Vec<u32>>,
    col_cnt: Vec<u32>,
    col_done: Vec<bool>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
    singletons: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    nnz: usize,
}

/// Rank of `m` over `field`.
pub(crate) fn sparse_rank(m: &SparseTriplets, field: PrimeField) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut elim = Eliminator::new(m, field);
    elim.run()
}

impl Eliminator {
    fn new(m: &SparseTriplets, field: PrimeField) -> Self {
        let mut rows: Vec<Row> = vec![Vec::new(); m.rows];
        for &(r, c, v) in &m.entries {
            let v = field.reduce(v);
            if v != 0 {
                rows[r].push((c as u32, v));
            }
        }
        let mut nnz = 0;
        for row in rows.iter_mut() {
            row.sort_unstable_by_key(|e| e.0);
            // merge duplicate coordinates
            let mut merged: Row = Vec::with_capacity(row.len());
            for &(c, v) in row.iter() {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 = field.add(last.1, v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| e.1 != 0);
            nnz += merged.len();
            *row = merged;
        }
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.cols];
        let mut col_cnt = vec![0u32; m.cols];
        let mut singletons = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            for &(c, _) in row {
                col_rows[c as usize].push(r as u32);
                col_cnt[c as usize] += 1;
            }
            if row.len() == 1 {
                singletons.push(r as u32);
            }
        }
        singletons.reverse();
        let heap = col_cnt.iter().enumerate().filter(|(_, &n)| n > 0).map(|(c, &n)| Reverse((n, c as u32))).collect();
        Eliminator {
            field,
            row_alive: vec![true; m.rows],
            rows,
            col_rows,
            col_cnt,
            col_done: vec![false; m.cols],
            heap,
            singletons,
            stamp: vec![0; m.rows],
            epoch: 0,
            nnz,
        }
    }

    fn run(&mut self) -> usize {
        let mut rank = 0usize;
        let mut since_check = 0usize;
        loop {
            since_check += 1;
            if since_check >= DENSE_CHECK_INTERVAL {
                since_check = 0;
                if let Some(dense_rank) = self.try_dense() {
                    return rank + dense_rank;
                }
            }
            let Some((pr, pc)) = self.select_pivot() else { break };
            self.eliminate(pr, pc);
            rank += 1;
        }
        rank
    }

    fn select_pivot(&mut self) -> Option<(u32, u32)> {
        while let Some(r) = self.singletons.pop() {
            let ru = r as usize;
            if self.row_alive[ru] && self.rows[ru].len() == 1 {
                return Some((r, self.rows[ru][0].0));
            }
        }
        let mut candidates: Vec<u32> = Vec::with_capacity(CANDIDATE_COLUMNS);
        let mut min_count = 0u32;
        while let Some(&Reverse((n, c))) = self.heap.peek() {
            let cu = c as usize;
            if self.col_done[cu] || self.col_cnt[cu] != n || n == 0 {
                self.heap.pop();
                continue;
            }
            if candidates.is_empty() {
                min_count = n;
            } else if n != min_count || candidates.len() == CANDIDATE_COLUMNS {
                break;
            }
            self.heap.pop();
            candidates.push(c);
        }
        if candidates.is_empty() {
            return None;
        }
        let mut best: Option<(u64, u32, u32)> = None;
        for &c in &candidates {
            let cnt = self.col_cnt[c as usize] as u64;
            for &r in &self.col_rows[c as usize] {
                let ru = r as usize;
                if !self.row_alive[ru] || self.rows[ru].binary_search_by_key(&c, |e| e.0).is_err() {
                    continue;
                }
                let cost = (self.rows[ru].len() as u64 - 1) * (cnt - 1);
                let key = (cost, r, c);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
        let (_, pr, pc) = best.expect("candidate column has a live row");
        for &c in &candidates {
            if c != pc {
                self.heap.push(Reverse((self.col_cnt[c as usize], c)));
            }
        }
        Some((pr, pc))
    }

    fn eliminate(&mut self, pr: u32, pc: u32) {
        let f = self.field;
        let prow = std::mem::take(&mut self.rows[pr as usize]);
        self.row_alive[pr as usize] = false;
        self.nnz -= prow.len();
        let pidx = prow.binary_search_by_key(&pc, |e| e.0).expect("pivot entry");
        let inv = f.inv(prow[pidx].1);
        for &(c, _) in &prow {
            self.col_cnt[c as usize] -= 1;
        }
        self.col_done[pc as usize] = true;

        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        let targets = std::mem::take(&mut self.col_rows[pc as usize]);
        let mut touched: Vec<u32> = Vec::new();
        for r in targets {
            let ru = r as usize;
            if !self.row_alive[ru] || self.stamp[ru] == self.epoch {
                continue;
            }
            self.stamp[ru] = self.epoch;
            let row = &self.rows[ru];
            let Ok(ridx) = row.binary_search_by_key(&pc, |e| e.0) else { continue };
            let factor = f.mul(f.neg(row[ridx].1), inv);
            let old = std::mem::take(&mut self.rows[ru]);
            let mut merged: Row = Vec::with_capacity(old.len() + prow.len());
            let (mut a, mut b) = (0usize, 0usize);
            while a < old.len() || b < prow.len() {
                let ca = old.get(a).map_or(u32::MAX, |e| e.0);
                let cb = prow.get(b).map_or(u32::MAX, |e| e.0);
                if ca < cb {
                    merged.push(old[a]);
                    a += 1;
                } else if cb < ca {
                    let v = f.mul(factor, prow[b].1);
                    merged.push((cb, v));
                    self.col_cnt[cb as usize] += 1;
                    self.col_rows[cb as usize].push(r);
                    touched.push(cb);
                    b += 1;
                } else {
                    if ca != pc {
                        let v = f.add(old[a].1, f.mul(factor, prow[b].1));
                        if v == 0 {
                            self.col_cnt[ca as usize] -= 1;
                            touched.push(ca);
                        } else {
                            merged.push((ca, v));
                        }
                    }
                    a += 1;
                    b += 1;
                }
            }
            self.nnz = self.nnz + merged.len() - old.len();
            match merged.len() {
                0 => self.row_alive[ru] = false,
                1 => self.singletons.push(r),
                _ => {}
            }
            self.rows[ru] = merged;
        }
        for &(c, _) in &prow {
            touched.push(c);
        }
        touched.sort_unstable();
        touched.dedup();
        for c in touched {
            let cu = c as usize;
            if !self.col_done[cu] && self.col_cnt[cu] > 0 {
                self.heap.push(Reverse((self.col_cnt[cu], c)));
            }
        }
    }

    /// Switches to dense elimination when the active part has filled in.
    fn try_dense(&mut self) -> Option<usize> {
        let live_rows: Vec<usize> =
            (0..self.rows.len()).filter(|&r| self.row_alive[r] && !self.rows[r].is_empty()).collect();
        if live_rows.is_empty() {
            return Some(0);
        }
        let live_cols = self.col_cnt.iter().zip(&self.col_done).filter(|(&n, &d)| n > 0 && !d).count();
        let cells = live_rows.len() * live_cols;
        if cells > DENSE_MAX_CELLS || (self.nnz as f64) < DENSE_FILL_RATIO * cells as f64 {
            return None;
        }
        let mut col_map = vec![u32::MAX; self.col_cnt.len()];
        let mut next = 0u32;
        for (c, slot) in col_map.iter_mut().enumerate() {
            if self.col_cnt[c] > 0 && !self.col_done[c] {
                *slot = next;
                next += 1;
            }
        }
        let width = live_cols;
        let mut dense = vec![0u32; live_rows.len() * width];
        for (k, &r) in live_rows.iter().enumerate() {
            for &(c, v) in &self.rows[r] {
                dense[k * width + col_map[c as usize] as usize] = v;
            }
        }
        Some(dense_rank(&mut dense, live_rows.len(), width, self.field))
    }
}

/// Rank of a dense row-major `rows x cols` matrix over `field`; destroys `data`.
pub(crate) fn dense_rank(data: &mut [u32], rows: usize, cols: usize, field: PrimeField) -> usize {
    let p = field.modulus();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| data[r * cols + col] != 0) else { continue };
        if piv != rank {
            for k in col..cols {
                data.swap(piv * cols + k, rank * cols + k);
            }
        }
        let inv = field.inv(data[rank * cols + col]) as u64;
        for k in col..cols {
            data[rank * cols + k] = ((data[rank * cols + k] as u64 * inv) % p) as u32;
        }
        let (head, tail) = data.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for row in tail.chunks_exact_mut(cols) {
            let lead = row[col];
            if lead == 0 {
                continue;
            }
            let factor = p - lead as u64;
            for k in col..cols {
                let pv = pivot_row[k];
                if pv != 0 {
                    row[k] = ((row[k] as u64 + factor * pv as u64) % p) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

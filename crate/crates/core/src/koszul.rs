//! Koszul complexes of toric section rings.
//!
//! With `V = H^0(L)` and `R_j = H^0(jL)`, the differential
//! `d_{i,j} : Λ^i V ⊗ R_j -> Λ^{i-1} V ⊗ R_{j+1}` sends
//! `e_S ⊗ m` to `Σ_t (-1)^t e_{S \ s_t} ⊗ (s_t · m)`, where `s_t` is the
//! `t`-th (0-based) element of `S` in increasing order. Wedge bases are ranked
//! colexicographically and `Λ^i V ⊗ R_j` is flattened row-major:
//! `flat = wedge_rank * |R_j| + monomial_index`.
//!
//! Everything is homogeneous for the torus grading, so each differential
//! splits into blocks indexed by a [`MultiDegree`].

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::BinomialTable;
use crate::error::{Result, SyzygyError};
use crate::exactla::{self, PrimeField, SparseTriplets};
use crate::variety::{section_basis, DivisorClass, MonomialBasis, SurfaceModel};

pub const DEFAULT_SIZE_CAP: u64 = 50_000_000;

/// Knobs shared by every rank computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeConfig {
    pub primes: Vec<PrimeField>,
    /// Maximum number of nonzeros of a single differential.
    pub size_cap: u64,
    /// Worker threads; `0` means available parallelism.
    pub jobs: usize,
}

impl Default for ComputeConfig {
    fn default() -> Self {
        ComputeConfig { primes: PrimeField::defaults(), size_cap: DEFAULT_SIZE_CAP, jobs: 0 }
    }
}

impl ComputeConfig {
    pub fn worker_count(&self) -> usize {
        if self.jobs > 0 {
            self.jobs
        } else {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        }
    }

    /// Runs `f` inside a thread pool sized by [`ComputeConfig::worker_count`].
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match rayon::ThreadPoolBuilder::new().num_threads(self.worker_count()).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// A subset of basis indices of `V`, with its colexicographic rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WedgeIndex {
    pub subset: Vec<usize>,
    pub rank: u64,
}

/// A basis vector `e_S ⊗ m` of `Λ^i V ⊗ R_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulBasisElement {
    pub wedge: WedgeIndex,
    pub monomial: usize,
}

impl KoszulBasisElement {
    pub fn flat_index(&self, graded_dim: usize) -> u64 {
        self.wedge.rank * graded_dim as u64 + self.monomial as u64
    }
}

/// Torus weight of a Koszul basis element: the sum of the lattice points of
/// all wedge factors and of the monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiDegree(pub Vec<i32>);

pub fn colex_rank(subset: &[usize]) -> u64 {
    subset.iter().enumerate().map(|(k, &s)| crate::combinatorics::binomial(s as u64, k as u64 + 1)).sum()
}

pub fn colex_unrank(mut rank: u64, size: usize) -> Vec<usize> {
    let mut out = vec![0usize; size];
    for k in (1..=size).rev() {
        // largest s with C(s, k) <= rank
        let mut s = k - 1;
        while crate::combinatorics::binomial(s as u64 + 1, k as u64) <= rank {
            s += 1;
        }
        out[k - 1] = s;
        rank -= crate::combinatorics::binomial(s as u64, k as u64);
    }
    out
}

/// Iterator over the `i`-subsets of `0..dim_v` in colex order.
#[derive(Debug, Clone)]
pub struct WedgeIter {
    dim_v: usize,
    current: Option<Vec<usize>>,
    rank: u64,
}

impl Iterator for WedgeIter {
    type Item = WedgeIndex;

    fn next(&mut self) -> Option<WedgeIndex> {
        let cur = self.current.take()?;
        let item = WedgeIndex { subset: cur.clone(), rank: self.rank };
        self.rank += 1;
        self.current = next_colex(cur, self.dim_v);
        Some(item)
    }
}

fn next_colex(mut s: Vec<usize>, dim_v: usize) -> Option<Vec<usize>> {
    let i = s.len();
    for t in 0..i {
        let limit = if t + 1 < i { s[t + 1] } else { dim_v };
        if s[t] + 1 < limit {
            s[t] += 1;
            for (k, slot) in s.iter_mut().take(t).enumerate() {
                *slot = k;
            }
            return Some(s);
        }
    }
    None
}

pub fn wedge_enumerate(dim_v: usize, i: usize) -> WedgeIter {
    let current = (i <= dim_v).then(|| (0..i).collect());
    WedgeIter { dim_v, current, rank: 0 }
}

/// One multidegree block of a differential, in local coordinates.
#[derive(Debug, Clone)]
pub struct KoszulBlock {
    pub degree: MultiDegree,
    /// Global (flat) column indices, increasing.
    pub columns: Vec<u64>,
    /// Global (flat) row indices, increasing.
    pub rows: Vec<u64>,
    pub matrix: SparseTriplets,
}

/// Section ring data of `(model, D)` up to a fixed weight.
#[derive(Debug, Clone)]
pub struct KoszulContext {
    model: SurfaceModel,
    class: DivisorClass,
    graded: Vec<MonomialBasis>,
    /// `mul[j][v * |R_j| + m]` is the index in `R_{j+1}` of `v · m`.
    mul: Vec<Vec<u32>>,
    binom: BinomialTable,
}

impl KoszulContext {
    /// Builds bases of `R_0, ..., R_{max_weight + 1}`.
    pub fn new(model: SurfaceModel, class: DivisorClass, max_weight: usize) -> Result<Self> {
        model.check(&class)?;
        if !model.is_base_point_free(&class) {
            return Err(SyzygyError::NotBasePointFree(class.to_string()));
        }
        if !model.is_ample(&class) {
            return Err(SyzygyError::NotAmple(class.to_string()));
        }
        let graded: Vec<MonomialBasis> =
            (0..=max_weight + 1).map(|j| section_basis(&model, &class.scale(j as i64))).collect::<Result<_>>()?;
        let v = &graded[1];
        let mul = (0..=max_weight)
            .map(|j| {
                let (src, dst) = (&graded[j], &graded[j + 1]);
                let mut table = Vec::with_capacity(v.len() * src.len());
                for vp in v.points() {
                    for m in src.points() {
                        let prod: Vec<i32> = vp.iter().zip(m).map(|(a, b)| a + b).collect();
                        let idx = dst.index_of(&prod).expect("section ring is closed under multiplication");
                        table.push(idx as u32);
                    }
                }
                table
            })
            .collect();
        let binom = BinomialTable::new(v.len() + 1);
        Ok(KoszulContext { model, class, graded, mul, binom })
    }

    pub fn model(&self) -> SurfaceModel {
        self.model
    }

    pub fn class(&self) -> DivisorClass {
        self.class
    }

    /// Largest `j` for which `d_{i,j}` can be assembled.
    pub fn max_weight(&self) -> usize {
        self.mul.len() - 1
    }

    pub fn dim_v(&self) -> usize {
        self.graded[1].len()
    }

    pub fn graded_dim(&self, j: usize) -> usize {
        self.graded[j].len()
    }

    pub fn basis(&self, j: usize) -> &MonomialBasis {
        &self.graded[j]
    }

    /// `dim Λ^i V ⊗ R_j`.
    pub fn space_dim(&self, i: usize, j: usize) -> u64 {
        self.binom.get(self.dim_v(), i) * self.graded_dim(j) as u64
    }

    /// Number of nonzeros of `d_{i,j}`.
    pub fn differential_nnz(&self, i: usize, j: usize) -> u64 {
        i as u64 * self.space_dim(i, j)
    }

    fn check_position(&self, i: usize, j: usize) {
        assert!(i >= 1, "differential needs i >= 1");
        assert!(j <= self.max_weight(), "weight {j} beyond context (max {})", self.max_weight());
    }

    fn guard(&self, i: usize, j: usize, cap: u64) -> Result<()> {
        let nnz = self.differential_nnz(i, j);
        if nnz > cap {
            return Err(SyzygyError::SizeCap { i, j, nnz, cap });
        }
        Ok(())
    }

    #[inline]
    fn rank_without(&self, subset: &[usize], t: usize) -> u64 {
        let mut r = 0u64;
        for (k, &s) in subset.iter().enumerate() {
            if k < t {
                r += self.binom.get(s, k + 1);
            } else if k > t {
                r += self.binom.get(s, k);
            }
        }
        r
    }

    fn unrank(&self, mut rank: u64, size: usize, out: &mut Vec<usize>) {
        out.clear();
        out.resize(size, 0);
        let mut hi = self.dim_v();
        for k in (1..=size).rev() {
            let mut s = hi - 1;
            while self.binom.get(s, k) > rank {
                s -= 1;
            }
            out[k - 1] = s;
            rank -= self.binom.get(s, k);
            hi = s;
        }
    }

    /// Pushes the column `e_S ⊗ m` of `d_{i,j}` as `(row, sign)` pairs.
    fn column_entries(&self, subset: &[usize], m: usize, j: usize, out: &mut Vec<(u64, i64)>) {
        out.clear();
        let src_len = self.graded_dim(j);
        let dst_len = self.graded_dim(j + 1) as u64;
        for (t, &s) in subset.iter().enumerate() {
            let prod = self.mul[j][s * src_len + m] as u64;
            let row = self.rank_without(subset, t) * dst_len + prod;
            out.push((row, if t % 2 == 0 { 1 } else { -1 }));
        }
    }

    /// The full matrix of `d_{i,j}`, columns in flat order.
    pub fn differential(&self, i: usize, j: usize, size_cap: u64) -> Result<SparseTriplets> {
        self.check_position(i, j);
        self.guard(i, j, size_cap)?;
        let rows = self.space_dim(i - 1, j + 1) as usize;
        let cols = self.space_dim(i, j) as usize;
        let mut m = SparseTriplets::new(rows, cols);
        m.entries.reserve(self.differential_nnz(i, j) as usize);
        let rj = self.graded_dim(j);
        let mut buf = Vec::with_capacity(i);
        for w in wedge_enumerate(self.dim_v(), i) {
            for mono in 0..rj {
                let col = (w.rank * rj as u64 + mono as u64) as usize;
                self.column_entries(&w.subset, mono, j, &mut buf);
                for &(row, sign) in &buf {
                    m.entries.push((row as usize, col, sign));
                }
            }
        }
        Ok(m)
    }

    fn wedge_degree(&self, subset: &[usize], acc: &mut [i32]) {
        acc.iter_mut().for_each(|a| *a = 0);
        let v = &self.graded[1];
        for &s in subset {
            for (a, x) in acc.iter_mut().zip(v.point(s)) {
                *a += x;
            }
        }
    }

    /// Multidegree of `e_S ⊗ m` in `Λ^{|S|} V ⊗ R_j`.
    pub fn multidegree(&self, subset: &[usize], monomial: usize, j: usize) -> MultiDegree {
        let mut acc = vec![0i32; self.model.lattice_rank()];
        self.wedge_degree(subset, &mut acc);
        for (a, x) in acc.iter_mut().zip(self.graded[j].point(monomial)) {
            *a += x;
        }
        MultiDegree(acc)
    }

    /// Groups the flat indices of `Λ^i V ⊗ R_j` by multidegree.
    fn group_space(
        &self,
        i: usize,
        j: usize,
        groups: &mut HashMap<MultiDegree, usize>,
        sink: &mut Vec<(MultiDegree, Vec<u64>, Vec<u64>)>,
        as_rows: bool,
    ) {
        let rj = self.graded_dim(j);
        let mut wdeg = vec![0i32; self.model.lattice_rank()];
        for w in wedge_enumerate(self.dim_v(), i) {
            self.wedge_degree(&w.subset, &mut wdeg);
            for mono in 0..rj {
                let deg: Vec<i32> = wdeg.iter().zip(self.graded[j].point(mono)).map(|(a, b)| a + b).collect();
                let deg = MultiDegree(deg);
                let flat = w.rank * rj as u64 + mono as u64;
                let id = *groups.entry(deg.clone()).or_insert_with(|| {
                    sink.push((deg, Vec::new(), Vec::new()));
                    sink.len() - 1
                });
                if as_rows {
                    sink[id].2.push(flat);
                } else {
                    sink[id].1.push(flat);
                }
            }
        }
    }

    /// Column and row index sets of every multidegree block of `d_{i,j}`,
    /// sorted by multidegree. Blocks may have no columns or no rows.
    pub fn block_index_sets(&self, i: usize, j: usize) -> Vec<(MultiDegree, Vec<u64>, Vec<u64>)> {
        self.check_position(i, j);
        let mut groups = HashMap::new();
        let mut sets = Vec::new();
        self.group_space(i, j, &mut groups, &mut sets, false);
        self.group_space(i - 1, j + 1, &mut groups, &mut sets, true);
        sets.sort_by(|a, b| a.0.cmp(&b.0));
        sets
    }

    /// Assembles the local matrix of one block.
    pub fn block_matrix(&self, i: usize, j: usize, columns: &[u64], rows: &[u64]) -> SparseTriplets {
        let rj = self.graded_dim(j) as u64;
        let mut m = SparseTriplets::new(rows.len(), columns.len());
        m.entries.reserve(columns.len() * i);
        let mut subset = Vec::with_capacity(i);
        let mut buf = Vec::with_capacity(i);
        for (local_col, &flat) in columns.iter().enumerate() {
            self.unrank(flat / rj, i, &mut subset);
            self.column_entries(&subset, (flat % rj) as usize, j, &mut buf);
            for &(row, sign) in &buf {
                let local_row = rows.binary_search(&row).expect("differential preserves multidegree");
                m.entries.push((local_row, local_col, sign));
            }
        }
        m
    }

    /// Every multidegree block of `d_{i,j}` with its local matrix.
    pub fn multidegree_blocks(&self, i: usize, j: usize) -> Vec<KoszulBlock> {
        self.block_index_sets(i, j)
            .into_iter()
            .map(|(degree, columns, rows)| {
                let matrix = self.block_matrix(i, j, &columns, &rows);
                KoszulBlock { degree, columns, rows, matrix }
            })
            .collect()
    }

    /// Rank of `d_{i,j}` over each prime of `cfg`, summed over blocks.
    ///
    /// Blocks are ranked in parallel on the current rayon pool and summed in
    /// block order. Positions outside the complex have rank 0.
    pub fn differential_ranks(&self, i: usize, j: usize, cfg: &ComputeConfig) -> Result<Vec<(PrimeField, u64)>> {
        if cfg.primes.is_empty() {
            return Err(SyzygyError::FieldFailure("no primes configured".into()));
        }
        if i == 0 || i > self.dim_v() {
            return Ok(cfg.primes.iter().map(|&p| (p, 0)).collect());
        }
        self.guard(i, j, cfg.size_cap)?;
        let sets = self.block_index_sets(i, j);
        let per_block: Vec<Vec<u64>> = sets
            .par_iter()
            .filter(|(_, cols, rows)| !cols.is_empty() && !rows.is_empty())
            .map(|(_, cols, rows)| {
                let m = self.block_matrix(i, j, cols, rows);
                cfg.primes.iter().map(|&p| exactla::rank(&m, p).rank as u64).collect()
            })
            .collect();
        Ok(cfg.primes.iter().enumerate().map(|(k, &p)| (p, per_block.iter().map(|r| r[k]).sum())).collect())
    }
}

/// `dim K_{i,j}` together with per-prime agreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulDimension {
    pub dim: u64,
    pub agree: bool,
}

/// Convenience wrapper: the full matrix of `d_{i,j}` for `(model, D)`.
pub fn differential(
    model: SurfaceModel,
    class: DivisorClass,
    i: usize,
    j: usize,
    size_cap: u64,
) -> Result<SparseTriplets> {
    KoszulContext::new(model, class, j)?.differential(i, j, size_cap)
}

/// Convenience wrapper: all multidegree blocks of `d_{i,j}` for `(model, D)`.
pub fn multidegree_blocks(model: SurfaceModel, class: DivisorClass, i: usize, j: usize) -> Result<Vec<KoszulBlock>> {
    if crate::variety::h0(&model, &class) == 0 {
        return Ok(Vec::new());
    }
    Ok(KoszulContext::new(model, class, j)?.multidegree_blocks(i, j))
}

/// `dim K_{i,j} = dim Λ^i V ⊗ R_j - rank d_{i,j} - rank d_{i+1,j-1}`.
pub fn koszul_dimension_in(ctx: &KoszulContext, i: usize, j: usize, cfg: &ComputeConfig) -> Result<KoszulDimension> {
    if i > ctx.dim_v() {
        return Ok(KoszulDimension { dim: 0, agree: true });
    }
    let total = ctx.space_dim(i, j);
    let outgoing = ctx.differential_ranks(i, j, cfg)?;
    let incoming =
        if j == 0 { cfg.primes.iter().map(|&p| (p, 0)).collect() } else { ctx.differential_ranks(i + 1, j - 1, cfg)? };
    let sums: Vec<u64> = outgoing.iter().zip(&incoming).map(|(a, b)| a.1 + b.1).collect();
    let best = *sums.iter().max().expect("at least one prime");
    Ok(KoszulDimension { dim: total - best, agree: sums.iter().all(|&s| s == best) })
}

/// `β_{i,i+j} = dim K_{i,j}(model, D)`; zero for `j < 0`.
pub fn koszul_dimension(
    model: SurfaceModel,
    class: DivisorClass,
    i: usize,
    j: i64,
    cfg: &ComputeConfig,
) -> Result<u64> {
    if j < 0 {
        return Ok(0);
    }
    let j = j as usize;
    let ctx = KoszulContext::new(model, class, j)?;
    cfg.install(|| koszul_dimension_in(&ctx, i, j, cfg)).map(|d| d.dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    fn p2() -> SurfaceModel {
        SurfaceModel::projective(2).unwrap()
    }

    #[test]
    fn wedge_enumeration() {
        let all: Vec<_> = wedge_enumerate(4, 0).collect();
        assert_eq!(all, vec![WedgeIndex { subset: vec![], rank: 0 }]);
        let all: Vec<_> = wedge_enumerate(4, 4).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].subset, vec![0, 1, 2, 3]);
        assert_eq!(wedge_enumerate(3, 4).count(), 0);

        // full enumeration oracle: all 2-subsets of 0..5 sorted colex
        let mut oracle: Vec<Vec<usize>> = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                oracle.push(vec![a, b]);
            }
        }
        oracle.sort_by(|x, y| x.iter().rev().cmp(y.iter().rev()));
        let got: Vec<_> = wedge_enumerate(5, 2).collect();
        assert_eq!(got.len(), 10);
        assert_eq!(got.first().unwrap().subset, vec![0, 1]);
        assert_eq!(got.last().unwrap().subset, vec![3, 4]);
        for (k, w) in got.iter().enumerate() {
            assert_eq!(w.subset, oracle[k]);
            assert_eq!(w.rank, k as u64);
            assert_eq!(colex_rank(&w.subset), k as u64);
            assert_eq!(colex_unrank(k as u64, 2), w.subset);
        }
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for n in 0..9 {
            for i in 0..=n {
                let items: Vec<_> = wedge_enumerate(n, i).collect();
                assert_eq!(items.len() as u64, binomial(n as u64, i as u64));
                for w in items {
                    assert_eq!(colex_rank(&w.subset), w.rank);
                    assert_eq!(colex_unrank(w.rank, i), w.subset);
                }
            }
        }
    }

    #[test]
    fn evaluation_map_is_invertible() {
        let ctx = KoszulContext::new(p2(), DivisorClass::Hyperplane(2), 1).unwrap();
        let d = ctx.differential(1, 0, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!((d.rows, d.cols), (6, 6));
        assert_eq!(d.nnz(), 6);
        let p = PrimeField::new(32003).unwrap();
        assert_eq!(exactla::rank(&d, p).rank, 6);
    }

    fn compose(a: &SparseTriplets, b: &SparseTriplets) -> Vec<Vec<i64>> {
        // a * b, both small
        let ad = a.to_dense();
        let bd = b.to_dense();
        let mut out = vec![vec![0i64; b.cols]; a.rows];
        for r in 0..a.rows {
            for k in 0..a.cols {
                if ad[r][k] != 0 {
                    for c in 0..b.cols {
                        out[r][c] += ad[r][k] * bd[k][c];
                    }
                }
            }
        }
        out
    }

    #[test]
    fn complex_property_small() {
        let ctx = KoszulContext::new(p2(), DivisorClass::Hyperplane(2), 1).unwrap();
        let d2 = ctx.differential(2, 0, DEFAULT_SIZE_CAP).unwrap();
        let d1 = ctx.differential(1, 1, DEFAULT_SIZE_CAP).unwrap();
        let prod = compose(&d1, &d2);
        assert!(prod.iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn shape_of_d21() {
        let ctx = KoszulContext::new(p2(), DivisorClass::Hyperplane(2), 1).unwrap();
        let d = ctx.differential(2, 1, DEFAULT_SIZE_CAP).unwrap();
        // rows: Λ^1 V ⊗ R_2 = 6 * 15, cols: Λ^2 V ⊗ R_1 = 15 * 6
        assert_eq!((d.rows, d.cols), (90, 90));
        assert!(d.column_counts().iter().all(|&n| n == 2));
        assert!(!d.has_duplicates());
        assert!(d.entries.iter().all(|e| e.2 == 1 || e.2 == -1));
    }

    #[test]
    fn d20_is_injective() {
        let ctx = KoszulContext::new(p2(), DivisorClass::Hyperplane(2), 1).unwrap();
        let d = ctx.differential(2, 0, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!((d.rows, d.cols), (36, 15));
        assert_eq!(crate::exactla::oracle::rational_rank(&d), 15);
        for p in PrimeField::defaults() {
            assert_eq!(crate::exactla::rank(&d, p).rank, 15);
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let ctx = KoszulContext::new(p2(), DivisorClass::Hyperplane(2), 1).unwrap();
        let err = ctx.differential(2, 1, 100).unwrap_err();
        assert!(matches!(err, SyzygyError::SizeCap { nnz: 180, .. }));
    }

    #[test]
    fn p1_blocks_are_small() {
        let model = SurfaceModel::projective(1).unwrap();
        let blocks = multidegree_blocks(model, DivisorClass::Hyperplane(2), 1, 0).unwrap();
        // columns e_s ⊗ 1 have multidegree equal to the point s itself
        assert!(blocks.iter().all(|b| b.columns.len() <= 2));
        let cols: usize = blocks.iter().map(|b| b.columns.len()).sum();
        assert_eq!(cols, 3);
    }

    #[test]
    fn blocks_partition_f0() {
        let f0 = SurfaceModel::hirzebruch(0);
        let class = DivisorClass::Ruled(2, 2);
        let ctx = KoszulContext::new(f0, class, 1).unwrap();
        let blocks = ctx.multidegree_blocks(3, 1);
        let cols: usize = blocks.iter().map(|b| b.columns.len()).sum();
        let rows: usize = blocks.iter().map(|b| b.rows.len()).sum();
        assert_eq!(cols as u64, ctx.space_dim(3, 1));
        assert_eq!(rows as u64, ctx.space_dim(2, 2));
        let full = ctx.differential(3, 1, DEFAULT_SIZE_CAP).unwrap();
        let mut rebuilt = Vec::new();
        for b in &blocks {
            for &(r, c, v) in &b.matrix.entries {
                rebuilt.push((b.rows[r] as usize, b.columns[c] as usize, v));
            }
        }
        rebuilt.sort_unstable();
        let mut expected = full.entries.clone();
        expected.sort_unstable();
        assert_eq!(rebuilt, expected);
    }

    #[test]
    fn empty_system_has_no_blocks() {
        let f1 = SurfaceModel::hirzebruch(1);
        assert!(multidegree_blocks(f1, DivisorClass::Ruled(-1, 0), 1, 0).unwrap().is_empty());
    }

    #[test]
    fn koszul_dimension_examples() {
        let cfg = ComputeConfig { jobs: 2, ..ComputeConfig::default() };
        let o2 = DivisorClass::Hyperplane(2);
        assert_eq!(koszul_dimension(p2(), o2, 1, 1, &cfg).unwrap(), 6);
        assert_eq!(koszul_dimension(p2(), o2, 0, 0, &cfg).unwrap(), 1);
        assert_eq!(koszul_dimension(p2(), o2, 2, -1, &cfg).unwrap(), 0);
        let f0 = SurfaceModel::hirzebruch(0);
        assert_eq!(koszul_dimension(f0, DivisorClass::Ruled(2, 2), 3, 1, &cfg).unwrap(), 90);
    }
}

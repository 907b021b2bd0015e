//! Betti tables, their certification, and the syzygy properties read off them.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SyzygyError};
use crate::exactla::PrimeField;
use crate::koszul::{ComputeConfig, KoszulContext};
use crate::variety::{h0, hilbert_numerator, DivisorClass, SurfaceModel};

/// `β_{i,i+j}` for `0 <= i <= r`, `0 <= j <= j_max`; `None` marks a hole left
/// by the size cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub model: SurfaceModel,
    pub class: DivisorClass,
    pub r: usize,
    /// `rows[j][i]`.
    pub rows: Vec<Vec<Option<u64>>>,
    pub primes: Vec<PrimeField>,
    pub certified: bool,
}

impl BettiTable {
    pub fn j_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `β_{i,i+j}`; zero outside the stored rectangle, `None` for a hole.
    pub fn beta(&self, i: i64, j: i64) -> Option<u64> {
        if i < 0 || j < 0 || i as usize > self.r || j as usize > self.j_max() {
            return Some(0);
        }
        self.rows[j as usize][i as usize]
    }

    /// `β_{i,i+j}` treating holes as an error.
    pub fn get(&self, i: usize, j: usize) -> Result<u64> {
        self.beta(i as i64, j as i64).ok_or(SyzygyError::TableHole { i, j })
    }

    pub fn holes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                if v.is_none() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn has_holes(&self) -> bool {
        self.rows.iter().flatten().any(Option::is_none)
    }

    /// Projective dimension: the largest `i` with a nonzero (or unknown) entry.
    pub fn projective_dimension(&self) -> usize {
        (0..=self.r).rev().find(|&i| self.rows.iter().any(|row| row[i] != Some(0))).unwrap_or(0)
    }

    /// Largest row containing a nonzero (or unknown) entry.
    pub fn support_j_max(&self) -> usize {
        (0..self.rows.len()).rev().find(|&j| self.rows[j].iter().any(|v| *v != Some(0))).unwrap_or(0)
    }
}

#[derive(Serialize, Deserialize)]
struct BettiTableWire {
    variety: String,
    bundle: String,
    r: usize,
    certified: bool,
    primes: Vec<PrimeField>,
    rows: BTreeMap<usize, BTreeMap<usize, Option<u64>>>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows =
            self.rows.iter().enumerate().map(|(j, row)| (j, row.iter().copied().enumerate().collect())).collect();
        BettiTableWire {
            variety: self.model.to_string(),
            bundle: self.class.to_string(),
            r: self.r,
            certified: self.certified,
            primes: self.primes.clone(),
            rows,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let w = BettiTableWire::deserialize(d)?;
        let model: SurfaceModel = w.variety.parse().map_err(D::Error::custom)?;
        let class = model.parse_class(&w.bundle).map_err(D::Error::custom)?;
        let j_max = w.rows.keys().next_back().copied().unwrap_or(0);
        let mut rows = vec![vec![Some(0); w.r + 1]; j_max + 1];
        for (j, row) in w.rows {
            for (i, v) in row {
                if i > w.r {
                    return Err(D::Error::custom(format!("column {i} beyond r = {}", w.r)));
                }
                rows[j][i] = v;
            }
        }
        Ok(BettiTable { model, class, r: w.r, rows, primes: w.primes, certified: w.certified })
    }
}

/// Persistent store for per-prime ranks of differentials of one `(model, D)`.
pub trait RankStore: Sync {
    fn get(&self, i: usize, j: usize, prime: PrimeField) -> Option<u64>;
    /// `dim` is the column count of the differential.
    fn put(&self, i: usize, j: usize, prime: PrimeField, dim: u64, rank: u64);
}

/// A store that remembers nothing.
pub struct NoStore;

impl RankStore for NoStore {
    fn get(&self, _: usize, _: usize, _: PrimeField) -> Option<u64> {
        None
    }

    fn put(&self, _: usize, _: usize, _: PrimeField, _: u64, _: u64) {}
}

/// In-memory store, mostly for tests.
#[derive(Default)]
pub struct MemoryStore {
    pub map: Mutex<HashMap<(usize, usize, PrimeField), u64>>,
}

impl RankStore for MemoryStore {
    fn get(&self, i: usize, j: usize, prime: PrimeField) -> Option<u64> {
        self.map.lock().expect("store poisoned").get(&(i, j, prime)).copied()
    }

    fn put(&self, i: usize, j: usize, prime: PrimeField, _dim: u64, rank: u64) {
        self.map.lock().expect("store poisoned").insert((i, j, prime), rank);
    }
}

/// Highest row of the table: `deg N(t)` minus the codimension.
///
/// Section rings of ample bundles on these toric varieties are Cohen-Macaulay,
/// so the resolution has length `r - dim` and its last module carries the top
/// coefficient of the numerator.
pub fn table_height(model: &SurfaceModel, class: &DivisorClass) -> Result<usize> {
    let num = hilbert_numerator(model, class)?;
    let r = h0(model, class) as usize - 1;
    let codim = r.saturating_sub(model.dimension());
    Ok((num.len() - 1).saturating_sub(codim))
}

type DiffRanks = Result<Vec<(PrimeField, u64)>>;

fn distinct_primes(primes: &[PrimeField]) -> Vec<PrimeField> {
    let mut p = primes.to_vec();
    p.sort();
    p.dedup();
    p
}

pub fn compute_table(model: SurfaceModel, class: DivisorClass, cfg: &ComputeConfig) -> Result<BettiTable> {
    compute_table_with(model, class, cfg, &NoStore)
}

/// Computes every entry from ranks of the Koszul differentials.
///
/// Differentials above the size cap leave holes instead of failing; the
/// returned table is then uncertified.
pub fn compute_table_with(
    model: SurfaceModel,
    class: DivisorClass,
    cfg: &ComputeConfig,
    store: &dyn RankStore,
) -> Result<BettiTable> {
    model.check(&class)?;
    if !model.is_ample(&class) {
        return Err(SyzygyError::NotAmple(class.to_string()));
    }
    let primes = distinct_primes(&cfg.primes);
    if primes.is_empty() {
        return Err(SyzygyError::FieldFailure("no primes configured".into()));
    }
    let cfg = ComputeConfig { primes: primes.clone(), ..cfg.clone() };
    let j_max = table_height(&model, &class)?;
    let ctx = KoszulContext::new(model, class, j_max)?;
    let r = ctx.dim_v() - 1;

    // d_{i,j} for 1 <= i <= r + 1, 0 <= j <= j_max covers both ends of every entry.
    let positions: Vec<(usize, usize)> = (0..=j_max).flat_map(|j| (1..=r + 1).map(move |i| (i, j))).collect();
    let ranks: HashMap<(usize, usize), DiffRanks> = cfg.install(|| {
        positions.par_iter().map(|&(i, j)| ((i, j), differential_ranks_cached(&ctx, i, j, &cfg, store))).collect()
    });

    let zero: DiffRanks = Ok(primes.iter().map(|&p| (p, 0)).collect());
    let lookup = |i: usize, j: Option<usize>| -> &DiffRanks {
        match j {
            Some(j) if i >= 1 && i <= r + 1 => &ranks[&(i, j)],
            _ => &zero,
        }
    };

    let mut agree = true;
    let mut rows = vec![vec![None; r + 1]; j_max + 1];
    for (j, row) in rows.iter_mut().enumerate() {
        for (i, slot) in row.iter_mut().enumerate() {
            let (Ok(out), Ok(inc)) = (lookup(i, Some(j)), lookup(i + 1, j.checked_sub(1))) else { continue };
            let max_out = out.iter().map(|x| x.1).max().expect("primes");
            let max_in = inc.iter().map(|x| x.1).max().expect("primes");
            agree &= out.iter().all(|x| x.1 == max_out) && inc.iter().all(|x| x.1 == max_in);
            *slot = Some(ctx.space_dim(i, j) - max_out - max_in);
        }
    }
    let mut table = BettiTable { model, class, r, rows, primes: primes.clone(), certified: false };
    table.certified = agree && primes.len() >= 2 && !table.has_holes() && hilbert_certificate(&table, &model, &class);
    Ok(table)
}

fn differential_ranks_cached(
    ctx: &KoszulContext,
    i: usize,
    j: usize,
    cfg: &ComputeConfig,
    store: &dyn RankStore,
) -> DiffRanks {
    let cached: Option<Vec<(PrimeField, u64)>> =
        cfg.primes.iter().map(|&p| store.get(i, j, p).map(|r| (p, r))).collect();
    if let Some(c) = cached {
        return Ok(c);
    }
    let ranks = ctx.differential_ranks(i, j, cfg)?;
    let dim = if i <= ctx.dim_v() { ctx.space_dim(i, j) } else { 0 };
    for &(p, rk) in &ranks {
        store.put(i, j, p, dim, rk);
    }
    Ok(ranks)
}

/// Alternating sums of each total degree against the Hilbert numerator.
pub fn hilbert_certificate(table: &BettiTable, model: &SurfaceModel, class: &DivisorClass) -> bool {
    if table.has_holes() || table.model != *model || table.class != *class || table.beta(0, 0) != Some(1) {
        return false;
    }
    let Ok(num) = hilbert_numerator(model, class) else { return false };
    let top = (table.r + table.j_max()).max(num.len());
    (0..=top).all(|k| {
        let sum: i64 = (0..=k.min(table.r))
            .map(|i| {
                let b = table.beta(i as i64, (k - i) as i64).unwrap_or(0) as i64;
                if i % 2 == 0 {
                    b
                } else {
                    -b
                }
            })
            .sum();
        sum == num.get(k).copied().unwrap_or(0)
    })
}

/// Property `(m_q)`: `β_{i,i+1} = 0` for `r - q <= i <= r - 1`.
///
/// Holes count as nonzero. `q = 0` holds vacuously.
pub fn satisfies_mq(table: &BettiTable, q: usize) -> bool {
    if q > table.r {
        return false;
    }
    (table.r - q..table.r).all(|i| table.beta(i as i64, 1) == Some(0))
}

/// Property `(N_0)`: `β_{0,j} = 0` for every `j >= 1`.
pub fn normally_generated(table: &BettiTable) -> bool {
    (1..=table.j_max()).all(|j| table.beta(0, j as i64) == Some(0))
}

#[allow(non_snake_case)]
pub fn satisfies_Mq(table: &BettiTable, q: usize) -> bool {
    normally_generated(table) && satisfies_mq(table, q)
}

#[allow(non_snake_case)]
pub fn satisfies_Np(table: &BettiTable, p: usize) -> bool {
    normally_generated(table)
        && (1..=p).all(|i| (0..=table.j_max()).filter(|&j| j != 1).all(|j| table.beta(i as i64, j as i64) == Some(0)))
}

/// Invariants of the shape of a Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyProfile {
    pub p_max: usize,
    pub q_max: usize,
    pub tug: i64,
    pub delta: i64,
    pub j_max: usize,
    pub projective_dimension: usize,
    pub r: usize,
    /// Set when `(M_1)` already fails and `q_max` is reported as 0.
    pub q_max_floored: bool,
    pub certified: bool,
}

impl SyzygyProfile {
    pub fn verdict(&self) -> &'static str {
        match self.tug.signum() {
            1 => "(M_q) tugs (N_p)",
            -1 => "(N_p) tugs (M_q)",
            _ => "balanced",
        }
    }
}

/// `p_max` is searched in `[0, pd]`, `q_max` in `[1, r - 1]`.
pub fn profile(table: &BettiTable) -> Result<SyzygyProfile> {
    let top = table.j_max();
    if let Some(&(i, j)) = table.holes().iter().find(|(_, j)| *j <= 1 || *j == top) {
        return Err(SyzygyError::TableHole { i, j });
    }
    let pd = table.projective_dimension();
    let p_max = (0..=pd).take_while(|&p| satisfies_Np(table, p)).last().unwrap_or(0);
    let q_range = 1..table.r.max(1);
    let q_max = q_range.clone().take_while(|&q| satisfies_Mq(table, q)).last().unwrap_or(0);
    let q_max_floored = !q_range.is_empty() && q_max == 0;
    let delta = table.r as i64 - 1 - p_max as i64 - q_max as i64;
    Ok(SyzygyProfile {
        p_max,
        q_max,
        tug: p_max as i64 - q_max as i64,
        delta,
        j_max: table.support_j_max(),
        projective_dimension: pd,
        r: table.r,
        q_max_floored,
        certified: table.certified,
    })
}

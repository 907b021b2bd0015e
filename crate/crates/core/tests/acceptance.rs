//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Expected Betti numbers below are transcribed from published tables;
//! everything else is checked against independent oracles.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use syzygy::betti::{compute_table, hilbert_certificate, profile, satisfies_Mq, table_height, BettiTable};
use syzygy::exactla::oracle::rational_rank;
use syzygy::exactla::{PrimeField, SparseTriplets};
use syzygy::koszul::{ComputeConfig, KoszulContext, DEFAULT_SIZE_CAP};
use syzygy::theory::{
    self, butler_adjoint, butler_multiple, ell_ceil, ell_floor, enriques_bound, fano_criterion, predict_adjoint_nef,
    ruled_mq_bound, ClaimOutcome, FanoData, NefData, RuledData,
};
use syzygy::variety::{canonical_class, h0, intersect, DivisorClass, SurfaceModel};

const GOLDEN_BUDGET: Duration = Duration::from_secs(5 * 60);
const O4_BUDGET: Duration = Duration::from_secs(30 * 60);
const ARITHMETIC_BUDGET: Duration = Duration::from_secs(1);
const RANDOM_MATRICES: usize = 50;
const RANDOM_MATRIX_MAX_ENTRIES: u64 = 10_000;
const RANDOM_SEED: u64 = 0x5eed_2026;

struct Instance {
    model: SurfaceModel,
    class: DivisorClass,
    table: BettiTable,
    elapsed: Duration,
}

fn p2() -> SurfaceModel {
    SurfaceModel::projective(2).unwrap()
}

fn f0() -> SurfaceModel {
    SurfaceModel::hirzebruch(0)
}

fn config() -> ComputeConfig {
    ComputeConfig::default()
}

fn compute(model: SurfaceModel, class: DivisorClass) -> Instance {
    let start = Instant::now();
    let table = compute_table(model, class, &config()).expect("table computes");
    Instance { model, class, table, elapsed: start.elapsed() }
}

/// `rows[j][i]` in the published layout, compared for every `(i, j)` in the
/// published rectangle and required to vanish outside it.
fn matches_rows(t: &BettiTable, expected: &[&[u64]]) -> Result<(), String> {
    for (j, row) in expected.iter().enumerate() {
        for (i, &b) in row.iter().enumerate() {
            let got = t.beta(i as i64, j as i64);
            if got != Some(b) {
                return Err(format!("{} {}: beta({i},{j}) = {got:?}, expected {b}", t.model, t.class));
            }
        }
    }
    for j in expected.len()..=t.j_max() {
        for i in 0..=t.r {
            if t.beta(i as i64, j as i64) != Some(0) {
                return Err(format!("{} {}: unexpected nonzero beta({i},{j})", t.model, t.class));
            }
        }
    }
    Ok(())
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, n: u32, name: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("PASS criterion {n} ({name}): {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL criterion {n} ({name}): {detail}");
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1(golden: &[Instance]) -> Result<String, String> {
    let expected: [&[&[u64]]; 4] = [
        &[&[1, 0, 0, 0, 0], &[0, 6, 8, 3, 0], &[0, 0, 0, 0, 0]],
        &[&[1, 0, 0, 0, 0, 0, 0, 0, 0], &[0, 27, 105, 189, 189, 105, 27, 0, 0], &[0, 0, 0, 0, 0, 0, 0, 1, 0]],
        &[&[1, 0, 0, 0, 0, 0, 0, 0], &[0, 20, 64, 90, 64, 20, 0, 0], &[0, 0, 0, 0, 0, 0, 1, 0]],
        &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
            &[0, 43, 222, 558, 840, 798, 468, 147, 8, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0, 0, 9, 2, 0],
        ],
    ];
    for (inst, rows) in golden.iter().zip(expected) {
        ensure(inst.table.certified, || format!("{} {} not certified", inst.model, inst.class))?;
        matches_rows(&inst.table, rows)?;
    }
    let total: Duration = golden.iter().map(|i| i.elapsed).sum();
    ensure(total <= GOLDEN_BUDGET, || format!("took {total:?}, budget {GOLDEN_BUDGET:?}"))?;
    Ok(format!("4 tables exact over primes 32003, 65537 in {:.2?}", total))
}

fn criterion_2(o4: &Instance) -> Result<String, String> {
    let t = &o4.table;
    // (i, j, beta_{i,i+j})
    let spots = [(1, 1, 75), (10, 1, 120), (10, 2, 55), (12, 2, 3)];
    let mut detail = Vec::new();
    if t.has_holes() {
        // fallback: rows 0..=2 at i in {1, 10, 11, 12}
        for i in [1i64, 10, 11, 12] {
            for j in 0..=2 {
                ensure(t.beta(i, j).is_some(), || format!("hole at beta({i},{j}) even in the fallback range"))?;
            }
        }
        detail.push("size cap hit; fallback entries present".to_string());
    }
    for (i, j, b) in spots {
        ensure(t.beta(i, j) == Some(b), || format!("beta_{{{i},{}}} = {:?}, expected {b}", i + j, t.beta(i, j)))?;
    }
    ensure(t.certified, || "O(4) table not certified".into())?;
    ensure(o4.elapsed <= O4_BUDGET, || format!("took {:?}, budget {O4_BUDGET:?}", o4.elapsed))?;
    detail.push(format!("beta_1,2=75 beta_10,11=120 beta_10,12=55 beta_12,14=3 blockwise in {:.2?}", o4.elapsed));
    Ok(detail.join("; "))
}

fn criterion_3(all: &[&Instance]) -> Result<String, String> {
    let expected = [(3, 1, 0), (6, 2, 0), (5, 2, 0), (7, 2, 1), (9, 3, 1)];
    for (inst, (p, q, d)) in all.iter().zip(expected) {
        let prof = profile(&inst.table).map_err(|e| e.to_string())?;
        let got = (prof.p_max, prof.q_max, prof.delta);
        ensure(got == (p, q, d), || {
            format!("{} {}: (p_max,q_max,delta) = {got:?}, expected {:?}", inst.model, inst.class, (p, q, d))
        })?;
        ensure(prof.delta == inst.table.r as i64 - 1 - prof.p_max as i64 - prof.q_max as i64, || {
            "delta identity".into()
        })?;
    }
    Ok("O(2) (3,1,0), O(3) (6,2,0), (2,2) (5,2,0), (2,3) (7,2,1), O(4) (9,3,1)".into())
}

fn criterion_4(all: &[&Instance]) -> Result<String, String> {
    let mut claims = 0;
    let mut criterion_checks = 0;
    for inst in all {
        let cs = theory::verify_instances(&inst.table, &inst.model, &inst.class).map_err(|e| e.to_string())?;
        if let Some(v) = cs.iter().find(|c| c.outcome == ClaimOutcome::Violation) {
            return Err(format!(
                "{} {}: violation {}: predicted {}, observed {}",
                inst.model, inst.class, v.id, v.predicted, v.observed
            ));
        }
        claims += cs.len();
        // rational-surface criterion in its iff range, checked directly
        let kdotl = -intersect(&inst.model, &canonical_class(&inst.model), &inst.class).unwrap();
        let gon = theory::gon_max(&inst.model, &inst.class).unwrap();
        let q_max = profile(&inst.table).unwrap().q_max as i64;
        for q in 2..inst.table.r as i64 {
            if kdotl >= q + 2 {
                let observed = satisfies_Mq(&inst.table, q as usize);
                ensure(observed == (q <= gon), || {
                    format!(
                        "{} {}: (M_{q}) observed {observed}, criterion says q <= gon_max = {gon}",
                        inst.model, inst.class
                    )
                })?;
                ensure(observed == (q <= q_max), || "q_max inconsistent with (M_q)".into())?;
                criterion_checks += 1;
            }
        }
    }
    Ok(format!("{claims} claims, 0 violations; {criterion_checks} (M_q) iff q <= gon_max checks exact"))
}

fn criterion_5(all: &[&Instance]) -> Result<String, String> {
    for inst in all {
        let c = theory::conjecture_delta(&inst.model, &inst.class).map_err(|e| e.to_string())?;
        let observed = profile(&inst.table).unwrap().delta as i64;
        ensure(c.delta == observed, || {
            format!("{} {}: predicted delta {}, observed {observed}", inst.model, inst.class, c.delta)
        })?;
    }
    let start = Instant::now();
    let mut transposed = 0;
    for a in 1..=10i64 {
        for b in 1..=10i64 {
            let class = DivisorClass::Ruled(a, b);
            let h0_adjoint = (a - 1) * (b - 1);
            ensure(h0(&f0(), &DivisorClass::Ruled(a - 2, b - 2)) as i64 == h0_adjoint, || {
                format!("h0(K+L) at ({a},{b})")
            })?;
            // gonality of the (a, b) system as the closed form was derived: a
            ensure(h0_adjoint - a + 1 == (a - 1) * (b - 2), || format!("identity fails at ({a},{b})"))?;
            let c = theory::conjecture_delta(&f0(), &class).map_err(|e| e.to_string())?;
            let (lo, hi) = (a.min(b), a.max(b));
            ensure(c.delta == (lo - 1) * (hi - 2), || format!("conjecture_delta({a},{b}) = {}", c.delta))?;
            ensure(c.f0_closed_form == Some((c.delta, 2 * lo + 2 * hi - 3)), || format!("closed form at ({a},{b})"))?;
            if a <= b {
                ensure(c.delta == (a - 1) * (b - 2), || format!("conjecture_delta({a},{b}) != (a-1)(b-2)"))?;
            } else if c.delta != (a - 1) * (b - 2) {
                transposed += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= ARITHMETIC_BUDGET, || format!("identity sweep took {elapsed:?}"))?;
    let spot = theory::conjecture_delta(&f0(), &DivisorClass::Ruled(3, 4)).unwrap();
    ensure((spot.delta, spot.p_max) == (4, 11), || format!("(3,4): {:?}", (spot.delta, spot.p_max)))?;
    ensure(theory::conjecture_delta(&f0(), &DivisorClass::Ruled(2, 5)).unwrap().delta == 3, || "(2,5)".into())?;
    Ok(format!(
        "predicted delta = observed on 5 tables; (a-1)(b-2) = h0(K+L)-a+1 on 1..10 x 1..10; \
         with gon_max = min(a,b) the form is transposed on {transposed} pairs with a > b"
    ))
}

fn by_column(m: &SparseTriplets) -> Vec<Vec<(usize, i64)>> {
    let mut cols = vec![Vec::new(); m.cols];
    for &(r, c, v) in &m.entries {
        cols[c].push((r, v));
    }
    cols
}

/// `second ∘ first = 0`, one column of `first` at a time.
fn composes_to_zero(first: &SparseTriplets, second: &SparseTriplets) -> bool {
    assert_eq!(first.rows, second.cols);
    let second = by_column(second);
    let mut acc: Vec<(usize, i64)> = Vec::new();
    by_column(first).into_iter().all(|col| {
        acc.clear();
        for (mid, v) in col {
            acc.extend(second[mid].iter().map(|&(r, w)| (r, v * w)));
        }
        acc.sort_unstable_by_key(|e| e.0);
        acc.chunk_by(|x, y| x.0 == y.0).all(|run| run.iter().map(|e| e.1).sum::<i64>() == 0)
    })
}

fn random_matrix_pool() -> Vec<(SurfaceModel, DivisorClass, usize, usize)> {
    let mut targets = Vec::new();
    for d in 1..=6 {
        targets.push((SurfaceModel::projective(1).unwrap(), DivisorClass::Hyperplane(d)));
    }
    for d in 1..=3 {
        targets.push((p2(), DivisorClass::Hyperplane(d)));
    }
    for d in 1..=2 {
        targets.push((SurfaceModel::projective(3).unwrap(), DivisorClass::Hyperplane(d)));
    }
    for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        targets.push((f0(), DivisorClass::Ruled(a, b)));
    }
    for (e, a, b) in [(1, 1, 2), (1, 1, 3), (1, 2, 3), (2, 1, 3), (2, 1, 4)] {
        targets.push((SurfaceModel::hirzebruch(e), DivisorClass::Ruled(a, b)));
    }
    let mut pool = Vec::new();
    for (model, class) in targets {
        let ctx = KoszulContext::new(model, class, 3).unwrap();
        for i in 1..=ctx.dim_v() {
            for j in 0..=2 {
                let (cols, rows) = (ctx.space_dim(i, j), ctx.space_dim(i - 1, j + 1));
                if cols > 0 && rows > 0 && cols * rows < RANDOM_MATRIX_MAX_ENTRIES {
                    pool.push((model, class, i, j));
                }
            }
        }
    }
    pool
}

fn criterion_6(all: &[&Instance]) -> Result<String, String> {
    let mut pairs = 0;
    for inst in all {
        let t = &inst.table;
        let ctx = KoszulContext::new(inst.model, inst.class, t.j_max()).unwrap();
        // the pairs whose ranks enter beta_{i,i+j}
        for j in 1..=t.j_max() {
            for i in 1..=t.r {
                let first = ctx.differential(i + 1, j - 1, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                let second = ctx.differential(i, j, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                ensure(composes_to_zero(&first, &second), || {
                    format!("{} {}: d∘d != 0 at ({i},{j})", inst.model, inst.class)
                })?;
                pairs += 1;
            }
        }
        ensure(hilbert_certificate(t, &inst.model, &inst.class), || {
            format!("{} {}: Hilbert certificate", inst.model, inst.class)
        })?;
    }

    let mut pool = random_matrix_pool();
    ensure(pool.len() >= RANDOM_MATRICES, || format!("only {} candidate matrices", pool.len()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    pool.shuffle(&mut rng);
    for &(model, class, i, j) in pool.iter().take(RANDOM_MATRICES) {
        let ctx = KoszulContext::new(model, class, j + 1).unwrap();
        let full = ctx.differential(i, j, DEFAULT_SIZE_CAP).unwrap();
        let oracle = rational_rank(&full) as u64;
        let blockwise = ctx.differential_ranks(i, j, &config()).map_err(|e| e.to_string())?;
        for (p, r) in blockwise {
            ensure(r == oracle, || {
                format!("{model} {class} d_{{{i},{j}}}: blockwise rank {r} mod {p}, oracle {oracle}")
            })?;
        }
    }

    let (p, q) = (PrimeField::new(32003).unwrap(), PrimeField::new(65537).unwrap());
    for inst in all {
        let single = |f: PrimeField| {
            compute_table(inst.model, inst.class, &ComputeConfig { primes: vec![f], ..config() }).unwrap().rows
        };
        ensure(single(p) == single(q), || format!("{} {}: primes disagree", inst.model, inst.class))?;
        let swapped = compute_table(inst.model, inst.class, &ComputeConfig { primes: vec![q, p], ..config() }).unwrap();
        ensure(swapped.rows == inst.table.rows, || {
            format!("{} {}: swapped primes changed the table", inst.model, inst.class)
        })?;
        ensure(inst.table.beta(0, 0) == Some(1), || "beta_0,0 != 1".into())?;
        let r = inst.table.r as i64;
        ensure(inst.table.beta(r - 1, 1) == Some(0), || format!("{} {}: beta_{{r-1,r}} != 0", inst.model, inst.class))?;
    }
    Ok(format!(
        "d∘d = 0 on {pairs} pairs; Hilbert certificates pass; {RANDOM_MATRICES} random blocked ranks = rational oracle; \
         two primes agree; beta_0,0 = 1 and beta_r-1,r = 0"
    ))
}

fn criterion_7() -> Result<String, String> {
    let start = Instant::now();
    let e = |x: syzygy::SyzygyError| x.to_string();
    let mut n = 0;
    let mut check = |ok: bool, what: &str| -> Result<(), String> {
        n += 1;
        ensure(ok, || what.to_string())
    };
    check(ell_ceil(2, 2).map_err(e)? == 3, "ell_ceil(2,2) = 3")?;
    check(ell_ceil(5, 3).map_err(e)? == 3 && ell_floor(5, 3).map_err(e)? == 3, "ell(5,3)")?;
    check(ell_ceil(4, 4).map_err(e)? == 2 && ell_floor(4, 4).map_err(e)? == 1, "ell(4,4)")?;

    let nef = |n, d: i64, b2| NefData { b_top: b2, ..NefData::new(n, Rational64::from_integer(d)) };
    check(predict_adjoint_nef(&nef(2, 1, None), 4).map_err(e)?.min_ell() == Some(6), "adjoint (2,1,4) = 6")?;
    check(predict_adjoint_nef(&nef(2, 1, Some(10)), 4).map_err(e)?.min_ell() == Some(3), "adjoint (2,1,4,B2=10) = 3")?;
    check(predict_adjoint_nef(&nef(3, 1, None), 5).map_err(e)?.min_ell() == Some(4), "adjoint (3,1,5) = 4")?;

    check(butler_multiple(8, 2, 3, None).map_err(e)?.holds() == Some(true), "butler (8,2,3)")?;
    check(butler_multiple(6, 3, 3, None).map_err(e)?.holds() == Some(true), "butler (6,3,3)")?;
    check(butler_adjoint(8, 2, 3, 0, 0, None).map_err(e)?.holds() == Some(true), "butler adjoint (8,2,3,0,0)")?;

    check(enriques_bound(4, Some(6)).map_err(e)?.min_ell() == Some(3), "enriques q=4 B2=6")?;
    check(enriques_bound(4, None).map_err(e)?.min_ell() == Some(6), "enriques ample q=4")?;
    check(!theory::abelian_bound(3, Some(4)).map_err(e)?.applicable, "abelian q=3 B2=4 not applicable")?;

    let fano = |lambda, bn, gon| FanoData { n: 3, lambda, bn, gon_max: gon };
    // (B^n) >= max(3, (q-n+4)/(lambda-n+2)) = 5 here, so 3 does not meet it
    check(
        fano_criterion(&fano(2, 3, 3), 4).map_err(e)?.holds() == Some(false),
        "fano (3,2,3,3) q=4 by the stated inequality",
    )?;
    check(fano_criterion(&fano(2, 2, 3), 4).map_err(e)?.holds() == Some(false), "fano (3,2,2,3) q=4")?;
    check(fano_criterion(&fano(3, 5, 2), 4).map_err(e)?.holds() == Some(false), "fano (3,3,5,2) q=4")?;

    let ruled = |a, b| RuledData { n: 2, g: 0, e: 0, mu_minus: Rational64::from_integer(0), a, b };
    check(ruled_mq_bound(&ruled(3, 3), 3).map_err(e)?.holds() == Some(false), "ruled (3,3) q=3")?;
    check(ruled_mq_bound(&ruled(4, 4), 3).map_err(e)?.holds() == Some(true), "ruled (4,4) q=3")?;
    check(ruled_mq_bound(&ruled(2, 1), 2).map_err(e)?.holds() == Some(false), "ruled (2,1) q=2")?;

    let elapsed = start.elapsed();
    check(elapsed <= ARITHMETIC_BUDGET, "arithmetic budget")?;
    Ok(format!("{n} worked examples exact in {elapsed:.2?}; fano (n=3, lambda=2, B^n=3, gon=3, q=4) evaluates false"))
}

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    let golden = vec![
        compute(p2(), DivisorClass::Hyperplane(2)),
        compute(p2(), DivisorClass::Hyperplane(3)),
        compute(f0(), DivisorClass::Ruled(2, 2)),
        compute(f0(), DivisorClass::Ruled(2, 3)),
    ];
    report.line(1, "golden tables", criterion_1(&golden));
    let o4 = compute(p2(), DivisorClass::Hyperplane(4));
    report.line(2, "O(4) spot entries", criterion_2(&o4));
    assert_eq!(table_height(&p2(), &DivisorClass::Hyperplane(4)).unwrap(), 2);
    let all: Vec<&Instance> = vec![&golden[0], &golden[1], &golden[2], &golden[3], &o4];
    report.line(3, "profiles", criterion_3(&all));
    report.line(4, "theorem cross-checks", criterion_4(&all));
    report.line(5, "conjecture", criterion_5(&all));
    report.line(6, "property suites", criterion_6(&all));
    report.line(7, "bound calculators", criterion_7());
    println!("acceptance: {} of 7 criteria passed", 7 - report.failures);
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

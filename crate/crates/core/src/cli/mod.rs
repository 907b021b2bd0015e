//! Command-line interface: `betti`, `profile`, `verify`, `predict`, `sweep`.
//!
//! Exit codes: 0 for a certified result, 2 for a complete but uncertified
//! one, 1 for errors (including theorem violations found by `verify`).

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

use crate::betti::{compute_table_with, profile, BettiTable, NoStore};
use crate::error::{Result, SyzygyError};
use crate::exactla::PrimeField;
use crate::koszul::{ComputeConfig, DEFAULT_SIZE_CAP};
use crate::theory::{self, BoundReport, ClaimOutcome, FanoData, NefData, RationalFlags, RuledData, TheoremId};
use crate::variety::{DivisorClass, SurfaceModel};
use cache::RankCache;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNCERTIFIED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "syzygy", version, about = "Betti tables and (M_q)/(N_p) bounds for toric line bundles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute and print the Betti table.
    Betti(TargetArgs),
    /// Print p_max, q_max, tug, delta and j_max.
    Profile(TargetArgs),
    /// Check a computed table against every applicable theorem.
    Verify(TargetArgs),
    /// Evaluate one bound on given parameters.
    Predict(Box<PredictArgs>),
    /// Tabulate profiles over a range of bundles as CSV.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct JobArgs {
    /// Prime for modular ranks; repeat for several (default 32003 and 65537).
    #[arg(long = "prime")]
    pub primes: Vec<u64>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Rank cache directory.
    #[arg(long, env = "SYZYGY_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Largest number of nonzeros of one differential.
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: u64,
    #[arg(long)]
    pub no_cache: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TargetArgs {
    /// `P:<n>` or `F:<e>`.
    #[arg(long)]
    pub variety: String,
    /// `<d>` or `<a>,<b>`.
    #[arg(long, allow_hyphen_values = true)]
    pub bundle: String,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub variety: String,
    /// `<lo>..<hi>` on P^n; `<a-range>,<b-range>` on F_e (a single value is a range).
    #[arg(long)]
    pub range: String,
    #[command(flatten)]
    pub job: JobArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PredictArgs {
    /// One of: cm, m2-surface, adjoint-nef, enriques, abelian, rational, fano,
    /// ruled, butler-multiple, butler-adjoint, normal-generation.
    pub theorem: String,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub regk: Option<i64>,
    #[arg(long)]
    pub rho: Option<i64>,
    /// `(L·B)`.
    #[arg(long, allow_hyphen_values = true)]
    pub lb: Option<i64>,
    #[arg(long)]
    pub b2: Option<i64>,
    #[arg(long)]
    pub bn: Option<i64>,
    #[arg(long)]
    pub h0b: Option<i64>,
    /// Rational, e.g. `3/2`.
    #[arg(long)]
    pub d: Option<String>,
    /// `(-K·L)`.
    #[arg(long, allow_hyphen_values = true)]
    pub kdotl: Option<i64>,
    #[arg(long)]
    pub gon: Option<i64>,
    #[arg(long)]
    pub plane_curve: bool,
    #[arg(long)]
    pub pencil: bool,
    #[arg(long)]
    pub lambda: Option<i64>,
    #[arg(long)]
    pub g: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub e: Option<i64>,
    /// Rational, e.g. `-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu_minus: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    #[arg(long)]
    pub t: Option<i64>,
    #[arg(long)]
    pub first_positive: bool,
    #[arg(long)]
    pub first_nonnegative: bool,
    #[arg(long)]
    pub h0_lambda_ge4: bool,
    /// Enriques/abelian: the bundle is only ample.
    #[arg(long)]
    pub ample: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Validated job settings.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub compute: ComputeConfig,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
}

impl JobConfig {
    pub fn from_args(a: &JobArgs) -> Result<Self> {
        let primes = if a.primes.is_empty() {
            PrimeField::defaults()
        } else {
            a.primes.iter().map(|&p| PrimeField::new(p)).collect::<Result<_>>()?
        };
        let jobs = match a.jobs {
            Some(0) => return Err(SyzygyError::Parse("--jobs must be at least 1".into())),
            Some(n) => n,
            None => 0,
        };
        Ok(JobConfig {
            compute: ComputeConfig { primes, size_cap: a.size_cap, jobs },
            format: a.format,
            cache_dir: if a.no_cache { None } else { a.cache_dir.clone() },
        })
    }
}

fn parse_target(variety: &str, bundle: &str) -> Result<(SurfaceModel, DivisorClass)> {
    let model: SurfaceModel = variety.parse()?;
    let class = model.parse_class(bundle)?;
    Ok((model, class))
}

/// Computes tables, going through the on-disk cache when one is configured.
struct Engine {
    cfg: JobConfig,
    cache: Option<RankCache>,
}

impl Engine {
    fn new(cfg: JobConfig, err: &mut dyn Write) -> Self {
        let cache = cfg.cache_dir.as_ref().and_then(|dir| match RankCache::open(dir) {
            Ok(c) => Some(c),
            Err(e) => {
                let _ = writeln!(err, "warning: cache disabled: {e}");
                None
            }
        });
        Engine { cfg, cache }
    }

    fn table(&mut self, model: SurfaceModel, class: DivisorClass, err: &mut dyn Write) -> Result<BettiTable> {
        let table = match &self.cache {
            Some(c) => compute_table_with(model, class, &self.cfg.compute, &c.view(&model, &class))?,
            None => compute_table_with(model, class, &self.cfg.compute, &NoStore)?,
        };
        if let Some(c) = self.cache.as_mut() {
            if let Err(e) = c.flush() {
                let _ = writeln!(err, "warning: {e}");
            }
        }
        Ok(table)
    }
}

fn status(t: &BettiTable) -> i32 {
    if t.certified {
        EXIT_OK
    } else {
        EXIT_UNCERTIFIED
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| SyzygyError::Io(e.to_string());
    match cmd {
        Command::Betti(a) => {
            let (model, class) = parse_target(&a.variety, &a.bundle)?;
            let cfg = JobConfig::from_args(&a.job)?;
            let format = cfg.format;
            let t = Engine::new(cfg, err).table(model, class, err)?;
            let text = match format {
                Format::Text => render::table_text(&t),
                Format::Json => render::table_json(&t) + "\n",
                Format::Csv => render::table_csv(&t),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(status(&t))
        }
        Command::Profile(a) => {
            let (model, class) = parse_target(&a.variety, &a.bundle)?;
            let cfg = JobConfig::from_args(&a.job)?;
            let format = cfg.format;
            let t = Engine::new(cfg, err).table(model, class, err)?;
            let p = profile(&t)?;
            let text = match format {
                Format::Text => render::profile_text(&p),
                Format::Json => serde_json::to_string_pretty(&p).expect("profile serializes") + "\n",
                Format::Csv => render::profile_csv(&p),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(status(&t))
        }
        Command::Verify(a) => {
            let (model, class) = parse_target(&a.variety, &a.bundle)?;
            let cfg = JobConfig::from_args(&a.job)?;
            let format = cfg.format;
            let t = Engine::new(cfg, err).table(model, class, err)?;
            if !t.certified {
                writeln!(err, "table is not certified; nothing verified").map_err(io)?;
                return Ok(EXIT_UNCERTIFIED);
            }
            let claims = theory::verify_instances(&t, &model, &class)?;
            let text = match format {
                Format::Text => render::claims_text(&claims),
                Format::Json => serde_json::to_string_pretty(&claims).expect("claims serialize") + "\n",
                Format::Csv => render::claims_csv(&claims),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            let violations = claims.iter().filter(|c| c.outcome == ClaimOutcome::Violation).count();
            if violations > 0 {
                writeln!(err, "{violations} sufficiency violation(s)").map_err(io)?;
                return Ok(EXIT_ERROR);
            }
            Ok(EXIT_OK)
        }
        Command::Predict(a) => {
            let report = predict(&a)?;
            let text = match a.format {
                Format::Text => report.to_string(),
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Csv => report_csv(&report),
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Sweep(a) => sweep(&a, out, err),
    }
}

fn report_csv(r: &BoundReport) -> String {
    format!(
        "theorem,applicable,min_ell,holds,clause\n{},{},{},{},\"{}\"\n",
        r.theorem.key(),
        r.applicable,
        r.min_ell().map(|v| v.to_string()).unwrap_or_default(),
        r.holds().map(|v| v.to_string()).unwrap_or_default(),
        r.clause().unwrap_or_default()
    )
}

fn rational(s: &str, name: &str) -> Result<Rational64> {
    s.trim().parse::<Rational64>().map_err(|_| SyzygyError::Parse(format!("--{name}: not a rational number: {s:?}")))
}

/// Parses `predict` arguments given without the program and subcommand names.
pub fn parse_predict_args<I, T>(args: I) -> Result<PredictArgs>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv =
        [OsString::from("syzygy"), OsString::from("predict")].into_iter().chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(Cli { command: Command::Predict(a) }) => Ok(*a),
        Ok(_) => unreachable!("subcommand is fixed"),
        Err(e) => Err(SyzygyError::Parse(e.to_string().trim().to_string())),
    }
}

/// Dispatches `predict` to the theory module, listing missing parameters.
pub fn predict(a: &PredictArgs) -> Result<BoundReport> {
    let theorem = TheoremId::from_key(&a.theorem).ok_or_else(|| {
        let keys: Vec<&str> = TheoremId::ALL.iter().map(|t| t.key()).collect();
        SyzygyError::Parse(format!("unknown theorem {:?}; expected one of {}", a.theorem, keys.join(", ")))
    })?;
    let mut missing: Vec<&str> = Vec::new();
    let mut need = |v: Option<i64>, name: &'static str| -> i64 {
        v.unwrap_or_else(|| {
            missing.push(name);
            0
        })
    };
    macro_rules! finish {
        ($e:expr) => {{
            if !missing.is_empty() {
                return Err(SyzygyError::Parse(format!(
                    "missing parameters for {}: {}",
                    theorem.key(),
                    missing.join(", ")
                )));
            }
            $e
        }};
    }
    match theorem {
        TheoremId::MultipleBundle => {
            let (n, q, regk, rho) = (need(a.n, "--n"), need(a.q, "--q"), need(a.regk, "--regk"), need(a.rho, "--rho"));
            finish!(theory::predict_multiple(n, q, regk, rho))
        }
        TheoremId::M2Surface => {
            let (lb, b2, h0b) = (need(a.lb, "--lb"), need(a.b2, "--b2"), need(a.h0b, "--h0b"));
            finish!(Ok(theory::predict_m2_surface(lb, b2, h0b)))
        }
        TheoremId::AdjointNef | TheoremId::NormalGeneration => {
            let n = if theorem == TheoremId::NormalGeneration { a.n.unwrap_or(2) } else { need(a.n, "--n") };
            let q = if theorem == TheoremId::AdjointNef { need(a.q, "--q") } else { 0 };
            if a.d.is_none() {
                missing.push("--d");
            }
            finish!({
                let d = rational(a.d.as_deref().unwrap_or("1"), "d")?;
                let data = NefData {
                    n,
                    d,
                    b_top: a.b2.or(a.bn),
                    first_positive: a.first_positive,
                    first_nonnegative: a.first_nonnegative,
                    h0_lambda_at_least_4: a.h0_lambda_ge4,
                };
                if theorem == TheoremId::AdjointNef {
                    theory::predict_adjoint_nef(&data, q)
                } else {
                    theory::appendix_normal_generation(&data)
                }
            })
        }
        TheoremId::Enriques | TheoremId::Abelian => {
            let q = need(a.q, "--q");
            if a.b2.is_none() && !a.ample {
                missing.push("--b2 or --ample");
            }
            finish!({
                let b2 = if a.ample { None } else { a.b2 };
                if theorem == TheoremId::Enriques {
                    theory::enriques_bound(q, b2)
                } else {
                    theory::abelian_bound(q, b2)
                }
            })
        }
        TheoremId::RationalSurface => {
            let (kdotl, q, gon) = (need(a.kdotl, "--kdotl"), need(a.q, "--q"), need(a.gon, "--gon"));
            finish!(Ok(theory::rational_criterion(
                kdotl,
                q,
                gon,
                RationalFlags { plane_curve: a.plane_curve, pencil: a.pencil }
            )))
        }
        TheoremId::Fano => {
            let data = FanoData {
                n: need(a.n, "--n"),
                lambda: need(a.lambda, "--lambda"),
                bn: need(a.bn, "--bn"),
                gon_max: need(a.gon, "--gon"),
            };
            let q = need(a.q, "--q");
            finish!(theory::fano_criterion(&data, q))
        }
        TheoremId::Ruled => {
            let (n, g, aa, b, q) =
                (need(a.n, "--n"), need(a.g, "--g"), need(a.a, "--a"), need(a.b, "--b"), need(a.q, "--q"));
            if a.mu_minus.is_none() {
                missing.push("--mu-minus");
            }
            finish!({
                let mu = rational(a.mu_minus.as_deref().unwrap_or("0"), "mu-minus")?;
                theory::ruled_mq_bound(&RuledData { n, g, e: a.e.unwrap_or(0), mu_minus: mu, a: aa, b }, q)
            })
        }
        TheoremId::ButlerMultiple => {
            let (t, n, q) = (need(a.t, "--t"), need(a.n, "--n"), need(a.q, "--q"));
            finish!(theory::butler_multiple(t, n, q, a.a))
        }
        TheoremId::ButlerAdjoint => {
            let (t, n, q, e, g) =
                (need(a.t, "--t"), need(a.n, "--n"), need(a.q, "--q"), need(a.e, "--e"), need(a.g, "--g"));
            finish!(theory::butler_adjoint(t, n, q, e, g, a.a))
        }
    }
}

/// `lo..hi` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || SyzygyError::Parse(format!("bad range {s:?}; expected <lo>..<hi> or <n>"));
    let s = s.trim();
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v: i64 = s.parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

/// Bundles of a sweep, in output order.
pub fn sweep_classes(model: &SurfaceModel, range: &str) -> Result<Vec<DivisorClass>> {
    match model {
        SurfaceModel::ProjectiveSpace { .. } => Ok(parse_range(range)?.map(DivisorClass::Hyperplane).collect()),
        SurfaceModel::Hirzebruch { .. } => {
            let (ar, br) = range
                .split_once(',')
                .ok_or_else(|| SyzygyError::Parse(format!("F_e sweeps need <a-range>,<b-range>, got {range:?}")))?;
            let (ar, br) = (parse_range(ar)?, parse_range(br)?);
            Ok(ar.flat_map(|a| br.clone().map(move |b| DivisorClass::Ruled(a, b))).collect())
        }
    }
}

fn sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| SyzygyError::Io(e.to_string());
    let model: SurfaceModel = a.variety.parse()?;
    let classes = sweep_classes(&model, &a.range)?;
    let cfg = JobConfig::from_args(&a.job)?;
    let mut engine = Engine::new(cfg, err);
    let header = match model {
        SurfaceModel::ProjectiveSpace { .. } => "d,r,p_max,q_max,delta,predicted_delta,match",
        SurfaceModel::Hirzebruch { .. } => "a,b,r,p_max,q_max,delta,predicted_delta,match",
    };
    writeln!(out, "{header}").map_err(io)?;
    let mut code = EXIT_OK;
    for class in classes {
        if !model.is_ample(&class) {
            writeln!(err, "skipping {class}: not ample").map_err(io)?;
            continue;
        }
        let t = engine.table(model, class, err)?;
        if !t.certified {
            code = EXIT_UNCERTIFIED;
        }
        let predicted = theory::conjecture_delta(&model, &class).ok().map(|c| c.delta);
        let fields = match profile(&t) {
            Ok(p) => {
                let pred = predicted.map_or("?".to_string(), |d| d.to_string());
                let matched = predicted.map_or("?".to_string(), |d| (d == p.delta).to_string());
                format!("{},{},{},{},{pred},{matched}", t.r, p.p_max, p.q_max, p.delta)
            }
            Err(_) => format!("{},?,?,?,{},?", t.r, predicted.map_or("?".to_string(), |d| d.to_string())),
        };
        writeln!(out, "{class},{fields}").map_err(io)?;
    }
    Ok(code)
}

//! Command line front end for `cohitlab-core`: JSON output, a result cache
//! and the verification suites.

pub mod cache;
pub mod json;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohitlab_core::cohit::{kameko_matrix, CohitBasis, WeightSubquotient};
use cohitlab_core::glaction::{invariants_with, kameko_kernel_invariants, CoinvariantBasis, Group, RepChoice};
use cohitlab_core::lambda::{Convention, Lambda};
use cohitlab_core::polyspace::{alpha, minimal_spike, mu, WeightVector, MAX_VARS};
use cohitlab_core::steenrod::{is_annihilated, primitive_basis, HitOptions, DEFAULT_MAX_COLS};
use cohitlab_core::transferlab::{transfer_report, verify_suite, SuiteReport, SUITES};
use cohitlab_core::Error;
use serde_json::{json, Value};

use crate::cache::{Cache, CacheKey};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCES: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cohitlab", version, about = "Cohit spaces, the lambda algebra and the algebraic transfer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Largest matrix width any elimination may use.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_COLS)]
    max_cols: usize,
    /// Worker threads for commands that run independent jobs.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Sigma,
    Gl,
}

#[derive(Args, Debug, Clone, Copy)]
struct Bidegree {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    n: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Admissible basis of the cohit space.
    Cohit(Bidegree),
    /// Weight subquotient for one weight vector.
    Weight {
        #[command(flatten)]
        deg: Bidegree,
        #[arg(long)]
        omega: String,
    },
    /// Invariants of the cohit space or of a weight subquotient.
    Invariants {
        #[command(flatten)]
        deg: Bidegree,
        #[arg(long, value_enum, default_value_t = GroupArg::Gl)]
        group: GroupArg,
        #[arg(long)]
        omega: Option<String>,
    },
    /// Coinvariants of the primitives under GL_q.
    Coinvariants(Bidegree),
    /// Basis of the divided-power elements killed by every positive square.
    Primitives(Bidegree),
    /// Whether a divided-power element is killed by every positive square.
    Annihilated {
        #[arg(long)]
        file: PathBuf,
    },
    /// Kameko map out of degree `n` (into degree `(n - q) / 2`).
    Kameko(Bidegree),
    /// Lambda algebra image of a divided-power element.
    Psi {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        file: PathBuf,
    },
    /// Basis of Ext^{q, q+n} from the lambda algebra.
    Ext(Bidegree),
    /// Matrix and verdict of the transfer in one bidegree.
    Transfer(Bidegree),
    /// Runs a verification suite, or `all`.
    Verify { suite: String },
    /// Minimal spike of degree `n`.
    Spike(Bidegree),
    /// `mu(n)` and `alpha(n)`.
    Mu {
        #[arg(long)]
        n: u32,
    },
}

enum Failure {
    Usage(String),
    Resources { needed: usize, cap: usize },
    Mismatch(Value),
    /// A report cut short by a resource cap.
    Partial(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { needed, cap } => Self::Resources { needed, cap },
            other => Self::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    opts: HitOptions,
    cache: Option<Cache>,
    jobs: usize,
}

impl Ctx {
    fn cached(&self, key: CacheKey, compute: impl FnOnce() -> Result<Value, Failure>) -> Result<Value, Failure> {
        if let Some(hit) = self.cache.as_ref().and_then(|c| c.get(&key)) {
            return Ok(hit);
        }
        let payload = compute()?;
        if let Some(c) = &self.cache {
            if let Err(e) = c.put(&key, &payload) {
                eprintln!("warning: cache write to {} failed: {e}", c.dir().display());
            }
        }
        Ok(payload)
    }
}

/// Parses `args` (program name first), runs the command and writes the result to `out`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let ctx = Ctx {
        opts: HitOptions { max_cols: cli.max_cols, ..HitOptions::default() },
        cache: (!cli.no_cache).then(Cache::from_env),
        jobs: cli.jobs.max(1),
    };
    let (value, code) = match dispatch(&ctx, &cli.command) {
        Ok(v) => (v, EXIT_OK),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Resources { needed, cap }) => {
            (json!({ "partial": true, "error": "resource cap", "needed": needed, "cap": cap }), EXIT_RESOURCES)
        }
        Err(Failure::Mismatch(v)) => (v, EXIT_MISMATCH),
        Err(Failure::Partial(v)) => (v, EXIT_RESOURCES),
    };
    let text = match cli.out {
        OutFormat::Json => serde_json::to_string(&value).expect("values serialize") + "\n",
        OutFormat::Table => table::render(&value),
    };
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_USAGE;
    }
    code
}

fn check_q(q: usize) -> Result<(), Failure> {
    if (1..=MAX_VARS).contains(&q) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--q must be between 1 and {MAX_VARS}")))
    }
}

fn parse_omega(s: &str) -> Result<WeightVector, Failure> {
    WeightVector::parse(s).ok_or_else(|| Failure::Usage(format!("cannot parse weight vector {s:?}")))
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<Value, Failure> {
    let opts = ctx.opts;
    match command {
        &Command::Cohit(Bidegree { q, n }) => {
            check_q(q)?;
            ctx.cached(CacheKey::new("cohit", q, n), || {
                let b = CohitBasis::new(q, n, opts)?;
                let adm: Vec<Value> = b.admissible().iter().map(json::monomial).collect();
                Ok(json!({ "q": q, "n": n, "dim": b.dim(), "hit_rank": b.hit_span().rank(), "admissible": adm }))
            })
        }
        Command::Weight { deg: Bidegree { q, n }, omega } => {
            let (q, n) = (*q, *n);
            check_q(q)?;
            let w = parse_omega(omega)?;
            let mut key = CacheKey::new("weight", q, n);
            key.omega = Some(w.entries().to_vec());
            ctx.cached(key, || {
                let s = WeightSubquotient::new(q, n, &w, opts.max_cols)?;
                let basis: Vec<Value> = s.basis().iter().map(json::monomial).collect();
                Ok(json!({
                    "q": q, "n": n, "omega": json::weight(&w), "dim": s.dim(),
                    "weight_monomials": s.weight_monomials(), "basis": basis,
                }))
            })
        }
        Command::Invariants { deg: Bidegree { q, n }, group, omega } => {
            let (q, n) = (*q, *n);
            check_q(q)?;
            let w = omega.as_deref().map(parse_omega).transpose()?;
            let (group, name) = match group {
                GroupArg::Sigma => (Group::Symmetric, "sigma"),
                GroupArg::Gl => (Group::General, "gl"),
            };
            let mut key = CacheKey::new("invariants", q, n);
            key.omega = w.as_ref().map(|w| w.entries().to_vec());
            key.group = Some(name.into());
            ctx.cached(key, || {
                let inv = invariants_with(q, n, group, w.as_ref(), opts)?;
                let reps: Vec<Value> = inv.representatives().iter().map(json::polynomial).collect();
                Ok(json!({
                    "q": q, "n": n, "group": name, "omega": w.as_ref().map(json::weight),
                    "dim": inv.dim(), "representatives": reps,
                }))
            })
        }
        &Command::Coinvariants(Bidegree { q, n }) => {
            check_q(q)?;
            ctx.cached(CacheKey::new("coinvariants", q, n), || {
                let c = CoinvariantBasis::new(q, n, opts, RepChoice::First)?;
                let reps: Vec<Value> = c.representatives().iter().map(json::dual_element).collect();
                Ok(json!({ "q": q, "n": n, "dim": c.dim(), "representatives": reps }))
            })
        }
        &Command::Primitives(Bidegree { q, n }) => {
            check_q(q)?;
            ctx.cached(CacheKey::new("primitives", q, n), || {
                let p = primitive_basis(q, n, opts.max_cols)?;
                let basis: Vec<Value> = p.iter().map(json::dual_element).collect();
                Ok(json!({ "q": q, "n": n, "dim": p.len(), "basis": basis }))
            })
        }
        Command::Annihilated { file } => {
            let theta = json::parse_dual_element(&read_file(file)?).map_err(Failure::Usage)?;
            Ok(json!({ "q": theta.q(), "degree": theta.degree(), "annihilated": is_annihilated(&theta) }))
        }
        &Command::Kameko(Bidegree { q, n }) => {
            check_q(q)?;
            if n < q as u32 || !(n - q as u32).is_multiple_of(2) {
                return Err(Failure::Usage(format!("--n must be 2m + {q} for the Kameko map")));
            }
            ctx.cached(CacheKey::new("kameko", q, n), || {
                let k = kameko_matrix(q, (n - q as u32) / 2, opts)?;
                let kernel: Vec<Value> = k.kernel_representatives().iter().map(json::polynomial).collect();
                let inv = kameko_kernel_invariants(q, n, opts)?;
                let inv_reps: Vec<Value> = inv.representatives().iter().map(json::polynomial).collect();
                Ok(json!({
                    "q": q,
                    "source_degree": n,
                    "target_degree": k.target.degree(),
                    "source_dim": k.source.dim(),
                    "target_dim": k.target.dim(),
                    "rank": k.rank(),
                    "onto": k.rank() == k.target.dim(),
                    "kernel_dim": kernel.len(),
                    "kernel": kernel,
                    "kernel_invariants_dim": inv.dim(),
                    "kernel_invariants": inv_reps,
                }))
            })
        }
        Command::Psi { q, file } => {
            check_q(*q)?;
            let theta = json::parse_dual_element(&read_file(file)?).map_err(Failure::Usage)?;
            if theta.q() != *q {
                return Err(Failure::Usage(format!("element has {} variables, --q is {q}", theta.q())));
            }
            let lambda = Lambda::new(Convention::LeftBounded);
            let z = lambda.psi(&theta)?;
            let cycle = lambda.is_cycle(&z)?;
            Ok(json!({ "input": json::dual_element(&theta), "psi": json::lambda_element(&z), "cycle": cycle }))
        }
        &Command::Ext(Bidegree { q, n }) => {
            check_q(q)?;
            ctx.cached(CacheKey::new("ext", q, n), || {
                let h = Lambda::new(Convention::LeftBounded).homology(q, n)?;
                let reps: Vec<Value> = h.representatives().iter().map(json::lambda_element).collect();
                Ok(json!({
                    "q": q, "n": n, "dim": h.dim(), "chain_dim": h.chain_dim(),
                    "boundary_rank": h.boundary_rank(), "representatives": reps,
                }))
            })
        }
        &Command::Transfer(Bidegree { q, n }) => {
            check_q(q)?;
            ctx.cached(CacheKey::new("transfer", q, n), || {
                let lambda = Lambda::new(Convention::LeftBounded);
                let r = transfer_report(&lambda, q, n, opts, RepChoice::First)?;
                let reps: Vec<Value> = r.representatives.iter().map(json::dual_element).collect();
                let images: Vec<Value> = r.images.iter().map(json::lambda_element).collect();
                Ok(json!({
                    "q": q, "n": n, "domain_dim": r.domain_dim, "codomain_dim": r.codomain_dim,
                    "rank": r.rank, "mono": r.mono, "epi": r.epi, "iso": r.iso,
                    "matrix": json::matrix(&r.matrix), "representatives": reps, "images": images,
                }))
            })
        }
        Command::Verify { suite } => verify(ctx, suite),
        &Command::Spike(Bidegree { q, n }) => {
            check_q(q)?;
            match minimal_spike(q, n) {
                Ok(z) => Ok(json!({
                    "q": q, "n": n, "exists": true, "spike": json::monomial(&z), "weight": json::weight(&z.weight()),
                })),
                Err(Error::NoSpike { .. }) => Ok(json!({ "q": q, "n": n, "exists": false })),
                Err(e) => Err(e.into()),
            }
        }
        &Command::Mu { n } => Ok(json!({ "n": n, "mu": mu(u64::from(n)), "alpha": alpha(u64::from(n)) })),
    }
}

fn suite_json(r: &SuiteReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "label": c.label, "passed": c.passed, "detail": c.detail }))
        .collect();
    json!({ "suite": r.name, "passed": r.passed(), "partial": r.partial, "checks": checks })
}

fn verify(ctx: &Ctx, suite: &str) -> Result<Value, Failure> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::Usage(format!("unknown suite {suite:?}; expected one of {SUITES:?} or all")));
    };
    let slots: Mutex<Vec<Option<Result<SuiteReport, Error>>>> = Mutex::new(vec![None; names.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..ctx.jobs.min(names.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(name) = names.get(i) else { break };
                let r = verify_suite(name, ctx.opts);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    let mut reports = Vec::new();
    for r in slots.into_inner().expect("no worker panicked") {
        reports.push(r.expect("every slot filled")?);
    }
    let mismatch = reports.iter().any(SuiteReport::mismatched);
    let partial = reports.iter().any(|r| r.partial);
    let value = json!({
        "passed": !mismatch && !partial,
        "partial": partial,
        "suites": reports.iter().map(suite_json).collect::<Vec<_>>(),
    });
    if mismatch {
        Err(Failure::Mismatch(value))
    } else if partial {
        Err(Failure::Partial(value))
    } else {
        Ok(value)
    }
}

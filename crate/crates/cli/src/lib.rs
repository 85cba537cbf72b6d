//! Argument handling and dispatch for the `qdecouple` binary. `run` is
//! pure apart from reading `--gamma` files and writing `--out` files, so
//! tests drive it in-process.

use clap::{Parser, Subcommand, ValueEnum};
use decoupling::{gamma_default, solve_gluing, DecouplingError, GammaConfig, Maps, Which};
use ncengine::{Algebra, Presentation};
use presentations::{euclidean_presentation, frt_presentation, Entry, Sign};
use rmatrix::RMatrixBundle;
use scalars::Scalar;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use verification::{verify, Config, Mode, Report, Suite, VerifyError};

#[derive(Debug, Parser)]
#[command(name = "qdecouple", version, about = "Exact computations in R_q^N, U_q so(N) and their cross product")]
pub struct Cli {
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest number of non-invertible letters allowed in a normal word.
    #[arg(long, global = true, default_value_t = 12)]
    pub degree_cap: usize,
    /// Seed for every randomized choice (eval-mode sample points).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Eval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RCheck {
    Ybe,
    Projectors,
    Metric,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Euclidean,
    Frt,
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhichArg {
    Plus,
    Minus,
    Glued,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Braid matrix, projectors and metric, with their identity checks.
    Rmatrix {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = RCheck::All)]
        check: RCheck,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// A presentation as JSON (or a readable listing with --format text).
    Presentation {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
    },
    /// Normal form of an expression.
    Nf {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long)]
        expr: String,
    },
    /// Image of an FRT generator under φ̃.
    Phi {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        which: WhichArg,
        #[arg(long)]
        gen: String,
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Image of an FRT generator under ζ̃, in the cross product.
    Zeta {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        which: SignArg,
        #[arg(long)]
        gen: String,
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
    /// Runs a verification suite; exit status 1 if any check fails.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long)]
        gamma: Option<PathBuf>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|x| x.as_str()).chain(["all"]).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Bad flags or an incompatible request: exit 2.
    Usage(String),
    /// The computation itself failed: exit 1.
    Error(String),
}

impl From<DecouplingError> for Failure {
    fn from(e: DecouplingError) -> Self {
        match e {
            DecouplingError::EvenGluing | DecouplingError::Index(_) | DecouplingError::Gamma(_) => {
                Failure::Usage(e.to_string())
            }
            e => Failure::Error(e.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Usage(m) => Failure::Usage(m),
            VerifyError::Decoupling(d) => d.into(),
            e => Failure::Error(e.to_string()),
        }
    }
}

fn err(e: impl std::fmt::Display) -> Failure {
    Failure::Error(e.to_string())
}

/// What a command produced: text for humans, a JSON document, and
/// whether every check passed.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let mut doc = serde_json::to_string_pretty(&out.json).expect("json");
            doc.push('\n');
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &doc) {
                    return Outcome { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) };
                }
            }
            let stdout = match cli.format {
                Format::Json => doc,
                Format::Text => out.text,
            };
            Outcome { code: if out.passed { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Error(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}

fn check_dim(dim: usize) -> Result<(), Failure> {
    if dim < 3 {
        return Err(Failure::Usage(format!("--dim must be at least 3, got {dim}")));
    }
    Ok(())
}

fn mode(m: ModeArg, samples: usize, seed: u64) -> Result<Mode, Failure> {
    match m {
        ModeArg::Exact => Ok(Mode::Exact),
        ModeArg::Eval if samples == 0 => Err(Failure::Usage("--samples must be at least 1".into())),
        ModeArg::Eval => Ok(Mode::Eval { samples, seed }),
    }
}

fn read_gamma(path: &Option<PathBuf>, dim: usize) -> Result<Option<GammaConfig>, Failure> {
    let Some(p) = path else { return Ok(None) };
    let text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    Ok(Some(GammaConfig::from_json(&v, dim)?))
}

/// "L-[i,j]" or "L+[i,j]".
fn parse_gen(s: &str, dim: usize) -> Result<Entry, Failure> {
    let bad = || Failure::Usage(format!("--gen {s:?}: expected L-[i,j] or L+[i,j]"));
    let t = s.trim();
    let sign = Sign::from_base(t.get(..2).ok_or_else(bad)?).ok_or_else(bad)?;
    let inner = t[2..].trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
    let idx: Vec<i32> = inner.split(',').map(|x| x.trim().parse::<i32>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let &[i, j] = idx.as_slice() else { return Err(bad()) };
    let n = (dim / 2) as i32;
    let valid = |k: i32| k.abs() <= n && (k != 0 || dim % 2 == 1);
    if !valid(i) || !valid(j) {
        return Err(Failure::Usage(format!("--gen {s:?}: indices must lie in the weights of N = {dim}")));
    }
    Ok(Entry { sign, i, j })
}

fn with_cap(mut m: Maps<Scalar>, cap: usize) -> Maps<Scalar> {
    m.eu.degree_cap = cap;
    m.frt.degree_cap = cap;
    m.cross.degree_cap = cap;
    m
}

fn build(dim: usize, algebra: AlgebraArg, cap: usize) -> Result<Presentation<Scalar>, Failure> {
    let b = RMatrixBundle::<Scalar>::new(dim).map_err(err)?;
    let mut p = match algebra {
        AlgebraArg::Euclidean => euclidean_presentation(&b).map_err(err)?,
        AlgebraArg::Frt => frt_presentation(&b).map_err(err)?,
        AlgebraArg::Cross => Maps::new(dim, gamma_default(dim))?.cross,
    };
    p.degree_cap = cap;
    Ok(p)
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let cap = cli.degree_cap;
    match &cli.command {
        Command::Rmatrix { dim, check, mode: m, samples } => {
            check_dim(*dim)?;
            let mode = mode(*m, *samples, cli.seed)?;
            let b = RMatrixBundle::<Scalar>::new(*dim).map_err(err)?;
            let mut r = verify(Suite::Rmatrix, *dim, &mode, &Config { gamma: None, degree_cap: cap })?;
            let keep = |id: &str| match check {
                RCheck::All => true,
                RCheck::Projectors => id.starts_with("rmatrix.projectors"),
                RCheck::Metric => id.starts_with("metric."),
                RCheck::Ybe => id.starts_with("rmatrix.") && !id.starts_with("rmatrix.projectors"),
            };
            r.checks.retain(|c| keep(&c.id));
            Ok(Output {
                text: r.to_text(),
                json: json!({"bundle": b.to_json(), "report": r.to_json()}),
                passed: r.all_passed(),
            })
        }
        Command::Presentation { dim, algebra } => {
            check_dim(*dim)?;
            let p = build(*dim, *algebra, cap)?;
            Ok(Output { text: listing(&p), json: p.to_json(), passed: true })
        }
        Command::Nf { dim, algebra, expr } => {
            check_dim(*dim)?;
            let p = build(*dim, *algebra, cap)?;
            let x = match p.parse(expr) {
                Ok(x) => x,
                Err(e @ ncengine::EngineError::Parse(_)) => return Err(Failure::Usage(format!("{e}"))),
                Err(e) => return Err(Failure::Usage(e.to_string())),
            };
            let nf = p.fmt_poly(&p.nf(&x).map_err(err)?);
            let json = json!({"N": dim, "algebra": p.algebra.as_str(), "input": expr, "nf": nf});
            Ok(Output { text: format!("{nf}\n"), json, passed: true })
        }
        Command::Phi { dim, which, gen, gamma } => {
            check_dim(*dim)?;
            let e = parse_gen(gen, *dim)?;
            let which = match which {
                WhichArg::Minus => Which::Minus,
                WhichArg::Plus => Which::Plus,
                WhichArg::Glued => Which::Glued,
            };
            let g = match (read_gamma(gamma, *dim)?, which) {
                (Some(g), _) => g,
                (None, Which::Glued) => solve_gluing(*dim)?,
                (None, _) => gamma_default(*dim),
            };
            let m = with_cap(Maps::new(*dim, g)?, cap);
            let img = m.eu.fmt_poly(&m.phi_display(which, e)?);
            let which_name = format!("{which:?}").to_lowercase();
            let json = json!({"map": "phi", "which": which_name, "N": dim, "gen": gen.trim(), "image": img, "gamma": m.gamma.to_json()});
            Ok(Output { text: format!("{img}\n"), json, passed: true })
        }
        Command::Zeta { dim, which, gen, gamma } => {
            check_dim(*dim)?;
            let e = parse_gen(gen, *dim)?;
            let which = if *which == SignArg::Minus { Which::Minus } else { Which::Plus };
            let g = read_gamma(gamma, *dim)?.unwrap_or_else(|| gamma_default(*dim));
            let m = with_cap(Maps::new(*dim, g)?, cap);
            let img = m.cross.fmt_poly(&m.zeta(which, e)?);
            let which_name = format!("{which:?}").to_lowercase();
            let json = json!({"map": "zeta", "which": which_name, "N": dim, "gen": gen.trim(), "image": img, "gamma": m.gamma.to_json()});
            Ok(Output { text: format!("{img}\n"), json, passed: true })
        }
        Command::Verify { dim, suite, mode: m, samples, gamma } => {
            check_dim(*dim)?;
            let mode = mode(*m, *samples, cli.seed)?;
            let cfg = Config { gamma: read_gamma(gamma, *dim)?, degree_cap: cap };
            let r: Report = verify(*suite, *dim, &mode, &cfg)?;
            Ok(Output { text: r.to_text(), json: r.to_json(), passed: r.all_passed() })
        }
    }
}

/// Generators, then one rule per line.
fn listing(p: &Presentation<Scalar>) -> String {
    let mut s = format!("{} presentation, N = {}\n", p.algebra.as_str(), p.dim);
    let names: Vec<String> = p.registry.gens().iter().map(|g| g.name()).collect();
    s.push_str(&format!("generators ({}): {}\n", names.len(), names.join(" < ")));
    s.push_str(&format!("rules ({}):\n", p.rule_count()));
    for (a, b, rhs) in p.rules() {
        s.push_str(&format!("  {}*{} -> {}\n", p.registry.letter_name(a), p.registry.letter_name(b), p.fmt_poly(rhs)));
    }
    for r in &p.roots {
        let l = ncengine::word::letter(r.gen, false);
        s.push_str(&format!("root: {} = {}\n", p.registry.fmt_letter_power(l, r.power), p.fmt_poly(&r.value)));
    }
    if p.algebra == Algebra::Cross {
        s.push_str("a*L[i,k] = sum_h L[i,h] (a <| L[h,k])\n");
    }
    s
}

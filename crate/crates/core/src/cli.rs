//! The `skewlat` command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on a usage error. Results
//! go to stdout as plain tables or, with `--json`, as one JSON document.
//! Diagnostics go to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::codes::{CodeDescriptor, ConstacyclicCode};
use crate::config::{Config, OutputFormat};
use crate::error::Error;
use crate::fixtures::{verify_examples, CheckResult};
use crate::lattice::{construction_a, OrderElement, TraceForm};
use crate::matrix::IntMatrix;
use crate::number_ring::{QuotientRing, RingElement, DEFAULT_ENUMERATION_BOUND};
use crate::serde_int;
use crate::skew::SkewPoly;
use crate::spacetime::{
    coset_decode_label, coset_encode, matrix_rep, min_det_sample, CosetEncoding, MinDetReport,
    SampleOptions, SpaceTimeMatrix,
};

#[derive(Parser, Debug)]
#[command(
    name = "skewlat",
    version,
    about = "Skew-polynomial codes and their Construction A lattices"
)]
pub struct Cli {
    /// Algebra configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random sampling.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Cap on the size of any exhaustive enumeration.
    #[arg(long, global = true)]
    pub bound: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Monic right divisors of x^n - u of a given degree.
    Divisors {
        #[arg(long)]
        degree: usize,
    },
    /// Parameters of the code generated by the configured generator.
    Code {
        /// Generator as a JSON list of coefficient lists, e.g. [[1,1],[1]].
        #[arg(long)]
        generator: Option<String>,
    },
    /// The Euclidean dual code (needs u^2 = 1).
    Dual {
        #[arg(long)]
        generator: Option<String>,
    },
    /// Construction A basis and Gram matrix.
    Lattice {
        #[arg(long)]
        generator: Option<String>,
    },
    /// The matrix M(a) of an order element given as n x n rows.
    Stmatrix {
        #[arg(long)]
        element: String,
    },
    /// Minimum |N(det)| over differences of sampled lattice points.
    Mindet {
        #[arg(long)]
        generator: Option<String>,
        /// Lattice coordinates are drawn from [-b, b].
        #[arg(long, default_value_t = 1)]
        coeff_bound: u32,
        /// Fail instead of falling back to random sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Pairs drawn in random mode.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Lattice point for a message and an offset in p Lambda.
    CosetEncode {
        #[arg(long)]
        generator: Option<String>,
        /// k ring elements, e.g. [[1]].
        #[arg(long)]
        message: String,
        /// N = n^2 integers, scaled by p.
        #[arg(long)]
        offset: String,
    },
    /// Codeword label and offset of a lattice point.
    CosetDecode {
        #[arg(long)]
        generator: Option<String>,
        /// n x n rows, e.g. [[1,1],[1,0]].
        #[arg(long)]
        point: String,
    },
    /// Re-derive the bundled worked examples.
    VerifyExamples,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorsOutput {
    pub n: usize,
    pub u: RingElement,
    pub degree: usize,
    pub divisors: Vec<SkewPoly>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeOutput {
    pub code: CodeDescriptor,
    /// `|R|^k`.
    pub size: String,
    /// `None` when `u^2 != 1`.
    pub self_dual: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualOutput {
    pub dual_generator: SkewPoly,
    pub dual: CodeDescriptor,
    pub self_dual: bool,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeOutput {
    pub basis: IntMatrix,
    pub gram: IntMatrix,
    #[serde(with = "serde_int")]
    pub det: BigInt,
    #[serde(with = "serde_int")]
    pub index: BigInt,
    #[serde(with = "serde_int")]
    pub lambda_det: BigInt,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StMatrixOutput {
    pub matrix: SpaceTimeMatrix,
    #[serde(with = "serde_int::vec")]
    pub det: Vec<BigInt>,
    #[serde(with = "serde_int")]
    pub det_norm: BigInt,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyOutput {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorOutput {
    pub code: String,
    pub message: String,
}

struct Ctx {
    json: bool,
    bound: u128,
    seed: u64,
    config: Option<Config>,
}

enum Failure {
    Usage(&'static str, String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.code(), e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, raw: &str) -> Outcome<T> {
    serde_json::from_str(raw).map_err(|e| Failure::Usage("USAGE", format!("--{flag}: {e}")))
}

impl Ctx {
    fn config(&self) -> Outcome<&Config> {
        self.config
            .as_ref()
            .ok_or_else(|| Failure::Usage("USAGE", "this command needs --config PATH".into()))
    }

    fn ring(&self, err: &mut dyn Write) -> Outcome<QuotientRing> {
        let ring = self.config()?.ring()?;
        for w in ring.warnings() {
            let _ = writeln!(err, "warning: {w}");
        }
        Ok(ring)
    }

    fn code(&self, ring: &QuotientRing, flag: &Option<String>) -> Outcome<ConstacyclicCode> {
        let rows: Vec<Vec<i64>> = match flag {
            Some(raw) => parse_json("generator", raw)?,
            None => self.config()?.generator.clone().ok_or_else(|| {
                Failure::Usage(
                    "USAGE",
                    "no generator: pass --generator or set it in the config".into(),
                )
            })?,
        };
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let g = ring.skew().poly(&refs);
        Ok(ConstacyclicCode::for_algebra(ring, &g)?)
    }
}

fn element_rows(ring: &QuotientRing, flag: &str, raw: &str) -> Outcome<OrderElement> {
    let rows: Vec<Vec<i64>> = parse_json(flag, raw)?;
    let n = ring.degree();
    if rows.len() != n || rows.iter().any(|r| r.len() > n) {
        return Err(Failure::Usage(
            "USAGE",
            format!("--{flag}: expected {n} rows of at most {n} integers"),
        ));
    }
    let padded: Vec<Vec<i64>> = rows
        .into_iter()
        .map(|mut r| {
            r.resize(n, 0);
            r
        })
        .collect();
    Ok(OrderElement::from_int_rows(&padded))
}

fn emit<T: Serialize>(
    ctx: &Ctx,
    out: &mut dyn Write,
    value: &T,
    table: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) {
    let _ = if ctx.json {
        serde_json::to_writer_pretty(&mut *out, value)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out))
    } else {
        table(out)
    };
}

fn fmt_matrix(m: &IntMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>5}")).collect();
            format!("  [{} ]", cells.join(""))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn fmt_k(a: &[BigInt]) -> String {
    let parts: Vec<String> = a.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn fmt_order(a: &OrderElement) -> String {
    serde_json::to_string(a).unwrap_or_default()
}

fn execute(cli: &Cli, ctx: &Ctx, out: &mut dyn Write, err: &mut dyn Write) -> Outcome<i32> {
    match &cli.command {
        Command::Divisors { degree } => {
            let ring = ctx.ring(err)?;
            let n = ring.degree();
            let u = ring.from_int(ring.spec().u);
            let divisors = ring
                .skew()
                .monic_right_divisors(n, &u, *degree, ctx.bound)?;
            let o = DivisorsOutput {
                n,
                u,
                degree: *degree,
                divisors,
            };
            emit(ctx, out, &o, |w| {
                writeln!(
                    w,
                    "monic right divisors of x^{} - ({}) of degree {}: {}",
                    o.n,
                    o.u,
                    o.degree,
                    o.divisors.len()
                )?;
                for d in &o.divisors {
                    writeln!(w, "  {d}")?;
                }
                Ok(())
            });
        }
        Command::Code { generator } => {
            let ring = ctx.ring(err)?;
            let code = ctx.code(&ring, generator)?;
            let self_dual = match code.is_self_dual() {
                Ok(b) => Some(b),
                Err(Error::UnsupportedU) => None,
                Err(e) => return Err(e.into()),
            };
            let size = BigInt::from(ring.size())
                .pow(code.dimension() as u32)
                .to_string();
            let o = CodeOutput {
                code: code.descriptor(),
                size,
                self_dual,
            };
            emit(ctx, out, &o, |w| {
                writeln!(w, "length     {}", o.code.n)?;
                writeln!(w, "dimension  {}", o.code.k)?;
                writeln!(w, "u          {}", o.code.u)?;
                writeln!(w, "g          {}", o.code.g)?;
                writeln!(w, "h          {}", o.code.h)?;
                writeln!(w, "codewords  {}", o.size)?;
                match o.self_dual {
                    Some(b) => writeln!(w, "self-dual  {b}"),
                    None => writeln!(w, "self-dual  n/a (u^2 != 1)"),
                }
            });
        }
        Command::Dual { generator } => {
            let ring = ctx.ring(err)?;
            let u = ring.from_int(ring.spec().u);
            if ring.mul(&u, &u) != ring.one() {
                return Err(Error::UnsupportedU.into());
            }
            let code = ctx.code(&ring, generator)?;
            let dual = code.dual()?;
            let o = DualOutput {
                dual_generator: code.dual_generator()?,
                dual: dual.descriptor(),
                self_dual: dual.same_code(&code)?,
            };
            emit(ctx, out, &o, |w| {
                writeln!(w, "dual generator  {}", o.dual_generator)?;
                writeln!(w, "monic generator {}", o.dual.g)?;
                writeln!(w, "dimension       {}", o.dual.k)?;
                writeln!(w, "self-dual       {}", o.self_dual)
            });
        }
        Command::Lattice { generator } => {
            let ring = ctx.ring(err)?;
            let code = ctx.code(&ring, generator)?;
            let l = construction_a(&code)?;
            let lambda_det = TraceForm::standard(&ring).lambda_gram(&ring)?.det();
            let o = LatticeOutput {
                basis: l.basis,
                gram: l.gram,
                det: l.det,
                index: l.index_in_lambda,
                lambda_det,
            };
            emit(ctx, out, &o, |w| {
                writeln!(
                    w,
                    "basis (columns, Hermite normal form):\n{}",
                    fmt_matrix(&o.basis)
                )?;
                writeln!(w, "gram:\n{}", fmt_matrix(&o.gram))?;
                writeln!(w, "det(gram)          {}", o.det)?;
                writeln!(w, "index in Lambda    {}", o.index)?;
                writeln!(w, "det(gram(Lambda))  {}", o.lambda_det)
            });
        }
        Command::Stmatrix { element } => {
            let ring = ctx.ring(err)?;
            let a = element_rows(&ring, "element", element)?;
            let z = ring.integers();
            let matrix = matrix_rep(&ring, &a);
            let det = matrix.det(z);
            let det_norm = z.norm(&det);
            let o = StMatrixOutput {
                matrix,
                det,
                det_norm,
            };
            emit(ctx, out, &o, |w| {
                for r in 0..o.matrix.size() {
                    let cells: Vec<String> = (0..o.matrix.size())
                        .map(|c| format!("{:>12}", fmt_k(o.matrix.entry(r, c))))
                        .collect();
                    writeln!(w, "  {}", cells.join(" "))?;
                }
                writeln!(w, "det       {}", fmt_k(&o.det))?;
                writeln!(w, "N(det)    {}", o.det_norm)
            });
        }
        Command::Mindet {
            generator,
            coeff_bound,
            exhaustive,
            samples,
        } => {
            let ring = ctx.ring(err)?;
            let code = ctx.code(&ring, generator)?;
            let l = construction_a(&code)?;
            let opts = SampleOptions {
                bound: ctx.bound,
                seed: ctx.seed,
                random_pairs: *samples,
                force_exhaustive: *exhaustive,
            };
            let o: MinDetReport = min_det_sample(&ring, &l.basis, *coeff_bound, &opts)?;
            emit(ctx, out, &o, |w| {
                writeln!(w, "mode          {:?}", o.mode)?;
                writeln!(w, "differences   {}", o.evaluated)?;
                writeln!(w, "min |N(det)|  {}", o.min_abs_norm)?;
                writeln!(w, "witness       {}", fmt_order(&o.witness))
            });
        }
        Command::CosetEncode {
            generator,
            message,
            offset,
        } => {
            let ring = ctx.ring(err)?;
            let code = ctx.code(&ring, generator)?;
            let msg: Vec<Vec<i64>> = parse_json("message", message)?;
            let msg: Vec<RingElement> = msg.iter().map(|c| ring.element(c)).collect();
            let offset: Vec<i64> = parse_json("offset", offset)?;
            let offset: Vec<BigInt> = offset.into_iter().map(BigInt::from).collect();
            let o = coset_encode(&code, &msg, &offset)?;
            emit(ctx, out, &o, |w| coset_table(w, &o));
        }
        Command::CosetDecode { generator, point } => {
            let ring = ctx.ring(err)?;
            let code = ctx.code(&ring, generator)?;
            let point = element_rows(&ring, "point", point)?;
            let o = coset_decode_label(&code, &point)?;
            emit(ctx, out, &o, |w| coset_table(w, &o));
        }
        Command::VerifyExamples => {
            let checks = verify_examples();
            let passed = checks.iter().all(|c| c.passed);
            let o = VerifyOutput { passed, checks };
            emit(ctx, out, &o, |w| {
                for c in &o.checks {
                    let mark = if c.passed { "ok  " } else { "FAIL" };
                    writeln!(w, "{mark} {:<9} {:<48} {}", c.example, c.check, c.detail)?;
                }
                let failed = o.checks.iter().filter(|c| !c.passed).count();
                writeln!(w, "{} checks, {} failed", o.checks.len(), failed)
            });
            if !passed {
                let _ = writeln!(err, "verify-examples: at least one check failed");
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn coset_table(w: &mut dyn Write, o: &CosetEncoding) -> std::io::Result<()> {
    let word: Vec<String> = o.codeword.0.iter().map(ToString::to_string).collect();
    writeln!(w, "codeword  ({})", word.join(", "))?;
    writeln!(w, "offset    {}", fmt_order(&o.offset))?;
    writeln!(w, "point     {}", fmt_order(&o.point))
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    let config = match &cli.config {
        Some(path) => match Config::read(path) {
            Ok(c) => Some(c),
            Err(e) => return report(cli.json, err, Failure::from(e)),
        },
        None => None,
    };
    let json = cli.json || config.as_ref().and_then(|c| c.format) == Some(OutputFormat::Json);
    let ctx = Ctx {
        json,
        bound: cli
            .bound
            .or(config.as_ref().and_then(|c| c.bound))
            .unwrap_or(DEFAULT_ENUMERATION_BOUND),
        seed: cli
            .seed
            .or(config.as_ref().and_then(|c| c.seed))
            .unwrap_or(0),
        config,
    };
    match execute(&cli, &ctx, out, err) {
        Ok(code) => code,
        Err(f) => report(json, err, f),
    }
}

fn report(json: bool, err: &mut dyn Write, failure: Failure) -> i32 {
    let (code, message, exit) = match failure {
        Failure::Usage(c, m) => (c.to_string(), m, 2),
        Failure::Domain(e) => (e.code().to_string(), e.to_string(), 1),
    };
    if json {
        let _ = serde_json::to_writer(&mut *err, &ErrorOutput { code, message });
        let _ = writeln!(err);
    } else {
        let _ = writeln!(err, "error[{code}]: {message}");
    }
    exit
}

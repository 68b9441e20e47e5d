//! Argument parsing, dispatch and exit codes.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use upkit_core::components::CharFn;
use upkit_core::params::{packets_containing, weak_packet};
use upkit_core::partition::{classify, enumerate_classes_bounded, ClassPartition, GroupType, DEFAULT_MAX_N};
use upkit_core::springer::weakly_spherical_general;
use upkit_core::Error;

use crate::format::{parse_dual, parse_eps, parse_partition};
use crate::report;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

pub const MAX_N_VAR: &str = "UPKIT_MAX_N";

#[derive(Parser, Debug)]
#[command(name = "upkit", version, about = "Weak Arthur packets, special pieces and Springer data for unipotent classes")]
pub struct Cli {
    /// Indent JSON records.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
pub struct ClassArgs {
    /// B for dual SO(N), C for dual Sp(N).
    #[arg(long)]
    pub dual: String,
    /// Decreasing comma list, `^` for repeats: `5,3,1`, `3^2,1`.
    #[arg(long)]
    pub partition: String,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Every class of a given type and size.
    Classes {
        #[arg(long)]
        dual: String,
        #[arg(long = "N")]
        n: u64,
    },
    /// Component groups, blocks, special piece and dual of one class.
    ClassInfo(ClassArgs),
    /// The weak Arthur packet: one L-packet per member of the special piece.
    WeakPacket {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        z: i8,
        /// Keep only the packet with this `J`, e.g. `{4}`.
        #[arg(long = "J")]
        j: Option<String>,
    },
    /// Packets of the weak packet containing the member labelled by `--eps`.
    Membership {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        z: i8,
    },
    /// γ-sequence, Springer bipartition and tableaux of the good-parity part.
    Springer {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, allow_hyphen_values = true, default_value = "{}")]
        eps: String,
    },
    /// Whether `(O, eps)` is weakly spherical.
    Sphericity {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// Run property suites over all classes with `N ≤ maxN`.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long = "maxN", default_value_t = 8)]
        max_n: u64,
        /// Worker threads; 0 picks the number of CPUs.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(Error),
    /// Records emitted before the failing suite, then the failure itself.
    Verify { records: Vec<Value>, message: String },
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
            Failure::Verify { .. } => EXIT_VERIFY,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "invalid input: {}", m),
            Failure::Domain(e) => write!(f, "{}", e),
            Failure::Verify { message, .. } => write!(f, "verification failed: {}", message),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn max_n_cap(env: Option<String>) -> Result<u64, Failure> {
    match env {
        None => Ok(DEFAULT_MAX_N),
        Some(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("{}={} is not a number", MAX_N_VAR, v))),
    }
}

fn capped(n: u64, cap: u64, what: &str) -> Result<u64, Failure> {
    if n > cap {
        return Err(Failure::Usage(format!("{} = {} exceeds the cap {} ({})", what, n, cap, MAX_N_VAR)));
    }
    Ok(n)
}

fn group(dual: &str, n: u64) -> Result<GroupType, Failure> {
    let s = parse_dual(dual).map_err(Failure::Usage)?;
    GroupType::new(s, n).map_err(|e| Failure::Usage(e.to_string()))
}

fn class(args: &ClassArgs, cap: u64) -> Result<ClassPartition, Failure> {
    let lambda = parse_partition(&args.partition).map_err(Failure::Usage)?;
    let n = capped(lambda.total(), cap, "N")?;
    let gt = group(&args.dual, n)?;
    classify(lambda, gt).map_err(|e| Failure::Usage(e.to_string()))
}

fn eps_of(cp: &ClassPartition, text: &str) -> Result<CharFn, Failure> {
    parse_eps(cp, text).map_err(Failure::Usage)
}

fn parse_set(text: &str) -> Result<Vec<u64>, Failure> {
    let t = text.trim();
    let t = t.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(t);
    let mut v: Vec<u64> = t
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Failure::Usage(format!("bad set member `{}`", x))))
        .collect::<Result<_, _>>()?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Execute a parsed command, returning the JSON records in output order.
pub fn execute(cmd: &Cmd, env_cap: Option<String>) -> Result<Vec<Value>, Failure> {
    let cap = max_n_cap(env_cap)?;
    let mut out = Vec::new();
    match cmd {
        Cmd::Classes { dual, n } => {
            let gt = group(dual, capped(*n, cap, "N")?)?;
            for cp in enumerate_classes_bounded(gt, cap)? {
                out.push(report::class_line(&cp));
            }
        }
        Cmd::ClassInfo(a) => out.push(report::class_info(&class(a, cap)?)),
        Cmd::WeakPacket { class: a, z, j } => {
            let cp = class(a, cap)?;
            let want = j.as_deref().map(parse_set).transpose()?;
            let rows = weak_packet(&cp, *z)?;
            if let Some(w) = &want {
                if !rows.iter().any(|r| &r.j == w) {
                    return Err(Failure::Domain(match w.iter().find(|c| !rows.iter().any(|r| r.j.contains(c))) {
                        Some(&c) => Error::NotInJ(c),
                        None => Error::NotInPiece,
                    }));
                }
            }
            let rows: Vec<_> = rows.into_iter().filter(|r| want.as_ref().is_none_or(|w| &r.j == w)).collect();
            out.extend(rows.iter().map(report::packet_row));
            let total: usize = rows.iter().map(|r| r.lpacket_size).sum();
            out.push(json!({"packets": rows.len(), "total": total}));
        }
        Cmd::Membership { class: a, eps, z } => {
            let cp = class(a, cap)?;
            let e = eps_of(&cp, eps)?;
            let found = packets_containing(&cp, &e, *z)?;
            for (j, t) in &found {
                out.push(json!({"J": j, "table": report::table(t)}));
            }
            out.push(json!({"eps": report::eps(&e), "packets": found.len()}));
        }
        Cmd::Springer { class: a, eps } => {
            let cp = class(a, cap)?;
            let e = eps_of(&cp, eps)?;
            out.push(report::springer(&cp, &e)?);
        }
        Cmd::Sphericity { class: a, eps } => {
            let cp = class(a, cap)?;
            let e = eps_of(&cp, eps)?;
            let sph = weakly_spherical_general(&cp, &e)?;
            out.push(report::sphericity(&cp, &e, sph));
        }
        Cmd::Verify { suite, max_n, jobs } => {
            let max_n = capped(*max_n, cap, "maxN")?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(*jobs)
                .build()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let reports = pool.install(|| verify::run(*suite, max_n));
            for (s, r) in reports {
                out.extend(r.records);
                if let Some(f) = r.failure {
                    out.push(json!({"suite": s.name(), "status": "FAIL", "failure": f.to_string()}));
                    return Err(Failure::Verify { records: out, message: f.to_string() });
                }
            }
        }
    }
    Ok(out)
}

fn emit(w: &mut dyn Write, v: &Value, pretty: bool) -> std::io::Result<()> {
    let text = if pretty { serde_json::to_string_pretty(v)? } else { serde_json::to_string(v)? };
    writeln!(w, "{}", text)
}

/// Parse, run and print. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{}", text) } else { write!(out, "{}", text) };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli.cmd, std::env::var(MAX_N_VAR).ok()) {
        Ok(records) => {
            for r in &records {
                if emit(out, r, cli.pretty).is_err() {
                    return EXIT_DOMAIN;
                }
            }
            EXIT_OK
        }
        Err(Failure::Verify { records, message }) => {
            for r in &records {
                let _ = emit(out, r, cli.pretty);
            }
            let _ = writeln!(err, "upkit: verification failed: {}", message);
            EXIT_VERIFY
        }
        Err(f) => {
            let _ = writeln!(err, "upkit: {}", f);
            f.code()
        }
    }
}

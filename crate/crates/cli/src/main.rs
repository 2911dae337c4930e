//! `weylcrest`: weights, hulls, faces, characters and chains of highest
//! weight modules from the command line.
//!
//! Exit status: 0 on success, 1 on domain errors (violated preconditions,
//! failed verification), 2 on usage errors.

mod config;
mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weylcrest::chains::find_chain;
use weylcrest::faces::{face_interval, faces_equal, is_positive_weak_face, is_weak_face, FaceQuery};
use weylcrest::hwmodule::{describe_module, module_weights, truncated_character, wt_j, Family, HWModuleDesc};
use weylcrest::polyhedron::{enumerate_faces, hull_of_module, stabilizer_parabolic};
use weylcrest::{CoefficientGroup, Error, RootSystem, SubsetJ, Weight};

use config::{CliConfig, Format, CONFIG_ENV};

/// Malformed input: reported with exit status 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("usage error: {0}")]
    Usage(#[from] UsageError),
    #[error("{0}")]
    Domain(Error),
    #[error("verification failed")]
    Verification,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => CliError::Usage(UsageError(msg)),
            other => CliError::Domain(other),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "weylcrest", version, about = "Exact weight sets, hulls, faces and characters of highest weight modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Root system, e.g. A2, B3, G2 (Bourbaki numbering)
    #[arg(long = "type", global = true, value_name = "TYPE")]
    root_type: Option<String>,
    /// Highest weight in fundamental-weight coordinates, e.g. 1,-1/2
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// verma | simple | parabolic:J | generic:J (J one-based, comma-separated)
    #[arg(long, global = true)]
    family: Option<String>,
    /// Truncation depth: largest height of lambda - mu [default: 8]
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Coefficient group: int | rat | real | scaled:a
    #[arg(long, global = true)]
    coeff: Option<String>,
    /// Search bound on coefficient totals for face verdicts [default: 6]
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// json | text
    #[arg(long, global = true)]
    format: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Module descriptor: J_lambda, J(V) and whether the weight formula applies
    Describe,
    /// Weights down to the given depth, each with multiplicity 1
    Weights,
    /// Vertices, cone generators and stabilizer of the convex hull of the weights
    Hull,
    /// List the faces of the hull, or test one slice with --j
    Faces {
        /// Test whether wt_J (J one-based, `none` for the empty set) is a weak face
        #[arg(long)]
        j: Option<String>,
        /// Test for a positive weak face instead
        #[arg(long, requires = "j")]
        positive: bool,
    },
    /// Decide whether wt_J and wt_J' coincide
    FaceEq {
        #[arg(long)]
        j: String,
        #[arg(long = "j2", value_name = "J'")]
        j2: String,
    },
    /// Truncated formal character with multiplicities
    Character,
    /// Saturated chain of weights from mu' down to mu
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long = "mu-prime", allow_hyphen_values = true)]
        mu_prime: String,
    },
    /// Run the oracle cross-checks and report each suite
    Verify {
        /// Largest rank included
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
    },
}

fn settings(common: &Common) -> Result<CliConfig, UsageError> {
    let mut cfg = CliConfig::default();
    if let Some(path) = std::env::var_os(CONFIG_ENV).filter(|p| !p.is_empty()) {
        cfg.load_file(&PathBuf::from(path))?;
    }
    let pairs = [
        ("type", &common.root_type),
        ("lambda", &common.lambda),
        ("family", &common.family),
        ("coeff", &common.coeff),
        ("format", &common.format),
    ];
    for (key, value) in pairs {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if let Some(d) = common.depth {
        cfg.depth = d;
    }
    if let Some(b) = common.bound {
        cfg.bound = b;
    }
    Ok(cfg)
}

fn root_system(cfg: &CliConfig) -> Result<RootSystem, CliError> {
    let label = cfg
        .root_type
        .as_deref()
        .ok_or_else(|| UsageError("--type is required".into()))?;
    RootSystem::from_label(label).map_err(|e| UsageError(e.to_string()).into())
}

fn parse_weight(rs: &RootSystem, s: &str, flag: &str) -> Result<Weight, CliError> {
    let w = Weight::parse(s).map_err(|e| UsageError(format!("{flag}: {e}")))?;
    if w.rank() != rs.rank() {
        return Err(UsageError(format!("{flag} has {} coordinates; {} needs {}", w.rank(), rs.label(), rs.rank())).into());
    }
    Ok(w)
}

fn parse_subset(rs: &RootSystem, s: &str) -> Result<SubsetJ, CliError> {
    let s = s.trim();
    if s == "none" || s.is_empty() {
        return Ok(SubsetJ::empty());
    }
    let mut j = SubsetJ::empty();
    for part in s.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("bad index {part:?} in {s:?}")))?;
        if i == 0 || i > rs.rank() {
            return Err(UsageError(format!("index {i} outside 1..={}", rs.rank())).into());
        }
        j = j.with(i - 1);
    }
    Ok(j)
}

fn module(cfg: &CliConfig) -> Result<(RootSystem, HWModuleDesc), CliError> {
    let rs = root_system(cfg)?;
    let lambda = cfg
        .lambda
        .as_deref()
        .ok_or_else(|| UsageError("--lambda is required".into()))?;
    let lambda = parse_weight(&rs, lambda, "--lambda")?;
    let family = Family::parse(&cfg.family, rs.rank())?;
    let desc = describe_module(&rs, &lambda, family)?;
    Ok((rs, desc))
}

fn run(cli: &Cli, cfg: &CliConfig) -> Result<Value, CliError> {
    match &cli.command {
        Command::Describe => {
            let (_, desc) = module(cfg)?;
            Ok(desc.to_json())
        }
        Command::Weights => {
            let (rs, desc) = module(cfg)?;
            let ws = module_weights(&rs, &desc, cfg.depth)?;
            Ok(ws.iter().map(|w| json!({ "weight": w.to_json(), "multiplicity": 1 })).collect())
        }
        Command::Character => {
            let (rs, desc) = module(cfg)?;
            let ch = truncated_character(&rs, &desc, cfg.depth)?;
            Ok(ch
                .terms
                .iter()
                .map(|(w, m)| json!({ "weight": w.to_json(), "multiplicity": m.to_string() }))
                .collect())
        }
        Command::Hull => {
            let (rs, desc) = module(cfg)?;
            let hull = hull_of_module(&rs, &desc)?;
            let stab = stabilizer_parabolic(&rs, &desc)?;
            Ok(hull.to_json(&rs, stab))
        }
        Command::Faces { j: None, .. } => {
            let (rs, desc) = module(cfg)?;
            Ok(enumerate_faces(&rs, &desc)?.iter().map(|f| f.to_json()).collect())
        }
        Command::Faces { j: Some(j), positive } => {
            let (rs, desc) = module(cfg)?;
            let j = parse_subset(&rs, j)?;
            let coeff = CoefficientGroup::parse(&cfg.coeff)?;
            let x = module_weights(&rs, &desc, cfg.depth)?;
            let y = wt_j(&rs, &desc, j, cfg.depth)?.filter(|w| x.contains(w));
            let query = FaceQuery::from_sets(&x, &y, coeff, cfg.bound)?;
            let verdict = if *positive {
                is_positive_weak_face(&query)?
            } else {
                is_weak_face(&query)?
            };
            Ok(verdict.to_json())
        }
        Command::FaceEq { j, j2 } => {
            let (rs, desc) = module(cfg)?;
            let (j, j2) = (parse_subset(&rs, j)?, parse_subset(&rs, j2)?);
            let result = faces_equal(&rs, &desc, j, j2);
            let a = wt_j(&rs, &desc, j, cfg.depth)?;
            let b = wt_j(&rs, &desc, j2, cfg.depth)?;
            let witness = a
                .iter()
                .find(|w| !b.contains(w))
                .or_else(|| b.iter().find(|w| !a.contains(w)));
            if result && witness.is_some() {
                return Err(Error::Internal(format!("{j} and {j2} judged equal but differ")).into());
            }
            let iv = face_interval(&rs, &desc, j);
            let mut out = json!({
                "result": result,
                "bound": cfg.depth,
                "j_min": iv.j_min.one_based(),
                "j_max": iv.j_max.one_based(),
            });
            if let Some(w) = witness {
                out["witness"] = w.to_json();
            }
            Ok(out)
        }
        Command::Chain { mu, mu_prime } => {
            let (rs, desc) = module(cfg)?;
            let mu = parse_weight(&rs, mu, "--mu")?;
            let mu_prime = parse_weight(&rs, mu_prime, "--mu-prime")?;
            Ok(find_chain(&rs, &desc, &mu, &mu_prime, cfg.depth)?.to_json())
        }
        Command::Verify { max_rank } => {
            if *max_rank == 0 || *max_rank > verify::MAX_RANK {
                return Err(UsageError(format!("--max-rank must be in 1..={}", verify::MAX_RANK)).into());
            }
            let (passed, report) = verify::run(*max_rank, cfg.depth, cfg.bound)?;
            emit(cfg.format, &report);
            if passed {
                Ok(Value::Null)
            } else {
                Err(CliError::Verification)
            }
        }
    }
}

fn emit(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
        Format::Text => print!("{}", render::text(v)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = settings(&cli.common)
        .map_err(CliError::from)
        .and_then(|cfg| run(&cli, &cfg).map(|v| (cfg, v)));
    match outcome {
        Ok((cfg, v)) => {
            if !matches!(cli.command, Command::Verify { .. }) {
                emit(cfg.format, &v);
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(e)) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

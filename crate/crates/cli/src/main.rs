//! `arrowalg`: run checks and write verification reports.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or validation error,
//! 3 I/O error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use arrowalg_core::exact::parse_rational;
use arrowalg_core::minimal::write_csv;
use arrowalg_core::{pauli_string_family, suite, verify_relations, Config, EndoF, Error, VerificationReport};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "arrowalg",
    version,
    about = "Clifford algebras from signed permutations, with verification reports"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// TOML file with tolerance and cap overrides [default: $ARROWALG_CONFIG]
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for every random draw
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write the JSON report here
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (breaks byte-identical output)
    #[arg(long, global = true)]
    timing: bool,
    #[arg(long, global = true)]
    orthogonality_tol: Option<f64>,
    #[arg(long, global = true)]
    curvature_tol: Option<f64>,
    #[arg(long, global = true)]
    nullspace_cutoff: Option<f64>,
    /// Finite-difference step for mean curvature
    #[arg(long, global = true)]
    step: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the anticommuting generator family built on 2^p indices
    Gens {
        #[arg(long)]
        p: usize,
        /// Add the extra generator, giving signature (p+1, p)
        #[arg(long)]
        extended: bool,
    },
    /// Compare the twisted group algebra of a shipped family with Cl(p,q)
    Iso {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Invariant subspaces and commutants of the 9×9 endomorphism
    Cosmos {
        #[arg(long, default_value = "2")]
        alpha: String,
        #[arg(long, default_value = "3")]
        beta: String,
        /// Three comma-separated values
        #[arg(long, default_value = "0,0,0")]
        gamma: String,
    },
    /// Mean curvature of S^p(r) × S^q(s) in S^{p+q+1}
    Minimal {
        #[arg(long, default_value_t = 4)]
        p: usize,
        #[arg(long, default_value_t = 4)]
        q: usize,
        /// First radius; defaults to the minimal value √(p/(p+q))
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Write curvature samples as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the full suite and write one aggregate report
    All,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(m) => Failure::Io(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load_config(g: &Global) -> Result<Config, Failure> {
    let path = g
        .config
        .clone()
        .or_else(|| std::env::var_os(Config::ENV_PATH).map(PathBuf::from));
    let mut cfg = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            toml::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
        }
        None => Config::default(),
    };
    if let Some(s) = g.seed {
        cfg.seed = s;
    }
    if let Some(v) = g.orthogonality_tol {
        cfg.orthogonality_tol = v;
    }
    if let Some(v) = g.curvature_tol {
        cfg.curvature_tol = v;
    }
    if let Some(v) = g.nullspace_cutoff {
        cfg.nullspace_cutoff = v;
    }
    if let Some(v) = g.step {
        cfg.step = v;
    }
    cfg.validate().map_err(Failure::Usage)?;
    Ok(cfg)
}

fn parse_gamma(s: &str) -> Result<[arrowalg_core::exact::Q; 3], Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Failure::Usage(format!(
            "--gamma needs three comma-separated values, got {s:?}"
        )));
    }
    let mut out = Vec::with_capacity(3);
    for p in parts {
        out.push(parse_rational(p)?);
    }
    Ok(out.try_into().expect("three values"))
}

fn print_family(p: usize, extended: bool) -> Result<(), Failure> {
    let f = pauli_string_family(p, extended)?;
    let r = verify_relations(&f);
    println!("{} generators on {} indices", f.len(), f.dimension());
    for (label, g) in f.labels().iter().zip(f.gens()) {
        let sq = g.pow(2);
        let square = if sq.is_identity() {
            "+1"
        } else if sq.is_minus_identity() {
            "-1"
        } else {
            "non-central"
        };
        println!("  {label:<4} square {square:<3}  {}", g.cycle_notation());
    }
    match r.signature() {
        Some((a, b)) => println!("signature ({a},{b})"),
        None => println!("signature undefined"),
    }
    Ok(())
}

fn write_report(report: &VerificationReport, out: Option<&Path>) -> Result<(), Failure> {
    print!("{}", report.render_table());
    if let Some(path) = out {
        std::fs::write(path, report.to_json()).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let start = Instant::now();
    let cfg = load_config(&cli.global)?;
    let mut report = match cli.command {
        Command::Gens { p, extended } => {
            print_family(p, extended)?;
            suite::gens_report(p, extended)?
        }
        Command::Iso { p, q } => suite::iso_report(p, q, &cfg).map_err(|e| match e {
            Error::SignatureMismatch { p, q, .. } => Failure::Usage(format!(
                "no shipped family realizes Cl({p},{q}); available shapes are (r,r) and (r+1,r) with 1 <= r <= 8"
            )),
            other => other.into(),
        })?,
        Command::Cosmos { alpha, beta, gamma } => {
            let f = EndoF::new(parse_rational(&alpha)?, parse_rational(&beta)?, parse_gamma(&gamma)?);
            suite::cosmos_report(&f, &cfg)?
        }
        Command::Minimal { p, q, r, samples, csv } => {
            if samples == 0 {
                return Err(Failure::Usage("--samples must be positive".into()));
            }
            let (report, rows) = suite::minimal_report(&cfg, p, q, r, samples)?;
            if let Some(path) = csv {
                let file = std::fs::File::create(&path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                write_csv(&rows, std::io::BufWriter::new(file))?;
            }
            report
        }
        Command::All => suite::run_all(&cfg),
    };
    if cli.global.timing {
        report.wall_time_ms = start.elapsed().as_millis() as u64;
    }
    write_report(&report, cli.global.out.as_deref())?;
    Ok(report.succeeded())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            eprintln!("run `arrowalg --help` for usage");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("i/o error: {m}");
            ExitCode::from(3)
        }
    }
}

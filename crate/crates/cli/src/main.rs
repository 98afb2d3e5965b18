//! `heckeb2`: batch driver for the B₂ affine Hecke classification.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_b2::analysis::RegimeKind;
use hecke_b2::driver::{
    base_params, character_weights, check_regime, classify, ram_correction, transport_module,
    transport_rep, verify_catalog,
};
use hecke_b2::{Error, QCatalog, QParameters, Q};

#[derive(Parser, Debug)]
#[command(
    name = "heckeb2",
    version,
    about = "Classify the principal series of the affine Hecke algebra of type B2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Parameter regime (generic, p-eq-q, p-eq-q2, p2-eq-neg-q2, or a transported
    /// variant such as p-eq-neg-q2).
    #[arg(long, global = true)]
    regime: Option<String>,

    /// Override for p (e.g. `5`, `3/2`, `0+3*i`); re-validated against the regime.
    #[arg(long, global = true, allow_hyphen_values = true)]
    p: Option<String>,

    /// Override for q.
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,

    /// Family parameter of χ_f(v).
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    v: String,

    /// Family parameter of χ_g(u).
    #[arg(long, global = true, default_value = "2", allow_hyphen_values = true)]
    u: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Composition factors of every principal series in the regime's table.
    Classify,
    /// Relations, irreducibility and calibration of every catalog entry, and
    /// the short exact sequences of the decomposition lemma.
    VerifyCatalog {
        /// Test mode: perturb this entry before checking it.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
    /// At p = q: the character missing from the equal-parameter list and the
    /// omitted negated characters.
    RamCorrection,
    /// Every catalog entry as module JSON.
    DumpCatalog,
    /// Weight spaces of M(χ) for a named character.
    Weights {
        /// Character name, e.g. `chi_a` or `-chi_d5`.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

/// Exit codes: 0 all checks pass, 1 mismatch, 2 configuration rejected.
enum Failure {
    Mismatch(String),
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidParameters(_)
            | Error::ExcludedFamilyParameter(_)
            | Error::UnknownLabel(_) => Failure::Config(e.to_string()),
            other => Failure::Mismatch(other.to_string()),
        }
    }
}

struct Config {
    regime: RegimeKind,
    params: QParameters,
    v: Q,
    u: Q,
}

fn parse_scalar(name: &str, s: &str) -> Result<Q, Failure> {
    s.parse::<Q>()
        .map_err(|_| Failure::Config(format!("cannot parse --{name} {s:?}")))
}

fn config(cli: &Cli, default_regime: RegimeKind) -> Result<Config, Failure> {
    let regime = match &cli.regime {
        Some(name) => name.parse::<RegimeKind>()?,
        None => default_regime,
    };
    let defaults = regime.default_params::<Q>();
    let p = match &cli.p {
        Some(s) => parse_scalar("p", s)?,
        None => defaults.p().clone(),
    };
    let q = match &cli.q {
        Some(s) => parse_scalar("q", s)?,
        None => defaults.q().clone(),
    };
    let params = QParameters::new(p, q)?;
    check_regime(&params, regime)?;
    Ok(Config {
        regime,
        params,
        v: parse_scalar("v", &cli.v)?,
        u: parse_scalar("u", &cli.u)?,
    })
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::Mismatch(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let generic = "generic".parse::<RegimeKind>()?;
    match &cli.command {
        Command::Classify => {
            let c = config(cli, generic)?;
            let report = classify(c.regime, &c.params, &c.v, &c.u)?;
            emit(cli, &render::classification(&report, cli.format))?;
            Ok(report.passed())
        }
        Command::VerifyCatalog { corrupt } => {
            let c = config(cli, generic)?;
            let report = verify_catalog(c.regime, &c.params, &c.v, &c.u, corrupt.as_deref())?;
            emit(cli, &render::catalog_report(&report, cli.format))?;
            Ok(report.passed())
        }
        Command::RamCorrection => {
            let c = config(cli, "p-eq-q".parse()?)?;
            if c.regime.name() != "p-eq-q" {
                return Err(Failure::Config(format!(
                    "ram-correction runs at p = q, not in regime {}",
                    c.regime
                )));
            }
            let report = ram_correction(&c.params, &c.v, &c.u)?;
            emit(cli, &render::classification(&report, cli.format))?;
            Ok(report.passed())
        }
        Command::DumpCatalog => {
            let c = config(cli, generic)?;
            let base = base_params(&c.params, c.regime)?;
            let catalog = QCatalog::new(&base, c.regime.base(), c.v.clone(), c.u.clone())?;
            let mut entries = Vec::new();
            for label in catalog.labels() {
                let entry = match (catalog.build(&label)?, c.regime.transport()) {
                    (hecke_b2::catalog::Entry::Module(m), Some(t)) => {
                        hecke_b2::catalog::Entry::Module(transport_module(&m, t, &c.params)?)
                    }
                    (hecke_b2::catalog::Entry::Rep(r), Some(t)) => {
                        hecke_b2::catalog::Entry::Rep(transport_rep(&r, t, &c.params)?)
                    }
                    (e, None) => e,
                };
                entries.push((label, entry));
            }
            emit(cli, &render::catalog_dump(&entries, cli.format))?;
            Ok(true)
        }
        Command::Weights { chi } => {
            let c = config(cli, generic)?;
            let (character, wd) = character_weights(c.regime, &c.params, &c.v, &c.u, chi)?;
            emit(cli, &render::weights(chi, &character, &wd, cli.format))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Mismatch(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

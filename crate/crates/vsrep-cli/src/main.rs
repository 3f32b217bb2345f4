//! Command-line front end for the vsrep toolkit.
//!
//! Subcommands: `diagnose` (decide very-simplicity, emit a JSON report),
//! `heart` (build the GF(2) heart of a permutation group), `catalog`
//! (list/build the built-in examples), and `selftest` (run the independent
//! cross-check suites).
//!
//! Exit codes for `diagnose`: 0 = very simple, 10 = not very simple,
//! 2 = undecidable in the requested mode (minimal-submodule cap overflow),
//! 1 = bad input or usage. Identical invocations produce byte-identical
//! reports except for the wall-time field.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vsrep::catalog::{self, CatalogItem};
use vsrep::heart::heart;
use vsrep::meataxe::MeataxeError;
use vsrep::normalg::{
    very_simple_exact_all, very_simple_exact_seeded, very_simple_randomized, DecisionMode,
    Diagnosis, NormalgError,
};
use vsrep::perm::PermGroup;
use vsrep::rep::Representation;
use vsrep::report::{build_report, InputDescriptor};
use vsrep::selfcheck;

#[derive(Parser)]
#[command(
    name = "vsrep",
    version,
    about = "Decide whether matrix representations over small finite fields are very simple",
    after_help = "Seeds default to the VSREP_SEED environment variable, then 0."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Diagnose a module: very simple, or a classified witness why not
    Diagnose(DiagnoseArgs),
    /// Build the GF(2) heart module of a permutation group
    Heart(HeartArgs),
    /// List or build the built-in example groups and modules
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Run the independent cross-check suites
    Selftest {
        /// Limit the exhaustive-seed oracle to dimension ≤ 3
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Randomized,
}

#[derive(Args)]
struct DiagnoseArgs {
    /// Representation file (JSON); with --heart, a permutation-group file
    rep_file: Option<PathBuf>,
    /// Use a catalog entry instead of a file: NAME [PARAMS]...
    #[arg(long, num_args = 1.., value_name = "NAME|PARAM", conflicts_with = "rep_file")]
    catalog: Option<Vec<String>>,
    /// Treat the input as a permutation group and diagnose its heart
    #[arg(long)]
    heart: bool,
    /// Decision procedure to run
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Seed for tie-breaking draws (default: VSREP_SEED, then 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Trial budget in randomized mode
    #[arg(long, default_value_t = 64)]
    trials: u32,
    /// Sweep every minimal submodule and report all distinct witnesses (exact mode)
    #[arg(long)]
    all_witnesses: bool,
    /// Write the JSON report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HeartArgs {
    /// Permutation-group file (JSON)
    perm_file: Option<PathBuf>,
    /// Use a catalog group instead of a file: NAME [PARAMS]...
    #[arg(long, num_args = 1.., value_name = "NAME|PARAM", conflicts_with = "perm_file")]
    catalog: Option<Vec<String>>,
    /// Write the representation JSON to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the available families
    List,
    /// List the standard cases with their expected verdicts
    Cases,
    /// Build one entry and print it as JSON: NAME [PARAMS]...
    Build {
        name: String,
        params: Vec<u32>,
        /// Write the JSON to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Prints one line to stdout, dying quietly with the conventional SIGPIPE
/// status when the consumer has closed the pipe (e.g. `vsrep catalog list | head`).
fn say(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(141);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(1);
    }
}

macro_rules! say {
    ($($arg:tt)*) => { say(format_args!($($arg)*)) };
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and are not errors; everything
            // else is a usage problem and lands in the parse-error exit code.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Cmd::Diagnose(args) => cmd_diagnose(args),
        Cmd::Heart(args) => cmd_heart(args),
        Cmd::Catalog { cmd } => cmd_catalog(cmd),
        Cmd::Selftest { fast } => Ok(cmd_selftest(fast)),
    }
}

/// Seed resolution: `--seed`, then `VSREP_SEED`, then 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, String> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var("VSREP_SEED") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| format!("VSREP_SEED must be an unsigned integer, got {v:?}")),
        Err(_) => Ok(0),
    }
}

fn parse_catalog_spec(spec: &[String]) -> Result<(String, Vec<u32>), String> {
    let name = spec[0].clone();
    let params = spec[1..]
        .iter()
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| format!("catalog parameter {s:?} is not a small integer"))
        })
        .collect::<Result<Vec<u32>, String>>()?;
    Ok((name, params))
}

fn catalog_label(name: &str, params: &[u32]) -> String {
    if params.is_empty() {
        name.to_string()
    } else {
        let joined: Vec<String> = params.iter().map(|p| p.to_string()).collect();
        format!("{name}({})", joined.join(","))
    }
}

/// Resolves the diagnose input to a representation plus its report descriptor.
fn resolve_diagnose_input(args: &DiagnoseArgs) -> Result<(InputDescriptor, Representation), String> {
    if let Some(spec) = &args.catalog {
        let (name, params) = parse_catalog_spec(spec)?;
        let item = catalog::build(&name, &params).map_err(|e| e.to_string())?;
        let label = catalog_label(&name, &params);
        let rep = match (item, args.heart) {
            (CatalogItem::Group(g), true) => heart(&g).map_err(|e| e.to_string())?.rep().clone(),
            (CatalogItem::Group(_), false) => {
                return Err(format!(
                    "catalog entry {label} is a permutation group; add --heart to diagnose its heart module"
                ))
            }
            (CatalogItem::Rep(r), false) => r,
            (CatalogItem::Rep(_), true) => {
                return Err(format!(
                    "catalog entry {label} is already a linear representation; --heart applies to permutation groups"
                ))
            }
        };
        return Ok((InputDescriptor::catalog(&label, args.heart), rep));
    }
    let path = args
        .rep_file
        .as_ref()
        .ok_or("provide a representation file or --catalog NAME [PARAMS]...")?;
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let rep = if args.heart {
        let group: PermGroup = serde_json::from_slice(&bytes)
            .map_err(|e| format!("{}: not a permutation-group file: {e}", path.display()))?;
        heart(&group).map_err(|e| e.to_string())?.rep().clone()
    } else {
        serde_json::from_slice(&bytes)
            .map_err(|e| format!("{}: not a representation file: {e}", path.display()))?
    };
    Ok((
        InputDescriptor::file(&path.display().to_string(), &bytes, args.heart),
        rep,
    ))
}

fn emit(out: Option<&Path>, payload: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, format!("{payload}\n"))
            .map_err(|e| format!("{}: {e}", path.display())),
        None => {
            say!("{payload}");
            Ok(())
        }
    }
}

fn cmd_diagnose(args: DiagnoseArgs) -> Result<u8, String> {
    let seed = resolve_seed(args.seed)?;
    let (descriptor, rep) = resolve_diagnose_input(&args)?;
    let started = Instant::now();

    let (mode, diagnosis, all): (DecisionMode, Diagnosis, Option<Vec<Diagnosis>>) = match args.mode
    {
        Mode::Exact => {
            let outcome = if args.all_witnesses {
                very_simple_exact_all(&rep, seed).map(|(d, all)| (d, Some(all)))
            } else {
                very_simple_exact_seeded(&rep, seed).map(|d| (d, None))
            };
            match outcome {
                Ok((d, all)) => (DecisionMode::Exact, d, all),
                Err(NormalgError::Meataxe(MeataxeError::MinimalCountExceedsCap {
                    simple_dim,
                    count,
                    cap,
                })) => {
                    eprintln!(
                        "undecidable in exact mode: {count} minimal submodules of dimension \
                         {simple_dim} exceed the cap of {cap}; try --mode randomized"
                    );
                    return Ok(2);
                }
                Err(e) => return Err(e.to_string()),
            }
        }
        Mode::Randomized => {
            if args.all_witnesses {
                return Err("--all-witnesses requires --mode exact".to_string());
            }
            let d = very_simple_randomized(&rep, seed, args.trials);
            (DecisionMode::Randomized { trials: args.trials }, d, None)
        }
    };

    let wall_ms = started.elapsed().as_millis() as u64;
    let report = build_report(descriptor, &rep, mode, seed, &diagnosis, all.as_deref(), wall_ms);
    emit(args.out.as_deref(), &report.to_json())?;
    Ok(if diagnosis.is_very_simple() { 0 } else { 10 })
}

fn cmd_heart(args: HeartArgs) -> Result<u8, String> {
    let group: PermGroup = if let Some(spec) = &args.catalog {
        let (name, params) = parse_catalog_spec(spec)?;
        catalog::build(&name, &params)
            .map_err(|e| e.to_string())?
            .into_group()
            .ok_or_else(|| format!("catalog entry {name} is not a permutation group"))?
    } else {
        let path = args
            .perm_file
            .as_ref()
            .ok_or("provide a permutation-group file or --catalog NAME [PARAMS]...")?;
        let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_slice(&bytes)
            .map_err(|e| format!("{}: not a permutation-group file: {e}", path.display()))?
    };
    let h = heart(&group).map_err(|e| e.to_string())?;
    let json = serde_json::to_string_pretty(h.rep()).map_err(|e| e.to_string())?;
    emit(args.out.as_deref(), &json)?;
    Ok(0)
}

fn cmd_catalog(cmd: CatalogCmd) -> Result<u8, String> {
    match cmd {
        CatalogCmd::List => {
            for f in catalog::families() {
                say!("{:<16} {:<22} {:<24} {}", f.name, f.params, f.output, f.summary);
            }
            Ok(0)
        }
        CatalogCmd::Cases => {
            for case in catalog::standard_cases() {
                let kind = if case.heart { "heart of" } else { "module" };
                say!("{:<18} {:<9} expected: {}", case.label(), kind, case.expected_bucket);
            }
            Ok(0)
        }
        CatalogCmd::Build { name, params, out } => {
            let item = catalog::build(&name, &params).map_err(|e| e.to_string())?;
            let json = match item {
                CatalogItem::Group(g) => serde_json::to_string_pretty(&g),
                CatalogItem::Rep(r) => serde_json::to_string_pretty(&r),
            }
            .map_err(|e| e.to_string())?;
            emit(out.as_deref(), &json)?;
            Ok(0)
        }
    }
}

fn cmd_selftest(fast: bool) -> u8 {
    let outcomes = selfcheck::run_all(!fast);
    let mut all_pass = true;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        say!("{tag}  {:<34} {}", o.name, o.detail);
        all_pass &= o.pass;
    }
    if all_pass {
        say!("selftest: all {} suites passed", outcomes.len());
        0
    } else {
        let failed = outcomes.iter().filter(|o| !o.pass).count();
        say!("selftest: {failed} of {} suites FAILED", outcomes.len());
        1
    }
}

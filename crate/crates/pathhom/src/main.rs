//! Command-line interface: homology of a digraph under an odd-degree
//! operator, induced maps of even-degree operators, and the randomized
//! verification suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pathhom::check::{run_all, CheckConfig, DEFAULT_SEED, DEFAULT_TRIALS};
use pathhom::formats::{parse_diff_element, parse_digraph, parse_field};
use pathhom::report::{HomologyReport, InducedReport};
use pathhom::CliError;
use pathhom_core::{homology_of_complex, induced_map, OmegaComplex, DEFAULT_PATH_CAP};

#[derive(Parser)]
#[command(name = "pathhom", version, about = "Exact path homology of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homology dimensions of the allowed-path complex.
    Homology(HomologyArgs),
    /// Per-degree ranks of the map induced by an even-degree operator.
    Induced(InducedArgs),
    /// Randomized verification of the engine's algebraic laws.
    Check(CheckArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Digraph JSON file.
    #[arg(long)]
    graph: PathBuf,
    /// Odd-degree operator JSON file.
    #[arg(long)]
    alpha: PathBuf,
    /// Degree parameter of the complex.
    #[arg(long, default_value_t = 0)]
    p: i64,
    /// Number of homological degrees to build (reported: 0..max-n-1).
    #[arg(long = "max-n", default_value_t = 6)]
    max_n: u64,
    /// Coefficient field: "rational" or "gf:P" with P an odd prime.
    #[arg(long, default_value = "rational")]
    field: String,
    /// Enumeration cap per degree.
    #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
    cap: usize,
    /// Output format.
    #[arg(long, default_value = "table", value_parser = ["table", "json"])]
    format: String,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Include representative cycles.
    #[arg(long)]
    generators: bool,
    /// Include the boundary matrices in the report.
    #[arg(long = "dump-matrices")]
    dump_matrices: bool,
}

#[derive(Args)]
struct InducedArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Even-degree operator JSON file.
    #[arg(long)]
    beta: PathBuf,
    /// Include matrices over homology generator bases.
    #[arg(long)]
    matrices: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn cmd_homology(args: &HomologyArgs) -> Result<String, CliError> {
    let field = parse_field(&args.common.field)?;
    let graph_text = read_file(&args.common.graph)?;
    let g = parse_digraph(&graph_text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.common.graph.display())))?;
    let alpha_text = read_file(&args.common.alpha)?;
    let alpha = parse_diff_element(&alpha_text, &g, field)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.common.alpha.display())))?;
    if alpha.degree() % 2 == 0 {
        return Err(CliError::Input("alpha must have odd degree".into()));
    }
    if args.common.max_n == 0 {
        return Err(CliError::Input("max-n must be at least 1".into()));
    }
    let complex = OmegaComplex::build(&g, &alpha, args.common.p, args.common.max_n, args.common.cap)?;
    let result = homology_of_complex(&complex, args.generators)?;
    let report = HomologyReport::new(&g, &alpha, &result, Some(&complex), args.dump_matrices);
    Ok(match args.common.format.as_str() {
        "json" => report.to_json(),
        _ => report.to_table(),
    })
}

fn cmd_induced(args: &InducedArgs) -> Result<String, CliError> {
    let field = parse_field(&args.common.field)?;
    let graph_text = read_file(&args.common.graph)?;
    let g = parse_digraph(&graph_text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.common.graph.display())))?;
    let alpha_text = read_file(&args.common.alpha)?;
    let alpha = parse_diff_element(&alpha_text, &g, field)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.common.alpha.display())))?;
    if alpha.degree() % 2 == 0 {
        return Err(CliError::Input("alpha must have odd degree".into()));
    }
    let beta_text = read_file(&args.beta)?;
    let beta = parse_diff_element(&beta_text, &g, field)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.beta.display())))?;
    if beta.degree() % 2 != 0 {
        return Err(CliError::Input("beta must have even degree".into()));
    }
    if args.common.max_n == 0 {
        return Err(CliError::Input("max-n must be at least 1".into()));
    }
    let map = induced_map(
        &g,
        &alpha,
        args.common.p,
        &beta,
        args.common.max_n,
        args.matrices,
        args.common.cap,
    )?;
    let report = InducedReport::new(field, &alpha, &map, args.common.max_n);
    Ok(match args.common.format.as_str() {
        "json" => report.to_json(),
        _ => report.to_table(),
    })
}

fn cmd_check(args: &CheckArgs) -> Result<String, CliError> {
    let cfg = CheckConfig {
        seed: args.seed,
        trials: args.trials,
    };
    let mut out = String::new();
    if args.trials == 0 {
        out.push_str("warning: 0 trials requested; every suite passes vacuously\n");
    }
    let outcomes = run_all(&cfg);
    let mut failed = false;
    for o in &outcomes {
        out.push_str(&format!(
            "{}: trials={} skipped={} failures={}\n",
            o.name,
            o.trials,
            o.skipped,
            o.failures.len()
        ));
        for witness in &o.failures {
            failed = true;
            out.push_str(&format!("  {witness}\n"));
        }
    }
    if failed {
        out.push_str("FAILED\n");
        print!("{out}");
        return Err(CliError::Suite("property suite failed".into()));
    }
    out.push_str(&format!("all suites passed (seed {})\n", args.seed));
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Homology(args) => cmd_homology(args),
        Command::Induced(args) => cmd_induced(args),
        Command::Check(args) => cmd_check(args),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

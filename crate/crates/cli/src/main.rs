use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use pathcycle::discharge::{DischargeError, Discharger};
use pathcycle::factor::{
    brute_force_f_factor, decompose_system, degree_spec_from_terminals, solve, FactorError,
    BRUTE_FORCE_EDGE_LIMIT,
};
use pathcycle::families::{generate, FamilyError, FamilyParams, FAMILY_NAMES};
use pathcycle::graph::{parse_graph, parse_vertex_list, Vertex};
use pathcycle::tutte::{parse_witness, search_certificate, SearchOptions, TutteCertificate, TutteError};
use pathcycle::verify::{
    check_edge_connectivity_at_least, check_regular, check_star_free, check_terminal_set,
    path_system_criterion, PropertyReport, TerminalMode, CRITERION_VERTEX_LIMIT,
};
use pathcycle::{Graph, GraphError, VertexSet};

const FEASIBLE: u8 = 0;
const INFEASIBLE: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(name = "pathcycle", version, about = "Spanning path-cycle systems with prescribed end-vertices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a spanning path-cycle system whose path ends are the terminals.
    Solve(Instance),
    /// Check structural hypotheses of a graph.
    Verify(VerifyArgs),
    /// Produce or replay an infeasibility certificate.
    Certify(CertifyArgs),
    /// Write an instance of a counterexample or random family.
    Generate(GenerateArgs),
    /// Run the discharging check on one pair (S, T).
    Discharge(DischargeArgs),
    /// Decide feasibility by exhaustive edge-subset search.
    Oracle(Instance),
}

#[derive(Args)]
struct Instance {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    terminals: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Distance3,
    Nbhd1,
}

impl From<Mode> for TerminalMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Distance3 => TerminalMode::Distance3,
            Mode::Nbhd1 => TerminalMode::Nbhd1,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_name = "R")]
    regular: Option<usize>,
    #[arg(long, value_name = "K")]
    edge_connectivity: Option<usize>,
    #[arg(long, value_name = "M")]
    star_free: Option<usize>,
    #[arg(long, value_name = "F", requires = "mode")]
    terminals: Option<PathBuf>,
    #[arg(long, value_enum, requires = "terminals")]
    mode: Option<Mode>,
    #[arg(long)]
    path_system_criterion: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("how").required(true).args(["exhaustive", "witness", "s"])))]
struct CertifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    terminals: PathBuf,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, value_name = "F")]
    witness: Option<PathBuf>,
    #[arg(long, value_name = "LIST", requires = "t", allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, value_name = "LIST", requires = "s", allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, value_name = "N", default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_name = "NAME")]
    family: String,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_name = "PREFIX")]
    out: PathBuf,
}

#[derive(Args)]
struct DischargeArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    terminals: PathBuf,
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    s: String,
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    t: String,
    #[arg(long, value_name = "R")]
    r: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Undecided(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => USAGE,
            CliError::Undecided(_) => UNDECIDED,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<FactorError> for CliError {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::BoundExceeded { .. } => CliError::Undecided(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<TutteError> for CliError {
    fn from(e: TutteError) -> Self {
        match e {
            TutteError::BoundExceeded { .. } => CliError::Undecided(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DischargeError> for CliError {
    fn from(e: DischargeError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_terminals(path: &Path, g: &Graph) -> Result<VertexSet, CliError> {
    let w = parse_vertex_list(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    g.check_set(&w)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(w)
}

fn load_instance(inst: &Instance) -> Result<(Graph, VertexSet), CliError> {
    let g = load_graph(&inst.graph)?;
    let w = load_terminals(&inst.terminals, &g)?;
    Ok((g, w))
}

/// Comma-separated decimal indices; the empty string is the empty set.
fn parse_list(text: &str) -> Result<VertexSet, CliError> {
    let mut out: Vec<Vertex> = Vec::new();
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = tok
            .parse()
            .map_err(|_| CliError::Input(format!("bad vertex index {tok:?} in list {text:?}")))?;
        if out.contains(&v) {
            return Err(CliError::Input(format!("vertex {v} listed twice in {text:?}")));
        }
        out.push(v);
    }
    Ok(out.into())
}

fn cmd_solve(args: &Instance) -> Result<u8, CliError> {
    let (g, w) = load_instance(args)?;
    let out = solve(&g, &w)?;
    print!("{out}");
    Ok(if out.is_feasible() { FEASIBLE } else { INFEASIBLE })
}

fn cmd_oracle(args: &Instance) -> Result<u8, CliError> {
    let (g, w) = load_instance(args)?;
    let f = degree_spec_from_terminals(&g, &w)?;
    match brute_force_f_factor(&g, &f, BRUTE_FORCE_EDGE_LIMIT)? {
        Some(factor) => {
            print!("{}", decompose_system(&g, &factor, &w)?);
            Ok(FEASIBLE)
        }
        None => {
            println!("INFEASIBLE");
            Ok(INFEASIBLE)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.graph)?;
    let mut reports: Vec<PropertyReport> = Vec::new();
    if let Some(r) = args.regular {
        reports.push(check_regular(&g, r));
    }
    if let Some(k) = args.edge_connectivity {
        reports.push(check_edge_connectivity_at_least(&g, k));
    }
    if let Some(m) = args.star_free {
        reports.push(check_star_free(&g, m));
    }
    if let (Some(path), Some(mode)) = (&args.terminals, args.mode) {
        let w = load_terminals(path, &g)?;
        reports.push(check_terminal_set(&g, &w, mode.into())?.report);
    }
    if args.path_system_criterion {
        reports.push(path_system_criterion(&g, CRITERION_VERTEX_LIMIT));
    }
    if reports.is_empty() {
        return Err(CliError::Input("verify: no property requested".into()));
    }
    for rep in &reports {
        println!("{rep}");
    }
    Ok(if reports.iter().any(PropertyReport::fails) {
        INFEASIBLE
    } else if reports.iter().any(PropertyReport::is_undecided) {
        UNDECIDED
    } else {
        FEASIBLE
    })
}

fn certificate_code(cert: &TutteCertificate) -> u8 {
    if cert.proves_infeasible() {
        INFEASIBLE
    } else {
        FEASIBLE
    }
}

fn cmd_certify(args: &CertifyArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.graph)?;
    let w = load_terminals(&args.terminals, &g)?;
    let f = degree_spec_from_terminals(&g, &w)?;
    if args.exhaustive {
        let opts = SearchOptions {
            jobs: args.jobs.max(1),
            ..SearchOptions::default()
        };
        return match search_certificate(&g, &f, opts)? {
            Some(cert) => {
                print!("{cert}");
                Ok(INFEASIBLE)
            }
            None => {
                println!("no certificate: delta(S, T) >= 0 for every disjoint S, T");
                Ok(FEASIBLE)
            }
        };
    }
    if let Some(path) = &args.witness {
        let file = parse_witness(&read(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let cert = TutteCertificate::evaluate(&g, &f, file.s.clone(), file.t.clone())?;
        if (file.delta, file.q, &file.odd_components) != (cert.delta, cert.q, &cert.odd_components) {
            return Err(CliError::Input(format!(
                "{}: file states delta {} with {} odd components, replay gives delta {} with {}",
                path.display(),
                file.delta,
                file.q,
                cert.delta,
                cert.q
            )));
        }
        print!("{cert}");
        return Ok(certificate_code(&cert));
    }
    let (s, t) = match (&args.s, &args.t) {
        (Some(s), Some(t)) => (parse_list(s)?, parse_list(t)?),
        _ => return Err(CliError::Input("certify: --s and --t go together".into())),
    };
    let cert = TutteCertificate::evaluate(&g, &f, s, t)?;
    print!("{cert}");
    Ok(certificate_code(&cert))
}

fn write_file(path: PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(&path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_generate(args: &GenerateArgs) -> Result<u8, CliError> {
    let params = FamilyParams {
        r: args.r,
        k: args.k,
        n: args.n,
        m: args.m,
        seed: args.seed,
    };
    if !FAMILY_NAMES.contains(&args.family.as_str()) {
        return Err(CliError::Input(format!(
            "unknown family `{}` (expected one of {})",
            args.family,
            FAMILY_NAMES.join(", ")
        )));
    }
    let inst = match generate(&args.family, params) {
        Ok(inst) => inst,
        Err(e @ FamilyError::Verification { .. }) => {
            eprintln!("error: {e}");
            return Ok(INFEASIBLE);
        }
        Err(e @ FamilyError::BudgetExhausted(_)) => return Err(CliError::Undecided(e.to_string())),
        Err(e) => return Err(CliError::Input(e.to_string())),
    };
    if let Some(dir) = args.out.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    }
    write_file(with_suffix(&args.out, "graph"), &inst.graph_text())?;
    write_file(with_suffix(&args.out, "terminals"), &inst.terminals_text())?;
    let witness = inst.witness_text().map_err(|e| CliError::Input(e.to_string()))?;
    let witness_path = with_suffix(&args.out, "witness");
    match witness {
        Some(text) => write_file(witness_path, &text)?,
        None if witness_path.exists() => {
            fs::remove_file(&witness_path)
                .map_err(|e| CliError::Input(format!("{}: {e}", witness_path.display())))?;
        }
        None => {}
    }
    write_file(with_suffix(&args.out, "names"), &inst.names_text())?;
    Ok(FEASIBLE)
}

fn cmd_discharge(args: &DischargeArgs) -> Result<u8, CliError> {
    let g = load_graph(&args.graph)?;
    let w = load_terminals(&args.terminals, &g)?;
    let s = parse_list(&args.s)?;
    let t = parse_list(&args.t)?;
    let report = Discharger::new(&g, &w, args.r)?.discharge(&s, &t)?;
    print!("{report}");
    Ok(if report.all_pass() { FEASIBLE } else { INFEASIBLE })
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Discharge(a) => cmd_discharge(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            eprintln!("{line}");
            return ExitCode::from(USAGE);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

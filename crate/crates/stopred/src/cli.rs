//! Command-line front end. Every capability is a subcommand with
//! machine-readable output; outputs are UTF-8 with LF line endings, and
//! identical invocations (including seeds) produce byte-identical output.
//!
//! Exit codes: 0 on success, 1 on precondition violations (including bad
//! flags), 2 on budget exhaustion. Diagnostics go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::formats;
use crate::parallel;
use crate::registry;
use stopred_core::bounds::{self, CurveScenario};
use stopred_core::codes::{golay24, CodeError, LinearCode, ParityCheckMatrix};
use stopred_core::designs::{self, BlockSystem, DesignError, PartitionScheme};
use stopred_core::search::{self, CandidatePool, SearchConfig, SearchError};
use stopred_core::stopping::{self, DecoderKind, ErasureProfile, StoppingDistance, StoppingError};

enum CliError {
    User(String),
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::User(_) => 1,
            CliError::Budget(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::User(msg) | CliError::Budget(msg) => msg,
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded => CliError::Budget(e.to_string()),
            _ => CliError::User(e.to_string()),
        }
    }
}

impl From<StoppingError> for CliError {
    fn from(e: StoppingError) -> Self {
        match e {
            StoppingError::BudgetExceeded => CliError::Budget(e.to_string()),
            StoppingError::Code(CodeError::BudgetExceeded) => CliError::Budget(e.to_string()),
            _ => CliError::User(e.to_string()),
        }
    }
}

impl From<DesignError> for CliError {
    fn from(e: DesignError) -> Self {
        match e {
            DesignError::BudgetExceeded => CliError::Budget(e.to_string()),
            _ => CliError::User(e.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded | SearchError::RowCapExceeded { .. } => {
                CliError::Budget(e.to_string())
            }
            _ => CliError::User(e.to_string()),
        }
    }
}

impl From<bounds::BoundError> for CliError {
    fn from(e: bounds::BoundError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<registry::RegistryError> for CliError {
    fn from(e: registry::RegistryError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<formats::FormatError> for CliError {
    fn from(e: formats::FormatError) -> Self {
        CliError::User(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::User(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "stopred",
    version,
    about = "Stopping distances, stopping-redundancy bounds, and Turán / single-exclusion set systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate stopping-redundancy bounds at one parameter point.
    Bounds(BoundsArgs),
    /// Emit MDS bound comparison curves as CSV.
    Curves(CurvesArgs),
    /// Stopping distance of a parity-check matrix file.
    Stopping(StoppingArgs),
    /// Count undecodable erasure patterns by weight.
    Enumerate(EnumerateArgs),
    /// Verify, construct and search block systems.
    #[command(subcommand)]
    Design(DesignCommand),
    /// Greedy search for a short parity-check matrix with maximum stopping
    /// distance.
    Search(SearchArgs),
    /// Build, validate and report the extended binary Golay code.
    Golay(GolayArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 2)]
    q: u32,
    /// Redundancy (dual dimension); defaults to d - 1, the MDS value.
    #[arg(long)]
    r: Option<usize>,
    /// Partition counts for the MDS family bounds; all admissible l are
    /// swept for the best bound regardless.
    #[arg(long)]
    l: Vec<usize>,
    /// Include the MDS-specific bounds.
    #[arg(long)]
    mds: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Args)]
struct CurvesArgs {
    #[arg(long, value_enum)]
    scenario: ScenarioKind,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    rate: Option<f64>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n_from: usize,
    #[arg(long)]
    n_to: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScenarioKind {
    FixedD,
    FixedRate,
    FixedK,
}

#[derive(Args)]
struct StoppingArgs {
    /// Parity-check matrix in the matrix text format.
    #[arg(long)]
    matrix: std::path::PathBuf,
    /// Code the matrix checks; derived from the matrix when absent.
    #[arg(long)]
    code: Option<String>,
    /// Largest stopping-set size to enumerate.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    code: String,
    #[arg(long, value_enum)]
    decoder: DecoderArg,
    /// Matrix file; required for the iterative decoder.
    #[arg(long)]
    matrix: Option<std::path::PathBuf>,
    /// Inclusive weight range, e.g. 8..12.
    #[arg(long)]
    weights: String,
    /// Pattern budget per weight.
    #[arg(long, default_value_t = stopping::ENUMERATION_BUDGET)]
    budget: u64,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecoderArg {
    Iterative,
    Ml,
}

#[derive(Subcommand)]
enum DesignCommand {
    /// Verify a block-system file as a Turán and/or single-exclusion system.
    Verify(DesignVerifyArgs),
    /// Generate one of the block-system constructions.
    Construct(DesignConstructArgs),
    /// Exact minimum block counts by branch-and-bound search.
    Search(DesignSearchArgs),
}

#[derive(Args)]
struct DesignVerifyArgs {
    #[arg(long)]
    file: std::path::PathBuf,
    /// Verify as a Turán (v, K, r)-system with this K (default r + 1).
    #[arg(long)]
    turan: Option<usize>,
    /// Verify the single-exclusion property (default when no flag given).
    #[arg(long)]
    single_exclusion: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructMethod {
    /// Kim–Roush residue family.
    C1,
    /// Frankl–Rödl sliding-residue family.
    C2,
    /// Row-augmented Frankl–Rödl family.
    C3,
    /// Two-clique pair system.
    TwoClique,
    /// Anchored patch of (d-2)-subsets meeting a fixed anchor.
    AnchoredPatch,
    /// Complements of structured triples over three-element bins.
    BinTriples,
}

#[derive(Args)]
struct DesignConstructArgs {
    #[arg(long, value_enum)]
    method: ConstructMethod,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Sweep all residues j (and t for the row-augmented family) and report
    /// the argmin.
    #[arg(long)]
    sweep_j: bool,
    /// Directory for the generated block-system files.
    #[arg(long)]
    out_dir: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct DesignSearchArgs {
    #[arg(long, value_enum)]
    kind: DesignSearchKind,
    #[arg(long)]
    v: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = designs::SEARCH_NODE_BUDGET)]
    budget: u64,
    /// Write the witness system here.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DesignSearchKind {
    Turan,
    SingleExclusion,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    code: String,
    #[arg(long)]
    target_s: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    #[arg(long)]
    max_rows: Option<usize>,
    #[arg(long, default_value_t = 200)]
    stall: usize,
    /// Candidate pool: `full` or `sampled:SIZE`.
    #[arg(long, default_value = "full")]
    pool: String,
    #[arg(long)]
    initial_rows: Option<usize>,
    #[arg(long, default_value_t = 8)]
    replace_candidates: usize,
    /// Write the found matrix here (matrix text format).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Write the JSON-lines iteration log here.
    #[arg(long)]
    log: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct GolayArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

/// Parses and runs a full command line (including the program name);
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            let brief = e.to_string();
            if e.use_stderr() {
                eprint!("{brief}");
                return 1;
            }
            print!("{brief}");
            return 0;
        }
    };
    let outcome = match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Curves(args) => cmd_curves(args),
        Command::Stopping(args) => cmd_stopping(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Design(cmd) => match cmd {
            DesignCommand::Verify(args) => cmd_design_verify(args),
            DesignCommand::Construct(args) => cmd_design_construct(args),
            DesignCommand::Search(args) => cmd_design_search(args),
        },
        Command::Search(args) => cmd_search(args),
        Command::Golay(args) => cmd_golay(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("stopred: {}", e.message());
            e.exit_code()
        }
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct BoundRow {
    name: String,
    value_int: String,
    value_real: f64,
    valid: bool,
}

fn render_bound_rows(rows: &[BoundRow], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Table => {
            let _ = writeln!(
                out,
                "{:<28} {:>16} {:>18} {:>6}",
                "bound", "value", "real", "valid"
            );
            for row in rows {
                let _ = writeln!(
                    out,
                    "{:<28} {:>16} {:>18.6} {:>6}",
                    row.name, row.value_int, row.value_real, row.valid
                );
            }
        }
        OutputFormat::Csv => {
            out.push_str("bound,value,real,valid\n");
            for row in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    row.name, row.value_int, row.value_real, row.valid
                );
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct JsonRow<'a> {
                bound: &'a str,
                value: &'a str,
                real: f64,
                valid: bool,
            }
            let json: Vec<JsonRow> = rows
                .iter()
                .map(|r| JsonRow {
                    bound: &r.name,
                    value: &r.value_int,
                    real: r.value_real,
                    valid: r.valid,
                })
                .collect();
            out = serde_json::to_string_pretty(&json).expect("plain rows serialize");
            out.push('\n');
        }
    }
    out
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), CliError> {
    let (n, d, q) = (args.n, args.d, args.q);
    let r = args.r.unwrap_or(d.saturating_sub(1));
    let mut rows: Vec<BoundRow> = Vec::new();
    let mut push =
        |name: String, value: Result<(f64, stopred_core::BigUint), bounds::BoundError>| match value
        {
            Ok((real, int)) => rows.push(BoundRow {
                name,
                value_int: int.to_string(),
                value_real: real,
                valid: true,
            }),
            Err(_) => rows.push(BoundRow {
                name,
                value_int: String::new(),
                value_real: f64::NAN,
                valid: false,
            }),
        };
    let as_pair = |v: Result<stopred_core::BigUint, bounds::BoundError>| {
        v.map(|int| {
            let real = u128::try_from(&int)
                .map(|v| v as f64)
                .unwrap_or(f64::INFINITY);
            (real, int)
        })
    };
    if q == 2 {
        push(
            "combination".into(),
            as_pair(bounds::combination_bound(r, d)),
        );
        push(
            "odd_combination".into(),
            as_pair(bounds::odd_combination_bound(r, d)),
        );
    }
    push(
        "qary_combination".into(),
        as_pair(bounds::qary_combination_bound(r, d, q)),
    );
    push(
        "probabilistic_threshold".into(),
        as_pair(bounds::probabilistic_row_threshold(n, d, q).map(stopred_core::BigUint::from)),
    );
    push(
        "probabilistic".into(),
        as_pair(bounds::probabilistic_bound(n, d, q, r)),
    );
    push(
        "entropy_closed_form".into(),
        bounds::entropy_closed_form(n, d, q, r),
    );
    push(
        "simple_closed_form".into(),
        bounds::simple_closed_form(n, d, q, r),
    );
    if args.mds {
        push("turan_lower".into(), bounds::mds_turan_lower(n, d));
        push(
            "schwartz_vardy_upper".into(),
            bounds::mds_support_bracket(n, d).map(|b| (b.upper_real, b.upper_int)),
        );
        for &l in &args.l {
            push(
                format!("kim_roush[l={l}]"),
                bounds::kim_roush_bound(n, d, l),
            );
            push(
                format!("kim_roush_refined[l={l}]"),
                d.checked_sub(2)
                    .ok_or(bounds::BoundError::Precondition("d too small"))
                    .and_then(|r2| bounds::kim_roush_refined_bound(n, r2, l)),
            );
            push(
                format!("frankl_rodl[l={l}]"),
                bounds::frankl_rodl_bound(n, d, l),
            );
            push(
                format!("frankl_rodl_piecewise[l={l}]"),
                bounds::frankl_rodl_piecewise_bound(n, d, l),
            );
        }
        if let Ok(best) = bounds::best_mds_upper(n, d) {
            let label = match best.params.l {
                Some(l) => format!("best_upper[{} l={l}]", best.name),
                None => format!("best_upper[{}]", best.name),
            };
            push(label, Ok((best.value_real, best.value_int)));
        }
    }
    print!("{}", render_bound_rows(&rows, args.format));
    if args.mds && args.format == OutputFormat::Table {
        // Reference brackets on the limit density t(r+1, r), reporting only.
        println!();
        println!("t(r+1,r) brackets: r  lower  upper");
        for row in bounds::turan_density_table() {
            println!(
                "                   {}  {} ({:.5})  {} ({:.5})",
                row.r, row.lower_expr, row.lower, row.upper_expr, row.upper
            );
        }
        let (lo, hi) = bounds::TURAN_DENSITY_ASYMPTOTIC;
        println!("                   asymptotic: {lo} .. {hi}");
    }
    Ok(())
}

fn cmd_curves(args: CurvesArgs) -> Result<(), CliError> {
    let scenario = match args.scenario {
        ScenarioKind::FixedD => CurveScenario::FixedD {
            d: args
                .d
                .ok_or_else(|| CliError::User("fixed-d needs --d".into()))?,
        },
        ScenarioKind::FixedRate => CurveScenario::FixedRate {
            rate: args
                .rate
                .ok_or_else(|| CliError::User("fixed-rate needs --rate".into()))?,
        },
        ScenarioKind::FixedK => CurveScenario::FixedK {
            k: args
                .k
                .ok_or_else(|| CliError::User("fixed-k needs --k".into()))?,
        },
    };
    if args.n_from > args.n_to {
        return Err(CliError::User("empty length range".into()));
    }
    let rows = bounds::mds_curve_rows(scenario, args.n_from..=args.n_to);
    emit(args.out.as_deref(), &formats::write_curves_csv(&rows))
}

fn load_matrix_with_code(
    matrix_path: &std::path::Path,
    code_ref: Option<&str>,
) -> Result<(LinearCode, ParityCheckMatrix), CliError> {
    let text = std::fs::read_to_string(matrix_path)?;
    let matrix = formats::parse_matrix(&text)?;
    let code = match code_ref {
        Some(spec) => registry::resolve_code(spec)?,
        None => {
            // The code the matrix checks: generated by the null space.
            LinearCode::new(matrix.null_space()).map_err(|_| {
                CliError::User("matrix has full column rank; it checks only the zero code".into())
            })?
        }
    };
    let h = ParityCheckMatrix::for_code(matrix, &code)?;
    Ok((code, h))
}

fn cmd_stopping(args: StoppingArgs) -> Result<(), CliError> {
    let (code, h) = load_matrix_with_code(&args.matrix, args.code.as_deref())?;
    let cap = args.cap.unwrap_or(h.cols());
    let result = stopping::stopping_distance_capped(&h, cap)?;
    println!(
        "matrix: {} rows x {} cols over GF({})",
        h.rows(),
        h.cols(),
        code.q()
    );
    match result {
        StoppingDistance::Distance(s) => println!("stopping_distance: {s}"),
        StoppingDistance::NoStoppingSet => println!("stopping_distance: none"),
    }
    Ok(())
}

fn parse_weight_range(spec: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = spec
        .split_once("..")
        .ok_or_else(|| CliError::User("weight range must look like a..b".into()))?;
    let lo = a
        .trim()
        .parse()
        .map_err(|_| CliError::User(format!("bad weight {a:?}")))?;
    let hi = b
        .trim()
        .parse()
        .map_err(|_| CliError::User(format!("bad weight {b:?}")))?;
    if lo > hi {
        return Err(CliError::User("empty weight range".into()));
    }
    Ok((lo, hi))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let code = registry::resolve_code(&args.code)?;
    let (lo, hi) = parse_weight_range(&args.weights)?;
    if hi > code.n() {
        return Err(CliError::User("weights exceed the code length".into()));
    }
    let (counter, decoder, matrix_id) = match args.decoder {
        DecoderArg::Ml => {
            let counter = match &args.matrix {
                Some(path) => {
                    let (_, h) = load_matrix_with_code(path, Some(&args.code))?;
                    stopping::ErasureCounter::ml_with_matrix(&h)
                }
                None => stopping::ErasureCounter::ml(&code)?,
            };
            (counter, DecoderKind::Ml, format!("{}/ml", args.code))
        }
        DecoderArg::Iterative => {
            let path = args
                .matrix
                .as_ref()
                .ok_or_else(|| CliError::User("the iterative decoder needs --matrix".into()))?;
            let (_, h) = load_matrix_with_code(path, Some(&args.code))?;
            (
                stopping::ErasureCounter::iterative(&h)?,
                DecoderKind::Iterative,
                format!("{}/iterative/{}", args.code, path.display()),
            )
        }
    };
    let mut weights = std::collections::BTreeMap::new();
    for w in lo..=hi {
        let total = counter
            .pattern_count(w)
            .ok_or_else(|| CliError::Budget("pattern count overflows".into()))?;
        if total > args.budget {
            return Err(CliError::Budget(format!(
                "weight {w} has {total} patterns, over the budget {}",
                args.budget
            )));
        }
        let count = parallel::count_undecodable_chunked(&counter, w)
            .ok_or_else(|| CliError::Budget("pattern count overflows".into()))?;
        weights.insert(w, count);
    }
    let profile = ErasureProfile {
        weights,
        decoder,
        matrix_id,
    };
    emit(
        args.out.as_deref(),
        &formats::write_profile_csv(&profile, code.n()),
    )
}

fn cmd_design_verify(args: DesignVerifyArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.file)?;
    let system = formats::parse_block_system(&text)?;
    println!(
        "system: v={} r={} blocks={}",
        system.v(),
        system.r(),
        system.len()
    );
    let report = |label: &str, v: designs::Verification| match v {
        designs::Verification::Valid => println!("{label}: valid"),
        designs::Verification::FirstUncovered(witness) => {
            let w: Vec<String> = witness.iter().map(usize::to_string).collect();
            println!("{label}: INVALID, first uncovered set {{{}}}", w.join(" "));
        }
    };
    let both = !args.single_exclusion && args.turan.is_none();
    if let Some(k) = args.turan {
        report(
            &format!("turan(v,{k},{})", system.r()),
            designs::verify_turan(&system, k)?,
        );
    } else if both {
        let k = system.r() + 1;
        report(
            &format!("turan(v,{k},{})", system.r()),
            designs::verify_turan(&system, k)?,
        );
    }
    if args.single_exclusion || both {
        report(
            "single_exclusion",
            designs::verify_single_exclusion(&system)?,
        );
    }
    Ok(())
}

struct GeneratedSystem {
    label: String,
    file_stem: String,
    system: BlockSystem,
}

fn cmd_design_construct(args: DesignConstructArgs) -> Result<(), CliError> {
    let n = args.n;
    let need =
        |v: Option<usize>, what: &str| v.ok_or_else(|| CliError::User(format!("needs --{what}")));
    let mut generated: Vec<GeneratedSystem> = Vec::new();
    match args.method {
        ConstructMethod::C1 | ConstructMethod::C2 | ConstructMethod::C3 => {
            let r = need(args.r, "r")?;
            let l = need(args.l, "l")?;
            let scheme = PartitionScheme::residue_classes(n, l)?;
            let js: Vec<usize> = if args.sweep_j {
                (0..l).collect()
            } else {
                vec![need(args.j, "j")?]
            };
            for j in js {
                match args.method {
                    ConstructMethod::C1 => generated.push(GeneratedSystem {
                        label: format!("c1 n={n} r={r} l={l} j={j}"),
                        file_stem: format!("c1_n{n}_r{r}_l{l}_j{j}"),
                        system: designs::kim_roush_blocks(r, j, &scheme)?,
                    }),
                    ConstructMethod::C2 => generated.push(GeneratedSystem {
                        label: format!("c2 n={n} r={r} l={l} j={j}"),
                        file_stem: format!("c2_n{n}_r{r}_l{l}_j{j}"),
                        system: designs::frankl_rodl_blocks(r, j, &scheme)?,
                    }),
                    ConstructMethod::C3 => {
                        let ts: Vec<usize> = if args.sweep_j {
                            (0..n / l).collect()
                        } else {
                            vec![need(args.t, "t")?]
                        };
                        for t in ts {
                            generated.push(GeneratedSystem {
                                label: format!("c3 n={n} r={r} l={l} j={j} t={t}"),
                                file_stem: format!("c3_n{n}_r{r}_l{l}_j{j}_t{t}"),
                                system: designs::row_augmented_blocks(r, j, t, &scheme)?,
                            });
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
        ConstructMethod::TwoClique => generated.push(GeneratedSystem {
            label: format!("two-clique n={n}"),
            file_stem: format!("two_clique_n{n}"),
            system: designs::two_clique_construction(n)?,
        }),
        ConstructMethod::AnchoredPatch => {
            let d = need(args.d, "d")?;
            generated.push(GeneratedSystem {
                label: format!("anchored-patch n={n} d={d}"),
                file_stem: format!("anchored_patch_n{n}_d{d}"),
                system: designs::anchored_patch_blocks(n, d)?,
            });
        }
        ConstructMethod::BinTriples => generated.push(GeneratedSystem {
            label: format!("bin-triples n={n}"),
            file_stem: format!("bin_triples_n{n}"),
            system: designs::bin_triple_complements(n)?,
        }),
    }
    let mut best: Option<(usize, &str)> = None;
    for gen in &generated {
        let turan = designs::verify_turan(&gen.system, (gen.system.r() + 1).min(gen.system.v()))?;
        let se = designs::verify_single_exclusion(&gen.system)?;
        println!(
            "{}: blocks={} turan={} single_exclusion={}",
            gen.label,
            gen.system.len(),
            turan.is_valid(),
            se.is_valid()
        );
        if best.is_none() || gen.system.len() < best.expect("checked").0 {
            best = Some((gen.system.len(), &gen.label));
        }
        if let Some(dir) = &args.out_dir {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}.blocks", gen.file_stem));
            std::fs::write(&path, formats::write_block_system(&gen.system))?;
        }
    }
    if let Some((size, label)) = best {
        println!("smallest: {label} with {size} blocks");
    }
    Ok(())
}

fn cmd_design_search(args: DesignSearchArgs) -> Result<(), CliError> {
    let outcome = match args.kind {
        DesignSearchKind::Turan => {
            let k = args
                .k
                .ok_or_else(|| CliError::User("turan search needs --k".into()))?;
            let t = args
                .t
                .ok_or_else(|| CliError::User("turan search needs --t".into()))?;
            let res = designs::turan_number_exact(args.v, k, t, args.budget)?;
            println!("turan_number({}, {k}, {t}) = {}", args.v, res.count);
            res
        }
        DesignSearchKind::SingleExclusion => {
            let r = args
                .r
                .ok_or_else(|| CliError::User("single-exclusion search needs --r".into()))?;
            let res = designs::single_exclusion_number_exact(args.v, r, args.budget)?;
            println!("single_exclusion_number({}, {r}) = {}", args.v, res.count);
            res
        }
    };
    let text = formats::write_block_system(&outcome.blocks);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_pool(spec: &str) -> Result<CandidatePool, CliError> {
    if spec == "full" {
        return Ok(CandidatePool::FullDual);
    }
    if let Some(size) = spec.strip_prefix("sampled:") {
        let size = size
            .parse()
            .map_err(|_| CliError::User(format!("bad pool size {size:?}")))?;
        return Ok(CandidatePool::Sampled(size));
    }
    Err(CliError::User(format!(
        "pool must be `full` or `sampled:SIZE`, got {spec:?}"
    )))
}

fn cmd_search(args: SearchArgs) -> Result<(), CliError> {
    let code = registry::resolve_code(&args.code)?;
    let cfg = SearchConfig {
        seed: args.seed,
        max_rows: args.max_rows,
        max_stall_iterations: args.stall,
        coverage_sizes: None,
        restarts: args.restarts,
        pool: parse_pool(&args.pool)?,
        initial_rows: args.initial_rows,
        replace_candidates: args.replace_candidates,
    };
    let result = search::greedy_pcm_search(&code, args.target_s, &cfg)?;
    println!(
        "rows: {}\nstopping_distance: {}\niterations: {}\nseed: {}",
        result.rows, result.stopping_distance, result.iterations, result.seed
    );
    if let Some(path) = &args.out {
        std::fs::write(path, formats::write_matrix(result.matrix.matrix()))?;
    }
    if let Some(path) = &args.log {
        std::fs::write(path, formats::write_search_log(&result.log))?;
    }
    Ok(())
}

fn cmd_golay(args: GolayArgs) -> Result<(), CliError> {
    let code = golay24();
    let spectrum = code.weight_enumerator(1 << 13).map_err(CliError::from)?;
    let self_dual = code.dual().same_codeword_set(&code);
    match args.format {
        OutputFormat::Table | OutputFormat::Csv => {
            println!(
                "golay24: n={} k={} d={} self_dual={}",
                code.n(),
                code.k(),
                code.min_distance().map_err(CliError::from)?,
                self_dual
            );
            println!("w,A_w");
            for (w, &count) in spectrum.iter().enumerate() {
                if count != 0 {
                    println!("{w},{count}");
                }
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct GolayReport {
                n: usize,
                k: usize,
                d: usize,
                self_dual: bool,
                weight_enumerator: Vec<(usize, u64)>,
            }
            let report = GolayReport {
                n: code.n(),
                k: code.k(),
                d: code.min_distance().map_err(CliError::from)?,
                self_dual,
                weight_enumerator: spectrum
                    .iter()
                    .enumerate()
                    .filter(|&(_, &c)| c != 0)
                    .map(|(w, &c)| (w, c))
                    .collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("plain struct serializes")
            );
        }
    }
    Ok(())
}

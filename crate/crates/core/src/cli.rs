//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input error, 3 validation error, 4 internal error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characteristic::{count_dyads, read_characteristic};
use crate::degree::{graphic_verdict, DegreeSequence};
use crate::dyadic::{dyadicity, expected_dyads, heterophilicity, ub_m10, ub_m11, DyadBounds};
use crate::ensemble::{randomize, EnsembleConfig};
use crate::error::Error;
use crate::graph::{read_edge_list, write_edge_list, Graph, LoadOptions};
use crate::report::{analyze, format_g12, round12};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "richclub", version, about = "Rich-club and dyadic-effect analysis of undirected graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-k rich-club profile normalized against a degree-preserving null ensemble
    Analyze(AnalyzeArgs),
    /// Dyad counts, expectations, dyadicity and heterophilicity for a node attribute
    Dyadic(DyadicArgs),
    /// Upper bounds on m11 and m10 from a degree sequence
    Bounds(BoundsArgs),
    /// Write degree-preserving rewirings of an edge list
    Randomize(RandomizeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RowFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Edge list, one `label label` pair per line
    #[arg(long)]
    input: PathBuf,
    /// Output path without extension, or `-` for standard output
    #[arg(long, default_value = "-")]
    output: String,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
    #[arg(long, default_value_t = 1000)]
    ensemble_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    swaps_per_edge: usize,
    #[arg(long, default_value_t = 100)]
    max_attempt_factor: usize,
    /// Comma-separated degree thresholds (default: one per distinct club)
    #[arg(long, value_delimiter = ',')]
    k_grid: Option<Vec<usize>>,
    #[arg(long)]
    allow_disconnected: bool,
    /// Redraw null replicates until they are connected
    #[arg(long)]
    strict_connected_null: bool,
    /// Worker threads (default: available parallelism)
    #[arg(long, env = "RICHCLUB_THREADS")]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct DyadicArgs {
    #[arg(long)]
    input: PathBuf,
    /// `label<TAB>0|1` per node
    #[arg(long)]
    attributes: PathBuf,
    #[arg(long, default_value = "-")]
    output: String,
    #[arg(long, value_enum, default_value_t = RowFormat::Csv)]
    format: RowFormat,
    #[arg(long)]
    allow_disconnected: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "degrees", "sequence"])))]
#[command(group(ArgGroup::new("sizes").required(true).args(["n1", "sweep"])))]
struct BoundsArgs {
    /// Edge list to take the degree sequence from
    #[arg(long)]
    input: Option<PathBuf>,
    /// File of whitespace-separated degrees
    #[arg(long)]
    degrees: Option<PathBuf>,
    /// Inline degree sequence, e.g. "4 1 1 1 1"
    #[arg(long)]
    sequence: Option<String>,
    /// Club sizes to evaluate (comma-separated)
    #[arg(long, value_delimiter = ',')]
    n1: Option<Vec<usize>>,
    /// Evaluate every n1 in 0..=N
    #[arg(long)]
    sweep: bool,
    /// Reject sequences that no simple graph realizes
    #[arg(long)]
    check_graphic: bool,
    #[arg(long, default_value = "-")]
    output: String,
    #[arg(long, value_enum, default_value_t = RowFormat::Csv)]
    format: RowFormat,
    #[arg(long)]
    allow_disconnected: bool,
}

#[derive(Debug, Args)]
struct RandomizeArgs {
    #[arg(long)]
    input: PathBuf,
    /// Output edge list (`-` for standard output); with --count, files are
    /// named `<stem>-<i>.<ext>`
    #[arg(long, default_value = "-")]
    output: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    swaps_per_edge: usize,
    #[arg(long, default_value_t = 100)]
    max_attempt_factor: usize,
    /// Number of replicates to write
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    allow_disconnected: bool,
    #[arg(long)]
    strict_connected_null: bool,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_)
            | Error::Parse { .. }
            | Error::SelfLoop { .. }
            | Error::DuplicateEdge { .. }
            | Error::Disconnected { .. }
            | Error::NegativeDegree { .. }
            | Error::Attribute(_)
            | Error::CharacteristicSize { .. } => EXIT_INPUT,
            Error::OutOfBounds { .. }
            | Error::UndefinedDensity { .. }
            | Error::NotSwappable { .. }
            | Error::InvalidGrid(_)
            | Error::InvalidConfig(_)
            | Error::EmptyEnsemble => EXIT_VALIDATION,
            Error::UndefinedRatio { .. } | Error::ConnectedNullExhausted { .. } => EXIT_INTERNAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first) and runs the chosen command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(&a, stdout, stderr),
        Command::Dyadic(a) => cmd_dyadic(&a, stdout),
        Command::Bounds(a) => cmd_bounds(&a, stdout),
        Command::Randomize(a) => cmd_randomize(&a, stdout, stderr),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

fn load_graph(path: &Path, allow_disconnected: bool) -> CliResult<Graph> {
    read_edge_list(path, LoadOptions { allow_disconnected })
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), CliError::from(e).message)))
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// `base` with any `.csv` / `.json` suffix removed, then `ext` appended.
fn with_extension(base: &str, ext: &str) -> PathBuf {
    let stem = base
        .strip_suffix(".csv")
        .or_else(|| base.strip_suffix(".json"))
        .unwrap_or(base);
    PathBuf::from(format!("{stem}.{ext}"))
}

fn thread_pool(threads: Option<usize>) -> CliResult<rayon::ThreadPool> {
    let n = threads
        .or_else(|| std::thread::available_parallelism().ok().map(|n| n.get()))
        .unwrap_or(1);
    if n == 0 {
        return Err(CliError::validation("--threads must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| CliError {
            code: EXIT_INTERNAL,
            message: format!("cannot start thread pool: {e}"),
        })
}

fn cmd_analyze(a: &AnalyzeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    if a.output == "-" && a.format == ReportFormat::Both {
        return Err(CliError::input("--format both needs a file --output"));
    }
    let g = load_graph(&a.input, a.allow_disconnected)?;
    let cfg = EnsembleConfig {
        size: a.ensemble_size,
        master_seed: a.seed,
        swaps_per_edge: a.swaps_per_edge,
        max_attempt_factor: a.max_attempt_factor,
        strict_connected: a.strict_connected_null,
    };
    let pool = thread_pool(a.threads)?;
    let _ = writeln!(
        stderr,
        "{}: N={} M={}; {} null replicates on {} threads",
        a.input.display(),
        g.node_count(),
        g.edge_count(),
        cfg.size,
        pool.current_num_threads()
    );
    let input = a.input.display().to_string();
    let report = pool.install(|| analyze(&g, &cfg, a.k_grid.as_deref(), &input))?;

    let csv = matches!(a.format, ReportFormat::Csv | ReportFormat::Both);
    let json = matches!(a.format, ReportFormat::Json | ReportFormat::Both);
    if a.output == "-" {
        if csv {
            report.write_csv(&mut *stdout)?;
        } else {
            report.write_json(&mut *stdout)?;
        }
        return Ok(());
    }
    if csv {
        let path = with_extension(&a.output, "csv");
        report.write_csv(create(&path)?)?;
        let _ = writeln!(stderr, "wrote {}", path.display());
    }
    if json {
        let path = with_extension(&a.output, "json");
        report.write_json(create(&path)?)?;
        let _ = writeln!(stderr, "wrote {}", path.display());
    }
    Ok(())
}

fn emit_rows<T: Serialize>(
    output: &str,
    format: RowFormat,
    header: &[&str],
    rows: &[Vec<String>],
    json: &T,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let mut sink: Box<dyn Write + '_> = if output == "-" {
        Box::new(&mut *stdout)
    } else {
        Box::new(create(Path::new(output))?)
    };
    let io = |e: std::io::Error| CliError::from(Error::Io(e));
    match format {
        RowFormat::Csv => {
            writeln!(sink, "{}", header.join(",")).map_err(io)?;
            for row in rows {
                writeln!(sink, "{}", row.join(",")).map_err(io)?;
            }
        }
        RowFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, json).map_err(|e| io(e.into()))?;
            writeln!(sink).map_err(io)?;
        }
    }
    sink.flush().map_err(io)
}

#[derive(Serialize)]
struct DyadicRow {
    n1: usize,
    n0: usize,
    m11: u64,
    m10: u64,
    m00: u64,
    expected_m11: f64,
    expected_m10: f64,
    dyadicity: Option<f64>,
    heterophilicity: Option<f64>,
    ub_m11: u64,
    ub_m10: u64,
}

const DYADIC_COLUMNS: [&str; 11] = [
    "n1",
    "n0",
    "m11",
    "m10",
    "m00",
    "expected_m11",
    "expected_m10",
    "dyadicity",
    "heterophilicity",
    "ub_m11",
    "ub_m10",
];

fn opt_cell(v: Option<f64>) -> String {
    v.map(format_g12).unwrap_or_default()
}

fn cmd_dyadic(a: &DyadicArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let g = load_graph(&a.input, a.allow_disconnected)?;
    let file = File::open(&a.attributes)
        .map_err(|e| CliError::input(format!("{}: {e}", a.attributes.display())))?;
    let c = read_characteristic(&g, BufReader::new(file))
        .map_err(|e| CliError::input(format!("{}: {e}", a.attributes.display())))?;
    let counts = count_dyads(&g, &c);
    let exp = expected_dyads(&g, c.n1())?;
    let ds = g.degree_sequence();
    let row = DyadicRow {
        n1: c.n1(),
        n0: c.n0(),
        m11: counts.m11,
        m10: counts.m10,
        m00: counts.m00,
        expected_m11: round12(exp.expected_m11),
        expected_m10: round12(exp.expected_m10),
        dyadicity: dyadicity(&counts, &exp).ok().map(round12),
        heterophilicity: heterophilicity(&counts, &exp).ok().map(round12),
        ub_m11: ub_m11(&ds, c.n1())?,
        ub_m10: ub_m10(&ds, c.n1())?,
    };
    let cells = vec![
        row.n1.to_string(),
        row.n0.to_string(),
        row.m11.to_string(),
        row.m10.to_string(),
        row.m00.to_string(),
        format_g12(row.expected_m11),
        format_g12(row.expected_m10),
        opt_cell(row.dyadicity),
        opt_cell(row.heterophilicity),
        row.ub_m11.to_string(),
        row.ub_m10.to_string(),
    ];
    emit_rows(&a.output, a.format, &DYADIC_COLUMNS, &[cells], &row, stdout)
}

fn parse_sequence(text: &str, origin: &str) -> CliResult<Vec<usize>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| {
                CliError::input(format!("{origin}: line {}: '{token}' is not an integer", i + 1))
            })?;
            if value < 0 {
                return Err(CliError::from(Error::NegativeDegree {
                    position: out.len(),
                    value,
                }));
            }
            out.push(value as usize);
        }
    }
    Ok(out)
}

const BOUNDS_COLUMNS: [&str; 6] = ["n1", "n0", "ub_m11_basic", "ub_m10_basic", "ub_m11", "ub_m10"];

fn cmd_bounds(a: &BoundsArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let degrees = if let Some(path) = &a.input {
        load_graph(path, a.allow_disconnected)?.degrees()
    } else if let Some(path) = &a.degrees {
        let mut text = String::new();
        File::open(path)
            .and_then(|mut f| f.read_to_string(&mut text))
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        parse_sequence(&text, &path.display().to_string())?
    } else {
        parse_sequence(a.sequence.as_deref().unwrap_or_default(), "--sequence")?
    };
    if a.check_graphic {
        let verdict = graphic_verdict(&degrees);
        if !verdict.is_graphic() {
            return Err(CliError::validation(format!("sequence is not graphic: {verdict}")));
        }
    }
    let ds = DegreeSequence::from_degrees(degrees);
    let sizes: Vec<usize> = if a.sweep {
        (0..=ds.len()).collect()
    } else {
        a.n1.clone().unwrap_or_default()
    };
    let bounds = sizes
        .iter()
        .map(|&n1| DyadBounds::from_sequence(&ds, n1))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Vec<String>> = bounds
        .iter()
        .map(|b| {
            [b.n1 as u64, b.n0 as u64, b.ub_m11_basic, b.ub_m10_basic, b.ub_m11, b.ub_m10]
                .iter()
                .map(u64::to_string)
                .collect()
        })
        .collect();
    emit_rows(&a.output, a.format, &BOUNDS_COLUMNS, &rows, &bounds, stdout)
}

/// `out.txt` with index 3 becomes `out-3.txt`.
fn indexed_path(base: &str, index: usize) -> PathBuf {
    let path = Path::new(base);
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}-{index}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{index}"),
    };
    path.with_file_name(name)
}

fn cmd_randomize(a: &RandomizeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let g = load_graph(&a.input, a.allow_disconnected)?;
    let cfg = EnsembleConfig {
        size: a.count.unwrap_or(1),
        master_seed: a.seed,
        swaps_per_edge: a.swaps_per_edge,
        max_attempt_factor: a.max_attempt_factor,
        strict_connected: a.strict_connected_null,
    };
    cfg.validate()?;
    match a.count {
        None => {
            let out = randomize(&g, &cfg, 0)?;
            if a.output == "-" {
                write_edge_list(&out, &mut *stdout)?;
            } else {
                write_edge_list(&out, create(Path::new(&a.output))?)?;
            }
        }
        Some(count) => {
            if a.output == "-" {
                return Err(CliError::input("--count needs a file --output"));
            }
            for r in 0..count {
                let out = randomize(&g, &cfg, r as u64)?;
                let path = indexed_path(&a.output, r);
                write_edge_list(&out, create(&path)?)?;
                let _ = writeln!(stderr, "wrote {}", path.display());
            }
        }
    }
    Ok(())
}

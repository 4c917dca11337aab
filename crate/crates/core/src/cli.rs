//! The `a2cells` command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cells::report::{cell_size_report, Report};
use crate::cells::A2Cells;
use crate::element::GroupElement;
use crate::error::Error;
use crate::heap::{is_fc_reduced_word, Heap};
use crate::oracle::{compare_with_cells, enumerate_group, OracleReport, DEFAULT_BOUND};
use crate::system::CoxeterSystem;
use crate::verify::{verify_system, Check};

/// Groups above this order need `--slow-ok` for the oracle.
const SLOW_ORACLE_ORDER: usize = 200;

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NOT_A2_FINITE: i32 = 2;
pub const EXIT_BAD_WORD: i32 = 3;
pub const EXIT_GROUP_TOO_LARGE: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "a2cells", version, about = "Kazhdan-Lusztig cells of a-value 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Allow slow oracle runs (groups above 200 elements).
    #[arg(long, global = true)]
    slow_ok: bool,
    /// Largest group the oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the left stubs of a-value 2.
    Stubs { system: String },
    /// List right cells and two-sided cells.
    Cells { system: String },
    /// The 0-cell of two stubs.
    ZeroCell {
        system: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Enumerated cell sizes against the closed forms.
    Sizes { system: String },
    /// Run the golden checks for one system.
    Verify { system: String },
    /// Compare against brute-force Kazhdan-Lusztig cells.
    OracleVerify { system: String },
    /// Render the heap of a word.
    Heap {
        system: String,
        #[arg(long)]
        word: String,
        /// Emit TikZ instead of DOT.
        #[arg(long)]
        tikz: bool,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotA2Finite => EXIT_NOT_A2_FINITE,
            Error::UnknownLabel(_)
            | Error::NotReduced
            | Error::UnknownStubWord(_)
            | Error::NotFC
            | Error::NotAValue2 => EXIT_BAD_WORD,
            Error::GroupTooLarge(_) | Error::GroupInfinite => EXIT_GROUP_TOO_LARGE,
            Error::InvalidRank(_)
            | Error::BadDescriptor(_)
            | Error::BadCustomSystem(_)
            | Error::AsymmetricMatrix(..)
            | Error::BadBond { .. }
            | Error::ReducibleSystem
            | Error::UnsupportedRing => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// A descriptor such as `B:4`, inline JSON, or a path to a JSON file.
fn load_system(arg: &str) -> Result<Arc<CoxeterSystem>, Failure> {
    let sys = if arg.trim_start().starts_with('{') {
        CoxeterSystem::from_json(arg)?
    } else if arg.contains(':') {
        CoxeterSystem::from_descriptor(arg)?
    } else {
        let text = std::fs::read_to_string(arg).map_err(|e| usage(format!("cannot read `{arg}`: {e}")))?;
        CoxeterSystem::from_json(&text)?
    };
    Ok(Arc::new(sys))
}

fn load_cells(arg: &str) -> Result<A2Cells, Failure> {
    Ok(A2Cells::new(load_system(arg)?)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn word_of(w: &GroupElement) -> String {
    w.system().format_word(w.canonical_word())
}

/// Drops the commas when every label is a single character.
fn compact(sys: &CoxeterSystem, word: &str) -> String {
    if sys.labels().iter().all(|l| l.chars().count() == 1) {
        word.replace(',', "")
    } else {
        word.to_string()
    }
}

fn short_of(w: &GroupElement) -> String {
    compact(w.system(), &word_of(w))
}

fn set_of(set: &[GroupElement]) -> String {
    format!("{{{}}}", set.iter().map(short_of).collect::<Vec<_>>().join(", "))
}

/// Output text plus whether every check passed.
struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(usage("dot output is only available for `heap`"))
    } else {
        Ok(())
    }
}

fn stubs(cli: &Cli, system: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let cells = load_cells(system)?;
    let report = Report::new(&cells);
    if cli.format == Format::Json {
        #[derive(Serialize)]
        struct Stubs<'a> {
            system: &'a str,
            w2_empty: bool,
            stubs: &'a [crate::cells::report::StubEntry],
        }
        return Ok(json(&Stubs { system: &report.system, w2_empty: report.w2_empty, stubs: &report.stubs }).into());
    }
    let mut out = String::new();
    if report.w2_empty {
        out.push_str("W_2 empty: no stubs\n");
        return Ok(out.into());
    }
    let sys = cells.system();
    let _ = writeln!(out, "{:>3}  {:<20} {:<28} {:>6} {:>6}", "#", "stub", "layers", "simple", "slide");
    for (i, s) in report.stubs.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>3}  {:<20} {:<28} {:>6} {:>6}",
            i + 1,
            compact(sys, &s.word),
            s.layers.iter().map(|l| compact(sys, l)).collect::<Vec<_>>().join(" · "),
            s.simple_class,
            s.slide_class
        );
    }
    let _ = writeln!(out, "{} stubs", report.stubs.len());
    Ok(out.into())
}

fn cells_cmd(cli: &Cli, system: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let cells = load_cells(system)?;
    if cli.format == Format::Json {
        return Ok(Report::new(&cells).to_json().into());
    }
    let mut out = String::new();
    if cells.is_empty() {
        out.push_str("W_2 empty: no cells\n");
        return Ok(out.into());
    }
    for (i, x) in cells.stubs().iter().enumerate() {
        let cell = cells.right_cell(i);
        let _ = writeln!(out, "R[{}] ({} elements): {}", short_of(x), cell.len(), set_of(cell));
    }
    for (k, c) in cells.two_sided_cells().iter().enumerate() {
        let _ = writeln!(
            out,
            "two-sided cell {} [{}]: {} right cells, {} elements",
            k + 1,
            short_of(&c.class.representative),
            c.class.members.len(),
            c.members.len()
        );
    }
    let _ = writeln!(out, "|W_2| = {}", cells.len());
    Ok(out.into())
}

fn zero_cell(cli: &Cli, system: &str, x: &str, y: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let cells = load_cells(system)?;
    let (xi, yi) = (cells.find_stub(x)?, cells.find_stub(y)?);
    let members = cells.zero_cell(xi, yi);
    let (xw, yw) = (word_of(&cells.stubs()[xi]), word_of(&cells.stubs()[yi]));
    if cli.format == Format::Json {
        let entry = crate::cells::report::ZeroCellEntry { x: xw, y: yw, members: members.iter().map(word_of).collect() };
        return Ok(json(&entry).into());
    }
    let sys = cells.system();
    Ok(format!("I({}; {}) = {}\n", compact(sys, &xw), compact(sys, &yw), set_of(&members)).into())
}

fn sizes(cli: &Cli, system: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let cells = load_cells(system)?;
    let report = cell_size_report(&cells);
    if cli.format == Format::Json {
        #[derive(Serialize)]
        struct Row<'a> {
            quantity: &'a str,
            computed: usize,
            expected: Option<usize>,
            verdict: &'a str,
        }
        let rows: Vec<_> = report
            .rows
            .iter()
            .map(|r| Row { quantity: &r.quantity, computed: r.computed, expected: r.expected, verdict: r.verdict() })
            .collect();
        return Ok(Output { text: json(&rows), ok: report.all_match() });
    }
    let mut out = String::new();
    if cells.is_empty() {
        out.push_str("W_2 empty\n");
        return Ok(out.into());
    }
    let _ = writeln!(out, "{:<32} {:>9} {:>9}  verdict", "quantity", "computed", "expected");
    for r in &report.rows {
        let expected = r.expected.map_or("-".to_string(), |e| e.to_string());
        let _ = writeln!(out, "{:<32} {:>9} {:>9}  {}", r.quantity, r.computed, expected, r.verdict());
    }
    Ok(Output { text: out, ok: report.all_match() })
}

fn render_checks(format: Format, checks: &[Check], title: &str) -> Output {
    let ok = checks.iter().all(|c| c.passed);
    if format == Format::Json {
        #[derive(Serialize)]
        struct Entry<'a> {
            name: &'a str,
            passed: bool,
            detail: &'a str,
        }
        let entries: Vec<_> =
            checks.iter().map(|c| Entry { name: &c.name, passed: c.passed, detail: &c.detail }).collect();
        return Output { text: json(&entries), ok };
    }
    let mut out = String::new();
    for c in checks {
        let _ = write!(out, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        if c.detail.is_empty() {
        } else if c.passed {
            let _ = write!(out, " ({})", c.detail);
        } else {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(out, "{title}: {passed}/{} checks passed", checks.len());
    Output { text: out, ok }
}

fn verify(cli: &Cli, system: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let cells = load_cells(system)?;
    Ok(render_checks(cli.format, &verify_system(&cells), "verify"))
}

fn oracle_verify(cli: &Cli, system: &str) -> Result<Output, Failure> {
    no_dot(cli.format)?;
    let sys = load_system(system)?;
    let group = enumerate_group(&sys, cli.bound)?;
    let order = group.len();
    if order > SLOW_ORACLE_ORDER && !cli.slow_ok {
        return Err(Failure {
            code: EXIT_GROUP_TOO_LARGE,
            message: format!("group has {order} elements; pass --slow-ok to run the oracle"),
        });
    }
    let oracle = OracleReport::from_group(group);
    let cells = A2Cells::new(sys)?;
    let checks = compare_with_cells(&oracle, &cells);
    if cli.format == Format::Json {
        let ok = checks.iter().all(|c| c.passed);
        return Ok(Output { text: json(&oracle.dump()), ok });
    }
    Ok(render_checks(cli.format, &checks, &format!("oracle on {order} elements")))
}

fn heap(cli: &Cli, system: &str, word: &str, tikz: bool) -> Result<Output, Failure> {
    let sys = load_system(system)?;
    let letters = sys.parse_word(word)?;
    if letters.is_empty() {
        return Err(Failure { code: EXIT_BAD_WORD, message: "empty word".into() });
    }
    let mut out = String::new();
    match is_fc_reduced_word(&sys, &letters) {
        Ok(true) => {}
        Ok(false) => eprintln!("warning: word is not fully commutative"),
        Err(_) => eprintln!("warning: word is not reduced"),
    }
    let heap = Heap::of_word(&sys, &letters);
    match (cli.format, tikz) {
        (_, true) => out.push_str(&heap.to_tikz(&sys)),
        (Format::Json, false) => {
            #[derive(Serialize)]
            struct HeapJson {
                labels: Vec<String>,
                levels: Vec<usize>,
                covers: Vec<(usize, usize)>,
                width: usize,
            }
            out = json(&HeapJson {
                labels: letters.iter().map(|&s| sys.label(s).to_string()).collect(),
                levels: heap.levels().to_vec(),
                covers: heap.covers(),
                width: heap.width(),
            });
        }
        _ => out.push_str(&heap.to_dot(&sys)),
    }
    Ok(out.into())
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Stubs { system } => stubs(cli, system),
        Command::Cells { system } => cells_cmd(cli, system),
        Command::ZeroCell { system, x, y } => zero_cell(cli, system, x, y),
        Command::Sizes { system } => sizes(cli, system),
        Command::Verify { system } => verify(cli, system),
        Command::OracleVerify { system } => oracle_verify(cli, system),
        Command::Heap { system, word, tikz } => heap(cli, system, word, *tikz),
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &output.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", output.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            if output.ok {
                0
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

//! Command-line surface: single degrees, per-rank tables, class expansions,
//! and the verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::chow::GrassmannContext;
use crate::classes::sigma_pattern;
use crate::degrees::{degree_from_blocks, degree_table};
use crate::oracle::{cross_check, golden_checks, Check, Report};
use crate::patterns::{place_shapes, BlockShape, Pattern};

#[derive(Parser)]
#[command(
    name = "rankloci",
    version,
    about = "Exact degrees of projections of matrix rank loci from coordinate subspaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the degree d(n, r, S) for one pattern and one rank.
    Degree(DegreeArgs),
    /// Compute the degrees d(n, r, S) for all ranks r = 1..n.
    Table(TableArgs),
    /// Print the Grassmann class of a pattern in the Schubert basis.
    Class(ClassArgs),
    /// Run the self-verification suite (invariants, oracle, golden tables).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DegreeArgs {
    /// Matrix size.
    #[arg(long)]
    n: u32,
    /// Rank bound, between 1 and n.
    #[arg(long)]
    r: u32,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    /// Matrix size.
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ClassArgs {
    /// Matrix size.
    #[arg(long)]
    n: u32,
    /// Rank bound, between 1 and n.
    #[arg(long)]
    r: u32,
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest matrix size exercised by the invariant suite.
    #[arg(long, default_value_t = 5)]
    max_n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Pattern input: a grid file, an inline cell list, or shape counts.
#[derive(Args)]
struct SourceArgs {
    /// Grid file: X/x marks an entry, '.' or space is empty, '#' comments.
    #[arg(long, value_name = "FILE")]
    pattern: Option<PathBuf>,
    /// Inline cell list "r,c;r,c;..."; the empty string is the empty set.
    #[arg(long, value_name = "CELLS")]
    cells: Option<String>,
    /// Row blocks by length, e.g. "3,2,1,1".
    #[arg(long, value_name = "LENS", value_delimiter = ',')]
    rows: Vec<u32>,
    /// Column blocks by length, e.g. "2,2".
    #[arg(long, value_name = "LENS", value_delimiter = ',')]
    cols: Vec<u32>,
    /// Number of three-entry corner blocks.
    #[arg(long, value_name = "COUNT")]
    corners: Option<u32>,
    /// Number of 2x2 square blocks.
    #[arg(long, value_name = "COUNT")]
    squares: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Entry point for the binary; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// Testable entry point.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders help/version on stdout (code 0) and usage
            // errors on stderr (code 2)
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Degree(args) => cmd_degree(args),
        Command::Table(args) => cmd_table(args),
        Command::Class(args) => cmd_class(args),
        Command::Verify(args) => Ok(cmd_verify(args)),
    }
}

/// Resolved input: the concrete cells and the classified blocks.
#[derive(Debug)]
struct Resolved {
    pattern: Pattern,
    shapes: Vec<BlockShape>,
}

fn resolve_source(source: &SourceArgs, n: u32) -> Result<Resolved, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let has_shorthand = !source.rows.is_empty()
        || !source.cols.is_empty()
        || source.corners.is_some()
        || source.squares.is_some();
    let mut count = 0;
    count += source.pattern.is_some() as u32;
    count += source.cells.is_some() as u32;
    count += has_shorthand as u32;
    if count == 0 {
        return Err(
            "no pattern given: use --pattern, --cells, or --rows/--cols/--corners/--squares"
                .into(),
        );
    }
    if count > 1 {
        return Err("give exactly one of --pattern, --cells, or shape shorthands".into());
    }

    let pattern = if let Some(path) = &source.pattern {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
        Pattern::parse_grid(&text).map_err(|e| e.to_string())?
    } else if let Some(cells) = &source.cells {
        Pattern::parse_cells(cells).map_err(|e| e.to_string())?
    } else {
        let mut shapes = Vec::new();
        for &l in &source.rows {
            if l == 0 {
                return Err("row lengths must be positive".into());
            }
            shapes.push(BlockShape::Row(l));
        }
        for &m in &source.cols {
            if m == 0 {
                return Err("column lengths must be positive".into());
            }
            // a single entry is a row block
            shapes.push(if m == 1 { BlockShape::Row(1) } else { BlockShape::Col(m) });
        }
        shapes.extend(std::iter::repeat_n(
            BlockShape::Corner,
            source.corners.unwrap_or(0) as usize,
        ));
        shapes.extend(std::iter::repeat_n(
            BlockShape::Square,
            source.squares.unwrap_or(0) as usize,
        ));
        let pattern = place_shapes(&shapes, n).map_err(|e| e.to_string())?;
        return Ok(Resolved { pattern, shapes });
    };

    pattern.check_extent(n).map_err(|e| e.to_string())?;
    let shapes = pattern.shapes().map_err(|e| e.to_string())?;
    Ok(Resolved { pattern, shapes })
}

fn check_rank(n: u32, r: u32) -> Result<(), String> {
    if r < 1 || r > n {
        return Err(format!("rank r={} outside 1..={}", r, n));
    }
    Ok(())
}

/// Machine-readable pattern payload: the sorted cell list.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct PatternDoc {
    pub cells: Vec<(u32, u32)>,
}

impl PatternDoc {
    fn of(pattern: &Pattern) -> Self {
        PatternDoc {
            cells: pattern.cells().collect(),
        }
    }
}

/// JSON document for a single degree; the degree is a decimal string.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DegreeDoc {
    pub n: u32,
    pub r: u32,
    pub pattern: PatternDoc,
    pub d: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TableEntryDoc {
    pub r: u32,
    pub d: String,
}

/// JSON document for a per-rank table.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct TableDoc {
    pub n: u32,
    pub pattern: PatternDoc,
    pub degrees: Vec<TableEntryDoc>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ClassTermDoc {
    pub partition: Vec<u32>,
    pub c: String,
}

/// JSON document for a class expansion in the Schubert basis.
#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct ClassDoc {
    pub n: u32,
    pub r: u32,
    pub pattern: PatternDoc,
    pub class: String,
    pub terms: Vec<ClassTermDoc>,
}

/// JSON document for the verification run.
#[derive(Serialize)]
pub struct VerifyDoc {
    pub passed: bool,
    pub cross_check: Report,
    pub golden: Vec<Check>,
}

fn cmd_degree(args: DegreeArgs) -> Result<i32, String> {
    check_rank(args.n, args.r)?;
    let resolved = resolve_source(&args.source, args.n)?;
    let d = degree_from_blocks(
        GrassmannContext::for_rank(args.n, args.r),
        &resolved.shapes,
    );
    match args.format {
        Format::Text => println!("{}", d),
        Format::Json => {
            let doc = DegreeDoc {
                n: args.n,
                r: args.r,
                pattern: PatternDoc::of(&resolved.pattern),
                d: d.to_string(),
            };
            println!("{}", serde_json::to_string(&doc).unwrap());
        }
        Format::Csv => return Err("csv output is only available for tables".into()),
    }
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<i32, String> {
    let resolved = resolve_source(&args.source, args.n)?;
    let table = degree_table(args.n, &resolved.pattern).map_err(|e| e.to_string())?;
    match args.format {
        Format::Text => {
            let degrees: Vec<String> = table.entries().map(|(_, d)| d.to_string()).collect();
            let rw = args.n.to_string().len();
            let dw = degrees.iter().map(|d| d.len()).max().unwrap_or(1).max(1);
            println!("{:>rw$} {:>dw$}", "r", "d");
            for (r, d) in table.entries() {
                println!("{:>rw$} {:>dw$}", r, d.to_string());
            }
        }
        Format::Json => {
            let doc = TableDoc {
                n: args.n,
                pattern: PatternDoc::of(&resolved.pattern),
                degrees: table
                    .entries()
                    .map(|(r, d)| TableEntryDoc { r, d: d.to_string() })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&doc).unwrap());
        }
        Format::Csv => {
            let mut out = String::from("r,d\n");
            for (r, d) in table.entries() {
                writeln!(out, "{},{}", r, d).unwrap();
            }
            print!("{}", out);
        }
    }
    Ok(0)
}

fn cmd_class(args: ClassArgs) -> Result<i32, String> {
    check_rank(args.n, args.r)?;
    let resolved = resolve_source(&args.source, args.n)?;
    let ctx = GrassmannContext::for_rank(args.n, args.r);
    let class = sigma_pattern(ctx, &resolved.shapes);
    match args.format {
        Format::Text => println!("{}", class),
        Format::Json => {
            let doc = ClassDoc {
                n: args.n,
                r: args.r,
                pattern: PatternDoc::of(&resolved.pattern),
                class: class.to_string(),
                terms: class
                    .sorted_terms()
                    .into_iter()
                    .map(|(p, c)| ClassTermDoc {
                        partition: p.parts().to_vec(),
                        c: c.to_string(),
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string(&doc).unwrap());
        }
        Format::Csv => return Err("csv output is only available for tables".into()),
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> i32 {
    let report = cross_check(args.max_n);
    let golden = golden_checks();
    let passed = report.passed && golden.iter().all(|c| c.passed);
    match args.format {
        Format::Text | Format::Csv => {
            print!("{}", report.render_text());
            for c in &golden {
                let status = if c.passed { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => println!("{}  {} ({})", status, c.name, d),
                    None => println!("{}  {}", status, c.name),
                }
            }
            println!("verification {}", if passed { "PASSED" } else { "FAILED" });
        }
        Format::Json => {
            let doc = VerifyDoc {
                passed,
                cross_check: report,
                golden,
            };
            println!("{}", serde_json::to_string(&doc).unwrap());
        }
    }
    if passed {
        0
    } else {
        1
    }
}

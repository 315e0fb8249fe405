use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shapewilf::bijections::{phi, strictness_witness_213, strictness_witness_312, witness_block};
use shapewilf::formulas::{sw_limit_estimate, wilf_table, Family};
use shapewilf::report::{Provenance, SuiteReport};
use shapewilf::search::count_avoiders_parallel;
use shapewilf::{enumerate_avoiders, verify, Pattern, YoungDiagram};

mod output;

use output::{Format, Table};

/// Largest diagram size the enumeration verbs accept without `--allow-large`.
const SIZE_CAP: usize = 9;

#[derive(Parser)]
#[command(name = "shapewilf", version, about = "Pattern-avoiding transversals of Young diagrams")]
struct Cli {
    #[arg(long, short = 'f', value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "SHAPEWILF_THREADS", default_value_t = 0, global = true)]
    threads: usize,
    /// Lift the size cap on enumeration.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Row lengths from the top, e.g. `5,5,5,5,4`.
    #[arg(short = 'Y', long = "diagram")]
    diagram: YoungDiagram,
    /// Patterns, comma separated; block notation such as `213|1` is accepted.
    #[arg(short = 'p', long = "pattern", value_delimiter = ',', required = true)]
    patterns: Vec<Pattern>,
    /// Avoid all the patterns at once instead of counting each separately.
    #[arg(long)]
    jointly: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Count the transversals avoiding each pattern.
    Count(Target),
    /// List the avoiding transversals, one word per line.
    Enumerate(Target),
    /// Run a verification suite; exits with 1 if any check fails.
    Verify {
        suite: Suite,
        /// Largest diagram size swept (default depends on the suite).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Counts over squares for a set of patterns.
    Table {
        /// `S3` for the length-3 classes, `S4` for (3241), (2341), (4231).
        #[arg(long, default_value = "S4")]
        family: String,
        /// Sizes, as `6..8` (inclusive) or a single number.
        #[arg(long, default_value = "6..8")]
        n: String,
        /// Override the family's patterns.
        #[arg(short = 'p', long = "pattern", value_delimiter = ',')]
        patterns: Vec<Pattern>,
    },
    /// Roots and consecutive ratios of counts along a family of diagrams.
    Limits {
        /// `squares`, `yn` or `st3`
        #[arg(long)]
        family: Family,
        #[arg(long, short = 'p')]
        pattern: Pattern,
        /// Last size in the sequence
        #[arg(long)]
        n: u64,
    },
    /// Transversals showing each inequality is strict on a diagram.
    Witnesses {
        /// Row lengths from the top
        #[arg(short = 'Y', long = "diagram")]
        diagram: YoungDiagram,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    MainTheorem,
    Theorem2,
    Recursions,
    Bijections,
    Splitting,
    ClosedForms,
    Saturation,
    Structure,
}

impl Suite {
    /// Keeps each suite to a few minutes on one core.
    fn default_max_size(self) -> usize {
        match self {
            Suite::MainTheorem | Suite::Theorem2 | Suite::Recursions => 8,
            Suite::Bijections | Suite::Structure => 6,
            Suite::Splitting => 7,
            Suite::ClosedForms => 9,
            Suite::Saturation => 7,
        }
    }

    fn run(self, max: usize) -> SuiteReport {
        match self {
            Suite::MainTheorem => verify::main_theorem(max),
            Suite::Theorem2 => verify::theorem2(max),
            Suite::Recursions => verify::recursions(max),
            Suite::Bijections => verify::bijections(max),
            Suite::Splitting => verify::splitting(max),
            Suite::ClosedForms => verify::closed_forms(max),
            Suite::Saturation => verify::saturation(),
            Suite::Structure => verify::structure(max),
        }
    }
}

/// Bad input; reported with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn check_size(size: usize, allow_large: bool) -> Result<(), Usage> {
    if size > SIZE_CAP && !allow_large {
        return Err(Usage(format!("size {size} exceeds the cap {SIZE_CAP}; pass --allow-large to override")));
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<Vec<u64>, Usage> {
    let bad = || Usage(format!("bad size range `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

fn family_patterns(family: &str) -> Result<Vec<Pattern>, Usage> {
    let words = match family.to_ascii_uppercase().as_str() {
        "S3" => "213,123,312",
        "S4" => "3241,2341,4231",
        _ => return Err(Usage(format!("unknown table family `{family}`; use S3 or S4"))),
    };
    Ok(Pattern::parse_set(words)?)
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, Usage> {
    let format = cli.format;
    match cli.command {
        Command::Count(target) => {
            check_size(target.diagram.size(), cli.allow_large)?;
            let y = &target.diagram;
            y.ensure_proper()?;
            let groups: Vec<Vec<Pattern>> = if target.jointly {
                vec![target.patterns.clone()]
            } else {
                target.patterns.iter().map(|p| vec![p.clone()]).collect()
            };
            let mut table = Table::new(["diagram", "pattern", "count", "source"]);
            for group in groups {
                let label: Vec<String> = group.iter().map(Pattern::to_string).collect();
                let count = count_avoiders_parallel(y, &group);
                table.push([y.to_string(), label.join(","), count.to_string(), Provenance::Enumeration.to_string()]);
            }
            table.emit_counts(format, out)?;
        }
        Command::Enumerate(target) => {
            check_size(target.diagram.size(), cli.allow_large)?;
            let y = &target.diagram;
            y.ensure_proper()?;
            let groups: Vec<Vec<Pattern>> = if target.jointly {
                vec![target.patterns.clone()]
            } else {
                target.patterns.iter().map(|p| vec![p.clone()]).collect()
            };
            let mut table = Table::new(["diagram", "pattern", "transversal"]);
            for group in groups {
                let label: Vec<String> = group.iter().map(Pattern::to_string).collect();
                for t in enumerate_avoiders(y, &group) {
                    table.push([y.to_string(), label.join(","), t.to_string()]);
                }
            }
            table.emit_column(format, 2, out)?;
        }
        Command::Verify { suite, max_size } => {
            let max = max_size.unwrap_or_else(|| suite.default_max_size());
            check_size(max, cli.allow_large)?;
            let report = suite.run(max);
            output::emit_report(&report, format, out)?;
            return Ok(report.passed());
        }
        Command::Table { family, n, patterns } => {
            let patterns = if patterns.is_empty() { family_patterns(&family)? } else { patterns };
            let ns = parse_range(&n)?;
            check_size(ns.iter().copied().max().unwrap_or(0) as usize, cli.allow_large)?;
            let result = wilf_table(ns, &patterns)?;
            let mut table = Table::new(["n", "pattern", "count", "source"]);
            for row in &result.rows {
                table.push([row.n.to_string(), row.pattern.to_string(), row.count.to_string(), row.source.to_string()]);
            }
            match format {
                Format::Json => output::emit_json(&result, out)?,
                Format::Csv => table.emit(format, out)?,
                Format::Text => {
                    table.emit(format, out)?;
                    for (k, line) in &result.orderings {
                        writeln!(out, "n={k}: {line}")?;
                    }
                }
            }
        }
        Command::Limits { family, pattern, n } => {
            let est = sw_limit_estimate(family, &pattern, n)?;
            let mut table = Table::new(["n", "count", "source", "root", "ratio"]);
            for t in &est.terms {
                let ratio = t.ratio.map(|r| format!("{r:.9}")).unwrap_or_default();
                table.push([
                    t.n.to_string(),
                    t.count.to_string(),
                    t.source.to_string(),
                    format!("{:.9}", t.root),
                    ratio,
                ]);
            }
            match format {
                Format::Json => output::emit_json(&est, out)?,
                _ => table.emit(format, out)?,
            }
        }
        Command::Witnesses { diagram } => {
            check_size(diagram.size(), cli.allow_large)?;
            diagram.ensure_proper()?;
            let mut table = Table::new(["diagram", "inequality", "witness", "detail"]);
            match strictness_witness_312(&diagram) {
                Ok((a, b)) => {
                    let block = witness_block(&diagram).expect("witness found a block");
                    let image = phi(&a)?;
                    let detail = format!("phi image {image}; block of size {} at offset {}", block.size, block.offset);
                    table.push([diagram.to_string(), "321<312".into(), format!("{a} {b}"), detail]);
                }
                Err(e) => table.push([diagram.to_string(), "321<312".into(), String::new(), e.to_string()]),
            }
            match strictness_witness_213(&diagram) {
                Ok(t) => table.push([
                    diagram.to_string(),
                    "213<123".into(),
                    t.to_string(),
                    "outside the image of psi".into(),
                ]),
                Err(e) => table.push([diagram.to_string(), "213<123".into(), String::new(), e.to_string()]),
            }
            table.emit(format, out)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    // Buffered so a closed pipe downstream (`| head`) ends the run quietly.
    let mut buf = Vec::new();
    let result = run(cli, &mut buf);
    match io::stdout().lock().write_all(&buf) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => return ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Ok(()) => {}
    }
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end: batch jobs over generated categories, their
//! linear maps and the matrix relations they encode.
//!
//! Exit status: 0 success, 1 a verification failed, 2 usage or parse error,
//! 3 a resource cap was hit.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use easyqg::catalog::{catalog, match_catalog, parse_entry_name, CatalogEntry};
use easyqg::category::{
    default_i_max, generate_closure, slices_equal, CategorySlice, ClosureError, Membership,
};
use easyqg::literal::{parse_generator_file, render_diagram};
use easyqg::maps::{coord_cap, intertwiner_dimension, MapError, COORD_CAP_VAR};
use easyqg::partition::parse_color_word;
use easyqg::relation::{check_relation, emit_relation, RelationError};
use easyqg::sample::{parse_group, verify_group_category, ConcreteMatrix, GroupCheckError};
use easyqg::{parse_partition, ColoredPartition};

#[derive(Parser)]
#[command(name = "easyqg", version, about = "Two-colored partition categories and their matrix relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a bounded slice and print its members.
    Closure {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long, value_enum, default_value_t = Output::Literals)]
        output: Output,
    },
    /// Case, colorization, parameters and matching catalog entries.
    Classify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Whether a partition lies in the slice: yes, no or unknown-within-bound.
    Member {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        bounds: Bounds,
        #[arg(long)]
        partition: String,
    },
    /// Dimension of the span of the maps of members with given row colors.
    Dim {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        bounds: Bounds,
        /// Upper color word, e.g. `oxo`.
        #[arg(long, default_value = "")]
        upper: String,
        /// Lower color word.
        #[arg(long, default_value = "")]
        lower: String,
        #[arg(long)]
        n: usize,
    },
    /// Print the relation of a partition, and check it on a matrix if given.
    Relation {
        #[arg(long)]
        partition: String,
        /// Matrix file: one row per line, entries like `0.5-0.25i`.
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check a group-case catalog entry against sampled group elements.
    CheckGroup {
        /// Catalog entry, e.g. `Sgrp_glob(1)`.
        #[arg(long)]
        catalog: String,
        /// Group, e.g. `S_n`, `Z_3 wr S_n`, `O_n x~ Z_2`; defaults to the
        /// group listed for the entry.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// List catalog entries.
    Catalog {
        #[arg(long, default_value_t = 4)]
        max_param: usize,
        #[arg(long, value_enum, default_value_t = Output::Literals)]
        output: Output,
    },
    /// Whether two slices agree on all members up to a bound.
    Equal {
        #[command(flatten)]
        source: Source,
        /// Generator file of the second category.
        #[arg(long, conflicts_with = "other_catalog")]
        other_generators: Option<PathBuf>,
        /// Catalog entry of the second category.
        #[arg(long)]
        other_catalog: Option<String>,
        #[command(flatten)]
        bounds: Bounds,
        /// Compare members with at most this many points; defaults to P_max.
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Generator file, one partition literal per line.
    #[arg(long)]
    generators: Option<PathBuf>,
    /// Catalog entry, e.g. `S_glob(3)` or `Bp_loc:4,4,2`.
    #[arg(long)]
    catalog: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct Bounds {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..))]
    pmax: u64,
    /// Defaults to P_max + 4.
    #[arg(long)]
    imax: Option<usize>,
}

impl Bounds {
    fn p(&self) -> usize {
        self.pmax as usize
    }

    fn i(&self) -> usize {
        self.imax.unwrap_or_else(|| default_i_max(self.p()))
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Output {
    Literals,
    Pretty,
    Report,
}

/// A failed job and its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Failure {
        Failure { code: 2, message: message.to_string() }
    }

    fn cap(message: impl ToString) -> Failure {
        Failure { code: 3, message: message.to_string() }
    }
}

impl From<ClosureError> for Failure {
    fn from(e: ClosureError) -> Failure {
        match e {
            ClosureError::ResourceCap { .. } => Failure::cap(e),
            _ => Failure::usage(e),
        }
    }
}

impl From<MapError> for Failure {
    fn from(e: MapError) -> Failure {
        match e {
            MapError::SizeCap { .. } => Failure::cap(e),
            MapError::Closure(inner) => inner.into(),
            _ => Failure::usage(e),
        }
    }
}

impl From<RelationError> for Failure {
    fn from(e: RelationError) -> Failure {
        match e {
            RelationError::SizeCap { .. } => Failure::cap(e),
            RelationError::Map(inner) => inner.into(),
        }
    }
}

impl From<GroupCheckError> for Failure {
    fn from(e: GroupCheckError) -> Failure {
        match e {
            GroupCheckError::Relation(inner) => inner.into(),
            _ => Failure::usage(e),
        }
    }
}

/// Job output and whether every check in it passed.
struct Done {
    text: String,
    verified: bool,
}

impl Done {
    fn ok(text: String) -> Done {
        Done { text, verified: true }
    }
}

fn load_generators(source: &Source) -> Result<(String, Vec<ColoredPartition>), Failure> {
    if let Some(path) = &source.generators {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        let gens = parse_generator_file(&text)
            .map_err(|(line, e)| Failure::usage(format!("{}:{line}: {e}", path.display())))?;
        Ok((format!("generators={}", path.display()), gens))
    } else {
        let name = source.catalog.as_deref().expect("clap requires a source");
        let entry = entry(name)?;
        Ok((format!("catalog={}", entry.name()), entry.generators))
    }
}

fn entry(name: &str) -> Result<CatalogEntry, Failure> {
    parse_entry_name(name).map_err(Failure::usage)
}

fn slice(source: &Source, bounds: Bounds) -> Result<(String, CategorySlice), Failure> {
    let (label, gens) = load_generators(source)?;
    let s = generate_closure(&gens, bounds.p(), bounds.i())?;
    Ok((label, s))
}

fn partition(text: &str) -> Result<ColoredPartition, Failure> {
    parse_partition(text).map_err(|e| Failure::usage(format!("{text:?}: {e}")))
}

fn header(subcommand: &str, fields: &[String]) -> String {
    let mut out = format!("# config: subcommand={subcommand}");
    for f in fields {
        out.push(' ');
        out.push_str(f);
    }
    out.push('\n');
    out
}

fn bound_fields(s: &CategorySlice) -> Vec<String> {
    vec![
        format!("pmax={}", s.p_max()),
        format!("imax={}", s.i_max()),
        format!("complete={}", s.completeness().header_value()),
    ]
}

fn run(command: Command) -> Result<Done, Failure> {
    match command {
        Command::Closure { source, bounds, output } => {
            let (label, s) = slice(&source, bounds)?;
            let mut fields = vec![label];
            fields.extend(bound_fields(&s));
            fields.push(format!("output={output:?}").to_lowercase());
            let mut text = header("closure", &fields);
            match output {
                Output::Literals => text.push_str(&s.export()),
                Output::Pretty => {
                    for p in s.one_row_members() {
                        writeln!(text, "{p}\n{}", render_diagram(&p)).unwrap();
                    }
                }
                Output::Report => {
                    writeln!(text, "mode: {:?}", s.mode()).unwrap();
                    writeln!(text, "members: {}", s.len()).unwrap();
                    writeln!(text, "one_row_members: {}", s.one_row_members().len()).unwrap();
                    writeln!(text, "complete: {}", s.completeness().header_value()).unwrap();
                }
            }
            Ok(Done::ok(text))
        }
        Command::Classify { source, bounds } => {
            let (label, s) = slice(&source, bounds)?;
            let mut fields = vec![label];
            fields.extend(bound_fields(&s));
            let mut text = header("classify", &fields);
            let g = s.global_parameter();
            let local = s.local_parameter_estimate();
            let probes = |v: &[usize]| -> String {
                if v.is_empty() {
                    "none".into()
                } else {
                    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
                }
            };
            writeln!(text, "case: {}", s.classify_case()).unwrap();
            writeln!(text, "colorization: {}", s.colorization()).unwrap();
            writeln!(
                text,
                "global_parameter: {}{}",
                g.value,
                if g.bound_limited { " (bound-limited)" } else { "" }
            )
            .unwrap();
            writeln!(
                text,
                "local_parameter_estimate: block_pairs={} positioners={}",
                probes(&local.block_pairs),
                probes(&local.positioners)
            )
            .unwrap();
            writeln!(text, "completeness: {}", s.completeness().header_value()).unwrap();
            let matches: Vec<String> = match_catalog(&s).iter().map(|e| e.name()).collect();
            writeln!(
                text,
                "matches: {}",
                if matches.is_empty() { "none".to_string() } else { matches.join(" ") }
            )
            .unwrap();
            Ok(Done::ok(text))
        }
        Command::Member { source, bounds, partition: lit } => {
            let p = partition(&lit)?;
            let (_, s) = slice(&source, bounds)?;
            let answer = match s.membership(&p)? {
                Membership::Yes => "yes",
                Membership::No => "no",
                Membership::UnknownWithinBound => "unknown-within-bound",
            };
            Ok(Done::ok(format!("{answer}\n")))
        }
        Command::Dim { source, bounds, upper, lower, n } => {
            let upper = parse_color_word(&upper).map_err(Failure::usage)?;
            let lower = parse_color_word(&lower).map_err(Failure::usage)?;
            let (_, s) = slice(&source, bounds)?;
            let d = intertwiner_dimension(&s, &upper, &lower, n)?;
            Ok(Done::ok(format!("{d}\n")))
        }
        Command::Relation { partition: lit, matrix, tol } => {
            let p = partition(&lit)?;
            if tol <= 0.0 {
                return Err(Failure::usage("tolerance must be positive"));
            }
            let relation = emit_relation(&p).to_string();
            let Some(path) = matrix else {
                return Ok(Done::ok(format!("{relation}\n")));
            };
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let u: ConcreteMatrix = text.parse().map_err(Failure::usage)?;
            let report = check_relation(&p, &u, tol)?;
            let mut out = header(
                "relation",
                &[format!("partition={p}"), format!("matrix={}", path.display()), format!("tol={tol:e}")],
            );
            writeln!(out, "relation: {relation}").unwrap();
            out.push_str(&report.render());
            Ok(Done { text: out, verified: report.passed })
        }
        Command::CheckGroup { catalog: name, group, n, samples, seed, tol } => {
            if tol <= 0.0 {
                return Err(Failure::usage("tolerance must be positive"));
            }
            let e = entry(&name)?;
            let group = match group {
                Some(g) => parse_group(&g).map_err(Failure::usage)?,
                None => e
                    .group
                    .ok_or_else(|| Failure::usage(format!("{} is not a group-case category", e.name())))?,
            };
            let report = verify_group_category(group, &e, n, samples, seed, tol)?;
            let mut out = header(
                "check-group",
                &[
                    format!("catalog={}", e.name()),
                    format!("group={}", group.to_string().replace(' ', "")),
                    format!("n={n}"),
                    format!("samples={samples}"),
                    format!("seed={seed}"),
                    format!("tol={tol:e}"),
                ],
            );
            out.push_str(&report.render());
            Ok(Done { text: out, verified: report.passed() })
        }
        Command::Catalog { max_param, output } => {
            let mut text = header("catalog", &[format!("max_param={max_param}")]);
            for e in catalog(max_param) {
                let alias = match &e.alias_of {
                    Some((f, params)) => {
                        let target = f.instantiate(params).map(|t| t.name()).unwrap_or_default();
                        format!(" alias_of={target}")
                    }
                    None => String::new(),
                };
                let group = e.group.map(|g| format!(" group={}", g.to_string().replace(' ', ""))).unwrap_or_default();
                write!(
                    text,
                    "{} case={} colorization={} source={} global_parameter={}{alias}{group}",
                    e.name(),
                    e.case,
                    e.colorization,
                    e.source,
                    e.global_parameter
                )
                .unwrap();
                match output {
                    Output::Literals => {
                        let gens: Vec<String> = e.generators.iter().map(|g| g.to_string()).collect();
                        writeln!(text, " generators={}", gens.join(" ")).unwrap();
                    }
                    Output::Pretty | Output::Report => {
                        text.push('\n');
                        for g in &e.generators {
                            writeln!(text, "  {g}\n{}", indent(&render_diagram(g))).unwrap();
                        }
                    }
                }
            }
            Ok(Done::ok(text))
        }
        Command::Equal { source, other_generators, other_catalog, bounds, bound } => {
            let other = Source { generators: other_generators, catalog: other_catalog };
            if other.generators.is_none() && other.catalog.is_none() {
                return Err(Failure::usage("need --other-generators or --other-catalog"));
            }
            let (_, a) = slice(&source, bounds)?;
            let (_, b) = slice(&other, bounds)?;
            let equal = slices_equal(&a, &b, bound.unwrap_or(bounds.p()))?;
            Ok(Done::ok(format!("{}\n", if equal { "yes" } else { "no" })))
        }
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(raw) = std::env::var(COORD_CAP_VAR) {
        if raw.parse::<u64>().is_err() {
            eprintln!("error: {COORD_CAP_VAR}={raw:?} is not a number (default {})", coord_cap());
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(done) => {
            print!("{}", done.text);
            if done.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! Command-line front end: validate cell-complex datasets, compute Bredon
//! homology and equivariant K-homology, combine datasets with the Künneth
//! formula, and print exact character tables.
//!
//! Exit codes: 0 success, 1 failed expectation check, 2 validation error,
//! 3 parse or I/O error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bredonk::chartab::character_table;
use bredonk::dataset::{builtin, parse_dataset, Builtin, BUILTIN_NAMES};
use bredonk::group::{FiniteGroup, GroupElement, DEFAULT_ENUMERATION_CAP};
use bredonk::report::{
    dump_matrices, homology_report, k_homology_report, kunneth_report, validate_report, Report,
};

const EXIT_EXPECTATION_FAILED: u8 = 1;
const EXIT_VALIDATION_ERROR: u8 = 2;
const EXIT_PARSE_IO_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "bredonk", version, about = "Bredon homology and equivariant K-homology of finite proper G-CW-complexes, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a dataset: stabilizers, subconjugation of every boundary
    /// witness, and vanishing of the composed differentials
    Validate(DatasetArgs),
    /// Compute the Bredon homology of a dataset
    Homology(HomologyArgs),
    /// Derive equivariant K-homology via the spectral-sequence collapse
    #[command(name = "k-homology")]
    KHomology(DatasetArgs),
    /// Combine two datasets with the Künneth formula
    Kunneth(KunnethArgs),
    /// Print the exact character table of a matrix group
    #[command(name = "char-table")]
    CharTable(CharTableArgs),
}

#[derive(Args)]
struct DatasetArgs {
    /// Path to a dataset JSON file
    path: Option<PathBuf>,
    /// Name of a compiled-in dataset (sl3z, c2point, trivialpoint, gl3z)
    #[arg(long)]
    builtin: Option<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    /// Write the assembled differentials as integer grids into this directory
    #[arg(long, value_name = "DIR")]
    dump_matrices: Option<PathBuf>,
    /// Fail (exit 1) unless rank(H0) equals this count of conjugacy classes
    /// of finite-order elements
    #[arg(long, value_name = "N")]
    expect_h0_rank: Option<usize>,
}

#[derive(Args)]
struct KunnethArgs {
    /// Paths to dataset JSON files (combined with any --builtin arguments;
    /// exactly two datasets in total)
    paths: Vec<PathBuf>,
    /// Compiled-in dataset names; may be given twice
    #[arg(long)]
    builtin: Vec<String>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CharTableArgs {
    /// Path to a JSON file {"matrix_dim": n, "generators": [[..], ..]}
    path: Option<PathBuf>,
    /// Inline generators: flat row-major integer matrices, entries
    /// comma-separated, matrices separated by semicolons
    #[arg(long, value_name = "MATRICES", allow_hyphen_values = true)]
    gens: Option<String>,
    /// Emit the table as JSON
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate(args) => cmd_validate(args),
        Command::Homology(args) => cmd_homology(args),
        Command::KHomology(args) => cmd_k_homology(args),
        Command::Kunneth(args) => cmd_kunneth(args),
        Command::CharTable(args) => cmd_char_table(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Resolve a dataset argument into a source and a display label.
fn resolve(args: &DatasetArgs) -> Result<(Builtin, String), Failure> {
    match (&args.builtin, &args.path) {
        (Some(name), None) => {
            let b = builtin(name).ok_or_else(|| {
                Failure::new(
                    EXIT_PARSE_IO_ERROR,
                    format!("unknown builtin `{name}` (available: {})", BUILTIN_NAMES.join(", ")),
                )
            })?;
            Ok((b, name.clone()))
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_PARSE_IO_ERROR, format!("{}: {e}", path.display()))
            })?;
            let x = parse_dataset(&text)
                .map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, e.to_string()))?;
            let label = x.name.clone();
            Ok((Builtin::Complex(x), label))
        }
        (Some(_), Some(_)) => Err(Failure::new(
            EXIT_PARSE_IO_ERROR,
            "give either a path or --builtin, not both",
        )),
        (None, None) => Err(Failure::new(
            EXIT_PARSE_IO_ERROR,
            "no dataset given; pass a path or --builtin NAME",
        )),
    }
}

fn validation_failure(e: bredonk::bredon::BredonError) -> Failure {
    Failure::new(EXIT_VALIDATION_ERROR, e.to_string())
}

fn print_report(report: &Report, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn cmd_validate(args: DatasetArgs) -> Result<(), Failure> {
    let (source, label) = resolve(&args)?;
    let report = validate_report(&source, &label).map_err(validation_failure)?;
    print_report(&report, args.json);
    Ok(())
}

fn cmd_homology(args: HomologyArgs) -> Result<(), Failure> {
    let (source, label) = resolve(&args.dataset)?;
    let report =
        homology_report(&source, &label, args.expect_h0_rank).map_err(validation_failure)?;
    if let Some(dir) = &args.dump_matrices {
        write_matrix_dumps(&source, dir)?;
    }
    print_report(&report, args.dataset.json);
    if let Some(exp) = &report.expected_h0 {
        if !exp.matches {
            return Err(Failure::new(
                EXIT_EXPECTATION_FAILED,
                format!(
                    "H0 rank is {}, expected {}",
                    exp.actual_rank, exp.expected
                ),
            ));
        }
    }
    Ok(())
}

fn cmd_k_homology(args: DatasetArgs) -> Result<(), Failure> {
    let (source, label) = resolve(&args)?;
    let report = k_homology_report(&source, &label).map_err(validation_failure)?;
    print_report(&report, args.json);
    Ok(())
}

fn cmd_kunneth(args: KunnethArgs) -> Result<(), Failure> {
    let mut sources: Vec<(Builtin, String)> = Vec::new();
    for name in &args.builtin {
        let b = builtin(name).ok_or_else(|| {
            Failure::new(EXIT_PARSE_IO_ERROR, format!("unknown builtin `{name}`"))
        })?;
        sources.push((b, name.clone()));
    }
    for path in &args.paths {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, format!("{}: {e}", path.display())))?;
        let x =
            parse_dataset(&text).map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, e.to_string()))?;
        let label = x.name.clone();
        sources.push((Builtin::Complex(x), label));
    }
    if sources.len() != 2 {
        return Err(Failure::new(
            EXIT_PARSE_IO_ERROR,
            format!("kunneth needs exactly two datasets, got {}", sources.len()),
        ));
    }
    let (b, label_b) = sources.pop().unwrap();
    let (a, label_a) = sources.pop().unwrap();
    let report = kunneth_report(&a, &label_a, &b, &label_b).map_err(validation_failure)?;
    print_report(&report, args.json);
    Ok(())
}

fn write_matrix_dumps(source: &Builtin, dir: &PathBuf) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, format!("{}: {e}", dir.display())))?;
    let dumps = match source {
        Builtin::Complex(x) => dump_matrices(x, "").map_err(validation_failure)?,
        Builtin::Product(a, b) => {
            let mut d = dump_matrices(a, &a.name).map_err(validation_failure)?;
            d.extend(dump_matrices(b, &b.name).map_err(validation_failure)?);
            d
        }
    };
    for (name, contents) in dumps {
        let path = dir.join(name);
        fs::write(&path, contents)
            .map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

#[derive(serde::Deserialize)]
struct GeneratorFile {
    matrix_dim: usize,
    generators: Vec<Vec<i64>>,
}

fn parse_inline_gens(arg: &str) -> Result<Vec<Vec<i64>>, Failure> {
    arg.split(';')
        .map(|chunk| {
            chunk
                .split(',')
                .map(|tok| {
                    tok.trim().parse::<i64>().map_err(|_| {
                        Failure::new(
                            EXIT_PARSE_IO_ERROR,
                            format!("bad integer `{}` in --gens", tok.trim()),
                        )
                    })
                })
                .collect()
        })
        .collect()
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

fn cmd_char_table(args: CharTableArgs) -> Result<(), Failure> {
    let (dim, flats): (usize, Vec<Vec<i64>>) = match (&args.gens, &args.path) {
        (Some(arg), None) => {
            let flats = parse_inline_gens(arg)?;
            let len = flats
                .first()
                .ok_or_else(|| Failure::new(EXIT_PARSE_IO_ERROR, "--gens is empty"))?
                .len();
            let dim = isqrt(len).ok_or_else(|| {
                Failure::new(
                    EXIT_PARSE_IO_ERROR,
                    format!("generator length {len} is not a perfect square"),
                )
            })?;
            (dim, flats)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::new(EXIT_PARSE_IO_ERROR, format!("{}: {e}", path.display()))
            })?;
            let file: GeneratorFile = serde_json::from_str(&text)
                .map_err(|e| Failure::new(EXIT_PARSE_IO_ERROR, e.to_string()))?;
            (file.matrix_dim, file.generators)
        }
        _ => {
            return Err(Failure::new(
                EXIT_PARSE_IO_ERROR,
                "give either a path or --gens, not both (and not neither)",
            ))
        }
    };

    let mut gens = Vec::with_capacity(flats.len());
    for flat in &flats {
        if flat.len() != dim * dim {
            return Err(Failure::new(
                EXIT_PARSE_IO_ERROR,
                format!("generator has {} entries, expected {}", flat.len(), dim * dim),
            ));
        }
        let g = GroupElement::from_flat(dim, flat)
            .map_err(|e| Failure::new(EXIT_VALIDATION_ERROR, e.to_string()))?;
        gens.push(g);
    }
    let group = FiniteGroup::enumerate(&gens, DEFAULT_ENUMERATION_CAP)
        .map_err(|e| Failure::new(EXIT_VALIDATION_ERROR, e.to_string()))?;
    let group = std::sync::Arc::new(group);
    let table =
        character_table(&group).map_err(|e| Failure::new(EXIT_VALIDATION_ERROR, e.to_string()))?;

    let class_sizes: Vec<usize> = group.class_sizes();
    let rep_orders: Vec<usize> = (0..group.class_count())
        .map(|c| group.element_order(group.class_rep_idx(c)))
        .collect();
    let rows: Vec<Vec<String>> = table
        .irreducibles()
        .iter()
        .map(|chi| chi.values().iter().map(|v| v.to_string()).collect())
        .collect();

    if args.json {
        #[derive(serde::Serialize)]
        struct TableReport {
            class_representative_orders: Vec<usize>,
            class_sizes: Vec<usize>,
            classes: usize,
            degrees: Vec<String>,
            exponent: usize,
            order: usize,
            table: Vec<Vec<String>>,
        }
        let rep = TableReport {
            class_representative_orders: rep_orders,
            class_sizes,
            classes: group.class_count(),
            degrees: table.degrees().iter().map(|d| d.to_string()).collect(),
            exponent: group.exponent(),
            order: group.order(),
            table: rows,
        };
        println!("{}", serde_json::to_string_pretty(&rep).expect("serializable"));
    } else {
        println!("order: {}", group.order());
        println!("exponent: {}", group.exponent());
        println!("classes: {}", group.class_count());
        println!("class sizes: {class_sizes:?}");
        println!("class representative orders: {rep_orders:?}");
        println!(
            "degrees: {:?}",
            table.degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>()
        );
        println!("table (rows = irreducibles, columns = classes):");
        for (i, row) in rows.iter().enumerate() {
            println!("  chi{}: {}", i + 1, row.join("  "));
        }
    }
    Ok(())
}

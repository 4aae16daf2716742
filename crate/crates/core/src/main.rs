use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tropmetric::io::{
    format_rows, format_scalar, format_vector, parse_distance_table, parse_matrix, parse_point,
};
use tropmetric::metric::{self, embed, from_matrix, validate, Violation};
use tropmetric::polytope::{extremal_columns, interior_point};
use tropmetric::render::render_svg;
use tropmetric::spectral::{eigenvalue, kleene_star};
use tropmetric::symmetry::{hclass_element, isometry_group};
use tropmetric::{DistanceTable, Error, Permutation, Scalar, TropMatrix};

/// Exact max-plus matrix tools for finite metric spaces.
///
/// Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
/// violation, 4 internal consistency failure.
#[derive(Parser)]
#[command(name = "tropmetric", version)]
struct Cli {
    /// Print numbers as decimals instead of exact fractions (display only).
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every semimetric/metric characterisation of a matrix.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Kleene star A* = I ⊕ A ⊕ A² ⊕ …
    Star { file: PathBuf },
    /// Maximum cycle mean.
    Eigenvalue { file: PathBuf },
    /// Check the axioms of a distance table.
    Validate {
        file: PathBuf,
        /// Read the matrix D = (−d) instead of a distance table.
        #[arg(long)]
        matrix: bool,
    },
    /// Points of FT^n realising a semimetric by residuation distance.
    Embed {
        file: PathBuf,
        #[arg(long)]
        matrix: bool,
    },
    /// Isometry group of a semimetric.
    Isometries {
        file: PathBuf,
        #[arg(long)]
        matrix: bool,
    },
    /// Extremal columns (1-based) of an idempotent.
    Extremals { file: PathBuf },
    /// Whether a point is interior to the column space.
    Interior {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. 0,-1/2,1.5
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// The H-class element λ ⊗ P_σ ⊗ D of a metric matrix.
    Hclass {
        file: PathBuf,
        /// One-line images, e.g. "1 3 2".
        #[arg(long)]
        perm: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        lambda: String,
    },
    /// SVG of a 2×2 idempotent or 3×3 strongly regular idempotent.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_matrix(path: &Path) -> Result<TropMatrix, Failure> {
    Ok(parse_matrix(&read(path)?)?)
}

fn load_table(path: &Path, as_matrix: bool) -> Result<DistanceTable, Failure> {
    let text = read(path)?;
    if as_matrix {
        Ok(from_matrix(&parse_matrix(&text)?)?)
    } else {
        Ok(parse_distance_table(&text)?)
    }
}

fn print_matrix(m: &TropMatrix, decimal: bool) {
    print!(
        "tmat 1\n{} {}\n{}",
        m.rows(),
        m.cols(),
        format_rows(m, decimal)
    );
}

fn describe(v: &Violation) -> String {
    match *v {
        Violation::Triangle { i, k, j } => {
            format!(
                "triangle inequality fails: d({0},{2}) > d({0},{1}) + d({1},{2})",
                i + 1,
                k + 1,
                j + 1
            )
        }
        Violation::Negative { i, j } => format!("negative distance d({},{})", i + 1, j + 1),
        Violation::Zero { i, j } => {
            format!("distinct points at distance 0: d({},{})", i + 1, j + 1)
        }
        Violation::Asymmetric { i, j } => {
            format!("asymmetric: d({0},{1}) != d({1},{0})", i + 1, j + 1)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let dec = cli.decimal;
    match cli.command {
        Command::Classify { file, json } => {
            let report = metric::classify(&load_matrix(&file)?)?;
            if json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                println!("{text}");
            } else {
                let value = serde_json::to_value(&report).expect("report serializes");
                for (k, v) in value.as_object().expect("report is an object") {
                    println!("{k}: {v}");
                }
            }
        }
        Command::Star { file } => {
            let result = kleene_star(&load_matrix(&file)?)?;
            match result.star {
                Some(s) => print_matrix(&s, dec),
                None => println!(
                    "diverges (eigenvalue {})",
                    format_scalar(&result.eigenvalue, dec)
                ),
            }
        }
        Command::Eigenvalue { file } => {
            println!("{}", format_scalar(&eigenvalue(&load_matrix(&file)?)?, dec));
        }
        Command::Validate { file, matrix } => {
            let v = validate(&load_table(&file, matrix)?);
            let class = serde_json::to_value(v.class).expect("class serializes");
            println!("{}", class.as_str().expect("class is a string"));
            if let Some(w) = &v.witness {
                println!("{}", describe(w));
            }
        }
        Command::Embed { file, matrix } => {
            for p in embed(&load_table(&file, matrix)?)? {
                println!("{}", format_vector(&p, dec));
            }
        }
        Command::Isometries { file, matrix } => {
            println!("{}", isometry_group(&load_table(&file, matrix)?)?);
        }
        Command::Extremals { file } => {
            let idx: Vec<String> = extremal_columns(&load_matrix(&file)?)?
                .iter()
                .map(|j| (j + 1).to_string())
                .collect();
            println!("{}", idx.join(" "));
        }
        Command::Interior { file, point } => {
            let e = load_matrix(&file)?;
            let x = parse_point(&point)?;
            println!(
                "{}",
                if interior_point(&e, &x)? {
                    "interior"
                } else {
                    "boundary"
                }
            );
        }
        Command::Hclass { file, perm, lambda } => {
            let d = load_matrix(&file)?;
            let sigma: Permutation = perm.parse()?;
            let lambda: Scalar = lambda.parse()?;
            print_matrix(&hclass_element(&d, &sigma, &lambda)?, dec);
        }
        Command::Render { file, output } => {
            let svg = render_svg(&load_matrix(&file)?)?;
            match output {
                Some(path) => fs::write(&path, svg)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

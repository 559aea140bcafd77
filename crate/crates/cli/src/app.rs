//! Argument parsing, orchestration, and output formatting.
//!
//! Exit codes: 0 affirmative (regular / found / radius determined),
//! 1 definitive negative (not regular / none found / counterexample),
//! 2 cap reached without a determination, 3 usage or input error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use rado_core::algebra::{
    at_family, forbidden_ratios, normalize, parse_coeffs, zero_sum_subset, Equation,
};
use rado_core::coloring::{
    rado_radius, search_coloring_opts, verify_coloring, Coloring, RadiusOutcome, SearchOpts,
    VerifyOutcome,
};
use rado_core::linkage::{build_matrix, linkage_search, max_linkage, pigeonhole_walk};
use rado_core::strong::{strong_solve, InequalitySystem};

use crate::cert::{
    coloring_cert, linkage_cert, radius_cert, ratios_cert, regularity_cert, solution_cert,
    verify_certificate, walk_cert, Certificate, Meta,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser)]
#[command(
    name = "rado",
    version,
    about = "Degree-of-regularity toolkit for linear homogeneous equations"
)]
struct Cli {
    /// Emit a JSON certificate instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Omit run-varying metadata (timestamps) so output is byte-identical
    /// across runs
    #[arg(long, global = true)]
    seedless: bool,
    /// Worker threads for coloring search; results are identical for every
    /// value
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test Rado's condition: some nonempty subset of coefficients sums to 0
    CheckRegular {
        /// Coefficients, e.g. "1,1,-1" or "-7/3,2,4/3"
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Print the forbidden ratios S_l = -((sum a_i) - a_l) / a_l
    Ratios {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Largest certified linkage matrix size up to --max-m, with its first row
    Linkage {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long = "max-m")]
        max_m: usize,
    },
    /// Least interval length at which no solution-free coloring exists
    Radius {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Palette size
        #[arg(short)]
        r: u32,
        /// Largest interval length to examine
        #[arg(long)]
        cap: usize,
        /// Inequality row (repeatable), e.g. --ineq 1,-1,0
        #[arg(long = "ineq", allow_hyphen_values = true)]
        ineq: Vec<String>,
        /// Require all solution entries distinct
        #[arg(long)]
        distinct: bool,
    },
    /// Search for a solution-free coloring of [1, n]
    FindColoring {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Palette size
        #[arg(short)]
        r: u32,
        /// Interval length
        #[arg(short)]
        n: usize,
        #[arg(long = "ineq", allow_hyphen_values = true)]
        ineq: Vec<String>,
        #[arg(long)]
        distinct: bool,
    },
    /// Check a coloring file against every solution in its interval
    VerifyColoring {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Coloring file: `N r` then N colors; `#` comments
        #[arg(long)]
        file: PathBuf,
        #[arg(long = "ineq", allow_hyphen_values = true)]
        ineq: Vec<String>,
        #[arg(long)]
        distinct: bool,
    },
    /// Print the n-th Alexeev-Tsimerman equation
    AtFamily {
        #[arg(short)]
        n: usize,
    },
    /// Monochromatic solution satisfying the inequalities, under a coloring
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long = "ineq", allow_hyphen_values = true)]
        ineq: Vec<String>,
        #[arg(long)]
        distinct: bool,
    },
    /// Pigeonhole walk over x, c_{1,1} x, ..., c_{1,m} x for a linkage row
    Walk {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Linkage first row, e.g. "1/2,1/4"
        #[arg(long, allow_hyphen_values = true)]
        row: String,
        #[arg(long)]
        coloring: PathBuf,
        /// Walk start; must be a positive multiple of the integrality base
        #[arg(long)]
        x: String,
    },
    /// Re-verify a JSON certificate
    VerifyCert {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug)]
struct Failure(String);

impl Failure {
    fn new(msg: impl Into<String>) -> Failure {
        Failure(msg.into())
    }
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

struct Outcome {
    text: String,
    cert: Option<Certificate>,
    exit: i32,
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    emit_stdout(&e.to_string());
                    EXIT_OK
                }
                _ => {
                    emit_stderr(&e.to_string());
                    EXIT_ERROR
                }
            };
        }
    };
    let meta = Meta {
        tool: format!("rado {}", env!("CARGO_PKG_VERSION")),
        command: args.join(" "),
        timestamp: if cli.seedless {
            None
        } else {
            Some(unix_timestamp())
        },
    };
    match dispatch(&cli, meta) {
        Ok(outcome) => {
            match (&cli.json, &outcome.cert) {
                (true, Some(cert)) => {
                    let rendered =
                        serde_json::to_string_pretty(cert).expect("certificate serializes");
                    emit_stdout(&format!("{rendered}\n"));
                }
                _ => emit_stdout(&format!("{}\n", outcome.text)),
            }
            outcome.exit
        }
        Err(Failure(msg)) => {
            emit_stderr(&format!("error: {msg}\n"));
            EXIT_ERROR
        }
    }
}

// Closed pipes (e.g. `rado ... | head`) must end the program quietly, not
// panic.
fn emit_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn emit_stderr(text: &str) {
    use std::io::Write;
    let _ = std::io::stderr().write_all(text.as_bytes());
}

fn unix_timestamp() -> String {
    use std::time::{SystemTime, UNIX_EPOCH};
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_else(|_| "0".to_string())
}

fn dispatch(cli: &Cli, meta: Meta) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::CheckRegular { coeffs } => check_regular(coeffs, meta),
        Command::Ratios { coeffs } => ratios(coeffs, meta),
        Command::Linkage { coeffs, max_m } => linkage(coeffs, *max_m, meta),
        Command::Radius {
            coeffs,
            r,
            cap,
            ineq,
            distinct,
        } => radius(coeffs, *r, *cap, ineq, *distinct, meta),
        Command::FindColoring {
            coeffs,
            r,
            n,
            ineq,
            distinct,
        } => find_coloring(coeffs, *r, *n, ineq, *distinct, cli.threads, meta),
        Command::VerifyColoring {
            coeffs,
            file,
            ineq,
            distinct,
        } => verify_coloring_cmd(coeffs, file, ineq, *distinct, meta),
        Command::AtFamily { n } => at_family_cmd(*n, meta),
        Command::Solve {
            coeffs,
            coloring,
            ineq,
            distinct,
        } => solve(coeffs, coloring, ineq, *distinct, meta),
        Command::Walk {
            coeffs,
            row,
            coloring,
            x,
        } => walk(coeffs, row, coloring, x, meta),
        Command::VerifyCert { file } => verify_cert_cmd(file),
    }
}

fn parse_equation(coeffs: &str) -> Result<Equation, Failure> {
    let raw = parse_coeffs(coeffs)?;
    Ok(normalize(&raw)?)
}

fn parse_ineq_row(text: &str) -> Result<Vec<BigInt>, Failure> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .split(',')
        .map(|token| {
            BigInt::from_str(token).map_err(|_| {
                Failure::new(format!(
                    "inequality row `{text}`: `{token}` is not an integer"
                ))
            })
        })
        .collect()
}

fn parse_system(
    eq: &Equation,
    ineq: &[String],
    distinct: bool,
) -> Result<InequalitySystem, Failure> {
    let mut rows: Vec<Vec<BigInt>> = ineq
        .iter()
        .map(|s| parse_ineq_row(s))
        .collect::<Result<_, _>>()?;
    if distinct {
        rows.extend(
            InequalitySystem::distinct_pairs(eq.arity())
                .rows()
                .iter()
                .cloned(),
        );
    }
    let system = InequalitySystem::new(rows);
    system.validate_against(eq).map_err(|e| {
        let detail = match &e {
            rado_core::strong::StrongError::RowMultipleOfEquation { index }
            | rado_core::strong::StrongError::RowZero { index }
            | rado_core::strong::StrongError::RowArityMismatch { index, .. } => {
                let row = &system.rows()[index - 1];
                let rendered: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                format!("{e} (row: {})", rendered.join(","))
            }
            other => other.to_string(),
        };
        Failure::new(detail)
    })?;
    Ok(system)
}

fn read_coloring(path: &PathBuf) -> Result<Coloring, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(format!("{}: {e}", path.display())))?;
    Ok(Coloring::parse(&text)?)
}

fn render_indices(indices: &[usize]) -> String {
    let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_regular(coeffs: &str, meta: Meta) -> Result<Outcome, Failure> {
    let eq = parse_equation(coeffs)?;
    let subset = zero_sum_subset(&eq);
    let (text, exit) = match &subset {
        Some(indices) => (
            format!("regular (subset indices {})", render_indices(indices)),
            EXIT_OK,
        ),
        None => ("not regular".to_string(), EXIT_NEGATIVE),
    };
    Ok(Outcome {
        text,
        cert: Some(regularity_cert(&eq, subset.as_deref(), meta)),
        exit,
    })
}

fn ratios(coeffs: &str, meta: Meta) -> Result<Outcome, Failure> {
    let eq = parse_equation(coeffs)?;
    let ratios = forbidden_ratios(&eq);
    let lines: Vec<String> = ratios
        .iter()
        .enumerate()
        .map(|(i, s)| format!("S_{} = {s}", i + 1))
        .collect();
    Ok(Outcome {
        text: lines.join("\n"),
        cert: Some(ratios_cert(&eq, &ratios, meta)),
        exit: EXIT_OK,
    })
}

fn linkage(coeffs: &str, max_m: usize, meta: Meta) -> Result<Outcome, Failure> {
    if max_m < 1 {
        return Err(Failure::new("--max-m must be at least 1"));
    }
    let eq = parse_equation(coeffs)?;
    let best = max_linkage(&eq, max_m);
    let mat = if best >= 1 {
        linkage_search(&eq, best)
    } else {
        None
    };
    let (text, exit) = match &mat {
        Some(mat) => {
            let row: Vec<String> = mat
                .first_row()
                .iter()
                .map(|e| e.ratio.to_string())
                .collect();
            let indices: Vec<String> = mat
                .first_row()
                .iter()
                .map(|e| e.ratio_index.to_string())
                .collect();
            (
                format!(
                    "max linkage size = {best} (cap {max_m})\nfirst row: {}\nratio indices: {}\nintegrality base: {}",
                    row.join(", "),
                    indices.join(", "),
                    mat.integrality_base()
                ),
                EXIT_OK,
            )
        }
        None => (
            format!("no linkage matrix up to size {max_m}"),
            EXIT_NEGATIVE,
        ),
    };
    Ok(Outcome {
        text,
        cert: Some(linkage_cert(&eq, max_m, mat.as_ref(), meta)),
        exit,
    })
}

fn radius(
    coeffs: &str,
    r: u32,
    cap: usize,
    ineq: &[String],
    distinct: bool,
    meta: Meta,
) -> Result<Outcome, Failure> {
    if r < 1 || cap < 1 {
        return Err(Failure::new("-r and --cap must be at least 1"));
    }
    let eq = parse_equation(coeffs)?;
    let system = parse_system(&eq, ineq, distinct)?;
    let outcome = rado_radius(&eq, r, cap, system.rows());
    let (text, exit) = match &outcome {
        RadiusOutcome::Radius { radius, witness } => (
            format!(
                "radius = {radius}\nwitness coloring (N = {}):\n{}",
                witness.n(),
                witness.to_file_string().trim_end()
            ),
            EXIT_OK,
        ),
        RadiusOutcome::Unknown { cap, witness } => (
            format!(
                "unknown: solution-free colorings exist at every length up to {cap}\nwitness coloring (N = {}):\n{}",
                witness.n(),
                witness.to_file_string().trim_end()
            ),
            EXIT_UNKNOWN,
        ),
    };
    Ok(Outcome {
        text,
        cert: Some(radius_cert(&eq, r, cap, &outcome, system.rows(), meta)),
        exit,
    })
}

fn find_coloring(
    coeffs: &str,
    r: u32,
    n: usize,
    ineq: &[String],
    distinct: bool,
    threads: usize,
    meta: Meta,
) -> Result<Outcome, Failure> {
    if r < 1 || n < 1 {
        return Err(Failure::new("-r and -n must be at least 1"));
    }
    let eq = parse_equation(coeffs)?;
    let system = parse_system(&eq, ineq, distinct)?;
    let opts = SearchOpts {
        threads: threads.max(1),
        ratio_pruning: true,
    };
    let found = search_coloring_opts(&eq, r, n, system.rows(), &opts);
    let (text, exit) = match &found {
        Some(col) => (col.to_file_string().trim_end().to_string(), EXIT_OK),
        None => ("none".to_string(), EXIT_NEGATIVE),
    };
    Ok(Outcome {
        text,
        cert: Some(coloring_cert(
            &eq,
            r,
            n,
            system.rows(),
            found.as_ref(),
            meta,
        )),
        exit,
    })
}

fn verify_coloring_cmd(
    coeffs: &str,
    file: &PathBuf,
    ineq: &[String],
    distinct: bool,
    meta: Meta,
) -> Result<Outcome, Failure> {
    let eq = parse_equation(coeffs)?;
    let system = parse_system(&eq, ineq, distinct)?;
    let col = read_coloring(file)?;
    match verify_coloring(&eq, &col, system.rows()) {
        VerifyOutcome::Valid => Ok(Outcome {
            text: "valid: no monochromatic solution in the interval".to_string(),
            cert: Some(coloring_cert(
                &eq,
                col.r(),
                col.n(),
                system.rows(),
                Some(&col),
                meta,
            )),
            exit: EXIT_OK,
        }),
        VerifyOutcome::Counterexample { tuple, color } => {
            let sol_ref = (&tuple, color);
            Ok(Outcome {
                text: format!("counterexample: {tuple} color {color}"),
                cert: Some(solution_cert(
                    &eq,
                    system.rows(),
                    &col,
                    Some((sol_ref.0, sol_ref.1)),
                    meta,
                )),
                exit: EXIT_NEGATIVE,
            })
        }
    }
}

fn at_family_cmd(n: usize, meta: Meta) -> Result<Outcome, Failure> {
    let eq = at_family(n)?;
    let subset = zero_sum_subset(&eq);
    Ok(Outcome {
        text: eq.to_string(),
        // The generated equation is the certificate's subject; its
        // regularity status is the attached re-verifiable claim.
        cert: Some(regularity_cert(&eq, subset.as_deref(), meta)),
        exit: EXIT_OK,
    })
}

fn solve(
    coeffs: &str,
    coloring: &PathBuf,
    ineq: &[String],
    distinct: bool,
    meta: Meta,
) -> Result<Outcome, Failure> {
    let eq = parse_equation(coeffs)?;
    let system = parse_system(&eq, ineq, distinct)?;
    let col = read_coloring(coloring)?;
    let found = strong_solve(&eq, &system, &col)?;
    match found {
        Some(tuple) => {
            let first: usize = tuple.values()[0]
                .to_string()
                .parse()
                .expect("entry fits interval");
            let color = col.color(first);
            Ok(Outcome {
                text: format!("solution: {tuple} color {color}"),
                cert: Some(solution_cert(
                    &eq,
                    system.rows(),
                    &col,
                    Some((&tuple, color)),
                    meta,
                )),
                exit: EXIT_OK,
            })
        }
        None => Ok(Outcome {
            text: "none".to_string(),
            cert: Some(solution_cert(&eq, system.rows(), &col, None, meta)),
            exit: EXIT_NEGATIVE,
        }),
    }
}

fn walk(
    coeffs: &str,
    row: &str,
    coloring: &PathBuf,
    x: &str,
    meta: Meta,
) -> Result<Outcome, Failure> {
    let eq = parse_equation(coeffs)?;
    let first_row = parse_coeffs(row)?;
    let mat = build_matrix(&eq, &first_row)?;
    let col = read_coloring(coloring)?;
    let x =
        BigInt::from_str(x.trim()).map_err(|_| Failure::new(format!("`{x}` is not an integer")))?;
    let mut colors: BTreeMap<BigInt, u32> = BTreeMap::new();
    for pos in 1..=col.n() {
        colors.insert(BigInt::from(pos as u64), col.color(pos));
    }
    let res = pigeonhole_walk(&eq, &mat, &colors, &x)?;
    let text = format!(
        "pair ({}, {}) via ratio {} = S_{} at ({}, {})\nsolution: {} color {}",
        res.pair.0,
        res.pair.1,
        res.ratio,
        res.ratio_index,
        res.position.0,
        res.position.1,
        res.solution,
        res.color
    );
    Ok(Outcome {
        text,
        cert: Some(walk_cert(&eq, &mat, &col, &x, &res, meta)),
        exit: EXIT_OK,
    })
}

fn verify_cert_cmd(file: &PathBuf) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::new(format!("{}: {e}", file.display())))?;
    let cert: Certificate = serde_json::from_str(&text)
        .map_err(|e| Failure::new(format!("certificate schema: {e}")))?;
    match verify_certificate(&cert)? {
        true => Ok(Outcome {
            text: "certificate verifies".to_string(),
            cert: None,
            exit: EXIT_OK,
        }),
        false => Ok(Outcome {
            text: "certificate REJECTED".to_string(),
            cert: None,
            exit: EXIT_NEGATIVE,
        }),
    }
}

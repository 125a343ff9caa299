use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use drep_cli::dsl::parse_algebra;
use drep_cli::repfile::parse_rep;
use drep_cli::report;
use drep_core::cohomology::{h_presentation, vanishing};
use drep_core::expand::{expand, ExpandedAlgebra};
use drep_core::ncalg::Resolution;
use drep_core::tangent::{check_p2, tangent_cohomology, validate_rep, Representation};

const EXAMPLES: &[(&str, &str)] = &[
    ("kxy", include_str!("../algebras/kxy.alg")),
    ("kxyz", include_str!("../algebras/kxyz.alg")),
    ("usl2", include_str!("../algebras/usl2.alg")),
];

/// Exact cohomology of matrix representation schemes.
#[derive(Parser)]
#[command(name = "drep", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse an algebra file and check the differential axioms.
    Validate { file: PathBuf },
    /// Print the n-by-n matrix expansion of an algebra file.
    Expand {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Present the cohomology in one degree (`--degree M` means H^-M).
    H {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        /// Internal-degree cap for the printed Hilbert function
        /// (default: DREP_MAX_DEGREE, or 6).
        #[arg(long)]
        max_internal_degree: Option<i64>,
    },
    /// Print the Hilbert function of one cohomology module.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        up_to: i64,
    },
    /// Decide whether the cohomology vanishes in one negative degree.
    Vanish {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: u32,
    },
    /// Tangent cohomology at a representation, with an optional cross-check.
    Tangent {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rep: PathBuf,
        /// Cross-check against the Koszul complex on this many commuting
        /// matrices; must equal the number of degree-0 generators.
        #[arg(long)]
        koszul: Option<usize>,
    },
    /// Bundled example algebra files.
    Examples {
        #[command(subcommand)]
        cmd: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Print the names of the bundled examples.
    List,
    /// Print one bundled example file.
    Show { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))
}

/// Parse and fully validate an algebra file, for the subcommands that need a
/// well-formed resolution before doing anything else.
fn load_algebra(path: &Path) -> Result<Resolution, String> {
    let text = read_file(path)?;
    let res = parse_algebra(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
    let report = res.validate();
    if !report.is_valid() {
        let lines = report.describe(res.table()).join("; ");
        return Err(format!("{}: invalid resolution: {}", path.display(), lines));
    }
    Ok(res)
}

fn expand_algebra(path: &Path, n: usize) -> Result<ExpandedAlgebra, String> {
    let res = load_algebra(path)?;
    expand(&res, n).map_err(|e| e.to_string())
}

/// Global internal-degree cap used as a default for the reports.
fn max_degree_cap() -> i64 {
    std::env::var("DREP_MAX_DEGREE").ok().and_then(|s| s.parse().ok()).unwrap_or(6)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Validate { file } => {
            let text = read_file(&file)?;
            let res =
                parse_algebra(&text).map_err(|e| format!("{}: {}", file.display(), e))?;
            let report = res.validate();
            if report.is_valid() {
                println!(
                    "ok: {} generators, differential squares to zero",
                    res.table().len()
                );
                Ok(ExitCode::SUCCESS)
            } else {
                for line in report.describe(res.table()) {
                    println!("violation: {line}");
                }
                Ok(ExitCode::FAILURE)
            }
        }

        Cmd::Expand { file, n, format } => {
            let ea = expand_algebra(&file, n)?;
            match format {
                Format::Text => print!("{}", report::expand_text(&ea)),
                Format::Json => print!("{}", report::expand_json(&ea)),
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::H { file, n, degree, max_internal_degree } => {
            let ea = expand_algebra(&file, n)?;
            let up_to = max_internal_degree.unwrap_or_else(max_degree_cap);
            let h = h_presentation(&ea, degree);
            print!("{}", report::h_text(&ea, &h, up_to));
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Hilbert { file, n, degree, up_to } => {
            let ea = expand_algebra(&file, n)?;
            if drep_core::cohomology::internal_grading(&ea).is_none() {
                return Err("no internal grading; Hilbert function unavailable".into());
            }
            let cap = max_degree_cap();
            let bound = up_to.min(cap);
            if bound < up_to {
                println!("note: --up-to clamped to DREP_MAX_DEGREE = {cap}");
            }
            let h = h_presentation(&ea, degree);
            let values = h
                .presentation
                .hilbert_function(bound)
                .map_err(|_| "no internal grading; Hilbert function unavailable".to_string())?;
            print!("{}", report::hilbert_text(degree, n, &values));
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Vanish { file, n, degree } => {
            if degree == 0 {
                return Err("vanishing applies to degrees >= 1; use `h --degree 0`".into());
            }
            let ea = expand_algebra(&file, n)?;
            let v = vanishing(&ea, degree);
            println!("H^-{} = 0 at n = {}: {}", degree, n, v);
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Tangent { file, n, rep, koszul } => {
            let res = load_algebra(&file)?;
            let rep_text = read_file(&rep)?;
            let data =
                parse_rep(&rep_text, res.table()).map_err(|e| format!("{}: {}", rep.display(), e))?;
            if data.n != n {
                return Err(format!(
                    "{}: matrix size n = {} does not match --n {}",
                    rep.display(),
                    data.n,
                    n
                ));
            }
            let rho = Representation::new(res.table(), n, data.values)
                .map_err(|e| e.to_string())?;
            let check = validate_rep(&res, &rho).map_err(|e| e.to_string())?;
            if !check.is_valid() {
                let table = res.table();
                for (g, residue) in &check.residues {
                    if !residue.is_zero() {
                        println!(
                            "not a representation: d({}) does not evaluate to zero",
                            table.name(*g)
                        );
                    }
                }
                return Ok(ExitCode::FAILURE);
            }
            let spaces = tangent_cohomology(&res, &rho).map_err(|e| e.to_string())?;
            let dims: Vec<usize> = spaces.iter().map(|t| t.dim).collect();
            let p2 = match koszul {
                None => None,
                Some(d) => {
                    let d0 = res.table().ids().filter(|&g| res.table().degree(g) == 0).count();
                    if d != d0 {
                        return Err(format!(
                            "--koszul {d} does not apply: the algebra has {d0} degree-0 generators"
                        ));
                    }
                    Some(check_p2(&res, &rho, dims.len()).map_err(|e| e.to_string())?)
                }
            };
            print!("{}", report::tangent_text(&dims, p2.as_ref()));
            match p2 {
                Some(r) if !r.ok => Ok(ExitCode::FAILURE),
                _ => Ok(ExitCode::SUCCESS),
            }
        }

        Cmd::Examples { cmd } => match cmd {
            ExamplesCmd::List => {
                for (name, _) in EXAMPLES {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
            ExamplesCmd::Show { name } => match EXAMPLES.iter().find(|(n, _)| *n == name) {
                Some((_, text)) => {
                    print!("{text}");
                    Ok(ExitCode::SUCCESS)
                }
                None => Err(format!("no bundled example named `{name}`")),
            },
        },
    }
}

//! Command-line front end for the covercount kernels.
//!
//! Every subcommand prints one JSON report to standard output and exits 0
//! on success, 1 on a domain error (with the error embedded in the report),
//! and 2 on a usage error. `--out <path>` persists the same JSON to a file.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

mod commands;
mod error;
mod ingest;
mod report;

use commands::CommandOutcome;
use report::{render, write_out, ReportDraft};

#[derive(Parser)]
#[command(
    name = "covercount",
    version,
    about = "Exact multiple-cover contributions, instanton inversion, and ADE root-system checks"
)]
struct Cli {
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the positive roots of an ADE diagram.
    Roots {
        /// Diagram kind: A1, A2, ..., D4, D5, ..., E6, E7, E8.
        #[arg(long = "type", value_name = "KIND")]
        kind: String,
    },
    /// Decompose the root pairs into orbits of the reflections in the
    /// unmarked simple roots.
    Orbits {
        #[arg(long = "type", value_name = "KIND")]
        kind: String,
        /// Vertex numbers (comma-separated), `center`, or `adjacent` (E8).
        #[arg(long, value_name = "MARKED")]
        marked: String,
    },
    /// Check that the marked coefficient is a complete orbit invariant for
    /// the contraction cases.
    VerifyAlpha1 {
        /// Run all six contraction cases.
        #[arg(long, conflicts_with_all = ["kind", "marked"])]
        all: bool,
        #[arg(long = "type", value_name = "KIND", required_unless_present = "all", requires = "marked")]
        kind: Option<String>,
        #[arg(long, value_name = "MARKED", required_unless_present = "all")]
        marked: Option<String>,
    },
    /// The length of a contraction case: the largest marked coefficient
    /// over the positive roots.
    Length {
        #[arg(long = "type", value_name = "KIND")]
        kind: String,
        #[arg(long, value_name = "MARKED")]
        marked: String,
    },
    /// Component census of the discriminant: per-order hyperplane counts
    /// and the number of curveless components.
    Discriminant {
        #[arg(long = "type", value_name = "KIND")]
        kind: String,
        #[arg(long, value_name = "MARKED")]
        marked: String,
    },
    /// Certify the subadditivity lower bound for the exceptional cycles.
    VerifyCycleBound {
        /// Run all six contraction cases at every order.
        #[arg(long, conflicts_with_all = ["kind", "marked", "order"])]
        all: bool,
        #[arg(long = "type", value_name = "KIND", required_unless_present = "all", requires = "marked")]
        kind: Option<String>,
        #[arg(long, value_name = "MARKED", required_unless_present = "all")]
        marked: Option<String>,
        /// Marked coefficient to certify, between 1 and the length.
        #[arg(long, value_name = "ORDER", required_unless_present = "all")]
        order: Option<i64>,
    },
    /// Multiple-cover contribution values.
    #[command(subcommand)]
    Contrib(Contrib),
    /// Evaluate Gromov-Witten invariants from instanton numbers by the
    /// degreewise divisor sum.
    Forward {
        /// JSON file with {"instantons": {"1": "1", ...}}.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..))]
        max_degree: u64,
    },
    /// Recover instanton numbers from Gromov-Witten invariants and report
    /// integrality per degree.
    Invert {
        /// JSON file with {"invariants": {"1": "1", ...}}.
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Exit with an error if any instanton number is non-integral.
        #[arg(long)]
        require_integral: bool,
    },
    /// Multiplicities k1, k2 and contributions for an arc into the
    /// length-two deformation space.
    Cd4 {
        /// JSON arc file {"truncation": T, "x1": [[1, "1"]], ...}.
        #[arg(long, value_name = "FILE")]
        arc: PathBuf,
        /// Override the truncation order of the arc file.
        #[arg(long, value_name = "T", value_parser = clap::value_parser!(u32).range(1..))]
        truncation: Option<u32>,
        #[arg(long, value_name = "G", default_value_t = 0)]
        genus: u32,
        /// Largest degree in the contributions table.
        #[arg(long, value_name = "D", default_value_t = 8)]
        max_degree: u64,
    },
}

#[derive(Subcommand)]
enum Contrib {
    /// Degree-d genus-g cover coefficient of a rigid rational curve.
    Fp {
        #[arg(long, value_name = "G")]
        genus: u32,
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
    },
    /// Contribution of an embedded contractable curve with multiplicities k.
    Embedded {
        #[arg(long, value_name = "G")]
        genus: u32,
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        /// Comma-separated multiplicities k1,k2,...
        #[arg(long, value_name = "K", value_delimiter = ',', required = true)]
        k: Vec<u64>,
    },
    /// Contribution of a one-nodal rational curve (proven at genus 0; pass
    /// --conjectural for the genus-g formula).
    Nodal {
        #[arg(long, value_name = "D", value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, value_name = "G", requires = "conjectural")]
        genus: Option<u32>,
        /// Use the conjectural genus-g formula and label the output.
        #[arg(long)]
        conjectural: bool,
    },
    /// Contribution of a contractable chain with the given component degrees.
    Chain {
        #[arg(long, value_name = "G")]
        genus: u32,
        /// Comma-separated component degrees d1,d2,...
        #[arg(long, value_name = "DS", value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        degrees: Vec<u64>,
    },
}

fn dispatch(command: &Command) -> (ReportDraft, CommandOutcome) {
    match command {
        Command::Roots { kind } => {
            let draft = ReportDraft::new("roots", json!({ "type": kind }));
            let outcome = commands::roots(kind);
            (draft, outcome)
        }
        Command::Orbits { kind, marked } => {
            let draft = ReportDraft::new("orbits", json!({ "type": kind, "marked": marked }));
            let outcome = commands::orbits(kind, marked);
            (draft, outcome)
        }
        Command::VerifyAlpha1 { all, kind, marked } => {
            let inputs = if *all {
                json!({ "all": true })
            } else {
                json!({ "type": kind, "marked": marked })
            };
            let draft = ReportDraft::new("verify-alpha1", inputs);
            let outcome = commands::verify_alpha1(*all, kind.as_deref(), marked.as_deref());
            (draft, outcome)
        }
        Command::Length { kind, marked } => {
            let draft = ReportDraft::new("length", json!({ "type": kind, "marked": marked }));
            let outcome = commands::length(kind, marked);
            (draft, outcome)
        }
        Command::Discriminant { kind, marked } => {
            let draft =
                ReportDraft::new("discriminant", json!({ "type": kind, "marked": marked }));
            let outcome = commands::discriminant(kind, marked);
            (draft, outcome)
        }
        Command::VerifyCycleBound {
            all,
            kind,
            marked,
            order,
        } => {
            let inputs = if *all {
                json!({ "all": true })
            } else {
                json!({ "type": kind, "marked": marked, "order": order })
            };
            let draft = ReportDraft::new("verify-cycle-bound", inputs);
            let outcome =
                commands::cycle_bound(*all, kind.as_deref(), marked.as_deref(), *order);
            (draft, outcome)
        }
        Command::Contrib(contrib) => dispatch_contrib(contrib),
        Command::Forward { input, max_degree } => {
            let draft = ReportDraft::new(
                "forward",
                json!({ "input": input.display().to_string(), "max_degree": max_degree }),
            );
            let outcome = commands::forward(input, *max_degree);
            (draft, outcome)
        }
        Command::Invert {
            input,
            require_integral,
        } => {
            let draft = ReportDraft::new(
                "invert",
                json!({
                    "input": input.display().to_string(),
                    "require_integral": require_integral,
                }),
            );
            let outcome = commands::invert(input, *require_integral);
            (draft, outcome)
        }
        Command::Cd4 {
            arc,
            truncation,
            genus,
            max_degree,
        } => {
            let mut draft = ReportDraft::new(
                "cd4",
                json!({
                    "arc": arc.display().to_string(),
                    "truncation": truncation,
                    "genus": genus,
                    "max_degree": max_degree,
                }),
            );
            let outcome = commands::cd4(&mut draft, arc, *truncation, *genus, *max_degree);
            (draft, outcome)
        }
    }
}

fn dispatch_contrib(contrib: &Contrib) -> (ReportDraft, CommandOutcome) {
    match contrib {
        Contrib::Fp { genus, degree } => {
            let draft = ReportDraft::new(
                "contrib-fp",
                json!({ "genus": genus, "degree": degree }),
            );
            let outcome = commands::contrib_fp(*genus, *degree);
            (draft, outcome)
        }
        Contrib::Embedded { genus, degree, k } => {
            let draft = ReportDraft::new(
                "contrib-embedded",
                json!({ "genus": genus, "degree": degree, "k": k }),
            );
            let outcome = commands::contrib_embedded(*genus, *degree, k);
            (draft, outcome)
        }
        Contrib::Nodal {
            degree,
            genus,
            conjectural,
        } => {
            let mut draft = ReportDraft::new(
                "contrib-nodal",
                json!({ "degree": degree, "genus": genus, "conjectural": conjectural }),
            );
            let outcome = commands::contrib_nodal(&mut draft, *degree, *genus, *conjectural);
            (draft, outcome)
        }
        Contrib::Chain { genus, degrees } => {
            let draft = ReportDraft::new(
                "contrib-chain",
                json!({ "genus": genus, "degrees": degrees }),
            );
            let outcome = commands::contrib_chain(*genus, degrees);
            (draft, outcome)
        }
    }
}

fn emit(report: &Value, out: Option<&Path>) -> i32 {
    let text = render(report);
    print!("{text}");
    if let Some(path) = out {
        if let Err(e) = write_out(&text, path) {
            eprintln!("error: {e}");
            return 1;
        }
    }
    0
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli.command) {
        (draft, Ok(results)) => emit(&draft.ok(results), cli.out.as_deref()),
        (draft, Err(failure)) => {
            eprintln!("error: {}", failure.error);
            let report = draft.fail(&failure.error, failure.partial);
            let code = emit(&report, cli.out.as_deref());
            if code == 0 {
                1
            } else {
                code
            }
        }
    }
}

fn main() {
    std::process::exit(run());
}

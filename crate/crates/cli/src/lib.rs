//! The `ktor` command line.
//!
//! Exit codes: 0 on success or a consistent verdict, 1 on usage, parse or
//! evaluation errors, 2 on an obstruction or a failed audit.

mod render;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use knot_torsion::bounds::{
    bound_report, cobordism_consistency, refined_distance_lower, ribbon_cobordism_check,
    ribbon_concordance_check, ribbon_distance_lower, surface_norm, Check, CobordismData,
    ReportOptions,
};
use knot_torsion::complex::{encode, encode_any, AnyComplex};
use knot_torsion::knots::{parse_expr, realize_bigraded, realize_graded, KnotExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_OBSTRUCTED: i32 = 2;

const EXPR_HELP: &str = "\
Knot expressions:
  U            the unknot
  T(p,q)       torus knot, p and q coprime
  m(E)         mirror of E
  E # E        connected sum (left associative)
  L[c_e;...]   L-space knot with Alexander polynomial sum of c t^e
  file:PATH    complex document
  (E)          grouping";

#[derive(Parser, Debug)]
#[command(
    name = "ktor",
    version,
    about = "Knot Floer torsion orders and the bounds they give",
    after_help = EXPR_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology, torsion order and lower bounds for one knot.
    Knot {
        expr: String,
        /// Also compute two-variable torsion orders.
        #[arg(long)]
        bigraded: bool,
        /// Require torsion-distance isomorphisms to preserve gradings.
        #[arg(long)]
        graded_distance: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Lower bounds on distances between two knots.
    Dist {
        expr1: String,
        expr2: String,
        #[arg(long)]
        graded_distance: bool,
    },
    /// Test cobordism data against the torsion-order inequalities.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Reproduction and audit tables.
    Table {
        #[command(subcommand)]
        family: TableFamily,
    },
    /// Print the complex document of an expression.
    Export {
        expr: String,
        #[arg(long)]
        bigraded: bool,
    },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    /// Connected cobordism from K0 to K1 with M maxima and genus g.
    Cobordism {
        #[command(flatten)]
        ords: Ords,
        #[arg(short = 'M', allow_negative_numbers = true)]
        maxima: i64,
        #[arg(short = 'g', allow_negative_numbers = true)]
        genus: i64,
    },
    /// Ribbon concordance from K0 to K1 with b saddles.
    RibbonConcordance {
        #[command(flatten)]
        ords: Ords,
        #[arg(short = 'b', allow_negative_numbers = true)]
        saddles: i64,
    },
    /// Ribbon cobordism of genus g from K0 to K1.
    RibbonCobordism {
        #[command(flatten)]
        ords: Ords,
        #[arg(short = 'g', allow_negative_numbers = true)]
        genus: i64,
    },
    /// Surface norm of a movie with m births, b saddles, M deaths.
    Movie {
        #[arg(short = 'm', allow_negative_numbers = true)]
        minima: i64,
        #[arg(short = 'b', allow_negative_numbers = true)]
        saddles: Option<i64>,
        #[arg(short = 'M', allow_negative_numbers = true)]
        maxima: i64,
        #[arg(short = 'g', allow_negative_numbers = true)]
        genus: i64,
    },
}

#[derive(Args, Debug)]
struct Ords {
    #[arg(long, allow_negative_numbers = true)]
    ord0: i64,
    #[arg(long, allow_negative_numbers = true)]
    ord1: i64,
}

#[derive(Subcommand, Debug)]
enum TableFamily {
    /// Torsion orders of T(p,q) for coprime 2 <= p < q <= max.
    Torus {
        #[arg(long, default_value_t = 12)]
        max: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
    /// Audit `name,ord_v,bridge` rows against Ord_v <= br - 1.
    Ingest {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = TableFormat::Md)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
    JsonLines,
}

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn parse(s: &str) -> Result<KnotExpr, String> {
    parse_expr(s).map_err(|e| e.to_string())
}

fn verdict(check: Check, out: &mut dyn Write) -> Result<i32, String> {
    writeln!(out, "{check}").map_err(|e| e.to_string())?;
    Ok(if check.consistent {
        EXIT_OK
    } else {
        EXIT_OBSTRUCTED
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match cmd {
        Command::Knot {
            expr,
            bigraded,
            graded_distance,
            format,
        } => {
            let e = parse(&expr)?;
            let opts = ReportOptions {
                bigraded,
                graded_distance,
            };
            let report = bound_report(&e, opts).map_err(|e| e.to_string())?;
            match format {
                ReportFormat::Text => out
                    .write_all(render::report_text(&report).as_bytes())
                    .map_err(io)?,
                ReportFormat::Json => {
                    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
                    writeln!(out, "{json}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Dist {
            expr1,
            expr2,
            graded_distance,
        } => {
            let (a, b) = (parse(&expr1)?, parse(&expr2)?);
            let refined = refined_distance_lower(&a, &b).map_err(|e| e.to_string())?;
            let ribbon =
                ribbon_distance_lower(&a, &b, graded_distance).map_err(|e| e.to_string())?;
            writeln!(out, "refined cobordism distance >= {refined}").map_err(io)?;
            writeln!(out, "oriented band moves >= {refined}").map_err(io)?;
            writeln!(
                out,
                "ribbon distance >= d_t = {}",
                render::finite_or_inf(ribbon)
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Check { kind } => {
            let check = match kind {
                CheckKind::Cobordism {
                    ords,
                    maxima,
                    genus,
                } => cobordism_consistency(ords.ord0, ords.ord1, maxima, genus),
                CheckKind::RibbonConcordance { ords, saddles } => {
                    ribbon_concordance_check(ords.ord0, ords.ord1, saddles)
                }
                CheckKind::RibbonCobordism { ords, genus } => {
                    ribbon_cobordism_check(ords.ord0, ords.ord1, genus)
                }
                CheckKind::Movie {
                    minima,
                    saddles,
                    maxima,
                    genus,
                } => {
                    let d = CobordismData {
                        m: minima,
                        b: saddles,
                        big_m: maxima,
                        g: genus,
                    };
                    let n = surface_norm(&d).map_err(|e| e.to_string())?;
                    write!(
                        out,
                        "|S| = max{{{minima}, {maxima}}} + 2*{genus} = {}",
                        n.norm
                    )
                    .map_err(io)?;
                    if let (Some(form), Some(b)) = (n.saddle_form, n.saddles) {
                        write!(
                            out,
                            " = max{{{b} - {minima}, {b} - {maxima}}} = {form} <= b = {b}"
                        )
                        .map_err(io)?;
                    }
                    writeln!(out).map_err(io)?;
                    return Ok(EXIT_OK);
                }
            };
            verdict(check.map_err(|e| e.to_string())?, out)
        }
        Command::Table { family } => match family {
            TableFamily::Torus { max, format } => table::torus(max, format, out),
            TableFamily::Ingest { path, format } => table::ingest(&path, format, out, err),
        },
        Command::Export { expr, bigraded } => {
            let e = parse(&expr)?;
            let text = if bigraded {
                encode(&realize_bigraded(&e).map_err(|e| e.to_string())?)
            } else {
                encode_any(&AnyComplex::Graded(
                    realize_graded(&e).map_err(|e| e.to_string())?,
                ))
            };
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

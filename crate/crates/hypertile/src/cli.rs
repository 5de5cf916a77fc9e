//! Argument parsing and dispatch for the `hypertile` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use hypertile_core::BigInt;

use crate::document::ProblemDocument;
use crate::report::{self, Report};
use crate::svg::render_svg;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "hypertile", version, about = "Zonotopal tilings and their hypertoric invariants")]
struct Cli {
    /// Print the full report as JSON instead of a summary line.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when the answer is negative (irregular, invalid, ...).
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Faces of the zonotope Z(a, u).
    Faces { input: PathBuf },
    /// Covectors of the configuration.
    Covectors { input: PathBuf },
    /// The regular tiling cut out by the document's lift.
    TileFromLift { input: PathBuf },
    /// All tilings of Z(a).
    EnumerateTilings { input: PathBuf },
    /// Check the tiling axioms.
    ValidateTiling { input: PathBuf },
    /// Decide regularity, with a witness lift.
    Regularity { input: PathBuf },
    /// The lattices of relations and support functions.
    SupportLattice { input: PathBuf },
    /// Positivity of a divisor class.
    ClassifyDivisor {
        input: PathBuf,
        /// Coefficients of the class, comma separated.
        #[arg(short = 'r', long = "class", value_delimiter = ',', allow_hyphen_values = true, required = true)]
        r: Vec<i64>,
    },
    /// Extended core, local fans and weights.
    CoreReport { input: PathBuf },
    /// Class groups and the equivariant Picard group.
    ClassGroups { input: PathBuf },
    /// Smoothness, singularity and projectivity flags.
    GeometryFlags { input: PathBuf },
    /// The Lawrence fan.
    LawrenceFan { input: PathBuf },
    /// Generators of the ring of invariants at the document's sign vector.
    RingGenerators { input: PathBuf },
    /// Draw a planar tiling.
    RenderSvg {
        input: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn execute(command: &Command) -> Result<Report, CliError> {
    use Command::*;
    let load = |p: &PathBuf| ProblemDocument::load(p);
    match command {
        Faces { input } => report::faces_report(&load(input)?),
        Covectors { input } => report::covectors_report(&load(input)?),
        TileFromLift { input } => report::tile_from_lift_report(&load(input)?),
        EnumerateTilings { input } => report::enumerate_report(&load(input)?),
        ValidateTiling { input } => report::validate_report(&load(input)?),
        Regularity { input } => report::regularity_report(&load(input)?),
        SupportLattice { input } => report::support_lattice_report(&load(input)?),
        ClassifyDivisor { input, r } => {
            let r: Vec<BigInt> = r.iter().map(|&x| BigInt::from(x)).collect();
            report::classify_divisor_report(&load(input)?, &r)
        }
        CoreReport { input } => report::core_report(&load(input)?),
        ClassGroups { input } => report::class_groups_report(&load(input)?),
        GeometryFlags { input } => report::geometry_flags_report(&load(input)?),
        LawrenceFan { input } => report::lawrence_report(&load(input)?),
        RingGenerators { input } => report::ring_report(&load(input)?),
        RenderSvg { input, output } => {
            let t = report::checked_tiling(&load(input)?)?;
            let (svg, stats) = render_svg(&t)?;
            fs::write(output, svg).map_err(|e| CliError::Io(output.display().to_string(), e))?;
            Ok(Report {
                summary: format!("wrote {} ({} polygons, {} vertex marks)", output.display(), stats.polygons, stats.vertex_marks),
                data: json!({ "output": output.display().to_string(), "polygons": stats.polygons, "vertex_marks": stats.vertex_marks }),
                negative: false,
            })
        }
    }
}

/// Runs the command line `args` (program name first), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status: 0 on success, 1
/// for a negative answer under `--strict`, 2 for input errors.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(rep) => {
            let text = if cli.json {
                serde_json::to_string_pretty(&json!({ "summary": rep.summary, "report": rep.data })).expect("values serialize")
            } else {
                rep.summary.clone()
            };
            let _ = writeln!(out, "{text}");
            if cli.strict && rep.negative {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "hypertile: {e}");
            2
        }
    }
}

//! Command-line front end: parse input files, run the library, verify the
//! result with the brute-force oracles, and print a JSON report.
//!
//! Exit codes: 0 verified, 1 verification failed, 2 input error.

mod input;
mod report;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use octant_cover::staircase::color_points;
use octant_cover::verify::{exhaust_colorings, verify_coloring, verify_decomposition, verify_triangle_decomposition};
use octant_cover::{
    antichain, decompose_cover, decompose_triangle_cover, lower_bound_hypergraph,
    IncomparableSequence, LowerBoundFixture, Trace, VerifyReport,
};

use input::{DecomposeInput, Format};
use report::{ReportDocument, Stats, StepCounts};

#[derive(Parser)]
#[command(
    name = "octant-cover",
    version,
    about = "Two-color point sets and decompose octant covers, with built-in verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Two-color 3D points so every octant with at least 12 of them has both colors
    Color {
        /// Points file: CSV rows x,y,z or JSON {"points": [[x,y,z], ...]}
        input: PathBuf,
        /// Input format; inferred from the file extension when omitted
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the replayable sweep trace as JSON
        #[arg(long)]
        trace_out: Option<PathBuf>,
        /// Render the sweep as SVG frames into this directory
        #[arg(long)]
        trace_svg: Option<PathBuf>,
        /// Verify this coloring (JSON {"colors": ["red", ...]}) instead of computing one
        #[arg(long)]
        colors: Option<PathBuf>,
    },
    /// Split an octant family (or triangle-homothet family) into two covers
    Decompose {
        /// Octants: CSV rows x,y,z or JSON {"octants": ...}; triangles: JSON
        /// {"frame": [[x,y]; 3], "homothets": [{"scale": s, "t": [x,y]}, ...]}
        input: PathBuf,
        /// Input format; inferred from the file extension when omitted
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Multiplicity at which both classes must cover (the split guarantees 12)
        #[arg(long, default_value_t = 12)]
        threshold: usize,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the 10-point, 12-triple system admits no proper two-coloring
    Lowerbound {
        /// Also validate this realization fixture (JSON {"points", "triples"})
        #[arg(long)]
        realization: Option<PathBuf>,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color an incomparable planar sequence online at interval threshold 4
    Bottomless {
        /// Points file: CSV rows x,y or JSON {"points": [[x,y], ...]}
        input: PathBuf,
        /// Input format; inferred from the file extension when omitted
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also write the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a saved sweep trace as SVG frames
    Render {
        /// Trace JSON produced by `color --trace-out`
        trace: PathBuf,
        /// Directory for step_NNNN.svg and final.svg
        #[arg(long, default_value = "render")]
        out_dir: PathBuf,
    },
}

fn main() {
    match run(Cli::parse()) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Color { input, format, out, trace_out, trace_svg, colors } => cmd_color(
            &input,
            format,
            out.as_deref(),
            trace_out.as_deref(),
            trace_svg.as_deref(),
            colors.as_deref(),
        ),
        Command::Decompose { input, format, threshold, out } => {
            cmd_decompose(&input, format, threshold, out.as_deref())
        }
        Command::Lowerbound { realization, out } => {
            cmd_lowerbound(realization.as_deref(), out.as_deref())
        }
        Command::Bottomless { input, format, out } => {
            cmd_bottomless(&input, format, out.as_deref())
        }
        Command::Render { trace, out_dir } => cmd_render(&trace, &out_dir),
    }
}

fn cmd_color(
    input: &Path,
    format: Option<Format>,
    out: Option<&Path>,
    trace_out: Option<&Path>,
    trace_svg: Option<&Path>,
    colors_path: Option<&Path>,
) -> Result<i32> {
    let points = input::read_points3(input, format)?;
    let mut stats = Stats { n: points.len(), ..Stats::default() };
    let (colors, trace) = match colors_path {
        Some(path) => (input::read_colors(path, points.len())?, None),
        None => {
            let (colors, _, trace) = color_points(&points);
            (colors, Some(trace))
        }
    };
    if let Some(trace) = &trace {
        let (a, b, c) = trace.step_counts();
        stats.steps = Some(StepCounts { a, b, c });
        if let Some(path) = trace_out {
            let mut text = serde_json::to_string_pretty(trace).context("serializing trace")?;
            text.push('\n');
            fs::write(path, text)
                .with_context(|| format!("writing trace to {}", path.display()))?;
        }
        if let Some(dir) = trace_svg {
            svg::render_trace(trace, dir)?;
        }
    }
    let vr = verify_coloring(&points, &colors, 12).context("verifying coloring")?;
    stats.traces_checked = Some(vr.traces_checked);
    stats.max_monochromatic = vr.max_monochromatic;
    finish(vr, stats, out, |rep, vr| {
        rep.colors = Some(colors);
        rep.witness = vr.witness;
    })
}

fn cmd_decompose(
    input: &Path,
    format: Option<Format>,
    threshold: usize,
    out: Option<&Path>,
) -> Result<i32> {
    let (n, decomposition, vr) = match input::read_decompose_input(input, format)? {
        DecomposeInput::Octants(family) => {
            let d = decompose_cover(&family);
            let vr = verify_decomposition(&family, &d, threshold)
                .context("verifying decomposition")?;
            (family.len(), d, vr)
        }
        DecomposeInput::Triangles(hf) => {
            let d = decompose_triangle_cover(&hf)
                .map_err(|e| anyhow!("{}: {e}", input.display()))?;
            let vr = verify_triangle_decomposition(&hf, &d, threshold)
                .context("verifying decomposition")?;
            (hf.homothets.len(), d, vr)
        }
    };
    let mut stats = Stats { n, ..Stats::default() };
    stats.traces_checked = Some(vr.traces_checked);
    finish(vr, stats, out, |rep, vr| {
        rep.partition = Some(decomposition);
        rep.witness = vr.witness;
    })
}

fn cmd_lowerbound(realization: Option<&Path>, out: Option<&Path>) -> Result<i32> {
    let h = lower_bound_hypergraph();
    let found = exhaust_colorings(&h).context("exhausting colorings")?;
    let mut stats = Stats { n: h.n(), ..Stats::default() };
    stats.colorings_checked = Some(1usize << h.n());

    let mut fixture_failure = None;
    if let Some(path) = realization {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading realization {}", path.display()))?;
        let fixture = LowerBoundFixture::from_json(&text)
            .with_context(|| format!("parsing realization {}", path.display()))?;
        if let Err(e) = fixture.validate() {
            fixture_failure = Some(format!("realization {}: {e}", path.display()));
        }
    }

    let (status, colors, code) = match (&found, &fixture_failure) {
        (Some(colors), _) => (report::STATUS_COLORABLE, Some(colors.clone()), 1),
        (None, Some(_)) => (report::STATUS_VERIFICATION_FAILED, None, 1),
        (None, None) => (report::STATUS_UNCOLORABLE, None, 0),
    };
    let mut rep = ReportDocument::new(status, stats);
    rep.colors = colors;
    rep.detail = fixture_failure;
    report::emit(&rep, out)?;
    Ok(code)
}

fn cmd_bottomless(input: &Path, format: Option<Format>, out: Option<&Path>) -> Result<i32> {
    let points = input::read_points2(input, format)?;
    let seq = IncomparableSequence::new(points)
        .map_err(|e| anyhow!("{}: {e}", input.display()))?;
    let run = antichain::color_incomparable(&seq);
    let vr = antichain::verify_incomparable_prefixes(&seq, &run, 4)
        .context("verifying prefixes")?;
    let mut stats = Stats { n: seq.len(), ..Stats::default() };
    stats.traces_checked = Some(vr.traces_checked);
    finish(vr, stats, out, |rep, vr| {
        rep.colors = Some(run.colors);
        rep.colored_at = Some(run.colored_at);
        rep.witness = vr.witness;
    })
}

fn cmd_render(trace_path: &Path, out_dir: &Path) -> Result<i32> {
    let text = fs::read_to_string(trace_path)
        .with_context(|| format!("reading trace {}", trace_path.display()))?;
    let trace: Trace = serde_json::from_str(&text)
        .with_context(|| format!("parsing trace {}", trace_path.display()))?;
    let files = svg::render_trace(&trace, out_dir)?;
    println!("wrote {} files to {}", files.len(), out_dir.display());
    Ok(0)
}

/// Assemble the report around a verification result and map `ok` to the
/// exit code.
fn finish(
    vr: VerifyReport,
    stats: Stats,
    out: Option<&Path>,
    fill: impl FnOnce(&mut ReportDocument, VerifyReport),
) -> Result<i32> {
    let ok = vr.ok;
    let status = if ok { report::STATUS_OK } else { report::STATUS_VERIFICATION_FAILED };
    let mut rep = ReportDocument::new(status, stats);
    fill(&mut rep, vr);
    report::emit(&rep, out)?;
    Ok(if ok { 0 } else { 1 })
}

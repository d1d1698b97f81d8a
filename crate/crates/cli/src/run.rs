//! Subcommand orchestration: resolve inputs, run the requested method per
//! pair, write one output per pair, map failures to exit codes.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use log::{debug, info};

use kli::{
    generate_frames, kli_interpolate, path_deviation, slerp_sample, unit_cube_corners, KliConfig,
    UnitQuaternion,
};

use crate::args::{Cli, Command, CompareArgs, InputArgs, KliArgs, SlerpArgs};
use crate::error::CliError;
use crate::io::{
    curve_path, frames_path, parse_quaternion, read_pairs, write_curve, write_frames,
    ComparisonDoc, ConfigEcho, Pair,
};

/// Executes a parsed command line and returns the process exit code,
/// printing the single-line diagnostic for failures on stderr.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(()) => 0,
        Err(e) if e.is_broken_pipe() => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Kli(args) => run_kli(args),
        Command::Slerp(args) => run_slerp(args),
        Command::Compare(args) => run_compare(args),
    }
}

/// Turns the input flags into a list of pairs; `batch` records whether they
/// came from a file (and outputs therefore need index-suffixed names).
fn resolve_pairs(input: &InputArgs) -> Result<(Vec<Pair>, bool), CliError> {
    match (&input.p, &input.r, &input.pairs) {
        (Some(p), Some(r), None) => Ok((vec![(parse_quaternion(p)?, parse_quaternion(r)?)], false)),
        (None, None, Some(path)) => Ok((read_pairs(path)?, true)),
        _ => Err(CliError::Usage(
            "provide either --p and --r, or --pairs <path>".into(),
        )),
    }
}

fn require_out_for_batch(batch: bool, out: &Option<PathBuf>) -> Result<(), CliError> {
    if batch && out.is_none() {
        return Err(CliError::Usage(
            "--pairs writes one file per pair and needs --out (files are named stem_0, stem_1, …)"
                .into(),
        ));
    }
    Ok(())
}

/// Runs `write_fn` against the file at `path`, or stdout when `path` is
/// `None`.
fn write_to(
    path: Option<&Path>,
    write_fn: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<(), CliError> {
    match path {
        Some(path) => {
            let mut writer = BufWriter::new(File::create(path)?);
            write_fn(&mut writer)?;
            writer.flush()?;
            info!("wrote {}", path.display());
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_fn(&mut lock)?;
        }
    }
    Ok(())
}

/// Applies the shortest-path convention outside the flow: negate the target
/// when the endpoints' inner product is negative.
fn effective_target(
    p: &UnitQuaternion<f64>,
    r: &UnitQuaternion<f64>,
    shortest: bool,
) -> UnitQuaternion<f64> {
    if shortest && p.dot(r) < 0.0 {
        -*r
    } else {
        *r
    }
}

fn run_kli(args: KliArgs) -> Result<(), CliError> {
    let (pairs, batch) = resolve_pairs(&args.input)?;
    require_out_for_batch(batch, &args.output.out)?;
    if args.frames.is_some() && args.output.out.is_none() {
        return Err(CliError::Usage(
            "--frames writes a sibling .frames file and needs --out".into(),
        ));
    }

    let cfg = KliConfig::new(
        args.flow.epsilon,
        args.flow.delta,
        args.flow.step,
        args.flow.t_max,
    )?
    .with_shortest_path(args.shortest);
    let echo = ConfigEcho::Kli {
        epsilon: args.flow.epsilon,
        delta: args.flow.delta,
        step_h: args.flow.step,
        t_max: args.flow.t_max,
        shortest_path: args.shortest,
    };
    debug!("flow config: {cfg:?}");

    for (index, &(p, r)) in pairs.iter().enumerate() {
        let curve = kli_interpolate(p, r, &cfg)?;
        info!(
            "pair {index}: converged at t = {} with {} samples",
            curve.converged_time(),
            curve.len()
        );
        let file_index = batch.then_some(index);
        let path = args
            .output
            .out
            .as_ref()
            .map(|out| curve_path(out, file_index));
        write_to(path.as_deref(), |w| {
            write_curve(w, &curve, echo, args.output.format, args.output.hopf)
        })?;

        if let Some(times) = &args.frames {
            let corners = unit_cube_corners::<f64>();
            let frames = generate_frames(p, r, times, &corners, &cfg)?;
            let out = args.output.out.as_ref().expect("checked above");
            let path = frames_path(out, file_index);
            write_to(Some(&path), |w| {
                write_frames(w, &corners, &frames, args.output.format)
            })?;
        }
    }
    Ok(())
}

fn run_slerp(args: SlerpArgs) -> Result<(), CliError> {
    let (pairs, batch) = resolve_pairs(&args.input)?;
    require_out_for_batch(batch, &args.output.out)?;

    let echo = ConfigEcho::Slerp {
        samples: args.samples,
        shortest_path: args.shortest,
    };
    for (index, &(p, r)) in pairs.iter().enumerate() {
        let target = effective_target(&p, &r, args.shortest);
        let curve = slerp_sample(p, target, args.samples)?;
        info!("pair {index}: sampled {} points", curve.len());
        let file_index = batch.then_some(index);
        let path = args
            .output
            .out
            .as_ref()
            .map(|out| curve_path(out, file_index));
        write_to(path.as_deref(), |w| {
            write_curve(w, &curve, echo, args.output.format, args.output.hopf)
        })?;
    }
    Ok(())
}

fn run_compare(args: CompareArgs) -> Result<(), CliError> {
    let (pairs, batch) = resolve_pairs(&args.input)?;
    require_out_for_batch(batch, &args.out)?;

    // The shortest-path flip is applied to the endpoints once, so both
    // methods see identical targets and the comparison is apples to apples.
    let cfg = KliConfig::new(
        args.flow.epsilon,
        args.flow.delta,
        args.flow.step,
        args.flow.t_max,
    )?;

    for (index, &(p, r)) in pairs.iter().enumerate() {
        let target = effective_target(&p, &r, args.shortest);
        let flow_curve = kli_interpolate(p, target, &cfg)?;
        let reference = slerp_sample(p, target, args.samples)?;
        let record: ComparisonDoc = path_deviation(&flow_curve, &p, &target)?.into();
        debug!(
            "pair {index}: reference arc sampled at {} points deviates {} from itself",
            reference.len(),
            path_deviation(&reference, &p, &target)?.max_deviation
        );
        info!(
            "pair {index}: max deviation {} over {} samples",
            record.max_deviation, record.sample_count
        );
        let file_index = batch.then_some(index);
        let path = args.out.as_ref().map(|out| curve_path(out, file_index));
        write_to(path.as_deref(), |w| {
            serde_json::to_writer_pretty(&mut *w, &record)?;
            writeln!(w)?;
            Ok(())
        })?;
    }
    Ok(())
}

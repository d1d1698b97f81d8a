//! Input parsing and output serialization.
//!
//! Numbers are rendered with Rust's shortest round-trip formatting (17
//! significant digits when needed), so every CSV or JSON value re-parses to
//! the exact bit pattern that was written; the JSON documents are also read
//! back by tests to verify that round trip.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use kli::{hopf_project, InterpolationCurve, UnitQuaternion, Vector3};

use crate::args::OutputFormat;
use crate::error::CliError;

// ─────────────────────────── input ───────────────────────────

/// A start/target rotation pair, the unit every subcommand operates on.
pub type Pair = (UnitQuaternion<f64>, UnitQuaternion<f64>);

/// Parses an inline `w,x,y,z` quaternion, renormalizing within the library's
/// `1e-6` unit-norm tolerance.
pub fn parse_quaternion(text: &str) -> Result<UnitQuaternion<f64>, CliError> {
    let fields: Vec<&str> = text.split(',').collect();
    if fields.len() != 4 {
        return Err(CliError::Parse {
            line: None,
            msg: format!(
                "expected 4 comma-separated components (w,x,y,z), found {}",
                fields.len()
            ),
        });
    }
    let mut components = [0.0f64; 4];
    for (slot, field) in components.iter_mut().zip(&fields) {
        *slot = field.trim().parse().map_err(|_| CliError::Parse {
            line: None,
            msg: format!("invalid number {:?}", field.trim()),
        })?;
    }
    let [w, x, y, z] = components;
    UnitQuaternion::from_components(w, x, y, z).map_err(CliError::from)
}

/// Reads a batch file of rotation pairs, one
/// `pw,px,py,pz,rw,rx,ry,rz` line each.
///
/// `#`-prefixed lines and blank lines are skipped. Every parse or
/// validation failure names the 1-based line it came from; an empty file is
/// a valid empty batch.
pub fn read_pairs(path: &Path) -> Result<Vec<Pair>, CliError> {
    let text = fs::read_to_string(path)?;
    let mut pairs = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(CliError::Parse {
                line: Some(line_no),
                msg: format!("expected 8 comma-separated values, found {}", fields.len()),
            });
        }
        let mut values = [0.0f64; 8];
        for (slot, field) in values.iter_mut().zip(&fields) {
            *slot = field.trim().parse().map_err(|_| CliError::Parse {
                line: Some(line_no),
                msg: format!("invalid number {:?}", field.trim()),
            })?;
        }
        let quaternion = |w, x, y, z, which: &str| {
            UnitQuaternion::from_components(w, x, y, z).map_err(|e| CliError::Parse {
                line: Some(line_no),
                msg: format!("{which} quaternion: {e}"),
            })
        };
        let p = quaternion(values[0], values[1], values[2], values[3], "start")?;
        let r = quaternion(values[4], values[5], values[6], values[7], "target")?;
        pairs.push((p, r));
    }
    Ok(pairs)
}

// ─────────────────────────── output documents ───────────────────────────

/// Echo of the parameters that produced a curve, embedded in JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum ConfigEcho {
    Kli {
        epsilon: f64,
        delta: f64,
        step_h: f64,
        t_max: f64,
        shortest_path: bool,
    },
    Slerp {
        samples: usize,
        shortest_path: bool,
    },
}

/// One trajectory sample as serialized; mirrors the CSV columns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub t: f64,
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hx: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hz: Option<f64>,
}

/// The JSON form of a trajectory: the CSV fields plus convergence time and a
/// configuration echo under a `config` key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveDoc {
    pub config: ConfigEcho,
    pub converged_time: f64,
    pub samples: Vec<SampleRow>,
}

impl CurveDoc {
    /// Captures a curve (optionally Hopf-augmented) for JSON output.
    pub fn from_curve(curve: &InterpolationCurve<f64>, config: ConfigEcho, hopf: bool) -> Self {
        let samples = curve
            .samples()
            .iter()
            .map(|(t, q)| {
                let h = hopf.then(|| hopf_project(q));
                SampleRow {
                    t: *t,
                    w: q.w,
                    x: q.x,
                    y: q.y,
                    z: q.z,
                    hx: h.map(|h| h[0]),
                    hy: h.map(|h| h[1]),
                    hz: h.map(|h| h[2]),
                }
            })
            .collect();
        CurveDoc {
            config,
            converged_time: curve.converged_time(),
            samples,
        }
    }
}

/// JSON form of a frames run: the object's points and each rotated copy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FramesDoc {
    pub object: Vec<Vector3<f64>>,
    pub frames: Vec<FrameRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrameRow {
    pub t: f64,
    pub points: Vec<Vector3<f64>>,
}

/// JSON form of the compare subcommand's output; mirrors
/// [`kli::PathComparison`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComparisonDoc {
    pub max_deviation: f64,
    pub endpoint_error: f64,
    pub converged_time: f64,
    pub sample_count: usize,
}

impl From<kli::PathComparison<f64>> for ComparisonDoc {
    fn from(c: kli::PathComparison<f64>) -> Self {
        ComparisonDoc {
            max_deviation: c.max_deviation,
            endpoint_error: c.endpoint_error,
            converged_time: c.converged_time,
            sample_count: c.sample_count,
        }
    }
}

// ─────────────────────────── writers ───────────────────────────

/// Writes a curve in the requested format: CSV with header
/// `t,w,x,y,z[,hx,hy,hz]`, or the [`CurveDoc`] JSON document.
pub fn write_curve<W: Write>(
    mut out: W,
    curve: &InterpolationCurve<f64>,
    config: ConfigEcho,
    format: OutputFormat,
    hopf: bool,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Csv => {
            if hopf {
                writeln!(out, "t,w,x,y,z,hx,hy,hz")?;
                for (t, q) in curve.samples() {
                    let h = hopf_project(q);
                    writeln!(
                        out,
                        "{t},{},{},{},{},{},{},{}",
                        q.w, q.x, q.y, q.z, h[0], h[1], h[2]
                    )?;
                }
            } else {
                writeln!(out, "t,w,x,y,z")?;
                for (t, q) in curve.samples() {
                    writeln!(out, "{t},{},{},{},{}", q.w, q.x, q.y, q.z)?;
                }
            }
        }
        OutputFormat::Json => {
            let doc = CurveDoc::from_curve(curve, config, hopf);
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Writes frame data: CSV rows `t,i,x,y,z` (one per object point), or the
/// [`FramesDoc`] JSON document.
pub fn write_frames<W: Write>(
    mut out: W,
    object: &[Vector3<f64>],
    frames: &[(f64, Vec<Vector3<f64>>)],
    format: OutputFormat,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "t,i,x,y,z")?;
            for (t, points) in frames {
                for (i, point) in points.iter().enumerate() {
                    writeln!(out, "{t},{i},{},{},{}", point[0], point[1], point[2])?;
                }
            }
        }
        OutputFormat::Json => {
            let doc = FramesDoc {
                object: object.to_vec(),
                frames: frames
                    .iter()
                    .map(|(t, points)| FrameRow {
                        t: *t,
                        points: points.clone(),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

// ─────────────────────────── path derivation ───────────────────────────

/// Output path for one curve of a run: `--out` itself for a single pair, or
/// `stem_<index>.<ext>` alongside it for batch runs.
pub fn curve_path(out: &Path, index: Option<usize>) -> PathBuf {
    match index {
        None => out.to_path_buf(),
        Some(i) => with_stem_suffix(out, &format!("_{i}")),
    }
}

/// Output path for frame data: the curve path with `.frames` spliced in
/// before the extension.
pub fn frames_path(out: &Path, index: Option<usize>) -> PathBuf {
    let base = curve_path(out, index);
    with_stem_suffix(&base, ".frames")
}

fn with_stem_suffix(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}{suffix}"),
    };
    path.with_file_name(name)
}

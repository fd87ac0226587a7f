//! Input file parsing. CSV rows are coordinates with an optional header
//! line; JSON documents use the shapes documented on each reader. All
//! parse failures name the file and position.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Deserialize;

use octant_cover::duality::{Homothet, HomothetFamily, OctantFamily, TriangleFrame};
use octant_cover::geom::{Point2, Point3};
use octant_cover::graph::Coloring;
use octant_cover::PointSet3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn resolve_format(path: &Path, explicit: Option<Format>) -> Result<Format> {
    if let Some(f) = explicit {
        return Ok(f);
    }
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(|s| s.to_ascii_lowercase())
        .as_deref()
    {
        Some("csv") => Ok(Format::Csv),
        Some("json") => Ok(Format::Json),
        _ => bail!(
            "{}: cannot infer the input format from the extension; pass --format csv|json",
            path.display()
        ),
    }
}

/// Rows of `arity` finite numbers. The first row may be a header: it is
/// skipped when none of its fields parse as a number.
fn read_csv_rows(path: &Path, arity: usize) -> Result<Vec<Vec<f64>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let mut rows = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.with_context(|| format!("{}: reading record {}", path.display(), i + 1))?;
        let line = rec.position().map_or((i + 1) as u64, |p| p.line());
        if rec.len() == 1 && rec[0].is_empty() {
            continue;
        }
        let parsed: Vec<Option<f64>> = rec
            .iter()
            .map(|f| f.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect();
        if i == 0 && parsed.iter().all(|v| v.is_none()) {
            continue; // header line
        }
        if rec.len() != arity {
            bail!(
                "{}: line {}: expected {} columns, found {}",
                path.display(),
                line,
                arity,
                rec.len()
            );
        }
        let mut row = Vec::with_capacity(arity);
        for (j, v) in parsed.iter().enumerate() {
            match v {
                Some(v) => row.push(*v),
                None => bail!(
                    "{}: line {}: column {} ({:?}) is not a finite number",
                    path.display(),
                    line,
                    j + 1,
                    &rec[j]
                ),
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn parse_json<'a, T: Deserialize<'a>>(path: &Path, text: &'a str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("parsing {}", path.display()))
}

fn ensure_finite(path: &Path, what: &str, index: usize, coords: &[f64]) -> Result<()> {
    if coords.iter().any(|v| !v.is_finite()) {
        bail!(
            "{}: {} {} has a non-finite coordinate",
            path.display(),
            what,
            index
        );
    }
    Ok(())
}

#[derive(Deserialize)]
struct Points3Doc {
    points: Vec<[f64; 3]>,
}

#[derive(Deserialize)]
struct Points2Doc {
    points: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
struct OctantsDoc {
    octants: Vec<[f64; 3]>,
}

#[derive(Deserialize)]
struct TrianglesDoc {
    frame: [[f64; 2]; 3],
    homothets: Vec<HomothetDoc>,
}

#[derive(Deserialize)]
struct HomothetDoc {
    scale: f64,
    t: [f64; 2],
}

#[derive(Deserialize)]
struct ColorsDoc {
    colors: Coloring,
}

/// 3D points: CSV columns x,y,z or JSON `{"points": [[x,y,z], ...]}`.
pub fn read_points3(path: &Path, explicit: Option<Format>) -> Result<PointSet3> {
    let rows = match resolve_format(path, explicit)? {
        Format::Csv => read_csv_rows(path, 3)?,
        Format::Json => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let doc: Points3Doc = parse_json(path, &text)?;
            doc.points.iter().map(|r| r.to_vec()).collect()
        }
    };
    let mut pts = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        ensure_finite(path, "point", i, row)?;
        pts.push(Point3::new(row[0], row[1], row[2]));
    }
    Ok(PointSet3::new(pts))
}

/// Planar points: CSV columns x,y or JSON `{"points": [[x,y], ...]}`.
pub fn read_points2(path: &Path, explicit: Option<Format>) -> Result<Vec<Point2<f64>>> {
    let rows = match resolve_format(path, explicit)? {
        Format::Csv => read_csv_rows(path, 2)?,
        Format::Json => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let doc: Points2Doc = parse_json(path, &text)?;
            doc.points.iter().map(|r| r.to_vec()).collect()
        }
    };
    let mut pts = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        ensure_finite(path, "point", i, row)?;
        pts.push(Point2::new(row[0], row[1]));
    }
    Ok(pts)
}

/// A coloring to verify: JSON `{"colors": ["red", "blue", ...]}`.
pub fn read_colors(path: &Path, expected: usize) -> Result<Coloring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc: ColorsDoc = parse_json(path, &text)?;
    if doc.colors.len() != expected {
        bail!(
            "{}: {} colors for {} points",
            path.display(),
            doc.colors.len(),
            expected
        );
    }
    Ok(doc.colors)
}

pub enum DecomposeInput {
    Octants(OctantFamily<f64>),
    Triangles(HomothetFamily<f64>),
}

/// Octant apexes (CSV x,y,z rows or JSON `{"octants": [[x,y,z], ...]}`),
/// or a triangle-homothet family (JSON with a `frame` key:
/// `{"frame": [[x,y], [x,y], [x,y]], "homothets": [{"scale": s, "t": [x,y]}, ...]}`).
pub fn read_decompose_input(path: &Path, explicit: Option<Format>) -> Result<DecomposeInput> {
    match resolve_format(path, explicit)? {
        Format::Csv => {
            let rows = read_csv_rows(path, 3)?;
            let mut apexes = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                ensure_finite(path, "octant", i, row)?;
                apexes.push(Point3::new(row[0], row[1], row[2]));
            }
            Ok(DecomposeInput::Octants(OctantFamily::from_apexes(apexes)))
        }
        Format::Json => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let value: serde_json::Value = parse_json(path, &text)?;
            if value.get("frame").is_some() {
                let doc: TrianglesDoc = serde_json::from_value(value)
                    .with_context(|| format!("parsing {}", path.display()))?;
                let vertices = doc.frame.map(|[x, y]| Point2::new(x, y));
                for (i, v) in vertices.iter().enumerate() {
                    ensure_finite(path, "frame vertex", i, &[v.x, v.y])?;
                }
                let frame = TriangleFrame::new(vertices)
                    .map_err(|e| anyhow::anyhow!("{}: {}", path.display(), e))?;
                let mut homothets = Vec::with_capacity(doc.homothets.len());
                for (i, h) in doc.homothets.iter().enumerate() {
                    ensure_finite(path, "homothet", i, &[h.scale, h.t[0], h.t[1]])?;
                    if h.scale <= 0.0 {
                        bail!(
                            "{}: homothet {}: scale must be positive, got {}",
                            path.display(),
                            i,
                            h.scale
                        );
                    }
                    homothets.push(Homothet {
                        scale: h.scale,
                        translation: Point2::new(h.t[0], h.t[1]),
                    });
                }
                Ok(DecomposeInput::Triangles(HomothetFamily { frame, homothets }))
            } else {
                let doc: OctantsDoc = serde_json::from_value(value)
                    .with_context(|| format!("parsing {}", path.display()))?;
                let mut apexes = Vec::with_capacity(doc.octants.len());
                for (i, row) in doc.octants.iter().enumerate() {
                    ensure_finite(path, "octant", i, row)?;
                    apexes.push(Point3::new(row[0], row[1], row[2]));
                }
                Ok(DecomposeInput::Octants(OctantFamily::from_apexes(apexes)))
            }
        }
    }
}

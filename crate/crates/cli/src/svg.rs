//! Static SVG rendering of sweep traces: one frame per arrival plus a
//! final colored frame. Output is plain text with every number printed
//! at fixed precision, so identical traces render byte-identically.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

use octant_cover::graph::{Color, ColorGraph};
use octant_cover::Trace;

struct Canvas {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

impl Canvas {
    /// Bounding box of the whole trace plus a 5% margin, so every frame
    /// shares one coordinate system. Degenerate spans are padded.
    fn fit(trace: &Trace) -> Canvas {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in &trace.points {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        if trace.points.is_empty() {
            (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
        }
        if x1 - x0 == 0.0 {
            x0 -= 0.5;
            x1 += 0.5;
        }
        if y1 - y0 == 0.0 {
            y0 -= 0.5;
            y1 += 0.5;
        }
        let (mx, my) = ((x1 - x0) * 0.05, (y1 - y0) * 0.05);
        Canvas {
            x0: x0 - mx,
            y0: y0 - my,
            x1: x1 + mx,
            y1: y1 + my,
        }
    }

    fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    fn x(&self, v: f64) -> f64 {
        v - self.x0
    }

    /// SVG y grows downward; flip so larger data y is higher on screen.
    fn y(&self, v: f64) -> f64 {
        self.y1 - v
    }
}

fn num(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.4}")
}

struct Frame<'a> {
    trace: &'a Trace,
    canvas: Canvas,
    /// Arrival ranks currently on the staircase, in x order.
    staircase: Vec<usize>,
    /// All edges recorded so far, as arrival-rank pairs.
    edges: Vec<(usize, usize)>,
}

impl Frame<'_> {
    fn render(
        &self,
        arrived: usize,
        new_edges: &[(usize, usize)],
        colors: Option<&[Color]>,
    ) -> String {
        let c = &self.canvas;
        let unit = c.width().max(c.height());
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            s,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">",
            num(c.width()),
            num(c.height())
        );
        let _ = writeln!(
            s,
            "<style>\n\
             .below {{ fill: #f2f2f2; }}\n\
             .frontier {{ fill: none; stroke: #444; stroke-width: {fw}; }}\n\
             .edge {{ stroke: #999; stroke-width: {ew}; }}\n\
             .edge.new {{ stroke: #000; }}\n\
             .point {{ fill: #999; }}\n\
             .point.red {{ fill: #d33; }}\n\
             .point.blue {{ fill: #36c; }}\n\
             .point.staircase {{ stroke: #444; stroke-width: {sw}; }}\n\
             .point.arrival {{ stroke: #000; stroke-width: {sw}; }}\n\
             </style>",
            fw = num(unit * 0.006),
            ew = num(unit * 0.004),
            sw = num(unit * 0.005),
        );
        self.push_below_region(&mut s);
        self.push_frontier(&mut s);
        for &(u, v) in &self.edges {
            let (pu, pv) = (&self.trace.points[u], &self.trace.points[v]);
            let class = if new_edges.contains(&(u, v)) {
                "edge new"
            } else {
                "edge"
            };
            let _ = writeln!(
                s,
                "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                num(c.x(pu.x)),
                num(c.y(pu.y)),
                num(c.x(pv.x)),
                num(c.y(pv.y)),
            );
        }
        for (t, p) in self.trace.points.iter().enumerate().take(arrived) {
            let mut class = String::from("point");
            match colors.and_then(|cs| cs.get(t)) {
                Some(Color::Red) => class.push_str(" red"),
                Some(Color::Blue) => class.push_str(" blue"),
                None => {}
            }
            if self.staircase.contains(&t) {
                class.push_str(" staircase");
            }
            if t + 1 == arrived && colors.is_none() {
                class.push_str(" arrival");
            }
            let _ = writeln!(
                s,
                "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
                num(c.x(p.x)),
                num(c.y(p.y)),
                num(unit * 0.015),
            );
        }
        s.push_str("</svg>\n");
        s
    }

    /// Shade everything not dominated by a staircase point: the strip left
    /// of the first staircase point plus the region under the step line.
    fn push_below_region(&self, s: &mut String) {
        let c = &self.canvas;
        let mut pts: Vec<(f64, f64)> = vec![(c.x0, c.y1)];
        let stair: Vec<_> = self
            .staircase
            .iter()
            .map(|&t| &self.trace.points[t])
            .collect();
        for (i, p) in stair.iter().enumerate() {
            let top = if i == 0 { c.y1 } else { stair[i - 1].y };
            pts.push((p.x, top));
            pts.push((p.x, p.y));
        }
        if let Some(last) = stair.last() {
            pts.push((c.x1, last.y));
        } else {
            pts.push((c.x1, c.y1));
        }
        pts.push((c.x1, c.y0));
        pts.push((c.x0, c.y0));
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{},{}", num(c.x(x)), num(c.y(y))))
            .collect();
        let _ = writeln!(s, "<polygon class=\"below\" points=\"{}\"/>", coords.join(" "));
    }

    fn push_frontier(&self, s: &mut String) {
        if self.staircase.is_empty() {
            return;
        }
        let c = &self.canvas;
        let stair: Vec<_> = self
            .staircase
            .iter()
            .map(|&t| &self.trace.points[t])
            .collect();
        let mut pts: Vec<(f64, f64)> = Vec::new();
        for (i, p) in stair.iter().enumerate() {
            let top = if i == 0 { c.y1 } else { stair[i - 1].y };
            pts.push((p.x, top));
            pts.push((p.x, p.y));
        }
        pts.push((c.x1, stair.last().unwrap().y));
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{},{}", num(c.x(x)), num(c.y(y))))
            .collect();
        let _ = writeln!(
            s,
            "<polyline class=\"frontier\" points=\"{}\"/>",
            coords.join(" ")
        );
    }
}

/// Write `step_NNNN.svg` for each arrival plus `final.svg` with the
/// two-coloring; returns the files written. An empty trace produces only
/// the final scaffold.
pub fn render_trace(trace: &Trace, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut frame = Frame {
        trace,
        canvas: Canvas::fit(trace),
        staircase: Vec::new(),
        edges: Vec::new(),
    };
    let mut written = Vec::new();
    let mut snaps = trace.snapshots.iter().peekable();
    for t in 0..trace.points.len() {
        let mut new_edges = Vec::new();
        while let Some(snap) = snaps.peek() {
            if snap.arrival != t {
                break;
            }
            new_edges.extend_from_slice(&snap.new_edges);
            frame.edges.extend_from_slice(&snap.new_edges);
            frame.staircase = snap.staircase.clone();
            snaps.next();
        }
        let path = dir.join(format!("step_{t:04}.svg"));
        fs::write(&path, frame.render(t + 1, &new_edges, None))
            .with_context(|| format!("writing {}", path.display()))?;
        written.push(path);
    }
    let mut graph = ColorGraph::new(trace.points.len());
    for &(u, v) in &frame.edges {
        graph.add_edge(u, v);
    }
    let colors = graph
        .two_color()
        .map_err(|e| anyhow::anyhow!("trace edges do not form a forest: {e}"))?;
    let path = dir.join("final.svg");
    fs::write(&path, frame.render(trace.points.len(), &[], Some(&colors)))
        .with_context(|| format!("writing {}", path.display()))?;
    written.push(path);
    Ok(written)
}

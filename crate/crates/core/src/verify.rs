//! Brute-force verification oracles.
//!
//! Everything here is written for transparency over speed: containment is
//! tested literally, candidate regions are enumerated from the input
//! coordinates, and reports carry concrete witnesses. The oracles are the
//! ground truth the fast algorithms are tested against, so they share no
//! code with them.
//!
//! Candidate regions snap to data coordinates. For octants containing
//! points, every trace is produced by an apex built from per-axis input
//! values; for depth of octant families, every depth pattern is produced
//! by a corner built the same way; for triangle families, every pattern
//! realized on the plane corresponds to a triple of per-axis bound values
//! whose predecessor sum is negative and whose own sum is nonnegative.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duality::{homothet_to_octant, plane_point_from_3d, Decomposition, HomothetFamily, OctantFamily};
use crate::geom::{Point2, Point3, PointSet3};
use crate::graph::{Color, Coloring};
use crate::scalar::Scalar;

/// Largest input the literal enumeration oracles accept. They scale with
/// the fourth power of the input size, so this is a safety rail, not a
/// performance promise.
pub const DEFAULT_SIZE_GUARD: usize = 400;

/// Largest vertex count for exhaustive coloring search (2^n colorings).
pub const EXHAUST_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("input has {n} elements; this oracle accepts at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("coloring has {got} entries for {expected} points")]
    SizeMismatch { expected: usize, got: usize },
    #[error("decomposition is not a partition: {detail}")]
    NotAPartition { detail: String },
    #[error("triple index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("triple ({a}, {b}, {c}) repeats a vertex")]
    DegenerateTriple { a: usize, b: usize, c: usize },
    #[error("duplicate triple ({a}, {b}, {c})")]
    DuplicateTriple { a: usize, b: usize, c: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Concrete region exhibited by a failed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRegion<S> {
    /// Octant whose trace on the point set is monochromatic.
    Octant { apex: Point3<S> },
    /// Point covered by too many same-class octants.
    DeepPoint { point: Point3<S> },
    /// Plane point covered by too many same-class triangle homothets.
    PlanePoint { point: Point2<S> },
    /// Planar wedge (south-west quadrant) violating a prefix guarantee at
    /// the given arrival step.
    Wedge { apex: Point2<S>, step: usize },
}

/// Failure evidence: the region, the members it captures, and their
/// classes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness<S> {
    pub region: WitnessRegion<S>,
    pub indices: Vec<usize>,
    pub colors: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport<S> {
    pub ok: bool,
    pub witness: Option<Witness<S>>,
    /// Distinct candidate regions examined.
    pub traces_checked: usize,
    /// Largest monochromatic trace seen (coloring checks only).
    pub max_monochromatic: Option<usize>,
}

impl<S> VerifyReport<S> {
    pub(crate) fn passing() -> Self {
        VerifyReport { ok: true, witness: None, traces_checked: 0, max_monochromatic: None }
    }
}

/// One distinct trace: the canonical apex (componentwise maximum of the
/// members) and the member indices in increasing order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry<S> {
    pub apex: Point3<S>,
    pub indices: Vec<usize>,
}

/// All distinct nonempty octant traces of a point set, ordered by size
/// then lexicographically by member indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceSet<S> {
    entries: Vec<TraceEntry<S>>,
}

impl<S: Scalar> TraceSet<S> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[TraceEntry<S>] {
        &self.entries
    }

    /// Membership test for a sorted index list.
    pub fn contains(&self, indices: &[usize]) -> bool {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        self.entries
            .binary_search_by(|e| {
                (e.indices.len(), e.indices.as_slice()).cmp(&(indices.len(), indices))
            })
            .is_ok()
    }
}

/// Enumerate every distinct octant trace by trying all apexes built from
/// per-axis input coordinates. Every achievable trace is achieved by such
/// an apex (lower each apex coordinate to the largest data value below it
/// without changing containment).
pub fn enumerate_traces<S: Scalar>(ps: &PointSet3<S>) -> Result<TraceSet<S>, VerifyError> {
    enumerate_traces_with_guard(ps, DEFAULT_SIZE_GUARD)
}

pub fn enumerate_traces_with_guard<S: Scalar>(
    ps: &PointSet3<S>,
    guard: usize,
) -> Result<TraceSet<S>, VerifyError> {
    let n = ps.len();
    if n > guard {
        return Err(VerifyError::TooLarge { n, limit: guard });
    }
    let pts = ps.as_slice();
    let xs = distinct_values(pts.iter().map(|p| p.x));
    let ys = distinct_values(pts.iter().map(|p| p.y));
    let zs = distinct_values(pts.iter().map(|p| p.z));
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut entries = Vec::new();
    for &x in &xs {
        for &y in &ys {
            for &z in &zs {
                let apex = Point3::new(x, y, z);
                let indices: Vec<usize> =
                    (0..n).filter(|&i| pts[i].le(&apex)).collect();
                if indices.is_empty() || !seen.insert(indices.clone()) {
                    continue;
                }
                let mut canon = pts[indices[0]];
                for &i in &indices[1..] {
                    canon = canon.max(&pts[i]);
                }
                entries.push(TraceEntry { apex: canon, indices });
            }
        }
    }
    entries.sort_by(|a, b| {
        (a.indices.len(), a.indices.as_slice()).cmp(&(b.indices.len(), b.indices.as_slice()))
    });
    Ok(TraceSet { entries })
}

fn distinct_values<S: Scalar>(it: impl Iterator<Item = S>) -> Vec<S> {
    let mut v: Vec<S> = it.collect();
    v.sort_by(|a, b| a.partial_cmp(b).expect("coordinates must not be NaN"));
    v.dedup();
    v
}

fn half_min_gap<S: Scalar>(values: &mut Vec<S>) -> S {
    values.sort_by(|a, b| a.partial_cmp(b).expect("coordinates must not be NaN"));
    values.dedup();
    let mut gap = None;
    for w in values.windows(2) {
        let d = w[1] - w[0];
        if gap.map_or(true, |g| d < g) {
            gap = Some(d);
        }
    }
    gap.unwrap_or_else(S::one) / S::from(2).unwrap()
}

/// Check that no octant trace of size at least `threshold` is
/// monochromatic.
///
/// Sweeps apexes snapped to data coordinates: for each prefix in `z`
/// order and each distinct `x` bound, a single pass in `y` order visits
/// every distinct trace exactly once per (z, x) pair. Points sharing a
/// coordinate enter together, so ties are handled exactly.
pub fn verify_coloring<S: Scalar>(
    ps: &PointSet3<S>,
    colors: &[Color],
    threshold: usize,
) -> Result<VerifyReport<S>, VerifyError> {
    if colors.len() != ps.len() {
        return Err(VerifyError::SizeMismatch { expected: ps.len(), got: colors.len() });
    }
    let pts = ps.as_slice();
    let order = ps.z_order();
    let mut report = VerifyReport::passing();
    report.max_monochromatic = Some(0);
    let mut by_x: Vec<usize> = Vec::new();
    let mut by_y: Vec<usize> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let z = pts[order[k]].z;
        while k < order.len() && pts[order[k]].z == z {
            let idx = order[k];
            let px = by_x.partition_point(|&j| pts[j].x < pts[idx].x || (pts[j].x == pts[idx].x && j < idx));
            by_x.insert(px, idx);
            let py = by_y.partition_point(|&j| pts[j].y < pts[idx].y || (pts[j].y == pts[idx].y && j < idx));
            by_y.insert(py, idx);
            k += 1;
        }
        let mut xi = 0;
        while xi < by_x.len() {
            let xv = pts[by_x[xi]].x;
            while xi < by_x.len() && pts[by_x[xi]].x == xv {
                xi += 1;
            }
            members.clear();
            members.extend(by_y.iter().copied().filter(|&j| pts[j].x <= xv));
            let mut red = 0usize;
            let mut blue = 0usize;
            let mut i = 0;
            while i < members.len() {
                let yv = pts[members[i]].y;
                while i < members.len() && pts[members[i]].y == yv {
                    match colors[members[i]] {
                        Color::Red => red += 1,
                        Color::Blue => blue += 1,
                    }
                    i += 1;
                }
                report.traces_checked += 1;
                let size = red + blue;
                let mono = red == 0 || blue == 0;
                if mono {
                    let best = report.max_monochromatic.get_or_insert(0);
                    if size > *best {
                        *best = size;
                    }
                }
                if mono && size >= threshold {
                    let apex = Point3::new(xv, yv, z);
                    let indices: Vec<usize> =
                        (0..pts.len()).filter(|&j| pts[j].le(&apex)).collect();
                    let witness_colors = indices.iter().map(|&j| colors[j]).collect();
                    report.ok = false;
                    report.witness = Some(Witness {
                        region: WitnessRegion::Octant { apex },
                        indices,
                        colors: witness_colors,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// Check that every point covered by at least `threshold` octants of the
/// family is covered by both classes of the decomposition.
///
/// Mirror image of [`verify_coloring`]: coverage of a point is dominance
/// of the apexes, so the sweep runs over suffixes (descending bounds) and
/// candidate corners snapped to apex coordinates.
pub fn verify_decomposition<S: Scalar>(
    family: &OctantFamily<S>,
    decomposition: &Decomposition,
    threshold: usize,
) -> Result<VerifyReport<S>, VerifyError> {
    let owner = partition_colors(family.len(), decomposition)?;
    let apexes: Vec<Point3<S>> = family.octants.iter().map(|o| o.apex).collect();
    let mut dx: Vec<S> = apexes.iter().map(|p| p.x).collect();
    let mut dy: Vec<S> = apexes.iter().map(|p| p.y).collect();
    let mut dz: Vec<S> = apexes.iter().map(|p| p.z).collect();
    let (hx, hy, hz) = (half_min_gap(&mut dx), half_min_gap(&mut dy), half_min_gap(&mut dz));

    let mut order: Vec<usize> = (0..apexes.len()).collect();
    order.sort_by(|&a, &b| {
        apexes[b].z.partial_cmp(&apexes[a].z).expect("apex coordinates must not be NaN").then(a.cmp(&b))
    });
    let mut report = VerifyReport::passing();
    let mut by_x: Vec<usize> = Vec::new();
    let mut by_y: Vec<usize> = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    let mut k = 0;
    while k < order.len() {
        let z = apexes[order[k]].z;
        while k < order.len() && apexes[order[k]].z == z {
            let idx = order[k];
            let px = by_x.partition_point(|&j| {
                apexes[j].x > apexes[idx].x || (apexes[j].x == apexes[idx].x && j < idx)
            });
            by_x.insert(px, idx);
            let py = by_y.partition_point(|&j| {
                apexes[j].y > apexes[idx].y || (apexes[j].y == apexes[idx].y && j < idx)
            });
            by_y.insert(py, idx);
            k += 1;
        }
        let mut xi = 0;
        while xi < by_x.len() {
            let xv = apexes[by_x[xi]].x;
            while xi < by_x.len() && apexes[by_x[xi]].x == xv {
                xi += 1;
            }
            members.clear();
            members.extend(by_y.iter().copied().filter(|&j| apexes[j].x >= xv));
            let mut red = 0usize;
            let mut blue = 0usize;
            let mut i = 0;
            while i < members.len() {
                let yv = apexes[members[i]].y;
                while i < members.len() && apexes[members[i]].y == yv {
                    match owner[members[i]] {
                        Color::Red => red += 1,
                        Color::Blue => blue += 1,
                    }
                    i += 1;
                }
                report.traces_checked += 1;
                let depth = red + blue;
                if depth >= threshold && (red == 0 || blue == 0) {
                    let corner = Point3::new(xv, yv, z);
                    let point = Point3::new(xv - hx, yv - hy, z - hz);
                    let indices: Vec<usize> = (0..apexes.len())
                        .filter(|&j| corner.le(&apexes[j]))
                        .collect();
                    debug_assert!(indices.iter().all(|&j| point.le(&apexes[j])));
                    let witness_colors = indices.iter().map(|&j| owner[j]).collect();
                    report.ok = false;
                    report.witness = Some(Witness {
                        region: WitnessRegion::DeepPoint { point },
                        indices,
                        colors: witness_colors,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn partition_colors(n: usize, d: &Decomposition) -> Result<Vec<Color>, VerifyError> {
    let mut owner: Vec<Option<Color>> = vec![None; n];
    for (class, color) in [(&d.red, Color::Red), (&d.blue, Color::Blue)] {
        for &i in class {
            if i >= n {
                return Err(VerifyError::NotAPartition {
                    detail: format!("index {i} out of range for {n} members"),
                });
            }
            if owner[i].is_some() {
                return Err(VerifyError::NotAPartition {
                    detail: format!("index {i} assigned twice"),
                });
            }
            owner[i] = Some(color);
        }
    }
    owner
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            c.ok_or_else(|| VerifyError::NotAPartition {
                detail: format!("index {i} assigned to neither class"),
            })
        })
        .collect()
}

/// Check that every plane point covered by at least `threshold` homothets
/// of the family is covered by both classes.
///
/// In canonical coordinates each homothet is the corner region
/// `{x <= a_i, y <= b_i, z <= c_i}` met with the plane `x + y + z = 0`, so
/// a plane point's covering set is a dominance pattern of the `(a, b, c)`
/// triples. A pattern with bounds `(A, B, C)` snapped to data values is
/// realized by some plane point exactly when `prev(A) + prev(B) + prev(C) < 0
/// <= A + B + C`, where `prev` is the next smaller data value (or minus
/// infinity). The oracle enumerates exactly these patterns.
pub fn verify_triangle_decomposition<S: Scalar>(
    hf: &HomothetFamily<S>,
    decomposition: &Decomposition,
    threshold: usize,
) -> Result<VerifyReport<S>, VerifyError> {
    let owner = partition_colors(hf.homothets.len(), decomposition)?;
    let mut params = Vec::with_capacity(hf.homothets.len());
    for h in &hf.homothets {
        let o = homothet_to_octant(&hf.frame, h)
            .map_err(|e| VerifyError::InvalidInput(e.to_string()))?;
        params.push(o.apex);
    }
    let avals = distinct_values(params.iter().map(|p| p.x));
    let bvals = distinct_values(params.iter().map(|p| p.y));
    let cvals = distinct_values(params.iter().map(|p| p.z));
    let mut report = VerifyReport::passing();
    let two = S::from(2).unwrap();
    for (ai, &a) in avals.iter().enumerate() {
        let prev_a = ai.checked_sub(1).map(|i| avals[i]);
        for (bi, &b) in bvals.iter().enumerate() {
            let prev_b = bi.checked_sub(1).map(|i| bvals[i]);
            let start = cvals.partition_point(|&c| a + b + c < S::zero());
            for (ci, &c) in cvals.iter().enumerate().skip(start) {
                let prev_c = ci.checked_sub(1).map(|i| cvals[i]);
                if let (Some(pa), Some(pb), Some(pc)) = (prev_a, prev_b, prev_c) {
                    // Previous sums only grow along the c axis; once the
                    // predecessor box misses the plane, all later ones do.
                    if pa + pb + pc >= S::zero() {
                        break;
                    }
                }
                report.traces_checked += 1;
                let mut red = 0usize;
                let mut blue = 0usize;
                for (i, p) in params.iter().enumerate() {
                    if p.x >= a && p.y >= b && p.z >= c {
                        match owner[i] {
                            Color::Red => red += 1,
                            Color::Blue => blue += 1,
                        }
                    }
                }
                let depth = red + blue;
                if depth >= threshold && (red == 0 || blue == 0) {
                    // Materialize a plane point realizing the pattern:
                    // feasible open-closed intervals always admit the
                    // midpoint of their intersection bounds.
                    let mut zlo = -(a + b);
                    if let Some(pc) = prev_c {
                        zlo = zlo.max(pc);
                    }
                    let mut zhi = c;
                    if let (Some(pa), Some(pb)) = (prev_a, prev_b) {
                        zhi = zhi.min(-(pa + pb));
                    }
                    let zs = (zlo + zhi) / two;
                    let mut ylo = -(a + zs);
                    if let Some(pb) = prev_b {
                        ylo = ylo.max(pb);
                    }
                    let mut yhi = b;
                    if let Some(pa) = prev_a {
                        yhi = yhi.min(-(pa + zs));
                    }
                    let ys = (ylo + yhi) / two;
                    let xs = -(ys + zs);
                    let w3 = Point3::new(xs, ys, zs);
                    let indices: Vec<usize> = (0..params.len())
                        .filter(|&i| params[i].x >= a && params[i].y >= b && params[i].z >= c)
                        .collect();
                    debug_assert!(
                        indices == (0..params.len())
                            .filter(|&i| params[i].x >= xs && params[i].y >= ys && params[i].z >= zs)
                            .collect::<Vec<_>>(),
                        "materialized plane point must realize the failing pattern"
                    );
                    let witness_colors = indices.iter().map(|&i| owner[i]).collect();
                    report.ok = false;
                    report.witness = Some(Witness {
                        region: WitnessRegion::PlanePoint {
                            point: plane_point_from_3d(&hf.frame, w3),
                        },
                        indices,
                        colors: witness_colors,
                    });
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// Index triples over a fixed vertex count; each triple is sorted and the
/// list is sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph3 {
    n: usize,
    triples: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, mut triples: Vec<[usize; 3]>) -> Result<Self, VerifyError> {
        for t in &mut triples {
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(VerifyError::DegenerateTriple { a: t[0], b: t[1], c: t[2] });
            }
            if t[2] >= n {
                return Err(VerifyError::IndexOutOfRange { index: t[2], n });
            }
        }
        triples.sort_unstable();
        if let Some(w) = triples.windows(2).find(|w| w[0] == w[1]) {
            return Err(VerifyError::DuplicateTriple { a: w[0][0], b: w[0][1], c: w[0][2] });
        }
        Ok(Hypergraph3 { n, triples })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn contains_triple(&self, mut t: [usize; 3]) -> bool {
        t.sort_unstable();
        self.triples.binary_search(&t).is_ok()
    }
}

/// All triples whose three members form an exact trace: the minimal
/// octant over them contains no other input point.
pub fn exact_triples<S: Scalar>(ps: &PointSet3<S>) -> Result<Hypergraph3, VerifyError> {
    let n = ps.len();
    if n > DEFAULT_SIZE_GUARD {
        return Err(VerifyError::TooLarge { n, limit: DEFAULT_SIZE_GUARD });
    }
    let pts = ps.as_slice();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mij = pts[i].max(&pts[j]);
            for k in (j + 1)..n {
                let apex = mij.max(&pts[k]);
                let exact = (0..n)
                    .all(|l| l == i || l == j || l == k || !pts[l].le(&apex));
                if exact {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    Ok(Hypergraph3 { n, triples })
}

/// Search all 2^n colorings for one with no monochromatic triple.
/// Returns the first such coloring in mask order (bit set means blue), or
/// `None` if every coloring leaves some triple monochromatic.
pub fn exhaust_colorings(h: &Hypergraph3) -> Result<Option<Coloring>, VerifyError> {
    if h.n > EXHAUST_LIMIT {
        return Err(VerifyError::TooLarge { n: h.n, limit: EXHAUST_LIMIT });
    }
    let masks: Vec<u32> = h
        .triples
        .iter()
        .map(|t| (1u32 << t[0]) | (1u32 << t[1]) | (1u32 << t[2]))
        .collect();
    for c in 0u64..(1u64 << h.n) {
        let c = c as u32;
        if masks.iter().all(|&m| {
            let hit = c & m;
            hit != 0 && hit != m
        }) {
            let coloring = (0..h.n)
                .map(|i| if c & (1 << i) != 0 { Color::Blue } else { Color::Red })
                .collect();
            return Ok(Some(coloring));
        }
    }
    Ok(None)
}

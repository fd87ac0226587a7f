//! Replayable record of a sweep run: the planar arrival sequence plus one
//! snapshot per structural event.

use serde::{Deserialize, Serialize};

use crate::geom::Point2;

/// Which rule fired.
///
/// * `a` — the arrival was already dominated by a staircase point and only
///   gained an edge;
/// * `b` — a comparable below pair was resolved by promoting its upper
///   point onto the staircase;
/// * `c` — four below points shared a staircase-free wedge and the middle
///   two were promoted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    A,
    B,
    C,
}

/// State delta caused by one rule firing during an arrival.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Snapshot {
    /// Arrival rank (z order) of the point whose insertion fired the rule.
    pub arrival: usize,
    pub kind: StepKind,
    /// Edges added by this firing, endpoints normalized (smaller, larger).
    pub new_edges: Vec<(usize, usize)>,
    /// Staircase contents after the firing, as arrival ranks in x order.
    pub staircase: Vec<usize>,
}

/// Full record of a run. Indices in snapshots are arrival ranks;
/// `z_order[t]` maps rank `t` back to the originating point set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Trace<S> {
    /// Planar projections in arrival (increasing z) order.
    pub points: Vec<Point2<S>>,
    /// Original index of each arrival.
    pub z_order: Vec<usize>,
    pub snapshots: Vec<Snapshot>,
}

impl<S> Trace<S> {
    /// Number of firings per kind `(a, b, c)`.
    pub fn step_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for s in &self.snapshots {
            match s.kind {
                StepKind::A => counts.0 += 1,
                StepKind::B => counts.1 += 1,
                StepKind::C => counts.2 += 1,
            }
        }
        counts
    }
}

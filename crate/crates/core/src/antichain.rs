//! Semi-online coloring of pairwise-incomparable planar points.
//!
//! When the projected points form an antichain (x increasing exactly as y
//! decreases), every wedge trace on the arrived points is an interval in
//! x order, and a much lower threshold than the general case is possible:
//! after every arrival, every interval of at least four arrived points
//! contains both colors among the points colored so far.
//!
//! The algorithm keeps two invariants over the arrived points in x order:
//! no two consecutive points are uncolored, and the colored points
//! alternate red and blue. An interval of four arrived points then holds
//! at least two colored points, which are consecutive in the alternating
//! sequence, hence bichromatic. Colors are permanent once assigned;
//! points left over at the end are colored red for the final output,
//! which no prefix check observes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::Point2;
use crate::graph::{Color, Coloring};
use crate::scalar::Scalar;
use crate::verify::{VerifyError, VerifyReport, Witness, WitnessRegion};

/// Pairwise-incomparable planar points in arrival order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IncomparableSequence<S> {
    points: Vec<Point2<S>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum AntichainError {
    #[error("points {i} and {j} are comparable; the sequence must be an antichain")]
    ComparablePair { i: usize, j: usize },
}

impl<S: Scalar> IncomparableSequence<S> {
    pub fn new(points: Vec<Point2<S>>) -> Result<Self, AntichainError> {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            points[a]
                .x
                .partial_cmp(&points[b].x)
                .expect("coordinates must not be NaN")
                .then(a.cmp(&b))
        });
        for w in order.windows(2) {
            let (i, j) = (w[0], w[1]);
            // x is nondecreasing along `order`; comparability shows up as
            // y failing to strictly decrease.
            if points[j].y >= points[i].y || points[j].x == points[i].x {
                let (i, j) = (i.min(j), i.max(j));
                return Err(AntichainError::ComparablePair { i, j });
            }
        }
        Ok(IncomparableSequence { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2<S>] {
        &self.points
    }
}

/// Outcome of the semi-online run: the final total coloring and, for each
/// point, the arrival step after which its color was fixed (`n` for
/// points only colored by the final fill).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncomparableRun {
    pub colors: Coloring,
    pub colored_at: Vec<usize>,
}

/// Color an antichain sequence so that after every arrival, every
/// x-interval of at least four arrived points has both colors among the
/// already-colored points.
pub fn color_incomparable<S: Scalar>(seq: &IncomparableSequence<S>) -> IncomparableRun {
    let n = seq.len();
    let pts = seq.points();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    let mut colored_at = vec![n; n];
    // Arrived indices in x order.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for t in 0..n {
        let pos = order.partition_point(|&j| pts[j].x < pts[t].x);
        order.insert(pos, t);
        let left_uncolored = pos > 0 && colors[order[pos - 1]].is_none();
        let right_uncolored = pos + 1 < order.len() && colors[order[pos + 1]].is_none();
        // Before this arrival no two consecutive points were uncolored,
        // so at most one neighbor can be uncolored now.
        debug_assert!(!(left_uncolored && right_uncolored));
        let pair = if left_uncolored {
            Some((pos - 1, pos))
        } else if right_uncolored {
            Some((pos, pos + 1))
        } else {
            None
        };
        if let Some((a, b)) = pair {
            let left_color = order[..a]
                .iter()
                .rev()
                .find_map(|&j| colors[j]);
            let right_color = order[b + 1..]
                .iter()
                .find_map(|&j| colors[j]);
            let (ca, cb) = match (left_color, right_color) {
                (Some(cl), _) => (cl.flip(), cl),
                (None, Some(cr)) => (cr, cr.flip()),
                (None, None) => (Color::Red, Color::Blue),
            };
            colors[order[a]] = Some(ca);
            colors[order[b]] = Some(cb);
            colored_at[order[a]] = t;
            colored_at[order[b]] = t;
        }
        debug_assert!(prefix_properties_hold(pts, &order, &colors));
    }
    let colors = colors.into_iter().map(|c| c.unwrap_or(Color::Red)).collect();
    IncomparableRun { colors, colored_at }
}

/// The two run invariants: no two x-consecutive arrived points uncolored,
/// and colored points alternating in x order.
fn prefix_properties_hold<S: Scalar>(
    _pts: &[Point2<S>],
    order: &[usize],
    colors: &[Option<Color>],
) -> bool {
    let mut prev_uncolored = false;
    let mut prev_color: Option<Color> = None;
    for &j in order {
        match colors[j] {
            None => {
                if prev_uncolored {
                    return false;
                }
                prev_uncolored = true;
            }
            Some(c) => {
                if prev_color == Some(c) {
                    return false;
                }
                prev_uncolored = false;
                prev_color = Some(c);
            }
        }
    }
    true
}

/// Replay every prefix of the arrival sequence and test every x-interval
/// of arrived points: an interval of at least `threshold` points must
/// contain both colors among points colored by that step.
///
/// On failure the witness wedge apex takes the rightmost member's x and
/// the leftmost member's y (y decreases along x in an antichain), and the
/// reported colors are the final colors of the members.
pub fn verify_incomparable_prefixes<S: Scalar>(
    seq: &IncomparableSequence<S>,
    run: &IncomparableRun,
    threshold: usize,
) -> Result<VerifyReport<S>, VerifyError> {
    let n = seq.len();
    if run.colors.len() != n || run.colored_at.len() != n {
        return Err(VerifyError::SizeMismatch { expected: n, got: run.colors.len().min(run.colored_at.len()) });
    }
    let threshold = threshold.max(1);
    let pts = seq.points();
    let mut report = VerifyReport::passing();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for t in 0..n {
        let pos = order.partition_point(|&j| pts[j].x < pts[t].x);
        order.insert(pos, t);
        // Prefix counts of visible red / blue along x order.
        let m = order.len();
        let mut reds = vec![0usize; m + 1];
        let mut blues = vec![0usize; m + 1];
        for (k, &j) in order.iter().enumerate() {
            let visible = run.colored_at[j] <= t;
            reds[k + 1] = reds[k] + usize::from(visible && run.colors[j] == Color::Red);
            blues[k + 1] = blues[k] + usize::from(visible && run.colors[j] == Color::Blue);
        }
        for lo in 0..m {
            for hi in (lo + threshold)..=m {
                report.traces_checked += 1;
                let r = reds[hi] - reds[lo];
                let b = blues[hi] - blues[lo];
                if r == 0 || b == 0 {
                    let members = &order[lo..hi];
                    let apex = Point2::new(pts[members[hi - lo - 1]].x, pts[members[0]].y);
                    let mut indices: Vec<usize> = members.to_vec();
                    indices.sort_unstable();
                    let witness_colors = indices.iter().map(|&j| run.colors[j]).collect();
                    report.ok = false;
                    report.witness = Some(Witness {
                        region: WitnessRegion::Wedge { apex, step: t },
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

//! Online planar sweep. Points arrive in increasing z order; the state
//! keeps a staircase (an antichain under dominance) plus a forest on the
//! arrivals, and guarantees that every wedge holding twelve points of any
//! arrival prefix contains both endpoints of some forest edge.
//!
//! The supporting invariants, checked by [`AlgoState::check_properties`]:
//!
//! 1. every point strictly above the staircase is *good*: any wedge
//!    containing it contains a whole edge;
//! 2. every staircase point with neighbors on both sides is *almost good*:
//!    any wedge containing it and both neighbors contains a whole edge;
//! 3. points below the staircase are pairwise incomparable;
//! 4. a wedge containing only below points contains at most three of them.
//!
//! A wedge that avoids the staircase cannot reach above it, so a
//! monochromatic wedge is capped at 2 staircase points plus 3 below points
//! per staircase gap: at most 11 points.

use crate::geom::{Point2, PointSet3, Wedge};
use crate::graph::{Color, ColorGraph, Coloring};
use crate::scalar::Scalar;
use crate::trace::{Snapshot, StepKind, Trace};

/// The current antichain, ordered by strictly increasing x (hence strictly
/// decreasing y). Entries carry the arrival rank of the point.
#[derive(Debug, Clone, PartialEq)]
pub struct Staircase<S> {
    pub(crate) entries: Vec<StairEntry<S>>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StairEntry<S> {
    pub index: usize,
    pub point: Point2<S>,
}

impl<S: Scalar> Default for Staircase<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> Staircase<S> {
    pub fn new() -> Self {
        Staircase { entries: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Arrival ranks in x order.
    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.index).collect()
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.entries.iter().any(|e| e.index == index)
    }

    /// Is some staircase point strictly south-west of `p`? Only the
    /// predecessor by x can witness this: y falls as x grows.
    pub fn is_above(&self, p: &Point2<S>) -> bool {
        let k = self.entries.partition_point(|e| e.point.x < p.x);
        k > 0 && self.entries[k - 1].point.y < p.y
    }

    /// The staircase point with the largest x strictly left of `x`.
    pub fn predecessor(&self, x: S) -> Option<&StairEntry<S>> {
        let k = self.entries.partition_point(|e| e.point.x < x);
        k.checked_sub(1).map(|i| &self.entries[i])
    }

    /// Does the closed wedge contain a staircase point?
    pub fn intersects_wedge(&self, w: &Wedge<S>) -> bool {
        let k = self.entries.partition_point(|e| e.point.x <= w.apex.x);
        k > 0 && self.entries[k - 1].point.y <= w.apex.y
    }

    /// Remove every staircase point strictly north-east of `p`. The victims
    /// form a contiguous x range because the staircase is an antichain.
    pub(crate) fn remove_ne_of(&mut self, p: &Point2<S>) -> Vec<usize> {
        let start = self.entries.partition_point(|e| e.point.x <= p.x);
        let mut end = start;
        while end < self.entries.len() && self.entries[end].point.y > p.y {
            end += 1;
        }
        self.entries.drain(start..end).map(|e| e.index).collect()
    }

    pub(crate) fn insert(&mut self, index: usize, point: Point2<S>) {
        let pos = self.entries.partition_point(|e| e.point.x < point.x);
        self.entries.insert(pos, StairEntry { index, point });
        debug_assert!(self.is_antichain());
    }

    fn is_antichain(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0].point.x < w[1].point.x && w[0].point.y > w[1].point.y)
    }

    pub(crate) fn from_indices(indices: &[usize], points: &[Point2<S>]) -> Self {
        Staircase {
            entries: indices
                .iter()
                .map(|&i| StairEntry { index: i, point: points[i] })
                .collect(),
        }
    }
}

/// First violated sweep invariant, if any, with an index witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyViolation {
    /// A point above the staircase whose own wedge contains no edge.
    AboveNotGood { index: usize },
    /// A staircase point whose neighbor-spanning wedge contains no edge.
    StaircaseNotAlmostGood { index: usize },
    /// Two below points where one dominates the other.
    ComparableBelowPair { sw: usize, ne: usize },
    /// Four consecutive below points inside a staircase-free wedge.
    UncoveredQuadruple { window: [usize; 4] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub violation: Option<PropertyViolation>,
}

impl PropertyReport {
    pub fn ok(&self) -> bool {
        self.violation.is_none()
    }
}

/// Sweep state over the arrivals processed so far.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgoState<S> {
    pub(crate) points: Vec<Point2<S>>,
    pub(crate) staircase: Staircase<S>,
    /// Arrival ranks below the staircase, ordered by x.
    pub(crate) below: Vec<usize>,
    pub(crate) graph: ColorGraph,
    pub(crate) snapshots: Vec<Snapshot>,
}

impl<S: Scalar> Default for AlgoState<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> AlgoState<S> {
    pub fn new() -> Self {
        AlgoState {
            points: Vec::new(),
            staircase: Staircase::new(),
            below: Vec::new(),
            graph: ColorGraph::new(0),
            snapshots: Vec::new(),
        }
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

    pub fn staircase(&self) -> &Staircase<S> {
        &self.staircase
    }

    /// Arrival ranks currently below the staircase, ordered by x.
    pub fn below(&self) -> &[usize] {
        &self.below
    }

    pub fn graph(&self) -> &ColorGraph {
        &self.graph
    }

    pub fn snapshots(&self) -> &[Snapshot] {
        &self.snapshots
    }

    /// Process the next arrival. Coordinates must be distinct from all
    /// previous arrivals on both axes (a duplicate is a contract error;
    /// establish general position with [`PointSet3::generalize`] first).
    pub fn insert_point(&mut self, p: Point2<S>) {
        let t = self.points.len();
        debug_assert!(
            self.points.iter().all(|q| q.x != p.x && q.y != p.y),
            "coordinates must be distinct per axis"
        );
        self.points.push(p);
        self.graph.grow_to(t + 1);

        if self.staircase.is_above(&p) {
            // Step (a): p is good already; connect it to the largest-x
            // staircase point south-west of it.
            let partner = self
                .staircase
                .predecessor(p.x)
                .expect("is_above implies a predecessor")
                .index;
            self.graph.add_edge(t, partner);
            self.record(t, StepKind::A, &[(t, partner)]);
            debug_assert!(self.invariants_hold());
            return;
        }

        let pos = self.below.partition_point(|&i| self.points[i].x < p.x);
        self.below.insert(pos, t);

        // Step (b): while a below point dominates another, promote the
        // dominating one and connect the pair.
        while let Some((ne, sw)) = self.comparable_below_pair() {
            debug_assert!(
                self.below.iter().all(|&i| !self.points[ne].sw_of(&self.points[i])),
                "no below point may lie north-east of the promoted point"
            );
            let ne_pt = self.points[ne];
            self.staircase.remove_ne_of(&ne_pt);
            self.below_remove(ne);
            self.staircase.insert(ne, ne_pt);
            self.graph.add_edge(ne, sw);
            self.record(t, StepKind::B, &[(ne, sw)]);
        }

        // Step (c): while four consecutive below points fit under a
        // staircase-free wedge, promote the middle two and connect the
        // outer pairs to them.
        while let Some([q1, q2, q3, q4]) = self.find_quadruple() {
            let (q2_pt, q3_pt) = (self.points[q2], self.points[q3]);
            self.staircase.remove_ne_of(&q2_pt);
            self.staircase.remove_ne_of(&q3_pt);
            self.below_remove(q2);
            self.below_remove(q3);
            self.staircase.insert(q2, q2_pt);
            self.staircase.insert(q3, q3_pt);
            self.graph.add_edge(q1, q2);
            self.graph.add_edge(q3, q4);
            self.record(t, StepKind::C, &[(q1, q2), (q3, q4)]);
        }

        // Promotions in step (c) remove below points and cannot create a
        // comparable pair, so step (b) never needs to rerun.
        debug_assert!(self.comparable_below_pair().is_none());
        debug_assert!(self.invariants_hold());
    }

    /// Deterministic pair choice for step (b): scan below points by
    /// decreasing x for the first one dominating another below point, then
    /// take its largest-x dominated partner.
    fn comparable_below_pair(&self) -> Option<(usize, usize)> {
        for bi in (0..self.below.len()).rev() {
            let ne = self.below[bi];
            for bj in (0..bi).rev() {
                let sw = self.below[bj];
                if self.points[sw].sw_of(&self.points[ne]) {
                    return Some((ne, sw));
                }
            }
        }
        None
    }

    /// Leftmost window of four consecutive below points whose minimal
    /// covering wedge contains no staircase point. Below points are
    /// pairwise incomparable here, so consecutive windows are exhaustive:
    /// any staircase-free wedge over the below set covers an x-contiguous
    /// run of it.
    pub fn find_quadruple(&self) -> Option<[usize; 4]> {
        for w in self.below.windows(4) {
            let apex = Point2::new(self.points[w[3]].x, self.points[w[0]].y);
            if !self.staircase.intersects_wedge(&Wedge::new(apex)) {
                return Some([w[0], w[1], w[2], w[3]]);
            }
        }
        None
    }

    /// Check invariants (1)-(4); returns the first violation found.
    pub fn check_properties(&self) -> PropertyReport {
        // (1) above points are good. Any wedge containing p contains the
        // closed wedge at p, so testing the wedge at p is exact.
        for (i, p) in self.points.iter().enumerate() {
            if self.staircase.contains_index(i) || !self.staircase.is_above(p) {
                continue;
            }
            if !self.wedge_has_edge(&Wedge::new(*p)) {
                return PropertyReport {
                    violation: Some(PropertyViolation::AboveNotGood { index: i }),
                };
            }
        }
        // (2) staircase points are almost good. The guarantee only ever
        // invokes this for a point flanked by staircase neighbors on both
        // sides (a wedge with three staircase points contains three
        // consecutive ones), and only that form is maintained: test the
        // minimal wedge spanning each interior point and its neighbors.
        for pos in 1..self.staircase.entries.len().saturating_sub(1) {
            let e = &self.staircase.entries[pos];
            let apex = Point2::new(
                self.staircase.entries[pos + 1].point.x,
                self.staircase.entries[pos - 1].point.y,
            );
            if !self.wedge_has_edge(&Wedge::new(apex)) {
                return PropertyReport {
                    violation: Some(PropertyViolation::StaircaseNotAlmostGood { index: e.index }),
                };
            }
        }
        // (3) below points are pairwise incomparable.
        for i in 0..self.below.len() {
            for j in (i + 1)..self.below.len() {
                let (a, b) = (self.below[i], self.below[j]);
                if !self.points[a].incomparable(&self.points[b]) {
                    return PropertyReport {
                        violation: Some(PropertyViolation::ComparableBelowPair { sw: a, ne: b }),
                    };
                }
            }
        }
        // (4) no staircase-free wedge over four below points.
        if let Some(window) = self.find_quadruple() {
            return PropertyReport {
                violation: Some(PropertyViolation::UncoveredQuadruple { window }),
            };
        }
        PropertyReport { violation: None }
    }

    fn wedge_has_edge(&self, w: &Wedge<S>) -> bool {
        self.graph
            .edges()
            .iter()
            .any(|&(u, v)| w.contains(&self.points[u]) && w.contains(&self.points[v]))
    }

    fn below_remove(&mut self, index: usize) {
        let pos = self
            .below
            .iter()
            .position(|&i| i == index)
            .expect("point is below");
        self.below.remove(pos);
    }

    fn record(&mut self, arrival: usize, kind: StepKind, edges: &[(usize, usize)]) {
        self.snapshots.push(Snapshot {
            arrival,
            kind,
            new_edges: edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect(),
            staircase: self.staircase.indices(),
        });
    }

    /// Rebuild a final state from a trace; used to audit that traces are
    /// complete records of a run.
    pub fn replay(trace: &Trace<S>) -> AlgoState<S> {
        let mut graph = ColorGraph::new(trace.points.len());
        let mut staircase = Staircase::new();
        for snap in &trace.snapshots {
            for &(u, v) in &snap.new_edges {
                graph.add_edge(u, v);
            }
            staircase = Staircase::from_indices(&snap.staircase, &trace.points);
        }
        let mut below: Vec<usize> = (0..trace.points.len())
            .filter(|&i| !staircase.contains_index(i) && !staircase.is_above(&trace.points[i]))
            .collect();
        below.sort_by(|&i, &j| {
            trace.points[i]
                .x
                .partial_cmp(&trace.points[j].x)
                .expect("finite coordinate")
        });
        AlgoState {
            points: trace.points.clone(),
            staircase,
            below,
            graph,
            snapshots: trace.snapshots.clone(),
        }
    }

    /// Structural soundness beyond properties (1)-(4): the tracked below
    /// set matches its definition, the graph is a forest, and no two below
    /// points share a component (each component owns at most one).
    fn invariants_hold(&self) -> bool {
        let mut derived: Vec<usize> = (0..self.points.len())
            .filter(|&i| {
                !self.staircase.contains_index(i) && !self.staircase.is_above(&self.points[i])
            })
            .collect();
        derived.sort_by(|&i, &j| {
            self.points[i]
                .x
                .partial_cmp(&self.points[j].x)
                .expect("finite coordinate")
        });
        if derived != self.below {
            return false;
        }
        if !self.check_properties().ok() {
            return false;
        }
        // union-find over edges; below points must stay in distinct trees
        let mut root: Vec<usize> = (0..self.points.len()).collect();
        fn find(root: &mut Vec<usize>, mut i: usize) -> usize {
            while root[i] != i {
                root[i] = root[root[i]];
                i = root[i];
            }
            i
        }
        for &(u, v) in self.graph.edges() {
            let (ru, rv) = (find(&mut root, u), find(&mut root, v));
            if ru == rv {
                return false; // cycle
            }
            root[ru] = rv;
        }
        let mut seen = std::collections::HashSet::new();
        for &b in &self.below {
            if !seen.insert(find(&mut root, b)) {
                return false;
            }
        }
        true
    }
}

/// Two-color a point set so that every octant containing at least twelve
/// points contains both colors.
///
/// The set is put in general position with [`PointSet3::generalize`], swept
/// in z order, and the resulting forest is properly two-colored (component
/// roots are the lowest arrival ranks, colored red). Returned colors and
/// graph are indexed by the input set; the trace stays in arrival ranks and
/// carries the mapping.
pub fn color_points<S: Scalar>(ps: &PointSet3<S>) -> (Coloring, ColorGraph, Trace<S>) {
    let general = ps.generalize();
    let z_order = general.z_order();
    let proj = general.project_z();
    let mut state = AlgoState::new();
    for p in &proj {
        state.insert_point(*p);
    }
    let planar_colors = state
        .graph
        .two_color()
        .expect("sweep builds a forest by construction");
    let mut colors = vec![Color::Red; ps.len()];
    for (t, &orig) in z_order.iter().enumerate() {
        colors[orig] = planar_colors[t];
    }
    let graph = state.graph.relabel(&z_order);
    let trace = Trace { points: proj, z_order, snapshots: state.snapshots };
    (colors, graph, trace)
}

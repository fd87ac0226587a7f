//! Planar and spatial primitives: points, octants, wedges, the dominance
//! predicates every other module is built on, and the deterministic tie
//! perturbation that establishes general position.
//!
//! Containment is closed (boundary points count) throughout the crate.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Planar point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

/// Spatial point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    /// Strict dominance: `self` lies strictly south-west of `other`.
    pub fn sw_of(&self, other: &Point2<S>) -> bool {
        self.x < other.x && self.y < other.y
    }

    /// Neither point strictly dominates the other.
    ///
    /// Coincident points are incomparable under strict dominance; inputs
    /// with ties are separated upstream by [`PointSet3::generalize`].
    pub fn incomparable(&self, other: &Point2<S>) -> bool {
        !self.sw_of(other) && !other.sw_of(self)
    }

    /// Closed componentwise comparison, `self <= other` on both axes.
    pub fn le(&self, other: &Point2<S>) -> bool {
        self.x <= other.x && self.y <= other.y
    }
}

impl<S: Scalar> Point3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Point3 { x, y, z }
    }

    /// Closed componentwise comparison, `self <= other` on all axes.
    pub fn le(&self, other: &Point3<S>) -> bool {
        self.x <= other.x && self.y <= other.y && self.z <= other.z
    }

    /// Componentwise negation.
    pub fn negate(&self) -> Point3<S> {
        Point3::new(-self.x, -self.y, -self.z)
    }

    /// Componentwise maximum.
    pub fn max(&self, other: &Point3<S>) -> Point3<S> {
        Point3::new(self.x.max(other.x), self.y.max(other.y), self.z.max(other.z))
    }

    /// Drop the z coordinate.
    pub fn project(&self) -> Point2<S> {
        Point2::new(self.x, self.y)
    }
}

/// Translate of the negative orthant: all points componentwise `<= apex`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Octant<S> {
    pub apex: Point3<S>,
}

impl<S: Scalar> Octant<S> {
    pub fn new(apex: Point3<S>) -> Self {
        Octant { apex }
    }

    pub fn contains(&self, p: &Point3<S>) -> bool {
        p.le(&self.apex)
    }
}

/// Translate of the negative quadrant: all planar points `<= apex`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wedge<S> {
    pub apex: Point2<S>,
}

impl<S: Scalar> Wedge<S> {
    pub fn new(apex: Point2<S>) -> Self {
        Wedge { apex }
    }

    pub fn contains(&self, p: &Point2<S>) -> bool {
        p.le(&self.apex)
    }
}

/// Finite indexed set of spatial points. Indices are stable: every
/// coloring, trace and witness in the crate refers to positions in the
/// originating set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointSet3<S> {
    points: Vec<Point3<S>>,
}

impl<S: Scalar> PointSet3<S> {
    pub fn new(points: Vec<Point3<S>>) -> Self {
        PointSet3 { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point3<S>> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[Point3<S>] {
        &self.points
    }

    /// True when no two points share a coordinate on any axis.
    pub fn distinct_per_axis(&self) -> bool {
        for axis in [|p: &Point3<S>| p.x, |p: &Point3<S>| p.y, |p: &Point3<S>| p.z] {
            let mut vals: Vec<S> = self.points.iter().map(axis).collect();
            vals.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinate"));
            if vals.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
        }
        true
    }

    /// Deterministic symbolic perturbation. Ties along each axis are broken
    /// by input index: within a tie group the point with the smaller index
    /// ends up with the smaller coordinate. Offsets stay below half the
    /// minimum nonzero gap of the axis, so every strict comparison between
    /// non-tied coordinates is preserved. Idempotent: a set that is already
    /// distinct per axis comes back unchanged.
    pub fn generalize(&self) -> PointSet3<S> {
        let xs = separate_axis(&self.points.iter().map(|p| p.x).collect::<Vec<_>>());
        let ys = separate_axis(&self.points.iter().map(|p| p.y).collect::<Vec<_>>());
        let zs = separate_axis(&self.points.iter().map(|p| p.z).collect::<Vec<_>>());
        let points = (0..self.points.len())
            .map(|i| Point3::new(xs[i], ys[i], zs[i]))
            .collect();
        let out = PointSet3 { points };
        debug_assert!(out.is_empty() || out.distinct_per_axis());
        out
    }

    /// Indices of the points ordered by increasing z (ties by index).
    pub fn z_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.points.len()).collect();
        order.sort_by(|&i, &j| {
            self.points[i]
                .z
                .partial_cmp(&self.points[j].z)
                .expect("finite coordinate")
                .then(i.cmp(&j))
        });
        order
    }

    /// Planar projections listed by increasing z: element `t` is the
    /// projection of the point with the `(t+1)`-th smallest z coordinate.
    pub fn project_z(&self) -> Vec<Point2<S>> {
        self.z_order()
            .into_iter()
            .map(|i| self.points[i].project())
            .collect()
    }
}

/// Perturb one coordinate axis so all values become distinct while keeping
/// every strict comparison and breaking ties by index.
fn separate_axis<S: Scalar>(values: &[S]) -> Vec<S> {
    let n = values.len();
    if n < 2 {
        return values.to_vec();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        values[i]
            .partial_cmp(&values[j])
            .expect("finite coordinate")
            .then(i.cmp(&j))
    });

    let mut gap: Option<S> = None;
    for w in order.windows(2) {
        let d = values[w[1]] - values[w[0]];
        if d > S::zero() && gap.map_or(true, |g| d < g) {
            gap = Some(d);
        }
    }
    // All values equal: any offset does, index order still decides.
    let gap = gap.unwrap_or_else(S::one);
    let eps = gap / S::from(2 * n).expect("small integer fits scalar");

    let mut out = values.to_vec();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && values[order[j]] == values[order[i]] {
            j += 1;
        }
        for (rank, &idx) in order[i..j].iter().enumerate().skip(1) {
            out[idx] = values[idx] + eps * S::from(rank).expect("rank fits scalar");
        }
        i = j;
    }
    // The additive offset can be absorbed by rounding when values are huge;
    // fall back to successive representable values, which still preserves
    // order even if it exceeds the half-gap bound.
    for k in 1..n {
        if out[order[k]] <= out[order[k - 1]] {
            out[order[k]] = out[order[k - 1]].next_toward_inf();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p2(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y)
    }

    fn p3(x: f64, y: f64, z: f64) -> Point3<f64> {
        Point3::new(x, y, z)
    }

    #[test]
    fn sw_of_strict_dominance() {
        assert!(p2(0.0, 0.0).sw_of(&p2(1.0, 1.0)));
        assert!(!p2(0.0, 1.0).sw_of(&p2(1.0, 0.0)));
        assert!(!p2(1.0, 1.0).sw_of(&p2(1.0, 2.0))); // shared x is not strict
    }

    #[test]
    fn incomparable_pairs() {
        assert!(p2(0.0, 1.0).incomparable(&p2(1.0, 0.0)));
        assert!(!p2(0.0, 0.0).incomparable(&p2(1.0, 1.0)));
        // Coincident points are incomparable under strict dominance.
        assert!(p2(0.0, 0.0).incomparable(&p2(0.0, 0.0)));
    }

    #[test]
    fn containment_is_closed() {
        let o = Octant::new(p3(0.0, 0.0, 0.0));
        assert!(o.contains(&p3(0.0, 0.0, 0.0)));
        assert!(o.contains(&p3(-1.0, -2.0, 0.0)));
        assert!(!o.contains(&p3(0.0, 0.0, 0.1)));
        let w = Wedge::new(p2(1.0, 1.0));
        assert!(w.contains(&p2(1.0, 1.0)));
        assert!(!w.contains(&p2(1.0, 1.1)));
    }

    #[test]
    fn generalize_identity_on_distinct_set() {
        let ps = PointSet3::new(vec![p3(0.0, 4.0, 8.0), p3(1.0, 5.0, 7.0), p3(2.0, 3.0, 9.0)]);
        assert_eq!(ps.generalize(), ps);
    }

    #[test]
    fn generalize_breaks_ties_by_index() {
        let ps = PointSet3::new(vec![p3(0.0, 0.0, 0.0), p3(0.0, 1.0, 2.0)]);
        let g = ps.generalize();
        let a = g.as_slice()[0];
        let b = g.as_slice()[1];
        assert!(g.distinct_per_axis());
        // Tied axes: the smaller index ends up below.
        assert!(a.x < b.x);
        assert!(a.y < b.y && a.y == 0.0 && b.y == 1.0);
        assert!(a.z < b.z && a.z == 0.0 && b.z == 2.0);
    }

    #[test]
    fn generalize_orders_duplicates_by_index() {
        let ps = PointSet3::new(vec![p3(1.0, 1.0, 1.0); 10]);
        let g = ps.generalize();
        assert!(g.distinct_per_axis());
        for w in g.as_slice().windows(2) {
            assert!(w[0].x < w[1].x && w[0].y < w[1].y && w[0].z < w[1].z);
        }
    }

    #[test]
    fn generalize_survives_tiny_gaps() {
        // Additive offsets round to nothing at this magnitude; the
        // representable-value fallback must still separate the points.
        let ps = PointSet3::new(vec![p3(1e17, 0.0, 0.0), p3(1e17, 1.0, 1.0), p3(1e17 + 16.0, 2.0, 2.0)]);
        let g = ps.generalize();
        assert!(g.distinct_per_axis());
        let xs: Vec<f64> = g.iter().map(|p| p.x).collect();
        assert!(xs[0] < xs[1] && xs[1] < xs[2]);
    }

    #[test]
    fn project_z_orders_by_z() {
        let ps = PointSet3::new(vec![p3(5.0, 5.0, 2.0), p3(0.0, 0.0, 1.0)]);
        assert_eq!(ps.project_z(), vec![p2(0.0, 0.0), p2(5.0, 5.0)]);
        assert_eq!(ps.z_order(), vec![1, 0]);
    }

    #[test]
    fn works_at_f32() {
        let a = Point2::<f32>::new(0.0, 1.0);
        let b = Point2::<f32>::new(1.0, 0.0);
        assert!(a.incomparable(&b));
        let ps = PointSet3::new(vec![
            Point3::<f32>::new(0.0, 0.0, 0.0),
            Point3::<f32>::new(0.0, 1.0, 2.0),
        ]);
        assert!(ps.generalize().distinct_per_axis());
    }

    proptest! {
        #[test]
        fn dominance_trichotomy(ax in -100.0..100.0f64, ay in -100.0..100.0f64,
                                bx in -100.0..100.0f64, by in -100.0..100.0f64) {
            prop_assume!(ax != bx && ay != by);
            let a = p2(ax, ay);
            let b = p2(bx, by);
            let truths = [a.sw_of(&b), b.sw_of(&a), a.incomparable(&b)];
            prop_assert_eq!(truths.iter().filter(|&&t| t).count(), 1);
        }

        #[test]
        fn generalize_is_idempotent(pts in proptest::collection::vec(
            (-5i32..5, -5i32..5, -5i32..5), 0..40)) {
            let ps = PointSet3::new(
                pts.iter().map(|&(x, y, z)| p3(x as f64, y as f64, z as f64)).collect());
            let once = ps.generalize();
            prop_assert!(once.is_empty() || once.distinct_per_axis());
            prop_assert_eq!(once.generalize(), once);
        }

        #[test]
        fn generalize_preserves_strict_order(pts in proptest::collection::vec(
            (-5i32..5, -5i32..5, -5i32..5), 2..40)) {
            let ps = PointSet3::new(
                pts.iter().map(|&(x, y, z)| p3(x as f64, y as f64, z as f64)).collect());
            let g = ps.generalize();
            for i in 0..ps.len() {
                for j in 0..ps.len() {
                    let (a, b) = (ps.as_slice()[i], ps.as_slice()[j]);
                    let (ga, gb) = (g.as_slice()[i], g.as_slice()[j]);
                    if a.x < b.x { prop_assert!(ga.x < gb.x); }
                    if a.y < b.y { prop_assert!(ga.y < gb.y); }
                    if a.z < b.z { prop_assert!(ga.z < gb.z); }
                }
            }
        }

        #[test]
        fn antichain_projection_reverses_axes(n in 2usize..30, seedless in 0u64..1000) {
            // x increasing, y decreasing: an antichain; any z permutation.
            let pts: Vec<Point3<f64>> = (0..n).map(|i| {
                let f = i as f64;
                p3(f, -(f), ((i as u64 * 7919 + seedless) % 1000) as f64 + f * 1e-3)
            }).collect();
            let ps = PointSet3::new(pts).generalize();
            let proj = ps.project_z();
            let mut by_x: Vec<usize> = (0..n).collect();
            by_x.sort_by(|&i, &j| proj[i].x.partial_cmp(&proj[j].x).unwrap());
            let mut by_y: Vec<usize> = (0..n).collect();
            by_y.sort_by(|&i, &j| proj[i].y.partial_cmp(&proj[j].y).unwrap());
            by_y.reverse();
            prop_assert_eq!(by_x, by_y);
        }
    }
}

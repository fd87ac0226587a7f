//! Cover decomposition by duality.
//!
//! Negating apexes turns octants into points and swaps containment:
//! `v` lies in the octant at `w` exactly when `-w` lies in the octant at
//! `-v`. A coloring in which every 12-point octant sees both colors
//! therefore splits a 12-fold octant cover into two covers.
//!
//! Homothets of a triangle reduce to octants: the octant at `(a, b, c)`
//! cuts the plane `x + y + z = 0` in the triangle `{x <= a, y <= b, z <= c}`,
//! an equilateral homothet, and every positive homothet of an arbitrary
//! triangle maps onto one of these through a fixed affine change of frame.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Octant, Point2, Point3, PointSet3};
use crate::graph::Color;
use crate::scalar::Scalar;
use crate::staircase::color_points;

/// Finite indexed family of octants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OctantFamily<S> {
    pub octants: Vec<Octant<S>>,
}

impl<S: Scalar> OctantFamily<S> {
    pub fn new(octants: Vec<Octant<S>>) -> Self {
        OctantFamily { octants }
    }

    pub fn from_apexes(apexes: Vec<Point3<S>>) -> Self {
        OctantFamily { octants: apexes.into_iter().map(Octant::new).collect() }
    }

    pub fn len(&self) -> usize {
        self.octants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.octants.is_empty()
    }
}

/// Partition of family indices into the two cover classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
}

impl Decomposition {
    pub fn from_coloring(colors: &[Color]) -> Self {
        let mut red = Vec::new();
        let mut blue = Vec::new();
        for (i, c) in colors.iter().enumerate() {
            match c {
                Color::Red => red.push(i),
                Color::Blue => blue.push(i),
            }
        }
        Decomposition { red, blue }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DualityError {
    #[error("triangle frame vertices are collinear")]
    CollinearFrame,
    #[error("homothet scale must be positive, got {scale}")]
    NonPositiveScale { scale: f64 },
    #[error("canonical triangle bounds sum to {sum}; a positive sum is required for a nonempty triangle")]
    DegenerateTriangle { sum: f64 },
    #[error("vertices do not form a positive homothet of the frame triangle")]
    NotAHomothet,
}

/// Dual point set of an octant family: apexes negated componentwise.
/// Containment reverses: `octant(w)` contains `v` iff `octant(-v)`
/// contains `-w`.
pub fn dualize_family<S: Scalar>(f: &OctantFamily<S>) -> PointSet3<S> {
    PointSet3::new(f.octants.iter().map(|o| o.apex.negate()).collect())
}

/// Split an octant family so that both classes cover every point lying in
/// at least twelve family members.
///
/// Indices with the same position refer to the same octant; duplicates are
/// fine (the dual set is perturbed deterministically before coloring).
pub fn decompose_cover<S: Scalar>(f: &OctantFamily<S>) -> Decomposition {
    let (colors, _, _) = color_points(&dualize_family(f));
    Decomposition::from_coloring(&colors)
}

/// Orthonormal basis of the plane `x + y + z = 0`:
/// `u = (1, -1, 0)/sqrt(2)` and `v = (1, 1, -2)/sqrt(6)`.
pub fn plane_basis<S: Scalar>() -> [Point3<S>; 2] {
    let r2 = S::from(2.0).unwrap().sqrt();
    let r6 = S::from(6.0).unwrap().sqrt();
    [
        Point3::new(S::one() / r2, -S::one() / r2, S::zero()),
        Point3::new(S::one() / r6, S::one() / r6, -(S::one() + S::one()) / r6),
    ]
}

/// Embed plane coordinates `(u, v)` as a spatial point of `x + y + z = 0`.
pub fn lift_to_plane<S: Scalar>(q: Point2<S>) -> Point3<S> {
    let [u, v] = plane_basis::<S>();
    Point3::new(
        u.x * q.x + v.x * q.y,
        u.y * q.x + v.y * q.y,
        u.z * q.x + v.z * q.y,
    )
}

/// Plane coordinates of a spatial point lying in `x + y + z = 0`.
pub fn flatten_from_plane<S: Scalar>(p: Point3<S>) -> Point2<S> {
    let [u, v] = plane_basis::<S>();
    Point2::new(
        u.x * p.x + u.y * p.y + u.z * p.z,
        v.x * p.x + v.y * p.y + v.z * p.z,
    )
}

/// The equilateral triangle cut from the plane by the octant at `(1,1,1)`,
/// in plane coordinates. All triangle frames are measured against it.
pub fn reference_triangle<S: Scalar>() -> [Point2<S>; 3] {
    let one = S::one();
    let m2 = -(one + one);
    [
        flatten_from_plane(Point3::new(m2, one, one)),
        flatten_from_plane(Point3::new(one, m2, one)),
        flatten_from_plane(Point3::new(one, one, m2)),
    ]
}

/// Intersection of the octant at `(a, b, c)` with the plane `x+y+z = 0`:
/// nonempty exactly when `a + b + c > 0`, and then an equilateral homothet
/// of [`reference_triangle`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleHomothetCanonical<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> TriangleHomothetCanonical<S> {
    pub fn new(a: S, b: S, c: S) -> Result<Self, DualityError> {
        let sum = a + b + c;
        if sum <= S::zero() {
            return Err(DualityError::DegenerateTriangle {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(TriangleHomothetCanonical { a, b, c })
    }

    pub fn as_octant(&self) -> Octant<S> {
        Octant::new(Point3::new(self.a, self.b, self.c))
    }

    pub fn from_octant(o: &Octant<S>) -> Result<Self, DualityError> {
        Self::new(o.apex.x, o.apex.y, o.apex.z)
    }

    /// Closed containment of an in-plane spatial point. Coincides with the
    /// octant containment by construction.
    pub fn contains(&self, p: &Point3<S>) -> bool {
        self.as_octant().contains(p)
    }
}

/// Positive homothet of the frame triangle: `scale * frame + translation`,
/// scaling about the origin of the frame's coordinate system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Homothet<S> {
    pub scale: S,
    pub translation: Point2<S>,
}

/// An arbitrary reference triangle plus the affine change of coordinates
/// onto [`reference_triangle`]. Built once per input family; all homothets
/// of the frame triangle become canonical triangles under the map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleFrame<S> {
    vertices: [Point2<S>; 3],
    lin: [[S; 2]; 2],
    off: [S; 2],
    inv_lin: [[S; 2]; 2],
}

impl<S: Scalar> TriangleFrame<S> {
    pub fn new(vertices: [Point2<S>; 3]) -> Result<Self, DualityError> {
        let [v1, v2, v3] = vertices;
        let d1 = (v2.x - v1.x, v2.y - v1.y);
        let d2 = (v3.x - v1.x, v3.y - v1.y);
        let det = d1.0 * d2.1 - d1.1 * d2.0;
        let scale = d1.0.abs().max(d1.1.abs()).max(d2.0.abs()).max(d2.1.abs());
        let tol = scale * scale * S::epsilon() * S::from(8).unwrap();
        if det.abs() <= tol || !det.is_finite() {
            return Err(DualityError::CollinearFrame);
        }
        let [e_a, e_b, e_c] = reference_triangle::<S>();
        let f1 = (e_b.x - e_a.x, e_b.y - e_a.y);
        let f2 = (e_c.x - e_a.x, e_c.y - e_a.y);
        // lin * [d1 d2] = [f1 f2]
        let inv_d = [
            [d2.1 / det, -d2.0 / det],
            [-d1.1 / det, d1.0 / det],
        ];
        let lin = [
            [
                f1.0 * inv_d[0][0] + f2.0 * inv_d[1][0],
                f1.0 * inv_d[0][1] + f2.0 * inv_d[1][1],
            ],
            [
                f1.1 * inv_d[0][0] + f2.1 * inv_d[1][0],
                f1.1 * inv_d[0][1] + f2.1 * inv_d[1][1],
            ],
        ];
        let off = [
            e_a.x - (lin[0][0] * v1.x + lin[0][1] * v1.y),
            e_a.y - (lin[1][0] * v1.x + lin[1][1] * v1.y),
        ];
        let det_l = lin[0][0] * lin[1][1] - lin[0][1] * lin[1][0];
        let inv_lin = [
            [lin[1][1] / det_l, -lin[0][1] / det_l],
            [-lin[1][0] / det_l, lin[0][0] / det_l],
        ];
        Ok(TriangleFrame { vertices, lin, off, inv_lin })
    }

    pub fn vertices(&self) -> &[Point2<S>; 3] {
        &self.vertices
    }

    /// Frame coordinates to reference-triangle plane coordinates.
    pub fn to_plane(&self, p: Point2<S>) -> Point2<S> {
        Point2::new(
            self.lin[0][0] * p.x + self.lin[0][1] * p.y + self.off[0],
            self.lin[1][0] * p.x + self.lin[1][1] * p.y + self.off[1],
        )
    }

    /// Inverse of [`TriangleFrame::to_plane`].
    pub fn from_plane(&self, q: Point2<S>) -> Point2<S> {
        let d = Point2::new(q.x - self.off[0], q.y - self.off[1]);
        Point2::new(
            self.inv_lin[0][0] * d.x + self.inv_lin[0][1] * d.y,
            self.inv_lin[1][0] * d.x + self.inv_lin[1][1] * d.y,
        )
    }
}

/// Homothets of a frame triangle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomothetFamily<S> {
    pub frame: TriangleFrame<S>,
    pub homothets: Vec<Homothet<S>>,
}

impl<S: Scalar> Homothet<S> {
    /// Recover `(scale, translation)` from explicit vertices, validating
    /// that they really are a positive homothet of the frame triangle.
    pub fn from_vertices(
        frame: &TriangleFrame<S>,
        vertices: [Point2<S>; 3],
    ) -> Result<Self, DualityError> {
        let [v1, v2, _] = *frame.vertices();
        let [w1, w2, w3] = vertices;
        let d = (v2.x - v1.x, v2.y - v1.y);
        let e = (w2.x - w1.x, w2.y - w1.y);
        let dd = d.0 * d.0 + d.1 * d.1;
        let scale = (e.0 * d.0 + e.1 * d.1) / dd;
        if scale <= S::zero() {
            return Err(DualityError::NonPositiveScale {
                scale: scale.to_f64().unwrap_or(f64::NAN),
            });
        }
        let translation = Point2::new(w1.x - scale * v1.x, w1.y - scale * v1.y);
        let h = Homothet { scale, translation };
        let mut maxabs = S::zero();
        for w in [w1, w2, w3] {
            maxabs = maxabs.max(w.x.abs()).max(w.y.abs());
        }
        let tol = (S::one() + maxabs) * S::epsilon() * S::from(64).unwrap();
        for (v, w) in frame.vertices().iter().zip(vertices.iter()) {
            let ix = h.scale * v.x + h.translation.x;
            let iy = h.scale * v.y + h.translation.y;
            if (ix - w.x).abs() > tol || (iy - w.y).abs() > tol {
                return Err(DualityError::NotAHomothet);
            }
        }
        Ok(h)
    }
}

/// Canonical octant of one homothet: under the frame map, `scale * B + t`
/// becomes `scale * E + t'`, which is the plane cut of a single octant.
pub fn homothet_to_octant<S: Scalar>(
    frame: &TriangleFrame<S>,
    h: &Homothet<S>,
) -> Result<Octant<S>, DualityError> {
    if h.scale <= S::zero() || !h.scale.is_finite() {
        return Err(DualityError::NonPositiveScale {
            scale: h.scale.to_f64().unwrap_or(f64::NAN),
        });
    }
    // M(scale * p + t) = scale * M(p) + lin*t + (1 - scale) * off
    let lt = Point2::new(
        frame.lin[0][0] * h.translation.x + frame.lin[0][1] * h.translation.y,
        frame.lin[1][0] * h.translation.x + frame.lin[1][1] * h.translation.y,
    );
    let k = S::one() - h.scale;
    let t_plane = Point2::new(lt.x + k * frame.off[0], lt.y + k * frame.off[1]);
    let w = lift_to_plane(t_plane);
    let apex = Point3::new(h.scale + w.x, h.scale + w.y, h.scale + w.z);
    Ok(Octant::new(apex))
}

/// Inverse of [`homothet_to_octant`] for octants whose plane cut is
/// nonempty.
pub fn octant_to_homothet<S: Scalar>(
    frame: &TriangleFrame<S>,
    o: &Octant<S>,
) -> Result<Homothet<S>, DualityError> {
    let sum = o.apex.x + o.apex.y + o.apex.z;
    let three = S::from(3).unwrap();
    let scale = sum / three;
    if scale <= S::zero() {
        return Err(DualityError::DegenerateTriangle {
            sum: sum.to_f64().unwrap_or(f64::NAN),
        });
    }
    let w = Point3::new(o.apex.x - scale, o.apex.y - scale, o.apex.z - scale);
    let t_plane = flatten_from_plane(w);
    let k = S::one() - scale;
    let d = Point2::new(t_plane.x - k * frame.off[0], t_plane.y - k * frame.off[1]);
    let translation = Point2::new(
        frame.inv_lin[0][0] * d.x + frame.inv_lin[0][1] * d.y,
        frame.inv_lin[1][0] * d.x + frame.inv_lin[1][1] * d.y,
    );
    Ok(Homothet { scale, translation })
}

/// Spatial embedding of a frame-coordinate point: the image under the
/// frame map, lifted into the plane `x + y + z = 0`. Containment commutes:
/// a point lies in a homothet iff its embedding lies in the homothet's
/// octant.
pub fn plane_point_to_3d<S: Scalar>(frame: &TriangleFrame<S>, p: Point2<S>) -> Point3<S> {
    lift_to_plane(frame.to_plane(p))
}

/// Frame coordinates of an in-plane spatial point; inverse of
/// [`plane_point_to_3d`].
pub fn plane_point_from_3d<S: Scalar>(frame: &TriangleFrame<S>, p: Point3<S>) -> Point2<S> {
    frame.from_plane(flatten_from_plane(p))
}

/// Split a family of positive triangle homothets so that both classes
/// cover every plane point lying in at least twelve of them.
pub fn decompose_triangle_cover<S: Scalar>(
    hf: &HomothetFamily<S>,
) -> Result<Decomposition, DualityError> {
    let mut octants = Vec::with_capacity(hf.homothets.len());
    for h in &hf.homothets {
        octants.push(homothet_to_octant(&hf.frame, h)?);
    }
    Ok(decompose_cover(&OctantFamily::new(octants)))
}

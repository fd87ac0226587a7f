//! Two-coloring of finite 3D point sets so that every octant containing
//! at least twelve of them contains both colors, and the dual problem of
//! splitting a 12-fold cover by octants (or by positive homothets of a
//! triangle) into two covers.
//!
//! The coloring is built by a planar sweep over the points in height
//! order ([`staircase`]), producing a forest whose proper 2-coloring has
//! the octant property. Everything the fast code claims is checkable
//! against literal brute-force oracles ([`verify`]), which also back the
//! low-threshold special case for antichains ([`antichain`]) and the
//! 10-point configuration showing thresholds below four are impossible
//! ([`lower_bound`]).
//!
//! Core types are generic over the float type through [`Scalar`]; the
//! aliases at the crate root fix `f64` for everyday use.

pub mod antichain;
pub mod duality;
pub mod geom;
pub mod graph;
pub mod lower_bound;
pub mod scalar;
pub mod staircase;
pub mod trace;
pub mod verify;

pub use antichain::{
    color_incomparable, verify_incomparable_prefixes, AntichainError, IncomparableRun,
};
pub use duality::{
    decompose_cover, decompose_triangle_cover, dualize_family, homothet_to_octant,
    octant_to_homothet, plane_point_from_3d, plane_point_to_3d, Decomposition, DualityError,
};
pub use graph::{Color, ColorGraph, Coloring, CycleError};
pub use lower_bound::{lower_bound_hypergraph, search_realization, FixtureError, LowerBoundFixture};
pub use scalar::Scalar;
pub use staircase::{color_points, PropertyReport, PropertyViolation};
pub use trace::{Snapshot, StepKind};
pub use verify::{
    enumerate_traces, exact_triples, exhaust_colorings, verify_coloring, verify_decomposition,
    Hypergraph3, VerifyError, Witness, WitnessRegion,
};

pub type Point2 = geom::Point2<f64>;
pub type Point3 = geom::Point3<f64>;
pub type PointSet3 = geom::PointSet3<f64>;
pub type Octant = geom::Octant<f64>;
pub type Wedge = geom::Wedge<f64>;
pub type Staircase = staircase::Staircase<f64>;
pub type AlgoState = staircase::AlgoState<f64>;
pub type Trace = trace::Trace<f64>;
pub type OctantFamily = duality::OctantFamily<f64>;
pub type TriangleFrame = duality::TriangleFrame<f64>;
pub type Homothet = duality::Homothet<f64>;
pub type HomothetFamily = duality::HomothetFamily<f64>;
pub type TraceSet = verify::TraceSet<f64>;
pub type VerifyReport = verify::VerifyReport<f64>;
pub type IncomparableSequence = antichain::IncomparableSequence<f64>;

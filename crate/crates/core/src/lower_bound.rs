//! Threshold lower bound: a 10-point configuration whose octant traces
//! include twelve triples that no 2-coloring can keep bichromatic.
//!
//! Points are indexed by height: index equals z rank. The x order is a
//! permutation of the indices and y reverses it, so the projection is an
//! antichain. A triple is then an exact octant trace exactly when its
//! members are consecutive among the points of smaller or equal index in
//! x order, which reduces realization to a search over permutations.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::{Point3, PointSet3};
use crate::verify::{exact_triples, Hypergraph3, VerifyError};

/// The twelve triples over ten vertices forcing a monochromatic triple in
/// every 2-coloring. Vertices are z ranks.
pub fn lower_bound_hypergraph() -> Hypergraph3 {
    Hypergraph3::new(
        10,
        vec![
            [0, 1, 2],
            [0, 1, 3],
            [0, 1, 4],
            [2, 3, 4],
            [5, 1, 4],
            [5, 1, 6],
            [5, 1, 7],
            [4, 6, 7],
            [5, 0, 1],
            [5, 0, 8],
            [5, 0, 9],
            [1, 8, 9],
        ],
    )
    .expect("the built-in triple list is well-formed")
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FixtureError {
    #[error(transparent)]
    Hypergraph(#[from] VerifyError),
    #[error("point {i} does not increase z over its predecessor")]
    ZOrderBroken { i: usize },
    #[error("projection is not an antichain: points {i} and {j} are comparable")]
    NotAntichain { i: usize, j: usize },
    #[error("triple ({a}, {b}, {c}) is not an exact octant trace of the points")]
    TripleNotRealized { a: usize, b: usize, c: usize },
}

/// A concrete point realization of a triple system: every listed triple
/// is an exact octant trace of the points (an octant contains those three
/// points and nothing else).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LowerBoundFixture {
    pub points: Vec<[f64; 3]>,
    pub triples: Vec<[usize; 3]>,
}

impl LowerBoundFixture {
    /// The checked-in realization of [`lower_bound_hypergraph`].
    pub fn builtin() -> Self {
        serde_json::from_str(include_str!("../fixtures/lower_bound_realization.json"))
            .expect("built-in fixture parses")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn point_set(&self) -> PointSet3<f64> {
        PointSet3::new(
            self.points
                .iter()
                .map(|&[x, y, z]| Point3::new(x, y, z))
                .collect(),
        )
    }

    pub fn hypergraph(&self) -> Result<Hypergraph3, VerifyError> {
        Hypergraph3::new(self.points.len(), self.triples.clone())
    }

    /// Check the fixture end to end: well-formed triples, z increasing
    /// with index, antichain projection, and every triple an exact trace.
    pub fn validate(&self) -> Result<(), FixtureError> {
        let n = self.points.len();
        let h = self.hypergraph()?;
        for i in 1..n {
            if self.points[i][2] <= self.points[i - 1][2] {
                return Err(FixtureError::ZOrderBroken { i });
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            self.points[a][0]
                .partial_cmp(&self.points[b][0])
                .expect("coordinates must not be NaN")
                .then(a.cmp(&b))
        });
        for w in order.windows(2) {
            let (i, j) = (w[0], w[1]);
            if self.points[j][0] == self.points[i][0] || self.points[j][1] >= self.points[i][1] {
                return Err(FixtureError::NotAntichain { i: i.min(j), j: i.max(j) });
            }
        }
        let exact = exact_triples(&self.point_set())?;
        for &t in h.triples() {
            if !exact.contains_triple(t) {
                return Err(FixtureError::TripleNotRealized { a: t[0], b: t[1], c: t[2] });
            }
        }
        Ok(())
    }
}

/// Look for a realization of a triple system by randomized restarts and
/// swap hill-climbing over x orders (index = z rank, y reversing x).
///
/// Only realizations of that staircase shape are searched, so `None`
/// means none was found within the budget, not that no realization
/// exists. Any returned fixture has passed [`LowerBoundFixture::validate`].
pub fn search_realization(
    h: &Hypergraph3,
    restarts: usize,
    seed: u64,
) -> Option<LowerBoundFixture> {
    let n = h.n();
    let mut rng = StdRng::seed_from_u64(seed);
    // pos[label] = position of the label in x order.
    let mut perm: Vec<usize> = (0..n).collect();
    for _ in 0..restarts {
        perm.shuffle(&mut rng);
        let mut pos = invert(&perm);
        let mut score = realization_score(h, &pos);
        let mut stall = 0;
        let max_stall = 80 * n.max(1);
        while score > 0 && stall < max_stall {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i == j {
                stall += 1;
                continue;
            }
            perm.swap(i, j);
            pos[perm[i]] = i;
            pos[perm[j]] = j;
            let s = realization_score(h, &pos);
            if s <= score {
                stall = if s < score { 0 } else { stall + 1 };
                score = s;
            } else {
                perm.swap(i, j);
                pos[perm[i]] = i;
                pos[perm[j]] = j;
                stall += 1;
            }
        }
        if score == 0 {
            let fixture = fixture_from_positions(h, &pos);
            if fixture.validate().is_ok() {
                return Some(fixture);
            }
        }
    }
    None
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; perm.len()];
    for (i, &l) in perm.iter().enumerate() {
        pos[l] = i;
    }
    pos
}

/// Number of intruding labels over all triples: labels of smaller or
/// equal index falling strictly between a triple's extreme x positions
/// without belonging to it. Zero means every triple is realized.
fn realization_score(h: &Hypergraph3, pos: &[usize]) -> usize {
    let mut score = 0;
    for t in h.triples() {
        let m = t[2].max(t[1]).max(t[0]);
        let pmin = pos[t[0]].min(pos[t[1]]).min(pos[t[2]]);
        let pmax = pos[t[0]].max(pos[t[1]]).max(pos[t[2]]);
        for label in 0..=m {
            if label == t[0] || label == t[1] || label == t[2] {
                continue;
            }
            if pmin < pos[label] && pos[label] < pmax {
                score += 1;
            }
        }
    }
    score
}

fn fixture_from_positions(h: &Hypergraph3, pos: &[usize]) -> LowerBoundFixture {
    let n = pos.len();
    let points = (0..n)
        .map(|label| {
            [
                pos[label] as f64,
                (n - 1 - pos[label]) as f64,
                label as f64,
            ]
        })
        .collect();
    LowerBoundFixture { points, triples: h.triples().to_vec() }
}

//! Acceptance gate for the whole crate: eight criteria, each reported as
//! one `PASS criterion N: ...` / `FAIL criterion N: ...` line (visible
//! with `--nocapture`) and enforced by an assertion. Tolerances and time
//! budgets are pinned as constants here.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use octant_cover::antichain::{color_incomparable, verify_incomparable_prefixes};
use octant_cover::duality::{
    decompose_cover, decompose_triangle_cover, homothet_to_octant, octant_to_homothet,
};
use octant_cover::staircase::color_points;
use octant_cover::verify::{
    enumerate_traces, exact_triples, exhaust_colorings, verify_coloring, verify_decomposition,
    verify_triangle_decomposition,
};
use octant_cover::{
    lower_bound_hypergraph, AlgoState, Homothet, HomothetFamily, IncomparableSequence,
    LowerBoundFixture, Octant, OctantFamily, Point2, Point3, PointSet3, TriangleFrame,
};

/// Octants with at least this many points must receive both colors.
const COLORING_THRESHOLD: usize = 12;
/// Largest monochromatic trace the sweep may leave behind.
const MONO_TRACE_BOUND: usize = 11;
/// Intervals of at least this many antichain points must see both colors.
const INTERVAL_THRESHOLD: usize = 4;
/// Allowed relative error for the homothet round-trip.
const ROUNDTRIP_TOL: f64 = 1e-9;

const COLORING_BUDGET: Duration = Duration::from_secs(60);
const DECOMPOSE_BUDGET: Duration = Duration::from_secs(60);
const EXHAUST_BUDGET: Duration = Duration::from_secs(1);
const ANTICHAIN_BUDGET: Duration = Duration::from_secs(10);

fn conclude(criterion: usize, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("{verdict} criterion {criterion}: {detail}");
    assert!(ok, "criterion {criterion}: {detail}");
}

/// 210 point sets, n from 1 to 150, cycling through uniform, clustered,
/// and small-integer-grid coordinates. Deterministic for a fixed seed.
fn coloring_corpus(seed: u64) -> Vec<PointSet3> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sets = Vec::new();
    for i in 0..210 {
        let n = match i {
            0 => 1,
            1 => 150,
            _ => rng.gen_range(1..=150),
        };
        let mut pts = Vec::with_capacity(n);
        match i % 3 {
            0 => {
                for _ in 0..n {
                    pts.push(Point3::new(
                        rng.gen_range(0.0..100.0),
                        rng.gen_range(0.0..100.0),
                        rng.gen_range(0.0..100.0),
                    ));
                }
            }
            1 => {
                let k = 1 + n / 25;
                let centers: Vec<Point3> = (0..k)
                    .map(|_| {
                        Point3::new(
                            rng.gen_range(0.0..100.0),
                            rng.gen_range(0.0..100.0),
                            rng.gen_range(0.0..100.0),
                        )
                    })
                    .collect();
                for _ in 0..n {
                    let c = centers[rng.gen_range(0..k)];
                    pts.push(Point3::new(
                        c.x + rng.gen_range(-2.0..2.0),
                        c.y + rng.gen_range(-2.0..2.0),
                        c.z + rng.gen_range(-2.0..2.0),
                    ));
                }
            }
            _ => {
                // ties and duplicates on purpose; generalize() must cope
                for _ in 0..n {
                    pts.push(Point3::new(
                        rng.gen_range(0..6) as f64,
                        rng.gen_range(0..6) as f64,
                        rng.gen_range(0..6) as f64,
                    ));
                }
            }
        }
        sets.push(PointSet3::new(pts));
    }
    sets
}

#[test]
fn criteria_1_and_2_coloring_suite() {
    let corpus = coloring_corpus(0x0c7a_2026);
    let start = Instant::now();
    let mut failures = 0usize;
    let mut max_mono = 0usize;
    for ps in &corpus {
        let (colors, _, _) = color_points(ps);
        let report = verify_coloring(ps, &colors, COLORING_THRESHOLD).expect("within size guard");
        if !report.ok {
            failures += 1;
        }
        max_mono = max_mono.max(report.max_monochromatic.unwrap_or(0));
    }
    let elapsed = start.elapsed();
    conclude(
        1,
        failures == 0 && elapsed < COLORING_BUDGET,
        &format!(
            "{} point sets (n ≤ 150, three distributions) verified at threshold {} with {} failures in {:.1?}",
            corpus.len(),
            COLORING_THRESHOLD,
            failures,
            elapsed
        ),
    );
    conclude(
        2,
        max_mono <= MONO_TRACE_BOUND,
        &format!(
            "largest monochromatic trace across the corpus: {max_mono} (bound {MONO_TRACE_BOUND})"
        ),
    );
}

#[test]
fn criterion_3_structural_suite() {
    let corpus = coloring_corpus(0x0c7a_2026);
    let mut runs = 0usize;
    let mut ok = true;
    for ps in &corpus {
        let (_, graph, trace) = color_points(ps);
        ok &= graph.is_forest();

        // Re-run the sweep checking properties after every insertion, then
        // demand the trace replays to exactly this state.
        let mut state = AlgoState::new();
        for p in &trace.points {
            state.insert_point(*p);
            ok &= state.check_properties().ok();
        }
        let replayed = AlgoState::replay(&trace);
        ok &= replayed.points() == state.points();
        ok &= replayed.staircase().indices() == state.staircase().indices();
        ok &= replayed.below() == state.below();
        ok &= replayed.graph().edges() == state.graph().edges();
        ok &= replayed.snapshots() == state.snapshots();
        ok &= state.snapshots() == trace.snapshots;
        runs += 1;
        if !ok {
            break;
        }
    }
    conclude(
        3,
        ok,
        &format!("forest, per-insertion properties, and exact trace replay on {runs} runs"),
    );
}

#[test]
fn criterion_4_lower_bound_exhaustion() {
    let h = lower_bound_hypergraph();
    let start = Instant::now();
    let proper = exhaust_colorings(&h).expect("within exhaustion limit");
    let elapsed = start.elapsed();

    let fixture = LowerBoundFixture::builtin();
    let fixture_ok = fixture.validate().is_ok();
    conclude(
        4,
        proper.is_none() && elapsed < EXHAUST_BUDGET && fixture_ok,
        &format!(
            "all {} colorings contain a monochromatic triple ({:.1?}); realization fixture {}",
            1usize << h.n(),
            elapsed,
            if fixture_ok { "realizes all 12 triples" } else { "INVALID" }
        ),
    );
}

#[test]
fn criterion_5_octant_decomposition_suite() {
    let mut rng = StdRng::seed_from_u64(0xdeca_f001);
    let start = Instant::now();
    let mut failures = 0usize;
    let mut families = 0usize;
    for i in 0..50 {
        let m = match i {
            0 => 12,
            1 => 300,
            _ => rng.gen_range(12..=300),
        };
        let mut apexes = Vec::with_capacity(m);
        if i % 2 == 0 {
            for _ in 0..m {
                apexes.push(Point3::new(
                    rng.gen_range(-50.0..50.0),
                    rng.gen_range(-50.0..50.0),
                    rng.gen_range(-50.0..50.0),
                ));
            }
        } else {
            // overlapping chain: heavy multiplicity around the origin
            for k in 0..m {
                let t = k as f64;
                apexes.push(Point3::new(
                    t * rng.gen_range(0.1..1.0),
                    t * rng.gen_range(0.1..1.0),
                    t * rng.gen_range(0.1..1.0),
                ));
            }
        }
        let family = OctantFamily::from_apexes(apexes);
        let d = decompose_cover(&family);
        let report =
            verify_decomposition(&family, &d, COLORING_THRESHOLD).expect("valid partition");
        if !report.ok {
            failures += 1;
        }
        families += 1;
    }
    let elapsed = start.elapsed();
    conclude(
        5,
        failures == 0 && elapsed < DECOMPOSE_BUDGET,
        &format!(
            "{families} octant families (m ≤ 300) decomposed and verified at threshold {} with {failures} failures in {:.1?}",
            COLORING_THRESHOLD, elapsed
        ),
    );
}

fn random_frame(rng: &mut StdRng) -> TriangleFrame {
    let v0 = Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
    let v1 = Point2::new(
        v0.x + rng.gen_range(2.0..5.0),
        v0.y + rng.gen_range(-0.5..0.5),
    );
    let v2 = Point2::new(
        v0.x + rng.gen_range(-0.5..0.5),
        v0.y + rng.gen_range(2.0..5.0),
    );
    TriangleFrame::new([v0, v1, v2]).expect("frame is never collinear by construction")
}

#[test]
fn criterion_6_triangle_suite() {
    let mut rng = StdRng::seed_from_u64(0x7219_a27e);
    let mut max_err = 0.0f64;
    for _ in 0..100 {
        let frame = random_frame(&mut rng);
        for _ in 0..100 {
            let h = Homothet {
                scale: rng.gen_range(0.1..10.0),
                translation: Point2::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0)),
            };
            let o = homothet_to_octant(&frame, &h).expect("positive scale");
            let back = octant_to_homothet(&frame, &o).expect("positive scale");
            for (a, b) in [
                (h.scale, back.scale),
                (h.translation.x, back.translation.x),
                (h.translation.y, back.translation.y),
            ] {
                max_err = max_err.max((a - b).abs() / a.abs().max(1.0));
            }
        }
    }
    let roundtrip_ok = max_err <= ROUNDTRIP_TOL;

    let mut failures = 0usize;
    for _ in 0..20 {
        let frame = random_frame(&mut rng);
        let m = rng.gen_range(12..=120);
        let homothets: Vec<Homothet> = (0..m)
            .map(|_| Homothet {
                scale: rng.gen_range(0.5..5.0),
                translation: Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)),
            })
            .collect();
        let hf = HomothetFamily { frame, homothets };
        let d = decompose_triangle_cover(&hf).expect("positive scales");
        let report = verify_triangle_decomposition(&hf, &d, COLORING_THRESHOLD)
            .expect("valid partition");
        if !report.ok {
            failures += 1;
        }
    }
    conclude(
        6,
        roundtrip_ok && failures == 0,
        &format!(
            "10000 homothet round-trips, max relative error {max_err:.2e} (tolerance {ROUNDTRIP_TOL:.0e}); 20 triangle families verified with {failures} failures"
        ),
    );
}

#[test]
fn criterion_7_bottomless_suite() {
    let mut rng = StdRng::seed_from_u64(0xb0_770e55);
    let start = Instant::now();
    let mut failures = 0usize;
    let mut runs = 0usize;
    for i in 0..100 {
        let n = if i == 0 { 100 } else { rng.gen_range(4..=100) };
        // strictly increasing x against strictly decreasing y, then a
        // random arrival order
        let mut pts = Vec::with_capacity(n);
        let (mut x, mut y) = (0.0f64, 0.0f64);
        for _ in 0..n {
            x += rng.gen_range(0.1..1.0);
            y -= rng.gen_range(0.1..1.0);
            pts.push(Point2::new(x, y));
        }
        pts.shuffle(&mut rng);
        let seq = IncomparableSequence::new(pts).expect("antichain by construction");
        let run = color_incomparable(&seq);
        let report =
            verify_incomparable_prefixes(&seq, &run, INTERVAL_THRESHOLD).expect("sizes match");
        if !report.ok {
            failures += 1;
        }
        runs += 1;
    }
    let elapsed = start.elapsed();
    conclude(
        7,
        failures == 0 && elapsed < ANTICHAIN_BUDGET,
        &format!(
            "{runs} random antichains (n ≤ 100) verified at threshold {} with {failures} failures in {:.1?}",
            INTERVAL_THRESHOLD, elapsed
        ),
    );
}

#[test]
fn criterion_8_oracle_self_audit() {
    let mut rng = StdRng::seed_from_u64(0x5e1f_a0d1);
    let pts: Vec<Point3> = (0..30)
        .map(|_| {
            Point3::new(
                rng.gen_range(0.0..10.0),
                rng.gen_range(0.0..10.0),
                rng.gen_range(0.0..10.0),
            )
        })
        .collect();
    let ps = PointSet3::new(pts);
    let traces = enumerate_traces(&ps).expect("within size guard");

    let mut missing = 0usize;
    let mut nonempty = 0usize;
    for _ in 0..1000 {
        let apex = Point3::new(
            rng.gen_range(-1.0..12.0),
            rng.gen_range(-1.0..12.0),
            rng.gen_range(-1.0..12.0),
        );
        let o = Octant::new(apex);
        let members: Vec<usize> =
            (0..ps.len()).filter(|&i| o.contains(&ps.as_slice()[i])).collect();
        if members.is_empty() {
            continue;
        }
        nonempty += 1;
        if !traces.contains(&members) {
            missing += 1;
        }
    }

    let from_traces: Vec<[usize; 3]> = traces
        .entries()
        .iter()
        .filter(|e| e.indices.len() == 3)
        .map(|e| [e.indices[0], e.indices[1], e.indices[2]])
        .collect();
    let exact = exact_triples(&ps).expect("within size guard");
    let triples_match = exact.triples() == from_traces.as_slice();

    conclude(
        8,
        missing == 0 && triples_match,
        &format!(
            "{nonempty} random continuum octant traces all enumerated ({missing} missing); size-3 traces {} exact triples",
            if triples_match { "match" } else { "DIFFER FROM" }
        ),
    );
}

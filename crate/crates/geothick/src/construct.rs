//! Deterministic drawing generators: the two-ring layout for complete
//! graphs (⌈n/4⌉ layers), convex book pages (⌈n/2⌉ layers), and the
//! two-row bipartite layout (⌈min(a,b)/2⌉ layers).
//!
//! The two-ring geometry has free parameters that are only known to work
//! "for some sufficiently stretched configuration", so candidates are
//! tried in a fixed escalation schedule and every layer is certified by
//! the exact verifier before it is accepted. Nothing here is trusted
//! arithmetic: a drawing is returned only after it passes verification.

use crate::drawing::LayeredDrawing;
use crate::geom::{Rational, RationalPoint};
use crate::graph::GraphSpec;
use crate::verify::verify;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::f64::consts::TAU;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("ring size {0} must be even and at least 4")]
    BadRingSize(usize),
    #[error("index {index} out of range (must be < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("no verified parameter set found: {0}")]
    ParameterSearchFailed(String),
}

/// The Hamiltonian path ℓ, ℓ+1, ℓ−1, ℓ+2, ℓ−2, … (mod k) on ring
/// vertices 0..k−1. The k/2 paths for ℓ = 0..k/2−1 partition the edges
/// of the complete graph on the ring, and each contains exactly one
/// antipodal edge (circular index difference k/2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagPath {
    k: usize,
    start: usize,
    sequence: Vec<usize>,
}

impl ZigzagPath {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Path edges in traversal order, each normalized to u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.sequence
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    /// Endpoints of the unique antipodal edge, in traversal order.
    pub fn antipodal_pair(&self) -> (usize, usize) {
        (self.sequence[self.k / 2 - 1], self.sequence[self.k / 2])
    }
}

pub fn zigzag_path(k: usize, start: usize) -> Result<ZigzagPath, ConstructError> {
    if k < 4 || k % 2 != 0 {
        return Err(ConstructError::BadRingSize(k));
    }
    if start >= k / 2 {
        return Err(ConstructError::IndexOutOfRange { index: start, bound: k / 2 });
    }
    Ok(ZigzagPath { k, start, sequence: ring_sequence(k, start) })
}

/// Core recurrence, also usable for the degenerate two-vertex ring.
fn ring_sequence(k: usize, start: usize) -> Vec<usize> {
    debug_assert!(k >= 2 && k % 2 == 0 && start < k / 2);
    let mut seq = Vec::with_capacity(k);
    seq.push(start);
    for m in 1..=k / 2 {
        seq.push((start + m) % k);
        if seq.len() < k {
            seq.push((start + k - m) % k);
        }
    }
    seq
}

/// Free parameters of the two-ring layout. `outer_rotation` is a
/// fraction of a full turn; `angular_resolution` is the denominator used
/// when ring angles are approximated by rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRingParameters {
    pub inner_radius: Rational,
    pub outer_radius: Rational,
    pub inner_offset: (Rational, Rational),
    pub angular_resolution: u64,
    pub outer_rotation: Rational,
}

/// Which inner path and spoke apexes ended up on each layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPairing {
    pub layer: usize,
    pub outer_start: usize,
    /// The outer antipodal pair whose spokes cover the inner ring.
    pub apexes: (usize, usize),
    pub inner_start: usize,
}

/// Outcome metadata for a successful two-ring construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoRingReport {
    pub parameters: TwoRingParameters,
    /// Parameter sets tried before one verified (1 = first try worked).
    pub attempts: usize,
    pub pairings: Vec<LayerPairing>,
}

const ANGULAR_RESOLUTION: u64 = 1_000_000_000;

fn rationalize(x: f64, resolution: u64) -> Rational {
    Rational::new(
        BigInt::from((x * resolution as f64).round() as i64),
        BigInt::from(resolution),
    )
}

fn ring_points(
    k: usize,
    radius: &Rational,
    rotation_turns: f64,
    center: &(Rational, Rational),
    resolution: u64,
) -> Vec<RationalPoint> {
    (0..k)
        .map(|i| {
            let angle = TAU * (i as f64 / k as f64 + rotation_turns);
            let ux = rationalize(angle.cos(), resolution);
            let uy = rationalize(angle.sin(), resolution);
            RationalPoint::new(&center.0 + radius * ux, &center.1 + radius * uy)
        })
        .collect()
}

fn turns_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rotation parameter within f64 range")
}

/// Candidate parameter sets, cheapest first. Outer radii escalate
/// geometrically; rotations try the half-step first and then the two
/// quarter-step offsets (which one avoids spoke/edge alignment depends
/// on k mod 4); the inner offset along a wedge bisector starts generous
/// and is halved once.
fn parameter_schedule(n: usize) -> Vec<TwoRingParameters> {
    let k = n / 2;
    let kq = BigInt::from(k as u64);
    let half_step = Rational::new(BigInt::from(1), 2 * &kq);
    let quarter_step = Rational::new(BigInt::from(1), 4 * &kq);
    let three_quarter = Rational::new(BigInt::from(3), 4 * &kq);
    let rotations = if k % 4 == 2 {
        [half_step, three_quarter, quarter_step]
    } else {
        [half_step, quarter_step, three_quarter]
    };
    let wedge_sin = (std::f64::consts::PI / k as f64).sin();
    let mut out = Vec::new();
    for radius in [8u64, 64, 512, 4096, 32768] {
        for rot in &rotations {
            for margin in [3.0, 1.5] {
                let magnitude = margin / wedge_sin;
                // Pre-filter rungs that cannot clear: the inner disk must
                // stay off every wedge line and inside the gap left by the
                // nearest outer chords.
                if (radius as f64) * wedge_sin < magnitude + 1.2
                    || (radius as f64) < magnitude + 1.2
                {
                    continue;
                }
                let bisector = turns_to_f64(rot) + 1.0 / (2.0 * k as f64);
                let angle = TAU * bisector;
                out.push(TwoRingParameters {
                    inner_radius: Rational::from_integer(1.into()),
                    outer_radius: Rational::from_integer(radius.into()),
                    inner_offset: (
                        rationalize(magnitude * angle.cos(), ANGULAR_RESOLUTION),
                        rationalize(magnitude * angle.sin(), ANGULAR_RESOLUTION),
                    ),
                    angular_resolution: ANGULAR_RESOLUTION,
                    outer_rotation: rot.clone(),
                })
            }
        }
    }
    out
}

/// Draw K_n (n a multiple of 4) in exactly n/4 verified layers: two
/// nested rings of k = n/2 vertices; layer ℓ holds one outer zigzag
/// path, all 2k spokes from that path's antipodal pair to the inner
/// ring, and one compatible inner zigzag path.
pub fn two_ring_layout(
    n: usize,
    params: Option<TwoRingParameters>,
) -> Result<LayeredDrawing, ConstructError> {
    two_ring_layout_with_report(n, params).map(|(d, _)| d)
}

pub fn two_ring_layout_with_report(
    n: usize,
    params: Option<TwoRingParameters>,
) -> Result<(LayeredDrawing, TwoRingReport), ConstructError> {
    if n < 4 || n % 4 != 0 {
        return Err(ConstructError::BadInput(format!(
            "two-ring layout needs a positive multiple of 4, got {n}"
        )));
    }
    let candidates = match params {
        Some(p) => vec![p],
        None => parameter_schedule(n),
    };
    if candidates.is_empty() {
        return Err(ConstructError::ParameterSearchFailed(
            "escalation schedule produced no feasible parameter rungs".into(),
        ));
    }
    let mut last_failure = String::new();
    for (attempt, params) in candidates.iter().enumerate() {
        match try_two_ring(n, params) {
            Ok((drawing, pairings)) => {
                return Ok((
                    drawing,
                    TwoRingReport {
                        parameters: params.clone(),
                        attempts: attempt + 1,
                        pairings,
                    },
                ));
            }
            Err(reason) => last_failure = reason,
        }
    }
    Err(ConstructError::ParameterSearchFailed(format!(
        "{} parameter sets exhausted; last failure: {last_failure}",
        candidates.len()
    )))
}

fn try_two_ring(
    n: usize,
    params: &TwoRingParameters,
) -> Result<(LayeredDrawing, Vec<LayerPairing>), String> {
    let k = n / 2;
    let origin = (Rational::from_integer(0.into()), Rational::from_integer(0.into()));
    let outer = ring_points(
        k,
        &params.outer_radius,
        turns_to_f64(&params.outer_rotation),
        &origin,
        params.angular_resolution,
    );
    let inner = ring_points(k, &params.inner_radius, 0.0, &params.inner_offset, params.angular_resolution);
    let mut points = outer;
    points.extend(inner);
    {
        let mut sorted: Vec<&RationalPoint> = points.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err("ring points collide at this resolution".into());
        }
    }

    let mut used = vec![false; k / 2];
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut pairings = Vec::new();
    for layer in 0..k / 2 {
        let outer_seq = ring_sequence(k, layer);
        let apexes = (outer_seq[k / 2 - 1], outer_seq[k / 2]);
        let mut base: Vec<(usize, usize)> = outer_seq
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        for j in 0..k {
            base.push((apexes.0, k + j));
            base.push((apexes.1, k + j));
        }
        if !pairs_clean(&points, &base) {
            return Err(format!("layer {layer}: outer path and spokes conflict"));
        }
        let mut chosen = None;
        for inner_start in (0..k / 2).filter(|&j| !used[j]) {
            let inner_edges: Vec<(usize, usize)> = ring_sequence(k, inner_start)
                .windows(2)
                .map(|w| (k + w[0].min(w[1]), k + w[0].max(w[1])))
                .collect();
            if pairs_clean(&points, &inner_edges) && cross_clean(&points, &base, &inner_edges) {
                chosen = Some((inner_start, inner_edges));
                break;
            }
        }
        let Some((inner_start, inner_edges)) = chosen else {
            return Err(format!("layer {layer}: no compatible inner path"));
        };
        used[inner_start] = true;
        pairings.push(LayerPairing { layer, outer_start: layer, apexes, inner_start });
        edges.extend(base.into_iter().chain(inner_edges).map(|(u, v)| (u, v, layer)));
    }

    let drawing = LayeredDrawing::new(GraphSpec::complete(n), points, edges, k / 2)
        .map_err(|e| format!("assembled drawing malformed: {e}"))?;
    let report = verify(&drawing);
    if !report.valid {
        return Err(format!(
            "full verification failed ({} conflicting pairs)",
            report.violations.len()
        ));
    }
    Ok((drawing, pairings))
}

fn classify_ok(points: &[RationalPoint], a: (usize, usize), b: (usize, usize)) -> bool {
    let p = |i: usize| {
        let pt = &points[i];
        (&pt.x, &pt.y)
    };
    crate::geom::classify_core::<Rational>(p(a.0), p(a.1), p(b.0), p(b.1))
        .is_allowed_same_layer()
}

fn pairs_clean(points: &[RationalPoint], edges: &[(usize, usize)]) -> bool {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if !classify_ok(points, edges[i], edges[j]) {
                return false;
            }
        }
    }
    true
}

fn cross_clean(
    points: &[RationalPoint],
    a: &[(usize, usize)],
    b: &[(usize, usize)],
) -> bool {
    a.iter().all(|&ea| b.iter().all(|&eb| classify_ok(points, ea, eb)))
}

/// Drop vertices `keep..` from a drawing, keeping only edges among the
/// surviving prefix and compacting layer ids.
fn restrict_to_prefix(
    drawing: &LayeredDrawing,
    keep: usize,
    graph: GraphSpec,
) -> Result<LayeredDrawing, ConstructError> {
    let points: Vec<RationalPoint> = drawing.points()[..keep].to_vec();
    let survivors: Vec<(usize, usize, usize)> = drawing
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v, _)| u < keep && v < keep)
        .collect();
    let mut layer_map = vec![usize::MAX; drawing.layer_count()];
    let mut next = 0;
    for layer in 0..drawing.layer_count() {
        if survivors.iter().any(|&(_, _, l)| l == layer) {
            layer_map[layer] = next;
            next += 1;
        }
    }
    let edges: Vec<(usize, usize, usize)> = survivors
        .into_iter()
        .map(|(u, v, l)| (u, v, layer_map[l]))
        .collect();
    LayeredDrawing::new(graph, points, edges, next.max(1))
        .map_err(|e| ConstructError::BadInput(format!("restriction failed: {e}")))
}

/// Verified drawing of K_n with exactly ⌈n/4⌉ layers, for any n ≥ 1:
/// the two-ring layout of the next multiple of 4 with the extra
/// vertices deleted.
pub fn complete_layout(n: usize) -> Result<LayeredDrawing, ConstructError> {
    if n == 0 {
        return Err(ConstructError::BadInput("vertex count must be positive".into()));
    }
    if n == 1 {
        return LayeredDrawing::new(
            GraphSpec::complete(1),
            vec![RationalPoint::from_integers(0, 0)],
            vec![],
            1,
        )
        .map_err(|e| ConstructError::BadInput(e.to_string()));
    }
    let rounded = n.div_ceil(4) * 4;
    let full = two_ring_layout(rounded, None)?;
    if rounded == n {
        return Ok(full);
    }
    restrict_to_prefix(&full, n, GraphSpec::complete(n))
}

/// Book embedding on a convex polygon: ⌈n/2⌉ zigzag pages.
pub fn convex_layout(n: usize) -> Result<LayeredDrawing, ConstructError> {
    if n < 3 {
        return Err(ConstructError::BadInput(format!(
            "convex layout needs at least 3 vertices, got {n}"
        )));
    }
    let m = if n % 2 == 0 { n } else { n + 1 };
    let points = ring_points(
        m,
        &Rational::from_integer(1.into()),
        0.0,
        &(Rational::from_integer(0.into()), Rational::from_integer(0.into())),
        ANGULAR_RESOLUTION,
    );
    let mut edges = Vec::new();
    for layer in 0..m / 2 {
        for (u, v) in zigzag_path(m, layer).expect("even m >= 4").edges() {
            edges.push((u, v, layer));
        }
    }
    let full = LayeredDrawing::new(GraphSpec::complete(m), points, edges, m / 2)
        .map_err(|e| ConstructError::BadInput(format!("page assembly failed: {e}")))?;
    if m == n {
        Ok(full)
    } else {
        restrict_to_prefix(&full, n, GraphSpec::complete(n))
    }
}

/// Two-row drawing of the complete bipartite graph: the larger class on
/// a horizontal line, the smaller class split above and below it; layer
/// ℓ holds every edge incident to the ℓ-th above-vertex and the ℓ-th
/// below-vertex.
pub fn bipartite_layout(a: usize, b: usize) -> Result<LayeredDrawing, ConstructError> {
    if a == 0 || b == 0 {
        return Err(ConstructError::BadInput("both classes must be nonempty".into()));
    }
    let small = a.min(b);
    let half = small.div_ceil(2);
    let pt = RationalPoint::from_integers;
    // Split-class members: local index -> coordinates and layer.
    let split_pos = |j: usize| -> RationalPoint {
        if j < half {
            pt(j as i64, 1)
        } else {
            pt((j - half) as i64, -1)
        }
    };
    let split_layer = |j: usize| if j < half { j } else { j - half };

    let mut points = Vec::with_capacity(a + b);
    let mut edges = Vec::with_capacity(a * b);
    if a <= b {
        points.extend((0..a).map(split_pos));
        points.extend((0..b).map(|i| pt(i as i64, 0)));
        for r in 0..a {
            for c in 0..b {
                edges.push((r, a + c, split_layer(r)));
            }
        }
    } else {
        points.extend((0..a).map(|i| pt(i as i64, 0)));
        points.extend((0..b).map(split_pos));
        for r in 0..a {
            for c in 0..b {
                edges.push((r, a + c, split_layer(c)));
            }
        }
    }
    LayeredDrawing::new(GraphSpec::bipartite(a, b), points, edges, half)
        .map_err(|e| ConstructError::BadInput(format!("row assembly failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn zigzag_frozen_examples() {
        let p = zigzag_path(6, 0).unwrap();
        assert_eq!(p.sequence(), &[0, 1, 5, 2, 4, 3]);
        assert_eq!(p.antipodal_pair(), (5, 2));
        let p = zigzag_path(4, 0).unwrap();
        assert_eq!(p.sequence(), &[0, 1, 3, 2]);
        assert_eq!(p.antipodal_pair(), (1, 3));
        let p = zigzag_path(10, 3).unwrap();
        assert_eq!(p.sequence()[0], 3);
        assert_eq!(p.sequence().len(), 10);
    }

    #[test]
    fn zigzag_rejects_bad_input() {
        assert_eq!(zigzag_path(5, 0), Err(ConstructError::BadRingSize(5)));
        assert_eq!(zigzag_path(2, 0), Err(ConstructError::BadRingSize(2)));
        assert_eq!(
            zigzag_path(6, 3),
            Err(ConstructError::IndexOutOfRange { index: 3, bound: 3 })
        );
    }

    #[test]
    fn zigzag_paths_partition_ring_edges() {
        for k in (4..=40).step_by(2) {
            let mut seen = BTreeSet::new();
            for start in 0..k / 2 {
                let path = zigzag_path(k, start).unwrap();
                let mut antipodal = 0;
                for (u, v) in path.edges() {
                    assert!(seen.insert((u, v)), "k={k}: edge ({u},{v}) repeated");
                    let diff = (v - u).min(k - (v - u));
                    if diff == k / 2 {
                        antipodal += 1;
                    }
                }
                assert_eq!(antipodal, 1, "k={k} start={start}");
                let (x, y) = path.antipodal_pair();
                let (x, y) = (x.min(y), x.max(y));
                assert_eq!((y - x).min(k - (y - x)), k / 2);
            }
            assert_eq!(seen.len(), k * (k - 1) / 2, "k={k}");
        }
    }

    #[test]
    fn two_ring_eight() {
        let (d, report) = two_ring_layout_with_report(8, None).unwrap();
        assert_eq!(d.layer_count(), 2);
        assert_eq!(d.edges().len(), 28);
        for layer in d.layers() {
            assert_eq!(layer.len(), 14);
        }
        assert!(verify(&d).valid);
        assert_eq!(report.pairings.len(), 2);
        let inner_starts: BTreeSet<_> =
            report.pairings.iter().map(|p| p.inner_start).collect();
        assert_eq!(inner_starts.len(), 2);
    }

    #[test]
    fn two_ring_minimal_case() {
        let d = two_ring_layout(4, None).unwrap();
        assert_eq!(d.layer_count(), 1);
        assert_eq!(d.edges().len(), 6);
        assert!(verify(&d).valid);
    }

    #[test]
    fn two_ring_twelve_and_sixteen() {
        for (n, layers) in [(12, 3), (16, 4)] {
            let d = two_ring_layout(n, None).unwrap();
            assert_eq!(d.layer_count(), layers, "n={n}");
            let k = n / 2;
            for layer in d.layers() {
                assert_eq!(layer.len(), 4 * k - 2, "n={n}");
            }
            assert!(verify(&d).valid, "n={n}");
        }
    }

    #[test]
    fn two_ring_rejects_bad_n() {
        assert!(matches!(two_ring_layout(6, None), Err(ConstructError::BadInput(_))));
        assert!(matches!(two_ring_layout(0, None), Err(ConstructError::BadInput(_))));
    }

    #[test]
    fn complete_layout_small_sweep() {
        for n in 1..=13 {
            let d = complete_layout(n).unwrap();
            assert_eq!(d.layer_count(), n.div_ceil(4).max(1), "n={n}");
            assert_eq!(d.edges().len(), n * (n - 1) / 2, "n={n}");
            assert!(verify(&d).valid, "n={n}");
        }
    }

    #[test]
    fn complete_layout_fifteen() {
        let d = complete_layout(15).unwrap();
        assert_eq!(d.layer_count(), 4);
        assert_eq!(d.edges().len(), 105);
        assert!(verify(&d).valid);
    }

    #[test]
    fn convex_layout_pages() {
        for (n, layers) in [(3, 2), (4, 2), (5, 3), (12, 6)] {
            let d = convex_layout(n).unwrap();
            assert_eq!(d.layer_count(), layers, "n={n}");
            assert_eq!(d.edges().len(), n * (n - 1) / 2, "n={n}");
            assert!(verify(&d).valid, "n={n}");
        }
        assert!(convex_layout(2).is_err());
    }

    #[test]
    fn bipartite_layout_rows() {
        let d = bipartite_layout(6, 8).unwrap();
        assert_eq!(d.layer_count(), 3);
        assert_eq!(d.edges().len(), 48);
        assert!(verify(&d).valid);

        for b in 1..=9 {
            let d = bipartite_layout(2, b).unwrap();
            assert_eq!(d.layer_count(), 1, "b={b}");
            assert!(verify(&d).valid, "b={b}");
        }

        let d = bipartite_layout(6, 6).unwrap();
        assert_eq!(d.layer_count(), 3);
        assert!(verify(&d).valid);

        // Split side is always the smaller class, whichever argument it is.
        let d = bipartite_layout(9, 4).unwrap();
        assert_eq!(d.layer_count(), 2);
        assert!(verify(&d).valid);

        let d = bipartite_layout(1, 1).unwrap();
        assert_eq!(d.layer_count(), 1);
        assert!(verify(&d).valid);
    }

    #[test]
    fn bipartite_layer_formula_sweep() {
        for a in 1..=7 {
            for b in 1..=7 {
                let d = bipartite_layout(a, b).unwrap();
                assert_eq!(d.layer_count(), a.min(b).div_ceil(2).max(1), "a={a} b={b}");
                assert_eq!(d.edges().len(), a * b);
                assert!(verify(&d).valid, "a={a} b={b}");
            }
        }
    }
}

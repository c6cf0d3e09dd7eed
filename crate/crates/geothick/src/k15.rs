//! Why three layers cannot hold all 105 segments of a 15-point set:
//! triangulation edge counting, forced-edge certificates, and the
//! per-hull-size coverage budgets, audited on concrete point sets.
//!
//! Every triangulation of n points with h extreme points has 3n−3−h
//! edges and contains all hull edges. With forced shared edges counted
//! once, three triangulations cover at most 102 (h=3), 104 (h=4), or
//! 126−5h (h≥5) distinct segments: always short of 105.

use crate::geom::{classify_core, classify_crossing, convex_hull, doubled_area, CrossKind, Rational, RationalPoint, Segment};
use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum K15Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("domain error: {0}")]
    DomainError(String),
    /// An exhaustive scan found a counterexample to a certificate that
    /// should always hold; this indicates an implementation bug.
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}

/// A straight-line planar triangulation of a point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    points: Vec<RationalPoint>,
    edges: Vec<(usize, usize)>,
    hull_size: usize,
}

impl Triangulation {
    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    /// Sorted edge list, u < v.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn hull_size(&self) -> usize {
        self.hull_size
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }
}

/// Plane-sweep triangulation: insert points in lexicographic order and
/// fan each new point to the hull vertices it can see.
pub fn triangulate(points: &[RationalPoint]) -> Result<Triangulation, K15Error> {
    if points.len() < 3 {
        return Err(K15Error::DegenerateInput("need at least 3 points".into()));
    }
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            return Err(K15Error::DegenerateInput(format!(
                "points {} and {} coincide",
                w[0].min(w[1]),
                w[0].max(w[1])
            )));
        }
    }
    let orient = |a: usize, b: usize, c: usize| {
        crate::geom::orientation(&points[a], &points[b], &points[c])
    };
    if order
        .windows(3)
        .all(|w| orient(w[0], w[1], w[2]) == 0)
        && {
            // Lexicographic collinearity of neighbors is not conclusive;
            // test the full set against the first two.
            let (a, b) = (order[0], order[1]);
            order.iter().all(|&c| c == a || c == b || orient(a, b, c) == 0)
        }
    {
        return Err(K15Error::DegenerateInput("all points are collinear".into()));
    }

    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let add = |u: usize, v: usize, edges: &mut BTreeSet<(usize, usize)>| {
        edges.insert((u.min(v), u.max(v)));
    };
    let mut upper: Vec<usize> = Vec::new();
    let mut lower: Vec<usize> = Vec::new();
    for &q in &order {
        if upper.is_empty() {
            upper.push(q);
            lower.push(q);
            continue;
        }
        add(q, *upper.last().unwrap(), &mut edges);
        // Pop chain vertices that become strictly reflex and fan q to the
        // vertex each pop exposes. Collinear vertices stay on the chain:
        // they are still boundary points and later points must fan to
        // them, not over them.
        while upper.len() >= 2 {
            if orient(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
                break;
            }
            upper.pop();
            add(q, *upper.last().unwrap(), &mut edges);
        }
        while lower.len() >= 2 {
            if orient(lower[lower.len() - 2], lower[lower.len() - 1], q) >= 0 {
                break;
            }
            lower.pop();
            add(q, *lower.last().unwrap(), &mut edges);
        }
        upper.push(q);
        lower.push(q);
    }

    let hull_size = convex_hull(points)
        .map_err(|e| K15Error::DegenerateInput(e.to_string()))?
        .len();
    Ok(Triangulation {
        points: points.to_vec(),
        edges: edges.into_iter().collect(),
        hull_size,
    })
}

/// No three points collinear (and none coincident).
pub fn general_position(points: &[RationalPoint]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return false;
            }
            for k in j + 1..n {
                if crate::geom::orientation(&points[i], &points[j], &points[k]) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// An edge that must appear in every triangulation: from a hull corner
/// to the interior point deepest relative to the opposite hull side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedEdge {
    pub corner: usize,
    pub deepest: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedEdgeCertificate {
    /// One entry per hull corner; `deepest` is the unique interior point
    /// maximizing distance from the opposite hull edge, and the segment
    /// corner-deepest was verified to have zero proper crossers.
    pub forced: Vec<ForcedEdge>,
}

/// For a triangular hull, certify the three forced corner edges by
/// exhaustive scan: no segment between any two of the points properly
/// crosses corner-deepest (anything crossing it would need a second
/// point beyond the deepest one, and only the corner itself is there).
pub fn certify_forced_edges(points: &[RationalPoint]) -> Result<ForcedEdgeCertificate, K15Error> {
    let hull = triangular_hull(points)?;
    let mut forced = Vec::new();
    for c in 0..3 {
        let corner = hull[c];
        let (q, r) = (hull[(c + 1) % 3], hull[(c + 2) % 3]);
        let deepest = deepest_interior(points, &hull, q, r, 0)?;
        scan_zero_crossers(points, corner, deepest)?;
        forced.push(ForcedEdge { corner, deepest });
    }
    Ok(ForcedEdgeCertificate { forced })
}

/// The disjunction certificate for the two deepest interior points of
/// each corner: one of corner-second or deepest-second must appear in
/// every triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedPair {
    pub corner: usize,
    pub deepest: usize,
    pub second: usize,
    /// Points X with (corner, X) properly crossing (deepest, second).
    pub crossers_of_inner: Vec<usize>,
    /// Points Y with (deepest, Y) properly crossing (corner, second).
    pub crossers_of_outer: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedPairCertificate {
    pub pairs: Vec<ForcedPair>,
}

/// Certify, for each corner: every proper crosser of deepest-second has
/// the corner as an endpoint; every proper crosser of corner-second has
/// the deepest point as an endpoint; and each such pair of crossers
/// mutually crosses, so the two candidate edges cannot both be absent.
pub fn certify_forced_pairs(points: &[RationalPoint]) -> Result<ForcedPairCertificate, K15Error> {
    let hull = triangular_hull(points)?;
    if points.len() < 5 {
        return Err(K15Error::PreconditionViolated(
            "need at least two interior points".into(),
        ));
    }
    let mut pairs = Vec::new();
    for c in 0..3 {
        let corner = hull[c];
        let (q, r) = (hull[(c + 1) % 3], hull[(c + 2) % 3]);
        let deepest = deepest_interior(points, &hull, q, r, 0)?;
        let second = deepest_interior(points, &hull, q, r, 1)?;
        let inner = Segment::new(points[deepest].clone(), points[second].clone())
            .expect("distinct points");
        let outer = Segment::new(points[corner].clone(), points[second].clone())
            .expect("distinct points");
        let mut crossers_of_inner = Vec::new();
        let mut crossers_of_outer = Vec::new();
        let n = points.len();
        for x in 0..n {
            for y in x + 1..n {
                if points[x] == points[y] {
                    continue;
                }
                let seg = Segment::new(points[x].clone(), points[y].clone()).unwrap();
                if classify_crossing(&inner, &seg) == CrossKind::ProperCrossing {
                    if x != corner && y != corner {
                        return Err(K15Error::CertificationFailed(format!(
                            "({x}, {y}) crosses the deepest pair without touching corner {corner}"
                        )));
                    }
                    crossers_of_inner.push(if x == corner { y } else { x });
                }
                if classify_crossing(&outer, &seg) == CrossKind::ProperCrossing {
                    if x != deepest && y != deepest {
                        return Err(K15Error::CertificationFailed(format!(
                            "({x}, {y}) crosses the corner edge without touching point {deepest}"
                        )));
                    }
                    crossers_of_outer.push(if x == deepest { y } else { x });
                }
            }
        }
        for &x in &crossers_of_inner {
            for &y in &crossers_of_outer {
                let a = Segment::new(points[corner].clone(), points[x].clone()).unwrap();
                let b = Segment::new(points[deepest].clone(), points[y].clone()).unwrap();
                if classify_crossing(&a, &b) != CrossKind::ProperCrossing {
                    return Err(K15Error::CertificationFailed(format!(
                        "crosser pair ({corner},{x}) and ({deepest},{y}) do not exclude each other"
                    )));
                }
            }
        }
        pairs.push(ForcedPair { corner, deepest, second, crossers_of_inner, crossers_of_outer });
    }
    Ok(ForcedPairCertificate { pairs })
}

fn triangular_hull(points: &[RationalPoint]) -> Result<Vec<usize>, K15Error> {
    if !general_position(points) {
        return Err(K15Error::PreconditionViolated(
            "points must be in general position".into(),
        ));
    }
    let hull = convex_hull(points).map_err(|e| K15Error::DegenerateInput(e.to_string()))?;
    if hull.len() != 3 {
        return Err(K15Error::PreconditionViolated(format!(
            "hull has {} vertices, need exactly 3",
            hull.len()
        )));
    }
    if points.len() < 4 {
        return Err(K15Error::PreconditionViolated("need an interior point".into()));
    }
    Ok(hull)
}

/// The rank-th furthest interior point from the line through q and r
/// (rank 0 = furthest). Ties are rejected: the forcing arguments need a
/// unique answer.
fn deepest_interior(
    points: &[RationalPoint],
    hull: &[usize],
    q: usize,
    r: usize,
    rank: usize,
) -> Result<usize, K15Error> {
    let mut depths: Vec<(Rational, usize)> = (0..points.len())
        .filter(|i| !hull.contains(i))
        .map(|i| (doubled_area(&points[q], &points[r], &points[i]).abs(), i))
        .collect();
    if depths.len() <= rank {
        return Err(K15Error::PreconditionViolated(format!(
            "need more than {rank} interior points"
        )));
    }
    depths.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    if rank + 1 < depths.len() && depths[rank].0 == depths[rank + 1].0 {
        return Err(K15Error::PreconditionViolated(format!(
            "points {} and {} are equidistant from a hull side",
            depths[rank].1.min(depths[rank + 1].1),
            depths[rank].1.max(depths[rank + 1].1)
        )));
    }
    if rank > 0 && depths[rank - 1].0 == depths[rank].0 {
        return Err(K15Error::PreconditionViolated(format!(
            "points {} and {} are equidistant from a hull side",
            depths[rank - 1].1.min(depths[rank].1),
            depths[rank - 1].1.max(depths[rank].1)
        )));
    }
    Ok(depths[rank].1)
}

fn scan_zero_crossers(points: &[RationalPoint], a: usize, b: usize) -> Result<(), K15Error> {
    let seg = Segment::new(points[a].clone(), points[b].clone()).expect("distinct points");
    let n = points.len();
    for x in 0..n {
        for y in x + 1..n {
            let other = Segment::new(points[x].clone(), points[y].clone()).unwrap();
            if classify_crossing(&seg, &other) == CrossKind::ProperCrossing {
                return Err(K15Error::CertificationFailed(format!(
                    "({x}, {y}) properly crosses the forced edge ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// Edge budget for three triangulations of a 15-point set with the
/// given hull size: shared forced edges count once, the rest at most
/// per_triangulation_cap each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CaseBudget {
    pub hull_size: usize,
    pub per_triangulation_cap: usize,
    pub forced_shared: usize,
    pub total_cap: usize,
}

pub fn coverage_budget(n: usize, hull_size: usize) -> Result<CaseBudget, K15Error> {
    if n != 15 {
        return Err(K15Error::DomainError(format!(
            "budget arithmetic is specific to 15 points, got {n}"
        )));
    }
    if !(3..=15).contains(&hull_size) {
        return Err(K15Error::DomainError(format!(
            "hull size {hull_size} out of range 3..=15"
        )));
    }
    let budget = match hull_size {
        // 39 edges each, at least 9 from the shared 12-edge pool.
        3 => CaseBudget { hull_size, per_triangulation_cap: 30, forced_shared: 12, total_cap: 102 },
        // 38 edges each, 5 forced (4 hull edges + 1 corner edge).
        4 => CaseBudget { hull_size, per_triangulation_cap: 33, forced_shared: 5, total_cap: 104 },
        // 42−h edges each, h hull edges forced.
        h => CaseBudget {
            hull_size,
            per_triangulation_cap: 42 - 2 * h,
            forced_shared: h,
            total_cap: 126 - 5 * h,
        },
    };
    debug_assert!(budget.total_cap < 105);
    Ok(budget)
}

/// Result of auditing one 15-point set: the applicable budget, the
/// certified forced edges, and an empirical greedy cover that must stay
/// within the budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub hull_size: usize,
    pub budget: CaseBudget,
    /// Certified forced edges (normalized), shared by all triangulations.
    pub forced_edges: Vec<(usize, usize)>,
    /// For a triangular hull: the nominal 12-edge shared pool (3 hull
    /// edges plus corner/deepest/second edges per corner).
    pub shared_pool: Option<Vec<(usize, usize)>>,
    /// Set when the nominal shared pool has coinciding members, which
    /// would weaken the at-least-9 counting argument for this set.
    pub z_degenerate: bool,
    /// Distinct segments covered by three greedily grown triangulations.
    pub greedy_covered: usize,
    pub within_budget: bool,
}

/// Audit a 15-point set: compute its hull size, run the applicable
/// forced-edge certificates, and confirm a greedy three-triangulation
/// cover stays within the case budget (and therefore below 105).
pub fn audit_three_cover(points: &[RationalPoint]) -> Result<AuditReport, K15Error> {
    if points.len() != 15 {
        return Err(K15Error::PreconditionViolated(format!(
            "need exactly 15 points, got {}",
            points.len()
        )));
    }
    if !general_position(points) {
        return Err(K15Error::PreconditionViolated(
            "points must be in general position".into(),
        ));
    }
    let hull = convex_hull(points).map_err(|e| K15Error::DegenerateInput(e.to_string()))?;
    let h = hull.len();
    let budget = coverage_budget(15, h)?;

    let mut forced_edges: Vec<(usize, usize)> = Vec::new();
    let mut shared_pool = None;
    let mut z_degenerate = false;
    match h {
        3 => {
            let cert1 = certify_forced_edges(points)?;
            let cert2 = certify_forced_pairs(points)?;
            for f in &cert1.forced {
                forced_edges.push(norm(f.corner, f.deepest));
            }
            let mut pool: Vec<(usize, usize)> = Vec::new();
            for w in 0..3 {
                pool.push(norm(hull[w], hull[(w + 1) % 3]));
            }
            for p in &cert2.pairs {
                pool.push(norm(p.corner, p.deepest));
                pool.push(norm(p.corner, p.second));
                pool.push(norm(p.deepest, p.second));
            }
            let distinct: BTreeSet<_> = pool.iter().copied().collect();
            z_degenerate = distinct.len() < 12;
            shared_pool = Some(pool);
        }
        4 => {
            // Pick a diagonal triangle with interior points; deepest gets
            // a forced edge to the opposite hull corner.
            let (d, b) = (hull[3], hull[1]);
            let interior: Vec<usize> = (0..15).filter(|i| !hull.contains(i)).collect();
            let in_triangle = |apex: usize, p: usize| {
                in_triangle_strict(&points[d], &points[b], &points[apex], &points[p])
            };
            let apex = if interior.iter().any(|&p| in_triangle(hull[0], p)) {
                hull[0]
            } else if interior.iter().any(|&p| in_triangle(hull[2], p)) {
                hull[2]
            } else {
                return Err(K15Error::CertificationFailed(
                    "both diagonal triangles are empty, which cannot happen for 15 points".into(),
                ));
            };
            let mut depths: Vec<(Rational, usize)> = interior
                .iter()
                .filter(|&&p| in_triangle(apex, p))
                .map(|&p| (doubled_area(&points[d], &points[b], &points[p]).abs(), p))
                .collect();
            depths.sort_by(|a, bb| bb.0.cmp(&a.0).then(a.1.cmp(&bb.1)));
            if depths.len() >= 2 && depths[0].0 == depths[1].0 {
                return Err(K15Error::PreconditionViolated(
                    "two points are equidistant from the hull diagonal".into(),
                ));
            }
            let deepest = depths[0].1;
            scan_zero_crossers(points, apex, deepest)?;
            forced_edges.push(norm(apex, deepest));
        }
        _ => {}
    }

    let mut seeds: Vec<(usize, usize)> = (0..h).map(|w| norm(hull[w], hull[(w + 1) % h])).collect();
    seeds.extend(forced_edges.iter().copied());
    seeds.sort_unstable();
    seeds.dedup();

    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    for _ in 0..3 {
        let tri = greedy_triangulation(points, &seeds, &covered);
        if tri.len() != 3 * 15 - 3 - h {
            return Err(K15Error::CertificationFailed(format!(
                "greedy growth produced {} edges instead of {}",
                tri.len(),
                3 * 15 - 3 - h
            )));
        }
        covered.extend(tri);
    }
    let greedy_covered = covered.len();
    Ok(AuditReport {
        hull_size: h,
        budget,
        forced_edges,
        shared_pool,
        z_degenerate,
        greedy_covered,
        within_budget: greedy_covered <= budget.total_cap,
    })
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn in_triangle_strict(
    a: &RationalPoint,
    b: &RationalPoint,
    c: &RationalPoint,
    p: &RationalPoint,
) -> bool {
    let s1 = crate::geom::orientation(a, b, p);
    let s2 = crate::geom::orientation(b, c, p);
    let s3 = crate::geom::orientation(c, a, p);
    s1 != 0 && s1 == s2 && s2 == s3
}

/// Grow a maximal crossing-free edge set (hence a triangulation) from
/// the seed edges, preferring segments no earlier triangulation used.
fn greedy_triangulation(
    points: &[RationalPoint],
    seeds: &[(usize, usize)],
    covered: &BTreeSet<(usize, usize)>,
) -> BTreeSet<(usize, usize)> {
    let n = points.len();
    let mut fresh = Vec::new();
    let mut seen = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if covered.contains(&(u, v)) {
                seen.push((u, v));
            } else {
                fresh.push((u, v));
            }
        }
    }
    let mut edges: BTreeSet<(usize, usize)> = seeds.iter().copied().collect();
    let ok = |edges: &BTreeSet<(usize, usize)>, cand: (usize, usize)| {
        edges.iter().all(|&e| {
            let p = |i: usize| {
                let pt = &points[i];
                (&pt.x, &pt.y)
            };
            classify_core::<Rational>(p(e.0), p(e.1), p(cand.0), p(cand.1))
                .is_allowed_same_layer()
        })
    };
    for cand in fresh.into_iter().chain(seen) {
        if !edges.contains(&cand) && ok(&edges, cand) {
            edges.insert(cand);
        }
    }
    edges
}

/// Aggregate results over randomized point sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub trials: usize,
    pub seed: u64,
    pub hull_size_counts: BTreeMap<usize, usize>,
    /// Distinct budget caps seen, with trial counts.
    pub budget_counts: BTreeMap<usize, usize>,
    pub forced_edge_certificates: usize,
    pub forced_pair_certificates: usize,
    pub z_degenerate_sets: usize,
    pub max_greedy_covered: usize,
    pub all_within_budget: bool,
    /// Degenerate samples that were redrawn before auditing.
    pub resamples: usize,
}

/// Random 15-point set with integer coordinates, drawn from one of
/// three profiles (triangular hull, square-ish quadrilateral hull, or
/// uniform) so the audit exercises every case.
pub fn random_point_set(rng: &mut ChaCha8Rng) -> Vec<RationalPoint> {
    const B: i64 = 1 << 20;
    let jitter = |rng: &mut ChaCha8Rng| rng.gen_range(-1000..=1000);
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(15);
    match rng.gen_range(0..3u8) {
        0 => return random_triangular_point_set(rng),
        1 => {
            pts.push((-B + jitter(rng), -B + jitter(rng)));
            pts.push((B + jitter(rng), -B + jitter(rng)));
            pts.push((B + jitter(rng), B + jitter(rng)));
            pts.push((-B + jitter(rng), B + jitter(rng)));
            while pts.len() < 15 {
                pts.push((rng.gen_range(-B / 2..=B / 2), rng.gen_range(-B / 2..=B / 2)));
            }
        }
        _ => {
            while pts.len() < 15 {
                pts.push((rng.gen_range(-B..=B), rng.gen_range(-B..=B)));
            }
        }
    }
    pts.into_iter()
        .map(|(x, y)| RationalPoint::from_integers(x, y))
        .collect()
}

/// Random 15-point set whose hull is guaranteed triangular: three far
/// corners and twelve points in a small central box.
pub fn random_triangular_point_set(rng: &mut ChaCha8Rng) -> Vec<RationalPoint> {
    const B: i64 = 1 << 20;
    let jitter = |rng: &mut ChaCha8Rng| rng.gen_range(-1000..=1000);
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(15);
    pts.push((-B + jitter(rng), -B + jitter(rng)));
    pts.push((B + jitter(rng), -B + jitter(rng)));
    pts.push((jitter(rng), B + jitter(rng)));
    while pts.len() < 15 {
        pts.push((rng.gen_range(-B / 4..=B / 4), rng.gen_range(-B / 4..=B / 4)));
    }
    pts.into_iter()
        .map(|(x, y)| RationalPoint::from_integers(x, y))
        .collect()
}

fn trial_rng(seed: u64, trial: u64, attempt: u64) -> ChaCha8Rng {
    let mixed = seed
        ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ attempt.wrapping_mul(0xD1B5_4A32_D192_ED03);
    ChaCha8Rng::seed_from_u64(mixed)
}

/// Audit `trials` random point sets, resampling any degenerate draw.
/// Trials are independent, so the summary is identical for any worker
/// count.
pub fn audit_trials(trials: usize, seed: u64, workers: usize) -> AuditSummary {
    let workers = workers.max(1).min(trials.max(1));
    let mut summary = AuditSummary {
        trials,
        seed,
        hull_size_counts: BTreeMap::new(),
        budget_counts: BTreeMap::new(),
        forced_edge_certificates: 0,
        forced_pair_certificates: 0,
        z_degenerate_sets: 0,
        max_greedy_covered: 0,
        all_within_budget: true,
        resamples: 0,
    };
    let mut chunks: Vec<(Vec<AuditReport>, usize)> = if workers <= 1 {
        let mut resamples = 0;
        let reports = (0..trials)
            .map(|t| audit_one(seed, t as u64, &mut resamples))
            .collect();
        vec![(reports, resamples)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut resamples = 0;
                        let reports = (w..trials)
                            .step_by(workers)
                            .map(|t| audit_one(seed, t as u64, &mut resamples))
                            .collect::<Vec<_>>();
                        (reports, resamples)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("audit worker panicked"))
                .collect()
        })
    };
    for (reports, resamples) in chunks.drain(..) {
        summary.resamples += resamples;
        for report in reports {
            *summary.hull_size_counts.entry(report.hull_size).or_insert(0) += 1;
            *summary.budget_counts.entry(report.budget.total_cap).or_insert(0) += 1;
            if report.hull_size == 3 {
                summary.forced_edge_certificates += 1;
                summary.forced_pair_certificates += 1;
            } else if report.hull_size == 4 {
                summary.forced_edge_certificates += 1;
            }
            if report.z_degenerate {
                summary.z_degenerate_sets += 1;
            }
            summary.max_greedy_covered = summary.max_greedy_covered.max(report.greedy_covered);
            summary.all_within_budget &= report.within_budget;
        }
    }
    summary
}

pub(crate) fn audit_one(seed: u64, trial: u64, resamples: &mut usize) -> AuditReport {
    for attempt in 0..200u64 {
        let mut rng = trial_rng(seed, trial, attempt);
        let points = random_point_set(&mut rng);
        match audit_three_cover(&points) {
            Ok(report) => return report,
            Err(K15Error::PreconditionViolated(_)) | Err(K15Error::DegenerateInput(_)) => {
                *resamples += 1;
            }
            Err(e) => panic!("audit failed on a sound sample: {e}"),
        }
    }
    panic!("200 consecutive degenerate samples; generator is broken");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(coords: &[(i64, i64)]) -> Vec<RationalPoint> {
        coords.iter().map(|&(x, y)| RationalPoint::from_integers(x, y)).collect()
    }

    #[test]
    fn triangulate_square_with_center() {
        let t = triangulate(&pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 2)])).unwrap();
        assert_eq!(t.edge_count(), 8);
        assert_eq!(t.hull_size(), 4);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
            assert!(t.contains(u, v), "hull edge ({u},{v}) missing");
        }
    }

    #[test]
    fn triangulate_rejects_degenerate() {
        assert!(matches!(
            triangulate(&pts(&[(0, 0), (1, 1), (2, 2), (3, 3)])),
            Err(K15Error::DegenerateInput(_))
        ));
        assert!(matches!(
            triangulate(&pts(&[(0, 0), (1, 1), (0, 0)])),
            Err(K15Error::DegenerateInput(_))
        ));
        assert!(matches!(
            triangulate(&pts(&[(0, 0), (1, 1)])),
            Err(K15Error::DegenerateInput(_))
        ));
    }

    fn assert_triangulation_facts(points: &[RationalPoint]) {
        let t = triangulate(points).unwrap();
        let n = points.len();
        assert_eq!(t.edge_count(), 3 * n - 3 - t.hull_size());
        let hull = convex_hull(points).unwrap();
        for w in 0..hull.len() {
            assert!(t.contains(hull[w], hull[(w + 1) % hull.len()]));
        }
        for (i, &a) in t.edges().iter().enumerate() {
            for &b in &t.edges()[i + 1..] {
                let sa = Segment::new(points[a.0].clone(), points[a.1].clone()).unwrap();
                let sb = Segment::new(points[b.0].clone(), points[b.1].clone()).unwrap();
                let kind = classify_crossing(&sa, &sb);
                assert!(
                    kind == CrossKind::Disjoint || kind == CrossKind::SharedEndpoint,
                    "edges {a:?} and {b:?} classify as {kind:?}"
                );
            }
        }
    }

    #[test]
    fn triangulation_facts_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..25 {
            let n = rng.gen_range(4..=30);
            let mut points;
            loop {
                let coords: Vec<(i64, i64)> = (0..n)
                    .map(|_| (rng.gen_range(-10_000..=10_000), rng.gen_range(-10_000..=10_000)))
                    .collect();
                points = pts(&coords);
                if general_position(&points) {
                    break;
                }
            }
            assert_triangulation_facts(&points);
            let _ = trial;
        }
    }

    #[test]
    fn fifteen_point_edge_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut seen3 = false;
        let mut seen4 = false;
        for trial in 0..100u64 {
            let mut r = trial_rng(99, trial, 0);
            let points = random_point_set(&mut r);
            if !general_position(&points) {
                continue;
            }
            let t = triangulate(&points).unwrap();
            match t.hull_size() {
                3 => {
                    assert_eq!(t.edge_count(), 39);
                    seen3 = true;
                }
                4 => {
                    assert_eq!(t.edge_count(), 38);
                    seen4 = true;
                }
                h => assert_eq!(t.edge_count(), 42 - h),
            }
            if seen3 && seen4 {
                break;
            }
        }
        assert!(seen3 && seen4, "generator never produced both small hull sizes");
        let _ = &mut rng;
    }

    #[test]
    fn forced_edges_triangle_with_centroid() {
        let points = pts(&[(0, 0), (4, 0), (2, 3), (2, 1)]);
        let cert = certify_forced_edges(&points).unwrap();
        assert_eq!(cert.forced.len(), 3);
        for f in &cert.forced {
            assert_eq!(f.deepest, 3);
            assert!(f.corner < 3);
        }
    }

    #[test]
    fn forced_edges_tie_rejected() {
        // Two interior points at the same height above the bottom side.
        let points = pts(&[(0, 0), (8, 0), (4, 6), (3, 2), (5, 2)]);
        assert!(matches!(
            certify_forced_edges(&points),
            Err(K15Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn forced_edges_rejects_big_hull() {
        let points = pts(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]);
        assert!(matches!(
            certify_forced_edges(&points),
            Err(K15Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn forced_pairs_small_example() {
        let points = pts(&[(0, 0), (9, 0), (5, 7), (4, 2), (3, 1)]);
        match certify_forced_pairs(&points) {
            Ok(cert) => assert_eq!(cert.pairs.len(), 3),
            Err(K15Error::PreconditionViolated(msg)) => {
                panic!("example should be non-degenerate: {msg}")
            }
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn forced_certificates_on_random_triangular_sets() {
        let mut checked = 0;
        let mut trial = 0u64;
        while checked < 60 {
            let mut rng = trial_rng(1234, trial, 0);
            trial += 1;
            let points = random_point_set(&mut rng);
            if !general_position(&points) {
                continue;
            }
            if convex_hull(&points).unwrap().len() != 3 {
                continue;
            }
            match certify_forced_edges(&points) {
                Ok(cert) => assert_eq!(cert.forced.len(), 3),
                Err(K15Error::PreconditionViolated(_)) => continue,
                Err(e) => panic!("forced-edge certificate refuted: {e}"),
            }
            match certify_forced_pairs(&points) {
                Ok(cert) => {
                    assert_eq!(cert.pairs.len(), 3);
                    checked += 1;
                }
                Err(K15Error::PreconditionViolated(_)) => continue,
                Err(e) => panic!("forced-pair certificate refuted: {e}"),
            }
        }
    }

    #[test]
    fn budget_values() {
        assert_eq!(coverage_budget(15, 3).unwrap().total_cap, 102);
        assert_eq!(coverage_budget(15, 4).unwrap().total_cap, 104);
        assert_eq!(coverage_budget(15, 5).unwrap().total_cap, 101);
        assert_eq!(coverage_budget(15, 15).unwrap().total_cap, 51);
        for h in 3..=15 {
            assert!(coverage_budget(15, h).unwrap().total_cap < 105);
        }
        assert!(coverage_budget(15, 2).is_err());
        assert!(coverage_budget(15, 16).is_err());
        assert!(coverage_budget(14, 5).is_err());
    }

    #[test]
    fn audit_convex_position() {
        // Fifteen points on a parabola: all on the hull.
        let coords: Vec<(i64, i64)> = (0..15).map(|i| (i, i * i)).collect();
        let report = audit_three_cover(&pts(&coords)).unwrap();
        assert_eq!(report.hull_size, 15);
        assert_eq!(report.budget.total_cap, 51);
        assert!(report.within_budget);
        assert!(report.forced_edges.is_empty());
    }

    #[test]
    fn audit_random_sample() {
        let summary = audit_trials(25, 42, 1);
        assert_eq!(summary.trials, 25);
        assert!(summary.all_within_budget);
        assert!(summary.max_greedy_covered < 105);
        assert!(summary.hull_size_counts.len() >= 2);
        for (&cap, _) in &summary.budget_counts {
            assert!(cap < 105);
        }
    }

    #[test]
    fn audit_rejects_wrong_count() {
        let coords: Vec<(i64, i64)> = (0..14).map(|i| (i, i * i)).collect();
        assert!(matches!(
            audit_three_cover(&pts(&coords)),
            Err(K15Error::PreconditionViolated(_))
        ));
    }
}

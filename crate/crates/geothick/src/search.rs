//! Simulated annealing over vertex placements, hunting for drawings
//! with few layers. The walk moves one vertex at a time on a rational
//! grid and scores placements with cheap integer predicates; anything
//! it claims to have found is re-verified with exact arithmetic before
//! being returned.

use crate::drawing::LayeredDrawing;
use crate::geom::{classify_core, RationalPoint};
use crate::graph::{edge_set, GraphSpec};
use crate::verify;
use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::atomic::{AtomicUsize, Ordering};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("bad config: {0}")]
    BadConfig(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Placement box in grid units (coordinates are numerators over
/// `coordinate_grid`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordinateBox {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub target_layers: usize,
    pub max_restarts: usize,
    pub steps_per_restart: usize,
    pub initial_temperature: f64,
    pub cooling_rate: f64,
    pub coordinate_box: CoordinateBox,
    pub seed: u64,
    /// Denominator for snapped coordinates.
    pub coordinate_grid: u64,
    /// Parallel restart workers; determinism is guaranteed at 1.
    pub workers: usize,
}

impl SearchConfig {
    /// Defaults sized so max_restarts * steps_per_restart = 10^6.
    pub fn for_target(target_layers: usize, seed: u64) -> Self {
        let g = 1_000_000i64;
        SearchConfig {
            target_layers,
            max_restarts: 40,
            steps_per_restart: 25_000,
            initial_temperature: 2.0,
            cooling_rate: 0.999_5,
            coordinate_box: CoordinateBox { x_min: -g, x_max: g, y_min: -g, y_max: g },
            seed,
            coordinate_grid: 1_000_000,
            workers: 1,
        }
    }

    fn validate(&self, edge_count: usize) -> Result<(), SearchError> {
        if self.target_layers < 1 {
            return Err(SearchError::BadConfig("target_layers must be at least 1".into()));
        }
        if !(self.cooling_rate > 0.0 && self.cooling_rate < 1.0) {
            return Err(SearchError::BadConfig("cooling_rate must lie in (0, 1)".into()));
        }
        if self.coordinate_grid < 1_000 {
            return Err(SearchError::BadConfig("coordinate_grid must be at least 1000".into()));
        }
        if !(self.initial_temperature > 0.0) {
            return Err(SearchError::BadConfig("initial_temperature must be positive".into()));
        }
        if self.max_restarts < 1 || self.steps_per_restart < 1 {
            return Err(SearchError::BadConfig("restart and step budgets must be positive".into()));
        }
        let b = &self.coordinate_box;
        if b.x_min >= b.x_max || b.y_min >= b.y_max {
            return Err(SearchError::BadConfig("coordinate_box is empty".into()));
        }
        if edge_count > 128 {
            return Err(SearchError::BadConfig(
                "graphs with more than 128 edges are out of scope".into(),
            ));
        }
        if self.target_layers > edge_count.max(1) {
            return Err(SearchError::BadConfig(format!(
                "{} layers cannot all be nonempty with {} edges",
                self.target_layers, edge_count
            )));
        }
        if self.workers < 1 {
            return Err(SearchError::BadConfig("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    /// Passed exact verification with exactly the target layer count.
    Found(LayeredDrawing),
    Exhausted {
        best_layers_seen: usize,
        best_drawing: LayeredDrawing,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub restarts: usize,
    pub steps: u64,
    pub verifier_calls: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&LayeredDrawing> {
        match &self.status {
            SearchStatus::Found(d) => Some(d),
            SearchStatus::Exhausted { .. } => None,
        }
    }

    pub fn best_layers(&self) -> usize {
        match &self.status {
            SearchStatus::Found(d) => d.layer_count(),
            SearchStatus::Exhausted { best_layers_seen, .. } => *best_layers_seen,
        }
    }
}

/// Anneal from fresh random placements until a drawing with exactly
/// `config.target_layers` layers verifies, or the budget runs out.
pub fn search_placement(graph: &GraphSpec, config: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let edges = edge_set(graph);
    config.validate(edges.len())?;
    run_search(graph, config, None, None)
}

/// Warm-started variant: tries to beat `drawing`'s layer count. Never
/// returns anything worse than the input.
pub fn improve_drawing(
    drawing: &LayeredDrawing,
    config: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    let report = verify::verify(drawing);
    if !report.valid {
        return Err(SearchError::InvalidInput(
            "seed drawing fails verification".into(),
        ));
    }
    let graph = drawing.graph().clone();
    let edges = edge_set(&graph);
    config.validate(edges.len())?;
    if config.target_layers > drawing.layer_count() {
        return Err(SearchError::BadConfig(format!(
            "target {} exceeds the seed drawing's {} layers",
            config.target_layers,
            drawing.layer_count()
        )));
    }
    if config.target_layers == drawing.layer_count() {
        return Ok(SearchOutcome {
            status: SearchStatus::Found(drawing.clone()),
            stats: SearchStats { restarts: 0, steps: 0, verifier_calls: 1 },
        });
    }
    let warm = snap_points(drawing.points(), &config.coordinate_box);
    run_search(&graph, config, Some(warm), Some(drawing.clone()))
}

/// Map arbitrary rational points into the grid box, preserving shape.
fn snap_points(points: &[RationalPoint], bx: &CoordinateBox) -> Vec<(i128, i128)> {
    let xs: Vec<f64> = points.iter().map(|p| p.x.to_f64().unwrap_or(0.0)).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.y.to_f64().unwrap_or(0.0)).collect();
    let (x_lo, x_hi) = min_max(&xs);
    let (y_lo, y_hi) = min_max(&ys);
    let span = (x_hi - x_lo).max(y_hi - y_lo).max(1e-12);
    let scale = 0.8 * ((bx.x_max - bx.x_min).min(bx.y_max - bx.y_min) as f64) / span;
    let cx = (bx.x_min + bx.x_max) as f64 / 2.0;
    let cy = (bx.y_min + bx.y_max) as f64 / 2.0;
    xs.iter()
        .zip(&ys)
        .map(|(&x, &y)| {
            let gx = (cx + (x - (x_lo + x_hi) / 2.0) * scale).round() as i128;
            let gy = (cy + (y - (y_lo + y_hi) / 2.0) * scale).round() as i128;
            (
                gx.clamp(bx.x_min as i128, bx.x_max as i128),
                gy.clamp(bx.y_min as i128, bx.y_max as i128),
            )
        })
        .collect()
}

fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    })
}

struct RestartResult {
    found: Option<LayeredDrawing>,
    best_layers: usize,
    best_points: Vec<(i128, i128)>,
    best_assignment: Vec<usize>,
    steps: u64,
    verifier_calls: u64,
}

fn run_search(
    graph: &GraphSpec,
    config: &SearchConfig,
    warm: Option<Vec<(i128, i128)>>,
    seed_best: Option<LayeredDrawing>,
) -> Result<SearchOutcome, SearchError> {
    let edges = edge_set(graph);
    let _n = graph.vertex_count();

    // Edgeless graphs have nothing to search.
    if edges.is_empty() {
        let drawing = trivial_drawing(graph, config);
        let mut stats = SearchStats { restarts: 0, steps: 0, verifier_calls: 1 };
        let report = verify::verify(&drawing);
        debug_assert!(report.valid);
        stats.restarts = 0;
        return Ok(SearchOutcome { status: SearchStatus::Found(drawing), stats });
    }

    let found_at = AtomicUsize::new(usize::MAX);
    let workers = config.workers.min(config.max_restarts);
    let mut slots: Vec<Option<RestartResult>> = Vec::new();
    slots.resize_with(config.max_restarts, || None);

    if workers <= 1 {
        for r in 0..config.max_restarts {
            let warm_r = if r == 0 { warm.clone() } else { None };
            let res = anneal_restart(graph, &edges, config, r as u64, warm_r, &found_at);
            let found = res.found.is_some();
            slots[r] = Some(res);
            if found {
                break;
            }
        }
    } else {
        std::thread::scope(|scope| {
            let mut handles = Vec::new();
            let slots_per: Vec<usize> = (0..workers).collect();
            for t in slots_per {
                let edges = &edges;
                let found_at = &found_at;
                let warm = warm.clone();
                handles.push(scope.spawn(move || {
                    let mut out = Vec::new();
                    let mut r = t;
                    while r < config.max_restarts {
                        if found_at.load(Ordering::Relaxed) < r {
                            break;
                        }
                        let warm_r = if r == 0 { warm.clone() } else { None };
                        let res =
                            anneal_restart(graph, edges, config, r as u64, warm_r, found_at);
                        let found = res.found.is_some();
                        out.push((r, res));
                        if found {
                            break;
                        }
                        r += workers;
                    }
                    out
                }));
            }
            for h in handles {
                for (r, res) in h.join().expect("search worker panicked") {
                    slots[r] = Some(res);
                }
            }
        });
    }

    let mut stats = SearchStats::default();
    let mut winner: Option<LayeredDrawing> = None;
    let mut best: Option<(usize, Vec<(i128, i128)>, Vec<usize>)> = None;
    for res in slots.into_iter().flatten() {
        stats.restarts += 1;
        stats.steps += res.steps;
        stats.verifier_calls += res.verifier_calls;
        if winner.is_none() {
            if let Some(d) = res.found {
                winner = Some(d);
                continue;
            }
        }
        let better = match &best {
            None => true,
            Some((layers, _, _)) => res.best_layers < *layers,
        };
        if better {
            best = Some((res.best_layers, res.best_points, res.best_assignment));
        }
    }

    if let Some(d) = winner {
        return Ok(SearchOutcome { status: SearchStatus::Found(d), stats });
    }

    let (mut best_layers, points, assignment) =
        best.expect("at least one restart ran to completion");
    let mut best_drawing = realize(graph, config, &points, &assignment);
    stats.verifier_calls += 1;
    if let Some(seed) = seed_best {
        let keep_seed = match &best_drawing {
            Some(d) => seed.layer_count() <= d.layer_count(),
            None => true,
        };
        if keep_seed {
            best_layers = seed.layer_count();
            best_drawing = Some(seed);
        }
    }
    let best_drawing = best_drawing.expect("annealer best state must realize to a valid drawing");
    Ok(SearchOutcome {
        status: SearchStatus::Exhausted { best_layers_seen: best_layers, best_drawing },
        stats,
    })
}

fn trivial_drawing(graph: &GraphSpec, config: &SearchConfig) -> LayeredDrawing {
    let g = config.coordinate_grid as i64;
    let points: Vec<RationalPoint> = (0..graph.vertex_count())
        .map(|i| RationalPoint::from_ratios(i as i64, g, 0, 1))
        .collect();
    LayeredDrawing::new(graph.clone(), points, Vec::new(), 1)
        .expect("edgeless drawing on distinct points is valid")
}

/// Turn a grid state and proper layer assignment into a verified
/// drawing; None if verification unexpectedly fails.
fn realize(
    graph: &GraphSpec,
    config: &SearchConfig,
    points: &[(i128, i128)],
    assignment: &[usize],
) -> Option<LayeredDrawing> {
    let g = config.coordinate_grid as i64;
    let rational: Vec<RationalPoint> = points
        .iter()
        .map(|&(x, y)| RationalPoint::from_ratios(x as i64, g, y as i64, g))
        .collect();
    let drawing = LayeredDrawing::from_assignment(graph.clone(), rational, assignment).ok()?;
    let report = verify::verify(&drawing);
    report.valid.then_some(drawing)
}

fn anneal_restart(
    graph: &GraphSpec,
    edges: &[(usize, usize)],
    config: &SearchConfig,
    restart: u64,
    warm: Option<Vec<(i128, i128)>>,
    found_at: &AtomicUsize,
) -> RestartResult {
    let mut rng = ChaCha8Rng::seed_from_u64(
        config.seed ^ restart.wrapping_mul(0x9E37_79B9_7F4A_7C15),
    );
    let n = graph.vertex_count();
    let m = edges.len();
    let bx = config.coordinate_box;
    let target = config.target_layers;
    let mut steps = 0u64;
    let mut verifier_calls = 0u64;

    let mut pos = match warm {
        Some(p) => p,
        None => random_positions(&mut rng, n, &bx),
    };
    repair_degeneracies(&mut rng, &mut pos, &bx);

    let mut adj = full_adjacency(&pos, edges);
    let (mut assignment, mut violations, _) = capped_greedy(&adj, target);
    let mut energy = energy_of(&adj, violations);

    let mut best_layers;
    let mut best_points;
    let mut best_assignment;
    {
        let (full, _, used) = capped_greedy(&adj, m.max(1));
        best_layers = used;
        best_points = pos.clone();
        best_assignment = full;
    }

    if violations == 0 {
        let padded = pad_assignment(&assignment, target);
        verifier_calls += 1;
        if let Some(d) = realize(graph, config, &pos, &padded) {
            if d.layer_count() == target {
                found_at.fetch_min(restart as usize, Ordering::Relaxed);
                return RestartResult {
                    found: Some(d),
                    best_layers,
                    best_points,
                    best_assignment,
                    steps,
                    verifier_calls,
                };
            }
        }
    }

    let span = ((bx.x_max - bx.x_min).max(bx.y_max - bx.y_min)) as f64;
    let mut temp = config.initial_temperature;

    for _ in 0..config.steps_per_restart {
        steps += 1;
        if steps % 1024 == 0 && found_at.load(Ordering::Relaxed) < restart as usize {
            break;
        }

        // Prefer moving a vertex that participates in current violations.
        let v = if violations > 0 && rng.gen_bool(0.7) {
            hottest_vertex(&adj, &assignment, edges, n)
        } else {
            rng.gen_range(0..n)
        };
        let old = pos[v];
        let radius = ((span / 10.0) * (temp / config.initial_temperature).min(1.0))
            .max(4.0) as i128;
        let cand = if rng.gen_bool(0.15) {
            (
                rng.gen_range(bx.x_min..=bx.x_max) as i128,
                rng.gen_range(bx.y_min..=bx.y_max) as i128,
            )
        } else {
            (
                (old.0 + rng.gen_range(-radius..=radius))
                    .clamp(bx.x_min as i128, bx.x_max as i128),
                (old.1 + rng.gen_range(-radius..=radius))
                    .clamp(bx.y_min as i128, bx.y_max as i128),
            )
        };
        if cand == old {
            temp *= config.cooling_rate;
            continue;
        }
        pos[v] = cand;
        if vertex_degenerate(&pos, v) {
            pos[v] = old;
            temp *= config.cooling_rate;
            continue;
        }

        let saved = update_adjacency(&mut adj, &pos, edges, v);
        let (cand_assignment, cand_violations, _) = capped_greedy(&adj, target);
        let cand_energy = energy_of(&adj, cand_violations);
        let delta = cand_energy - energy;
        let accept = delta <= 0.0 || rng.gen_bool((-delta / temp.max(1e-12)).exp());
        if accept {
            assignment = cand_assignment;
            violations = cand_violations;
            energy = cand_energy;
            if violations == 0 {
                let padded = pad_assignment(&assignment, target);
                verifier_calls += 1;
                if let Some(d) = realize(graph, config, &pos, &padded) {
                    if d.layer_count() == target {
                        found_at.fetch_min(restart as usize, Ordering::Relaxed);
                        return RestartResult {
                            found: Some(d),
                            best_layers,
                            best_points,
                            best_assignment,
                            steps,
                            verifier_calls,
                        };
                    }
                }
            }
            let (full, _, used) = capped_greedy(&adj, m.max(1));
            if used < best_layers {
                best_layers = used;
                best_points = pos.clone();
                best_assignment = full;
            }
        } else {
            pos[v] = old;
            restore_adjacency(&mut adj, saved);
        }
        temp *= config.cooling_rate;
    }

    RestartResult {
        found: None,
        best_layers,
        best_points,
        best_assignment,
        steps,
        verifier_calls,
    }
}

fn random_positions(rng: &mut ChaCha8Rng, n: usize, bx: &CoordinateBox) -> Vec<(i128, i128)> {
    (0..n)
        .map(|_| {
            (
                rng.gen_range(bx.x_min..=bx.x_max) as i128,
                rng.gen_range(bx.y_min..=bx.y_max) as i128,
            )
        })
        .collect()
}

fn orient_units(a: (i128, i128), b: (i128, i128), c: (i128, i128)) -> i128 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Coincidence or collinearity involving vertex v.
fn vertex_degenerate(pos: &[(i128, i128)], v: usize) -> bool {
    let n = pos.len();
    for u in 0..n {
        if u != v && pos[u] == pos[v] {
            return true;
        }
    }
    for a in 0..n {
        if a == v {
            continue;
        }
        for b in a + 1..n {
            if b == v {
                continue;
            }
            if orient_units(pos[a], pos[b], pos[v]) == 0 {
                return true;
            }
        }
    }
    false
}

fn any_degenerate(pos: &[(i128, i128)]) -> Option<usize> {
    let n = pos.len();
    for a in 0..n {
        for b in a + 1..n {
            if pos[a] == pos[b] {
                return Some(b);
            }
            for c in b + 1..n {
                if orient_units(pos[a], pos[b], pos[c]) == 0 {
                    return Some(c);
                }
            }
        }
    }
    None
}

fn repair_degeneracies(rng: &mut ChaCha8Rng, pos: &mut [(i128, i128)], bx: &CoordinateBox) {
    let jx = ((bx.x_max - bx.x_min) / 100).max(2);
    let jy = ((bx.y_max - bx.y_min) / 100).max(2);
    for _ in 0..10_000 {
        match any_degenerate(pos) {
            None => return,
            Some(v) => {
                pos[v] = (
                    (pos[v].0 + rng.gen_range(-jx..=jx) as i128)
                        .clamp(bx.x_min as i128, bx.x_max as i128),
                    (pos[v].1 + rng.gen_range(-jy..=jy) as i128)
                        .clamp(bx.y_min as i128, bx.y_max as i128),
                );
            }
        }
    }
    panic!("could not jitter the placement into general position");
}

fn conflict(pos: &[(i128, i128)], e: (usize, usize), f: (usize, usize)) -> bool {
    let p = |i: usize| (&pos[i].0, &pos[i].1);
    !classify_core::<i128>(p(e.0), p(e.1), p(f.0), p(f.1)).is_allowed_same_layer()
}

fn full_adjacency(pos: &[(i128, i128)], edges: &[(usize, usize)]) -> Vec<u128> {
    let m = edges.len();
    let mut adj = vec![0u128; m];
    for i in 0..m {
        for j in i + 1..m {
            if conflict(pos, edges[i], edges[j]) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Recompute rows for edges incident to the moved vertex; returns the
/// old rows for rollback.
fn update_adjacency(
    adj: &mut [u128],
    pos: &[(i128, i128)],
    edges: &[(usize, usize)],
    v: usize,
) -> Vec<(usize, u128)> {
    let m = edges.len();
    let incident: Vec<usize> = (0..m).filter(|&i| edges[i].0 == v || edges[i].1 == v).collect();
    let saved: Vec<(usize, u128)> = incident.iter().map(|&i| (i, adj[i])).collect();
    for &i in &incident {
        let mut row = 0u128;
        for j in 0..m {
            if j == i || edges[j].0 == v || edges[j].1 == v {
                continue;
            }
            if conflict(pos, edges[i], edges[j]) {
                row |= 1 << j;
                adj[j] |= 1 << i;
            } else {
                adj[j] &= !(1 << i);
            }
        }
        adj[i] = row;
    }
    saved
}

fn restore_adjacency(adj: &mut [u128], saved: Vec<(usize, u128)>) {
    let m = adj.len();
    for &(i, old) in &saved {
        for j in 0..m {
            if old >> j & 1 == 1 {
                adj[j] |= 1 << i;
            } else {
                adj[j] &= !(1 << i);
            }
        }
        adj[i] = old;
    }
}

fn energy_of(adj: &[u128], violations: u64) -> f64 {
    let pairs: u32 = adj.iter().map(|r| r.count_ones()).sum();
    violations as f64 + 0.01 * (pairs / 2) as f64
}

/// Greedy coloring capped at `cap` colors: vertices (conflict-graph
/// nodes = edges) in degree order take the color with fewest already
/// colored conflicting neighbors. Returns (colors, monochromatic
/// conflict pairs, colors used).
fn capped_greedy(adj: &[u128], cap: usize) -> (Vec<usize>, u64, usize) {
    let m = adj.len();
    let cap = cap.min(128).max(1);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(adj[e].count_ones()), e));
    let mut color = vec![usize::MAX; m];
    let mut counts = [0u32; 128];
    for &e in &order {
        let slots = &mut counts[..cap];
        slots.fill(0);
        let mut nb = adj[e];
        while nb != 0 {
            let f = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if color[f] != usize::MAX {
                slots[color[f]] += 1;
            }
        }
        let mut bestc = 0;
        for c in 1..cap {
            if slots[c] < slots[bestc] {
                bestc = c;
            }
        }
        color[e] = bestc;
    }
    let mut violations = 0u64;
    let mut used = 0;
    for e in 0..m {
        used = used.max(color[e] + 1);
        let mut nb = adj[e] >> (e + 1) << (e + 1);
        while nb != 0 {
            let f = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if color[f] == color[e] {
                violations += 1;
            }
        }
    }
    (color, violations, used)
}

/// Vertex appearing in the most monochromatic conflict pairs.
fn hottest_vertex(
    adj: &[u128],
    color: &[usize],
    edges: &[(usize, usize)],
    n: usize,
) -> usize {
    let mut weight = vec![0u32; n];
    for e in 0..adj.len() {
        let mut nb = adj[e] >> (e + 1) << (e + 1);
        while nb != 0 {
            let f = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if color[f] == color[e] {
                weight[edges[e].0] += 1;
                weight[edges[e].1] += 1;
                weight[edges[f].0] += 1;
                weight[edges[f].1] += 1;
            }
        }
    }
    (0..n).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap_or(0)
}

/// A proper coloring with fewer than `target` colors spreads out to
/// exactly `target` nonempty layers by peeling single edges off the
/// fullest layer.
fn pad_assignment(assignment: &[usize], target: usize) -> Vec<usize> {
    let mut out = assignment.to_vec();
    let used = out.iter().copied().max().map_or(0, |c| c + 1);
    for fresh in used..target {
        let mut counts = vec![0usize; fresh];
        for &c in &out {
            counts[c] += 1;
        }
        let donor = (0..fresh).max_by_key(|&c| counts[c]).expect("nonempty");
        debug_assert!(counts[donor] >= 2, "cannot peel from a singleton layer");
        let idx = out.iter().rposition(|&c| c == donor).expect("donor layer nonempty");
        out[idx] = fresh;
    }
    out
}

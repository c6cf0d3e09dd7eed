//! Exact certification of layered drawings.
//!
//! `verify` re-derives every invariant from scratch, so it accepts values
//! built with `LayeredDrawing::new_unchecked` and reports each defect in
//! the result instead of erroring. `crossing_graph` reifies "no two edges
//! on the same layer may cross" as graph coloring: a node per edge, an
//! adjacency per conflicting pair. `min_layers_fixed` then computes the
//! chromatic number of that graph for a fixed placement.

use crate::drawing::{CoverageError, LayeredDrawing, VerificationReport};
use crate::geom::{classify_core, CrossKind, GeomError, Rational, RationalPoint};
use crate::graph::{edge_set, GraphSpec};
use std::collections::BTreeMap;

/// Conflict structure of a placement: one node per edge, adjacency
/// between edges whose closed segments intersect anywhere other than a
/// shared endpoint.
#[derive(Debug, Clone)]
pub struct CrossingGraph {
    points: Vec<RationalPoint>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    conflicts: Vec<(usize, usize, CrossKind)>,
}

impl CrossingGraph {
    pub fn node_count(&self) -> usize {
        self.edges.len()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of edge `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Conflicting pairs (i, j) with i < j, lexicographic.
    pub fn conflicts(&self) -> &[(usize, usize, CrossKind)] {
        &self.conflicts
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }
}

/// Classify every pair of edges of a placement exactly.
pub fn crossing_graph(
    points: &[RationalPoint],
    edges: &[(usize, usize)],
) -> Result<CrossingGraph, GeomError> {
    if let Some((i, j)) = find_coincident(points).into_iter().next() {
        return Err(GeomError::DuplicatePoint(i, j));
    }
    for &(u, v) in edges {
        assert!(u < v && v < points.len(), "edge ({u}, {v}) out of range");
    }
    let m = edges.len();
    let mut adjacency = vec![Vec::new(); m];
    let mut conflicts = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let kind = classify_edge_pair(points, edges[i], edges[j]);
            if !kind.is_allowed_same_layer() {
                adjacency[i].push(j);
                adjacency[j].push(i);
                conflicts.push((i, j, kind));
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(CrossingGraph {
        points: points.to_vec(),
        edges: edges.to_vec(),
        adjacency,
        conflicts,
    })
}

fn classify_edge_pair(
    points: &[RationalPoint],
    (a, b): (usize, usize),
    (c, d): (usize, usize),
) -> CrossKind {
    let p = |i: usize| {
        let pt = &points[i];
        (&pt.x, &pt.y)
    };
    classify_core::<Rational>(p(a), p(b), p(c), p(d))
}

fn find_coincident(points: &[RationalPoint]) -> Vec<(usize, usize)> {
    let mut sorted: Vec<(usize, &RationalPoint)> = points.iter().enumerate().collect();
    sorted.sort_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)));
    let mut pairs = Vec::new();
    let mut start = 0;
    for i in 1..=sorted.len() {
        if i == sorted.len() || sorted[i].1 != sorted[start].1 {
            if i - start > 1 {
                let mut group: Vec<usize> = sorted[start..i].iter().map(|&(k, _)| k).collect();
                group.sort_unstable();
                for x in 0..group.len() {
                    for y in x + 1..group.len() {
                        pairs.push((group[x], group[y]));
                    }
                }
            }
            start = i;
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Check a drawing from first principles: distinct vertices, exact edge
/// coverage, sane layer ids, and no forbidden same-layer contact.
pub fn verify(drawing: &LayeredDrawing) -> VerificationReport {
    let points = drawing.points();
    let n = points.len();
    let degenerate_vertices = find_coincident(points);

    let mut coverage_errors = Vec::new();
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(u, v, layer) in drawing.edges() {
        if layer >= drawing.layer_count() {
            coverage_errors.push(CoverageError::LayerOutOfRange { edge: (u, v), layer });
        }
        let (lo, hi) = (u.min(v), u.max(v));
        if lo == hi || hi >= n {
            coverage_errors.push(CoverageError::ExtraEdge { edge: (u, v) });
            continue;
        }
        *counts.entry((lo, hi)).or_insert(0) += 1;
    }
    let expected = edge_set(drawing.graph());
    for &pair in &expected {
        match counts.get(&pair) {
            None => coverage_errors.push(CoverageError::MissingEdge { edge: pair }),
            Some(&c) if c > 1 => coverage_errors.push(CoverageError::DuplicateEdge { edge: pair }),
            _ => {}
        }
    }
    let expected_set: std::collections::BTreeSet<_> = expected.iter().copied().collect();
    for (&pair, &c) in &counts {
        if !expected_set.contains(&pair) {
            coverage_errors.push(CoverageError::ExtraEdge { edge: pair });
            if c > 1 {
                coverage_errors.push(CoverageError::DuplicateEdge { edge: pair });
            }
        }
    }
    if !drawing.edges().is_empty() {
        let mut used = vec![false; drawing.layer_count()];
        for &(_, _, layer) in drawing.edges() {
            if layer < used.len() {
                used[layer] = true;
            }
        }
        for (layer, &u) in used.iter().enumerate() {
            if !u {
                coverage_errors.push(CoverageError::EmptyLayer { layer });
            }
        }
    } else if drawing.layer_count() != 1 {
        for layer in 0..drawing.layer_count() {
            coverage_errors.push(CoverageError::EmptyLayer { layer });
        }
    }

    // Pair scan within each layer. Edges that are geometrically unusable
    // (out of range, self-loop, endpoints coincide) are excluded; they are
    // already reported above or via degenerate_vertices.
    let usable: Vec<bool> = drawing
        .edges()
        .iter()
        .map(|&(u, v, _)| u != v && u < n && v < n && points[u] != points[v])
        .collect();
    let mut violations = Vec::new();
    let m = drawing.edges().len();
    for i in 0..m {
        if !usable[i] {
            continue;
        }
        let (a, b, layer_i) = drawing.edges()[i];
        for j in i + 1..m {
            if !usable[j] || drawing.edges()[j].2 != layer_i {
                continue;
            }
            let (c, d, _) = drawing.edges()[j];
            let kind = classify_edge_pair(points, (a, b), (c, d));
            if !kind.is_allowed_same_layer() {
                violations.push((i, j, kind));
            }
        }
    }

    VerificationReport::assemble(violations, coverage_errors, degenerate_vertices)
}

/// How `greedy_layers` orders edges before coloring them first-fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderPolicy {
    /// The drawing's edge order as-is.
    Input,
    /// Conflict-degree descending, index as tiebreak.
    DegreeDescending,
    /// Dynamic saturation order: always color the node whose neighbors
    /// already use the most distinct layers.
    Saturation,
}

/// First-fit layer assignment for a fixed placement. The result always
/// verifies; its layer count is an upper bound on the chromatic number.
pub fn greedy_layers(
    points: &[RationalPoint],
    graph: &GraphSpec,
    policy: OrderPolicy,
) -> Result<Vec<usize>, GeomError> {
    let cg = crossing_graph(points, &edge_set(graph))?;
    Ok(greedy_on(&cg.adjacency, policy))
}

fn greedy_on(adjacency: &[Vec<usize>], policy: OrderPolicy) -> Vec<usize> {
    let m = adjacency.len();
    if m == 0 {
        return Vec::new();
    }
    match policy {
        OrderPolicy::Saturation => {
            return dsatur_greedy(adjacency);
        }
        _ => {}
    }
    let mut order: Vec<usize> = (0..m).collect();
    if policy == OrderPolicy::DegreeDescending {
        order.sort_by_key(|&i| (std::cmp::Reverse(adjacency[i].len()), i));
    }
    let mut colors = vec![usize::MAX; m];
    for &i in &order {
        let mut taken: Vec<usize> = adjacency[i]
            .iter()
            .map(|&j| colors[j])
            .filter(|&c| c != usize::MAX)
            .collect();
        taken.sort_unstable();
        taken.dedup();
        let mut c = 0;
        for &t in &taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        colors[i] = c;
    }
    colors
}

fn dsatur_greedy(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let m = adjacency.len();
    let mut colors = vec![usize::MAX; m];
    let mut neighbor_colors: Vec<u128> = vec![0; m];
    for _ in 0..m {
        // Highest saturation, then highest degree, then lowest index.
        let pick = (0..m)
            .filter(|&i| colors[i] == usize::MAX)
            .max_by_key(|&i| {
                (neighbor_colors[i].count_ones(), adjacency[i].len(), std::cmp::Reverse(i))
            })
            .unwrap();
        let mut c = 0;
        while neighbor_colors[pick] >> c & 1 == 1 {
            c += 1;
        }
        colors[pick] = c;
        if c < 128 {
            for &j in &adjacency[pick] {
                neighbor_colors[j] |= 1 << c;
            }
        }
    }
    colors
}

/// Result of the exact minimum-layer computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinLayers {
    /// The chromatic number of the crossing graph, with a witness.
    Exact { layers: usize, assignment: Vec<usize> },
    /// Budget ran out; the chromatic number lies in `lower..=upper` and
    /// `assignment` witnesses the upper bound.
    LowerBoundOnly { lower: usize, upper: usize, assignment: Vec<usize> },
}

impl MinLayers {
    pub fn assignment(&self) -> &[usize] {
        match self {
            MinLayers::Exact { assignment, .. } => assignment,
            MinLayers::LowerBoundOnly { assignment, .. } => assignment,
        }
    }

    pub fn upper(&self) -> usize {
        match self {
            MinLayers::Exact { layers, .. } => *layers,
            MinLayers::LowerBoundOnly { upper, .. } => *upper,
        }
    }
}

pub const DEFAULT_COLORING_BUDGET: u64 = 10_000_000;

/// Fewest layers for which this exact placement admits a crossing-free
/// assignment, by branch-and-bound coloring of the crossing graph.
pub fn min_layers_fixed(
    points: &[RationalPoint],
    graph: &GraphSpec,
    budget: u64,
) -> Result<MinLayers, GeomError> {
    let cg = crossing_graph(points, &edge_set(graph))?;
    Ok(color_exact(&cg.adjacency, budget))
}

fn color_exact(adjacency: &[Vec<usize>], budget: u64) -> MinLayers {
    let m = adjacency.len();
    if m == 0 {
        return MinLayers::Exact { layers: 1, assignment: Vec::new() };
    }
    let greedy = dsatur_greedy(adjacency);
    let upper = greedy.iter().max().unwrap() + 1;
    let lower = greedy_clique(adjacency).len().max(1);
    if lower == upper {
        return MinLayers::Exact { layers: upper, assignment: greedy };
    }
    let mut remaining = budget;
    for k in lower..upper {
        match k_colorable(adjacency, k, &mut remaining) {
            Verdict::Colorable(assignment) => {
                return MinLayers::Exact { layers: k, assignment };
            }
            Verdict::Impossible => continue,
            Verdict::BudgetExhausted => {
                return MinLayers::LowerBoundOnly { lower: k, upper, assignment: greedy };
            }
        }
    }
    MinLayers::Exact { layers: upper, assignment: greedy }
}

/// Best clique found greedily from each of the highest-degree starts.
fn greedy_clique(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let m = adjacency.len();
    let mut by_degree: Vec<usize> = (0..m).collect();
    by_degree.sort_by_key(|&i| (std::cmp::Reverse(adjacency[i].len()), i));
    let mut best = Vec::new();
    for &start in by_degree.iter().take(64) {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = adjacency[start].clone();
        while let Some(&next) = candidates
            .iter()
            .max_by_key(|&&c| (adjacency[c].len(), std::cmp::Reverse(c)))
        {
            clique.push(next);
            candidates.retain(|&c| c != next && adjacency[next].binary_search(&c).is_ok());
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

enum Verdict {
    Colorable(Vec<usize>),
    Impossible,
    BudgetExhausted,
}

/// Decision search: can the graph be colored with exactly `k` colors?
/// DSATUR vertex selection with dense-color symmetry breaking; `budget`
/// counts node expansions and is shared across calls.
fn k_colorable(adjacency: &[Vec<usize>], k: usize, budget: &mut u64) -> Verdict {
    assert!(k <= 128, "layer counts beyond 128 are out of scope");
    let m = adjacency.len();
    let mut colors = vec![usize::MAX; m];
    let mut neighbor_colors: Vec<u128> = vec![0; m];
    let full: u128 = if k == 128 { !0 } else { (1u128 << k) - 1 };

    fn recurse(
        adjacency: &[Vec<usize>],
        colors: &mut [usize],
        neighbor_colors: &mut [u128],
        full: u128,
        k: usize,
        max_used: usize,
        colored: usize,
        budget: &mut u64,
    ) -> Option<bool> {
        if colored == colors.len() {
            return Some(true);
        }
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let pick = (0..colors.len())
            .filter(|&i| colors[i] == usize::MAX)
            .max_by_key(|&i| {
                (
                    (neighbor_colors[i] & full).count_ones(),
                    adjacency[i].len(),
                    std::cmp::Reverse(i),
                )
            })
            .unwrap();
        if (neighbor_colors[pick] & full) == full {
            return Some(false);
        }
        let cap = k.min(max_used + 2); // existing colors plus one fresh
        for c in 0..cap {
            if neighbor_colors[pick] >> c & 1 == 1 {
                continue;
            }
            colors[pick] = c;
            let mut touched = Vec::new();
            for &j in &adjacency[pick] {
                if neighbor_colors[j] >> c & 1 == 0 {
                    neighbor_colors[j] |= 1 << c;
                    touched.push(j);
                }
            }
            let next_max = max_used.max(c + 1);
            match recurse(
                adjacency,
                colors,
                neighbor_colors,
                full,
                k,
                next_max,
                colored + 1,
                budget,
            ) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    for &j in &touched {
                        neighbor_colors[j] &= !(1 << c);
                    }
                    colors[pick] = usize::MAX;
                    return None;
                }
            }
            for &j in &touched {
                neighbor_colors[j] &= !(1 << c);
            }
            colors[pick] = usize::MAX;
        }
        Some(false)
    }

    match recurse(adjacency, &mut colors, &mut neighbor_colors, full, k, 0, 0, budget) {
        Some(true) => Verdict::Colorable(colors),
        Some(false) => Verdict::Impossible,
        None => Verdict::BudgetExhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::LayeredDrawing;

    fn pt(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_integers(x, y)
    }

    fn square() -> Vec<RationalPoint> {
        vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]
    }

    /// Convex position with rational coordinates: points on a parabola.
    fn parabola(n: usize) -> Vec<RationalPoint> {
        (0..n).map(|i| pt(i as i64, (i * i) as i64)).collect()
    }

    #[test]
    fn k4_single_conflict() {
        let g = GraphSpec::complete(4);
        let cg = crossing_graph(&square(), &edge_set(&g)).unwrap();
        assert_eq!(cg.node_count(), 6);
        assert_eq!(cg.conflicts().len(), 1);
        let (i, j, kind) = cg.conflicts()[0];
        assert_eq!(kind, CrossKind::ProperCrossing);
        assert_eq!(cg.edges()[i], (0, 2));
        assert_eq!(cg.edges()[j], (1, 3));
    }

    #[test]
    fn k3_no_conflicts() {
        let g = GraphSpec::complete(3);
        let pts = vec![pt(0, 0), pt(5, 1), pt(2, 7)];
        let cg = crossing_graph(&pts, &edge_set(&g)).unwrap();
        assert!(cg.conflicts().is_empty());
    }

    #[test]
    fn crossing_graph_symmetry_and_no_shared_vertex_adjacency() {
        let g = GraphSpec::complete(6);
        let cg = crossing_graph(&parabola(6), &edge_set(&g)).unwrap();
        for (i, list) in (0..cg.node_count()).map(|i| (i, cg.neighbors(i))) {
            for &j in list {
                assert!(cg.neighbors(j).binary_search(&i).is_ok());
                let (a, b) = cg.edges()[i];
                let (c, d) = cg.edges()[j];
                assert!(a != c && a != d && b != c && b != d);
            }
        }
    }

    #[test]
    fn duplicate_points_rejected() {
        let pts = vec![pt(0, 0), pt(1, 1), pt(0, 0)];
        match crossing_graph(&pts, &[(0, 1)]) {
            Err(GeomError::DuplicatePoint(0, 2)) => {}
            other => panic!("expected duplicate-point error, got {other:?}"),
        }
    }

    #[test]
    fn pentagon_diagonals_form_five_cycle() {
        let g = GraphSpec::complete(5);
        let cg = crossing_graph(&parabola(5), &edge_set(&g)).unwrap();
        assert_eq!(cg.conflicts().len(), 5);
        let diagonals = [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];
        let mut degrees = BTreeMap::new();
        for &(i, j, kind) in cg.conflicts() {
            assert_eq!(kind, CrossKind::ProperCrossing);
            for e in [cg.edges()[i], cg.edges()[j]] {
                assert!(diagonals.contains(&e));
                *degrees.entry(e).or_insert(0) += 1;
            }
        }
        // Every diagonal crosses exactly two others: a 5-cycle.
        assert_eq!(degrees.len(), 5);
        assert!(degrees.values().all(|&d| d == 2));
    }

    #[test]
    fn verify_flat_k4_invalid() {
        let g = GraphSpec::complete(4);
        let edges = edge_set(&g).into_iter().map(|(u, v)| (u, v, 0)).collect();
        let d = LayeredDrawing::new(g, square(), edges, 1).unwrap();
        let report = verify(&d);
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].2, CrossKind::ProperCrossing);
        assert!(report.coverage_errors.is_empty());
        assert!(report.degenerate_vertices.is_empty());
    }

    #[test]
    fn verify_split_k4_valid() {
        let g = GraphSpec::complete(4);
        let edges = vec![(0, 1, 0), (0, 2, 0), (0, 3, 0), (1, 2, 0), (1, 3, 1), (2, 3, 0)];
        let d = LayeredDrawing::new(g, square(), edges, 2).unwrap();
        assert!(verify(&d).valid);
    }

    #[test]
    fn verify_reports_missing_edge() {
        let g = GraphSpec::complete(5);
        let edges: Vec<_> = edge_set(&g)
            .into_iter()
            .filter(|&e| e != (0, 3))
            .map(|(u, v)| (u, v, 0))
            .collect();
        let d = LayeredDrawing::new_unchecked(g, parabola(5), edges, 1);
        let report = verify(&d);
        assert!(!report.valid);
        assert!(report
            .coverage_errors
            .contains(&CoverageError::MissingEdge { edge: (0, 3) }));
    }

    #[test]
    fn verify_reports_extra_duplicate_and_range_problems() {
        let g = GraphSpec::complete(3);
        let pts = vec![pt(0, 0), pt(5, 1), pt(2, 7)];
        let edges = vec![
            (0, 1, 0),
            (0, 2, 0),
            (1, 2, 0),
            (1, 2, 0), // duplicate
            (0, 9, 0), // endpoint out of range
            (1, 1, 5), // self-loop on a bad layer
        ];
        let d = LayeredDrawing::new_unchecked(g, pts, edges, 2);
        let report = verify(&d);
        assert!(!report.valid);
        assert!(report
            .coverage_errors
            .contains(&CoverageError::DuplicateEdge { edge: (1, 2) }));
        assert!(report
            .coverage_errors
            .contains(&CoverageError::ExtraEdge { edge: (0, 9) }));
        assert!(report
            .coverage_errors
            .contains(&CoverageError::ExtraEdge { edge: (1, 1) }));
        assert!(report
            .coverage_errors
            .contains(&CoverageError::LayerOutOfRange { edge: (1, 1), layer: 5 }));
        assert!(report
            .coverage_errors
            .contains(&CoverageError::EmptyLayer { layer: 1 }));
    }

    #[test]
    fn verify_reports_coincident_vertices() {
        let g = GraphSpec::complete(3);
        let pts = vec![pt(0, 0), pt(5, 1), pt(0, 0)];
        let edges = vec![(0, 1, 0), (0, 2, 0), (1, 2, 0)];
        let d = LayeredDrawing::new_unchecked(g, pts, edges, 1);
        let report = verify(&d);
        assert!(!report.valid);
        assert_eq!(report.degenerate_vertices, vec![(0, 2)]);
    }

    #[test]
    fn verify_scale_and_translate_invariant() {
        let g = GraphSpec::complete(4);
        let edges: Vec<_> = edge_set(&g).into_iter().map(|(u, v)| (u, v, 0)).collect();
        let base = verify(&LayeredDrawing::new(
            g.clone(),
            square(),
            edges.clone(),
            1,
        )
        .unwrap());
        let moved: Vec<RationalPoint> = square()
            .iter()
            .map(|p| {
                RationalPoint::new(
                    &p.x * Rational::new(7.into(), 3.into()) - Rational::from_integer(5.into()),
                    &p.y * Rational::new(7.into(), 3.into()) + Rational::from_integer(9.into()),
                )
            })
            .collect();
        let report = verify(&LayeredDrawing::new(g, moved, edges, 1).unwrap());
        assert_eq!(base, report);
    }

    #[test]
    fn min_layers_small_convex_placements() {
        // Book thickness of a convex placement is ceil(n/2) once n >= 4;
        // below that the whole graph is crossing-free on one page.
        for n in 4..=8usize {
            let g = GraphSpec::complete(n);
            let pts = parabola(n);
            match min_layers_fixed(&pts, &g, DEFAULT_COLORING_BUDGET).unwrap() {
                MinLayers::Exact { layers, assignment } => {
                    assert_eq!(layers, n.div_ceil(2), "n = {n}");
                    let d = LayeredDrawing::from_assignment(g, pts, &assignment).unwrap();
                    assert!(verify(&d).valid, "witness must verify for n = {n}");
                }
                other => panic!("expected exact result for n = {n}, got {other:?}"),
            }
        }
    }

    #[test]
    fn min_layers_trivial_cases() {
        let g = GraphSpec::complete(3);
        let pts = vec![pt(0, 0), pt(5, 1), pt(2, 7)];
        match min_layers_fixed(&pts, &g, DEFAULT_COLORING_BUDGET).unwrap() {
            MinLayers::Exact { layers, .. } => assert_eq!(layers, 1),
            other => panic!("unexpected {other:?}"),
        }
        let g1 = GraphSpec::complete(1);
        match min_layers_fixed(&[pt(0, 0)], &g1, DEFAULT_COLORING_BUDGET).unwrap() {
            MinLayers::Exact { layers, assignment } => {
                assert_eq!(layers, 1);
                assert!(assignment.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn budget_exhaustion_returns_bracket() {
        let g = GraphSpec::complete(8);
        let pts = parabola(8);
        match min_layers_fixed(&pts, &g, 0).unwrap() {
            MinLayers::Exact { layers, .. } => {
                // Permitted only when the greedy/clique bracket is tight.
                assert_eq!(layers, 4);
            }
            MinLayers::LowerBoundOnly { lower, upper, assignment } => {
                assert!(lower <= 4 && 4 <= upper);
                let d = LayeredDrawing::from_assignment(g, pts, &assignment).unwrap();
                assert!(verify(&d).valid);
            }
        }
    }

    #[test]
    fn greedy_policies_all_verify() {
        let g = GraphSpec::complete(6);
        let pts = parabola(6);
        for policy in [OrderPolicy::Input, OrderPolicy::DegreeDescending, OrderPolicy::Saturation]
        {
            let assignment = greedy_layers(&pts, &g, policy).unwrap();
            let d = LayeredDrawing::from_assignment(g.clone(), pts.clone(), &assignment).unwrap();
            assert!(verify(&d).valid, "{policy:?}");
            let layers = assignment.iter().max().unwrap() + 1;
            assert!(layers >= 3, "{policy:?} gave {layers} layers");
        }
    }

    #[test]
    fn greedy_k4_two_layers() {
        let g = GraphSpec::complete(4);
        let assignment = greedy_layers(&square(), &g, OrderPolicy::DegreeDescending).unwrap();
        assert_eq!(assignment.iter().max().unwrap() + 1, 2);
    }

    #[test]
    fn greedy_empty_edge_list() {
        let g = GraphSpec::complete(1);
        let assignment = greedy_layers(&[pt(0, 0)], &g, OrderPolicy::Input).unwrap();
        assert!(assignment.is_empty());
    }
}

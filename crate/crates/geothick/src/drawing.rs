//! Layered drawings: a vertex placement plus an edge-to-layer assignment,
//! with canonical JSON serialization.
//!
//! The JSON document is `{"version":1,"graph":{…},"points":[…],
//! "layer_count":k,"edges":[[u,v,layer],…]}` with coordinates as reduced
//! `"num/den"` strings (`"/den"` omitted when the denominator is 1). Key
//! order is fixed so golden files are byte-stable.

use crate::geom::{CrossKind, Rational, RationalPoint};
use crate::graph::{edge_set, GraphSpec};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
}

/// A straight-line drawing of `graph` with every edge assigned to a layer.
/// Construction validates all structural invariants; a value of this type
/// is well-formed (though not necessarily crossing-free; see `verify`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredDrawing {
    graph: GraphSpec,
    points: Vec<RationalPoint>,
    edges: Vec<(usize, usize, usize)>,
    layer_count: usize,
}

impl LayeredDrawing {
    pub fn new(
        graph: GraphSpec,
        points: Vec<RationalPoint>,
        edges: Vec<(usize, usize, usize)>,
        layer_count: usize,
    ) -> Result<Self, ModelError> {
        if points.len() != graph.vertex_count() {
            return Err(ModelError::Invariant(format!(
                "point count {} differs from vertex count {}",
                points.len(),
                graph.vertex_count()
            )));
        }
        let mut sorted: Vec<(&RationalPoint, usize)> =
            points.iter().zip(0..).collect();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ModelError::Invariant(format!(
                    "vertices {} and {} coincide",
                    w[0].1.min(w[1].1),
                    w[0].1.max(w[1].1)
                )));
            }
        }
        if layer_count == 0 {
            return Err(ModelError::Invariant("layer_count must be positive".into()));
        }
        if edges.is_empty() && layer_count != 1 {
            return Err(ModelError::Invariant(
                "an edgeless drawing must have layer_count 1".into(),
            ));
        }
        let mut used = vec![false; layer_count];
        for &(u, v, layer) in &edges {
            if u >= v {
                return Err(ModelError::Invariant(format!(
                    "edge ({u}, {v}) must be stored with u < v"
                )));
            }
            if layer >= layer_count {
                return Err(ModelError::Invariant(format!(
                    "edge ({u}, {v}) has layer {layer} >= layer_count {layer_count}"
                )));
            }
            used[layer] = true;
        }
        if !edges.is_empty() {
            if let Some(layer) = used.iter().position(|&u| !u) {
                return Err(ModelError::Invariant(format!("layer {layer} is empty")));
            }
        }
        let mut actual: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
        actual.sort();
        for w in actual.windows(2) {
            if w[0] == w[1] {
                return Err(ModelError::Invariant(format!(
                    "edge ({}, {}) appears more than once",
                    w[0].0, w[0].1
                )));
            }
        }
        let mut expected = edge_set(&graph);
        expected.sort();
        if actual != expected {
            let actual_set: BTreeSet<_> = actual.iter().collect();
            let expected_set: BTreeSet<_> = expected.iter().collect();
            let missing: Vec<_> = expected_set.difference(&actual_set).collect();
            let extra: Vec<_> = actual_set.difference(&expected_set).collect();
            return Err(ModelError::Invariant(format!(
                "edge coverage mismatch: missing {missing:?}, extra {extra:?}"
            )));
        }
        Ok(LayeredDrawing { graph, points, edges, layer_count })
    }

    /// Build without checking the structural invariants. The verifier
    /// accepts such values and reports every problem in its result rather
    /// than erroring, which is how malformed inputs get diagnosed.
    ///
    /// `points` must still have one entry per vertex and `layer_count`
    /// must be positive; everything else may be broken.
    pub fn new_unchecked(
        graph: GraphSpec,
        points: Vec<RationalPoint>,
        edges: Vec<(usize, usize, usize)>,
        layer_count: usize,
    ) -> Self {
        assert_eq!(points.len(), graph.vertex_count(), "one point per vertex");
        assert!(layer_count > 0, "layer_count must be positive");
        LayeredDrawing { graph, points, edges, layer_count }
    }

    /// Build from a per-edge layer assignment aligned with `edge_set(graph)`.
    pub fn from_assignment(
        graph: GraphSpec,
        points: Vec<RationalPoint>,
        assignment: &[usize],
    ) -> Result<Self, ModelError> {
        let pairs = edge_set(&graph);
        if pairs.len() != assignment.len() {
            return Err(ModelError::Invariant(format!(
                "assignment length {} differs from edge count {}",
                assignment.len(),
                pairs.len()
            )));
        }
        let layer_count = assignment.iter().map(|&l| l + 1).max().unwrap_or(1);
        let edges = pairs
            .into_iter()
            .zip(assignment.iter())
            .map(|((u, v), &l)| (u, v, l))
            .collect();
        LayeredDrawing::new(graph, points, edges, layer_count)
    }

    pub fn graph(&self) -> &GraphSpec {
        &self.graph
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn layer_count(&self) -> usize {
        self.layer_count
    }

    /// Edge indices grouped by layer.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut by_layer = vec![Vec::new(); self.layer_count];
        for (i, &(_, _, layer)) in self.edges.iter().enumerate() {
            by_layer[layer].push(i);
        }
        by_layer
    }

    pub fn to_json(&self) -> String {
        let doc = DrawingDoc {
            version: FORMAT_VERSION,
            graph: &self.graph,
            points: self.points.iter().map(point_to_strings).collect(),
            layer_count: self.layer_count,
            edges: &self.edges,
        };
        serde_json::to_string(&doc).expect("drawing serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let (graph, points, edges, layer_count) = parse_document(text)?;
        LayeredDrawing::new(graph, points, edges, layer_count)
    }

    /// Parse a document but defer the structural invariants to the
    /// verifier. Only syntactic problems (bad JSON, bad rationals, wrong
    /// version, point/vertex count mismatch, zero layer_count) fail here.
    pub fn from_json_lenient(text: &str) -> Result<Self, ModelError> {
        let (graph, points, edges, layer_count) = parse_document(text)?;
        if points.len() != graph.vertex_count() {
            return Err(ModelError::Parse(format!(
                "point count {} differs from vertex count {}",
                points.len(),
                graph.vertex_count()
            )));
        }
        if layer_count == 0 {
            return Err(ModelError::Parse("layer_count must be positive".into()));
        }
        Ok(LayeredDrawing::new_unchecked(graph, points, edges, layer_count))
    }
}

type DocParts = (GraphSpec, Vec<RationalPoint>, Vec<(usize, usize, usize)>, usize);

fn parse_document(text: &str) -> Result<DocParts, ModelError> {
    let raw: RawDoc =
        serde_json::from_str(text).map_err(|e| ModelError::Parse(e.to_string()))?;
    if raw.version != FORMAT_VERSION {
        return Err(ModelError::Parse(format!(
            "unsupported format version {}",
            raw.version
        )));
    }
    let mut points = Vec::with_capacity(raw.points.len());
    for (i, [xs, ys]) in raw.points.iter().enumerate() {
        let x = parse_rational(xs)
            .map_err(|e| ModelError::Parse(format!("point {i}, x: {e}")))?;
        let y = parse_rational(ys)
            .map_err(|e| ModelError::Parse(format!("point {i}, y: {e}")))?;
        points.push(RationalPoint::new(x, y));
    }
    Ok((raw.graph, points, raw.edges, raw.layer_count))
}

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize)]
struct DrawingDoc<'a> {
    version: u32,
    graph: &'a GraphSpec,
    points: Vec<[String; 2]>,
    layer_count: usize,
    edges: &'a [(usize, usize, usize)],
}

#[derive(Deserialize)]
struct RawDoc {
    version: u32,
    graph: GraphSpec,
    points: Vec<[String; 2]>,
    layer_count: usize,
    edges: Vec<(usize, usize, usize)>,
}

fn point_to_strings(p: &RationalPoint) -> [String; 2] {
    [rational_to_string(&p.x), rational_to_string(&p.y)]
}

pub(crate) fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<Rational, String> {
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer = BigInt::from_str(num_str.trim())
        .map_err(|_| format!("bad numerator in {text:?}"))?;
    let denom = match den_str {
        Some(d) => BigInt::from_str(d.trim())
            .map_err(|_| format!("bad denominator in {text:?}"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Which structural problem a coverage check found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverageError {
    MissingEdge { edge: (usize, usize) },
    ExtraEdge { edge: (usize, usize) },
    DuplicateEdge { edge: (usize, usize) },
    LayerOutOfRange { edge: (usize, usize), layer: usize },
    EmptyLayer { layer: usize },
}

/// Structured verdict from the exact verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    /// Offending same-layer edge pairs (indices into the drawing's edge
    /// list) with the observed contact kind.
    pub violations: Vec<(usize, usize, CrossKind)>,
    pub coverage_errors: Vec<CoverageError>,
    /// Pairs of coincident vertices.
    pub degenerate_vertices: Vec<(usize, usize)>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        violations: Vec<(usize, usize, CrossKind)>,
        coverage_errors: Vec<CoverageError>,
        degenerate_vertices: Vec<(usize, usize)>,
    ) -> Self {
        let valid =
            violations.is_empty() && coverage_errors.is_empty() && degenerate_vertices.is_empty();
        VerificationReport { valid, violations, coverage_errors, degenerate_vertices }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

//! Abstract graphs a drawing can realize: complete, complete bipartite,
//! or an explicit edge list.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("edge ({0}, {1}) is invalid: {2}")]
    BadEdge(usize, usize, &'static str),
}

/// Symbolic graph description. Bipartite convention: vertices 0..a-1 form
/// the first class ("red"), a..a+b-1 the second ("blue").
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GraphSpec {
    Complete { n: usize },
    Bipartite { a: usize, b: usize },
    Explicit { vertex_count: usize, edges: Vec<(usize, usize)> },
}

impl GraphSpec {
    pub fn complete(n: usize) -> Self {
        GraphSpec::Complete { n }
    }

    pub fn bipartite(a: usize, b: usize) -> Self {
        GraphSpec::Bipartite { a, b }
    }

    /// Explicit graph; normalizes each pair to u < v and validates
    /// (no loops, no duplicates, endpoints in range).
    pub fn explicit(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::BadEdge(u, v, "self-loop"));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::BadEdge(u, v, "endpoint out of range"));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::BadEdge(e.0, e.1, "duplicate edge"));
            }
            normalized.push(e);
        }
        Ok(GraphSpec::Explicit { vertex_count, edges: normalized })
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            GraphSpec::Complete { n } => n,
            GraphSpec::Bipartite { a, b } => a + b,
            GraphSpec::Explicit { vertex_count, .. } => vertex_count,
        }
    }

    pub fn edge_count(&self) -> usize {
        match *self {
            GraphSpec::Complete { n } => n * n.saturating_sub(1) / 2,
            GraphSpec::Bipartite { a, b } => a * b,
            GraphSpec::Explicit { ref edges, .. } => edges.len(),
        }
    }
}

/// Edge set as (u, v) pairs with u < v, in deterministic lexicographic
/// order (explicit graphs keep their stored order).
pub fn edge_set(graph: &GraphSpec) -> Vec<(usize, usize)> {
    match *graph {
        GraphSpec::Complete { n } => {
            let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
            for u in 0..n {
                for v in (u + 1)..n {
                    edges.push((u, v));
                }
            }
            edges
        }
        GraphSpec::Bipartite { a, b } => {
            let mut edges = Vec::with_capacity(a * b);
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            edges
        }
        GraphSpec::Explicit { ref edges, .. } => edges.clone(),
    }
}

//! Layered straight-line drawings of graphs with exact rational geometry:
//! build them, verify them, bound how many layers they need, and search
//! for better ones.
//!
//! A layered drawing places every vertex once and splits the edges into
//! layers so that no two edges on the same layer cross. Everything here
//! runs on exact `BigRational` coordinates, so "no crossing" is a theorem
//! about the stored drawing, not a floating-point impression.
//!
//! The `examples/` directory is the front door; each example is a small
//! runnable tour of one capability:
//!
//! - `two_ring`: the ceil(n/4)-layer construction for complete graphs,
//!   with its rotation and pairing schedule (`cargo run --release -p
//!   geothick --example two_ring 16`).
//! - `book_pages`: exact page minimums for convex placements.
//! - `bipartite_rows`: two-row drawings and bounds for K_{a,b}.
//! - `bounds_table`: the lower/upper bound table for n up to 100.
//! - `verify_report`: the verifier's violation reports and the JSON
//!   drawing format.
//! - `k15_audit`: triangulation counting and forced-edge certificates on
//!   random 15-point sets.
//! - `anneal_k66`: simulated annealing that finds a 2-layer K_{6,6}.
//! - `render_svg`: SVG output, combined or one file per layer.
//!
//! The same capabilities are scriptable through the thin `geothick`
//! binary (`construct`, `verify`, `bounds`, `table`, `audit-k15`,
//! `search`, `render`).

pub mod bounds;
pub mod construct;
pub mod drawing;
pub mod geom;
pub mod graph;
pub mod k15;
pub mod render;
pub mod search;
pub mod verify;

pub use bounds::{
    bipartite_bounds, bipartite_equality_threshold, book_thickness_complete, bounds_table,
    bounds_table_csv, bounds_table_text, geo_lower_bound, geo_lower_bound_closed_form,
    geo_upper_bound, lower_source_for, separator_excess_values, separator_terms,
    thickness_complete,
    BipartiteBounds, BipartiteLowerSource, BoundsError, BoundsRow, LowerSource,
    SeparatorBoundTerms, UpperSource,
};
pub use construct::{
    bipartite_layout, complete_layout, convex_layout, two_ring_layout,
    two_ring_layout_with_report, zigzag_path, ConstructError, LayerPairing, TwoRingParameters,
    TwoRingReport, ZigzagPath,
};
pub use drawing::{CoverageError, LayeredDrawing, ModelError, VerificationReport};
pub use geom::{classify_crossing, convex_hull, orientation, CrossKind, GeomError, Rational, RationalPoint, Segment};
pub use graph::{edge_set, GraphError, GraphSpec};
pub use k15::{
    audit_three_cover, audit_trials, certify_forced_edges, certify_forced_pairs, coverage_budget,
    general_position, random_point_set, random_triangular_point_set, triangulate, AuditReport, AuditSummary, CaseBudget,
    ForcedEdge, ForcedEdgeCertificate, ForcedPair, ForcedPairCertificate, K15Error, Triangulation,
};
pub use render::{render_split_svgs, render_svg, RenderStyle, PALETTE};
pub use search::{
    improve_drawing, search_placement, CoordinateBox, SearchConfig, SearchError, SearchOutcome,
    SearchStats, SearchStatus,
};
pub use verify::{
    crossing_graph, greedy_layers, min_layers_fixed, verify, CrossingGraph, MinLayers,
    OrderPolicy, DEFAULT_COLORING_BUDGET,
};

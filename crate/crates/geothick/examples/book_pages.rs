//! Convex placements force ⌈n/2⌉ layers on complete graphs: build the
//! page decomposition and confirm the bound is tight with the exact
//! chromatic solver.
//!
//!     cargo run --release --example book_pages

use geothick::{
    book_thickness_complete, convex_layout, edge_set, min_layers_fixed, verify, GraphSpec,
    MinLayers, RationalPoint, DEFAULT_COLORING_BUDGET,
};

fn main() {
    for n in 4..=10 {
        let drawing = convex_layout(n).expect("layout failed");
        assert!(verify(&drawing).valid);

        // Points on a parabola are in convex position; the crossing
        // structure only depends on the convex order.
        let points: Vec<RationalPoint> = (0..n as i64)
            .map(|i| RationalPoint::from_integers(i, i * i))
            .collect();
        let exact = match min_layers_fixed(&points, &GraphSpec::complete(n), DEFAULT_COLORING_BUDGET)
            .expect("solver failed")
        {
            MinLayers::Exact { layers, .. } => layers,
            MinLayers::LowerBoundOnly { lower, upper, .. } => {
                panic!("budget exhausted with bracket [{lower}, {upper}]")
            }
        };
        println!(
            "K_{n}: pages used {}, optimal for convex position {}, formula {}  ({} edges)",
            drawing.layer_count(),
            exact,
            book_thickness_complete(n),
            edge_set(&GraphSpec::complete(n)).len()
        );
        assert_eq!(exact, book_thickness_complete(n));
    }
}

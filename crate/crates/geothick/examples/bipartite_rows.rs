//! Layered drawings of complete bipartite graphs from the split-row
//! construction, next to the counting lower bound.
//!
//!     cargo run --release --example bipartite_rows

use geothick::{bipartite_bounds, bipartite_equality_threshold, bipartite_layout, verify};

fn main() {
    for (a, b) in [(3, 3), (4, 4), (6, 6), (6, 8), (5, 12), (7, 9)] {
        let drawing = bipartite_layout(a, b).expect("layout failed");
        let ok = verify(&drawing).valid;
        let bounds = bipartite_bounds(a, b).expect("bounds failed");
        println!(
            "K_{{{a},{b}}}: construction {} layers, bounds [{}, {}] via {}, valid = {ok}",
            drawing.layer_count(),
            bounds.lower,
            bounds.upper,
            bounds.lower_source
        );
    }

    // For fixed b, the counting bound meets ⌈b/2⌉ once a is large enough.
    for b in 3..=8 {
        println!(
            "b = {b}: bound reaches the construction at a >= {}",
            bipartite_equality_threshold(b).expect("threshold needs b >= 3")
        );
    }
}

//! Build nested-ring drawings of complete graphs and verify them.
//!
//!     cargo run --release --example two_ring [n]

use geothick::{complete_layout, two_ring_layout_with_report, verify};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(16);

    let drawing = complete_layout(n).expect("construction failed");
    let report = verify(&drawing);
    println!(
        "K_{n}: {} layers, {} edges, valid = {}",
        drawing.layer_count(),
        drawing.edges().len(),
        report.valid
    );

    // For multiples of 4 the builder also reports which inner zigzag each
    // outer layer paired with and how many parameter attempts were needed.
    if n % 4 == 0 && n >= 8 {
        let (_, detail) = two_ring_layout_with_report(n, None).expect("construction failed");
        println!(
            "parameter attempts: {}, outer rotation: {} turns",
            detail.attempts, detail.parameters.outer_rotation
        );
        for p in &detail.pairings {
            println!(
                "  layer {}: outer zigzag {} + apexes {:?} + inner zigzag {}",
                p.layer, p.outer_start, p.apexes, p.inner_start
            );
        }
    }
}

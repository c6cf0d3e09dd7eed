//! What the verifier reports for healthy and broken drawings.
//!
//!     cargo run --release --example verify_report

use geothick::{verify, GraphSpec, LayeredDrawing, RationalPoint};

fn pt(x: i64, y: i64) -> RationalPoint {
    RationalPoint::from_integers(x, y)
}

fn main() {
    // A valid one-layer drawing of the 4-cycle.
    let square = GraphSpec::explicit(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let good = LayeredDrawing::new(
        square,
        vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)],
        vec![(0, 1, 0), (1, 2, 0), (2, 3, 0), (0, 3, 0)],
        1,
    )
    .unwrap();
    println!("square: {}", verify(&good).to_json());

    // Both diagonals of the square forced onto one layer: a crossing.
    let diagonals = GraphSpec::explicit(4, vec![(0, 2), (1, 3)]).unwrap();
    let crossing = LayeredDrawing::new_unchecked(
        diagonals,
        vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)],
        vec![(0, 2, 0), (1, 3, 0)],
        1,
    );
    println!("crossing diagonals: {}", verify(&crossing).to_json());

    // A drawing that never covers one of its graph's edges.
    let incomplete = LayeredDrawing::new_unchecked(
        GraphSpec::complete(3),
        vec![pt(0, 0), pt(4, 0), pt(1, 3)],
        vec![(0, 1, 0), (1, 2, 0)],
        1,
    );
    println!("missing edge: {}", verify(&incomplete).to_json());

    // Round-trip through the serialized document format.
    let json = good.to_json();
    let back = LayeredDrawing::from_json(&json).unwrap();
    assert_eq!(json, back.to_json());
    println!("document round-trip stable: {} bytes", json.len());
}

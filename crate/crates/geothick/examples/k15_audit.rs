//! Audit random 15-point sets: every three-triangulation cover stays
//! under its hull-size budget, and the forced-edge certificates hold.
//!
//!     cargo run --release --example k15_audit [trials]

use geothick::{audit_three_cover, audit_trials, coverage_budget, random_triangular_point_set};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("trials must be an integer"))
        .unwrap_or(200);

    for h in [3, 4, 5, 8, 15] {
        let b = coverage_budget(15, h).unwrap();
        println!(
            "hull {h}: 3x{} + {} shared = cap {}",
            b.per_triangulation_cap, b.forced_shared, b.total_cap
        );
    }

    let summary = audit_trials(trials, 42, 1);
    println!("{}", serde_json::to_string_pretty(&summary).unwrap());
    assert!(summary.all_within_budget);

    // One concrete triangular-hull set in detail.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let report = loop {
        let points = random_triangular_point_set(&mut rng);
        if let Ok(r) = audit_three_cover(&points) {
            break r;
        }
    };
    println!(
        "triangular-hull sample: forced edges {:?}, greedy cover {} <= {}",
        report.forced_edges, report.greedy_covered, report.budget.total_cap
    );
}

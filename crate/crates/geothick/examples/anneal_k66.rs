//! Rediscover a two-layer drawing of K_{6,6} by simulated annealing.
//! The walk scores placements with fast integer predicates; the result
//! is only accepted after exact re-verification.
//!
//!     cargo run --release --example anneal_k66 [seed]

use geothick::{search_placement, verify, GraphSpec, SearchConfig, SearchStatus};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be an integer"))
        .unwrap_or(42);

    let config = SearchConfig::for_target(2, seed);
    let outcome = search_placement(&GraphSpec::bipartite(6, 6), &config).expect("valid config");
    println!(
        "restarts {} / steps {} / verifier calls {}",
        outcome.stats.restarts, outcome.stats.steps, outcome.stats.verifier_calls
    );
    match outcome.status {
        SearchStatus::Found(d) => {
            assert!(verify(&d).valid);
            println!("found a verified {}-layer drawing:", d.layer_count());
            println!("{}", d.to_json());
        }
        SearchStatus::Exhausted { best_layers_seen, .. } => {
            println!("budget exhausted; best verified placement used {best_layers_seen} layers");
        }
    }
}

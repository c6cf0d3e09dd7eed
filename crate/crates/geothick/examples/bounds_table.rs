//! The lower/upper bound table for complete graphs, plus the values
//! where the integer-maximized counting bound beats its closed form.
//!
//!     cargo run --release --example bounds_table [n_max]

use geothick::{
    bounds_table_text, geo_lower_bound, geo_lower_bound_closed_form, separator_excess_values,
    separator_terms,
};

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n_max must be an integer"))
        .unwrap_or(100);

    print!("{}", bounds_table_text(n_max));

    // The lower bound for n >= 12 maximizes a ratio over an integer
    // parameter; show the witness for one value.
    if n_max >= 32 {
        let t = separator_terms(32).expect("n is large enough");
        println!(
            "\nn=32 witness: x={} gives {}/{} -> lower bound {}",
            t.x,
            t.numerator,
            t.denominator,
            geo_lower_bound(32)
        );
    }

    let excess = separator_excess_values(1000);
    println!(
        "closed form ⌈(3−√7)/2·n + 0.342⌉ is exact except at {} of n ≤ 1000; first: {:?}",
        excess.len(),
        &excess[..excess.len().min(6)]
    );
    let _ = geo_lower_bound_closed_form(100).expect("closed form defined for n >= 12");
}

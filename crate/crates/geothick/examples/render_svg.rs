//! Render a drawing to SVG, combined and one file per layer.
//!
//!     cargo run --release --example render_svg [n] [out_dir]

use geothick::{complete_layout, render_split_svgs, render_svg, RenderStyle};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args
        .next()
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(12);
    let out_dir = args.next().unwrap_or_else(|| "/tmp".into());

    let drawing = complete_layout(n).expect("construction failed");
    let style = RenderStyle::default();

    let combined = format!("{out_dir}/k{n}.svg");
    std::fs::write(&combined, render_svg(&drawing, &style)).expect("write failed");
    println!("{combined}: {} layers in one image", drawing.layer_count());

    for (layer, svg) in render_split_svgs(&drawing, &style).into_iter().enumerate() {
        let path = format!("{out_dir}/k{n}-layer{layer}.svg");
        std::fs::write(&path, svg).expect("write failed");
        println!("{path}");
    }
}

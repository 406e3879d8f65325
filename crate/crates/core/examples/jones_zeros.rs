//! Zeros of V(A_50) hug the unit circle; the zeros of V(B_42) sit near an arc
//! plus a real segment. Writes CSV and SVG files the way `knot-zeros zeros` does.
//!
//! ```text
//! cargo run --release --example jones_zeros -- /tmp/zeros
//! ```

use std::path::PathBuf;

use knot_zeros::asymptotics;
use knot_zeros::cli;
use knot_zeros::graph::Family;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;

    for (family, n) in [(Family::A, 50), (Family::B, 42), (Family::F, 63)] {
        let zs = asymptotics::jones_zeros(family, n).expect("root finder converges");
        let (lo, hi) = zs
            .iter()
            .map(|z| z.norm())
            .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| (lo.min(r), hi.max(r)));
        println!("{family}_{n}: {} zeros, {lo:.4} <= |t| <= {hi:.4}", zs.len());

        let csv = dir.join(format!("zeros_{family}{n}.csv"));
        std::fs::write(&csv, cli::zeros_csv(&zs))?;
        let svg = dir.join(format!("zeros_{family}{n}.svg"));
        let marks = asymptotics::accumulation_annotations(family);
        std::fs::write(
            &svg,
            cli::render_svg(&format!("zeros of V for {family}_{n}"), &zs, &marks, true),
        )?;
        println!("    wrote {} and {}", csv.display(), svg.display());
    }
    Ok(())
}

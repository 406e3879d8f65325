//! Runs the reproduction suite and prints one line per criterion.
//!
//! ```text
//! cargo run --release --example reproduce -- paper
//! ```

use knot_zeros::verify::{self, Suite, DEFAULT_SEED};

fn main() {
    let suite: Suite = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("quick")
        .parse()
        .unwrap_or_else(|e| panic!("{e}"));
    for report in verify::run_suite(suite, DEFAULT_SEED) {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {}", report.id, report.title);
    }
}

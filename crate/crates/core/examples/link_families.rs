//! Diagram data and associated graphs for the first few members of each family.
//!
//! ```text
//! cargo run --example link_families
//! ```

use knot_zeros::graph::{self, Family};

fn main() {
    for family in Family::ALL {
        println!("family {family} (graph kind {})", family.graph_kind());
        for n in family.params(family.min_n(), family.min_n() + 4) {
            let link = graph::link_presentation(family, n).expect("valid family member");
            println!(
                "  n = {n:>2}: crossings {:>2}, writhe {:>3}, components {}, graph {} vertices / {} edges",
                link.crossings,
                link.writhe,
                link.n_components,
                link.graph.vertex_count(),
                link.graph.edge_count(),
            );
        }
    }

    // graphs round-trip through the same JSON the CLI reads
    let g = graph::link_presentation(Family::F, 5).unwrap().graph;
    let text = g.to_json();
    println!("\nF_5 graph as JSON: {text}");
    assert_eq!(graph::Multigraph::from_json(&text).unwrap(), g);
}

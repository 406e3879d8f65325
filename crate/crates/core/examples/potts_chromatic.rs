//! The Potts partition function two ways, and chromatic polynomials
//! cross-checked against counting colourings.

use knot_zeros::graph::{self, GraphKind, Multigraph};
use knot_zeros::tutte;
use num_complex::Complex64 as C;

fn main() {
    let triangle = Multigraph::circuit(3).unwrap();
    let p = tutte::chromatic(&triangle);
    println!("P(C_3, q) = {}", p.display_var("q"));
    for q in 0..=4 {
        println!("    {q} colours: {} proper colourings", p.eval_integer(q));
    }

    // Antiferromagnetic zero temperature (v = -1) reduces Z to P(G, q).
    let z = tutte::potts_partition(&triangle, C::new(2.0, 0.0), C::new(-1.0, 0.0)).unwrap();
    println!("Z(C_3, q = 2, v = -1) = {}", z.value());

    let wheel = graph::build_graph(GraphKind::Wheel, 5).unwrap();
    for (q, v) in [
        (C::new(3.0, 0.0), C::new(1.0, 0.0)),
        (C::new(0.5, 1.5), C::new(-0.7, 0.2)),
    ] {
        let z = tutte::potts_partition(&wheel, q, v).unwrap();
        println!(
            "Z(Wheel_5, q = {q}, v = {v}) = {:.6} (cluster sum and Tutte route differ by {:.1e})",
            z.value(),
            z.relative_disagreement()
        );
    }

    let p = tutte::chromatic(&wheel);
    println!("P(Wheel_5, q) = {}", p.display_var("q"));
}

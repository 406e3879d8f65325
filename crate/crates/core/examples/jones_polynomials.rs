//! Jones polynomials of the families from their Tutte polynomials, checked
//! against the closed forms and the structural laws of alternating links.

use knot_zeros::graph::{self, Family, Multigraph, Sign, SignedMultigraph};
use knot_zeros::jones;

fn main() {
    for (family, n) in [(Family::A, 3), (Family::B, 5), (Family::E, 2), (Family::F, 7)] {
        let link = graph::link_presentation(family, n).unwrap();
        let v = jones::jones_alternating(&link).unwrap();
        assert_eq!(v, jones::jones_family_closed(family, n).unwrap());
        let report = jones::structural_facts(&link, &v).unwrap();
        println!("V({family}_{n}) = {}", v.pretty());
        println!(
            "    span {} over {} crossings, leading sign {:+}, V(e^(2πi/3)) = {:.6}",
            report.degree_span, report.crossings, report.leading_sign, report.special_value
        );
        assert!(report.violations().is_empty());
    }

    // Mirror images: t -> 1/t.
    let trefoil = jones::jones_family_closed(Family::A, 3).unwrap();
    println!("\nmirror trefoil: {}", jones::mirror(&trefoil).pretty());

    // Non-alternating diagrams go through the signed Tutte polynomial. A
    // single negative edge on two vertices with writhe +1 is a one-crossing
    // unknot diagram.
    let edge = Multigraph::new(2, [(0, 1)]).unwrap();
    let signed = SignedMultigraph::new(edge, vec![Sign::Minus]).unwrap();
    let v = jones::jones_nonalternating(&signed, 1).unwrap();
    println!("one-crossing unknot: {}", v.pretty());
}

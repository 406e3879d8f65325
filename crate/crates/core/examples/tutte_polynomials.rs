//! Three independent routes to the Tutte polynomial, and planar duality.

use knot_zeros::graph::{self, GraphKind, Multigraph};
use knot_zeros::tutte;

fn main() {
    let square = Multigraph::circuit(4).unwrap();
    let by_enumeration = tutte::tutte_bruteforce(&square).unwrap();
    println!("T(C_4) = {by_enumeration}");

    // Every named kind: enumeration, deletion-contraction and (where one
    // exists) the closed form agree.
    for kind in GraphKind::ALL {
        let n = 5;
        let g = graph::build_graph(kind, n).unwrap();
        let dc = tutte::tutte_dc(&g);
        if let Ok(closed) = tutte::tutte_family_closed(kind, n) {
            assert_eq!(dc, closed);
        }
        let brute = tutte::tutte_bruteforce(&g).ok();
        if let Some(b) = &brute {
            assert_eq!(b, &dc);
        }
        println!(
            "{kind}_{n}: {} edges, {} terms, T(1,1) = {} spanning trees",
            g.edge_count(),
            dc.len(),
            dc.eval_integer(1, 1)
        );
    }

    // The wheel is self-dual, so its Tutte polynomial is symmetric in x and y.
    let (g, dual) = graph::dual_pair(GraphKind::Wheel, 6).unwrap();
    let t = tutte::tutte_dc(&g);
    assert_eq!(t, tutte::tutte_dc(&dual).swap_xy());
    println!("\nT(Wheel_6) = {t}");

    // Large members are cheap through the memoized recursion.
    let mut solver = tutte::DcSolver::default();
    let big = graph::build_graph(GraphKind::Hammock3, 20).unwrap();
    let tb = solver.tutte(&big);
    println!(
        "H3_20: {} edges, T(2,2) = 2^{}, cache holds {} graphs",
        big.edge_count(),
        big.edge_count(),
        solver.cache_len()
    );
    assert_eq!(
        tb.eval_integer(2, 2),
        num_bigint::BigInt::from(2).pow(big.edge_count() as u32)
    );
}

//! The equimodular locus: where two dominant λ terms have equal modulus.
//! Traces family B, finds its endpoints, and labels a few points by region.

use knot_zeros::asymptotics::{self, Window};
use knot_zeros::graph::Family;
use num_complex::Complex64 as C;

fn main() {
    let sys = asymptotics::lambda_system(Family::B);
    let points = asymptotics::trace_system(&sys, Window::Radial { r_max: 10.0 }, 600).unwrap();
    println!("B locus: {} points", points.len());
    let ends = asymptotics::locus_endpoints(&sys, &points, 0.05);
    for z in &ends {
        println!("    endpoint {:.6} {:+.6}i", z.re, z.im);
    }

    // The pair that ties tells which branch of the locus a point lies on.
    let on_segment = points.iter().filter(|p| p.im.abs() < 1e-9).count();
    println!("    {on_segment} points on the real axis, the rest on the arc");

    // E: the locus crosses the imaginary axis at |t| = 1/sqrt(3).
    let e = asymptotics::lambda_system(Family::E);
    for p in asymptotics::scan_ray(&e, std::f64::consts::FRAC_PI_2, 10.0, 2000) {
        println!(
            "E locus meets the imaginary axis at |t| = {:.10} (1/sqrt 3 = {:.10})",
            p.im,
            1.0 / 3f64.sqrt()
        );
    }

    // F has several regions; two of them are told apart only by whether
    // they connect to t = 1 through points where the same term dominates.
    for t in [
        C::new(1.2, 0.05),
        C::new(0.1, 0.1),
        C::new(-1.0, 1.5),
        C::new(-1.0, -1.5),
        C::new(0.3, 1.0),
        C::new(0.3, -1.0),
        C::new(0.55, 1.075),
        C::new(0.55, -1.075),
    ] {
        match asymptotics::region_classify(Family::F, t) {
            Ok(c) => println!("F at t = {t}: region {}, λ{} dominates", c.region, c.dominant + 1),
            Err(e) => println!("F at t = {t}: {e}"),
        }
    }

    // Far from the origin |U| = 1 for family A; inside the unit disk |U| = 1/|t|.
    for t in [C::new(0.0, 3.0), C::new(0.25, 0.25)] {
        println!("|U_A({t})| = {:.6}", asymptotics::u_magnitude(Family::A, t).unwrap());
    }
}

use knot_zeros::asymptotics::{self, Window};
use knot_zeros::graph::{self, Family};
use knot_zeros::jones;
use num_complex::Complex64 as C;

/// `|p(z)|` relative to the evaluation scale `sum |a_i| |z|^i`. Relative to
/// the largest coefficient alone the bound cannot hold for zeros well outside
/// the unit disk: rounding `z` to the f64 grid already moves `p(z)` by more.
fn relative_residual(family: Family, n: usize, z: C) -> f64 {
    let v = jones::jones_family_closed(family, n).unwrap();
    let (_, p) = v.strip_monomial().unwrap();
    p.eval(z).norm() / asymptotics::evaluation_scale(&p.dense_f64(), z)
}

#[test]
fn zero_counts_and_residuals() {
    for (family, n) in [
        (Family::A, 20),
        (Family::A, 50),
        (Family::B, 42),
        (Family::E, 42),
        (Family::F, 63),
    ] {
        let link = graph::link_presentation(family, n).unwrap();
        let zs = asymptotics::jones_zeros(family, n).unwrap();
        assert_eq!(zs.len(), link.crossings, "{family}_{n}");
        for &z in &zs {
            let r = relative_residual(family, n, z);
            assert!(r <= 1e-8, "{family}_{n} at {z}: {r:e}");
        }
    }
}

#[test]
fn zeros_are_closed_under_conjugation() {
    for (family, n) in [(Family::A, 31), (Family::B, 20), (Family::E, 15), (Family::F, 41)] {
        let zs = asymptotics::jones_zeros(family, n).unwrap();
        for z in &zs {
            let partner = zs.iter().map(|w| (w - z.conj()).norm()).fold(f64::INFINITY, f64::min);
            assert!(
                partner <= 1e-8 * z.norm().max(1.0),
                "{family}_{n}: {z} has no conjugate"
            );
        }
    }
}

fn distance_to_omega(family: Family, n: usize) -> f64 {
    let w = jones::omega();
    let zs = asymptotics::jones_zeros(family, n).unwrap();
    [w, w.conj()]
        .iter()
        .map(|target| zs.iter().map(|z| (z - target).norm()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

#[test]
fn f_knots_have_zeros_at_the_cube_roots_of_unity() {
    for n in (21..=63).step_by(6) {
        let d = distance_to_omega(Family::F, n);
        assert!(d <= 0.05, "F_{n}: {d}");
    }
}

#[test]
fn a_knot_zeros_close_in_on_the_cube_roots_of_unity() {
    // The zeros of A_n sit near the unit circle about 2π/n apart, so the
    // nearest one to e^{2πi/3} can be up to half a gap away: within 0.05
    // only once n >= 58 (A_21 is 0.112 away).
    for n in 20..=80 {
        let d = distance_to_omega(Family::A, n);
        assert!(d <= std::f64::consts::PI / n as f64, "A_{n}: {d}");
        if n >= 58 {
            assert!(d <= 0.05, "A_{n}: {d}");
        }
    }
}

#[test]
fn lambda_form_reproduces_exact_values() {
    for family in Family::ALL {
        for n in family.params(5, 12) {
            let v = jones::jones_family_closed(family, n).unwrap();
            for k in 0..40 {
                let t = C::from_polar(0.55 + 0.035 * k as f64, -2.9 + 0.15 * k as f64);
                let exact = v.eval(t).unwrap();
                let approx = asymptotics::reconstruct_eval(family, n, t).unwrap();
                assert!(
                    (exact - approx).norm() <= 1e-9 * exact.norm().max(1e-300),
                    "{family}_{n} at {t}"
                );
            }
        }
    }
}

#[test]
fn e_locus_satisfies_its_polar_equation() {
    // |λ_1| = |λ_2| for E: |1 - t| = |1 + t^2| / |t|, i.e. with t = r e^{iθ}
    // r^2 (1 - 2r cos θ + r^2) = 1 + 2 r^2 cos 2θ + r^4.
    let points = asymptotics::trace_locus(Family::E, Window::Radial { r_max: 50.0 }, 800).unwrap();
    assert!(!points.is_empty());
    for p in &points {
        let (r, th) = (p.t().norm(), p.t().arg());
        let lhs = r * r * (1.0 - 2.0 * r * th.cos() + r * r);
        let rhs = 1.0 + 2.0 * r * r * (2.0 * th).cos() + r.powi(4);
        assert!(
            (lhs - rhs).abs() <= 1e-8 * rhs.abs().max(1.0) * r.max(1.0).powi(2),
            "{p:?}"
        );
    }
}

#[test]
fn mirrored_e_locus_is_the_inverted_locus() {
    let window = Window::Radial { r_max: 5.0 };
    let sys = asymptotics::lambda_system(Family::E);
    let direct: Vec<C> = asymptotics::trace_system(&sys, window, 800)
        .unwrap()
        .iter()
        .map(|p| p.t().inv())
        .collect();
    let mirrored: Vec<C> = asymptotics::trace_system(&sys.mirrored(), window, 800)
        .unwrap()
        .iter()
        .map(|p| p.t())
        .collect();
    let d = asymptotics::hausdorff(&direct, &mirrored);
    assert!(d <= 1e-4, "Hausdorff distance {d}");
}

#[test]
fn locus_csv_is_deterministic() {
    let a = asymptotics::trace_locus(Family::F, Window::default_for(Family::F), 300).unwrap();
    let b = asymptotics::trace_locus(Family::F, Window::default_for(Family::F), 300).unwrap();
    assert_eq!(knot_zeros::cli::locus_csv(&a), knot_zeros::cli::locus_csv(&b));
}

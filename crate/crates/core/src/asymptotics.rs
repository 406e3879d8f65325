//! Large-crossing behaviour of the four families: the λ-decomposition
//! `V = Σ c_j λ_j^m`, polynomial zeros, the equimodular locus where the
//! dominant λ terms tie, region labels and the per-vertex growth `|U|`.

use std::collections::{HashSet, VecDeque};
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Family, GraphError};
use crate::jones::{self, JonesError};
use crate::poly::{IntPoly, PolyError};

/// Convergence tolerance on Aberth updates, relative to the root modulus.
pub const ROOT_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 500;
/// Bisection along a scan path stops once `|log|λ_j| - log|λ_k||` is below this.
pub const TIE_TOLERANCE: f64 = 1e-10;
/// A tied pair must be within this (relative) distance of the largest modulus.
pub const DOMINANCE_TOLERANCE: f64 = 1e-8;
pub const MIN_RESOLUTION: usize = 100;
pub const DEFAULT_RESOLUTION: usize = 2000;

type C = Complex64;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticsError {
    #[error("{family} λ-form is not defined at t = {t}: {reason}")]
    ExcludedPoint { family: Family, t: C, reason: &'static str },
    #[error("root finder did not converge after {sweeps} sweeps for {poly}")]
    NonConvergence { poly: String, sweeps: usize },
    #[error("root finding needs degree >= 1 and a nonzero constant term: {0}")]
    DegeneratePolynomial(String),
    #[error("resolution {0} is below the minimum of {MIN_RESOLUTION}")]
    Resolution(usize),
    #[error("t = {0} lies on the equimodular locus")]
    OnLocus(C),
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The λ terms and coefficients of one family, optionally viewed in the
/// `s = 1/t` plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaSystem {
    pub family: Family,
    pub term_count: usize,
    /// `|U| = max_j |λ_j|^u_power`.
    pub u_power: f64,
    mirrored: bool,
}

pub fn lambda_system(family: Family) -> LambdaSystem {
    let (term_count, u_power) = match family {
        Family::A => (2, 1.0),
        Family::B => (3, 1.0),
        Family::E => (2, 1.0),
        Family::F => (3, 0.5),
    };
    LambdaSystem {
        family,
        term_count,
        u_power,
        mirrored: false,
    }
}

impl LambdaSystem {
    /// The same terms as functions of `s = 1/t`.
    pub fn mirrored(&self) -> LambdaSystem {
        LambdaSystem {
            mirrored: !self.mirrored,
            ..*self
        }
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    fn arg(&self, t: C) -> C {
        if self.mirrored {
            t.inv()
        } else {
            t
        }
    }

    /// Power to which every λ is raised for parameter `n`.
    pub fn exponent_of(&self, n: usize) -> u32 {
        match self.family {
            Family::A | Family::B => n as u32 - 1,
            Family::E => n as u32,
            Family::F => (n as u32 - 1) / 2,
        }
    }

    /// Terms that are the two roots of one quadratic; their labelling is by
    /// modulus and must be tracked by continuity along a path.
    pub fn branch_pair(&self) -> Option<(usize, usize)> {
        match self.family {
            Family::B => Some((1, 2)),
            _ => None,
        }
    }

    /// λ values at `t`. The two roots in the `B` system use the principal
    /// square root and are ordered by modulus, largest first.
    pub fn lambdas(&self, t: C) -> Vec<C> {
        let t = self.arg(t);
        let one = C::new(1.0, 0.0);
        let ti = t.inv();
        match self.family {
            Family::A => vec![one, -ti],
            Family::B => {
                let s = one - t - ti;
                let root = (s * s - 4.0).sqrt();
                let (a, b) = ((s + root) * 0.5, (s - root) * 0.5);
                if a.norm() >= b.norm() {
                    vec![one, a, b]
                } else {
                    vec![one, b, a]
                }
            }
            Family::E => {
                let sq = t.sqrt();
                vec![(ti - 1.0) / sq, -(one + ti * ti) / sq]
            }
            Family::F => vec![one, one - ti, ti * ti - ti + one - t],
        }
    }

    /// Coefficients `c_j(t)` for parameter `n` (the `A` prefactor depends on
    /// the parity of `n`).
    pub fn coefficients(&self, t: C, n: usize) -> Vec<C> {
        let t = self.arg(t);
        let one = C::new(1.0, 0.0);
        let ti = t.inv();
        match self.family {
            Family::A => {
                let tk = if n % 2 == 1 { one } else { t.powi(3) };
                let d = one + t;
                vec![tk * (one + ti * ti) / d, tk * (one - ti) * (one + t + ti) / d]
            }
            Family::B => vec![t + ti, one, one],
            Family::E => {
                let sq = t.sqrt();
                let d = one + t;
                vec![-sq * (one + t + ti) / d, -sq / d]
            }
            Family::F => vec![one, t + ti, one],
        }
    }

    fn excluded(&self, t: C) -> Option<&'static str> {
        if t.norm() == 0.0 || !t.is_finite() {
            return Some("t must be finite and nonzero");
        }
        let t = self.arg(t);
        match self.family {
            Family::A | Family::E if (t + 1.0).norm() < 1e-12 => Some("coefficients have a pole at t = -1"),
            Family::E if t.re < 0.0 && t.im.abs() <= 1e-14 * t.norm() => {
                Some("half-integer powers are cut along the negative real axis")
            }
            _ => None,
        }
    }
}

/// `Σ c_j(t) λ_j(t)^m` for the family's exponent `m`.
pub fn reconstruct_eval(family: Family, n: usize, t: C) -> Result<C, AsymptoticsError> {
    family.check(n)?;
    let sys = lambda_system(family);
    if let Some(reason) = sys.excluded(t) {
        return Err(AsymptoticsError::ExcludedPoint { family, t, reason });
    }
    let m = sys.exponent_of(n) as i32;
    Ok(sys
        .lambdas(t)
        .into_iter()
        .zip(sys.coefficients(t, n))
        .map(|(l, c)| c * l.powi(m))
        .sum())
}

/// `max_j |λ_j(t)|^p`.
pub fn u_magnitude(family: Family, t: C) -> Result<f64, AsymptoticsError> {
    let sys = lambda_system(family);
    if t.norm() == 0.0 || !t.is_finite() {
        return Err(AsymptoticsError::ExcludedPoint {
            family,
            t,
            reason: "t must be finite and nonzero",
        });
    }
    let max = sys.lambdas(t).iter().map(|l| l.norm()).fold(0.0, f64::max);
    Ok(max.powf(sys.u_power))
}

// ---------------------------------------------------------------------------
// Root finding

/// Double-double arithmetic (an unevaluated sum `hi + lo`, about 106 bits).
/// Jones polynomials of a few dozen crossings have alternating integer
/// coefficients near 2^53, and plain f64 Horner cannot separate their
/// clustered zeros from points a sizeable distance away.
mod dd {
    use num_bigint::BigInt;
    use num_traits::FromPrimitive;

    use super::C;
    use crate::poly::big_to_f64;

    #[derive(Debug, Clone, Copy, Default)]
    pub struct Dd {
        hi: f64,
        lo: f64,
    }

    fn two_sum(a: f64, b: f64) -> (f64, f64) {
        let s = a + b;
        let bb = s - a;
        (s, (a - (s - bb)) + (b - bb))
    }

    fn quick_two_sum(a: f64, b: f64) -> Dd {
        let s = a + b;
        Dd { hi: s, lo: b - (s - a) }
    }

    impl Dd {
        pub fn from_f64(x: f64) -> Dd {
            Dd { hi: x, lo: 0.0 }
        }

        /// Exact for integers below 2^106.
        pub fn from_big(c: &BigInt) -> Dd {
            let hi = big_to_f64(c);
            let rest = BigInt::from_f64(hi).map(|h| c - h).unwrap_or_default();
            quick_two_sum(hi, big_to_f64(&rest))
        }

        pub fn to_f64(self) -> f64 {
            self.hi + self.lo
        }

        pub fn add(self, o: Dd) -> Dd {
            let (s, e) = two_sum(self.hi, o.hi);
            let (t, f) = two_sum(self.lo, o.lo);
            let r = quick_two_sum(s, e + t);
            quick_two_sum(r.hi, r.lo + f)
        }

        pub fn neg(self) -> Dd {
            Dd {
                hi: -self.hi,
                lo: -self.lo,
            }
        }

        pub fn sub(self, o: Dd) -> Dd {
            self.add(o.neg())
        }

        pub fn mul(self, o: Dd) -> Dd {
            let p = self.hi * o.hi;
            let e = self.hi.mul_add(o.hi, -p);
            quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi))
        }
    }

    #[derive(Debug, Clone, Copy, Default)]
    pub struct Cdd {
        re: Dd,
        im: Dd,
    }

    impl Cdd {
        pub fn from_c(z: C) -> Cdd {
            Cdd {
                re: Dd::from_f64(z.re),
                im: Dd::from_f64(z.im),
            }
        }

        pub fn to_c(self) -> C {
            C::new(self.re.to_f64(), self.im.to_f64())
        }

        pub fn add_real(self, a: Dd) -> Cdd {
            Cdd {
                re: self.re.add(a),
                im: self.im,
            }
        }

        pub fn add(self, o: Cdd) -> Cdd {
            Cdd {
                re: self.re.add(o.re),
                im: self.im.add(o.im),
            }
        }

        pub fn mul(self, o: Cdd) -> Cdd {
            Cdd {
                re: self.re.mul(o.re).sub(self.im.mul(o.im)),
                im: self.re.mul(o.im).add(self.im.mul(o.re)),
            }
        }
    }

    /// Value and derivative at `z`, coefficients low to high.
    pub fn horner(coeffs: &[Dd], z: C) -> (C, C) {
        let z = Cdd::from_c(z);
        let mut p = Cdd::default();
        let mut dp = Cdd::default();
        for &a in coeffs.iter().rev() {
            dp = dp.mul(z).add(p);
            p = p.mul(z).add_real(a);
        }
        (p.to_c(), dp.to_c())
    }

    /// Unit roundoff of the double-double format.
    pub const EPSILON: f64 = 4.93e-32;
}

/// `a / b` without forming `|b|^2`, which overflows for high-degree
/// polynomials evaluated far from the origin.
fn safe_div(a: C, b: C) -> C {
    let s = b.re.abs().max(b.im.abs());
    if s == 0.0 {
        return a / b;
    }
    (a / s) / (b / s)
}

/// `Σ |a_i| |z|^i`, the natural scale for the rounding error of `p(z)`.
pub fn evaluation_scale(coeffs: &[f64], z: C) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, a| acc * r + a.abs())
}

/// Positive root of `|a_n| r^n - Σ_{i<n} |a_i| r^i`; every root of the
/// polynomial lies in the disc of this radius.
pub fn cauchy_radius(coeffs: &[f64]) -> f64 {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].abs();
    let f = |r: f64| lead * r.powi(n as i32) - coeffs[..n].iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    let mut hi = 1.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

fn angle_key(z: &C) -> (f64, f64) {
    (z.arg(), z.norm())
}

pub fn sort_by_angle(zs: &mut [C]) {
    zs.sort_by(|a, b| {
        let (ta, ra) = angle_key(a);
        let (tb, rb) = angle_key(b);
        ta.total_cmp(&tb).then(ra.total_cmp(&rb))
    });
}

/// All complex roots by Aberth–Ehrlich iteration from a circle of the Cauchy
/// radius, followed by Newton polishing. Sorted by angle, then modulus.
pub fn find_roots(p: &IntPoly) -> Result<Vec<C>, AsymptoticsError> {
    let degree = p.degree().unwrap_or(0) as usize;
    if degree == 0 || p.coeff(0) == 0.into() {
        return Err(AsymptoticsError::DegeneratePolynomial(p.display_var("t").to_string()));
    }
    let coeffs = p.dense_f64();
    let exact: Vec<dd::Dd> = (0..=degree as u32).map(|k| dd::Dd::from_big(&p.coeff(k))).collect();
    let lead = coeffs[degree];
    let monic: Vec<f64> = coeffs.iter().map(|a| a / lead).collect();
    let radius = cauchy_radius(&monic);
    let mut z: Vec<C> = (0..degree)
        .map(|k| C::from_polar(radius, 2.0 * PI * k as f64 / degree as f64 + 0.4))
        .collect();
    let mut done = vec![false; degree];
    // Horner's backward error bound: below this a residual is pure rounding.
    let rounding_floor = 2.0 * (degree + 1) as f64 * dd::EPSILON;
    let mut sweeps = 0;
    while done.iter().any(|d| !d) {
        if sweeps == MAX_SWEEPS {
            return Err(AsymptoticsError::NonConvergence {
                poly: p.display_var("t").to_string(),
                sweeps,
            });
        }
        sweeps += 1;
        for i in 0..degree {
            if done[i] {
                continue;
            }
            let (v, dv) = dd::horner(&exact, z[i]);
            if v.norm() <= rounding_floor * evaluation_scale(&coeffs, z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = safe_div(v, dv);
            let repulsion: C = (0..degree).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = safe_div(ratio, C::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= ROOT_TOLERANCE * z[i].norm().max(1.0) {
                done[i] = true;
            }
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = dd::horner(&exact, *zi);
            let next = *zi - safe_div(v, dv);
            if next.is_finite() && dd::horner(&exact, next).0.norm() < v.norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    sort_by_angle(&mut z);
    Ok(z)
}

/// Zeros of the exact Jones polynomial after the monomial prefactor is removed.
pub fn jones_zeros(family: Family, n: usize) -> Result<Vec<C>, AsymptoticsError> {
    let v = jones::jones_family_closed(family, n)?;
    let (_, poly) = v.strip_monomial()?;
    find_roots(&poly)
}

// ---------------------------------------------------------------------------
// Equimodular locus

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocusPoint {
    pub re: f64,
    pub im: f64,
    /// Zero-based indices of the tied dominant terms.
    pub tied_pair: (usize, usize),
    /// A third term ties as well (recorded, not classified further).
    pub triple: bool,
}

impl LocusPoint {
    pub fn t(&self) -> C {
        C::new(self.re, self.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Window {
    /// Annulus `1/r_max <= |t| <= r_max`, scanned along rays and circles.
    Radial { r_max: f64 },
    /// Rectangle scanned along horizontal and vertical lines.
    Rect {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    },
}

impl Window {
    pub fn default_for(family: Family) -> Window {
        match family {
            Family::F => Window::Rect {
                re_min: -2.0,
                re_max: 2.0,
                im_min: -2.0,
                im_max: 2.0,
            },
            _ => Window::Radial { r_max: 10.0 },
        }
    }
}

fn pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    pairs
}

/// Relabels `fresh` to continue `prev`, swapping the branch pair if that is
/// the closer match.
fn align(sys: &LambdaSystem, prev: &[C], mut fresh: Vec<C>) -> Vec<C> {
    if let Some((a, b)) = sys.branch_pair() {
        let keep = (fresh[a] - prev[a]).norm() + (fresh[b] - prev[b]).norm();
        let swap = (fresh[a] - prev[b]).norm() + (fresh[b] - prev[a]).norm();
        if swap < keep {
            fresh.swap(a, b);
        }
    }
    fresh
}

fn gap(l: &[C], j: usize, k: usize) -> f64 {
    l[j].norm().ln() - l[k].norm().ln()
}

fn finite(l: &[C]) -> bool {
    l.iter().all(|z| z.is_finite())
}

fn locus_point(sys: &LambdaSystem, t: C, l: &[C], pair: (usize, usize)) -> Option<LocusPoint> {
    let (j, k) = pair;
    if gap(l, j, k).abs() > TIE_TOLERANCE {
        return None;
    }
    let max = l.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = DOMINANCE_TOLERANCE * max;
    if l[j].norm() < max - tol || l[k].norm() < max - tol {
        return None;
    }
    let triple = (0..sys.term_count)
        .filter(|&i| i != j && i != k)
        .any(|i| (l[i].norm() - max).abs() <= tol);
    Some(LocusPoint {
        re: t.re,
        im: t.im,
        tied_pair: pair,
        triple,
    })
}

/// Finds tie points of dominant λ terms along the path `s -> path(s)` sampled
/// at `params`, bisecting each sign change of `log|λ_j| - log|λ_k|`.
pub fn scan_path<P>(sys: &LambdaSystem, params: &[f64], path: P) -> Vec<LocusPoint>
where
    P: Fn(f64) -> C,
{
    let pairs = pair_order(sys.term_count);
    let mut out = Vec::new();
    let mut prev: Option<(f64, Vec<C>)> = None;
    for &s in params {
        let raw = sys.lambdas(path(s));
        if !finite(&raw) {
            prev = None;
            continue;
        }
        let cur = match &prev {
            Some((_, l0)) => align(sys, l0, raw),
            None => raw,
        };
        if let Some((s0, l0)) = &prev {
            let mut found: Vec<LocusPoint> = Vec::new();
            for &(j, k) in &pairs {
                let (d0, d1) = (gap(l0, j, k), gap(&cur, j, k));
                if !(d0.is_finite() && d1.is_finite()) || d0.signum() == d1.signum() || d0 == 0.0 {
                    continue;
                }
                if let Some(p) = bisect(sys, &path, (*s0, l0.clone(), d0), (s, cur.clone()), (j, k)) {
                    if !found
                        .iter()
                        .any(|q| (q.t() - p.t()).norm() <= 1e-8 * p.t().norm().max(1.0))
                    {
                        found.push(p);
                    }
                }
            }
            out.extend(found);
        }
        prev = Some((s, cur));
    }
    out
}

fn bisect<P>(
    sys: &LambdaSystem,
    path: &P,
    lo: (f64, Vec<C>, f64),
    hi: (f64, Vec<C>),
    pair: (usize, usize),
) -> Option<LocusPoint>
where
    P: Fn(f64) -> C,
{
    let (j, k) = pair;
    let (mut a, mut la, da) = lo;
    let mut b = hi.0;
    let mut best = None;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let t = path(mid);
        let raw = sys.lambdas(t);
        if !finite(&raw) {
            return None;
        }
        let lm = align(sys, &la, raw);
        let dm = gap(&lm, j, k);
        best = Some((t, lm.clone(), dm));
        if dm.abs() <= 1e-13 {
            break;
        }
        if dm.signum() == da.signum() {
            a = mid;
            la = lm;
        } else {
            b = mid;
        }
    }
    let (t, l, _) = best?;
    locus_point(sys, t, &l, pair)
}

fn geometric_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

fn linear_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

/// Ray `t = r e^{iθ}`, `1/r_max <= r <= r_max`.
pub fn scan_ray(sys: &LambdaSystem, theta: f64, r_max: f64, samples: usize) -> Vec<LocusPoint> {
    let rs = geometric_grid(1.0 / r_max, r_max, samples);
    let dir = C::from_polar(1.0, theta);
    scan_path(sys, &rs, |r| dir * r)
}

/// Full circle `|t| = r`; sample angles are offset by half a step so the
/// real axis falls strictly between samples.
pub fn scan_circle(sys: &LambdaSystem, r: f64, samples: usize) -> Vec<LocusPoint> {
    let h = 2.0 * PI / samples as f64;
    let thetas: Vec<f64> = (0..=samples).map(|i| -PI + (i as f64 + 0.5) * h).collect();
    scan_path(sys, &thetas, |th| C::from_polar(r, th))
}

/// Straight segment from `a` to `b`.
pub fn scan_segment(sys: &LambdaSystem, a: C, b: C, samples: usize) -> Vec<LocusPoint> {
    let ss = linear_grid(0.0, 1.0, samples);
    scan_path(sys, &ss, |s| a + (b - a) * s)
}

pub fn sort_locus(points: &mut [LocusPoint]) {
    points.sort_by(|p, q| {
        let (tp, rp) = angle_key(&p.t());
        let (tq, rq) = angle_key(&q.t());
        tp.total_cmp(&tq)
            .then(rp.total_cmp(&rq))
            .then(p.tied_pair.cmp(&q.tied_pair))
    });
}

/// Traces the locus of the given λ system inside `window`.
pub fn trace_system(
    sys: &LambdaSystem,
    window: Window,
    resolution: usize,
) -> Result<Vec<LocusPoint>, AsymptoticsError> {
    if resolution < MIN_RESOLUTION {
        return Err(AsymptoticsError::Resolution(resolution));
    }
    let mut points: Vec<LocusPoint> = match window {
        Window::Radial { r_max } => {
            let h = 2.0 * PI / resolution as f64;
            let rays = (0..resolution)
                .into_par_iter()
                .flat_map_iter(|i| scan_ray(sys, -PI + (i as f64 + 0.5) * h, r_max, resolution));
            let circles = geometric_grid(1.0 / r_max, r_max, resolution)
                .into_par_iter()
                .flat_map_iter(|r| scan_circle(sys, r, resolution));
            rays.chain(circles).collect()
        }
        Window::Rect {
            re_min,
            re_max,
            im_min,
            im_max,
        } => {
            let rows = linear_grid(im_min, im_max, resolution + 1)
                .into_par_iter()
                .flat_map_iter(|y| scan_segment(sys, C::new(re_min, y), C::new(re_max, y), resolution + 1));
            let cols = linear_grid(re_min, re_max, resolution + 1)
                .into_par_iter()
                .flat_map_iter(|x| scan_segment(sys, C::new(x, im_min), C::new(x, im_max), resolution + 1));
            rows.chain(cols).collect()
        }
    };
    sort_locus(&mut points);
    Ok(points)
}

pub fn trace_locus(family: Family, window: Window, resolution: usize) -> Result<Vec<LocusPoint>, AsymptoticsError> {
    trace_system(&lambda_system(family), window, resolution)
}

/// Discrete accumulation points that are not part of the traced curves.
pub fn accumulation_annotations(family: Family) -> Vec<C> {
    match family {
        Family::E => vec![C::from_polar(1.0, 2.0 * PI / 3.0), C::from_polar(1.0, -2.0 * PI / 3.0)],
        _ => Vec::new(),
    }
}

fn coincidence(sys: &LambdaSystem, t: C, pair: (usize, usize)) -> C {
    let l = sys.lambdas(t);
    let d = l[pair.0] - l[pair.1];
    d * d
}

/// Newton iteration on `(λ_j - λ_k)^2`, which is analytic even for the
/// branch pair.
fn coincidence_root(sys: &LambdaSystem, start: C, pair: (usize, usize)) -> Option<C> {
    let mut t = start;
    for _ in 0..60 {
        let g = coincidence(sys, t, pair);
        let h = 1e-7 * t.norm().max(1e-3);
        let dg = (coincidence(sys, t + h, pair) - coincidence(sys, t - h, pair)) / (2.0 * h);
        let step = g / dg;
        if !step.is_finite() {
            return None;
        }
        t -= step;
        if step.norm() <= 1e-15 * t.norm().max(1.0) {
            break;
        }
    }
    (coincidence(sys, t, pair).norm() <= 1e-20 && t.is_finite()).then_some(t)
}

/// Ends of locus arcs: points where the tied terms coincide (not merely in
/// modulus) and the traced curve lies on one side only.
pub fn locus_endpoints(sys: &LambdaSystem, points: &[LocusPoint], radius: f64) -> Vec<C> {
    let mut roots: Vec<C> = Vec::new();
    let pairs: HashSet<(usize, usize)> = points.iter().map(|p| p.tied_pair).collect();
    for pair in pairs {
        let starts: Vec<C> = points.iter().filter(|p| p.tied_pair == pair).map(|p| p.t()).collect();
        let found: Vec<C> = starts
            .par_iter()
            .filter_map(|&s| coincidence_root(sys, s, pair))
            .collect();
        for r in found {
            if !roots.iter().any(|q| (q - r).norm() <= 1e-8) {
                roots.push(r);
            }
        }
    }
    let mut ends: Vec<C> = roots
        .into_iter()
        .filter(|&r| {
            let near: Vec<C> = points
                .iter()
                .map(|p| p.t() - r)
                .filter(|d| d.norm() <= radius && d.norm() > 0.0)
                .map(|d| d / d.norm())
                .collect();
            !near.is_empty() && (near.iter().sum::<C>() / near.len() as f64).norm() > 0.5
        })
        .collect();
    sort_by_angle(&mut ends);
    ends
}

/// Symmetric Hausdorff distance between two finite point sets.
pub fn hausdorff(a: &[C], b: &[C]) -> f64 {
    fn directed(a: &[C], b: &[C]) -> f64 {
        a.par_iter()
            .map(|p| b.iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
            .reduce(|| 0.0, f64::max)
    }
    if a.is_empty() || b.is_empty() {
        return if a.is_empty() && b.is_empty() {
            0.0
        } else {
            f64::INFINITY
        };
    }
    directed(a, b).max(directed(b, a))
}

// ---------------------------------------------------------------------------
// Regions

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    R1,
    R2,
    R3,
    R3Star,
    R4,
    R4Star,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::R1 => "R1",
            Region::R2 => "R2",
            Region::R3 => "R3",
            Region::R3Star => "R3*",
            Region::R4 => "R4",
            Region::R4Star => "R4*",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification {
    pub region: Region,
    /// Zero-based index of the strictly dominant term.
    pub dominant: usize,
}

fn dominant_term(sys: &LambdaSystem, t: C) -> Result<usize, AsymptoticsError> {
    let l = sys.lambdas(t);
    if !finite(&l) {
        return Err(AsymptoticsError::ExcludedPoint {
            family: sys.family,
            t,
            reason: "t must be finite and nonzero",
        });
    }
    let mut order: Vec<usize> = (0..l.len()).collect();
    order.sort_by(|&a, &b| l[b].norm().total_cmp(&l[a].norm()));
    let (top, second) = (l[order[0]].norm(), l[order[1]].norm());
    if top - second <= DOMINANCE_TOLERANCE * top {
        return Err(AsymptoticsError::OnLocus(t));
    }
    Ok(order[0])
}

/// Step of the lattice used to decide which λ_1-dominant component of the
/// `F` plane a point belongs to.
const FLOOD_STEP: f64 = 2e-3;
const FLOOD_LIMIT: usize = 4_000_000;

/// Whether `t` is joined to `target` through points where term `index`
/// dominates, walking a square lattice anchored at `t`.
fn dominance_connected(sys: &LambdaSystem, t: C, target: C, index: usize) -> bool {
    let mut seen: HashSet<(i64, i64)> = HashSet::new();
    let mut queue = VecDeque::from([(0i64, 0i64)]);
    seen.insert((0, 0));
    while let Some((i, j)) = queue.pop_front() {
        let p = t + C::new(i as f64, j as f64) * FLOOD_STEP;
        if (p - target).norm() <= FLOOD_STEP {
            return true;
        }
        if seen.len() > FLOOD_LIMIT {
            return false;
        }
        for (di, dj) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let key = (i + di, j + dj);
            if seen.contains(&key) {
                continue;
            }
            let q = t + C::new(key.0 as f64, key.1 as f64) * FLOOD_STEP;
            if dominant_term(sys, q).ok() == Some(index) {
                seen.insert(key);
                queue.push_back(key);
            }
        }
    }
    false
}

/// Region label of `t` off the locus.
pub fn region_classify(family: Family, t: C) -> Result<Classification, AsymptoticsError> {
    let sys = lambda_system(family);
    let dominant = dominant_term(&sys, t)?;
    let upper = t.im > 0.0;
    let region = match (family, dominant) {
        (Family::A, 0) | (Family::E, 1) | (Family::B, _) => Region::R1,
        (Family::A, _) | (Family::E, _) => Region::R2,
        (Family::F, 2) => Region::R1,
        (Family::F, 1) if upper => Region::R3,
        (Family::F, 1) => Region::R3Star,
        (Family::F, _) => {
            if dominance_connected(&sys, t, C::new(1.0, 0.0), 0) {
                Region::R2
            } else if upper {
                Region::R4
            } else {
                Region::R4Star
            }
        }
    };
    Ok(Classification { region, dominant })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn lambda_examples() {
        let a = lambda_system(Family::A);
        let l = a.lambdas(c(2.0, 0.0));
        assert!((l[0] - 1.0).norm() < 1e-15 && (l[1] + 0.5).norm() < 1e-15);
        let cs = a.coefficients(c(2.0, 0.0), 5);
        assert!((cs[0] - 1.25 / 3.0).norm() < 1e-15);
        let f = lambda_system(Family::F);
        assert!(f.lambdas(c(1.0, 0.0))[2].norm() < 1e-15);
        let b = lambda_system(Family::B);
        let t = 3.0f64;
        let s = 1.0 - t - 1.0 / t;
        assert!(s * s - 4.0 > 0.0);
        let l = b.lambdas(c(t, 0.0));
        assert!(l[1].norm() >= l[2].norm() && l[1].im.abs() < 1e-15);
    }

    #[test]
    fn reconstruct_examples() {
        assert!((reconstruct_eval(Family::A, 3, c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-12);
        assert!((reconstruct_eval(Family::F, 5, c(-1.0, 0.0)).unwrap() - 9.0).norm() < 1e-12);
        assert!(matches!(
            reconstruct_eval(Family::E, 3, c(-2.0, 0.0)),
            Err(AsymptoticsError::ExcludedPoint { .. })
        ));
        assert!(reconstruct_eval(Family::A, 3, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn root_examples() {
        let p = IntPoly::from_terms([(0u32, 1), (1, -1), (2, 1), (3, -1), (4, 1)]);
        let zs = find_roots(&p).unwrap();
        assert_eq!(zs.len(), 4);
        for z in &zs {
            assert!((z.norm() - 1.0).abs() < 1e-9);
            assert!((z.powi(5) + 1.0).norm() < 1e-9);
        }
        let q = IntPoly::from_terms([(0u32, 1), (1, -3), (2, 1)]);
        let zs = find_roots(&q).unwrap();
        let s5 = 5f64.sqrt();
        assert!((zs[0] - (3.0 - s5) / 2.0).norm() < 1e-12);
        assert!((zs[1] - (3.0 + s5) / 2.0).norm() < 1e-12);
        let lin = IntPoly::from_terms([(0u32, -1), (1, 1)]);
        assert!((find_roots(&lin).unwrap()[0] - 1.0).norm() < 1e-14);
        assert!(find_roots(&IntPoly::one()).is_err());
        assert!(find_roots(&IntPoly::var()).is_err());
    }

    #[test]
    fn u_examples() {
        assert!((u_magnitude(Family::A, c(2.0, 0.0)).unwrap() - 1.0).abs() < 1e-15);
        assert!((u_magnitude(Family::A, c(0.5, 0.0)).unwrap() - 2.0).abs() < 1e-15);
        let big = u_magnitude(Family::F, c(1e6, 0.0)).unwrap();
        assert!((big / 1e3 - 1.0).abs() < 1e-3);
        assert!(u_magnitude(Family::A, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn region_examples() {
        assert_eq!(region_classify(Family::A, c(2.0, 0.0)).unwrap().region, Region::R1);
        assert_eq!(region_classify(Family::E, c(10.0, 0.0)).unwrap().region, Region::R1);
        assert_eq!(region_classify(Family::F, c(1.0, 0.0)).unwrap().region, Region::R2);
        assert_eq!(
            region_classify(Family::A, c(0.0, 1.0)),
            Err(AsymptoticsError::OnLocus(c(0.0, 1.0)))
        );
    }

    #[test]
    fn imaginary_axis_crossing() {
        let pts = scan_ray(&lambda_system(Family::E), PI / 2.0, 50.0, 400);
        assert!(pts.iter().any(|p| (p.t().norm() - 3f64.sqrt().recip()).abs() < 1e-6));
    }
}

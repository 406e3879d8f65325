//! Exact sparse polynomials with arbitrary-precision integer coefficients.
//!
//! One container, [`SparsePoly`], keyed by the exponent type:
//!
//! * [`BivarPoly`]: `(i, j)` with `i, j >= 0`, for Tutte polynomials in `x, y`;
//! * [`BivarLaurent`]: `(i, j)` with signed exponents, for the signed-graph
//!   Tutte variant;
//! * [`QuarterLaurent`]: a single signed `e4` meaning `t^(e4/4)`, for Jones
//!   polynomials and everything produced on the way to them;
//! * [`IntPoly`]: a single nonnegative exponent, for chromatic polynomials and
//!   the integer-exponent part of a Jones polynomial.
//!
//! Zero coefficients are never stored, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division has no exact quotient")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    Empty,
    #[error("exponents do not share a common residue mod 4")]
    MixedResidues,
    #[error("evaluation at t = 0 with negative exponents")]
    PoleAtZero,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Exponent monoid for [`SparsePoly`].
pub trait Exponent: Copy + Ord + fmt::Debug {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
}

impl Exponent for (u32, u32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, o: Self) -> Self {
        (self.0 + o.0, self.1 + o.1)
    }
}

impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn add(self, o: Self) -> Self {
        (self.0 + o.0, self.1 + o.1)
    }
}

impl Exponent for i64 {
    fn zero() -> Self {
        0
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
}

impl Exponent for u32 {
    fn zero() -> Self {
        0
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

pub type BivarPoly = SparsePoly<(u32, u32)>;
pub type BivarLaurent = SparsePoly<(i32, i32)>;
pub type QuarterLaurent = SparsePoly<i64>;
pub type IntPoly = SparsePoly<u32>;

impl<E: Exponent> Default for SparsePoly<E> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent> SparsePoly<E> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(E::zero(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(E::zero(), c)
    }

    pub fn monomial(e: E, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (E, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: E) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_term(&self) -> Option<(E, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn max_term(&self) -> Option<(E, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, e: E, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Multiplies by `c * (monomial e)`.
    pub fn mul_term(&self, e: E, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(f, d)| (f.add(e), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest coefficient magnitude, or zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Applies `f` to every exponent and re-collects; `f` need not be injective.
    pub fn map_exponents<F, G>(&self, f: G) -> SparsePoly<F>
    where
        F: Exponent,
        G: Fn(E) -> F,
    {
        let mut out = SparsePoly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }
}

impl<'a, E: Exponent> Add<&'a SparsePoly<E>> for &'a SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn add(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<E: Exponent> Add for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn add(mut self, rhs: SparsePoly<E>) -> SparsePoly<E> {
        self += &rhs;
        self
    }
}

impl<E: Exponent> AddAssign<&SparsePoly<E>> for SparsePoly<E> {
    fn add_assign(&mut self, rhs: &SparsePoly<E>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a, E: Exponent> Sub<&'a SparsePoly<E>> for &'a SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn sub(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<E: Exponent> Sub for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn sub(self, rhs: SparsePoly<E>) -> SparsePoly<E> {
        &self - &rhs
    }
}

impl<E: Exponent> Neg for &SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<E: Exponent> Neg for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn neg(self) -> SparsePoly<E> {
        -&self
    }
}

impl<'a, E: Exponent> Mul<&'a SparsePoly<E>> for &'a SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn mul(self, rhs: &SparsePoly<E>) -> SparsePoly<E> {
        let mut out = SparsePoly::zero();
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                out.add_term(e.add(*f), c * d);
            }
        }
        out
    }
}

impl<E: Exponent> Mul for SparsePoly<E> {
    type Output = SparsePoly<E>;
    fn mul(self, rhs: SparsePoly<E>) -> SparsePoly<E> {
        &self * &rhs
    }
}

impl<E: Exponent> std::iter::Sum for SparsePoly<E> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<E: Exponent> fmt::Debug for SparsePoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(e, c)| (e, c.to_string())))
            .finish()
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// `base^k` for a possibly negative integer power.
pub(crate) fn cpowi(base: Complex64, k: i64) -> Complex64 {
    if k >= 0 {
        base.powu(k as u32)
    } else {
        base.inv().powu((-k) as u32)
    }
}

// ---------------------------------------------------------------------------
// BivarPoly

impl BivarPoly {
    pub fn x() -> Self {
        Self::monomial((1, 0), 1)
    }

    pub fn y() -> Self {
        Self::monomial((0, 1), 1)
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// `P(y, x)`.
    pub fn swap_xy(&self) -> Self {
        self.map_exponents(|(i, j)| (j, i))
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| x.powu(i) * y.powu(j) * big_to_f64(c))
            .sum()
    }

    pub fn eval_integer(&self, x: i64, y: i64) -> BigInt {
        let (bx, by) = (BigInt::from(x), BigInt::from(y));
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(bx.clone(), i as usize) * num_traits::pow(by.clone(), j as usize))
            .sum()
    }

    /// Jones substitution `x = -t`, `y = -1/t`: `c x^i y^j -> c (-1)^(i+j) t^(i-j)`.
    pub fn substitute_jones(&self) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (&(i, j), c) in &self.terms {
            let c = if (i + j) % 2 == 0 { c.clone() } else { -c };
            out.add_term(4 * (i as i64 - j as i64), c);
        }
        out
    }

    /// Substitutes univariate polynomials for `x` and `y`.
    pub fn substitute_univariate(&self, x: &IntPoly, y: &IntPoly) -> IntPoly {
        let mut xp: Vec<IntPoly> = vec![IntPoly::one()];
        let mut yp: Vec<IntPoly> = vec![IntPoly::one()];
        let mut out = IntPoly::zero();
        for (&(i, j), c) in &self.terms {
            while xp.len() <= i as usize {
                let next = xp.last().unwrap() * x;
                xp.push(next);
            }
            while yp.len() <= j as usize {
                let next = yp.last().unwrap() * y;
                yp.push(next);
            }
            out += &(&xp[i as usize] * &yp[j as usize]).scale(c);
        }
        out
    }

    pub fn to_laurent(&self) -> BivarLaurent {
        self.map_exponents(|(i, j)| (i as i32, j as i32))
    }

    /// Exact multivariate division in lexicographic order; fails unless the
    /// remainder is zero.
    pub fn exact_divide(&self, divisor: &BivarPoly) -> Result<BivarPoly, PolyError> {
        let (lead_e, lead_c) = divisor.max_term().ok_or(PolyError::DivisionByZero)?;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quotient = BivarPoly::zero();
        while let Some((e, c)) = rem.max_term() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 {
                return Err(PolyError::InexactDivision);
            }
            let (q, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1);
            rem = &rem - &divisor.mul_term(qe, &q);
            quotient.add_term(qe, q);
        }
        Ok(quotient)
    }
}

impl fmt::Display for BivarPoly {
    /// Terms by decreasing `x` power, then increasing `y` power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
        let parts = terms.into_iter().map(|(&(i, j), c)| {
            let mut vars = Vec::new();
            if i > 0 {
                vars.push(power_str("x", i.to_string(), i == 1));
            }
            if j > 0 {
                vars.push(power_str("y", j.to_string(), j == 1));
            }
            (c.clone(), vars.join("*"))
        });
        write_signed_terms(f, parts)
    }
}

fn power_str(var: &str, exp: String, unit: bool) -> String {
    if unit {
        var.to_string()
    } else if exp.len() == 1 {
        format!("{var}^{exp}")
    } else {
        format!("{var}^{{{exp}}}")
    }
}

fn write_signed_terms<I>(f: &mut fmt::Formatter<'_>, parts: I) -> fmt::Result
where
    I: Iterator<Item = (BigInt, String)>,
{
    let mut first = true;
    for (c, mono) in parts {
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => f.write_str(&mono)?,
            (false, false) => write!(f, "{mag}*{mono}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// BivarLaurent

impl BivarLaurent {
    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| cpowi(x, i as i64) * cpowi(y, j as i64) * big_to_f64(c))
            .sum()
    }

    /// Substitutes `x -> sx * t^(ax/4)` and `y -> sy * t^(ay/4)` with signs
    /// `sx, sy` in `{1, -1}`.
    pub fn substitute_monomials(&self, sx: i64, ax: i64, sy: i64, ay: i64) -> QuarterLaurent {
        let mut out = QuarterLaurent::zero();
        for (&(i, j), c) in &self.terms {
            let (i, j) = (i as i64, j as i64);
            let flip = (sx < 0 && i.rem_euclid(2) == 1) ^ (sy < 0 && j.rem_euclid(2) == 1);
            out.add_term(ax * i + ay * j, if flip { -c } else { c.clone() });
        }
        out
    }
}

impl fmt::Display for BivarLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.terms.iter().rev().map(|(&(i, j), c)| {
            let mut vars = Vec::new();
            if i != 0 {
                vars.push(power_str("x", i.to_string(), i == 1));
            }
            if j != 0 {
                vars.push(power_str("y", j.to_string(), j == 1));
            }
            (c.clone(), vars.join("*"))
        });
        write_signed_terms(f, parts)
    }
}

// ---------------------------------------------------------------------------
// QuarterLaurent

impl QuarterLaurent {
    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(4, 1)
    }

    /// `c * t^k` for an integer power `k`.
    pub fn t_pow(k: i64, c: impl Into<BigInt>) -> Self {
        Self::monomial(4 * k, c)
    }

    /// Multiplies by `sign * t^(e4/4)`.
    pub fn mono_shift(&self, e4: i64, sign: i32) -> Self {
        let mut out = QuarterLaurent::zero();
        for (e, c) in &self.terms {
            out.add_term(e + e4, if sign < 0 { -c } else { c.clone() });
        }
        out
    }

    /// `t -> 1/t`.
    pub fn mirror(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    pub fn min_e4(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_e4(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True if every exponent is an integer power of `t`.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e.rem_euclid(4) == 0)
    }

    /// Splits `L = t^(e4_min/4) * poly` where `poly` has integer exponents
    /// and a nonzero constant term.
    pub fn strip_monomial(&self) -> Result<(i64, IntPoly), PolyError> {
        let lo = self.min_e4().ok_or(PolyError::Empty)?;
        let mut poly = IntPoly::zero();
        for (e, c) in &self.terms {
            let d = e - lo;
            if d % 4 != 0 {
                return Err(PolyError::MixedResidues);
            }
            poly.add_term((d / 4) as u32, c.clone());
        }
        Ok((lo, poly))
    }

    pub fn from_shifted(e4_min: i64, poly: &IntPoly) -> Self {
        poly.map_exponents(|k| e4_min + 4 * k as i64)
    }

    /// Exact Laurent division: the unique `Q` with `self = divisor * Q`, or
    /// [`PolyError::InexactDivision`] if no such Laurent polynomial exists.
    pub fn exact_divide(&self, divisor: &QuarterLaurent) -> Result<QuarterLaurent, PolyError> {
        let (d_lo, d_lo_c) = divisor.min_term().ok_or(PolyError::DivisionByZero)?;
        let d_lo_c = d_lo_c.clone();
        let d_hi = divisor.max_e4().unwrap();
        let (n_lo, n_hi) = match (self.min_e4(), self.max_e4()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Ok(QuarterLaurent::zero()),
        };
        // Any exact quotient has exponents in [n_lo - d_lo, n_hi - d_hi].
        let q_hi = n_hi - d_hi;
        let mut rem = self.clone();
        let mut quotient = QuarterLaurent::zero();
        while let Some((e, c)) = rem.min_term() {
            let qe = e - d_lo;
            if qe > q_hi {
                return Err(PolyError::InexactDivision);
            }
            let (q, r) = c.div_rem(&d_lo_c);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            rem = &rem - &divisor.mul_term(qe, &q);
            quotient.add_term(qe, q);
        }
        debug_assert!(quotient.min_e4().is_none_or(|lo| lo >= n_lo - d_lo));
        Ok(quotient)
    }

    /// Numeric value with the principal branch of `t^(1/4)`.
    pub fn eval(&self, t: Complex64) -> Result<Complex64, PolyError> {
        let Some(lo) = self.min_e4() else {
            return Ok(Complex64::new(0.0, 0.0));
        };
        if t == Complex64::new(0.0, 0.0) {
            if lo < 0 {
                return Err(PolyError::PoleAtZero);
            }
            return Ok(Complex64::new(big_to_f64(&self.coeff(0)), 0.0));
        }
        let quarter = t.powf(0.25);
        let mut total = Complex64::new(0.0, 0.0);
        for r in 0..4i64 {
            // Terms with e4 = 4k + r, evaluated by Horner in t from the top.
            let class: Vec<(i64, &BigInt)> = self
                .terms
                .iter()
                .filter(|(e, _)| e.rem_euclid(4) == r)
                .map(|(e, c)| (e.div_euclid(4), c))
                .collect();
            let Some(&(k_lo, _)) = class.first() else {
                continue;
            };
            let mut acc = Complex64::new(0.0, 0.0);
            let mut prev_k = class.last().unwrap().0;
            for &(k, c) in class.iter().rev() {
                acc = acc * cpowi(t, prev_k - k) + big_to_f64(c);
                prev_k = k;
            }
            total += acc * cpowi(t, k_lo) * quarter.powu(r as u32);
        }
        Ok(total)
    }

    /// Human-readable form with an explicit monomial prefactor, lowest power
    /// first: `t^{-4}*(-1 + t + t^3)`.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

/// Formats `e4/4` as a reduced fraction.
pub fn quarter_exponent_str(e4: i64) -> String {
    let g = e4.gcd(&4);
    let (num, den) = (e4 / g, 4 / g);
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

impl fmt::Display for QuarterLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.strip_monomial() {
            Err(PolyError::Empty) => f.write_str("0"),
            Ok((lo, poly)) => {
                if lo == 0 {
                    write!(f, "{}", poly.display_var("t"))
                } else if poly.len() == 1 && poly.coeff(0).is_one() {
                    write!(f, "t^{{{}}}", quarter_exponent_str(lo))
                } else {
                    write!(f, "t^{{{}}}*({})", quarter_exponent_str(lo), poly.display_var("t"))
                }
            }
            Err(_) => {
                let parts = self.terms.iter().map(|(&e, c)| {
                    let mono = if e == 0 {
                        String::new()
                    } else if e == 4 {
                        "t".to_string()
                    } else {
                        format!("t^{{{}}}", quarter_exponent_str(e))
                    };
                    (c.clone(), mono)
                });
                write_signed_terms(f, parts)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// IntPoly

impl IntPoly {
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Dense coefficients, lowest power first.
    pub fn dense_f64(&self) -> Vec<f64> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        let mut out = vec![0.0; d as usize + 1];
        for (&k, c) in &self.terms {
            out[k as usize] = big_to_f64(c);
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let Some(d) = self.degree() else {
            return Complex64::new(0.0, 0.0);
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (0..=d).rev() {
            acc = acc * z + self.terms.get(&k).map_or(0.0, big_to_f64);
        }
        acc
    }

    pub fn eval_integer(&self, z: i64) -> BigInt {
        let Some(d) = self.degree() else {
            return BigInt::zero();
        };
        let z = BigInt::from(z);
        let mut acc = BigInt::zero();
        for k in (0..=d).rev() {
            acc = acc * &z + self.coeff(k);
        }
        acc
    }

    pub fn display_var<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a IntPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts = self.0.terms.iter().map(|(&k, c)| {
                    let mono = if k == 0 {
                        String::new()
                    } else {
                        power_str(self.1, k.to_string(), k == 1)
                    };
                    (c.clone(), mono)
                });
                write_signed_terms(f, parts)
            }
        }
        D(self, var)
    }
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct BivarTermJson {
    xe: u32,
    ye: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct BivarJson {
    terms: Vec<BivarTermJson>,
}

#[derive(Serialize, Deserialize)]
struct QuarterTermJson {
    e4: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct QuarterJson {
    terms: Vec<QuarterTermJson>,
}

fn parse_coeff(s: &str) -> Result<BigInt, PolyError> {
    s.parse::<BigInt>()
        .map_err(|e| PolyError::Json(format!("bad coefficient `{s}`: {e}")))
}

impl BivarPoly {
    /// `{"terms":[{"xe":i,"ye":j,"c":"<decimal>"}]}`, terms in increasing
    /// `(xe, ye)` order.
    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = BivarJson {
            terms: self
                .terms
                .iter()
                .map(|(&(xe, ye), c)| BivarTermJson {
                    xe,
                    ye,
                    c: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(raw).expect("bivariate JSON")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self, PolyError> {
        let raw: BivarJson = serde_json::from_value(v.clone()).map_err(|e| PolyError::Json(e.to_string()))?;
        let mut p = BivarPoly::zero();
        for t in raw.terms {
            p.add_term((t.xe, t.ye), parse_coeff(&t.c)?);
        }
        Ok(p)
    }
}

impl QuarterLaurent {
    /// `{"terms":[{"e4":k,"c":"<decimal>"}]}`, terms in increasing `e4` order.
    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = QuarterJson {
            terms: self
                .terms
                .iter()
                .map(|(&e4, c)| QuarterTermJson { e4, c: c.to_string() })
                .collect(),
        };
        serde_json::to_value(raw).expect("quarter-Laurent JSON")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self, PolyError> {
        let raw: QuarterJson = serde_json::from_value(v.clone()).map_err(|e| PolyError::Json(e.to_string()))?;
        let mut p = QuarterLaurent::zero();
        for t in raw.terms {
            p.add_term(t.e4, parse_coeff(&t.c)?);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ql(terms: &[(i64, i64)]) -> QuarterLaurent {
        QuarterLaurent::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn ring_basics() {
        let (x, y) = (BivarPoly::x(), BivarPoly::y());
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &x.pow(2) - &y.pow(2);
        assert_eq!(lhs, rhs);
        let half = QuarterLaurent::monomial(2, 1);
        assert_eq!(&half * &half, QuarterLaurent::t());
        let p = &x + &y.pow(3);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn jones_substitution() {
        let trefoil = BivarPoly::from_terms([((1, 0), 1), ((0, 1), 1), ((0, 2), 1)]);
        assert_eq!(trefoil.substitute_jones(), ql(&[(4, -1), (-4, -1), (-8, 1)]));
        assert_eq!(BivarPoly::one().substitute_jones(), QuarterLaurent::one());
        assert_eq!(BivarPoly::monomial((2, 1), 1).substitute_jones(), ql(&[(4, -1)]));
    }

    #[test]
    fn shifts() {
        assert_eq!(QuarterLaurent::one().mono_shift(-16, 1), ql(&[(-16, 1)]));
        // T(FL_3) under x=-t, y=-1/t, then the A_3 prefactor -t^{-2}.
        let sub = ql(&[(4, -1), (-4, -1), (-8, 1)]);
        let v = sub.mono_shift(-8, -1);
        assert_eq!(v, ql(&[(-16, -1), (-12, 1), (-4, 1)]));
        let p = ql(&[(3, 2), (-1, 5)]);
        assert_eq!(p.mono_shift(0, -1), -&p);
    }

    #[test]
    fn strip_examples() {
        let va3 = ql(&[(-16, -1), (-12, 1), (-4, 1)]);
        let (lo, poly) = va3.strip_monomial().unwrap();
        assert_eq!(lo, -16);
        assert_eq!(poly, IntPoly::from_terms([(0, -1), (1, 1), (3, 1)]));
        let v4212 = ql(&[(-18, -1), (-10, -1), (-6, 1), (-2, -1)]);
        let (lo, poly) = v4212.strip_monomial().unwrap();
        assert_eq!(lo, -18);
        assert_eq!(poly, IntPoly::from_terms([(0, -1), (2, -1), (3, 1), (4, -1)]));
        assert_eq!(
            QuarterLaurent::t_pow(3, 1).strip_monomial().unwrap(),
            (12, IntPoly::one())
        );
        assert_eq!(QuarterLaurent::zero().strip_monomial(), Err(PolyError::Empty));
        assert_eq!(ql(&[(0, 1), (1, 1)]).strip_monomial(), Err(PolyError::MixedResidues));
    }

    #[test]
    fn exact_division() {
        let t = QuarterLaurent::t();
        assert_eq!(QuarterLaurent::t_pow(2, 1).exact_divide(&t).unwrap(), t);
        let one = QuarterLaurent::one();
        assert_eq!((&one + &t).exact_divide(&(&one - &t)), Err(PolyError::InexactDivision));
        assert_eq!(
            one.exact_divide(&QuarterLaurent::zero()),
            Err(PolyError::DivisionByZero)
        );
        // 1 - V_{A_3} is divisible by (1-t)(1-t^3).
        let va3 = ql(&[(-16, -1), (-12, 1), (-4, 1)]);
        let d = &(&one - &t) * &(&one - &QuarterLaurent::t_pow(3, 1));
        let w = (&one - &va3).exact_divide(&d).unwrap();
        assert_eq!(&d * &w, &one - &va3);
        // coefficient divisibility is checked
        assert_eq!(
            ql(&[(0, 3)]).exact_divide(&ql(&[(0, 2)])),
            Err(PolyError::InexactDivision)
        );
    }

    #[test]
    fn bivariate_division() {
        let x = BivarPoly::x();
        let one = BivarPoly::one();
        let p = &(&x - &one) * &(&BivarPoly::y().pow(2) + &x);
        assert_eq!(p.exact_divide(&(&x - &one)).unwrap(), &BivarPoly::y().pow(2) + &x);
        assert_eq!((&x + &one).exact_divide(&(&x - &one)), Err(PolyError::InexactDivision));
    }

    #[test]
    fn evaluation() {
        let va3 = ql(&[(-16, -1), (-12, 1), (-4, 1)]);
        let v = va3.eval(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((va3.eval(omega).unwrap() - 1.0).norm() < 1e-12);
        assert_eq!(QuarterLaurent::zero().eval(omega).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(va3.eval(Complex64::new(0.0, 0.0)), Err(PolyError::PoleAtZero));
        let half = QuarterLaurent::monomial(2, 1);
        let z = Complex64::new(0.3, 1.7);
        assert!((half.eval(z).unwrap() - z.sqrt()).norm() < 1e-14);
    }

    #[test]
    fn pretty_printing() {
        let va3 = ql(&[(-16, -1), (-12, 1), (-4, 1)]);
        assert_eq!(va3.to_string(), "t^{-4}*(-1 + t + t^3)");
        let v4212 = ql(&[(-18, -1), (-10, -1), (-6, 1), (-2, -1)]);
        assert_eq!(v4212.to_string(), "t^{-9/2}*(-1 - t^2 + t^3 - t^4)");
        assert_eq!(QuarterLaurent::one().to_string(), "1");
        assert_eq!(QuarterLaurent::zero().to_string(), "0");
        assert_eq!(ql(&[(0, 1), (3, -2)]).to_string(), "1 - 2*t^{3/4}");
        let trefoil = BivarPoly::from_terms([((1, 0), 1), ((0, 1), 1), ((0, 2), 1)]);
        assert_eq!(trefoil.to_string(), "x + y + y^2");
        let c4 = BivarPoly::from_terms([((3, 0), 1), ((2, 0), 1), ((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(c4.to_string(), "x^3 + x^2 + x + y");
        let b = IntPoly::from_terms([(0, 1), (1, -4), (12, 6)]);
        assert_eq!(b.display_var("t").to_string(), "1 - 4*t + 6*t^{12}");
    }

    #[test]
    fn json_shapes() {
        let p = BivarPoly::from_terms([((1, 0), 1), ((0, 2), -3)]);
        let v = p.to_json_value();
        assert_eq!(
            v,
            serde_json::json!({"terms":[{"xe":0,"ye":2,"c":"-3"},{"xe":1,"ye":0,"c":"1"}]})
        );
        assert_eq!(BivarPoly::from_json_value(&v).unwrap(), p);
        let q = ql(&[(-18, -1), (2, 7)]);
        let v = q.to_json_value();
        assert_eq!(v, serde_json::json!({"terms":[{"e4":-18,"c":"-1"},{"e4":2,"c":"7"}]}));
        assert_eq!(QuarterLaurent::from_json_value(&v).unwrap(), q);
        let bad = serde_json::json!({"terms":[{"e4":1,"c":"x"}]});
        assert!(matches!(QuarterLaurent::from_json_value(&bad), Err(PolyError::Json(_))));
    }

    #[test]
    fn univariate_substitution() {
        // x^2 y at x = 1 - q, y = 0 vanishes; x at x = 1 - q is 1 - q.
        let q = IntPoly::var();
        let one_minus_q = &IntPoly::one() - &q;
        let p = BivarPoly::from_terms([((2, 1), 1), ((1, 0), 1)]);
        assert_eq!(p.substitute_univariate(&one_minus_q, &IntPoly::zero()), one_minus_q);
    }
}

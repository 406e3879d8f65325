//! Jones polynomials: the alternating-link route through the Tutte polynomial
//! of `G_+`, closed forms for the four families, the signed-graph extension
//! for non-alternating links, and the structural checks every result obeys.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;
use thiserror::Error;

use crate::graph::{Family, GraphError, LinkPresentation, Sign, SignedMultigraph};
use crate::poly::{PolyError, QuarterLaurent};
use crate::tutte::{self, conjugate_power_sum, TutteError};

/// Tolerance on `|V(e^{2 pi i/3}) - expected|`.
pub const SPECIAL_VALUE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum JonesError {
    #[error("associated graph must be connected")]
    Disconnected,
    #[error("the two signed-graph expressions disagree: {first} vs {second}")]
    LinesDisagree { first: String, second: String },
    #[error("structural check failed: {0}")]
    StructuralViolation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sign_of_power(w: i64) -> i32 {
    if w.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `V = (-1)^w t^((n_l - n_d + 3w)/4) T(G_+, -t, -1/t)`.
///
/// The Tutte polynomial of the family graph comes from its closed form, which
/// stays cheap for members far beyond the reach of deletion-contraction;
/// [`jones_from_tutte`] accepts any other route.
pub fn jones_alternating(link: &LinkPresentation) -> Result<QuarterLaurent, JonesError> {
    if !link.graph.is_connected() {
        return Err(JonesError::Disconnected);
    }
    let t = tutte::tutte_family_closed(link.family.graph_kind(), link.family.graph_param(link.n))?;
    Ok(jones_from_tutte(link, &t))
}

/// Applies the alternating-link prefactor to an already computed Tutte
/// polynomial of `G_+`.
pub fn jones_from_tutte(link: &LinkPresentation, tutte: &crate::poly::BivarPoly) -> QuarterLaurent {
    let e4 = link.n_light as i64 - link.n_dark as i64 + 3 * link.writhe;
    tutte.substitute_jones().mono_shift(e4, sign_of_power(link.writhe))
}

/// Closed family forms. Conjugate powers in the `B` family go through the
/// power-sum recurrence; divisions by `1 + t` are exact.
pub fn jones_family_closed(family: Family, n: usize) -> Result<QuarterLaurent, JonesError> {
    family.check(n)?;
    let t = QuarterLaurent::t();
    let one = QuarterLaurent::one();
    let tinv = QuarterLaurent::t_pow(-1, 1);
    let one_plus_t = &one + &t;
    let t_plus_tinv = &t + &tinv;
    let v = match family {
        Family::A => {
            let k = if n % 2 == 1 { 0 } else { 3 };
            // (-t)^(1-n)
            let power = QuarterLaurent::t_pow(1 - n as i64, if (n - 1).is_multiple_of(2) { 1 } else { -1 });
            let second = &(&(&one - &tinv) * &(&one_plus_t + &tinv)) * &power;
            let numerator = &(&one + &QuarterLaurent::t_pow(-2, 1)) + &second;
            numerator.exact_divide(&one_plus_t)?.mono_shift(4 * k, 1)
        }
        Family::B => {
            let sum = &(&one - &t) - &tinv;
            &t_plus_tinv + &conjugate_power_sum(&sum, &one, n as u32 - 1)
        }
        Family::E => {
            let t_m32 = QuarterLaurent::monomial(-6, 1);
            let first = &(&one_plus_t + &tinv) * &(&(&one - &t) * &t_m32).pow(n as u32);
            let second = (&t_plus_tinv * &t_m32).pow(n as u32);
            let bracket = if n.is_multiple_of(2) {
                &first + &second
            } else {
                &first - &second
            };
            bracket.exact_divide(&one_plus_t)?.mono_shift(2, -1)
        }
        Family::F => {
            let m = (n as u32 - 1) / 2;
            let lam2 = &one - &tinv;
            let lam3 = &(&(&QuarterLaurent::t_pow(-2, 1) - &tinv) + &one) - &t;
            &(&one + &(&t_plus_tinv * &lam2.pow(m))) + &lam3.pow(m)
        }
    };
    Ok(v)
}

/// Both signed-graph expressions for a (possibly non-alternating) link
/// diagram whose associated graph carries edge signs:
///
/// ```text
/// (-t^{3/4})^w t^{(2-2n+e_+-e_-)/4}  T_-(G, -t, -1/t)
/// (-t^{3/4})^w t^{(-2+2n+e_+-e_-)/4} T_+(G, -1/t, -t)
/// ```
///
/// where `T_s` is [`tutte::signed_tutte`] with sign `s` primed. The graph
/// must be connected.
pub fn jones_nonalternating_lines(
    graph: &SignedMultigraph,
    writhe: i64,
) -> Result<(QuarterLaurent, QuarterLaurent), JonesError> {
    if !graph.graph().is_connected() {
        return Err(JonesError::Disconnected);
    }
    let n = graph.graph().vertex_count() as i64;
    let plus = graph.count(Sign::Plus) as i64;
    let minus = graph.count(Sign::Minus) as i64;
    let sign = sign_of_power(writhe);
    let first = tutte::signed_tutte(graph, Sign::Minus)?
        .substitute_monomials(-1, 4, -1, -4)
        .mono_shift(3 * writhe + 2 - 2 * n + plus - minus, sign);
    let second = tutte::signed_tutte(graph, Sign::Plus)?
        .substitute_monomials(-1, -4, -1, 4)
        .mono_shift(3 * writhe - 2 + 2 * n + plus - minus, sign);
    Ok((first, second))
}

pub fn jones_nonalternating(graph: &SignedMultigraph, writhe: i64) -> Result<QuarterLaurent, JonesError> {
    let (first, second) = jones_nonalternating_lines(graph, writhe)?;
    if first != second {
        return Err(JonesError::LinesDisagree {
            first: first.to_string(),
            second: second.to_string(),
        });
    }
    Ok(first)
}

/// True iff `t^{-1} V_+ - t V_- - (t^{1/2} - t^{-1/2}) V_0` vanishes exactly.
pub fn skein_check(v_plus: &QuarterLaurent, v_minus: &QuarterLaurent, v_zero: &QuarterLaurent) -> bool {
    let half = &QuarterLaurent::monomial(2, 1) - &QuarterLaurent::monomial(-2, 1);
    let residual = &(&v_plus.mono_shift(-4, 1) - &v_minus.mono_shift(4, 1)) - &(&half * v_zero);
    residual.is_zero()
}

/// Jones polynomial of the mirror image: `t -> 1/t`.
pub fn mirror(v: &QuarterLaurent) -> QuarterLaurent {
    v.mirror()
}

/// `W_K = (1 - V) / ((1 - t)(1 - t^3))`; exact for knots.
pub fn wk_extract(v: &QuarterLaurent) -> Result<QuarterLaurent, JonesError> {
    let one = QuarterLaurent::one();
    let d = &(&one - &QuarterLaurent::t()) * &(&one - &QuarterLaurent::t_pow(3, 1));
    Ok((&one - v).exact_divide(&d)?)
}

pub fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// `V(e^{2 pi i/3})` on the principal branch, computed exactly.
///
/// Every quarter power `t^{e/4}` becomes `ζ^e` with `ζ = e^{2 pi i/12}`. The
/// coefficient sums are reduced modulo `ζ^4 - ζ^2 + 1` in integers, so only
/// the four small reduced coordinates are ever rounded.
pub fn special_value(v: &QuarterLaurent) -> Complex64 {
    let mut acc: Vec<BigInt> = vec![BigInt::from(0); 12];
    for (e4, c) in v.terms() {
        acc[e4.rem_euclid(12) as usize] += c;
    }
    for r in (4..12).rev() {
        let c = std::mem::take(&mut acc[r]);
        acc[r - 2] += &c;
        acc[r - 4] -= &c;
    }
    let zeta = Complex64::from_polar(1.0, PI / 6.0);
    (0..4)
        .map(|r| zeta.powi(r as i32) * crate::poly::big_to_f64(&acc[r]))
        .sum()
}

/// Value of `V(e^{2 pi i/3})` for an `n_c`-component link, with the
/// principal branch for half-integer powers.
pub fn expected_special_value(n_components: usize) -> f64 {
    if n_components % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

/// Structural facts about an alternating-link Jones polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct StructuralReport {
    /// `max deg - min deg` in powers of `t`.
    pub degree_span: i64,
    pub crossings: usize,
    pub leading_sign: i32,
    /// `(-1)^(n_l - 1)`, where `n_l` counts light regions of `D_+`.
    pub expected_leading_sign: i32,
    pub special_value: Complex64,
    pub expected_special_value: f64,
    /// All exponents integral for odd `n_c`, all half-odd for even `n_c`.
    pub residues_ok: bool,
}

impl StructuralReport {
    pub fn span_ok(&self) -> bool {
        self.degree_span == self.crossings as i64
    }

    pub fn leading_sign_ok(&self) -> bool {
        self.leading_sign == self.expected_leading_sign
    }

    pub fn special_value_ok(&self) -> bool {
        (self.special_value - self.expected_special_value).norm() <= SPECIAL_VALUE_TOLERANCE
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.span_ok() {
            out.push(format!(
                "degree span {} != crossings {}",
                self.degree_span, self.crossings
            ));
        }
        if !self.leading_sign_ok() {
            out.push(format!(
                "leading coefficient sign {} != (-1)^(n_light-1) = {}",
                self.leading_sign, self.expected_leading_sign
            ));
        }
        if !self.special_value_ok() {
            out.push(format!(
                "V(e^(2 pi i/3)) = {} differs from {}",
                self.special_value, self.expected_special_value
            ));
        }
        if !self.residues_ok {
            out.push("exponent residues do not match component-count parity".to_string());
        }
        out
    }
}

/// Computes every structural fact and fails with the first violated relation.
pub fn structural_report(link: &LinkPresentation, v: &QuarterLaurent) -> Result<StructuralReport, JonesError> {
    let report = structural_facts(link, v)?;
    match report.violations().into_iter().next() {
        None => Ok(report),
        Some(first) => Err(JonesError::StructuralViolation(first)),
    }
}

/// Like [`structural_report`] but returns the report even when a relation
/// fails.
pub fn structural_facts(link: &LinkPresentation, v: &QuarterLaurent) -> Result<StructuralReport, JonesError> {
    let (lo, hi) = match (v.min_term(), v.max_term()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(PolyError::Empty.into()),
    };
    let span4 = hi.0 - lo.0;
    let leading_sign = if hi.1.is_negative() { -1 } else { 1 };
    let expected_leading_sign = sign_of_power(link.n_light as i64 - 1);
    let residue = if link.n_components % 2 == 1 { 0 } else { 2 };
    let residues_ok = v.terms().all(|(e, _)| e.rem_euclid(4) == residue);
    Ok(StructuralReport {
        degree_span: if span4 % 4 == 0 { span4 / 4 } else { -1 },
        crossings: link.crossings,
        leading_sign,
        expected_leading_sign,
        special_value: special_value(v),
        expected_special_value: expected_special_value(link.n_components),
        residues_ok,
    })
}

/// Leading coefficient, for callers that want the sign and magnitude.
pub fn leading_coefficient(v: &QuarterLaurent) -> Option<BigInt> {
    v.max_term().map(|(_, c)| c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{link_presentation, Multigraph};
    use crate::poly::IntPoly;

    fn shifted(e4: i64, coeffs: &[i64]) -> QuarterLaurent {
        let p = IntPoly::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (k as u32, c)));
        QuarterLaurent::from_shifted(e4, &p)
    }

    #[test]
    fn alternating_examples() {
        let a3 = link_presentation(Family::A, 3).unwrap();
        assert_eq!(jones_alternating(&a3).unwrap(), shifted(-16, &[-1, 1, 0, 1]));
        let b3 = link_presentation(Family::B, 3).unwrap();
        assert_eq!(jones_alternating(&b3).unwrap(), shifted(-8, &[1, -1, 1, -1, 1]));
        let e3 = link_presentation(Family::E, 3).unwrap();
        assert_eq!(jones_alternating(&e3).unwrap(), shifted(-28, &[1, -1, 3, -1, 3, -2, 1]));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(
            jones_family_closed(Family::A, 4).unwrap(),
            shifted(-8, &[1, -1, 1, -1, 1])
        );
        assert_eq!(
            jones_family_closed(Family::B, 5).unwrap(),
            shifted(-16, &[1, -4, 6, -7, 9, -7, 6, -4, 1])
        );
        assert_eq!(
            jones_family_closed(Family::F, 7).unwrap(),
            shifted(-24, &[1, -3, 5, -7, 8, -8, 8, -5, 3, -1])
        );
        assert_eq!(
            jones_family_closed(Family::E, 2).unwrap(),
            shifted(-18, &[-1, 0, -1, 1, -1])
        );
        assert!(matches!(
            jones_family_closed(Family::F, 6),
            Err(JonesError::Graph(GraphError::ParameterOutOfRange { .. }))
        ));
    }

    #[test]
    fn nonalternating_examples() {
        let trefoil = SignedMultigraph::all_positive(Multigraph::d1c(2).unwrap());
        let a3 = jones_alternating(&link_presentation(Family::A, 3).unwrap()).unwrap();
        assert_eq!(jones_nonalternating(&trefoil, -3).unwrap(), a3);
        let point = SignedMultigraph::all_positive(Multigraph::edgeless(1));
        assert_eq!(jones_nonalternating(&point, 0).unwrap(), QuarterLaurent::one());
        let kink = SignedMultigraph::all_positive(Multigraph::new(2, [(0, 1)]).unwrap());
        assert_eq!(jones_nonalternating(&kink, -1).unwrap(), QuarterLaurent::one());
        let split = SignedMultigraph::all_positive(Multigraph::edgeless(2));
        assert_eq!(jones_nonalternating(&split, 0), Err(JonesError::Disconnected));
    }

    #[test]
    fn skein_examples() {
        let one = QuarterLaurent::one();
        let unlink = -(&QuarterLaurent::monomial(2, 1) + &QuarterLaurent::monomial(-2, 1));
        assert!(skein_check(&one, &one, &unlink));
        let zero = QuarterLaurent::zero();
        assert!(skein_check(&zero, &zero, &zero));
        assert!(!skein_check(&one, &one, &one));
    }

    #[test]
    fn mirror_examples() {
        let va3 = shifted(-16, &[-1, 1, 0, 1]);
        assert_eq!(mirror(&va3), QuarterLaurent::from_terms([(16, -1), (12, 1), (4, 1)]));
        let vb = jones_family_closed(Family::B, 6).unwrap();
        assert_eq!(mirror(&vb), vb);
        assert_eq!(mirror(&QuarterLaurent::one()), QuarterLaurent::one());
    }

    #[test]
    fn structural_examples() {
        let a9 = link_presentation(Family::A, 9).unwrap();
        let r = structural_report(&a9, &jones_alternating(&a9).unwrap()).unwrap();
        assert_eq!(r.degree_span, 9);
        let b5 = link_presentation(Family::B, 5).unwrap();
        let r = structural_report(&b5, &jones_family_closed(Family::B, 5).unwrap()).unwrap();
        assert_eq!(r.degree_span, 8);
        assert!((r.special_value - 1.0).norm() < 1e-9);
        let e2 = link_presentation(Family::E, 2).unwrap();
        let r = structural_report(&e2, &jones_family_closed(Family::E, 2).unwrap()).unwrap();
        assert_eq!(r.degree_span, 4);
        assert!((r.special_value + 1.0).norm() < 1e-9);
        // a wrong polynomial is reported with the violated relation
        let bad = structural_report(&a9, &QuarterLaurent::one());
        assert!(matches!(bad, Err(JonesError::StructuralViolation(msg)) if msg.contains("span")));
    }

    #[test]
    fn special_value_matches_float_evaluation() {
        for (f, n) in [(Family::A, 3), (Family::E, 2), (Family::B, 6), (Family::F, 9)] {
            let v = jones_family_closed(f, n).unwrap();
            assert!((special_value(&v) - v.eval(omega()).unwrap()).norm() < 1e-9);
        }
    }

    #[test]
    fn wk_examples() {
        let va3 = shifted(-16, &[-1, 1, 0, 1]);
        let w = wk_extract(&va3).unwrap();
        let one = QuarterLaurent::one();
        let d = &(&one - &QuarterLaurent::t()) * &(&one - &QuarterLaurent::t_pow(3, 1));
        assert_eq!(&one - &(&d * &w), va3);
        assert!(wk_extract(&one).unwrap().is_zero());
        assert!(wk_extract(&shifted(-16, &[1, -1, 1, -2, 2, -1, 1])).is_ok());
    }
}

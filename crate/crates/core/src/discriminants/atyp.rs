//! The atypical discriminant: line components of the ED discriminant caused
//! by Morse points escaping to isotropic points at infinity.
//!
//! For a branch at an isotropic point with pole order `k`, the component is
//! empty exactly when the branch is tangent to the line at infinity;
//! otherwise it is the line `{h_k(u) = 0}`, with the generic Morse number
//! read off the first later coefficient whose restriction to the line does
//! not vanish, and the focal point at that restriction's root.

use crate::branches::puiseux::PuiseuxField;
use crate::branches::InfinityBranch;
use crate::edcore::{h_series_infinity, CurveInput, EdError, HSeries};
use crate::numkernel::GaussianRational;
use crate::polyalg::affine::{restrict_to_line, AffineForm, AffineLine, QiAffineForm};
use crate::polyalg::coeff::{CoeffField, FloatField, QiField};

/// Field-specific recovery of exact report data from analyzer elements.
pub trait AnalyzerField: PuiseuxField {
    /// Exact value of an element, when recognizable.
    fn reconstruct(elem: &Self::Elem) -> Option<GaussianRational>;
}

impl AnalyzerField for QiField {
    fn reconstruct(elem: &GaussianRational) -> Option<GaussianRational> {
        Some(elem.clone())
    }
}

impl AnalyzerField for FloatField {
    fn reconstruct(elem: &crate::numkernel::ApproxComplex) -> Option<GaussianRational> {
        let bits = elem.precision().max(64) as i64;
        crate::numkernel::rationalize_complex(elem, 100_000_000, -bits / 3)
    }
}

/// Exact line underneath a (possibly approximate) affine form.
pub fn form_to_line<F: AnalyzerField>(form: &AffineForm<F>) -> Option<AffineLine> {
    let a = F::reconstruct(&form.a)?;
    let b = F::reconstruct(&form.b)?;
    let c = F::reconstruct(&form.c)?;
    AffineLine::new(a, b, c)
}

fn exact_form(line_coeff: &AffineLine) -> QiAffineForm {
    AffineForm::new(
        QiField,
        line_coeff.a().clone(),
        line_coeff.b().clone(),
        line_coeff.c().clone(),
    )
}

/// Restriction of a possibly-approximate form to an exact line, as the
/// coefficient pair `(c0, c1)` of `s -> form(base + s dir)`.
fn restrict_form<F: AnalyzerField>(
    form: &AffineForm<F>,
    line: &AffineLine,
) -> (F::Elem, F::Elem) {
    let field = form.field.clone();
    let (base, dir) = line.parametrize();
    let b1 = field.from_gaussian(&base.0);
    let b2 = field.from_gaussian(&base.1);
    let d1 = field.from_gaussian(&dir.0);
    let d2 = field.from_gaussian(&dir.1);
    let c0 = form.eval(&b1, &b2);
    let c1 = field.add(&field.mul(&form.a, &d1), &field.mul(&form.b, &d2));
    (c0, c1)
}

/// Outcome of analyzing one branch at an isotropic point at infinity.
#[derive(Clone, Debug)]
pub enum AtypOutcome {
    /// The anchor point is not isotropic: no atypical component.
    NotApplicable,
    /// Branch tangent to the line at infinity: empty component.
    Empty,
    Line(AtypLineData),
    /// Some order-of-vanishing query ran past the truncation.
    NeedsHigherTruncation,
}

#[derive(Clone, Debug)]
pub struct AtypLineData {
    pub line: AffineLine,
    pub m_generic: Option<u32>,
    pub focal_point: Option<(GaussianRational, GaussianRational)>,
    /// `Some(Ok(m))` finite, `Some(Err(()))` non-isolated (circle type),
    /// `None` when there is no focal point or the order ran out.
    pub m_exceptional: Option<Result<u32, ()>>,
    /// Orders were confirmed only up to this bound when a warning applies.
    pub truncation_warning: bool,
    pub exact: bool,
}

/// Analyze one branch per the line-at-infinity structure theorems.
pub fn atyp_component<F: AnalyzerField>(
    branch: &InfinityBranch<F>,
    input: &CurveInput,
    exhausted: bool,
) -> Result<AtypOutcome, EdError> {
    if !branch.isotropic {
        return Ok(AtypOutcome::NotApplicable);
    }
    let field = branch.p_series.field.clone();
    let h: HSeries<F> = h_series_infinity(branch, input.mode())?;
    let k = branch.k as i64;
    // nonzero constant below k: no Morse points reach the anchor
    for j in 0..k {
        let hj = h.coeff(j);
        debug_assert!(hj.is_constant());
        if !hj.is_zero() {
            debug_assert!(branch.tangent_to_infinity);
            return Ok(AtypOutcome::Empty);
        }
    }
    let hk = h.coeff(k);
    debug_assert!(!hk.is_constant(), "h_k must depend on the data point");
    let line = match form_to_line(&h.coeff(k)) {
        Some(l) => l,
        None => return Ok(AtypOutcome::NeedsHigherTruncation),
    };
    let exact = branch.exact;

    // generic Morse number: first j > k whose restriction to the line is not
    // identically zero
    let mut m_generic = None;
    let mut focal_point = None;
    let mut j = k + 1;
    while j <= h.known() {
        let (c0, c1) = restrict_form(&h.coeff(j), &line);
        let z0 = field.is_zero(&c0);
        let z1 = field.is_zero(&c1);
        if z0 && z1 {
            j += 1;
            continue;
        }
        m_generic = Some((j - k) as u32);
        if !z1 {
            // unique root of the degree-1 restriction
            let root = field.neg(&field.div(&c0, &c1));
            if let Some(s) = F::reconstruct(&root) {
                focal_point = Some(line.point_at(&s));
            }
        }
        break;
    }
    if m_generic.is_none() && !exhausted {
        return Ok(AtypOutcome::NeedsHigherTruncation);
    }

    // exceptional Morse number at the focal point
    let mut m_exceptional = None;
    let mut truncation_warning = m_generic.is_none();
    if let Some(fp) = &focal_point {
        let u1 = field.from_gaussian(&fp.0);
        let u2 = field.from_gaussian(&fp.1);
        let mut found = None;
        let mut jj = k + 1;
        while jj <= h.known() {
            if !field.is_zero(&h.coeff(jj).eval(&u1, &u2)) {
                found = Some((jj - k) as u32);
                break;
            }
            jj += 1;
        }
        match found {
            Some(m) => m_exceptional = Some(Ok(m)),
            None if !exhausted => return Ok(AtypOutcome::NeedsHigherTruncation),
            None => {
                // all coefficients vanish at the focal point up to the cap:
                // either the distance function from there has non-isolated
                // singularities (circle type centred exactly there), or the
                // order is finite but out of reach.
                let classification = super::classify::classify_curve(input);
                if classification.is_circle_type
                    && classification.circle_centre.as_ref() == Some(fp)
                {
                    m_exceptional = Some(Err(()));
                } else {
                    truncation_warning = true;
                }
            }
        }
    }
    Ok(AtypOutcome::Line(AtypLineData {
        line,
        m_generic,
        focal_point,
        m_exceptional,
        truncation_warning,
        exact,
    }))
}

/// Convenience for tests: exact restriction of an exact form.
pub fn restrict_exact(form: &QiAffineForm, line: &AffineLine) -> crate::polyalg::QiPoly {
    restrict_to_line(form, line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branches::{branches_at_infinity, ExpansionConfig, InfinityBranches, ProjPoint};
    use crate::polyalg::bivariate::{CoordMode, QiBivariate};

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    fn biv(terms: &[((u32, u32), (i64, i64))]) -> QiBivariate {
        QiBivariate::from_terms(QiField, terms.iter().map(|&(e, (a, b))| (e, gi(a, b))))
    }

    fn analyze_all(
        input: &CurveInput,
        xi: &ProjPoint,
    ) -> Vec<AtypOutcome> {
        let mut cfg = ExpansionConfig::for_degree(input.degree());
        loop {
            let bs = match branches_at_infinity(input.f(), xi, input.mode(), &cfg).unwrap() {
                InfinityBranches::Exact(bs) => bs,
                InfinityBranches::Approx(_) => panic!("exact curves here"),
            };
            let exhausted = cfg.truncation >= cfg.max_truncation;
            let outs: Vec<AtypOutcome> = bs
                .iter()
                .map(|b| atyp_component(b, input, exhausted).unwrap())
                .collect();
            if outs
                .iter()
                .any(|o| matches!(o, AtypOutcome::NeedsHigherTruncation))
                && !exhausted
            {
                cfg.truncation = (cfg.truncation * 2).min(cfg.max_truncation);
                continue;
            }
            return outs;
        }
    }

    #[test]
    fn circle_atyp_line_with_nonisolated_focal() {
        let input = CurveInput::new(
            biv(&[((2, 0), (1, 0)), ((0, 2), (1, 0)), ((0, 0), (-1, 0))]),
            CoordMode::Cartesian,
        )
        .unwrap();
        let outs = analyze_all(&input, &ProjPoint::new(gi(1, 0), gi(0, 1)));
        assert_eq!(outs.len(), 1);
        match &outs[0] {
            AtypOutcome::Line(d) => {
                // u1 + i u2 = 0
                assert_eq!(d.line, AffineLine::new(gi(1, 0), gi(0, 1), gi(0, 0)).unwrap());
                assert_eq!(d.m_generic, Some(2));
                assert_eq!(d.focal_point, Some((gi(0, 0), gi(0, 0))));
                assert_eq!(d.m_exceptional, Some(Err(())));
                assert!(d.exact);
            }
            other => panic!("expected line, got {:?}", other),
        }
    }

    #[test]
    fn ex62_atyp_line_focal_and_exceptional() {
        let input = CurveInput::new(
            biv(&[
                ((1, 4), (1, 0)),
                ((0, 5), (0, -1)),
                ((0, 3), (-1, 0)),
                ((0, 2), (3, 0)),
                ((0, 1), (-3, 0)),
                ((0, 0), (1, 0)),
            ]),
            CoordMode::Cartesian,
        )
        .unwrap();
        let outs = analyze_all(&input, &ProjPoint::new(gi(0, 1), gi(1, 0)));
        assert_eq!(outs.len(), 1);
        match &outs[0] {
            AtypOutcome::Line(d) => {
                // i u1 + u2 = 0
                assert_eq!(d.line, AffineLine::new(gi(0, 1), gi(1, 0), gi(0, 0)).unwrap());
                assert_eq!(d.m_generic, Some(2));
                assert_eq!(d.focal_point, Some((gi(0, -3), gi(-3, 0))));
                assert_eq!(d.m_exceptional, Some(Ok(3)));
            }
            other => panic!("expected line, got {:?}", other),
        }
    }

    #[test]
    fn ex64_both_isotropic_points() {
        let input = CurveInput::new(
            biv(&[((2, 1), (1, 0)), ((1, 0), (-1, 0)), ((0, 0), (-1, 0))]),
            CoordMode::Isotropic,
        )
        .unwrap();
        // [0; 1]: line v1 = 0, m = 1, no focal point
        let outs = analyze_all(&input, &ProjPoint::new(gi(0, 0), gi(1, 0)));
        assert_eq!(outs.len(), 1);
        match &outs[0] {
            AtypOutcome::Line(d) => {
                assert_eq!(d.line, AffineLine::new(gi(1, 0), gi(0, 0), gi(0, 0)).unwrap());
                assert_eq!(d.m_generic, Some(1));
                assert!(d.focal_point.is_none());
                assert!(d.m_exceptional.is_none());
            }
            other => panic!("{:?}", other),
        }
        // [1; 0]: line v2 = 0, m = 2, focal (1, 0) with exceptional 3
        let outs = analyze_all(&input, &ProjPoint::new(gi(1, 0), gi(0, 0)));
        assert_eq!(outs.len(), 1);
        match &outs[0] {
            AtypOutcome::Line(d) => {
                assert_eq!(d.line, AffineLine::new(gi(0, 0), gi(1, 0), gi(0, 0)).unwrap());
                assert_eq!(d.m_generic, Some(2));
                assert_eq!(d.focal_point, Some((gi(1, 0), gi(0, 0))));
                assert_eq!(d.m_exceptional, Some(Ok(3)));
            }
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn tangent_branch_gives_empty_component() {
        // y = x^3 has [0;1] at infinity with the branch tangent to H^inf;
        // [0;1] is isotropic only in isotropic mode, so use that reading:
        // z2 = z1^3 at [0;1].
        let input = CurveInput::new(
            biv(&[((0, 1), (1, 0)), ((3, 0), (-1, 0))]),
            CoordMode::Isotropic,
        )
        .unwrap();
        let outs = analyze_all(&input, &ProjPoint::new(gi(0, 0), gi(1, 0)));
        assert_eq!(outs.len(), 1);
        assert!(matches!(outs[0], AtypOutcome::Empty));
    }

    #[test]
    fn empty_iff_tangent_on_generated_family() {
        // z2^a = z1^b type monomial curves at both isotropic points: the
        // component at an isotropic point is empty exactly when the branch
        // is tangent to the line at infinity there.
        for (a, b) in [(1u32, 2u32), (1, 3), (2, 3), (2, 5), (3, 4)] {
            let input = CurveInput::new(
                biv(&[((0, a), (1, 0)), ((b, 0), (-1, 0))]),
                CoordMode::Isotropic,
            )
            .unwrap();
            for xi in [
                ProjPoint::new(gi(0, 0), gi(1, 0)),
                ProjPoint::new(gi(1, 0), gi(0, 0)),
            ] {
                let cfg = ExpansionConfig::for_degree(input.degree());
                let bs = match branches_at_infinity(input.f(), &xi, input.mode(), &cfg).unwrap() {
                    InfinityBranches::Exact(bs) => bs,
                    _ => panic!(),
                };
                for br in &bs {
                    let out = atyp_component(&br, &input, true).unwrap();
                    match out {
                        AtypOutcome::Empty => assert!(br.tangent_to_infinity),
                        AtypOutcome::Line(_) => assert!(!br.tangent_to_infinity),
                        other => panic!("unexpected {:?}", other),
                    }
                }
            }
        }
    }
}

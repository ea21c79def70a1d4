//! Local branch analysis: Newton–Puiseux expansion at finite points and at
//! points at infinity, and the points-at-infinity classifier.
//!
//! Branch series are produced for arbitrary representatives; downstream
//! formulas never rely on the normalized forms that the worked examples use.

pub mod puiseux;

use std::fmt;

use crate::numkernel::{ApproxComplex, GaussianRational};
use crate::polyalg::bivariate::{BivariatePolynomial, CoordMode, QiBivariate};
use crate::polyalg::coeff::{CoeffField, FloatField, QiField};
use crate::polyalg::mpoly::MPoly;
use crate::polyalg::series::{OrdResult, TruncatedSeries};
use crate::polyalg::univariate::QiPoly;

pub use puiseux::{branches_of, ExpansionConfig, PuiseuxError, RawBranch, RootOrder};

/// A point of the line at infinity, normalized to `[a; 1]` or `[1; 0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    pub a: GaussianRational,
    pub b: GaussianRational,
}

impl ProjPoint {
    pub fn new(a: GaussianRational, b: GaussianRational) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "undefined projective point");
        if b.is_zero() {
            ProjPoint {
                a: GaussianRational::one(),
                b: GaussianRational::zero(),
            }
        } else {
            ProjPoint {
                a: &a / &b,
                b: GaussianRational::one(),
            }
        }
    }

    /// Membership in the isotropic locus `Q^inf`: the zero set of
    /// `x^2 + y^2` on the line at infinity (`z1 z2` in isotropic mode).
    pub fn is_isotropic(&self, mode: CoordMode) -> bool {
        match mode {
            CoordMode::Cartesian => (&(&self.a * &self.a) + &(&self.b * &self.b)).is_zero(),
            CoordMode::Isotropic => (&self.a * &self.b).is_zero(),
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.a, self.b)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.a, self.b)
    }
}

/// One analytic branch of the curve at a finite point.
#[derive(Clone, Debug)]
pub struct FiniteBranch<F: CoeffField> {
    pub point: (F::Elem, F::Elem),
    /// `x(t)` with `x(0) = p1`.
    pub x_series: TruncatedSeries<F>,
    /// `y(t)` with `y(0) = p2`.
    pub y_series: TruncatedSeries<F>,
    /// Branch multiplicity: min of the orders of `x - p1` and `y - p2`.
    pub alpha: u32,
    /// Order of the other coordinate after orienting so `alpha <= beta`;
    /// `None` when it exceeds the truncation.
    pub beta: Option<i64>,
    /// Coefficient pair of `t^alpha` in `(x - p1, y - p2)`.
    pub tangent: (F::Elem, F::Elem),
    /// Contact order of the branch with its own tangent line; `None` when
    /// beyond truncation (e.g. a line component).
    pub tangent_contact: Option<i64>,
    pub exact: bool,
}

impl<F: CoeffField> FiniteBranch<F> {
    fn from_parts(
        field: &F,
        point: (F::Elem, F::Elem),
        x_rel: TruncatedSeries<F>,
        y_rel: TruncatedSeries<F>,
    ) -> Self {
        let n = x_rel.known().min(y_rel.known());
        let ox = x_rel.ord();
        let oy = y_rel.ord();
        let (alpha, beta) = match (ox, oy) {
            (OrdResult::Exact(a), OrdResult::Exact(b)) => (a.min(b), Some(a.max(b))),
            (OrdResult::Exact(a), OrdResult::Beyond(_)) => (a, None),
            (OrdResult::Beyond(_), OrdResult::Exact(b)) => (b, None),
            (OrdResult::Beyond(_), OrdResult::Beyond(_)) => {
                panic!("degenerate branch: both series constant")
            }
        };
        let d1 = if x_rel.known() >= alpha {
            x_rel.coeff(alpha)
        } else {
            field.zero()
        };
        let d2 = if y_rel.known() >= alpha {
            y_rel.coeff(alpha)
        } else {
            field.zero()
        };
        // contact with the tangent line through p in direction (d1, d2)
        let normal_comb = y_rel.scale(&d1).sub(&x_rel.scale(&d2));
        let tangent_contact = normal_comb.ord().exact();
        let x_series = x_rel.add(&TruncatedSeries::monomial(
            field.clone(),
            point.0.clone(),
            0,
            n,
        ));
        let y_series = y_rel.add(&TruncatedSeries::monomial(
            field.clone(),
            point.1.clone(),
            0,
            n,
        ));
        FiniteBranch {
            point,
            x_series,
            y_series,
            alpha: alpha as u32,
            beta,
            tangent: (d1, d2),
            tangent_contact,
            exact: field.exact(),
        }
    }

    /// `x(t) - p1` and `y(t) - p2`.
    pub fn relative(&self) -> (TruncatedSeries<F>, TruncatedSeries<F>) {
        let f = self.x_series.field.clone();
        let n = self.x_series.known().min(self.y_series.known());
        let c1 = TruncatedSeries::monomial(f.clone(), self.point.0.clone(), 0, n);
        let c2 = TruncatedSeries::monomial(f, self.point.1.clone(), 0, n);
        (self.x_series.sub(&c1), self.y_series.sub(&c2))
    }
}

/// One branch of the projective closure at a point at infinity, in the
/// meromorphic normal form `x(t) = P(t)/t^k`, `y(t) = Q(t)/t^k`.
#[derive(Clone, Debug)]
pub struct InfinityBranch<F: CoeffField> {
    pub xi: ProjPoint,
    pub p_series: TruncatedSeries<F>,
    pub q_series: TruncatedSeries<F>,
    /// Pole order `k = mult_xi(branch, line at infinity)`.
    pub k: u32,
    pub isotropic: bool,
    pub tangent_to_infinity: bool,
    pub exact: bool,
}

/// Branch lists carry the field they were computed over.
#[derive(Clone, Debug)]
pub enum FiniteBranches {
    Exact(Vec<FiniteBranch<QiField>>),
    Approx(Vec<FiniteBranch<FloatField>>),
}

#[derive(Clone, Debug)]
pub enum InfinityBranches {
    Exact(Vec<InfinityBranch<QiField>>),
    Approx(Vec<InfinityBranch<FloatField>>),
}

impl InfinityBranches {
    pub fn len(&self) -> usize {
        match self {
            InfinityBranches::Exact(v) => v.len(),
            InfinityBranches::Approx(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Branches of `{f = 0}` at a finite point with exact coordinates. Falls
/// back to float coefficients per configuration when an edge polynomial has
/// no Q(i) root.
pub fn local_branches(
    f: &QiBivariate,
    p: &(GaussianRational, GaussianRational),
    cfg: &ExpansionConfig,
) -> Result<FiniteBranches, PuiseuxError> {
    if !f.eval(&p.0, &p.1).is_zero() {
        return Err(PuiseuxError::NotOnCurve);
    }
    let germ = f.shift_origin(&p.0, &p.1);
    match finite_branches_over(&QiField, &germ, p, cfg) {
        Ok(bs) => Ok(FiniteBranches::Exact(bs)),
        Err(PuiseuxError::FieldExtensionRequired(edge)) => match cfg.fallback_bits {
            None => Err(PuiseuxError::FieldExtensionRequired(edge)),
            Some(bits) => {
                let field = FloatField::new(bits);
                let germ_a = germ.to_field(&field);
                let pa = (field.from_gaussian(&p.0), field.from_gaussian(&p.1));
                finite_branches_over(&field, &germ_a, &pa, cfg).map(FiniteBranches::Approx)
            }
        },
        Err(e) => Err(e),
    }
}

/// Branches at a numerically known finite point (already float data).
pub fn local_branches_approx(
    f: &QiBivariate,
    p: &(ApproxComplex, ApproxComplex),
    bits: usize,
    cfg: &ExpansionConfig,
) -> Result<Vec<FiniteBranch<FloatField>>, PuiseuxError> {
    let field = FloatField::new(bits);
    let fa = f.to_field(&field);
    let germ = fa.shift_origin(&p.0, &p.1);
    finite_branches_over(&field, &germ, p, cfg)
}

fn finite_branches_over<F: puiseux::PuiseuxField>(
    field: &F,
    germ: &BivariatePolynomial<F>,
    p: &(F::Elem, F::Elem),
    cfg: &ExpansionConfig,
) -> Result<Vec<FiniteBranch<F>>, PuiseuxError> {
    let n = cfg.truncation;
    let mut germ = germ.clone();
    let mut out = Vec::new();
    // vertical line component x = p1
    if let Some(r) = germ.div_x() {
        let x_rel = TruncatedSeries::zero(field.clone(), n);
        let y_rel = TruncatedSeries::monomial(field.clone(), field.one(), 1, n);
        out.push(FiniteBranch::from_parts(field, p.clone(), x_rel, y_rel));
        germ = r;
    }
    if !field.is_zero(&germ.coeff((0, 0))) {
        return Ok(out);
    }
    for raw in branches_of(&germ, cfg)? {
        let x_rel = TruncatedSeries::monomial(field.clone(), raw.scale.clone(), raw.ram as i64, n);
        out.push(FiniteBranch::from_parts(field, p.clone(), x_rel, raw.y_series));
    }
    Ok(out)
}

/// The chart polynomial `z^d f(w/z, 1/z)` (or `z^d f(1/z, w/z)` when
/// `swap`), a polynomial in `(w, z)`.
fn chart_polynomial(f: &QiBivariate, swap: bool) -> QiBivariate {
    let d = f.total_degree();
    let mut out = QiBivariate::zero(QiField);
    for (&(i, j), c) in f.terms() {
        let wi = if swap { j } else { i };
        out.add_term((wi, d - i - j), c.clone());
    }
    out
}

/// Expand the projective closure of `{f = 0}` at a point at infinity.
pub fn branches_at_infinity(
    f: &QiBivariate,
    xi: &ProjPoint,
    mode: CoordMode,
    cfg: &ExpansionConfig,
) -> Result<InfinityBranches, PuiseuxError> {
    match infinity_branches_over(&QiField, f, xi, mode, cfg) {
        Ok(bs) => Ok(InfinityBranches::Exact(bs)),
        Err(PuiseuxError::FieldExtensionRequired(edge)) => match cfg.fallback_bits {
            None => Err(PuiseuxError::FieldExtensionRequired(edge)),
            Some(bits) => {
                let field = FloatField::new(bits);
                infinity_branches_over(&field, f, xi, mode, cfg).map(InfinityBranches::Approx)
            }
        },
        Err(e) => Err(e),
    }
}

fn infinity_branches_over<F: puiseux::PuiseuxField>(
    field: &F,
    f: &QiBivariate,
    xi: &ProjPoint,
    mode: CoordMode,
    cfg: &ExpansionConfig,
) -> Result<Vec<InfinityBranch<F>>, PuiseuxError> {
    let n = cfg.truncation;
    let swap = xi.b.is_zero();
    let chart = chart_polynomial(f, swap);
    let chart_f = chart.to_field(field);
    // germ at (w0, 0), with the z coordinate in the expansion's monomial role
    let w0 = if swap {
        GaussianRational::zero()
    } else {
        &xi.a / &xi.b
    };
    let w0_f = field.from_gaussian(&w0);
    let shifted = chart_f.shift_origin(&w0_f, &field.zero());
    let germ = shifted.swap_vars(); // (z, w) order
    if !field.is_zero(&germ.coeff((0, 0))) {
        return Ok(Vec::new()); // xi not on the closure
    }
    // z = 0 (the line at infinity) is never a component of the closure of an
    // affine curve, so the expansion's entry invariant holds.
    debug_assert!(germ.terms().any(|(&(a, _), _)| a == 0));
    let mut out = Vec::new();
    for raw in branches_of(&germ, cfg)? {
        let k = raw.ram;
        let scale_inv = field.inv(&raw.scale);
        let w_series = raw.y_series.clone();
        let tangent_to_infinity = match w_series.ord() {
            OrdResult::Exact(v) => v < k as i64,
            OrdResult::Beyond(_) => false,
        };
        let w0_series = TruncatedSeries::monomial(field.clone(), w0_f.clone(), 0, n);
        let w_full = w0_series.add(&w_series);
        let (p_series, q_series) = if swap {
            // x = 1/z, y = w/z
            (
                TruncatedSeries::monomial(field.clone(), scale_inv.clone(), 0, n),
                w_full.scale(&scale_inv),
            )
        } else {
            // x = w/z, y = 1/z
            (
                w_full.scale(&scale_inv),
                TruncatedSeries::monomial(field.clone(), scale_inv.clone(), 0, n),
            )
        };
        out.push(InfinityBranch {
            xi: xi.clone(),
            p_series,
            q_series,
            k,
            isotropic: xi.is_isotropic(mode),
            tangent_to_infinity,
            exact: field.exact(),
        });
    }
    Ok(out)
}

/// One point of `X^inf`, with its multiplicity in the top-degree form.
#[derive(Clone, Debug)]
pub struct InfinityPoint {
    pub point: ProjPoint,
    pub multiplicity: usize,
    pub isotropic: bool,
}

/// Points at infinity of the projective closure. Isotropic points are
/// identified exactly via divisibility; other points are reported exactly
/// when Q(i)-rational, with the remaining directions returned as an
/// unresolved factor.
pub struct PointsAtInfinity {
    pub points: Vec<InfinityPoint>,
    /// Nonrational part of the dehomogenized top form, if any.
    pub unresolved: Option<QiPoly>,
}

pub fn points_at_infinity(f: &QiBivariate, mode: CoordMode) -> PointsAtInfinity {
    let top = f.top_form();
    let mut rest = MPoly::from_bivariate(&top);
    let mut points: Vec<InfinityPoint> = Vec::new();

    let isotropic_divisors: Vec<(MPoly, ProjPoint)> = match mode {
        CoordMode::Cartesian => vec![
            // x + i y vanishes on the direction (1, i)
            (
                MPoly::var(crate::polyalg::mpoly::VAR_X)
                    .add(&MPoly::var(crate::polyalg::mpoly::VAR_Y).scale(&GaussianRational::i())),
                ProjPoint::new(GaussianRational::one(), GaussianRational::i()),
            ),
            // x - i y vanishes on the direction (i, 1)
            (
                MPoly::var(crate::polyalg::mpoly::VAR_X)
                    .sub(&MPoly::var(crate::polyalg::mpoly::VAR_Y).scale(&GaussianRational::i())),
                ProjPoint::new(GaussianRational::i(), GaussianRational::one()),
            ),
        ],
        CoordMode::Isotropic => vec![
            (
                MPoly::var(crate::polyalg::mpoly::VAR_X),
                ProjPoint::new(GaussianRational::zero(), GaussianRational::one()),
            ),
            (
                MPoly::var(crate::polyalg::mpoly::VAR_Y),
                ProjPoint::new(GaussianRational::one(), GaussianRational::zero()),
            ),
        ],
    };
    for (divisor, point) in isotropic_divisors {
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&divisor) {
            mult += 1;
            rest = q;
        }
        if mult > 0 {
            points.push(InfinityPoint {
                point,
                multiplicity: mult,
                isotropic: true,
            });
        }
    }

    // the direction [1; 0] corresponds to the remaining power of y
    let y = MPoly::var(crate::polyalg::mpoly::VAR_Y);
    let mut mult_10 = 0;
    while let Some(q) = rest.exact_div(&y) {
        mult_10 += 1;
        rest = q;
    }
    if mult_10 > 0 {
        let point = ProjPoint::new(GaussianRational::one(), GaussianRational::zero());
        debug_assert!(!point.is_isotropic(mode), "isotropic factors already out");
        points.push(InfinityPoint {
            point,
            multiplicity: mult_10,
            isotropic: false,
        });
    }

    // dehomogenize at y = 1 and pull rational roots
    let dehom_m = rest.eval_var(crate::polyalg::mpoly::VAR_Y, &GaussianRational::one());
    let mut coeffs = vec![GaussianRational::zero(); dehom_m.degree(0) as usize + 1];
    for (e, c) in dehom_m.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    let dehom = QiPoly::new(QiField, coeffs);
    let mut unresolved = None;
    if dehom.degree().unwrap_or(0) >= 1 {
        let (roots, remainder) = crate::polyalg::roots::gaussian_rational_roots(&dehom);
        for (root, mult) in roots {
            let point = ProjPoint::new(root, GaussianRational::one());
            let isotropic = point.is_isotropic(mode);
            debug_assert!(!isotropic, "isotropic factors already extracted");
            points.push(InfinityPoint {
                point,
                multiplicity: mult,
                isotropic,
            });
        }
        if remainder.degree().unwrap_or(0) >= 1 {
            unresolved = Some(remainder);
        }
    }
    // deterministic ordering for reports
    points.sort_by_key(|p| format!("{:?}", p.point));
    PointsAtInfinity { points, unresolved }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rat;

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    fn biv(terms: &[((u32, u32), (i64, i64))]) -> QiBivariate {
        QiBivariate::from_terms(QiField, terms.iter().map(|&(e, (a, b))| (e, gi(a, b))))
    }

    fn cfg() -> ExpansionConfig {
        ExpansionConfig::for_degree(3).with_truncation(16)
    }

    fn origin() -> (GaussianRational, GaussianRational) {
        (gi(0, 0), gi(0, 0))
    }

    #[test]
    fn cusp_branch_is_t2_t3() {
        // y^2 - x^3 at the origin: one branch x = t^2, y = t^3
        let f = biv(&[((0, 2), (1, 0)), ((3, 0), (-1, 0))]);
        let bs = match local_branches(&f, &origin(), &cfg()).unwrap() {
            FiniteBranches::Exact(bs) => bs,
            _ => panic!("exact expected"),
        };
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.alpha, 2);
        assert_eq!(b.beta, Some(3));
        assert!(b.exact);
        let r = f.eval_series(&b.x_series, &b.y_series);
        assert!(r.is_zero_to_known());
    }

    #[test]
    fn node_axes_split() {
        // xy at the origin: two smooth axis branches
        let f = biv(&[((1, 1), (1, 0))]);
        let bs = match local_branches(&f, &origin(), &cfg()).unwrap() {
            FiniteBranches::Exact(bs) => bs,
            _ => panic!(),
        };
        assert_eq!(bs.len(), 2);
        for b in &bs {
            assert_eq!(b.alpha, 1);
            assert!(f.eval_series(&b.x_series, &b.y_series).is_zero_to_known());
        }
    }

    #[test]
    fn node_with_square_root_series() {
        // y^2 - x^2 (x + 1): two smooth branches y = +- x sqrt(1 + x);
        // compare against the binomial series for sqrt(1 + x) term by term.
        let f = biv(&[((0, 2), (1, 0)), ((2, 0), (-1, 0)), ((3, 0), (-1, 0))]);
        let bs = match local_branches(&f, &origin(), &cfg()).unwrap() {
            FiniteBranches::Exact(bs) => bs,
            _ => panic!(),
        };
        assert_eq!(bs.len(), 2);
        // binomial oracle: sqrt(1+x) = sum_k C(1/2, k) x^k
        let mut binom = vec![rat(1, 1)];
        for k in 1..10i64 {
            let prev = binom.last().unwrap().clone();
            binom.push(prev * (rat(1, 2) - rat(k - 1, 1)) / rat(k, 1));
        }
        for b in &bs {
            assert_eq!(b.alpha, 1);
            assert!(f.eval_series(&b.x_series, &b.y_series).is_zero_to_known());
            // the representative may have x(t) = scale * t; compose the
            // oracle with it: y = sign * x(t) * sqrt(1 + x(t))
            let scale = b.x_series.coeff(1);
            let sign = &b.y_series.coeff(1) / &scale;
            assert!(sign == gi(1, 0) || sign == gi(-1, 0));
            for k in 0..8i64 {
                let got = b.y_series.coeff(k + 1);
                let binom_k = GaussianRational::from_rational(binom[k as usize].clone());
                let want = &(&binom_k * &scale.pow(k + 1)) * &sign;
                assert_eq!(got, want, "t^{} coefficient", k + 1);
            }
        }
    }

    #[test]
    fn circle_at_isotropic_point() {
        // x^2 + y^2 - 1 at [1; i]: one branch, k = 1, not tangent to H^inf
        let f = biv(&[((2, 0), (1, 0)), ((0, 2), (1, 0)), ((0, 0), (-1, 0))]);
        let xi = ProjPoint::new(gi(1, 0), gi(0, 1));
        let bs = match branches_at_infinity(&f, &xi, CoordMode::Cartesian, &cfg()).unwrap() {
            InfinityBranches::Exact(bs) => bs,
            _ => panic!(),
        };
        assert_eq!(bs.len(), 1);
        let b = &bs[0];
        assert_eq!(b.k, 1);
        assert!(!b.tangent_to_infinity);
        assert!(b.isotropic);
        // [P(0); Q(0)] is the isotropic point itself
        let ratio = &b.p_series.coeff(0) / &b.q_series.coeff(0);
        assert_eq!(ratio, &xi.a / &xi.b);
    }

    #[test]
    fn isotropic_example_pole_order_two() {
        // z1^2 z2 - z1 - 1 in isotropic mode at [0; 1]: single branch, k = 2
        let f = biv(&[((2, 1), (1, 0)), ((1, 0), (-1, 0)), ((0, 0), (-1, 0))]);
        let xi = ProjPoint::new(GaussianRational::zero(), GaussianRational::one());
        let bs = match branches_at_infinity(&f, &xi, CoordMode::Isotropic, &cfg()).unwrap() {
            InfinityBranches::Exact(bs) => bs,
            _ => panic!(),
        };
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].k, 2);
        assert!(bs[0].isotropic);
        assert!(!bs[0].tangent_to_infinity);
    }

    #[test]
    fn points_at_infinity_examples() {
        // circle: the two isotropic points, multiplicity 1 each
        let circle = biv(&[((2, 0), (1, 0)), ((0, 2), (1, 0)), ((0, 0), (-1, 0))]);
        let pts = points_at_infinity(&circle, CoordMode::Cartesian);
        assert_eq!(pts.points.len(), 2);
        assert!(pts.points.iter().all(|p| p.isotropic && p.multiplicity == 1));
        assert!(pts.unresolved.is_none());

        // x y^4 - i y^5 - y^3 + 3 y^2 - 3 y + 1: [1;0] and [i;1]
        let ex62 = biv(&[
            ((1, 4), (1, 0)),
            ((0, 5), (0, -1)),
            ((0, 3), (-1, 0)),
            ((0, 2), (3, 0)),
            ((0, 1), (-3, 0)),
            ((0, 0), (1, 0)),
        ]);
        let pts = points_at_infinity(&ex62, CoordMode::Cartesian);
        assert_eq!(pts.points.len(), 2);
        let infinity_x = ProjPoint::new(gi(1, 0), gi(0, 0));
        let iso = ProjPoint::new(gi(0, 1), gi(1, 0));
        assert!(pts
            .points
            .iter()
            .any(|p| p.point == infinity_x && !p.isotropic));
        assert!(pts.points.iter().any(|p| p.point == iso && p.isotropic));

        // y - x^2: the single point [0;1] with multiplicity 2
        let parabola = biv(&[((0, 1), (1, 0)), ((2, 0), (-1, 0))]);
        let pts = points_at_infinity(&parabola, CoordMode::Cartesian);
        assert_eq!(pts.points.len(), 1);
        assert_eq!(pts.points[0].multiplicity, 2);
        assert_eq!(pts.points[0].point, ProjPoint::new(gi(0, 0), gi(1, 0)));
    }

    #[test]
    fn sum_of_alpha_equals_local_multiplicity() {
        for (f, want) in [
            (biv(&[((0, 2), (1, 0)), ((3, 0), (-1, 0))]), 2u32),
            (biv(&[((1, 1), (1, 0))]), 2),
            (
                biv(&[((0, 2), (1, 0)), ((2, 0), (-1, 0)), ((3, 0), (-1, 0))]),
                2,
            ),
        ] {
            let bs = match local_branches(&f, &origin(), &cfg()).unwrap() {
                FiniteBranches::Exact(bs) => bs,
                _ => panic!(),
            };
            let total: u32 = bs.iter().map(|b| b.alpha).sum();
            assert_eq!(total, want);
        }
    }

    #[test]
    fn sum_of_k_equals_infinity_multiplicity() {
        for f in [
            biv(&[((2, 0), (1, 0)), ((0, 2), (1, 0)), ((0, 0), (-1, 0))]),
            biv(&[((0, 2), (1, 0)), ((3, 0), (-1, 0))]),
            biv(&[((0, 1), (1, 0)), ((2, 0), (-1, 0))]),
        ] {
            let pts = points_at_infinity(&f, CoordMode::Cartesian);
            for ip in pts.points {
                let bs =
                    branches_at_infinity(&f, &ip.point, CoordMode::Cartesian, &cfg()).unwrap();
                let total: u32 = match &bs {
                    InfinityBranches::Exact(v) => v.iter().map(|b| b.k).sum(),
                    InfinityBranches::Approx(v) => v.iter().map(|b| b.k).sum(),
                };
                assert_eq!(total as usize, ip.multiplicity, "at {:?}", ip.point);
            }
        }
    }

    #[test]
    fn reparametrization_invariance_of_discrete_data() {
        let f = biv(&[
            ((1, 4), (1, 0)),
            ((0, 5), (0, -1)),
            ((0, 3), (-1, 0)),
            ((0, 2), (3, 0)),
            ((0, 1), (-3, 0)),
            ((0, 0), (1, 0)),
        ]);
        let xi = ProjPoint::new(gi(0, 1), gi(1, 0));
        let mut data = Vec::new();
        for order in [RootOrder::Normal, RootOrder::Reversed] {
            let mut c = cfg();
            c.root_order = order;
            let bs = match branches_at_infinity(&f, &xi, CoordMode::Cartesian, &c).unwrap() {
                InfinityBranches::Exact(bs) => bs,
                _ => panic!(),
            };
            let mut triples: Vec<(u32, bool, bool)> = bs
                .iter()
                .map(|b| (b.k, b.tangent_to_infinity, b.isotropic))
                .collect();
            triples.sort();
            data.push(triples);
        }
        assert_eq!(data[0], data[1]);
    }

    #[test]
    fn field_extension_error_without_fallback() {
        // y^2 - x^2(x + 2): branches y = +- x sqrt(2 + x) need sqrt(2)
        let f = biv(&[((0, 2), (1, 0)), ((2, 0), (-2, 0)), ((3, 0), (-1, 0))]);
        let mut c = cfg();
        c.fallback_bits = None;
        let err = local_branches(&f, &origin(), &c).unwrap_err();
        assert!(matches!(err, PuiseuxError::FieldExtensionRequired(_)));
        // with fallback enabled the branches come back flagged approximate
        c.fallback_bits = Some(160);
        match local_branches(&f, &origin(), &c).unwrap() {
            FiniteBranches::Approx(bs) => {
                assert_eq!(bs.len(), 2);
                assert!(bs.iter().all(|b| !b.exact));
                let field = FloatField::new(160);
                let fa = f.to_field(&field);
                for b in &bs {
                    let r = fa.eval_series(&b.x_series, &b.y_series);
                    assert!(r.is_zero_to_known(), "residual {:?}", r.ord());
                }
            }
            _ => panic!("fallback expected"),
        }
    }
}

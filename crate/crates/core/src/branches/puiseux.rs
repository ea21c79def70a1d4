//! Newton–Puiseux expansion of a plane-curve germ at the origin.
//!
//! Branches come out with an exact monomial first coordinate: the rational
//! substitutions x -> eta * x1^m, y -> x1^q (c + y1) keep all coefficients in
//! the ground field whenever the edge-polynomial roots lie there, so over
//! Q(i) the expansion is exact. Edge roots outside the field either abort
//! the expansion or switch the whole germ to the float field, depending on
//! configuration; every downstream result carries the exactness flag.

use thiserror::Error;

use crate::numkernel::ApproxComplex;
use crate::polyalg::bivariate::BivariatePolynomial;
use crate::polyalg::coeff::{CoeffField, FloatField, QiField};
use crate::polyalg::series::TruncatedSeries;
use crate::polyalg::univariate::UnivariatePolynomial;

#[derive(Debug, Error, Clone)]
pub enum PuiseuxError {
    #[error("edge polynomial {0} has no root in Q(i); a field extension is required")]
    FieldExtensionRequired(String),
    #[error("expansion recursion exceeded depth {0}; input may not be squarefree")]
    RunawayRecursion(u32),
    #[error("germ does not vanish at the expansion point")]
    NotOnCurve,
}

/// How the expansion orders edge-polynomial roots internally. Results must
/// not depend on it; tests flip it to check reparametrization invariance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RootOrder {
    #[default]
    Normal,
    Reversed,
}

#[derive(Clone, Debug)]
pub struct ExpansionConfig {
    /// Series are computed with coefficients trusted through this order.
    pub truncation: i64,
    /// Ceiling for adaptive re-expansion by downstream analyzers.
    pub max_truncation: i64,
    /// Precision for the numeric fallback; `None` disables the fallback.
    pub fallback_bits: Option<usize>,
    pub root_order: RootOrder,
    pub max_depth: u32,
}

impl ExpansionConfig {
    /// Defaults scale with the curve degree: N = 2 d^2 + 8, capped at
    /// 8 d^2 + 64 under adaptive doubling.
    pub fn for_degree(d: u32) -> Self {
        let d = d as i64;
        ExpansionConfig {
            truncation: 2 * d * d + 8,
            max_truncation: 8 * d * d + 64,
            fallback_bits: Some(212),
            root_order: RootOrder::Normal,
            max_depth: 96,
        }
    }

    pub fn with_truncation(mut self, n: i64) -> Self {
        self.truncation = n;
        self.max_truncation = self.max_truncation.max(n);
        self
    }
}

/// One branch of a germ at the origin: `x(t) = scale * t^ram`, `y(t)` a
/// series of strictly positive order (or zero).
#[derive(Clone, Debug)]
pub struct RawBranch<F: CoeffField> {
    pub ram: u32,
    pub scale: F::Elem,
    pub y_series: TruncatedSeries<F>,
}

/// Field-specific root finding for edge polynomials.
pub trait PuiseuxField: CoeffField {
    fn edge_roots(
        p: &UnivariatePolynomial<Self>,
        cfg: &ExpansionConfig,
    ) -> Result<Vec<(Self::Elem, usize)>, PuiseuxError>;
}

impl PuiseuxField for QiField {
    fn edge_roots(
        p: &UnivariatePolynomial<QiField>,
        _cfg: &ExpansionConfig,
    ) -> Result<Vec<(crate::numkernel::GaussianRational, usize)>, PuiseuxError> {
        let (roots, rest) = crate::polyalg::roots::gaussian_rational_roots(p);
        if rest.degree().unwrap_or(0) >= 1 {
            return Err(PuiseuxError::FieldExtensionRequired(format!("{}", rest)));
        }
        Ok(roots)
    }
}

impl PuiseuxField for FloatField {
    fn edge_roots(
        p: &UnivariatePolynomial<FloatField>,
        _cfg: &ExpansionConfig,
    ) -> Result<Vec<(ApproxComplex, usize)>, PuiseuxError> {
        let bits = p.field.bits;
        let raw = crate::polyalg::roots::aberth_roots(p, bits);
        // cluster nearby roots into multiplicities
        let mut clusters: Vec<(ApproxComplex, usize)> = Vec::new();
        let tol = crate::numkernel::BigFloat::ONE << (-(bits as isize) / 8);
        'outer: for z in raw {
            for (c, m) in clusters.iter_mut() {
                if (&z - c).abs() < tol {
                    *m += 1;
                    continue 'outer;
                }
            }
            clusters.push((z, 1));
        }
        Ok(clusters)
    }
}

/// All branches of `g` at the origin. Requires `g(0,0) = 0` and that the
/// second-variable axis `{x = 0}` is not a component (divide it out first).
pub fn branches_of<F: PuiseuxField>(
    g: &BivariatePolynomial<F>,
    cfg: &ExpansionConfig,
) -> Result<Vec<RawBranch<F>>, PuiseuxError> {
    expand(g, cfg, 0)
}

fn expand<F: PuiseuxField>(
    g: &BivariatePolynomial<F>,
    cfg: &ExpansionConfig,
    depth: u32,
) -> Result<Vec<RawBranch<F>>, PuiseuxError> {
    let field = g.field.clone();
    if depth > cfg.max_depth {
        return Err(PuiseuxError::RunawayRecursion(depth));
    }
    let n = cfg.truncation;
    debug_assert!(
        g.terms().any(|(&(a, _), _)| a == 0),
        "the y-axis must be divided out before expansion"
    );
    let mut g = g.clone();
    let mut branches = Vec::new();

    // the x-axis branch y = 0
    if let Some(reduced) = g.div_y() {
        branches.push(RawBranch {
            ram: 1,
            scale: field.one(),
            y_series: TruncatedSeries::zero(field.clone(), n),
        });
        g = reduced;
    }
    if !field.is_zero(&g.coeff((0, 0))) {
        return Ok(branches);
    }
    if g.is_zero() {
        return Ok(branches);
    }

    for (m, q, edge_poly, weight) in newton_edges(&g) {
        let mut roots = F::edge_roots(&edge_poly, cfg)?;
        if cfg.root_order == RootOrder::Reversed {
            roots.reverse();
        }
        for (z0, mult) in roots {
            if field.is_zero(&z0) {
                continue;
            }
            // Bezout pair: u*m + v*q = 1, so eta = z0^-v, c = z0^u stay in
            // the ground field and satisfy c^m = z0 * eta^q.
            let (u, v) = bezout(m as i64, q as i64);
            let eta = field_pow_signed(&field, &z0, -v);
            let c = field_pow_signed(&field, &z0, u);
            let g1 = duval_substitute(&g, &eta, m, &c, q, weight, n);
            debug_assert!(!field.is_zero(&constant_y_part(&g1)), "x1 divides g1");
            let subs = if mult == 1 {
                let psi = hensel_series(&g1, n);
                vec![RawBranch {
                    ram: 1,
                    scale: field.one(),
                    y_series: psi,
                }]
            } else {
                expand(&g1, cfg, depth + 1)?
            };
            for sb in subs {
                // x = eta * x1^m, y = x1^q (c + y1) with x1 = sb.scale * t^sb.ram
                let scale = field.mul(&eta, &field.pow(&sb.scale, m));
                let sq = field.pow(&sb.scale, q);
                let c_series = TruncatedSeries::monomial(field.clone(), c.clone(), 0, n);
                let y_unit = c_series.add(&sb.y_series);
                let y_series = y_unit
                    .scale(&sq)
                    .shift((sb.ram * q) as i64)
                    .truncate_min(n);
                branches.push(RawBranch {
                    ram: sb.ram * m,
                    scale,
                    y_series,
                });
            }
        }
    }
    Ok(branches)
}

fn constant_y_part<F: CoeffField>(g: &BivariatePolynomial<F>) -> F::Elem {
    // leading coefficient of g(0, y) as a polynomial in y
    let mut best: Option<(u32, F::Elem)> = None;
    for (&(a, b), c) in g.terms() {
        if a == 0 {
            match &best {
                Some((bb, _)) if *bb >= b => {}
                _ => best = Some((b, c.clone())),
            }
        }
    }
    best.map(|(_, c)| c).unwrap_or_else(|| g.field.zero())
}

/// Lower Newton polygon edges with negative slope, as
/// `(m, q, edge polynomial, weighted order)` with slope `-m/q`; the edge
/// polynomial's nonzero roots drive the next substitution.
fn newton_edges<F: CoeffField>(
    g: &BivariatePolynomial<F>,
) -> Vec<(u32, u32, UnivariatePolynomial<F>, u32)> {
    let support = g.support();
    // lowest j for each i
    let mut min_j: std::collections::BTreeMap<u32, u32> = std::collections::BTreeMap::new();
    for &(i, j) in &support {
        min_j
            .entry(i)
            .and_modify(|m| *m = (*m).min(j))
            .or_insert(j);
    }
    let pts: Vec<(i64, i64)> = min_j.iter().map(|(&i, &j)| (i as i64, j as i64)).collect();
    // lower convex hull, left to right
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let field = g.field.clone();
    let mut edges = Vec::new();
    for w in hull.windows(2) {
        let (i0, j0) = w[0];
        let (i1, j1) = w[1];
        if j0 <= j1 {
            continue; // not a negative slope edge
        }
        let di = i1 - i0;
        let dj = j0 - j1;
        let g_ = gcd_i64(di, dj);
        let q = (di / g_) as u32;
        let m = (dj / g_) as u32;
        let smax = (dj / (m as i64)) as usize;
        let mut coeffs = vec![field.zero(); smax + 1];
        for &(i, j) in &support {
            let (i, j) = (i as i64, j as i64);
            // on the segment between the endpoints?
            if (j - j1) * (i1 - i0) != (i1 - i) * (j0 - j1) || j < j1 || j > j0 {
                continue;
            }
            let s = j - j1;
            if s % (m as i64) != 0 {
                continue;
            }
            coeffs[(s / m as i64) as usize] = g.coeff((i as u32, j as u32));
        }
        let weight = (m as i64 * i0 + q as i64 * j0) as u32;
        edges.push((m, q, UnivariatePolynomial::new(field.clone(), coeffs), weight));
    }
    edges
}

/// `g(eta x^m, x^q (c + y)) / x^weight`, truncated in x beyond `max_x`.
fn duval_substitute<F: CoeffField>(
    g: &BivariatePolynomial<F>,
    eta: &F::Elem,
    m: u32,
    c: &F::Elem,
    q: u32,
    weight: u32,
    max_x: i64,
) -> BivariatePolynomial<F> {
    let field = g.field.clone();
    let cap = weight as i64 + max_x + 1;
    // (c + y)^j expansions, cached
    let cy = BivariatePolynomial::from_terms(
        field.clone(),
        [((0, 0), c.clone()), ((0, 1), field.one())],
    );
    let mut cy_pow: Vec<BivariatePolynomial<F>> =
        vec![BivariatePolynomial::constant(field.clone(), field.one())];
    let mut eta_pow: Vec<F::Elem> = vec![field.one()];
    let mut out = BivariatePolynomial::zero(field.clone());
    for (&(i, j), coeff) in g.terms() {
        let xe = (m as i64) * (i as i64) + (q as i64) * (j as i64);
        if xe > cap {
            continue;
        }
        while eta_pow.len() <= i as usize {
            eta_pow.push(field.mul(eta_pow.last().unwrap(), eta));
        }
        while cy_pow.len() <= j as usize {
            cy_pow.push(cy_pow.last().unwrap().mul(&cy));
        }
        let factor = field.mul(coeff, &eta_pow[i as usize]);
        for (&(_, yb), yc) in cy_pow[j as usize].terms() {
            out.add_term((xe as u32, yb), field.mul(yc, &factor));
        }
    }
    let mut shifted = BivariatePolynomial::zero(field);
    for (&(a, b), cc) in out.terms() {
        debug_assert!(a >= weight, "weighted order below the edge weight");
        if (a - weight) as i64 <= max_x {
            shifted.add_term((a - weight, b), cc.clone());
        }
    }
    shifted
}

/// Power series `psi` with `g(t, psi(t)) = 0 (mod t^{n+1})`, `psi(0) = 0`;
/// requires a simple root: `g(0,0) = 0`, `dg/dy(0,0) != 0`.
fn hensel_series<F: CoeffField>(
    g: &BivariatePolynomial<F>,
    n: i64,
) -> TruncatedSeries<F> {
    let field = g.field.clone();
    let x_t = TruncatedSeries::monomial(field.clone(), field.one(), 1, n);
    let gy = g.derivative(1);
    let mut psi = TruncatedSeries::zero(field.clone(), n);
    let mut steps = 0;
    loop {
        let val = g.eval_series(&x_t, &psi);
        if val.is_zero_to_known() && val.known() >= n {
            break;
        }
        let dval = gy.eval_series(&x_t, &psi);
        let corr = val.mul(&dval.inverse().expect("simple root has unit derivative"));
        psi = psi.sub(&corr).truncate_min(n);
        steps += 1;
        if steps > 64 {
            break;
        }
    }
    psi.truncate_min(n)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// (u, v) with u*a + v*b = gcd(a, b) = 1 for coprime inputs.
fn bezout(a: i64, b: i64) -> (i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    debug_assert_eq!(r0, 1, "bezout of non-coprime pair");
    (s0, t0)
}

fn field_pow_signed<F: CoeffField>(field: &F, a: &F::Elem, e: i64) -> F::Elem {
    if e >= 0 {
        field.pow(a, e as u32)
    } else {
        field.inv(&field.pow(a, (-e) as u32))
    }
}

//! The critical system of the squared-distance function, ED degree
//! computation by exact elimination, and the h-series of a branch — the
//! series in the local parameter whose coefficients are affine-linear in the
//! data point and whose vanishing orders encode Morse numbers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::branches::{FiniteBranch, InfinityBranch};
use crate::numkernel::{rat, GaussianRational};
use crate::polyalg::affine::AffineForm;
use crate::polyalg::bivariate::{CoordMode, QiBivariate};
use crate::polyalg::coeff::{CoeffField, QiField};
use crate::polyalg::mpoly::{MPoly, VAR_U1, VAR_U2, VAR_X, VAR_Y};
use crate::polyalg::resultant::resultant;
use crate::polyalg::series::TruncatedSeries;
use crate::polyalg::univariate::QiPoly;

#[derive(Debug, Error, Clone)]
pub enum EdError {
    #[error("curve is zero or constant")]
    DegenerateCurve,
    #[error("trial counts never agreed, even after shear retries: {0:?}")]
    UnstableCount(Vec<usize>),
    #[error("could not find a regular shear for the resultant step")]
    NoShear,
    #[error("branch truncation insufficient (have {have}, need {need})")]
    TruncationInsufficient { have: i64, need: i64 },
    #[error(transparent)]
    Resultant(#[from] crate::polyalg::resultant::ResultantError),
}

/// A validated curve: nonconstant and squarefree (reduced on construction,
/// with the reduction recorded).
#[derive(Clone, Debug)]
pub struct CurveInput {
    f: QiBivariate,
    mode: CoordMode,
    was_reduced: bool,
}

impl CurveInput {
    pub fn new(f: QiBivariate, mode: CoordMode) -> Result<Self, EdError> {
        if f.is_zero() || f.is_constant() {
            return Err(EdError::DegenerateCurve);
        }
        let m = MPoly::from_bivariate(&f);
        let sf = m.squarefree_part();
        let was_reduced =
            sf.degree(VAR_X) != m.degree(VAR_X) || sf.degree(VAR_Y) != m.degree(VAR_Y);
        let f = if was_reduced { sf.to_bivariate() } else { f };
        Ok(CurveInput {
            f,
            mode,
            was_reduced,
        })
    }

    pub fn f(&self) -> &QiBivariate {
        &self.f
    }

    pub fn mode(&self) -> CoordMode {
        self.mode
    }

    pub fn was_reduced(&self) -> bool {
        self.was_reduced
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree()
    }
}

/// The tangency condition cutting out the critical incidence set, flattened
/// to a polynomial in `(x, y, u1, u2)`:
/// Cartesian `(x - u1) f_y - (y - u2) f_x`; isotropic
/// `(z2 - v2) f_z2 - (z1 - v1) f_z1` for the hyperbolic distance form.
pub fn critical_poly(input: &CurveInput) -> MPoly {
    let f = MPoly::from_bivariate(input.f());
    let fx = f.derivative(VAR_X);
    let fy = f.derivative(VAR_Y);
    let x = MPoly::var(VAR_X);
    let y = MPoly::var(VAR_Y);
    let u1 = MPoly::var(VAR_U1);
    let u2 = MPoly::var(VAR_U2);
    match input.mode() {
        CoordMode::Cartesian => x.sub(&u1).mul(&fy).sub(&y.sub(&u2).mul(&fx)),
        CoordMode::Isotropic => y.sub(&u2).mul(&fy).sub(&x.sub(&u1).mul(&fx)),
    }
}

/// The h-series of a branch: coefficients `h_j(u) = a_j u1 + b_j u2 + c_j`.
#[derive(Clone, Debug)]
pub struct HSeries<F: CoeffField> {
    field: F,
    forms: Vec<AffineForm<F>>,
    known: i64,
    /// Pole order for an infinity branch, branch multiplicity for a finite
    /// one; the analyzers' base index.
    pub base: u32,
}

impl<F: CoeffField> HSeries<F> {
    pub fn known(&self) -> i64 {
        self.known
    }

    pub fn coeff(&self, j: i64) -> AffineForm<F> {
        assert!(j <= self.known, "h_{j} beyond truncation {}", self.known);
        if j < 0 {
            return AffineForm::zero(self.field.clone());
        }
        self.forms
            .get(j as usize)
            .cloned()
            .unwrap_or_else(|| AffineForm::zero(self.field.clone()))
    }

    /// Evaluate every coefficient at a data point: the series `t -> h(t, u)`.
    pub fn eval_at(&self, u1: &F::Elem, u2: &F::Elem) -> TruncatedSeries<F> {
        let vals: Vec<F::Elem> = self.forms.iter().map(|f| f.eval(u1, u2)).collect();
        TruncatedSeries::new(self.field.clone(), 0, vals, self.known)
    }
}

fn zip_series_to_forms<F: CoeffField>(
    field: &F,
    constant: &TruncatedSeries<F>,
    u1_part: &TruncatedSeries<F>,
    u2_part: &TruncatedSeries<F>,
    base: u32,
) -> HSeries<F> {
    let known = constant.known().min(u1_part.known()).min(u2_part.known());
    let mut forms = Vec::with_capacity((known + 1).max(0) as usize);
    for j in 0..=known {
        forms.push(AffineForm::new(
            field.clone(),
            u1_part.coeff(j),
            u2_part.coeff(j),
            constant.coeff(j),
        ));
    }
    HSeries {
        field: field.clone(),
        forms,
        known,
        base,
    }
}

/// h-series of a branch at infinity:
/// `h = (tP' - kP)(P - u1 t^k) + (tQ' - kQ)(Q - u2 t^k)` in Cartesian mode;
/// in isotropic mode `P` and `Q` trade places against the data variables.
pub fn h_series_infinity<F: CoeffField>(
    branch: &InfinityBranch<F>,
    mode: CoordMode,
) -> Result<HSeries<F>, EdError> {
    let field = branch.p_series.field.clone();
    let k = branch.k as i64;
    let p = &branch.p_series;
    let q = &branch.q_series;
    let need = 2 * k + 2;
    if p.known() < need || q.known() < need {
        return Err(EdError::TruncationInsufficient {
            have: p.known().min(q.known()),
            need,
        });
    }
    let a = p.t_derivative().sub(&p.scale(&field.from_int(k)));
    let b = q.t_derivative().sub(&q.scale(&field.from_int(k)));
    let (constant, u1_series, u2_series) = match mode {
        CoordMode::Cartesian => (a.mul(p).add(&b.mul(q)), a.shift(k).neg(), b.shift(k).neg()),
        CoordMode::Isotropic => (a.mul(q).add(&b.mul(p)), b.shift(k).neg(), a.shift(k).neg()),
    };
    Ok(zip_series_to_forms(
        &field, &constant, &u1_series, &u2_series, branch.k,
    ))
}

/// h-series of a finite branch:
/// `h = x'(x - u1) + y'(y - u2)` in Cartesian mode,
/// `h = z1'(z2 - v2) + z2'(z1 - v1)` in isotropic mode.
pub fn h_series_finite<F: CoeffField>(
    branch: &FiniteBranch<F>,
    mode: CoordMode,
) -> Result<HSeries<F>, EdError> {
    let field = branch.x_series.field.clone();
    let xs = &branch.x_series;
    let ys = &branch.y_series;
    let xd = xs.derivative();
    let yd = ys.derivative();
    let (constant, u1_series, u2_series) = match mode {
        CoordMode::Cartesian => (xd.mul(xs).add(&yd.mul(ys)), xd.neg(), yd.neg()),
        CoordMode::Isotropic => (xd.mul(ys).add(&yd.mul(xs)), yd.neg(), xd.neg()),
    };
    Ok(zip_series_to_forms(
        &field,
        &constant,
        &u1_series,
        &u2_series,
        branch.alpha,
    ))
}

/// One elimination trial of the ED degree computation.
#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub u: (GaussianRational, GaussianRational),
    pub shear: GaussianRational,
    pub resultant_degree: usize,
    pub degree_after_singular_strip: usize,
    pub distinct_count: usize,
}

/// Audit trail of the randomized counting procedure.
#[derive(Clone, Debug, Default)]
pub struct EdCertificate {
    pub trials: Vec<TrialRecord>,
    pub shear_retries: u32,
}

fn random_rational(rng: &mut ChaCha8Rng) -> crate::numkernel::Rational {
    // height bound 997 per the sampling contract
    let num = rng.gen_range(-997i64..=997);
    let den = rng.gen_range(1i64..=997);
    rat(num, den)
}

pub(crate) fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(random_rational(rng), random_rational(rng))
}

/// A shear `x -> x + lambda y` that makes the sheared curve monic in `y`
/// (constant leading coefficient), so the resultant has no spurious
/// leading-coefficient factors.
fn find_shear(f: &QiBivariate, rng: &mut ChaCha8Rng) -> Result<GaussianRational, EdError> {
    let top = f.top_form();
    let check = |lambda: &GaussianRational| -> bool {
        let mut acc = GaussianRational::zero();
        for (&(a, _), c) in top.terms() {
            acc = &acc + &(c * &lambda.pow(a as i64));
        }
        !acc.is_zero()
    };
    for l in [0i64, 1, -1, 2, -2, 3]
        .into_iter()
        .map(|n| GaussianRational::from_ints(n, 0))
    {
        if check(&l) {
            return Ok(l);
        }
    }
    for _ in 0..32 {
        let l = GaussianRational::new(random_rational(rng), rat(0, 1));
        if check(&l) {
            return Ok(l);
        }
    }
    Err(EdError::NoShear)
}

/// x-coordinates of the singular locus of the (sheared) curve, as a
/// squarefree polynomial: common roots of `Res_y(f, f_x)` and `Res_y(f, f_y)`.
fn singular_x_locus(f_sheared: &MPoly) -> Result<QiPoly, EdError> {
    let fx = f_sheared.derivative(VAR_X);
    let fy = f_sheared.derivative(VAR_Y);
    let mut gcd_poly: Option<QiPoly> = None;
    for partial in [fx, fy] {
        if partial.is_constant() {
            return Ok(QiPoly::constant(QiField, GaussianRational::one()));
        }
        if partial.degree(VAR_Y) == 0 && f_sheared.degree(VAR_Y) == 0 {
            continue;
        }
        let r = resultant(f_sheared, &partial, VAR_Y)?;
        if r.is_zero() {
            continue;
        }
        let rp = mpoly_to_x_poly(&r);
        gcd_poly = Some(match gcd_poly {
            None => rp,
            Some(g) => g.gcd(&rp),
        });
    }
    let g = gcd_poly.unwrap_or_else(|| QiPoly::constant(QiField, GaussianRational::one()));
    if g.degree().unwrap_or(0) == 0 {
        return Ok(QiPoly::constant(QiField, GaussianRational::one()));
    }
    Ok(g.squarefree_part())
}

fn mpoly_to_x_poly(m: &MPoly) -> QiPoly {
    let mut coeffs = vec![GaussianRational::zero(); m.degree(VAR_X) as usize + 1];
    for (e, c) in m.terms() {
        assert!(e[VAR_Y] == 0 && e[VAR_U1] == 0 && e[VAR_U2] == 0);
        coeffs[e[VAR_X] as usize] = c.clone();
    }
    QiPoly::new(QiField, coeffs)
}

/// Count distinct critical points for one concrete data point; `None` when
/// the draw was degenerate and should be repeated.
fn count_critical_for_u(
    input: &CurveInput,
    g_u: &MPoly,
    lambda: &GaussianRational,
) -> Result<Option<TrialRecord>, EdError> {
    let f_sheared = MPoly::from_bivariate(input.f()).shear_x(lambda);
    let g_sheared = g_u.shear_x(lambda);
    if g_sheared.is_zero() {
        return Ok(None);
    }
    if g_sheared.degree(VAR_Y) == 0 && f_sheared.degree(VAR_Y) == 0 {
        return Ok(None);
    }
    let r = resultant(&f_sheared, &g_sheared, VAR_Y)?;
    if r.is_zero() {
        return Ok(None); // common component: degenerate draw
    }
    let r_poly = mpoly_to_x_poly(&r);
    let resultant_degree = r_poly.degree().unwrap_or(0);

    // critical points live on X_reg: remove x-coordinates of Sing X
    let sing = singular_x_locus(&f_sheared)?;
    let mut stripped = r_poly;
    if sing.degree().unwrap_or(0) >= 1 {
        loop {
            let g = stripped.gcd(&sing);
            if g.degree().unwrap_or(0) == 0 {
                break;
            }
            let (q, rem) = stripped.div_rem(&g);
            debug_assert!(rem.is_zero());
            stripped = q;
        }
    }
    let degree_after_singular_strip = stripped.degree().unwrap_or(0);
    let distinct_count = if degree_after_singular_strip == 0 {
        0
    } else {
        stripped.squarefree_part().degree().unwrap_or(0)
    };
    Ok(Some(TrialRecord {
        u: (GaussianRational::zero(), GaussianRational::zero()),
        shear: lambda.clone(),
        resultant_degree,
        degree_after_singular_strip,
        distinct_count,
    }))
}

/// The ED degree by randomized exact counting: per trial, draw a data point
/// with Gaussian-rational coordinates of bounded height, shear to separate
/// x-coordinates, eliminate `y`, strip the singular locus, and count the
/// distinct roots as the degree of the squarefree part. The maximum over
/// trials is the generic count; the certificate records every trial.
pub fn ed_degree(
    input: &CurveInput,
    trials: u32,
    seed: u64,
) -> Result<(u32, EdCertificate), EdError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = critical_poly(input);
    let mut cert = EdCertificate::default();

    let mut run_trial =
        |rng: &mut ChaCha8Rng, cert: &mut EdCertificate| -> Result<TrialRecord, EdError> {
            for _ in 0..8 {
                let u = (random_gaussian(rng), random_gaussian(rng));
                let lambda = find_shear(input.f(), rng)?;
                let g_u = g.eval_var(VAR_U1, &u.0).eval_var(VAR_U2, &u.1);
                match count_critical_for_u(input, &g_u, &lambda)? {
                    Some(mut rec) => {
                        rec.u = u;
                        return Ok(rec);
                    }
                    None => {
                        cert.shear_retries += 1;
                        continue;
                    }
                }
            }
            Err(EdError::NoShear)
        };

    for _ in 0..trials.max(1) {
        let rec = run_trial(&mut rng, &mut cert)?;
        cert.trials.push(rec);
    }
    let counts: Vec<usize> = cert.trials.iter().map(|t| t.distinct_count).collect();
    let has_agreement = |cs: &[usize]| {
        cs.len() < 2
            || cs
                .iter()
                .any(|c| cs.iter().filter(|&&x| x == *c).count() >= 2)
    };
    if !has_agreement(&counts) {
        // one retry round with fresh shears and data points
        cert.shear_retries += 1;
        for _ in 0..counts.len() {
            let rec = run_trial(&mut rng, &mut cert)?;
            cert.trials.push(rec);
        }
        let counts2: Vec<usize> = cert.trials.iter().map(|t| t.distinct_count).collect();
        if !has_agreement(&counts2) {
            return Err(EdError::UnstableCount(counts2));
        }
    }
    let max = cert
        .trials
        .iter()
        .map(|t| t.distinct_count)
        .max()
        .unwrap_or(0);
    Ok((max as u32, cert))
}

//! The singular discriminant: normal lines at singular points to the
//! tangent cone, with Morse numbers from the finite-branch h-series.

use crate::branches::puiseux::PuiseuxField;
use crate::branches::FiniteBranch;
use crate::edcore::{h_series_finite, CurveInput, EdError};
use crate::numkernel::{ApproxComplex, GaussianRational};
use crate::polyalg::affine::AffineLine;
use crate::polyalg::coeff::CoeffField;
use crate::polyalg::mpoly::{MPoly, VAR_X, VAR_Y};

use super::atyp::AnalyzerField;
use super::solve::solve_system;

/// Solutions of `f = f_x = f_y = 0`; exact where Q(i)-rational.
pub struct SingularPoints {
    pub rational: Vec<(GaussianRational, GaussianRational)>,
    pub approx: Vec<(ApproxComplex, ApproxComplex)>,
    pub warnings: Vec<String>,
}

pub fn singular_points(input: &CurveInput, bits: usize, seed: u64) -> Result<SingularPoints, EdError> {
    let f = MPoly::from_bivariate(input.f());
    let fx = f.derivative(VAR_X);
    let fy = f.derivative(VAR_Y);
    let mut warnings = Vec::new();
    // solve {f = 0, g = 0} for a nonzero partial, filter by the other
    let (g, filter) = if fx.is_zero() {
        (fy.clone(), fx.clone())
    } else {
        (fx.clone(), fy.clone())
    };
    if g.is_zero() {
        return Ok(SingularPoints {
            rational: Vec::new(),
            approx: Vec::new(),
            warnings,
        });
    }
    let sols = solve_system(&f, &g, bits, seed)?;
    if sols.degenerate {
        warnings.push("curve shares a component with a partial derivative; input may not be squarefree".into());
    }
    let rational: Vec<_> = sols
        .rational
        .into_iter()
        .filter(|(x, y)| {
            filter.is_zero()
                || filter
                    .eval_all(&[
                        x.clone(),
                        y.clone(),
                        GaussianRational::zero(),
                        GaussianRational::zero(),
                    ])
                    .is_zero()
        })
        .collect();
    let approx: Vec<_> = sols
        .approx
        .into_iter()
        .filter(|(x, y)| {
            filter.is_zero() || {
                let v = super::solve::eval_mpoly_approx(&filter, x, y, bits);
                crate::numkernel::approx_magnitude_below(&v, -(bits as i64) / 3)
            }
        })
        .collect();
    if !approx.is_empty() {
        warnings.push("singular points outside Q(i) reported numerically".into());
    }
    Ok(SingularPoints {
        rational,
        approx,
        warnings,
    })
}

/// Per-branch singular line data at a singular point.
#[derive(Clone, Debug)]
pub struct SingLineData {
    pub line: AffineLine,
    pub m_generic: Option<u32>,
    pub focal_point: Option<(GaussianRational, GaussianRational)>,
    pub m_exceptional: Option<u32>,
    pub truncation_warning: bool,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub enum SingOutcome {
    Line(SingLineData),
    NeedsHigherTruncation,
}

/// Analyze one branch at a singular (or, for testing the formulas, any)
/// point: the normal line to the branch tangent, the generic Morse number
/// `1 - alpha + ord`, and the focal point with its exceptional number.
pub fn sing_component_for_branch<F: AnalyzerField + PuiseuxField>(
    branch: &FiniteBranch<F>,
    input: &CurveInput,
    exhausted: bool,
) -> Result<SingOutcome, EdError> {
    let field = branch.x_series.field.clone();
    let h = h_series_finite(branch, input.mode())?;
    let alpha = branch.alpha as i64;
    let lead = h.coeff(alpha - 1);
    debug_assert!(
        !lead.is_constant(),
        "normal-line form must depend on the data point"
    );
    let line = match super::atyp::form_to_line(&lead) {
        Some(l) => l,
        None => return Ok(SingOutcome::NeedsHigherTruncation),
    };
    let exact = branch.exact;

    // generic Morse number: 1 - alpha + (first j >= alpha with nonzero
    // restriction to the line)
    let (base, dir) = line.parametrize();
    let b1 = field.from_gaussian(&base.0);
    let b2 = field.from_gaussian(&base.1);
    let d1 = field.from_gaussian(&dir.0);
    let d2 = field.from_gaussian(&dir.1);
    let mut m_generic = None;
    let mut focal_point = None;
    let mut j = alpha;
    while j <= h.known() {
        let hj = h.coeff(j);
        let c0 = hj.eval(&b1, &b2);
        let c1 = field.add(&field.mul(&hj.a, &d1), &field.mul(&hj.b, &d2));
        let z0 = field.is_zero(&c0);
        let z1 = field.is_zero(&c1);
        if z0 && z1 {
            j += 1;
            continue;
        }
        m_generic = Some((1 - alpha + j) as u32);
        if !z1 {
            let root = field.neg(&field.div(&c0, &c1));
            if let Some(s) = F::reconstruct(&root) {
                focal_point = Some(line.point_at(&s));
            }
        }
        break;
    }
    if m_generic.is_none() && !exhausted {
        return Ok(SingOutcome::NeedsHigherTruncation);
    }
    let mut truncation_warning = m_generic.is_none();

    // exceptional number at the focal point
    let mut m_exceptional = None;
    if let Some(fp) = &focal_point {
        let u1 = field.from_gaussian(&fp.0);
        let u2 = field.from_gaussian(&fp.1);
        let mut jj = alpha;
        let mut found = None;
        while jj <= h.known() {
            if !field.is_zero(&h.coeff(jj).eval(&u1, &u2)) {
                found = Some((1 - alpha + jj) as u32);
                break;
            }
            jj += 1;
        }
        match found {
            Some(m) => m_exceptional = Some(m),
            None if !exhausted => return Ok(SingOutcome::NeedsHigherTruncation),
            None => truncation_warning = true,
        }
    }
    Ok(SingOutcome::Line(SingLineData {
        line,
        m_generic,
        focal_point,
        m_exceptional,
        truncation_warning,
        exact,
    }))
}

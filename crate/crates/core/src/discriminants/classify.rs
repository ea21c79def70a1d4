//! Low-ED-degree classification: lines, isotropic lines, and the
//! circle-type curves whose distance functions can degenerate along a whole
//! level.

use crate::edcore::CurveInput;
use crate::numkernel::GaussianRational;
use crate::polyalg::bivariate::CoordMode;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Classification {
    pub is_line: bool,
    pub is_isotropic_line: bool,
    /// `f` proportional to `(x - c1)^2 + (y - c2)^2 - alpha`, `alpha != 0`
    /// (hyperbolic form `(z1 - c1)(z2 - c2) - alpha` in isotropic mode).
    pub is_circle_type: bool,
    pub circle_centre: Option<(GaussianRational, GaussianRational)>,
    /// 0 for an isotropic line, 1 for any other line.
    pub implied_ed_degree: Option<u32>,
    /// The total discriminant is the curve itself (isotropic line case).
    pub delta_ted_is_curve: bool,
}

pub fn classify_curve(input: &CurveInput) -> Classification {
    let f = input.f();
    let mut out = Classification::default();
    if f.total_degree() == 1 {
        out.is_line = true;
        let a = f.coeff((1, 0));
        let b = f.coeff((0, 1));
        let isotropic = match input.mode() {
            CoordMode::Cartesian => (&(&a * &a) + &(&b * &b)).is_zero(),
            CoordMode::Isotropic => (&a * &b).is_zero(),
        };
        out.is_isotropic_line = isotropic;
        out.implied_ed_degree = Some(if isotropic { 0 } else { 1 });
        out.delta_ted_is_curve = isotropic;
        return out;
    }
    if f.total_degree() != 2 {
        return out;
    }
    match input.mode() {
        CoordMode::Cartesian => {
            let lam = f.coeff((2, 0));
            if lam.is_zero() || f.coeff((0, 2)) != lam || !f.coeff((1, 1)).is_zero() {
                return out;
            }
            let two_lam = &lam + &lam;
            let c1 = -&(&f.coeff((1, 0)) / &two_lam);
            let c2 = -&(&f.coeff((0, 1)) / &two_lam);
            // alpha = c1^2 + c2^2 - f(0,0)/lambda must be nonzero
            let alpha = &(&(&c1 * &c1) + &(&c2 * &c2)) - &(&f.coeff((0, 0)) / &lam);
            if alpha.is_zero() {
                return out; // a pair of isotropic lines, not circle-type
            }
            out.is_circle_type = true;
            out.circle_centre = Some((c1, c2));
        }
        CoordMode::Isotropic => {
            let lam = f.coeff((1, 1));
            if lam.is_zero() || !f.coeff((2, 0)).is_zero() || !f.coeff((0, 2)).is_zero() {
                return out;
            }
            let c2 = -&(&f.coeff((1, 0)) / &lam);
            let c1 = -&(&f.coeff((0, 1)) / &lam);
            let alpha = &(&c1 * &c2) - &(&f.coeff((0, 0)) / &lam);
            if alpha.is_zero() {
                return out;
            }
            out.is_circle_type = true;
            out.circle_centre = Some((c1, c2));
        }
    }
    out
}

//! Morse number at an attractor on the regular part: one less than the
//! intersection multiplicity of the curve with the level set of the
//! distance function through the point.

use crate::branches::{local_branches, ExpansionConfig, FiniteBranches, PuiseuxError};
use crate::edcore::CurveInput;
use crate::numkernel::GaussianRational;
use crate::polyalg::bivariate::CoordMode;
use crate::polyalg::coeff::{CoeffField, QiField};
use crate::polyalg::series::{OrdResult, TruncatedSeries};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum MorseError {
    #[error("distance level contact order exceeds truncation {0}: non-isolated suspected")]
    NonIsolatedSuspected(i64),
    #[error(transparent)]
    Branch(#[from] PuiseuxError),
}

/// The series `D_u(x(t), y(t)) - D_u(p)` along one branch.
fn distance_level_series(
    xs: &TruncatedSeries<QiField>,
    ys: &TruncatedSeries<QiField>,
    p: &(GaussianRational, GaussianRational),
    u: &(GaussianRational, GaussianRational),
    mode: CoordMode,
) -> TruncatedSeries<QiField> {
    let field = QiField;
    let n = xs.known().min(ys.known());
    let cu1 = TruncatedSeries::monomial(field.clone(), u.0.clone(), 0, n);
    let cu2 = TruncatedSeries::monomial(field.clone(), u.1.clone(), 0, n);
    let a = xs.sub(&cu1);
    let b = ys.sub(&cu2);
    let level = match mode {
        CoordMode::Cartesian => a.mul(&a).add(&b.mul(&b)),
        CoordMode::Isotropic => a.mul(&b),
    };
    let p1 = &p.0 - &u.0;
    let p2 = &p.1 - &u.1;
    let at_p = match mode {
        CoordMode::Cartesian => &(&p1 * &p1) + &(&p2 * &p2),
        CoordMode::Isotropic => &p1 * &p2,
    };
    level.sub(&TruncatedSeries::monomial(field, at_p, 0, n))
}

/// Morse number of the attractor at a regular point `p` for the distance
/// function centred at `u`: the sum over local branches of the contact
/// order with the level set, minus one.
pub fn morse_regular(
    p: &(GaussianRational, GaussianRational),
    u: &(GaussianRational, GaussianRational),
    input: &CurveInput,
) -> Result<u32, MorseError> {
    let mut cfg = ExpansionConfig::for_degree(input.degree());
    loop {
        let bs = match local_branches(input.f(), p, &cfg)? {
            FiniteBranches::Exact(bs) => bs,
            FiniteBranches::Approx(_) => {
                // the caller asked at an exact point; approximate branch data
                // cannot certify an exact contact order
                return Err(MorseError::NonIsolatedSuspected(cfg.truncation));
            }
        };
        let mut total = 0i64;
        let mut need_more = false;
        for b in &bs {
            let s = distance_level_series(&b.x_series, &b.y_series, p, u, input.mode());
            match s.ord() {
                OrdResult::Exact(v) => total += v,
                OrdResult::Beyond(_) => {
                    need_more = true;
                    break;
                }
            }
        }
        if !need_more {
            debug_assert!(total >= 1);
            return Ok((total - 1) as u32);
        }
        if cfg.truncation >= cfg.max_truncation {
            return Err(MorseError::NonIsolatedSuspected(cfg.truncation));
        }
        cfg.truncation = (cfg.truncation * 2).min(cfg.max_truncation);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rat;
    use crate::polyalg::bivariate::QiBivariate;

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    fn parabola() -> CurveInput {
        // y - x^2
        let f = QiBivariate::from_terms(
            QiField,
            [((0, 1), gi(1, 0)), ((2, 0), gi(-1, 0))],
        );
        CurveInput::new(f, CoordMode::Cartesian).unwrap()
    }

    #[test]
    fn generic_center_gives_morse_point() {
        // any critical point of a generic center is plain Morse: m = 1
        let input = parabola();
        // p = (1, 1) on the curve; u on the normal line at p, off the evolute:
        // normal direction (2p, -1) -> (2, -1)? tangent (1, 2): normal through
        // p: (1,1) + s(2,-1) with s = 1: u = (3, 0)
        let m = morse_regular(&(gi(1, 0), gi(1, 0)), &(gi(3, 0), gi(0, 0)), &input).unwrap();
        assert_eq!(m, 1);
    }

    #[test]
    fn evolute_cusp_gives_a3_contact() {
        // parabola, u at the evolute cusp (0, 1/2), p = (0,0):
        // D_u - D_u(p) = t^4 on x = t, y = t^2 -> m = 3
        let input = parabola();
        let u = (
            GaussianRational::zero(),
            GaussianRational::new(rat(1, 2), rat(0, 1)),
        );
        let m = morse_regular(&(gi(0, 0), gi(0, 0)), &u, &input).unwrap();
        assert_eq!(m, 3);
    }

    #[test]
    fn generic_evolute_point_gives_a2_contact() {
        // u on the evolute away from its cusp: ord 3 contact, m = 2.
        // Evolute of y = x^2: u1 = -4t^3, u2 = 3t^2 + 1/2 at p = (t, t^2);
        // t = 1: u = (-4, 7/2), p = (1, 1).
        let input = parabola();
        let u = (
            gi(-4, 0),
            GaussianRational::new(rat(7, 2), rat(0, 1)),
        );
        let m = morse_regular(&(gi(1, 0), gi(1, 0)), &u, &input).unwrap();
        assert_eq!(m, 2);
    }
}

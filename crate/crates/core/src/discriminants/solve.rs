//! Exact solution of two-polynomial systems in the plane, with flagged
//! numeric output for the part outside Q(i).

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::edcore::EdError;
use crate::numkernel::{ApproxComplex, GaussianRational};
use crate::polyalg::coeff::{CoeffField, FloatField, QiField};
use crate::polyalg::mpoly::{MPoly, VAR_X, VAR_Y};
use crate::polyalg::resultant::resultant;
use crate::polyalg::roots::{aberth_roots, gaussian_rational_roots, numeric_roots_of_exact};
use crate::polyalg::univariate::{QiPoly, UnivariatePolynomial};

#[derive(Clone, Debug, Default)]
pub struct SystemSolutions {
    pub rational: Vec<(GaussianRational, GaussianRational)>,
    pub approx: Vec<(ApproxComplex, ApproxComplex)>,
    pub had_nonrational: bool,
    /// The system has a common curve component.
    pub degenerate: bool,
}

fn mpoly_to_x_poly(m: &MPoly) -> QiPoly {
    let mut coeffs = vec![GaussianRational::zero(); m.degree(VAR_X) as usize + 1];
    for (e, c) in m.terms() {
        debug_assert!(e[VAR_Y] == 0);
        coeffs[e[VAR_X] as usize] = c.clone();
    }
    QiPoly::new(QiField, coeffs)
}

fn mpoly_eval_x_to_y_poly(m: &MPoly, x0: &GaussianRational) -> QiPoly {
    let at = m.eval_var(VAR_X, x0);
    let mut coeffs = vec![GaussianRational::zero(); at.degree(VAR_Y) as usize + 1];
    for (e, c) in at.terms() {
        coeffs[e[VAR_Y] as usize] = c.clone();
    }
    QiPoly::new(QiField, coeffs)
}

fn shear_for(f: &MPoly, rng: &mut ChaCha8Rng) -> Result<GaussianRational, EdError> {
    // lambda with constant leading y-coefficient of f(x + lambda y, y)
    let d = f.total_degree() as u16;
    let check = |lambda: &GaussianRational| -> bool {
        let mut acc = GaussianRational::zero();
        for (e, c) in f.terms() {
            if (e[VAR_X] + e[VAR_Y]) as u32 == d as u32 {
                acc = &acc + &(c * &lambda.pow(e[VAR_X] as i64));
            }
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
        let l = crate::edcore::random_gaussian(rng);
        if check(&l) {
            return Ok(l);
        }
    }
    Err(EdError::NoShear)
}

/// All isolated solutions of `{f = 0, g = 0}`: exact where Q(i)-rational,
/// numeric (at `bits`) and flagged otherwise.
pub fn solve_system(f: &MPoly, g: &MPoly, bits: usize, seed: u64) -> Result<SystemSolutions, EdError> {
    let mut out = SystemSolutions::default();
    if g.is_zero() {
        out.degenerate = true;
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_50_1e);
    let lambda = shear_for(f, &mut rng)?;
    let fs = f.shear_x(&lambda);
    let gs = g.shear_x(&lambda);
    if fs.degree(VAR_Y) == 0 && gs.degree(VAR_Y) == 0 {
        // both independent of y after shear: treat as univariate system
        let a = mpoly_to_x_poly(&fs);
        let b = mpoly_to_x_poly(&gs);
        let h = a.gcd(&b);
        if h.degree().unwrap_or(0) == 0 {
            return Ok(out);
        }
        out.degenerate = true;
        return Ok(out);
    }
    let r = if gs.degree(VAR_Y) == 0 {
        gs.as_univariate(VAR_Y)[0].clone()
    } else {
        resultant(&fs, &gs, VAR_Y)?
    };
    if r.is_zero() {
        out.degenerate = true;
        return Ok(out);
    }
    if r.is_constant() {
        return Ok(out);
    }
    let r_poly = mpoly_to_x_poly(&r).squarefree_part();
    let (x_roots, x_rest) = gaussian_rational_roots(&r_poly);

    for (x0, _) in x_roots {
        // common y-roots over this x
        let fy = mpoly_eval_x_to_y_poly(&fs, &x0);
        let gy = mpoly_eval_x_to_y_poly(&gs, &x0);
        let h = if gy.is_zero() {
            fy.clone()
        } else if fy.is_zero() {
            gy.clone()
        } else {
            fy.gcd(&gy)
        };
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        let (y_roots, y_rest) = gaussian_rational_roots(&h);
        for (y0, _) in y_roots {
            // unshear and verify on the original system
            let x_orig = &x0 + &(&lambda * &y0);
            let vals = [x_orig.clone(), y0.clone(), GaussianRational::zero(), GaussianRational::zero()];
            if f.eval_all(&vals).is_zero() && g.eval_all(&vals).is_zero() {
                out.rational.push((x_orig, y0));
            }
        }
        if y_rest.degree().unwrap_or(0) >= 1 {
            out.had_nonrational = true;
            for ya in numeric_roots_of_exact(&y_rest, bits) {
                let xa = ApproxComplex::from_rational_parts(x0.re(), x0.im(), bits);
                let la = ApproxComplex::from_rational_parts(lambda.re(), lambda.im(), bits);
                out.approx.push((&xa + &(&la * &ya), ya));
            }
        }
    }

    if x_rest.degree().unwrap_or(0) >= 1 {
        out.had_nonrational = true;
        let field = FloatField::new(bits);
        for xa in numeric_roots_of_exact(&x_rest, bits) {
            // approximate y over this x: roots of f(x, .) with small g
            let fy_coeffs: Vec<ApproxComplex> = {
                let polys = fs.as_univariate(VAR_Y);
                polys
                    .iter()
                    .map(|c| {
                        let mut acc = ApproxComplex::zero(bits);
                        let mut xp = ApproxComplex::one(bits);
                        let cx = c.as_univariate(VAR_X);
                        for m in cx.iter() {
                            let g0 = m.constant_value();
                            let gc = ApproxComplex::from_rational_parts(g0.re(), g0.im(), bits);
                            acc = &acc + &(&gc * &xp);
                            xp = &xp * &xa;
                        }
                        acc
                    })
                    .collect()
            };
            let fp = UnivariatePolynomial::new(field.clone(), fy_coeffs);
            for ya in aberth_roots(&fp, bits) {
                // keep only approximate common roots
                let gval = eval_mpoly_approx(&gs, &xa, &ya, bits);
                if crate::numkernel::approx_magnitude_below(&gval, -(bits as i64) / 3) {
                    let la = ApproxComplex::from_rational_parts(lambda.re(), lambda.im(), bits);
                    out.approx.push((&xa + &(&la * &ya), ya));
                }
            }
        }
    }
    // deterministic order
    out.rational.sort_by_key(|p| format!("{:?},{:?}", p.0, p.1));
    Ok(out)
}

pub fn eval_mpoly_approx(
    m: &MPoly,
    x: &ApproxComplex,
    y: &ApproxComplex,
    bits: usize,
) -> ApproxComplex {
    let mut acc = ApproxComplex::zero(bits);
    for (e, c) in m.terms() {
        debug_assert!(e[2] == 0 && e[3] == 0);
        let mut term = ApproxComplex::from_rational_parts(c.re(), c.im(), bits);
        for _ in 0..e[VAR_X] {
            term = &term * x;
        }
        for _ in 0..e[VAR_Y] {
            term = &term * y;
        }
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn rational_intersections() {
        // {y^2 - x^3 = 0, y - x = 0}: (0,0) and (1,1)
        let f = MPoly::var(VAR_Y).pow(2).sub(&MPoly::var(VAR_X).pow(3));
        let g = MPoly::var(VAR_Y).sub(&MPoly::var(VAR_X));
        let sol = solve_system(&f, &g, 128, 1).unwrap();
        assert_eq!(sol.rational.len(), 2);
        assert!(sol.rational.contains(&(gi(0, 0), gi(0, 0))));
        assert!(sol.rational.contains(&(gi(1, 0), gi(1, 0))));
        assert!(!sol.had_nonrational);
    }

    #[test]
    fn degenerate_common_component() {
        let f = MPoly::var(VAR_Y).sub(&MPoly::var(VAR_X));
        let g = f.mul(&MPoly::var(VAR_X).add(&MPoly::one()));
        let sol = solve_system(&f, &g, 128, 1).unwrap();
        assert!(sol.degenerate);
    }

    #[test]
    fn nonrational_flagged() {
        // {y = 0, x^2 - 2 = 0}: two non-rational points
        let f = MPoly::var(VAR_Y);
        let g = MPoly::var(VAR_X).pow(2).sub(&MPoly::constant(gi(2, 0)));
        let sol = solve_system(&f, &g, 128, 1).unwrap();
        assert!(sol.rational.is_empty());
        assert!(sol.had_nonrational);
        assert_eq!(sol.approx.len(), 2);
    }
}

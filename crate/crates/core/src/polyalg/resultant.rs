//! Resultants by the fraction-free subresultant polynomial remainder
//! sequence, over the exact multivariate ring.

use thiserror::Error;

use super::mpoly::{pseudo_rem, MPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResultantError {
    #[error("both polynomials have degree 0 in the eliminated variable")]
    BothConstant,
}

/// Res(a, b) with respect to `var`, with the standard sign convention
/// Res(a, b) = (-1)^(deg a * deg b) Res(b, a).
pub fn resultant(a: &MPoly, b: &MPoly, var: usize) -> Result<MPoly, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Ok(MPoly::zero());
    }
    let da = a.degree(var) as i64;
    let db = b.degree(var) as i64;
    if da == 0 && db == 0 {
        return Err(ResultantError::BothConstant);
    }
    // Res(a, const c) = c^(deg a)
    if db == 0 {
        return Ok(b.pow(da as u32));
    }
    if da == 0 {
        // sign (-1)^(da*db) = +1 since da = 0
        return Ok(a.pow(db as u32));
    }
    let mut s = 1i32;
    let (mut f, mut g) = if da >= db {
        (a.clone(), b.clone())
    } else {
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        (b.clone(), a.clone())
    };

    // Sub-resultant sequence bookkeeping (Cohen, Algorithm 3.3.7).
    let mut gg = MPoly::one();
    let mut hh = MPoly::one();
    loop {
        let df = f.degree(var) as i64;
        let dg = g.degree(var) as i64;
        let delta = (df - dg) as u32;
        if df % 2 == 1 && dg % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&f, &g, var).expect("degree invariant");
        f = g;
        let divisor = gg.mul(&hh.pow(delta));
        g = r
            .exact_div(&divisor)
            .expect("subresultant division is exact");
        gg = f.as_univariate(var).last().unwrap().clone();
        if delta >= 1 {
            hh = gg
                .pow(delta)
                .exact_div(&hh.pow(delta - 1))
                .expect("h update is exact");
        }
        if g.is_zero() {
            return Ok(MPoly::zero());
        }
        if g.degree(var) == 0 {
            let df = f.degree(var) as u32;
            let res = g
                .pow(df)
                .exact_div(&hh.pow(df.saturating_sub(1)))
                .expect("final division is exact");
            let res = if s < 0 { res.neg() } else { res };
            return Ok(res);
        }
    }
}

/// Res(p, dp/dvar): vanishes exactly where p has a repeated root in `var`.
/// (The classical discriminant differs by a sign and a leading-coefficient
/// factor, which the callers quotient out anyway.)
pub fn discriminant(p: &MPoly, var: usize) -> Result<MPoly, ResultantError> {
    resultant(p, &p.derivative(var), var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::GaussianRational;
    use crate::polyalg::mpoly::{VAR_U1, VAR_X, VAR_Y};

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    /// Test oracle: Sylvester matrix determinant by fraction-free Bareiss
    /// elimination, independent of the PRS path under test.
    fn sylvester_resultant(a: &MPoly, b: &MPoly, var: usize) -> MPoly {
        let ac = a.as_univariate(var);
        let bc = b.as_univariate(var);
        let (m, n) = (ac.len() - 1, bc.len() - 1);
        if m == 0 && n == 0 {
            return MPoly::one();
        }
        let size = m + n;
        let mut mat = vec![vec![MPoly::zero(); size]; size];
        for row in 0..n {
            for (k, c) in ac.iter().enumerate() {
                mat[row][row + (m - k)] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in bc.iter().enumerate() {
                mat[n + row][row + (n - k)] = c.clone();
            }
        }
        // Bareiss: exact divisions keep entries polynomial.
        let mut sign = 1i32;
        let mut prev = MPoly::one();
        for k in 0..size {
            if mat[k][k].is_zero() {
                let swap = (k + 1..size).find(|&r| !mat[r][k].is_zero());
                match swap {
                    Some(r) => {
                        mat.swap(k, r);
                        sign = -sign;
                    }
                    None => return MPoly::zero(),
                }
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let num = mat[k][k]
                        .mul(&mat[i][j])
                        .sub(&mat[i][k].mul(&mat[k][j]));
                    mat[i][j] = num.exact_div(&prev).expect("Bareiss division");
                }
                mat[i][k] = MPoly::zero();
            }
            prev = mat[k][k].clone();
        }
        let det = mat[size - 1][size - 1].clone();
        if sign < 0 {
            det.neg()
        } else {
            det
        }
    }

    #[test]
    fn linear_case() {
        // Res_y(y - a, y - b) = a - b with a, b in the u-slots
        let y = MPoly::var(VAR_Y);
        let a = MPoly::var(VAR_U1);
        let b = MPoly::var(crate::polyalg::mpoly::VAR_U2);
        let r = resultant(&y.sub(&a), &y.sub(&b), VAR_Y).unwrap();
        assert_eq!(r, a.sub(&b));
    }

    #[test]
    fn sylvester_2x2_oracle() {
        // Res_y(y^2 - x, y) = -x by the 2x2 Sylvester determinant.
        let p = MPoly::var(VAR_Y).pow(2).sub(&MPoly::var(VAR_X));
        let q = MPoly::var(VAR_Y);
        let expected = sylvester_resultant(&p, &q, VAR_Y);
        assert_eq!(expected, MPoly::var(VAR_X).neg());
        assert_eq!(resultant(&p, &q, VAR_Y).unwrap(), expected);
    }

    #[test]
    fn both_constant_is_an_error() {
        let a = MPoly::constant(gi(2, 0));
        let b = MPoly::constant(gi(3, 0));
        assert_eq!(
            resultant(&a, &b, VAR_Y),
            Err(ResultantError::BothConstant)
        );
    }

    #[test]
    fn matches_sylvester_on_dense_randoms() {
        // deterministic pseudo-random small polynomials in (x, y)
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 7) as i64 - 3
        };
        for trial in 0..60 {
            let dy_a = 1 + (trial % 3) as u32;
            let dy_b = 1 + (trial % 4) as u32;
            let mut a = MPoly::zero();
            let mut b = MPoly::zero();
            for ya in 0..=dy_a {
                for xa in 0..=2u16 {
                    a.add_term([xa, ya as u16, 0, 0], gi(next(), next()));
                }
            }
            for yb in 0..=dy_b {
                for xb in 0..=2u16 {
                    b.add_term([xb, yb as u16, 0, 0], gi(next(), next()));
                }
            }
            if a.degree(VAR_Y) == 0 || b.degree(VAR_Y) == 0 {
                continue;
            }
            let prs = resultant(&a, &b, VAR_Y).unwrap();
            let syl = sylvester_resultant(&a, &b, VAR_Y);
            assert_eq!(prs, syl, "trial {trial}");
        }
    }

    #[test]
    fn swap_sign_rule() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % 9) as i64 - 4
        };
        for trial in 0..30 {
            let da = 1 + (trial % 4) as u16;
            let db = 1 + (trial % 3) as u16;
            let mut a = MPoly::zero();
            let mut b = MPoly::zero();
            for e in 0..=da {
                a.add_term([0, e, 0, 0], gi(next(), next()));
            }
            for e in 0..=db {
                b.add_term([0, e, 0, 0], gi(next(), next()));
            }
            a.add_term([1, 0, 0, 0], gi(1, 0));
            b.add_term([1, 0, 0, 0], gi(1, 0));
            if a.degree(VAR_Y) == 0 || b.degree(VAR_Y) == 0 {
                continue;
            }
            let r1 = resultant(&a, &b, VAR_Y).unwrap();
            let r2 = resultant(&b, &a, VAR_Y).unwrap();
            let sign = (a.degree(VAR_Y) as u32 * b.degree(VAR_Y) as u32) % 2;
            let expect = if sign == 1 { r2.neg() } else { r2 };
            assert_eq!(r1, expect, "trial {trial}");
        }
    }

    #[test]
    fn resultant_with_derivative_detects_squares() {
        // squarefree p: nonzero; squared factor: zero
        let p = MPoly::var(VAR_Y)
            .pow(2)
            .sub(&MPoly::var(VAR_X)); // y^2 - x, squarefree
        assert!(!discriminant(&p, VAR_Y).unwrap().is_zero());
        let q = MPoly::var(VAR_Y).sub(&MPoly::var(VAR_X)).pow(2);
        assert!(discriminant(&q, VAR_Y).unwrap().is_zero());
    }

    #[test]
    fn cusp_elimination_data() {
        // Res_y(y^2 - x^3, 2y(x - u1) + 3x^2(y - u2)) vanishes exactly at the
        // x-coordinates of the critical system; cross-checked against the
        // Sylvester oracle and, in the edcore tests, against numeric roots.
        let x = MPoly::var(VAR_X);
        let y = MPoly::var(VAR_Y);
        let u1 = MPoly::var(VAR_U1);
        let u2 = MPoly::var(crate::polyalg::mpoly::VAR_U2);
        let f = y.pow(2).sub(&x.pow(3));
        let g = y
            .scale(&gi(2, 0))
            .mul(&x.sub(&u1))
            .add(&x.pow(2).scale(&gi(3, 0)).mul(&y.sub(&u2)));
        let r = resultant(&f, &g, crate::polyalg::mpoly::VAR_Y).unwrap();
        let oracle = sylvester_resultant(&f, &g, crate::polyalg::mpoly::VAR_Y);
        assert_eq!(r, oracle);
        // x^3 divides the resultant (the cusp point itself)
        let x3 = x.pow(3);
        assert!(r.exact_div(&x3).is_some());
    }
}

//! Polynomial root finding: numeric simultaneous iteration for complex
//! roots, and exact extraction of the Q(i)-rational roots.
//!
//! Exact extraction monicizes over the Gaussian integers, locates all roots
//! numerically, rounds each candidate to the nearest lattice point and then
//! verifies it by exact substitution, so reported rational roots are certain.
//! Deflation is exact, and the non-rational remainder factor is returned.

use num_bigint::BigInt;
use num_traits::{Euclid, One};

use super::coeff::{CoeffField, FloatField, QiField};
use super::univariate::{QiPoly, UnivariatePolynomial};
use crate::numkernel::{float_to_rational, ApproxComplex, BigFloat, GaussianRational, Rational};

/// All complex roots of a polynomial with approximate coefficients, by the
/// Aberth–Ehrlich simultaneous iteration started from an f64 circle.
pub fn aberth_roots(p: &UnivariatePolynomial<FloatField>, bits: usize) -> Vec<ApproxComplex> {
    let deg = match p.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let field = FloatField::new(bits);
    let lc_inv = field.inv(&p.lc());
    let monic: Vec<ApproxComplex> = p.coeffs().iter().map(|c| field.mul(c, &lc_inv)).collect();
    let dp: Vec<ApproxComplex> = monic
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&BigFloat::from(k as i64)))
        .collect();

    // Cauchy-style inclusion radius from f64 magnitudes.
    let mut radius: f64 = 0.0;
    for c in &monic[..deg] {
        let (re, im) = c.to_f64_pair();
        radius = radius.max((re * re + im * im).sqrt());
    }
    let radius = 1.0 + radius.min(1e12);

    let mut z: Vec<ApproxComplex> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.41;
            ApproxComplex::from_f64(radius * theta.cos(), radius * theta.sin(), bits)
        })
        .collect();

    let eval = |coeffs: &[ApproxComplex], at: &ApproxComplex| -> ApproxComplex {
        let mut acc = ApproxComplex::zero(bits);
        for c in coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    };

    let tiny = -(bits as i64) - 8;
    for _ in 0..220 {
        let mut moved = false;
        for i in 0..deg {
            let pv = eval(&monic, &z[i]);
            let dv = eval(&dp, &z[i]);
            if crate::numkernel::approx_magnitude_below(&pv, tiny) {
                continue;
            }
            let ratio = match dv.checked_inverse() {
                Some(inv) => &pv * &inv,
                None => {
                    z[i] = &z[i] + &ApproxComplex::from_f64(1e-3, 2e-3, bits);
                    moved = true;
                    continue;
                }
            };
            let mut sum = ApproxComplex::zero(bits);
            for j in 0..deg {
                if j != i {
                    let diff = &z[i] - &z[j];
                    match diff.checked_inverse() {
                        Some(inv) => sum = &sum + &inv,
                        None => {}
                    }
                }
            }
            let denom = &ApproxComplex::one(bits) - &(&ratio * &sum);
            let step = match denom.checked_inverse() {
                Some(inv) => &ratio * &inv,
                None => ratio.clone(),
            };
            z[i] = &z[i] - &step;
            if !crate::numkernel::approx_magnitude_below(&step, tiny) {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    z
}

/// Numeric roots of an exact polynomial at the requested precision.
pub fn numeric_roots_of_exact(p: &QiPoly, bits: usize) -> Vec<ApproxComplex> {
    let field = FloatField::new(bits);
    let ap = UnivariatePolynomial::new(
        field.clone(),
        p.coeffs().iter().map(|c| field.from_gaussian(c)).collect(),
    );
    aberth_roots(&ap, bits)
}

fn round_to_bigint(x: &BigFloat) -> BigInt {
    let r = float_to_rational(x);
    let two = BigInt::from(2);
    let num2 = r.numer() * &two;
    let den = r.denom().clone();
    // nearest integer: floor((2n + d) / 2d)
    let shifted = num2 + &den;
    let den2 = den * &two;
    Euclid::div_euclid(&shifted, &den2)
}

/// Gaussian integer nearest to an approximate complex value.
fn round_to_gaussian_integer(z: &ApproxComplex) -> GaussianRational {
    GaussianRational::new(
        Rational::from(round_to_bigint(z.re())),
        Rational::from(round_to_bigint(z.im())),
    )
}

/// All Q(i)-rational roots of an exact polynomial, with multiplicities, plus
/// the exactly deflated non-rational remainder factor.
pub fn gaussian_rational_roots(p: &QiPoly) -> (Vec<(GaussianRational, usize)>, QiPoly) {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut roots = Vec::new();
    let mut cur = p.clone();

    // zero roots first
    let (m0, rest) = cur.root_multiplicity(&GaussianRational::zero());
    if m0 > 0 {
        roots.push((GaussianRational::zero(), m0));
        cur = rest;
    }
    if cur.degree().unwrap_or(0) == 0 {
        return (roots, cur);
    }

    // clear denominators to Z[i]
    let mut lcm = BigInt::one();
    for c in cur.coeffs() {
        for part in [c.re(), c.im()] {
            let d = part.denom();
            lcm = num_integer::lcm(lcm.clone(), d.clone());
        }
    }
    let scale = GaussianRational::from_rational(Rational::from(lcm));
    let zi = cur.scale(&scale);

    // monicize: roots of q(w) = lc^(n-1) p(w / lc) are lc * (roots of p)
    let lc = zi.lc();
    let n = zi.degree().unwrap();
    let q = UnivariatePolynomial::new(
        QiField,
        zi.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * &lc.pow(n as i64 - 1 - k as i64))
            .collect::<Vec<_>>(),
    );
    debug_assert!(q.lc().is_one());

    // all numeric roots of the squarefree part; each candidate is rounded to
    // the Gaussian lattice and verified exactly
    let sf = q.squarefree_part();
    let numeric = numeric_roots_of_exact(&sf, 192);
    let mut seen: Vec<GaussianRational> = Vec::new();
    for z in numeric {
        let w = round_to_gaussian_integer(&z);
        if seen.contains(&w) {
            continue;
        }
        seen.push(w.clone());
        if !q.eval(&w).is_zero() {
            continue;
        }
        let x0 = &w / &lc;
        let (m, rest) = cur.root_multiplicity(&x0);
        if m > 0 {
            roots.push((x0, m));
            cur = rest;
        }
    }
    (roots, cur)
}

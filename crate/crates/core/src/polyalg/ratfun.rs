//! Univariate rational functions over Q(i), for exact evolute sampling on
//! rationally parametrized curves.

use std::fmt;

use super::coeff::{CoeffField, QiField};
use super::univariate::{QiPoly, UnivariatePolynomial};
use crate::numkernel::GaussianRational;

/// Reduced fraction of polynomials with monic denominator.
#[derive(Clone, PartialEq)]
pub struct RationalFunction {
    num: QiPoly,
    den: QiPoly,
}

impl RationalFunction {
    pub fn new(num: QiPoly, den: QiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lcinv = QiField.inv(&den.lc());
        RationalFunction {
            num: num.scale(&lcinv),
            den: den.scale(&lcinv),
        }
    }

    pub fn from_poly(p: QiPoly) -> Self {
        RationalFunction {
            num: p,
            den: UnivariatePolynomial::constant(QiField, GaussianRational::one()),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        RationalFunction::from_poly(UnivariatePolynomial::constant(QiField, c))
    }

    pub fn num(&self) -> &QiPoly {
        &self.num
    }

    pub fn den(&self) -> &QiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RationalFunction::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero function");
        RationalFunction::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RationalFunction::new(n, self.den.mul(&self.den))
    }

    /// Exact evaluation; `None` at a pole.
    pub fn eval(&self, at: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(at) / d)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

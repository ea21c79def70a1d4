//! Arbitrary-precision complex floating values, the substrate of the
//! numeric oracle and of the explicit fallback mode of the branch expander.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_base::Abs;
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use super::Rational;

/// Binary big-float with round-to-nearest-even; each value carries its own
/// working precision in bits.
pub type BigFloat = FBig<HalfEven, 2>;

fn bigint_to_ibig(n: &BigInt) -> dashu_int::IBig {
    // num-bigint emits unsigned magnitude bytes; parse as UBig, then sign.
    let (sign, bytes) = n.to_bytes_le();
    let v = dashu_int::IBig::from(dashu_int::UBig::from_le_bytes(&bytes));
    if sign == Sign::Minus {
        -v
    } else {
        v
    }
}

fn ibig_to_bigint(n: &dashu_int::IBig) -> BigInt {
    // Round-trips through the decimal string; conversions are rare.
    n.to_string().parse().expect("IBig decimal round-trip")
}

/// Correctly rounded conversion of an exact rational to `bits` of binary
/// precision: exact integer inputs, one rounded division.
pub fn rational_to_float(r: &Rational, bits: usize) -> BigFloat {
    let num = BigFloat::from(bigint_to_ibig(r.numer()));
    let den = BigFloat::from(bigint_to_ibig(r.denom()));
    let ctx = dashu_float::Context::<HalfEven>::new(bits);
    ctx.div(num.repr(), den.repr())
        .expect("finite rational division")
        .value()
}

/// Exact value of a binary float as a rational (mantissa * 2^exponent).
pub fn float_to_rational(f: &BigFloat) -> Rational {
    let (mantissa, exponent) = f.clone().into_repr().into_parts();
    let m = ibig_to_bigint(&mantissa);
    if exponent >= 0 {
        Rational::from(m << exponent as usize)
    } else {
        Rational::new(m, BigInt::from(1) << (-exponent) as usize)
    }
}

/// A complex floating value at configurable precision. dashu floats have no
/// NaN or infinity, so overflow states surface as explicit errors upstream.
#[derive(Clone, PartialEq)]
pub struct ApproxComplex {
    re: BigFloat,
    im: BigFloat,
}

impl ApproxComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        ApproxComplex { re, im }
    }

    pub fn zero(bits: usize) -> Self {
        let z = BigFloat::ZERO.with_precision(bits).value();
        ApproxComplex::new(z.clone(), z)
    }

    pub fn one(bits: usize) -> Self {
        ApproxComplex::new(
            BigFloat::ONE.with_precision(bits).value(),
            BigFloat::ZERO.with_precision(bits).value(),
        )
    }

    pub fn from_f64(re: f64, im: f64, bits: usize) -> Self {
        ApproxComplex::new(
            BigFloat::try_from(re)
                .expect("finite f64")
                .with_precision(bits)
                .value(),
            BigFloat::try_from(im)
                .expect("finite f64")
                .with_precision(bits)
                .value(),
        )
    }

    /// Correctly rounded conversion from exact parts; relative error is at
    /// most `2^(1-bits)` per part.
    pub fn from_rational_parts(re: &Rational, im: &Rational, bits: usize) -> Self {
        ApproxComplex::new(rational_to_float(re, bits), rational_to_float(im, bits))
    }

    pub fn re(&self) -> &BigFloat {
        &self.re
    }

    pub fn im(&self) -> &BigFloat {
        &self.im
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().significand().is_zero() && self.im.repr().significand().is_zero()
    }

    pub fn conjugate(&self) -> Self {
        ApproxComplex::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2` of the complex value seen as |z|^2 (Hermitian square).
    pub fn norm_sqr(&self) -> BigFloat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    pub fn checked_inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.repr().significand().is_zero() {
            return None;
        }
        Some(ApproxComplex::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        ApproxComplex::new(&self.re * s, &self.im * s)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64().value(), self.im.to_f64().value())
    }

    /// Exact rational value of both parts (the stored dyadic value).
    pub fn to_rational_parts(&self) -> (Rational, Rational) {
        (float_to_rational(&self.re), float_to_rational(&self.im))
    }
}

impl fmt::Debug for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "{re:?}{im:+?}i~{}b", self.precision())
    }
}

impl fmt::Display for ApproxComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "{re}{im:+}i")
    }
}

macro_rules! cbinop {
    ($trait:ident, $fn:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&ApproxComplex> for &ApproxComplex {
            type Output = ApproxComplex;
            fn $fn(self, rhs: &ApproxComplex) -> ApproxComplex {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for ApproxComplex {
            type Output = ApproxComplex;
            fn $fn(self, rhs: ApproxComplex) -> ApproxComplex {
                $trait::$fn(&self, &rhs)
            }
        }
    };
}

cbinop!(Add, add, |a, b| ApproxComplex::new(
    &a.re + &b.re,
    &a.im + &b.im
));
cbinop!(Sub, sub, |a, b| ApproxComplex::new(
    &a.re - &b.re,
    &a.im - &b.im
));
cbinop!(Mul, mul, |a, b| ApproxComplex::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
cbinop!(Div, div, |a, b| {
    a * &b.checked_inverse().expect("division by (numeric) zero")
});

impl Neg for &ApproxComplex {
    type Output = ApproxComplex;
    fn neg(self) -> ApproxComplex {
        ApproxComplex::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for ApproxComplex {
    type Output = ApproxComplex;
    fn neg(self) -> ApproxComplex {
        -&self
    }
}

/// Nearest rational with denominator below the cap, by continued
/// fractions on the exact dyadic value; `None` when no convergent lands
/// within `2^log2_tol`.
pub fn rationalize(x: &BigFloat, max_den: u64, log2_tol: i64) -> Option<Rational> {
    let exact = float_to_rational(x);
    let tol = Rational::new(BigInt::from(1), BigInt::from(1) << (-log2_tol).max(0) as usize);
    // continued fraction convergents of `exact`
    let mut a = exact.numer().clone();
    let mut b = exact.denom().clone();
    let (mut p0, mut p1) = (BigInt::from(1), a.clone() / b.clone());
    let (mut q0, mut q1) = (BigInt::from(0), BigInt::from(1));
    // first convergent is floor(exact)
    {
        use num_traits::Euclid;
        let fl = Euclid::div_euclid(&a, &b);
        p1 = fl.clone();
        let r = &a - &fl * &b;
        a = b;
        b = r;
    }
    for _ in 0..128 {
        let cand = Rational::new(p1.clone(), q1.clone().max(BigInt::from(1)));
        if q1 <= BigInt::from(max_den) && (cand.clone() - &exact).abs() <= tol {
            return Some(cand);
        }
        if b.is_zero() || q1 > BigInt::from(max_den) {
            break;
        }
        use num_traits::Euclid;
        let fl = Euclid::div_euclid(&a, &b);
        let r = &a - &fl * &b;
        let p2 = &fl * &p1 + &p0;
        let q2 = &fl * &q1 + &q0;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        a = b;
        b = r;
    }
    None
}

/// Nearest Gaussian rational to an approximate complex value; `None` when
/// either part fails to rationalize.
pub fn rationalize_complex(
    z: &ApproxComplex,
    max_den: u64,
    log2_tol: i64,
) -> Option<crate::numkernel::GaussianRational> {
    let re = rationalize(&z.re, max_den, log2_tol)?;
    let im = rationalize(&z.im, max_den, log2_tol)?;
    Some(crate::numkernel::GaussianRational::new(re, im))
}

/// |a| <= 2^log2_bound, cheaply.
pub fn magnitude_below(a: &BigFloat, log2_bound: i64) -> bool {
    let bound = BigFloat::ONE << log2_bound as isize;
    a.clone().abs() <= bound
}

/// Both parts at or below 2^log2_bound in magnitude.
pub fn approx_magnitude_below(a: &ApproxComplex, log2_bound: i64) -> bool {
    magnitude_below(&a.re, log2_bound) && magnitude_below(&a.im, log2_bound)
}

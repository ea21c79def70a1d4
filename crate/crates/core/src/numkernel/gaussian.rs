//! The Gaussian rationals Q(i): the coefficient field of the exact layer.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{rat_int, NumError, Rational};

/// An element `re + im*i` of Q(i). Both parts are canonical rationals, so
/// equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// `a + b*i` from integer parts.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GaussianRational::new(rat_int(a), rat_int(b))
    }

    pub fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// The field norm `re^2 + im^2`, a nonnegative rational. It is zero
    /// exactly on zero, and multiplicative.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Inverse via conjugate over norm: one rational inversion, no field
    /// extension.
    pub fn checked_inverse(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn inverse(&self) -> Self {
        self.checked_inverse().expect("inverse of zero in Q(i)")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        Ok(self * &rhs.checked_inverse()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Max of numerator/denominator magnitudes over both parts; a cheap
    /// height measure for random sampling.
    pub fn height(&self) -> BigInt {
        let parts = [
            self.re.numer().abs(),
            self.re.denom().clone(),
            self.im.numer().abs(),
            self.im.denom().clone(),
        ];
        parts.into_iter().max().unwrap()
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical textual form in the coefficient literal grammar:
/// `a/b`, `a/b+c/d*i`, `i`, `-i`. `Display` and `FromStr` round-trip.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag(w: &mut fmt::Formatter<'_>, im: &Rational, leading: bool) -> fmt::Result {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if leading {
                ""
            } else {
                "+"
            };
            if mag.is_one() {
                write!(w, "{}i", sign)
            } else {
                write!(w, "{}{}*i", sign, mag)
            }
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return imag(f, &self.im, true);
        }
        write!(f, "{}", self.re)?;
        imag(f, &self.im, false)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid Q(i) literal `{input}`: {reason}")]
pub struct ParseGaussianError {
    pub input: String,
    pub reason: String,
}

impl FromStr for GaussianRational {
    type Err = ParseGaussianError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| ParseGaussianError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty literal"));
        }
        // Split into at most two signed terms.
        let bytes = compact.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if b == b'+' || b == b'-' {
                if split.is_some() {
                    return Err(err("more than two terms"));
                }
                split = Some(idx);
            }
        }
        let (first, second) = match split {
            Some(idx) => (&compact[..idx], Some(&compact[idx..])),
            None => (compact.as_str(), None),
        };
        let mut re = Rational::zero();
        let mut im = Rational::zero();
        for term in std::iter::once(first).chain(second) {
            let (is_imag, value) = parse_term(term).map_err(|reason| ParseGaussianError {
                input: s.to_string(),
                reason,
            })?;
            let slot = if is_imag { &mut im } else { &mut re };
            if !slot.is_zero() {
                return Err(err("repeated real or imaginary term"));
            }
            *slot = value;
        }
        Ok(GaussianRational::new(re, im))
    }
}

/// One signed term: `3`, `-3/4`, `i`, `-i`, `3*i`, `-3/4*i`.
fn parse_term(term: &str) -> Result<(bool, Rational), String> {
    let (sign, body) = match term.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return Err("empty term".to_string());
    }
    if body == "i" {
        return Ok((true, rat_int(sign)));
    }
    let (num_part, is_imag) = match body.strip_suffix("*i").or_else(|| body.strip_suffix('i')) {
        Some(rest) if !rest.is_empty() => (rest, true),
        Some(_) => return Err("empty coefficient before i".to_string()),
        None => (body, false),
    };
    let mut pieces = num_part.splitn(2, '/');
    let numer: BigInt = pieces
        .next()
        .unwrap()
        .parse()
        .map_err(|_| format!("bad integer in `{}`", term))?;
    let denom: BigInt = match pieces.next() {
        Some(d) => d
            .parse()
            .map_err(|_| format!("bad denominator in `{}`", term))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok((is_imag, Rational::new(numer * sign, denom)))
}

macro_rules! binop {
    ($trait:ident, $fn:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $fn(self, rhs: &GaussianRational) -> GaussianRational {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $fn(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$fn(&self, &rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $fn(self, rhs: &GaussianRational) -> GaussianRational {
                $trait::$fn(&self, rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $fn(self, rhs: GaussianRational) -> GaussianRational {
                $trait::$fn(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
binop!(Mul, mul, |a, b| GaussianRational::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));
binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero in Q(i)"));

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::rat;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn conjugate_product() {
        // (1+i)(1-i) = 2
        assert_eq!(&g(1, 1) * &g(1, -1), g(2, 0));
    }

    #[test]
    fn unit_inverse() {
        assert_eq!(GaussianRational::i().inverse(), g(0, -1));
    }

    #[test]
    fn norm_by_hand() {
        // norm(3/2 + 2i) = (3/2)^2 + 2^2 = 25/4, evaluated by hand.
        let v = GaussianRational::new(rat(3, 2), rat_int(2));
        assert_eq!(v.norm(), rat(25, 4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            g(1, 2).checked_div(&GaussianRational::zero()),
            Err(NumError::DivisionByZero)
        );
    }

    #[test]
    fn literal_grammar_examples() {
        for (text, want) in [
            ("3/2", GaussianRational::new(rat(3, 2), rat_int(0))),
            ("3/2+1/4*i", GaussianRational::new(rat(3, 2), rat(1, 4))),
            ("i", g(0, 1)),
            ("-i", g(0, -1)),
            (" 1 - i ", g(1, -1)),
            ("-5", g(-5, 0)),
            ("2*i", g(0, 2)),
            ("-2/3*i", GaussianRational::new(rat_int(0), rat(-2, 3))),
        ] {
            assert_eq!(text.parse::<GaussianRational>().unwrap(), want, "{}", text);
        }
        assert!("1+2".parse::<GaussianRational>().is_err());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
        (
            -50i64..50,
            1i64..20,
            -50i64..50,
            1i64..20,
        )
            .prop_map(|(a, b, c, d)| GaussianRational::new(rat(a, b), rat(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn norm_is_multiplicative(a in arb_gaussian(), b in arb_gaussian()) {
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn inverse_is_exact(a in arb_gaussian()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inverse(), GaussianRational::one());
        }

        #[test]
        fn literal_round_trip(a in arb_gaussian()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<GaussianRational>().unwrap(), a);
        }
    }
}

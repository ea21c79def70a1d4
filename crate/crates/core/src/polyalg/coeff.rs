//! Coefficient fields for the polynomial and series layer.
//!
//! The same generic containers run over exact Gaussian rationals and, in
//! fallback mode, over big complex floats with thresholded zero tests. The
//! field object travels with every polynomial, series and form.

use std::fmt;

use crate::numkernel::{ApproxComplex, GaussianRational};

pub trait CoeffField: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_gaussian(&self, g: &GaussianRational) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_gaussian(&GaussianRational::from_ints(n, 0))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Field division; panics on a zero divisor (callers gate on `is_zero`).
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.div(&self.one(), a)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Whether arithmetic and zero tests are exact.
    fn exact(&self) -> bool;
}

/// The exact field Q(i).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QiField;

impl CoeffField for QiField {
    type Elem = GaussianRational;

    fn zero(&self) -> GaussianRational {
        GaussianRational::zero()
    }
    fn one(&self) -> GaussianRational {
        GaussianRational::one()
    }
    fn from_gaussian(&self, g: &GaussianRational) -> GaussianRational {
        g.clone()
    }
    fn is_zero(&self, a: &GaussianRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a + b
    }
    fn sub(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a - b
    }
    fn mul(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a * b
    }
    fn neg(&self, a: &GaussianRational) -> GaussianRational {
        -a
    }
    fn div(&self, a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
        a / b
    }
    fn exact(&self) -> bool {
        true
    }
}

/// Complex floats at a fixed working precision. Zero tests compare |re| and
/// |im| against `2^zero_log2`; results derived through this field carry an
/// `exact = false` flag upstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloatField {
    pub bits: usize,
    pub zero_log2: i64,
}

impl FloatField {
    pub fn new(bits: usize) -> Self {
        FloatField {
            bits,
            zero_log2: -(bits as i64) / 2,
        }
    }
}

impl CoeffField for FloatField {
    type Elem = ApproxComplex;

    fn zero(&self) -> ApproxComplex {
        ApproxComplex::zero(self.bits)
    }
    fn one(&self) -> ApproxComplex {
        ApproxComplex::one(self.bits)
    }
    fn from_gaussian(&self, g: &GaussianRational) -> ApproxComplex {
        ApproxComplex::from_rational_parts(g.re(), g.im(), self.bits)
    }
    fn is_zero(&self, a: &ApproxComplex) -> bool {
        crate::numkernel::approx_magnitude_below(a, self.zero_log2)
    }
    fn add(&self, a: &ApproxComplex, b: &ApproxComplex) -> ApproxComplex {
        a + b
    }
    fn sub(&self, a: &ApproxComplex, b: &ApproxComplex) -> ApproxComplex {
        a - b
    }
    fn mul(&self, a: &ApproxComplex, b: &ApproxComplex) -> ApproxComplex {
        a * b
    }
    fn neg(&self, a: &ApproxComplex) -> ApproxComplex {
        -a
    }
    fn div(&self, a: &ApproxComplex, b: &ApproxComplex) -> ApproxComplex {
        a / b
    }
    fn exact(&self) -> bool {
        false
    }
}

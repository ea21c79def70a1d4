//! Truncated Laurent/power series in one parameter.
//!
//! A series stores coefficients for exponents `val ..= known` and records
//! `known` explicitly: coefficients beyond the truncation order are unknown
//! and never assumed zero. Every order-of-vanishing query answers either
//! `Exact(v)` or `Beyond(known)`.

use std::fmt;

use super::coeff::CoeffField;
use super::univariate::UnivariatePolynomial;

/// Result of an order-of-vanishing query on a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrdResult {
    /// The lowest nonvanishing exponent.
    Exact(i64),
    /// Every stored coefficient vanishes; the order exceeds the truncation.
    Beyond(i64),
}

impl OrdResult {
    pub fn exact(self) -> Option<i64> {
        match self {
            OrdResult::Exact(v) => Some(v),
            OrdResult::Beyond(_) => None,
        }
    }
}

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<F: CoeffField> {
    pub field: F,
    /// Exponent of `coeffs[0]`; may be negative for Laurent use.
    val: i64,
    coeffs: Vec<F::Elem>,
    /// Highest exponent with a stored (trusted) coefficient.
    known: i64,
}

impl<F: CoeffField> TruncatedSeries<F> {
    pub fn new(field: F, val: i64, mut coeffs: Vec<F::Elem>, known: i64) -> Self {
        let want = (known - val + 1).max(0) as usize;
        assert!(
            coeffs.len() >= want,
            "series storage shorter than its claimed truncation"
        );
        coeffs.truncate(want);
        let mut s = TruncatedSeries {
            field,
            val,
            coeffs,
            known,
        };
        s.trim_leading_zeros();
        s
    }

    /// Drop trusted zero coefficients at the bottom of the stored range;
    /// raises `val` toward the true valuation, tightening product bounds.
    fn trim_leading_zeros(&mut self) {
        while self.coeffs.len() > 1 && self.field.is_zero(&self.coeffs[0]) {
            self.coeffs.remove(0);
            self.val += 1;
        }
    }

    /// The zero series, known through order `known`.
    pub fn zero(field: F, known: i64) -> Self {
        let coeffs = vec![field.zero(); (known + 1).max(0) as usize];
        TruncatedSeries {
            field,
            val: 0,
            coeffs,
            known,
        }
    }

    /// `c * t^e`, known through `known`.
    pub fn monomial(field: F, c: F::Elem, e: i64, known: i64) -> Self {
        let mut s = TruncatedSeries::zero(field, known - e);
        if !s.coeffs.is_empty() {
            s.coeffs[0] = c;
        }
        s.val = e;
        s.known = known;
        s
    }

    pub fn from_polynomial(p: &UnivariatePolynomial<F>, known: i64) -> Self {
        let field = p.field.clone();
        let mut s = TruncatedSeries::zero(field.clone(), known);
        for (k, c) in p.coeffs().iter().enumerate() {
            if (k as i64) <= known {
                s.set_coeff(k as i64, c.clone());
            }
        }
        s.trim_leading_zeros();
        s
    }

    pub fn known(&self) -> i64 {
        self.known
    }

    pub fn storage_val(&self) -> i64 {
        self.val
    }

    /// Coefficient of `t^e`. Zero below the stored range; panics above the
    /// truncation order, where the coefficient is genuinely unknown.
    pub fn coeff(&self, e: i64) -> F::Elem {
        assert!(
            e <= self.known,
            "coefficient of t^{e} beyond truncation {}",
            self.known
        );
        if e < self.val {
            return self.field.zero();
        }
        self.coeffs[(e - self.val) as usize].clone()
    }

    fn set_coeff(&mut self, e: i64, c: F::Elem) {
        assert!(e >= self.val && e <= self.known);
        self.coeffs[(e - self.val) as usize] = c;
    }

    /// Order of vanishing: `Exact(v)` or `Beyond(known)`.
    pub fn ord(&self) -> OrdResult {
        for (k, c) in self.coeffs.iter().enumerate() {
            if !self.field.is_zero(c) {
                return OrdResult::Exact(self.val + k as i64);
            }
        }
        OrdResult::Beyond(self.known)
    }

    pub fn is_zero_to_known(&self) -> bool {
        matches!(self.ord(), OrdResult::Beyond(_))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let f = self.field.clone();
        let known = self.known.min(rhs.known);
        let val = self.val.min(rhs.val);
        let mut coeffs = Vec::with_capacity((known - val + 1).max(0) as usize);
        for e in val..=known {
            let a = if e <= self.known {
                self.coeff(e)
            } else {
                f.zero()
            };
            let b = if e <= rhs.known { rhs.coeff(e) } else { f.zero() };
            coeffs.push(f.add(&a, &b));
        }
        TruncatedSeries::new(f, val, coeffs, known)
    }

    pub fn neg(&self) -> Self {
        let f = self.field.clone();
        TruncatedSeries {
            field: f.clone(),
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(),
            known: self.known,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field.clone();
        TruncatedSeries {
            field: f.clone(),
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| f.mul(c, s)).collect(),
            known: self.known,
        }
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        TruncatedSeries {
            field: self.field.clone(),
            val: self.val + e,
            coeffs: self.coeffs.clone(),
            known: self.known + e,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let f = self.field.clone();
        // A product coefficient at exponent e is trusted when every split
        // e = a + b uses trusted coefficients of both factors.
        let known = (self.known + rhs.val).min(rhs.known + self.val);
        let val = self.val + rhs.val;
        let n = (known - val + 1).max(0) as usize;
        let mut coeffs = vec![f.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = i + j;
                if k < n {
                    coeffs[k] = f.add(&coeffs[k], &f.mul(a, b));
                }
            }
        }
        TruncatedSeries::new(f, val, coeffs, known)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return TruncatedSeries::monomial(self.field.clone(), self.field.one(), 0, self.known);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// d/dt.
    pub fn derivative(&self) -> Self {
        let f = self.field.clone();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.val + k as i64;
            coeffs.push(f.mul(c, &f.from_int(e)));
        }
        let mut s = TruncatedSeries {
            field: f,
            val: self.val - 1,
            coeffs,
            known: self.known - 1,
        };
        s.drop_leading_zero_laurent();
        s
    }

    fn drop_leading_zero_laurent(&mut self) {
        while self.val < 0 && !self.coeffs.is_empty() && self.field.is_zero(&self.coeffs[0]) {
            self.coeffs.remove(0);
            self.val += 1;
        }
    }

    /// t * d/dt; keeps the truncation order.
    pub fn t_derivative(&self) -> Self {
        self.derivative().shift(1)
    }

    /// Multiplicative inverse; requires a nonvanishing lowest coefficient
    /// within the stored range.
    pub fn inverse(&self) -> Option<Self> {
        let f = self.field.clone();
        let v = self.ord().exact()?;
        // s = t^v * sigma with sigma a unit known to self.known - v orders;
        // 1/s = t^-v / sigma is trusted through exponent self.known - 2v.
        let known = self.known - 2 * v;
        let unit_len = (self.known - v + 1) as usize;
        let sigma: Vec<F::Elem> = (0..unit_len).map(|k| self.coeff(v + k as i64)).collect();
        let mut inv: Vec<F::Elem> = Vec::with_capacity(unit_len);
        let s0_inv = f.inv(&sigma[0]);
        inv.push(s0_inv.clone());
        for m in 1..unit_len {
            let mut acc = f.zero();
            for j in 1..=m {
                acc = f.add(&acc, &f.mul(&sigma[j], &inv[m - j]));
            }
            inv.push(f.neg(&f.mul(&acc, &s0_inv)));
        }
        Some(TruncatedSeries::new(f, -v, inv, known))
    }

    /// Horner evaluation at a parameter value; requires `val >= 0`.
    pub fn eval(&self, at: &F::Elem) -> F::Elem {
        assert!(self.val >= 0, "evaluating a Laurent series at a point");
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, at), c);
        }
        let mut shift = f.one();
        for _ in 0..self.val {
            shift = f.mul(&shift, at);
        }
        f.mul(&acc, &shift)
    }

    /// Cap the trusted order at `cap` (no-op when already below).
    pub fn truncate_min(&self, cap: i64) -> Self {
        if self.known <= cap {
            self.clone()
        } else {
            self.truncate(cap)
        }
    }

    pub fn truncate(&self, new_known: i64) -> Self {
        assert!(new_known <= self.known);
        TruncatedSeries::new(
            self.field.clone(),
            self.val,
            self.coeffs[..((new_known - self.val + 1).max(0) as usize)].to_vec(),
            new_known,
        )
    }
}

impl<F: CoeffField> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})t^{}", c, self.val + k as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [known {}]", self.known)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::coeff::QiField;
    use crate::polyalg::univariate::QiPoly;

    fn s(coeffs: &[i64], known: i64) -> TruncatedSeries<QiField> {
        TruncatedSeries::from_polynomial(&QiPoly::from_ints(coeffs), known)
    }

    #[test]
    fn ord_reports_beyond_truncation() {
        let z = TruncatedSeries::zero(QiField, 5);
        assert_eq!(z.ord(), OrdResult::Beyond(5));
        assert_eq!(s(&[0, 0, 3], 7).ord(), OrdResult::Exact(2));
    }

    #[test]
    fn mul_tracks_truncation_through_valuations() {
        // a = t^2 + t^3 known to 5, b = 1 + t known to 4: the first
        // corrupted product order is 6 (unknown a_6 times b_0), so the
        // product is trusted through 5; b_5 only matters from order 7 on.
        let a = s(&[0, 0, 1, 1], 5);
        let b = s(&[1, 1], 4);
        let p = a.mul(&b);
        assert_eq!(p.known(), 5);
        assert_eq!(p.coeff(2), crate::numkernel::GaussianRational::one());
    }

    #[test]
    fn inverse_is_reciprocal_to_known_order() {
        let a = s(&[0, 2, 1, 5, -3], 8); // valuation 1
        let inv = a.inverse().unwrap();
        let prod = a.mul(&inv);
        assert_eq!(prod.ord(), OrdResult::Exact(0));
        assert_eq!(prod.coeff(0), crate::numkernel::GaussianRational::one());
        for e in 1..=prod.known() {
            assert!(prod.coeff(e).is_zero(), "t^{e} should cancel");
        }
    }

    #[test]
    fn laurent_derivative() {
        // d/dt (t^-2 + 3 + t^2) = -2 t^-3 + 2t
        let base = s(&[1, 0, 3, 0, 1], 6); // 1 + 3t^2 + t^4, shifted down by 2
        let lau = base.shift(-2);
        let d = lau.derivative();
        assert_eq!(d.coeff(-3), crate::numkernel::GaussianRational::from_ints(-2, 0));
        assert_eq!(d.coeff(1), crate::numkernel::GaussianRational::from_ints(2, 0));
        assert_eq!(d.coeff(-2), crate::numkernel::GaussianRational::zero());
        assert_eq!(d.coeff(0), crate::numkernel::GaussianRational::zero());
    }
}

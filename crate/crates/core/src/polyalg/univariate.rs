//! Dense univariate polynomials over a coefficient field.

use std::fmt;

use super::coeff::{CoeffField, QiField};
use crate::numkernel::GaussianRational;

/// Dense coefficient list, lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq)]
pub struct UnivariatePolynomial<F: CoeffField> {
    pub field: F,
    coeffs: Vec<F::Elem>,
}

pub type QiPoly = UnivariatePolynomial<QiField>;

impl<F: CoeffField> UnivariatePolynomial<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        UnivariatePolynomial { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        UnivariatePolynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        UnivariatePolynomial::new(field, vec![c])
    }

    pub fn monomial(field: F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        UnivariatePolynomial::new(field, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F::Elem {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn lc(&self) -> F::Elem {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(f.add(&self.coeff(k), &rhs.coeff(k)));
        }
        UnivariatePolynomial::new(f.clone(), out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        UnivariatePolynomial::new(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        UnivariatePolynomial::new(f.clone(), self.coeffs.iter().map(|c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UnivariatePolynomial::new(f.clone(), out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UnivariatePolynomial::constant(self.field.clone(), self.field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return UnivariatePolynomial::zero(f.clone());
        }
        let out = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| f.mul(c, &f.from_int((k + 1) as i64)))
            .collect();
        UnivariatePolynomial::new(f.clone(), out)
    }

    pub fn eval(&self, at: &F::Elem) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, at), c);
        }
        acc
    }

    /// Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = self.field.clone();
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc_inv = f.inv(&d.lc());
        let mut rem = self.clone();
        let mut quo = vec![f.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = f.mul(&rem.lc(), &lc_inv);
            let shift = rd - dd;
            quo[shift] = q.clone();
            // rem -= q * x^shift * d
            let mut coeffs = rem.coeffs;
            for (j, c) in d.coeffs.iter().enumerate() {
                coeffs[shift + j] = f.sub(&coeffs[shift + j], &f.mul(&q, c));
            }
            // the leading term cancels exactly in the exact field; force it
            coeffs[rd] = f.zero();
            rem = UnivariatePolynomial::new(f.clone(), coeffs);
        }
        (UnivariatePolynomial::new(f, quo), rem)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.field.inv(&self.lc()))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic: same roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "squarefree part of zero polynomial");
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    /// Multiplicity of `root`, removing it by exact deflation.
    pub fn root_multiplicity(&self, root: &F::Elem) -> (usize, Self) {
        let f = self.field.clone();
        let lin = UnivariatePolynomial::new(f.clone(), vec![f.neg(root), f.one()]);
        let mut mult = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(&lin);
            if r.is_zero() && !cur.is_zero() {
                mult += 1;
                cur = q;
            } else {
                return (mult, cur);
            }
        }
    }
}

impl QiPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UnivariatePolynomial::new(
            QiField,
            coeffs
                .iter()
                .map(|&n| GaussianRational::from_ints(n, 0))
                .collect(),
        )
    }
}

impl<F: CoeffField> fmt::Display for UnivariatePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*s^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl<F: CoeffField> fmt::Debug for UnivariatePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::GaussianRational;

    fn p(coeffs: &[i64]) -> QiPoly {
        QiPoly::from_ints(coeffs)
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^3 -> x-1
        let cube = p(&[-1, 1]).pow(3);
        assert_eq!(cube.squarefree_part(), p(&[-1, 1]));
        // x^2 + 1 factors as (x-i)(x+i) over Q(i) but is already squarefree
        let q = p(&[1, 0, 1]);
        assert_eq!(q.squarefree_part(), q);
        // x^3 - x^2 -> x^2 - x (gcd with derivative removes the double root)
        assert_eq!(p(&[0, 0, -1, 1]).squarefree_part(), p(&[0, -1, 1]));
    }

    #[test]
    fn squarefree_part_divides_and_is_squarefree() {
        let q = p(&[2, -3, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1])); // (x-1)^3 (x-2)
        let sf = q.squarefree_part();
        let (_, r) = q.div_rem(&sf);
        assert!(r.is_zero());
        let g = sf.gcd(&sf.derivative());
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[1, 2, 0, 5, 7]);
        let d = p(&[3, 0, 2]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn root_multiplicity_deflates() {
        let a = p(&[-1, 1]).pow(2).mul(&p(&[5, 1]));
        let (m, rest) = a.root_multiplicity(&GaussianRational::one());
        assert_eq!(m, 2);
        assert_eq!(rest, p(&[5, 1]));
    }
}

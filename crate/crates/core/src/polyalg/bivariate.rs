//! Sparse bivariate polynomials: curve equations over Q(i) and local germs
//! over either coefficient field.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::{CoeffField, QiField};
use super::series::TruncatedSeries;
use super::univariate::UnivariatePolynomial;
use crate::numkernel::GaussianRational;

/// Coordinate labels carried by curve equations: Cartesian `(x, y)` or
/// isotropic `(z1, z2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoordMode {
    Cartesian,
    Isotropic,
}

impl CoordMode {
    pub fn var_names(self) -> (&'static str, &'static str) {
        match self {
            CoordMode::Cartesian => ("x", "y"),
            CoordMode::Isotropic => ("z1", "z2"),
        }
    }

    pub fn data_names(self) -> (&'static str, &'static str) {
        match self {
            CoordMode::Cartesian => ("u1", "u2"),
            CoordMode::Isotropic => ("v1", "v2"),
        }
    }
}

/// Sparse map from exponent pairs to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct BivariatePolynomial<F: CoeffField> {
    pub field: F,
    terms: BTreeMap<(u32, u32), F::Elem>,
}

pub type QiBivariate = BivariatePolynomial<QiField>;

impl<F: CoeffField> BivariatePolynomial<F> {
    pub fn zero(field: F) -> Self {
        BivariatePolynomial {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(field: F, terms: impl IntoIterator<Item = ((u32, u32), F::Elem)>) -> Self {
        let mut p = BivariatePolynomial::zero(field);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        BivariatePolynomial::from_terms(field, [((0, 0), c)])
    }

    pub fn add_term(&mut self, e: (u32, u32), c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        let f = self.field.clone();
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(o.get(), &c);
                if f.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: (u32, u32)) -> F::Elem {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a == 0 && b == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let f = self.field.clone();
        BivariatePolynomial {
            field: f.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, f.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.field.clone();
        let mut out = BivariatePolynomial::zero(f);
        for (e, c) in self.terms.iter() {
            out.add_term(*e, self.field.mul(c, s));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let f = self.field.clone();
        let mut out = BivariatePolynomial::zero(f.clone());
        for (&(a1, b1), c1) in self.terms.iter() {
            for (&(a2, b2), c2) in rhs.terms.iter() {
                out.add_term((a1 + a2, b1 + b2), f.mul(c1, c2));
            }
        }
        out
    }

    /// Partial derivative: `var = 0` for the first variable, `1` for the second.
    pub fn derivative(&self, var: usize) -> Self {
        let f = self.field.clone();
        let mut out = BivariatePolynomial::zero(f.clone());
        for (&(a, b), c) in self.terms.iter() {
            let (e, new) = match var {
                0 if a > 0 => (a as i64, (a - 1, b)),
                1 if b > 0 => (b as i64, (a, b - 1)),
                _ => continue,
            };
            out.add_term(new, f.mul(c, &f.from_int(e)));
        }
        out
    }

    pub fn eval(&self, x: &F::Elem, y: &F::Elem) -> F::Elem {
        let f = &self.field;
        // Horner in y over powers of x.
        let mut acc = f.zero();
        let max_y = self.deg_y();
        for b in (0..=max_y).rev() {
            let mut row = f.zero();
            let mut xp = f.one();
            let mut last_a = 0;
            for (&(a, bb), c) in self.terms.iter() {
                if bb != b {
                    continue;
                }
                for _ in last_a..a {
                    xp = f.mul(&xp, x);
                }
                last_a = a;
                row = f.add(&row, &f.mul(c, &xp));
            }
            acc = f.add(&f.mul(&acc, y), &row);
        }
        acc
    }

    /// Substitute truncated series for both variables.
    pub fn eval_series(
        &self,
        xs: &TruncatedSeries<F>,
        ys: &TruncatedSeries<F>,
    ) -> TruncatedSeries<F> {
        let f = self.field.clone();
        let known = xs.known().min(ys.known());
        // Horner in y; powers of x cached.
        let max_y = self.deg_y();
        let mut acc = TruncatedSeries::zero(f.clone(), known);
        let mut xpowers: Vec<TruncatedSeries<F>> =
            vec![TruncatedSeries::monomial(f.clone(), f.one(), 0, known)];
        for b in (0..=max_y).rev() {
            let mut row = TruncatedSeries::zero(f.clone(), known);
            for (&(a, bb), c) in self.terms.iter() {
                if bb != b {
                    continue;
                }
                while xpowers.len() <= a as usize {
                    let next = xpowers.last().unwrap().mul(xs);
                    xpowers.push(next);
                }
                row = row.add(&xpowers[a as usize].scale(c));
            }
            acc = acc.mul(ys).add(&row);
        }
        acc
    }

    /// Coefficients as a dense list of univariate polynomials in the first
    /// variable, indexed by the exponent of the second.
    pub fn coeffs_in_y(&self) -> Vec<UnivariatePolynomial<F>> {
        let f = self.field.clone();
        let mut rows: Vec<Vec<F::Elem>> = vec![Vec::new(); self.deg_y() as usize + 1];
        for (&(a, b), c) in self.terms.iter() {
            let row = &mut rows[b as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, f.zero());
            }
            row[a as usize] = c.clone();
        }
        rows.into_iter()
            .map(|r| UnivariatePolynomial::new(f.clone(), r))
            .collect()
    }

    /// `g(x, y) -> g(p1 + x, p2 + y)` by binomial expansion.
    pub fn shift_origin(&self, p1: &F::Elem, p2: &F::Elem) -> Self {
        let f = self.field.clone();
        let x = BivariatePolynomial::from_terms(
            f.clone(),
            [((1, 0), f.one()), ((0, 0), p1.clone())],
        );
        let y = BivariatePolynomial::from_terms(
            f.clone(),
            [((0, 1), f.one()), ((0, 0), p2.clone())],
        );
        self.substitute(&x, &y, u32::MAX)
    }

    /// Substitute polynomials for both variables, truncating the result in
    /// the first variable at `max_x`.
    pub fn substitute(&self, x_to: &Self, y_to: &Self, max_x: u32) -> Self {
        let f = self.field.clone();
        let mut xp: Vec<Self> = vec![BivariatePolynomial::constant(f.clone(), f.one())];
        let mut yp: Vec<Self> = vec![BivariatePolynomial::constant(f.clone(), f.one())];
        let mut out = BivariatePolynomial::zero(f.clone());
        for (&(a, b), c) in self.terms.iter() {
            while xp.len() <= a as usize {
                let next = xp.last().unwrap().mul(x_to).truncate_x(max_x);
                xp.push(next);
            }
            while yp.len() <= b as usize {
                let next = yp.last().unwrap().mul(y_to).truncate_x(max_x);
                yp.push(next);
            }
            let term = xp[a as usize].mul(&yp[b as usize]).truncate_x(max_x);
            out = out.add(&term.scale(c));
        }
        out
    }

    pub fn truncate_x(&self, max_x: u32) -> Self {
        if self.deg_x() <= max_x {
            return self.clone();
        }
        BivariatePolynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(&(a, _), _)| a <= max_x)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Exact division by the first variable, if every term allows it.
    pub fn div_x(&self) -> Option<Self> {
        if self.terms.keys().any(|&(a, _)| a == 0) {
            return None;
        }
        Some(BivariatePolynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a - 1, b), c.clone()))
                .collect(),
        })
    }

    pub fn div_y(&self) -> Option<Self> {
        Some(self.swap_vars().div_x()?.swap_vars())
    }

    pub fn swap_vars(&self) -> Self {
        BivariatePolynomial {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Exponent pairs with nonzero coefficients.
    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }
}

impl QiBivariate {
    /// The homogeneous part of top total degree.
    pub fn top_form(&self) -> QiBivariate {
        let d = self.total_degree();
        BivariatePolynomial {
            field: QiField,
            terms: self
                .terms
                .iter()
                .filter(|(&(a, b), _)| a + b == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Shear `x -> x + lambda * y`.
    pub fn shear_x(&self, lambda: &GaussianRational) -> QiBivariate {
        let x_to = BivariatePolynomial::from_terms(
            QiField,
            [
                ((1, 0), GaussianRational::one()),
                ((0, 1), lambda.clone()),
            ],
        );
        let y_to = BivariatePolynomial::from_terms(QiField, [((0, 1), GaussianRational::one())]);
        self.substitute(&x_to, &y_to, u32::MAX)
    }

    /// Exact rotation `(x, y) -> (c x - s y, s x + c y)` with `c^2 + s^2 = 1`.
    pub fn rotate(&self, c: &GaussianRational, s: &GaussianRational) -> QiBivariate {
        let x_to = BivariatePolynomial::from_terms(
            QiField,
            [((1, 0), c.clone()), ((0, 1), -s)],
        );
        let y_to = BivariatePolynomial::from_terms(
            QiField,
            [((1, 0), s.clone()), ((0, 1), c.clone())],
        );
        self.substitute(&x_to, &y_to, u32::MAX)
    }

    /// Convert coefficients into another field (used to enter fallback mode).
    pub fn to_field<F: CoeffField>(&self, field: &F) -> BivariatePolynomial<F> {
        let mut out = BivariatePolynomial::zero(field.clone());
        for (&e, c) in self.terms.iter() {
            out.add_term(e, field.from_gaussian(c));
        }
        out
    }
}

impl<F: CoeffField> fmt::Debug for BivariatePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if a > 0 {
                write!(f, "*x^{a}")?;
            }
            if b > 0 {
                write!(f, "*y^{b}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::GaussianRational as G;

    fn gi(a: i64, b: i64) -> G {
        G::from_ints(a, b)
    }

    /// y^2 - x^3.
    fn cusp() -> QiBivariate {
        BivariatePolynomial::from_terms(QiField, [((0, 2), gi(1, 0)), ((3, 0), gi(-1, 0))])
    }

    #[test]
    fn eval_and_derivative() {
        let f = cusp();
        assert!(f.eval(&gi(1, 0), &gi(1, 0)).is_zero());
        assert!(f.eval(&gi(4, 0), &gi(8, 0)).is_zero());
        let fx = f.derivative(0);
        assert_eq!(fx.eval(&gi(1, 0), &gi(0, 0)), gi(-3, 0));
        let fy = f.derivative(1);
        assert_eq!(fy.eval(&gi(0, 0), &gi(2, 0)), gi(4, 0));
    }

    #[test]
    fn series_substitution_vanishes_on_branch() {
        use crate::polyalg::series::TruncatedSeries;
        let f = cusp();
        // x = t^2, y = t^3 parametrizes the cusp exactly.
        let xs = TruncatedSeries::monomial(QiField, gi(1, 0), 2, 12);
        let ys = TruncatedSeries::monomial(QiField, gi(1, 0), 3, 12);
        let r = f.eval_series(&xs, &ys);
        assert!(r.is_zero_to_known());
    }

    #[test]
    fn shear_preserves_total_degree_and_fixes_lc() {
        let f = cusp();
        let sheared = f.shear_x(&gi(1, 0));
        assert_eq!(sheared.total_degree(), 3);
        // leading y-coefficient must be the constant f_d(lambda, 1)
        let rows = sheared.coeffs_in_y();
        assert_eq!(rows[3].degree(), Some(0));
    }

    #[test]
    fn rotation_is_exact_isometry_on_norm_form() {
        // x^2 + y^2 is invariant under the rational rotation (3/5, 4/5).
        let q = BivariatePolynomial::from_terms(
            QiField,
            [((2, 0), gi(1, 0)), ((0, 2), gi(1, 0))],
        );
        let c = G::new(crate::numkernel::rat(3, 5), crate::numkernel::rat(0, 1));
        let s = G::new(crate::numkernel::rat(4, 5), crate::numkernel::rat(0, 1));
        assert_eq!(q.rotate(&c, &s), q);
    }
}

//! Affine-linear forms `a*u1 + b*u2 + c` in the data point, and normalized
//! lines in data space.

use std::fmt;

use super::coeff::{CoeffField, QiField};
use super::univariate::{QiPoly, UnivariatePolynomial};
use crate::numkernel::GaussianRational;

/// A (possibly constant) affine-linear function of the data point.
#[derive(Clone, PartialEq)]
pub struct AffineForm<F: CoeffField> {
    pub a: F::Elem,
    pub b: F::Elem,
    pub c: F::Elem,
    pub field: F,
}

pub type QiAffineForm = AffineForm<QiField>;

impl<F: CoeffField> AffineForm<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem, c: F::Elem) -> Self {
        AffineForm { a, b, c, field }
    }

    pub fn zero(field: F) -> Self {
        AffineForm {
            a: field.zero(),
            b: field.zero(),
            c: field.zero(),
            field,
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        AffineForm {
            a: field.zero(),
            b: field.zero(),
            c,
            field,
        }
    }

    /// `a = b = 0`: the form does not depend on the data point.
    pub fn is_constant(&self) -> bool {
        self.field.is_zero(&self.a) && self.field.is_zero(&self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.field.is_zero(&self.c)
    }

    pub fn eval(&self, u1: &F::Elem, u2: &F::Elem) -> F::Elem {
        let f = &self.field;
        f.add(
            &f.add(&f.mul(&self.a, u1), &f.mul(&self.b, u2)),
            &self.c,
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let f = &self.field;
        AffineForm {
            a: f.add(&self.a, &rhs.a),
            b: f.add(&self.b, &rhs.b),
            c: f.add(&self.c, &rhs.c),
            field: f.clone(),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = &self.field;
        AffineForm {
            a: f.mul(&self.a, s),
            b: f.mul(&self.b, s),
            c: f.mul(&self.c, s),
            field: f.clone(),
        }
    }
}

impl<F: CoeffField> fmt::Debug for AffineForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*u1 + ({})*u2 + ({})", self.a, self.b, self.c)
    }
}

/// An exact line `{a*u1 + b*u2 + c = 0}` in data space, in the unique
/// normalized representation with the first nonzero of `(a, b)` scaled to 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineLine {
    a: GaussianRational,
    b: GaussianRational,
    c: GaussianRational,
}

impl AffineLine {
    pub fn new(a: GaussianRational, b: GaussianRational, c: GaussianRational) -> Option<Self> {
        let scale = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return None;
        };
        let inv = scale.inverse();
        Some(AffineLine {
            a: &a * &inv,
            b: &b * &inv,
            c: &c * &inv,
        })
    }

    pub fn from_form(form: &QiAffineForm) -> Option<Self> {
        AffineLine::new(form.a.clone(), form.b.clone(), form.c.clone())
    }

    pub fn a(&self) -> &GaussianRational {
        &self.a
    }
    pub fn b(&self) -> &GaussianRational {
        &self.b
    }
    pub fn c(&self) -> &GaussianRational {
        &self.c
    }

    pub fn eval(&self, u1: &GaussianRational, u2: &GaussianRational) -> GaussianRational {
        &(&(&self.a * u1) + &(&self.b * u2)) + &self.c
    }

    pub fn contains(&self, p: &(GaussianRational, GaussianRational)) -> bool {
        self.eval(&p.0, &p.1).is_zero()
    }

    /// An exact base point and direction: `u(s) = base + s * dir`.
    pub fn parametrize(&self) -> ((GaussianRational, GaussianRational), (GaussianRational, GaussianRational)) {
        let dir = (-self.b.clone(), self.a.clone());
        let base = if !self.a.is_zero() {
            ((-&self.c) / &self.a, GaussianRational::zero())
        } else {
            (GaussianRational::zero(), (-&self.c) / &self.b)
        };
        (base, dir)
    }

    pub fn point_at(&self, s: &GaussianRational) -> (GaussianRational, GaussianRational) {
        let (base, dir) = self.parametrize();
        (&base.0 + &(&dir.0 * s), &base.1 + &(&dir.1 * s))
    }

    /// Whether the line direction is annihilated by the isotropic quadratic
    /// form: `a^2 + b^2 = 0` in Cartesian data coordinates, `a*b = 0` in
    /// isotropic ones.
    pub fn is_isotropic(&self, isotropic_coords: bool) -> bool {
        if isotropic_coords {
            (&self.a * &self.b).is_zero()
        } else {
            (&(&self.a * &self.a) + &(&self.b * &self.b)).is_zero()
        }
    }
}

impl fmt::Debug for AffineLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{({})*u1 + ({})*u2 + ({}) = 0}}", self.a, self.b, self.c)
    }
}

impl fmt::Display for AffineLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*u1 + ({})*u2 + ({})", self.a, self.b, self.c)
    }
}

/// Restriction of a form to a line: the degree <= 1 polynomial
/// `s -> form(base + s*dir)` in the exact line parameter.
pub fn restrict_to_line(form: &QiAffineForm, line: &AffineLine) -> QiPoly {
    let (base, dir) = line.parametrize();
    let c0 = form.eval(&base.0, &base.1);
    let c1 = &(&form.a * &dir.0) + &(&form.b * &dir.1);
    UnivariatePolynomial::new(QiField, vec![c0, c1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkernel::GaussianRational as G;

    fn gi(a: i64, b: i64) -> G {
        G::from_ints(a, b)
    }

    fn form(a: G, b: G, c: G) -> QiAffineForm {
        AffineForm::new(QiField, a, b, c)
    }

    #[test]
    fn self_restriction_vanishes() {
        // u1 + i u2 restricted to {u1 + i u2 = 0} is identically zero.
        let l = AffineLine::new(gi(1, 0), gi(0, 1), gi(0, 0)).unwrap();
        let r = restrict_to_line(&form(gi(1, 0), gi(0, 1), gi(0, 0)), &l);
        assert!(r.is_zero());
    }

    #[test]
    fn circle_focal_restriction() {
        // -u1 + i u2 on {u1 + i u2 = 0}: nonzero, degree 1, root at (0,0).
        let l = AffineLine::new(gi(1, 0), gi(0, 1), gi(0, 0)).unwrap();
        let r = restrict_to_line(&form(gi(-1, 0), gi(0, 1), gi(0, 0)), &l);
        assert_eq!(r.degree(), Some(1));
        let root = -(r.coeff(0)) / r.coeff(1);
        assert_eq!(l.point_at(&root), (gi(0, 0), gi(0, 0)));
    }

    #[test]
    fn ex62_focal_point() {
        // -3i - u1 on {i u1 + u2 = 0}: root at u1 = -3i, the point (-3i, -3).
        let l = AffineLine::new(gi(0, 1), gi(1, 0), gi(0, 0)).unwrap();
        let r = restrict_to_line(&form(gi(-1, 0), gi(0, 0), gi(0, -3)), &l);
        assert_eq!(r.degree(), Some(1));
        let root = -(r.coeff(0)) / r.coeff(1);
        assert_eq!(l.point_at(&root), (gi(0, -3), gi(-3, 0)));
    }

    #[test]
    fn normalization_makes_lines_comparable() {
        let l1 = AffineLine::new(gi(0, 1), gi(1, 0), gi(0, 0)).unwrap(); // i u1 + u2
        let l2 = AffineLine::new(gi(1, 0), gi(0, -1), gi(0, 0)).unwrap(); // u1 - i u2
        assert_eq!(l1, l2);
        assert!(l1.is_isotropic(false));
    }

    #[test]
    fn restriction_vanishes_iff_line_inside_zero_set() {
        let l = AffineLine::new(gi(2, 0), gi(0, 2), gi(4, 0)).unwrap();
        let f0 = form(gi(1, 0), gi(0, 1), gi(2, 0)); // proportional: contains line
        assert!(restrict_to_line(&f0, &l).is_zero());
        let f1 = form(gi(1, 0), gi(0, 1), gi(3, 0)); // parallel, off the line
        let r = restrict_to_line(&f1, &l);
        assert_eq!(r.degree(), Some(0));
    }
}

//! Sparse multivariate polynomials over Q(i) in the four elimination
//! variables `(x, y, u1, u2)` (read `(z1, z2, v1, v2)` in isotropic mode).
//!
//! This is the exact elimination workhorse: exact division, recursive gcd
//! and squarefree parts. Resultants live in `resultant.rs`.

use std::collections::BTreeMap;
use std::fmt;

use super::bivariate::QiBivariate;
use super::coeff::QiField;
use crate::numkernel::GaussianRational;

pub const NVARS: usize = 4;
pub type Expt = [u16; NVARS];

pub const VAR_X: usize = 0;
pub const VAR_Y: usize = 1;
pub const VAR_U1: usize = 2;
pub const VAR_U2: usize = 3;

/// Sparse exact polynomial; no stored zero coefficients; terms in lex order
/// of exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Expt, GaussianRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut p = MPoly::zero();
        p.add_term([0; NVARS], c);
        p
    }

    pub fn one() -> Self {
        MPoly::constant(GaussianRational::one())
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        let mut p = MPoly::zero();
        p.add_term(e, GaussianRational::one());
        p
    }

    pub fn add_term(&mut self, e: Expt, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&v| v == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expt, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_value(&self) -> GaussianRational {
        self.terms
            .get(&[0; NVARS])
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn degree(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&v| v as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero();
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in rhs.terms.iter() {
                let mut e = *e1;
                for k in 0..NVARS {
                    e[k] += e2[k];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in self.terms.iter() {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, c * &GaussianRational::from_ints(e[var] as i64, 0));
        }
        out
    }

    /// Substitute a polynomial for one variable.
    pub fn subst_var(&self, var: usize, replacement: &MPoly) -> Self {
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (e, c) in self.terms.iter() {
            while powers.len() <= e[var] as usize {
                powers.push(powers.last().unwrap().mul(replacement));
            }
            let mut ne = *e;
            ne[var] = 0;
            let mut term = MPoly::zero();
            term.add_term(ne, c.clone());
            out = out.add(&term.mul(&powers[e[var] as usize]));
        }
        out
    }

    /// Substitute an exact value for one variable.
    pub fn eval_var(&self, var: usize, value: &GaussianRational) -> Self {
        let mut powers: Vec<GaussianRational> = vec![GaussianRational::one()];
        let mut out = MPoly::zero();
        for (e, c) in self.terms.iter() {
            while powers.len() <= e[var] as usize {
                powers.push(powers.last().unwrap() * value);
            }
            let mut ne = *e;
            ne[var] = 0;
            out.add_term(ne, c * &powers[e[var] as usize]);
        }
        out
    }

    pub fn eval_all(&self, values: &[GaussianRational; NVARS]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in self.terms.iter() {
            let mut term = c.clone();
            for k in 0..NVARS {
                term = term * values[k].pow(e[k] as i64);
            }
            acc = acc + term;
        }
        acc
    }

    /// Dense coefficient list in one variable, entries in the others.
    pub fn as_univariate(&self, var: usize) -> Vec<MPoly> {
        let d = self.degree(var) as usize;
        let mut out = vec![MPoly::zero(); d + 1];
        for (e, c) in self.terms.iter() {
            let mut ne = *e;
            ne[var] = 0;
            out[e[var] as usize].add_term(ne, c.clone());
        }
        out
    }

    pub fn from_univariate(var: usize, coeffs: &[MPoly]) -> Self {
        let mut out = MPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in c.terms.iter() {
                let mut ne = *e;
                ne[var] += k as u16;
                out.add_term(ne, v.clone());
            }
        }
        out
    }

    fn leading(&self) -> Option<(&Expt, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when the division is not exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "exact division by zero");
        let mut rem = self.clone();
        let mut quo = MPoly::zero();
        let (dlead, dc) = {
            let (e, c) = d.leading().unwrap();
            (*e, c.clone())
        };
        let dcinv = dc.inverse();
        while let Some((rlead, rc)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            let mut qe = [0u16; NVARS];
            for k in 0..NVARS {
                if rlead[k] < dlead[k] {
                    return None;
                }
                qe[k] = rlead[k] - dlead[k];
            }
            let qc = &rc * &dcinv;
            let mut qterm = MPoly::zero();
            qterm.add_term(qe, qc);
            rem = rem.sub(&qterm.mul(d));
            quo = quo.add(&qterm);
        }
        Some(quo)
    }

    /// Shear `x -> x + lambda * y` in the first two slots.
    pub fn shear_x(&self, lambda: &GaussianRational) -> Self {
        let x_to = MPoly::var(VAR_X).add(&MPoly::var(VAR_Y).scale(lambda));
        let mut powers: Vec<MPoly> = vec![MPoly::one()];
        let mut out = MPoly::zero();
        for (e, c) in self.terms.iter() {
            while powers.len() <= e[VAR_X] as usize {
                powers.push(powers.last().unwrap().mul(&x_to));
            }
            let mut ne = *e;
            ne[VAR_X] = 0;
            let mut term = MPoly::zero();
            term.add_term(ne, c.clone());
            out = out.add(&term.mul(&powers[e[VAR_X] as usize]));
        }
        out
    }

    pub fn from_bivariate(f: &QiBivariate) -> Self {
        let mut out = MPoly::zero();
        for (&(a, b), c) in f.terms() {
            out.add_term([a as u16, b as u16, 0, 0], c.clone());
        }
        out
    }

    /// Project onto the first two slots; panics if others are used.
    pub fn to_bivariate(&self) -> QiBivariate {
        let mut out = QiBivariate::zero(QiField);
        for (e, c) in self.terms.iter() {
            assert!(e[VAR_U1] == 0 && e[VAR_U2] == 0, "data variables present");
            out.add_term((e[VAR_X] as u32, e[VAR_Y] as u32), c.clone());
        }
        out
    }

    /// Divide by the leading coefficient (lex) to get a canonical scale.
    pub fn monic_lex(&self) -> Self {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.inverse()),
        }
    }

    /// Recursive multivariate gcd (primitive PRS); result is lex-monic.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.monic_lex();
        }
        if b.is_zero() {
            return a.monic_lex();
        }
        if a.is_constant() || b.is_constant() {
            return MPoly::one();
        }
        // main variable: the highest-index variable in use
        let var = (0..NVARS)
            .rev()
            .find(|&v| a.uses_var(v) || b.uses_var(v))
            .unwrap();
        if !a.uses_var(var) || !b.uses_var(var) {
            // gcd divides the content of the polynomial that does use it
            let (with, without) = if a.uses_var(var) { (a, b) } else { (b, a) };
            let cont = with
                .as_univariate(var)
                .iter()
                .fold(MPoly::zero(), |acc, c| MPoly::gcd(&acc, c));
            return MPoly::gcd(&cont, without);
        }
        let (ca, pa) = a.content_primitive(var);
        let (cb, pb) = b.content_primitive(var);
        let cont_gcd = MPoly::gcd(&ca, &cb);

        // primitive PRS on the primitive parts
        let mut f = pa;
        let mut g = pb;
        if f.degree(var) < g.degree(var) {
            std::mem::swap(&mut f, &mut g);
        }
        loop {
            if g.is_zero() {
                let (_, pp) = f.content_primitive(var);
                return cont_gcd.mul(&pp).monic_lex();
            }
            if g.degree(var) == 0 {
                return cont_gcd.monic_lex();
            }
            let r = pseudo_rem(&f, &g, var);
            f = g;
            g = match r {
                Some(r) if !r.is_zero() => r.content_primitive(var).1,
                _ => MPoly::zero(),
            };
        }
    }

    /// Content (gcd of coefficients) and primitive part w.r.t. one variable.
    fn content_primitive(&self, var: usize) -> (Self, Self) {
        let coeffs = self.as_univariate(var);
        let cont = coeffs
            .iter()
            .fold(MPoly::zero(), |acc, c| MPoly::gcd(&acc, c));
        let pp = self.exact_div(&cont).expect("content divides");
        (cont, pp)
    }

    /// Squarefree part: divide by the gcd with every partial derivative.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        let mut g = MPoly::zero();
        for v in 0..NVARS {
            if self.uses_var(v) {
                g = MPoly::gcd(&g, &MPoly::gcd(self, &self.derivative(v)));
            }
        }
        if g.is_zero() || g.is_constant() {
            return self.clone();
        }
        self.exact_div(&g).expect("gcd divides").monic_lex()
    }
}

/// Pseudo-remainder of `a` by `b` in `var`: rem(lc(b)^(da-db+1) * a, b).
/// Returns `None` when `deg a < deg b`.
pub fn pseudo_rem(a: &MPoly, b: &MPoly, var: usize) -> Option<MPoly> {
    let da = a.degree(var) as i64;
    let db = b.degree(var) as i64;
    if da < db {
        return None;
    }
    let bc = b.as_univariate(var);
    let blc = bc.last().unwrap().clone();
    let mut rem = a.as_univariate(var);
    let mut quo_steps = (da - db + 1) as usize;
    while rem.len() as i64 - 1 >= db && !rem.iter().all(|c| c.is_zero()) {
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        let rd = rem.len() as i64 - 1;
        if rd < db {
            break;
        }
        let rlc = rem.last().unwrap().clone();
        let shift = (rd - db) as usize;
        // rem = blc * rem - rlc * x^shift * b
        for c in rem.iter_mut() {
            *c = c.mul(&blc);
        }
        for (j, bj) in bc.iter().enumerate() {
            rem[shift + j] = rem[shift + j].sub(&rlc.mul(bj));
        }
        rem.pop();
        quo_steps -= 1;
        if quo_steps == 0 {
            break;
        }
    }
    // pad with the remaining lc powers so the pseudo-remainder matches
    // lc^(da-db+1) * a mod b exactly
    let mut r = MPoly::from_univariate(var, &rem);
    for _ in 0..quo_steps {
        r = r.mul(&blc);
    }
    Some(r)
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["x", "y", "u1", "u2"];
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for k in 0..NVARS {
                if e[k] > 0 {
                    write!(f, "*{}^{}", names[k], e[k])?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: i64, b: i64) -> GaussianRational {
        GaussianRational::from_ints(a, b)
    }

    #[test]
    fn exact_div_round_trip() {
        let a = MPoly::var(VAR_X).add(&MPoly::var(VAR_Y).scale(&gi(2, 1)));
        let b = MPoly::var(VAR_U1).add(&MPoly::constant(gi(3, 0)));
        let p = a.mul(&b);
        assert_eq!(p.exact_div(&a).unwrap(), b);
        assert_eq!(p.exact_div(&b).unwrap(), a);
        let c = MPoly::var(VAR_X).add(&MPoly::constant(gi(1, 0)));
        assert!(p.exact_div(&c).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let a = MPoly::var(VAR_X).add(&MPoly::var(VAR_Y)); // x + y
        let b = MPoly::var(VAR_X).sub(&MPoly::var(VAR_Y)); // x - y
        let c = MPoly::var(VAR_X).add(&MPoly::constant(gi(0, 1))); // x + i
        let p = a.mul(&b).mul(&c);
        let q = a.mul(&c).mul(&c);
        let g = MPoly::gcd(&p, &q);
        assert_eq!(g, a.mul(&c).monic_lex());
    }

    #[test]
    fn squarefree_part_strips_powers() {
        let a = MPoly::var(VAR_U1).add(&MPoly::var(VAR_U2).scale(&gi(0, 1))); // u1 + i u2
        let b = MPoly::var(VAR_U1).sub(&MPoly::constant(gi(1, 0)));
        let p = a.pow(3).mul(&b);
        let sf = p.squarefree_part();
        assert_eq!(sf, a.mul(&b).monic_lex());
    }

    #[test]
    fn pseudo_rem_degree_drops() {
        let x = MPoly::var(VAR_X);
        let y = MPoly::var(VAR_Y);
        let a = x.pow(3).add(&y.mul(&x)).add(&MPoly::one());
        let b = x.pow(2).scale(&gi(2, 0)).add(&y);
        let r = pseudo_rem(&a, &b, VAR_X).unwrap();
        assert!(r.degree(VAR_X) < 2);
    }
}

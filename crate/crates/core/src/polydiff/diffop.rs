use std::fmt;

use super::monomial::Monomial;
use super::poly::{render_coeff, Poly, VarSet};
use crate::error::Error;
use crate::scalar::Scalar;

/// sum_i f_i d_i + g with polynomial f_i and g.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp<S> {
    vs: VarSet,
    pub vec: Vec<Poly<S>>,
    pub scalar: Poly<S>,
}

impl<S: Scalar> DiffOp<S> {
    pub fn zero(vs: VarSet) -> Self {
        DiffOp { vs, vec: vec![Poly::zero(vs); vs.len()], scalar: Poly::zero(vs) }
    }

    pub fn vs(&self) -> VarSet {
        self.vs
    }

    pub fn partial(vs: VarSet, i: usize) -> Self {
        let mut d = Self::zero(vs);
        d.vec[i] = Poly::one(vs);
        d
    }

    /// Multiplication by a polynomial.
    pub fn mult(f: Poly<S>) -> Self {
        let mut d = Self::zero(f.vs());
        d.scalar = f;
        d
    }

    /// The degree operator sum_i x_i d_i.
    pub fn degree_op(vs: VarSet) -> Self {
        let mut d = Self::zero(vs);
        for i in 0..vs.len() {
            d.vec[i] = Poly::var(vs, i);
        }
        d
    }

    /// c * x^m * d_i
    pub fn monomial_field(vs: VarSet, m: Monomial, i: usize, c: S) -> Self {
        let mut d = Self::zero(vs);
        d.vec[i] = Poly::term(vs, m, c);
        d
    }

    pub fn with_varset(&self, vs: VarSet) -> Self {
        DiffOp { vs, vec: self.vec.iter().map(|p| p.with_varset(vs)).collect(), scalar: self.scalar.with_varset(vs) }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() && self.vec.iter().all(|p| p.is_zero())
    }

    pub fn add_scaled(&mut self, o: &DiffOp<S>, c: &S) {
        assert_eq!(self.vs, o.vs, "variable sets differ");
        for (a, b) in self.vec.iter_mut().zip(&o.vec) {
            a.add_scaled(b, c);
        }
        self.scalar.add_scaled(&o.scalar, c);
    }

    pub fn add(&self, o: &DiffOp<S>) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &S::one());
        out
    }

    pub fn sub(&self, o: &DiffOp<S>) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &-S::one());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        DiffOp { vs: self.vs, vec: self.vec.iter().map(|p| p.scale(c)).collect(), scalar: self.scalar.scale(c) }
    }

    /// f * A
    pub fn mul_poly(&self, f: &Poly<S>) -> Self {
        DiffOp { vs: self.vs, vec: self.vec.iter().map(|p| p * f).collect(), scalar: &self.scalar * f }
    }

    /// The vector-field part applied to f, without the scalar term.
    pub fn derive(&self, f: &Poly<S>) -> Poly<S> {
        let mut out = Poly::zero(self.vs);
        for (i, fi) in self.vec.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            let d = f.deriv(i);
            if !d.is_zero() {
                out.add_scaled(&(fi * &d), &S::one());
            }
        }
        out
    }

    pub fn apply(&self, f: &Poly<S>) -> Result<Poly<S>, Error> {
        if f.vs() != self.vs {
            return Err(Error::VarSetMismatch(self.vs, f.vs()));
        }
        Ok(self.act(f))
    }

    /// `apply` for callers that already know the variable sets agree.
    pub fn act(&self, f: &Poly<S>) -> Poly<S> {
        let mut out = self.derive(f);
        if !self.scalar.is_zero() {
            out.add_scaled(&(&self.scalar * f), &S::one());
        }
        out
    }

    /// The composite A o f, equal to f*A plus the vector part of A applied to f.
    pub fn compose_poly(&self, f: &Poly<S>) -> Self {
        let mut out = self.mul_poly(f);
        out.scalar.add_scaled(&self.derive(f), &S::one());
        out
    }

    pub fn try_commutator(&self, o: &DiffOp<S>) -> Result<Self, Error> {
        if self.vs != o.vs {
            return Err(Error::VarSetMismatch(self.vs, o.vs));
        }
        Ok(self.commutator(o))
    }

    /// [A, B]; first-order operators with scalar parts are closed under it.
    pub fn commutator(&self, o: &DiffOp<S>) -> Self {
        assert_eq!(self.vs, o.vs, "variable sets differ");
        let mut out = Self::zero(self.vs);
        for j in 0..self.vs.len() {
            let mut c = self.derive(&o.vec[j]);
            c.add_scaled(&o.derive(&self.vec[j]), &-S::one());
            out.vec[j] = c;
        }
        out.scalar = self.derive(&o.scalar);
        out.scalar.add_scaled(&o.derive(&self.scalar), &-S::one());
        out
    }

    /// The anti-automorphism x^b d^c -> x^c d^b on the fragment with
    /// coefficients of degree at most one.
    pub fn tau(&self) -> Result<Self, Error> {
        let vs = self.vs;
        let mut out = Self::zero(vs);
        for (i, f) in self.vec.iter().enumerate() {
            for (m, c) in f.terms() {
                match m.deg() {
                    0 => out.scalar.add_term(Monomial::var(i), c.clone()),
                    1 => {
                        let k = m.support().next().unwrap();
                        out.vec[k].add_term(Monomial::var(i), c.clone());
                    }
                    _ => return Err(Error::OutsideFragment),
                }
            }
        }
        for (m, c) in self.scalar.terms() {
            match m.deg() {
                0 => out.scalar.add_term(Monomial::ONE, c.clone()),
                1 => {
                    let k = m.support().next().unwrap();
                    if m.exp(k) != 1 {
                        return Err(Error::OutsideFragment);
                    }
                    out.vec[k].add_term(Monomial::ONE, c.clone());
                }
                _ => return Err(Error::OutsideFragment),
            }
        }
        Ok(out)
    }

    /// Largest coefficient degree.
    pub fn coeff_degree(&self) -> Option<u32> {
        self.vec.iter().chain(std::iter::once(&self.scalar)).filter_map(|p| p.degree()).max()
    }

    pub fn eval_field(&self, x: &[f64]) -> Vec<f64> {
        self.vec.iter().map(|p| p.eval_f64(x)).collect()
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> DiffOp<T> {
        DiffOp { vs: self.vs, vec: self.vec.iter().map(|p| p.map_coeffs(f)).collect(), scalar: self.scalar.map_coeffs(f) }
    }
}

/// Terms ordered by the differentiated variable, e.g. `x4*d7 + x6*d8`.
impl<S: Scalar> fmt::Display for DiffOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.vs.letter();
        let mut first = true;
        for (i, p) in self.vec.iter().enumerate() {
            for (m, c) in p.terms().rev() {
                write!(f, "{}", render_coeff(c, first, false))?;
                if *m != Monomial::ONE {
                    write!(f, "{}*", m.render(letter))?;
                }
                write!(f, "d{}", i + 1)?;
                first = false;
            }
        }
        for (m, c) in self.scalar.terms().rev() {
            let bare = *m == Monomial::ONE;
            write!(f, "{}", render_coeff(c, first, bare))?;
            if !bare {
                write!(f, "{}", m.render(letter))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for DiffOp<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

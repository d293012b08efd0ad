use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::scalar::Scalar;

/// Named variable families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarSet {
    X16,
    Y10,
    Z16,
}

impl VarSet {
    pub fn len(self) -> usize {
        match self {
            VarSet::Y10 => 10,
            _ => 16,
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn letter(self) -> char {
        match self {
            VarSet::X16 => 'x',
            VarSet::Y10 => 'y',
            VarSet::Z16 => 'z',
        }
    }
}

/// Sparse polynomial with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    vs: VarSet,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(vs: VarSet) -> Self {
        Poly { vs, terms: BTreeMap::new() }
    }

    pub fn constant(vs: VarSet, c: S) -> Self {
        Self::term(vs, Monomial::ONE, c)
    }

    pub fn one(vs: VarSet) -> Self {
        Self::constant(vs, S::one())
    }

    pub fn var(vs: VarSet, i: usize) -> Self {
        assert!(i < vs.len());
        Self::term(vs, Monomial::var(i), S::one())
    }

    pub fn term(vs: VarSet, m: Monomial, c: S) -> Self {
        let mut p = Self::zero(vs);
        p.add_term(m, c);
        p
    }

    pub fn vs(&self) -> VarSet {
        self.vs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Poly<S>, c: &S) {
        assert_eq!(self.vs, o.vs, "variable sets differ");
        for (m, v) in &o.terms {
            self.add_term(*m, v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vs);
        }
        Poly { vs: self.vs, terms: self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.vs);
        }
        Poly { vs: self.vs, terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone() * c.clone())).collect() }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        self.mul_monomial(&Monomial::var(i), &S::one())
    }

    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vs);
        for (m, c) in &self.terms {
            if let Some((e, q)) = m.div_var(i) {
                out.add_term(q, c.clone() * S::from_int(e as i64));
            }
        }
        out
    }

    /// Largest total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.deg())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.deg())
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Poly { vs: self.vs, terms: self.terms.iter().filter(|(m, _)| m.deg() == d).map(|(m, c)| (*m, c.clone())).collect() }
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|(m, c)| c.to_f64() * m.eval(x)).sum()
    }

    /// Constant term.
    pub fn constant_term(&self) -> S {
        self.coeff(&Monomial::ONE)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vs);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// The same polynomial read in another variable set of equal size.
    pub fn with_varset(&self, vs: VarSet) -> Self {
        assert_eq!(vs.len(), self.vs.len());
        Poly { vs, terms: self.terms.clone() }
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        let mut out = Poly::zero(self.vs);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, o: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        out.add_scaled(o, &S::one());
        out
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, o: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        out.add_scaled(o, &-S::one());
        out
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, o: &Poly<S>) -> Poly<S> {
        assert_eq!(self.vs, o.vs, "variable sets differ");
        let mut out = Poly::zero(self.vs);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(a.mul(b), ca.clone() * cb.clone());
            }
        }
        out
    }
}

pub(crate) fn render_coeff<S: Scalar>(c: &S, first: bool, bare: bool) -> String {
    let s = c.to_string();
    let (neg, mag) = match s.strip_prefix('-') {
        Some(m) => (true, m.to_string()),
        None => (false, s),
    };
    let sign = match (first, neg) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if mag == "1" && !bare {
        sign.to_string()
    } else if bare {
        format!("{sign}{mag}")
    } else {
        format!("{sign}{mag}*")
    }
}

/// Highest terms first, e.g. `x1*x11 + x2*x9 - x3*x6 + x4*x5`.
impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let bare = *m == Monomial::ONE;
            write!(f, "{}", render_coeff(c, k == 0, bare))?;
            if !bare {
                write!(f, "{}", m.render(self.vs.letter()))?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

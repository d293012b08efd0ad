use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Element of the exterior algebra on theta_1..theta_10; keys are bit masks.
#[derive(Clone, Debug, PartialEq)]
pub struct ExteriorElt<S> {
    pub terms: BTreeMap<u16, S>,
}

fn below(mask: u16, i: usize) -> u32 {
    (mask & ((1u16 << i) - 1)).count_ones()
}

impl<S: Scalar> ExteriorElt<S> {
    pub fn zero() -> Self {
        ExteriorElt { terms: BTreeMap::new() }
    }

    /// theta_{i_1} ... theta_{i_r} for 0-based indices, with the sign of sorting.
    pub fn product(idx: &[usize]) -> Self {
        let mut w = Self::basis(0);
        for &i in idx.iter().rev() {
            w = w.wedge_left(i);
        }
        w
    }

    pub fn basis(mask: u16) -> Self {
        let mut w = Self::zero();
        w.terms.insert(mask, S::one());
        w
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: u16, c: S) {
        if c.is_zero() {
            return;
        }
        let s = match self.terms.remove(&k) {
            Some(v) => v + c,
            None => c,
        };
        if !s.is_zero() {
            self.terms.insert(k, s);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(*k, v.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone() * c.clone());
        }
        out
    }

    /// theta_i w
    pub fn wedge_left(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k & (1 << i) != 0 {
                continue;
            }
            let s = if below(*k, i) % 2 == 0 { v.clone() } else { -v.clone() };
            out.add_term(k | (1 << i), s);
        }
        out
    }

    /// d/d theta_i, an odd derivation.
    pub fn d_theta(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k & (1 << i) == 0 {
                continue;
            }
            let s = if below(*k, i) % 2 == 0 { v.clone() } else { -v.clone() };
            out.add_term(k & !(1 << i), s);
        }
        out
    }

    /// E_{i,j} acting as theta_i d/d theta_j (0-based).
    pub fn act(&self, i: usize, j: usize) -> Self {
        self.d_theta(j).wedge_left(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    #[test]
    fn examples() {
        let w = ExteriorElt::<Q>::product(&[1, 2]);
        assert_eq!(w.act(0, 1), ExteriorElt::product(&[0, 2]));
        let v = ExteriorElt::<Q>::product(&[0, 1]);
        assert!(v.act(2, 2).is_zero());
        assert_eq!(ExteriorElt::<Q>::product(&[2, 1]), ExteriorElt::product(&[1, 2]).scale(&Q::from_integer(-1)));
    }
}

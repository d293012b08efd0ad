use std::cmp::Ordering;
use std::fmt;

/// Exponent vector packed into 16 byte lanes, variable 1 in the top byte.
///
/// Every lane stays below 128, so lane-wise addition never carries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    bits: u128,
    deg: u16,
}

const HIGH: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;
pub const MAX_VARS: usize = 16;

#[inline]
fn shift(i: usize) -> u32 {
    debug_assert!(i < MAX_VARS);
    ((15 - i) * 8) as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial { bits: 0, deg: 0 };

    pub fn var(i: usize) -> Monomial {
        Monomial { bits: 1u128 << shift(i), deg: 1 }
    }

    pub fn from_exps(e: &[u32]) -> Monomial {
        assert!(e.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        for (i, &k) in e.iter().enumerate() {
            assert!(k < 128, "exponent {k} too large");
            m.bits |= (k as u128) << shift(i);
            m.deg += k as u16;
        }
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        ((self.bits >> shift(i)) & 0xff) as u32
    }

    pub fn exps(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg as u32
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let bits = self.bits + o.bits;
        assert!(bits & HIGH == 0, "exponent overflow");
        Monomial { bits, deg: self.deg + o.deg }
    }

    #[inline]
    pub fn mul_var(&self, i: usize) -> Monomial {
        self.mul(&Monomial::var(i))
    }

    /// x^a / x_i together with the old exponent of x_i, if it was positive.
    #[inline]
    pub fn div_var(&self, i: usize) -> Option<(u32, Monomial)> {
        let e = self.exp(i);
        (e > 0).then(|| (e, Monomial { bits: self.bits - (1u128 << shift(i)), deg: self.deg - 1 }))
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) <= o.exp(i))
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.exp(i) > 0)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.support().map(|i| x[i].powi(self.exp(i) as i32)).product()
    }

    pub fn render(&self, letter: char) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|i| match self.exp(i) {
                1 => format!("{letter}{}", i + 1),
                e => format!("{letter}{}^{e}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Graded order; within a degree, higher powers of earlier variables come first.
impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.deg.cmp(&o.deg).then(self.bits.cmp(&o.bits))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('x'))
    }
}

/// All monomials of total degree `d` in `n` variables, ascending.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == e.len() {
            e[i] = left;
            out.push(Monomial::from_exps(e));
            return;
        }
        for k in 0..=left {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
        e[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, d, &mut e, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing() {
        let m = Monomial::from_exps(&[2, 0, 1]);
        assert_eq!(m.exp(0), 2);
        assert_eq!(m.exp(2), 1);
        assert_eq!(m.deg(), 3);
        assert_eq!(m.div_var(0), Some((2, Monomial::from_exps(&[1, 0, 1]))));
        assert_eq!(m.div_var(1), None);
        assert!(Monomial::var(0) > Monomial::var(1));
        assert!(Monomial::var(15) > Monomial::ONE);
    }

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(16, 3).len(), 816);
        assert_eq!(monomials_of_degree(10, 2).len(), 55);
    }
}

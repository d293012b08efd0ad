use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::Q;

/// A weight in epsilon coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightD5 {
    pub eps: [Q; 5],
}

impl WeightD5 {
    pub fn new(eps: [Q; 5]) -> Self {
        WeightD5 { eps }
    }

    pub fn zero() -> Self {
        Self::from_doubled([0; 5])
    }

    /// From doubled integer coordinates.
    pub fn from_doubled(v: [i64; 5]) -> Self {
        WeightD5 { eps: v.map(|c| Q::new(c, 2)) }
    }

    pub fn doubled(&self) -> [i64; 5] {
        self.eps.map(|c| (c * 2).to_integer())
    }

    pub fn eps_i(i: usize) -> Self {
        let mut v = [0; 5];
        v[i] = 2;
        Self::from_doubled(v)
    }

    /// Fundamental weight lambda_i, 1-based.
    pub fn lambda(i: usize) -> Self {
        match i {
            1..=3 => Self::from_doubled(std::array::from_fn(|r| if r < i { 2 } else { 0 })),
            4 => Self::from_doubled([1, 1, 1, 1, -1]),
            5 => Self::from_doubled([1; 5]),
            _ => panic!("D5 has five fundamental weights"),
        }
    }

    pub fn lambda1() -> Self {
        Self::lambda(1)
    }

    pub fn lambda4() -> Self {
        Self::lambda(4)
    }

    pub fn add(&self, o: &Self) -> Self {
        WeightD5 { eps: std::array::from_fn(|i| self.eps[i] + o.eps[i]) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        WeightD5 { eps: std::array::from_fn(|i| self.eps[i] - o.eps[i]) }
    }

    pub fn neg(&self) -> Self {
        WeightD5 { eps: self.eps.map(|c| -c) }
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightD5 { eps: self.eps.map(|c| c * k) }
    }

    pub fn inner(&self, o: &Self) -> Q {
        (0..5).map(|i| self.eps[i] * o.eps[i]).sum()
    }

    pub fn is_dominant(&self) -> bool {
        let d = self.doubled();
        let integral = self.eps.iter().all(|c| (*c * 2).is_integer()) && d.iter().all(|c| (c - d[0]) % 2 == 0);
        integral && (0..4).all(|i| d[i] >= d[i + 1]) && d[3] + d[4] >= 0
    }
}

impl fmt::Display for WeightD5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.eps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn rho() -> WeightD5 {
    WeightD5::from_doubled([8, 6, 4, 2, 0])
}

/// The positive roots e_i - e_j and e_i + e_j (i < j).
fn positive_roots() -> Vec<WeightD5> {
    let mut out = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let mut m = [0; 5];
            m[i] = 2;
            m[j] = -2;
            out.push(WeightD5::from_doubled(m));
            m[j] = 2;
            out.push(WeightD5::from_doubled(m));
        }
    }
    out
}

fn big(q: Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub fn weyl_dim(mu: &WeightD5) -> Result<u64, Error> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant);
    }
    let shifted = mu.add(&rho());
    let mut d = BigRational::one();
    for a in positive_roots() {
        d = d * big(shifted.inner(&a)) / big(rho().inner(&a));
    }
    assert!(d.is_integer() && d > BigRational::zero(), "Weyl dimension of {mu} is {d}");
    d.to_integer().to_u64().ok_or(Error::Overflow)
}

/// Eigenvalue (mu + 2 rho, mu) of the Casimir element on V(mu).
pub fn casimir_eig(mu: &WeightD5) -> Q {
    mu.add(&rho().scale(2)).inner(mu)
}

/// Weights of the 16-dimensional module on the degree-one variables.
pub fn spin_weights() -> Vec<WeightD5> {
    (0..32u32)
        .filter(|m| m.count_ones() % 2 == 1)
        .map(|m| WeightD5::from_doubled(std::array::from_fn(|i| if m & (1 << (4 - i)) != 0 { -1 } else { 1 })))
        .collect()
}

fn shifted_dominant(lmd: &WeightD5, weights: Vec<WeightD5>) -> Vec<WeightD5> {
    let mut out: Vec<WeightD5> = weights.iter().map(|m| lmd.add(m)).filter(WeightD5::is_dominant).collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

/// Highest weights of the components of (degree-one polynomials) tensor V(lmd).
pub fn upsilon(lmd: &WeightD5) -> Vec<WeightD5> {
    shifted_dominant(lmd, spin_weights())
}

/// Highest weights of the components of (natural module) tensor V(lmd).
pub fn upsilon_prime(lmd: &WeightD5) -> Vec<WeightD5> {
    let w = (0..5).flat_map(|i| [WeightD5::eps_i(i), WeightD5::eps_i(i).neg()]).collect();
    shifted_dominant(lmd, w)
}

/// The eigenvalues of the split Casimir on the degree-one slice, one per component.
pub fn omega_eigenvalues(lmd: &WeightD5) -> Vec<(WeightD5, Q)> {
    let base = casimir_eig(lmd) + casimir_eig(&WeightD5::lambda4());
    upsilon(lmd).into_iter().map(|l| (l, (casimir_eig(&l) - base) / 2)).collect()
}

pub fn ell_omega(lmd: &WeightD5) -> Q {
    omega_eigenvalues(lmd).into_iter().map(|(_, e)| e).min().expect("upsilon is never empty")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: [i64; 5]) -> WeightD5 {
        WeightD5::from_doubled(v)
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&WeightD5::zero()).unwrap(), 1);
        assert_eq!(weyl_dim(&WeightD5::lambda1()).unwrap(), 10);
        assert_eq!(weyl_dim(&WeightD5::lambda4()).unwrap(), 16);
        assert_eq!(weyl_dim(&WeightD5::lambda(2)).unwrap(), 45);
        assert_eq!(weyl_dim(&WeightD5::lambda(3)).unwrap(), 120);
        assert_eq!(weyl_dim(&w([1, 1, 1, 1, -3])), Err(Error::NotDominant));
    }

    #[test]
    fn casimir_values() {
        assert_eq!(casimir_eig(&WeightD5::zero()), Q::from_integer(0));
        assert_eq!(casimir_eig(&WeightD5::lambda1()), Q::from_integer(9));
        assert_eq!(casimir_eig(&WeightD5::lambda4()), Q::new(45, 4));
    }

    #[test]
    fn upsilon_sets() {
        let k = 3;
        let l = WeightD5::lambda1().scale(k);
        let want = vec![WeightD5::lambda4().add(&l), WeightD5::lambda4().add(&WeightD5::lambda1().scale(k - 1)).add(&WeightD5::eps_i(4))];
        let mut got = upsilon(&l);
        got.sort();
        let mut want = want;
        want.sort();
        assert_eq!(got, want);
        assert_eq!(upsilon_prime(&l).len(), 3);
        assert_eq!(upsilon(&WeightD5::lambda(3)).len(), 4);
    }

    #[test]
    fn ell_values() {
        for k in 1..5 {
            assert_eq!(ell_omega(&WeightD5::lambda1().scale(k)), Q::new(-8 - k, 2));
            // The minimum sits at (k-1) lambda_4 + e_1 and (k-1) lambda_5 respectively.
            assert_eq!(ell_omega(&WeightD5::lambda4().scale(k)), Q::new(-3 * k - 24, 4));
            assert_eq!(ell_omega(&WeightD5::lambda(5).scale(k)), Q::new(-5 * k - 40, 4));
        }
        assert_eq!(ell_omega(&WeightD5::lambda(2)), Q::from_integer(-8));
        assert_eq!(ell_omega(&WeightD5::lambda(3)), Q::new(-21, 2));
        assert_eq!(ell_omega(&WeightD5::zero()), Q::from_integer(0));
    }
}

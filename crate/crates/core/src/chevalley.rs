//! The 78-dimensional algebra built from the lattice: bracket, invariant form
//! and the three-step grading by the alpha_6 coordinate.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::lattice::{cocycle, enumerate_roots, pair, xi_eta_labels, RootVector, ALPHA_HAT};
use crate::report::Check;
use crate::scalar::Scalar;

/// Sum of a Cartan part (a rational lattice vector) and root vectors E_a.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement<S> {
    pub cartan: [S; 6],
    pub roots: BTreeMap<RootVector, S>,
}

impl<S: Scalar> LieElement<S> {
    pub fn zero() -> Self {
        LieElement { cartan: std::array::from_fn(|_| S::zero()), roots: BTreeMap::new() }
    }

    pub fn cartan(h: [S; 6]) -> Self {
        LieElement { cartan: h, roots: BTreeMap::new() }
    }

    /// The Cartan element given by an integral lattice vector.
    pub fn h(v: RootVector) -> Self {
        Self::cartan(v.0.map(|c| S::from_int(c as i64)))
    }

    pub fn e(alpha: RootVector) -> Self {
        Self::e_scaled(alpha, S::one())
    }

    pub fn e_scaled(alpha: RootVector, c: S) -> Self {
        assert!(alpha.is_root(), "{alpha} is not a root");
        let mut out = Self::zero();
        if !c.is_zero() {
            out.roots.insert(alpha, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LieElement {
            cartan: std::array::from_fn(|i| self.cartan[i].clone() * c.clone()),
            roots: self.roots.iter().map(|(k, v)| (*k, v.clone() * c.clone())).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for i in 0..6 {
            self.cartan[i] = self.cartan[i].clone() + other.cartan[i].clone() * c.clone();
        }
        for (k, v) in &other.roots {
            add_entry(&mut self.roots, *k, v.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &S::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-S::one());
        out
    }

    /// Coefficients in the standard 78-element basis.
    pub fn coords(&self) -> Vec<S> {
        let basis = E6Basis::get();
        let mut v: Vec<S> = (0..78).map(|_| S::zero()).collect();
        for i in 0..6 {
            v[i] = self.cartan[i].clone();
        }
        for (k, c) in &self.roots {
            v[basis.index_of(k)] = c.clone();
        }
        v
    }

    pub fn from_coords(v: &[S]) -> Self {
        let basis = E6Basis::get();
        let mut out = Self::zero();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < 6 {
                out.cartan[i] = c.clone();
            } else {
                out.roots.insert(basis.roots[i - 6], c.clone());
            }
        }
        out
    }
}

fn add_entry<S: Scalar>(m: &mut BTreeMap<RootVector, S>, k: RootVector, c: S) {
    if c.is_zero() {
        return;
    }
    let sum = match m.remove(&k) {
        Some(old) => old + c,
        None => c,
    };
    if !sum.is_zero() {
        m.insert(k, sum);
    }
}

/// (h, beta) for a rational Cartan vector h.
pub fn pair_cartan<S: Scalar>(h: &[S; 6], beta: &RootVector) -> S {
    let mut s = S::zero();
    for (i, hi) in h.iter().enumerate() {
        let p = pair(&RootVector::simple(i), beta);
        if p != 0 && !hi.is_zero() {
            s = s + hi.clone() * S::from_int(p as i64);
        }
    }
    s
}

fn pair_cartans<S: Scalar>(a: &[S; 6], b: &[S; 6]) -> S {
    let mut s = S::zero();
    for i in 0..6 {
        for j in 0..6 {
            let g = pair(&RootVector::simple(i), &RootVector::simple(j));
            if g != 0 {
                s = s + a[i].clone() * b[j].clone() * S::from_int(g as i64);
            }
        }
    }
    s
}

pub fn bracket<S: Scalar>(u: &LieElement<S>, v: &LieElement<S>) -> LieElement<S> {
    let mut out = LieElement::zero();
    for (b, cb) in &v.roots {
        let p = pair_cartan(&u.cartan, b);
        add_entry(&mut out.roots, *b, p * cb.clone());
    }
    for (a, ca) in &u.roots {
        let p = pair_cartan(&v.cartan, a);
        add_entry(&mut out.roots, *a, -(p * ca.clone()));
    }
    for (a, ca) in &u.roots {
        for (b, cb) in &v.roots {
            let s = *a + *b;
            let c = ca.clone() * cb.clone();
            if s == RootVector::ZERO {
                for i in 0..6 {
                    out.cartan[i] = out.cartan[i].clone() - c.clone() * S::from_int(a.0[i] as i64);
                }
            } else if s.is_root() {
                add_entry(&mut out.roots, s, c * S::from_int(cocycle(a, b) as i64));
            }
        }
    }
    out
}

pub fn invariant_form<S: Scalar>(u: &LieElement<S>, v: &LieElement<S>) -> S {
    let mut s = pair_cartans(&u.cartan, &v.cartan);
    for (a, ca) in &u.roots {
        if let Some(cb) = v.roots.get(&-*a) {
            s = s - ca.clone() * cb.clone();
        }
    }
    s
}

/// Cartan alpha_1..alpha_6 first, then the 72 roots in enumeration order.
pub struct E6Basis {
    pub roots: Vec<RootVector>,
    index: BTreeMap<RootVector, usize>,
}

impl E6Basis {
    pub fn get() -> &'static E6Basis {
        static B: OnceLock<E6Basis> = OnceLock::new();
        B.get_or_init(|| {
            let roots = enumerate_roots();
            let index = roots.iter().enumerate().map(|(i, r)| (*r, i + 6)).collect();
            E6Basis { roots, index }
        })
    }

    pub fn len(&self) -> usize {
        78
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, root: &RootVector) -> usize {
        self.index[root]
    }

    pub fn element<S: Scalar>(&self, i: usize) -> LieElement<S> {
        if i < 6 {
            LieElement::h(RootVector::simple(i))
        } else {
            LieElement::e(self.roots[i - 6])
        }
    }

    pub fn label(&self, i: usize) -> String {
        if i < 6 {
            format!("a{}", i + 1)
        } else {
            format!("E{}", self.roots[i - 6])
        }
    }
}

/// The grading g_- + g_0 + g_+ by the alpha_6 coordinate.
pub struct GradedTriple<S> {
    pub minus: Vec<LieElement<S>>,
    pub zero: Vec<LieElement<S>>,
    pub plus: Vec<LieElement<S>>,
}

impl<S: Scalar> GradedTriple<S> {
    /// `zero` holds alpha_1..alpha_5, the 40 D5 root vectors, then alpha_6.
    pub fn new() -> Self {
        let (xi, eta) = xi_eta_labels();
        let mut zero: Vec<LieElement<S>> = (0..5).map(|i| LieElement::h(RootVector::simple(i))).collect();
        zero.extend(enumerate_roots().into_iter().filter(|r| r.in_d5()).map(LieElement::e));
        zero.push(LieElement::h(RootVector::simple(5)));
        GradedTriple {
            minus: eta.into_iter().map(LieElement::e).collect(),
            zero,
            plus: xi.into_iter().map(LieElement::e).collect(),
        }
    }

    /// phi_{i,j}(u) with [u, eta_i] = sum_j phi_{i,j}(u) eta_j, for u in g_0.
    pub fn phi(&self, u: &LieElement<S>) -> Vec<Vec<S>> {
        let (_, eta) = xi_eta_labels();
        let mut out = vec![vec![S::zero(); 16]; 16];
        for (i, row) in out.iter_mut().enumerate() {
            let b = bracket(u, &self.minus[i]);
            assert!(b.cartan.iter().all(|c| c.is_zero()), "g_0 does not preserve g_-");
            for (k, c) in &b.roots {
                let j = eta.iter().position(|e| e == k).expect("g_0 does not preserve g_-");
                row[j] = c.clone();
            }
        }
        out
    }
}

impl<S: Scalar> Default for GradedTriple<S> {
    fn default() -> Self {
        Self::new()
    }
}

pub fn alpha_hat<S: Scalar>() -> LieElement<S> {
    LieElement::h(ALPHA_HAT)
}

/// Jacobi identity and invariance of the form on seeded random basis triples.
pub fn verify_jacobi(samples: usize, seed: u64) -> Vec<Check> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let basis = E6Basis::get();
    let (mut jac, mut inv) = (0, 0);
    for _ in 0..samples {
        let [u, v, w]: [LieElement<crate::Q>; 3] = std::array::from_fn(|_| basis.element(rng.gen_range(0..78)));
        let j = bracket(&u, &bracket(&v, &w)).add(&bracket(&v, &bracket(&w, &u))).add(&bracket(&w, &bracket(&u, &v)));
        if !j.is_zero() {
            jac += 1;
        }
        if invariant_form(&bracket(&u, &v), &w) != invariant_form(&u, &bracket(&v, &w)) {
            inv += 1;
        }
    }
    vec![
        Check::new("Jacobi identity", jac == 0, format!("{samples} triples, {jac} failures")),
        Check::new("form invariance", inv == 0, format!("{samples} triples, {inv} failures")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_basis(rng: &mut ChaCha8Rng) -> LieElement<Q> {
        E6Basis::get().element(rng.gen_range(0..78))
    }

    #[test]
    fn simple_brackets() {
        let a6 = RootVector::simple(5);
        let b = bracket(&LieElement::<Q>::e(a6), &LieElement::e(-a6));
        assert_eq!(b, LieElement::h(-a6));
        let ah = alpha_hat::<Q>();
        for r in enumerate_roots().into_iter().filter(|r| r.in_d5()) {
            assert!(bracket(&ah, &LieElement::e(r)).is_zero());
        }
    }

    #[test]
    fn jacobi_and_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (u, v, w) = (random_basis(&mut rng), random_basis(&mut rng), random_basis(&mut rng));
            let j = bracket(&u, &bracket(&v, &w))
                .add(&bracket(&v, &bracket(&w, &u)))
                .add(&bracket(&w, &bracket(&u, &v)));
            assert!(j.is_zero());
            let lhs = invariant_form(&bracket(&u, &v), &w);
            let rhs = invariant_form(&u, &bracket(&v, &w));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn grading() {
        let g = GradedTriple::<Q>::new();
        assert_eq!(g.minus.len() + g.zero.len() + g.plus.len(), 78);
        for i in 0..16 {
            for j in 0..16 {
                let want = if i == j { Q::from_integer(-1) } else { Q::from_integer(0) };
                assert_eq!(invariant_form(&g.plus[i], &g.minus[j]), want);
                assert!(bracket(&g.plus[i], &g.plus[j]).is_zero());
                assert!(bracket(&g.minus[i], &g.minus[j]).is_zero());
            }
        }
        for u in &g.zero {
            g.phi(u);
        }
    }
}

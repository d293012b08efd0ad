use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::weights::{weyl_dim, WeightD5};
use crate::chevalley::GradedTriple;
use crate::e6rep::{linear_op, monomial_weight2};
use crate::error::Error;
use crate::linalg::kernel;
use crate::o10::{structure, Nu, O10};
use crate::polydiff::{monomials_of_degree, DiffOp, ExteriorElt, Monomial, Poly, VarSet};
use crate::scalar::Exact;

pub const DIMENSION_GUARD: usize = 20000;

/// The module families used for the threshold computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Trivial,
    /// Harmonic polynomials of degree k in y_1..y_10, highest weight k e_1.
    Natural(u32),
    /// Exterior power r of the natural module, r = 2 or 3.
    Exterior(u32),
    /// Span of z_1^k under the spin action on z_1..z_16, highest weight k lambda_4.
    Spin4(u32),
    /// Dual of `Spin4(k)`, highest weight k lambda_5.
    Spin5(u32),
}

impl Family {
    pub fn highest_weight(&self) -> WeightD5 {
        match *self {
            Family::Trivial => WeightD5::zero(),
            Family::Natural(k) => WeightD5::lambda1().scale(k as i64),
            Family::Exterior(r) => WeightD5::lambda(r as usize),
            Family::Spin4(k) => WeightD5::lambda4().scale(k as i64),
            Family::Spin5(k) => WeightD5::lambda(5).scale(k as i64),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Trivial => write!(f, "trivial"),
            Family::Natural(k) => write!(f, "natural^{k}"),
            Family::Exterior(r) => write!(f, "exterior^{r}"),
            Family::Spin4(k) => write!(f, "spin4^{k}"),
            Family::Spin5(k) => write!(f, "spin5^{k}"),
        }
    }
}

/// A finite-dimensional o(10)-module as 45 sparse matrices.
#[derive(Clone, Debug)]
pub struct MatrixRep<S> {
    pub family: Family,
    pub dim: usize,
    /// `action[b][j]` is the image of basis vector j under basis element b, as (row, coefficient).
    pub action: Vec<Vec<Vec<(usize, S)>>>,
    pub weights: Vec<WeightD5>,
}

/// Reduced echelon basis of a polynomial subspace, one pivot monomial per vector.
struct PolyEchelon<S> {
    vecs: Vec<Poly<S>>,
    pivots: FxHashMap<Monomial, usize>,
}

impl<S: Exact> PolyEchelon<S> {
    fn new() -> Self {
        PolyEchelon { vecs: Vec::new(), pivots: FxHashMap::default() }
    }

    fn reduce(&self, p: &Poly<S>) -> (Poly<S>, Vec<(usize, S)>) {
        let hits: Vec<(usize, S)> =
            p.terms().filter_map(|(m, c)| self.pivots.get(m).map(|&i| (i, c.clone()))).collect();
        let mut r = p.clone();
        for (i, c) in &hits {
            r.add_scaled(&self.vecs[*i], &-c.clone());
        }
        (r, hits)
    }

    fn insert(&mut self, p: &Poly<S>) -> bool {
        let (r, _) = self.reduce(p);
        let Some((m, c)) = r.terms().next_back().map(|(m, c)| (*m, c.clone())) else { return false };
        let r = r.scale(&(S::one() / c));
        for v in self.vecs.iter_mut() {
            let c = v.coeff(&m);
            if !c.is_zero() {
                v.add_scaled(&r, &-c);
            }
        }
        self.pivots.insert(m, self.vecs.len());
        self.vecs.push(r);
        true
    }

    /// Coordinates of a vector known to lie in the span.
    fn coords(&self, p: &Poly<S>) -> Option<Vec<(usize, S)>> {
        let (r, mut hits) = self.reduce(p);
        hits.sort_by_key(|h| h.0);
        r.is_zero().then_some(hits)
    }
}

fn natural_op<S: Exact>(vs: VarSet, b: O10) -> DiffOp<S> {
    let m = b.matrix();
    let mut d = DiffOp::zero(vs);
    for (i, row) in m.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c != 0 {
                d.vec[j].add_term(Monomial::var(i), S::from_int(c));
            }
        }
    }
    d
}

fn y_weight(m: &Monomial) -> WeightD5 {
    let mut w = [0i64; 5];
    for i in m.support() {
        let e = m.exp(i) as i64;
        if i < 5 {
            w[i] += 2 * e;
        } else {
            w[i - 5] -= 2 * e;
        }
    }
    WeightD5::from_doubled(w)
}

fn from_polys<S: Exact>(
    family: Family,
    ech: &PolyEchelon<S>,
    ops: &[DiffOp<S>],
    weight: impl Fn(&Monomial) -> WeightD5,
) -> MatrixRep<S> {
    let mut order: Vec<usize> = (0..ech.vecs.len()).collect();
    let pivot_of: Vec<Monomial> = {
        let mut p = vec![Monomial::ONE; ech.vecs.len()];
        for (m, &i) in &ech.pivots {
            p[i] = *m;
        }
        p
    };
    order.sort_by(|&a, &b| weight(&pivot_of[b]).cmp(&weight(&pivot_of[a])).then(pivot_of[b].cmp(&pivot_of[a])));
    let mut pos = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let action = ops
        .iter()
        .map(|op| {
            order
                .iter()
                .map(|&old| {
                    let img = op.act(&ech.vecs[old]);
                    let mut c = ech.coords(&img).expect("span is closed under the action");
                    for e in c.iter_mut() {
                        e.0 = pos[e.0];
                    }
                    c.sort_by_key(|e| e.0);
                    c
                })
                .collect()
        })
        .collect();
    let weights = order.iter().map(|&old| weight(&pivot_of[old])).collect();
    MatrixRep { family, dim: order.len(), action, weights }
}

fn harmonic<S: Exact>(k: u32) -> Result<MatrixRep<S>, Error> {
    let mut slices: BTreeMap<[i64; 5], Vec<Monomial>> = BTreeMap::new();
    for m in monomials_of_degree(10, k) {
        slices.entry(y_weight(&m).doubled()).or_default().push(m);
    }
    let mut ech = PolyEchelon::new();
    for monos in slices.values() {
        let mut rows: BTreeMap<Monomial, Vec<S>> = BTreeMap::new();
        for (c, m) in monos.iter().enumerate() {
            let f = Poly::term(VarSet::Y10, *m, S::one());
            for i in 0..5 {
                for (im, v) in f.deriv(i).deriv(5 + i).terms() {
                    let row = rows.entry(*im).or_insert_with(|| vec![S::zero(); monos.len()]);
                    row[c] = row[c].clone() + v.clone();
                }
            }
        }
        let mat: Vec<Vec<S>> = rows.into_values().collect();
        for v in kernel(&mat, monos.len())? {
            let mut p = Poly::zero(VarSet::Y10);
            for (m, c) in monos.iter().zip(v) {
                p.add_term(*m, c);
            }
            ech.insert(&p);
        }
        if ech.vecs.len() > DIMENSION_GUARD {
            return Err(Error::DimensionGuard { got: ech.vecs.len(), max: DIMENSION_GUARD });
        }
    }
    let ops: Vec<DiffOp<S>> = O10::all().iter().map(|b| natural_op(VarSet::Y10, *b)).collect();
    Ok(from_polys(Family::Natural(k), &ech, &ops, y_weight))
}

fn spin_power<S: Exact>(k: u32) -> Result<MatrixRep<S>, Error> {
    let g = GradedTriple::<S>::new();
    let ops: Vec<DiffOp<S>> =
        O10::all().iter().map(|b| linear_op(&g, &Nu::get().apply(*b)).with_varset(VarSet::Z16)).collect();
    let mut ech = PolyEchelon::new();
    let start = Poly::var(VarSet::Z16, 0).pow(k);
    ech.insert(&start);
    let mut queue = vec![start];
    while let Some(p) = queue.pop() {
        for op in &ops {
            let img = op.act(&p);
            if !img.is_zero() && ech.insert(&img) {
                if ech.vecs.len() > DIMENSION_GUARD {
                    return Err(Error::DimensionGuard { got: ech.vecs.len(), max: DIMENSION_GUARD });
                }
                queue.push(img);
            }
        }
    }
    let weight = |m: &Monomial| WeightD5::from_doubled(monomial_weight2(m).map(|c| c as i64));
    Ok(from_polys(Family::Spin4(k), &ech, &ops, weight))
}

fn exterior<S: Exact>(r: u32) -> MatrixRep<S> {
    let mut masks: Vec<u16> = (0u16..1 << 10).filter(|m| m.count_ones() == r).collect();
    let mask_weight = |m: u16| -> WeightD5 {
        let mut w = [0i64; 5];
        for i in 0..10 {
            if m & (1 << i) != 0 {
                if i < 5 {
                    w[i] += 2;
                } else {
                    w[i - 5] -= 2;
                }
            }
        }
        WeightD5::from_doubled(w)
    };
    masks.sort_by(|a, b| mask_weight(*b).cmp(&mask_weight(*a)).then(a.cmp(b)));
    let index: BTreeMap<u16, usize> = masks.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let action = O10::all()
        .iter()
        .map(|b| {
            let mat = b.matrix();
            masks
                .iter()
                .map(|&m| {
                    let mut img = ExteriorElt::<S>::zero();
                    for (i, row) in mat.iter().enumerate() {
                        for (j, &c) in row.iter().enumerate() {
                            if c != 0 {
                                img = img.add(&ExteriorElt::basis(m).act(i, j).scale(&S::from_int(c)));
                            }
                        }
                    }
                    let mut col: Vec<(usize, S)> = img.terms.into_iter().map(|(k, v)| (index[&k], v)).collect();
                    col.sort_by_key(|e| e.0);
                    col
                })
                .collect()
        })
        .collect();
    MatrixRep { family: Family::Exterior(r), dim: masks.len(), action, weights: masks.iter().map(|m| mask_weight(*m)).collect() }
}

impl<S: Exact> MatrixRep<S> {
    pub fn trivial() -> Self {
        MatrixRep { family: Family::Trivial, dim: 1, action: vec![vec![Vec::new()]; 45], weights: vec![WeightD5::zero()] }
    }

    /// The same module over another exact scalar.
    pub fn convert<T: Exact>(&self) -> Result<MatrixRep<T>, Error> {
        let action = self
            .action
            .iter()
            .map(|cols| {
                cols.iter()
                    .map(|col| col.iter().map(|(i, c)| T::from_big(&c.to_big()).map(|t| (*i, t)).ok_or(Error::Overflow)).collect())
                    .collect::<Result<Vec<_>, Error>>()
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(MatrixRep { family: self.family, dim: self.dim, action, weights: self.weights.clone() })
    }

    /// The contragredient module.
    pub fn dual(&self, family: Family) -> Self {
        let action = self
            .action
            .iter()
            .map(|cols| {
                let mut t: Vec<Vec<(usize, S)>> = vec![Vec::new(); self.dim];
                for (j, col) in cols.iter().enumerate() {
                    for (i, c) in col {
                        t[*i].push((j, -c.clone()));
                    }
                }
                t
            })
            .collect();
        let mut out = MatrixRep { family, dim: self.dim, action, weights: self.weights.iter().map(WeightD5::neg).collect() };
        out.reorder_by_weight();
        out
    }

    fn reorder_by_weight(&mut self) {
        let mut order: Vec<usize> = (0..self.dim).collect();
        order.sort_by(|&a, &b| self.weights[b].cmp(&self.weights[a]).then(a.cmp(&b)));
        let mut pos = vec![0; self.dim];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        for cols in self.action.iter_mut() {
            let mut nc: Vec<Vec<(usize, S)>> = order.iter().map(|&old| std::mem::take(&mut cols[old])).collect();
            for col in nc.iter_mut() {
                for e in col.iter_mut() {
                    e.0 = pos[e.0];
                }
                col.sort_by_key(|e| e.0);
            }
            *cols = nc;
        }
        self.weights = order.iter().map(|&old| self.weights[old]).collect();
    }

    /// Image of basis vector j under basis element b.
    pub fn act_basis(&self, b: usize, j: usize) -> &[(usize, S)] {
        &self.action[b][j]
    }

    pub fn apply(&self, b: usize, v: &[(usize, S)]) -> Vec<(usize, S)> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (j, c) in v {
            for (i, a) in &self.action[b][*j] {
                let e = acc.entry(*i).or_insert_with(S::zero);
                *e = e.clone() + a.clone() * c.clone();
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Pairs (a, b) whose commutator disagrees with the structure constants.
    pub fn commutation_failures(&self) -> Vec<(usize, usize)> {
        let st = structure();
        let pairs: Vec<(usize, usize)> = (0..45).flat_map(|a| (0..45).map(move |b| (a, b))).collect();
        pairs
            .into_par_iter()
            .filter(|&(a, b)| {
                (0..self.dim).any(|j| {
                    let e = [(j, S::one())];
                    let ab = self.apply(a, &self.apply(b, &e));
                    let ba = self.apply(b, &self.apply(a, &e));
                    let mut lhs: BTreeMap<usize, S> = ab.into_iter().collect();
                    for (i, c) in ba {
                        let x = lhs.entry(i).or_insert_with(S::zero);
                        *x = x.clone() - c;
                    }
                    for (c, k) in &st[a][b] {
                        for (i, v) in &self.action[*c][j] {
                            let x = lhs.entry(*i).or_insert_with(S::zero);
                            *x = x.clone() - v.clone() * S::from_int(*k);
                        }
                    }
                    lhs.values().any(|c| !c.is_zero())
                })
            })
            .collect()
    }

    /// Cartan elements act diagonally by the recorded weights.
    pub fn weights_consistent(&self) -> bool {
        (0..5).all(|r| {
            let h = O10::Gl(r as u8, r as u8).index();
            (0..self.dim).all(|j| {
                let w = self.weights[j].eps[r];
                let col = &self.action[h][j];
                if w == crate::Q::from_integer(0) {
                    col.is_empty()
                } else {
                    col.len() == 1 && col[0].0 == j && col[0].1 == S::from_ratio(*w.numer(), *w.denom())
                }
            })
        })
    }

    /// Index of the unique basis vector of the highest weight.
    pub fn highest_index(&self) -> Option<usize> {
        let hw = self.family.highest_weight();
        let hits: Vec<usize> = (0..self.dim).filter(|&j| self.weights[j] == hw).collect();
        (hits.len() == 1).then(|| hits[0])
    }

    /// The Casimir element applied to a vector.
    pub fn casimir(&self, v: &[(usize, S)]) -> Vec<(usize, S)> {
        let mut acc: BTreeMap<usize, S> = BTreeMap::new();
        for (c, a, b) in casimir_pairs() {
            for (i, x) in self.apply(a, &self.apply(b, v)) {
                let e = acc.entry(i).or_insert_with(S::zero);
                *e = e.clone() + x * S::from_int(c);
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

/// The Casimir element as a list of (coefficient, a, b) meaning coefficient * a * b.
pub fn casimir_pairs() -> Vec<(i64, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..5u8 {
        for j in i + 1..5 {
            let (u, l) = (O10::Upper(i, j).index(), O10::Lower(i, j).index());
            out.push((-1, u, l));
            out.push((-1, l, u));
        }
    }
    for i in 0..5u8 {
        for j in 0..5 {
            out.push((1, O10::Gl(i, j).index(), O10::Gl(j, i).index()));
        }
    }
    out
}

pub fn realize<S: Exact>(family: Family) -> Result<MatrixRep<S>, Error> {
    let guard = |d: u64| -> Result<(), Error> {
        if d as usize > DIMENSION_GUARD {
            Err(Error::DimensionGuard { got: d as usize, max: DIMENSION_GUARD })
        } else {
            Ok(())
        }
    };
    if matches!(family, Family::Exterior(r) if !(1..=3).contains(&r)) {
        return Err(Error::NotDominant);
    }
    guard(weyl_dim(&family.highest_weight())?)?;
    match family {
        Family::Trivial => Ok(MatrixRep::trivial()),
        // Echelon reductions run over big rationals; only the final matrices
        // need to fit the caller's scalar.
        Family::Natural(k) => harmonic::<BigRational>(k)?.convert(),
        Family::Exterior(r) => Ok(exterior(r)),
        Family::Spin4(k) => spin_power::<BigRational>(k)?.convert(),
        Family::Spin5(k) => spin_power::<BigRational>(k)?.dual(Family::Spin5(k)).convert(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::d5modules::casimir_eig;
    use crate::Q;

    fn check(family: Family) {
        let rep = realize::<Q>(family).unwrap();
        assert_eq!(rep.dim as u64, weyl_dim(&family.highest_weight()).unwrap(), "{family}");
        assert!(rep.weights_consistent(), "{family}");
        assert!(rep.commutation_failures().is_empty(), "{family}");
        let h = rep.highest_index().expect("highest weight vector");
        let cas = rep.casimir(&[(h, Q::from_integer(1))]);
        let want = casimir_eig(&family.highest_weight());
        if want == Q::from_integer(0) {
            assert!(cas.is_empty());
        } else {
            assert_eq!(cas, vec![(h, want)], "{family}");
        }
    }

    #[test]
    fn small_modules() {
        for f in [
            Family::Trivial,
            Family::Natural(1),
            Family::Natural(2),
            Family::Exterior(2),
            Family::Exterior(3),
            Family::Spin4(1),
            Family::Spin5(1),
            Family::Spin4(2),
        ] {
            check(f);
        }
    }

    #[test]
    fn guards() {
        assert_eq!(realize::<Q>(Family::Exterior(4)).unwrap_err(), Error::NotDominant);
        assert!(matches!(realize::<Q>(Family::Natural(40)), Err(Error::DimensionGuard { .. })));
    }
}

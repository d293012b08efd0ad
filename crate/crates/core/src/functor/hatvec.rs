use rustc_hash::FxHashMap;

use super::ModuleOp;
use crate::d5modules::MatrixRep;
use crate::polydiff::Monomial;
use crate::scalar::Exact;

/// Sparse vector of A (x) M in the basis x^m (x) v_j.
#[derive(Clone, Debug, PartialEq)]
pub struct HatVec<S> {
    pub terms: FxHashMap<(Monomial, usize), S>,
}

impl<S: Exact> HatVec<S> {
    pub fn zero() -> Self {
        HatVec { terms: FxHashMap::default() }
    }

    pub fn basis(m: Monomial, j: usize) -> Self {
        let mut v = Self::zero();
        v.terms.insert((m, j), S::one());
        v
    }

    pub fn add_term(&mut self, k: (Monomial, usize), c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &S) {
        for (k, v) in &o.terms {
            self.add_term(*k, v.clone() * c.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted for stable output.
    pub fn sorted(&self) -> Vec<((Monomial, usize), S)> {
        let mut v: Vec<_> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> =
            self.sorted().iter().take(6).map(|((m, j), c)| format!("{c}*{}@v{j}", m.render('x'))).collect();
        let more = if self.terms.len() > 6 { " + ..." } else { "" };
        format!("{}{more}", parts.join(" + "))
    }
}

type Terms<S> = Vec<(Monomial, S)>;

/// A `ModuleOp` flattened for repeated application with kappa fixed to c.
pub struct Compiled<S> {
    fields: Vec<(usize, Terms<S>)>,
    mult: Terms<S>,
    mats: Vec<(usize, Terms<S>)>,
}

impl<S: Exact> Compiled<S> {
    pub fn new(op: &ModuleOp<S>, c: &S) -> Self {
        let flat = |p: &crate::polydiff::Poly<S>| -> Terms<S> { p.terms().map(|(m, a)| (*m, a.clone())).collect() };
        let mut mult = op.diff.scalar.clone();
        mult.add_scaled(&op.kappa, c);
        Compiled {
            fields: op.diff.vec.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(i, p)| (i, flat(p))).collect(),
            mult: flat(&mult),
            mats: op.mat.iter().map(|(b, p)| (*b, flat(p))).collect(),
        }
    }

    pub fn apply(&self, rep: &MatrixRep<S>, v: &HatVec<S>) -> HatVec<S> {
        let mut out = HatVec::zero();
        for ((m, j), coef) in &v.terms {
            for (i, terms) in &self.fields {
                if let Some((e, rest)) = m.div_var(*i) {
                    let k = coef.clone() * S::from_int(e as i64);
                    for (mm, a) in terms {
                        out.add_term((rest.mul(mm), *j), k.clone() * a.clone());
                    }
                }
            }
            for (mm, a) in &self.mult {
                out.add_term((m.mul(mm), *j), coef.clone() * a.clone());
            }
            for (b, terms) in &self.mats {
                for (row, bv) in rep.act_basis(*b, *j) {
                    let k = coef.clone() * bv.clone();
                    for (mm, a) in terms {
                        out.add_term((m.mul(mm), *row), k.clone() * a.clone());
                    }
                }
            }
        }
        out
    }
}

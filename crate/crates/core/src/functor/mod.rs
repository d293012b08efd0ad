//! The functor from D5-modules to E6-modules: operators on A (x) M built from
//! the realization, the homomorphism sweep, and the threshold data.

mod hatvec;
mod omega;
pub mod tables;
mod thresholds;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::chevalley::{bracket, E6Basis, LieElement};
use crate::d5modules::MatrixRep;
use crate::error::Error;
use crate::lattice::{cocycle, xi_eta_labels, RootVector, ALPHA_HAT};
use crate::o10::{structure, Nu, O10};
use crate::polydiff::{monomials_of_degree, DiffOp, Monomial, Poly, VarSet};
use crate::report::Check;
use crate::scalar::Exact;
use crate::e6rep::RealizationTable;

pub use hatvec::{Compiled, HatVec};
pub use omega::{omega_matches_eta, omega_commutes, omega_spectrum, omega_tilde, SpectrumLine};
pub use thresholds::{
    flat_values, irreducibility_exclusions, printed_t, rank_probe, singular_in_u, t1_sum, thresholds, t_operators, verify_zeta_identity_module, ExclusionSet, FlatValue, Progression,
    RankLine, TOperators, Thresholds,
};

const X: VarSet = VarSet::X16;

/// d + sum_b f_b B_b + k kappa acting on A (x) M, with kappa acting by the scalar c.
#[derive(Clone, PartialEq)]
pub struct ModuleOp<S> {
    pub diff: DiffOp<S>,
    pub mat: BTreeMap<usize, Poly<S>>,
    pub kappa: Poly<S>,
}

fn add_into<S: Exact>(m: &mut BTreeMap<usize, Poly<S>>, b: usize, f: &Poly<S>, c: &S) {
    if f.is_zero() || c.is_zero() {
        return;
    }
    let e = m.entry(b).or_insert_with(|| Poly::zero(X));
    e.add_scaled(f, c);
    if e.is_zero() {
        m.remove(&b);
    }
}

impl<S: Exact> ModuleOp<S> {
    pub fn zero() -> Self {
        ModuleOp { diff: DiffOp::zero(X), mat: BTreeMap::new(), kappa: Poly::zero(X) }
    }

    pub fn from_diff(d: DiffOp<S>) -> Self {
        ModuleOp { diff: d, ..Self::zero() }
    }

    /// d + B_b for an o(10) basis element, the image of nu(B_b).
    pub fn d5(t: &RealizationTable<S>, b: O10) -> Self {
        let mut m = Self::from_diff(t.op(b).clone());
        m.mat.insert(b.index(), Poly::one(X));
        m
    }

    pub fn is_zero(&self) -> bool {
        self.diff.is_zero() && self.mat.is_empty() && self.kappa.is_zero()
    }

    pub fn add_scaled(&mut self, o: &Self, c: &S) {
        self.diff.add_scaled(&o.diff, c);
        for (b, f) in &o.mat {
            add_into(&mut self.mat, *b, f, c);
        }
        self.kappa.add_scaled(&o.kappa, c);
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(o, &-S::one());
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// A o f, the operator applied after multiplying by f.
    pub fn compose_poly(&self, f: &Poly<S>) -> Self {
        ModuleOp {
            diff: self.diff.compose_poly(f),
            mat: self.mat.iter().map(|(b, g)| (*b, g * f)).collect(),
            kappa: &self.kappa * f,
        }
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let st = structure();
        let mut mat = BTreeMap::new();
        for (a, f) in &self.mat {
            for (b, g) in &o.mat {
                let fg = f * g;
                for (c, k) in &st[*a][*b] {
                    add_into(&mut mat, *c, &fg, &S::from_int(*k));
                }
            }
        }
        for (b, g) in &o.mat {
            add_into(&mut mat, *b, &self.diff.derive(g), &S::one());
        }
        for (a, f) in &self.mat {
            add_into(&mut mat, *a, &o.diff.derive(f), &-S::one());
        }
        let mut kappa = self.diff.derive(&o.kappa);
        kappa.add_scaled(&o.diff.derive(&self.kappa), &-S::one());
        ModuleOp { diff: self.diff.commutator(&o.diff), mat, kappa }
    }

    /// Coefficient polynomial of B_b.
    pub fn mat_coeff(&self, b: usize) -> Poly<S> {
        self.mat.get(&b).cloned().unwrap_or_else(|| Poly::zero(X))
    }
}

impl<S: Exact> std::fmt::Debug for ModuleOp<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Exact> std::fmt::Display for ModuleOp<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.diff)?;
        for (b, g) in &self.mat {
            write!(f, " + ({g}){}", O10::from_index(*b))?;
        }
        if !self.kappa.is_zero() {
            write!(f, " + ({})kappa", self.kappa)?;
        }
        Ok(())
    }
}

/// rho on g_0: o(10) coordinates and the kappa coefficient.
pub fn rho<S: Exact>(u: &LieElement<S>) -> Result<(Vec<S>, S), Error> {
    let h6 = u.cartan[5].clone();
    let four = S::from_int(4);
    let mut part = u.clone();
    for i in 0..5 {
        part.cartan[i] = part.cartan[i].clone() - h6.clone() * S::from_int(ALPHA_HAT.0[i] as i64) / four.clone();
    }
    part.cartan[5] = S::zero();
    let coords = Nu::get().inverse(&part)?;
    Ok((coords, h6 / S::from_int(2)))
}

fn rho_op<S: Exact>(u: &LieElement<S>, f: &Poly<S>) -> ModuleOp<S> {
    let (coords, k) = rho(u).expect("element of g_0");
    let mut m = ModuleOp::zero();
    for (b, c) in coords.iter().enumerate() {
        add_into(&mut m.mat, b, f, c);
    }
    m.kappa.add_scaled(f, &k);
    m
}

/// The 78 operators iota(e_k) in the basis order of `E6Basis`, plus comparisons
/// of the derived eta operators with other routes to them.
pub struct Iota<S> {
    pub ops: Vec<ModuleOp<S>>,
    pub checks: Vec<Check>,
}

/// Position of each basis element in the three-step grading.
fn grade(r: &RootVector) -> i32 {
    r.0[5]
}

impl<S: Exact> Iota<S> {
    pub fn build(t: &RealizationTable<S>) -> Self {
        let basis = E6Basis::get();
        let (xi, eta) = xi_eta_labels();
        let one = Poly::one(X);
        let mut ops: Vec<ModuleOp<S>> = Vec::with_capacity(78);
        for k in 0..78 {
            let e = basis.element::<S>(k);
            let mut op = ModuleOp::from_diff(t.theta_basis[k].clone());
            let g = if k < 6 { 0 } else { grade(&basis.roots[k - 6]) };
            if g == 0 {
                op.add_scaled(&rho_op(&e, &one), &S::one());
            } else if g < 0 {
                let i = eta.iter().position(|r| *r == basis.roots[k - 6]).expect("negative root");
                for (r, x) in xi.iter().enumerate() {
                    let b = bracket(&LieElement::e(*x), &e);
                    op.add_scaled(&rho_op(&b, &Poly::var(X, r)), &S::one());
                }
                debug_assert_eq!(op.diff, t.pis[i]);
            }
            ops.push(op);
        }
        let mut iota = Iota { ops, checks: Vec::new() };
        iota.checks = iota.cross_checks(t);
        iota
    }

    pub fn eta(&self, i: usize) -> &ModuleOp<S> {
        let (_, eta) = xi_eta_labels();
        &self.ops[E6Basis::get().index_of(&eta[i])]
    }

    pub fn xi(&self, i: usize) -> &ModuleOp<S> {
        let (xi, _) = xi_eta_labels();
        &self.ops[E6Basis::get().index_of(&xi[i])]
    }

    pub fn of(&self, u: &LieElement<S>) -> ModuleOp<S> {
        let mut out = ModuleOp::zero();
        for (k, c) in u.coords().iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.ops[k], c);
            }
        }
        out
    }

    /// iota(nu(B)) for a signed symbol E_{a,b} - E_{c,d}.
    pub fn symbol(&self, t: &RealizationTable<S>, sym: tables::Sym) -> ModuleOp<S> {
        let (s, b) = O10::from_symbol(sym.0, sym.1, sym.2, sym.3).expect("symbol lies in o(10)");
        ModuleOp::d5(t, b).scale(&S::from_int(s))
    }

    fn cross_checks(&self, t: &RealizationTable<S>) -> Vec<Check> {
        let mut out = Vec::new();
        let (xi, eta) = xi_eta_labels();
        let basis = E6Basis::get();
        // D5 part agrees with d + B.
        let bad: Vec<String> = O10::all()
            .iter()
            .filter(|b| {
                let u = Nu::get().apply::<S>(**b);
                self.of(&u) != ModuleOp::d5(t, **b)
            })
            .map(|b| b.to_string())
            .collect();
        out.push(Check::new("iota(nu(B)) = B|A + B", bad.is_empty(), bad.join(", ")));
        let ah = self.of(&LieElement::h(ALPHA_HAT));
        let mut want = ModuleOp::from_diff(t.theta(&LieElement::h(ALPHA_HAT)));
        want.kappa = Poly::constant(X, S::from_int(2));
        out.push(Check::new("iota(alpha_hat) = theta(alpha_hat) + 2 kappa", ah == want, format!("{ah}")));
        let bad: Vec<usize> = (0..16).filter(|&i| self.xi(i).clone() != ModuleOp::from_diff(DiffOp::partial(X, i))).collect();
        out.push(Check::new("iota(xi_i) = d_i", bad.is_empty(), format!("{bad:?}")));
        // eta_i again, by the lowering chain from eta_1.
        let mut chain: Vec<ModuleOp<S>> = vec![self.eta(0).clone()];
        for i in 1..16 {
            let (j, k) = (0..i)
                .find_map(|j| (0..5).find(|&k| xi[i] - xi[j] == RootVector::simple(k)).map(|k| (j, k)))
                .expect("each xi is reached by a simple root step");
            let neg = -RootVector::simple(k);
            let f = cocycle(&neg, &eta[j]);
            let lower = &self.ops[basis.index_of(&neg)];
            chain.push(lower.bracket(&chain[j]).scale(&S::from_int(f as i64)));
        }
        let bad: Vec<usize> = (0..16).filter(|&i| chain[i] != *self.eta(i)).map(|i| i + 1).collect();
        out.push(Check::new("eta operators by lowering chain", bad.is_empty(), format!("{bad:?}")));
        for i in 0..16 {
            let p = printed_eta(t, i);
            let got = self.eta(i);
            let name = format!("printed iota(eta{})", i + 1);
            if p == *got {
                out.push(Check::new(name, true, ""));
            } else {
                out.push(Check::corrected(name, &p, got));
            }
        }
        out
    }
}

impl Iota<crate::Q> {
    pub fn get() -> &'static Iota<crate::Q> {
        static I: OnceLock<Iota<crate::Q>> = OnceLock::new();
        I.get_or_init(|| Iota::build(RealizationTable::get()))
    }
}

/// iota(eta_i) assembled from the printed matrix part.
pub fn printed_eta<S: Exact>(t: &RealizationTable<S>, i: usize) -> ModuleOp<S> {
    let row = &tables::PRINTED_IOTA[i];
    let xi_ = Poly::var(X, i);
    let half = S::one() / S::from_int(2);
    let mut m = ModuleOp::from_diff(t.pis_printed[i].clone());
    for (j, s) in row.cartan.iter().enumerate() {
        add_into(&mut m.mat, O10::Gl(j as u8, j as u8).index(), &xi_, &(half.clone() * S::from_int(*s)));
    }
    m.kappa.add_scaled(&xi_, &-half);
    for &(s, r, sym) in row.terms {
        let (s2, b) = O10::from_symbol(sym.0, sym.1, sym.2, sym.3).expect("symbol lies in o(10)");
        add_into(&mut m.mat, b.index(), &Poly::var(X, r - 1), &S::from_int(s * s2));
    }
    m
}

/// Outcome of the exhaustive check iota([u, v]) = [iota(u), iota(v)] on a slice of A (x) M.
#[derive(Clone, Debug)]
pub struct FunctorSweep {
    pub pairs: usize,
    pub vectors: usize,
    /// (u, v, first witness)
    pub failures: Vec<(usize, usize, String)>,
}

impl FunctorSweep {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Basis of the slice of A (x) M with polynomial degree at most `maxdeg`.
pub fn slice_basis(dim: usize, maxdeg: u32) -> Vec<(Monomial, usize)> {
    (0..=maxdeg).flat_map(|d| monomials_of_degree(16, d)).flat_map(|m| (0..dim).map(move |j| (m, j))).collect()
}

/// Checks the bracket relation on every ordered pair of basis elements,
/// applied to every basis vector of the slice of degree at most `maxdeg`.
pub fn verify_functor<S: Exact>(
    iota: &Iota<S>,
    rep: &MatrixRep<S>,
    c: &S,
    maxdeg: u32,
    parallel: bool,
) -> FunctorSweep {
    let basis = E6Basis::get();
    let elems: Vec<LieElement<S>> = (0..78).map(|k| basis.element(k)).collect();
    let brackets: Vec<Vec<(usize, S)>> = (0..78 * 78)
        .map(|p| {
            let b = bracket(&elems[p / 78], &elems[p % 78]);
            b.coords().into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    let comp: Vec<Compiled<S>> = iota.ops.iter().map(|o| Compiled::new(o, c)).collect();
    let vectors = slice_basis(rep.dim, maxdeg);
    let check = |&(m, j): &(Monomial, usize)| -> Vec<(usize, usize, String)> {
        let start = HatVec::basis(m, j);
        let first: Vec<HatVec<S>> = comp.iter().map(|o| o.apply(rep, &start)).collect();
        let mut bad = Vec::new();
        for u in 0..78 {
            for v in u..78 {
                let mut acc = comp[u].apply(rep, &first[v]);
                acc.add_scaled(&comp[v].apply(rep, &first[u]), &-S::one());
                for (w, k) in &brackets[u * 78 + v] {
                    acc.add_scaled(&first[*w], &-k.clone());
                }
                if !acc.is_zero() {
                    let at = format!("on {m:?} (x) v{j}: {}", acc.render());
                    bad.push((u, v, at.clone()));
                    if u != v {
                        bad.push((v, u, at));
                    }
                }
            }
        }
        bad
    };
    let found: Vec<(usize, usize, String)> = if parallel {
        vectors.par_iter().flat_map_iter(check).collect()
    } else {
        vectors.iter().flat_map(check).collect()
    };
    let mut first: BTreeMap<(usize, usize), String> = BTreeMap::new();
    for (u, v, w) in found {
        first.entry((u, v)).or_insert(w);
    }
    FunctorSweep {
        pairs: 78 * 78,
        vectors: vectors.len(),
        failures: first.into_iter().map(|((u, v), w)| (u, v, w)).collect(),
    }
}

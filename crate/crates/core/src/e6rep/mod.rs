//! The 16-variable realization: D5 operators, the quadratics zeta_i, the
//! operators P_i, and the map theta from the algebra to vector fields.

mod identity;
mod singular;
pub mod tables;

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::chevalley::{bracket, E6Basis, GradedTriple, LieElement};
use crate::lattice::{cocycle, xi_eta_labels, RootVector, ALPHA_HAT};
use crate::o10::{Nu, O10};
use crate::polydiff::{parse_diffop, parse_poly, DiffOp, Monomial, Poly, VarSet};
use crate::report::Check;
use crate::scalar::Exact;

pub use identity::{zeta_identity_sides, verify_zeta_identity};
pub use singular::{check_dimension_identity, find_singular_vectors, singular_span_check, SingularSlice, SINGULAR_DEGREE_BOUND};

const X: VarSet = VarSet::X16;

/// Doubled epsilon-weight of x_i (0-based), from the Cartan table.
pub fn x_weight2(i: usize) -> [i32; 5] {
    std::array::from_fn(|r| 1 + 2 * tables::TABLE_A[r][i])
}

/// Doubled epsilon-weight of a monomial.
pub fn monomial_weight2(m: &Monomial) -> [i32; 5] {
    let mut w = [0; 5];
    for i in m.support() {
        let e = m.exp(i) as i32;
        let xw = x_weight2(i);
        for r in 0..5 {
            w[r] += e * xw[r];
        }
    }
    w
}

/// The linear vector field sum phi_{i,j}(u) x_j d_i of an element of g_0.
pub fn linear_op<S: Exact>(g: &GradedTriple<S>, u: &LieElement<S>) -> DiffOp<S> {
    let phi = g.phi(u);
    let mut d = DiffOp::zero(X);
    for (i, row) in phi.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            d.vec[i].add_term(Monomial::var(j), c.clone());
        }
    }
    d
}

fn symbol_op<S: Exact>(d5: &[DiffOp<S>], sym: (usize, usize, usize, usize)) -> DiffOp<S> {
    let (s, b) = O10::from_symbol(sym.0, sym.1, sym.2, sym.3).expect("symbol lies in o(10)");
    d5[b.index()].scale(&S::from_int(s))
}

pub struct RealizationTable<S> {
    /// The 45 printed D5 operators: positive ones as printed, negative ones by tau,
    /// Cartan ones from the weight table. Indexed by `O10::index`.
    pub d5_printed: Vec<DiffOp<S>>,
    /// The same operators computed from the bracket.
    pub d5: Vec<DiffOp<S>>,
    pub alpha6: DiffOp<S>,
    pub degree: DiffOp<S>,
    pub zetas: Vec<Poly<S>>,
    pub pis_printed: Vec<DiffOp<S>>,
    /// P_1 as printed, the rest generated by brackets with negative simple root operators.
    pub pis: Vec<DiffOp<S>>,
    /// theta of the 78 basis elements.
    pub theta_basis: Vec<DiffOp<S>>,
    /// Comparisons of printed entries with derived ones.
    pub checks: Vec<Check>,
}

pub fn printed_p<S: Exact>(i: usize, terms: &[(i64, usize, usize)], zetas: &[Poly<S>]) -> DiffOp<S> {
    let mut p = DiffOp::degree_op(X).mul_poly(&Poly::var(X, i));
    for &(s, j, k) in terms {
        p.vec[k - 1].add_scaled(&zetas[j - 1], &S::from_int(s));
    }
    p
}

impl<S: Exact> RealizationTable<S> {
    pub fn build() -> Self {
        let g = GradedTriple::<S>::new();
        let nu = Nu::get();
        let mut checks = Vec::new();

        let d5: Vec<DiffOp<S>> = O10::all().iter().map(|b| linear_op(&g, &nu.apply(*b))).collect();

        let mut d5_printed: Vec<Option<DiffOp<S>>> = vec![None; 45];
        for (sym, text) in tables::POSITIVE_OPS {
            let (s, b) = O10::from_symbol(sym.0, sym.1, sym.2, sym.3).expect("symbol lies in o(10)");
            let op = parse_diffop::<S>(X, text).expect("table entry parses").scale(&S::from_int(s));
            let (ns, nb) = negative_partner(b);
            let t = op.tau().expect("linear fields lie in the tau fragment");
            d5_printed[nb.index()] = Some(t.scale(&S::from_int(ns)));
            d5_printed[b.index()] = Some(op);
        }
        for r in 0..5 {
            let mut op = DiffOp::zero(X);
            for i in 0..16 {
                op.vec[i].add_term(Monomial::var(i), S::from_ratio(1 + 2 * tables::TABLE_A[r][i] as i64, 2));
            }
            d5_printed[O10::Gl(r as u8, r as u8).index()] = Some(op);
        }
        let d5_printed: Vec<DiffOp<S>> = d5_printed.into_iter().map(|o| o.expect("all 45 filled")).collect();
        for b in O10::all() {
            let (p, d) = (&d5_printed[b.index()], &d5[b.index()]);
            checks.push(compare(format!("operator {b}"), p, d));
        }
        for (sym, text) in tables::NEGATIVE_SIMPLE_OPS {
            let printed = parse_diffop::<S>(X, text).expect("table entry parses");
            let by_tau = symbol_op(&d5_printed, sym);
            checks.push(Check::new(format!("tau image {}", sym_name(sym)), printed == by_tau, format!("{printed}")));
            checks.push(compare(format!("negative operator {}", sym_name(sym)), &printed, &symbol_op(&d5, sym)));
        }
        for r in 0..5 {
            let mut printed = DiffOp::zero(X);
            for i in 0..16 {
                printed.vec[i].add_term(Monomial::var(i), S::from_int(tables::TABLE_B[r][i] as i64));
            }
            let d = linear_op(&g, &LieElement::h(RootVector::simple(r)));
            checks.push(compare(format!("coroot alpha{}", r + 1), &printed, &d));
        }

        let alpha6_printed = parse_diffop::<S>(X, tables::ALPHA6_OP).expect("parses");
        let alpha6 = linear_op(&g, &LieElement::h(RootVector::simple(5)));
        checks.push(compare("alpha6 operator".into(), &alpha6_printed, &alpha6));

        let degree = DiffOp::degree_op(X);
        let ah = linear_op(&g, &LieElement::h(ALPHA_HAT));
        checks.push(compare("alpha_hat operator".into(), &degree, &ah));

        let zetas: Vec<Poly<S>> = tables::ZETAS.iter().map(|t| parse_poly(X, t).expect("parses")).collect();

        let pis_printed: Vec<DiffOp<S>> =
            tables::P_TERMS.iter().enumerate().map(|(i, t)| printed_p(i, t, &zetas)).collect();
        let pis = derive_pis(&pis_printed[0]);
        for i in 0..16 {
            checks.push(compare(format!("P{}", i + 1), &pis_printed[i], &pis[i]));
        }

        let basis = E6Basis::get();
        let (xi, eta) = xi_eta_labels();
        let theta_basis = (0..78)
            .map(|k| {
                if k < 6 {
                    return linear_op(&g, &LieElement::h(RootVector::simple(k)));
                }
                let r = basis.roots[k - 6];
                if let Some(i) = xi.iter().position(|x| *x == r) {
                    DiffOp::partial(X, i)
                } else if let Some(i) = eta.iter().position(|x| *x == r) {
                    pis[i].clone()
                } else {
                    linear_op(&g, &LieElement::e(r))
                }
            })
            .collect();

        RealizationTable { d5_printed, d5, alpha6, degree, zetas, pis_printed, pis, theta_basis, checks }
    }

    pub fn theta(&self, u: &LieElement<S>) -> DiffOp<S> {
        let mut d = DiffOp::zero(X);
        for (k, c) in u.coords().iter().enumerate() {
            if !c.is_zero() {
                d.add_scaled(&self.theta_basis[k], c);
            }
        }
        d
    }

    pub fn op(&self, b: O10) -> &DiffOp<S> {
        &self.d5[b.index()]
    }

    /// Operator of E_{a,b} - E_{c,d} (1-based symbol), with its sign.
    pub fn symbol(&self, a: usize, b: usize, c: usize, d: usize) -> DiffOp<S> {
        symbol_op(&self.d5, (a, b, c, d))
    }

    /// Entries where the printed table disagreed with the derived operator.
    pub fn corrections(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == crate::report::Status::Corrected)
    }
}

impl RealizationTable<crate::Q> {
    /// Shared instance over the default scalar.
    pub fn get() -> &'static RealizationTable<crate::Q> {
        static T: OnceLock<RealizationTable<crate::Q>> = OnceLock::new();
        T.get_or_init(RealizationTable::build)
    }
}

fn sym_name(s: (usize, usize, usize, usize)) -> String {
    format!("E{},{}-E{},{}", s.0, s.1, s.2, s.3)
}

/// tau sends the operator of b to sign times the operator of the partner.
///
/// E_{5+j,i} - E_{5+i,j} is minus `Lower(i, j)`, hence the sign.
fn negative_partner(b: O10) -> (i64, O10) {
    match b {
        O10::Gl(i, j) => (1, O10::Gl(j, i)),
        O10::Upper(p, q) => (-1, O10::Lower(p, q)),
        O10::Lower(p, q) => (-1, O10::Upper(p, q)),
    }
}

fn compare<S: Exact>(name: String, printed: &DiffOp<S>, derived: &DiffOp<S>) -> Check {
    if printed == derived {
        Check::new(name, true, format!("{printed}"))
    } else {
        Check::corrected(name, printed, derived)
    }
}

/// P_i from P_1 by [E_{-a_k}, eta_j] = F(-a_k, -xi_j) eta_i whenever xi_i = xi_j + a_k.
pub fn derive_pis<S: Exact>(p1: &DiffOp<S>) -> Vec<DiffOp<S>> {
    let g = GradedTriple::<S>::new();
    let (xi, _) = xi_eta_labels();
    let mut pis: Vec<DiffOp<S>> = vec![p1.clone()];
    for i in 1..16 {
        let (j, k) = (0..i)
            .find_map(|j| (0..5).find(|&k| xi[i] - xi[j] == RootVector::simple(k)).map(|k| (j, k)))
            .expect("each xi is reached by a simple root step");
        let neg = -RootVector::simple(k);
        let f = cocycle(&neg, &-xi[j]);
        let lower = linear_op(&g, &LieElement::e(neg));
        pis.push(lower.commutator(&pis[j]).scale(&S::from_int(f as i64)));
    }
    pis
}

/// Outcome of the exhaustive check theta([u, v]) = [theta(u), theta(v)].
#[derive(Clone, Debug)]
pub struct HomomorphismSweep {
    pub pairs: usize,
    /// (i, j, rendered difference)
    pub failures: Vec<(usize, usize, String)>,
}

pub fn verify_theta_homomorphism<S: Exact>(t: &RealizationTable<S>, parallel: bool) -> HomomorphismSweep {
    let basis = E6Basis::get();
    let elems: Vec<LieElement<S>> = (0..78).map(|k| basis.element(k)).collect();
    let check = |(a, b): (usize, usize)| -> Option<(usize, usize, String)> {
        let lhs = t.theta_basis[a].commutator(&t.theta_basis[b]);
        let rhs = t.theta(&bracket(&elems[a], &elems[b]));
        (lhs != rhs).then(|| (a, b, format!("{}", lhs.sub(&rhs))))
    };
    let pairs: Vec<(usize, usize)> = (0..78).flat_map(|a| (0..78).map(move |b| (a, b))).collect();
    let mut failures: Vec<_> = if parallel {
        pairs.par_iter().copied().filter_map(check).collect()
    } else {
        pairs.iter().copied().filter_map(check).collect()
    };
    failures.sort_by_key(|f| (f.0, f.1));
    HomomorphismSweep { pairs: pairs.len(), failures }
}

/// zeta generation steps and closure of their span as the natural module.
pub fn verify_zeta_module<S: Exact>(t: &RealizationTable<S>) -> Vec<Check> {
    let mut out = Vec::new();
    for (target, source, sym) in tables::ZETA_CHAIN {
        let got = t.symbol(sym.0, sym.1, sym.2, sym.3).act(&t.zetas[source - 1]);
        out.push(Check::new(
            format!("zeta{target} = {}(zeta{source})", sym_name(sym)),
            got == t.zetas[target - 1],
            format!("{got}"),
        ));
    }
    let mut bad = Vec::new();
    for b in O10::all() {
        let m = b.matrix();
        for k in 0..10 {
            let got = t.op(*b).act(&t.zetas[k]);
            let mut want = Poly::zero(X);
            for (l, row) in m.iter().enumerate() {
                want.add_scaled(&t.zetas[l], &S::from_int(row[k]));
            }
            if got != want {
                bad.push(format!("{b} on zeta{}", k + 1));
            }
        }
    }
    out.push(Check::new("zeta span is the natural module", bad.is_empty(), bad.join(", ")));
    let mut singular = true;
    for b in O10::all().iter().filter(|b| b.root().is_some_and(|r| r.is_positive())) {
        singular &= t.op(*b).act(&t.zetas[0]).is_zero();
    }
    out.push(Check::new("zeta1 is singular", singular, ""));
    out
}

#[cfg(test)]
mod tests;

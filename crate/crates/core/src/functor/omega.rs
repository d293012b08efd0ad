//! The split Casimir on A (x) M and its spectrum on the degree-one slice.

use std::collections::{BTreeMap, BTreeSet};

use super::{Compiled, HatVec, Iota};
use crate::d5modules::{casimir_pairs, omega_eigenvalues, weyl_dim, MatrixRep, WeightD5};
use crate::e6rep::{x_weight2, RealizationTable};
use crate::error::Error;
use crate::linalg::rank;
use crate::polydiff::Monomial;
use crate::report::Check;
use crate::scalar::Exact;
use crate::Q;

/// sum over the Casimir pairs of (B_a acting on A) (x) (B_b acting on M).
pub fn omega_tilde<S: Exact>(t: &RealizationTable<S>, rep: &MatrixRep<S>, v: &HatVec<S>) -> HatVec<S> {
    let mut out = HatVec::zero();
    for (c, a, b) in casimir_pairs() {
        let d = &t.d5[a];
        for ((m, j), coef) in &v.terms {
            let image = rep.act_basis(b, *j);
            if image.is_empty() {
                continue;
            }
            let f = d.act(&crate::polydiff::Poly::term(crate::polydiff::VarSet::X16, *m, coef.clone()));
            for (mm, fc) in f.terms() {
                for (row, bv) in image {
                    out.add_term((*mm, *row), fc.clone() * bv.clone() * S::from_int(c));
                }
            }
        }
    }
    out
}

/// phi = omega_tilde - c/2 on the degree-one slice, where phi(x_i v) = iota(eta_i)(1 v).
pub fn omega_matches_eta<S: Exact>(t: &RealizationTable<S>, iota: &Iota<S>, rep: &MatrixRep<S>, c: &S) -> Check {
    let half_c = c.clone() / S::from_int(2);
    let mut bad = Vec::new();
    for i in 0..16 {
        let eta = Compiled::new(iota.eta(i), c);
        for j in 0..rep.dim {
            let lhs = eta.apply(rep, &HatVec::basis(Monomial::ONE, j));
            let xv = HatVec::basis(Monomial::var(i), j);
            let mut rhs = omega_tilde(t, rep, &xv);
            rhs.add_scaled(&xv, &-half_c.clone());
            if lhs != rhs {
                bad.push(format!("x{} v{j}", i + 1));
            }
        }
    }
    Check::new(
        format!("phi = omega - c/2 on degree one, {}, c = {c}", rep.family),
        bad.is_empty(),
        if bad.is_empty() { format!("{} vectors", 16 * rep.dim) } else { bad.join(", ") },
    )
}

/// omega_tilde commutes with iota(g_0) on the degree-one slice.
pub fn omega_commutes<S: Exact>(t: &RealizationTable<S>, iota: &Iota<S>, rep: &MatrixRep<S>, c: &S) -> Check {
    let basis = crate::chevalley::E6Basis::get();
    let g0: Vec<usize> = (0..78).filter(|&k| k < 6 || basis.roots[k - 6].0[5] == 0).collect();
    let mut bad = BTreeSet::new();
    for &k in &g0 {
        let op = Compiled::new(&iota.ops[k], c);
        for i in 0..16 {
            for j in 0..rep.dim {
                let v = HatVec::basis(Monomial::var(i), j);
                let a = omega_tilde(t, rep, &op.apply(rep, &v));
                let b = op.apply(rep, &omega_tilde(t, rep, &v));
                if a != b {
                    bad.insert(basis.label(k));
                }
            }
        }
    }
    Check::new(
        format!("omega commutes with g_0, {}", rep.family),
        bad.is_empty(),
        bad.into_iter().collect::<Vec<_>>().join(", "),
    )
}

/// Size of the Weyl group orbit of a weight: signed permutations with an even number of sign changes.
fn orbit_size(mu: &WeightD5) -> usize {
    let mut seen = BTreeSet::new();
    let mut perm = [0usize, 1, 2, 3, 4];
    permutations(&mut perm, 0, &mut |p| {
        for signs in 0..32u32 {
            if signs.count_ones() % 2 == 1 {
                continue;
            }
            let v: [Q; 5] = std::array::from_fn(|i| if signs & (1 << i) != 0 { -mu.eps[p[i]] } else { mu.eps[p[i]] });
            seen.insert(v);
        }
    });
    seen.len()
}

fn permutations(p: &mut [usize; 5], k: usize, f: &mut impl FnMut(&[usize; 5])) {
    if k == 5 {
        f(p);
        return;
    }
    for i in k..5 {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// One eigenvalue of omega_tilde on the degree-one slice.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumLine {
    pub eigenvalue: Q,
    /// Components with this eigenvalue.
    pub components: Vec<WeightD5>,
    /// Sum of their dimensions.
    pub expected: u64,
    /// Dimension of the eigenspace found.
    pub found: u64,
}

/// The eigenspaces of omega_tilde on the degree-one slice, computed on
/// dominant weight spaces and spread over Weyl orbits. Also returns the slice
/// dimension; the eigenspaces fill it exactly when omega is diagonalizable
/// with the predicted eigenvalues.
pub fn omega_spectrum<S: Exact>(t: &RealizationTable<S>, rep: &MatrixRep<S>) -> Result<(Vec<SpectrumLine>, u64), Error> {
    let lmd = rep.family.highest_weight();
    let xw: Vec<WeightD5> = (0..16).map(|i| WeightD5::from_doubled(x_weight2(i).map(i64::from))).collect();
    let mut spaces: BTreeMap<WeightD5, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..16 {
        for j in 0..rep.dim {
            let w = xw[i].add(&rep.weights[j]);
            if w.is_dominant() {
                spaces.entry(w).or_default().push((i, j));
            }
        }
    }
    let mut by_eig: BTreeMap<Q, Vec<WeightD5>> = BTreeMap::new();
    for (l, e) in omega_eigenvalues(&lmd) {
        by_eig.entry(e).or_default().push(l);
    }
    let mut found: BTreeMap<Q, u64> = BTreeMap::new();
    let mut total = 0u64;
    for (mu, vecs) in &spaces {
        let orbit = orbit_size(mu) as u64;
        let index: BTreeMap<(usize, usize), usize> = vecs.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let n = vecs.len();
        // Columns of omega on this weight space.
        let mut cols = vec![vec![S::zero(); n]; n];
        for (k, (i, j)) in vecs.iter().enumerate() {
            let img = omega_tilde(t, rep, &HatVec::basis(Monomial::var(*i), *j));
            for ((m, row), c) in &img.terms {
                let i2 = m.support().next().expect("degree one");
                let r = *index.get(&(i2, *row)).expect("omega preserves weights");
                cols[k][r] = c.clone();
            }
        }
        for e in by_eig.keys() {
            let es = S::from_ratio(*e.numer(), *e.denom());
            let m: Vec<Vec<S>> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|k| {
                            let d = if r == k { es.clone() } else { S::zero() };
                            cols[k][r].clone() - d
                        })
                        .collect()
                })
                .collect();
            let null = (n - rank(&m, n)) as u64;
            *found.entry(*e).or_default() += null * orbit;
        }
        total += n as u64 * orbit;
    }
    let mut lines = Vec::new();
    for (e, comps) in by_eig {
        let mut expected = 0;
        for l in &comps {
            expected += weyl_dim(l)?;
        }
        lines.push(SpectrumLine { eigenvalue: e, components: comps, expected, found: found[&e] });
    }
    Ok((lines, total))
}

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::{monomial_weight2, RealizationTable, X};
use crate::d5modules::{weyl_dim, WeightD5};
use crate::error::Error;
use crate::linalg::{kernel, rank};
use crate::o10::O10;
use crate::polydiff::{monomials_of_degree, Monomial, Poly};
use crate::report::Check;
use crate::scalar::Exact;

/// Default and hard bound for the singular-vector search.
pub const SINGULAR_DEGREE_BOUND: u32 = 6;

/// Kernel of the positive root operators on one (degree, weight) slice.
#[derive(Clone)]
pub struct SingularSlice<S> {
    pub degree: u32,
    /// Doubled epsilon-weight.
    pub weight2: [i32; 5],
    pub basis: Vec<Poly<S>>,
}

fn dominant2(w: &[i32; 5]) -> bool {
    w[0] >= w[1] && w[1] >= w[2] && w[2] >= w[3] && w[3] >= w[4].abs()
}

/// Singular vectors of every degree up to `degree`, slice by slice.
pub fn find_singular_vectors<S: Exact>(t: &RealizationTable<S>, degree: u32) -> Result<Vec<SingularSlice<S>>, Error> {
    if degree > SINGULAR_DEGREE_BOUND {
        return Err(Error::DegreeBound { got: degree as usize, max: SINGULAR_DEGREE_BOUND as usize });
    }
    let raising: Vec<O10> = O10::all().iter().copied().filter(|b| b.root().is_some_and(|r| r.is_positive())).collect();
    let mut out = Vec::new();
    for d in 0..=degree {
        let mut slices: BTreeMap<[i32; 5], Vec<Monomial>> = BTreeMap::new();
        for m in monomials_of_degree(16, d) {
            let w = monomial_weight2(&m);
            if dominant2(&w) {
                slices.entry(w).or_default().push(m);
            }
        }
        for (w, monos) in slices.into_iter().rev() {
            let mut rows: BTreeMap<(usize, Monomial), Vec<S>> = BTreeMap::new();
            for (c, m) in monos.iter().enumerate() {
                let f = Poly::term(X, *m, S::one());
                for (k, b) in raising.iter().enumerate() {
                    for (im, v) in t.op(*b).act(&f).terms() {
                        let row = rows.entry((k, *im)).or_insert_with(|| vec![S::zero(); monos.len()]);
                        row[c] = row[c].clone() + v.clone();
                    }
                }
            }
            let mat: Vec<Vec<S>> = rows.into_values().collect();
            let ker = kernel(&mat, monos.len())?;
            if ker.is_empty() {
                continue;
            }
            let basis = ker
                .into_iter()
                .map(|v| {
                    let mut p = Poly::zero(X);
                    for (m, c) in monos.iter().zip(v) {
                        p.add_term(*m, c);
                    }
                    p
                })
                .collect();
            out.push(SingularSlice { degree: d, weight2: w, basis });
        }
    }
    Ok(out)
}

/// Compares the singular vectors of degree d with span{x1^a zeta1^b : a + 2b = d}.
pub fn singular_span_check<S: Exact>(t: &RealizationTable<S>, slices: &[SingularSlice<S>], d: u32) -> Check {
    let found: Vec<&Poly<S>> = slices.iter().filter(|s| s.degree == d).flat_map(|s| s.basis.iter()).collect();
    let x1 = Poly::var(X, 0);
    let expect: Vec<Poly<S>> = (0..=d / 2).map(|b| &x1.pow(d - 2 * b) * &t.zetas[0].pow(b)).collect();
    let monos: Vec<Monomial> = {
        let mut all: Vec<Monomial> =
            found.iter().copied().chain(expect.iter()).flat_map(|p| p.terms().map(|(m, _)| *m)).collect();
        all.sort();
        all.dedup();
        all
    };
    let as_row = |p: &Poly<S>| -> Vec<S> { monos.iter().map(|m| p.coeff(m)).collect() };
    let r_found = rank(&found.iter().map(|p| as_row(p)).collect::<Vec<_>>(), monos.len());
    let r_expect = rank(&expect.iter().map(as_row).collect::<Vec<_>>(), monos.len());
    let joint: Vec<Vec<S>> = found.iter().map(|p| as_row(p)).chain(expect.iter().map(as_row)).collect();
    let r_joint = rank(&joint, monos.len());
    let ok = found.len() == expect.len() && r_found == found.len() && r_expect == expect.len() && r_joint == r_found;
    Check::new(
        format!("singular vectors in degree {d}"),
        ok,
        format!("kernel dimension {}, expected {}", found.len(), expect.len()),
    )
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

pub const DIMENSION_IDENTITY_BOUND: u32 = 12;

/// sum over a + 2b = k of dim V(b*lambda_1 + a*lambda_4) against C(k+15, 15).
pub fn check_dimension_identity(maxdeg: u32) -> Result<Vec<Check>, Error> {
    if maxdeg > DIMENSION_IDENTITY_BOUND {
        return Err(Error::DegreeBound { got: maxdeg as usize, max: DIMENSION_IDENTITY_BOUND as usize });
    }
    let mut out = Vec::new();
    for k in 0..=maxdeg {
        let mut total = BigUint::from(0u32);
        let mut parts = Vec::new();
        for b in 0..=k / 2 {
            let a = k - 2 * b;
            let w = WeightD5::lambda1().scale(b as i64).add(&WeightD5::lambda4().scale(a as i64));
            let dim = weyl_dim(&w)?;
            parts.push(dim.to_string());
            total += BigUint::from(dim);
        }
        let want = binomial(k as u64 + 15, 15);
        out.push(Check::new(format!("dimension identity k={k}"), total == want, format!("{} = {total}, C({},15) = {want}", parts.join(" + "), k + 15)));
    }
    Ok(out)
}

//! The operators T_i, the constants attached to singular vectors of
//! U (x) V(lambda), the excluded values of c, and the span rank probe.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::tables::{T1_TERMS, T_CHAIN};
use super::{slice_basis, Compiled, HatVec, Iota, ModuleOp};
use crate::d5modules::{MatrixRep, WeightD5};
use crate::e6rep::RealizationTable;
use crate::error::Error;
use crate::linalg::{kernel, rank};
use crate::o10::O10;
use crate::polydiff::{DiffOp, Monomial, Poly, VarSet};
use crate::report::Check;
use crate::scalar::Exact;
use crate::Q;

const X: VarSet = VarSet::X16;

fn partner(l: usize) -> usize {
    if l <= 5 {
        l + 5
    } else {
        l - 5
    }
}

/// zeta_k (D - c - 6) + sum_l zeta_l (E_{k,l} - E_{l',k'}), with ' swapping i and 5+i.
pub fn printed_t<S: Exact>(t: &RealizationTable<S>, k: usize) -> ModuleOp<S> {
    let z = &t.zetas[k - 1];
    let mut diff = DiffOp::degree_op(X).mul_poly(z);
    diff.scalar.add_scaled(z, &S::from_int(-6));
    let mut m = ModuleOp::from_diff(diff);
    m.kappa.add_scaled(z, &-S::one());
    for l in 1..=10 {
        if let Some((s, b)) = O10::from_symbol(k, l, partner(l), partner(k)) {
            super::add_into(&mut m.mat, b.index(), &t.zetas[l - 1], &S::from_int(s));
        }
    }
    m
}

pub struct TOperators<S> {
    /// T_1..T_10, T_1 from the eta sum and the rest by the bracket chain.
    pub t: Vec<ModuleOp<S>>,
    /// `prime[k][l][b]`: T'_k = sum_{l,b} prime[k][l][b] zeta_l B_b.
    pub prime: Vec<Vec<Vec<S>>>,
    pub checks: Vec<Check>,
}

/// The sum of iota(eta_a) o x_b defining T_1.
pub fn t1_sum<S: Exact>(iota: &Iota<S>) -> ModuleOp<S> {
    let mut out = ModuleOp::zero();
    for (s, a, b) in T1_TERMS {
        out.add_scaled(&iota.eta(a - 1).compose_poly(&Poly::var(X, b - 1)), &S::from_int(s));
    }
    out
}

pub fn t_operators<S: Exact>(t: &RealizationTable<S>, iota: &Iota<S>) -> Result<TOperators<S>, Error> {
    let mut checks = Vec::new();
    let mut ts: Vec<Option<ModuleOp<S>>> = vec![None; 10];
    ts[0] = Some(t1_sum(iota));
    for (target, source, sym) in T_CHAIN {
        let src = ts[source - 1].clone().expect("chain is ordered");
        let mut g = iota.symbol(t, sym).bracket(&src);
        // The bracket must carry zeta_source to +zeta_target.
        let (s, b) = O10::from_symbol(sym.0, sym.1, sym.2, sym.3).expect("symbol lies in o(10)");
        let sign = s * b.matrix()[target - 1][source - 1];
        let name = format!("T{target} from T{source} by bracket");
        if sign == 1 {
            checks.push(Check::new(name, true, ""));
        } else {
            g = g.scale(&S::from_int(-1));
            checks.push(Check::corrected(name, "+[.,.]", "-[.,.]"));
        }
        ts[target - 1] = Some(g);
    }
    let ts: Vec<ModuleOp<S>> = ts.into_iter().map(|x| x.expect("all ten are generated")).collect();
    for (k, tk) in ts.iter().enumerate() {
        let p = printed_t(t, k + 1);
        let name = format!("T{} as printed", k + 1);
        if p == *tk {
            checks.push(Check::new(name, true, ""));
        } else {
            checks.push(Check::corrected(name, &p, tk));
        }
    }
    // Split off zeta_k (D - c - 6) and read the remaining matrix part in the zetas.
    let pivots: Vec<(Monomial, S)> =
        t.zetas.iter().map(|z| z.terms().next().map(|(m, c)| (*m, c.clone())).expect("nonzero")).collect();
    let mut prime = Vec::new();
    let mut bad = Vec::new();
    for (k, tk) in ts.iter().enumerate() {
        let z = &t.zetas[k];
        let mut rest = tk.clone();
        let mut head = ModuleOp::from_diff(DiffOp::degree_op(X).mul_poly(z));
        head.diff.scalar.add_scaled(z, &S::from_int(-6));
        head.kappa.add_scaled(z, &-S::one());
        rest = rest.sub(&head);
        let mut coeffs = vec![vec![S::zero(); 45]; 10];
        for (b, f) in &rest.mat {
            let mut rebuilt = Poly::zero(X);
            for (l, (pm, pc)) in pivots.iter().enumerate() {
                let a = f.coeff(pm) / pc.clone();
                rebuilt.add_scaled(&t.zetas[l], &a);
                coeffs[l][*b] = a;
            }
            if rebuilt != *f {
                bad.push(format!("T{} {}", k + 1, O10::from_index(*b)));
            }
        }
        if !rest.diff.is_zero() || !rest.kappa.is_zero() {
            bad.push(format!("T{} has a residual operator part", k + 1));
        }
        prime.push(coeffs);
    }
    checks.push(Check::new("T'_k lies in the span of zeta_l B_b", bad.is_empty(), bad.join(", ")));
    // [iota(nu(B)), T_k] = sum_l B_{l,k} T_l.
    let mut bad = Vec::new();
    for b in O10::all() {
        let m = b.matrix();
        let op = ModuleOp::d5(t, *b);
        for k in 0..10 {
            let got = op.bracket(&ts[k]);
            let mut want = ModuleOp::zero();
            for (l, row) in m.iter().enumerate() {
                if row[k] != 0 {
                    want.add_scaled(&ts[l], &S::from_int(row[k]));
                }
            }
            if got != want {
                bad.push(format!("{b} on T{}", k + 1));
            }
        }
    }
    checks.push(Check::new("T_1..T_10 span the natural module", bad.is_empty(), bad.join(", ")));
    Ok(TOperators { t: ts, prime, checks })
}

/// The eta sum defining T_1 against its closed form, evaluated on every basis
/// vector of the slices of degree at most `maxdeg`.
pub fn verify_zeta_identity_module<S: Exact>(
    t: &RealizationTable<S>,
    iota: &Iota<S>,
    rep: &MatrixRep<S>,
    c: &S,
    maxdeg: u32,
) -> Check {
    let lhs = Compiled::new(&t1_sum(iota), c);
    let rhs = Compiled::new(&printed_t(t, 1), c);
    let vectors = slice_basis(rep.dim, maxdeg);
    let bad: Vec<String> = vectors
        .iter()
        .filter(|(m, j)| {
            let v = HatVec::basis(*m, *j);
            lhs.apply(rep, &v) != rhs.apply(rep, &v)
        })
        .take(5)
        .map(|(m, j)| format!("{} v{j}", m.render('x')))
        .collect();
    Check::new(
        format!("eta sum equals T1 on {}, degree <= {maxdeg}", rep.family),
        bad.is_empty(),
        if bad.is_empty() { format!("{} vectors", vectors.len()) } else { bad.join(", ") },
    )
}

/// Weight of zeta_l, 0-based.
fn zeta_weight(l: usize) -> WeightD5 {
    if l < 5 {
        WeightD5::eps_i(l)
    } else {
        WeightD5::eps_i(l - 5).neg()
    }
}

const RAISING: [O10; 5] = [O10::Gl(0, 1), O10::Gl(1, 2), O10::Gl(2, 3), O10::Gl(3, 4), O10::Upper(3, 4)];

/// The constant by which sum_l T'_l acts on the singular vector of weight lambda'.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatValue {
    pub lambda_prime: WeightD5,
    pub value: Q,
}

fn to_q<S: Exact>(s: &S) -> Result<Q, Error> {
    Q::from_big(&s.to_big()).ok_or(Error::Overflow)
}

/// Singular vector of U (x) M with the given weight, as coordinates on pairs (l, m).
pub fn singular_in_u<S: Exact>(rep: &MatrixRep<S>, weight: &WeightD5) -> Result<Vec<((usize, usize), S)>, Error> {
    let pairs: Vec<(usize, usize)> = (0..10)
        .flat_map(|l| (0..rep.dim).map(move |m| (l, m)))
        .filter(|(l, m)| zeta_weight(*l).add(&rep.weights[*m]) == *weight)
        .collect();
    if pairs.is_empty() {
        return Err(Error::SingularNotFound);
    }
    let mut rows: BTreeMap<(usize, usize, usize), Vec<S>> = BTreeMap::new();
    let n = pairs.len();
    for (col, (l, m)) in pairs.iter().enumerate() {
        for (r, b) in RAISING.iter().enumerate() {
            let mat = b.matrix();
            let mut put = |key: (usize, usize, usize), c: S| {
                let row = rows.entry(key).or_insert_with(|| vec![S::zero(); n]);
                row[col] = row[col].clone() + c;
            };
            for (l2, row) in mat.iter().enumerate() {
                if row[*l] != 0 {
                    put((r, l2, *m), S::from_int(row[*l]));
                }
            }
            for (m2, c) in rep.act_basis(b.index(), *m) {
                put((r, *l, *m2), c.clone());
            }
        }
    }
    let system: Vec<Vec<S>> = rows.into_values().collect();
    let ker = kernel(&system, n)?;
    if ker.len() != 1 {
        return Err(Error::SingularNotFound);
    }
    let v = &ker[0];
    let lead = v.iter().find(|c| !c.is_zero()).cloned().ok_or(Error::SingularNotFound)?;
    Ok(pairs.into_iter().zip(v.iter()).filter(|(_, c)| !c.is_zero()).map(|(p, c)| (p, c.clone() / lead.clone())).collect())
}

/// The constant for each component of U (x) V(lambda), largest weight first.
pub fn flat_values<S: Exact>(rep: &MatrixRep<S>, tops: &TOperators<S>) -> Result<Vec<FlatValue>, Error> {
    let lmd = rep.family.highest_weight();
    let mut out = Vec::new();
    for lp in crate::d5modules::upsilon_prime(&lmd) {
        let u = singular_in_u(rep, &lp)?;
        let mut w: BTreeMap<(usize, usize), S> = BTreeMap::new();
        for ((l, m), c) in &u {
            for (l2, coeffs) in tops.prime[*l].iter().enumerate() {
                for (b, a) in coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (m2, bv) in rep.act_basis(b, *m) {
                        let e = w.entry((l2, *m2)).or_insert_with(S::zero);
                        *e = e.clone() + c.clone() * a.clone() * bv.clone();
                    }
                }
            }
        }
        w.retain(|_, c| !c.is_zero());
        let (k0, c0) = &u[0];
        let value = w.get(k0).cloned().unwrap_or_else(S::zero) / c0.clone();
        let proportional = w.keys().all(|k| u.iter().any(|(p, _)| p == k))
            && u.iter().all(|(p, c)| w.get(p).cloned().unwrap_or_else(S::zero) == value.clone() * c.clone());
        if !proportional {
            return Err(Error::NotProportional);
        }
        out.push(FlatValue { lambda_prime: lp, value: to_q(&value)? });
    }
    Ok(out)
}

/// {offset + step n : n = 0, 1, 2, ...}
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Progression {
    pub offset: Q,
    pub step: i64,
}

impl Progression {
    pub fn contains(&self, c: &Q) -> bool {
        let d = (*c - self.offset) / Q::from_integer(self.step);
        d.is_integer() && d >= Q::zero()
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = if self.step == 1 { "N".to_string() } else { format!("{}N", self.step) };
        if self.offset.is_zero() {
            write!(f, "{n}")
        } else if self.offset > Q::zero() {
            write!(f, "{n}+{}", self.offset)
        } else {
            write!(f, "{n}{}", self.offset)
        }
    }
}

/// Values of c excluded by the two thresholds, and their union in simplest form.
#[derive(Clone, Debug, PartialEq)]
pub struct ExclusionSet {
    pub from_flat: Progression,
    pub from_omega: Progression,
    pub union: Vec<Progression>,
    pub points: Vec<Q>,
}

impl ExclusionSet {
    pub fn contains(&self, c: &Q) -> bool {
        self.from_flat.contains(c) || self.from_omega.contains(c)
    }

    /// Whether one progression already contains the other.
    pub fn nested(&self) -> bool {
        self.union.len() == 1 && self.points.is_empty()
    }
}

impl fmt::Display for ExclusionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.union.iter().map(|p| p.to_string()).collect();
        if !self.points.is_empty() {
            let pts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
            parts.push(format!("{{{}}}", pts.join(", ")));
        }
        write!(f, "{}", parts.join(" u "))
    }
}

pub fn irreducibility_exclusions(flat: Q, ell: Q) -> ExclusionSet {
    let a = Progression { offset: flat - Q::from_integer(6), step: 1 };
    let b = Progression { offset: ell * Q::from_integer(2), step: 2 };
    let gap = a.offset - b.offset;
    let (union, points) = if !gap.is_integer() {
        (vec![a, b], vec![])
    } else if gap <= Q::zero() {
        (vec![a], vec![])
    } else {
        let mut start = a.offset;
        let mut pts: Vec<Q> = Vec::new();
        let mut p = b.offset;
        while p < a.offset {
            pts.push(p);
            p += Q::from_integer(2);
        }
        if pts.last() == Some(&(start - Q::from_integer(1))) {
            pts.pop();
            start -= Q::from_integer(1);
        }
        (vec![Progression { offset: start, step: 1 }], pts)
    };
    ExclusionSet { from_flat: a, from_omega: b, union, points }
}

/// Both thresholds of one base module and the values of c they exclude.
#[derive(Clone, Debug, PartialEq)]
pub struct Thresholds {
    /// Smallest eigenvalue of omega_tilde on the degree-one slice.
    pub ell_omega: Q,
    pub flat: Vec<FlatValue>,
    pub flat_min: Q,
    pub exclusions: ExclusionSet,
}

/// Computes the thresholds of `rep` from the operators: the spectrum of
/// omega_tilde and the T' action on singular vectors.
pub fn thresholds<S: Exact>(t: &RealizationTable<S>, iota: &Iota<S>, rep: &MatrixRep<S>) -> Result<Thresholds, Error> {
    let (lines, _) = super::omega_spectrum(t, rep)?;
    let ell_omega = lines.iter().filter(|l| l.found > 0).map(|l| l.eigenvalue).min().ok_or(Error::SingularNotFound)?;
    let tops = t_operators(t, iota)?;
    let flat = flat_values(rep, &tops)?;
    let flat_min = flat.iter().map(|v| v.value).min().ok_or(Error::SingularNotFound)?;
    Ok(Thresholds { ell_omega, flat, flat_min, exclusions: irreducibility_exclusions(flat_min, ell_omega) })
}

/// Rank of the span of eta^alpha(M) inside the degree-k slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankLine {
    pub degree: u32,
    pub rank: usize,
    pub dim: usize,
    /// Exact rank; otherwise the rank modulo a large prime, a lower bound that is
    /// conclusive when it is full.
    pub exact: bool,
}

const PRIME: u64 = 0x1fff_ffff_ffff_ffff;

fn mod_p(q: &num_rational::BigRational) -> Option<u64> {
    let p = BigInt::from(PRIME);
    let n = ((q.numer() % &p) + &p) % &p;
    let d = ((q.denom() % &p) + &p) % &p;
    if d.is_zero() {
        return None;
    }
    let inv = d.modpow(&(&p - 2), &p);
    ((n * inv) % &p).to_u64()
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, ncols: usize) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        let inv = powmod(m[r][c], PRIME - 2);
        let pivot: Vec<u64> = m[r].iter().map(|x| mulmod(*x, inv)).collect();
        for row in m.iter_mut().skip(r + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..ncols {
                if pivot[j] != 0 {
                    row[j] = (row[j] + PRIME - mulmod(f, pivot[j])) % PRIME;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// For each degree k, the rank of {eta^alpha(v) : |alpha| = k, v in M}; the
/// eta operators commute, so these vectors span U(g_-) M in degree k.
/// Degrees up to `exact_upto` use exact rank.
pub fn rank_probe<S: Exact>(iota: &Iota<S>, rep: &MatrixRep<S>, c: &S, maxdeg: u32, exact_upto: u32) -> Result<Vec<RankLine>, Error> {
    let etas: Vec<Compiled<S>> = (0..16).map(|i| Compiled::new(iota.eta(i), c)).collect();
    let mut prev: BTreeMap<Monomial, Vec<HatVec<S>>> = BTreeMap::new();
    prev.insert(Monomial::ONE, (0..rep.dim).map(|j| HatVec::basis(Monomial::ONE, j)).collect());
    let mut out = vec![RankLine { degree: 0, rank: rep.dim, dim: rep.dim, exact: true }];
    for k in 1..=maxdeg {
        let mut next: BTreeMap<Monomial, Vec<HatVec<S>>> = BTreeMap::new();
        for m in crate::polydiff::monomials_of_degree(16, k) {
            let top = m.support().last().expect("positive degree");
            let (_, rest) = m.div_var(top).expect("top divides");
            let vs = prev[&rest].iter().map(|v| etas[top].apply(rep, v)).collect();
            next.insert(m, vs);
        }
        let cols: BTreeMap<(Monomial, usize), usize> = slice_basis(rep.dim, k)
            .into_iter()
            .filter(|(m, _)| m.deg() == k)
            .enumerate()
            .map(|(i, key)| (key, i))
            .collect();
        let n = cols.len();
        let vectors = next.values().flatten();
        let rank_k = if k <= exact_upto {
            let rows: Vec<Vec<S>> = vectors
                .map(|v| {
                    let mut row = vec![S::zero(); n];
                    for (key, x) in &v.terms {
                        row[cols[key]] = x.clone();
                    }
                    row
                })
                .collect();
            rank(&rows, n)
        } else {
            let rows: Vec<Vec<u64>> = vectors
                .map(|v| {
                    let mut row = vec![0u64; n];
                    for (key, x) in &v.terms {
                        row[cols[key]] = mod_p(&x.to_big()).unwrap_or(0);
                    }
                    row
                })
                .collect();
            rank_mod_p(rows, n)
        };
        out.push(RankLine { degree: k, rank: rank_k, dim: n, exact: k <= exact_upto });
        prev = next;
    }
    Ok(out)
}

#[cfg(test)]
mod unit {
    use super::*;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn progression_union() {
        let e = irreducibility_exclusions(q(-9, 1), q(-21, 2));
        assert_eq!(e.to_string(), "N-15 u {-21, -19, -17}");
        let e = irreducibility_exclusions(q(0, 1), q(0, 1));
        assert!(e.nested());
        assert_eq!(e.to_string(), "N-6");
        assert!(e.contains(&q(-6, 1)) && !e.contains(&q(-7, 1)) && !e.contains(&q(1, 3)));
    }

    #[test]
    fn modular_rank() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_mod_p(m, 3), 2);
        assert_eq!(mod_p(&num_rational::BigRational::new(1.into(), 2.into())), Some((PRIME + 1) / 2));
    }
}

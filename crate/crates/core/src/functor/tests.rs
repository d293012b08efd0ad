use num_traits::Zero;

use super::*;
use crate::d5modules::{casimir_eig, ell_omega, realize, Family, WeightD5};
use crate::report::Status;
use crate::Q;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn rep(f: Family) -> MatrixRep<Q> {
    realize(f).unwrap()
}

#[test]
fn iota_matches_printed_operators() {
    let iota = Iota::get();
    for c in &iota.checks {
        assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.detail);
    }
    let one_eta = iota.eta(0);
    let x2 = Poly::var(X, 1);
    let (s, b) = O10::from_symbol(4, 5, 10, 9).unwrap();
    assert_eq!(one_eta.mat_coeff(b.index()), x2.scale(&Q::from_integer(-s)));
}

#[test]
fn t_chain_and_natural_module() {
    let t = RealizationTable::get();
    let tops = t_operators(t, Iota::get()).unwrap();
    let corrected: Vec<&str> =
        tops.checks.iter().filter(|c| c.status == Status::Corrected).map(|c| c.name.as_str()).collect();
    assert_eq!(corrected, vec!["T9 from T5 by bracket"]);
    assert!(tops.checks.iter().all(|c| c.passed()));
}

/// Half the Casimir difference: the constant a split Casimir takes on V(l') in U (x) V(l).
fn casimir_oracle(l: &WeightD5, lp: &WeightD5) -> Q {
    (casimir_eig(lp) - casimir_eig(l) - casimir_eig(&WeightD5::lambda1())) / 2
}

#[test]
fn flat_values_per_component() {
    let t = RealizationTable::get();
    let tops = t_operators(t, Iota::get()).unwrap();
    let cases: Vec<(Family, Vec<Q>)> = vec![
        (Family::Trivial, vec![q(0, 1)]),
        (Family::Natural(1), vec![q(1, 1), q(-1, 1), q(-9, 1)]),
        (Family::Natural(2), vec![q(2, 1), q(-1, 1), q(-10, 1)]),
        (Family::Exterior(2), vec![q(1, 1), q(-2, 1), q(-8, 1)]),
        (Family::Exterior(3), vec![q(1, 1), q(-3, 1), q(-7, 1)]),
        (Family::Spin4(1), vec![q(1, 2), q(-9, 2)]),
        (Family::Spin4(2), vec![q(1, 1), q(-5, 1)]),
        (Family::Spin5(1), vec![q(1, 2), q(-9, 2)]),
    ];
    for (f, want) in cases {
        let r = rep(f);
        let got = flat_values(&r, &tops).unwrap();
        let vals: Vec<Q> = got.iter().map(|v| v.value).collect();
        assert_eq!(vals, want, "{f}");
        for v in &got {
            assert_eq!(v.value, casimir_oracle(&f.highest_weight(), &v.lambda_prime), "{f} at {}", v.lambda_prime);
        }
    }
}

#[test]
fn omega_matches_eta_on_small_bases() {
    let t = RealizationTable::get();
    for f in [Family::Trivial, Family::Natural(1), Family::Spin4(1)] {
        let r = rep(f);
        for c in [q(1, 3), q(0, 1), q(-7, 2)] {
            let chk = omega_matches_eta(t, Iota::get(), &r, &c);
            assert!(chk.passed(), "{}: {}", chk.name, chk.detail);
        }
    }
    let triv = rep(Family::Trivial);
    let v = HatVec::basis(crate::polydiff::Monomial::var(3), 0);
    assert!(omega_tilde(t, &triv, &v).is_zero());
}

#[test]
fn omega_is_equivariant() {
    let t = RealizationTable::get();
    let chk = omega_commutes(t, Iota::get(), &rep(Family::Natural(1)), &q(1, 3));
    assert!(chk.passed(), "{}", chk.detail);
}

#[test]
fn omega_spectrum_matches_components() {
    let t = RealizationTable::get();
    for f in [Family::Natural(1), Family::Exterior(2), Family::Exterior(3), Family::Spin4(1), Family::Spin5(1)] {
        let r = rep(f);
        let (lines, total) = omega_spectrum(t, &r).unwrap();
        assert_eq!(total, 16 * r.dim as u64);
        assert_eq!(lines.iter().map(|l| l.found).sum::<u64>(), total, "{f}");
        for l in &lines {
            assert_eq!(l.found, l.expected, "{f} at {}", l.eigenvalue);
        }
        assert_eq!(lines[0].eigenvalue, ell_omega(&f.highest_weight()));
    }
}

#[test]
fn functor_on_low_slices() {
    let iota = Iota::get();
    let s = verify_functor(iota, &rep(Family::Trivial), &q(1, 3), 2, true);
    assert!(s.ok(), "{:?}", &s.failures[..s.failures.len().min(3)]);
    assert_eq!((s.pairs, s.vectors), (6084, 153));
    let s = verify_functor(iota, &rep(Family::Natural(1)), &q(0, 1), 1, true);
    assert!(s.ok());
}

#[test]
fn corrupted_sign_is_reported() {
    let t = RealizationTable::get();
    let mut bad = Iota::build(t);
    let (_, eta) = crate::lattice::xi_eta_labels();
    let k = E6Basis::get().index_of(&eta[0]);
    let (_, b) = O10::from_symbol(4, 5, 10, 9).unwrap();
    let f = bad.ops[k].mat.get_mut(&b.index()).unwrap();
    *f = f.scale(&q(-1, 1));
    let s = verify_functor(&bad, &rep(Family::Natural(1)), &q(0, 1), 1, true);
    assert!(!s.ok());
    assert!(s.failures.iter().all(|(u, v, _)| *u == k || *v == k || bracket_hits(*u, *v, k)));
    assert!(s.failures.iter().any(|(u, _, _)| *u == k));
}

fn bracket_hits(u: usize, v: usize, k: usize) -> bool {
    let b = E6Basis::get();
    let c = bracket(&b.element::<Q>(u), &b.element(v)).coords();
    !c[k].is_zero()
}

#[test]
fn eta_sum_is_t1_on_modules() {
    let t = RealizationTable::get();
    for (f, d) in [(Family::Trivial, 3), (Family::Exterior(2), 1)] {
        let chk = verify_zeta_identity_module(t, Iota::get(), &rep(f), &q(1, 3), d);
        assert!(chk.passed(), "{}", chk.detail);
    }
}

#[test]
fn rank_probe_trivial() {
    let iota = Iota::get();
    let triv = rep(Family::Trivial);
    let generic = rank_probe(iota, &triv, &q(1, 3), 2, 1).unwrap();
    assert!(generic.iter().all(|l| l.rank == l.dim), "{generic:?}");
    assert_eq!(generic.iter().map(|l| l.dim).collect::<Vec<_>>(), vec![1, 16, 136]);
    let excluded = rank_probe(iota, &triv, &q(0, 1), 1, 1).unwrap();
    assert_eq!(excluded[1].rank, 0);
}

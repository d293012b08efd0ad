//! One line per acceptance criterion. Values printed in the source text are
//! compared as given; where they disagree with the computation the line says
//! FAIL, and the run only errors if the set of failing lines changes.

use std::time::Instant;

use num_traits::Zero;

use e6spin::chevalley::verify_jacobi;
use e6spin::d5modules::{omega_eigenvalues, realize, Family, MatrixRep, WeightD5};
use e6spin::e6rep::{
    check_dimension_identity, find_singular_vectors, singular_span_check, verify_zeta_identity, verify_theta_homomorphism,
    verify_zeta_module, RealizationTable,
};
use e6spin::flows::{generator_check, FlowTable};
use e6spin::functor::{
    flat_values, omega_matches_eta, omega_spectrum, rank_probe, t_operators, thresholds, verify_functor, Iota, TOperators,
};
use e6spin::lattice::verify_lattice;
use e6spin::report::{Check, Status};
use e6spin::Q;

/// Criteria that disagree with the printed values; see the notes in README.
const KNOWN_CONFLICTS: [usize; 3] = [7, 8, 9];

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn show(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn rep(f: Family) -> MatrixRep<Q> {
    realize(f).expect("module within guard")
}

struct Line {
    n: usize,
    pass: bool,
    notes: Vec<String>,
}

impl Line {
    fn new(n: usize) -> Self {
        Line { n, pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn all(&mut self, checks: &[Check]) {
        for c in checks {
            self.check(c.passed(), format!("{}: {}", c.name, c.detail));
            if c.status == Status::Corrected {
                self.info(format!("corrected {}: {}", c.name, c.detail));
            }
        }
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

/// (mu + 2 rho, mu) with rho = (4, 3, 2, 1, 0).
fn casimir(mu: &[Q; 5]) -> Q {
    (0..5).map(|i| (mu[i] + Q::from_integer(2 * (4 - i as i64))) * mu[i]).sum()
}

fn structure() -> Line {
    let mut l = Line::new(1);
    let t = RealizationTable::get();
    let start = Instant::now();
    let sweep = verify_theta_homomorphism(t, false);
    let secs = start.elapsed().as_secs_f64();
    l.check(sweep.pairs == 6084 && sweep.failures.is_empty(), format!("{} failures of {}", sweep.failures.len(), sweep.pairs));
    l.check(secs < 30.0, format!("sweep took {secs:.1}s"));
    l.all(&t.checks);
    l
}

fn cocycle() -> Line {
    let mut l = Line::new(2);
    l.all(&verify_lattice(2000, 7));
    l.all(&verify_jacobi(200, 7));
    l
}

fn singular() -> Line {
    let mut l = Line::new(3);
    let t = RealizationTable::get();
    let slices = find_singular_vectors(t, 6).expect("degree 6 within bound");
    let dims: Vec<usize> = (0..=6u32).map(|d| slices.iter().filter(|s| s.degree == d).map(|s| s.basis.len()).sum()).collect();
    l.check(dims == [1, 1, 2, 2, 3, 3, 4], format!("kernel dimensions {dims:?}"));
    let checks: Vec<Check> = (0..=6).map(|d| singular_span_check(t, &slices, d)).collect();
    l.all(&checks);
    l.all(&verify_zeta_module(t));
    l
}

fn dimension_identity() -> Line {
    let mut l = Line::new(4);
    l.all(&check_dimension_identity(8).expect("within bound"));
    l
}

fn zeta_identity() -> Line {
    let mut l = Line::new(5);
    l.all(&verify_zeta_identity(RealizationTable::get(), 4));
    l
}

fn omega_eta_line() -> Line {
    let mut l = Line::new(6);
    let t = RealizationTable::get();
    for f in [Family::Trivial, Family::Natural(1), Family::Natural(2), Family::Exterior(2), Family::Spin4(1)] {
        let c = omega_matches_eta(t, Iota::get(), &rep(f), &q(1, 3));
        l.check(c.passed(), format!("{f}: {}", c.detail));
    }
    l
}

fn spectrum() -> Line {
    let mut l = Line::new(7);
    let t = RealizationTable::get();
    let mut cases: Vec<(Family, Q)> = Vec::new();
    for k in 1..=3 {
        cases.push((Family::Natural(k), q(-8 - k as i64, 2)));
    }
    cases.push((Family::Exterior(2), q(-8, 1)));
    cases.push((Family::Exterior(3), q(-21, 2)));
    for k in 1..=3 {
        cases.push((Family::Spin4(k), q(k as i64 - 12, 2)));
    }
    for (f, printed) in cases {
        let r = rep(f);
        let (lines, total) = omega_spectrum(t, &r).expect("spectrum");
        let filled: u64 = lines.iter().map(|x| x.found).sum();
        l.check(filled == total, format!("{f}: eigenspaces fill {filled} of {total}"));
        for x in &lines {
            l.check(x.found == x.expected, format!("{f} at {}: {} vs dim {}", x.eigenvalue, x.found, x.expected));
        }
        // Eigenvalue set against the Casimir formula computed here.
        let lmd = f.highest_weight();
        let l4 = WeightD5::lambda4();
        let mut want: Vec<Q> = omega_eigenvalues(&lmd)
            .iter()
            .map(|(lp, _)| (casimir(&lp.eps) - casimir(&lmd.eps) - casimir(&l4.eps)) / 2)
            .collect();
        want.sort();
        want.dedup();
        let got: Vec<Q> = lines.iter().filter(|x| x.found > 0).map(|x| x.eigenvalue).collect();
        l.check(got == want, format!("{f}: eigenvalues {}", show(&got)));
        let ell = got[0];
        l.check(ell == printed, format!("{f}: least eigenvalue {ell}, printed {printed}"));
    }
    l
}

fn flat_line(tops: &TOperators<Q>) -> Line {
    let mut l = Line::new(8);
    let mut cases: Vec<(Family, Vec<Q>)> = Vec::new();
    for k in 1..=4i64 {
        cases.push((Family::Natural(k as u32), vec![q(k, 1), q(-1, 1), q(-8 - k, 1)]));
    }
    cases.push((Family::Exterior(2), vec![q(1, 1), q(-2, 1), q(-9, 1)]));
    cases.push((Family::Exterior(3), vec![q(1, 1), q(-3, 1), q(-8, 1)]));
    for k in 1..=4i64 {
        cases.push((Family::Spin4(k as u32), vec![q(k, 2), q(-(k + 8), 2)]));
    }
    for (f, printed) in cases {
        let lmd = f.highest_weight();
        let vals = match flat_values(&rep(f), tops) {
            Ok(v) => v,
            Err(e) => {
                l.check(false, format!("{f}: {e}"));
                continue;
            }
        };
        let e1 = WeightD5::eps_i(0);
        for v in &vals {
            let oracle = (casimir(&v.lambda_prime.eps) - casimir(&lmd.eps) - casimir(&e1.eps)) / 2;
            l.check(v.value == oracle, format!("{f} at {}: {} vs Casimir {oracle}", v.lambda_prime, v.value));
        }
        let got: Vec<Q> = vals.iter().map(|v| v.value).collect();
        l.check(got == printed, format!("{f}: computed {}, printed {}", show(&got), show(&printed)));
    }
    l
}

/// Membership of c = n/2 for n in [-80, 20] in the printed and computed sets.
fn same_on_window(computed: impl Fn(&Q) -> bool, printed: impl Fn(&Q) -> bool) -> Vec<Q> {
    (-80..=20).map(|n| q(n, 2)).filter(|c| computed(c) != printed(c)).collect()
}

fn in_progression(c: &Q, offset: Q, step: i64) -> bool {
    let d = (*c - offset) / Q::from_integer(step);
    d.is_integer() && d >= Q::zero()
}

fn corollaries() -> Line {
    let mut l = Line::new(9);
    let t = RealizationTable::get();
    let iota = Iota::get();
    type Printed = Box<dyn Fn(&Q) -> bool>;
    let mut cases: Vec<(Family, Printed)> = vec![(Family::Trivial, Box::new(|c| in_progression(c, q(-6, 1), 1)))];
    for k in 1..=3i64 {
        cases.push((Family::Natural(k as u32), Box::new(move |c| in_progression(c, q(-14 - k, 1), 1))));
    }
    cases.push((Family::Exterior(2), Box::new(|c| in_progression(c, q(-16, 1), 1))));
    cases.push((
        Family::Exterior(3),
        Box::new(|c| in_progression(c, q(-15, 1), 1) || [-17, -19, -21].iter().any(|p| *c == Q::from_integer(*p))),
    ));
    for k in 1..=3i64 {
        cases.push((
            Family::Spin4(k as u32),
            Box::new(move |c| in_progression(c, q(-20 - k, 2), 1) || in_progression(c, q(k - 12, 1), 2)),
        ));
    }
    for (f, printed) in cases {
        let th = thresholds(t, iota, &rep(f)).expect("thresholds");
        let ex = th.exclusions;
        if f == Family::Trivial {
            l.info(format!("trivial: {} and {} give {}, nested: {}", ex.from_flat, ex.from_omega, ex, ex.nested()));
        }
        let diff = same_on_window(|c| ex.contains(c), printed);
        l.check(diff.is_empty(), format!("{f}: computed {ex}; differs from the printed set at {}", show(&diff)));
    }
    l
}

fn functor_line() -> Line {
    let mut l = Line::new(10);
    let iota = Iota::get();
    l.all(&iota.checks);
    let start = Instant::now();
    for f in [Family::Trivial, Family::Natural(1)] {
        let s = verify_functor(iota, &rep(f), &q(1, 3), 3, true);
        l.check(s.ok() && s.pairs == 6084, format!("{f}: {} failures", s.failures.len()));
    }
    let secs = start.elapsed().as_secs_f64();
    l.check(secs < 300.0, format!("sweeps took {secs:.0}s"));
    l
}

fn flows_line() -> Line {
    let mut l = Line::new(11);
    let t = RealizationTable::get();
    let table = FlowTable::derived(t).expect("derived flows");
    for c in FlowTable::printed().compare(&table).iter().filter(|c| c.status == Status::Corrected) {
        l.info(format!("corrected {}: {}", c.name, c.detail));
    }
    for i in 0..16 {
        let r = generator_check(t, &table, i, 100, 2024).expect("no pole in the sample box");
        l.check(r.generator_error < 1e-6, format!("flow {}: generator error {:e}", i + 1, r.generator_error));
        l.check(r.composition_error < 1e-9, format!("flow {}: composition error {:e}", i + 1, r.composition_error));
        l.check(r.sign_consistent, format!("flow {}: sign not consistent", i + 1));
    }
    l
}

fn rank_line() -> Line {
    let mut l = Line::new(12);
    let iota = Iota::get();
    let r = rep(Family::Trivial);
    let generic = rank_probe(iota, &r, &q(1, 3), 3, 2).expect("probe");
    for x in &generic {
        l.check(x.rank == x.dim, format!("c = 1/3, degree {}: rank {} of {}", x.degree, x.rank, x.dim));
    }
    let excluded = rank_probe(iota, &r, &q(0, 1), 1, 1).expect("probe");
    l.check(excluded[1].rank < excluded[1].dim, format!("c = 0, degree 1: rank {} of {}", excluded[1].rank, excluded[1].dim));
    l
}

fn main() {
    let t = RealizationTable::get();
    let tops = t_operators(t, Iota::get()).expect("T operators");
    let lines = vec![
        structure(),
        cocycle(),
        singular(),
        dimension_identity(),
        zeta_identity(),
        omega_eta_line(),
        spectrum(),
        flat_line(&tops),
        corollaries(),
        functor_line(),
        flows_line(),
        rank_line(),
    ];
    let mut failing = Vec::new();
    for l in &lines {
        println!("criterion {:>2}: {}", l.n, if l.pass { "PASS" } else { "FAIL" });
        for n in &l.notes {
            println!("    {n}");
        }
        if !l.pass {
            failing.push(l.n);
        }
    }
    if failing != KNOWN_CONFLICTS {
        eprintln!("failing criteria {failing:?}, expected {KNOWN_CONFLICTS:?}");
        std::process::exit(1);
    }
}

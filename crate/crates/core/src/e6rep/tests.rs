use super::*;
use crate::report::Status;
use crate::Q;

#[test]
fn printed_table_against_derived() {
    let t = RealizationTable::get();
    for c in &t.checks {
        assert_ne!(c.status, Status::Fail, "{}: {}", c.name, c.detail);
    }
    for c in t.corrections() {
        println!("{}: {}", c.name, c.detail);
    }
}

#[test]
fn zeta_module() {
    let t = RealizationTable::get();
    for c in verify_zeta_module(t) {
        assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn theta_is_a_homomorphism() {
    let t = RealizationTable::get();
    let sweep = verify_theta_homomorphism(t, true);
    assert_eq!(sweep.pairs, 6084);
    assert!(sweep.failures.is_empty(), "{:?}", &sweep.failures[..sweep.failures.len().min(5)]);
}

#[test]
fn zeta_identity_checks() {
    let t = RealizationTable::get();
    for c in verify_zeta_identity(t, 3) {
        println!("{:?} {}: {}", c.status, c.name, c.detail);
        assert_ne!(c.status, Status::Fail, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn singular_vectors_low_degree() {
    let t = RealizationTable::get();
    let s = find_singular_vectors(t, 4).unwrap();
    for d in 0..=4 {
        let c = singular_span_check(t, &s, d);
        assert_eq!(c.status, Status::Pass, "{}", c.detail);
    }
    assert!(find_singular_vectors::<Q>(t, 7).is_err());
}

#[test]
fn dimension_identity() {
    for c in check_dimension_identity(8).unwrap() {
        assert_eq!(c.status, Status::Pass, "{}", c.detail);
    }
    assert!(check_dimension_identity(13).is_err());
}

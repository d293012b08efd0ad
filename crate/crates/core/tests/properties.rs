use proptest::prelude::*;

use e6spin::chevalley::{bracket, invariant_form, LieElement};
use e6spin::e6rep::RealizationTable;
use e6spin::flows::FlowTable;
use e6spin::functor::{irreducibility_exclusions, Progression};
use e6spin::lattice::{cocycle, pair, RootVector};
use e6spin::linalg::{kernel, rank};
use e6spin::polydiff::{DiffOp, Monomial, Poly, VarSet};
use e6spin::Q;

fn lattice_vec() -> impl Strategy<Value = RootVector> {
    prop::array::uniform6(-4i32..=4).prop_map(RootVector)
}

/// Sparse element with small integer coordinates on the 78 basis vectors.
fn lie_element() -> impl Strategy<Value = LieElement<Q>> {
    prop::collection::vec((0usize..78, -3i64..=3), 1..4).prop_map(|terms| {
        let mut v = vec![Q::from_integer(0); 78];
        for (i, c) in terms {
            v[i] += Q::from_integer(c);
        }
        LieElement::from_coords(&v)
    })
}

fn poly16() -> impl Strategy<Value = Poly<Q>> {
    prop::collection::vec((prop::collection::vec(0usize..16, 0..3), -4i64..=4), 0..5).prop_map(|terms| {
        let mut p = Poly::zero(VarSet::X16);
        for (vars, c) in terms {
            let m = vars.iter().fold(Monomial::ONE, |m, &i| m.mul_var(i));
            p.add_term(m, Q::from_integer(c));
        }
        p
    })
}

fn field16() -> impl Strategy<Value = DiffOp<Q>> {
    prop::collection::vec((0usize..16, poly16()), 1..3).prop_map(|parts| {
        let mut d = DiffOp::zero(VarSet::X16);
        for (i, p) in parts {
            d.vec[i] = &d.vec[i] + &p;
        }
        d
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cocycle_is_bimultiplicative(a in lattice_vec(), b in lattice_vec(), c in lattice_vec()) {
        prop_assert_eq!(cocycle(&(a + b), &c), cocycle(&a, &c) * cocycle(&b, &c));
        prop_assert_eq!(cocycle(&a, &(b + c)), cocycle(&a, &b) * cocycle(&a, &c));
        let sign = if pair(&a, &b) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(cocycle(&a, &b) * cocycle(&b, &a), sign);
    }

    #[test]
    fn bracket_is_antisymmetric_and_invariant(u in lie_element(), v in lie_element(), w in lie_element()) {
        prop_assert!(bracket(&u, &v).add(&bracket(&v, &u)).is_zero());
        prop_assert_eq!(invariant_form(&bracket(&u, &v), &w), invariant_form(&u, &bracket(&v, &w)));
    }

    #[test]
    fn realization_preserves_brackets(u in lie_element(), v in lie_element()) {
        let t = RealizationTable::get();
        prop_assert_eq!(t.theta(&u).commutator(&t.theta(&v)), t.theta(&bracket(&u, &v)));
    }

    #[test]
    fn vector_fields_are_derivations(d in field16(), f in poly16(), g in poly16()) {
        let lhs = d.act(&(&f * &g));
        let rhs = &(&d.act(&f) * &g) + &(&f * &d.act(&g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_jacobi(a in field16(), b in field16(), c in field16()) {
        let j = a.commutator(&b.commutator(&c))
            .add(&b.commutator(&c.commutator(&a)))
            .add(&c.commutator(&a.commutator(&b)));
        prop_assert!(j.is_zero());
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 1..5)) {
        let m: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
        let k = kernel(&m, 5).unwrap();
        prop_assert_eq!(k.len() + rank(&m, 5), 5);
        for v in &k {
            for r in &m {
                let s: Q = r.iter().zip(v).map(|(a, b)| a * b).sum();
                prop_assert_eq!(s, Q::from_integer(0));
            }
        }
    }

    #[test]
    fn exclusion_union_matches_membership(f2 in -40i64..=4, l4 in -60i64..=0) {
        let flat = Q::new(f2, 2);
        let ell = Q::new(l4, 4);
        let ex = irreducibility_exclusions(flat, ell);
        for n in -200..=40 {
            let c = Q::new(n, 4);
            let in_union = ex.union.iter().any(|p: &Progression| p.contains(&c)) || ex.points.contains(&c);
            prop_assert_eq!(in_union, ex.contains(&c), "c = {}", c);
        }
    }

    #[test]
    fn flows_form_a_group(i in 0usize..16, b1 in -0.1f64..0.1, b2 in -0.1f64..0.1, p in prop::array::uniform16(-0.5f64..0.5)) {
        let table = FlowTable::derived(RealizationTable::get()).unwrap();
        prop_assert_eq!(table.flow(i, 0.0, &p).unwrap(), p);
        let two = table.flow(i, b1, &table.flow(i, b2, &p).unwrap()).unwrap();
        let one = table.flow(i, b1 + b2, &p).unwrap();
        for j in 0..16 {
            prop_assert!((two[j] - one[j]).abs() < 1e-12);
        }
        let back = table.flow(i, -b1, &table.flow(i, b1, &p).unwrap()).unwrap();
        for j in 0..16 {
            prop_assert!((back[j] - p[j]).abs() < 1e-12);
        }
    }
}

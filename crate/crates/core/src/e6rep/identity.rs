use super::tables::{ZetaIdentity, D10_ALTERNATE, P5_ALTERNATE, ZETA_IDENTITIES};
use super::{printed_p, RealizationTable, X};
use crate::polydiff::{monomials_of_degree, parse_poly, DiffOp, Poly};
use crate::report::Check;
use crate::scalar::Exact;

/// (sign, P index, x index), 1-based.
const IDENTITY_TERMS: [(i64, usize, usize); 8] =
    [(1, 11, 1), (1, 1, 11), (1, 9, 2), (1, 2, 9), (-1, 6, 3), (-1, 3, 6), (1, 5, 4), (1, 4, 5)];

fn x<S: Exact>(i: usize) -> Poly<S> {
    Poly::var(X, i - 1)
}

/// Both sides of sum P_a o x_b = zeta_1 (D - 6), composed symbolically.
pub fn zeta_identity_sides<S: Exact>(t: &RealizationTable<S>) -> (DiffOp<S>, DiffOp<S>) {
    let mut lhs = DiffOp::zero(X);
    for (s, a, b) in IDENTITY_TERMS {
        lhs.add_scaled(&t.pis[a - 1].compose_poly(&x(b)), &S::from_int(s));
    }
    (lhs, zeta1_d_minus(t, 6))
}

fn zeta1_d_minus<S: Exact>(t: &RealizationTable<S>, k: i64) -> DiffOp<S> {
    let mut rhs = t.degree.mul_poly(&t.zetas[0]);
    rhs.scalar.add_scaled(&t.zetas[0], &S::from_int(-k));
    rhs
}

fn zeta_combo<S: Exact>(t: &RealizationTable<S>, lhs: &[(i64, usize, usize)]) -> Poly<S> {
    let mut p = Poly::zero(X);
    for &(s, i, j) in lhs {
        p.add_scaled(&(&x(i) * &t.zetas[j - 1]), &S::from_int(s));
    }
    p
}

fn identity_checks<S: Exact>(t: &RealizationTable<S>, id: &ZetaIdentity) -> Vec<Check> {
    let rhs = (&t.zetas[0] * &x(id.rhs.1)).scale(&S::from_int(id.rhs.0));
    let mut out = Vec::new();
    let combo = zeta_combo(t, &id.lhs);
    let mut expanded = Poly::zero(X);
    for (s, i, text) in id.expansion {
        let q = parse_poly::<S>(X, text).expect("identity entry parses");
        expanded.add_scaled(&(&x(i) * &q), &S::from_int(s));
    }
    if id.name == "d10 coefficient" {
        let alt = zeta_combo(t, &D10_ALTERNATE);
        let name = format!("zeta identity {}", id.name);
        if combo == rhs {
            out.push(Check::new(name, true, "left side as printed in the header"));
        } else if alt == rhs {
            out.push(Check::corrected(name, "+x5*zeta4", "-x5*zeta4"));
        } else {
            out.push(Check::new(name, false, format!("{combo} vs {rhs}")));
        }
    } else {
        out.push(Check::new(format!("zeta identity {}", id.name), combo == rhs, format!("{rhs}")));
    }
    let name = format!("zeta identity {} expansion", id.name);
    if expanded == rhs {
        out.push(Check::new(name, true, ""));
    } else {
        out.push(Check::corrected(name, &expanded, &rhs));
    }
    out
}

/// Operator identity sum P_a o x_b = zeta_1 (D - 6) and the steps of its proof.
pub fn verify_zeta_identity<S: Exact>(t: &RealizationTable<S>, eval_degree: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let (lhs, rhs) = zeta_identity_sides(t);
    out.push(Check::new("zeta identity (symbolic)", lhs == rhs, format!("{}", lhs.sub(&rhs))));

    let mut bad = 0usize;
    let mut count = 0usize;
    for d in 0..=eval_degree {
        for m in monomials_of_degree(16, d) {
            let f = Poly::term(X, m, S::one());
            let mut l = Poly::zero(X);
            for (s, a, b) in IDENTITY_TERMS {
                l.add_scaled(&t.pis[a - 1].act(&(&x(b) * &f)), &S::from_int(s));
            }
            let r = rhs.act(&f);
            count += 1;
            if l != r {
                bad += 1;
            }
        }
    }
    out.push(Check::new(
        format!("zeta identity on monomials of degree <= {eval_degree}"),
        bad == 0,
        format!("{count} monomials, {bad} mismatches"),
    ));

    let mut swapped = DiffOp::zero(X);
    for (s, a, b) in IDENTITY_TERMS {
        swapped.add_scaled(&t.pis[a - 1].mul_poly(&x(b)), &S::from_int(s));
    }
    let mut shifted = swapped.clone();
    shifted.scalar.add_scaled(&t.zetas[0], &S::from_int(-6));
    out.push(Check::new("commuted form x_b P_a minus 6 zeta1", shifted == lhs, ""));
    let zd = t.degree.mul_poly(&t.zetas[0]);
    out.push(Check::new("sum x_b P_a = zeta1 D", swapped == zd, format!("{}", swapped.sub(&zd))));

    let mut with_alt = DiffOp::zero(X);
    let p5_alt = printed_p(4, &P5_ALTERNATE, &t.zetas);
    for (s, a, b) in IDENTITY_TERMS {
        let p = if a == 5 { &p5_alt } else { &t.pis[a - 1] };
        with_alt.add_scaled(&p.mul_poly(&x(b)), &S::from_int(s));
    }
    let name = "P5 sign of zeta9 d14 in the expansion";
    if with_alt == zd {
        out.push(Check::new(name, true, "expansion form holds"));
    } else if t.pis[4] == t.pis_printed[4] {
        out.push(Check::corrected(name, "-zeta9*d14", "+zeta9*d14"));
    } else {
        out.push(Check::new(name, false, "neither printed form of P5 matches"));
    }

    for id in &ZETA_IDENTITIES {
        out.extend(identity_checks(t, id));
    }
    out
}

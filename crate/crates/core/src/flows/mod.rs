//! Fractional one-parameter groups in 16 variables and their agreement with
//! the vector fields P_i, checked numerically.

pub mod tables;

use num_traits::{Float, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::e6rep::RealizationTable;
use crate::error::Error;
use crate::polydiff::{Monomial, Poly, VarSet};
use crate::report::Check;
use crate::Q;

pub const POLE_TOLERANCE: f64 = 1e-9;
pub const FD_STEP: f64 = 1e-5;

/// x_j + sign * b * quad / (1 - b x_denom); indices 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Special {
    pub coord: usize,
    pub sign: i8,
    pub quad: Vec<(i8, usize, usize)>,
    pub denom: usize,
}

impl Special {
    fn poly(&self) -> Poly<Q> {
        let mut p = Poly::zero(VarSet::X16);
        for &(s, a, b) in &self.quad {
            p.add_term(Monomial::var(a).mul_var(b), Q::from_integer((s * self.sign) as i64));
        }
        p
    }

    fn render(&self) -> String {
        let mut terms = String::new();
        for (k, (s, a, b)) in self.quad.iter().enumerate() {
            match (k, *s < 0) {
                (0, true) => terms.push('-'),
                (0, false) => {}
                (_, true) => terms.push_str(" - "),
                (_, false) => terms.push_str(" + "),
            }
            terms.push_str(&format!("x{}x{}", a + 1, b + 1));
        }
        format!(
            "x{} {} b({})/(1-bx{})",
            self.coord + 1,
            if self.sign < 0 { "-" } else { "+" },
            terms,
            self.denom + 1
        )
    }
}

/// The transformations of all 16 indices.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowTable {
    pub specials: Vec<Vec<Special>>,
}

impl FlowTable {
    pub fn printed() -> Self {
        let mut specials = vec![Vec::new(); 16];
        for (i, j, sign, quad, d) in tables::PRINTED_FLOWS {
            specials[i - 1].push(Special {
                coord: j - 1,
                sign,
                quad: quad.iter().map(|&(s, a, b)| (s, a - 1, b - 1)).collect(),
                denom: d - 1,
            });
        }
        FlowTable { specials }
    }

    /// The closed forms integrating P_i: a coordinate whose coefficient in P_i is
    /// x_i x_j scales by 1/(1 - b x_i), any other has a coefficient R free of x_j
    /// and moves by b R / (1 - b x_i).
    pub fn derived(t: &RealizationTable<Q>) -> Result<Self, Error> {
        let mut specials = vec![Vec::new(); 16];
        for (i, p) in t.pis.iter().enumerate() {
            if !p.scalar.is_zero() {
                return Err(Error::OutsideFragment);
            }
            for j in 0..16 {
                let r = &p.vec[j];
                if *r == Poly::term(VarSet::X16, Monomial::var(i).mul_var(j), Q::from_integer(1)) {
                    continue;
                }
                let mut quad: Vec<(i8, usize, usize)> = Vec::new();
                for (m, c) in r.terms() {
                    let vars: Vec<usize> = m.support().collect();
                    if m.deg() != 2 || vars.len() != 2 || vars.contains(&j) || c.abs() != Q::from_integer(1) {
                        return Err(Error::OutsideFragment);
                    }
                    quad.push((c.to_integer() as i8, vars[0], vars[1]));
                }
                let sign = quad[0].0;
                for q in quad.iter_mut() {
                    q.0 *= sign;
                }
                specials[i].push(Special { coord: j, sign, quad, denom: i });
            }
        }
        Ok(FlowTable { specials })
    }

    /// Entry-by-entry comparison with another table, as polynomials.
    pub fn compare(&self, derived: &FlowTable) -> Vec<Check> {
        let mut out = Vec::new();
        for i in 0..16 {
            for d in &derived.specials[i] {
                let p = self.specials[i].iter().find(|s| s.coord == d.coord);
                let name = format!("flow {} on x{}", i + 1, d.coord + 1);
                match p {
                    Some(p) if p.poly() == d.poly() && p.denom == d.denom => out.push(Check::new(name, true, d.render())),
                    Some(p) => out.push(Check::corrected(name, p.render(), d.render())),
                    None => out.push(Check::corrected(name, "x_j/(1-bx_i)", d.render())),
                }
            }
            for p in &self.specials[i] {
                if !derived.specials[i].iter().any(|d| d.coord == p.coord) {
                    out.push(Check::corrected(format!("flow {} on x{}", i + 1, p.coord + 1), p.render(), "x_j/(1-bx_i)"));
                }
            }
        }
        out
    }

    /// Applies the transformation of index i (0-based) with parameter b.
    pub fn flow<F: Float>(&self, i: usize, b: F, p: &[F; 16]) -> Result<[F; 16], Error> {
        let guard = |d: usize| -> Result<F, Error> {
            let den = F::one() - b * p[d];
            let tol = F::from(POLE_TOLERANCE).expect("float");
            if den.abs() <= tol {
                Err(Error::PoleProximity(POLE_TOLERANCE))
            } else {
                Ok(den)
            }
        };
        let den = guard(i)?;
        let mut out: [F; 16] = std::array::from_fn(|j| p[j] / den);
        for s in &self.specials[i] {
            let d = guard(s.denom)?;
            let mut q = F::zero();
            for &(sg, a, c) in &s.quad {
                let t = p[a] * p[c];
                q = if sg < 0 { q - t } else { q + t };
            }
            let shift = b * q / d;
            out[s.coord] = if s.sign < 0 { p[s.coord] - shift } else { p[s.coord] + shift };
        }
        Ok(out)
    }
}

/// Result of the numerical checks for one index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowCheck {
    pub index: usize,
    /// Largest normwise relative error of the central difference against sigma * P_i.
    pub generator_error: f64,
    /// +1 if the b-derivative is P_i, -1 if it is -P_i.
    pub sigma: i8,
    pub sign_consistent: bool,
    /// Largest normwise relative error of flow(b, flow(b', p)) against flow(b + b', p).
    pub composition_error: f64,
}

fn rel(a: &[f64], b: &[f64]) -> f64 {
    let diff = a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    let scale = b.iter().map(|y| y.abs()).fold(0.0, f64::max).max(1e-12);
    diff / scale
}

/// Runs the generator and composition checks for index i (0-based) on
/// `samples` points of [-0.5, 0.5]^16, with |b|, |b'| <= 0.1.
pub fn generator_check(
    t: &RealizationTable<Q>,
    table: &FlowTable,
    i: usize,
    samples: usize,
    seed: u64,
) -> Result<FlowCheck, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let field = &t.pis[i];
    let mut gen_err: f64 = 0.0;
    let mut comp_err: f64 = 0.0;
    let mut signs = Vec::with_capacity(samples);
    for _ in 0..samples {
        let p: [f64; 16] = std::array::from_fn(|_| rng.gen_range(-0.5..0.5));
        let b1: f64 = rng.gen_range(-0.1..0.1);
        let b2: f64 = rng.gen_range(-0.1..0.1);
        let plus = table.flow(i, FD_STEP, &p)?;
        let minus = table.flow(i, -FD_STEP, &p)?;
        let fd: Vec<f64> = (0..16).map(|j| (plus[j] - minus[j]) / (2.0 * FD_STEP)).collect();
        let v = field.eval_field(&p);
        let dot: f64 = fd.iter().zip(&v).map(|(a, b)| a * b).sum();
        let s = if dot < 0.0 { -1.0 } else { 1.0 };
        signs.push(s as i8);
        let sv: Vec<f64> = v.iter().map(|x| s * x).collect();
        gen_err = gen_err.max(rel(&fd, &sv));
        let two = table.flow(i, b1, &table.flow(i, b2, &p)?)?;
        let one = table.flow(i, b1 + b2, &p)?;
        comp_err = comp_err.max(rel(&two, &one));
    }
    let sigma = signs.first().copied().unwrap_or(1);
    Ok(FlowCheck {
        index: i + 1,
        generator_error: gen_err,
        sigma,
        sign_consistent: signs.iter().all(|s| *s == sigma),
        composition_error: comp_err,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_zero() {
        let table = FlowTable::printed();
        let p: [f64; 16] = std::array::from_fn(|j| 0.03 * j as f64 - 0.2);
        for i in 0..16 {
            assert_eq!(table.flow(i, 0.0, &p).unwrap(), p);
        }
    }

    #[test]
    fn pole_guard() {
        let table = FlowTable::printed();
        let mut p = [0.0f64; 16];
        p[0] = 2.0;
        assert_eq!(table.flow(0, 0.5, &p), Err(Error::PoleProximity(POLE_TOLERANCE)));
    }

    #[test]
    fn derived_table_and_printed_errata() {
        let t = RealizationTable::get();
        let derived = FlowTable::derived(t).unwrap();
        let checks = FlowTable::printed().compare(&derived);
        assert_eq!(checks.len(), 80);
        let fixed: Vec<&str> = checks.iter().filter(|c| !matches!(c.status, crate::report::Status::Pass)).map(|c| c.name.as_str()).collect();
        assert_eq!(fixed, vec!["flow 8 on x3", "flow 10 on x11", "flow 13 on x1"]);
    }

    #[test]
    fn first_and_last_generators() {
        let t = RealizationTable::get();
        let table = FlowTable::derived(t).unwrap();
        for i in [0, 15] {
            let r = generator_check(t, &table, i, 100, 11).unwrap();
            assert!(r.generator_error < 1e-6, "{r:?}");
            assert!(r.composition_error < 1e-9, "{r:?}");
            assert!(r.sign_consistent && r.sigma == 1);
        }
    }

    #[test]
    fn printed_table_fails_only_where_misprinted() {
        let t = RealizationTable::get();
        let printed = FlowTable::printed();
        let derived = FlowTable::derived(t).unwrap();
        for i in 0..16 {
            let p = generator_check(t, &printed, i, 20, 3).unwrap();
            let d = generator_check(t, &derived, i, 20, 3).unwrap();
            assert!(d.generator_error < 1e-6 && d.composition_error < 1e-9, "{d:?}");
            let ok = p.generator_error < 1e-6 && p.composition_error < 1e-9;
            assert_eq!(ok, ![7, 9, 12].contains(&i), "{p:?}");
        }
    }
}

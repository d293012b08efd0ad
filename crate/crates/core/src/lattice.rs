//! The E6 root lattice: Gram form, sign cocycle and root enumeration.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::report::Check;

/// Coordinates in the simple-root basis alpha_1..alpha_6.
///
/// Node 2 is the branch node attached to node 4; the chain is 1-3-4-5-6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub [i32; 6]);

/// Dynkin edges as 0-based index pairs.
pub const EDGES: [(usize, usize); 5] = [(0, 2), (2, 3), (3, 1), (3, 4), (4, 5)];

/// Bound for brute-force lattice scans; the highest root has max coefficient 3.
pub const SCAN_BOUND: i32 = 6;

impl RootVector {
    pub const ZERO: RootVector = RootVector([0; 6]);

    pub fn simple(i: usize) -> Self {
        let mut c = [0; 6];
        c[i] = 1;
        RootVector(c)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && *self != Self::ZERO
    }

    pub fn is_root(&self) -> bool {
        pair(self, self) == 2
    }

    /// True when the alpha_6 coordinate vanishes.
    pub fn in_d5(&self) -> bool {
        self.0[5] == 0
    }

    pub fn scale(&self, k: i32) -> Self {
        RootVector(self.0.map(|c| c * k))
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, o: RootVector) -> RootVector {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(o.0) {
            *a += b;
        }
        RootVector(c)
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, o: RootVector) -> RootVector {
        self + (-o)
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.map(|c| -c))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        write!(f, "({},{},{},{},{},{})", c[0], c[1], c[2], c[3], c[4], c[5])
    }
}

/// The E6 Cartan matrix.
pub fn gram() -> [[i32; 6]; 6] {
    let mut g = [[0; 6]; 6];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in &EDGES {
        g[a][b] = -1;
        g[b][a] = -1;
    }
    g
}

pub fn pair(a: &RootVector, b: &RootVector) -> i32 {
    let g = gram();
    let mut s = 0;
    for i in 0..6 {
        for j in 0..6 {
            s += a.0[i] * g[i][j] * b.0[j];
        }
    }
    s
}

/// The sign cocycle F(a, b).
pub fn cocycle(a: &RootVector, b: &RootVector) -> i32 {
    let (k, l) = (a.0, b.0);
    let mut e: i64 = (0..6).map(|i| (k[i] * l[i]) as i64).sum();
    e += (k[0] * l[2] + k[3] * l[1] + k[2] * l[3] + k[4] * l[3] + k[5] * l[4]) as i64;
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// 2*alpha_1 + 3*alpha_2 + 4*alpha_3 + 6*alpha_4 + 5*alpha_5 + 4*alpha_6.
pub const ALPHA_HAT: RootVector = RootVector([2, 3, 4, 6, 5, 4]);

/// All 72 roots: positive ones by (height, lex), then their negatives.
pub fn enumerate_roots() -> Vec<RootVector> {
    let mut found: BTreeSet<RootVector> = BTreeSet::new();
    for i in 0..6 {
        found.insert(RootVector::simple(i));
        found.insert(-RootVector::simple(i));
    }
    loop {
        let current: Vec<RootVector> = found.iter().copied().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                let s = *a + *b;
                if s.is_root() && found.insert(s) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut pos: Vec<RootVector> = found.into_iter().filter(|r| r.is_positive()).collect();
    pos.sort_by_key(|r| (r.height(), r.0));
    let neg: Vec<RootVector> = pos.iter().map(|r| -*r).collect();
    pos.extend(neg);
    pos
}

/// Labels of xi_1..xi_16 (the roots with alpha_6 coordinate +1) and of eta_i = -xi_i.
pub fn xi_eta_labels() -> (Vec<RootVector>, Vec<RootVector>) {
    let xi = vec![
        RootVector([0, 0, 0, 0, 0, 1]),
        RootVector([0, 0, 0, 0, 1, 1]),
        RootVector([0, 0, 0, 1, 1, 1]),
        RootVector([0, 0, 1, 1, 1, 1]),
        RootVector([0, 1, 0, 1, 1, 1]),
        RootVector([0, 1, 1, 1, 1, 1]),
        RootVector([1, 0, 1, 1, 1, 1]),
        RootVector([1, 1, 1, 1, 1, 1]),
        RootVector([0, 1, 1, 2, 1, 1]),
        RootVector([1, 1, 1, 2, 1, 1]),
        RootVector([0, 1, 1, 2, 2, 1]),
        RootVector([1, 1, 2, 2, 1, 1]),
        RootVector([1, 1, 1, 2, 2, 1]),
        RootVector([1, 1, 2, 2, 2, 1]),
        RootVector([1, 1, 2, 3, 2, 1]),
        RootVector([1, 2, 2, 3, 2, 1]),
    ];
    let eta = xi.iter().map(|r| -*r).collect();
    (xi, eta)
}

/// Lattice invariants: root counts, norms, the cocycle identities on a seeded
/// sample of lattice vectors and the root-pair antisymmetry exhaustively.
pub fn verify_lattice(samples: usize, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();
    let roots = enumerate_roots();
    let norms = roots.iter().all(|r| pair(r, r) == 2);
    out.push(Check::new("root count", roots.len() == 72, format!("{} roots, {} in D5", roots.len(), roots.iter().filter(|r| r.in_d5()).count())));
    out.push(Check::new("root norms", norms, "(a, a) = 2 for every root"));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = || RootVector(std::array::from_fn(|_| rng.gen_range(-SCAN_BOUND..=SCAN_BOUND)));
    let (mut bilinear, mut skew) = (0, 0);
    for _ in 0..samples {
        let (a, b, c) = (v(), v(), v());
        if cocycle(&(a + b), &c) != cocycle(&a, &c) * cocycle(&b, &c)
            || cocycle(&a, &(b + c)) != cocycle(&a, &b) * cocycle(&a, &c)
        {
            bilinear += 1;
        }
        let sign = if pair(&a, &b).rem_euclid(2) == 0 { 1 } else { -1 };
        if cocycle(&a, &b) * cocycle(&b, &a) != sign || cocycle(&a, &a) != if (pair(&a, &a) / 2) % 2 == 0 { 1 } else { -1 } {
            skew += 1;
        }
    }
    out.push(Check::new("cocycle bimultiplicative", bilinear == 0, format!("{samples} triples, {bilinear} failures")));
    out.push(Check::new("cocycle skew relation", skew == 0, format!("{samples} pairs, {skew} failures")));

    let mut pairs = 0;
    let mut bad = 0;
    for a in &roots {
        for b in &roots {
            if (*a + *b).is_root() {
                pairs += 1;
                if cocycle(a, b) != -cocycle(b, a) {
                    bad += 1;
                }
            }
        }
    }
    out.push(Check::new("cocycle antisymmetric on root pairs", bad == 0, format!("{pairs} pairs, {bad} failures")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> RootVector {
        RootVector::simple(i - 1)
    }

    #[test]
    fn form_examples() {
        assert_eq!(pair(&a(1), &a(1)), 2);
        assert_eq!(pair(&a(1), &a(6)), 0);
        assert_eq!(pair(&a(2), &a(4)), -1);
        for r in 1..=5 {
            assert_eq!(pair(&ALPHA_HAT, &a(r)), 0);
        }
        assert_eq!(pair(&ALPHA_HAT, &a(6)), 3);
        assert_eq!(pair(&ALPHA_HAT, &ALPHA_HAT), 12);
    }

    #[test]
    fn cocycle_examples() {
        assert_eq!(cocycle(&a(1), &a(1)), -1);
        assert_eq!(cocycle(&a(1), &a(3)), -1);
        assert_eq!(cocycle(&a(3), &a(1)), 1);
    }

    #[test]
    fn root_counts() {
        let roots = enumerate_roots();
        assert_eq!(roots.len(), 72);
        assert_eq!(roots.iter().filter(|r| r.in_d5()).count(), 40);
        let (xi, eta) = xi_eta_labels();
        let mut top: Vec<_> = roots.iter().filter(|r| r.0[5] == 1).copied().collect();
        let mut want = xi.clone();
        top.sort();
        want.sort();
        assert_eq!(top, want);
        for (x, e) in xi.iter().zip(&eta) {
            assert_eq!(*x + *e, RootVector::ZERO);
        }
    }

    #[test]
    fn invariants() {
        for c in verify_lattice(500, 1) {
            assert!(c.passed(), "{}: {}", c.name, c.detail);
        }
    }
}

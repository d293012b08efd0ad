//! The orthogonal algebra o(10) in its standard 10x10 form and the
//! isomorphism nu onto the D5 part of the E6 algebra.

use std::fmt;
use std::sync::OnceLock;

use crate::chevalley::{bracket, LieElement};
use crate::error::Error;
use crate::lattice::RootVector;
use crate::scalar::Scalar;

/// Basis of o(10). Indices are 0-based; rows and columns 0..5 and 5..10.
///
/// `Gl(i, j)` is E_{i,j} - E_{5+j,5+i}, `Upper(p, q)` is E_{p,5+q} - E_{q,5+p}
/// and `Lower(p, q)` is E_{5+p,q} - E_{5+q,p}, with p < q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum O10 {
    Gl(u8, u8),
    Upper(u8, u8),
    Lower(u8, u8),
}

pub type Mat10 = [[i64; 10]; 10];

impl O10 {
    pub fn all() -> &'static [O10] {
        static ALL: OnceLock<Vec<O10>> = OnceLock::new();
        ALL.get_or_init(|| {
            let mut v = Vec::with_capacity(45);
            for i in 0..5 {
                for j in 0..5 {
                    v.push(O10::Gl(i, j));
                }
            }
            for p in 0..5 {
                for q in p + 1..5 {
                    v.push(O10::Upper(p, q));
                }
            }
            for p in 0..5 {
                for q in p + 1..5 {
                    v.push(O10::Lower(p, q));
                }
            }
            v
        })
    }

    pub fn index(&self) -> usize {
        match *self {
            O10::Gl(i, j) => (i * 5 + j) as usize,
            O10::Upper(p, q) => 25 + pair_index(p, q),
            O10::Lower(p, q) => 35 + pair_index(p, q),
        }
    }

    pub fn from_index(i: usize) -> O10 {
        Self::all()[i]
    }

    pub fn is_cartan(&self) -> bool {
        matches!(*self, O10::Gl(i, j) if i == j)
    }

    pub fn matrix(&self) -> Mat10 {
        let mut m = [[0; 10]; 10];
        match *self {
            O10::Gl(i, j) => {
                let (i, j) = (i as usize, j as usize);
                m[i][j] += 1;
                m[5 + j][5 + i] -= 1;
            }
            O10::Upper(p, q) => {
                let (p, q) = (p as usize, q as usize);
                m[p][5 + q] = 1;
                m[q][5 + p] = -1;
            }
            O10::Lower(p, q) => {
                let (p, q) = (p as usize, q as usize);
                m[5 + p][q] = 1;
                m[5 + q][p] = -1;
            }
        }
        m
    }

    /// Weight in the epsilon basis.
    pub fn eps_weight(&self) -> [i32; 5] {
        let mut w = [0; 5];
        match *self {
            O10::Gl(i, j) => {
                w[i as usize] += 1;
                w[j as usize] -= 1;
            }
            O10::Upper(p, q) => {
                w[p as usize] += 1;
                w[q as usize] += 1;
            }
            O10::Lower(p, q) => {
                w[p as usize] -= 1;
                w[q as usize] -= 1;
            }
        }
        w
    }

    /// The D5 root of a non-Cartan element.
    pub fn root(&self) -> Option<RootVector> {
        if self.is_cartan() {
            None
        } else {
            eps_to_alpha(&self.eps_weight())
        }
    }

    /// Reads the symbol E_{a,b} - E_{c,d} (1-based) as sign times a basis element.
    pub fn from_symbol(a: usize, b: usize, c: usize, d: usize) -> Option<(i64, O10)> {
        let mut m = [[0i64; 10]; 10];
        m[a - 1][b - 1] += 1;
        m[c - 1][d - 1] -= 1;
        let coords = decompose(&m)?;
        let nz: Vec<(usize, i64)> = coords.iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
        match nz.as_slice() {
            [(i, s)] if s.abs() == 1 => Some((*s, O10::from_index(*i))),
            _ => None,
        }
    }
}

fn pair_index(p: u8, q: u8) -> usize {
    let (p, q) = (p as usize, q as usize);
    // position of (p, q) among pairs p < q in lex order
    (0..p).map(|r| 4 - r).sum::<usize>() + (q - p - 1)
}

impl fmt::Display for O10 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c, d) = match *self {
            O10::Gl(i, j) => (i + 1, j + 1, j + 6, i + 6),
            O10::Upper(p, q) => (p + 1, q + 6, q + 1, p + 6),
            O10::Lower(p, q) => (p + 6, q + 1, q + 6, p + 1),
        };
        write!(f, "E{},{}-E{},{}", a, b, c, d)
    }
}

/// Converts an epsilon-coordinate vector to simple-root coordinates.
///
/// alpha_1 = e1-e2, alpha_3 = e2-e3, alpha_4 = e3-e4, alpha_5 = e4-e5, alpha_2 = e4+e5.
pub fn eps_to_alpha(v: &[i32; 5]) -> Option<RootVector> {
    let c1 = v[0];
    let c3 = v[0] + v[1];
    let c4 = c3 + v[2];
    let two_c2 = v[3] + c4 + v[4];
    let two_c5 = v[3] + c4 - v[4];
    if two_c2 % 2 != 0 {
        return None;
    }
    Some(RootVector([c1, two_c2 / 2, c3, c4, two_c5 / 2, 0]))
}

/// Epsilon coordinates of the simple roots alpha_1..alpha_5.
pub fn alpha_eps(k: usize) -> [i32; 5] {
    match k {
        0 => [1, -1, 0, 0, 0],
        1 => [0, 0, 0, 1, 1],
        2 => [0, 1, -1, 0, 0],
        3 => [0, 0, 1, -1, 0],
        4 => [0, 0, 0, 1, -1],
        _ => panic!("alpha_{} is not a D5 simple root", k + 1),
    }
}

pub fn commutator(a: &Mat10, b: &Mat10) -> Mat10 {
    let mut m = [[0; 10]; 10];
    for i in 0..10 {
        for j in 0..10 {
            let mut s = 0;
            for k in 0..10 {
                s += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
            m[i][j] = s;
        }
    }
    m
}

/// Coordinates of an o(10) matrix in the standard basis, or None outside o(10).
pub fn decompose(m: &Mat10) -> Option<Vec<i64>> {
    let mut c = vec![0; 45];
    for b in O10::all() {
        let v = match *b {
            O10::Gl(i, j) => m[i as usize][j as usize],
            O10::Upper(p, q) => m[p as usize][5 + q as usize],
            O10::Lower(p, q) => m[5 + p as usize][q as usize],
        };
        c[b.index()] = v;
    }
    (compose(&c) == *m).then_some(c)
}

pub fn compose(c: &[i64]) -> Mat10 {
    let mut m = [[0; 10]; 10];
    for (k, &v) in c.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let b = O10::from_index(k).matrix();
        for i in 0..10 {
            for j in 0..10 {
                m[i][j] += v * b[i][j];
            }
        }
    }
    m
}

/// Structure constants of o(10): `table[a][b]` lists (c, coeff) with [a, b] = sum coeff * c.
pub fn structure() -> &'static Vec<Vec<Vec<(usize, i64)>>> {
    static T: OnceLock<Vec<Vec<Vec<(usize, i64)>>>> = OnceLock::new();
    T.get_or_init(|| {
        let mats: Vec<Mat10> = O10::all().iter().map(|b| b.matrix()).collect();
        mats.iter()
            .map(|a| {
                mats.iter()
                    .map(|b| {
                        let c = decompose(&commutator(a, b)).expect("o(10) is closed");
                        c.into_iter().enumerate().filter(|(_, v)| *v != 0).collect()
                    })
                    .collect()
            })
            .collect()
    })
}

/// The isomorphism nu: o(10) -> D5 part of E6, tabulated on the 45 basis elements.
///
/// Root vectors map to integer multiples of root vectors; Cartan images are
/// stored doubled to stay integral.
#[derive(Clone, Debug)]
pub struct Nu {
    images: Vec<NuImage>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum NuImage {
    /// c * E_root
    Root(i64, RootVector),
    /// Cartan vector with coordinates halved
    Cartan([i64; 6]),
}

impl Nu {
    pub fn get() -> &'static Nu {
        static N: OnceLock<Nu> = OnceLock::new();
        N.get_or_init(Nu::build)
    }

    fn build() -> Nu {
        let mut images: Vec<Option<NuImage>> = vec![None; 45];
        // Cartan values, doubled.
        let cartan2: [[i64; 6]; 5] = [
            [2, 1, 2, 2, 1, 0],
            [0, 1, 2, 2, 1, 0],
            [0, 1, 0, 2, 1, 0],
            [0, 1, 0, 0, 1, 0],
            [0, 1, 0, 0, -1, 0],
        ];
        for (i, c) in cartan2.iter().enumerate() {
            images[O10::Gl(i as u8, i as u8).index()] = Some(NuImage::Cartan(*c));
        }
        let pos_gen = [O10::Gl(0, 1), O10::Upper(3, 4), O10::Gl(1, 2), O10::Gl(2, 3), O10::Gl(3, 4)];
        let neg_gen = [O10::Gl(1, 0), O10::Lower(3, 4), O10::Gl(2, 1), O10::Gl(3, 2), O10::Gl(4, 3)];
        for k in 0..5 {
            let a = RootVector::simple(k);
            images[pos_gen[k].index()] = Some(NuImage::Root(1, a));
            // E_{2,1}-E_{6,7} -> -E_{-a1}; E_{10,4}-E_{9,5} = -Lower(3,4) -> -E_{-a2}
            let sign = if k == 1 { 1 } else { -1 };
            images[neg_gen[k].index()] = Some(NuImage::Root(sign, -a));
        }
        let mut pending: Vec<O10> = O10::all().iter().copied().filter(|b| images[b.index()].is_none()).collect();
        pending.sort_by_key(|b| b.root().map(|r| r.height().abs()).unwrap_or(0));
        for b in pending {
            let beta = b.root().expect("non-Cartan");
            let sgn = if beta.is_positive() { 1 } else { -1 };
            let (k, prev) = (0..5)
                .find_map(|k| {
                    let rest = beta - RootVector::simple(k).scale(sgn);
                    if !rest.is_root() {
                        return None;
                    }
                    let prev = O10::all().iter().copied().find(|c| c.root() == Some(rest))?;
                    images[prev.index()].as_ref().map(|_| (k, prev))
                })
                .expect("every D5 root is reached from a simple root");
            let g = if sgn > 0 { pos_gen[k] } else { neg_gen[k] };
            let comm = decompose(&commutator(&g.matrix(), &prev.matrix())).expect("closed");
            let t = comm[b.index()];
            assert!(t != 0 && comm.iter().filter(|c| **c != 0).count() == 1);
            let lie = |img: &NuImage| -> LieElement<num_rational::Rational64> { image_to_lie(img) };
            let br = bracket(&lie(images[g.index()].as_ref().unwrap()), &lie(images[prev.index()].as_ref().unwrap()));
            let c = br.roots[&beta];
            assert_eq!(*c.denom(), 1);
            assert_eq!(c.numer() % t, 0);
            images[b.index()] = Some(NuImage::Root(c.numer() / t, beta));
        }
        Nu { images: images.into_iter().map(|i| i.unwrap()).collect() }
    }

    pub fn image(&self, b: O10) -> &NuImage {
        &self.images[b.index()]
    }

    pub fn apply<S: Scalar>(&self, b: O10) -> LieElement<S> {
        image_to_lie(self.image(b))
    }

    /// nu applied to a coordinate vector on the 45-element basis.
    pub fn apply_coords<S: Scalar>(&self, c: &[S]) -> LieElement<S> {
        let mut out = LieElement::zero();
        for (k, v) in c.iter().enumerate() {
            if !v.is_zero() {
                out.add_scaled(&self.apply(O10::from_index(k)), v);
            }
        }
        out
    }

    /// Coordinates on the 45-element basis of the preimage of a D5 element.
    pub fn inverse<S: Scalar>(&self, u: &LieElement<S>) -> Result<Vec<S>, Error> {
        if !u.cartan[5].is_zero() || u.roots.keys().any(|r| !r.in_d5()) {
            return Err(Error::OutsideD5);
        }
        let mut c: Vec<S> = vec![S::zero(); 45];
        for (k, h) in u.cartan.iter().take(5).enumerate() {
            for (i, e) in alpha_eps(k).iter().enumerate() {
                if *e != 0 {
                    let idx = O10::Gl(i as u8, i as u8).index();
                    c[idx] = c[idx].clone() + h.clone() * S::from_int(*e as i64);
                }
            }
        }
        for (r, v) in &u.roots {
            let (b, img) = self
                .images
                .iter()
                .enumerate()
                .find_map(|(i, img)| match img {
                    NuImage::Root(s, rr) if rr == r => Some((i, *s)),
                    _ => None,
                })
                .expect("every D5 root has a preimage");
            c[b] = c[b].clone() + v.clone() / S::from_int(img);
        }
        Ok(c)
    }
}

fn image_to_lie<S: Scalar>(img: &NuImage) -> LieElement<S> {
    match img {
        NuImage::Root(c, r) => LieElement::e_scaled(*r, S::from_int(*c)),
        NuImage::Cartan(h2) => LieElement::cartan(h2.map(|v| S::from_ratio(v, 2))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    #[test]
    fn basis_round_trip() {
        for (k, b) in O10::all().iter().enumerate() {
            assert_eq!(b.index(), k);
            let mut e = vec![0; 45];
            e[k] = 1;
            assert_eq!(decompose(&b.matrix()), Some(e));
        }
        assert_eq!(O10::from_symbol(10, 4, 9, 5), Some((-1, O10::Lower(3, 4))));
        assert_eq!(O10::from_symbol(3, 9, 4, 8), Some((1, O10::Upper(2, 3))));
        assert_eq!(O10::Gl(0, 1).to_string(), "E1,2-E7,6");
    }

    #[test]
    fn nu_generators() {
        let nu = Nu::get();
        assert_eq!(nu.image(O10::Upper(3, 4)), &NuImage::Root(1, RootVector::simple(1)));
        assert_eq!(nu.image(O10::Gl(0, 0)), &NuImage::Cartan([2, 1, 2, 2, 1, 0]));
    }

    #[test]
    fn nu_is_homomorphism() {
        let nu = Nu::get();
        let st = structure();
        for a in 0..45 {
            for b in 0..45 {
                let lhs = bracket(&nu.apply::<Q>(O10::from_index(a)), &nu.apply(O10::from_index(b)));
                let mut rhs = LieElement::zero();
                for (c, v) in &st[a][b] {
                    rhs.add_scaled(&nu.apply(O10::from_index(*c)), &Q::from_integer(*v));
                }
                assert_eq!(lhs, rhs, "{} {}", O10::from_index(a), O10::from_index(b));
            }
        }
    }

    #[test]
    fn nu_inverse_round_trip() {
        let nu = Nu::get();
        for b in O10::all() {
            let c = nu.inverse(&nu.apply::<Q>(*b)).unwrap();
            for (k, v) in c.iter().enumerate() {
                let want = if k == b.index() { 1 } else { 0 };
                assert_eq!(*v, Q::from_integer(want));
            }
        }
        assert!(nu.inverse(&LieElement::<Q>::h(RootVector::simple(5))).is_err());
    }
}

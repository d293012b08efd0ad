//! Exact linear algebra: fraction-free (Bareiss) elimination over big
//! integers, with results converted back to the caller's scalar.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::scalar::Exact;

fn to_int_row<S: Exact>(row: &[S]) -> Vec<BigInt> {
    let big: Vec<BigRational> = row.iter().map(|c| c.to_big()).collect();
    let l = big.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    big.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// Row echelon form by Bareiss elimination; returns the pivot rows and pivot columns.
pub fn echelon(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pr = &top[r];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                for x in row.iter_mut().skip(c + 1) {
                    if !x.is_zero() {
                        *x = &*x * &pr[c] / &prev;
                    }
                }
            } else {
                let f = row[c].clone();
                for j in c + 1..ncols {
                    row[j] = (&pr[c] * &row[j] - &f * &pr[j]) / &prev;
                }
                row[c] = BigInt::zero();
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank<S: Exact>(m: &[Vec<S>], ncols: usize) -> usize {
    let rows = m.iter().map(|r| to_int_row(r)).collect();
    echelon(rows, ncols).1.len()
}

/// Reduced row echelon form over the rationals.
pub fn rref_big(m: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let (ech, piv) = echelon(m, ncols);
    let mut rows: Vec<Vec<BigRational>> = ech
        .into_iter()
        .zip(&piv)
        .map(|(row, &c)| {
            let p = BigRational::from_integer(row[c].clone());
            row.into_iter().map(|x| BigRational::from_integer(x) / &p).collect()
        })
        .collect();
    for k in (0..rows.len()).rev() {
        let c = piv[k];
        let (above, below) = rows.split_at_mut(k);
        let pr = &below[0];
        for row in above.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..ncols {
                if !pr[j].is_zero() {
                    row[j] = &row[j] - &f * &pr[j];
                }
            }
        }
    }
    (rows, piv)
}

fn back<S: Exact>(v: &BigRational) -> Result<S, Error> {
    S::from_big(v).ok_or(Error::Overflow)
}

pub fn rref<S: Exact>(m: &[Vec<S>], ncols: usize) -> Result<(Vec<Vec<S>>, Vec<usize>), Error> {
    let (rows, piv) = rref_big(m.iter().map(|r| to_int_row(r)).collect(), ncols);
    let rows = rows.iter().map(|r| r.iter().map(back).collect::<Result<Vec<S>, Error>>()).collect::<Result<_, _>>()?;
    Ok((rows, piv))
}

/// Basis of {v : m v = 0}, one vector per free column with that entry equal to 1.
pub fn kernel<S: Exact>(m: &[Vec<S>], ncols: usize) -> Result<Vec<Vec<S>>, Error> {
    let (rows, piv) = rref_big(m.iter().map(|r| to_int_row(r)).collect(), ncols);
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !piv.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[f] = BigRational::one();
        for (row, &c) in rows.iter().zip(&piv) {
            v[c] = -row[f].clone();
        }
        out.push(v.iter().map(back).collect::<Result<Vec<S>, Error>>()?);
    }
    Ok(out)
}

/// One solution of m x = b, or None if the system is inconsistent.
pub fn solve<S: Exact>(m: &[Vec<S>], b: &[S], ncols: usize) -> Result<Option<Vec<S>>, Error> {
    let aug: Vec<Vec<BigInt>> = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            to_int_row(&row)
        })
        .collect();
    let (rows, piv) = rref_big(aug, ncols + 1);
    if piv.contains(&ncols) {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (row, &c) in rows.iter().zip(&piv) {
        x[c] = row[ncols].clone();
    }
    Ok(Some(x.iter().map(back).collect::<Result<_, _>>()?))
}

/// Largest absolute numerator or denominator, for diagnostics.
pub fn height(v: &[BigRational]) -> BigInt {
    v.iter().map(|c| c.numer().abs().max(c.denom().clone())).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn small_kernel() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rank(&m, 3), 1);
        let k = kernel(&m, 3).unwrap();
        assert_eq!(k, vec![vec![q(-2), q(1), q(0)], vec![q(-3), q(0), q(1)]]);
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = vec![vec![q(2), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve(&m, &[q(3), q(0)], 2).unwrap(), Some(vec![q(1), q(1)]));
        let s = vec![vec![q(1), q(1)], vec![q(2), q(2)]];
        assert_eq!(solve(&s, &[q(1), q(3)], 2).unwrap(), None);
    }

    #[test]
    fn fractions() {
        let m = vec![vec![Q::new(1, 2), Q::new(1, 3)], vec![Q::new(1, 4), Q::new(1, 6)]];
        assert_eq!(rank(&m, 2), 1);
        let k = kernel(&m, 2).unwrap();
        assert_eq!(k, vec![vec![Q::new(-2, 3), q(1)]]);
    }
}

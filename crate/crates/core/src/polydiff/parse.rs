//! Reader for the plain-text forms used in the transcribed tables:
//! `x1*x11 + x2*x9 - 1/2*x3^2` and `x4*d7 - x6*d8 + x1*D`.

use super::diffop::DiffOp;
use super::monomial::Monomial;
use super::poly::{Poly, VarSet};
use crate::scalar::Exact;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

enum Target {
    Scalar,
    Partial(usize),
    Degree,
}

struct Term<S> {
    coeff: S,
    mono: Monomial,
    target: Target,
}

fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if (ch == '+' || ch == '-') && cur.is_empty() {
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push((neg, cur));
    }
    out
}

fn parse_term<S: Exact>(vs: VarSet, neg: bool, t: &str) -> Result<Term<S>, ParseError> {
    let mut coeff = S::one();
    let mut mono = Monomial::ONE;
    let mut target = Target::Scalar;
    let letter = vs.letter();
    let mut factors = t.split('*').peekable();
    while let Some(f) = factors.next() {
        if f.is_empty() {
            return Err(ParseError(format!("empty factor in {t}")));
        }
        let first = f.chars().next().unwrap();
        if first.is_ascii_digit() {
            // a coefficient may be written 1/2*x3
            let c = crate::scalar::parse_rational::<S>(f).ok_or_else(|| ParseError(format!("bad number {f}")))?;
            coeff = coeff * c;
        } else if f == "D" {
            target = set_target(target, Target::Degree, t)?;
        } else if let Some(rest) = f.strip_prefix('d') {
            let i: usize = rest.parse().map_err(|_| ParseError(format!("bad partial {f}")))?;
            check_index(vs, i, f)?;
            target = set_target(target, Target::Partial(i - 1), t)?;
        } else if first == letter {
            let (idx, pow) = match f[1..].split_once('^') {
                Some((a, b)) => (a, b.parse::<u32>().map_err(|_| ParseError(format!("bad power {f}")))?),
                None => (&f[1..], 1),
            };
            let i: usize = idx.parse().map_err(|_| ParseError(format!("bad variable {f}")))?;
            check_index(vs, i, f)?;
            for _ in 0..pow {
                mono = mono.mul_var(i - 1);
            }
        } else {
            return Err(ParseError(format!("unknown factor {f}")));
        }
    }
    if neg {
        coeff = -coeff;
    }
    Ok(Term { coeff, mono, target })
}

fn check_index(vs: VarSet, i: usize, f: &str) -> Result<(), ParseError> {
    if i == 0 || i > vs.len() {
        return Err(ParseError(format!("index out of range in {f}")));
    }
    Ok(())
}

fn set_target(old: Target, new: Target, t: &str) -> Result<Target, ParseError> {
    match old {
        Target::Scalar => Ok(new),
        _ => Err(ParseError(format!("more than one derivative in {t}"))),
    }
}

pub fn parse_poly<S: Exact>(vs: VarSet, text: &str) -> Result<Poly<S>, ParseError> {
    let mut p = Poly::zero(vs);
    for (neg, t) in split_terms(text) {
        let term = parse_term::<S>(vs, neg, &t)?;
        if !matches!(term.target, Target::Scalar) {
            return Err(ParseError(format!("derivative in polynomial: {t}")));
        }
        p.add_term(term.mono, term.coeff);
    }
    Ok(p)
}

pub fn parse_diffop<S: Exact>(vs: VarSet, text: &str) -> Result<DiffOp<S>, ParseError> {
    let mut d = DiffOp::zero(vs);
    for (neg, t) in split_terms(text) {
        let term = parse_term::<S>(vs, neg, &t)?;
        match term.target {
            Target::Scalar => d.scalar.add_term(term.mono, term.coeff),
            Target::Partial(i) => d.vec[i].add_term(term.mono, term.coeff),
            Target::Degree => {
                for i in 0..vs.len() {
                    d.vec[i].add_term(term.mono.mul_var(i), term.coeff.clone());
                }
            }
        }
    }
    Ok(d)
}

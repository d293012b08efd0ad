//! Sparse polynomials, first-order differential operators and the exterior algebra.

mod diffop;
mod exterior;
mod monomial;
mod parse;
mod poly;

pub use diffop::DiffOp;
pub use exterior::ExteriorElt;
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use parse::{parse_diffop, parse_poly, ParseError};
pub use poly::{Poly, VarSet};

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64 as Q;

    fn p(s: &str) -> Poly<Q> {
        parse_poly(VarSet::X16, s).unwrap()
    }

    fn d(s: &str) -> DiffOp<Q> {
        parse_diffop(VarSet::X16, s).unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(d("x2*d1").act(&p("x1*x3")), p("x2*x3"));
        let f = p("x1^2*x3 + 5*x4");
        let deg = DiffOp::degree_op(VarSet::X16);
        assert_eq!(deg.act(&f), p("3*x1^2*x3 + 5*x4"));
    }

    #[test]
    fn commutator_examples() {
        let lhs = d("d1").commutator(&d("x1*D"));
        assert_eq!(lhs, d("D + x1*d1"));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(d("x4*d7").tau().unwrap(), d("x7*d4"));
        let op = d("x4*d7 + x6*d8 + x9*d10 + x11*d13");
        assert_eq!(op.tau().unwrap().tau().unwrap(), op);
        assert!(d("x1*x2*d3").tau().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("x1*x11 + x2*x9 - x3*x6 + x4*x5").to_string(), "x1*x11 + x2*x9 - x3*x6 + x4*x5");
        assert_eq!(d("-x1*d2 + 1/2*x3*d3 + 3").to_string(), "-x1*d2 + 1/2*x3*d3 + 3");
    }
}

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("element lies outside the D5 subalgebra")]
    OutsideD5,
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VarSetMismatch(crate::polydiff::VarSet, crate::polydiff::VarSet),
    #[error("operator is outside the first-order fragment")]
    OutsideFragment,
    #[error("degree bound exceeded: {got} > {max}")]
    DegreeBound { got: usize, max: usize },
    #[error("dimension guard exceeded: {got} > {max}")]
    DimensionGuard { got: usize, max: usize },
    #[error("weight is not dominant integral")]
    NotDominant,
    #[error("point is within {0:e} of a pole")]
    PoleProximity(f64),
    #[error("no singular vector of the requested weight")]
    SingularNotFound,
    #[error("image is not proportional to the singular vector")]
    NotProportional,
    #[error("arithmetic overflow in exact scalar")]
    Overflow,
}

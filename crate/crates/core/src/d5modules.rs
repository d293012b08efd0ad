//! D5 weights, the Weyl dimension formula, Casimir eigenvalues, and the
//! concrete modules used for the functor.

mod realize;
mod weights;

pub use realize::{casimir_pairs, realize, Family, MatrixRep, DIMENSION_GUARD};
pub use weights::{casimir_eig, ell_omega, omega_eigenvalues, rho, upsilon, upsilon_prime, weyl_dim, WeightD5};

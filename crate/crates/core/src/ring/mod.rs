//! Exact arithmetic layer: integer Laurent polynomials, reduced rational
//! functions of `q`, cyclotomic specialization, and integer-lattice linear
//! algebra.

pub mod cyclo;
pub mod intmat;
pub mod laurent;
pub mod ratfunc;

pub use cyclo::{cyclo_poly, CycloElem};
pub use intmat::{kernel_basis, lattice_membership, odd_part, smith_normal_form, IntMatrix, Snf};
pub use laurent::{div_exact, int_poly_gcd, LaurentPoly};
pub use ratfunc::{big, ArithOp, RatFunc};

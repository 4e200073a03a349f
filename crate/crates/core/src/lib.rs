//! Exact computer algebra for quasi-split quantum symmetric pairs.
//!
//! The crate builds, entirely over exact coefficient rings (integer Laurent
//! polynomials, rational functions of `q`, cyclotomic fields), the
//! computational layers needed to certify identities about iquantum groups at
//! roots of unity: q-combinatorics and q-double binomials, iroot data and
//! iweight lattices, highest-weight modules with divided-power actions,
//! idivided-power operator calculus, the quantum Frobenius morphism and its
//! isplitting in rank one, module-level splitting lemmas, and K-orbit
//! combinatorics on flag varieties.
//!
//! Every check is exact: there is no floating point anywhere, and "pass"
//! means equality of canonical representatives.

pub mod error;
pub mod ring;

pub mod qcomb;
pub mod rootdata;

pub mod repr;

pub mod iqg;
pub mod rank1;

pub mod frsplit;
pub mod korbit;

pub mod par;
pub mod suites;

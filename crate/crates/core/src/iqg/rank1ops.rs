//! The rank-one polynomial algebra generated by a single `B` with `tau i = i`,
//! in the balanced basis `B^(0), B^(1), ...`, together with the lowering
//! operator `delta` and the twisted operators `E_e`:
//!
//! ```text
//! delta(B^(n+1)) = B^(n),      E_e(B^(n)) = q_i^(en) D^(n),
//! D_(a,e)^(n) = sum_u q_i^(-e(a-1)u) <a;2u>_i B^(n-2u).
//! ```

use super::balanced_product_coeff;
use crate::qcomb::qdouble_binom;
use crate::ring::RatFunc;
use std::collections::BTreeMap;

/// Element of the rank-one subalgebra in the balanced basis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct UiPoly {
    pub coeffs: BTreeMap<i64, RatFunc>,
}

impl UiPoly {
    pub fn zero() -> Self {
        UiPoly { coeffs: BTreeMap::new() }
    }

    pub fn basis(n: i64) -> Self {
        let mut p = UiPoly::zero();
        p.add_term(n, RatFunc::one());
        p
    }

    pub fn add_term(&mut self, n: i64, c: RatFunc) {
        if c.is_zero() || n < 0 {
            return;
        }
        let e = self.coeffs.entry(n).or_insert_with(RatFunc::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.coeffs.remove(&n);
        }
    }

    pub fn add(&self, rhs: &UiPoly) -> UiPoly {
        let mut out = self.clone();
        for (n, c) in &rhs.coeffs {
            out.add_term(*n, c.clone());
        }
        out
    }

    pub fn scale(&self, f: &RatFunc) -> UiPoly {
        let mut out = UiPoly::zero();
        for (n, c) in &self.coeffs {
            out.add_term(*n, c * f);
        }
        out
    }

    pub fn sub(&self, rhs: &UiPoly) -> UiPoly {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Product through the balanced structure constants.
    pub fn mul(&self, rhs: &UiPoly, d: i64) -> UiPoly {
        let mut out = UiPoly::zero();
        for (a, ca) in &self.coeffs {
            for (k, ck) in &rhs.coeffs {
                let c = ca * ck;
                for t in 0..=((a + k) / 2) {
                    let s = balanced_product_coeff(*a, *k, t, d);
                    if !s.is_zero() {
                        out.add_term(a + k - 2 * t, &c * &s);
                    }
                }
            }
        }
        out
    }

    /// `delta`: shifts the balanced basis down by one.
    pub fn delta(&self) -> UiPoly {
        let mut out = UiPoly::zero();
        for (n, c) in &self.coeffs {
            out.add_term(n - 1, c.clone());
        }
        out
    }

    pub fn delta_pow(&self, k: i64) -> UiPoly {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.delta();
        }
        out
    }

    /// `E_e(B^(n)) = q_i^(en) D^(n)`, extended linearly.
    pub fn e_op(&self, e: i64, d: i64) -> UiPoly {
        let mut out = UiPoly::zero();
        for (n, c) in &self.coeffs {
            let base = d_elem(1, e, *n, d).scale(&RatFunc::q_power(d * e * n));
            out = out.add(&base.scale(c));
        }
        out
    }

    pub fn e_op_pow(&self, e: i64, k: i64, d: i64) -> UiPoly {
        let mut out = self.clone();
        for _ in 0..k {
            out = out.e_op(e, d);
        }
        out
    }
}

/// `D_(a,e)^(n) = sum_u q_i^(-e(a-1)u) <a;2u>_i B^(n-2u)`.
pub fn d_elem(a: i64, e: i64, n: i64, d: i64) -> UiPoly {
    let mut out = UiPoly::zero();
    for u in 0..=(n / 2).max(0) {
        let c = &RatFunc::q_power(d * (-e * (a - 1) * u)) * &qdouble_binom(a, u, d);
        out.add_term(n - 2 * u, c);
    }
    out
}

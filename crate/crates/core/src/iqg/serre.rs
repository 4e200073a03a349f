//! Higher iSerre elements `y_(i,j;n,m,e)` for `tau i = i`, `i != j`.
//!
//! Two independent routes to the same normal form
//! `sum coeff(r,s) B_i^(r) B_j^(n) B_i^(s)` (balanced powers of `i`):
//!
//! * the defining recursion
//!   `q_i^(-e(2m+n a_ij)) B_i y_(n,m,e) - y_(n,m,e) B_i
//!      = -[m+1]_i y_(n,m+1,e) + [m+n a_ij - 1]_i q_i^(-e(2m+n a_ij -1)) y_(n,m-1,e)`,
//!   driven by the balanced product rule;
//! * the closed form
//!   `y = sum_(r+s+2t=m) (-1)^r q_i^(-e(m+n a_ij -1)(r+t)) <m+n a_ij;2t>_i
//!      B_i^(r) B_j^(n) B_i^(s)`.

use super::{balanced_product_coeff, ICtx};
use crate::qcomb::{qdouble_binom, qint};
use crate::repr::FormalVec;
use crate::ring::RatFunc;
use std::collections::BTreeMap;

/// Normal form: coefficients of `B_i^(r) B_j^(n) B_i^(s)` indexed by (r, s).
#[derive(Clone, Debug, PartialEq)]
pub struct SerreExpr {
    pub i: usize,
    pub j: usize,
    pub n: i64,
    pub e: i64,
    pub coeffs: BTreeMap<(i64, i64), RatFunc>,
}

impl SerreExpr {
    fn zero(i: usize, j: usize, n: i64, e: i64) -> Self {
        SerreExpr { i, j, n, e, coeffs: BTreeMap::new() }
    }

    fn add_term(&mut self, r: i64, s: i64, c: RatFunc) {
        if c.is_zero() || r < 0 || s < 0 {
            return;
        }
        let entry = self.coeffs.entry((r, s)).or_insert_with(RatFunc::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&(r, s));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, f: &RatFunc) -> SerreExpr {
        let mut out = Self::zero(self.i, self.j, self.n, self.e);
        for ((r, s), c) in &self.coeffs {
            out.add_term(*r, *s, c * f);
        }
        out
    }

    pub fn add(&self, rhs: &SerreExpr) -> SerreExpr {
        let mut out = self.clone();
        for ((r, s), c) in &rhs.coeffs {
            out.add_term(*r, *s, c.clone());
        }
        out
    }

    /// Left multiplication by `B_i`, using
    /// `B B^(r) = sum_u [r+1] <1;2u> B^(r+1-2u)`.
    pub fn mul_b_left(&self, d: i64) -> SerreExpr {
        let mut out = Self::zero(self.i, self.j, self.n, self.e);
        for ((r, s), c) in &self.coeffs {
            let scale = qint(r + 1, d);
            for u in 0..=((r + 1) / 2) {
                let coef = &(&scale * &qdouble_binom(1, u, d)) * c;
                out.add_term(r + 1 - 2 * u, *s, coef);
            }
        }
        out
    }

    /// Right multiplication by `B_i`.
    pub fn mul_b_right(&self, d: i64) -> SerreExpr {
        let mut out = Self::zero(self.i, self.j, self.n, self.e);
        for ((r, s), c) in &self.coeffs {
            let scale = qint(s + 1, d);
            for u in 0..=((s + 1) / 2) {
                let coef = &(&scale * &qdouble_binom(1, u, d)) * c;
                out.add_term(*r, s + 1 - 2 * u, coef);
            }
        }
        out
    }

    /// Applies the element to a formal highest-weight vector.
    pub fn apply(&self, ctx: &ICtx<'_>, v: &FormalVec) -> FormalVec {
        let mut out = FormalVec::zero();
        for ((r, s), c) in &self.coeffs {
            let x = ctx.b_balanced(self.i, *s, v);
            let x = if ctx.idatum.tau[self.j] == self.j {
                ctx.b_balanced(self.j, self.n, &x)
            } else {
                ctx.b_plain(self.j, self.n, &x)
            };
            let x = ctx.b_balanced(self.i, *r, &x);
            out = out.add(&x.scale(c));
        }
        out
    }
}

/// Closed form of `y_(i,j;n,m,e)`.
pub fn higher_serre_closed(
    i: usize,
    j: usize,
    n: i64,
    m: i64,
    e: i64,
    a_ij: i64,
    d: i64,
) -> SerreExpr {
    assert!(n > 0 && (e == 1 || e == -1));
    let mut out = SerreExpr::zero(i, j, n, e);
    if m < 0 {
        return out;
    }
    let w = m + n * a_ij;
    for t in 0..=(m / 2) {
        for r in 0..=(m - 2 * t) {
            let s = m - 2 * t - r;
            let sign = if r % 2 == 0 { RatFunc::one() } else { RatFunc::from_int(-1) };
            let power = RatFunc::q_power(d * (-e * (w - 1) * (r + t)));
            let c = &(&sign * &power) * &qdouble_binom(w, t, d);
            out.add_term(r, s, c);
        }
    }
    out
}

/// `y_(i,j;n,m,e)` built from the recursion; the base cases are
/// `y_(n,m) = 0` for `m < 0` and `y_(n,0) = B_j^(n)`.
pub fn higher_serre_recursive(
    i: usize,
    j: usize,
    n: i64,
    m: i64,
    e: i64,
    a_ij: i64,
    d: i64,
) -> SerreExpr {
    assert!(n > 0 && (e == 1 || e == -1));
    if m < 0 {
        return SerreExpr::zero(i, j, n, e);
    }
    let mut prev = SerreExpr::zero(i, j, n, e); // y_(n,-1)
    let mut cur = SerreExpr::zero(i, j, n, e); // y_(n,0) = B_j^(n)
    cur.add_term(0, 0, RatFunc::one());
    for mm in 0..m {
        // -[mm+1] y_(mm+1) = q^(-e(2mm+n a)) B y_mm - y_mm B
        //                    - [mm + n a - 1] q^(-e(2mm + n a - 1)) y_(mm-1)
        let w = 2 * mm + n * a_ij;
        let lhs = cur
            .mul_b_left(d)
            .scale(&RatFunc::q_power(d * (-e * w)))
            .add(&cur.mul_b_right(d).scale(&RatFunc::from_int(-1)));
        let tail = prev.scale(&(&qint(mm + n * a_ij - 1, d) * &RatFunc::q_power(d * (-e * (w - 1)))));
        let next = lhs.sub_expr(&tail).scale(&(&RatFunc::from_int(-1) / &qint(mm + 1, d)));
        prev = cur;
        cur = next;
    }
    cur
}

impl SerreExpr {
    fn sub_expr(&self, rhs: &SerreExpr) -> SerreExpr {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }
}

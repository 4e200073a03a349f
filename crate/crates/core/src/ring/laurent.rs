//! Laurent polynomials in one variable `q` with arbitrary-precision integer
//! coefficients, i.e. elements of Z[q, q^-1].
//!
//! The representation is dense: a lowest exponent together with a coefficient
//! vector. Invariant: the first and last stored coefficients are nonzero, and
//! the zero polynomial is the empty vector with `low = 0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::from_term(BigInt::one(), 0)
    }

    /// The monomial `c * q^e`.
    pub fn from_term(c: BigInt, e: i64) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { low: e, coeffs: vec![c] }
        }
    }

    pub fn q_power(e: i64) -> Self {
        LaurentPoly::from_term(BigInt::one(), e)
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_term(BigInt::from(n), 0)
    }

    /// Builds from a list of `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(terms: &[(i64, BigInt)]) -> Self {
        let mut r = LaurentPoly::zero();
        for (e, c) in terms {
            r = &r + &LaurentPoly::from_term(c.clone(), *e);
        }
        r
    }

    fn normalize(mut self) -> Self {
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient. Zero polynomial reports 0.
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient. Zero polynomial reports 0.
    pub fn high_exp(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        let idx = (e - self.low) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates over `(exponent, coefficient)` pairs of nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// gcd of all coefficients (non-negative); 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides all coefficients exactly by `c`; panics if not exact.
    pub fn divide_content(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero());
        LaurentPoly {
            low: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (d, r) = num_integer::Integer::div_rem(a, c);
                    assert!(r.is_zero(), "divide_content not exact");
                    d
                })
                .collect(),
        }
    }

    /// Substitutes `q -> q^d`.
    pub fn substitute_power(&self, d: i64) -> Self {
        assert!(d > 0);
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * d as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d as usize] = c.clone();
        }
        LaurentPoly { low: self.low * d, coeffs }.normalize()
    }

    /// Exact evaluation at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `f(q^-1)` (bar involution on the coefficient ring).
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high_exp(), coeffs }.normalize()
    }

    /// The ordinary-polynomial part: clears `q`-powers so the lowest exponent
    /// is zero. Returns `(poly_with_low_0, original_low)`.
    pub fn clear_low(&self) -> (LaurentPoly, i64) {
        (self.shift(-self.low), self.low)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // high to low reads naturally
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if c.is_positive() && !first {
                write!(f, " + ")?;
            } else if c.is_negative() {
                write!(f, "{}", if first { "-" } else { " - " })?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().max(rhs.high_exp());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            coeffs[(e - low) as usize] += c;
        }
        for (e, c) in rhs.terms() {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly { low, coeffs }.normalize()
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly { low: self.low + rhs.low, coeffs }.normalize()
    }
}

/// Polynomial division over Q for polynomials with `low >= 0`, returning the
/// quotient only when the division is exact over Z after clearing contents is
/// not required; callers use [`div_exact`] for honest exact division.
///
/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a = q*b + r` with all
/// arithmetic over Z.
fn pseudo_rem(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.low >= 0 && b.low >= 0 && !b.is_zero());
    let mut r = a.clone();
    let db = b.high_exp();
    let lb = b.leading_coeff();
    while !r.is_zero() && r.high_exp() >= db {
        let shift = r.high_exp() - db;
        let lr = r.leading_coeff();
        r = &r.scale(&lb) - &b.scale(&lr).shift(shift);
    }
    r
}

/// gcd in Z[q] of the `low >= 0` parts, primitive with positive leading
/// coefficient. Contents are not included.
fn primitive_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let prim = |p: &LaurentPoly| {
        let c = p.content();
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            p.divide_content(&c)
        }
    };
    let mut a = prim(&a.clear_low().0);
    let mut b = prim(&b.clear_low().0);
    if a.is_zero() {
        return fix_sign(b);
    }
    if b.is_zero() {
        return fix_sign(a);
    }
    if a.high_exp() < b.high_exp() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = prim(&pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    fix_sign(a)
}

fn fix_sign(p: LaurentPoly) -> LaurentPoly {
    if p.leading_coeff().is_negative() {
        -&p
    } else {
        p
    }
}

/// gcd in Z[q] including integer contents, normalized primitive-positive
/// times the content gcd. `gcd(0,0) = 0`.
pub fn int_poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return fix_sign(b.clear_low().0);
    }
    if b.is_zero() {
        return fix_sign(a.clear_low().0);
    }
    let cg = num_integer::Integer::gcd(&a.content(), &b.content());
    primitive_gcd(a, b).scale(&cg)
}

/// Exact division in Z[q,q^-1]; panics if not exact. Used where exactness is
/// guaranteed by construction.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return LaurentPoly::zero();
    }
    let (an, alow) = a.clear_low();
    let (bn, blow) = b.clear_low();
    let mut r = an;
    let db = bn.high_exp();
    let lb = bn.leading_coeff();
    let mut q_terms: Vec<(i64, BigInt)> = Vec::new();
    while !r.is_zero() && r.high_exp() >= db {
        let shift = r.high_exp() - db;
        let (c, rem) = num_integer::Integer::div_rem(&r.leading_coeff(), &lb);
        assert!(rem.is_zero(), "div_exact: leading coefficient not divisible");
        q_terms.push((shift, c.clone()));
        r = &r - &bn.scale(&c).shift(shift);
    }
    assert!(r.is_zero(), "div_exact: nonzero remainder");
    LaurentPoly::from_terms(&q_terms).shift(alow - blow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            &terms.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn arithmetic_basics() {
        let two = lp(&[(1, 1), (-1, 1)]); // q + q^-1
        let sq = &two * &two;
        assert_eq!(sq, lp(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(&sq - &sq, LaurentPoly::zero());
        assert_eq!(two.eval_one(), BigInt::from(2));
        assert_eq!(two.bar(), two);
    }

    #[test]
    fn gcd_and_division() {
        // (q^2 - 1) = (q-1)(q+1)
        let a = lp(&[(2, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        let g = int_poly_gcd(&a, &b);
        assert_eq!(g, b);
        assert_eq!(div_exact(&a, &b), lp(&[(1, 1), (0, -1)]));
        // contents participate
        let g2 = int_poly_gcd(&lp(&[(0, 4)]), &lp(&[(0, 6)]));
        assert_eq!(g2, lp(&[(0, 2)]));
    }

    #[test]
    fn substitute_and_shift() {
        let p = lp(&[(1, 1), (-1, -1)]); // q - q^-1
        assert_eq!(p.substitute_power(2), lp(&[(2, 1), (-2, -1)]));
        assert_eq!(p.shift(3).low_exp(), 2);
    }
}

//! Rational functions in `q` over the rationals, stored as reduced fractions
//! of integer Laurent polynomials.
//!
//! Canonical form: the denominator lies in Z[q] with lowest exponent 0 and
//! positive leading coefficient, and the fraction is fully reduced over Z
//! (polynomial gcd 1 and coprime integer contents). This makes representatives
//! unique, so equality-to-zero tests are structural.

use super::cyclo::CycloElem;
use super::laurent::{div_exact, int_poly_gcd, LaurentPoly};
use crate::error::RingError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn q_power(e: i64) -> Self {
        RatFunc::from_laurent(LaurentPoly::q_power(e))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        RatFunc::new(
            LaurentPoly::from_term(r.numer().clone(), 0),
            LaurentPoly::from_term(r.denom().clone(), 0),
        )
    }

    /// Builds `num/den` in canonical form. Panics on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "RatFunc with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        // clear q-powers: all of them go to the numerator side
        let (mut n, nlow) = num.clear_low();
        let (mut d, dlow) = den.clear_low();
        let g = int_poly_gcd(&n, &d);
        if !g.is_one() {
            n = div_exact(&n, &g);
            d = div_exact(&d, &g);
        }
        if d.leading_coeff().is_negative() {
            n = -&n;
            d = -&d;
        }
        RatFunc { num: n.shift(nlow - dlow), den: d }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// True iff the value lies in Z[q,q^-1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<RatFunc, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    /// Substitutes `q -> q^d` (for root-length twists).
    pub fn substitute_power(&self, d: i64) -> Self {
        RatFunc::new(self.num.substitute_power(d), self.den.substitute_power(d))
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        RatFunc::new(self.num.bar(), self.den.bar())
    }

    /// Exact evaluation at `q = 1`; errors when the reduced denominator
    /// vanishes there.
    pub fn specialize_unity(&self) -> Result<BigRational, RingError> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(RingError::PoleAtUnity);
        }
        Ok(BigRational::new(self.num.eval_one(), d))
    }

    /// Exact reduction into Q(zeta_l): errors when the reduced denominator is
    /// divisible by the l-th cyclotomic polynomial (the value is outside the
    /// local ring at that prime of Z[q,q^-1]).
    pub fn reduce_mod_cyclotomic(&self, level: u32) -> Result<CycloElem, RingError> {
        let n = CycloElem::from_laurent(&self.num, level);
        let d = CycloElem::from_laurent(&self.den, level);
        if d.is_zero() {
            return Err(RingError::NotInLocalRing { level });
        }
        Ok(&n * &d.inv())
    }

    /// Membership certificate for the localization of Z[q,q^-1] at the
    /// multiplicative set generated by `q^a + q^-a`: strips from the reduced
    /// denominator every irreducible factor of any `q^(2a) + 1` with
    /// `2a` up to twice the denominator degree, and accepts iff a constant
    /// remains.
    pub fn is_in_a2(&self) -> bool {
        let mut d = self.den.clone();
        if d.high_exp() == 0 {
            return true;
        }
        let bound = 2 * d.high_exp().max(1);
        for a in 1..=bound {
            let f = &LaurentPoly::q_power(2 * a) + &LaurentPoly::one();
            loop {
                let g = int_poly_gcd(&d, &f);
                if g.high_exp() == 0 {
                    break;
                }
                d = div_exact(&d, &g);
                if d.high_exp() == 0 {
                    return true;
                }
            }
        }
        d.high_exp() == 0
    }

    /// Field arithmetic dispatcher mirroring the batch-check interface.
    pub fn arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc, RingError> {
        Ok(match op {
            ArithOp::Add => a + b,
            ArithOp::Sub => a - b,
            ArithOp::Mul => a * b,
            ArithOp::Div => {
                if b.is_zero() {
                    return Err(RingError::DivisionByZero);
                }
                a / b
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-reduce before multiplying to keep degrees down
        let g1 = int_poly_gcd(&self.num, &rhs.den);
        let g2 = int_poly_gcd(&rhs.num, &self.den);
        let n1 = if g1.is_one() { self.num.clone() } else { div_exact(&self.num, &g1) };
        let d2 = if g1.is_one() { rhs.den.clone() } else { div_exact(&rhs.den, &g1) };
        let n2 = if g2.is_one() { rhs.num.clone() } else { div_exact(&rhs.num, &g2) };
        let d1 = if g2.is_one() { self.den.clone() } else { div_exact(&self.den, &g2) };
        RatFunc::new(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "RatFunc division by zero");
        self * &RatFunc::new(rhs.den.clone(), rhs.num.clone())
    }
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::cyclo::cyclo_poly;

    fn q() -> RatFunc {
        RatFunc::q_power(1)
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let r = &q() * &RatFunc::q_power(-1);
        assert!(r.is_one());
    }

    #[test]
    fn self_division_is_one() {
        let f = &q() - &RatFunc::q_power(-1);
        assert!((&f / &f).is_one());
    }

    #[test]
    fn two_bracket_square() {
        let two = &q() + &RatFunc::q_power(-1);
        let sq = &two * &two;
        let expect = RatFunc::from_laurent(LaurentPoly::from_terms(&[
            (2, big(1)),
            (0, big(2)),
            (-2, big(1)),
        ]));
        assert_eq!(sq, expect);
    }

    #[test]
    fn canonical_constant_fraction() {
        // 1/2 stays as integer numerator over positive integer denominator
        let half = RatFunc::from_rational(&BigRational::new(big(1), big(2)));
        assert_eq!(half.den(), &LaurentPoly::from_int(2));
        let one = &half + &half;
        assert!(one.is_one());
    }

    #[test]
    fn specialize_unity_reduces_first() {
        // (q - q^-1)/(q^2 - q^-2) reduces to 1/(q + q^-1), value 1/2
        let n = &q() - &RatFunc::q_power(-1);
        let d = &RatFunc::q_power(2) - &RatFunc::q_power(-2);
        let f = &n / &d;
        assert_eq!(
            f.specialize_unity().unwrap(),
            BigRational::new(big(1), big(2))
        );
    }

    #[test]
    fn pole_at_unity_detected() {
        let f = &RatFunc::one() / &(&q() - &RatFunc::one());
        assert!(matches!(f.specialize_unity(), Err(RingError::PoleAtUnity)));
    }

    #[test]
    fn a2_certificate() {
        let two = &q() + &RatFunc::q_power(-1); // q + q^-1 = q^-1 (q^2+1)
        assert!((&RatFunc::one() / &two).is_in_a2());
        let three = &(&RatFunc::q_power(2) + &RatFunc::one()) + &RatFunc::q_power(-2);
        assert!(!(&RatFunc::one() / &three).is_in_a2());
    }

    #[test]
    fn cyclotomic_reduction_of_fraction() {
        // [2] = q + q^-1 at a primitive cube root: zeta + zeta^2 = -1
        let two = &q() + &RatFunc::q_power(-1);
        let r = two.reduce_mod_cyclotomic(3).unwrap();
        assert_eq!(r, CycloElem::from_rational(&BigRational::from(big(-1)), 3));
        // 1/[3] has [3] = Phi_3 shifted: pole
        let three = &(&RatFunc::q_power(2) + &RatFunc::one()) + &RatFunc::q_power(-2);
        let f = &RatFunc::one() / &three;
        assert!(matches!(
            f.reduce_mod_cyclotomic(3),
            Err(RingError::NotInLocalRing { level: 3 })
        ));
    }

    #[test]
    fn cyclo_poly_examples() {
        assert_eq!(cyclo_poly(2), LaurentPoly::from_terms(&[(1, big(1)), (0, big(1))]));
        assert_eq!(
            cyclo_poly(3),
            LaurentPoly::from_terms(&[(2, big(1)), (1, big(1)), (0, big(1))])
        );
        assert_eq!(
            cyclo_poly(5),
            LaurentPoly::from_terms(&[(4, big(1)), (3, big(1)), (2, big(1)), (1, big(1)), (0, big(1))])
        );
        assert_eq!(cyclo_poly(6), LaurentPoly::from_terms(&[(2, big(1)), (1, big(-1)), (0, big(1))]));
    }
}

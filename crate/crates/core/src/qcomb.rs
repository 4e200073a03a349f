//! q-integers, q-binomial coefficients, and the q-double binomial
//! coefficients
//!
//! ```text
//! <m;2k> = [m][m-2]...[m-2k+2] / ([2][4]...[2k])
//!        = prod_{s=0}^{k-1} (q^(m-2s) - q^(-m+2s)) / prod_{s=1}^{k} (q^(2s) - q^(-2s))
//! ```
//!
//! together with their classical limits at `q = 1` and the evaluation law at
//! an odd root of unity (peel off the level-`l` part classically, evaluate the
//! remainder cyclotomically).

use crate::error::RingError;
use crate::ring::{big, CycloElem, LaurentPoly, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `[n]` in the variable `q^d`: `(q^(dn) - q^(-dn)) / (q^d - q^(-d))`.
pub fn qint(n: i64, d: i64) -> RatFunc {
    assert!(d > 0);
    if n == 0 {
        return RatFunc::zero();
    }
    let m = n.abs();
    // q^(d(m-1)) + q^(d(m-3)) + ... + q^(-d(m-1))
    let terms: Vec<(i64, BigInt)> = (0..m).map(|j| (d * (m - 1 - 2 * j), big(1))).collect();
    let p = RatFunc::from_laurent(LaurentPoly::from_terms(&terms));
    if n < 0 {
        -&p
    } else {
        p
    }
}

/// `[m]! = [1][2]...[m]` in `q^d`.
pub fn qfactorial(m: i64, d: i64) -> RatFunc {
    assert!(m >= 0);
    let mut r = RatFunc::one();
    for j in 1..=m {
        r = &r * &qint(j, d);
    }
    r
}

/// Gaussian binomial `[n; k]` in `q^d`, for any integer `n` and `k >= 0`
/// (zero for `k < 0`). Always a Laurent polynomial.
pub fn qbinom(n: i64, k: i64, d: i64) -> RatFunc {
    if k < 0 {
        return RatFunc::zero();
    }
    let mut num = RatFunc::one();
    for j in 0..k {
        num = &num * &qint(n - j, d);
    }
    &num / &qfactorial(k, d)
}

/// q-double binomial `<m;2k>` in `q^d`; zero for `k < 0`, one for `k = 0`.
pub fn qdouble_binom(m: i64, k: i64, d: i64) -> RatFunc {
    if k < 0 {
        return RatFunc::zero();
    }
    if k == 0 {
        return RatFunc::one();
    }
    let mut num = RatFunc::one();
    for s in 0..k {
        let a = m - 2 * s;
        let f = &RatFunc::q_power(d * a) - &RatFunc::q_power(-d * a);
        num = &num * &f;
    }
    let mut den = RatFunc::one();
    for s in 1..=k {
        let f = &RatFunc::q_power(d * 2 * s) - &RatFunc::q_power(-d * 2 * s);
        den = &den * &f;
    }
    &num / &den
}

/// Classical double binomial: `m (m-2) ... (m-2k+2) / (2 * 4 * ... * 2k)`,
/// an element of Z[1/2].
pub fn classical_double_binom(m: i64, k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    for s in 0..k {
        num *= big(m - 2 * s);
    }
    let mut den = BigInt::one();
    for s in 1..=k {
        den *= big(2 * s);
    }
    BigRational::new(num, den)
}

/// Ordinary binomial coefficient for integer `n` (zero for `k < 0`).
pub fn classical_binom(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= big(n - j);
    }
    let mut den = BigInt::one();
    for j in 1..=k {
        den *= big(j);
    }
    num / den
}

/// Image of `<n;2k>` in `q^d` at a primitive l-th root of unity (`l` odd,
/// coprime to `d`), computed through the factorization law: write
/// `n = n0 + n1 l` with `n0` in `{0, 2, ..., 2l-2}` and `k = k0 + k1 l` with
/// `k0` in `{0, ..., l-1}`; then the image is the classical `<n1;2k1>` times
/// the cyclotomic image of `<n0;2k0>`.
pub fn qdouble_binom_at_root(n: i64, k: i64, l: u32, d: i64) -> Result<CycloElem, RingError> {
    assert!(l >= 3 && l % 2 == 1, "level must be odd and >= 3");
    assert!(d > 0 && gcd_i64(l as i64, d) == 1, "level must be coprime to the root length");
    if k < 0 {
        return Ok(CycloElem::zero(l));
    }
    let ll = l as i64;
    let n0 = if n.rem_euclid(2) == 0 {
        n.rem_euclid(2 * ll)
    } else {
        (n - ll).rem_euclid(2 * ll)
    };
    let n1 = (n - n0) / ll;
    let k0 = k.rem_euclid(ll);
    let k1 = (k - k0) / ll;
    let classical = classical_double_binom(n1, k1);
    let cyc = qdouble_binom(n0, k0, d).reduce_mod_cyclotomic(l)?;
    Ok(&CycloElem::from_rational(&classical, l) * &cyc)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

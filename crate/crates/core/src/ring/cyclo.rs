//! The cyclotomic field Q(zeta_l), realized as Q[q]/(Phi_l) with canonical
//! reduced representatives of degree < deg Phi_l.
//!
//! Values such as 1/2 occur (odd-level double binomials specialize to
//! half-integers), so coefficients are rationals, not algebraic integers.

use super::laurent::{div_exact, LaurentPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Mutex;

/// The l-th cyclotomic polynomial, computed by exact division of `q^l - 1`
/// by the cyclotomic polynomials of the proper divisors of `l`.
pub fn cyclo_poly(l: u32) -> LaurentPoly {
    assert!(l >= 1);
    static CACHE: Mutex<Option<HashMap<u32, LaurentPoly>>> = Mutex::new(None);
    let mut guard = CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    fn compute(cache: &mut HashMap<u32, LaurentPoly>, l: u32) -> LaurentPoly {
        if let Some(p) = cache.get(&l) {
            return p.clone();
        }
        let mut p = &LaurentPoly::q_power(l as i64) - &LaurentPoly::one();
        for d in 1..l {
            if l % d == 0 {
                let fd = compute(cache, d);
                p = div_exact(&p, &fd);
            }
        }
        cache.insert(l, p.clone());
        p
    }
    compute(cache, l)
}

#[derive(Clone, PartialEq, Eq)]
pub struct CycloElem {
    level: u32,
    /// degree < deg Phi_l, trailing zeros trimmed
    coeffs: Vec<BigRational>,
}

impl CycloElem {
    pub fn zero(level: u32) -> Self {
        assert!(level >= 2);
        CycloElem { level, coeffs: Vec::new() }
    }

    pub fn one(level: u32) -> Self {
        CycloElem::from_rational(&BigRational::one(), level)
    }

    pub fn from_rational(r: &BigRational, level: u32) -> Self {
        assert!(level >= 2);
        if r.is_zero() {
            CycloElem::zero(level)
        } else {
            CycloElem { level, coeffs: vec![r.clone()] }
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// If the element is a rational number, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn trim(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    /// Image of a Laurent polynomial under `q -> zeta_l`; negative powers use
    /// `zeta^-1 = zeta^(l-1)`.
    pub fn from_laurent(p: &LaurentPoly, level: u32) -> Self {
        assert!(level >= 2);
        let l = level as i64;
        let mut acc = vec![BigRational::zero(); level as usize];
        for (e, c) in p.terms() {
            let r = e.rem_euclid(l) as usize;
            acc[r] += BigRational::from(c.clone());
        }
        CycloElem { level, coeffs: acc }.reduce()
    }

    /// Reduces the coefficient vector modulo Phi_l.
    fn reduce(mut self) -> Self {
        let phi = cyclo_poly(self.level);
        let d = phi.high_exp() as usize;
        if self.coeffs.len() <= d {
            return self.trim();
        }
        // monic Phi_l: subtract multiples from the top
        let phi_coeffs: Vec<BigRational> = (0..=d as i64)
            .map(|e| BigRational::from(phi.coeff(e)))
            .collect();
        let mut c = self.coeffs.clone();
        for i in (d..c.len()).rev() {
            let lead = c[i].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, pc) in phi_coeffs.iter().enumerate() {
                let idx = i - d + j;
                let t = &lead * pc;
                c[idx] -= t;
            }
        }
        c.truncate(d);
        self.coeffs = c;
        self.trim()
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x];
    /// panics on zero (callers check membership first).
    pub fn inv(&self) -> CycloElem {
        assert!(!self.is_zero(), "inverse of zero cyclotomic element");
        // extended euclid: a*self + b*Phi = gcd = constant (Phi irreducible)
        let phi = cyclo_poly(self.level);
        let d = phi.high_exp() as usize;
        let mut r0: Vec<BigRational> = (0..=d as i64).map(|e| BigRational::from(phi.coeff(e))).collect();
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        let trim = |v: &mut Vec<BigRational>| {
            while matches!(v.last(), Some(c) if c.is_zero()) {
                v.pop();
            }
        };
        trim(&mut r1);
        while r1.len() > 1 {
            // divide r0 by r1
            let mut q = vec![BigRational::zero(); r0.len().saturating_sub(r1.len()) + 1];
            let mut rem = r0.clone();
            let lead1 = r1.last().unwrap().clone();
            while rem.len() >= r1.len() && !rem.is_empty() {
                let shift = rem.len() - r1.len();
                let c = rem.last().unwrap() / &lead1;
                q[shift] = c.clone();
                for (j, rc) in r1.iter().enumerate() {
                    let t = &c * rc;
                    rem[shift + j] -= t;
                }
                trim(&mut rem);
            }
            // s_new = s0 - q*s1
            let mut snew = s0.clone();
            let prod_len = q.len() + s1.len();
            snew.resize(snew.len().max(prod_len.saturating_sub(1)), BigRational::zero());
            for (i, qc) in q.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    let t = qc * sc;
                    if snew.len() <= i + j {
                        snew.resize(i + j + 1, BigRational::zero());
                    }
                    snew[i + j] -= t;
                }
            }
            trim(&mut snew);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = snew;
        }
        assert!(r1.len() == 1, "cyclotomic polynomial not coprime to nonzero element");
        let c = r1[0].clone();
        let coeffs = s1.into_iter().map(|x| x / &c).collect();
        CycloElem { level: self.level, coeffs }.reduce()
    }

    /// `zeta_l -> zeta_l^k` for `gcd(k, l) = 1`; `k = 1` is the identity.
    pub fn galois(&self, k: i64) -> CycloElem {
        let l = self.level as i64;
        let mut acc = LaurentPoly::zero();
        // lift to a polynomial, substitute, re-reduce; coefficients are
        // rational so route through a common denominator
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = num_integer::Integer::lcm(&denom, c.denom());
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            let n = c.numer() * (&denom / c.denom());
            let e = (i as i64 * k).rem_euclid(l);
            acc = &acc + &LaurentPoly::from_term(n, e);
        }
        let red = CycloElem::from_laurent(&acc, self.level);
        let scale = CycloElem::from_rational(
            &BigRational::new(BigInt::one(), denom),
            self.level,
        );
        &red * &scale
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", c)?;
            } else if i == 1 {
                write!(f, "({})*z", c)?;
            } else {
                write!(f, "({})*z^{}", c, i)?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.level, rhs.level, "cyclotomic level mismatch");
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        CycloElem { level: self.level, coeffs }.trim()
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self + &(-rhs)
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.level, rhs.level, "cyclotomic level mismatch");
        if self.is_zero() || rhs.is_zero() {
            return CycloElem::zero(self.level);
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        CycloElem { level: self.level, coeffs }.reduce()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_cubed_is_one() {
        let z = CycloElem::from_laurent(&LaurentPoly::q_power(1), 3);
        let z3 = &(&z * &z) * &z;
        assert!(z3.is_one());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = CycloElem::from_laurent(&LaurentPoly::q_power(1), 5);
        let e = &z + &CycloElem::one(5); // 1 + zeta_5
        assert!((&e * &e.inv()).is_one());
    }

    #[test]
    fn sum_of_all_powers_vanishes() {
        let mut s = CycloElem::zero(5);
        for e in 0..5 {
            s = &s + &CycloElem::from_laurent(&LaurentPoly::q_power(e), 5);
        }
        assert!(s.is_zero());
    }

    #[test]
    fn galois_fixes_rationals() {
        let half = CycloElem::from_rational(
            &BigRational::new(BigInt::from(1), BigInt::from(2)),
            3,
        );
        assert_eq!(half.galois(2), half);
    }
}

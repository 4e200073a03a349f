//! Independent dimension oracles for finite-type modules: positive-root
//! generation, Kostant partition counts, the Weyl dimension formula, and
//! Freudenthal's multiplicity recursion.
//!
//! These never touch the Gram-matrix construction; tests compare the two
//! routes.

use crate::rootdata::RootDatum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Positive roots in simple-root coordinates, generated by closing the
/// simples under simple reflections. Finite type only.
pub fn positive_roots(d: &RootDatum) -> Vec<Vec<i64>> {
    assert!(d.finite);
    let r = d.rank();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut frontier: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|k| i64::from(k == i)).collect())
        .collect();
    while let Some(b) = frontier.pop() {
        if roots.contains(&b) {
            continue;
        }
        roots.push(b.clone());
        for i in 0..r {
            // <coroot_i, beta> in root coordinates
            let pair: i64 = (0..r).map(|j| b[j] * d.cartan[i][j]).sum();
            let mut nb = b.clone();
            nb[i] -= pair;
            if nb.iter().all(|&x| x >= 0) && nb.iter().any(|&x| x > 0) && !roots.contains(&nb) {
                frontier.push(nb);
            }
        }
    }
    roots.sort();
    roots
}

/// Kostant partition count: the number of ways to write `c` (root
/// coordinates) as a nonnegative combination of positive roots.
pub fn kostant_count(positive: &[Vec<i64>], c: &[i64]) -> BigInt {
    fn rec(
        positive: &[Vec<i64>],
        idx: usize,
        c: &Vec<i64>,
        memo: &mut HashMap<(usize, Vec<i64>), BigInt>,
    ) -> BigInt {
        if c.iter().all(|&x| x == 0) {
            return BigInt::one();
        }
        if idx == positive.len() {
            return BigInt::zero();
        }
        let key = (idx, c.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = rec(positive, idx + 1, c, memo);
        let mut rem = c.clone();
        loop {
            let mut ok = true;
            for (a, b) in rem.iter_mut().zip(&positive[idx]) {
                *a -= b;
                if *a < 0 {
                    ok = false;
                }
            }
            if !ok {
                break;
            }
            total += rec(positive, idx + 1, &rem, memo);
        }
        memo.insert(key, total.clone());
        total
    }
    let mut memo = HashMap::new();
    rec(positive, 0, &c.to_vec(), &mut memo)
}

/// Symmetric form on the root lattice: `(alpha_i, alpha_j) = eps_i a_ij`.
fn root_form(d: &RootDatum, a: &[i64], b: &[i64]) -> i64 {
    let r = d.rank();
    let mut s = 0;
    for i in 0..r {
        for j in 0..r {
            s += a[i] * d.eps[i] * d.cartan[i][j] * b[j];
        }
    }
    s
}

/// `(lambda, beta)` for a weight `lambda` (X-coordinates) and `beta` in root
/// coordinates: extends the root form by `(lambda, alpha_j) = eps_j
/// <coroot_j, lambda>`.
fn weight_root_form(d: &RootDatum, lambda: &[i64], beta: &[i64]) -> i64 {
    (0..d.rank())
        .map(|j| beta[j] * d.eps[j] * d.coroot_pair(j, lambda))
        .sum()
}

/// All weight multiplicities of `L(lambda)` by Freudenthal's recursion,
/// indexed by root-coordinate defects.
pub fn freudenthal(d: &RootDatum, lambda: &[i64]) -> BTreeMap<Vec<i64>, BigInt> {
    assert!(d.finite);
    let positive = positive_roots(d);
    let r = d.rank();
    let max_depth = d.full_depth(lambda);
    // enumerate candidate defects by height
    let mut mults: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    mults.insert(vec![0; r], BigInt::one());
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![vec![vec![0; r]]];
    for h in 1..=max_depth {
        let mut level: Vec<Vec<i64>> = Vec::new();
        for c in &by_height[(h - 1) as usize] {
            for i in 0..r {
                let mut nc = c.clone();
                nc[i] += 1;
                if !level.contains(&nc) {
                    level.push(nc);
                }
            }
        }
        level.sort();
        let mut kept = Vec::new();
        for c in level {
            // (lambda+rho, lambda+rho) - (mu+rho, mu+rho)
            //   = 2 (lambda + rho, c) - (c, c)   with mu = lambda - c
            let rho_c: i64 = (0..r).map(|j| c[j] * d.eps[j]).sum();
            let denom = 2 * (weight_root_form(d, lambda, &c) + rho_c) - root_form(d, &c, &c);
            if denom == 0 {
                continue;
            }
            let mut rhs = BigInt::zero();
            for alpha in &positive {
                let mut k = 1i64;
                loop {
                    let up: Vec<i64> = c.iter().zip(alpha).map(|(a, b)| a - k * b).collect();
                    if up.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(m) = mults.get(&up) {
                        // (mu + k alpha, alpha)
                        let v = weight_root_form(d, lambda, alpha) - root_form(d, &c, alpha)
                            + k * root_form(d, alpha, alpha);
                        rhs += m * BigInt::from(2 * v);
                    }
                    k += 1;
                }
            }
            let (m, rem) = num_integer::Integer::div_rem(&rhs, &BigInt::from(denom));
            assert!(rem.is_zero(), "Freudenthal recursion not exact");
            if !m.is_zero() {
                mults.insert(c.clone(), m);
                kept.push(c);
            }
        }
        if kept.is_empty() {
            break;
        }
        by_height.push(kept);
    }
    mults
}

/// Total dimension by the Weyl formula.
pub fn weyl_dim(d: &RootDatum, lambda: &[i64]) -> BigInt {
    let positive = positive_roots(d);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for alpha in &positive {
        let rho_a: i64 = (0..d.rank()).map(|j| alpha[j] * d.eps[j]).sum();
        num *= BigInt::from(weight_root_form(d, lambda, alpha) + rho_a);
        den *= BigInt::from(rho_a);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero());
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::catalog;

    #[test]
    fn root_counts() {
        assert_eq!(positive_roots(&catalog("split-A1").unwrap().base).len(), 1);
        assert_eq!(positive_roots(&catalog("split-A2").unwrap().base).len(), 3);
        assert_eq!(positive_roots(&catalog("split-B2").unwrap().base).len(), 4);
        assert_eq!(positive_roots(&catalog("split-G2").unwrap().base).len(), 6);
        assert_eq!(positive_roots(&catalog("split-A3").unwrap().base).len(), 6);
    }

    #[test]
    fn weyl_dims() {
        let a2 = catalog("split-A2").unwrap();
        assert_eq!(weyl_dim(&a2.base, &[1, 1]), BigInt::from(8));
        assert_eq!(weyl_dim(&a2.base, &[1, 0]), BigInt::from(3));
        let g2 = catalog("split-G2").unwrap();
        assert_eq!(weyl_dim(&g2.base, &[1, 0]), BigInt::from(7));
        assert_eq!(weyl_dim(&g2.base, &[0, 1]), BigInt::from(14));
        let b2 = catalog("split-B2").unwrap();
        assert_eq!(weyl_dim(&b2.base, &[1, 0]), BigInt::from(4));
        assert_eq!(weyl_dim(&b2.base, &[0, 1]), BigInt::from(5));
    }

    #[test]
    fn freudenthal_total_matches_weyl() {
        for (name, lam) in [
            ("split-A2", vec![2, 1]),
            ("split-B2", vec![1, 1]),
            ("split-G2", vec![1, 0]),
        ] {
            let d = catalog(name).unwrap();
            let mults = freudenthal(&d.base, &lam);
            let total: BigInt = mults.values().sum();
            assert_eq!(total, weyl_dim(&d.base, &lam), "{}", name);
        }
    }

    #[test]
    fn kostant_matches_verma_shape() {
        // A2 at height 2: contents (1,1): two positive-root partitions
        let d = catalog("split-A2").unwrap();
        let pos = positive_roots(&d.base);
        assert_eq!(kostant_count(&pos, &[1, 1]), BigInt::from(2));
        assert_eq!(kostant_count(&pos, &[2, 1]), BigInt::from(2));
        assert_eq!(kostant_count(&pos, &[0, 0]), BigInt::one());
    }
}

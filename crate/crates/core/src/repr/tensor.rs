//! Tensor products of weight modules with the coproduct action on divided
//! powers:
//!
//! ```text
//! E_i^(n) (v ox w) = sum_{t+s=n} q_i^((t + <coroot_i, wt v>) s)  E_i^(t) v ox E_i^(s) w
//! F_i^(n) (v ox w) = sum_{t+s=n} q_i^((s - <coroot_i, wt w>) t)  F_i^(t) v ox F_i^(s) w
//! K_mu   (v ox w) = q^(<mu, wt v + wt w>) (v ox w)
//! ```

use super::module::{ModVec, WeightModule};
use super::words::Content;
use crate::error::ModuleError;
use crate::ring::RatFunc;
use std::collections::BTreeMap;

/// Coordinates per pair of weight blocks; index `a * dim2 + b` pairs basis
/// vector `a` of the first block with `b` of the second.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TensorVec {
    pub blocks: BTreeMap<(Content, Content), Vec<RatFunc>>,
}

impl TensorVec {
    pub fn zero() -> Self {
        TensorVec { blocks: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|v| v.iter().all(|c| c.is_zero()))
    }

    pub fn insert(&mut self, key: (Content, Content), coords: Vec<RatFunc>) {
        if coords.iter().all(|c| c.is_zero()) {
            return;
        }
        match self.blocks.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coords);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                for (a, b) in e.get_mut().iter_mut().zip(coords) {
                    *a = &*a + &b;
                }
            }
        }
    }

    pub fn add(&self, rhs: &TensorVec) -> TensorVec {
        let mut out = self.clone();
        for (k, v) in &rhs.blocks {
            out.insert(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, f: &RatFunc) -> TensorVec {
        if f.is_zero() {
            return TensorVec::zero();
        }
        TensorVec {
            blocks: self
                .blocks
                .iter()
                .map(|(k, v)| (k.clone(), v.iter().map(|c| c * f).collect()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &TensorVec) -> TensorVec {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }
}

pub struct TensorModule<'a, 'b> {
    pub left: &'a WeightModule<'b>,
    pub right: &'a WeightModule<'b>,
}

impl<'a, 'b> TensorModule<'a, 'b> {
    pub fn new(
        left: &'a WeightModule<'b>,
        right: &'a WeightModule<'b>,
    ) -> Result<Self, ModuleError> {
        if left.datum.name != right.datum.name {
            return Err(ModuleError::DatumMismatch);
        }
        Ok(TensorModule { left, right })
    }

    pub fn pure(&self, v: &ModVec, w: &ModVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for (c1, x) in &v.blocks {
            for (c2, y) in &w.blocks {
                let mut coords = Vec::with_capacity(x.len() * y.len());
                for a in x {
                    for b in y {
                        coords.push(a * b);
                    }
                }
                out.insert((c1.clone(), c2.clone()), coords);
            }
        }
        out
    }

    fn block_vec(module: &WeightModule<'_>, c: &Content, idx: usize) -> ModVec {
        let mut coords = vec![RatFunc::zero(); module.block_dim(c)];
        coords[idx] = RatFunc::one();
        let mut v = ModVec::zero();
        v.blocks.insert(c.clone(), coords);
        v
    }

    pub fn act_e_divided(&self, i: usize, n: i64, v: &TensorVec) -> TensorVec {
        let qi = self.left.datum.qi(i);
        let mut out = TensorVec::zero();
        for ((c1, c2), coords) in &v.blocks {
            let d2 = self.right.block_dim(c2);
            let mu = self.left.datum.coroot_pair(i, &self.left.weight_of(c1));
            for t in 0..=n {
                let s = n - t;
                let coeff = RatFunc::q_power(qi * (t + mu) * s);
                // blockwise images
                let d1 = self.left.block_dim(c1);
                for a in 0..d1 {
                    let ia = Self::block_vec(self.left, c1, a);
                    let ea = self.left.act_e_divided(i, t, &ia);
                    for b in 0..d2 {
                        let x = &coords[a * d2 + b];
                        if x.is_zero() {
                            continue;
                        }
                        let ib = Self::block_vec(self.right, c2, b);
                        let eb = self.right.act_e_divided(i, s, &ib);
                        accumulate(&mut out, &ea, &eb, &(&coeff * x));
                    }
                }
            }
        }
        out
    }

    pub fn act_f_divided(&self, i: usize, n: i64, v: &TensorVec) -> Result<TensorVec, ModuleError> {
        let qi = self.left.datum.qi(i);
        let mut out = TensorVec::zero();
        for ((c1, c2), coords) in &v.blocks {
            let d2 = self.right.block_dim(c2);
            let mup = self.right.datum.coroot_pair(i, &self.right.weight_of(c2));
            for t in 0..=n {
                let s = n - t;
                let coeff = RatFunc::q_power(qi * (s - mup) * t);
                let d1 = self.left.block_dim(c1);
                for a in 0..d1 {
                    let ia = Self::block_vec(self.left, c1, a);
                    let fa = self.left.act_f_divided(i, t, &ia)?;
                    for b in 0..d2 {
                        let x = &coords[a * d2 + b];
                        if x.is_zero() {
                            continue;
                        }
                        let ib = Self::block_vec(self.right, c2, b);
                        let fb = self.right.act_f_divided(i, s, &ib)?;
                        accumulate(&mut out, &fa, &fb, &(&coeff * x));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn act_k(&self, mu: &[i64], v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::zero();
        for ((c1, c2), coords) in &v.blocks {
            let wt1 = self.left.weight_of(c1);
            let wt2 = self.right.weight_of(c2);
            let total: Vec<i64> = wt1.iter().zip(&wt2).map(|(a, b)| a + b).collect();
            let e = self.left.datum.pair(mu, &total);
            out.insert(
                (c1.clone(), c2.clone()),
                coords.iter().map(|c| c * &RatFunc::q_power(e)).collect(),
            );
        }
        out
    }

    /// `K~_i^(sign)` on the tensor product.
    pub fn act_ktilde(&self, i: usize, sign: i64, v: &TensorVec) -> TensorVec {
        let mu: Vec<i64> = self.left.datum.simple_coroots[i]
            .iter()
            .map(|x| x * sign * self.left.datum.qi(i))
            .collect();
        self.act_k(&mu, v)
    }
}

fn accumulate(out: &mut TensorVec, va: &ModVec, vb: &ModVec, scale: &RatFunc) {
    if scale.is_zero() {
        return;
    }
    for (ca, xa) in &va.blocks {
        for (cb, xb) in &vb.blocks {
            let mut coords = Vec::with_capacity(xa.len() * xb.len());
            for a in xa {
                for b in xb {
                    coords.push(&(a * b) * scale);
                }
            }
            out.insert((ca.clone(), cb.clone()), coords);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcomb::qint;
    use crate::repr::module::build_module;
    use crate::rootdata::catalog;

    #[test]
    fn f_on_pure_tensor_matches_formula() {
        // A1, v_1 ox v_1: F (v ox w) = Fv ox w q^(-<a,wt w>)... per formula
        let d = catalog("split-A1").unwrap();
        let m1 = build_module(&d.base, &[1], 1).unwrap();
        let m2 = build_module(&d.base, &[1], 1).unwrap();
        let t = TensorModule::new(&m1, &m2).unwrap();
        let v = t.pure(&m1.highest_vector(), &m2.highest_vector());
        let fv = t.act_f_divided(0, 1, &v).unwrap();
        // t=1, s=0: coeff q^((0 - 1) * 1) = q^-1 on Fv ox w; t=0, s=1: coeff 1
        let mut expect = TensorVec::zero();
        expect.insert((vec![1], vec![0]), vec![RatFunc::q_power(-1)]);
        expect.insert((vec![0], vec![1]), vec![RatFunc::one()]);
        assert_eq!(fv, expect);
    }

    #[test]
    fn e2_on_tensor_only_middle_survives() {
        // E^(2) on (Fv ox Fw), both lambda = 1: lands on v ox w with
        // coefficient q^((1 + <a, -1>) * 1) = q^0 = 1
        let d = catalog("split-A1").unwrap();
        let m1 = build_module(&d.base, &[1], 1).unwrap();
        let m2 = build_module(&d.base, &[1], 1).unwrap();
        let t = TensorModule::new(&m1, &m2).unwrap();
        let fv = m1.act_f(0, &m1.highest_vector()).unwrap();
        let fw = m2.act_f(0, &m2.highest_vector()).unwrap();
        let x = t.pure(&fv, &fw);
        let e2 = t.act_e_divided(0, 2, &x);
        let mut expect = TensorVec::zero();
        expect.insert((vec![0], vec![0]), vec![RatFunc::one()]);
        assert_eq!(e2, expect);
    }

    #[test]
    fn k_acts_by_total_weight() {
        let d = catalog("split-A1").unwrap();
        let m1 = build_module(&d.base, &[2], 2).unwrap();
        let m2 = build_module(&d.base, &[1], 1).unwrap();
        let t = TensorModule::new(&m1, &m2).unwrap();
        let v = t.pure(&m1.highest_vector(), &m2.highest_vector());
        let kv = t.act_k(&d.base.simple_coroots[0], &v);
        assert_eq!(kv, v.scale(&RatFunc::q_power(3)));
    }

    #[test]
    fn coassociativity_spot_check() {
        // (F ox 1) then E recovers [E, F] behaviour through the coproduct:
        // E F (v ox w) - F E (v ox w) = [wt] (v ox w) on the total weight
        let d = catalog("split-A1").unwrap();
        let m1 = build_module(&d.base, &[2], 2).unwrap();
        let m2 = build_module(&d.base, &[1], 1).unwrap();
        let t = TensorModule::new(&m1, &m2).unwrap();
        let v = t.pure(&m1.highest_vector(), &m2.highest_vector());
        let ef = t.act_e_divided(0, 1, &t.act_f_divided(0, 1, &v).unwrap());
        let fe = t.act_f_divided(0, 1, &t.act_e_divided(0, 1, &v)).unwrap();
        let comm = ef.sub(&fe);
        assert_eq!(comm, v.scale(&qint(3, 1)));
    }
}

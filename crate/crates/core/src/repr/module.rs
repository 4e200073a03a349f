//! Exact models of highest-weight modules `L(lambda)`.
//!
//! Construction is breadth-first from the highest-weight vector: candidates
//! for a weight space are the `F_i`-images of the bases one level up, and a
//! basis is chosen greedily in lexicographic word order, keeping a word
//! whenever it enlarges the rank of the contravariant Gram matrix. The Gram
//! kernel is exactly the maximal submodule, so the result models the
//! irreducible quotient. `E`-actions are found by commuting `E` through the
//! F-words and solving against the Gram matrix.

use super::linalg::{solve, RMatrix};
use super::words::{content_of, Content, FormalVec, Word, WordContext};
use crate::error::ModuleError;
use crate::qcomb::qfactorial;
use crate::ring::{CycloElem, RatFunc};
use crate::rootdata::RootDatum;
use num_rational::BigRational;
use std::cell::RefCell;
use std::collections::BTreeMap;

pub struct WeightSpace {
    pub basis: Vec<Word>,
    pub gram: RMatrix,
}

/// A vector in the module, stored per weight block in basis coordinates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModVec {
    pub blocks: BTreeMap<Content, Vec<RatFunc>>,
}

impl ModVec {
    pub fn zero() -> Self {
        ModVec { blocks: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|b| b.iter().all(|c| c.is_zero()))
    }

    fn insert(&mut self, c: Content, coords: Vec<RatFunc>) {
        if coords.iter().any(|x| !x.is_zero()) {
            match self.blocks.entry(c) {
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
    }

    pub fn add(&self, rhs: &ModVec) -> ModVec {
        let mut out = self.clone();
        for (c, coords) in &rhs.blocks {
            out.insert(c.clone(), coords.clone());
        }
        out
    }

    pub fn scale(&self, f: &RatFunc) -> ModVec {
        if f.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            blocks: self
                .blocks
                .iter()
                .map(|(c, v)| (c.clone(), v.iter().map(|x| x * f).collect()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ModVec) -> ModVec {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }
}

pub struct WeightModule<'a> {
    pub datum: &'a RootDatum,
    pub lambda: Vec<i64>,
    pub depth: i64,
    /// True when the window provably contains the whole module, so lowering
    /// off the bottom edge is honestly zero.
    pub complete: bool,
    pub ctx: WordContext<'a>,
    pub spaces: BTreeMap<Content, WeightSpace>,
    // (i, content) -> columns of coordinates for F_i / E_i images of basis
    f_cache: RefCell<BTreeMap<(u8, Content), Vec<Vec<RatFunc>>>>,
    e_cache: RefCell<BTreeMap<(u8, Content), Vec<Vec<RatFunc>>>>,
}

/// Builds `L(lambda)` truncated at `depth` below the highest weight. When
/// `depth >= height(lambda - w0 lambda)` in finite type the module is
/// complete.
pub fn build_module<'a>(
    datum: &'a RootDatum,
    lambda: &[i64],
    depth: i64,
) -> Result<WeightModule<'a>, ModuleError> {
    if !datum.is_dominant(lambda) {
        return Err(ModuleError::NonDominant);
    }
    let ctx = WordContext::new(datum, lambda);
    let rank = datum.rank();
    let mut spaces: BTreeMap<Content, WeightSpace> = BTreeMap::new();
    spaces.insert(
        vec![0; rank],
        WeightSpace { basis: vec![Vec::new()], gram: RMatrix::identity(1) },
    );
    let mut frontier: Vec<Content> = vec![vec![0; rank]];
    for _h in 1..=depth {
        let mut next: Vec<Content> = Vec::new();
        for c in &frontier {
            for i in 0..rank {
                let mut nc = c.clone();
                nc[i] += 1;
                if !next.contains(&nc) && !spaces.contains_key(&nc) {
                    next.push(nc);
                }
            }
        }
        next.sort();
        for nc in &next {
            // candidate words: F_i of each basis word one level up
            let mut cands: Vec<Word> = Vec::new();
            for i in 0..rank {
                if nc[i] == 0 {
                    continue;
                }
                let mut up = nc.clone();
                up[i] -= 1;
                if let Some(sp) = spaces.get(&up) {
                    for w in &sp.basis {
                        let mut nw = Vec::with_capacity(w.len() + 1);
                        nw.push(i as u8);
                        nw.extend_from_slice(w);
                        if !cands.contains(&nw) {
                            cands.push(nw);
                        }
                    }
                }
            }
            cands.sort();
            // greedy basis by Gram rank (bordering test)
            let mut basis: Vec<Word> = Vec::new();
            let mut gram = RMatrix::zero(0, 0);
            for w in cands {
                let n = basis.len();
                let col: Vec<RatFunc> = basis.iter().map(|b| ctx.form(b, &w)).collect();
                let diag = ctx.form(&w, &w);
                let indep = if n == 0 {
                    !diag.is_zero()
                } else {
                    let x = solve(&gram, &col);
                    let mut schur = diag.clone();
                    for (xi, ci) in x.iter().zip(&col) {
                        schur = &schur - &(xi * ci);
                    }
                    !schur.is_zero()
                };
                if indep {
                    let mut g = RMatrix::zero(n + 1, n + 1);
                    for i in 0..n {
                        for j in 0..n {
                            g[(i, j)] = gram[(i, j)].clone();
                        }
                        g[(i, n)] = col[i].clone();
                        g[(n, i)] = col[i].clone();
                    }
                    g[(n, n)] = diag;
                    gram = g;
                    basis.push(w);
                }
            }
            if !basis.is_empty() {
                spaces.insert(nc.clone(), WeightSpace { basis, gram });
            }
        }
        frontier = next.into_iter().filter(|c| spaces.contains_key(c)).collect();
        if frontier.is_empty() {
            break;
        }
    }
    let complete = datum.finite && depth >= datum.full_depth(lambda);
    Ok(WeightModule {
        datum,
        lambda: lambda.to_vec(),
        depth,
        complete,
        ctx,
        spaces,
        f_cache: RefCell::new(BTreeMap::new()),
        e_cache: RefCell::new(BTreeMap::new()),
    })
}

impl<'a> WeightModule<'a> {
    pub fn dim(&self) -> usize {
        self.spaces.values().map(|s| s.basis.len()).sum()
    }

    pub fn block_dim(&self, c: &Content) -> usize {
        self.spaces.get(c).map_or(0, |s| s.basis.len())
    }

    /// Weight (in X-coordinates) of the block with the given content.
    pub fn weight_of(&self, c: &Content) -> Vec<i64> {
        let mut wt = self.lambda.clone();
        for (i, &m) in c.iter().enumerate() {
            for (a, b) in wt.iter_mut().zip(&self.datum.simple_roots[i]) {
                *a -= m * b;
            }
        }
        wt
    }

    pub fn highest_vector(&self) -> ModVec {
        let mut v = ModVec::zero();
        v.insert(vec![0; self.datum.rank()], vec![RatFunc::one()]);
        v
    }

    /// Coordinates of a formal word-vector (restricted to explored blocks).
    pub fn coords_of(&self, v: &FormalVec) -> Result<ModVec, ModuleError> {
        let mut out = ModVec::zero();
        for c in v.contents(self.datum.rank()) {
            let sp = match self.spaces.get(&c) {
                Some(sp) => sp,
                None => {
                    // content outside window: fine only if zero in L or complete
                    if self.complete || self.ctx.is_zero_in_simple(&restrict(v, &c, self.datum.rank())) {
                        continue;
                    }
                    return Err(ModuleError::OutOfWindow);
                }
            };
            let piece = restrict(v, &c, self.datum.rank());
            let rhs: Vec<RatFunc> =
                sp.basis.iter().map(|b| self.ctx.form_vec(b, &piece)).collect();
            let coords = solve(&sp.gram, &rhs);
            out.insert(c, coords);
        }
        Ok(out)
    }

    fn f_columns(&self, i: u8, c: &Content) -> Result<Vec<Vec<RatFunc>>, ModuleError> {
        if let Some(cols) = self.f_cache.borrow().get(&(i, c.clone())) {
            return Ok(cols.clone());
        }
        let sp = self.spaces.get(c).expect("source block exists");
        let mut nc = c.clone();
        nc[i as usize] += 1;
        let target = match self.spaces.get(&nc) {
            Some(t) => t,
            None => {
                // image block unexplored: legitimate zero when the module is
                // complete or every image dies in L(lambda)
                let mut cols = Vec::new();
                for w in &sp.basis {
                    let mut nw = vec![i];
                    nw.extend_from_slice(w);
                    let mut fv = FormalVec::zero();
                    fv.add_term(nw, RatFunc::one());
                    if !self.complete && !self.ctx.is_zero_in_simple(&fv) {
                        return Err(ModuleError::OutOfWindow);
                    }
                    cols.push(Vec::new());
                }
                self.f_cache.borrow_mut().insert((i, c.clone()), cols.clone());
                return Ok(cols);
            }
        };
        let mut cols = Vec::with_capacity(sp.basis.len());
        for w in &sp.basis {
            let mut nw = vec![i];
            nw.extend_from_slice(w);
            let rhs: Vec<RatFunc> = target.basis.iter().map(|b| self.ctx.form(b, &nw)).collect();
            cols.push(solve(&target.gram, &rhs));
        }
        self.f_cache.borrow_mut().insert((i, c.clone()), cols.clone());
        Ok(cols)
    }

    fn e_columns(&self, i: u8, c: &Content) -> Vec<Vec<RatFunc>> {
        if let Some(cols) = self.e_cache.borrow().get(&(i, c.clone())) {
            return cols.clone();
        }
        let sp = self.spaces.get(c).expect("source block exists");
        let mut nc = c.clone();
        if nc[i as usize] == 0 {
            let cols = vec![Vec::new(); sp.basis.len()];
            self.e_cache.borrow_mut().insert((i, c.clone()), cols.clone());
            return cols;
        }
        nc[i as usize] -= 1;
        let target = match self.spaces.get(&nc) {
            Some(t) => t,
            None => {
                let cols = vec![Vec::new(); sp.basis.len()];
                self.e_cache.borrow_mut().insert((i, c.clone()), cols.clone());
                return cols;
            }
        };
        let mut cols = Vec::with_capacity(sp.basis.len());
        for w in &sp.basis {
            // <b, E_i w> = <F_i b, w>
            let rhs: Vec<RatFunc> = target
                .basis
                .iter()
                .map(|b| {
                    let mut fb = vec![i];
                    fb.extend_from_slice(b);
                    self.ctx.form(&fb, w)
                })
                .collect();
            cols.push(solve(&target.gram, &rhs));
        }
        self.e_cache.borrow_mut().insert((i, c.clone()), cols.clone());
        cols
    }

    pub fn act_f(&self, i: usize, v: &ModVec) -> Result<ModVec, ModuleError> {
        let mut out = ModVec::zero();
        for (c, coords) in &v.blocks {
            if coords.iter().all(|x| x.is_zero()) {
                continue;
            }
            let cols = self.f_columns(i as u8, c)?;
            let mut nc = c.clone();
            nc[i] += 1;
            let tdim = self.block_dim(&nc);
            if tdim == 0 {
                continue;
            }
            let mut acc = vec![RatFunc::zero(); tdim];
            for (col, x) in cols.iter().zip(coords) {
                if x.is_zero() || col.is_empty() {
                    continue;
                }
                for (a, b) in acc.iter_mut().zip(col) {
                    *a = &*a + &(b * x);
                }
            }
            out.insert(nc, acc);
        }
        Ok(out)
    }

    pub fn act_e(&self, i: usize, v: &ModVec) -> ModVec {
        let mut out = ModVec::zero();
        for (c, coords) in &v.blocks {
            if coords.iter().all(|x| x.is_zero()) || c[i] == 0 {
                continue;
            }
            let cols = self.e_columns(i as u8, c);
            let mut nc = c.clone();
            nc[i] -= 1;
            let tdim = self.block_dim(&nc);
            if tdim == 0 {
                continue;
            }
            let mut acc = vec![RatFunc::zero(); tdim];
            for (col, x) in cols.iter().zip(coords) {
                if x.is_zero() || col.is_empty() {
                    continue;
                }
                for (a, b) in acc.iter_mut().zip(col) {
                    *a = &*a + &(b * x);
                }
            }
            out.insert(nc, acc);
        }
        out
    }

    /// Divided power `F_i^(n)`.
    pub fn act_f_divided(&self, i: usize, n: i64, v: &ModVec) -> Result<ModVec, ModuleError> {
        assert!(n >= 0);
        let mut out = v.clone();
        for _ in 0..n {
            out = self.act_f(i, &out)?;
        }
        let fact = qfactorial(n, self.datum.qi(i));
        Ok(out.scale(&fact.inv().unwrap()))
    }

    /// Divided power `E_i^(n)`.
    pub fn act_e_divided(&self, i: usize, n: i64, v: &ModVec) -> ModVec {
        assert!(n >= 0);
        let mut out = v.clone();
        for _ in 0..n {
            out = self.act_e(i, &out);
        }
        let fact = qfactorial(n, self.datum.qi(i));
        out.scale(&fact.inv().unwrap())
    }

    /// `K_mu` for a coweight `mu` (Y-coordinates): multiplies each block by
    /// `q^(<mu, wt>)`.
    pub fn act_k(&self, mu: &[i64], v: &ModVec) -> ModVec {
        let mut out = ModVec::zero();
        for (c, coords) in &v.blocks {
            let e = self.datum.pair(mu, &self.weight_of(c));
            out.insert(
                c.clone(),
                coords.iter().map(|x| x * &RatFunc::q_power(e)).collect(),
            );
        }
        out
    }

    /// `K~_i^(+-1) = K_(eps_i coroot_i)^(+-1)`.
    pub fn act_ktilde(&self, i: usize, sign: i64, v: &ModVec) -> ModVec {
        let mut out = ModVec::zero();
        for (c, coords) in &v.blocks {
            let e = sign * self.datum.qi(i) * self.datum.coroot_pair(i, &self.weight_of(c));
            out.insert(
                c.clone(),
                coords.iter().map(|x| x * &RatFunc::q_power(e)).collect(),
            );
        }
        out
    }
}

fn restrict(v: &FormalVec, c: &Content, rank: usize) -> FormalVec {
    let mut out = FormalVec::zero();
    for (w, x) in &v.terms {
        if &content_of(w, rank) == c {
            out.add_term(w.clone(), x.clone());
        }
    }
    out
}

/// Exact specialization of a coordinate vector at `q = 1`; failures carry the
/// offending index.
pub fn specialize_unity_vec(coords: &[RatFunc]) -> Result<Vec<BigRational>, ModuleError> {
    coords
        .iter()
        .enumerate()
        .map(|(index, c)| {
            c.specialize_unity()
                .map_err(|source| ModuleError::Specialize { index, source })
        })
        .collect()
}

/// Exact reduction of a coordinate vector into Q(zeta_l).
pub fn specialize_cyclotomic_vec(
    coords: &[RatFunc],
    level: u32,
) -> Result<Vec<CycloElem>, ModuleError> {
    coords
        .iter()
        .enumerate()
        .map(|(index, c)| {
            c.reduce_mod_cyclotomic(level)
                .map_err(|source| ModuleError::Specialize { index, source })
        })
        .collect()
}

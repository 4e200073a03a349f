//! Formal F-word calculus on a highest-weight line.
//!
//! A "word" is a sequence of lowering-generator indices; the word `[i, j, k]`
//! stands for `F_i F_j F_k v_lambda`. Formal vectors are finite linear
//! combinations of words. The two primitives everything reduces to:
//!
//! * commuting `E_i` through a word, via
//!   `E_i F_j = F_j E_i + delta_ij (K~_i - K~_i^-1)/(q_i - q_i^-1)`;
//! * the contravariant form `<F_i x, y> = <x, E_i y>` with `<v, v> = 1`.
//!
//! Both are memoized per context. Zero-testing a formal vector inside the
//! irreducible quotient L(lambda) is orthogonality against all words of the
//! matching content, since the contravariant form descends nondegenerately.

use crate::qcomb::qint;
use crate::ring::RatFunc;
use crate::rootdata::RootDatum;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

pub type Word = Vec<u8>;
/// Content vector: multiplicity of each generator index in a word.
pub type Content = Vec<i64>;

/// A formal linear combination of words, grouped by content.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FormalVec {
    pub terms: BTreeMap<Word, RatFunc>,
}

impl FormalVec {
    pub fn zero() -> Self {
        FormalVec { terms: BTreeMap::new() }
    }

    pub fn highest() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), RatFunc::one());
        FormalVec { terms }
    }

    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> FormalVec {
        if c.is_zero() {
            return FormalVec::zero();
        }
        FormalVec {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, rhs: &FormalVec) -> FormalVec {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FormalVec) -> FormalVec {
        self.add(&rhs.scale(&RatFunc::from_int(-1)))
    }

    pub fn is_formally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The contents appearing in this vector.
    pub fn contents(&self, rank: usize) -> Vec<Content> {
        let mut seen: Vec<Content> = Vec::new();
        for w in self.terms.keys() {
            let c = content_of(w, rank);
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        seen
    }
}

pub fn content_of(w: &Word, rank: usize) -> Content {
    let mut c = vec![0i64; rank];
    for &l in w {
        c[l as usize] += 1;
    }
    c
}

/// All words of a given content, in lexicographic order.
pub fn words_of_content(c: &Content) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut rem = c.clone();
    fn rec(rem: &mut Content, cur: &mut Word, out: &mut Vec<Word>) {
        if rem.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if rem[i] > 0 {
                rem[i] -= 1;
                cur.push(i as u8);
                rec(rem, cur, out);
                cur.pop();
                rem[i] += 1;
            }
        }
    }
    rec(&mut rem, &mut cur, &mut out);
    out
}

/// Shared word-combinatorics context for a fixed datum and highest weight.
pub struct WordContext<'a> {
    pub datum: &'a RootDatum,
    pub lambda: Vec<i64>,
    /// pairings `<coroot_i, lambda>`
    lam_pair: Vec<i64>,
    memo_e: RefCell<HashMap<(u8, Word), Vec<(Word, RatFunc)>>>,
    memo_form: RefCell<HashMap<(Word, Word), RatFunc>>,
}

impl<'a> WordContext<'a> {
    pub fn new(datum: &'a RootDatum, lambda: &[i64]) -> Self {
        let lam_pair = (0..datum.rank()).map(|i| datum.coroot_pair(i, lambda)).collect();
        WordContext {
            datum,
            lambda: lambda.to_vec(),
            lam_pair,
            memo_e: RefCell::new(HashMap::new()),
            memo_form: RefCell::new(HashMap::new()),
        }
    }

    /// `<coroot_i, weight of w . v_lambda>`.
    pub fn coroot_weight(&self, i: usize, w: &Word) -> i64 {
        let mut p = self.lam_pair[i];
        for &l in w {
            p -= self.datum.cartan[i][l as usize];
        }
        p
    }

    /// `E_i` applied to a single word (at the highest-weight line).
    pub fn e_word(&self, i: u8, w: &Word) -> Vec<(Word, RatFunc)> {
        if w.is_empty() {
            return Vec::new();
        }
        let key = (i, w.clone());
        if let Some(v) = self.memo_e.borrow().get(&key) {
            return v.clone();
        }
        let head = w[0];
        let rest: Word = w[1..].to_vec();
        let mut out: Vec<(Word, RatFunc)> = Vec::new();
        // F_head * (E_i rest)
        for (sub, c) in self.e_word(i, &rest) {
            let mut nw = Vec::with_capacity(sub.len() + 1);
            nw.push(head);
            nw.extend_from_slice(&sub);
            push_term(&mut out, nw, c);
        }
        if head == i {
            let m = self.coroot_weight(i as usize, &rest);
            let c = qint(m, self.datum.qi(i as usize));
            if !c.is_zero() {
                push_term(&mut out, rest, c);
            }
        }
        self.memo_e.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn e_apply(&self, i: u8, v: &FormalVec) -> FormalVec {
        let mut out = FormalVec::zero();
        for (w, c) in &v.terms {
            for (nw, nc) in self.e_word(i, w) {
                out.add_term(nw, &nc * c);
            }
        }
        out
    }

    pub fn f_apply(&self, i: u8, v: &FormalVec) -> FormalVec {
        let mut out = FormalVec::zero();
        for (w, c) in &v.terms {
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(i);
            nw.extend_from_slice(w);
            out.add_term(nw, c.clone());
        }
        out
    }

    /// Multiplies by `q^(<mu, wt>)` where `mu` is a coweight in Y-coordinates.
    pub fn k_apply(&self, mu: &[i64], v: &FormalVec) -> FormalVec {
        let mut out = FormalVec::zero();
        for (w, c) in &v.terms {
            let mut wt = self.lambda.clone();
            for &l in w {
                for (a, b) in wt.iter_mut().zip(&self.datum.simple_roots[l as usize]) {
                    *a -= b;
                }
            }
            let e = self.datum.pair(mu, &wt);
            out.add_term(w.clone(), &RatFunc::q_power(e) * c);
        }
        out
    }

    /// The contravariant form `<w1 . v, w2 . v>`.
    pub fn form(&self, w1: &Word, w2: &Word) -> RatFunc {
        if w1.len() != w2.len() {
            return RatFunc::zero();
        }
        if w1.is_empty() {
            return RatFunc::one();
        }
        let key = (w1.clone(), w2.clone());
        if let Some(v) = self.memo_form.borrow().get(&key) {
            return v.clone();
        }
        let head = w1[0];
        let rest: Word = w1[1..].to_vec();
        let mut acc = RatFunc::zero();
        for (sub, c) in self.e_word(head, w2) {
            let f = self.form(&rest, &sub);
            if !f.is_zero() {
                acc = &acc + &(&c * &f);
            }
        }
        self.memo_form.borrow_mut().insert(key, acc.clone());
        acc
    }

    pub fn form_vec(&self, w: &Word, v: &FormalVec) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (w2, c) in &v.terms {
            if w2.len() == w.len() {
                let f = self.form(w, w2);
                if !f.is_zero() {
                    acc = &acc + &(&f * c);
                }
            }
        }
        acc
    }

    /// True iff the vector is zero in the irreducible quotient `L(lambda)`:
    /// orthogonal to every word of each matching content.
    pub fn is_zero_in_simple(&self, v: &FormalVec) -> bool {
        self.witness_nonzero(v).is_none()
    }

    /// A witness `(word, value)` with nonzero pairing, if one exists.
    pub fn witness_nonzero(&self, v: &FormalVec) -> Option<(Word, RatFunc)> {
        for c in v.contents(self.datum.rank()) {
            for w in words_of_content(&c) {
                let val = self.form_vec(&w, v);
                if !val.is_zero() {
                    return Some((w, val));
                }
            }
        }
        None
    }

    /// True iff `a` and `b` agree in `L(lambda)`.
    pub fn eq_in_simple(&self, a: &FormalVec, b: &FormalVec) -> bool {
        self.is_zero_in_simple(&a.sub(b))
    }
}

fn push_term(out: &mut Vec<(Word, RatFunc)>, w: Word, c: RatFunc) {
    for (ew, ec) in out.iter_mut() {
        if *ew == w {
            *ec = &*ec + &c;
            return;
        }
    }
    out.push((w, c));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::catalog;

    #[test]
    fn sl2_string_values() {
        let d = catalog("split-A1").unwrap();
        let ctx = WordContext::new(&d.base, &[2]);
        // <F v, F v> = [2]
        assert_eq!(ctx.form(&vec![0], &vec![0]), qint(2, 1));
        // E F^2 v = ([2] + [0]-shifted) F v; check via  E F F v
        let ffv = ctx.f_apply(0, &ctx.f_apply(0, &FormalVec::highest()));
        let efv = ctx.e_apply(0, &ffv);
        // E F F v = ([2]+[0]) F v? direct: E acts with weights 2, then 0
        let fv = ctx.f_apply(0, &FormalVec::highest());
        let expect = fv.scale(&(&qint(2, 1) + &qint(0, 1)));
        assert!(ctx.eq_in_simple(&efv, &expect));
    }

    #[test]
    fn string_truncates_in_simple_quotient() {
        // lambda = 1: F^2 v = 0 in L(1) but not formally
        let d = catalog("split-A1").unwrap();
        let ctx = WordContext::new(&d.base, &[1]);
        let ffv = ctx.f_apply(0, &ctx.f_apply(0, &FormalVec::highest()));
        assert!(!ffv.is_formally_zero());
        assert!(ctx.is_zero_in_simple(&ffv));
        let fv = ctx.f_apply(0, &FormalVec::highest());
        assert!(!ctx.is_zero_in_simple(&fv));
    }

    #[test]
    fn serre_relation_holds_in_simple() {
        // A2: F0^2 F1 - [2] F0 F1 F0 + F1 F0^2 kills v_lambda for margin lambda
        let d = catalog("split-A2").unwrap();
        let ctx = WordContext::new(&d.base, &[3, 3]);
        let v = FormalVec::highest();
        let t1 = ctx.f_apply(0, &ctx.f_apply(0, &ctx.f_apply(1, &v)));
        let t2 = ctx.f_apply(0, &ctx.f_apply(1, &ctx.f_apply(0, &v)));
        let t3 = ctx.f_apply(1, &ctx.f_apply(0, &ctx.f_apply(0, &v)));
        let serre = t1.sub(&t2.scale(&qint(2, 1))).add(&t3);
        assert!(ctx.is_zero_in_simple(&serre));
    }

    #[test]
    fn form_is_symmetric() {
        let d = catalog("split-B2").unwrap();
        let ctx = WordContext::new(&d.base, &[2, 2]);
        let words = words_of_content(&vec![2, 1]);
        for a in &words {
            for b in &words {
                assert_eq!(ctx.form(a, b), ctx.form(b, a));
            }
        }
    }
}

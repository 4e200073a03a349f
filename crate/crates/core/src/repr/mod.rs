//! Exact highest-weight modules over Q(q): construction via the contravariant
//! form, divided-power actions, rank-one strings, tensor products with the
//! coproduct action, and coefficient specialization.

pub mod linalg;
pub mod module;
pub mod oracle;
pub mod string;
pub mod tensor;
pub mod words;

pub use module::{
    build_module, specialize_cyclotomic_vec, specialize_unity_vec, ModVec, WeightModule,
};
pub use string::{balanced_roots, modified_roots, StringModule, StringVec};
pub use tensor::{TensorModule, TensorVec};
pub use words::{content_of, words_of_content, Content, FormalVec, Word, WordContext};

/// Coefficient specialization targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spec {
    Generic,
    Unity,
    Cyclotomic(u32),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::catalog;
    use num_bigint::BigInt;

    /// Verma window: weight-space dimensions at small height match Kostant
    /// partition counts when the margin is large enough.
    #[test]
    fn verma_window_dimensions() {
        for (name, lam, depth) in [
            ("split-A2", vec![3, 3], 3i64),
            ("split-B2", vec![3, 3], 3),
            ("split-G2", vec![4, 4], 3),
        ] {
            let d = catalog(name).unwrap();
            let m = build_module(&d.base, &lam, depth).unwrap();
            let pos = oracle::positive_roots(&d.base);
            for (c, sp) in &m.spaces {
                let h: i64 = c.iter().sum();
                if h <= depth.min(lam.iter().min().copied().unwrap_or(0)) {
                    assert_eq!(
                        BigInt::from(sp.basis.len()),
                        oracle::kostant_count(&pos, c),
                        "{} content {:?}",
                        name,
                        c
                    );
                }
            }
        }
    }

    /// Full modules match the Freudenthal oracle weight by weight.
    #[test]
    fn full_dimensions_match_freudenthal() {
        for (name, lam) in [
            ("split-A1", vec![4]),
            ("split-A2", vec![2, 1]),
            ("split-B2", vec![1, 1]),
            ("A1xA1-swap", vec![2, 2]),
            ("AIII-3", vec![2, 1, 0]),
            ("split-G2", vec![1, 0]),
        ] {
            let d = catalog(name).unwrap();
            let depth = d.base.full_depth(&lam);
            let m = build_module(&d.base, &lam, depth).unwrap();
            let mults = oracle::freudenthal(&d.base, &lam);
            let total: BigInt = mults.values().sum();
            assert_eq!(BigInt::from(m.dim()), total, "{} total", name);
            for (c, mult) in &mults {
                assert_eq!(
                    BigInt::from(m.block_dim(c)),
                    mult.clone(),
                    "{} content {:?}",
                    name,
                    c
                );
            }
        }
    }

    /// Contravariance on the module level: `<F_i x, y> = <x, E_i y>` for the
    /// word form, sampled across a window.
    #[test]
    fn form_contravariant() {
        let d = catalog("split-B2").unwrap();
        let ctx = words::WordContext::new(&d.base, &[2, 2]);
        let words0 = words::words_of_content(&vec![1, 1]);
        let words1 = words::words_of_content(&vec![2, 1]);
        for x in &words0 {
            for y in &words1 {
                // <F_0 x, y> = <x, E_0 y>
                let mut fx = vec![0u8];
                fx.extend_from_slice(x);
                let lhs = ctx.form(&fx, y);
                let mut rhs = crate::ring::RatFunc::zero();
                for (w, c) in ctx.e_word(0, y) {
                    rhs = &rhs + &(&c * &ctx.form(x, &w));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}

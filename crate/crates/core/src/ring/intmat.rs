//! Integer matrices with arbitrary-precision entries: Smith normal form,
//! lattice membership, kernels. Carrier for involutions, pairings, and
//! quotient-lattice presentations.

use crate::error::RingError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut m = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    m[(i, j)] += t;
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        m
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        m
    }

    pub fn neg(&self) -> IntMatrix {
        let mut m = self.clone();
        for a in m.data.iter_mut() {
            *a = -std::mem::take(a);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut prev = BigInt::one();
        let mut sign = 1i32;
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero());
                match swap {
                    None => return BigInt::zero(),
                    Some(i) => {
                        for j in 0..n {
                            a.swap(idx(k, j), idx(i, j));
                        }
                        sign = -sign;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = t / &prev;
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        let d = a[idx(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Smith normal form: `U * M * V = D` with `U`, `V` unimodular and `D`
/// diagonal with `d_i | d_(i+1)` and nonnegative diagonal entries.
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries (including zeros) up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.rows();
    let cols = m.cols();
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let add_row = |d: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, c: &BigInt| {
        for j in 0..d.cols() {
            let t = c * &d[(src, j)];
            d[(dst, j)] += t;
        }
        for j in 0..u.cols() {
            let t = c * &u[(src, j)];
            u[(dst, j)] += t;
        }
    };
    let add_col = |d: &mut IntMatrix, v: &mut IntMatrix, dst: usize, src: usize, c: &BigInt| {
        for i in 0..d.rows() {
            let t = c * &d[(i, src)];
            d[(i, dst)] += t;
        }
        for i in 0..v.rows() {
            let t = c * &v[(i, src)];
            v[(i, dst)] += t;
        }
    };
    let swap_rows = |d: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize| {
        for j in 0..d.cols() {
            let x = d[(a, j)].clone();
            d[(a, j)] = d[(b, j)].clone();
            d[(b, j)] = x;
        }
        for j in 0..u.cols() {
            let x = u[(a, j)].clone();
            u[(a, j)] = u[(b, j)].clone();
            u[(b, j)] = x;
        }
    };
    let swap_cols = |d: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize| {
        for i in 0..d.rows() {
            let x = d[(i, a)].clone();
            d[(i, a)] = d[(i, b)].clone();
            d[(i, b)] = x;
        }
        for i in 0..v.rows() {
            let x = v[(i, a)].clone();
            v[(i, a)] = v[(i, b)].clone();
            v[(i, b)] = x;
        }
    };

    let n = rows.min(cols);
    for t in 0..n {
        // find a pivot of minimal absolute value in the trailing block
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[(i, j)].is_zero()
                        && pivot.map_or(true, |(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match pivot {
                None => break,
                Some(p) => p,
            };
            if pi != t {
                swap_rows(&mut d, &mut u, t, pi);
            }
            if pj != t {
                swap_cols(&mut d, &mut v, t, pj);
            }
            // clear column t and row t by euclidean steps
            let mut dirty = false;
            for i in t + 1..rows {
                if !d[(i, t)].is_zero() {
                    let c = -(&d[(i, t)] / &d[(t, t)]);
                    add_row(&mut d, &mut u, i, t, &c);
                    if !d[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !d[(t, j)].is_zero() {
                    let c = -(&d[(t, j)] / &d[(t, t)]);
                    add_col(&mut d, &mut v, j, t, &c);
                    if !d[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility: if some trailing entry is not divisible by
            // the pivot, fold its row in and redo
            let mut fixed = true;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        add_row(&mut d, &mut u, t, i, &BigInt::one());
                        fixed = false;
                        break 'outer;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            // normalize sign via a row scaling by -1 (unimodular)
            for j in 0..cols {
                d[(t, j)] = -std::mem::take(&mut d[(t, j)]);
            }
            for j in 0..rows {
                u[(t, j)] = -std::mem::take(&mut u[(t, j)]);
            }
        }
    }
    Snf { u, d, v }
}

/// Does `v` lie in the column span of `m` over Z (or over Z[1/2] when
/// `invert_two`)?
pub fn lattice_membership(
    m: &IntMatrix,
    v: &[BigInt],
    invert_two: bool,
) -> Result<bool, RingError> {
    if v.len() != m.rows() {
        return Err(RingError::DimensionMismatch {
            expected: m.rows(),
            got: v.len(),
        });
    }
    let snf = smith_normal_form(m);
    let w = snf.u.mul_vec(v);
    let n = m.rows().min(m.cols());
    for i in 0..w.len() {
        let d = if i < n { snf.d[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !w[i].is_zero() {
                return Ok(false);
            }
        } else {
            let dd = if invert_two { odd_part(&d) } else { d };
            if !(&w[i] % &dd).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn odd_part(n: &BigInt) -> BigInt {
    let mut m = n.abs();
    let two = BigInt::from(2);
    while m.is_even() && !m.is_zero() {
        m /= &two;
    }
    m
}

/// A basis of the integer kernel `{x : m x = 0}` (columns).
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let n = m.rows().min(m.cols());
    let mut basis = Vec::new();
    for j in 0..m.cols() {
        let dj = if j < n { snf.d[(j, j)].clone() } else { BigInt::zero() };
        if dj.is_zero() {
            basis.push((0..m.cols()).map(|i| snf.v[(i, j)].clone()).collect());
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d);
        assert_eq!(snf.u.det().abs(), BigInt::one());
        assert_eq!(snf.v.det().abs(), BigInt::one());
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                if !w[1].is_zero() {
                    assert!((&w[1] % &w[0]).is_zero(), "divisibility chain");
                }
            } else {
                assert!(w[1].is_zero(), "zeros must trail");
            }
        }
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_identity_and_scalars() {
        check_snf(&IntMatrix::identity(2));
        let m = IntMatrix::from_rows(&[vec![2]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d[(0, 0)], BigInt::from(2));
    }

    #[test]
    fn snf_diag_2_3_gives_1_6() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        check_snf(&m);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d[(0, 0)], BigInt::one());
        assert_eq!(snf.d[(1, 1)], BigInt::from(6));
    }

    #[test]
    fn snf_rectangular_and_random_shapes() {
        check_snf(&IntMatrix::from_rows(&[vec![2, 4, 4]]));
        check_snf(&IntMatrix::from_rows(&[vec![1, 2], vec![3, 4], vec![5, 6]]));
        check_snf(&IntMatrix::from_rows(&[
            vec![6, 111, -36, 6],
            vec![5, 104, -31, 5],
            vec![0, -100, 25, 0],
        ]));
        check_snf(&IntMatrix::zero(2, 3));
    }

    #[test]
    fn membership() {
        let m = IntMatrix::from_rows(&[vec![2]]);
        assert!(lattice_membership(&m, &[BigInt::zero()], false).unwrap());
        assert!(!lattice_membership(&m, &[BigInt::one()], false).unwrap());
        assert!(lattice_membership(&m, &[BigInt::one()], true).unwrap());
        let m3 = IntMatrix::from_rows(&[vec![3]]);
        assert!(!lattice_membership(&m3, &[BigInt::one()], true).unwrap());
        assert!(matches!(
            lattice_membership(&m3, &[BigInt::one(), BigInt::one()], true),
            Err(RingError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel() {
        let m = IntMatrix::from_rows(&[vec![1, -1, 0], vec![0, 0, 2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        for b in &k {
            assert!(m.mul_vec(b).iter().all(|x| x.is_zero()));
        }
    }
}

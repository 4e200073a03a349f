//! Dense linear algebra over the field Q(q), used for Gram solves and
//! coordinate extraction. Everything is exact; pivoting is by first nonzero.

use crate::ring::RatFunc;

#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<RatFunc>,
}

impl RMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RMatrix { rows, cols, data: vec![RatFunc::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = RatFunc::one();
        }
        m
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &RMatrix) -> RMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = RMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] = &out[(i, j)] + &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFunc::zero();
                for j in 0..self.cols {
                    let a = self.at(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = &acc + &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }
}

impl std::ops::Index<(usize, usize)> for RMatrix {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFunc {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `m x = b` for square nonsingular `m`; panics on singular input
/// (callers guarantee nonsingular Gram matrices).
pub fn solve(m: &RMatrix, b: &[RatFunc]) -> Vec<RatFunc> {
    assert_eq!(m.rows, m.cols);
    assert_eq!(m.rows, b.len());
    let n = m.rows;
    let mut a = m.clone();
    let mut rhs = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&i| !a[(i, col)].is_zero())
            .expect("singular matrix in solve");
        if piv != col {
            for j in 0..n {
                let t = a[(piv, j)].clone();
                a[(piv, j)] = a[(col, j)].clone();
                a[(col, j)] = t;
            }
            rhs.swap(piv, col);
            perm.swap(piv, col);
        }
        let inv = a[(col, col)].inv().unwrap();
        for j in col..n {
            a[(col, j)] = &a[(col, j)] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for i in 0..n {
            if i != col && !a[(i, col)].is_zero() {
                let f = a[(i, col)].clone();
                for j in col..n {
                    let t = &f * &a[(col, j)];
                    a[(i, j)] = &a[(i, j)] - &t;
                }
                let t = &f * &rhs[col];
                rhs[i] = &rhs[i] - &t;
            }
        }
    }
    rhs
}

/// Rank of a matrix by elimination.
pub fn rank(m: &RMatrix) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    for col in 0..a.cols {
        let piv = (r..a.rows).find(|&i| !a[(i, col)].is_zero());
        let piv = match piv {
            None => continue,
            Some(p) => p,
        };
        if piv != r {
            for j in 0..a.cols {
                let t = a[(piv, j)].clone();
                a[(piv, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let inv = a[(r, col)].inv().unwrap();
        for j in col..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i != r && !a[(i, col)].is_zero() {
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let t = &f * &a[(r, j)];
                    a[(i, j)] = &a[(i, j)] - &t;
                }
            }
        }
        r += 1;
        if r == a.rows {
            break;
        }
    }
    r
}

/// Is `v` in the column span of `m`? If so returns the coordinates.
pub fn in_span(m: &RMatrix, v: &[RatFunc]) -> Option<Vec<RatFunc>> {
    assert_eq!(m.rows, v.len());
    // eliminate [m | v]
    let mut a = RMatrix::zero(m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            a[(i, j)] = m[(i, j)].clone();
        }
        a[(i, m.cols)] = v[i].clone();
    }
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        let piv = match (r..a.rows).find(|&i| !a[(i, col)].is_zero()) {
            None => continue,
            Some(p) => p,
        };
        if piv != r {
            for j in 0..a.cols {
                let t = a[(piv, j)].clone();
                a[(piv, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let inv = a[(r, col)].inv().unwrap();
        for j in col..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i != r && !a[(i, col)].is_zero() {
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let t = &f * &a[(r, j)];
                    a[(i, j)] = &a[(i, j)] - &t;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == a.rows {
            break;
        }
    }
    // inconsistent iff some row has zero coefficients but nonzero last entry
    for i in r..a.rows {
        if !a[(i, m.cols)].is_zero() {
            return None;
        }
    }
    let mut x = vec![RatFunc::zero(); m.cols];
    for (row, col) in pivots {
        x[col] = a[(row, m.cols)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn solve_small() {
        let mut m = RMatrix::zero(2, 2);
        m[(0, 0)] = rf(2);
        m[(0, 1)] = rf(1);
        m[(1, 0)] = rf(1);
        m[(1, 1)] = rf(1);
        let x = solve(&m, &[rf(3), rf(2)]);
        assert_eq!(x, vec![rf(1), rf(1)]);
    }

    #[test]
    fn span_membership() {
        let mut m = RMatrix::zero(3, 2);
        m[(0, 0)] = rf(1);
        m[(1, 1)] = rf(1);
        assert!(in_span(&m, &[rf(2), rf(3), rf(0)]).is_some());
        assert!(in_span(&m, &[rf(0), rf(0), rf(1)]).is_none());
    }

    #[test]
    fn rank_counts() {
        let mut m = RMatrix::zero(2, 3);
        m[(0, 0)] = rf(1);
        m[(1, 0)] = rf(2);
        assert_eq!(rank(&m), 1);
        m[(1, 1)] = rf(1);
        assert_eq!(rank(&m), 2);
    }
}

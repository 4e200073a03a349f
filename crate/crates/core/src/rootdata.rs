//! Root data and quasi-split iroot data.
//!
//! A root datum is stored concretely: `X` and `Y` are both `Z^n` and the
//! pairing is the dot product, so simple roots live in `X`-coordinates and
//! simple coroots in `Y`-coordinates. An iroot datum adds a diagram
//! involution `tau` and a pair of lattice involutions `theta_X`, `theta_Y`
//! compatible with the pairing. The iweight lattice `X_i = X / <x - theta x>`
//! is presented through the Smith normal form of `id - theta_X`.

use crate::error::DatumError;
use crate::ring::{big, smith_normal_form, IntMatrix, RatFunc};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub type Weight = Vec<i64>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RootDatum {
    pub name: String,
    /// Cartan matrix `a[i][j] = <coroot_i, root_j>`.
    pub cartan: Vec<Vec<i64>>,
    /// Root lengths `eps_i` (the symmetrizing diagonal, some entry 1).
    pub eps: Vec<i64>,
    /// Simple roots in X-coordinates.
    pub simple_roots: Vec<Weight>,
    /// Simple coroots in Y-coordinates.
    pub simple_coroots: Vec<Weight>,
    /// Whether the datum claims finite type (positive definite `DA`).
    pub finite: bool,
    /// Dominant weights with `<coroot_i, f_j> = c delta_ij`, `c > 0` minimal
    /// for the lattice; used for sampling and window margins.
    pub fundamental_like: Vec<Weight>,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn xdim(&self) -> usize {
        self.simple_roots.first().map_or(0, |r| r.len())
    }

    /// `<y, x>` for `y` in Y-coordinates and `x` in X-coordinates.
    pub fn pair(&self, y: &[i64], x: &[i64]) -> i64 {
        y.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// `<coroot_i, x>`.
    pub fn coroot_pair(&self, i: usize, x: &[i64]) -> i64 {
        self.pair(&self.simple_coroots[i], x)
    }

    pub fn is_dominant(&self, x: &[i64]) -> bool {
        (0..self.rank()).all(|i| self.coroot_pair(i, x) >= 0)
    }

    /// `q_i = q^(eps_i)` exponent.
    pub fn qi(&self, i: usize) -> i64 {
        self.eps[i]
    }

    /// Antidominant representative `w_0 lambda` of a weight, by repeated
    /// descent. Requires finite type to terminate.
    pub fn lowest_weight(&self, lambda: &[i64]) -> Weight {
        assert!(self.finite, "lowest weight needs finite type");
        let mut v = lambda.to_vec();
        loop {
            let mut moved = false;
            for i in 0..self.rank() {
                let c = self.coroot_pair(i, &v);
                if c > 0 {
                    for (vj, aj) in v.iter_mut().zip(&self.simple_roots[i]) {
                        *vj -= c * aj;
                    }
                    moved = true;
                }
            }
            if !moved {
                return v;
            }
        }
    }

    /// Expresses `v` in simple-root coordinates when `v` lies in the root
    /// lattice; returns None otherwise.
    pub fn root_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let r = self.rank();
        let mut m = IntMatrix::zero(r, r);
        for i in 0..r {
            for j in 0..r {
                m[(i, j)] = big(self.cartan[i][j]);
            }
        }
        let rhs: Vec<BigInt> = (0..r).map(|i| big(self.coroot_pair(i, v))).collect();
        let c = solve_square(&m, &rhs)?;
        // verify in full X-coordinates (pairings alone can be ambiguous for
        // non-finite data)
        let mut check = vec![0i64; v.len()];
        let mut out = Vec::with_capacity(r);
        for (i, ci) in c.iter().enumerate() {
            let ci64 = i64::try_from(ci).ok()?;
            out.push(ci64);
            for (cj, aj) in check.iter_mut().zip(&self.simple_roots[i]) {
                *cj += ci64 * aj;
            }
        }
        if check == v {
            Some(out)
        } else {
            None
        }
    }

    /// Height of `lambda - w_0 lambda` for dominant `lambda`: the natural
    /// full-module exploration depth in finite type.
    pub fn full_depth(&self, lambda: &[i64]) -> i64 {
        let low = self.lowest_weight(lambda);
        let diff: Vec<i64> = lambda.iter().zip(&low).map(|(a, b)| a - b).collect();
        self.root_coordinates(&diff)
            .expect("lambda - w0(lambda) must be a root-lattice element")
            .iter()
            .sum()
    }
}

/// Solves `m x = rhs` exactly over the rationals, returning an integer
/// solution if one exists (requires m square and invertible over Q).
fn solve_square(m: &IntMatrix, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
    use num_rational::BigRational;
    use num_traits::One;
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from(m[(i, j)].clone()))
                .chain(std::iter::once(BigRational::from(rhs[i].clone())))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for j in col..=n {
            a[col][j] = &a[col][j] / &p;
        }
        for i in 0..n {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..=n {
                    let t = &f * &a[col][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for row in &a {
        let v = &row[n];
        if !v.denom().is_one() {
            return None;
        }
        out.push(v.numer().clone());
    }
    Some(out)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IRootDatum {
    pub base: RootDatum,
    /// Diagram involution (0-based index map).
    pub tau: Vec<usize>,
    /// Involution of X (rows act on X-coordinate column vectors).
    pub theta_x: Vec<Vec<i64>>,
    /// Involution of Y.
    pub theta_y: Vec<Vec<i64>>,
}

fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

impl IRootDatum {
    pub fn name(&self) -> &str {
        &self.base.name
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn theta_x_apply(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.theta_x, v)
    }

    pub fn theta_y_apply(&self, v: &[i64]) -> Vec<i64> {
        apply(&self.theta_y, v)
    }

    /// `x - theta_X(x)`.
    pub fn theta_defect(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(self.theta_x_apply(v))
            .map(|(a, b)| a - b)
            .collect()
    }

    /// The fixed parameters: `q_i^-1` when `tau i = i`; `1` when
    /// `a_{i,tau i} = 0`; `{1, q_i^-1}` (smaller index gets 1) when
    /// `a_{i,tau i} = -1`; for `a_{i,tau i} <= -2` a power pair with product
    /// `q_i^(-a)`.
    pub fn default_parameters(&self) -> Vec<RatFunc> {
        let r = self.rank();
        let mut out = vec![RatFunc::one(); r];
        for i in 0..r {
            let ti = self.tau[i];
            let qi = self.base.qi(i);
            if ti == i {
                out[i] = RatFunc::q_power(-qi);
            } else {
                let a = self.base.cartan[i][ti];
                if a == 0 {
                    out[i] = RatFunc::one();
                } else if a == -1 {
                    out[i] = if i < ti { RatFunc::one() } else { RatFunc::q_power(-qi) };
                } else if a % 2 == 0 {
                    out[i] = RatFunc::q_power(qi * (-a) / 2);
                } else {
                    let h = if i < ti { (-a - 1) / 2 } else { (-a + 1) / 2 };
                    out[i] = RatFunc::q_power(qi * h);
                }
            }
        }
        out
    }

    /// Checks every structural invariant, returning all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let d = &self.base;
        let r = d.rank();
        let n = d.xdim();
        if d.eps.len() != r || d.simple_roots.len() != r || d.simple_coroots.len() != r {
            v.push("inconsistent rank data".to_string());
            return ValidationReport { violations: v };
        }
        if !d.eps.contains(&1) || d.eps.iter().any(|&e| e <= 0) {
            v.push("root lengths must be positive with some eps_i = 1".into());
        }
        for i in 0..r {
            for j in 0..r {
                if d.pair(&d.simple_coroots[i], &d.simple_roots[j]) != d.cartan[i][j] {
                    v.push(format!("<coroot_{}, root_{}> != a_{}{}", i, j, i, j));
                }
                if d.eps[i] * d.cartan[i][j] != d.eps[j] * d.cartan[j][i] {
                    v.push(format!("DA not symmetric at ({}, {})", i, j));
                }
            }
            if d.cartan[i][i] != 2 {
                v.push(format!("a_{}{} != 2", i, i));
            }
        }
        if d.finite && !positive_definite(&d.cartan, &d.eps) {
            v.push("DA not positive definite for claimed finite type".into());
        }
        if matrix_rank(&d.simple_roots) != r {
            v.push("simple roots not linearly independent (not X-regular)".into());
        }
        if matrix_rank(&d.simple_coroots) != r {
            v.push("simple coroots not linearly independent (not Y-regular)".into());
        }
        if self.tau.len() != r || (0..r).any(|i| self.tau[i] >= r || self.tau[self.tau[i]] != i) {
            v.push("tau is not an involution of the index set".into());
        } else {
            for i in 0..r {
                for j in 0..r {
                    if d.cartan[i][j] != d.cartan[self.tau[i]][self.tau[j]] {
                        v.push(format!("a_{}{} != a_(tau {})(tau {})", i, j, i, j));
                    }
                }
            }
        }
        let is_involution = |m: &Vec<Vec<i64>>| -> bool {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return false;
            }
            (0..n).all(|i| {
                (0..n).all(|j| {
                    let s: i64 = (0..n).map(|k| m[i][k] * m[k][j]).sum();
                    s == if i == j { 1 } else { 0 }
                })
            })
        };
        if !is_involution(&self.theta_x) {
            v.push("theta_X is not an involution".into());
        }
        if !is_involution(&self.theta_y) {
            v.push("theta_Y is not an involution".into());
        }
        if self.theta_x.len() == n && self.theta_y.len() == n {
            // <theta_Y y, theta_X x> = <y, x>  <=>  theta_Y^T theta_X = id
            for i in 0..n {
                for j in 0..n {
                    let s: i64 = (0..n).map(|k| self.theta_y[k][i] * self.theta_x[k][j]).sum();
                    if s != if i == j { 1 } else { 0 } {
                        v.push("pairing not theta-invariant".into());
                    }
                }
            }
            for i in 0..r {
                let want: Vec<i64> = d.simple_roots[self.tau[i]].iter().map(|a| -a).collect();
                if self.theta_x_apply(&d.simple_roots[i]) != want {
                    v.push(format!("theta_X(root_{}) != -root_(tau {})", i, i));
                }
                let wantc: Vec<i64> =
                    d.simple_coroots[self.tau[i]].iter().map(|a| -a).collect();
                if self.theta_y_apply(&d.simple_coroots[i]) != wantc {
                    v.push(format!("theta_Y(coroot_{}) != -coroot_(tau {})", i, i));
                }
            }
        }
        v.dedup();
        ValidationReport { violations: v }
    }

    /// Presentation of the iweight lattice.
    pub fn iweight_lattice(&self) -> IWeightLattice {
        let n = self.base.xdim();
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = big(i64::from(i == j) - self.theta_x[i][j]);
            }
        }
        let snf = smith_normal_form(&m);
        let moduli = snf.diagonal();
        IWeightLattice { u: snf.u, moduli }
    }

    /// Parity of `<coroot_i, zeta>` for an iweight class given by a
    /// representative; well-defined because pairings of coroots with theta
    /// defects are even.
    pub fn coroot_parity(&self, i: usize, rep: &[i64]) -> i64 {
        self.base.coroot_pair(i, rep).rem_euclid(2)
    }

    /// A vector of the form `nu - theta(nu)` whose pairings with all simple
    /// coroots are >= 1. Adding multiples of it raises window margins without
    /// moving the iweight class.
    pub fn margin_boost(&self) -> Weight {
        fn grow(
            d: &IRootDatum,
            funds: &[Weight],
            coeffs: &mut Vec<i64>,
            idx: usize,
            left: i64,
        ) -> bool {
            if idx == funds.len() {
                if left != 0 {
                    return false;
                }
                let nu: Vec<i64> = (0..d.base.xdim())
                    .map(|k| funds.iter().zip(coeffs.iter()).map(|(f, c)| c * f[k]).sum())
                    .collect();
                let boost = d.theta_defect(&nu);
                return (0..d.rank()).all(|i| d.base.coroot_pair(i, &boost) >= 1);
            }
            for c in 0..=left {
                coeffs[idx] = c;
                if grow(d, funds, coeffs, idx + 1, left - c) {
                    return true;
                }
            }
            coeffs[idx] = 0;
            false
        }
        let funds = &self.base.fundamental_like;
        let mut coeffs = vec![0i64; funds.len()];
        for total in 1..=(4 * funds.len() as i64) {
            if grow(self, funds, &mut coeffs, 0, total) {
                let nu: Vec<i64> = (0..self.base.xdim())
                    .map(|k| funds.iter().zip(&coeffs).map(|(f, c)| c * f[k]).sum())
                    .collect();
                return self.theta_defect(&nu);
            }
        }
        panic!("no margin boost found for datum {}", self.name());
    }
}

fn positive_definite(cartan: &[Vec<i64>], eps: &[i64]) -> bool {
    let r = cartan.len();
    for k in 1..=r {
        let mut m = IntMatrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = big(eps[i] * cartan[i][j]);
            }
        }
        if !m.det().is_positive() {
            return false;
        }
    }
    true
}

fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = IntMatrix::from_rows(rows);
    smith_normal_form(&m)
        .diagonal()
        .iter()
        .filter(|d| !d.is_zero())
        .count()
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Smith-normal-form presentation of `X_i`: coordinates are `u * lambda`
/// reduced modulo the diagonal moduli (0 meaning a free coordinate).
#[derive(Clone, Debug)]
pub struct IWeightLattice {
    u: IntMatrix,
    moduli: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IWeightClass {
    pub coords: Vec<BigInt>,
}

impl IWeightLattice {
    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    /// Nontrivial torsion moduli (> 1).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.moduli
            .iter()
            .filter(|d| !d.is_zero() && **d > big(1))
            .cloned()
            .collect()
    }

    pub fn free_rank(&self) -> usize {
        self.moduli.iter().filter(|d| d.is_zero()).count()
    }

    pub fn project(&self, lambda: &[i64]) -> IWeightClass {
        let v: Vec<BigInt> = lambda.iter().map(|&a| big(a)).collect();
        let w = self.u.mul_vec(&v);
        let coords = w
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                let m = self.moduli.get(i).cloned().unwrap_or_else(BigInt::zero);
                if m.is_zero() {
                    c
                } else {
                    num_integer::Integer::mod_floor(&c, &m)
                }
            })
            .collect();
        IWeightClass { coords }
    }

    pub fn same_class(&self, a: &[i64], b: &[i64]) -> bool {
        self.project(a) == self.project(b)
    }
}

/// Built-in catalog. `AIII-n` is accepted for any `2 <= n <= 9`.
pub fn catalog(name: &str) -> Result<IRootDatum, DatumError> {
    let d = match name {
        "split-A1" => split_simply_connected("split-A1", vec![vec![2]], vec![1]),
        "split-A1-adjoint" => {
            let base = RootDatum {
                name: "split-A1-adjoint".into(),
                cartan: vec![vec![2]],
                eps: vec![1],
                simple_roots: vec![vec![1]],
                simple_coroots: vec![vec![2]],
                finite: true,
                fundamental_like: vec![vec![1]],
            };
            IRootDatum { base, tau: vec![0], theta_x: vec![vec![-1]], theta_y: vec![vec![-1]] }
        }
        "split-A2" => {
            split_simply_connected("split-A2", vec![vec![2, -1], vec![-1, 2]], vec![1, 1])
        }
        "split-A3" => split_simply_connected(
            "split-A3",
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![1, 1, 1],
        ),
        "split-B2" => {
            split_simply_connected("split-B2", vec![vec![2, -2], vec![-1, 2]], vec![1, 2])
        }
        "split-G2" => {
            split_simply_connected("split-G2", vec![vec![2, -3], vec![-1, 2]], vec![1, 3])
        }
        "A1xA1-swap" => {
            let base = RootDatum {
                name: "A1xA1-swap".into(),
                cartan: vec![vec![2, 0], vec![0, 2]],
                eps: vec![1, 1],
                simple_roots: vec![vec![2, 0], vec![0, 2]],
                simple_coroots: vec![vec![1, 0], vec![0, 1]],
                finite: true,
                fundamental_like: vec![vec![1, 0], vec![0, 1]],
            };
            IRootDatum {
                base,
                tau: vec![1, 0],
                theta_x: vec![vec![0, -1], vec![-1, 0]],
                theta_y: vec![vec![0, -1], vec![-1, 0]],
            }
        }
        "swap-affine-A1" => {
            let base = RootDatum {
                name: "swap-affine-A1".into(),
                cartan: vec![vec![2, -2], vec![-2, 2]],
                eps: vec![1, 1],
                simple_roots: vec![vec![1, 0, 0, 0], vec![0, 0, -1, 0]],
                simple_coroots: vec![vec![2, 1, 2, 0], vec![-2, 0, -2, -1]],
                finite: false,
                fundamental_like: vec![vec![0, 1, 0, 0], vec![0, 0, 0, -1]],
            };
            let swap = vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
            ];
            IRootDatum { base, tau: vec![1, 0], theta_x: swap.clone(), theta_y: swap }
        }
        _ => {
            if let Some(ns) = name.strip_prefix("AIII-") {
                let n: usize = ns
                    .parse()
                    .map_err(|_| DatumError::UnknownName(name.to_string()))?;
                if !(2..=9).contains(&n) {
                    return Err(DatumError::UnknownName(name.to_string()));
                }
                aiii(n)
            } else {
                return Err(DatumError::UnknownName(name.to_string()));
            }
        }
    };
    debug_assert!(
        d.validate().is_valid(),
        "catalog datum {} invalid: {:?}",
        name,
        d.validate().violations
    );
    Ok(d)
}

pub const CATALOG_NAMES: &[&str] = &[
    "split-A1",
    "split-A1-adjoint",
    "split-A2",
    "split-A3",
    "split-B2",
    "split-G2",
    "A1xA1-swap",
    "swap-affine-A1",
    "AIII-2",
    "AIII-3",
    "AIII-4",
];

/// Rank <= 2 catalog data (the grid most verification suites run over).
pub const RANK2_NAMES: &[&str] = &[
    "split-A1",
    "split-A2",
    "split-B2",
    "split-G2",
    "A1xA1-swap",
    "AIII-3",
    "swap-affine-A1",
];

fn split_simply_connected(name: &str, cartan: Vec<Vec<i64>>, eps: Vec<i64>) -> IRootDatum {
    let r = cartan.len();
    // X = weight lattice in fundamental coordinates, Y = coroot lattice
    let simple_roots: Vec<Weight> = (0..r)
        .map(|j| (0..r).map(|i| cartan[i][j]).collect())
        .collect();
    let simple_coroots: Vec<Weight> = (0..r)
        .map(|i| (0..r).map(|k| i64::from(k == i)).collect())
        .collect();
    let base = RootDatum {
        name: name.into(),
        cartan,
        eps,
        simple_roots,
        simple_coroots: simple_coroots.clone(),
        finite: true,
        fundamental_like: simple_coroots,
    };
    let n = base.xdim();
    let neg: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect())
        .collect();
    IRootDatum { base, tau: (0..r).collect(), theta_x: neg.clone(), theta_y: neg }
}

/// GL_n with the diagram involution `i -> n - i` and coordinate reversal on
/// the (co)character lattices.
fn aiii(n: usize) -> IRootDatum {
    let r = n - 1;
    let mut cartan = vec![vec![0i64; r]; r];
    for i in 0..r {
        cartan[i][i] = 2;
        if i + 1 < r {
            cartan[i][i + 1] = -1;
            cartan[i + 1][i] = -1;
        }
    }
    let mut simple_roots = Vec::with_capacity(r);
    for i in 0..r {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v[i + 1] = -1;
        simple_roots.push(v);
    }
    let simple_coroots = simple_roots.clone();
    let fundamental_like: Vec<Weight> = (0..r)
        .map(|j| (0..n).map(|k| i64::from(k <= j)).collect())
        .collect();
    let base = RootDatum {
        name: format!("AIII-{}", n),
        cartan,
        eps: vec![1; r],
        simple_roots,
        simple_coroots,
        finite: true,
        fundamental_like,
    };
    let rev: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i + j == n - 1)).collect())
        .collect();
    IRootDatum {
        base,
        tau: (0..r).map(|i| r - 1 - i).collect(),
        theta_x: rev.clone(),
        theta_y: rev,
    }
}

/// Loads an iroot datum from its JSON form (the shape serde derives for
/// [`IRootDatum`]); the datum is validated before being returned.
pub fn from_json(text: &str) -> Result<IRootDatum, DatumError> {
    let d: IRootDatum =
        serde_json::from_str(text).map_err(|e| DatumError::Invalid(e.to_string()))?;
    let rep = d.validate();
    if rep.is_valid() {
        Ok(d)
    } else {
        Err(DatumError::Invalid(rep.violations.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_validates() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let rep = d.validate();
            assert!(rep.is_valid(), "{}: {:?}", name, rep.violations);
        }
    }

    #[test]
    fn deliberate_violation_detected() {
        // A2 with tau = id but theta sending root_0 to -root_1
        let mut d = catalog("split-A2").unwrap();
        d.theta_x = vec![vec![0, -1], vec![-1, 0]];
        d.theta_y = vec![vec![0, -1], vec![-1, 0]];
        let rep = d.validate();
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.contains("theta_X(root_0)")));
    }

    #[test]
    fn iweight_lattices() {
        let d = catalog("split-A1").unwrap();
        let l = d.iweight_lattice();
        assert_eq!(l.torsion(), vec![big(2)]);
        assert_eq!(l.free_rank(), 0);

        let d = catalog("A1xA1-swap").unwrap();
        let l = d.iweight_lattice();
        assert!(l.torsion().is_empty());
        assert_eq!(l.free_rank(), 1);

        let d = catalog("split-A2").unwrap();
        let l = d.iweight_lattice();
        assert_eq!(l.torsion(), vec![big(2), big(2)]);
    }

    #[test]
    fn torsion_is_two_power_everywhere() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            for t in d.iweight_lattice().torsion() {
                assert_eq!(crate::ring::odd_part(&t), big(1), "{}", name);
            }
        }
    }

    #[test]
    fn projection_kills_defects_and_is_additive() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let l = d.iweight_lattice();
            let n = d.base.xdim();
            let zero = vec![0i64; n];
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..100 {
                let mut v = vec![0i64; n];
                for x in v.iter_mut() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    *x = ((state >> 33) % 21) as i64 - 10;
                }
                let defect = d.theta_defect(&v);
                assert!(l.same_class(&defect, &zero), "{}", name);

                let w: Vec<i64> = v.iter().map(|a| a + 1).collect();
                let sum: Vec<i64> = v.iter().zip(&w).map(|(a, b)| a + b).collect();
                let pa = l.project(&v);
                let pb = l.project(&w);
                let ps = l.project(&sum);
                let direct: Vec<BigInt> = pa
                    .coords
                    .iter()
                    .zip(&pb.coords)
                    .enumerate()
                    .map(|(i, (a, b))| {
                        let m = l.moduli().get(i).cloned().unwrap_or_else(BigInt::zero);
                        let s = a + b;
                        if m.is_zero() {
                            s
                        } else {
                            num_integer::Integer::mod_floor(&s, &m)
                        }
                    })
                    .collect();
                assert_eq!(ps.coords, direct, "{}: projection not additive", name);
            }
        }
    }

    #[test]
    fn parameters_follow_convention() {
        let d = catalog("split-A1").unwrap();
        assert_eq!(d.default_parameters()[0], RatFunc::q_power(-1));
        let d = catalog("A1xA1-swap").unwrap();
        assert!(d.default_parameters().iter().all(|s| s.is_one()));
        let d = catalog("AIII-3").unwrap();
        let p = d.default_parameters();
        assert!(p[0].is_one());
        assert_eq!(p[1], RatFunc::q_power(-1));
        let d = catalog("split-G2").unwrap();
        let p = d.default_parameters();
        assert_eq!(p[0], RatFunc::q_power(-1));
        assert_eq!(p[1], RatFunc::q_power(-3));
    }

    #[test]
    fn parameter_constraints() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let p = d.default_parameters();
            for i in 0..d.rank() {
                let ti = d.tau[i];
                if ti == i {
                    assert_eq!(p[i], RatFunc::q_power(-d.base.qi(i)), "{}", name);
                } else if d.base.cartan[i][ti] == 0 {
                    assert_eq!(p[i], p[ti], "{}", name);
                    assert!(p[i].is_one(), "{}", name);
                } else if d.base.cartan[i][ti] == -1 {
                    // the fixed convention {1, q_i^-1}
                    let prod = &p[i] * &p[ti];
                    assert_eq!(prod, RatFunc::q_power(-d.base.qi(i)), "{}", name);
                } else {
                    let a = d.base.cartan[i][ti];
                    let prod = &p[i] * &p[ti];
                    assert_eq!(prod, RatFunc::q_power(-a * d.base.qi(i)), "{}", name);
                }
            }
        }
    }

    #[test]
    fn margin_boost_raises_all_pairings() {
        for name in CATALOG_NAMES {
            let d = catalog(name).unwrap();
            let b = d.margin_boost();
            for i in 0..d.rank() {
                assert!(d.base.coroot_pair(i, &b) >= 1, "{}", name);
            }
            let l = d.iweight_lattice();
            let zero = vec![0i64; d.base.xdim()];
            assert!(l.same_class(&b, &zero), "{}", name);
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = catalog("AIII-3").unwrap();
        let s = serde_json::to_string(&d).unwrap();
        let back = from_json(&s).unwrap();
        assert_eq!(back.base.cartan, d.base.cartan);
        assert_eq!(back.tau, d.tau);
        assert!(from_json("{}").is_err());
    }

    #[test]
    fn full_depth_examples() {
        let d = catalog("split-A1").unwrap();
        assert_eq!(d.base.full_depth(&[2]), 2);
        let d = catalog("split-A2").unwrap();
        assert_eq!(d.base.full_depth(&[1, 1]), 4); // 2 rho = 2(a1 + a2)
    }
}

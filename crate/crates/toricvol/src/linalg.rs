//! Exact linear algebra over the rationals and the integer lattice.
//!
//! Plain Gaussian elimination is all the rational side needs at desk scale.
//! The lattice side provides a left Hermite normal form (canonical for the
//! GL(n,Z) action by row operations) and the adapted-basis construction used
//! to split a cone along its Gorenstein hyperplane.

use crate::rat::{Rat, RatVec};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Outcome of solving a linear system A x = b over Q.
pub enum Solve {
    Unique(RatVec),
    /// Rank-deficient but consistent: many solutions.
    Underdetermined,
    Infeasible,
}

/// Solves A x = b by Gauss-Jordan elimination, exactly.
pub fn solve(a: &[RatVec], b: &[Rat]) -> Solve {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Solve::Underdetermined;
    }
    let cols = a[0].dim();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, rhs)| {
            let mut r = row.0.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent row 0 = nonzero?
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return Solve::Infeasible;
        }
    }
    if pivot_cols.len() < cols {
        return Solve::Underdetermined;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    Solve::Unique(RatVec(x))
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[RatVec]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].dim();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in (r + 1)..m.len() {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// A basis of the kernel {x : A x = 0} of the matrix with the given rows.
pub fn kernel_basis(rows: &[RatVec], cols: usize) -> Vec<RatVec> {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.0.clone()).collect();
    let nrows = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for c in 0..cols {
            if let Some(pr) = pivot_of_col[c] {
                v[c] = -&m[pr][free];
            }
        }
        basis.push(RatVec(v));
    }
    basis
}

/// Determinant of a square integer matrix (Bareiss fraction-free).
pub fn det_int(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num.checked_div(&prev).expect("bareiss divisibility");
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant of a square rational matrix.
pub fn det_rat(rows: &[RatVec]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.0.clone()).collect();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].recip();
        for j in c..n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in (c + 1)..n {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..n {
                    let sub = &f * &m[c][j];
                    m[i][j] = &m[i][j] - &sub;
                }
            }
        }
    }
    det
}

/// Left Hermite normal form: the canonical representative of {U·M : U in
/// GL(n,Z)} computed by integer row operations. Requires full row rank.
/// Pivots are positive, entries above each pivot lie in [0, pivot).
pub fn hnf_left(mat: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut m = mat.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Clear column c below row r with gcd row operations.
        loop {
            let mut idx: Option<usize> = None;
            for i in (r + 1)..rows {
                if !m[i][c].is_zero() {
                    idx = Some(i);
                    break;
                }
            }
            let Some(i) = idx else { break };
            if m[r][c].is_zero() {
                m.swap(r, i);
                continue;
            }
            // Reduce the pair (m[r][c], m[i][c]).
            let q = m[i][c].div_floor(&m[r][c]);
            for j in 0..cols {
                let sub = &q * &m[r][j];
                m[i][j] = &m[i][j] - sub;
            }
            if !m[i][c].is_zero() {
                m.swap(r, i);
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for j in 0..cols {
                m[r][j] = -m[r][j].clone();
            }
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                for j in 0..cols {
                    let sub = &q * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        r += 1;
    }
    m
}

/// Finds U in GL(d,Z) whose columns start with a vector w satisfying
/// <m, w> = 1 followed by a basis of the kernel lattice {v : <m, v> = 0}.
/// Requires `m` primitive. Deterministic.
pub fn adapted_basis(m: &[BigInt]) -> Vec<Vec<BigInt>> {
    let d = m.len();
    // Column operations on the row vector `row`, mirrored into u (d x d).
    let mut row = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let add_col = |u: &mut Vec<Vec<BigInt>>, row: &mut Vec<BigInt>, from: usize, to: usize, q: &BigInt| {
        // col_to -= q * col_from
        for r in u.iter_mut() {
            let sub = q * &r[from];
            r[to] = &r[to] - sub;
        }
        let sub = q * &row[from];
        row[to] = &row[to] - sub;
    };
    let swap_cols = |u: &mut Vec<Vec<BigInt>>, row: &mut Vec<BigInt>, a: usize, b: usize| {
        for r in u.iter_mut() {
            r.swap(a, b);
        }
        row.swap(a, b);
    };
    // Sweep gcd into column 0.
    loop {
        let mut idx: Option<usize> = None;
        for j in 1..d {
            if !row[j].is_zero() {
                idx = Some(j);
                break;
            }
        }
        let Some(j) = idx else { break };
        if row[0].is_zero() {
            swap_cols(&mut u, &mut row, 0, j);
            continue;
        }
        let q = row[j].div_floor(&row[0]);
        add_col(&mut u, &mut row, 0, j, &q);
        if !row[j].is_zero() {
            swap_cols(&mut u, &mut row, 0, j);
        }
    }
    if row[0].is_negative() {
        for r in u.iter_mut() {
            r[0] = -r[0].clone();
        }
        row[0] = -row[0].clone();
    }
    assert!(row[0].is_one(), "adapted_basis requires a primitive vector");
    u
}

/// Inverse of an integer matrix with determinant ±1 (stays integral).
pub fn inverse_unimodular(mat: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = mat.len();
    let det = det_int(mat);
    assert!(det.abs().is_one(), "matrix is not unimodular");
    // Adjugate via cofactors; n <= 7 here so this is fine.
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| mat[r][c].clone())
                        .collect()
                })
                .collect();
            let cof = det_int(&minor);
            let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            inv[j][i] = sign * cof * &det; // det = ±1, multiplying = dividing
        }
    }
    inv
}

pub fn mat_mul_int(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut s = BigInt::zero();
            for t in 0..k {
                s += &a[i][t] * &b[t][j];
            }
            out[i][j] = s;
        }
    }
    out
}

pub fn mat_apply_int(mat: &[Vec<BigInt>], v: &RatVec) -> RatVec {
    RatVec(
        mat.iter()
            .map(|row| {
                row.iter()
                    .zip(v.0.iter())
                    .map(|(a, x)| Rat::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect(),
    )
}

/// An affine unimodular transformation x -> M x + shift with |det M| = 1.
#[derive(Clone, Debug)]
pub struct UnimodularMap {
    pub matrix: Vec<Vec<BigInt>>,
    pub shift: RatVec,
}

impl UnimodularMap {
    pub fn new(matrix: Vec<Vec<BigInt>>, shift: RatVec) -> Self {
        assert!(det_int(&matrix).abs().is_one(), "|det| must be 1");
        UnimodularMap { matrix, shift }
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
            .collect();
        UnimodularMap {
            matrix,
            shift: RatVec::zeros(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, v: &RatVec) -> RatVec {
        &mat_apply_int(&self.matrix, v) + &self.shift
    }

    pub fn inverse(&self) -> UnimodularMap {
        let inv = inverse_unimodular(&self.matrix);
        let back = mat_apply_int(&inv, &self.shift);
        UnimodularMap {
            matrix: inv,
            shift: -&back,
        }
    }

    pub fn compose(&self, inner: &UnimodularMap) -> UnimodularMap {
        // (self ∘ inner)(x) = M_s (M_i x + b_i) + b_s
        UnimodularMap {
            matrix: mat_mul_int(&self.matrix, &inner.matrix),
            shift: &mat_apply_int(&self.matrix, &inner.shift) + &self.shift,
        }
    }
}

/// Deterministic pseudo-random unimodular map built from shears and swaps.
/// Kept in the library proper because oracle tests in several crates' test
/// targets share it.
pub fn random_unimodular(seed: u64, n: usize, steps: usize) -> UnimodularMap {
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    for _ in 0..steps {
        let a = (next() as usize) % n;
        let mut b = (next() as usize) % n;
        if n > 1 {
            while b == a {
                b = (next() as usize) % n;
            }
        }
        match next() % 3 {
            0 if n > 1 => {
                // row_a += c * row_b
                let c = BigInt::from((next() % 5) as i64 - 2);
                for j in 0..n {
                    let add = &c * &m[b][j];
                    m[a][j] = &m[a][j] + add;
                }
            }
            1 if n > 1 => m.swap(a, b),
            _ => {
                for j in 0..n {
                    m[a][j] = -m[a][j].clone();
                }
            }
        }
    }
    let shift = RatVec(
        (0..n)
            .map(|_| Rat::from_integer(BigInt::from((next() % 9) as i64 - 4)))
            .collect(),
    );
    UnimodularMap::new(m, shift)
}

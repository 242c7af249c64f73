//! Exact rational linear programming, phase-1 only.
//!
//! All uses in this crate are feasibility questions (point-in-hull, cone
//! pointedness, Radon witnesses), so a phase-1 simplex with Bland's rule is
//! enough. Exact arithmetic means no tolerance knobs and guaranteed
//! termination.

use crate::rat::{Rat, RatVec};
use num_traits::{One, Signed, Zero};

/// Decides feasibility of {x >= 0 : A x = b} and returns a feasible point.
pub fn feasible_eq(a: &[RatVec], b: &[Rat]) -> Option<RatVec> {
    let m = a.len();
    assert_eq!(m, b.len());
    let n = if m == 0 { 0 } else { a[0].dim() };
    if m == 0 {
        return Some(RatVec::zeros(n));
    }
    // Tableau columns: n structural + m artificial + 1 rhs.
    // Row i: sum_j a[i][j] x_j + y_i = b_i with b_i >= 0 after sign fix.
    let cols = n + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rat> = Vec::with_capacity(cols + 1);
        let flip = b[i].is_negative();
        for j in 0..n {
            let v = a[i][j].clone();
            row.push(if flip { -v } else { v });
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Objective: minimize sum of artificials. Reduced costs row.
    let mut obj = vec![Rat::zero(); cols + 1];
    for row in &t {
        for (j, oj) in obj.iter_mut().enumerate() {
            *oj += &row[j];
        }
    }
    for j in n..cols {
        obj[j] -= Rat::one();
    }
    loop {
        // Bland: entering = smallest index with positive reduced gain.
        let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) else {
            break;
        };
        // Ratio test, Bland tie-break by smallest basis index.
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // Unbounded phase-1 cannot happen (objective bounded below by 0).
            break;
        };
        // Pivot.
        let pv = t[pivot_row][enter].clone();
        let inv = pv.recip();
        for x in t[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != pivot_row && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..=cols {
                    let sub = &f * &t[pivot_row][j];
                    t[i][j] = &t[i][j] - &sub;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..=cols {
                let sub = &f * &t[pivot_row][j];
                obj[j] = &obj[j] - &sub;
            }
        }
        basis[pivot_row] = enter;
    }
    // Feasible iff the artificial objective reached zero.
    if !obj[cols].is_zero() {
        return None;
    }
    // Any artificial still basic sits at level 0; structural solution reads off.
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][cols].clone();
        } else if !t[i][cols].is_zero() {
            return None; // should be unreachable given obj == 0
        }
    }
    Some(RatVec(x))
}

/// Is `point` in the convex hull of `points`? Exact.
pub fn in_convex_hull(point: &RatVec, points: &[RatVec]) -> bool {
    convex_combination(point, points).is_some()
}

/// Coefficients expressing `point` as a convex combination of `points`.
pub fn convex_combination(point: &RatVec, points: &[RatVec]) -> Option<RatVec> {
    let n = point.dim();
    let k = points.len();
    // rows: n coordinate equations + 1 normalization
    let mut a: Vec<RatVec> = Vec::with_capacity(n + 1);
    for c in 0..n {
        a.push(RatVec(points.iter().map(|p| p[c].clone()).collect()));
    }
    a.push(RatVec(vec![Rat::one(); k]));
    let mut b: Vec<Rat> = point.0.clone();
    b.push(Rat::one());
    feasible_eq(&a, &b)
}

/// Is `v` a nonnegative combination of `gens`? Exact cone membership.
pub fn in_cone(v: &RatVec, gens: &[RatVec]) -> bool {
    let n = v.dim();
    let a: Vec<RatVec> = (0..n)
        .map(|c| RatVec(gens.iter().map(|g| g[c].clone()).collect()))
        .collect();
    feasible_eq(&a, &v.0).is_some()
}

/// Searches for u with <u, v_i> >= 1 for all i (a strict positivity
/// certificate, witnessing pointedness of the cone spanned by the v_i).
pub fn positive_functional(vectors: &[RatVec]) -> Option<RatVec> {
    let d = if vectors.is_empty() { return None } else { vectors[0].dim() };
    let m = vectors.len();
    // Variables: u+ (d), u- (d), slack s (m), all >= 0.
    // <v_i, u+> - <v_i, u-> - s_i = 1.
    let cols = 2 * d + m;
    let mut a: Vec<RatVec> = Vec::with_capacity(m);
    for (i, v) in vectors.iter().enumerate() {
        let mut row = Vec::with_capacity(cols);
        row.extend(v.0.iter().cloned());
        row.extend(v.0.iter().map(|x| -x));
        for k in 0..m {
            row.push(if k == i { -Rat::one() } else { Rat::zero() });
        }
        a.push(RatVec(row));
    }
    let b = vec![Rat::one(); m];
    let x = feasible_eq(&a, &b)?;
    let u: Vec<Rat> = (0..d).map(|j| &x[j] - &x[d + j]).collect();
    Some(RatVec(u))
}

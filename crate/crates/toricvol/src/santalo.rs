//! The Santaló point: the interior translation point minimizing the volume
//! of the polar dual, with an exact-rational objective and gradient.
//!
//! The objective f(x) = vol((P-x)*) is smooth and convex on the interior of
//! P and blows up at the boundary. Its gradient is
//!     grad f(x) = (n+1) * vol(K*) * barycenter(K*),   K = P - x,
//! so the first-order condition is exactly the classical characterization:
//! the dual barycenter sits at the origin. The solver is a damped Newton
//! iteration with a finite-difference Hessian of the exact gradient, falling
//! back to gradient descent whenever the Hessian is not positive definite.

use crate::polytope::Polytope;
use crate::rat::{rat_to_f64, Rat, RatVec};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Result of a Santaló-point computation.
///
/// `dual_volume` and `mahler` are exact rationals evaluated at the returned
/// rational point, so they are upper brackets for the true minimum. `exact`
/// is set only on the symmetric and simplex fast paths, where the returned
/// point is provably the Santaló point.
#[derive(Clone, Debug)]
pub struct SantaloResult {
    pub point: RatVec,
    pub dual_volume: Rat,
    pub mahler: Rat,
    pub residual: f64,
    pub residual_sq: Rat,
    pub iterations: usize,
    pub exact: bool,
}

/// Exact vol((P-x)*) for x strictly interior to P.
pub fn polar_volume_at(p: &Polytope, x: &RatVec) -> Result<Rat> {
    Ok(dual_at(p, x)?.volume())
}

fn dual_at(p: &Polytope, x: &RatVec) -> Result<Polytope> {
    if !p.strictly_contains(x) {
        return Err(Error::OriginNotInterior(
            "translation point must be strictly interior (objective is +inf outside)".into(),
        ));
    }
    p.translate(&(-x)).polar_dual()
}

/// Exact gradient of x -> vol((P-x)*):
/// (n+1) * vol(dual) * barycenter(dual).
pub fn polar_volume_gradient(p: &Polytope, x: &RatVec) -> Result<RatVec> {
    let (_, g, _) = objective(p, x)?;
    Ok(g)
}

/// One dual construction yielding (f, grad f, dual barycenter).
fn objective(p: &Polytope, x: &RatVec) -> Result<(Rat, RatVec, RatVec)> {
    let dual = dual_at(p, x)?;
    let vol = dual.volume();
    let bary = dual.barycenter();
    let factor = Rat::from_integer(BigInt::from((p.dim() + 1) as u64)) * &vol;
    let grad = bary.scale(&factor);
    Ok((vol, grad, bary))
}

/// Computes the Santaló point of a full-dimensional polytope to the given
/// barycenter-residual tolerance.
pub fn santalo_point(p: &Polytope, tol: f64) -> Result<SantaloResult> {
    santalo_point_from(p, None, tol)
}

/// Same, but optionally starting from a caller-chosen interior point
/// (used by the multi-start consistency checks).
pub fn santalo_point_from(p: &Polytope, start: Option<RatVec>, tol: f64) -> Result<SantaloResult> {
    assert!(tol > 0.0, "tolerance must be positive");

    if start.is_none() {
        // Fast path: simplices. The Santaló point is the barycenter.
        if p.is_simplex() {
            return finish(p, p.barycenter(), 0, true);
        }
        // Fast path: centrally symmetric polytopes.
        if let Some(c) = p.symmetry_center() {
            return finish(p, c, 0, true);
        }
    }

    let tol_sq = exact_tol_sq(tol);
    let mut x = start.unwrap_or_else(|| p.barycenter());
    if !p.strictly_contains(&x) {
        return Err(Error::OriginNotInterior("start point not interior".into()));
    }
    // Every evaluated point keeps denominators at most 2^64; search
    // directions are rounded harder since only their sign pattern matters.
    let max_den = BigInt::one() << 64u32;
    let dir_den = BigInt::one() << 48u32;
    let max_iter = 10_000usize;
    let armijo = Rat::new(BigInt::one(), BigInt::from(10_000u32));

    let (mut f, mut g, mut bary) = objective(p, &x)?;
    for iter in 0..max_iter {
        if bary.norm_sq() <= tol_sq {
            return finish_with(p, x, f, bary, iter, false);
        }
        let dir = newton_direction(p, &x, &g)
            .map(|d| d.limit_denominators(&dir_den))
            .unwrap_or_else(|| (-&g).limit_denominators(&dir_den));
        // Guard against ascent directions from a bad or over-rounded
        // Hessian step.
        let slope = g.dot(&dir);
        let dir = if slope.is_negative() {
            dir
        } else {
            (-&g).limit_denominators(&dir_den)
        };
        let slope = g.dot(&dir);

        // Backtracking: first into the interior, then Armijo.
        let mut t = Rat::one();
        let half = Rat::new(BigInt::one(), BigInt::from(2u32));
        let mut accepted = None;
        for _ in 0..200 {
            let cand = (&x + &dir.scale(&t)).limit_denominators(&max_den);
            if p.strictly_contains(&cand) {
                let trial = objective(p, &cand)?;
                let needed = &f + &(&t * &armijo * &slope);
                if trial.0 <= needed {
                    accepted = Some((cand, trial));
                    break;
                }
            }
            t *= &half;
        }
        let Some((cand, trial)) = accepted else {
            // No admissible step: the iterate is numerically optimal.
            if bary.norm_sq() <= tol_sq {
                return finish_with(p, x, f, bary, iter, false);
            }
            return Err(Error::ToleranceNotReached(format!(
                "line search stalled at residual^2 = {}",
                rat_to_f64(&bary.norm_sq())
            )));
        };
        x = cand;
        (f, g, bary) = trial;
    }
    Err(Error::ToleranceNotReached(format!(
        "no convergence to tol {} within 10^4 iterations",
        tol
    )))
}

fn exact_tol_sq(tol: f64) -> Rat {
    let t = Rat::from_float(tol).expect("finite tolerance");
    &t * &t
}

fn finish(p: &Polytope, x: RatVec, iterations: usize, exact: bool) -> Result<SantaloResult> {
    let (f, _, bary) = objective(p, &x)?;
    if exact {
        debug_assert!(bary.is_zero(), "fast path must land on the exact optimum");
    }
    finish_with(p, x, f, bary, iterations, exact)
}

fn finish_with(
    p: &Polytope,
    x: RatVec,
    dual_volume: Rat,
    bary: RatVec,
    iterations: usize,
    exact: bool,
) -> Result<SantaloResult> {
    let residual_sq = bary.norm_sq();
    let residual = rat_to_f64(&residual_sq).sqrt();
    let mahler = p.volume() * &dual_volume;
    Ok(SantaloResult {
        point: x,
        dual_volume,
        mahler,
        residual,
        residual_sq,
        iterations,
        exact,
    })
}

/// Damped Newton direction from a central-difference Hessian of the exact
/// gradient. Returns None if the Hessian is unusable (not PD / singular).
fn newton_direction(p: &Polytope, x: &RatVec, g: &RatVec) -> Option<RatVec> {
    let n = p.dim();
    // Step scaled down until x ± h e_i stays interior.
    let mut h = Rat::new(BigInt::one(), BigInt::from(100_000u64));
    let mut cols: Vec<RatVec> = Vec::with_capacity(n);
    'outer: for _ in 0..60 {
        cols.clear();
        for i in 0..n {
            let mut fwd = x.clone();
            fwd[i] = &fwd[i] + &h;
            let mut bwd = x.clone();
            bwd[i] = &bwd[i] - &h;
            if !p.strictly_contains(&fwd) || !p.strictly_contains(&bwd) {
                h = &h * &Rat::new(BigInt::one(), BigInt::from(4u32));
                continue 'outer;
            }
            let gf = polar_volume_gradient(p, &fwd).ok()?;
            let gb = polar_volume_gradient(p, &bwd).ok()?;
            let two_h = Rat::from_integer(BigInt::from(2u32)) * &h;
            let col = (&gf - &gb).scale(&two_h.recip());
            cols.push(col.limit_denominators(&(BigInt::one() << 48u32)));
        }
        break;
    }
    if cols.len() != n {
        return None;
    }
    // Symmetrize: H = (C + C^T) / 2.
    let half = Rat::new(BigInt::one(), BigInt::from(2u32));
    let mut hess = vec![vec![Rat::zero(); n]; n];
    for (i, row) in hess.iter_mut().enumerate() {
        for (j, hij) in row.iter_mut().enumerate() {
            *hij = (&cols[j][i] + &cols[i][j]) * &half;
        }
    }
    solve_pd(&hess, &(-g))
}

/// Solves H d = b for symmetric H, verifying positive pivots (an LDL^T-style
/// positive-definiteness check). Exact arithmetic.
fn solve_pd(h: &[Vec<Rat>], b: &RatVec) -> Option<RatVec> {
    let n = h.len();
    let mut m: Vec<Vec<Rat>> = h.to_vec();
    let mut rhs = b.0.clone();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return None;
        }
        let inv = m[k][k].recip();
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k..n {
                let sub = &f * &m[k][j];
                m[i][j] = &m[i][j] - &sub;
            }
            let sub = &f * &rhs[k];
            rhs[i] = &rhs[i] - &sub;
        }
    }
    let mut d = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut s = rhs[i].clone();
        for j in (i + 1)..n {
            s = s - &m[i][j] * &d[j];
        }
        d[i] = s / &m[i][i];
    }
    Some(RatVec(d))
}

/// Non-symmetric Mahler volume vol(P) * vol((P-chi)*) at the computed
/// Santaló point: an exact rational upper bracket of the true Mahler volume
/// (exact on the simplex and symmetric fast paths).
pub fn mahler_volume(p: &Polytope, tol: f64) -> Result<Rat> {
    Ok(santalo_point(p, tol)?.mahler)
}

/// Heuristic certified bracket for the minimal dual volume:
/// [value * (1 - c * residual), value] with c = n * diameter(P*).
/// Documented as a heuristic, not a formal bound.
pub fn dual_volume_bracket(p: &Polytope, result: &SantaloResult) -> (f64, f64) {
    let upper = rat_to_f64(&result.dual_volume);
    if result.exact || result.residual == 0.0 {
        return (upper, upper);
    }
    let dual = p
        .translate(&(-&result.point))
        .polar_dual()
        .expect("returned point is interior");
    let diam = rat_to_f64(&dual.diameter_sq()).sqrt();
    let c = p.dim() as f64 * diam;
    let lower = upper * (1.0 - c * result.residual).max(0.0);
    (lower, upper)
}

//! Pointed rational cones, Gorenstein data, height polytopes, dual cones,
//! truncated-cone volumes, and the normalized volume.

use crate::linalg::{self, UnimodularMap};
use crate::lp;
use crate::polytope::{convex_hull, Polytope};
use crate::rat::{primitivize, rat_to_f64, Rat, RatVec};
use crate::santalo::{self, SantaloResult};
use crate::real::factorial;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A pointed full-dimensional rational cone given by its primitive extremal
/// ray generators.
#[derive(Clone, Debug)]
pub struct ToricCone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    pub label: Option<String>,
}

/// The rational point u with <u, v_rho> = 1 on all rays, and the least
/// positive integer making it integral.
#[derive(Clone, Debug)]
pub struct GorensteinData {
    pub u: RatVec,
    pub index: BigInt,
}

/// Coordinates in which the cone is the cone over `polytope` placed at
/// height `ell`: applying `splitting` to each ray yields (p_i, ell).
#[derive(Clone, Debug)]
pub struct HeightPolytope {
    pub polytope: Polytope,
    pub ell: BigInt,
    pub splitting: UnimodularMap,
}

/// Normalized volume together with its certificate data.
#[derive(Clone, Debug)]
pub struct NormalizedVolumeResult {
    pub value: f64,
    /// Exact rational value of the objective at the returned rational point;
    /// an upper bracket for the true normalized volume. Exact when
    /// `santalo.exact`.
    pub value_exact: Rat,
    pub value_bracket: (f64, f64),
    /// The minimizing xi = (chi, ell) pulled back to the original ray
    /// coordinates.
    pub minimizer_xi: RatVec,
    pub santalo: SantaloResult,
    pub ell: BigInt,
}

/// Builds a cone from integer ray generators: primitivizes, removes
/// non-extremal rays (with a warning), verifies pointedness and full
/// dimension. Returns the cone and the list of dropped non-extremal rays.
pub fn cone_from_rays(rays: &[Vec<BigInt>]) -> Result<(ToricCone, Vec<Vec<BigInt>>)> {
    if rays.is_empty() {
        return Err(Error::NotFullDimensional("no rays".into()));
    }
    let d = rays[0].len();
    if rays.iter().any(|r| r.len() != d) {
        return Err(Error::NotFullDimensional("mixed ray dimensions".into()));
    }
    let mut prim: Vec<Vec<BigInt>> = Vec::new();
    for r in rays {
        if r.iter().all(|x| x.is_zero()) {
            return Err(Error::NotPointed("zero vector is not a ray".into()));
        }
        let p = primitivize(r);
        if !prim.contains(&p) {
            prim.push(p);
        }
    }
    let as_rat: Vec<RatVec> = prim.iter().map(|r| RatVec::from_bigints(r)).collect();
    // Pointed: some u has <u, v> >= 1 on every ray.
    if lp::positive_functional(&as_rat).is_none() {
        return Err(Error::NotPointed("cone contains a line".into()));
    }
    if linalg::rank(&as_rat) < d {
        return Err(Error::NotFullDimensional(format!(
            "rays span rank {} < {}",
            linalg::rank(&as_rat),
            d
        )));
    }
    // Extremality: drop rays lying in the cone of the others.
    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    let mut dropped: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..prim.len() {
        let others: Vec<RatVec> = (0..prim.len())
            .filter(|&j| j != i)
            .map(|j| as_rat[j].clone())
            .collect();
        if lp::in_cone(&as_rat[i], &others) {
            dropped.push(prim[i].clone());
        } else {
            kept.push(prim[i].clone());
        }
    }
    // Sort rays for deterministic downstream output.
    kept.sort();
    Ok((
        ToricCone {
            dim: d,
            rays: kept,
            label: None,
        },
        dropped,
    ))
}

impl ToricCone {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    pub fn rays_rat(&self) -> Vec<RatVec> {
        self.rays.iter().map(|r| RatVec::from_bigints(r)).collect()
    }

    /// Smooth iff simplicial with |det| = 1.
    pub fn is_smooth(&self) -> bool {
        self.rays.len() == self.dim && linalg::det_int(&self.rays).abs().is_one()
    }

    /// Canonical key under GL(d,Z): the lexicographically smallest left
    /// Hermite normal form of the ray matrix over all ray orderings.
    pub fn normal_form(&self) -> Result<String> {
        let r = self.rays.len();
        if r > 8 {
            return Err(Error::Unsupported(format!(
                "cone normal form is limited to 8 rays, got {}",
                r
            )));
        }
        let perms = permutations(r);
        let mut best: Option<Vec<Vec<BigInt>>> = None;
        for ord in &perms {
            // Matrix columns = rays in this order.
            let mat: Vec<Vec<BigInt>> = (0..self.dim)
                .map(|row| ord.iter().map(|&i| self.rays[i][row].clone()).collect())
                .collect();
            let h = linalg::hnf_left(&mat);
            match &best {
                None => best = Some(h),
                Some(b) => {
                    if matrix_lex_lt(&h, b) {
                        best = Some(h);
                    }
                }
            }
        }
        let h = best.unwrap();
        let body: Vec<String> = h
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        Ok(format!("cone[d={};r={}]{}", self.dim, r, body.join(";")))
    }
}

fn matrix_lex_lt(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    for (ra, rb) in a.iter().zip(b.iter()) {
        for (xa, xb) in ra.iter().zip(rb.iter()) {
            match xa.cmp(xb) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    false
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(m, &mut cur, &mut out);
    out
}

/// Solves <u, v_rho> = 1 over Q. The Gorenstein index is the lcm of the
/// denominators of u.
pub fn gorenstein_data(cone: &ToricCone) -> Result<GorensteinData> {
    let rows = cone.rays_rat();
    let b = vec![Rat::one(); rows.len()];
    match linalg::solve(&rows, &b) {
        linalg::Solve::Unique(u) => {
            let index = u.denominator_lcm();
            Ok(GorensteinData { u, index })
        }
        linalg::Solve::Infeasible => Err(Error::NotQGorenstein(
            "no u with <u, v_rho> = 1 on all rays".into(),
        )),
        linalg::Solve::Underdetermined => Err(Error::AmbiguousU(
            "rays do not determine u uniquely; cone is not full-dimensional for this purpose"
                .into(),
        )),
    }
}

/// Builds an adapted basis splitting N = N_u x Z and returns the height
/// polytope: the lattice polytope P with cone = cone(P, ell).
///
/// Deterministic: the basis comes from a Hermite-style reduction of the
/// primitive integer vector ell*u, and when the cone is already adapted
/// (u = e_d) the splitting is the identity reordering.
pub fn height_polytope(cone: &ToricCone) -> Result<HeightPolytope> {
    let g = gorenstein_data(cone)?;
    let d = cone.dim;
    let m: Vec<BigInt> = g
        .u
        .0
        .iter()
        .map(|x| (x * Rat::from_integer(g.index.clone())).to_integer())
        .collect();
    // m = ell*u is primitive (minimality of the index).
    debug_assert!({
        let mut c = BigInt::zero();
        for x in &m {
            c = c.gcd(x);
        }
        c.is_one()
    });
    let u_cols = linalg::adapted_basis(&m); // columns: w, kernel basis
    // y = U^-1 v has y_1 = <m, v>; move the height to the last coordinate.
    let u_inv = linalg::inverse_unimodular(&u_cols);
    let mut rot: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); d]; d];
    for i in 0..d - 1 {
        rot[i][i + 1] = BigInt::one();
    }
    rot[d - 1][0] = BigInt::one();
    let split_mat = linalg::mat_mul_int(&rot, &u_inv);
    let splitting = UnimodularMap::new(split_mat, RatVec::zeros(d));
    let mut pts: Vec<RatVec> = Vec::with_capacity(cone.rays.len());
    for r in &cone.rays {
        let y = splitting.apply(&RatVec::from_bigints(r));
        if y[d - 1] != Rat::from_integer(g.index.clone()) {
            return Err(Error::NotQGorenstein(
                "ray does not sit at height ell in the adapted basis".into(),
            ));
        }
        pts.push(RatVec(y.0[..d - 1].to_vec()));
    }
    let polytope = convex_hull(&pts)?;
    if !polytope.is_lattice() {
        return Err(Error::NotQGorenstein("height polytope is not lattice".into()));
    }
    Ok(HeightPolytope {
        polytope,
        ell: g.index,
        splitting,
    })
}

/// Extreme rays of the dual cone = primitive inner facet normals of the
/// primal. Enumerates (d-1)-subsets of rays; fine at desk scale.
pub fn dual_cone(cone: &ToricCone) -> Result<ToricCone> {
    let d = cone.dim;
    let rays = cone.rays_rat();
    let mut normals: Vec<Vec<BigInt>> = Vec::new();
    let idx: Vec<usize> = (0..rays.len()).collect();
    for subset in combinations(&idx, d - 1) {
        let rows: Vec<RatVec> = subset.iter().map(|&i| rays[i].clone()).collect();
        if linalg::rank(&rows) != d - 1 {
            continue;
        }
        let kernel = linalg::kernel_basis(&rows, d);
        if kernel.len() != 1 {
            continue;
        }
        let (mut prim, _) = crate::rat::primitive_direction(&kernel[0]);
        // Orient inward: <n, ray> >= 0 for all rays, > 0 for some.
        let mut pos = false;
        let mut neg = false;
        for r in &rays {
            let v = RatVec::from_bigints(&prim).dot(r);
            if v.is_positive() {
                pos = true;
            }
            if v.is_negative() {
                neg = true;
            }
        }
        if pos && neg {
            continue; // not a supporting hyperplane
        }
        if neg {
            prim = prim.iter().map(|x| -x.clone()).collect();
        }
        if !pos && !neg {
            continue; // all rays on the hyperplane: cannot happen, full-dim
        }
        if !normals.contains(&prim) {
            normals.push(prim);
        }
    }
    normals.sort();
    let (dual, dropped) = cone_from_rays(&normals)?;
    debug_assert!(dropped.is_empty(), "facet normals are extremal in the dual");
    Ok(dual)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Per-cone context for repeated truncated-volume evaluations: the height
/// polytope for the relative-interior test plus the dual rays.
pub struct TruncationContext {
    pub hp: HeightPolytope,
    dual_rays: Vec<RatVec>,
    dim: usize,
}

impl TruncationContext {
    pub fn new(cone: &ToricCone) -> Result<Self> {
        Ok(TruncationContext {
            hp: height_polytope(cone)?,
            dual_rays: dual_cone(cone)?.rays_rat(),
            dim: cone.dim,
        })
    }

    /// Lattice volume d! * vol(sigma_dual intersected with {<xi,.> <= 1}).
    pub fn eval(&self, xi: &RatVec) -> Result<Rat> {
        let d = self.dim;
        let y = self.hp.splitting.apply(xi);
        let height_ok = y[d - 1] == Rat::from_integer(self.hp.ell.clone());
        let x = RatVec(y.0[..d - 1].to_vec());
        if !height_ok || !self.hp.polytope.strictly_contains(&x) {
            return Err(Error::Unbounded(
                "xi is outside the relative interior of conv{v_rho}; the truncated cone is unbounded"
                    .into(),
            ));
        }
        // Truncation = conv({0} and the dual rays scaled onto <xi,.> = 1).
        let mut pts: Vec<RatVec> = vec![RatVec::zeros(d)];
        for r in &self.dual_rays {
            let t = xi.dot(r);
            if !t.is_positive() {
                return Err(Error::Unbounded(
                    "a dual ray is orthogonal to xi; the truncated cone is unbounded".into(),
                ));
            }
            pts.push(r.scale(&t.recip()));
        }
        let trunc = convex_hull(&pts)?;
        Ok(trunc.volume() * Rat::from_integer(factorial(d as u64)))
    }
}

/// Lattice volume d! * vol(sigma_dual intersected with {<xi, .> <= 1}).
///
/// Requires xi in the relative interior of conv{v_rho}; anywhere else the
/// truncation is unbounded (the objective is +infinity).
pub fn truncated_volume(cone: &ToricCone, xi: &RatVec) -> Result<Rat> {
    TruncationContext::new(cone)?.eval(xi)
}

/// Lattice volume of the truncation at xi_0 = (0, ell): the weight
/// valuation. Requires the origin strictly interior to the height polytope.
pub fn weight_volume(cone: &ToricCone) -> Result<Rat> {
    let hp = height_polytope(cone)?;
    if !hp.polytope.strictly_contains(&RatVec::zeros(cone.dim - 1)) {
        return Err(Error::OriginNotInterior(
            "weight valuation needs 0 interior to the height polytope".into(),
        ));
    }
    let dual = hp.polytope.polar_dual()?;
    let n = cone.dim - 1;
    Ok(dual.volume() * Rat::new(factorial(n as u64), hp.ell.clone()))
}

/// The normalized volume: ((d-1)!/ell) * vol((P - chi)*) at the Santaló
/// point chi of the height polytope.
pub fn normalized_volume(cone: &ToricCone, tol: f64) -> Result<NormalizedVolumeResult> {
    let hp = height_polytope(cone)?;
    normalized_volume_with(cone, &hp, tol)
}

/// Variant reusing an already-computed height polytope.
pub fn normalized_volume_with(
    cone: &ToricCone,
    hp: &HeightPolytope,
    tol: f64,
) -> Result<NormalizedVolumeResult> {
    let n = cone.dim - 1;
    let sant = santalo::santalo_point(&hp.polytope, tol)?;
    let scale = Rat::new(factorial(n as u64), hp.ell.clone());
    let value_exact = &sant.dual_volume * &scale;
    let value = rat_to_f64(&value_exact);
    let (dlo, dhi) = santalo::dual_volume_bracket(&hp.polytope, &sant);
    let sf = rat_to_f64(&scale);
    let value_bracket = (dlo * sf, dhi * sf);
    // xi = (chi, ell) back through the splitting.
    let mut up = sant.point.0.clone();
    up.push(Rat::from_integer(hp.ell.clone()));
    let minimizer_xi = hp.splitting.inverse().apply(&RatVec(up));
    Ok(NormalizedVolumeResult {
        value,
        value_exact,
        value_bracket,
        minimizer_xi,
        santalo: sant,
        ell: hp.ell.clone(),
    })
}

/// Brute-force oracle: minimizes the truncated volume on a refining grid
/// over the height polytope, down to `levels` halvings of the initial
/// spacing (spacing starts at diameter/4). Exact evaluations at rational
/// grid points; returns the best (xi, value) found.
pub fn grid_minimize_truncated(cone: &ToricCone, levels: u32) -> Result<(RatVec, Rat)> {
    let ctx = TruncationContext::new(cone)?;
    let n = cone.dim - 1;
    let p = &ctx.hp.polytope;
    // Start from the barycenter with spacing ~ diameter/4.
    let mut center = p.barycenter();
    let diam = crate::real::sqrt_rat(&p.diameter_sq(), 10);
    let mut spacing = diam * Rat::new(BigInt::one(), BigInt::from(4u32));
    let back = ctx.hp.splitting.inverse();
    let ell = ctx.hp.ell.clone();
    let lift = |x: &RatVec| -> RatVec {
        let mut up = x.0.clone();
        up.push(Rat::from_integer(ell.clone()));
        back.apply(&RatVec(up))
    };
    let mut best_x = center.clone();
    let mut best: Option<Rat> = None;
    let offsets = stencil(n);
    let max_den = BigInt::one() << 40u32;
    for _ in 0..=levels {
        for off in &offsets {
            let step = RatVec(
                off.iter()
                    .map(|k| Rat::from_integer(BigInt::from(*k)) * &spacing)
                    .collect(),
            );
            // Bounded denominators keep repeated exact evaluations cheap.
            let cand = (&center + &step).limit_denominators(&max_den);
            if !p.strictly_contains(&cand) {
                continue;
            }
            let xi = lift(&cand);
            let v = ctx.eval(&xi)?;
            if best.is_none() || v < *best.as_ref().unwrap() {
                best = Some(v);
                best_x = cand.clone();
            }
        }
        center = best_x.clone();
        spacing = spacing * Rat::new(BigInt::one(), BigInt::from(2u32));
    }
    let xi = lift(&best_x);
    Ok((xi, best.expect("grid visits at least the barycenter")))
}

fn stencil(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            for k in -2i64..=2 {
                let mut w = v.clone();
                w.push(k);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rays(list: &[&[i64]]) -> Vec<Vec<BigInt>> {
        list.iter()
            .map(|r| r.iter().map(|&x| bi(x)).collect())
            .collect()
    }

    #[test]
    fn cone_construction() {
        let (c, dropped) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(c.rays().len(), 2);
        assert!(dropped.is_empty());

        let (c, dropped) = cone_from_rays(&rays(&[&[1, 0], &[1, 1], &[1, 2]])).unwrap();
        assert_eq!(c.rays().len(), 2);
        assert_eq!(dropped, rays(&[&[1, 1]]));

        assert!(matches!(
            cone_from_rays(&rays(&[&[1, 0], &[-1, 0]])),
            Err(Error::NotPointed(_))
        ));
        assert!(matches!(
            cone_from_rays(&rays(&[&[1, 0, 0], &[0, 1, 0]])),
            Err(Error::NotFullDimensional(_))
        ));
    }

    #[test]
    fn gorenstein_examples() {
        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        let g = gorenstein_data(&c).unwrap();
        assert_eq!(g.u, RatVec::from_ints(&[1, 0]));
        assert_eq!(g.index, bi(1));

        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[-1, 3]])).unwrap();
        let g = gorenstein_data(&c).unwrap();
        assert_eq!(g.u, RatVec(vec![rat_int(1), rat(2, 3)]));
        assert_eq!(g.index, bi(3));

        let (c, _) =
            cone_from_rays(&rays(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, -1]])).unwrap();
        assert!(matches!(gorenstein_data(&c), Err(Error::NotQGorenstein(_))));
    }

    #[test]
    fn height_polytopes() {
        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        let hp = height_polytope(&c).unwrap();
        assert_eq!(hp.ell, bi(1));
        assert_eq!(hp.polytope.lattice_volume(), rat_int(2));

        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[-1, 3]])).unwrap();
        let hp = height_polytope(&c).unwrap();
        assert_eq!(hp.ell, bi(3));
        assert_eq!(hp.polytope.lattice_volume(), rat_int(1));

        let (c, _) = cone_from_rays(&rays(&[
            &[0, 0, 1],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        let hp = height_polytope(&c).unwrap();
        assert_eq!(hp.ell, bi(1));
        assert_eq!(hp.polytope.vertices().len(), 4);
        assert_eq!(hp.polytope.volume(), rat_int(1));
    }

    #[test]
    fn dual_cones() {
        // First orthant is self-dual.
        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[0, 1]])).unwrap();
        let d = dual_cone(&c).unwrap();
        assert_eq!(d.rays(), c.rays());

        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        let d = dual_cone(&c).unwrap();
        assert_eq!(d.rays(), &rays(&[&[0, 1], &[2, -1]])[..]);

        // Cone over [-1,1]^2 at height 1 dualizes to the cone over the
        // cross-polytope at height 1.
        let (c, _) = cone_from_rays(&rays(&[
            &[-1, -1, 1],
            &[1, -1, 1],
            &[-1, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        let d = dual_cone(&c).unwrap();
        let (expect, _) = cone_from_rays(&rays(&[
            &[1, 0, 1],
            &[-1, 0, 1],
            &[0, 1, 1],
            &[0, -1, 1],
        ]))
        .unwrap();
        assert_eq!(d.rays(), expect.rays());
    }

    #[test]
    fn truncated_volumes() {
        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(
            truncated_volume(&c, &RatVec::from_ints(&[1, 1])).unwrap(),
            rat_int(2)
        );
        assert!(matches!(
            truncated_volume(&c, &RatVec::from_ints(&[1, 0])),
            Err(Error::Unbounded(_))
        ));

        let (q, _) = cone_from_rays(&rays(&[
            &[0, 0, 1],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        let xi = RatVec(vec![rat(1, 2), rat(1, 2), rat_int(1)]);
        assert_eq!(truncated_volume(&q, &xi).unwrap(), rat_int(16));
    }

    #[test]
    fn normalized_volumes_exact_cases() {
        let (a1, _) = cone_from_rays(&rays(&[&[1, 0], &[1, 2]])).unwrap();
        let r = normalized_volume(&a1, 1e-9).unwrap();
        assert_eq!(r.value_exact, rat_int(2));
        assert!(r.santalo.exact);

        let (q, _) = cone_from_rays(&rays(&[
            &[0, 0, 1],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        let r = normalized_volume(&q, 1e-9).unwrap();
        assert_eq!(r.value_exact, rat_int(16));

        let (third, _) = cone_from_rays(&rays(&[&[1, 0], &[-1, 3]])).unwrap();
        let r = normalized_volume(&third, 1e-9).unwrap();
        assert_eq!(r.value_exact, rat(4, 3));
        assert_eq!(r.ell, bi(3));

        // Smooth points: d^d.
        for d in 2..=4usize {
            let mut rs: Vec<Vec<BigInt>> = Vec::new();
            // cone over the standard simplex at height 1
            let mut apex = vec![bi(0); d];
            apex[d - 1] = bi(1);
            rs.push(apex);
            for i in 0..d - 1 {
                let mut v = vec![bi(0); d];
                v[i] = bi(1);
                v[d - 1] = bi(1);
                rs.push(v);
            }
            let (c, _) = cone_from_rays(&rs).unwrap();
            assert!(c.is_smooth());
            let r = normalized_volume(&c, 1e-9).unwrap();
            assert_eq!(
                r.value_exact,
                Rat::from_integer(BigInt::from(d as u64).pow(d as u32))
            );
        }
    }

    #[test]
    fn weight_volume_examples() {
        let (cross, _) = cone_from_rays(&rays(&[
            &[1, 0, 1],
            &[-1, 0, 1],
            &[0, 1, 1],
            &[0, -1, 1],
        ]))
        .unwrap();
        assert_eq!(weight_volume(&cross).unwrap(), rat_int(8));

        let (boxc, _) = cone_from_rays(&rays(&[
            &[-1, -1, 1],
            &[1, -1, 1],
            &[-1, 1, 1],
            &[1, 1, 1],
        ]))
        .unwrap();
        assert_eq!(weight_volume(&boxc).unwrap(), rat_int(4));

        let (corner, _) = cone_from_rays(&rays(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 1]])).unwrap();
        assert!(matches!(
            weight_volume(&corner),
            Err(Error::OriginNotInterior(_))
        ));
    }

    #[test]
    fn reduction_identity() {
        // truncated_volume at xi(chi) equals ((d-1)!/ell) * polar_volume_at.
        let (c, _) = cone_from_rays(&rays(&[&[1, 0], &[-1, 3]])).unwrap();
        let hp = height_polytope(&c).unwrap();
        let chi = RatVec(vec![
            &hp.polytope.vertices()[0][0]
                + &((&hp.polytope.vertices()[1][0] - &hp.polytope.vertices()[0][0]) * rat(2, 7)),
        ]);
        let mut up = chi.0.clone();
        up.push(Rat::from_integer(hp.ell.clone()));
        let xi = hp.splitting.inverse().apply(&RatVec(up));
        let lhs = truncated_volume(&c, &xi).unwrap();
        let pv = crate::santalo::polar_volume_at(&hp.polytope, &chi).unwrap();
        let rhs = pv * Rat::new(crate::real::factorial(1), hp.ell.clone());
        assert_eq!(lhs, rhs);
    }
}

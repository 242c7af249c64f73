//! Shared generators and oracles for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricvol::polytope::{convex_hull, Polytope};
use toricvol::rat::{Rat, RatVec};
use toricvol::toric::{cone_from_rays, ToricCone};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random full-dimensional lattice polytope from a handful of small integer
/// points. None if the sample was degenerate.
pub fn random_lattice_polytope(
    r: &mut ChaCha8Rng,
    dim: usize,
    max_pts: usize,
    coord: i64,
) -> Option<Polytope> {
    let k = r.gen_range(dim + 1..=max_pts);
    let pts: Vec<RatVec> = (0..k)
        .map(|_| RatVec::from_ints(&(0..dim).map(|_| r.gen_range(-coord..=coord)).collect::<Vec<_>>()))
        .collect();
    convex_hull(&pts).ok()
}

/// Random rational point strictly inside `p`: a random convex combination
/// of the vertices with small denominators.
pub fn random_interior_point(r: &mut ChaCha8Rng, p: &Polytope) -> RatVec {
    loop {
        let mut weights: Vec<i64> = p.vertices().iter().map(|_| r.gen_range(1..=8)).collect();
        // Bias one vertex to keep the point generic.
        let i = r.gen_range(0..weights.len());
        weights[i] += r.gen_range(0..4);
        let total: i64 = weights.iter().sum();
        let mut x = RatVec::zeros(p.dim());
        for (v, w) in p.vertices().iter().zip(&weights) {
            x = &x + &v.scale(&Rat::new(BigInt::from(*w), BigInt::from(total)));
        }
        if p.strictly_contains(&x) {
            return x;
        }
    }
}

/// Random Q-Gorenstein cone of dimension d built as cone(P + shift, ell)
/// with all rays primitive (so the true Gorenstein index is ell).
pub fn random_qgorenstein_cone(r: &mut ChaCha8Rng, d: usize) -> Option<ToricCone> {
    let n = d - 1;
    let ell = r.gen_range(1..=3i64);
    let base: Option<Polytope> = if n == 1 {
        let l = r.gen_range(1..=6i64);
        convex_hull(&[RatVec::from_ints(&[0]), RatVec::from_ints(&[l])]).ok()
    } else {
        random_lattice_polytope(r, n, 6, 2)
    };
    let base = base?;
    let shift: Vec<i64> = (0..n).map(|_| r.gen_range(0..ell.max(1))).collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    for v in base.vertices() {
        let mut ray: Vec<BigInt> = v
            .0
            .iter()
            .enumerate()
            .map(|(j, x)| x.to_integer() + BigInt::from(shift[j]))
            .collect();
        ray.push(BigInt::from(ell));
        if toricvol::rat::primitivize(&ray) != ray {
            return None;
        }
        rays.push(ray);
    }
    let (cone, dropped) = cone_from_rays(&rays).ok()?;
    if !dropped.is_empty() {
        return None;
    }
    Some(cone)
}

/// Brute-force unimodular-equivalence oracle for lattice polygons: searches
/// all integer matrices with entries in [-bound, bound] and |det| = 1,
/// matching translations through vertex alignment.
pub fn brute_force_equivalent_2d(a: &Polytope, b: &Polytope, bound: i64) -> bool {
    if a.vertices().len() != b.vertices().len() {
        return false;
    }
    let verts_b: std::collections::BTreeSet<RatVec> = b.vertices().iter().cloned().collect();
    for m00 in -bound..=bound {
        for m01 in -bound..=bound {
            for m10 in -bound..=bound {
                for m11 in -bound..=bound {
                    if (m00 * m11 - m01 * m10).abs() != 1 {
                        continue;
                    }
                    // Map a's vertices, then translate the first image onto
                    // each vertex of b.
                    let imgs: Vec<RatVec> = a
                        .vertices()
                        .iter()
                        .map(|v| {
                            RatVec(vec![
                                Rat::from_integer(BigInt::from(m00)) * &v[0]
                                    + Rat::from_integer(BigInt::from(m01)) * &v[1],
                                Rat::from_integer(BigInt::from(m10)) * &v[0]
                                    + Rat::from_integer(BigInt::from(m11)) * &v[1],
                            ])
                        })
                        .collect();
                    for target in b.vertices() {
                        let t = target - &imgs[0];
                        if !t.is_integral() {
                            continue;
                        }
                        let moved: std::collections::BTreeSet<RatVec> =
                            imgs.iter().map(|v| v + &t).collect();
                        if moved == verts_b {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

//! Property tests for the Santaló solver: gradient correctness against
//! exact finite differences, affine invariance of the Mahler volume, the
//! optimality certificate, and monotonicity under inclusion.

mod common;

use common::{random_interior_point, random_lattice_polytope, rng};
use num_bigint::BigInt;
use rand::Rng;
use toricvol::linalg::random_unimodular;
use toricvol::polytope::convex_hull;
use toricvol::rat::{rat, rat_to_f64, Rat, RatVec};
use toricvol::real::factorial;
use toricvol::santalo::{
    mahler_volume, polar_volume_at, polar_volume_gradient, santalo_point,
};

#[test]
fn gradient_matches_central_differences() {
    let mut r = rng(21);
    let h = rat(1, 100_000);
    let mut done = 0;
    while done < 50 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 8, 2) else {
            continue;
        };
        let x = random_interior_point(&mut r, &p);
        let mut ok = true;
        for i in 0..dim {
            let mut fwd = x.clone();
            fwd[i] = &fwd[i] + &h;
            let mut bwd = x.clone();
            bwd[i] = &bwd[i] - &h;
            if !p.strictly_contains(&fwd) || !p.strictly_contains(&bwd) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let g = polar_volume_gradient(&p, &x).unwrap();
        let mut fd = RatVec::zeros(dim);
        for i in 0..dim {
            let mut fwd = x.clone();
            fwd[i] = &fwd[i] + &h;
            let mut bwd = x.clone();
            bwd[i] = &bwd[i] - &h;
            fd[i] = (polar_volume_at(&p, &fwd).unwrap() - polar_volume_at(&p, &bwd).unwrap())
                / (Rat::from_integer(BigInt::from(2)) * &h);
        }
        let diff = rat_to_f64(&(&fd - &g).norm_sq()).sqrt();
        let scale = rat_to_f64(&g.norm_sq()).sqrt().max(1e-30);
        assert!(
            diff / scale <= 1e-6,
            "dim {} rel err {}",
            dim,
            diff / scale
        );
        done += 1;
    }
}

#[test]
fn mahler_affine_invariance() {
    let tol = 1e-9;
    let mut r = rng(22);
    let mut done = 0;
    while done < 20 {
        let dim = r.gen_range(2..=3);
        let Some(p) = random_lattice_polytope(&mut r, dim, 7, 2) else {
            continue;
        };
        let t = random_unimodular(r.gen(), dim, 25);
        let q = p.apply_map(&t);
        let ma = mahler_volume(&p, tol).unwrap();
        let mb = mahler_volume(&q, tol).unwrap();
        let (fa, fb) = (rat_to_f64(&ma), rat_to_f64(&mb));
        assert!(
            ((fa - fb) / fa).abs() <= 10.0 * tol,
            "mahler not invariant: {} vs {}",
            fa,
            fb
        );
        done += 1;
    }
}

#[test]
fn optimality_certificate() {
    // At the returned point: |grad| = (n+1) * dual_volume * |bary| <=
    // (n+1) * dual_volume * tol.
    let tol = 1e-9;
    let mut r = rng(23);
    let mut done = 0;
    while done < 15 {
        let dim = r.gen_range(2..=3);
        let Some(p) = random_lattice_polytope(&mut r, dim, 7, 2) else {
            continue;
        };
        let res = santalo_point(&p, tol).unwrap();
        let g = polar_volume_gradient(&p, &res.point).unwrap();
        let gnorm = rat_to_f64(&g.norm_sq()).sqrt();
        let cap = (dim as f64 + 1.0) * rat_to_f64(&res.dual_volume) * tol;
        assert!(gnorm <= cap * (1.0 + 1e-9), "|g| = {} > {}", gnorm, cap);
        done += 1;
    }
}

#[test]
fn monotone_under_inclusion_random() {
    let mut r = rng(24);
    let mut done = 0;
    while done < 30 {
        let dim = r.gen_range(2..=3);
        let Some(q) = random_lattice_polytope(&mut r, dim, 6, 2) else {
            continue;
        };
        // P = hull(Q plus extra points) contains Q.
        let mut pts = q.vertices().to_vec();
        for _ in 0..3 {
            pts.push(RatVec::from_ints(
                &(0..dim).map(|_| r.gen_range(-3..=3)).collect::<Vec<_>>(),
            ));
        }
        let Ok(p) = convex_hull(&pts) else { continue };
        let z = random_interior_point(&mut r, &q);
        if !p.strictly_contains(&z) {
            continue;
        }
        let vp = polar_volume_at(&p, &z).unwrap();
        let vq = polar_volume_at(&q, &z).unwrap();
        assert!(vp <= vq, "inclusion must shrink the dual");
        done += 1;
    }
}

#[test]
fn simplex_mahler_exact_dims_1_to_5() {
    // Random lattice simplices in each dimension: the rational fast path
    // must return (n+1)^(n+1)/(n!)^2 exactly.
    let mut r = rng(25);
    for n in 1..=5usize {
        let mut done = 0;
        while done < 4 {
            let pts: Vec<RatVec> = (0..=n)
                .map(|_| {
                    RatVec::from_ints(&(0..n).map(|_| r.gen_range(-3..=3)).collect::<Vec<_>>())
                })
                .collect();
            let Ok(p) = convex_hull(&pts) else { continue };
            if !p.is_simplex() {
                continue;
            }
            let m = mahler_volume(&p, 1e-9).unwrap();
            let nf = factorial(n as u64);
            let expect = Rat::new(BigInt::from((n + 1) as u64).pow((n + 1) as u32), &nf * &nf);
            assert_eq!(m, expect, "simplex Mahler volume in dim {}", n);
            done += 1;
        }
    }
}

#[test]
fn convexity_probe_random_segments() {
    // No interior sample along a segment exceeds both endpoint values.
    let mut r = rng(26);
    let mut done = 0;
    while done < 20 {
        let dim = r.gen_range(2..=3);
        let Some(p) = random_lattice_polytope(&mut r, dim, 7, 2) else {
            continue;
        };
        let a = random_interior_point(&mut r, &p);
        let b = random_interior_point(&mut r, &p);
        if a == b {
            continue;
        }
        let fa = polar_volume_at(&p, &a).unwrap();
        let fb = polar_volume_at(&p, &b).unwrap();
        let cap = if fa > fb { fa } else { fb };
        for k in 1..10 {
            let t = rat(k, 10);
            let one_minus = Rat::from_integer(BigInt::from(1)) - &t;
            let x = &a.scale(&one_minus) + &b.scale(&t);
            let f = polar_volume_at(&p, &x).unwrap();
            assert!(f <= cap);
        }
        done += 1;
    }
}

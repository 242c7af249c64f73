//! Property tests for the exact polytope core, with independent oracles:
//! Pick's theorem for areas, point-membership counting for triangulations,
//! and a brute-force unimodular search for normal-form soundness.

mod common;

use common::{brute_force_equivalent_2d, random_lattice_polytope, rng};
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use toricvol::linalg::{random_unimodular, UnimodularMap};
use toricvol::polytope::{convex_hull, polytope_from_ints, standard_simplex};
use toricvol::rat::{rat, rat_int, Rat, RatVec};
use toricvol::real::factorial;

#[test]
fn dual_involution_random() {
    let mut r = rng(11);
    let mut done = 0;
    while done < 40 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 8, 2) else {
            continue;
        };
        // Recentre at the barycenter so the origin is interior.
        let q = p.translate(&(-&p.barycenter()));
        let dd = q.polar_dual().unwrap().polar_dual().unwrap();
        assert_eq!(dd.vertices(), q.vertices());
        assert_eq!(dd.facets(), q.facets());
        done += 1;
    }
}

#[test]
fn volume_invariant_under_unimodular_maps() {
    let mut r = rng(12);
    let mut done = 0;
    while done < 40 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 8, 2) else {
            continue;
        };
        let t = random_unimodular(r.gen(), dim, 30);
        let q = p.apply_map(&t);
        assert_eq!(p.volume(), q.volume());
        assert!(q.is_lattice());
        done += 1;
    }
}

#[test]
fn area_matches_picks_theorem() {
    // Pick: area = interior + boundary/2 - 1, an independent route to the
    // triangulation-based volume.
    let mut r = rng(13);
    let mut done = 0;
    while done < 60 {
        let Some(p) = random_lattice_polytope(&mut r, 2, 9, 4) else {
            continue;
        };
        let interior = p.interior_lattice_points().len() as i64;
        let total = p.lattice_points().len() as i64;
        let boundary = total - interior;
        let pick = rat_int(interior) + rat(boundary, 2) - rat_int(1);
        assert_eq!(p.volume(), pick);
        done += 1;
    }
}

#[test]
fn triangulation_covers_disjointly() {
    let mut r = rng(14);
    let mut done = 0;
    while done < 25 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 9, 2) else {
            continue;
        };
        let tri = p.triangulate();
        let total: Rat = tri
            .simplices
            .iter()
            .map(|s| simplex_volume(&p, s))
            .sum();
        assert_eq!(total, p.volume());
        // Random rational points strictly inside the polytope must lie in
        // at least one simplex and strictly inside at most one.
        for _ in 0..10 {
            let x = common::random_interior_point(&mut r, &p);
            let mut strictly_in = 0;
            let mut weakly_in = 0;
            for s in &tri.simplices {
                match simplex_position(&p, s, &x) {
                    Some(true) => {
                        strictly_in += 1;
                        weakly_in += 1;
                    }
                    Some(false) => weakly_in += 1,
                    None => {}
                }
            }
            assert!(weakly_in >= 1, "interior point not covered");
            assert!(strictly_in <= 1, "interiors overlap");
        }
        done += 1;
    }
}

fn simplex_volume(p: &toricvol::polytope::Polytope, s: &[usize]) -> Rat {
    let rows: Vec<RatVec> = s[1..]
        .iter()
        .map(|&i| &p.vertices()[i] - &p.vertices()[s[0]])
        .collect();
    toricvol::linalg::det_rat(&rows)
        .abs()
        / Rat::from_integer(factorial(p.dim() as u64))
}

/// Some(true) if x is strictly inside the simplex, Some(false) if on its
/// boundary, None if outside. Exact barycentric coordinates.
fn simplex_position(p: &toricvol::polytope::Polytope, s: &[usize], x: &RatVec) -> Option<bool> {
    let verts: Vec<&RatVec> = s.iter().map(|&i| &p.vertices()[i]).collect();
    let rows: Vec<RatVec> = verts[1..].iter().map(|v| *v - verts[0]).collect();
    let rhs = x - verts[0];
    // Solve rows^T * lambda = rhs for the n barycentric weights of v1..vn.
    let n = p.dim();
    let cols: Vec<RatVec> = (0..n)
        .map(|c| RatVec(rows.iter().map(|row| row[c].clone()).collect()))
        .collect();
    match toricvol::linalg::solve(&cols, &rhs.0) {
        toricvol::linalg::Solve::Unique(lambda) => {
            let sum: Rat = lambda.0.iter().cloned().sum();
            let lam0 = Rat::one() - &sum;
            let mut all = lambda.0.clone();
            all.push(lam0);
            use num_traits::Signed;
            if all.iter().any(|l| l.is_negative()) {
                None
            } else if all.iter().any(|l| l.is_zero()) {
                Some(false)
            } else {
                Some(true)
            }
        }
        _ => None,
    }
}

use num_traits::{Signed, Zero};

#[test]
fn hull_idempotent_random() {
    let mut r = rng(15);
    let mut done = 0;
    while done < 40 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 10, 3) else {
            continue;
        };
        let q = convex_hull(p.vertices()).unwrap();
        assert_eq!(p.vertices(), q.vertices());
        assert_eq!(p.facets(), q.facets());
        done += 1;
    }
}

#[test]
fn normal_form_invariant_under_100_random_maps() {
    let mut r = rng(16);
    for seed_poly in 0..6 {
        let p = loop {
            if let Some(p) = random_lattice_polytope(&mut r, 2, 7, 3 + seed_poly % 2) {
                break p;
            }
        };
        let key = p.normal_form().unwrap();
        for _ in 0..100 {
            let mut t = random_unimodular(r.gen(), 2, 25);
            // Force an integral shift so the image stays a lattice polytope.
            t.shift = RatVec::from_ints(&[r.gen_range(-5..=5), r.gen_range(-5..=5)]);
            let q = p.apply_map(&t);
            assert_eq!(q.normal_form().unwrap(), key);
        }
    }
}

#[test]
fn normal_form_agrees_with_brute_force_oracle() {
    // The spec's comparison pair plus a volume-separated pair.
    let a = polytope_from_ints(&[&[0, 0], &[2, 0], &[0, 1]]).unwrap();
    let b = polytope_from_ints(&[&[0, 0], &[1, 0], &[1, 2]]).unwrap();
    let keys_equal = a.normal_form().unwrap() == b.normal_form().unwrap();
    let oracle = brute_force_equivalent_2d(&a, &b, 3);
    assert_eq!(keys_equal, oracle);
    assert!(keys_equal);

    // Triangles of different lattice volume can never be equivalent.
    let c = polytope_from_ints(&[&[0, 0], &[3, 0], &[0, 1]]).unwrap();
    assert_ne!(a.normal_form().unwrap(), c.normal_form().unwrap());
    assert!(!brute_force_equivalent_2d(&a, &c, 3));

    // Randomized: key equality must match the brute-force search.
    let mut r = rng(17);
    let mut done = 0;
    while done < 12 {
        let Some(p) = random_lattice_polytope(&mut r, 2, 5, 2) else {
            continue;
        };
        let Some(q) = random_lattice_polytope(&mut r, 2, 5, 2) else {
            continue;
        };
        let keys = p.normal_form().unwrap() == q.normal_form().unwrap();
        let oracle = brute_force_equivalent_2d(&p, &q, 4);
        assert_eq!(keys, oracle);
        done += 1;
    }
}

#[test]
fn lattice_volume_lower_bound() {
    // Every full-dimensional lattice polytope has volume >= 1/n!.
    let mut r = rng(18);
    let mut done = 0;
    while done < 40 {
        let dim = r.gen_range(2..=4);
        let Some(p) = random_lattice_polytope(&mut r, dim, 8, 2) else {
            continue;
        };
        let min = Rat::new(BigInt::one(), factorial(dim as u64));
        assert!(p.volume() >= min);
        done += 1;
    }
    assert_eq!(standard_simplex(3).volume(), Rat::new(BigInt::one(), factorial(3)));
}

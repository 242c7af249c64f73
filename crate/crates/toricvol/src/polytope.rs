//! Exact rational convex geometry: hulls, polar duals, volumes, barycenters,
//! triangulations, and unimodular normal forms.
//!
//! Every polytope carries both an irredundant vertex list (sorted
//! lexicographically) and an irredundant facet list (sorted by normalized
//! halfspace), plus the vertex-facet incidence. All predicates are exact.

use crate::linalg::{self, UnimodularMap};
use crate::rat::{primitive_direction, Rat, RatVec};
use crate::{Error, Result};
use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};

/// The halfspace {x : <normal, x> <= offset}. For facets of rational
/// polytopes the normal is always a primitive integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: RatVec,
    pub offset: Rat,
}

impl Halfspace {
    pub fn eval(&self, x: &RatVec) -> Rat {
        self.normal.dot(x)
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.eval(x) <= self.offset
    }

    pub fn strictly_contains(&self, x: &RatVec) -> bool {
        self.eval(x) < self.offset
    }

    pub fn on_boundary(&self, x: &RatVec) -> bool {
        self.eval(x) == self.offset
    }
}

/// Full-dimensional convex rational polytope with both representations.
#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RatVec>,
    facets: Vec<Halfspace>,
    /// facet_vertices[i] = sorted indices of vertices lying on facet i.
    facet_vertices: Vec<Vec<usize>>,
    is_lattice: bool,
}

/// A triangulation into full-dimensional simplices, as (n+1)-tuples of
/// vertex indices.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
}

// ---------------------------------------------------------------------------
// Hull construction
// ---------------------------------------------------------------------------

struct SFacet {
    verts: Vec<usize>, // n point indices, sorted
    normal: RatVec,    // primitive integer, outward
    offset: Rat,
    alive: bool,
}

/// Hyperplane through `pts` (n affinely independent points in R^n), oriented
/// so that `inside` satisfies <a, x> < b. Returns None if degenerate.
fn oriented_hyperplane(pts: &[&RatVec], inside: &RatVec) -> Option<(RatVec, Rat)> {
    let n = pts[0].dim();
    debug_assert_eq!(pts.len(), n);
    let rows: Vec<RatVec> = pts[1..].iter().map(|p| *p - pts[0]).collect();
    let kernel = linalg::kernel_basis(&rows, n);
    if kernel.len() != 1 {
        return None;
    }
    let (prim, _) = primitive_direction(&kernel[0]);
    let mut normal = RatVec::from_bigints(&prim);
    let mut offset = normal.dot(pts[0]);
    let at_inside = normal.dot(inside);
    if at_inside == offset {
        return None;
    }
    if at_inside > offset {
        normal = -&normal;
        offset = -offset;
    }
    Some((normal, offset))
}

/// Exact convex hull of rational points, by incremental insertion.
///
/// Errors with `DegenerateInput` when the points span a proper affine
/// subspace; callers are expected to project first.
pub fn convex_hull(points: &[RatVec]) -> Result<Polytope> {
    if points.is_empty() {
        return Err(Error::DegenerateInput("no points".into()));
    }
    let n = points[0].dim();
    if points.iter().any(|p| p.dim() != n) {
        return Err(Error::DegenerateInput("mixed dimensions".into()));
    }
    let mut pts: Vec<RatVec> = points.to_vec();
    pts.sort();
    pts.dedup();
    if n == 1 {
        return hull_1d(&pts);
    }
    if pts.len() < n + 1 {
        return Err(Error::DegenerateInput(format!(
            "{} distinct points cannot span dimension {}",
            pts.len(),
            n
        )));
    }
    // Greedy affinely independent seed simplex.
    let mut seed: Vec<usize> = vec![0];
    let mut diff_rows: Vec<RatVec> = Vec::new();
    for i in 1..pts.len() {
        if seed.len() == n + 1 {
            break;
        }
        let cand = &pts[i] - &pts[0];
        let mut trial = diff_rows.clone();
        trial.push(cand.clone());
        if linalg::rank(&trial) > diff_rows.len() {
            diff_rows.push(cand);
            seed.push(i);
        }
    }
    if seed.len() < n + 1 {
        return Err(Error::DegenerateInput(format!(
            "points span an affine subspace of dimension {}",
            seed.len() - 1
        )));
    }
    // Interior reference point: centroid of the seed simplex.
    let mut center = RatVec::zeros(n);
    for &i in &seed {
        center = &center + &pts[i];
    }
    let center = center.scale(&Rat::new(BigInt::one(), BigInt::from(seed.len() as u64)));

    let mut facets: Vec<SFacet> = Vec::new();
    for omit in 0..seed.len() {
        let verts: Vec<usize> = seed
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != omit)
            .map(|(_, &i)| i)
            .collect();
        let refs: Vec<&RatVec> = verts.iter().map(|&i| &pts[i]).collect();
        let (normal, offset) =
            oriented_hyperplane(&refs, &center).expect("seed simplex facet degenerate");
        let mut v = verts;
        v.sort_unstable();
        facets.push(SFacet {
            verts: v,
            normal,
            offset,
            alive: true,
        });
    }

    for p_idx in 0..pts.len() {
        if seed.contains(&p_idx) {
            continue;
        }
        let p = pts[p_idx].clone();
        let visible: Vec<usize> = facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.alive && f.normal.dot(&p) > f.offset)
            .map(|(i, _)| i)
            .collect();
        if visible.is_empty() {
            continue; // p is inside or on the boundary of the current hull
        }
        // Ridge -> incident alive facets.
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (fi, f) in facets.iter().enumerate() {
            if !f.alive {
                continue;
            }
            for omit in 0..f.verts.len() {
                let mut r = f.verts.clone();
                r.remove(omit);
                ridges.entry(r).or_default().push(fi);
            }
        }
        let visible_set: std::collections::HashSet<usize> = visible.iter().copied().collect();
        let mut new_facets = Vec::new();
        for (ridge, inc) in &ridges {
            debug_assert_eq!(inc.len(), 2, "boundary must be a closed complex");
            let vis_count = inc.iter().filter(|fi| visible_set.contains(fi)).count();
            if vis_count != 1 {
                continue;
            }
            let mut verts = ridge.clone();
            verts.push(p_idx);
            verts.sort_unstable();
            let refs: Vec<&RatVec> = verts.iter().map(|&i| &pts[i]).collect();
            let (normal, offset) = oriented_hyperplane(&refs, &center)
                .expect("horizon facet degenerate: ridge + strictly-beyond point");
            new_facets.push(SFacet {
                verts,
                normal,
                offset,
                alive: true,
            });
        }
        for fi in visible {
            facets[fi].alive = false;
        }
        facets.extend(new_facets);
    }

    // Merge coplanar simplicial facets into true facets.
    let mut planes: BTreeMap<(Vec<BigInt>, Rat), ()> = BTreeMap::new();
    for f in facets.iter().filter(|f| f.alive) {
        let key = (
            f.normal.to_ints().expect("facet normals are integral"),
            f.offset.clone(),
        );
        planes.insert(key, ());
    }
    let halfspaces: Vec<Halfspace> = planes
        .keys()
        .map(|(nrm, off)| Halfspace {
            normal: RatVec::from_bigints(nrm),
            offset: off.clone(),
        })
        .collect();

    // Vertices: points whose active facet normals span R^n.
    let mut vertices = Vec::new();
    for p in &pts {
        let active: Vec<&Halfspace> = halfspaces.iter().filter(|h| h.on_boundary(p)).collect();
        if active.len() < n {
            continue;
        }
        let normals: Vec<RatVec> = active.iter().map(|h| h.normal.clone()).collect();
        if linalg::rank(&normals) == n {
            vertices.push(p.clone());
        }
    }
    vertices.sort();
    vertices.dedup();

    finalize(n, vertices, halfspaces)
}

fn hull_1d(pts: &[RatVec]) -> Result<Polytope> {
    let lo = pts.first().unwrap().clone();
    let hi = pts.last().unwrap().clone();
    if lo == hi {
        return Err(Error::DegenerateInput("single point in dimension 1".into()));
    }
    let facets = vec![
        Halfspace {
            normal: RatVec::from_ints(&[-1]),
            offset: -&lo[0],
        },
        Halfspace {
            normal: RatVec::from_ints(&[1]),
            offset: hi[0].clone(),
        },
    ];
    finalize(1, vec![lo, hi], facets)
}

/// Sorts vertices and facets canonically, rebuilds incidence, and validates
/// basic consistency.
fn finalize(dim: usize, mut vertices: Vec<RatVec>, mut facets: Vec<Halfspace>) -> Result<Polytope> {
    vertices.sort();
    vertices.dedup();
    facets.sort();
    facets.dedup();
    let mut facet_vertices = Vec::with_capacity(facets.len());
    for h in &facets {
        let on: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| h.on_boundary(v))
            .map(|(i, _)| i)
            .collect();
        if on.len() < dim {
            return Err(Error::DegenerateInput(
                "facet incident to fewer vertices than its dimension".into(),
            ));
        }
        facet_vertices.push(on);
    }
    for v in &vertices {
        if facets.iter().any(|h| !h.contains(v)) {
            return Err(Error::DegenerateInput("vertex violates a facet".into()));
        }
    }
    let is_lattice = vertices.iter().all(|v| v.is_integral());
    Ok(Polytope {
        dim,
        vertices,
        facets,
        facet_vertices,
        is_lattice,
    })
}

// ---------------------------------------------------------------------------
// Accessors and point queries
// ---------------------------------------------------------------------------

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn facet_vertices(&self) -> &[Vec<usize>] {
        &self.facet_vertices
    }

    pub fn is_lattice(&self) -> bool {
        self.is_lattice
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.facets.iter().all(|h| h.contains(x))
    }

    pub fn strictly_contains(&self, x: &RatVec) -> bool {
        self.facets.iter().all(|h| h.strictly_contains(x))
    }

    /// Exact barycenter: volume-weighted average of simplex centroids over
    /// the fan triangulation.
    pub fn barycenter(&self) -> RatVec {
        let tri = self.triangulate();
        let n = self.dim;
        let mut total = Rat::zero();
        let mut acc = RatVec::zeros(n);
        let np1 = Rat::from_integer(BigInt::from((n + 1) as u64));
        for s in &tri.simplices {
            let vol = self.simplex_volume(s);
            let mut centroid = RatVec::zeros(n);
            for &i in s {
                centroid = &centroid + &self.vertices[i];
            }
            centroid = centroid.scale(&np1.recip());
            acc = &acc + &centroid.scale(&vol);
            total += vol;
        }
        acc.scale(&total.recip())
    }

    fn simplex_volume(&self, idx: &[usize]) -> Rat {
        let n = self.dim;
        let rows: Vec<RatVec> = idx[1..]
            .iter()
            .map(|&i| &self.vertices[i] - &self.vertices[idx[0]])
            .collect();
        let det = linalg::det_rat(&rows).abs();
        det / Rat::from_integer(crate::real::factorial(n as u64))
    }

    /// Exact Euclidean volume via the fan triangulation.
    pub fn volume(&self) -> Rat {
        self.triangulate()
            .simplices
            .iter()
            .map(|s| self.simplex_volume(s))
            .sum()
    }

    /// Lattice-normalized volume: n! times the Euclidean volume.
    pub fn lattice_volume(&self) -> Rat {
        self.volume() * Rat::from_integer(crate::real::factorial(self.dim as u64))
    }

    /// Fan triangulation from the lexicographically smallest vertex, facets
    /// triangulated recursively.
    pub fn triangulate(&self) -> Triangulation {
        if self.dim == 1 {
            return Triangulation {
                simplices: vec![vec![0, self.vertices.len() - 1]],
            };
        }
        if self.is_simplex() {
            return Triangulation {
                simplices: vec![(0..self.vertices.len()).collect()],
            };
        }
        // Vertices are sorted, so index 0 is the lex-min apex.
        let apex = 0usize;
        let mut simplices = Vec::new();
        for (fi, fverts) in self.facet_vertices.iter().enumerate() {
            if fverts.contains(&apex) {
                continue;
            }
            for cell in self.triangulate_facet(fi) {
                let mut s = vec![apex];
                s.extend(cell);
                simplices.push(s);
            }
        }
        Triangulation { simplices }
    }

    /// Triangulates facet `fi` into (n-1)-simplices given as vertex indices
    /// of `self`, by projecting out one coordinate and recursing.
    fn triangulate_facet(&self, fi: usize) -> Vec<Vec<usize>> {
        let fverts = &self.facet_vertices[fi];
        let normal = &self.facets[fi].normal;
        let drop = (0..self.dim)
            .find(|&j| !normal[j].is_zero())
            .expect("nonzero facet normal");
        let projected: Vec<RatVec> = fverts
            .iter()
            .map(|&i| {
                RatVec(
                    self.vertices[i]
                        .0
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != drop)
                        .map(|(_, x)| x.clone())
                        .collect(),
                )
            })
            .collect();
        if projected.len() == self.dim {
            // Simplicial facet.
            return vec![fverts.clone()];
        }
        let sub = convex_hull(&projected).expect("facet projects to a full-dim polytope");
        // Map the hull's (sorted) vertices back to our indices by sorting
        // the projections the same way. Never hash rationals: the Hash impl
        // of big rationals walks the continued fraction, which is deep for
        // the coordinates appearing mid-optimization.
        let mut order: Vec<usize> = (0..projected.len()).collect();
        order.sort_by(|&a, &b| projected[a].cmp(&projected[b]));
        debug_assert_eq!(sub.vertices.len(), projected.len());
        let back: Vec<usize> = order.iter().map(|&k| fverts[k]).collect();
        sub.triangulate()
            .simplices
            .iter()
            .map(|cell| cell.iter().map(|&vi| back[vi]).collect())
            .collect()
    }

    /// Translate by `t`.
    pub fn translate(&self, t: &RatVec) -> Polytope {
        let vertices: Vec<RatVec> = self.vertices.iter().map(|v| v + t).collect();
        let facets: Vec<Halfspace> = self
            .facets
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset + &h.normal.dot(t),
            })
            .collect();
        finalize(self.dim, vertices, facets).expect("translation preserves validity")
    }

    /// Apply an affine unimodular map.
    pub fn apply_map(&self, map: &UnimodularMap) -> Polytope {
        assert_eq!(map.dim(), self.dim, "dimension mismatch");
        let vertices: Vec<RatVec> = self.vertices.iter().map(|v| map.apply(v)).collect();
        let inv = linalg::inverse_unimodular(&map.matrix);
        let facets: Vec<Halfspace> = self
            .facets
            .iter()
            .map(|h| {
                // <a, A^-1 (y - s)> <= b  <=>  <(A^-1)^T a, y> <= b + <(A^-1)^T a, s>
                let n = self.dim;
                let mut new_normal = vec![Rat::zero(); n];
                for (j, nn) in new_normal.iter_mut().enumerate() {
                    let mut s = Rat::zero();
                    for i in 0..n {
                        s += Rat::from_integer(inv[i][j].clone()) * &h.normal[i];
                    }
                    *nn = s;
                }
                let new_normal = RatVec(new_normal);
                let offset = &h.offset + &new_normal.dot(&map.shift);
                Halfspace {
                    normal: new_normal,
                    offset,
                }
            })
            .collect();
        finalize(self.dim, vertices, facets).expect("unimodular maps preserve validity")
    }

    /// Polar dual {y : <x,y> <= 1 for all x in P}. Requires the origin
    /// strictly interior.
    pub fn polar_dual(&self) -> Result<Polytope> {
        if !self
            .facets
            .iter()
            .all(|h| h.offset.is_positive())
        {
            return Err(Error::OriginNotInterior(
                "polar dual needs 0 in the interior".into(),
            ));
        }
        let dual_vertices: Vec<RatVec> = self
            .facets
            .iter()
            .map(|h| h.normal.scale(&h.offset.recip()))
            .collect();
        let dual_facets: Vec<Halfspace> = self
            .vertices
            .iter()
            .map(|v| {
                let (prim, s) = primitive_direction(v);
                Halfspace {
                    normal: RatVec::from_bigints(&prim),
                    offset: s.recip(),
                }
            })
            .collect();
        finalize(self.dim, dual_vertices, dual_facets)
    }

    /// All lattice points inside (closed) the polytope.
    pub fn lattice_points(&self) -> Vec<Vec<BigInt>> {
        self.lattice_points_filtered(false)
    }

    /// Lattice points strictly interior to the polytope.
    pub fn interior_lattice_points(&self) -> Vec<Vec<BigInt>> {
        self.lattice_points_filtered(true)
    }

    fn lattice_points_filtered(&self, strict: bool) -> Vec<Vec<BigInt>> {
        let n = self.dim;
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for j in 0..n {
            let mut mn = self.vertices[0][j].clone();
            let mut mx = mn.clone();
            for v in &self.vertices {
                if v[j] < mn {
                    mn = v[j].clone();
                }
                if v[j] > mx {
                    mx = v[j].clone();
                }
            }
            lo.push(mn.floor().to_integer());
            hi.push(mx.ceil().to_integer());
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            let p = RatVec::from_bigints(&cur);
            let inside = if strict {
                self.strictly_contains(&p)
            } else {
                self.contains(&p)
            };
            if inside {
                out.push(cur.clone());
            }
            // Odometer increment.
            for j in 0..n {
                cur[j] += 1;
                if cur[j] <= hi[j] {
                    continue 'outer;
                }
                cur[j] = lo[j].clone();
            }
            break;
        }
        out
    }

    /// Center of central symmetry, if the polytope is centrally symmetric.
    pub fn symmetry_center(&self) -> Option<RatVec> {
        let c = self.barycenter();
        let two = Rat::from_integer(BigInt::from(2));
        let set: std::collections::BTreeSet<&RatVec> = self.vertices.iter().collect();
        for v in &self.vertices {
            let reflected = &c.scale(&two) - v;
            if !set.contains(&reflected) {
                return None;
            }
        }
        Some(c)
    }

    /// Squared diameter (max pairwise vertex distance), exact.
    pub fn diameter_sq(&self) -> Rat {
        let mut best = Rat::zero();
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let d = (&self.vertices[i] - &self.vertices[j]).norm_sq();
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    /// Canonical key: equal for two lattice polytopes iff they are related
    /// by an integer unimodular map plus an integer translation.
    ///
    /// The key is the lexicographically smallest left Hermite normal form of
    /// the vertex-difference matrix over admissible vertex orderings: all
    /// cyclic orders for polygons, all permutations for small
    /// higher-dimensional polytopes.
    pub fn normal_form(&self) -> Result<String> {
        if !self.is_lattice {
            return Err(Error::NotLattice("normal form needs lattice vertices".into()));
        }
        let verts: Vec<Vec<BigInt>> = self
            .vertices
            .iter()
            .map(|v| v.to_ints().unwrap())
            .collect();
        let m = verts.len();
        let n = self.dim;
        let orderings: Vec<Vec<usize>> = match n {
            1 => vec![vec![0, 1], vec![1, 0]],
            2 => {
                let cycle = self.polygon_cycle();
                let mut ords = Vec::with_capacity(2 * m);
                for start in 0..m {
                    let fwd: Vec<usize> = (0..m).map(|k| cycle[(start + k) % m]).collect();
                    let bwd: Vec<usize> = (0..m).map(|k| cycle[(start + m - k) % m]).collect();
                    ords.push(fwd);
                    ords.push(bwd);
                }
                ords
            }
            _ => {
                if m > 8 {
                    return Err(Error::Unsupported(format!(
                        "normal form in dimension {} is limited to 8 vertices, got {}",
                        n, m
                    )));
                }
                permutations(m)
            }
        };
        let mut best: Option<Vec<Vec<BigInt>>> = None;
        for ord in &orderings {
            let base = &verts[ord[0]];
            let cols: Vec<Vec<BigInt>> = ord[1..]
                .iter()
                .map(|&i| {
                    (0..n)
                        .map(|j| &verts[i][j] - &base[j])
                        .collect::<Vec<BigInt>>()
                })
                .collect();
            // Matrix with columns = differences: rows x cols = n x (m-1).
            let mat: Vec<Vec<BigInt>> = (0..n)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
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
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        Ok(format!("nf[n={};m={}]{}", n, m, body.join(";")))
    }

    /// Vertex indices in counterclockwise cyclic order around the
    /// barycenter (polygons only).
    fn polygon_cycle(&self) -> Vec<usize> {
        assert_eq!(self.dim, 2);
        let c = self.barycenter();
        let mut idx: Vec<usize> = (0..self.vertices.len()).collect();
        let dir = |i: usize| -> RatVec { &self.vertices[i] - &c };
        let half = |d: &RatVec| -> u8 {
            if d[1].is_positive() || (d[1].is_zero() && d[0].is_positive()) {
                0
            } else {
                1
            }
        };
        idx.sort_by(|&a, &b| {
            let da = dir(a);
            let db = dir(b);
            half(&da).cmp(&half(&db)).then_with(|| {
                // counterclockwise: a before b if cross(da, db) > 0
                let cross = &da[0] * &db[1] - &da[1] * &db[0];
                if cross.is_positive() {
                    std::cmp::Ordering::Less
                } else if cross.is_negative() {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            })
        });
        idx
    }

    /// Internal consistency check used by tests: V/H cross-containment.
    pub fn validate(&self) -> Result<()> {
        for v in &self.vertices {
            if !self.contains(v) {
                return Err(Error::DegenerateInput("vertex outside own facets".into()));
            }
        }
        for (fi, fv) in self.facet_vertices.iter().enumerate() {
            let rows: Vec<RatVec> = fv[1..]
                .iter()
                .map(|&i| &self.vertices[i] - &self.vertices[fv[0]])
                .collect();
            if linalg::rank(&rows) != self.dim - 1 {
                return Err(Error::DegenerateInput(format!(
                    "facet {} does not span a hyperplane",
                    fi
                )));
            }
        }
        // Round trip: the hull of the vertices reproduces the polytope.
        let rebuilt = convex_hull(&self.vertices)?;
        if rebuilt.vertices != self.vertices || rebuilt.facets != self.facets {
            return Err(Error::DegenerateInput("V/H representations disagree".into()));
        }
        Ok(())
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

/// Convenience constructors for tests and the data corpus.
pub fn polytope_from_ints(rows: &[&[i64]]) -> Result<Polytope> {
    let pts: Vec<RatVec> = rows.iter().map(|r| RatVec::from_ints(r)).collect();
    convex_hull(&pts)
}

/// Standard simplex conv{0, e_1, ..., e_n}.
pub fn standard_simplex(n: usize) -> Polytope {
    let mut pts = vec![RatVec::zeros(n)];
    for i in 0..n {
        let mut v = RatVec::zeros(n);
        v[i] = Rat::one();
        pts.push(v);
    }
    convex_hull(&pts).unwrap()
}

/// Cube [lo, hi]^n.
pub fn cube(n: usize, lo: i64, hi: i64) -> Polytope {
    let mut pts = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let v: Vec<i64> = (0..n)
            .map(|j| if mask & (1 << j) != 0 { hi } else { lo })
            .collect();
        pts.push(RatVec::from_ints(&v));
    }
    convex_hull(&pts).unwrap()
}

/// Cross-polytope conv{±c e_i}.
pub fn cross_polytope(n: usize, c: i64) -> Polytope {
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = c;
        pts.push(RatVec::from_ints(&v));
        v[i] = -c;
        pts.push(RatVec::from_ints(&v));
    }
    convex_hull(&pts).unwrap()
}

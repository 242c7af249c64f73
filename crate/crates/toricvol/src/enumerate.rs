//! Enumeration of all Q-Gorenstein toric singularities of dimension 2 or 3
//! with normalized volume above a threshold, one representative per
//! unimodular equivalence class.
//!
//! Pruning uses only the proof-consistent volume/index bounds (the safe,
//! weaker constants); the exact normalized volume filters afterwards. The
//! derived caps are recorded in the job's audit trail.

use crate::bounds;
use crate::polytope::{convex_hull, polytope_from_ints, Polytope};
use crate::rat::{Rat, RatVec};
use crate::real::{factorial, unit_ball_volume_sq, PiPower};
use crate::toric::{self, ToricCone};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

/// Derived search parameters for one enumeration run.
#[derive(Clone, Debug)]
pub struct EnumerationJob {
    pub d: u32,
    pub epsilon: Rat,
    pub max_index: u64,
    /// Lattice-volume cap for the height polytope at ell = 1 (the largest
    /// cap; per-ell caps shrink as 1/ell).
    pub max_lattice_volume: u64,
    /// Multiplier on the derived search slack; > 1 only for saturation
    /// checks.
    pub box_scale: u32,
    pub budget: u64,
    pub jobs: usize,
    pub audit: PruningAudit,
}

/// Records which constants derived the pruning caps.
#[derive(Clone, Debug)]
pub struct PruningAudit {
    pub used_printed_constants: bool,
    pub formula: String,
}

/// One singularity class in the output spectrum.
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    /// Dedup key: cone normal form under GL(d,Z).
    pub cone_key: String,
    /// Affine normal form of the height polytope (reporting only; for
    /// ell > 1 it does not separate all classes, the cone key does).
    pub polytope_key: String,
    pub ell: BigInt,
    pub value: f64,
    /// Exact value when the Santaló solve took a rational fast path.
    pub value_exact: Option<Rat>,
    /// Exact objective value at the returned point (upper bracket).
    pub value_upper: Rat,
    pub bracket: (f64, f64),
    pub rays: Vec<Vec<BigInt>>,
    pub passes_rdp: bool,
    pub passes_bs: bool,
}

impl EnumerationJob {
    /// Derives the caps from the proof-consistent bounds:
    /// ell < ((d-1)!)^2 omega_{d-1}^2 / eps and
    /// latvol(P) < ((d-1)!)^2 omega_{d-1}^2 / (ell * eps).
    pub fn derive(d: u32, epsilon: Rat, budget: u64, jobs: usize, box_scale: u32) -> Result<Self> {
        if !(2..=3).contains(&d) {
            return Err(Error::Unsupported("enumeration supports d = 2 or 3".into()));
        }
        if !epsilon.is_positive() {
            return Err(Error::Parse("epsilon must be positive".into()));
        }
        let fac = Rat::from_integer(factorial((d - 1) as u64));
        let omega_sq = unit_ball_volume_sq(d - 1);
        let common = omega_sq.mul_rat(&(&(&fac * &fac) / &epsilon));
        let max_index = floor_strict(&common);
        let max_lattice_volume = floor_strict(&common); // ell = 1 cap
        let audit = PruningAudit {
            used_printed_constants: false,
            formula: format!(
                "proof-consistent caps: ell < ((d-1)!)^2 w^2/eps = {:.6}; \
                 latvol(P) < ((d-1)!)^2 w^2/(ell*eps); box_scale = {}",
                common.to_f64(),
                box_scale
            ),
        };
        Ok(EnumerationJob {
            d,
            epsilon,
            max_index,
            max_lattice_volume,
            box_scale: box_scale.max(1),
            budget,
            jobs,
            audit,
        })
    }

    /// Per-index lattice-volume cap; scaled up on saturation runs.
    fn lattice_volume_cap(&self, ell: u64) -> u64 {
        let fac = Rat::from_integer(factorial((self.d - 1) as u64));
        let omega_sq = unit_ball_volume_sq(self.d - 1);
        let denom = &self.epsilon * Rat::from_integer(BigInt::from(ell));
        let bound = omega_sq.mul_rat(&(&(&fac * &fac) / &denom));
        floor_strict(&bound) * self.box_scale as u64
    }
}

/// Largest nonnegative integer strictly below the (positive) value.
fn floor_strict(p: &PiPower) -> u64 {
    let f = p.to_f64();
    if !f.is_finite() || f > 1e12 {
        return 1_000_000; // sanity cap; epsilon this small is out of scope
    }
    let mut n = (f.floor() as i64 - 2).max(0) as u64;
    loop {
        let next = Rat::from_integer(BigInt::from(n + 1));
        match p.cmp_rat(&next) {
            Some(Ordering::Greater) => n += 1,
            _ => break,
        }
        if n > 1_000_000_000 {
            break;
        }
    }
    n
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn spend(&mut self, amount: u64) -> Result<()> {
        self.used += amount;
        if self.used > self.cap {
            Err(Error::BudgetExceeded(format!(
                "candidate budget {} exhausted",
                self.cap
            )))
        } else {
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Polytope class enumeration
// ---------------------------------------------------------------------------

/// All lattice segments of length 1..=cap, as class representatives [0, L].
pub fn enumerate_segments(max_lattice_volume: u64) -> Vec<Polytope> {
    (1..=max_lattice_volume as i64)
        .map(|l| polytope_from_ints(&[&[0], &[l]]).unwrap())
        .collect()
}

/// Complete list of lattice polygons with lattice volume (2*area) at most
/// the bound, one representative per unimodular class.
///
/// Seeds are the Hermite-reduced triangles; classes grow by adding one
/// vertex within the proven slab region (lattice distance to each facet at
/// most the volume bound), deduplicated by affine normal form.
pub fn enumerate_polygons(max_lattice_volume: u64, box_scale: u32, budget_cap: u64) -> Result<Vec<Polytope>> {
    let mut budget = Budget {
        used: 0,
        cap: budget_cap,
    };
    let max_vol = Rat::from_integer(BigInt::from(max_lattice_volume));
    let mut classes: BTreeMap<String, Polytope> = BTreeMap::new();
    let mut queue: Vec<Polytope> = Vec::new();

    // Seed triangles: columns (p, 0), (q, r) with p*r = det <= bound, 0 <= q < r.
    for det in 1..=max_lattice_volume as i64 {
        for p in 1..=det {
            if det % p != 0 {
                continue;
            }
            let r = det / p;
            for q in 0..r {
                budget.spend(1)?;
                let tri = polytope_from_ints(&[&[0, 0], &[p, 0], &[q, r]])?;
                let key = tri.normal_form()?;
                if !classes.contains_key(&key) {
                    classes.insert(key, tri.clone());
                    queue.push(tri);
                }
            }
        }
    }

    // Growth: add one vertex anywhere within the slab region.
    let slack = BigInt::from(max_lattice_volume * box_scale.max(1) as u64);
    while let Some(p) = queue.pop() {
        for z in slab_lattice_points(&p, &slack) {
            let zv = RatVec::from_bigints(&z);
            if p.contains(&zv) {
                continue;
            }
            budget.spend(1)?;
            let mut pts: Vec<RatVec> = p.vertices().to_vec();
            pts.push(zv);
            let cand = convex_hull(&pts)?;
            if cand.lattice_volume() > max_vol {
                continue;
            }
            let key = cand.normal_form()?;
            if !classes.contains_key(&key) {
                classes.insert(key, cand.clone());
                queue.push(cand);
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Integer points of the polygon inflated by `slack` in lattice distance
/// against every facet (2D only: bounding box from pairwise facet-line
/// intersections).
fn slab_lattice_points(p: &Polytope, slack: &BigInt) -> Vec<Vec<BigInt>> {
    let facets = p.facets();
    let slack_rat = Rat::from_integer(slack.clone());
    let mut corner_bounds: Vec<RatVec> = Vec::new();
    for i in 0..facets.len() {
        for j in (i + 1)..facets.len() {
            let a = vec![facets[i].normal.clone(), facets[j].normal.clone()];
            let b = vec![&facets[i].offset + &slack_rat, &facets[j].offset + &slack_rat];
            if let crate::linalg::Solve::Unique(x) = crate::linalg::solve(&a, &b) {
                corner_bounds.push(x);
            }
        }
    }
    let inside = |x: &RatVec| -> bool {
        facets
            .iter()
            .all(|h| h.eval(x) <= &h.offset + &slack_rat)
    };
    let corners: Vec<RatVec> = corner_bounds.into_iter().filter(|x| inside(x)).collect();
    assert!(!corners.is_empty(), "slab region of a full-dim polygon is bounded");
    let mut lo = vec![corners[0][0].floor().to_integer(), corners[0][1].floor().to_integer()];
    let mut hi = vec![corners[0][0].ceil().to_integer(), corners[0][1].ceil().to_integer()];
    for c in &corners {
        for j in 0..2 {
            let f = c[j].floor().to_integer();
            let g = c[j].ceil().to_integer();
            if f < lo[j] {
                lo[j] = f;
            }
            if g > hi[j] {
                hi[j] = g;
            }
        }
    }
    let mut out = Vec::new();
    let mut x = lo[0].clone();
    while x <= hi[0] {
        let mut y = lo[1].clone();
        while y <= hi[1] {
            let pt = RatVec::from_bigints(&[x.clone(), y.clone()]);
            if inside(&pt) {
                out.push(vec![x.clone(), y.clone()]);
            }
            y += 1;
        }
        x += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Singularity enumeration
// ---------------------------------------------------------------------------

/// Enumerates Q-Gorenstein toric singularity classes of dimension d with
/// normalized volume above epsilon, sorted by descending volume.
pub fn enumerate_singularities(job: &EnumerationJob) -> Result<Vec<SpectrumEntry>> {
    let candidates = candidate_cones(job)?;
    let tol = 1e-9;
    let compute = || -> Result<Vec<SpectrumEntry>> {
        let results: Vec<Result<Option<SpectrumEntry>>> = candidates
            .par_iter()
            .map(|(key, cone)| evaluate_candidate(job, key, cone, tol))
            .collect();
        let mut entries = Vec::new();
        for r in results {
            if let Some(e) = r? {
                entries.push(e);
            }
        }
        Ok(entries)
    };
    let mut entries = if job.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(job.jobs)
            .build()
            .map_err(|e| Error::Unsupported(format!("thread pool: {}", e)))?
            .install(compute)?
    } else {
        compute()?
    };
    entries.sort_by(|a, b| {
        b.value_upper
            .cmp(&a.value_upper)
            .then_with(|| a.cone_key.cmp(&b.cone_key))
    });
    Ok(entries)
}

/// Deterministic candidate generation: (class rep, residue translation,
/// ell), filtered to construction index = true index, deduplicated by the
/// cone normal form.
fn candidate_cones(job: &EnumerationJob) -> Result<Vec<(String, ToricCone)>> {
    let d = job.d as usize;
    let n = d - 1;
    let mut budget = Budget {
        used: 0,
        cap: job.budget,
    };
    let class_cap = job.max_lattice_volume * job.box_scale as u64;
    let classes: Vec<Polytope> = if n == 1 {
        enumerate_segments(class_cap)
    } else {
        enumerate_polygons(class_cap, job.box_scale, job.budget)?
    };
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out: Vec<(String, ToricCone)> = Vec::new();
    let extra_index = if job.box_scale > 1 { 2 } else { 0 };
    for ell in 1..=(job.max_index + extra_index) {
        let cap = job.lattice_volume_cap(ell);
        if cap == 0 {
            continue;
        }
        let cap_rat = Rat::new(BigInt::from(cap), BigInt::one());
        for class in &classes {
            if class.lattice_volume() > cap_rat {
                continue;
            }
            for shift in residues(n, ell) {
                budget.spend(1)?;
                // Rays (v + shift, ell); keep only when all are primitive,
                // which pins the true Gorenstein index to ell.
                let mut rays: Vec<Vec<BigInt>> = Vec::with_capacity(class.vertices().len());
                let mut all_primitive = true;
                for v in class.vertices() {
                    let mut ray: Vec<BigInt> = Vec::with_capacity(d);
                    for (j, x) in v.0.iter().enumerate() {
                        ray.push(x.to_integer() + BigInt::from(shift[j]));
                    }
                    ray.push(BigInt::from(ell));
                    if crate::rat::primitivize(&ray) != ray {
                        all_primitive = false;
                        break;
                    }
                    rays.push(ray);
                }
                if !all_primitive {
                    continue;
                }
                let (cone, dropped) = toric::cone_from_rays(&rays)?;
                debug_assert!(dropped.is_empty());
                let key = cone.normal_form()?;
                if seen.insert(key.clone()) {
                    out.push((key, cone));
                }
            }
        }
    }
    Ok(out)
}

fn residues(n: usize, ell: u64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            for r in 0..ell as i64 {
                let mut w = v.clone();
                w.push(r);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn evaluate_candidate(
    job: &EnumerationJob,
    key: &str,
    cone: &ToricCone,
    tol: f64,
) -> Result<Option<SpectrumEntry>> {
    let hp = toric::height_polytope(cone)?;
    let nv = toric::normalized_volume_with(cone, &hp, tol)?;
    if nv.value_exact <= job.epsilon {
        return Ok(None);
    }
    let polytope_key = hp.polytope.normal_form()?;
    let analysis = bounds::ConeAnalysis {
        cone: cone.clone(),
        hp,
        nv,
    };
    let passes_rdp = bounds::rdp_report(&analysis, bounds::EQUALITY_TOL).holds;
    let centered = analysis
        .hp
        .polytope
        .translate(&(-&analysis.hp.polytope.barycenter()));
    let bs_product = centered.volume() * centered.polar_dual()?.volume();
    let passes_bs = unit_ball_volume_sq(job.d - 1)
        .cmp_rat(&bs_product)
        .map(|o| o != Ordering::Less)
        .unwrap_or(true);
    let nv = analysis.nv;
    Ok(Some(SpectrumEntry {
        cone_key: key.to_string(),
        polytope_key,
        ell: nv.ell.clone(),
        value: nv.value,
        value_exact: if nv.santalo.exact {
            Some(nv.value_exact.clone())
        } else {
            None
        },
        value_upper: nv.value_exact.clone(),
        bracket: nv.value_bracket,
        rays: cone.rays().to_vec(),
        passes_rdp,
        passes_bs,
    }))
}

/// Returns true when re-running with enlarged caps (doubled box scale, two
/// more indices) finds exactly the same set of classes.
pub fn saturation_check(job: &EnumerationJob) -> Result<bool> {
    let base = enumerate_singularities(job)?;
    let mut wide = job.clone();
    wide.box_scale = job.box_scale * 2;
    wide.max_index = job.max_index; // extra_index kicks in via box_scale > 1
    wide.budget = job.budget.saturating_mul(4);
    let wider = enumerate_singularities(&wide)?;
    let keys_a: BTreeSet<&String> = base.iter().map(|e| &e.cone_key).collect();
    let keys_b: BTreeSet<&String> = wider.iter().map(|e| &e.cone_key).collect();
    Ok(keys_a == keys_b)
}

/// One row of the distinct-value spectrum.
#[derive(Clone, Debug)]
pub struct SpectrumRow {
    pub value: f64,
    pub value_exact: Option<Rat>,
    pub multiplicity: usize,
    /// Gap to the previous (larger) distinct value; 0 for the first row.
    pub gap: f64,
}

/// Sorted distinct values with multiplicities and successive gaps.
pub fn volume_spectrum(entries: &[SpectrumEntry]) -> Vec<SpectrumRow> {
    let mut rows: Vec<SpectrumRow> = Vec::new();
    for e in entries {
        let merged = rows.last_mut().is_some_and(|last| {
            let same = if let (Some(a), Some(b)) = (&last.value_exact, &e.value_exact) {
                a == &e.value_upper || a == b
            } else {
                (last.value - e.value).abs() <= 1e-9 * last.value.abs().max(1.0)
            };
            if same {
                last.multiplicity += 1;
            }
            same
        });
        if !merged {
            let gap = rows.last().map(|r| r.value - e.value).unwrap_or(0.0);
            rows.push(SpectrumRow {
                value: e.value,
                value_exact: e.value_exact.clone(),
                multiplicity: 1,
                gap,
            });
        }
    }
    rows
}

//! JSON and CSV surface shared by the CLI.
//!
//! Canonical outputs keep every rational as a "p/q" string; floats appear
//! only in explicitly real-valued fields (and in extra columns under
//! `--float`). The parsers accept integers or "p/q" strings and reject
//! anything with a decimal point.

use crate::bounds::{BoundReport, RadonPartition, VerifyInput};
use crate::enumerate::{SpectrumEntry, SpectrumRow};
use crate::polytope::{convex_hull, Polytope};
use crate::rat::{parse_rat, rat_string, rat_to_f64, Rat, RatVec};
use crate::real::fmt_real;
use crate::santalo::SantaloResult;
use crate::toric::{cone_from_rays, NormalizedVolumeResult, ToricCone};
use crate::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                Err(Error::Parse(format!(
                    "expected an integer or \"p/q\" string, got float {}",
                    n
                )))
            }
        }
        Value::String(s) => {
            parse_rat(s).ok_or_else(|| Error::Parse(format!("invalid rational '{}'", s)))
        }
        other => Err(Error::Parse(format!("expected rational, got {}", other))),
    }
}

fn int_from_value(v: &Value) -> Result<BigInt> {
    let r = rat_from_value(v)?;
    if !r.is_integer() {
        return Err(Error::Parse(format!("expected integer, got {}", r)));
    }
    Ok(r.to_integer())
}

/// Parses the polytope/point-list schema:
/// `{"dim": n, "vertices": [["p/q", 1, ...], ...]}`.
pub fn points_from_json(text: &str) -> Result<(usize, Vec<RatVec>)> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| Error::Parse("missing positive integer 'dim'".into()))? as usize;
    let verts = obj
        .get("vertices")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("missing array 'vertices'".into()))?;
    let mut points = Vec::with_capacity(verts.len());
    for row in verts {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("vertex must be an array".into()))?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "vertex has {} coordinates, dim is {}",
                row.len(),
                dim
            )));
        }
        let coords: Result<Vec<Rat>> = row.iter().map(rat_from_value).collect();
        points.push(RatVec(coords?));
    }
    Ok((dim, points))
}

pub fn polytope_from_json(text: &str) -> Result<Polytope> {
    let (_, points) = points_from_json(text)?;
    convex_hull(&points)
}

/// Parses the cone schema `{"dim": d, "rays": [[int,...],...], "label": ..}`.
pub fn cone_from_json(text: &str) -> Result<ToricCone> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    let dim = obj
        .get("dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| Error::Parse("missing positive integer 'dim'".into()))? as usize;
    let rays_json = obj
        .get("rays")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::Parse("missing array 'rays'".into()))?;
    let mut rays = Vec::with_capacity(rays_json.len());
    for row in rays_json {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("ray must be an array".into()))?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "ray has {} coordinates, dim is {}",
                row.len(),
                dim
            )));
        }
        let coords: Result<Vec<BigInt>> = row.iter().map(int_from_value).collect();
        rays.push(coords?);
    }
    let (mut cone, dropped) = cone_from_rays(&rays)?;
    for d in &dropped {
        eprintln!(
            "warning: ray ({}) is not extremal, dropped",
            d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        );
    }
    cone.label = obj
        .get("label")
        .and_then(|l| l.as_str())
        .map(|s| s.to_string());
    Ok(cone)
}

/// Cone files carry "rays", polytope files carry "vertices".
pub fn detect_input(text: &str) -> Result<VerifyInput> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
    if obj.contains_key("rays") {
        Ok(VerifyInput::Cone(cone_from_json(text)?))
    } else if obj.contains_key("vertices") {
        Ok(VerifyInput::Polytope(polytope_from_json(text)?))
    } else {
        Err(Error::Parse("object has neither 'rays' nor 'vertices'".into()))
    }
}

fn rat_vec_json(v: &RatVec) -> Value {
    Value::Array(v.0.iter().map(|x| Value::String(rat_string(x))).collect())
}

fn generator() -> Value {
    Value::String(format!("toricvol {}", env!("CARGO_PKG_VERSION")))
}

pub fn polytope_to_json(p: &Polytope, float: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("generator".into(), generator());
    obj.insert("dim".into(), json!(p.dim()));
    obj.insert(
        "vertices".into(),
        Value::Array(p.vertices().iter().map(rat_vec_json).collect()),
    );
    obj.insert(
        "facets".into(),
        Value::Array(
            p.facets()
                .iter()
                .map(|h| {
                    json!({
                        "normal": rat_vec_json(&h.normal),
                        "offset": rat_string(&h.offset),
                    })
                })
                .collect(),
        ),
    );
    obj.insert("is_lattice".into(), json!(p.is_lattice()));
    if float {
        obj.insert(
            "vertices_float".into(),
            Value::Array(
                p.vertices()
                    .iter()
                    .map(|v| Value::Array(v.to_f64s().into_iter().map(|x| json!(x)).collect()))
                    .collect(),
            ),
        );
    }
    Value::Object(obj)
}

pub fn volume_to_json(p: &Polytope, float: bool) -> Value {
    let vol = p.volume();
    let lat = p.lattice_volume();
    let mut obj = Map::new();
    obj.insert("generator".into(), generator());
    obj.insert("volume".into(), Value::String(rat_string(&vol)));
    obj.insert("lattice_volume".into(), Value::String(rat_string(&lat)));
    if float {
        obj.insert("volume_float".into(), json!(rat_to_f64(&vol)));
        obj.insert("lattice_volume_float".into(), json!(rat_to_f64(&lat)));
    }
    Value::Object(obj)
}

pub fn santalo_to_json(r: &SantaloResult, float: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("point".into(), rat_vec_json(&r.point));
    obj.insert(
        "dual_volume".into(),
        Value::String(rat_string(&r.dual_volume)),
    );
    obj.insert("mahler".into(), Value::String(rat_string(&r.mahler)));
    obj.insert("mahler_float".into(), json!(rat_to_f64(&r.mahler)));
    obj.insert("residual".into(), json!(r.residual));
    obj.insert("iterations".into(), json!(r.iterations));
    obj.insert("exact".into(), json!(r.exact));
    if float {
        obj.insert(
            "point_float".into(),
            Value::Array(r.point.to_f64s().into_iter().map(|x| json!(x)).collect()),
        );
        obj.insert("dual_volume_float".into(), json!(rat_to_f64(&r.dual_volume)));
    }
    Value::Object(obj)
}

pub fn normvol_to_json(r: &NormalizedVolumeResult, float: bool) -> Value {
    let mut obj = Map::new();
    obj.insert("generator".into(), generator());
    obj.insert("value".into(), json!(r.value));
    obj.insert(
        "value_exact".into(),
        Value::String(rat_string(&r.value_exact)),
    );
    obj.insert("bracket".into(), json!([r.value_bracket.0, r.value_bracket.1]));
    obj.insert("ell".into(), json!(r.ell.to_string()));
    obj.insert("minimizer_xi".into(), rat_vec_json(&r.minimizer_xi));
    obj.insert("santalo".into(), santalo_to_json(&r.santalo, float));
    Value::Object(obj)
}

pub fn radon_to_json(parts: &[RadonPartition]) -> Value {
    json!({
        "generator": generator(),
        "partitions": parts
            .iter()
            .map(|r| {
                json!({
                    "part_a": r.part_a,
                    "part_b": r.part_b,
                    "radon_point": rat_vec_json(&r.radon_point),
                    "p": r.p,
                    "q": r.q,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn reports_to_json(reports: &[BoundReport]) -> Value {
    json!({
        "generator": generator(),
        "reports": reports
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "holds": r.holds,
                    "strict": r.strict,
                    "equality_within_tol": r.equality_within_tol,
                    "notes": r.notes,
                })
            })
            .collect::<Vec<_>>(),
    })
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn reports_to_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from("name,lhs,rhs,holds,strict,equality_within_tol,notes\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_escape(&r.name),
            fmt_real(r.lhs),
            fmt_real(r.rhs),
            r.holds,
            r.strict,
            r.equality_within_tol,
            csv_escape(&r.notes)
        ));
    }
    out
}

fn rays_cell(rays: &[Vec<BigInt>]) -> String {
    rays.iter()
        .map(|r| {
            format!(
                "({})",
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            )
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// Spectrum-entry CSV, sorted as produced (descending volume).
pub fn entries_to_csv(entries: &[SpectrumEntry]) -> String {
    let mut out =
        String::from("normal_form_key,ell,rays,volume_lower,volume_upper,passes_rdp,passes_bs\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            csv_escape(&e.cone_key),
            e.ell,
            csv_escape(&rays_cell(&e.rays)),
            fmt_real(e.bracket.0),
            fmt_real(e.bracket.1),
            e.passes_rdp,
            e.passes_bs
        ));
    }
    out
}

pub fn spectrum_to_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("value,value_exact,multiplicity,gap_to_previous\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_real(r.value),
            r.value_exact
                .as_ref()
                .map(rat_string)
                .unwrap_or_else(|| "~".into()),
            r.multiplicity,
            fmt_real(r.gap)
        ));
    }
    out
}

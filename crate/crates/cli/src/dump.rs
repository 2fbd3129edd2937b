use anyhow::{bail, Result};
use h4_core::embed::{lattice_l, IntLattice};
use h4_core::mod2::{LineKind, PointTag};
use h4_core::polytopes::Cell600;
use serde_json::{json, Value};

use crate::context::Context;
use crate::report::{golden, rational};

pub const OBJECTS: &[&str] = &["vertices", "labels", "array", "lines", "planes", "lattice"];

/// Canonical JSON value for one dumpable object.
pub fn dump(ctx: &Context, object: &str) -> Result<Value> {
    Ok(match object {
        "vertices" => vertices(ctx.cell600()?),
        "labels" => labels(ctx.cell600()?),
        "array" => array(ctx.cell600()?),
        "lines" => lines(ctx)?,
        "planes" => planes(ctx)?,
        "lattice" => lattice(ctx)?,
        other => bail!(
            "unknown object {other:?}; expected one of {}",
            OBJECTS.join(", ")
        ),
    })
}

fn coords(v: &h4_core::icosian::IcosianVec) -> Value {
    Value::Array(v.0.iter().map(|g| golden(*g)).collect())
}

fn vertices(c: &Cell600) -> Value {
    let ico = c.icosians();
    let rows: Vec<Value> = ico
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| json!({ "index": i, "coords": coords(v), "pair": c.pairs().pair_of[i], "negative": ico.neg(i) }))
        .collect();
    json!({ "scale": "norm 4", "vertices": rows })
}

fn labels(c: &Cell600) -> Value {
    let ico = c.icosians();
    let rows: Vec<Value> = c
        .pairs()
        .reps
        .iter()
        .enumerate()
        .map(|(p, &v)| json!({ "pair": p, "vertex": v, "coords": coords(&ico.vertex(v)), "label": c.label(p).to_string() }))
        .collect();
    Value::Array(rows)
}

fn array(c: &Cell600) -> Value {
    let mut rows = Vec::with_capacity(25);
    for i in 0..5 {
        for j in 0..5 {
            let cell = c.array()[i][j];
            rows.push(json!({
                "duad": c.duad(cell).to_string(),
                "position": [i, j],
                "pairs": c.cells24()[cell].to_vec(),
            }));
        }
    }
    Value::Array(rows)
}

fn point_tag(c: &Cell600, tag: PointTag) -> Value {
    match tag {
        PointTag::Vertex(p) => {
            json!({ "kind": "vertex", "pair": p, "label": c.label(p).to_string() })
        }
        PointTag::Cell(d) => json!({ "kind": "24-cell", "duad": d.to_string() }),
    }
}

fn lines(ctx: &Context) -> Result<Value> {
    let c = ctx.cell600()?;
    let m = ctx.mod2()?;
    let rows: Vec<Value> = m
        .lines()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let certificate = match l.kind {
                LineKind::Schoute(s) => json!({ "partition": s }),
                LineKind::Decagon(d) => json!({ "decagon": c.decagons()[d].to_vec() }),
                LineKind::Cell16 { sixteen, cell } => {
                    json!({ "16-cell": c.sixteen_cells()[sixteen].to_vec(), "24-cell": cell.to_string() })
                }
                LineKind::Hexagon { hexagon, crossed } => json!({
                    "hexagon": c.hexagons()[hexagon].to_vec(),
                    "crossed": crossed.map(|d| d.to_string()),
                }),
            };
            json!({
                "index": i,
                "type": l.kind.name(),
                "points": l.points,
                "certificate": certificate,
            })
        })
        .collect();
    let points: Vec<Value> = m
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| json!({ "index": i, "tag": point_tag(c, p.tag), "vectors": p.vectors.map(|v| v.to_string()) }))
        .collect();
    Ok(json!({ "points": points, "lines": rows }))
}

fn planes(ctx: &Context) -> Result<Value> {
    let c = ctx.cell600()?;
    let m = ctx.mod2()?;
    let rows: Vec<Value> = m
        .planes()
        .iter()
        .map(|p| json!({ "pole": p.pole, "pole_tag": point_tag(c, m.points()[p.pole].tag), "points": p.points }))
        .collect();
    Ok(Value::Array(rows))
}

fn lattice_json(lat: &IntLattice) -> Value {
    let map = lat.map();
    json!({
        "frame": { "m": rational(map.m()), "multiplier": rational(map.multiplier()) },
        "basis": lat.basis().iter().map(|b| b.iter().map(|x| rational(*x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "gram": lat.gram(),
        "determinant": lat.determinant(),
    })
}

fn lattice(ctx: &Context) -> Result<Value> {
    let e = ctx.e8()?;
    let m = ctx.mod2()?;
    let l = lattice_l(ctx.cell600()?.icosians())?;
    Ok(json!({
        "e8": lattice_json(&e.e8.lattice),
        "e8_root_basis": lattice_json(m.lattice()),
        "phi": m.phi().matrix,
        "lattice_l": lattice_json(&l.lattice),
        "lattice_l_vertices": l.basis.vertices,
    }))
}

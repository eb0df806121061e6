use serde_json::{json, Value};

use super::{InvariantReport, SCHEMA_VERSION};
use crate::algebra::{format_poly, CApprox, GRat};
use crate::model::Direction;
use crate::puiseux::{PolePart, PuiseuxSeries};

fn dir(v: &Direction) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn num(c: &CApprox, exact: Option<&GRat>) -> Value {
    json!({
        "re": c.re(),
        "im": c.im(),
        "tolerance": c.err(),
        "exact": exact.map(|q| q.to_string()),
    })
}

fn series(s: &PuiseuxSeries) -> Value {
    json!({
        "ramification": s.ram,
        "terms": s.terms.iter().map(|t| json!({"exponent": t.exp.to_string(), "coefficient": num(&t.coeff, t.exact.as_ref())})).collect::<Vec<_>>(),
        "truncation": s.trunc.to_string(),
        "finite": s.finite,
    })
}

fn pole(p: &PolePart) -> Value {
    json!({
        "order": p.order.to_string(),
        "terms": p.terms.iter().map(|t| json!({"exponent": t.exp.to_string(), "coefficient": num(&t.coeff, t.exact.as_ref())})).collect::<Vec<_>>(),
    })
}

pub(super) fn render(r: &InvariantReport) -> String {
    let mut root = serde_json::Map::new();
    root.insert("schema_version".into(), json!(SCHEMA_VERSION));
    root.insert("command".into(), json!(r.command.name()));
    root.insert("descriptor".into(), json!({"dim": r.dim, "components": r.descriptor}));
    if let Some(d) = &r.diagnostics {
        root.insert("diagnostics".into(), json!(d));
    }
    if let Some(c) = &r.rank {
        root.insert(
            "rank".into(),
            json!({"rank": c.rank, "total": c.total, "per_component": c.per_component, "torus_volume": c.volume}),
        );
    }
    if !r.omega.is_empty() {
        let v: Vec<Value> = r
            .omega
            .iter()
            .map(|(w, o)| {
                json!({"w": dir(w), "member": o.member, "failures": o.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>()})
            })
            .collect();
        root.insert("omega".into(), Value::Array(v));
    }
    if let Some(d) = &r.discriminant {
        root.insert(
            "discriminant".into(),
            json!({
                "delta": d.text(),
                "factors": d.factors().iter().map(|f| format_poly(f, &d.names)).collect::<Vec<_>>(),
                "components": d.components.iter().map(|c| json!({
                    "component": c.component,
                    "factors": c.factors.iter().map(|f| format_poly(f, &d.names)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "collisions": d.cross.iter().map(|c| json!({
                    "components": [c.components.0, c.components.1],
                    "factor": format_poly(&c.factor, &d.names),
                    "verified": c.verified,
                })).collect::<Vec<_>>(),
            }),
        );
    }
    if !r.profiles.is_empty() {
        let v: Vec<Value> = r
            .profiles
            .iter()
            .map(|(w, js)| {
                json!({"w": dir(w), "jumps": js.iter().map(|j| json!({
                    "position": j.position,
                    "exact": j.exact.as_ref().map(|q| q.to_string()),
                    "multiplicity": j.mult,
                })).collect::<Vec<_>>()})
            })
            .collect();
        root.insert("profiles".into(), Value::Array(v));
    }
    if !r.slices.is_empty() {
        let v: Vec<Value> = r
            .slices
            .iter()
            .map(|s| {
                let b = &s.boundary;
                json!({
                    "label": s.label,
                    "base": dir(&s.base),
                    "dir": dir(&s.dir),
                    "slice_polynomials": b.slice_polys.iter().map(|(i, p)| json!({"component": i, "poly": p})).collect::<Vec<_>>(),
                    "branches": b.branches.iter().map(|br| json!({
                        "component": br.component,
                        "copies": br.branch_mult * br.mult,
                        "series": series(&br.series),
                    })).collect::<Vec<_>>(),
                    "factors": b.factors.iter().map(|f| json!({"pole_part": pole(&f.pole_series), "multiplicity": f.mult})).collect::<Vec<_>>(),
                    "regular_ramified": b.regular_ramified.len(),
                    "irregularity": b.irregularity.to_string(),
                })
            })
            .collect();
        root.insert("slices".into(), Value::Array(v));
    }
    if !r.infinity.is_empty() {
        let v: Vec<Value> = r
            .infinity
            .iter()
            .map(|i| {
                json!({
                    "w": dir(&i.w),
                    "factors": i.factors.iter().map(|f| json!({"c": num(&f.c, f.exact.as_ref()), "multiplicity": f.mult})).collect::<Vec<_>>(),
                    "regular_at_origin": i.regular_at_origin,
                })
            })
            .collect();
        root.insert("infinity".into(), Value::Array(v));
    }
    if !r.stokes.is_empty() {
        let v: Vec<Value> = r
            .stokes
            .iter()
            .map(|s| {
                json!({
                    "w": dir(&s.w),
                    "values": s.values.iter().map(|c| num(c, None)).collect::<Vec<_>>(),
                    "lines": s.directions.iter().map(|l| json!({"theta": l.theta, "pairs": l.pairs})).collect::<Vec<_>>(),
                })
            })
            .collect();
        root.insert("stokes".into(), Value::Array(v));
    }
    if let Some(c) = &r.chi {
        root.insert(
            "chi".into(),
            json!({
                "chi_c_total": c.chi_total,
                "slices": c.slices.iter().map(|(d, t, x)| json!({"v": dir(d), "tau": t.to_string(), "chi_c": x})).collect::<Vec<_>>(),
                "pointwise": c.pointwise.iter().map(|(d, x)| json!({"w": dir(d), "chi": x})).collect::<Vec<_>>(),
            }),
        );
    }
    if !r.multiplicities.is_empty() {
        let v: Vec<Value> = r
            .multiplicities
            .iter()
            .map(|m| {
                json!({
                    "slice": m.slice,
                    "factor": m.factor,
                    "v": dir(&m.v),
                    "v0": dir(&m.v0),
                    "irregularity": m.irr.to_string(),
                    "chi_route": m.chi_route.as_ref().map(|c| json!({"chi_v": c.chi_v, "chi_v0": c.chi_v0, "irr": c.irr, "multiplicity": c.mult})),
                    "conified_route": m.conified.map(|(n, k)| json!({"conified": n, "multiplicity": k})),
                    "agree": m.agree(),
                    "notes": m.notes,
                })
            })
            .collect();
        root.insert("multiplicities".into(), Value::Array(v));
    }
    let p = &r.provenance;
    root.insert("provenance".into(), json!({"precision": p.precision, "seed": p.seed, "version": p.version}));
    serde_json::to_string_pretty(&Value::Object(root)).unwrap()
}

//! JSON payloads for each command. Keys come out sorted.

use serde_json::{json, Value};
use utorsion_core::cobordism::{CobordismReport, FamilyReport, MoveSequence};
use utorsion_core::knots::{InvariantReport, KnotExpr};
use utorsion_core::HomologyDecomposition;

pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "command": command,
        "input": input,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

pub fn homology(h: &HomologyDecomposition) -> Value {
    let per_degree: serde_json::Map<String, Value> = h
        .per_degree
        .iter()
        .map(|(k, d)| {
            (
                k.to_string(),
                json!({ "free_rank": d.free_rank, "torsion_exponents": d.torsion_exponents }),
            )
        })
        .collect();
    json!({
        "free_rank": h.free_rank,
        "torsion_exponents": h.torsion_exponents,
        "per_degree": per_degree,
    })
}

pub fn order(k: &KnotExpr, order_u: u32, h: &HomologyDecomposition) -> Value {
    json!({
        "knot": k.to_string(),
        "order_u": order_u,
        "homology": homology(h),
    })
}

pub fn invariants(k: &KnotExpr, inv: &InvariantReport) -> Value {
    json!({
        "knot": k.to_string(),
        "order_u": inv.order_u,
        "signature": inv.signature,
        "upsilon": inv.upsilon,
        "gamma4_lower": inv.gamma4_lower,
        "homology": homology(&inv.homology),
    })
}

fn moves(s: &MoveSequence) -> Value {
    s.moves.iter().map(|m| m.to_string()).collect()
}

pub fn cobordism(s: &MoveSequence, rep: &CobordismReport) -> Value {
    let st = &rep.stats;
    let mut out = json!({
        "source": s.source.as_ref().map(|k| k.to_string()),
        "target": s.target.as_ref().map(|k| k.to_string()),
        "moves": moves(s),
        "trace": rep.trace,
        "stats": {
            "m": st.m,
            "b": st.b,
            "M": st.big_m,
            "chi": st.chi,
            "gamma": st.gamma,
            "norm": st.norm,
            "nonorientable": st.nonorientable,
        },
    });
    match &rep.normalized {
        Ok(n) => {
            out["normalized"] = moves(n);
        }
        Err(why) => {
            out["normalized"] = Value::Null;
            out["normalize_error"] = why.clone().into();
        }
    }
    if let Some(e) = &rep.endpoints {
        out["source_order_u"] = e.source_order_u.into();
        out["target_order_u"] = e.target_order_u.into();
        out["torsion_order_upper_bound"] = e.torsion_order_upper_bound.into();
        out["bound_holds"] = e.bound_holds.into();
        out["wong_bound_check"] = e.wong_bound_check.into();
        out["dur_lower_bound"] = e.dur_lower_bound.into();
    }
    out
}

pub fn family(f: &FamilyReport) -> Value {
    let br = f.bound_report();
    let bounds: Vec<Value> = br
        .bounds
        .iter()
        .map(|b| json!({ "name": b.name, "value": b.value, "provenance": b.provenance }))
        .collect();
    json!({
        "gamma": f.gamma,
        "m": f.m,
        "r": f.r,
        "s": f.s,
        "knot": f.knot.to_string(),
        "order_u": f.order_u,
        "gamma4": f.gamma4_lower,
        "du_upper": f.du_upper,
        "min_minima": f.min_minima,
        "dur_lower": f.dur_lower,
        "dur_upper": f.dur_upper,
        "m1_boundary_case": f.m1_boundary_case,
        "bounds": bounds,
        "notes": br.notes,
    })
}

//! JSON document shapes and table renderings for the CLI.

use fg_core::blocks::BlockWeight;
use fg_core::category::{BWBTable, BlockQuiver, ProjectiveStructure, TranslationMap};
use fg_core::characters::SimpleCharacter;
use fg_core::rootsystems::{BaseState, RootSystem};
use fg_core::weightspace::{q_to_string, Q};
use serde_json::{json, Value};

fn qs(x: Q) -> String {
    q_to_string(x)
}

pub fn rootsys_json(rs: &RootSystem, orbit: &[BaseState]) -> Value {
    let cartan: Vec<Vec<String>> =
        rs.cartan.iter().map(|row| row.iter().map(|x| qs(*x)).collect()).collect();
    let bases: Vec<Value> = orbit
        .iter()
        .map(|s| json!(s.base.iter().map(|r| r.weight.clone()).collect::<Vec<_>>()))
        .collect();
    json!({
        "schema": 1,
        "algebra": rs.algebra.name(),
        "even_positive": rs.delta0_plus,
        "odd_positive": rs.delta1_plus,
        "base": rs.base,
        "cartan": cartan,
        "rho0": rs.rho0,
        "rho1": rs.rho1,
        "rho": rs.rho,
        "base_orbit": bases,
    })
}

pub fn rootsys_table(doc: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!("algebra: {}\n", doc["algebra"].as_str().unwrap_or("?")));
    out.push_str(&format!(
        "even positive roots: {}\nodd positive roots: {}\n",
        doc["even_positive"].as_array().map_or(0, Vec::len),
        doc["odd_positive"].as_array().map_or(0, Vec::len)
    ));
    out.push_str(&format!("rho: {}\n", doc["rho"]));
    out.push_str("cartan:\n");
    if let Some(rows) = doc["cartan"].as_array() {
        for row in rows {
            out.push_str(&format!("  {}\n", row));
        }
    }
    out.push_str(&format!(
        "simple-root systems in the odd-reflection orbit: {}",
        doc["base_orbit"].as_array().map_or(0, Vec::len)
    ));
    out
}

pub fn blocks_table(doc: &Value) -> String {
    let mut out = format!("block {}\n", doc["block"].as_str().unwrap_or("?"));
    if let Some(items) = doc["weights"].as_array() {
        for w in items {
            out.push_str(&format!(
                "  c={:<6} interval={:<8} special={:<8} lambda_scaled={}\n",
                w["c"].as_str().unwrap_or("?"),
                w["interval"].as_str().unwrap_or("?"),
                w["special"].as_str().unwrap_or("-"),
                w["weight"]["scaled"]
            ));
        }
    }
    out.trim_end().to_string()
}

pub fn character_json(bw: &BlockWeight, sc: &SimpleCharacter) -> Value {
    json!({
        "schema": 1,
        "block": bw.block.to_string(),
        "c": qs(bw.c),
        "lambda": bw.lambda,
        "method": sc.method,
        "dim": sc.dim,
        "sdim": sc.sdim,
        "character": sc.character,
    })
}

pub fn character_table(doc: &Value) -> String {
    format!(
        "block {} c={} method={}\ndim={} sdim={}\nterms={}",
        doc["block"].as_str().unwrap_or("?"),
        doc["c"].as_str().unwrap_or("?"),
        doc["method"].as_str().unwrap_or("?"),
        doc["dim"],
        doc["sdim"],
        doc["character"]["terms"].as_array().map_or(0, Vec::len)
    )
}

pub fn quiver_json(q: &BlockQuiver) -> Value {
    let vertices: Vec<Value> = q
        .vertices
        .iter()
        .map(|v| json!({"c": qs(v.c), "special": v.special, "weight": v.lambda}))
        .collect();
    json!({
        "schema": 1,
        "block": q.block.to_string(),
        "shape": q.shape,
        "vertices": vertices,
        "edges": q.edges,
    })
}

pub fn quiver_table(doc: &Value) -> String {
    let mut out = format!(
        "block {} shape {}\n",
        doc["block"].as_str().unwrap_or("?"),
        doc["shape"].as_str().unwrap_or("?")
    );
    if let Some(vs) = doc["vertices"].as_array() {
        for (i, v) in vs.iter().enumerate() {
            out.push_str(&format!("  v{}: c={}\n", i, v["c"].as_str().unwrap_or("?")));
        }
    }
    out.push_str(&format!("edges: {}", doc["edges"]));
    out
}

pub fn bwb_json(table: &BWBTable) -> Value {
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| {
            json!({
                "c": qs(r.vertex.c),
                "h0": r.h0.iter().map(|w| qs(w.c)).collect::<Vec<_>>(),
                "h1": r.h1.iter().map(|w| qs(w.c)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({"schema": 1, "block": table.block.to_string(), "rows": rows})
}

pub fn bwb_table_text(doc: &Value) -> String {
    let mut out = format!("block {}\n", doc["block"].as_str().unwrap_or("?"));
    if let Some(rows) = doc["rows"].as_array() {
        for r in rows {
            out.push_str(&format!("  c={:<6} H0={} H1={}\n", r["c"].as_str().unwrap_or("?"), r["h0"], r["h1"]));
        }
    }
    out.trim_end().to_string()
}

pub fn projective_json(p: &ProjectiveStructure) -> Value {
    json!({
        "vertex": qs(p.vertex.c),
        "top": p.top.iter().map(|w| qs(w.c)).collect::<Vec<_>>(),
        "middle": p.middle.iter().map(|w| qs(w.c)).collect::<Vec<_>>(),
        "socle": p.socle.iter().map(|w| qs(w.c)).collect::<Vec<_>>(),
    })
}

pub fn projectives_table(doc: &Value) -> String {
    let mut out = format!("block {}\n", doc["block"].as_str().unwrap_or("?"));
    if let Some(items) = doc["projectives"].as_array() {
        for p in items {
            out.push_str(&format!(
                "  P[c={}]: top {} / middle {} / socle {}\n",
                p["vertex"].as_str().unwrap_or("?"),
                p["top"],
                p["middle"],
                p["socle"]
            ));
        }
    }
    out.trim_end().to_string()
}

pub fn translation_json(map: &TranslationMap) -> Value {
    let pairs: Vec<Value> = map
        .pairs
        .iter()
        .map(|p| {
            json!({
                "source_c": qs(p.source.c),
                "source": p.source.lambda,
                "target_c": qs(p.target.c),
                "target": p.target.lambda,
                "gamma": p.gamma,
                "note": p.note,
            })
        })
        .collect();
    json!({
        "schema": 1,
        "source": map.source.to_string(),
        "target": map.target.to_string(),
        "pairs": pairs,
    })
}

pub fn translation_table(doc: &Value) -> String {
    let mut out = format!(
        "{} -> {}\n",
        doc["source"].as_str().unwrap_or("?"),
        doc["target"].as_str().unwrap_or("?")
    );
    if let Some(pairs) = doc["pairs"].as_array() {
        for p in pairs {
            out.push_str(&format!(
                "  c={:<6} -> c={:<6} gamma={}{}\n",
                p["source_c"].as_str().unwrap_or("?"),
                p["target_c"].as_str().unwrap_or("?"),
                p["gamma"]["scaled"],
                if p["note"].is_null() { "" } else { " (wall)" }
            ));
        }
    }
    out.trim_end().to_string()
}

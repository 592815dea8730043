//! Text and JSON renderings of library values.

use braid_core::conjugacy::SlidingCircuitGraph;
use braid_core::{BraidWord, CombingCoordinates, FreeWord, LeftNormalForm};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// One command result in both output modes.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
        }
    }

    /// Final JSON document: the payload plus `command` and `schema_version`.
    pub fn document(&self, command: &str) -> Value {
        let mut doc = self.json.clone();
        if let Value::Object(map) = &mut doc {
            map.insert("command".into(), json!(command));
            map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        }
        doc
    }
}

pub fn word(w: &BraidWord) -> Value {
    json!(w.letters())
}

pub fn free_word(w: &FreeWord) -> Value {
    json!({ "rank": w.rank(), "word": w.letters() })
}

pub fn normal_form(nf: &LeftNormalForm) -> Value {
    json!({
        "n": nf.strands(),
        "inf": nf.inf(),
        "factors": nf.factor_images(),
    })
}

pub fn combing(c: &CombingCoordinates) -> Value {
    let levels: Vec<Value> = c.levels.iter().map(free_word).collect();
    json!({ "levels": levels })
}

pub fn combing_text(c: &CombingCoordinates) -> String {
    c.levels
        .iter()
        .map(|l| format!("F_{}: {l}", l.rank()))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn graph(g: &SlidingCircuitGraph) -> Value {
    let vertices: Vec<Value> = g.vertices.iter().map(normal_form).collect();
    let edges: Vec<Value> = g
        .edges
        .iter()
        .map(|e| {
            json!({
                "from": e.from,
                "to": e.to,
                "conjugator": word(&e.conjugator.to_word()),
            })
        })
        .collect();
    json!({
        "base": g.base,
        "base_conjugator": word(&g.base_conjugator.to_word()),
        "vertices": vertices,
        "edges": edges,
    })
}

pub fn graph_text(g: &SlidingCircuitGraph) -> String {
    let mut lines = vec![
        format!("base {}", g.base),
        format!("base_conjugator {}", g.base_conjugator.to_word()),
    ];
    for (i, v) in g.vertices.iter().enumerate() {
        lines.push(format!("vertex {i}: {v}"));
    }
    for e in &g.edges {
        lines.push(format!("edge {} -> {}: {}", e.from, e.to, e.conjugator.to_word()));
    }
    lines.join("\n")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

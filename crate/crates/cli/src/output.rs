use std::fmt::Write;

use respoly::exactla::{Rational, RationalMatrix, Subspace};
use respoly::graphcore::{LevelStructure, Multigraph, VertexSet};
use respoly::polymat::SetFunction;
use serde_json::{json, Value};

pub fn names(g: &Multigraph, set: VertexSet) -> Vec<String> {
    set.iter().map(|v| g.vertex_name(v).to_string()).collect()
}

pub fn set_text(g: &Multigraph, set: VertexSet) -> String {
    g.set_label(set)
}

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn vector_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn matrix(m: &RationalMatrix) -> Value {
    Value::Array(m.row_iter().map(vector).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({ "ambient_dim": s.ambient_dim(), "dim": s.dim(), "basis": matrix(s.basis()) })
}

pub fn subspace_text(out: &mut String, title: &str, s: &Subspace) {
    let _ = writeln!(out, "{title}: dim {} in Q^{}", s.dim(), s.ambient_dim());
    for row in s.basis().row_iter() {
        let _ = writeln!(out, "  {}", vector_text(row));
    }
}

pub fn partition(g: &Multigraph, l: &LevelStructure) -> Value {
    Value::Array(l.parts().iter().map(|&p| json!(names(g, p))).collect())
}

pub fn partition_text(g: &Multigraph, l: &LevelStructure) -> String {
    let parts: Vec<String> = l.parts().iter().map(|&p| set_text(g, p)).collect();
    format!("({})", parts.join(", "))
}

/// Every subset with its value, in bitmask order.
pub fn table(g: &Multigraph, t: &SetFunction) -> Value {
    Value::Array(
        (0..1u64 << t.ground_size())
            .map(|bits| {
                let set = VertexSet::from_bits(bits);
                json!({ "subset": names(g, set), "value": rational(t.value(set)) })
            })
            .collect(),
    )
}

pub fn table_text(out: &mut String, g: &Multigraph, t: &SetFunction) {
    for bits in 0..1u64 << t.ground_size() {
        let set = VertexSet::from_bits(bits);
        let _ = writeln!(out, "  {:<24} {}", set_text(g, set), t.value(set));
    }
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

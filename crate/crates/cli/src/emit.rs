//! DOT and JSON emitters for the graph-like objects.

use ncgraded_core::k0::BratteliDiagram;
use ncgraded_core::monomial::MonomialAlgebra;
use ncgraded_core::points::{special_sequences, successor_automaton_dot, Line, ProjPoint};
use ncgraded_core::quiver::Quiver;

use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmitFormat {
    Dot,
    Json,
}

pub fn quiver_json(q: &Quiver) -> Value {
    json!({
        "vertex_count": q.vertex_count(),
        "arrows": q.arrows().iter().map(|a| json!({
            "source": a.source,
            "target": a.target,
            "label": a.label,
        })).collect::<Vec<_>>(),
    })
}

pub fn quiver_text(q: &Quiver, format: EmitFormat) -> String {
    match format {
        EmitFormat::Dot => q.to_dot(),
        EmitFormat::Json => pretty(quiver_json(q)),
    }
}

pub fn bratteli_text(d: &BratteliDiagram, levels: usize, format: EmitFormat) -> String {
    match format {
        EmitFormat::Dot => d.to_dot(levels),
        EmitFormat::Json => {
            let m = d.matrix();
            let rows: Vec<Vec<String>> = (0..m.rows())
                .map(|r| m.row(r).iter().map(BigInt::to_string).collect())
                .collect();
            let level_sizes: Vec<Vec<String>> = (0..=levels)
                .map(|n| d.level_sizes(n).iter().map(BigInt::to_string).collect())
                .collect();
            pretty(json!({ "matrix": rows, "levels": level_sizes }))
        }
    }
}

pub fn successor_automaton_text(format: EmitFormat) -> String {
    match format {
        EmitFormat::Dot => successor_automaton_dot(),
        EmitFormat::Json => {
            let corners = ["(1,0,0)", "(0,1,0)", "(0,0,1)"];
            let lines: Vec<String> = Line::ALL.iter().map(|l| l.to_string()).collect();
            let mut transitions = Vec::new();
            for (i, corner) in corners.iter().enumerate() {
                for (j, other) in corners.iter().enumerate() {
                    if i != j {
                        transitions.push(json!({ "from": corner, "to": other }));
                    }
                }
                transitions.push(json!({ "from": corner, "to": lines[i] }));
            }
            for (i, line) in lines.iter().enumerate() {
                transitions.push(json!({ "from": line, "to": corners[i] }));
            }
            pretty(json!({
                "states": corners.iter().map(|s| s.to_string()).chain(lines.clone()).collect::<Vec<_>>(),
                "transitions": transitions,
            }))
        }
    }
}

fn point_json(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|c| Value::String(c.to_string())).collect())
}

/// JSON listing of every corner sequence `p_0..p_n` admitted by the
/// successor rule.
pub fn special_sequences_json(n: usize) -> String {
    let sequences: Vec<Value> = special_sequences(n)
        .iter()
        .map(|seq| Value::Array(seq.iter().map(point_json).collect()))
        .collect();
    pretty(json!({
        "length": n + 1,
        "count": sequences.len(),
        "sequences": sequences,
    }))
}

pub fn ufnarovskii_graph_of(algebra: &MonomialAlgebra, format: EmitFormat) -> String {
    quiver_text(&algebra.normal_word_graph(), format)
}

fn pretty(v: Value) -> String {
    let mut out = serde_json::to_string_pretty(&v).expect("json serializes");
    out.push('\n');
    out
}

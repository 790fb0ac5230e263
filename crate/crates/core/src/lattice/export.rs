//! DOT and JSON renderings of a cover graph.

use std::fmt::Write;

use serde::Serialize;

use super::FiniteLattice;

/// Graphviz digraph drawn bottom-up; `label` names each element.
pub fn to_dot<F>(l: &FiniteLattice, name: &str, label: F) -> String
where
    F: Fn(usize) -> String,
{
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for x in 0..l.len() {
        writeln!(out, "  n{x} [label=\"{}\"];", escape(&label(x))).unwrap();
    }
    for (x, y) in l.covers() {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub covers: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

pub fn to_json_value<F>(l: &FiniteLattice, label: F) -> LatticeJson
where
    F: Fn(usize) -> String,
{
    LatticeJson {
        elements: (0..l.len()).map(label).collect(),
        covers: l.covers(),
        bottom: l.bottom(),
        top: l.top(),
    }
}

use std::fmt::Write as _;

use rainbow_core::{Colouring, Graph};

/// Hues cycle every twelve ids; the numeric edge label is authoritative.
const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
    "#393b79", "#e7ba52",
];

/// Undirected DOT; coloured edges carry `label="<colour id>"`.
pub fn to_dot(g: &Graph, c: Option<&Colouring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match c.and_then(|c| c.get(e)) {
            Some(col) => {
                let hue = PALETTE[col.index() % PALETTE.len()];
                let _ = writeln!(out, "  {u} -- {v} [label=\"{}\", color=\"{hue}\", penwidth=2];", col.0);
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

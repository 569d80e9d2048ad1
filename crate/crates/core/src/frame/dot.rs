//! Graphviz export following the usual drawing conventions for these frames:
//! proper `R`-steps as arrows (Hasse edges only), `R`-clusters as undirected
//! lines, `E`-classes as dotted enclosures. S5₂-frames draw `E₁` in black and
//! `E₂` in blue.

use std::fmt::Write;

use super::Frame;
use crate::s52::S52Frame;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn frame_to_dot(f: &Frame) -> String {
    let mut out = String::from("digraph frame {\n  node [shape=circle];\n");
    for (i, block) in f.e().blocks().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_e{i} {{\n    style=dotted;");
        for &x in block {
            let label = match f.layers() {
                Some(l) => format!(" [xlabel=\"D{}\"]", l[x]),
                None => String::new(),
            };
            let _ = writeln!(out, "    {}{label};", quote(f.name(x)));
        }
        out.push_str("  }\n");
    }
    let clusters = f.clusters();
    for block in clusters.blocks() {
        for w in block.windows(2) {
            let _ = writeln!(
                out,
                "  {} -> {} [dir=none];",
                quote(f.name(w[0])),
                quote(f.name(w[1]))
            );
        }
    }
    let reps: Vec<usize> = clusters.blocks().iter().map(|b| b[0]).collect();
    let r = f.r();
    let strictly_above = |a: usize, b: usize| r.contains(a, b) && !r.contains(b, a);
    for &a in &reps {
        for &b in &reps {
            if !strictly_above(a, b) {
                continue;
            }
            let implied = reps
                .iter()
                .any(|&c| strictly_above(a, c) && strictly_above(c, b));
            if !implied {
                let _ = writeln!(out, "  {} -> {};", quote(f.name(a)), quote(f.name(b)));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn s52_to_dot(f: &S52Frame) -> String {
    let mut out = String::from("graph s52 {\n  node [shape=circle];\n");
    for name in f.names() {
        let _ = writeln!(out, "  {};", quote(name));
    }
    for (color, part) in [("black", f.e1()), ("blue", f.e2())] {
        for block in part.blocks() {
            for w in block.windows(2) {
                let _ = writeln!(
                    out,
                    "  {} -- {} [color={color}];",
                    quote(f.name(w[0])),
                    quote(f.name(w[1]))
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

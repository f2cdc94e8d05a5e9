//! Graphviz export of an Auslander-Reiten quiver.
//!
//! Levels become columns (`rankdir=LR`, one `rank=same` subgraph per level)
//! and vertices inside a column are listed by base vertex. Projectives are
//! boxes, injectives double circles, and arrows carry their valuation when
//! it is not `(1,1)`.

use std::collections::BTreeMap;
use std::fmt::Write;

use arq_core::{ARQuiver, ZVertex};

fn id(v: ZVertex) -> String {
    format!("v{}_{}", v.level, v.base)
}

pub fn to_dot(arq: &ARQuiver) -> String {
    let mut levels: BTreeMap<i64, Vec<ZVertex>> = BTreeMap::new();
    for &v in &arq.vertices {
        levels.entry(v.level).or_default().push(v);
    }
    let mut out = String::new();
    out.push_str("digraph ar_quiver {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=ellipse, fontname=\"Helvetica\"];\n");
    for (level, mut vs) in levels {
        vs.sort_by_key(|v| v.base);
        let _ = writeln!(out, "  subgraph level_{level} {{");
        out.push_str("    rank=same;\n");
        for v in vs {
            let projective = v.level == 0;
            let injective = arq.is_injective(v);
            let shape = match (projective, injective) {
                (true, true) => "shape=box, peripheries=2",
                (true, false) => "shape=box",
                (false, true) => "shape=doublecircle",
                (false, false) => "shape=ellipse",
            };
            let dim: Vec<String> = arq.dims[&v].iter().map(i64::to_string).collect();
            let _ = writeln!(
                out,
                "    {} [label=\"{v}\\n{}\", {shape}];",
                id(v),
                dim.join(" ")
            );
        }
        out.push_str("  }\n");
    }
    let mut arrows: Vec<_> = arq.arrows.iter().collect();
    arrows.sort_by_key(|a| (a.src, a.dst));
    for a in arrows {
        if a.val.is_trivial() {
            let _ = writeln!(out, "  {} -> {};", id(a.src), id(a.dst));
        } else {
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"({},{})\"];",
                id(a.src),
                id(a.dst),
                a.val.0,
                a.val.1
            );
        }
    }
    out.push_str("}\n");
    out
}

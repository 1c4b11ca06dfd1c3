//! Line-oriented text format for bits and DOT emission.
//!
//! `edge <id> <src-vertex> <dst-vertex>` records give the right end (src)
//! and left end (dst) of each edge, following the right-to-left drawing
//! convention; optional `order <vertex> <edge-list>` records carry planar
//! structure, with the pseudo-vertices `-` and `+` for the two boundaries.

use super::bit::Bit;
use super::graph::Graph;
use super::planar::PlanarBit;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

pub fn emit_bit(b: &Bit) -> String {
    let g = b.graph();
    let mut out = String::new();
    for e in g.edges() {
        writeln!(out, "edge e{e} v{} v{}", g.dplus(e), g.dminus(e)).unwrap();
    }
    out
}

pub fn emit_planar(p: &PlanarBit) -> String {
    let mut out = emit_bit(p.bit());
    for v in 0..p.bit().n_vertices() {
        if p.bit().is_internal(v) {
            let all: Vec<String> = p
                .left_order(v)
                .iter()
                .chain(p.right_order(v).iter())
                .map(|e| format!("e{e}"))
                .collect();
            writeln!(out, "order v{v} {}", all.join(" ")).unwrap();
        }
    }
    let fmt = |edges: &[usize]| {
        edges.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(" ")
    };
    writeln!(out, "order - {}", fmt(p.boundary_left())).unwrap();
    writeln!(out, "order + {}", fmt(p.boundary_right())).unwrap();
    out
}

pub fn parse_bit(text: &str) -> Result<Bit> {
    Ok(parse_planar(text)?.bit().clone())
}

pub fn parse_planar(text: &str) -> Result<PlanarBit> {
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let mut orders: Vec<(String, Vec<String>)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts[0] {
            "edge" if parts.len() == 4 => {
                edges.push((parts[1].into(), parts[2].into(), parts[3].into()));
            }
            "order" if parts.len() >= 2 => {
                orders.push((
                    parts[1].into(),
                    parts[2..].iter().map(|s| s.to_string()).collect(),
                ));
            }
            _ => {
                return Err(Error::Parse {
                    line: ln + 1,
                    msg: format!("expected `edge <id> <src> <dst>` or `order <vertex> <edges>`, got `{line}`"),
                })
            }
        }
    }
    // keep the emitted numbering when names are dense `v<k>` / `e<k>` ids,
    // so our own output parses back to the identical structure
    let numeric = |names: Vec<&str>, prefix: char| -> Option<HashMap<String, usize>> {
        let mut ids = HashMap::new();
        for n in &names {
            let k: usize = n.strip_prefix(prefix)?.parse().ok()?;
            ids.insert(n.to_string(), k);
        }
        let mut seen: Vec<usize> = ids.values().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        (seen.len() == ids.len() && seen.iter().enumerate().all(|(i, &k)| i == k))
            .then_some(ids)
    };
    let vertex_names: Vec<&str> = edges
        .iter()
        .flat_map(|(_, s, d)| [s.as_str(), d.as_str()])
        .collect();
    let mut vertex_ids: HashMap<String, usize> = numeric(vertex_names, 'v').unwrap_or_default();
    let mut edge_ids: HashMap<String, usize> = HashMap::new();
    let mut ordered: Vec<(usize, usize, usize)> = Vec::new();
    for (i, (name, src, dst)) in edges.iter().enumerate() {
        if edge_ids.contains_key(name) {
            return Err(Error::Parse { line: 0, msg: format!("duplicate edge id {name}") });
        }
        let id = name
            .strip_prefix('e')
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|&k| k < edges.len())
            .unwrap_or(i);
        edge_ids.insert(name.clone(), id);
        let nv = vertex_ids.len();
        let r = *vertex_ids.entry(src.clone()).or_insert(nv);
        let nv = vertex_ids.len();
        let l = *vertex_ids.entry(dst.clone()).or_insert(nv);
        ordered.push((id, l, r));
    }
    {
        let mut ids: Vec<usize> = ordered.iter().map(|&(id, _, _)| id).collect();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != ordered.len() {
            return Err(Error::Parse { line: 0, msg: "edge ids collide".into() });
        }
    }
    ordered.sort_unstable();
    let pairs: Vec<(usize, usize)> = ordered.iter().map(|&(_, l, r)| (l, r)).collect();
    let bit = Bit::validate(Graph::new(vertex_ids.len(), &pairs))?;
    let mut planar = PlanarBit::default_orders(bit.clone());
    if !orders.is_empty() {
        let mut left_order: Vec<Vec<usize>> =
            (0..bit.n_vertices()).map(|v| bit.graph().left_edges(v)).collect();
        let mut right_order: Vec<Vec<usize>> =
            (0..bit.n_vertices()).map(|v| bit.graph().right_edges(v)).collect();
        let mut boundary_left = bit.left_boundary();
        let mut boundary_right = bit.right_boundary();
        for (vname, edge_names) in &orders {
            let ids: Result<Vec<usize>> = edge_names
                .iter()
                .map(|n| {
                    edge_ids.get(n).copied().ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: format!("unknown edge {n} in order record"),
                    })
                })
                .collect();
            let ids = ids?;
            match vname.as_str() {
                "-" => boundary_left = ids,
                "+" => boundary_right = ids,
                _ => {
                    let &v = vertex_ids.get(vname).ok_or_else(|| Error::Parse {
                        line: 0,
                        msg: format!("unknown vertex {vname} in order record"),
                    })?;
                    // the record lists the left side then the right side
                    let nl = bit.graph().left_degree(v);
                    if ids.len() != nl + bit.graph().right_degree(v) {
                        return Err(Error::Parse {
                            line: 0,
                            msg: format!("order record for {vname} has the wrong length"),
                        });
                    }
                    left_order[v] = ids[..nl].to_vec();
                    right_order[v] = ids[nl..].to_vec();
                }
            }
        }
        planar = PlanarBit::new(bit, left_order, right_order, boundary_left, boundary_right)?;
    }
    Ok(planar)
}

/// DOT output; edges are drawn right to left, so ranks run from the right
/// boundary toward the left.
pub fn to_dot(b: &Bit, name: &str) -> String {
    let g = b.graph();
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=RL;").unwrap();
    for v in g.vertices() {
        let shape = if b.is_internal(v) { "circle" } else { "point" };
        writeln!(out, "  v{v} [shape={shape}];").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  v{} -> v{} [label=\"e{e}\"];", g.dplus(e), g.dminus(e)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::canon::iso_bits;
    use crate::bit::planar::{corolla_bit, Sign};

    #[test]
    fn bit_text_round_trip() {
        for b in crate::bit::enumerate::enumerate_bits(4, true).unwrap() {
            let text = emit_bit(&b);
            let back = parse_bit(&text).unwrap();
            assert!(iso_bits(&b, &back).is_some());
        }
    }

    #[test]
    fn planar_text_round_trip_is_exact() {
        let p = corolla_bit(Sign::Minus, 3);
        let text = emit_planar(&p);
        let back = parse_planar(&text).unwrap();
        assert_eq!(&p, &back);
    }

    #[test]
    fn dot_output_mentions_every_edge() {
        let p = corolla_bit(Sign::Minus, 2);
        let dot = to_dot(p.bit(), "c2");
        assert!(dot.contains("rankdir=RL"));
        for e in 0..3 {
            assert!(dot.contains(&format!("e{e}")));
        }
    }
}

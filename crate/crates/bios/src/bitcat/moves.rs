//! Elementary degeneracies and face maps of a bit, each with its map into
//! or onto the host.

use super::map::BitMap;
use super::sg::{SgBio, SgElem};
use crate::bit::{Bit, EdgeId, Graph, VertexId};
use crate::error::Result;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// split an edge by a new unary vertex
    DegenSplit(EdgeId),
    /// split an edge into two boundary halves
    DegenSplitOpen(EdgeId),
    /// duplicate an edge as a detached unit component
    DegenDuplicate(EdgeId),
    /// remove one edge, repairing stumps
    OuterFace { edge: EdgeId, left: char, right: char },
    /// contract an edge between two like vertices
    InnerFaceComposition { edge: EdgeId, sign: char },
    /// contract the full interface between an operation vertex and a
    /// co-operation vertex
    InnerFaceAction { edges: Vec<EdgeId>, sign: char },
}

pub struct ElementaryMove {
    pub kind: MoveKind,
    /// the flat map: degeneracies map onto the host, faces into it
    pub map: BitMap,
    pub edge_delta: isize,
}

impl std::fmt::Debug for ElementaryMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} (delta {})", self.kind, self.edge_delta)
    }
}

/// An image corolla stage: the (possibly partial) corolla of a target
/// vertex whose boundary orders are the edge-map image of the source
/// vertex's reference order.
fn corolla_image(src: &Bit, v: VertexId, edge_map: &[EdgeId], target_vertex: VertexId) -> SgElem {
    let g = src.graph();
    let mut left = g.left_edges(v);
    let mut right = g.right_edges(v);
    left.sort_unstable();
    right.sort_unstable();
    SgElem::corolla(
        target_vertex,
        left.iter().map(|&e| edge_map[e]).collect(),
        right.iter().map(|&e| edge_map[e]).collect(),
    )
}

/// Vertex images when the source vertex `v` sits over the same-named host
/// vertex (identity-like moves use `relabel` to translate).
fn vertex_images(
    src: &Bit,
    edge_map: &[EdgeId],
    relabel: &dyn Fn(VertexId) -> VertexId,
) -> BTreeMap<VertexId, SgElem> {
    src.internal_vertices()
        .into_iter()
        .map(|v| (v, corolla_image(src, v, edge_map, relabel(v))))
        .collect()
}

/// All elementary moves on the host. With `connected_only`, moves whose
/// other end leaves the connected site are skipped: the open split of a
/// bridge, every duplication, and outer faces that disconnect.
pub fn elementary_moves(host: &Arc<SgBio>, connected_only: bool) -> Result<Vec<ElementaryMove>> {
    let mut out = Vec::new();
    let g = host.host.graph();

    for e in g.edges() {
        // s_e: a new unary vertex in the middle of e
        {
            let mut pairs = g.edge_pairs();
            let v_e = g.n_vertices();
            pairs[e] = (g.dminus(e), v_e); // the left half keeps the id
            pairs.push((v_e, g.dplus(e)));
            let split = Bit::validate(Graph::new(g.n_vertices() + 1, &pairs))?;
            let mut edge_map: Vec<EdgeId> = (0..g.n_edges()).collect();
            edge_map.push(e);
            let src = SgBio::handle(split);
            let mut vm = vertex_images(&src.host, &edge_map, &|v| v);
            vm.insert(v_e, SgElem::single(e));
            out.push(ElementaryMove {
                kind: MoveKind::DegenSplit(e),
                map: BitMap::new(src, host.clone(), edge_map, vm)?,
                edge_delta: 1,
            });
        }
        // s_)e(: cut e into two boundary halves
        {
            let mut pairs = g.edge_pairs();
            let v_minus = g.n_vertices();
            let v_plus = g.n_vertices() + 1;
            pairs[e] = (g.dminus(e), v_minus);
            pairs.push((v_plus, g.dplus(e)));
            if let Ok(cut) = Bit::validate(Graph::new(g.n_vertices() + 2, &pairs)) {
                if !connected_only || cut.is_connected() {
                    let mut edge_map: Vec<EdgeId> = (0..g.n_edges()).collect();
                    edge_map.push(e);
                    let src = SgBio::handle(cut);
                    let vm = vertex_images(&src.host, &edge_map, &|v| v);
                    out.push(ElementaryMove {
                        kind: MoveKind::DegenSplitOpen(e),
                        map: BitMap::new(src, host.clone(), edge_map, vm)?,
                        edge_delta: 1,
                    });
                }
            }
        }
        // s_ě: a duplicate of e as a floating unit component
        if !connected_only {
            let mut pairs = g.edge_pairs();
            pairs.push((g.n_vertices(), g.n_vertices() + 1));
            let dup = Bit::validate(Graph::new(g.n_vertices() + 2, &pairs))?;
            let mut edge_map: Vec<EdgeId> = (0..g.n_edges()).collect();
            edge_map.push(e);
            let src = SgBio::handle(dup);
            let vm = vertex_images(&src.host, &edge_map, &|v| v);
            out.push(ElementaryMove {
                kind: MoveKind::DegenDuplicate(e),
                map: BitMap::new(src, host.clone(), edge_map, vm)?,
                edge_delta: 1,
            });
        }
        // outer face at e
        if let Some(mv) = outer_face(host, e, connected_only)? {
            out.push(mv);
        }
        // inner composition face at e
        out.extend(inner_composition_face(host, e)?);
    }
    out.extend(inner_action_faces(host)?);
    Ok(out)
}

fn sign_char(bit: &Bit, v: VertexId) -> char {
    if bit.is_minus_like(v) {
        '-'
    } else if bit.is_plus_like(v) {
        '+'
    } else if bit.graph().left_degree(v) == 0 {
        '-'
    } else {
        '+'
    }
}

/// Remove edge `e`, deleting endpoints that stop being bit vertices and
/// repairing orphaned edges with fresh stumps.
pub fn outer_face(
    host: &Arc<SgBio>,
    e: EdgeId,
    connected_only: bool,
) -> Result<Option<ElementaryMove>> {
    let g = host.host.graph();
    let bit = &host.host;
    let u = g.dminus(e);
    let w = g.dplus(e);
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    let mut edge_map: Vec<EdgeId> = Vec::new();
    let mut next_vertex = g.n_vertices();
    // a vertex whose single edge on one side was e cannot survive unless
    // it degrades to a stump; co-operation and operation vertices losing
    // their single-edge side are deleted and their other edges repaired
    let delete_u = (g.right_degree(u) == 1 && g.left_degree(u) >= 2) || g.left_degree(u) == 0;
    let delete_w = (g.left_degree(w) == 1 && g.right_degree(w) >= 2) || g.right_degree(w) == 0;
    for f in g.edges() {
        if f == e {
            continue;
        }
        let mut l = g.dminus(f);
        let mut r = g.dplus(f);
        if (delete_u && l == u) || (delete_w && l == w) {
            l = next_vertex;
            next_vertex += 1;
        }
        if (delete_u && r == u) || (delete_w && r == w) {
            r = next_vertex;
            next_vertex += 1;
        }
        edge_map.push(f);
        pairs.push((l, r));
    }
    if pairs.is_empty() {
        return Ok(None);
    }
    let mut used: Vec<VertexId> = pairs.iter().flat_map(|&(l, r)| [l, r]).collect();
    used.sort_unstable();
    used.dedup();
    let renumber: BTreeMap<VertexId, VertexId> =
        used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pairs: Vec<(VertexId, VertexId)> =
        pairs.iter().map(|&(l, r)| (renumber[&l], renumber[&r])).collect();
    let face = match Bit::validate(Graph::new(used.len(), &pairs)) {
        Ok(b) => b,
        Err(_) => return Ok(None),
    };
    if connected_only && !face.is_connected() {
        return Ok(None);
    }
    let src = SgBio::handle(face);
    let back = used.clone();
    let vm = vertex_images(&src.host, &edge_map, &|v| back[v]);
    let map = BitMap::new(src, host.clone(), edge_map, vm)?;
    Ok(Some(ElementaryMove {
        kind: MoveKind::OuterFace { edge: e, left: sign_char(bit, u), right: sign_char(bit, w) },
        map,
        edge_delta: -1,
    }))
}

/// Contract edge `e` when both ends are operation vertices, or both
/// co-operation vertices.
fn inner_composition_face(host: &Arc<SgBio>, e: EdgeId) -> Result<Vec<ElementaryMove>> {
    let g = host.host.graph();
    let bit = &host.host;
    let u = g.dminus(e);
    let w = g.dplus(e);
    if !bit.is_internal(u) || !bit.is_internal(w) {
        return Ok(vec![]);
    }
    let minus_ok = bit.is_minus_like(u) && bit.is_minus_like(w);
    let plus_ok = bit.is_plus_like(u) && bit.is_plus_like(w);
    if !(minus_ok || plus_ok) {
        return Ok(vec![]);
    }
    let sign = if minus_ok { '-' } else { '+' };
    let merged = contract(host, &[e], &[u, w])?;
    Ok(vec![ElementaryMove {
        kind: MoveKind::InnerFaceComposition { edge: e, sign },
        map: merged,
        edge_delta: -1,
    }])
}

/// Contract the full interface between an operation vertex and the
/// co-operation vertex it feeds, in either saturation pattern.
fn inner_action_faces(host: &Arc<SgBio>) -> Result<Vec<ElementaryMove>> {
    let g = host.host.graph();
    let bit = &host.host;
    let mut out = Vec::new();
    for x in bit.internal_vertices() {
        if !(bit.is_minus_like(x) && !bit.is_plus_like(x)) {
            continue;
        }
        for y in bit.internal_vertices() {
            if !(bit.is_plus_like(y) && !bit.is_minus_like(y)) {
                continue;
            }
            let d: Vec<EdgeId> = g
                .right_edges(x)
                .into_iter()
                .filter(|&f| g.dplus(f) == y)
                .collect();
            if d.is_empty() {
                continue;
            }
            let all_of_y = d.len() == g.left_degree(y);
            let all_of_x = d.len() == g.right_degree(x);
            if all_of_y {
                out.push(ElementaryMove {
                    kind: MoveKind::InnerFaceAction { edges: d.clone(), sign: '-' },
                    map: contract(host, &d, &[x, y])?,
                    edge_delta: -(d.len() as isize),
                });
            }
            if all_of_x && !all_of_y {
                out.push(ElementaryMove {
                    kind: MoveKind::InnerFaceAction { edges: d.clone(), sign: '+' },
                    map: contract(host, &d, &[x, y])?,
                    edge_delta: -(d.len() as isize),
                });
            }
        }
    }
    Ok(out)
}

/// The contracted bit with `verts` merged into one vertex and the given
/// edges removed, as a face map into the host.
fn contract(host: &Arc<SgBio>, removed: &[EdgeId], verts: &[VertexId]) -> Result<BitMap> {
    let g = host.host.graph();
    let merged = verts[0];
    let mut pairs = Vec::new();
    let mut edge_map = Vec::new();
    for f in g.edges() {
        if removed.contains(&f) {
            continue;
        }
        let squash = |v: VertexId| if verts.contains(&v) { merged } else { v };
        pairs.push((squash(g.dminus(f)), squash(g.dplus(f))));
        edge_map.push(f);
    }
    let mut used: Vec<VertexId> = pairs.iter().flat_map(|&(l, r)| [l, r]).collect();
    used.sort_unstable();
    used.dedup();
    let renumber: BTreeMap<VertexId, VertexId> =
        used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let pairs: Vec<(VertexId, VertexId)> =
        pairs.iter().map(|&(l, r)| (renumber[&l], renumber[&r])).collect();
    let face = Bit::validate(Graph::new(used.len(), &pairs))?;
    let src = SgBio::handle(face);
    // the merged vertex carries the glued two-corolla stage
    let hg = host.host.graph();
    let mut vm = BTreeMap::new();
    for v in src.host.internal_vertices() {
        let original = used[v];
        if original == merged {
            let mut vertices = Vec::new();
            let mut labels: std::collections::BTreeSet<EdgeId> = Default::default();
            for &ov in verts {
                let l: std::collections::BTreeSet<EdgeId> =
                    hg.left_edges(ov).into_iter().collect();
                let r: std::collections::BTreeSet<EdgeId> =
                    hg.right_edges(ov).into_iter().collect();
                labels.extend(l.iter().copied());
                labels.extend(r.iter().copied());
                vertices.push((ov, l, r));
            }
            vertices.sort();
            let stage = crate::bit::Stage { vertices, labels };
            let sg = src.host.graph();
            let mut left = sg.left_edges(v);
            let mut right = sg.right_edges(v);
            left.sort_unstable();
            right.sort_unstable();
            vm.insert(
                v,
                SgElem {
                    stage,
                    left_order: left.iter().map(|&f| edge_map[f]).collect(),
                    right_order: right.iter().map(|&f| edge_map[f]).collect(),
                },
            );
        } else {
            vm.insert(v, corolla_image(&src.host, v, &edge_map, original));
        }
    }
    BitMap::new(src, host.clone(), edge_map, vm)
}

impl ElementaryMove {
    /// Degeneracies map a larger bit onto the host; faces include a
    /// smaller one.
    pub fn is_degeneracy(&self) -> bool {
        self.edge_delta > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::{corolla_bit, iso_bits, Sign};

    fn sg_of(b: Bit) -> Arc<SgBio> {
        SgBio::handle(b)
    }

    #[test]
    fn unit_bit_has_degeneracies_only() {
        let host = sg_of(Bit::unit());
        let moves = elementary_moves(&host, true).unwrap();
        assert!(moves.iter().all(|m| m.is_degeneracy()));
        assert!(moves.iter().any(|m| matches!(m.kind, MoveKind::DegenSplit(_))));
        // the open split of the only edge disconnects and is not offered
        assert!(!moves.iter().any(|m| matches!(m.kind, MoveKind::DegenSplitOpen(_))));
        for m in &moves {
            assert!(m.map.is_flat(), "{m:?}");
        }
    }

    #[test]
    fn composition_shape_contracts_to_a_three_corolla() {
        // C_2^- grafted with another C_2^- at its first leaf
        let g = Graph::new(6, &[(2, 0), (0, 1), (0, 3), (1, 4), (1, 5)]);
        let host = sg_of(Bit::validate(g).unwrap());
        let moves = elementary_moves(&host, true).unwrap();
        let inner: Vec<_> = moves
            .iter()
            .filter(|m| matches!(m.kind, MoveKind::InnerFaceComposition { .. }))
            .collect();
        assert_eq!(inner.len(), 1);
        let c3 = corolla_bit(Sign::Minus, 3);
        assert!(iso_bits(&inner[0].map.source.host, c3.bit()).is_some());
        assert!(inner[0].map.is_flat());
    }

    #[test]
    fn action_shape_removes_min_edges() {
        // operation vertex with both inputs feeding a co-operation vertex:
        // the 2-by-2 interface contracts away two edges
        let g = Graph::new(4, &[(2, 0), (0, 1), (0, 1), (1, 3)]);
        let host = sg_of(Bit::validate(g).unwrap());
        let moves = elementary_moves(&host, true).unwrap();
        let action: Vec<_> = moves
            .iter()
            .filter(|m| matches!(m.kind, MoveKind::InnerFaceAction { .. }))
            .collect();
        assert_eq!(action.len(), 1);
        assert_eq!(action[0].edge_delta, -2);
        assert!(action[0].map.is_flat());
    }

    #[test]
    fn every_move_is_flat_and_counts_match_on_small_bits() {
        for b in crate::bit::enumerate_bits(4, true).unwrap() {
            let host = sg_of(b);
            for m in elementary_moves(&host, true).unwrap() {
                assert!(m.map.is_flat(), "{m:?}");
                let delta =
                    m.map.source.host.n_edges() as isize - host.host.n_edges() as isize;
                assert_eq!(delta, m.edge_delta, "{m:?}");
            }
        }
    }
}

//! Exhaustive hom-sets of the truncated site: every flat map between two
//! bits.

use super::map::{BitMap, Flatness};
use super::sg::{SgBio, SgElem};
use crate::bio::elem::HomType;
use crate::bio::handle::BioImpl;
use crate::bit::{EdgeId, VertexId, MAX_SKELETON_BOUND};
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Every flat map from g to h, duplicate free, in a stable order.
pub fn bit_hom(g: &Arc<SgBio>, h: &Arc<SgBio>) -> Result<Vec<BitMap>> {
    let ge = g.host.n_edges();
    let he = h.host.n_edges();
    if ge > MAX_SKELETON_BOUND || he > MAX_SKELETON_BOUND {
        return Err(Error::BoundExceeded {
            requested: ge.max(he),
            limit: MAX_SKELETON_BOUND,
        });
    }
    let mut out = Vec::new();
    let mut edge_map = vec![0usize; ge];
    enumerate_edge_maps(g, h, 0, &mut edge_map, &mut out)?;
    Ok(out)
}

fn enumerate_edge_maps(
    g: &Arc<SgBio>,
    h: &Arc<SgBio>,
    pos: usize,
    edge_map: &mut Vec<EdgeId>,
    out: &mut Vec<BitMap>,
) -> Result<()> {
    if pos == edge_map.len() {
        expand_vertex_choices(g, h, edge_map, out)?;
        return Ok(());
    }
    for target in 0..h.host.n_edges() {
        edge_map[pos] = target;
        // prune: an internal vertex with all edges decided must map
        // injectively on each side
        let graph = g.host.graph();
        let ok = g.host.internal_vertices().into_iter().all(|v| {
            for side_edges in [graph.left_edges(v), graph.right_edges(v)] {
                let decided: Vec<EdgeId> = side_edges
                    .iter()
                    .copied()
                    .filter(|&e| e <= pos)
                    .map(|e| edge_map[e])
                    .collect();
                let mut dedup = decided.clone();
                dedup.sort_unstable();
                dedup.dedup();
                if dedup.len() != decided.len() {
                    return false;
                }
            }
            true
        });
        if ok {
            enumerate_edge_maps(g, h, pos + 1, edge_map, out)?;
        }
    }
    Ok(())
}

fn expand_vertex_choices(
    g: &Arc<SgBio>,
    h: &Arc<SgBio>,
    edge_map: &[EdgeId],
    out: &mut Vec<BitMap>,
) -> Result<()> {
    use crate::bio::elem::Elem;
    let graph = g.host.graph();
    let verts = g.host.internal_vertices();
    // candidate images per vertex
    let mut candidates: Vec<(VertexId, Vec<SgElem>)> = Vec::new();
    for &v in &verts {
        let mut left = graph.left_edges(v);
        let mut right = graph.right_edges(v);
        left.sort_unstable();
        right.sort_unstable();
        let want_left: Vec<EdgeId> = left.iter().map(|&e| edge_map[e]).collect();
        let want_right: Vec<EdgeId> = right.iter().map(|&e| edge_map[e]).collect();
        let ty = if g.host.is_minus_like(v) {
            HomType::minus(
                super::sg::edge_obj(want_left[0]),
                want_right.iter().map(|&e| super::sg::edge_obj(e)).collect(),
            )
        } else {
            HomType::plus(
                want_left.iter().map(|&e| super::sg::edge_obj(e)).collect(),
                super::sg::edge_obj(want_right[0]),
            )
        };
        let subs: Vec<SgElem> = h
            .site_candidates(&ty)
            .into_iter()
            .map(|val| {
                let elem = Elem::new(ty.clone(), val);
                let mut s = h.sg_elem_of(&elem);
                // orders are read from the normalized type; restore the
                // wanted ones explicitly
                s.left_order = want_left.clone();
                s.right_order = want_right.clone();
                s
            })
            .collect();
        if subs.is_empty() {
            return Ok(());
        }
        candidates.push((v, subs));
    }
    // product of the choices
    let mut idx = vec![0usize; candidates.len()];
    loop {
        let vm: BTreeMap<VertexId, SgElem> = candidates
            .iter()
            .zip(&idx)
            .map(|((v, subs), &i)| (*v, subs[i].clone()))
            .collect();
        if let Ok(map) = BitMap::new(g.clone(), h.clone(), edge_map.to_vec(), vm) {
            if map.check_flat() == Flatness::Flat {
                out.push(map);
            }
        }
        let mut k = candidates.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].1.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::{corolla_bit, Bit, Graph, Sign};

    fn sg_of(b: Bit) -> Arc<SgBio> {
        SgBio::handle(b)
    }

    fn chain(n: usize) -> Bit {
        let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
        Bit::validate(Graph::new(n + 1, &pairs)).unwrap()
    }

    #[test]
    fn unit_to_unit_has_one_map() {
        let i = sg_of(Bit::unit());
        assert_eq!(bit_hom(&i, &i).unwrap().len(), 1);
    }

    #[test]
    fn unit_into_a_corolla_picks_an_edge() {
        let i = sg_of(Bit::unit());
        for n in 1..=3 {
            let c = sg_of(corolla_bit(Sign::Minus, n).bit().clone());
            assert_eq!(bit_hom(&i, &c).unwrap().len(), n + 1);
        }
    }

    #[test]
    fn chain_homs_count_like_simplicial_operators() {
        // an n-edge chain plays the (n-1)-simplex: maps from the 2-chain
        // count the monotone maps of a 1-simplex
        let two = sg_of(chain(2));
        assert_eq!(bit_hom(&two, &two).unwrap().len(), 3);
        let three = sg_of(chain(3));
        // |Delta([1],[2])| = 6
        assert_eq!(bit_hom(&two, &three).unwrap().len(), 6);
        // degeneracies collapse: |Delta([2],[1])| = 4
        assert_eq!(bit_hom(&three, &two).unwrap().len(), 4);
    }

    #[test]
    fn composition_of_flat_maps_stays_flat() {
        let two = sg_of(chain(2));
        let three = sg_of(chain(3));
        let fs = bit_hom(&three, &two).unwrap();
        let gs = bit_hom(&two, &three).unwrap();
        for f in &fs {
            for g in &gs {
                let c = super::super::map::compose_bit_maps(f, g).unwrap();
                assert!(c.is_flat());
            }
        }
    }
}

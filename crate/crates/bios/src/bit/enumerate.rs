//! Exhaustive enumeration of bits up to isomorphism.
//!
//! Bits with E edges are generated as multisets of edge types: each edge
//! end is either a fresh stump or one of k interchangeable internal
//! vertices. Degree constraints prune early; canonical forms remove
//! duplicates. The skeleton bound keeps everything tiny.

use super::bit::Bit;
use super::canon::{canonical_form, CanonForm};
use super::graph::Graph;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub const DEFAULT_SKELETON_BOUND: usize = 6;
pub const MAX_SKELETON_BOUND: usize = 7;

/// One representative per isomorphism class of bits with at most
/// `max_edges` edges (at least one edge). With `connected_only`, restrict
/// to connected bits, the objects of the site.
pub fn enumerate_bits(max_edges: usize, connected_only: bool) -> Result<Vec<Bit>> {
    if max_edges > MAX_SKELETON_BOUND {
        return Err(Error::BoundExceeded {
            requested: max_edges,
            limit: MAX_SKELETON_BOUND,
        });
    }
    let mut seen: BTreeMap<CanonForm, Bit> = BTreeMap::new();
    for e in 1..=max_edges {
        for bit in bits_with_edges(e, connected_only) {
            seen.entry(canonical_form(&bit)).or_insert(bit);
        }
    }
    Ok(seen.into_values().collect())
}

/// End of an edge: a fresh stump or internal vertex `i`.
#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    Stump,
    Internal(usize),
}

fn bits_with_edges(n_edges: usize, connected_only: bool) -> Vec<Bit> {
    let mut out = Vec::new();
    // each internal vertex uses at least two edge ends
    for k in 0..=n_edges {
        let mut left_deg = vec![0usize; k];
        let mut right_deg = vec![0usize; k];
        let mut chosen: Vec<(End, End)> = Vec::with_capacity(n_edges);
        extend(
            n_edges,
            k,
            0,
            &mut chosen,
            &mut left_deg,
            &mut right_deg,
            connected_only,
            &mut out,
        );
    }
    out
}

/// Edge types in a fixed order so multisets are enumerated once: generate
/// non-decreasing type sequences.
fn type_index(k: usize, l: End, r: End) -> usize {
    let enc = |x: End| match x {
        End::Stump => 0,
        End::Internal(i) => i + 1,
    };
    enc(l) * (k + 1) + enc(r)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    n_edges: usize,
    k: usize,
    min_type: usize,
    chosen: &mut Vec<(End, End)>,
    left_deg: &mut Vec<usize>,
    right_deg: &mut Vec<usize>,
    connected_only: bool,
    out: &mut Vec<Bit>,
) {
    if chosen.len() == n_edges {
        if left_deg.iter().zip(right_deg.iter()).any(|(&l, &r)| l == 0 || r == 0) {
            // internal vertices need at least one edge on each side
            return;
        }
        if let Some(bit) = realize(chosen, k, connected_only) {
            out.push(bit);
        }
        return;
    }
    let remaining = n_edges - chosen.len();
    for t in min_type..(k + 1) * (k + 1) {
        let l = match t / (k + 1) {
            0 => End::Stump,
            i => End::Internal(i - 1),
        };
        let r = match t % (k + 1) {
            0 => End::Stump,
            i => End::Internal(i - 1),
        };
        if let (End::Internal(a), End::Internal(b)) = (l, r) {
            if a == b {
                continue; // a self-loop is a closed path
            }
        }
        // degree bookkeeping: the left end of an edge sees it on its right
        // side, and vice versa
        if let End::Internal(a) = l {
            right_deg[a] += 1;
        }
        if let End::Internal(b) = r {
            left_deg[b] += 1;
        }
        let feasible = (0..k).all(|v| {
            let (ld, rd) = (left_deg[v], right_deg[v]);
            if ld > 1 && rd > 1 {
                return false;
            }
            // remaining edges must be able to give every untouched side a hit
            let missing: usize = (0..k)
                .map(|w| (left_deg[w] == 0) as usize + (right_deg[w] == 0) as usize)
                .sum();
            missing <= 2 * (remaining - 1)
        });
        if feasible {
            chosen.push((l, r));
            extend(n_edges, k, t, chosen, left_deg, right_deg, connected_only, out);
            chosen.pop();
        }
        if let End::Internal(a) = l {
            right_deg[a] -= 1;
        }
        if let End::Internal(b) = r {
            left_deg[b] -= 1;
        }
    }
}

fn realize(chosen: &[(End, End)], k: usize, connected_only: bool) -> Option<Bit> {
    let mut n_vertices = k;
    let mut pairs = Vec::with_capacity(chosen.len());
    for &(l, r) in chosen {
        let lv = match l {
            End::Internal(i) => i,
            End::Stump => {
                n_vertices += 1;
                n_vertices - 1
            }
        };
        let rv = match r {
            End::Internal(i) => i,
            End::Stump => {
                n_vertices += 1;
                n_vertices - 1
            }
        };
        pairs.push((lv, rv));
    }
    let bit = Bit::validate(Graph::new(n_vertices, &pairs)).ok()?;
    if connected_only && !bit.is_connected() {
        return None;
    }
    Some(bit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::canon::iso_bits;
    use crate::bit::planar::{corolla_bit, Sign};

    #[test]
    fn one_edge_gives_exactly_the_unit_bit() {
        let bits = enumerate_bits(1, true).unwrap();
        assert_eq!(bits.len(), 1);
        assert!(iso_bits(&bits[0], &Bit::unit()).is_some());
    }

    #[test]
    fn three_edges_contain_both_two_corollas() {
        let bits = enumerate_bits(3, true).unwrap();
        let cm = corolla_bit(Sign::Minus, 2);
        let cp = corolla_bit(Sign::Plus, 2);
        assert!(bits.iter().any(|b| iso_bits(b, cm.bit()).is_some()));
        assert!(bits.iter().any(|b| iso_bits(b, cp.bit()).is_some()));
    }

    #[test]
    fn no_pair_of_representatives_is_isomorphic() {
        let bits = enumerate_bits(4, true).unwrap();
        for i in 0..bits.len() {
            for j in i + 1..bits.len() {
                assert!(iso_bits(&bits[i], &bits[j]).is_none());
            }
        }
    }
}

//! Canonical forms, isomorphisms and automorphisms of bits.
//!
//! Equality of bits is always up to isomorphism, never by identifier, so
//! every bit gets a canonical relabeling computed by color refinement
//! followed by exhaustive search within refinement cells. Bits at desk
//! scale have at most a handful of edges, so correctness wins over speed.

use super::bit::Bit;
use super::graph::{EdgeId, Graph, VertexId};
use std::collections::HashMap;

/// Canonically relabeled endpoint pairs; two bits are isomorphic iff their
/// canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonForm {
    pub n_vertices: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// A structure-preserving bijection pair commuting with both endpoint maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iso {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

impl Iso {
    pub fn identity(b: &Bit) -> Iso {
        Iso {
            vertex_map: (0..b.n_vertices()).collect(),
            edge_map: (0..b.n_edges()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.edge_map.iter().enumerate().all(|(i, &e)| i == e)
    }

    pub fn inverse(&self) -> Iso {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        let mut edge_map = vec![0; self.edge_map.len()];
        for (i, &v) in self.vertex_map.iter().enumerate() {
            vertex_map[v] = i;
        }
        for (i, &e) in self.edge_map.iter().enumerate() {
            edge_map[e] = i;
        }
        Iso { vertex_map, edge_map }
    }
}

/// Stable vertex colors: iterated refinement of (left degree, right degree)
/// by the multiset of neighbor colors on each side.
fn refine_colors(g: &Graph) -> Vec<u64> {
    let mut colors: Vec<u64> = (0..g.n_vertices())
        .map(|v| ((g.left_degree(v) as u64) << 32) | g.right_degree(v) as u64)
        .collect();
    for _ in 0..=g.n_vertices() {
        let sigs: Vec<(u64, Vec<u64>, Vec<u64>)> = (0..g.n_vertices())
            .map(|v| {
                let mut ln: Vec<u64> =
                    g.left_edges(v).iter().map(|&e| colors[g.dminus(e)]).collect();
                let mut rn: Vec<u64> =
                    g.right_edges(v).iter().map(|&e| colors[g.dplus(e)]).collect();
                ln.sort_unstable();
                rn.sort_unstable();
                (colors[v], ln, rn)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        let index: HashMap<_, u64> = uniq.into_iter().zip(0u64..).collect();
        let next: Vec<u64> = sigs.iter().map(|s| index[s]).collect();
        if next == colors {
            break;
        }
        colors = next;
    }
    colors
}

fn encode(g: &Graph, numbering: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut pairs: Vec<(VertexId, VertexId)> = g
        .edge_pairs()
        .iter()
        .map(|&(l, r)| (numbering[l], numbering[r]))
        .collect();
    pairs.sort_unstable();
    pairs
}

/// The canonical form: lexicographically minimal sorted edge list over all
/// color-respecting vertex relabelings.
pub fn canonical_form(b: &Bit) -> CanonForm {
    let g = b.graph();
    let colors = refine_colors(g);
    let mut by_color: HashMap<u64, Vec<VertexId>> = HashMap::new();
    for v in g.vertices() {
        by_color.entry(colors[v]).or_default().push(v);
    }
    let mut classes: Vec<(u64, Vec<VertexId>)> = by_color.into_iter().collect();
    classes.sort();

    let mut best: Option<Vec<(VertexId, VertexId)>> = None;
    let mut numbering = vec![usize::MAX; g.n_vertices()];
    search_numberings(g, &classes, 0, 0, &mut numbering, &mut best);
    CanonForm {
        n_vertices: g.n_vertices(),
        edges: best.unwrap_or_default(),
    }
}

fn search_numberings(
    g: &Graph,
    classes: &[(u64, Vec<VertexId>)],
    class_idx: usize,
    next_number: usize,
    numbering: &mut Vec<VertexId>,
    best: &mut Option<Vec<(VertexId, VertexId)>>,
) {
    if class_idx == classes.len() {
        let enc = encode(g, numbering);
        if best.is_none() || enc < *best.as_ref().unwrap() {
            *best = Some(enc);
        }
        return;
    }
    let members = classes[class_idx].1.clone();
    let k = members.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        for (pos, &i) in idx.iter().enumerate() {
            numbering[members[i]] = next_number + pos;
        }
        search_numberings(g, classes, class_idx + 1, next_number + k, numbering, best);
        for &v in &members {
            numbering[v] = usize::MAX;
        }
        if !next_permutation(&mut idx) {
            break;
        }
    }
}

fn next_permutation(idx: &mut [usize]) -> bool {
    let n = idx.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && idx[i - 1] >= idx[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while idx[j] <= idx[i - 1] {
        j -= 1;
    }
    idx.swap(i - 1, j);
    idx[i..].reverse();
    true
}

/// Refine the disjoint union so colors are comparable across the two graphs.
fn joint_colors(ga: &Graph, gb: &Graph) -> (Vec<u64>, Vec<u64>) {
    let na = ga.n_vertices();
    let mut pairs: Vec<(VertexId, VertexId)> = ga.edge_pairs();
    pairs.extend(gb.edge_pairs().iter().map(|&(l, r)| (l + na, r + na)));
    let joint = Graph::new(na + gb.n_vertices(), &pairs);
    let colors = refine_colors(&joint);
    (colors[..na].to_vec(), colors[na..].to_vec())
}

/// All isomorphisms from `a` to `b`, as vertex and edge bijections.
pub fn all_isomorphisms(a: &Bit, b: &Bit) -> Vec<Iso> {
    let (ga, gb) = (a.graph(), b.graph());
    if ga.n_vertices() != gb.n_vertices() || ga.n_edges() != gb.n_edges() {
        return vec![];
    }
    let (ca, cb) = joint_colors(ga, gb);
    {
        let mut sa = ca.clone();
        let mut sb = cb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return vec![];
        }
    }
    let mut isos = Vec::new();
    let mut vmap = vec![usize::MAX; ga.n_vertices()];
    let mut used = vec![false; gb.n_vertices()];
    backtrack_vertex(ga, gb, &ca, &cb, 0, &mut vmap, &mut used, &mut isos);
    isos
}

fn multiplicity(g: &Graph, l: VertexId, r: VertexId) -> usize {
    g.edges()
        .filter(|&e| g.dminus(e) == l && g.dplus(e) == r)
        .count()
}

#[allow(clippy::too_many_arguments)]
fn backtrack_vertex(
    ga: &Graph,
    gb: &Graph,
    ca: &[u64],
    cb: &[u64],
    v: VertexId,
    vmap: &mut Vec<VertexId>,
    used: &mut Vec<bool>,
    isos: &mut Vec<Iso>,
) {
    if v == ga.n_vertices() {
        emit_edge_bijections(ga, gb, vmap, isos);
        return;
    }
    for w in 0..gb.n_vertices() {
        if used[w] || ca[v] != cb[w] {
            continue;
        }
        vmap[v] = w;
        used[w] = true;
        let consistent = ga.edges().all(|e| {
            let (l, r) = (ga.dminus(e), ga.dplus(e));
            if vmap[l] != usize::MAX && vmap[r] != usize::MAX {
                multiplicity(ga, l, r) == multiplicity(gb, vmap[l], vmap[r])
            } else {
                true
            }
        });
        if consistent {
            backtrack_vertex(ga, gb, ca, cb, v + 1, vmap, used, isos);
        }
        vmap[v] = usize::MAX;
        used[w] = false;
    }
}

/// With the vertex map fixed, parallel edges between a matched endpoint pair
/// may map to each other in any order.
fn emit_edge_bijections(ga: &Graph, gb: &Graph, vmap: &[VertexId], isos: &mut Vec<Iso>) {
    let mut buckets: HashMap<(VertexId, VertexId), (Vec<EdgeId>, Vec<EdgeId>)> = HashMap::new();
    for e in ga.edges() {
        buckets
            .entry((vmap[ga.dminus(e)], vmap[ga.dplus(e)]))
            .or_default()
            .0
            .push(e);
    }
    for e in gb.edges() {
        buckets.entry((gb.dminus(e), gb.dplus(e))).or_default().1.push(e);
    }
    if buckets.values().any(|(x, y)| x.len() != y.len()) {
        return;
    }
    let groups: Vec<(Vec<EdgeId>, Vec<EdgeId>)> = buckets.into_values().collect();
    let mut emap = vec![usize::MAX; ga.n_edges()];
    fill_edge_groups(&groups, 0, &mut emap, vmap, isos);
}

fn fill_edge_groups(
    groups: &[(Vec<EdgeId>, Vec<EdgeId>)],
    idx: usize,
    emap: &mut Vec<EdgeId>,
    vmap: &[VertexId],
    isos: &mut Vec<Iso>,
) {
    if idx == groups.len() {
        isos.push(Iso {
            vertex_map: vmap.to_vec(),
            edge_map: emap.clone(),
        });
        return;
    }
    let (src, dst) = &groups[idx];
    let k = src.len();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        for (i, &e) in src.iter().enumerate() {
            emap[e] = dst[perm[i]];
        }
        fill_edge_groups(groups, idx + 1, emap, vmap, isos);
        if !next_permutation(&mut perm) {
            break;
        }
    }
}

/// First isomorphism between two bits, if one exists.
pub fn iso_bits(a: &Bit, b: &Bit) -> Option<Iso> {
    all_isomorphisms(a, b).into_iter().next()
}

pub fn automorphisms(b: &Bit) -> Vec<Iso> {
    all_isomorphisms(b, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::planar::{corolla_bit, Sign};

    #[test]
    fn unit_bit_identity_iso() {
        let i = Bit::unit();
        let isos = all_isomorphisms(&i, &i);
        assert_eq!(isos.len(), 1);
        assert!(isos[0].is_identity());
    }

    #[test]
    fn corolla_orientation_is_not_isomorphic() {
        let minus = corolla_bit(Sign::Minus, 2).bit().clone();
        let plus = corolla_bit(Sign::Plus, 2).bit().clone();
        assert!(iso_bits(&minus, &plus).is_none());
        assert_ne!(canonical_form(&minus), canonical_form(&plus));
    }

    #[test]
    fn corolla_leaf_swap_is_an_automorphism() {
        let minus = corolla_bit(Sign::Minus, 2).bit().clone();
        let auts = automorphisms(&minus);
        assert_eq!(auts.len(), 2);
        assert!(auts.iter().any(|i| !i.is_identity()));
    }

    #[test]
    fn parallel_edges_swap() {
        use crate::bit::graph::Graph;
        // v in C_{1,2} feeding w in C_{2,1} through two parallel edges
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 2), (2, 3)]);
        let b = Bit::validate(g).unwrap();
        let auts = automorphisms(&b);
        assert_eq!(auts.len(), 2);
    }
}

//! 1-sub-bits: the inductive closure giving the hom-sets of the bio
//! attached to a bit.
//!
//! The closure works on grafting stages: abstract bits whose edges carry
//! distinct host-edge labels. Intermediate stages need not be induced
//! subgraphs (grafting a corolla through parallel host edges passes
//! through shapes that are not), but every emitted sub-bit is, and each
//! comes with the grafting derivation used to push it through bio maps.

use super::bit::Bit;
use super::graph::EdgeId;
use super::planar::Sign;
use std::collections::{BTreeMap, BTreeSet};

/// A sub-bit of a host bit: an edge subset that is a bit by itself,
/// together with linear orders on both of its boundaries. The vertex set is
/// implied (all endpoints of the chosen edges).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubBit {
    pub edges: BTreeSet<EdgeId>,
    pub left_order: Vec<EdgeId>,
    pub right_order: Vec<EdgeId>,
}

/// The grafting tree of a sub-bit, in host-edge labels. `Compose` grafts a
/// corolla selection of an operation vertex onto one boundary edge; `Act`
/// grafts a co-operation vertex consuming a set of boundary edges. For
/// plus-side sub-bits the growth boundary is the left one, mirrored.
#[derive(Clone, Debug)]
pub enum Derivation {
    Edge(EdgeId),
    Compose {
        base: Box<Derivation>,
        at: EdgeId,
        vertex: usize,
        selected: Vec<EdgeId>,
    },
    Act {
        base: Box<Derivation>,
        vertex: usize,
        consumed: Vec<EdgeId>,
        added: EdgeId,
    },
}

/// The 1-sub-bits of a host, one entry per admissible boundary order,
/// with one derivation per edge set, plus the full stage closure behind
/// them keyed by stage.
#[derive(Clone, Debug, Default)]
pub struct SubBits {
    pub minus: Vec<SubBit>,
    pub plus: Vec<SubBit>,
    pub minus_derivations: BTreeMap<BTreeSet<EdgeId>, Derivation>,
    pub plus_derivations: BTreeMap<BTreeSet<EdgeId>, Derivation>,
    pub minus_stages: BTreeMap<Stage, Derivation>,
    pub plus_stages: BTreeMap<Stage, Derivation>,
}

/// Boundaries of an edge subset viewed as an induced bit: an edge is on a
/// boundary when its end there is a stump within the subset.
pub fn subset_boundaries(host: &Bit, edges: &BTreeSet<EdgeId>) -> (Vec<EdgeId>, Vec<EdgeId>) {
    let g = host.graph();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for &e in edges {
        let lv = g.dminus(e);
        let l_in = edges.iter().filter(|&&f| g.dplus(f) == lv).count();
        let l_out = edges.iter().filter(|&&f| g.dminus(f) == lv).count();
        if l_in == 0 && l_out == 1 {
            left.push(e);
        }
        let rv = g.dplus(e);
        let r_in = edges.iter().filter(|&&f| g.dplus(f) == rv).count();
        let r_out = edges.iter().filter(|&&f| g.dminus(f) == rv).count();
        if r_in == 1 && r_out == 0 {
            right.push(e);
        }
    }
    (left, right)
}

/// Is the edge subset a valid bit on its own?
pub fn subset_is_bit(host: &Bit, edges: &BTreeSet<EdgeId>) -> bool {
    if edges.is_empty() {
        return false;
    }
    let g = host.graph();
    let mut verts: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for &e in edges {
        verts.entry(g.dminus(e)).or_insert((0, 0)).1 += 1;
        verts.entry(g.dplus(e)).or_insert((0, 0)).0 += 1;
    }
    // acyclicity is inherited from the host; only the 1-graph condition can fail
    verts.values().all(|&(l, r)| l == 1 || r == 1)
}

fn permutations(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All sub-bits with the given boundary shape, by brute force over edge
/// subsets: the independent oracle for the inductive construction.
pub fn sub_bits_oracle(host: &Bit, side: Sign) -> Vec<SubBit> {
    let n = host.n_edges();
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let edges: BTreeSet<EdgeId> = (0..n).filter(|&e| mask & (1 << e) != 0).collect();
        if !subset_is_bit(host, &edges) {
            continue;
        }
        out.extend(expand_orders(host, &edges, side));
    }
    out.sort();
    out
}

fn expand_orders(host: &Bit, edges: &BTreeSet<EdgeId>, side: Sign) -> Vec<SubBit> {
    let (left, right) = subset_boundaries(host, edges);
    let (single, word) = match side {
        Sign::Minus => (&left, &right),
        Sign::Plus => (&right, &left),
    };
    if single.len() != 1 {
        return vec![];
    }
    permutations(word)
        .into_iter()
        .map(|perm| {
            let (lo, ro) = match side {
                Sign::Minus => (left.clone(), perm),
                Sign::Plus => (perm, right.clone()),
            };
            SubBit { edges: edges.clone(), left_order: lo, right_order: ro }
        })
        .collect()
}

/// A grafting stage: an abstract 1-bit with distinct host-edge labels,
/// described by its abstract vertices (host vertex, left labels, right
/// labels). Stumps are implicit. Stages over hosts without parallel
/// interfaces are exactly the induced sub-bits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stage {
    /// (host vertex, left labels, right labels), sorted for dedup
    pub vertices: Vec<(usize, BTreeSet<EdgeId>, BTreeSet<EdgeId>)>,
    pub labels: BTreeSet<EdgeId>,
}

impl Stage {
    pub fn single(e: EdgeId) -> Stage {
        Stage { vertices: vec![], labels: BTreeSet::from([e]) }
    }

    pub fn normalized(mut self) -> Stage {
        self.vertices.sort();
        self
    }

    /// The induced stage on an edge subset, when the subset is a bit.
    pub fn induced(host: &Bit, edges: &BTreeSet<EdgeId>) -> Option<Stage> {
        if !subset_is_bit(host, edges) {
            return None;
        }
        let g = host.graph();
        let mut vertices = Vec::new();
        for hv in g.vertices() {
            let l: BTreeSet<EdgeId> =
                g.left_edges(hv).into_iter().filter(|e| edges.contains(e)).collect();
            let r: BTreeSet<EdgeId> =
                g.right_edges(hv).into_iter().filter(|e| edges.contains(e)).collect();
            if !l.is_empty() && !r.is_empty() {
                vertices.push((hv, l, r));
            }
        }
        Some(Stage { vertices, labels: edges.clone() }.normalized())
    }

    /// Boundary labels of the abstract bit. An edge sits on the right
    /// boundary iff no abstract vertex carries it among its left labels
    /// (the vertex at an edge's right end lists it there), and mirrored
    /// for the left boundary.
    pub fn boundary(&self, side: Sign) -> BTreeSet<EdgeId> {
        let covering: BTreeSet<EdgeId> = self
            .vertices
            .iter()
            .flat_map(|(_, l, r)| match side {
                Sign::Minus => l.iter().copied().collect::<Vec<_>>(),
                Sign::Plus => r.iter().copied().collect(),
            })
            .collect();
        self.labels.iter().copied().filter(|e| !covering.contains(e)).collect()
    }

    /// The stage is an induced sub-bit iff distinct abstract vertices sit
    /// over distinct host vertices and every host vertex meeting the label
    /// set is either fully realized by an abstract vertex or an implicit
    /// stump with a single incident label.
    pub fn is_induced(&self, host: &Bit) -> bool {
        let g = host.graph();
        let mut over: BTreeMap<usize, (&BTreeSet<EdgeId>, &BTreeSet<EdgeId>)> = BTreeMap::new();
        for (hv, l, r) in &self.vertices {
            if over.insert(*hv, (l, r)).is_some() {
                return false;
            }
        }
        for hv in g.vertices() {
            let hl: BTreeSet<EdgeId> = g
                .left_edges(hv)
                .into_iter()
                .filter(|e| self.labels.contains(e))
                .collect();
            let hr: BTreeSet<EdgeId> = g
                .right_edges(hv)
                .into_iter()
                .filter(|e| self.labels.contains(e))
                .collect();
            match over.get(&hv) {
                Some((l, r)) => {
                    if **l != hl || **r != hr {
                        return false;
                    }
                }
                None => {
                    if hl.len() + hr.len() > 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The inductive construction of the 1-sub-bits: single edges, then
/// closure under composition and action grafting over abstract stages,
/// with every boundary order of each emitted sub-bit.
pub fn one_sub_bits(host: &Bit) -> SubBits {
    let (minus_sets, minus_derivations, minus_stages) = close_side(host, Sign::Minus);
    let (plus_sets, plus_derivations, plus_stages) = close_side(host, Sign::Plus);
    let expand = |sets: &BTreeSet<BTreeSet<EdgeId>>, side: Sign| {
        let mut elems: Vec<SubBit> = sets
            .iter()
            .flat_map(|edges| expand_orders(host, edges, side))
            .collect();
        elems.sort();
        elems
    };
    SubBits {
        minus: expand(&minus_sets, Sign::Minus),
        plus: expand(&plus_sets, Sign::Plus),
        minus_derivations,
        plus_derivations,
        minus_stages,
        plus_stages,
    }
}

type SideClosure = (
    BTreeSet<BTreeSet<EdgeId>>,
    BTreeMap<BTreeSet<EdgeId>, Derivation>,
    BTreeMap<Stage, Derivation>,
);

fn close_side(host: &Bit, side: Sign) -> SideClosure {
    let g = host.graph();
    let mut stages: BTreeMap<Stage, Derivation> = BTreeMap::new();
    let mut queue: Vec<Stage> = Vec::new();
    let mut emitted: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut derivations: BTreeMap<BTreeSet<EdgeId>, Derivation> = BTreeMap::new();

    let mut push = |stage: Stage,
                    deriv: Derivation,
                    stages: &mut BTreeMap<Stage, Derivation>,
                    queue: &mut Vec<Stage>,
                    emitted: &mut BTreeSet<BTreeSet<EdgeId>>,
                    derivations: &mut BTreeMap<BTreeSet<EdgeId>, Derivation>| {
        let stage = stage.normalized();
        // the fixed boundary must stay a single edge
        let fixed = stage.boundary(side.flip());
        if fixed.len() != 1 {
            return;
        }
        if stages.contains_key(&stage) {
            return;
        }
        if stage.is_induced(host) && emitted.insert(stage.labels.clone()) {
            derivations.insert(stage.labels.clone(), deriv.clone());
        }
        stages.insert(stage.clone(), deriv);
        queue.push(stage);
    };

    for e in g.edges() {
        push(
            Stage::single(e),
            Derivation::Edge(e),
            &mut stages,
            &mut queue,
            &mut emitted,
            &mut derivations,
        );
    }

    while let Some(stage) = queue.pop() {
        let deriv = stages[&stage].clone();
        let growth: Vec<EdgeId> = stage.boundary(side).into_iter().collect();
        // composition: a same-side vertex just beyond one growth edge
        for &b in &growth {
            let v = match side {
                Sign::Minus => g.dplus(b),
                Sign::Plus => g.dminus(b),
            };
            let ok = match side {
                Sign::Minus => host.is_minus_like(v),
                Sign::Plus => host.is_plus_like(v),
            };
            if !ok {
                continue;
            }
            let candidates: Vec<EdgeId> = match side {
                Sign::Minus => g.right_edges(v),
                Sign::Plus => g.left_edges(v),
            }
            .into_iter()
            .filter(|e| !stage.labels.contains(e))
            .collect();
            for mask in 1u64..(1 << candidates.len()) {
                let selected: Vec<EdgeId> = candidates
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &c)| c)
                    .collect();
                let mut next = stage.clone();
                let sel_set: BTreeSet<EdgeId> = selected.iter().copied().collect();
                next.labels.extend(sel_set.iter().copied());
                let (l, r) = match side {
                    Sign::Minus => (BTreeSet::from([b]), sel_set),
                    Sign::Plus => (sel_set, BTreeSet::from([b])),
                };
                next.vertices.push((v, l, r));
                let d = Derivation::Compose {
                    base: Box::new(deriv.clone()),
                    at: b,
                    vertex: v,
                    selected,
                };
                push(next, d, &mut stages, &mut queue, &mut emitted, &mut derivations);
            }
        }
        // action: an opposite-side vertex consuming a subset of growth edges
        for v in 0..host.n_vertices() {
            let ok = match side {
                Sign::Minus => host.is_plus_like(v),
                Sign::Plus => host.is_minus_like(v),
            };
            if !ok {
                continue;
            }
            let near: Vec<EdgeId> = match side {
                Sign::Minus => g.left_edges(v),
                Sign::Plus => g.right_edges(v),
            };
            let far: Vec<EdgeId> = match side {
                Sign::Minus => g.right_edges(v),
                Sign::Plus => g.left_edges(v),
            };
            debug_assert_eq!(far.len(), 1);
            if stage.labels.contains(&far[0]) {
                continue;
            }
            let on_boundary: Vec<EdgeId> =
                near.iter().copied().filter(|e| growth.contains(e)).collect();
            // every nonempty subset of the matching boundary edges
            for mask in 1u64..(1 << on_boundary.len()) {
                let consumed: Vec<EdgeId> = on_boundary
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &c)| c)
                    .collect();
                let mut next = stage.clone();
                next.labels.insert(far[0]);
                let consumed_set: BTreeSet<EdgeId> = consumed.iter().copied().collect();
                let (l, r) = match side {
                    Sign::Minus => (consumed_set, BTreeSet::from([far[0]])),
                    Sign::Plus => (BTreeSet::from([far[0]]), consumed_set),
                };
                next.vertices.push((v, l, r));
                let d = Derivation::Act {
                    base: Box::new(deriv.clone()),
                    vertex: v,
                    consumed,
                    added: far[0],
                };
                push(next, d, &mut stages, &mut queue, &mut emitted, &mut derivations);
            }
        }
    }
    (emitted, derivations, stages)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::graph::Graph;
    use crate::bit::planar::{corolla_bit, Sign};

    fn edge_sets(subs: &[SubBit]) -> BTreeSet<BTreeSet<EdgeId>> {
        subs.iter().map(|s| s.edges.clone()).collect()
    }

    #[test]
    fn unit_bit_has_only_the_single_edge() {
        let i = Bit::unit();
        let subs = one_sub_bits(&i);
        assert_eq!(subs.minus.len(), 1);
        assert_eq!(subs.plus.len(), 1);
        assert_eq!(subs.minus[0].edges, BTreeSet::from([0]));
    }

    #[test]
    fn two_corolla_sub_bits_match_the_hand_count() {
        // C_2^-: singles {e0},{e1},{e2}; selections {e0,e1},{e0,e2};
        // full corolla with two boundary orders
        let c = corolla_bit(Sign::Minus, 2).bit().clone();
        let subs = one_sub_bits(&c);
        let sets = edge_sets(&subs.minus);
        assert_eq!(sets.len(), 6);
        assert_eq!(subs.minus.len(), 7);
        assert!(sets.contains(&BTreeSet::from([0, 1, 2])));
        assert!(sets.contains(&BTreeSet::from([0, 1])));
        // plus side: the unary sub-bits only (singles and the two paths)
        assert_eq!(subs.plus.len(), 5);
    }

    #[test]
    fn parallel_pair_diamond_is_reached() {
        // C_2^- grafted onto C_2^+ through two parallel edges; the full
        // four-edge sub-bit only arises by grafting the whole co-operation
        // corolla across both edges at once
        let g = Graph::new(4, &[(2, 0), (0, 1), (0, 1), (1, 3)]);
        let b = Bit::validate(g).unwrap();
        let subs = one_sub_bits(&b);
        assert!(edge_sets(&subs.minus).contains(&BTreeSet::from([0, 1, 2, 3])));
        // while the one-vertex corolla covering both parallel edges is not
        // an induced sub-bit
        assert!(!edge_sets(&subs.minus).contains(&BTreeSet::from([0, 1, 2])));
    }

    #[test]
    fn inductive_construction_agrees_with_subset_oracle() {
        let mut hosts = crate::bit::enumerate::enumerate_bits(4, true).unwrap();
        // the left bit of the 2,2 family: two stumps feeding an operation
        // vertex, a co-operation vertex, then two stumps
        let g = Graph::new(6, &[(2, 0), (2, 1), (3, 2), (4, 3), (5, 3)]);
        hosts.push(Bit::validate(g).unwrap());
        for host in &hosts {
            let subs = one_sub_bits(host);
            assert_eq!(subs.minus, sub_bits_oracle(host, Sign::Minus), "{host:?}");
            assert_eq!(subs.plus, sub_bits_oracle(host, Sign::Plus), "{host:?}");
            // a derivation is recorded for every edge set
            assert_eq!(subs.minus_derivations.len(), edge_sets(&subs.minus).len());
            assert_eq!(subs.plus_derivations.len(), edge_sets(&subs.plus).len());
        }
    }
}

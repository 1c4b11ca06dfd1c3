//! Bits: simple 1-graphs, their validation and classification.

use super::graph::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// The class of a vertex in a bit, read off its degrees. A vertex with a
/// single edge on each side is reported as `CMinus(1)`; use
/// [`Bit::is_minus_like`] / [`Bit::is_plus_like`] for the two-sided view.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    /// Left end of the graph: no left edges, one right edge.
    Stump01,
    /// Right end: one left edge, no right edges.
    Stump10,
    /// Operation vertex C_{1,m}: one left edge (output), m right edges (inputs).
    CMinus(usize),
    /// Co-operation vertex C_{n,1}: n left edges, one right edge.
    CPlus(usize),
}

/// A validated bit: a finite oriented graph with no closed paths in which
/// every vertex has a single edge on at least one side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bit {
    graph: Graph,
}

impl Bit {
    /// Check the 1-graph condition and acyclicity, returning the bit.
    pub fn validate(graph: Graph) -> Result<Bit> {
        for v in graph.vertices() {
            let l = graph.left_degree(v);
            let r = graph.right_degree(v);
            if !(l == 1 || r == 1) {
                return Err(Error::NotOneGraph(v, l, r));
            }
        }
        if let Some(cycle) = find_cycle(&graph) {
            return Err(Error::CycleFound(cycle));
        }
        Ok(Bit { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The unit bit I: one edge between two stumps.
    pub fn unit() -> Bit {
        Bit::validate(Graph::new(2, &[(0, 1)])).unwrap()
    }

    pub fn n_edges(&self) -> usize {
        self.graph.n_edges()
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn class(&self, v: VertexId) -> VertexClass {
        let l = self.graph.left_degree(v);
        let r = self.graph.right_degree(v);
        match (l, r) {
            (0, 1) => VertexClass::Stump01,
            (1, 0) => VertexClass::Stump10,
            (1, m) => VertexClass::CMinus(m),
            (n, 1) => VertexClass::CPlus(n),
            _ => unreachable!("validated bit"),
        }
    }

    pub fn is_internal(&self, v: VertexId) -> bool {
        self.graph.left_degree(v) >= 1 && self.graph.right_degree(v) >= 1
    }

    /// One left edge and at least one right edge: an operation vertex,
    /// including the unary case.
    pub fn is_minus_like(&self, v: VertexId) -> bool {
        self.graph.left_degree(v) == 1 && self.graph.right_degree(v) >= 1
    }

    /// One right edge and at least one left edge: a co-operation vertex.
    pub fn is_plus_like(&self, v: VertexId) -> bool {
        self.graph.right_degree(v) == 1 && self.graph.left_degree(v) >= 1
    }

    pub fn internal_vertices(&self) -> Vec<VertexId> {
        self.graph.vertices().filter(|&v| self.is_internal(v)).collect()
    }

    /// d₋G: edges whose left end is a stump, in edge order.
    pub fn left_boundary(&self) -> Vec<EdgeId> {
        self.graph
            .edges()
            .filter(|&e| self.class(self.graph.dminus(e)) == VertexClass::Stump01)
            .collect()
    }

    /// d₊G: edges whose right end is a stump, in edge order.
    pub fn right_boundary(&self) -> Vec<EdgeId> {
        self.graph
            .edges()
            .filter(|&e| self.class(self.graph.dplus(e)) == VertexClass::Stump10)
            .collect()
    }

    /// (n, m, k) for membership in Bit_{n,m}^k.
    pub fn signature(&self) -> (usize, usize, usize) {
        (
            self.left_boundary().len(),
            self.right_boundary().len(),
            self.internal_vertices().len(),
        )
    }

    pub fn is_connected(&self) -> bool {
        let g = &self.graph;
        if g.n_vertices() == 0 {
            return true;
        }
        let mut seen = vec![false; g.n_vertices()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in g.edges() {
                for w in [g.dminus(e), g.dplus(e)] {
                    if (g.dminus(e) == v || g.dplus(e) == v) && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Maximal directed path through `e`, extended on both sides. Paths are
    /// listed left to right, so the leftmost edge comes first.
    pub fn maximal_path_through(&self, e: EdgeId) -> Vec<EdgeId> {
        let g = &self.graph;
        let mut path = vec![e];
        // extend left: the left end of the first edge continues through its
        // unique left edge, if any
        loop {
            let v = g.dminus(path[0]);
            let left = g.left_edges(v);
            if left.len() == 1 && !path.contains(&left[0]) {
                path.insert(0, left[0]);
            } else {
                break;
            }
        }
        // extend right
        loop {
            let v = g.dplus(*path.last().unwrap());
            let right = g.right_edges(v);
            if right.len() == 1 && !path.contains(&right[0]) {
                path.push(right[0]);
            } else {
                break;
            }
        }
        path
    }
}

/// Find a directed cycle (flow runs from dplus to dminus), if any.
fn find_cycle(g: &Graph) -> Option<Vec<EdgeId>> {
    // vertex states: 0 unvisited, 1 on stack, 2 done
    let mut state = vec![0u8; g.n_vertices()];
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; g.n_vertices()];

    fn dfs(
        g: &Graph,
        v: VertexId,
        state: &mut [u8],
        parent_edge: &mut [Option<EdgeId>],
    ) -> Option<Vec<EdgeId>> {
        state[v] = 1;
        for e in g.edges() {
            if g.dplus(e) != v {
                continue;
            }
            let w = g.dminus(e);
            if state[w] == 1 {
                // found a cycle: walk parents back from v to w
                let mut cycle = vec![e];
                let mut cur = v;
                while cur != w {
                    let pe = parent_edge[cur].unwrap();
                    cycle.push(pe);
                    cur = g.dplus(pe);
                }
                cycle.reverse();
                return Some(cycle);
            }
            if state[w] == 0 {
                parent_edge[w] = Some(e);
                if let Some(c) = dfs(g, w, state, parent_edge) {
                    return Some(c);
                }
            }
        }
        state[v] = 2;
        None
    }

    for v in g.vertices() {
        if state[v] == 0 {
            if let Some(c) = dfs(g, v, &mut state, &mut parent_edge) {
                return Some(c);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_bit_is_valid() {
        let i = Bit::unit();
        assert_eq!(i.n_edges(), 1);
        assert_eq!(i.class(0), VertexClass::Stump01);
        assert_eq!(i.class(1), VertexClass::Stump10);
        assert_eq!(i.signature(), (1, 1, 0));
    }

    #[test]
    fn two_in_two_out_is_rejected() {
        // a vertex with 2 left and 2 right edges
        let g = Graph::new(5, &[(1, 0), (2, 0), (0, 3), (0, 4)]);
        match Bit::validate(g) {
            Err(Error::NotOneGraph(0, 2, 2)) => {}
            other => panic!("expected NotOneGraph, got {:?}", other.err()),
        }
    }

    #[test]
    fn directed_triangle_is_rejected() {
        // closed path on three edges; give each vertex one edge per side
        let g = Graph::new(3, &[(0, 1), (1, 2), (2, 0)]);
        match Bit::validate(g) {
            Err(Error::CycleFound(c)) => assert_eq!(c.len(), 3),
            other => panic!("expected CycleFound, got {:?}", other.err()),
        }
    }

    #[test]
    fn maximal_paths_run_boundary_to_boundary() {
        // chain of three edges through two interior vertices
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]);
        let b = Bit::validate(g).unwrap();
        for e in 0..3 {
            let p = b.maximal_path_through(e);
            assert_eq!(p, vec![0, 1, 2]);
            assert!(b.left_boundary().contains(&p[0]));
            assert!(b.right_boundary().contains(p.last().unwrap()));
        }
    }
}

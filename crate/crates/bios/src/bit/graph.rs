//! Finite oriented graphs as two parallel maps from edges to vertices.

pub type EdgeId = usize;
pub type VertexId = usize;

/// A finite oriented graph. Following the drawing convention, edges run
/// from right to left: `dminus(e)` is the left end of `e` and `dplus(e)`
/// the right end.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    dminus: Vec<VertexId>,
    dplus: Vec<VertexId>,
    n_vertices: usize,
}

impl Graph {
    /// Build a graph from `(dminus, dplus)` endpoint pairs.
    pub fn new(n_vertices: usize, edges: &[(VertexId, VertexId)]) -> Self {
        for &(l, r) in edges {
            assert!(l < n_vertices && r < n_vertices, "edge endpoint out of range");
        }
        Graph {
            dminus: edges.iter().map(|&(l, _)| l).collect(),
            dplus: edges.iter().map(|&(_, r)| r).collect(),
            n_vertices,
        }
    }

    pub fn n_edges(&self) -> usize {
        self.dminus.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Left end of `e`.
    pub fn dminus(&self, e: EdgeId) -> VertexId {
        self.dminus[e]
    }

    /// Right end of `e`.
    pub fn dplus(&self, e: EdgeId) -> VertexId {
        self.dplus[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        0..self.n_edges()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n_vertices
    }

    /// Edges extending to the left of `v`, i.e. with `dplus(e) == v`.
    /// This is the set written d₋v: a single edge for an operation vertex
    /// (its output), the inputs of a co-operation vertex.
    pub fn left_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges().filter(|&e| self.dplus[e] == v).collect()
    }

    /// Edges extending to the right of `v`, i.e. with `dminus(e) == v` (d₊v).
    pub fn right_edges(&self, v: VertexId) -> Vec<EdgeId> {
        self.edges().filter(|&e| self.dminus[e] == v).collect()
    }

    pub fn left_degree(&self, v: VertexId) -> usize {
        self.dplus.iter().filter(|&&x| x == v).count()
    }

    pub fn right_degree(&self, v: VertexId) -> usize {
        self.dminus.iter().filter(|&&x| x == v).count()
    }

    /// Endpoint pairs `(dminus, dplus)` in edge order.
    pub fn edge_pairs(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.n_edges()).map(|e| (self.dminus[e], self.dplus[e])).collect()
    }
}

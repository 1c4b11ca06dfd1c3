//! Planar structures on bits and the basic corollas.

use super::bit::Bit;
use super::graph::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// A corolla shape: sign and arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corolla {
    pub sign: Sign,
    pub arity: usize,
}

/// A bit with linear orders on each vertex's edge sets and on both
/// boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanarBit {
    bit: Bit,
    /// order on left_edges(v), one entry per vertex
    left_order: Vec<Vec<EdgeId>>,
    /// order on right_edges(v)
    right_order: Vec<Vec<EdgeId>>,
    /// order on the left boundary d₋G
    boundary_left: Vec<EdgeId>,
    /// order on the right boundary d₊G
    boundary_right: Vec<EdgeId>,
}

impl PlanarBit {
    pub fn new(
        bit: Bit,
        left_order: Vec<Vec<EdgeId>>,
        right_order: Vec<Vec<EdgeId>>,
        boundary_left: Vec<EdgeId>,
        boundary_right: Vec<EdgeId>,
    ) -> Result<PlanarBit> {
        let check = |order: &[EdgeId], mut actual: Vec<EdgeId>, what: &str| -> Result<()> {
            let mut sorted = order.to_vec();
            sorted.sort_unstable();
            actual.sort_unstable();
            if sorted != actual {
                return Err(Error::TypeMismatch(format!(
                    "order on {what} is not a permutation of its edge set"
                )));
            }
            Ok(())
        };
        for v in 0..bit.n_vertices() {
            check(&left_order[v], bit.graph().left_edges(v), "vertex left side")?;
            check(&right_order[v], bit.graph().right_edges(v), "vertex right side")?;
        }
        check(&boundary_left, bit.left_boundary(), "left boundary")?;
        check(&boundary_right, bit.right_boundary(), "right boundary")?;
        Ok(PlanarBit {
            bit,
            left_order,
            right_order,
            boundary_left,
            boundary_right,
        })
    }

    /// Planar structure with all orders taken in edge-id order.
    pub fn default_orders(bit: Bit) -> PlanarBit {
        let left_order = (0..bit.n_vertices()).map(|v| bit.graph().left_edges(v)).collect();
        let right_order = (0..bit.n_vertices()).map(|v| bit.graph().right_edges(v)).collect();
        let boundary_left = bit.left_boundary();
        let boundary_right = bit.right_boundary();
        PlanarBit {
            bit,
            left_order,
            right_order,
            boundary_left,
            boundary_right,
        }
    }

    pub fn bit(&self) -> &Bit {
        &self.bit
    }

    pub fn left_order(&self, v: VertexId) -> &[EdgeId] {
        &self.left_order[v]
    }

    pub fn right_order(&self, v: VertexId) -> &[EdgeId] {
        &self.right_order[v]
    }

    pub fn boundary_left(&self) -> &[EdgeId] {
        &self.boundary_left
    }

    pub fn boundary_right(&self) -> &[EdgeId] {
        &self.boundary_right
    }
}

/// The basic n-corolla as a planar bit with canonical edge order e_0..e_n.
///
/// For sign minus, edge 0 is the single left-boundary edge and edges 1..=n
/// are the inputs of the unique internal vertex; for sign plus the picture
/// is mirrored. Arity 0 yields the one-edge bit whose inner end is a stump,
/// covering the constants of closed bios.
pub fn corolla_bit(sign: Sign, arity: usize) -> PlanarBit {
    let n = arity;
    // vertex 0: outer left stump; vertex 1: center; vertices 2..: stumps
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(n + 1);
    match sign {
        Sign::Minus => {
            edges.push((0, 1));
            for i in 0..n {
                edges.push((1, 2 + i));
            }
        }
        Sign::Plus => {
            // mirrored: e_0 is the right-boundary edge of the center
            edges.push((1, 0));
            for i in 0..n {
                edges.push((2 + i, 1));
            }
        }
    }
    let bit = Bit::validate(Graph::new(n + 2, &edges)).expect("corolla is a valid bit");
    PlanarBit::default_orders(bit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bit::bit::VertexClass;

    #[test]
    fn minus_two_corolla_shape() {
        let c = corolla_bit(Sign::Minus, 2);
        assert_eq!(c.bit().n_edges(), 3);
        assert_eq!(c.bit().n_vertices(), 4);
        assert_eq!(c.bit().class(1), VertexClass::CMinus(2));
        assert_eq!(c.bit().signature(), (1, 2, 1));
    }

    #[test]
    fn unary_plus_corolla_is_a_chain() {
        let c = corolla_bit(Sign::Plus, 1);
        assert_eq!(c.bit().n_edges(), 2);
        // one internal C_{1,1} vertex, reported as CMinus(1)
        assert_eq!(c.bit().class(1), VertexClass::CMinus(1));
        assert!(c.bit().is_minus_like(1) && c.bit().is_plus_like(1));
        assert!(crate::bit::canon::iso_bits(c.bit(), corolla_bit(Sign::Minus, 1).bit()).is_some());
    }

    #[test]
    fn nullary_minus_corolla_is_a_closed_constant() {
        let c = corolla_bit(Sign::Minus, 0);
        assert_eq!(c.bit().n_edges(), 1);
        // the inner end has one left edge and nothing on the right; as a bit
        // this is the unit bit whose right stump plays the constant
        assert_eq!(c.bit().class(1), VertexClass::Stump10);
        assert!(crate::bit::canon::iso_bits(c.bit(), &Bit::unit()).is_some());
    }
}

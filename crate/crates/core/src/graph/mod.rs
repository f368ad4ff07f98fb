//! Immutable simple graphs on vertices `0..p` with bit-packed adjacency rows.

mod canon;
mod enumerate;
pub mod format;
mod generate;
mod set;

use std::fmt;

pub use canon::{canonical_form, is_isomorphic};
pub use enumerate::{enumerate_labeled, pair_count, LabeledGraphs, MAX_ENUMERATION_ORDER};
pub use generate::Family;
pub use set::{Iter as VertexIter, VertexSet};

pub(crate) use set::word_count;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderCap(order));
        }
        let stride = word_count(order);
        Ok(Graph {
            order,
            stride,
            rows: vec![0; stride * order],
        })
    }

    /// Builds a graph from unordered vertex pairs. Duplicates and reversed
    /// pairs collapse to a single edge.
    pub fn build<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order)?;
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::LoopEdge { v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        twice / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.order, self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .collect::<Vec<_>>()
                .into_iter()
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let mut out = self.clone();
        for v in 0..self.order {
            let mut row = VertexSet::from_words(self.order, self.row(v)).complement();
            row.remove(v);
            out.rows[v * self.stride..(v + 1) * self.stride].copy_from_slice(row.words());
        }
        out
    }

    /// Subgraph induced by `set`, relabeled by ascending original index.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph> {
        if set.universe() != self.order {
            if let Some(v) = set.iter().find(|&v| v >= self.order) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            return Err(Error::UniverseMismatch {
                expected: self.order,
                found: set.universe(),
            });
        }
        let members = set.to_vec();
        let mut out = Graph::empty(members.len())?;
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    out.set_edge(i, j);
                }
            }
        }
        Ok(out)
    }

    /// `self` on vertices `0..p1` and `other` shifted to `p1..p1+p2`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order;
        let mut out = Graph::empty(self.order + other.order)?;
        for (u, v) in self.edges() {
            out.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            out.set_edge(u + shift, v + shift);
        }
        Ok(out)
    }

    /// Adds vertex `p` adjacent to every existing vertex.
    pub fn add_universal_vertex(&self) -> Result<Graph> {
        let apex = self.order;
        let mut out = Graph::empty(self.order + 1)?;
        for (u, v) in self.edges() {
            out.set_edge(u, v);
        }
        for v in 0..apex {
            out.set_edge(v, apex);
        }
        Ok(out)
    }

    pub fn component_count(&self) -> usize {
        let mut unseen = self.vertices();
        let mut count = 0;
        while let Some(start) = unseen.first() {
            count += 1;
            let mut frontier = VertexSet::singleton(self.order, start);
            unseen.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.order);
                for v in &frontier {
                    next.zip_assign(self.row(v), |a, b| a | b);
                }
                frontier = next.intersection(&unseen);
                unseen = unseen.difference(&frontier);
            }
        }
        count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Family::Complete(n).generate().unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Family::Cycle(n).generate().unwrap()
    }

    #[test]
    fn build_triangle() {
        let g = Graph::build(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g, k(3));
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn build_edgeless_and_duplicates() {
        assert_eq!(Graph::build(4, []).unwrap().edge_count(), 0);
        let g = Graph::build(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g, k(2));
    }

    #[test]
    fn build_rejects_bad_pairs() {
        assert_eq!(
            Graph::build(3, [(0, 3)]),
            Err(Error::EndpointOutOfRange {
                u: 0,
                v: 3,
                order: 3
            })
        );
        assert_eq!(Graph::build(3, [(1, 1)]), Err(Error::LoopEdge { v: 1 }));
        assert_eq!(
            Graph::empty(MAX_ORDER + 1),
            Err(Error::OrderCap(MAX_ORDER + 1))
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(k(3).complement(), Graph::empty(3).unwrap());
        let p4 = Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_isomorphic(&p4.complement(), &p4));
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn complement_across_word_boundary() {
        let g = Graph::build(130, [(0, 129), (64, 65)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 130 * 129 / 2 - 2);
        assert!(!c.has_edge(0, 129));
        assert!(!c.has_edge(5, 5));
        assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_examples() {
        let c5 = cycle(5);
        let s = VertexSet::from_indices(5, [0, 1, 2]).unwrap();
        assert_eq!(c5.induced(&s).unwrap(), Family::Path(3).generate().unwrap());
        assert_eq!(c5.induced(&VertexSet::empty(5)).unwrap().order(), 0);
        let s = VertexSet::from_indices(5, [1, 3, 4]).unwrap();
        assert_eq!(k(5).induced(&s).unwrap(), k(3));
        assert_eq!(c5.induced(&c5.vertices()).unwrap(), c5);
    }

    #[test]
    fn induced_rejects_foreign_set() {
        let s = VertexSet::from_indices(6, [5]).unwrap();
        assert_eq!(
            cycle(5).induced(&s),
            Err(Error::VertexOutOfRange {
                vertex: 5,
                order: 5
            })
        );
    }

    #[test]
    fn disjoint_union_examples() {
        let two_k2 = k(2).disjoint_union(&k(2)).unwrap();
        assert_eq!(two_k2.order(), 4);
        assert_eq!(two_k2.edge_count(), 2);
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let c5 = cycle(5);
        assert_eq!(c5.disjoint_union(&Graph::empty(0).unwrap()).unwrap(), c5);

        let g = k(3).disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!((g.order(), g.edge_count(), g.component_count()), (5, 3, 3));

        let big = Graph::empty(4000).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(Error::OrderCap(8000)));
    }

    #[test]
    fn universal_vertex_examples() {
        assert_eq!(
            Graph::empty(1).unwrap().add_universal_vertex().unwrap(),
            k(2)
        );
        assert_eq!(k(3).add_universal_vertex().unwrap(), k(4));
        let c5 = cycle(5).add_universal_vertex().unwrap();
        assert_eq!(c5.degree(5), 5);
        assert_eq!(
            Graph::empty(MAX_ORDER).unwrap().add_universal_vertex(),
            Err(Error::OrderCap(MAX_ORDER + 1))
        );
    }

    #[test]
    fn order_zero_is_a_graph() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.complement(), g);
        assert_eq!(g.component_count(), 0);
        assert_eq!(g.add_universal_vertex().unwrap().order(), 1);
    }
}

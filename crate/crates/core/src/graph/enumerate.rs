use std::ops::Range;

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_labeled`] (2^28 graphs).
pub const MAX_ENUMERATION_ORDER: usize = 8;

pub fn pair_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

/// Every labeled graph on `order` vertices, once each, by ascending edge mask.
///
/// Bit `j(j-1)/2 + i` of the mask is the pair `(i, j)`, `i < j`: the same
/// column-wise upper-triangle order graph6 uses.
pub fn enumerate_labeled(order: usize) -> Result<LabeledGraphs> {
    LabeledGraphs::new(order)
}

#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    order: usize,
    masks: Range<u64>,
}

impl LabeledGraphs {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_ENUMERATION_ORDER {
            return Err(Error::SizeLimit {
                what: "labeled enumeration order",
                size: order,
                gate: MAX_ENUMERATION_ORDER,
            });
        }
        Ok(LabeledGraphs {
            order,
            masks: 0..1u64 << pair_count(order),
        })
    }

    /// Restricts the stream to a sub-range of edge masks, for splitting work
    /// between consumers.
    pub fn with_range(mut self, masks: Range<u64>) -> Self {
        let end = self.masks.end;
        self.masks = masks.start.min(end)..masks.end.min(end);
        self
    }

    pub fn mask_count(&self) -> u64 {
        self.masks.end - self.masks.start
    }

    /// The graph with the given edge mask.
    pub fn graph(order: usize, mask: u64) -> Graph {
        let mut g = Graph::empty(order).expect("enumeration order is capped");
        let mut bit = 0;
        for j in 1..order {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set_edge(i, j);
                }
                bit += 1;
            }
        }
        g
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.masks.next().map(|m| Self::graph(self.order, m))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn stream_sizes() {
        assert_eq!(enumerate_labeled(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(1).unwrap().count(), 1);
        assert_eq!(enumerate_labeled(2).unwrap().count(), 2);
        assert_eq!(enumerate_labeled(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(4).unwrap().count(), 64);
    }

    #[test]
    fn every_graph_is_distinct() {
        let all: HashSet<Graph> = enumerate_labeled(5).unwrap().collect();
        assert_eq!(all.len(), 1024);
    }

    #[test]
    fn isomorphism_classes_on_four_and_five_vertices() {
        // Known counts of unlabeled graphs: 11 on four vertices, 34 on five.
        for (p, classes) in [(4, 11), (5, 34)] {
            let canon: HashSet<Graph> = enumerate_labeled(p)
                .unwrap()
                .map(|g| canonical_form(&g))
                .collect();
            assert_eq!(canon.len(), classes, "p = {p}");
        }
    }

    #[test]
    fn order_above_cap_is_rejected() {
        assert!(matches!(
            enumerate_labeled(9),
            Err(Error::SizeLimit { size: 9, .. })
        ));
    }

    #[test]
    fn ranges_partition_the_stream() {
        let whole: Vec<Graph> = enumerate_labeled(4).unwrap().collect();
        let mut parts: Vec<Graph> = enumerate_labeled(4).unwrap().with_range(0..20).collect();
        parts.extend(enumerate_labeled(4).unwrap().with_range(20..100));
        assert_eq!(whole, parts);
    }
}

//! Membership tests evaluated on a vertex subset of a host graph, optionally
//! read through complementation, without materializing induced subgraphs.

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub g: &'a Graph,
    pub flipped: bool,
}

impl<'a> View<'a> {
    pub fn new(g: &'a Graph) -> Self {
        View { g, flipped: false }
    }

    pub fn flip(self) -> Self {
        View {
            g: self.g,
            flipped: !self.flipped,
        }
    }

    /// Neighbours of `v` inside `within`, as seen through this view.
    #[inline]
    pub fn nbrs(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut out = within.clone();
        if self.flipped {
            out.zip_assign(self.g.row(v), |a, b| a & !b);
            out.remove(v);
        } else {
            out.zip_assign(self.g.row(v), |a, b| a & b);
        }
        out
    }

    /// Vertices of `within` other than `v` that are not adjacent to it.
    #[inline]
    pub fn non_nbrs(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut out = within.clone();
        if self.flipped {
            out.zip_assign(self.g.row(v), |a, b| a & b);
        } else {
            out.zip_assign(self.g.row(v), |a, b| a & !b);
            out.remove(v);
        }
        out
    }

    pub fn edgeless(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.nbrs(v, s).is_empty())
    }

    pub fn complete(&self, s: &VertexSet) -> bool {
        let want = s.len().saturating_sub(1);
        s.iter().all(|v| self.nbrs(v, s).len() == want)
    }

    /// P3-free: every neighbourhood is a clique.
    pub fn cluster(&self, s: &VertexSet) -> bool {
        for v in s {
            let n = self.nbrs(v, s);
            for u in &n {
                let mut rest = n.difference(&self.nbrs(u, s));
                rest.remove(u);
                if !rest.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Splits `s` into connected components, in order of least member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = s.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(s.universe(), start);
            let mut frontier = comp.clone();
            unseen.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(s.universe());
                for v in &frontier {
                    next = next.union(&self.nbrs(v, &unseen));
                }
                unseen = unseen.difference(&next);
                comp = comp.union(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    /// Two-colouring by breadth-first layering; fails on an odd cycle.
    pub fn bipartite(&self, s: &VertexSet) -> bool {
        let mut unseen = s.clone();
        while let Some(start) = unseen.first() {
            let mut sides = [
                VertexSet::empty(s.universe()),
                VertexSet::empty(s.universe()),
            ];
            let mut frontier = VertexSet::singleton(s.universe(), start);
            unseen.remove(start);
            let mut layer = 0;
            while !frontier.is_empty() {
                let side = &mut sides[layer % 2];
                *side = side.union(&frontier);
                let mut next = VertexSet::empty(s.universe());
                for v in &frontier {
                    next = next.union(&self.nbrs(v, &unseen));
                }
                unseen = unseen.difference(&next);
                frontier = next;
                layer += 1;
            }
            for side in &sides {
                if !self.edgeless(side) {
                    return false;
                }
            }
        }
        true
    }

    /// Complete bipartite with sides allowed to be empty: the complement is a
    /// disjoint union of at most two cliques.
    pub fn complete_bipartite(&self, s: &VertexSet) -> bool {
        let co = self.flip();
        co.cluster(s) && co.components(s).len() <= 2
    }

    /// Whether `s` induces a subgraph isomorphic to `pattern`.
    ///
    /// Backtracking over injective maps from pattern vertices (in index order)
    /// to members of `s`; each level keeps only the candidates whose adjacency
    /// to every already-mapped vertex matches the pattern.
    pub fn contains_induced(&self, s: &VertexSet, pattern: &Graph) -> bool {
        let k = pattern.order();
        if k == 0 {
            return true;
        }
        if k > s.len() {
            return false;
        }
        let mut mapped = Vec::with_capacity(k);
        self.extend(s, pattern, &mut mapped, s.clone())
    }

    fn extend(
        &self,
        s: &VertexSet,
        pattern: &Graph,
        mapped: &mut Vec<usize>,
        pool: VertexSet,
    ) -> bool {
        let i = mapped.len();
        if i == pattern.order() {
            return true;
        }
        let mut candidates = pool.clone();
        for (j, &w) in mapped.iter().enumerate() {
            candidates = if pattern.has_edge(i, j) {
                candidates.intersection(&self.nbrs(w, s))
            } else {
                candidates.intersection(&self.non_nbrs(w, s))
            };
            if candidates.is_empty() {
                return false;
            }
        }
        for c in &candidates {
            let mut rest = pool.clone();
            rest.remove(c);
            mapped.push(c);
            if self.extend(s, pattern, mapped, rest) {
                return true;
            }
            mapped.pop();
        }
        false
    }

    /// Whether `s` contains a clique on `size` vertices.
    pub fn has_clique(&self, s: &VertexSet, size: usize) -> bool {
        if size == 0 {
            return true;
        }
        if s.len() < size {
            return false;
        }
        for v in s {
            let mut later = self.nbrs(v, s);
            // only extend with larger indices so each clique is seen once
            for u in 0..=v {
                later.remove(u);
            }
            if self.has_clique(&later, size - 1) {
                return true;
            }
        }
        false
    }
}

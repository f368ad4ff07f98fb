use itertools::Itertools;

use super::{enumerate::LabeledGraphs, Graph, MAX_ENUMERATION_ORDER};

fn mask_under(g: &Graph, perm: &[usize]) -> u64 {
    let mut mask = 0;
    let mut bit = 0;
    for j in 1..perm.len() {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// Relabeling of `g` with the smallest edge mask over all vertex permutations.
///
/// Brute force, so restricted to graphs of at most 8 vertices; panics above that.
pub fn canonical_form(g: &Graph) -> Graph {
    let p = g.order();
    assert!(
        p <= MAX_ENUMERATION_ORDER,
        "canonical_form is brute force and limited to {MAX_ENUMERATION_ORDER} vertices"
    );
    let best = (0..p)
        .permutations(p)
        .map(|perm| mask_under(g, &perm))
        .min()
        .unwrap_or(0);
    LabeledGraphs::graph(p, best)
}

/// Isomorphism test through canonical forms; same size limit as [`canonical_form`].
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}

//! Ramsey thresholds: `tau(m, n)` is a number such that every graph on more
//! than `tau` vertices has an independent set of size `m` or a clique of size
//! `n`. The recognizer only needs an upper bound on the true threshold
//! `R(m, n) - 1`; exact values are used where they are known.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph, LabeledGraphs};

/// `verify_tau` enumerates all graphs on `t + 1` vertices, so `t + 1` is capped here.
pub const VERIFY_GATE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RamseyBound {
    /// Independent-set order.
    pub m: usize,
    /// Clique order.
    pub n: usize,
    pub tau: u64,
    /// `tau` equals `R(m, n) - 1` rather than an upper bound on it.
    pub exact: bool,
}

/// Known Ramsey numbers `R(m, n)`.
fn exact_ramsey(m: usize, n: usize) -> Option<u64> {
    let (a, b) = if m <= n { (m, n) } else { (n, m) };
    match (a, b) {
        (0, _) => Some(0),
        (1, _) => Some(1),
        (2, b) => Some(b as u64),
        (3, 3) => Some(6),
        (3, 4) => Some(9),
        (3, 5) => Some(14),
        (4, 4) => Some(18),
        _ => None,
    }
}

/// Upper bound on `R(m, n)` from `R(m, n) <= R(m-1, n) + R(m, n-1)`, seeded
/// with the exact table.
fn ramsey_upper(m: usize, n: usize) -> u64 {
    let mut table = vec![vec![0u64; n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            table[i][j] = match exact_ramsey(i, j) {
                Some(r) => r,
                None => table[i - 1][j].saturating_add(table[i][j - 1]),
            };
        }
    }
    table[m][n]
}

/// Threshold for independent sets of order `m` and cliques of order `n`.
pub fn tau(m: usize, n: usize) -> RamseyBound {
    assert!(m >= 1 && n >= 1, "tau needs m, n >= 1");
    match exact_ramsey(m, n) {
        Some(r) => RamseyBound {
            m,
            n,
            tau: r - 1,
            exact: true,
        },
        None => RamseyBound {
            m,
            n,
            tau: ramsey_upper(m, n) - 1,
            exact: false,
        },
    }
}

type Small = [u8; VERIFY_GATE];

fn small_adjacency(order: usize, mask: u64) -> Small {
    let mut adj = [0u8; VERIFY_GATE];
    let mut bit = 0;
    for j in 1..order {
        for i in 0..j {
            if mask >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

fn small_clique(adj: &Small, candidates: u8, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < size {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if small_clique(adj, rest & adj[v], size - 1) {
            return true;
        }
    }
    false
}

fn small_has_either(adj: &Small, order: usize, m: usize, n: usize) -> bool {
    let all = if order == 8 { 0xff } else { (1u8 << order) - 1 };
    let mut co = [0u8; VERIFY_GATE];
    for v in 0..order {
        co[v] = !adj[v] & all & !(1 << v);
    }
    // the smaller target usually settles it
    let (first, second) = if m <= n {
        ((&co, m), (adj, n))
    } else {
        ((adj, n), (&co, m))
    };
    small_clique(first.0, all, first.1) || small_clique(second.0, all, second.1)
}

/// First graph (by edge mask) on `t + 1` vertices with neither an independent
/// set of order `m` nor a clique of order `n`.
///
/// The mask splits into the graph on the first `t` vertices (low bits) and
/// the last vertex's neighbourhood (high bits); each prefix's adjacency is
/// built once and reused for every neighbourhood.
pub fn tau_counterexample(m: usize, n: usize, t: usize) -> Result<Option<Graph>> {
    let order = t + 1;
    if order > VERIFY_GATE {
        return Err(Error::SizeLimit {
            what: "Ramsey verification order",
            size: order,
            gate: VERIFY_GATE,
        });
    }
    let last = order - 1;
    let base = pair_count(last);
    let smallest = (0..1u64 << base)
        .into_par_iter()
        .filter_map(|prefix| {
            let head = small_adjacency(last, prefix);
            (0..1u16 << last)
                .map(|nb| nb as u8)
                .find(|&nb| {
                    let mut adj = head;
                    adj[last] = nb;
                    for (i, row) in adj.iter_mut().enumerate().take(last) {
                        if nb >> i & 1 == 1 {
                            *row |= 1 << last;
                        }
                    }
                    !small_has_either(&adj, order, m, n)
                })
                .map(|nb| (nb, prefix))
        })
        .min();
    Ok(smallest.map(|(nb, prefix)| LabeledGraphs::graph(order, (u64::from(nb) << base) | prefix)))
}

/// Whether every graph on `t + 1` vertices contains an independent set of
/// order `m` or a clique of order `n`.
pub fn verify_tau(m: usize, n: usize, t: usize) -> Result<bool> {
    Ok(tau_counterexample(m, n, t)?.is_none())
}

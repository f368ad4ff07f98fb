use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Standard graph families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    /// Chordless path `0-1-…-(n-1)`.
    Path(usize),
    /// Cycle `0-1-…-(n-1)-0`, `n >= 3`.
    Cycle(usize),
    /// Sides `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// G(n, p): each pair `(u, v)`, `u < v`, is drawn in lexicographic order
    /// from a ChaCha8 stream seeded with `seed`.
    Random {
        order: usize,
        prob: f64,
        seed: u64,
    },
}

impl Family {
    pub fn generate(self) -> Result<Graph> {
        match self {
            Family::Complete(n) => {
                let mut g = Graph::empty(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        g.set_edge(u, v);
                    }
                }
                Ok(g)
            }
            Family::Empty(n) => Graph::empty(n),
            Family::Path(n) => Graph::build(n, (1..n).map(|v| (v - 1, v))),
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParams {
                        family: "cycle",
                        reason: format!("needs at least 3 vertices, got {n}"),
                    });
                }
                Graph::build(n, (0..n).map(|v| (v, (v + 1) % n)))
            }
            Family::CompleteBipartite(a, b) => {
                let mut g = Graph::empty(a + b)?;
                for u in 0..a {
                    for v in a..a + b {
                        g.set_edge(u, v);
                    }
                }
                Ok(g)
            }
            Family::Random { order, prob, seed } => {
                if !(0.0..=1.0).contains(&prob) {
                    return Err(Error::InvalidParams {
                        family: "random",
                        reason: format!("probability {prob} outside [0, 1]"),
                    });
                }
                let mut g = Graph::empty(order)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for u in 0..order {
                    for v in u + 1..order {
                        if rng.gen_bool(prob) {
                            g.set_edge(u, v);
                        }
                    }
                }
                Ok(g)
            }
        }
    }
}

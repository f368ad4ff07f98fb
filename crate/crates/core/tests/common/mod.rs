#![allow(dead_code)]

use pqcolor::graph::{Family, Graph};
use pqcolor::properties::{parse_spec, PropertySpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// How members of a pair's class are planted: the structure drawn inside
/// the `P` side (the `Q` side gets the complement of the same structure).
#[derive(Clone, Copy, Debug)]
pub enum Plant {
    Independent,
    Matching,
    Bipartite,
}

pub struct Pair {
    pub name: &'static str,
    pub p: PropertySpec,
    pub q: PropertySpec,
    pub plant: Plant,
}

/// The property pairs of the oracle-equivalence matrix.
pub fn pairs() -> Vec<Pair> {
    [
        ("split", "edgeless", "complete", Plant::Independent),
        (
            "(2,2)-polar core",
            "free(K3,P3)",
            "co(free(K3,P3))",
            Plant::Matching,
        ),
        (
            "(1,1)-polar",
            "free(K2,P3)",
            "co(free(K2,P3))",
            Plant::Independent,
        ),
        (
            "two independent sets and two cliques",
            "bipartite",
            "co(bipartite)",
            Plant::Bipartite,
        ),
    ]
    .into_iter()
    .map(|(name, p, q, plant)| Pair {
        name,
        p: parse_spec(p).unwrap(),
        q: parse_spec(q).unwrap(),
        plant,
    })
    .collect()
}

fn structure(plant: Plant, rng: &mut ChaCha8Rng, part: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match plant {
        Plant::Independent => {}
        Plant::Matching => {
            let mut shuffled = part.to_vec();
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            for pair in shuffled.chunks(2) {
                if pair.len() == 2 && rng.gen_bool(0.7) {
                    out.push((pair[0], pair[1]));
                }
            }
        }
        Plant::Bipartite => {
            let colour: Vec<bool> = part.iter().map(|_| rng.gen_bool(0.5)).collect();
            for i in 0..part.len() {
                for j in i + 1..part.len() {
                    if colour[i] != colour[j] && rng.gen_bool(0.5) {
                        out.push((part[i], part[j]));
                    }
                }
            }
        }
    }
    out
}

/// Random graph with a planted partition into the pair's two classes.
pub fn planted(plant: Plant, order: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let side: Vec<bool> = (0..order).map(|_| rng.gen_bool(0.5)).collect();
    let a: Vec<usize> = (0..order).filter(|&v| side[v]).collect();
    let b: Vec<usize> = (0..order).filter(|&v| !side[v]).collect();
    let mut edges = structure(plant, &mut rng, &a);
    let co_edges = structure(plant, &mut rng, &b);
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !co_edges.contains(&(b[i], b[j])) && !co_edges.contains(&(b[j], b[i])) {
                edges.push((b[i], b[j]));
            }
        }
    }
    for &u in &a {
        for &v in &b {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(order, edges).unwrap()
}

/// Seeded random battery: alternating planted members and G(n, p) graphs
/// with densities spread over (0, 1).
pub fn random_battery(
    plant: Plant,
    count: usize,
    orders: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let order = rng.gen_range(orders.clone());
            let s = rng.gen::<u64>();
            if i % 2 == 0 {
                planted(plant, order, s)
            } else {
                let prob = [0.15, 0.3, 0.5, 0.7, 0.85][i / 2 % 5];
                Family::Random {
                    order,
                    prob,
                    seed: s,
                }
                .generate()
                .unwrap()
            }
        })
        .collect()
}

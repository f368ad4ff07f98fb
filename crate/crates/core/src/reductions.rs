//! Hardness constructions as graph transformations, with the exhaustive
//! tools used to check their equivalences on small inputs.
//!
//! * [`t6_gadget`]: `G` plus a disjoint triangle. `G` is 3-colourable iff the
//!   result splits into a bipartite part and a `co-P3`-free part.
//! * [`t7_gadget`]: `G` plus a universal vertex. `G` is 3-colourable iff the
//!   result splits into a bipartite part and a complete bipartite part.
//! * [`gh_combinator`]: `G` next to a fixed host `H` whose partition into
//!   `P`-parts and `Q`-parts is unique up to trivial interchanges; every vertex
//!   of `G` is joined to the `Q`-side neighbours of one anchor vertex of `H`.
//!   The result lies in `P ∘ Q` iff `G` lies in `P`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_labeled, format, is_isomorphic, Family, Graph, VertexSet};
use crate::properties::{holds, parse_spec, PropertySpec, View, PRODUCT_GATE};

/// Largest order accepted by [`is_k_colorable`].
pub const COLORING_GATE: usize = 24;

/// Largest number of assignment vectors `k^p` [`enumerate_partitions`] may visit.
pub const PARTITION_GATE: u64 = 10_000_000;

pub fn t6_gadget(g: &Graph) -> Result<Graph> {
    g.disjoint_union(&Family::Complete(3).generate()?)
}

pub fn t7_gadget(g: &Graph) -> Result<Graph> {
    g.add_universal_vertex()
}

/// Backtracking `k`-colouring in ascending vertex order. A vertex may open at
/// most one new colour, so colour permutations are not revisited.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<bool> {
    if g.order() > COLORING_GATE {
        return Err(Error::SizeLimit {
            what: "k-colourability search",
            size: g.order(),
            gate: COLORING_GATE,
        });
    }
    let mut colors = vec![usize::MAX; g.order()];
    Ok(color_from(g, k, 0, 0, &mut colors))
}

fn color_from(g: &Graph, k: usize, v: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if (0..v).any(|u| colors[u] == c && g.has_edge(u, v)) {
            continue;
        }
        colors[v] = c;
        if color_from(g, k, v + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// An ordered partition `(V_1, …, V_k)`; parts may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringPartition {
    pub parts: Vec<VertexSet>,
}

fn has_product(spec: &PropertySpec) -> bool {
    match spec {
        PropertySpec::ProductOf(_) => true,
        PropertySpec::ComplementOf(inner) => has_product(inner),
        _ => false,
    }
}

/// Every ordered partition whose `i`-th part satisfies `specs[i]`, in
/// ascending order of the assignment vector `(a_0, …, a_{p-1})`.
pub fn enumerate_partitions<'a>(
    g: &'a Graph,
    specs: &'a [PropertySpec],
) -> Result<PartitionStream<'a>> {
    let k = specs.len();
    if k == 0 {
        return Err(Error::InvalidParams {
            family: "enumerate_partitions",
            reason: "needs at least one property".into(),
        });
    }
    let visits = (k as u64)
        .checked_pow(g.order() as u32)
        .filter(|&v| v <= PARTITION_GATE);
    if visits.is_none() {
        return Err(Error::SizeLimit {
            what: "partition enumeration k^p",
            size: g.order(),
            gate: PARTITION_GATE as usize,
        });
    }
    if g.order() > PRODUCT_GATE && specs.iter().any(has_product) {
        return Err(Error::SizeLimit {
            what: "product membership search",
            size: g.order(),
            gate: PRODUCT_GATE,
        });
    }
    Ok(PartitionStream {
        view: View::new(g),
        specs,
        parts: vec![VertexSet::empty(g.order()); k],
        assigned: vec![0; g.order()],
        next_color: vec![0; g.order()],
        depth: 0,
        done: false,
    })
}

/// Depth-first generator behind [`enumerate_partitions`]. Parts are checked
/// as they grow; since every class is hereditary a failing part is pruned.
pub struct PartitionStream<'a> {
    view: View<'a>,
    specs: &'a [PropertySpec],
    parts: Vec<VertexSet>,
    assigned: Vec<usize>,
    next_color: Vec<usize>,
    depth: usize,
    done: bool,
}

impl PartitionStream<'_> {
    fn backtrack(&mut self) -> bool {
        if self.depth == 0 {
            return false;
        }
        self.depth -= 1;
        let v = self.depth;
        self.parts[self.assigned[v]].remove(v);
        true
    }
}

impl Iterator for PartitionStream<'_> {
    type Item = ColoringPartition;

    fn next(&mut self) -> Option<ColoringPartition> {
        if self.done {
            return None;
        }
        let order = self.assigned.len();
        loop {
            if self.depth == order {
                let out = ColoringPartition {
                    parts: self.parts.clone(),
                };
                if !self.backtrack() {
                    self.done = true;
                }
                return Some(out);
            }
            let v = self.depth;
            let c = self.next_color[v];
            if c == self.specs.len() {
                self.next_color[v] = 0;
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            self.next_color[v] = c + 1;
            self.parts[c].insert(v);
            let ok = holds(&self.specs[c], self.view, &self.parts[c])
                .expect("product gate checked up front");
            if ok {
                self.assigned[v] = c;
                self.depth += 1;
            } else {
                self.parts[c].remove(v);
            }
        }
    }
}

/// Coordinates grouped by equal spec; a partition's class under trivial
/// interchanges is the sorted list of parts within each group.
fn interchange_key(partition: &ColoringPartition, specs: &[PropertySpec]) -> Vec<Vec<VertexSet>> {
    let mut groups: Vec<(usize, Vec<VertexSet>)> = Vec::new();
    for (i, part) in partition.parts.iter().enumerate() {
        let rep = specs
            .iter()
            .position(|s| *s == specs[i])
            .expect("spec is present");
        match groups.iter_mut().find(|(r, _)| *r == rep) {
            Some((_, members)) => members.push(part.clone()),
            None => groups.push((rep, vec![part.clone()])),
        }
    }
    groups
        .into_iter()
        .map(|(_, mut members)| {
            members.sort();
            members
        })
        .collect()
}

/// The unique valid partition up to trivial interchanges, if there is one.
pub fn unique_partition(g: &Graph, specs: &[PropertySpec]) -> Result<Option<ColoringPartition>> {
    let mut first: Option<(ColoringPartition, Vec<Vec<VertexSet>>)> = None;
    for partition in enumerate_partitions(g, specs)? {
        let key = interchange_key(&partition, specs);
        match &first {
            None => first = Some((partition, key)),
            Some((_, k)) if *k == key => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(first.map(|(p, _)| p))
}

/// Whether `g` has exactly one valid partition up to permuting parts whose
/// specs are equal.
pub fn verify_strongly_unique(g: &Graph, specs: &[PropertySpec]) -> Result<bool> {
    Ok(unique_partition(g, specs)?.is_some())
}

/// A host graph `H` with its partition `(U_1, …, U_n, W_1, …, W_r)`, the
/// matching specs, and an anchor vertex `u` in `U_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquePartitionWitness {
    host: Graph,
    parts: Vec<VertexSet>,
    specs: Vec<PropertySpec>,
    additive_parts: usize,
    anchor: usize,
    anchor_w_neighborhood: VertexSet,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

impl UniquePartitionWitness {
    /// Validates the structural invariants: matching lengths, at least one
    /// part on each side, non-empty pairwise disjoint parts covering the host,
    /// each part in its class, and the anchor in the first part.
    pub fn new(
        host: Graph,
        parts: Vec<VertexSet>,
        specs: Vec<PropertySpec>,
        additive_parts: usize,
        anchor: usize,
    ) -> Result<Self> {
        if parts.len() != specs.len() {
            return Err(invalid(format!(
                "{} parts but {} specs",
                parts.len(),
                specs.len()
            )));
        }
        if additive_parts == 0 || additive_parts >= parts.len() {
            return Err(invalid(format!(
                "additive part count {additive_parts} must leave at least one part on each side of {}",
                parts.len()
            )));
        }
        let mut covered = VertexSet::empty(host.order());
        for (i, part) in parts.iter().enumerate() {
            if part.universe() != host.order() {
                return Err(invalid(format!(
                    "part {i} is not over the host's {} vertices",
                    host.order()
                )));
            }
            if part.is_empty() {
                return Err(invalid(format!("part {i} is empty")));
            }
            if !part.is_disjoint(&covered) {
                return Err(invalid(format!("part {i} overlaps an earlier part")));
            }
            covered = covered.union(part);
            if !holds(&specs[i], View::new(&host), part)? {
                return Err(invalid(format!(
                    "part {i} does not induce a graph in {}",
                    specs[i]
                )));
            }
        }
        if covered != host.vertices() {
            return Err(invalid("parts do not cover the host"));
        }
        if !parts[0].contains(anchor) {
            return Err(invalid(format!("anchor {anchor} is not in the first part")));
        }
        let w = parts[additive_parts..]
            .iter()
            .fold(VertexSet::empty(host.order()), |acc, p| acc.union(p));
        let anchor_w_neighborhood = host.neighbors(anchor).intersection(&w);
        Ok(UniquePartitionWitness {
            host,
            parts,
            specs,
            additive_parts,
            anchor,
            anchor_w_neighborhood,
        })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn specs(&self) -> &[PropertySpec] {
        &self.specs
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn anchor_w_neighborhood(&self) -> &VertexSet {
        &self.anchor_w_neighborhood
    }

    fn side(specs: &[PropertySpec]) -> PropertySpec {
        match specs {
            [one] => one.clone(),
            many => PropertySpec::product_of(many.to_vec()).expect("two or more factors"),
        }
    }

    /// `P`: the product of the specs on the additive side.
    pub fn p_spec(&self) -> PropertySpec {
        Self::side(&self.specs[..self.additive_parts])
    }

    /// `Q`: the product of the specs on the co-additive side.
    pub fn q_spec(&self) -> PropertySpec {
        Self::side(&self.specs[self.additive_parts..])
    }

    /// Whether the stored partition is the host's only one up to trivial
    /// interchanges.
    pub fn is_strongly_unique(&self) -> Result<bool> {
        let Some(found) = unique_partition(&self.host, &self.specs)? else {
            return Ok(false);
        };
        let mine = ColoringPartition {
            parts: self.parts.clone(),
        };
        Ok(interchange_key(&found, &self.specs) == interchange_key(&mine, &self.specs))
    }

    pub fn to_file(&self) -> WitnessFile {
        WitnessFile {
            host: format::to_graph6(&self.host),
            parts: self.parts.iter().map(VertexSet::to_vec).collect(),
            specs: self.specs.iter().map(PropertySpec::name).collect(),
            anchor: self.anchor,
            additive_parts: Some(self.additive_parts),
        }
    }

    pub fn from_file(file: &WitnessFile) -> Result<Self> {
        let host = format::parse_graph6(&file.host)?;
        let parts = file
            .parts
            .iter()
            .map(|p| VertexSet::from_indices(host.order(), p.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        let specs = file
            .specs
            .iter()
            .map(|s| parse_spec(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(
            host,
            parts,
            specs,
            file.additive_parts.unwrap_or(1),
            file.anchor,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("witness serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: WitnessFile = serde_json::from_str(text)
            .map_err(|e| invalid(format!("malformed witness file: {e}")))?;
        Self::from_file(&file)
    }
}

/// On-disk witness: host as graph6, parts as index lists, specs in the
/// property grammar. `additive_parts` counts the leading `P`-side parts and
/// defaults to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub host: String,
    pub parts: Vec<Vec<usize>>,
    pub specs: Vec<String>,
    pub anchor: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub additive_parts: Option<usize>,
}

/// Disjoint copies of `g` (vertices `0..p_G`) and the witness host (shifted by
/// `p_G`), plus every edge from a `g` vertex to the anchor's `W`-neighbours.
pub fn gh_combinator(g: &Graph, w: &UniquePartitionWitness) -> Result<Graph> {
    let shift = g.order();
    let joined = g.disjoint_union(&w.host)?;
    let mut edges: Vec<(usize, usize)> = joined.edges().collect();
    for v in 0..shift {
        edges.extend(w.anchor_w_neighborhood.iter().map(|x| (v, x + shift)));
    }
    Graph::build(joined.order(), edges)
}

/// Hosts on `1..=max_order` vertices, one per isomorphism class, that have a
/// unique partition (up to trivial interchanges) with every part non-empty.
/// The anchor is the smallest vertex of the first part.
pub fn search_witnesses(
    specs: &[PropertySpec],
    additive_parts: usize,
    max_order: usize,
) -> Result<Vec<UniquePartitionWitness>> {
    let mut found: Vec<UniquePartitionWitness> = Vec::new();
    for order in 1..=max_order {
        let start = found.len();
        for host in enumerate_labeled(order)? {
            let Some(partition) = unique_partition(&host, specs)? else {
                continue;
            };
            if partition.parts.iter().any(VertexSet::is_empty) {
                continue;
            }
            if found[start..].iter().any(|w| is_isomorphic(&w.host, &host)) {
                continue;
            }
            let anchor = partition.parts[0].first().expect("non-empty");
            found.push(UniquePartitionWitness::new(
                host,
                partition.parts,
                specs.to_vec(),
                additive_parts,
                anchor,
            )?);
        }
    }
    Ok(found)
}

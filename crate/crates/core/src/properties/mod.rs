//! Hereditary graph classes and their decision procedures.
//!
//! A [`PropertySpec`] is a declarative description of a class: one of the
//! built-in families, `Free(Y)` for a finite list of forbidden induced
//! subgraphs, the complement of another class, or a product `P1 ∘ … ∘ Pk`
//! (graphs whose vertices split into parts lying in the respective classes).
//! Every class here contains the graph on zero vertices.

mod parse;
mod view;

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

pub use parse::parse_spec;
pub(crate) use view::View;

use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, format::to_graph6, Family, Graph, VertexSet, MAX_ENUMERATION_ORDER,
};

/// Largest vertex count on which a product is decided by exhaustive search.
pub const PRODUCT_GATE: usize = 20;

/// Largest clique order probed by [`clique_bound`] and [`co_clique_bound`].
pub const BOUND_PROBE_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PropertySpec {
    Edgeless,
    Complete,
    /// Disjoint unions of cliques, i.e. `Free(P3)`.
    Cluster,
    /// Complements of cluster graphs, i.e. `Free(co-P3)`.
    CompleteMultipartite,
    Bipartite,
    CoBipartite,
    /// `K_{a,b}` with `a, b >= 0`; the edgeless graphs are included.
    CompleteBipartite,
    /// Non-empty, sorted, deduplicated forbidden list.
    FreeOf(Vec<Graph>),
    ComplementOf(Box<PropertySpec>),
    /// At least two factors, none of them itself a product.
    ProductOf(Vec<PropertySpec>),
}

impl PropertySpec {
    /// `Free(forbidden)`. Graphs on at most 8 vertices are stored in
    /// canonical labelling, so isomorphic lists compare equal.
    pub fn free_of(forbidden: Vec<Graph>) -> Result<Self> {
        if forbidden.is_empty() {
            return Err(Error::InvalidParams {
                family: "free_of",
                reason: "the forbidden list is empty".into(),
            });
        }
        if forbidden.iter().any(|h| h.order() == 0) {
            return Err(Error::InvalidParams {
                family: "free_of",
                reason: "a forbidden graph has no vertices".into(),
            });
        }
        let mut list: Vec<Graph> = forbidden
            .into_iter()
            .map(|h| {
                if h.order() <= MAX_ENUMERATION_ORDER {
                    canonical_form(&h)
                } else {
                    h
                }
            })
            .collect();
        list.sort_by(forbidden_order);
        list.dedup();
        Ok(PropertySpec::FreeOf(list))
    }

    /// Complement of `inner`, collapsing a double complement.
    pub fn complement_of(inner: PropertySpec) -> Self {
        match inner {
            PropertySpec::ComplementOf(x) => *x,
            other => PropertySpec::ComplementOf(Box::new(other)),
        }
    }

    /// Product of the factors; nested products are flattened.
    pub fn product_of(factors: Vec<PropertySpec>) -> Result<Self> {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                PropertySpec::ProductOf(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() < 2 {
            return Err(Error::InvalidParams {
                family: "product_of",
                reason: format!("needs at least two factors, got {}", flat.len()),
            });
        }
        Ok(PropertySpec::ProductOf(flat))
    }

    /// Canonical text form; parses back to an equal spec.
    pub fn name(&self) -> String {
        self.to_string()
    }

    /// Factors of a product, or the spec itself.
    pub fn factors(&self) -> &[PropertySpec] {
        match self {
            PropertySpec::ProductOf(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }
}

fn forbidden_order(a: &Graph, b: &Graph) -> Ordering {
    (a.order(), a.edge_count())
        .cmp(&(b.order(), b.edge_count()))
        .then_with(|| to_graph6(a).cmp(&to_graph6(b)))
}

/// Named atoms on at most 8 vertices, keyed by canonical form.
fn named_atoms() -> &'static [(Graph, String)] {
    static TABLE: OnceLock<Vec<(Graph, String)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = Vec::new();
        for n in 1..=MAX_ENUMERATION_ORDER {
            for (name, family) in standard_atoms(n) {
                let canon = canonical_form(&family.generate().expect("small family"));
                if !table.iter().any(|(g, _)| *g == canon) {
                    table.push((canon, name));
                }
            }
        }
        let k2 = Family::Complete(2).generate().expect("K2");
        table.push((
            canonical_form(&k2.disjoint_union(&k2).expect("2K2")),
            "2K2".into(),
        ));
        table
    })
}

fn standard_atoms(n: usize) -> Vec<(String, Family)> {
    let mut atoms = vec![
        (format!("K{n}"), Family::Complete(n)),
        (format!("Kbar{n}"), Family::Empty(n)),
        (format!("P{n}"), Family::Path(n)),
    ];
    if n >= 3 {
        atoms.push((format!("C{n}"), Family::Cycle(n)));
    }
    atoms
}

fn atom_name(h: &Graph) -> String {
    if h.order() <= MAX_ENUMERATION_ORDER {
        let canon = canonical_form(h);
        if let Some((_, name)) = named_atoms().iter().find(|(g, _)| *g == canon) {
            return name.clone();
        }
    } else {
        for (name, family) in standard_atoms(h.order()) {
            if family.generate().ok().as_ref() == Some(h) {
                return name;
            }
        }
    }
    format!("g6:{}", to_graph6(h))
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertySpec::Edgeless => f.write_str("edgeless"),
            PropertySpec::Complete => f.write_str("complete"),
            PropertySpec::Cluster => f.write_str("cluster"),
            PropertySpec::CompleteMultipartite => f.write_str("complete_multipartite"),
            PropertySpec::Bipartite => f.write_str("bipartite"),
            PropertySpec::CoBipartite => f.write_str("co_bipartite"),
            PropertySpec::CompleteBipartite => f.write_str("complete_bipartite"),
            PropertySpec::FreeOf(list) => {
                let atoms: Vec<String> = list.iter().map(atom_name).collect();
                write!(f, "free({})", atoms.join(","))
            }
            PropertySpec::ComplementOf(inner) => write!(f, "co({inner})"),
            PropertySpec::ProductOf(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str("∘")?;
                    }
                    write!(f, "{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PropertySpec({self})")
    }
}

impl std::str::FromStr for PropertySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Whether `g` belongs to the class.
///
/// Fails only when a product has to be decided on more than
/// [`PRODUCT_GATE`] vertices.
pub fn check(spec: &PropertySpec, g: &Graph) -> Result<bool> {
    holds(spec, View::new(g), &g.vertices())
}

/// Whether the subgraph of `g` induced by `set` belongs to the class.
pub fn check_subset(spec: &PropertySpec, g: &Graph, set: &VertexSet) -> Result<bool> {
    if set.universe() != g.order() {
        return Err(Error::UniverseMismatch {
            expected: g.order(),
            found: set.universe(),
        });
    }
    holds(spec, View::new(g), set)
}

pub(crate) fn holds(spec: &PropertySpec, view: View<'_>, s: &VertexSet) -> Result<bool> {
    Ok(match spec {
        PropertySpec::Edgeless => view.edgeless(s),
        PropertySpec::Complete => view.complete(s),
        PropertySpec::Cluster => view.cluster(s),
        PropertySpec::CompleteMultipartite => view.flip().cluster(s),
        PropertySpec::Bipartite => view.bipartite(s),
        PropertySpec::CoBipartite => view.flip().bipartite(s),
        PropertySpec::CompleteBipartite => view.complete_bipartite(s),
        PropertySpec::FreeOf(list) => !list.iter().any(|h| view.contains_induced(s, h)),
        PropertySpec::ComplementOf(inner) => holds(inner, view.flip(), s)?,
        PropertySpec::ProductOf(factors) => {
            if s.len() > PRODUCT_GATE {
                return Err(Error::SizeLimit {
                    what: "product membership search",
                    size: s.len(),
                    gate: PRODUCT_GATE,
                });
            }
            product_holds(factors, view, s)?
        }
    })
}

/// Exhaustive search for a part of `s` in the first factor whose remainder
/// lies in the product of the other factors.
fn product_holds(factors: &[PropertySpec], view: View<'_>, s: &VertexSet) -> Result<bool> {
    let (first, rest) = match factors {
        [] => return Ok(s.is_empty()),
        [only] => return holds(only, view, s),
        [first, rest @ ..] => (first, rest),
    };
    let members = s.to_vec();
    for mask in 0u64..1 << members.len() {
        let mut part = VertexSet::empty(s.universe());
        for (i, &v) in members.iter().enumerate() {
            if mask >> i & 1 == 1 {
                part.insert(v);
            }
        }
        if holds(first, view, &part)? && product_holds(rest, view, &s.difference(&part))? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `g` has an induced subgraph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    View::new(g).contains_induced(&g.vertices(), h)
}

/// Least `n` such that `K_n` is outside the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CliqueBound {
    Bounded(usize),
    /// Every probed clique (up to [`BOUND_PROBE_CAP`]) is in the class.
    Unbounded,
}

impl CliqueBound {
    pub fn value(self) -> Option<usize> {
        match self {
            CliqueBound::Bounded(n) => Some(n),
            CliqueBound::Unbounded => None,
        }
    }
}

fn probe(spec: &PropertySpec, make: fn(usize) -> Family) -> CliqueBound {
    for i in 1..=BOUND_PROBE_CAP {
        let g = make(i).generate().expect("probe graphs are small");
        // probes stay below the product gate, so check cannot fail here
        let inside = check(spec, &g).expect("probe order is below the product gate");
        if !inside {
            return CliqueBound::Bounded(i);
        }
    }
    CliqueBound::Unbounded
}

/// Smallest `n` with `K_n` outside the class; for a hereditary class this is
/// the least `n` with the class contained in `Free(K_n)`.
pub fn clique_bound(spec: &PropertySpec) -> CliqueBound {
    probe(spec, Family::Complete)
}

/// Smallest `m` with the edgeless graph on `m` vertices outside the class.
pub fn co_clique_bound(spec: &PropertySpec) -> CliqueBound {
    probe(spec, Family::Empty)
}

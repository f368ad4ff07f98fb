//! Recognition of `P ∘ Q`: graphs whose vertices split into a part `A`
//! inducing a graph in `P` and a remainder inducing a graph in `Q`.
//!
//! When `P` excludes some clique `K_n` and `Q` excludes some independent set
//! of order `m`, a valid `A` never differs much from a large set in `P`.
//! With `tau = tau(m, n)` the procedure is:
//!
//! 1. take an inclusion-wise maximal `K_n`-free set `B` (greedy, ascending
//!    vertex order);
//! 2. while some `C` with `G[C]` in `P`, `|C| = |B| + 1` and `|B - C| <= tau`
//!    exists, replace `B` by it;
//! 3. search for `A` with `|B - A| <= tau`, `|A - B| <= tau`, `G[A]` in `P`
//!    and `G[V - A]` in `Q`.
//!
//! Step 2 looks at `O(p^(2 tau + 1))` candidates per round and runs at most
//! `p` rounds; step 3 looks at `O(p^(2 tau))` candidates. [`RecognizerTrace`]
//! counts both so the bounds can be checked on real runs.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::properties::{check, clique_bound, co_clique_bound, holds, PropertySpec, View};
use crate::ramsey::tau;

/// `brute_force` examines all `2^p` subsets; `p` is capped here.
pub const BRUTE_FORCE_GATE: usize = 24;

/// A partition `(A, V - A)` with `G[A]` in `P` and `G[V - A]` in `Q`.
/// Either side may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub part_a: VertexSet,
    pub part_rest: VertexSet,
}

impl PartitionCertificate {
    pub fn from_part_a(part_a: VertexSet) -> Self {
        let part_rest = part_a.complement();
        PartitionCertificate { part_a, part_rest }
    }

    /// Re-checks the certificate on materialized induced subgraphs.
    pub fn validate(
        &self,
        g: &Graph,
        p_spec: &PropertySpec,
        q_spec: &PropertySpec,
    ) -> Result<bool> {
        let covers = self.part_a.is_disjoint(&self.part_rest)
            && self.part_a.union(&self.part_rest) == g.vertices();
        Ok(covers
            && check(p_spec, &g.induced(&self.part_a)?)?
            && check(q_spec, &g.induced(&self.part_rest)?)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RecognizerTrace {
    pub step2_iterations: u64,
    /// Summed over all step-2 rounds, including the final unsuccessful one.
    pub step2_candidates_examined: u64,
    pub step2_max_candidates_per_iteration: u64,
    pub step3_candidates_examined: u64,
    pub tau_used: u64,
    pub membership_checks: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub certificate: Option<PartitionCertificate>,
    pub trace: RecognizerTrace,
}

impl Decision {
    pub fn member(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Greedy inclusion-wise maximal `K_n`-free set: vertices are scanned in
/// ascending order and kept when they close no `K_n` with those kept so far.
pub fn maximal_knfree(g: &Graph, n: usize) -> VertexSet {
    let view = View::new(g);
    let mut b = VertexSet::empty(g.order());
    for v in 0..g.order() {
        let inside = view.nbrs(v, &b);
        if n >= 1 && !view.has_clique(&inside, n - 1) {
            b.insert(v);
        }
    }
    b
}

struct Counters {
    checks: u64,
}

impl Counters {
    fn holds(&mut self, spec: &PropertySpec, view: View<'_>, s: &VertexSet) -> Result<bool> {
        self.checks += 1;
        holds(spec, view, s)
    }
}

fn build(universe: usize, keep: &VertexSet, drop: &[usize], add: &[usize]) -> VertexSet {
    let mut out = keep.clone();
    for &v in drop {
        out.remove(v);
    }
    for &v in add {
        out.insert(v);
    }
    debug_assert_eq!(out.universe(), universe);
    out
}

/// Canonical step-2 candidate stream: for `d = 0..=tau`, removal sets `D` of
/// `B` of size `d`, then addition sets `E` outside `B` of size `d + 1`, both in
/// ascending lexicographic order. Returns the first `C = (B - D) ∪ E` in `P`
/// and the number of candidates examined.
fn augment_inner(
    g: &Graph,
    b: &VertexSet,
    p_spec: &PropertySpec,
    tau: u64,
    counters: &mut Counters,
) -> Result<(Option<VertexSet>, u64)> {
    let view = View::new(g);
    let inside = b.to_vec();
    let outside = b.complement().to_vec();
    let mut examined = 0;
    let max_d = (tau as usize).min(inside.len());
    for d in 0..=max_d {
        if d + 1 > outside.len() {
            break;
        }
        for drop in inside.iter().copied().combinations(d) {
            for add in outside.iter().copied().combinations(d + 1) {
                examined += 1;
                let c = build(g.order(), b, &drop, &add);
                if counters.holds(p_spec, view, &c)? {
                    return Ok((Some(c), examined));
                }
            }
        }
    }
    Ok((None, examined))
}

/// First `C` with `|C| = |B| + 1`, `|B - C| <= tau` and `G[C]` in `P`.
pub fn try_augment(
    g: &Graph,
    b: &VertexSet,
    p_spec: &PropertySpec,
    tau: u64,
) -> Result<Option<VertexSet>> {
    let mut counters = Counters { checks: 0 };
    Ok(augment_inner(g, b, p_spec, tau, &mut counters)?.0)
}

fn witness_inner(
    g: &Graph,
    b: &VertexSet,
    p_spec: &PropertySpec,
    q_spec: &PropertySpec,
    tau: u64,
    counters: &mut Counters,
) -> Result<(Option<PartitionCertificate>, u64)> {
    let view = View::new(g);
    let inside = b.to_vec();
    let outside = b.complement().to_vec();
    let mut examined = 0;
    let max_d = (tau as usize).min(inside.len());
    let max_e = (tau as usize).min(outside.len());
    for d in 0..=max_d {
        for drop in inside.iter().copied().combinations(d) {
            for e in 0..=max_e {
                for add in outside.iter().copied().combinations(e) {
                    examined += 1;
                    let a = build(g.order(), b, &drop, &add);
                    if counters.holds(p_spec, view, &a)?
                        && counters.holds(q_spec, view, &a.complement())?
                    {
                        return Ok((Some(PartitionCertificate::from_part_a(a)), examined));
                    }
                }
            }
        }
    }
    Ok((None, examined))
}

/// First `A` (removal sets `D ⊆ B` with `|D| <= tau` outermost, then addition
/// sets `E` outside `B` with `|E| <= tau`, each by size then lexicographically)
/// such that `A = (B - D) ∪ E` splits `g` into `P` and `Q`.
pub fn find_witness(
    g: &Graph,
    b: &VertexSet,
    p_spec: &PropertySpec,
    q_spec: &PropertySpec,
    tau: u64,
) -> Result<Option<PartitionCertificate>> {
    let mut counters = Counters { checks: 0 };
    Ok(witness_inner(g, b, p_spec, q_spec, tau, &mut counters)?.0)
}

/// A configured `P ∘ Q` recognizer.
#[derive(Debug, Clone)]
pub struct Recognizer {
    p_spec: PropertySpec,
    q_spec: PropertySpec,
    n: usize,
    m: usize,
    tau: u64,
}

impl Recognizer {
    /// Derives `n` from `P`'s clique bound, `m` from `Q`'s co-clique bound and
    /// `tau = tau(m, n)`. Fails with [`Error::Unbounded`] when either probe
    /// finds no bound, in which case the procedure does not apply.
    pub fn new(p_spec: PropertySpec, q_spec: PropertySpec) -> Result<Self> {
        let n = clique_bound(&p_spec)
            .value()
            .ok_or(Error::Unbounded("clique bound"))?;
        let m = co_clique_bound(&q_spec)
            .value()
            .ok_or(Error::Unbounded("co-clique bound"))?;
        let tau = tau(m, n).tau;
        Ok(Recognizer {
            p_spec,
            q_spec,
            n,
            m,
            tau,
        })
    }

    /// Replaces the computed threshold. Values below the computed one can
    /// make the answer wrong; larger ones only cost time.
    pub fn with_tau(mut self, tau: u64) -> Self {
        self.tau = tau;
        self
    }

    pub fn p_spec(&self) -> &PropertySpec {
        &self.p_spec
    }

    pub fn q_spec(&self) -> &PropertySpec {
        &self.q_spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn tau(&self) -> u64 {
        self.tau
    }

    pub fn recognize(&self, g: &Graph) -> Result<Decision> {
        let mut counters = Counters { checks: 0 };
        let mut trace = RecognizerTrace {
            tau_used: self.tau,
            ..Default::default()
        };

        let mut b = maximal_knfree(g, self.n);
        loop {
            let (next, examined) = augment_inner(g, &b, &self.p_spec, self.tau, &mut counters)?;
            trace.step2_candidates_examined += examined;
            trace.step2_max_candidates_per_iteration =
                trace.step2_max_candidates_per_iteration.max(examined);
            match next {
                Some(c) => {
                    trace.step2_iterations += 1;
                    b = c;
                }
                None => break,
            }
        }

        let (certificate, examined) =
            witness_inner(g, &b, &self.p_spec, &self.q_spec, self.tau, &mut counters)?;
        trace.step3_candidates_examined = examined;
        trace.membership_checks = counters.checks;
        if let Some(cert) = &certificate {
            assert!(
                cert.validate(g, &self.p_spec, &self.q_spec)?,
                "certificate failed re-validation: {cert:?}"
            );
        }
        Ok(Decision { certificate, trace })
    }
}

/// Runs the procedure with bounds derived from the specs.
pub fn recognize(g: &Graph, p_spec: &PropertySpec, q_spec: &PropertySpec) -> Result<Decision> {
    Recognizer::new(p_spec.clone(), q_spec.clone())?.recognize(g)
}

fn brute_force_gate(g: &Graph) -> Result<()> {
    if g.order() > BRUTE_FORCE_GATE {
        return Err(Error::SizeLimit {
            what: "brute-force partition search",
            size: g.order(),
            gate: BRUTE_FORCE_GATE,
        });
    }
    Ok(())
}

fn splits(
    g: &Graph,
    p_spec: &PropertySpec,
    q_spec: &PropertySpec,
    mask: u64,
    counters: &mut Counters,
) -> Result<bool> {
    let view = View::new(g);
    let a = VertexSet::from_mask(g.order(), mask);
    Ok(counters.holds(p_spec, view, &a)? && counters.holds(q_spec, view, &a.complement())?)
}

/// Tries every subset `A` by ascending bitmask (bit `i` is vertex `i`) and
/// returns the first split.
pub fn brute_force(g: &Graph, p_spec: &PropertySpec, q_spec: &PropertySpec) -> Result<Decision> {
    brute_force_gate(g)?;
    let mut counters = Counters { checks: 0 };
    let mut found = None;
    for mask in 0..1u64 << g.order() {
        if splits(g, p_spec, q_spec, mask, &mut counters)? {
            found = Some(mask);
            break;
        }
    }
    let certificate =
        found.map(|mask| PartitionCertificate::from_part_a(VertexSet::from_mask(g.order(), mask)));
    Ok(Decision {
        certificate,
        trace: RecognizerTrace {
            membership_checks: counters.checks,
            ..Default::default()
        },
    })
}

/// Parallel [`brute_force`] over the mask range. Returns the same certificate
/// (the smallest valid mask); `membership_checks` is not tracked.
pub fn brute_force_parallel(
    g: &Graph,
    p_spec: &PropertySpec,
    q_spec: &PropertySpec,
) -> Result<Decision> {
    brute_force_gate(g)?;
    let found = (0..1u64 << g.order())
        .into_par_iter()
        .map(|mask| {
            let mut counters = Counters { checks: 0 };
            splits(g, p_spec, q_spec, mask, &mut counters).map(|ok| ok.then_some(mask))
        })
        .find_first(|r| !matches!(r, Ok(None)));
    let certificate = match found {
        Some(Err(e)) => return Err(e),
        Some(Ok(Some(mask))) => Some(PartitionCertificate::from_part_a(VertexSet::from_mask(
            g.order(),
            mask,
        ))),
        _ => None,
    };
    Ok(Decision {
        certificate,
        trace: RecognizerTrace::default(),
    })
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Per-round cap on step-2 candidates: `sum_{d <= tau} C(p, d) C(p, d + 1)`.
pub fn step2_candidate_bound(p: usize, tau: u64) -> u128 {
    (0..=tau.min(p as u64))
        .map(|d| binomial(p as u64, d).saturating_mul(binomial(p as u64, d + 1)))
        .fold(0u128, u128::saturating_add)
}

/// Cap on step-3 candidates: `(sum_{d <= tau} C(p, d))^2`.
pub fn step3_candidate_bound(p: usize, tau: u64) -> u128 {
    let s = (0..=tau.min(p as u64))
        .map(|d| binomial(p as u64, d))
        .fold(0u128, u128::saturating_add);
    s.saturating_mul(s)
}

impl RecognizerTrace {
    /// Checks the loop bound and both candidate bounds for a graph of order `p`.
    pub fn within_bounds(&self, p: usize) -> bool {
        self.step2_iterations <= p as u64
            && u128::from(self.step2_max_candidates_per_iteration)
                <= step2_candidate_bound(p, self.tau_used)
            && u128::from(self.step3_candidates_examined) <= step3_candidate_bound(p, self.tau_used)
    }
}

use pqcolor::graph::{pair_count, LabeledGraphs};
use pqcolor::recognizer::{brute_force, Recognizer};
use pqcolor::{Family, Graph, Result};
use rayon::prelude::*;
use serde::Serialize;

/// Exhaustive sweeps stop at this order (2^21 labeled graphs).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// Densities cycled through by the random battery when none is fixed.
const DENSITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

#[derive(Debug, Clone, Copy)]
pub struct RandomBattery {
    pub count: usize,
    pub order: usize,
    pub prob: Option<f64>,
    pub seed: u64,
}

impl RandomBattery {
    pub fn graph(&self, i: usize) -> Result<Graph> {
        Family::Random {
            order: self.order,
            prob: self.prob.unwrap_or(DENSITIES[i % DENSITIES.len()]),
            seed: self.seed.wrapping_add(i as u64),
        }
        .generate()
    }
}

#[derive(Debug, Default, Clone, Serialize)]
pub struct PairReport {
    pub p_spec: String,
    pub q_spec: String,
    pub tau: u64,
    pub graphs: u64,
    pub members: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub bound_violations: u64,
    pub max_step2_iterations: u64,
    pub max_step2_candidates_per_iteration: u64,
    pub max_step3_candidates_examined: u64,
    pub max_membership_checks: u64,
    /// Up to a few graph6 strings on which the two procedures differed.
    pub disagreement_examples: Vec<String>,
}

impl PairReport {
    fn cell(r: &Recognizer, g: &Graph) -> Result<PairReport> {
        let fast = r.recognize(g)?;
        let slow = brute_force(g, r.p_spec(), r.q_spec())?;
        let agree = fast.member() == slow.member();
        let t = &fast.trace;
        Ok(PairReport {
            graphs: 1,
            members: u64::from(slow.member()),
            agreements: u64::from(agree),
            disagreements: u64::from(!agree),
            bound_violations: u64::from(!t.within_bounds(g.order())),
            max_step2_iterations: t.step2_iterations,
            max_step2_candidates_per_iteration: t.step2_max_candidates_per_iteration,
            max_step3_candidates_examined: t.step3_candidates_examined,
            max_membership_checks: t.membership_checks,
            disagreement_examples: if agree {
                Vec::new()
            } else {
                vec![pqcolor::graph::format::to_graph6(g)]
            },
            ..Default::default()
        })
    }

    fn merge(mut self, o: PairReport) -> PairReport {
        self.graphs += o.graphs;
        self.members += o.members;
        self.agreements += o.agreements;
        self.disagreements += o.disagreements;
        self.bound_violations += o.bound_violations;
        self.max_step2_iterations = self.max_step2_iterations.max(o.max_step2_iterations);
        self.max_step2_candidates_per_iteration = self
            .max_step2_candidates_per_iteration
            .max(o.max_step2_candidates_per_iteration);
        self.max_step3_candidates_examined = self
            .max_step3_candidates_examined
            .max(o.max_step3_candidates_examined);
        self.max_membership_checks = self.max_membership_checks.max(o.max_membership_checks);
        self.disagreement_examples.extend(o.disagreement_examples);
        self.disagreement_examples.truncate(5);
        self
    }

    pub fn clean(&self) -> bool {
        self.disagreements == 0 && self.bound_violations == 0
    }
}

fn fold(results: impl ParallelIterator<Item = Result<PairReport>>) -> Result<PairReport> {
    results.try_reduce(PairReport::default, |a, b| Ok(a.merge(b)))
}

/// Runs the recognizer against the oracle on every labeled graph up to
/// `p_max` vertices and on the random battery.
pub fn sweep(r: &Recognizer, p_max: usize, battery: Option<RandomBattery>) -> Result<PairReport> {
    let mut report = PairReport::default();
    for order in 0..=p_max {
        let masks = 0..1u64 << pair_count(order);
        report =
            report.merge(fold(masks.into_par_iter().map(|mask| {
                PairReport::cell(r, &LabeledGraphs::graph(order, mask))
            }))?);
    }
    if let Some(b) = battery {
        report = report.merge(fold(
            (0..b.count)
                .into_par_iter()
                .map(|i| PairReport::cell(r, &b.graph(i)?)),
        )?);
    }
    report.p_spec = r.p_spec().to_string();
    report.q_spec = r.q_spec().to_string();
    report.tau = r.tau();
    Ok(report)
}

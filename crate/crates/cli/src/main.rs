//! `pqcolor`: recognize, check and experiment with `P ∘ Q` partitions.
//!
//! Exit codes: 0 decided, 1 input error, 2 procedure inapplicable (unbounded
//! property), 3 recognizer and oracle disagree.

mod input;
mod sweep;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pqcolor::graph::format::Format;
use pqcolor::properties::{clique_bound, co_clique_bound, CliqueBound};
use pqcolor::recognizer::{brute_force, Recognizer};
use pqcolor::reductions::{
    gh_combinator, search_witnesses, t6_gadget, t7_gadget, unique_partition, UniquePartitionWitness,
};
use pqcolor::{check, parse_spec, Decision, Error, Family, Graph, PropertySpec, RecognizerTrace};
use serde::Serialize;
use serde_json::json;

use crate::input::{read_graph, read_text, write_graph, write_text};
use crate::sweep::{RandomBattery, MAX_EXHAUSTIVE_ORDER};

/// Worker threads for `sweep`; defaults to one per core.
const WORKERS_ENV: &str = "PQCOLOR_WORKERS";

#[derive(Parser)]
#[command(
    name = "pqcolor",
    version,
    about = "Recognize graphs whose vertices split into a P part and a Q part"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is in P ∘ Q.
    Recognize(RecognizeArgs),
    /// Compare the recognizer with the oracle over all small graphs and a random battery.
    Sweep(SweepArgs),
    /// Print the Ramsey threshold tau(m, n) = R(m, n) - 1 as JSON.
    Tau { m: usize, n: usize },
    /// Test membership of a graph in one property.
    Check {
        spec: String,
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Build a 3-colouring reduction gadget: t6 adds a disjoint triangle, t7 a universal vertex.
    Gadget {
        kind: GadgetKind,
        input: Option<PathBuf>,
        output: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<Format>,
        /// Output format; defaults to the input format.
        #[arg(long, value_parser = parse_format)]
        to: Option<Format>,
    },
    /// Combine a graph with a uniquely partitionable host from a witness file.
    Gh {
        graph: PathBuf,
        witness: PathBuf,
        output: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<Format>,
        #[arg(long, value_parser = parse_format)]
        to: Option<Format>,
    },
    /// Check whether a graph has exactly one partition into the given properties,
    /// up to swapping parts with equal properties.
    VerifyUnique {
        graph: PathBuf,
        #[arg(required = true)]
        specs: Vec<String>,
        #[arg(long, value_parser = parse_format)]
        format: Option<Format>,
        #[arg(long)]
        json: bool,
    },
    /// Search small hosts for a uniquely partitionable graph and print its witness file.
    FindWitness {
        #[arg(long = "spec", required = true)]
        specs: Vec<String>,
        /// Number of leading specs on the P side.
        #[arg(long, default_value_t = 1)]
        additive_parts: usize,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
        #[arg(long, global = true, value_parser = parse_format, default_value = "graph6")]
        to: Format,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Convert between graph6, edge list and DIMACS.
    Convert {
        input: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        from: Option<Format>,
        #[arg(long, value_parser = parse_format)]
        to: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RecognizeArgs {
    /// Graph file; standard input when absent or `-`.
    input: Option<PathBuf>,
    #[arg(long)]
    p: String,
    #[arg(long)]
    q: String,
    #[arg(long, value_enum, default_value = "algorithm_a")]
    mode: Mode,
    /// Replace the computed tau; values below it may give wrong answers.
    #[arg(long)]
    tau_override: Option<u64>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// P side of a pair; repeat together with --q for several pairs.
    #[arg(long = "p", required = true)]
    p: Vec<String>,
    #[arg(long = "q", required = true)]
    q: Vec<String>,
    /// Largest order swept exhaustively.
    #[arg(long, default_value_t = 5)]
    p_max: usize,
    /// Number of random graphs after the exhaustive sweep.
    #[arg(long, default_value_t = 0)]
    random: usize,
    #[arg(long, default_value_t = 10)]
    random_order: usize,
    /// Fixed edge probability; by default densities from 0.2 to 0.8 are cycled.
    #[arg(long)]
    random_prob: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[value(name = "algorithm_a", alias = "algorithm-a")]
    AlgorithmA,
    Oracle,
    Both,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::AlgorithmA => "algorithm_a",
            Mode::Oracle => "oracle",
            Mode::Both => "both",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    T6,
    T7,
}

#[derive(Subcommand)]
enum GenFamily {
    Complete {
        n: usize,
    },
    Empty {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Random {
        order: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>().map_err(|e| e.to_string())
}

/// Why a command stopped, mapped onto the exit-code contract.
enum Failure {
    Input(anyhow::Error),
    Inapplicable(String),
    Disagreement(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn spec(text: &str) -> anyhow::Result<PropertySpec> {
    parse_spec(text).with_context(|| format!("in property {text:?}"))
}

fn bound(b: CliqueBound) -> Option<usize> {
    match b {
        CliqueBound::Bounded(v) => Some(v),
        CliqueBound::Unbounded => None,
    }
}

fn recognizer(p: PropertySpec, q: PropertySpec) -> Result<Recognizer, Failure> {
    Recognizer::new(p, q).map_err(|e| match e {
        Error::Unbounded(what) => {
            Failure::Inapplicable(format!("unbounded {what}; use --mode oracle"))
        }
        other => other.into(),
    })
}

#[derive(Serialize)]
struct CertificateRecord {
    part_a: Vec<usize>,
    part_rest: Vec<usize>,
}

#[derive(Serialize)]
struct DecisionRecord {
    member: bool,
    certificate: Option<CertificateRecord>,
    trace: RecognizerTrace,
    p_spec: String,
    q_spec: String,
    tau: Option<u64>,
    n: Option<usize>,
    m: Option<usize>,
    mode: &'static str,
    /// Oracle verdict, present in mode `both`.
    oracle_member: Option<bool>,
}

fn print_decision(record: &DecisionRecord, json: bool) -> anyhow::Result<()> {
    if json {
        return write_text(None, &serde_json::to_string_pretty(record)?);
    }
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!(
        "{} ∘ {}: {}\n",
        record.p_spec,
        record.q_spec,
        if record.member {
            "member"
        } else {
            "not a member"
        }
    );
    if let Some(c) = &record.certificate {
        out += &format!(
            "  A:      [{}]\n  V - A:  [{}]\n",
            list(&c.part_a),
            list(&c.part_rest)
        );
    }
    if let Some(tau) = record.tau {
        out += &format!(
            "  tau = {tau} (n = {}, m = {})\n",
            record.n.unwrap_or(0),
            record.m.unwrap_or(0)
        );
    }
    let t = &record.trace;
    out += &format!(
        "  step 2: {} rounds, {} candidates; step 3: {} candidates; {} membership checks",
        t.step2_iterations,
        t.step2_candidates_examined,
        t.step3_candidates_examined,
        t.membership_checks
    );
    if let Some(oracle) = record.oracle_member {
        out += &format!(
            "\n  oracle: {}",
            if oracle { "member" } else { "not a member" }
        );
    }
    write_text(None, &out)
}

fn cmd_recognize(a: RecognizeArgs) -> Outcome {
    let (p, q) = (spec(&a.p)?, spec(&a.q)?);
    let (g, _) = read_graph(a.input.as_deref(), a.format)?;
    let mut record = DecisionRecord {
        member: false,
        certificate: None,
        trace: RecognizerTrace::default(),
        p_spec: p.to_string(),
        q_spec: q.to_string(),
        tau: None,
        n: bound(clique_bound(&p)),
        m: bound(co_clique_bound(&q)),
        mode: a.mode.name(),
        oracle_member: None,
    };
    let fill = |record: &mut DecisionRecord, d: Decision| {
        record.member = d.member();
        record.certificate = d.certificate.map(|c| CertificateRecord {
            part_a: c.part_a.to_vec(),
            part_rest: c.part_rest.to_vec(),
        });
        record.trace = d.trace;
    };
    if a.mode == Mode::Oracle {
        if let (Some(n), Some(m)) = (record.n, record.m) {
            record.tau = Some(pqcolor::ramsey::tau(m, n).tau);
        }
        fill(&mut record, brute_force(&g, &p, &q)?);
        print_decision(&record, a.json)?;
        return Ok(());
    }
    let mut r = recognizer(p.clone(), q.clone())?;
    if let Some(t) = a.tau_override {
        if t < r.tau() {
            eprintln!(
                "warning: tau override {t} is below the computed tau {}; the answer may be wrong",
                r.tau()
            );
        }
        r = r.with_tau(t);
    }
    record.tau = Some(r.tau());
    fill(&mut record, r.recognize(&g)?);
    if a.mode == Mode::Both {
        let oracle = brute_force(&g, &p, &q)?.member();
        record.oracle_member = Some(oracle);
        print_decision(&record, a.json)?;
        if oracle != record.member {
            return Err(Failure::Disagreement(format!(
                "recognizer says {} but the oracle says {oracle}",
                record.member
            )));
        }
        return Ok(());
    }
    print_decision(&record, a.json)?;
    Ok(())
}

fn cmd_sweep(a: SweepArgs) -> Outcome {
    if a.p.len() != a.q.len() {
        return Err(anyhow!("--p given {} times but --q {} times", a.p.len(), a.q.len()).into());
    }
    if a.p_max > MAX_EXHAUSTIVE_ORDER {
        return Err(anyhow!("--p-max {} exceeds {MAX_EXHAUSTIVE_ORDER}", a.p_max).into());
    }
    let battery = (a.random > 0).then_some(RandomBattery {
        count: a.random,
        order: a.random_order,
        prob: a.random_prob,
        seed: a.seed,
    });
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let workers: usize = v
            .parse()
            .map_err(|_| anyhow!("{WORKERS_ENV}={v:?} is not a thread count"))?;
        pool = pool.num_threads(workers);
    }
    let pool = pool.build().map_err(|e| anyhow!("starting workers: {e}"))?;
    let mut reports = Vec::new();
    for (p, q) in a.p.iter().zip(&a.q) {
        let r = recognizer(spec(p)?, spec(q)?)?;
        reports.push(pool.install(|| sweep::sweep(&r, a.p_max, battery))?);
    }
    if a.json {
        write_text(
            None,
            &serde_json::to_string_pretty(&reports).map_err(anyhow::Error::from)?,
        )?;
    } else {
        for r in &reports {
            write_text(
                None,
                &format!(
                    "{} ∘ {} (tau = {}): {} graphs, {} members, {} agree, {} disagree, {} bound violations\n  \
                     max step 2 rounds {}, max step 2 candidates per round {}, max step 3 candidates {}",
                    r.p_spec,
                    r.q_spec,
                    r.tau,
                    r.graphs,
                    r.members,
                    r.agreements,
                    r.disagreements,
                    r.bound_violations,
                    r.max_step2_iterations,
                    r.max_step2_candidates_per_iteration,
                    r.max_step3_candidates_examined
                ),
            )?;
        }
    }
    match reports.iter().find(|r| !r.clean()) {
        Some(r) => Err(Failure::Disagreement(format!(
            "{} ∘ {}: {} disagreements, {} bound violations {:?}",
            r.p_spec, r.q_spec, r.disagreements, r.bound_violations, r.disagreement_examples
        ))),
        None => Ok(()),
    }
}

fn cmd_check(text: &str, input: Option<&Path>, format: Option<Format>, json: bool) -> Outcome {
    let s = spec(text)?;
    let (g, _) = read_graph(input, format)?;
    let member = check(&s, &g)?;
    if json {
        write_text(
            None,
            &json!({ "spec": s.to_string(), "member": member }).to_string(),
        )?;
    } else {
        write_text(None, &member.to_string())?;
    }
    Ok(())
}

fn cmd_verify_unique(
    graph: &Path,
    specs: &[String],
    format: Option<Format>,
    json: bool,
) -> Outcome {
    let specs = specs
        .iter()
        .map(|s| spec(s))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let (g, _) = read_graph(Some(graph), format)?;
    let partition = unique_partition(&g, &specs)?;
    let parts: Option<Vec<Vec<usize>>> =
        partition.map(|p| p.parts.iter().map(|s| s.to_vec()).collect());
    if json {
        let names: Vec<String> = specs.iter().map(PropertySpec::to_string).collect();
        let record = json!({ "unique": parts.is_some(), "parts": parts, "specs": names });
        write_text(
            None,
            &serde_json::to_string_pretty(&record).map_err(anyhow::Error::from)?,
        )?;
    } else {
        match parts {
            Some(parts) => write_text(None, &format!("unique: {parts:?}"))?,
            None => write_text(None, "not unique")?,
        }
    }
    Ok(())
}

fn cmd_find_witness(
    specs: &[String],
    additive_parts: usize,
    max_order: usize,
    output: Option<&Path>,
) -> Outcome {
    let specs = specs
        .iter()
        .map(|s| spec(s))
        .collect::<anyhow::Result<Vec<_>>>()?;
    if specs.len() < 2 {
        return Err(anyhow!("need at least two --spec values").into());
    }
    if max_order > pqcolor::graph::MAX_ENUMERATION_ORDER {
        return Err(anyhow!(
            "--max-order is capped at {}",
            pqcolor::graph::MAX_ENUMERATION_ORDER
        )
        .into());
    }
    let found = search_witnesses(&specs, additive_parts, max_order)?;
    let Some(w) = found.first() else {
        return Err(
            anyhow!("no uniquely partitionable host on at most {max_order} vertices").into(),
        );
    };
    write_text(output, &w.to_json())?;
    Ok(())
}

fn generate(family: GenFamily) -> pqcolor::Result<Graph> {
    match family {
        GenFamily::Complete { n } => Family::Complete(n),
        GenFamily::Empty { n } => Family::Empty(n),
        GenFamily::Path { n } => Family::Path(n),
        GenFamily::Cycle { n } => Family::Cycle(n),
        GenFamily::CompleteBipartite { a, b } => Family::CompleteBipartite(a, b),
        GenFamily::Random { order, prob, seed } => Family::Random { order, prob, seed },
    }
    .generate()
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize(a) => cmd_recognize(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Tau { m, n } => {
            if m == 0 || n == 0 {
                return Err(anyhow!("m and n must be at least 1").into());
            }
            let b = pqcolor::ramsey::tau(m, n);
            write_text(
                None,
                &serde_json::to_string(&b).map_err(anyhow::Error::from)?,
            )?;
            Ok(())
        }
        Command::Check {
            spec,
            input,
            format,
            json,
        } => cmd_check(&spec, input.as_deref(), format, json),
        Command::Gadget {
            kind,
            input,
            output,
            format,
            to,
        } => {
            let (g, from) = read_graph(input.as_deref(), format)?;
            let out = match kind {
                GadgetKind::T6 => t6_gadget(&g)?,
                GadgetKind::T7 => t7_gadget(&g)?,
            };
            write_graph(output.as_deref(), to.unwrap_or(from), &out)?;
            Ok(())
        }
        Command::Gh {
            graph,
            witness,
            output,
            format,
            to,
        } => {
            let (g, from) = read_graph(Some(&graph), format)?;
            let w = UniquePartitionWitness::from_json(&read_text(Some(&witness))?)
                .with_context(|| format!("in witness {}", witness.display()))?;
            write_graph(
                output.as_deref(),
                to.unwrap_or(from),
                &gh_combinator(&g, &w)?,
            )?;
            Ok(())
        }
        Command::VerifyUnique {
            graph,
            specs,
            format,
            json,
        } => cmd_verify_unique(&graph, &specs, format, json),
        Command::FindWitness {
            specs,
            additive_parts,
            max_order,
            output,
        } => cmd_find_witness(&specs, additive_parts, max_order, output.as_deref()),
        Command::Gen { family, to, output } => {
            write_graph(output.as_deref(), to, &generate(family)?)?;
            Ok(())
        }
        Command::Convert {
            input,
            from,
            to,
            output,
        } => {
            let (g, _) = read_graph(input.as_deref(), from)?;
            write_graph(output.as_deref(), to, &g)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage mistakes are input errors; --help and --version are not
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Inapplicable(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

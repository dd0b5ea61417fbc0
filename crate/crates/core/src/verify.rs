//! Exhaustive verification of the boundary laws over a corpus of connected
//! graphs, with a deterministic JSON report.
//!
//! Per-graph laws run over every corpus graph. The two edge-attachment laws
//! run over every ordered pair of corpus graphs on at most
//! [`PAIR_LAW_MAX_ORDER`] vertices and every choice of junction vertices. The
//! subgraph-witness law is independent of the corpus: it embeds each witness
//! fixture into lattice hosts and checks the marked vertex is a boundary
//! vertex of the host.

use std::collections::BTreeSet;
use std::io::BufRead;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::boundary::{
    analyze_biased, beta_pair, isoperimetric_check, steinerberger_literal, BoundaryAnalysis,
};
use crate::classifier::{agrees, recognize};
use crate::error::{Error, Result};
use crate::families::{
    base_case_fixture, d_graph, join_with_edge, l_graph, n_graph, t_graph, x_graph, Fixture,
};
use crate::graph::{
    distance_matrix, enumerate_connected, graph6_encode, read_graph6_lines, Coord, DistanceMatrix,
    Graph,
};

/// Largest order of the graphs paired up by the edge-attachment laws.
pub const PAIR_LAW_MAX_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    Containment,
    Isoperimetric,
    Deg2Cycle,
    Deg2Cut,
    BetaAttach,
    BoundaryAttach,
    NeighborLipschitz,
    Diam2,
    MainThm,
    CriterionEquiv,
    PeripheralCejz,
    SubgraphWitness,
}

impl Law {
    pub const ALL: [Law; 12] = [
        Law::Containment,
        Law::Isoperimetric,
        Law::Deg2Cycle,
        Law::Deg2Cut,
        Law::BetaAttach,
        Law::BoundaryAttach,
        Law::NeighborLipschitz,
        Law::Diam2,
        Law::MainThm,
        Law::CriterionEquiv,
        Law::PeripheralCejz,
        Law::SubgraphWitness,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Law::Containment => "containment",
            Law::Isoperimetric => "isoperimetric",
            Law::Deg2Cycle => "deg2-cycle",
            Law::Deg2Cut => "deg2-cut",
            Law::BetaAttach => "beta-attach",
            Law::BoundaryAttach => "boundary-attach",
            Law::NeighborLipschitz => "neighbor-lipschitz",
            Law::Diam2 => "diam2",
            Law::MainThm => "main-thm",
            Law::CriterionEquiv => "criterion-equiv",
            Law::PeripheralCejz => "peripheral-cejz",
            Law::SubgraphWitness => "subgraph-witness",
        }
    }

    fn is_pair_law(&self) -> bool {
        matches!(self, Law::BetaAttach | Law::BoundaryAttach)
    }

    /// `all`, or a comma-separated list of law ids. The result is in registry
    /// order without duplicates.
    pub fn parse_list(s: &str) -> Result<Vec<Law>> {
        if s.trim() == "all" {
            return Ok(Law::ALL.to_vec());
        }
        let set: BTreeSet<Law> = s
            .split(',')
            .map(|id| id.trim().parse())
            .collect::<Result<_>>()?;
        if set.is_empty() {
            return Err(Error::InvalidParameter("no laws selected".into()));
        }
        Ok(set.into_iter().collect())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown law `{s}`")))
    }
}

/// Connected graphs to verify against, in a fixed order.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub source: String,
    pub graphs: Vec<Graph>,
    pub skipped_disconnected: usize,
}

impl Corpus {
    /// Keeps the connected graphs, counting the rest.
    pub fn from_graphs(
        source: impl Into<String>,
        graphs: impl IntoIterator<Item = Graph>,
    ) -> Corpus {
        let mut kept = Vec::new();
        let mut skipped = 0;
        for g in graphs {
            if g.order() > 0 && g.is_connected() {
                kept.push(g);
            } else {
                skipped += 1;
            }
        }
        Corpus {
            source: source.into(),
            graphs: kept,
            skipped_disconnected: skipped,
        }
    }

    /// Every connected graph on `1..=max_n` vertices up to isomorphism.
    pub fn enumerated(max_n: usize) -> Result<Corpus> {
        let mut graphs = Vec::new();
        for n in 1..=max_n {
            graphs.extend(enumerate_connected(n)?);
        }
        if max_n == 0 {
            enumerate_connected(0)?;
        }
        Ok(Corpus::from_graphs(
            format!("enumeration n<={max_n}"),
            graphs,
        ))
    }

    /// One graph6 string per line. Malformed lines are errors.
    pub fn from_graph6<R: BufRead>(source: impl Into<String>, reader: R) -> Result<Corpus> {
        let graphs: Vec<Graph> = read_graph6_lines(reader).collect::<Result<_>>()?;
        Ok(Corpus::from_graphs(source, graphs))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub laws: Vec<Law>,
    /// Worker threads; `None` uses rayon's default pool.
    pub threads: Option<usize>,
    /// Whether to record wall time. Without it reports are byte-identical
    /// across runs.
    pub timing: bool,
    /// Added to every β before boundary membership is decided. Nonzero values
    /// deliberately break the implementation to show the laws catch it.
    pub beta_bias: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            laws: Law::ALL.to_vec(),
            threads: None,
            timing: true,
            beta_bias: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub source: String,
    pub graphs: usize,
    pub skipped_disconnected: usize,
    pub min_n: Option<usize>,
    pub max_n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// graph6 of the graph in which the law failed.
    pub graph: String,
    pub vertices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    /// Cases the law was evaluated on: graphs for per-graph laws, junction
    /// choices for the attachment laws, host embeddings for the
    /// subgraph-witness law.
    pub checked: usize,
    /// Corpus graphs outside the law's hypothesis.
    pub not_applicable: usize,
    pub scope: &'static str,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub corpus: CorpusSummary,
    pub beta_bias: i64,
    pub laws: Vec<LawResult>,
    pub wall_time_ms: Option<u64>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn scope(law: Law) -> &'static str {
    match law {
        Law::Containment => "all corpus graphs",
        Law::Isoperimetric => "corpus graphs with at least two vertices",
        Law::Deg2Cycle | Law::Deg2Cut => "corpus graphs with a degree-2 vertex",
        Law::BetaAttach | Law::BoundaryAttach => {
            "ordered pairs of corpus graphs on at most 5 vertices, all junction pairs"
        }
        Law::NeighborLipschitz => "all corpus graphs",
        Law::Diam2 => "corpus graphs with diameter at most 2 or minimum degree at least (n-1)/2",
        Law::MainThm => "all corpus graphs",
        Law::CriterionEquiv => "all corpus graphs",
        Law::PeripheralCejz => "all corpus graphs",
        Law::SubgraphWitness => "witness fixtures embedded in lattice hosts (corpus independent)",
    }
}

/// Outcome of one law on one case: `None` when outside its hypothesis.
type Outcome = Option<Vec<Violation>>;

fn violation(g6: &str, vertices: Vec<usize>, detail: impl Into<String>) -> Violation {
    Violation {
        graph: g6.to_string(),
        vertices,
        detail: detail.into(),
    }
}

/// Runs the selected laws over the corpus.
pub fn verify_laws(corpus: &Corpus, options: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let run = || run_laws(corpus, options);
    let laws = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let pass = laws.iter().all(|l| l.violations.is_empty());
    let sizes = corpus.graphs.iter().map(Graph::order);
    Ok(VerificationReport {
        corpus: CorpusSummary {
            source: corpus.source.clone(),
            graphs: corpus.graphs.len(),
            skipped_disconnected: corpus.skipped_disconnected,
            min_n: sizes.clone().min(),
            max_n: sizes.max(),
        },
        beta_bias: options.beta_bias,
        laws,
        wall_time_ms: options.timing.then(|| start.elapsed().as_millis() as u64),
        pass,
    })
}

fn run_laws(corpus: &Corpus, options: &VerifyOptions) -> Result<Vec<LawResult>> {
    let bias = options.beta_bias;
    let graph_laws: Vec<Law> = options
        .laws
        .iter()
        .copied()
        .filter(|l| !l.is_pair_law() && *l != Law::SubgraphWitness)
        .collect();
    let pair_laws: Vec<Law> = options
        .laws
        .iter()
        .copied()
        .filter(Law::is_pair_law)
        .collect();

    let per_graph: Vec<Vec<Outcome>> = corpus
        .graphs
        .par_iter()
        .map(|g| check_graph(g, &graph_laws, bias))
        .collect::<Result<_>>()?;

    let pair_outcomes = if pair_laws.is_empty() {
        Vec::new()
    } else {
        check_pairs(corpus, &pair_laws, bias)?
    };

    let mut results = Vec::new();
    for &law in &options.laws {
        let mut result = LawResult {
            law: law.id(),
            checked: 0,
            not_applicable: 0,
            scope: scope(law),
            violations: Vec::new(),
        };
        let outcomes: Vec<&Outcome> = if law.is_pair_law() {
            let i = pair_laws.iter().position(|&l| l == law).expect("selected");
            pair_outcomes
                .iter()
                .map(|case: &Vec<Outcome>| &case[i])
                .collect()
        } else if law == Law::SubgraphWitness {
            Vec::new()
        } else {
            let i = graph_laws.iter().position(|&l| l == law).expect("selected");
            per_graph.iter().map(|case| &case[i]).collect()
        };
        if law == Law::SubgraphWitness {
            for outcome in check_subgraph_witness(bias)? {
                result.checked += 1;
                result.violations.extend(outcome);
            }
        }
        for outcome in outcomes {
            match outcome {
                Some(v) => {
                    result.checked += 1;
                    result.violations.extend(v.iter().cloned());
                }
                None => result.not_applicable += 1,
            }
        }
        if law.is_pair_law() {
            result.not_applicable = corpus
                .graphs
                .iter()
                .filter(|g| g.order() > PAIR_LAW_MAX_ORDER)
                .count();
        }
        results.push(result);
    }
    Ok(results)
}

fn check_graph(g: &Graph, laws: &[Law], bias: i64) -> Result<Vec<Outcome>> {
    let d = distance_matrix(g)?;
    let a = analyze_biased(g, &d, bias);
    let g6 = graph6_encode(g);
    let mut cuts: Option<Vec<usize>> = None;
    laws.iter()
        .map(|&law| {
            Ok(match law {
                Law::Containment => Some(containment(&a, &g6)),
                Law::Isoperimetric => isoperimetric(&a, &g6),
                Law::Deg2Cycle => deg2_cycle(g, &a, &g6),
                Law::Deg2Cut => {
                    let cuts = match &cuts {
                        Some(c) => c,
                        None => cuts.insert(g.cut_vertices()?),
                    };
                    deg2_cut(g, &a, cuts, &g6)
                }
                Law::NeighborLipschitz => Some(neighbor_lipschitz(g, &d, &g6)),
                Law::Diam2 => diam2(g, &d, &a, &g6),
                Law::MainThm => Some(main_thm(g, &a, &g6)?),
                Law::CriterionEquiv => Some(criterion_equiv(g, &d, &a, bias, &g6)),
                Law::PeripheralCejz => Some(peripheral_cejz(&d, &a, &g6)),
                Law::BetaAttach | Law::BoundaryAttach | Law::SubgraphWitness => {
                    unreachable!("handled outside the per-graph pass")
                }
            })
        })
        .collect()
}

fn containment(a: &BoundaryAnalysis, g6: &str) -> Vec<Violation> {
    let bad: Vec<usize> = a
        .vertices
        .iter()
        .filter(|v| v.in_cejz && !v.in_steinerberger)
        .map(|v| v.id)
        .collect();
    if bad.is_empty() {
        Vec::new()
    } else {
        vec![violation(
            g6,
            bad,
            "in the CEJZ boundary but not the Steinerberger boundary",
        )]
    }
}

fn isoperimetric(a: &BoundaryAnalysis, g6: &str) -> Outcome {
    let check = isoperimetric_check(a).ok()?;
    Some(if check.holds {
        Vec::new()
    } else {
        vec![violation(
            g6,
            Vec::new(),
            format!("|boundary| = {} < {}", check.boundary_size, check.bound),
        )]
    })
}

fn degree_two(g: &Graph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == 2).collect()
}

fn deg2_cycle(g: &Graph, a: &BoundaryAnalysis, g6: &str) -> Outcome {
    let vs = degree_two(g);
    if vs.is_empty() {
        return None;
    }
    let bad: Vec<usize> = vs
        .into_iter()
        .filter(|&v| a.vertices[v].in_steinerberger != g.has_cycle_through(v))
        .collect();
    Some(if bad.is_empty() {
        Vec::new()
    } else {
        vec![violation(
            g6,
            bad,
            "boundary membership differs from lying on a cycle",
        )]
    })
}

fn deg2_cut(g: &Graph, a: &BoundaryAnalysis, cuts: &[usize], g6: &str) -> Outcome {
    let vs = degree_two(g);
    if vs.is_empty() {
        return None;
    }
    let bad: Vec<usize> = vs
        .into_iter()
        .filter(|&v| !a.vertices[v].in_steinerberger && !cuts.contains(&v))
        .collect();
    Some(if bad.is_empty() {
        Vec::new()
    } else {
        vec![violation(
            g6,
            bad,
            "degree-2 vertex is neither boundary nor cut vertex",
        )]
    })
}

fn neighbor_lipschitz(g: &Graph, d: &DistanceMatrix, g6: &str) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in 0..g.order() {
        for u in 0..g.order() {
            for &w in g.neighbors(v) {
                if d.get(v, u).abs_diff(d.get(w, u)) > 1 {
                    out.push(violation(
                        g6,
                        vec![v, w, u],
                        "neighbors differ by more than 1",
                    ));
                }
            }
            let closer = g
                .neighbors(v)
                .iter()
                .any(|&w| d.get(w, u) + 1 == d.get(v, u));
            if v != u && !closer {
                out.push(violation(g6, vec![v, u], "no neighbor one step closer"));
            }
        }
    }
    out
}

fn diam2(g: &Graph, d: &DistanceMatrix, a: &BoundaryAnalysis, g6: &str) -> Outcome {
    let n = g.order();
    let diam = d.diameter();
    let dense = 2 * g.min_degree() + 1 >= n;
    if diam > 2 && !dense {
        return None;
    }
    let mut out = Vec::new();
    if diam > 2 {
        out.push(violation(
            g6,
            Vec::new(),
            format!("minimum degree {} but diameter {diam}", g.min_degree()),
        ));
        return Some(out);
    }
    let centers: Vec<usize> = (0..n).filter(|&v| d.eccentricity(v) == 1).collect();
    let expected: Vec<usize> = match centers.as_slice() {
        [only] => (0..n).filter(|v| v != only).collect(),
        _ => (0..n).collect(),
    };
    let actual = a.steinerberger_set();
    if actual != expected {
        out.push(violation(
            g6,
            actual
                .iter()
                .copied()
                .filter(|v| !expected.contains(v))
                .chain(expected.iter().copied().filter(|v| !actual.contains(v)))
                .collect(),
            format!("boundary {actual:?}, expected {expected:?}"),
        ));
    }
    Some(out)
}

fn main_thm(g: &Graph, a: &BoundaryAnalysis, g6: &str) -> Result<Vec<Violation>> {
    let family = recognize(g)?;
    let size = a.boundary_size();
    Ok(if agrees(g, &family, size)? {
        Vec::new()
    } else {
        vec![violation(
            g6,
            Vec::new(),
            format!("recognized {} but |boundary| = {size}", family.tag()),
        )]
    })
}

fn criterion_equiv(
    g: &Graph,
    d: &DistanceMatrix,
    a: &BoundaryAnalysis,
    bias: i64,
    g6: &str,
) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.order();
    for info in &a.vertices {
        let v = info.id;
        if info.in_steinerberger != steinerberger_literal(g, d, v) {
            out.push(violation(
                g6,
                vec![v],
                "integer criterion disagrees with mean-distance form",
            ));
        }
        if n >= 2 && info.in_steinerberger != (info.beta >= 1) {
            out.push(violation(
                g6,
                vec![v],
                "membership disagrees with beta >= 1",
            ));
        }
        if beta_pair(g, d, v, v) != -(g.degree(v) as i64) {
            out.push(violation(g6, vec![v], "beta(v, v) differs from -deg(v)"));
        }
        let attains = !info.beta_witnesses.is_empty()
            && info
                .beta_witnesses
                .iter()
                .all(|&u| beta_pair(g, d, v, u) + bias == info.beta);
        if !attains {
            out.push(violation(
                g6,
                vec![v],
                "recorded witnesses do not attain beta",
            ));
        }
    }
    out
}

fn peripheral_cejz(d: &DistanceMatrix, a: &BoundaryAnalysis, g6: &str) -> Vec<Violation> {
    let bad: Vec<usize> = d
        .peripheral_vertices()
        .into_iter()
        .filter(|&v| !a.vertices[v].in_cejz)
        .collect();
    if bad.is_empty() {
        Vec::new()
    } else {
        vec![violation(
            g6,
            bad,
            "peripheral vertex outside the CEJZ boundary",
        )]
    }
}

struct Small {
    graph: Graph,
    analysis: BoundaryAnalysis,
}

fn check_pairs(corpus: &Corpus, laws: &[Law], bias: i64) -> Result<Vec<Vec<Outcome>>> {
    let small: Vec<Small> = corpus
        .graphs
        .iter()
        .filter(|g| g.order() <= PAIR_LAW_MAX_ORDER)
        .map(|g| {
            let d = distance_matrix(g)?;
            Ok(Small {
                analysis: analyze_biased(g, &d, bias),
                graph: g.clone(),
            })
        })
        .collect::<Result<_>>()?;
    let mut cases = Vec::new();
    for i in 0..small.len() {
        for j in 0..small.len() {
            for v1 in 0..small[i].graph.order() {
                for v2 in 0..small[j].graph.order() {
                    cases.push((i, j, v1, v2));
                }
            }
        }
    }
    cases
        .par_iter()
        .map(|&(i, j, v1, v2)| {
            let (s1, s2) = (&small[i], &small[j]);
            let g = join_with_edge(&s1.graph, v1, &s2.graph, v2)?;
            let d = distance_matrix(&g)?;
            let a = analyze_biased(&g, &d, bias);
            let g6 = graph6_encode(&g);
            let context = format!(
                "G1 = {} at {v1}, G2 = {} at {v2}",
                graph6_encode(&s1.graph),
                graph6_encode(&s2.graph)
            );
            Ok(laws
                .iter()
                .map(|&law| match law {
                    Law::BetaAttach => beta_attach(s1, v1, &a, &g6, &context),
                    Law::BoundaryAttach => Some(boundary_attach(s1, v1, s2, v2, &a, &g6, &context)),
                    _ => unreachable!("only attachment laws are paired"),
                })
                .collect())
        })
        .collect()
}

fn beta_attach(s1: &Small, v1: usize, a: &BoundaryAnalysis, g6: &str, context: &str) -> Outcome {
    if s1.graph.order() < 2 {
        return None;
    }
    let mut out = Vec::new();
    for v in 0..s1.graph.order() {
        let before = s1.analysis.vertices[v].beta;
        let expected = if v == v1 { before - 1 } else { before };
        let after = a.vertices[v].beta;
        if after != expected {
            out.push(violation(
                g6,
                vec![v],
                format!("{context}: beta {before} -> {after}, expected {expected}"),
            ));
        }
    }
    Some(out)
}

fn boundary_attach(
    s1: &Small,
    v1: usize,
    s2: &Small,
    v2: usize,
    a: &BoundaryAnalysis,
    g6: &str,
    context: &str,
) -> Vec<Violation> {
    let off = s1.graph.order();
    let drops = |s: &Small, v: usize| s.graph.order() >= 2 && s.analysis.vertices[v].beta == 1;
    let mut expected: BTreeSet<usize> = s1.analysis.steinerberger_set().into_iter().collect();
    expected.extend(s2.analysis.steinerberger_set().into_iter().map(|v| v + off));
    if drops(s1, v1) {
        expected.remove(&v1);
    }
    if drops(s2, v2) {
        expected.remove(&(v2 + off));
    }
    let actual: BTreeSet<usize> = a.steinerberger_set().into_iter().collect();
    let mut out = Vec::new();
    if actual != expected {
        out.push(violation(
            g6,
            actual.symmetric_difference(&expected).copied().collect(),
            format!("{context}: boundary {actual:?}, expected {expected:?}"),
        ));
    }
    let floor = s1.analysis.boundary_size().max(s2.analysis.boundary_size());
    if actual.len() < floor {
        out.push(violation(
            g6,
            Vec::new(),
            format!("{context}: |boundary| = {} below {floor}", actual.len()),
        ));
    }
    out
}

/// A host graph for a witness fixture, with the host vertex `v` must map to.
pub struct WitnessCase {
    pub fixture: usize,
    pub host_name: String,
    pub host: Graph,
    pub pin: Option<Coord>,
}

/// Fixture-in-host cases: each fixture inside the lattice graphs where the
/// classification argument locates it.
pub fn witness_cases() -> Result<Vec<WitnessCase>> {
    let half = |x2, y2| Coord::halves(x2, y2);
    let mut cases = Vec::new();
    let mut add = |fixture: usize, host_name: String, host: Graph, pin: Option<Coord>| {
        cases.push(WitnessCase {
            fixture,
            host_name,
            host,
            pin,
        })
    };
    for (a, c) in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 3)] {
        let all_w = n_graph(a, c, None)?;
        add(1, format!("N({a},{c})"), all_w, Some(Coord::int(1, 0)));
        let one = [half(1, 1)];
        add(
            2,
            format!("N({a},{c}; W={{(1/2,1/2)}})"),
            n_graph(a, c, Some(&one))?,
            Some(Coord::int(1, 0)),
        );
        add(
            3,
            format!("N({a},{c}; W={{}})"),
            n_graph(a, c, Some(&[]))?,
            Some(Coord::int(1, 0)),
        );
    }
    // the transposed situation, with v at (0, 1)
    add(
        1,
        "N(1,2)".into(),
        n_graph(1, 2, None)?,
        Some(Coord::int(0, 1)),
    );
    add(
        3,
        "N(1,2; W={})".into(),
        n_graph(1, 2, Some(&[]))?,
        Some(Coord::int(0, 1)),
    );
    for c in 2..=4 {
        add(
            4,
            format!("X({},{c})", 2),
            x_graph(2, c)?,
            Some(Coord::int(0, 1)),
        );
    }
    for (a, c) in [(3, 3), (3, 4), (4, 4)] {
        add(5, format!("X({a},{c})"), x_graph(a, c)?, Some(half(1, 1)));
    }
    for (a, c) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let pin = Some(half(2 * a as i64 - 1, 2 * c as i64 + 1));
        add(5, format!("T({a},{c})"), t_graph(a, c, None)?, pin);
        let column: Vec<Coord> = (0..=c as i64 + 1)
            .map(|y| Coord::int(a as i64, y))
            .collect();
        add(
            6,
            format!("T({a},{c}; W=column x={a})"),
            t_graph(a, c, Some(&column))?,
            pin,
        );
    }
    for c in 2..=4 {
        add(
            7,
            format!("T(1,{c})"),
            t_graph(1, c, None)?,
            Some(Coord::int(1, 1)),
        );
    }
    // The fixtures for D and L are drawn with diagonals of the opposite
    // slope to the generator's v(x+1,y) - w(x,y+1) edges, so the vertex
    // positions are mirrored top to bottom: (0,1) becomes (0,c-1) and
    // (1,0) becomes (1,c). G8 is D(2,2) itself and has no neighborhood-exact
    // embedding in any larger D.
    add(8, "D(2,2)".into(), d_graph(2, 2)?, Some(Coord::int(0, 1)));
    for (a, c) in [(1, 2), (1, 3), (2, 1), (3, 1)] {
        add(9, format!("D({a},{c})"), d_graph(a, c)?, None);
    }
    for (a, c) in [(2, 1), (2, 2), (3, 2)] {
        add(
            9,
            format!("L({a},{c})"),
            l_graph(a, c)?,
            Some(Coord::int(1, c as i64)),
        );
    }
    Ok(cases)
}

/// An injective edge-preserving map of the fixture into `host` that sends
/// the fixture's `v` onto a vertex with exactly the image neighborhood, and
/// `v`, `u` onto vertices at distance 2. `pin` fixes the image of `v`.
pub fn embed_witness(
    f: &Fixture,
    host: &Graph,
    dh: &DistanceMatrix,
    pin: Option<usize>,
) -> Option<Vec<usize>> {
    let g = &f.graph;
    // breadth-first from v, so every later vertex has a placed neighbor
    let mut order = vec![f.v];
    let mut seen = vec![false; g.order()];
    seen[f.v] = true;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
    }
    let starts: Vec<usize> = match pin {
        Some(p) => vec![p],
        None => (0..host.order()).collect(),
    };
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; host.order()];
    for s in starts {
        if host.degree(s) != g.degree(f.v) {
            continue;
        }
        map[f.v] = s;
        used[s] = true;
        if extend_embedding(f, host, dh, &order, 1, &mut map, &mut used) {
            return Some(map);
        }
        used[s] = false;
    }
    None
}

fn extend_embedding(
    f: &Fixture,
    host: &Graph,
    dh: &DistanceMatrix,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let g = &f.graph;
    if depth == order.len() {
        return dh.get(map[f.v], map[f.u]) == 2;
    }
    let x = order[depth];
    let anchor = g
        .neighbors(x)
        .iter()
        .copied()
        .find(|&y| map[y] != usize::MAX)
        .expect("breadth-first order has a placed neighbor");
    for &cand in host.neighbors(map[anchor]) {
        if used[cand] {
            continue;
        }
        let consistent = g
            .neighbors(x)
            .iter()
            .all(|&y| map[y] == usize::MAX || host.has_edge(cand, map[y]));
        // the image of N(v) must be all of the host neighborhood of v's image
        if !consistent || (g.has_edge(x, f.v) != host.has_edge(cand, map[f.v])) {
            continue;
        }
        map[x] = cand;
        used[cand] = true;
        if extend_embedding(f, host, dh, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[x] = usize::MAX;
    }
    false
}

fn check_subgraph_witness(bias: i64) -> Result<Vec<Vec<Violation>>> {
    witness_cases()?
        .into_iter()
        .map(|case| {
            let f = base_case_fixture(case.fixture)?;
            let dh = distance_matrix(&case.host)?;
            let a = analyze_biased(&case.host, &dh, bias);
            let g6 = graph6_encode(&case.host);
            let pin = match case.pin {
                Some(c) => Some(case.host.vertex_at(c).ok_or_else(|| {
                    Error::InvalidParameter(format!("{} has no vertex at {c}", case.host_name))
                })?),
                None => None,
            };
            let label = format!("G{} in {}", case.fixture, case.host_name);
            Ok(match embed_witness(&f, &case.host, &dh, pin) {
                None => vec![violation(
                    &g6,
                    pin.into_iter().collect(),
                    format!("{label}: no embedding"),
                )],
                Some(map) if !a.vertices[map[f.v]].in_steinerberger => vec![violation(
                    &g6,
                    vec![map[f.v]],
                    format!("{label}: image of v is not a boundary vertex"),
                )],
                Some(_) => Vec::new(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_ids_round_trip() {
        for law in Law::ALL {
            assert_eq!(law.id().parse::<Law>().unwrap(), law);
        }
        assert_eq!(Law::parse_list("all").unwrap().len(), 12);
        assert_eq!(
            Law::parse_list("diam2,containment,diam2").unwrap(),
            vec![Law::Containment, Law::Diam2]
        );
        assert!(Law::parse_list("containment,bogus").is_err());
    }

    #[test]
    fn small_corpus_passes() {
        let corpus = Corpus::enumerated(4).unwrap();
        assert_eq!(corpus.graphs.len(), 10);
        let report = verify_laws(&corpus, &VerifyOptions::default()).unwrap();
        assert!(report.pass, "{}", report.to_json());
    }

    #[test]
    fn mutation_is_caught() {
        let corpus = Corpus::enumerated(3).unwrap();
        let options = VerifyOptions {
            laws: vec![Law::Containment, Law::CriterionEquiv],
            beta_bias: -1,
            ..VerifyOptions::default()
        };
        let report = verify_laws(&corpus, &options).unwrap();
        assert!(!report.pass);
        assert!(report.laws.iter().all(|l| !l.violations.is_empty()));
    }

    #[test]
    fn file_corpus_skips_disconnected() {
        let corpus = Corpus::from_graph6("inline", "A_\nA?\nBw\n".as_bytes()).unwrap();
        assert_eq!(corpus.graphs.len(), 2);
        assert_eq!(corpus.skipped_disconnected, 1);
    }

    #[test]
    fn untimed_reports_are_identical() {
        let corpus = Corpus::enumerated(4).unwrap();
        let options = VerifyOptions {
            timing: false,
            ..VerifyOptions::default()
        };
        let a = verify_laws(&corpus, &options).unwrap().to_json();
        let single = VerifyOptions {
            threads: Some(1),
            ..options.clone()
        };
        let b = verify_laws(&corpus, &single).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"wall_time_ms\": null"));
    }
}

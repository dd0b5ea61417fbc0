//! `graph-boundary`: analyze, classify, generate and exhaustively verify
//! graph boundaries from the command line.
//!
//! Exit codes: 0 success (or a passing verification), 1 a verification
//! found violations, 2 usage or input errors.

use std::fs::File;
use std::io::{self, BufReader, Read};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use graph_boundary::boundary::{full_analysis, BoundaryAnalysis};
use graph_boundary::classifier::classify;
use graph_boundary::export::{coords_json, to_dot};
use graph_boundary::families::{self, base_case_fixture, fig2_core, Fig2Core};
use graph_boundary::graph::{enumerate_connected, graph6_decode, graph6_encode, read_graph6_lines};
use graph_boundary::verify::{verify_laws, Corpus, Law, VerifyOptions};
use graph_boundary::Graph;

#[derive(Parser)]
#[command(
    name = "graph-boundary",
    version,
    about = "Steinerberger and CEJZ graph boundaries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-vertex β, eccentricity and boundary membership.
    Analyze {
        /// A graph6 string, a file with one graph6 per line, or `-` for stdin.
        input: String,
        /// Print the analysis as JSON (one object per line).
        #[arg(long)]
        json: bool,
    },
    /// Recognize the small-boundary family a graph belongs to.
    Classify {
        /// A graph6 string, a file with one graph6 per line, or `-` for stdin.
        input: String,
    },
    /// Build a named graph.
    Generate(GenerateArgs),
    /// Check the boundary laws on an exhaustive or supplied corpus.
    Verify(VerifyArgs),
    /// Quick end-to-end health check, including a negative control.
    Selftest,
}

#[derive(Args)]
struct GenerateArgs {
    /// path, cycle, complete, star, spider, double-spider, tripod, barbell,
    /// grid, n, x, t, d, l, core, fixture.
    family: String,
    /// Integer parameters, or the core name for `core` (e.g. `X1c(3)`).
    params: Vec<String>,
    /// graph6 output (the default).
    #[arg(long, group = "format")]
    g6: bool,
    /// Graphviz DOT with β labels and boundary vertices filled.
    #[arg(long, group = "format")]
    dot: bool,
    /// JSON sidecar of the exact coordinate labels.
    #[arg(long, group = "format")]
    coords: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list of law ids.
    #[arg(long, default_value = "all")]
    laws: String,
    /// Enumerate every connected graph up to this order (at most 7).
    #[arg(long, required_unless_present = "corpus")]
    max_n: Option<usize>,
    /// Verify the graphs of a graph6 file instead of the enumeration.
    #[arg(long, conflicts_with = "max_n")]
    corpus: Option<String>,
    /// Leave `wall_time_ms` null so reports are byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Add this offset to every β before deciding boundary membership, to
    /// demonstrate that the laws detect a broken implementation.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    mutate: i64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze { input, json } => {
            for g in read_input(&input)? {
                let analysis = full_analysis(&g)?;
                if json {
                    println!("{}", analysis.to_json());
                } else {
                    print!("{}", render_analysis(&analysis));
                }
            }
            Ok(0)
        }
        Command::Classify { input } => {
            for g in read_input(&input)? {
                println!("{}", classify(&g)?.to_json());
            }
            Ok(0)
        }
        Command::Generate(args) => {
            let g = generate(&args.family, &args.params)?;
            if args.dot {
                let analysis = full_analysis(&g).ok();
                print!("{}", to_dot(&g, analysis.as_ref()));
            } else if args.coords {
                println!("{}", coords_json(&g));
            } else {
                println!("{}", graph6_encode(&g));
            }
            Ok(0)
        }
        Command::Verify(args) => verify(args),
        Command::Selftest => selftest(),
    }
}

/// A graph6 literal, a graph6 file, or `-` for stdin.
fn read_input(input: &str) -> Result<Vec<Graph>> {
    let graphs = if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        read_graph6_lines(text.as_bytes()).collect::<graph_boundary::Result<Vec<_>>>()?
    } else if Path::new(input).is_file() {
        let file = File::open(input).with_context(|| format!("opening {input}"))?;
        read_graph6_lines(BufReader::new(file))
            .collect::<graph_boundary::Result<Vec<_>>>()
            .with_context(|| format!("reading {input}"))?
    } else {
        vec![graph6_decode(input)
            .with_context(|| format!("`{input}` is neither a readable file nor valid graph6"))?]
    };
    if graphs.is_empty() {
        bail!("no graphs in {input}");
    }
    Ok(graphs)
}

fn render_analysis(a: &BoundaryAnalysis) -> String {
    let mut out = format!(
        "n={} diameter={} max_degree={} |boundary|={} |cejz|={}\n",
        a.vertex_count,
        a.diameter,
        a.max_degree,
        a.boundary_size(),
        a.cejz_size()
    );
    out.push_str("vertex  ecc  beta  boundary  cejz\n");
    for v in &a.vertices {
        out.push_str(&format!(
            "{:>6} {:>4} {:>5} {:>9} {:>5}\n",
            v.id,
            v.eccentricity,
            v.beta,
            if v.in_steinerberger { "yes" } else { "no" },
            if v.in_cejz { "yes" } else { "no" },
        ));
    }
    out
}

fn int_params(family: &str, params: &[String], count: usize) -> Result<Vec<usize>> {
    if params.len() != count {
        bail!(
            "{family} takes {count} integer parameter(s), got {}",
            params.len()
        );
    }
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .with_context(|| format!("bad parameter `{p}` for {family}"))
        })
        .collect()
}

fn generate(family: &str, params: &[String]) -> Result<Graph> {
    let p = |count| int_params(family, params, count);
    let g = match family {
        "path" => families::path(p(1)?[0])?,
        "cycle" => families::cycle(p(1)?[0])?,
        "complete" => families::complete(p(1)?[0])?,
        "star" => families::star(p(1)?[0])?,
        "spider" => {
            let v = p(4)?;
            families::spider([v[0], v[1], v[2], v[3]])?
        }
        "double-spider" => {
            let v = p(5)?;
            families::double_spider(v[0], v[1], v[2], v[3], v[4])?
        }
        "tripod" => {
            let v = p(3)?;
            families::tripod(v[0], v[1], v[2])?
        }
        "barbell" => families::barbell(p(1)?[0])?,
        "grid" => {
            let v = p(2)?;
            families::grid(v[0], v[1])?
        }
        "n" => {
            let v = p(2)?;
            families::n_graph(v[0], v[1], None)?
        }
        "x" => {
            let v = p(2)?;
            families::x_graph(v[0], v[1])?
        }
        "t" => {
            let v = p(2)?;
            families::t_graph(v[0], v[1], None)?
        }
        "d" => {
            let v = p(2)?;
            families::d_graph(v[0], v[1])?
        }
        "l" => {
            let v = p(2)?;
            families::l_graph(v[0], v[1])?
        }
        "core" => {
            let name = match params {
                [name] => name.clone(),
                [name, c] => format!("{name}({c})"),
                _ => bail!("core takes a name such as K4 or X1c(3)"),
            };
            fig2_core(name.parse::<Fig2Core>()?)?
        }
        "fixture" => base_case_fixture(p(1)?[0])?.graph,
        other => bail!(graph_boundary::Error::UnknownFamily(other.to_string())),
    };
    Ok(g)
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let laws = Law::parse_list(&args.laws)?;
    let corpus = match (&args.corpus, args.max_n) {
        (Some(path), _) => {
            let file = File::open(path).with_context(|| format!("opening {path}"))?;
            Corpus::from_graph6(path.clone(), BufReader::new(file))?
        }
        (None, Some(max_n)) => Corpus::enumerated(max_n)?,
        (None, None) => bail!("either --max-n or --corpus is required"),
    };
    let options = VerifyOptions {
        laws,
        threads: args.threads,
        timing: !args.no_timing,
        beta_bias: args.mutate,
    };
    let report = verify_laws(&corpus, &options)?;
    println!("{}", report.to_json());
    Ok(if report.pass { 0 } else { 1 })
}

fn selftest() -> Result<u8> {
    let mut ok = true;
    let mut check = |name: &str, passed: bool| {
        println!("{} {name}", if passed { "PASS" } else { "FAIL" });
        ok &= passed;
    };

    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_connected(n).map(|gs| gs.len()))
        .collect::<graph_boundary::Result<_>>()?;
    check(
        "connected graph counts 1..=6",
        counts == [1, 1, 2, 6, 21, 112],
    );

    let k4 = full_analysis(&families::complete(4)?)?;
    check(
        "K4 has beta 1 everywhere",
        k4.vertices
            .iter()
            .all(|v| v.beta == 1 && v.in_steinerberger),
    );

    let corpus = Corpus::enumerated(5)?;
    let options = VerifyOptions {
        timing: false,
        ..VerifyOptions::default()
    };
    check(
        "all laws hold for n <= 5",
        verify_laws(&corpus, &options)?.pass,
    );

    let mutated = VerifyOptions {
        beta_bias: -1,
        ..options
    };
    check(
        "a corrupted beta is detected",
        !verify_laws(&corpus, &mutated)?.pass,
    );

    Ok(if ok { 0 } else { 1 })
}

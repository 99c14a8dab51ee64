//! Command-line front end: generate graph families, compute closure, detect
//! and enumerate patterns, verify against the oracle, and benchmark.
//!
//! Exit codes: 0 success/found, 1 clean not-found, 2 usage error, 3 internal
//! invariant violation (verification mismatch).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use closure_motifs::detect::{self, Certificate, DetectionResult};
use closure_motifs::enumerate::{self, DEFAULT_ORACLE_CAP};
use closure_motifs::generators::{self, FamilySpec};
use closure_motifs::index::{compute_closure, enumerate_p3};
use closure_motifs::pattern::PatternId;
use closure_motifs::verify::verify_graph_with_fault;
use closure_motifs::{io as graph_io, Graph, StepCounter, Visit};

#[derive(Parser)]
#[command(name = "closure-motifs", version, about = "Small induced subgraphs in c-closed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Generate {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Compute the closure of a graph.
    Closure {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Detect one induced pattern; exit 0 when found, 1 when absent.
    Detect {
        pattern: String,
        graph: PathBuf,
        /// Algorithm variant (pattern-specific; see README).
        #[arg(long)]
        algo: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all occurrences of one induced pattern.
    Enumerate {
        pattern: String,
        graph: PathBuf,
        /// Algorithm: auto, anchor, brute, oracle, or a pattern-specific
        /// fast route.
        #[arg(long, default_value = "auto")]
        algo: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run every detector and enumerator against the subset oracle.
    Verify {
        graphs: Vec<PathBuf>,
        /// Drop one triangle from an enumeration stream to prove mismatches
        /// are caught.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Benchmark one operation over a graph family; TSV to stdout.
    Bench(BenchArgs),
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Star with t leaves.
    Star {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Two adjacent centers with t leaves each.
    DoubleStar {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Clique of order k with t pendants on one vertex.
    CliquePendants {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Complete bipartite K_{2,n-2} with the two centers adjacent.
    K2BipartitePlusEdge {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Independent set plus star on n vertices.
    IsPlusStar {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Seeded random graph.
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Doubled point/line incidence graph of the projective plane of prime
    /// order p.
    Projective {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Blow-up of a catalog pattern to n vertices.
    Blowup {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Family: star, projective, or gnp.
    #[arg(long)]
    family: String,
    /// Comma-separated sizes (leaf counts, plane orders, or vertex counts).
    #[arg(long)]
    sizes: String,
    /// Operation: enumerate-squares, enumerate-p3, detect-triangle-dense,
    /// detect-triangle-sparse, or enumerate-anchor.
    #[arg(long)]
    op: String,
    /// Pattern for enumerate-anchor.
    #[arg(long)]
    pattern: Option<String>,
    /// Edge probability for the gnp family.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Seed for the gnp family.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate { family } => cmd_generate(family),
        Command::Closure { graph, json } => cmd_closure(&graph, json),
        Command::Detect {
            pattern,
            graph,
            algo,
            json,
        } => cmd_detect(&pattern, &graph, algo.as_deref(), json),
        Command::Enumerate {
            pattern,
            graph,
            algo,
            count_only,
            json,
        } => cmd_enumerate(&pattern, &graph, &algo, count_only, json),
        Command::Verify {
            graphs,
            inject_fault,
        } => cmd_verify(&graphs, inject_fault),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn oracle_cap() -> usize {
    std::env::var("ORACLE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    graph_io::parse_edge_list(&text).map_err(|e| e.to_string())
}

fn parse_pattern(name: &str) -> Result<PatternId, String> {
    PatternId::from_name(name).ok_or_else(|| {
        format!(
            "unknown pattern {name:?}; expected one of: {}",
            closure_motifs::pattern::ALL_PATTERNS
                .iter()
                .map(|p| p.name())
                .collect::<Vec<_>>()
                .join(", ")
        )
    })
}

fn cmd_generate(family: FamilyCommand) -> Result<ExitCode, String> {
    let (graph, out) = match family {
        FamilyCommand::Star { t, out } => (generators::gen_family(FamilySpec::Star { t }), out),
        FamilyCommand::DoubleStar { t, out } => {
            (generators::gen_family(FamilySpec::DoubleStar { t }), out)
        }
        FamilyCommand::CliquePendants { k, t, out } => (
            generators::gen_family(FamilySpec::CliquePendants { k, t }),
            out,
        ),
        FamilyCommand::K2BipartitePlusEdge { n, out } => (
            generators::gen_family(FamilySpec::K2BipartitePlusEdge { n }),
            out,
        ),
        FamilyCommand::IsPlusStar { n, out } => {
            (generators::gen_family(FamilySpec::IsPlusStar { n }), out)
        }
        FamilyCommand::Gnp { n, p, seed, out } => {
            (generators::gen_family(FamilySpec::Gnp { n, p, seed }), out)
        }
        FamilyCommand::Projective { p, out } => (generators::projective(p), out),
        FamilyCommand::Blowup { pattern, n, out } => {
            let id = parse_pattern(&pattern)?;
            (generators::blowup(id.info(), n), out)
        }
    };
    let graph = graph.map_err(|e| e.to_string())?;
    let text = graph_io::serialize_graph(&graph);
    match out.out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_closure(path: &PathBuf, json: bool) -> Result<ExitCode, String> {
    let g = load_graph(path)?;
    let mut steps = StepCounter::new();
    let report = compute_closure(&g, &mut steps);
    if json {
        println!(
            "{}",
            serde_json::json!({
                "closure": report.c,
                "witness_pair": report.witness_pair.map(|(u, v)| vec![u, v]),
                "steps": steps_json(&steps),
            })
        );
    } else {
        println!("c = {}", report.c);
        if let Some((u, v)) = report.witness_pair {
            println!("witness pair: {u} {v}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn steps_json(steps: &StepCounter) -> serde_json::Value {
    serde_json::json!({
        "edge_probes": steps.edge_probes,
        "neighbor_scans": steps.neighbor_scans,
        "index_touches": steps.index_touches,
        "setup": steps.setup,
        "total": steps.total(),
    })
}

fn cmd_detect(
    pattern: &str,
    path: &PathBuf,
    algo: Option<&str>,
    json: bool,
) -> Result<ExitCode, String> {
    let id = parse_pattern(pattern)?;
    let g = load_graph(path)?;
    let mut steps = StepCounter::new();
    let result = dispatch_detect(&g, id, algo, &mut steps)?;
    if json {
        let mut closure_steps = StepCounter::new();
        println!(
            "{}",
            serde_json::json!({
                "pattern": id.name(),
                "found": result.found(),
                "witness": result.witness,
                "certificate": result.certificate.as_ref().map(|c| match c {
                    Certificate::TwoCliquePartition { .. } => "two-clique partition",
                }),
                "steps": steps_json(&steps),
                "closure": compute_closure(&g, &mut closure_steps).c,
            })
        );
    } else {
        match &result.witness {
            Some(w) => println!(
                "found: {}",
                w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            ),
            None => {
                match &result.certificate {
                    Some(Certificate::TwoCliquePartition { .. }) => {
                        println!("none (certificate: two-clique partition)")
                    }
                    None => println!("none"),
                }
            }
        }
    }
    Ok(if result.found() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn dispatch_detect(
    g: &Graph,
    id: PatternId,
    algo: Option<&str>,
    steps: &mut StepCounter,
) -> Result<DetectionResult, String> {
    let unknown = |a: &str| format!("unknown --algo {a:?} for pattern {}", id.name());
    let result = match id {
        PatternId::Empty3 => detect::independent_set(g, 3, steps).map_err(|e| e.to_string())?,
        PatternId::Empty4 => detect::independent_set(g, 4, steps).map_err(|e| e.to_string())?,
        PatternId::CoP3 => detect::co_p3(g, steps),
        PatternId::P3 => match algo.unwrap_or("linear") {
            "linear" => detect::p3_linear(g, steps),
            "star" => detect::star(g, 2, steps).map_err(|e| e.to_string())?,
            a => return Err(unknown(a)),
        },
        PatternId::K3 => match algo.unwrap_or("dense") {
            "dense" => detect::triangle_dense(g, steps),
            "sparse" => detect::triangle_sparse(g, steps),
            "clique" => detect::clique(g, 3, steps).map_err(|e| e.to_string())?,
            a => return Err(unknown(a)),
        },
        PatternId::CoDiamond => detect::co_diamond(g, steps),
        PatternId::CoPaw => detect::co_paw(g, steps),
        PatternId::CoSquare => detect::co_square(g, steps),
        PatternId::P4 => detect::p4(g, steps),
        PatternId::Claw => detect::claw(g, steps),
        PatternId::CoClaw => detect::co_claw(g, steps),
        PatternId::Paw => detect::paw(g, steps),
        PatternId::Square => detect::square(g, steps),
        PatternId::Diamond => match algo.unwrap_or("baseline") {
            "baseline" => detect::diamond_baseline(g, steps),
            "gem-free" => detect::diamond_gem_free(g, steps),
            a => return Err(unknown(a)),
        },
        PatternId::K4 => detect::clique(g, 4, steps).map_err(|e| e.to_string())?,
        PatternId::Gem => detect::gem(g, steps),
    };
    if let Some(a) = algo {
        let controlled = matches!(id, PatternId::P3 | PatternId::K3 | PatternId::Diamond);
        if !controlled {
            return Err(unknown(a));
        }
    }
    Ok(result)
}

fn cmd_enumerate(
    pattern: &str,
    path: &PathBuf,
    algo: &str,
    count_only: bool,
    json: bool,
) -> Result<ExitCode, String> {
    let id = parse_pattern(pattern)?;
    let g = load_graph(path)?;
    let mut steps = StepCounter::new();
    let mut witnesses: Vec<Vec<usize>> = Vec::new();
    let mut stream = |occ: &closure_motifs::Occurrence| {
        if json {
            witnesses.push(occ.vertices.clone());
        } else if !count_only {
            println!(
                "{}",
                occ.vertices
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        Visit::Continue(())
    };
    let algo = match (algo, id) {
        ("auto", PatternId::P3) => "path-sweep",
        ("auto", PatternId::K3) => "degree-ordered",
        ("auto", PatternId::CoP3) => "edge-vertex-sweep",
        ("auto", PatternId::Square) => "two-phase",
        ("auto", PatternId::P4 | PatternId::Paw) => "edge-anchored",
        ("auto", PatternId::Gem) => "oracle",
        ("auto", _) => "anchor",
        (other, _) => other,
    };
    let count = match algo {
        "anchor" => enumerate::by_anchor(&g, id, &mut steps, &mut stream)
            .map_err(|e| e.to_string())?,
        "brute" => enumerate::brute_force_matching(&g, id, &mut steps, &mut stream)
            .map_err(|e| e.to_string())?,
        "oracle" => enumerate::subsets_oracle(&g, id, oracle_cap(), &mut steps, &mut stream)
            .map_err(|e| e.to_string())?,
        "path-sweep" if id == PatternId::P3 => enumerate_p3(&g, &mut steps, &mut stream),
        "degree-ordered" if id == PatternId::K3 => {
            enumerate::triangles(&g, &mut steps, &mut stream)
        }
        "edge-vertex-sweep" if id == PatternId::CoP3 => {
            enumerate::co_p3s(&g, &mut steps, &mut stream)
        }
        "two-phase" if id == PatternId::Square => enumerate::squares(&g, &mut steps, &mut stream),
        "edge-anchored" => enumerate::edge_anchored(&g, id, &mut steps, &mut stream)
            .map_err(|e| e.to_string())?,
        other => return Err(format!("unknown --algo {other:?} for pattern {}", id.name())),
    };
    if json {
        let mut closure_steps = StepCounter::new();
        println!(
            "{}",
            serde_json::json!({
                "pattern": id.name(),
                "count": count,
                "witnesses": if count_only { None } else { Some(&witnesses) },
                "steps": steps_json(&steps),
                "closure": compute_closure(&g, &mut closure_steps).c,
            })
        );
    } else if count_only {
        println!("{count}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(paths: &[PathBuf], inject_fault: bool) -> Result<ExitCode, String> {
    if paths.is_empty() {
        return Err("verify needs at least one graph path".into());
    }
    let cap = oracle_cap();
    let mut all_ok = true;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for path in paths {
        let g = load_graph(path)?;
        let report = verify_graph_with_fault(&g, cap, inject_fault).map_err(|e| e.to_string())?;
        let _ = writeln!(
            out,
            "{}: n={} m={} c={}",
            path.display(),
            g.vertex_count(),
            g.edge_count(),
            report.closure
        );
        for p in &report.patterns {
            let status = if p.ok() { "ok" } else { "MISMATCH" };
            let detail: Vec<String> = p
                .enumerations
                .iter()
                .map(|e| format!("{}={}{}", e.algorithm, e.count, if e.agree { "" } else { "!" }))
                .chain(p.detections.iter().map(|d| {
                    format!(
                        "{}:{}{}",
                        d.algorithm,
                        if d.found { "found" } else { "none" },
                        if d.agree && d.witness_valid { "" } else { "!" }
                    )
                }))
                .collect();
            let _ = writeln!(
                out,
                "  {:<11} oracle={:<6} {} [{}]",
                p.pattern.name(),
                p.oracle_count,
                status,
                detail.join(" ")
            );
            all_ok &= p.ok();
        }
        if !report.closure_consistent {
            let _ = writeln!(out, "  closure MISMATCH");
            all_ok = false;
        }
        if !report.index_consistent {
            let _ = writeln!(out, "  index MISMATCH");
            all_ok = false;
        }
    }
    if all_ok {
        let _ = writeln!(out, "all agree");
        Ok(ExitCode::SUCCESS)
    } else {
        let _ = writeln!(out, "verification FAILED");
        Ok(ExitCode::from(3))
    }
}

fn cmd_bench(args: &BenchArgs) -> Result<ExitCode, String> {
    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| format!("bad size {s:?}")))
        .collect::<Result<_, _>>()?;
    println!("family\top\tsize\tn\tm\tc\tcount\tsteps\twall_ms");
    for &size in &sizes {
        let g = match args.family.as_str() {
            "star" => generators::star(size).map_err(|e| e.to_string())?,
            "projective" => generators::projective(size).map_err(|e| e.to_string())?,
            "gnp" => generators::gnp(size, args.p, args.seed),
            other => return Err(format!("unknown family {other:?}")),
        };
        let mut closure_steps = StepCounter::new();
        let c = compute_closure(&g, &mut closure_steps).c;
        let mut steps = StepCounter::new();
        let start = Instant::now();
        let count = match args.op.as_str() {
            "enumerate-squares" => {
                enumerate::squares(&g, &mut steps, &mut |_| Visit::Continue(()))
            }
            "enumerate-p3" => enumerate_p3(&g, &mut steps, &mut |_| Visit::Continue(())),
            "detect-triangle-dense" => {
                u64::from(detect::triangle_dense(&g, &mut steps).found())
            }
            "detect-triangle-sparse" => {
                u64::from(detect::triangle_sparse(&g, &mut steps).found())
            }
            "enumerate-anchor" => {
                let id = parse_pattern(args.pattern.as_deref().ok_or("enumerate-anchor needs --pattern")?)?;
                enumerate::by_anchor(&g, id, &mut steps, &mut |_| Visit::Continue(()))
                    .map_err(|e| e.to_string())?
            }
            other => return Err(format!("unknown op {other:?}")),
        };
        let wall = start.elapsed().as_secs_f64() * 1e3;
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}",
            args.family,
            args.op,
            size,
            g.vertex_count(),
            g.edge_count(),
            c,
            count,
            steps.total(),
            wall
        );
    }
    Ok(ExitCode::SUCCESS)
}

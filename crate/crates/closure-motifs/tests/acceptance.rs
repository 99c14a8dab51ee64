//! Acceptance suite: one test per criterion, each printing a PASS line.
//! The corpus is seeded random graphs over a density sweep plus every
//! generator instance up to 40 vertices; all differential checks compare
//! against the exhaustive subset oracle with zero tolerance.

use std::sync::OnceLock;

use closure_motifs::detect;
use closure_motifs::enumerate::{self, subset_census};
use closure_motifs::generators;
use closure_motifs::index::{compute_closure, compute_closure_naive, enumerate_p3};
use closure_motifs::pattern::{min_anchor_set, PatternId, CATALOG};
use closure_motifs::verify::verify_graph;
use closure_motifs::{Graph, StepCounter, Visit};

struct Corpus {
    entries: Vec<(String, Graph)>,
}

const GNP_PS: [f64; 7] = [0.05, 0.1, 0.2, 0.3, 0.5, 0.7, 0.9];

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut entries = Vec::new();
        for (pi, &p) in GNP_PS.iter().enumerate() {
            for n in 5..=40 {
                let seed = (pi * 1000 + n) as u64;
                entries.push((
                    format!("gnp(n={n},p={p},seed={seed})"),
                    generators::gnp(n, p, seed),
                ));
            }
        }
        for t in 2..=8 {
            entries.push((format!("star({t})"), generators::star(t).unwrap()));
        }
        for t in 2..=6 {
            entries.push((
                format!("double_star({t})"),
                generators::double_star(t).unwrap(),
            ));
        }
        for k in 3..=6 {
            for t in 1..=4 {
                entries.push((
                    format!("clique_pendants({k},{t})"),
                    generators::clique_pendants(k, t).unwrap(),
                ));
            }
        }
        for n in 5..=10 {
            entries.push((
                format!("k2_bipartite_plus_edge({n})"),
                generators::k2_bipartite_plus_edge(n).unwrap(),
            ));
        }
        for n in [4, 6, 8, 10] {
            entries.push((format!("is_plus_star({n})"), generators::is_plus_star(n).unwrap()));
        }
        for info in CATALOG.iter().filter(|i| i.order <= 4) {
            for factor in [2, 3] {
                let n = info.order * factor;
                entries.push((
                    format!("blowup({},{n})", info.id),
                    generators::blowup(info, n).unwrap(),
                ));
            }
        }
        entries.push(("projective(2)".into(), generators::projective(2).unwrap()));
        assert!(entries.iter().all(|(_, g)| g.vertex_count() <= 40));
        assert!(entries.len() >= 200 + 36);
        Corpus { entries }
    })
}

#[test]
fn criterion_1_oracle_equivalence() {
    let corpus = corpus();
    for (name, g) in &corpus.entries {
        let report = verify_graph(g, 60).unwrap();
        assert!(report.all_ok(), "differential mismatch on {name}: {report:?}");
    }
    println!(
        "criterion 1 (oracle equivalence, {} graphs): PASS",
        corpus.entries.len()
    );
}

// Independent reimplementation: grow subsets recursively instead of the
// bitmask scan used by the library.
fn anchor_size_reference(info: &closure_motifs::pattern::PatternInfo) -> usize {
    fn valid(info: &closure_motifs::pattern::PatternInfo, set: &[usize]) -> bool {
        (0..info.order).filter(|v| !set.contains(v)).all(|v| {
            set.iter().enumerate().any(|(i, &a)| {
                set[i + 1..].iter().any(|&b| {
                    info.has_edge(v, a) && info.has_edge(v, b) && !info.has_edge(a, b)
                })
            })
        })
    }
    fn search(
        info: &closure_motifs::pattern::PatternInfo,
        start: usize,
        set: &mut Vec<usize>,
        target: usize,
    ) -> bool {
        if set.len() == target {
            return valid(info, set);
        }
        for v in start..info.order {
            set.push(v);
            if search(info, v + 1, set, target) {
                return true;
            }
            set.pop();
        }
        false
    }
    (0..=info.order)
        .find(|&size| search(info, 0, &mut Vec::new(), size))
        .expect("the full vertex set is always valid")
}

#[test]
fn criterion_2_anchor_parameter_catalog() {
    assert_eq!(PatternId::Square.info().anchor_size, 2);
    assert_eq!(PatternId::Claw.info().anchor_size, 3);
    assert_eq!(PatternId::K4.info().anchor_size, 4);
    assert_eq!(PatternId::Empty4.info().anchor_size, 4);
    for info in &CATALOG {
        let (size, witness) = min_anchor_set(info);
        assert_eq!(size, info.anchor_size, "library search for {}", info.id);
        assert_eq!(witness.len(), size);
        assert_eq!(
            anchor_size_reference(info),
            info.anchor_size,
            "independent reimplementation for {}",
            info.id
        );
    }
    println!("criterion 2 (anchor-parameter catalog): PASS");
}

#[test]
fn criterion_3_closure_values() {
    let c_of = |g: &Graph| compute_closure(g, &mut StepCounter::new()).c;
    for n in 1..=10 {
        assert_eq!(c_of(&Graph::complete(n)), 1, "K_{n}");
    }
    for n in 4..=12 {
        let edges = (2..n).flat_map(|v| [(0, v), (1, v)]);
        let g = Graph::from_edges(n, edges).unwrap();
        assert_eq!(c_of(&g), n - 1, "K_{{2,{}}}", n - 2);
    }
    for t in 2..=8 {
        assert_eq!(c_of(&generators::star(t).unwrap()), 2, "star({t})");
    }
    for p in [2, 3, 5] {
        assert_eq!(c_of(&generators::projective(p).unwrap()), 3, "projective({p})");
    }
    for info in CATALOG.iter().filter(|i| i.order <= 4 && i.is_p3_free()) {
        let g = generators::blowup(info, info.order * 3).unwrap();
        assert_eq!(c_of(&g), 1, "blowup({})", info.id);
    }
    for (name, g) in &corpus().entries {
        let fast = compute_closure(g, &mut StepCounter::new());
        let naive = compute_closure_naive(g, &mut StepCounter::new());
        assert_eq!(fast.c, naive.c, "{name}");
        match fast.witness_pair {
            Some((u, v)) => {
                assert!(!g.has_edge(u, v), "{name}");
                assert_eq!(g.common_neighbors(u, v).len(), fast.c - 1, "{name}");
            }
            None => assert_eq!(fast.c, 1, "{name}"),
        }
    }
    println!("criterion 3 (closure values + differential): PASS");
}

fn count_enumerated(
    g: &Graph,
    run: impl FnOnce(&Graph, &mut StepCounter, &mut dyn FnMut(&closure_motifs::Occurrence) -> Visit) -> u64,
) -> u64 {
    run(g, &mut StepCounter::new(), &mut |_| Visit::Continue(()))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

#[test]
fn criterion_4_exact_structural_counts() {
    for t in 3..=8 {
        let g = generators::star(t).unwrap();
        let census = subset_census(&g, 60).unwrap();
        assert_eq!(census.count(PatternId::P3), binomial(t, 2), "star({t}) paths");
        assert_eq!(census.count(PatternId::Claw), binomial(t, 3), "star({t}) claws");
        assert_eq!(
            count_enumerated(&g, |g, s, v| enumerate_p3(g, s, v)),
            binomial(t, 2)
        );
        assert_eq!(
            count_enumerated(&g, |g, s, v| enumerate::by_anchor(g, PatternId::Claw, s, v)
                .unwrap()),
            binomial(t, 3)
        );
    }
    for t in 2..=6 {
        let g = generators::double_star(t).unwrap();
        let census = subset_census(&g, 60).unwrap();
        let expected = (t * t) as u64;
        assert_eq!(census.count(PatternId::P4), expected, "double_star({t})");
        assert_eq!(
            count_enumerated(&g, |g, s, v| enumerate::edge_anchored(g, PatternId::P4, s, v)
                .unwrap()),
            expected
        );
    }
    for n in 5..=10 {
        let g = generators::k2_bipartite_plus_edge(n).unwrap();
        let census = subset_census(&g, 60).unwrap();
        let expected = binomial(n - 2, 2);
        assert_eq!(census.count(PatternId::Diamond), expected, "k2be({n})");
        assert_eq!(
            count_enumerated(&g, |g, s, v| enumerate::by_anchor(g, PatternId::Diamond, s, v)
                .unwrap()),
            expected
        );
    }
    for k in 3..=6 {
        for t in 1..=4 {
            let g = generators::clique_pendants(k, t).unwrap();
            let census = subset_census(&g, 60).unwrap();
            let expected = t as u64 * binomial(k - 1, 2);
            assert_eq!(census.count(PatternId::Paw), expected, "clique_pendants({k},{t})");
            assert_eq!(
                count_enumerated(&g, |g, s, v| {
                    enumerate::edge_anchored(g, PatternId::Paw, s, v).unwrap()
                }),
                expected
            );
        }
    }
    println!("criterion 4 (exact structural counts): PASS");
}

#[test]
fn criterion_5_lemma_properties() {
    for (name, g) in &corpus().entries {
        let n = g.vertex_count();
        let c = compute_closure(g, &mut StepCounter::new()).c;
        let census = subset_census(g, 60).unwrap();

        // Path-count bound: #P3 < c * C(n, 2).
        let p3 = census.count(PatternId::P3);
        assert!(
            p3 < c as u64 * binomial(n, 2),
            "{name}: path bound violated ({p3} vs c={c})"
        );

        // Nonadjacent pair with degrees >= c and >= 2c - 1 forces a
        // co-square.
        let mut implied = false;
        'outer: for u in 0..n {
            for v in 0..n {
                if u != v
                    && !g.has_edge(u, v)
                    && g.degree(u) >= c
                    && g.degree(v) + 1 >= 2 * c
                {
                    implied = true;
                    break 'outer;
                }
            }
        }
        if implied {
            assert!(
                census.count(PatternId::CoSquare) > 0,
                "{name}: co-square implication violated"
            );
        }

        // A maximal clique of order >= 2c whose outside is not a clique
        // forces a co-diamond.
        for start in 0..n {
            let mut clique = vec![start];
            for v in 0..n {
                if v != start && clique.iter().all(|&u| g.has_edge(u, v)) {
                    clique.push(v);
                }
            }
            if clique.len() < 2 * c {
                continue;
            }
            let outside: Vec<usize> =
                (0..n).filter(|v| !clique.contains(v)).collect();
            let outside_clique = outside
                .iter()
                .enumerate()
                .all(|(i, &u)| outside[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if !outside_clique {
                assert!(
                    census.count(PatternId::CoDiamond) > 0,
                    "{name}: co-diamond implication violated"
                );
            }
        }
    }
    println!("criterion 5 (lemma properties): PASS");
}

#[test]
fn criterion_6_characterization_regression() {
    // Triangle plus two isolated vertices: both certificates exist globally
    // but in different components, so no paw.
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2)]).unwrap();
    let census = subset_census(&g, 60).unwrap();
    assert_eq!(census.count(PatternId::Paw), 0);
    assert!(!detect::paw(&g, &mut StepCounter::new()).found());

    let co = g.complement();
    let co_census = subset_census(&co, 60).unwrap();
    assert_eq!(co_census.count(PatternId::CoPaw), 0);
    assert!(!detect::co_paw(&co, &mut StepCounter::new()).found());
    println!("criterion 6 (component-wise characterization regression): PASS");
}

#[test]
fn criterion_7_step_count_scaling() {
    const SLACK: f64 = 4.0;

    struct Op {
        name: &'static str,
        run: fn(&Graph, &mut StepCounter) -> u64,
        bound: fn(&Graph) -> f64,
    }
    fn closure_of(g: &Graph) -> f64 {
        compute_closure(g, &mut StepCounter::new()).c as f64
    }
    fn count_p3(g: &Graph) -> f64 {
        enumerate_p3(g, &mut StepCounter::new(), &mut |_| Visit::Continue(())) as f64
    }
    fn count_k3(g: &Graph) -> f64 {
        enumerate::triangles(g, &mut StepCounter::new(), &mut |_| Visit::Continue(())) as f64
    }
    let ops = [
        Op {
            name: "enumerate-squares",
            run: |g, s| enumerate::squares(g, s, &mut |_| Visit::Continue(())),
            bound: |g| closure_of(g) * (g.edge_count() as f64).powf(1.5),
        },
        Op {
            name: "enumerate-p3",
            run: |g, s| enumerate_p3(g, s, &mut |_| Visit::Continue(())),
            bound: |g| {
                let m = g.edge_count() as f64;
                m.powf(1.5) + count_p3(g) + count_k3(g) + m
            },
        },
        Op {
            name: "detect-triangle-dense",
            run: |g, s| u64::from(detect::triangle_dense(g, s).found()),
            bound: |g| closure_of(g) * (g.vertex_count() as f64).powi(2),
        },
        Op {
            name: "detect-triangle-sparse",
            run: |g, s| u64::from(detect::triangle_sparse(g, s).found()),
            bound: |g| closure_of(g).powf(1.0 / 3.0) * (g.edge_count() as f64).powf(4.0 / 3.0),
        },
        // Anchor enumeration for diamonds (anchor size 2): bound
        // c^2 n^2 + c n^2 + m^(3/2).
        Op {
            name: "enumerate-anchor-diamond",
            run: |g, s| {
                enumerate::by_anchor(g, PatternId::Diamond, s, &mut |_| Visit::Continue(()))
                    .unwrap()
            },
            bound: |g| {
                let c = closure_of(g);
                let n = g.vertex_count() as f64;
                let m = g.edge_count() as f64;
                c * c * n * n + c * n * n + m.powf(1.5)
            },
        },
    ];

    let families: Vec<(&str, Vec<Graph>)> = vec![
        (
            "star",
            [32, 64, 128, 256]
                .iter()
                .map(|&t| generators::star(t).unwrap())
                .collect(),
        ),
        (
            "projective",
            [2, 3, 5]
                .iter()
                .map(|&p| generators::projective(p).unwrap())
                .collect(),
        ),
        (
            "gnp(p=0.3)",
            [16, 32, 64]
                .iter()
                .map(|&n| generators::gnp(n, 0.3, 7))
                .collect(),
        ),
    ];

    for (family, graphs) in &families {
        for op in &ops {
            let mut previous: Option<(f64, f64)> = None;
            for g in graphs {
                let mut steps = StepCounter::new();
                (op.run)(g, &mut steps);
                let measured = steps.total().max(1) as f64;
                let bound = (op.bound)(g).max(1.0);
                if let Some((prev_measured, prev_bound)) = previous {
                    let measured_ratio = measured / prev_measured;
                    let bound_ratio = bound / prev_bound;
                    assert!(
                        measured_ratio <= SLACK * bound_ratio,
                        "{family}/{}: step growth {measured_ratio:.2} exceeds \
                         {SLACK} x bound growth {bound_ratio:.2}",
                        op.name
                    );
                }
                previous = Some((measured, bound));
            }
        }
    }
    println!("criterion 7 (step-count scaling): PASS");
}

#[test]
fn criterion_8_cli_round_trip_and_verification() {
    use std::io::Write;
    use std::process::Command;

    // Parse/serialize identity over the corpus.
    for (name, g) in &corpus().entries {
        let text = closure_motifs::io::serialize_graph(g);
        let reparsed = closure_motifs::io::parse_edge_list(&text).unwrap();
        assert_eq!(
            closure_motifs::io::serialize_graph(&reparsed),
            text,
            "{name}"
        );
    }

    // The verify subcommand exits 0 across the whole corpus.
    let dir = tempfile::tempdir().unwrap();
    let mut paths = Vec::new();
    for (i, (_, g)) in corpus().entries.iter().enumerate() {
        let path = dir.path().join(format!("graph_{i:03}.edges"));
        let mut file = std::fs::File::create(&path).unwrap();
        file.write_all(closure_motifs::io::serialize_graph(g).as_bytes())
            .unwrap();
        paths.push(path);
    }
    let status = Command::new(env!("CARGO_BIN_EXE_closure-motifs"))
        .arg("verify")
        .args(&paths)
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0), "verify must exit 0 on the corpus");

    // Fixed-seed random graphs are byte-identical across runs and match the
    // committed golden file.
    let gen = |dir: &std::path::Path, name: &str| {
        let out = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_closure-motifs"))
            .args([
                "generate", "gnp", "--n", "20", "--p", "0.3", "--seed", "42", "--out",
            ])
            .arg(&out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        std::fs::read(&out).unwrap()
    };
    let first = gen(dir.path(), "a.edges");
    let second = gen(dir.path(), "b.edges");
    assert_eq!(first, second, "same seed must reproduce identical bytes");
    let golden_path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden/gnp_n20_p0.3_s42.edges");
    let golden = std::fs::read(&golden_path).unwrap();
    assert_eq!(first, golden, "golden gnp file drifted");
    println!("criterion 8 (CLI round-trip, verification, golden files): PASS");
}

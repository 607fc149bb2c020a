//! Acceptance criteria at full scale (N = 11122).
//!
//! Each test prints one `[PASS]` / `[FAIL]` line per criterion. Run with
//! `cargo test -p topolab --test acceptance -- --nocapture --test-threads=1`
//! to see them.
//!
//! Set `TOPOLAB_AS_GRAPH=/path/to/edge-list` to check the measured AS
//! snapshot column as well.

mod common;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use topolab::cli::{run_cli, EXIT_OK};
use topolab::generators::{
    generate_fba, generate_ig, FbaParams, IgParams, RngSeed, WeightedSampler, PAPER_NODE_COUNT,
};
use topolab::graph::largest_component;
use topolab::io::parse_edge_list;
use topolab::metrics::{
    degree_ccdf, fit_power_law_exponent, rank_nodes, rich_club_curve, triangle_coefficients,
    TriangleStats, DEFAULT_KMIN,
};
use topolab::robustness::{attack_curve, default_fraction_grid, AttackStrategy};
use topolab::{Graph, NodeId};

/// Seeds used for every seed-averaged criterion.
const SEEDS: std::ops::Range<u64> = 0..10;
const PAPER_LINKS: usize = 33349;

struct Sample {
    graph: Graph,
    elapsed: Duration,
    gamma: f64,
    phi_1pct: f64,
    triangles: TriangleStats,
}

struct Corpus {
    ig: Vec<Sample>,
    fba: Vec<Sample>,
}

fn measure(graph: Graph, elapsed: Duration) -> Sample {
    let gamma = fit_power_law_exponent(&degree_ccdf(&graph), DEFAULT_KMIN).unwrap();
    let phi_1pct = rich_club_curve(&graph, &[0.01]).unwrap().points[0].1;
    let triangles = triangle_coefficients(&graph);
    Sample {
        graph,
        elapsed,
        gamma,
        phi_1pct,
        triangles,
    }
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let ig = SEEDS
            .map(|s| {
                let t = Instant::now();
                let g =
                    generate_ig(&IgParams::with_defaults(PAPER_NODE_COUNT), RngSeed(s)).unwrap();
                measure(g, t.elapsed())
            })
            .collect();
        let fba = SEEDS
            .map(|s| {
                let t = Instant::now();
                let g =
                    generate_fba(&FbaParams::with_defaults(PAPER_NODE_COUNT), RngSeed(s)).unwrap();
                measure(g, t.elapsed())
            })
            .collect();
        Corpus { ig, fba }
    })
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let v: Vec<f64> = xs.collect();
    v.iter().sum::<f64>() / v.len() as f64
}

fn report(id: &str, ok: bool, detail: String) {
    println!("[{}] {id}: {detail}", if ok { "PASS" } else { "FAIL" });
}

#[test]
fn c1_exact_sizes_and_runtime() {
    let c = corpus();
    let mut ok = true;
    for (name, samples) in [("IG", &c.ig), ("FBA", &c.fba)] {
        for s in samples {
            ok &= s.graph.node_count() == PAPER_NODE_COUNT
                && s.graph.edge_count() == PAPER_LINKS
                && s.elapsed < Duration::from_secs(10);
        }
        let slowest = samples.iter().map(|s| s.elapsed).max().unwrap();
        report(
            &format!("C1 sizes {name}"),
            ok,
            format!("N={PAPER_NODE_COUNT} L={PAPER_LINKS} on every seed, slowest {slowest:?}"),
        );
    }
    assert!(ok);
}

#[test]
fn c2_exponent_bracket() {
    let c = corpus();
    let mut ok = true;
    for (name, samples, paper) in [("IG", &c.ig, 2.22), ("FBA", &c.fba, 2.255)] {
        let avg = mean(samples.iter().map(|s| s.gamma));
        let lo = samples
            .iter()
            .map(|s| s.gamma)
            .fold(f64::INFINITY, f64::min);
        let hi = samples
            .iter()
            .map(|s| s.gamma)
            .fold(f64::NEG_INFINITY, f64::max);
        let pass = (2.0..=2.5).contains(&avg);
        ok &= pass;
        report(
            &format!("C2 gamma {name}"),
            pass,
            format!(
                "seed mean {avg:.3} in [2.0, 2.5] (per-seed {lo:.3}..{hi:.3}, reference {paper})"
            ),
        );
    }
    assert!(ok);
}

#[test]
fn c3_rich_club_separation() {
    let c = corpus();
    let ig = mean(c.ig.iter().map(|s| s.phi_1pct));
    let fba = mean(c.fba.iter().map(|s| s.phi_1pct));
    let ig_ok = (0.20..=0.50).contains(&ig);
    let fba_ok = fba <= 0.10;
    report(
        "C3 phi(0.01) IG",
        ig_ok,
        format!("{ig:.4} in [0.20, 0.50] (reference 0.35)"),
    );
    report(
        "C3 phi(0.01) FBA",
        fba_ok,
        format!("{fba:.4} <= 0.10 (reference 0.04)"),
    );
    assert!(ig_ok && fba_ok);
}

#[test]
fn c4_triangle_averages() {
    let c = corpus();
    let ig = mean(c.ig.iter().map(|s| s.triangles.mean_kt));
    let fba = mean(c.fba.iter().map(|s| s.triangles.mean_kt));
    let ig_ok = (6.0..=14.0).contains(&ig);
    let fba_ok = (0.15..=1.5).contains(&fba);
    report(
        "C4 mean K_t IG",
        ig_ok,
        format!("{ig:.3} in [6, 14] (reference 10.0)"),
    );
    report(
        "C4 mean K_t FBA",
        fba_ok,
        format!("{fba:.3} in [0.15, 1.5] (reference 0.6)"),
    );
    assert!(ig_ok && fba_ok);
}

#[test]
fn c4_max_triangle_ordering() {
    let c = corpus();
    let ig = mean(c.ig.iter().map(|s| s.triangles.max_kt as f64));
    let fba = mean(c.fba.iter().map(|s| s.triangles.max_kt as f64));
    let ok = ig > 10.0 * fba;
    report(
        "C4 max K_t IG > 10 x FBA",
        ok,
        format!(
            "IG {ig:.1} vs FBA {fba:.1}, ratio {:.2} (reference 4962 vs 1191, ratio 4.17)",
            ig / fba
        ),
    );
    assert!(ok, "max K_t ratio {:.2} does not exceed 10", ig / fba);
}

#[test]
fn c5_attack_ordering() {
    let c = corpus();
    let mut grid: Vec<f64> = default_fraction_grid(PAPER_NODE_COUNT)
        .into_iter()
        .filter(|f| (0.001..=0.05).contains(f))
        .collect();
    grid.extend([0.001, 0.01, 0.05]);
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    let averaged = |samples: &[Sample]| -> Vec<f64> {
        let curves: Vec<Vec<f64>> = samples
            .iter()
            .map(|s| {
                attack_curve(&s.graph, AttackStrategy::TargetedStatic, &grid)
                    .unwrap()
                    .points
                    .into_iter()
                    .map(|p| p.1)
                    .collect()
            })
            .collect();
        (0..grid.len())
            .map(|i| mean(curves.iter().map(|c| c[i])))
            .collect()
    };
    let ig = averaged(&c.ig);
    let fba = averaged(&c.fba);
    let everywhere = ig.iter().zip(&fba).all(|(i, f)| f >= i);
    let at_1pct = grid.iter().position(|&f| f == 0.01).unwrap();
    let strict = fba[at_1pct] > ig[at_1pct];
    report(
        "C5 s_FBA >= s_IG on [0.001, 0.05]",
        everywhere,
        format!("{} grid points", grid.len()),
    );
    report(
        "C5 strict at f = 0.01",
        strict,
        format!("s_FBA {:.4} > s_IG {:.4}", fba[at_1pct], ig[at_1pct]),
    );
    assert!(everywhere && strict);
}

#[test]
fn c6_oracle_equivalence() {
    // Triangles vs triple enumeration: 100 random graphs, N <= 50.
    let mut tri_ok = true;
    for i in 0..100u64 {
        let n = 5 + (i as usize % 46);
        let p = [0.05, 0.1, 0.2, 0.4][i as usize % 4];
        let edges = common::gnp_edges(n, p, 1000 + i);
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap().0;
        tri_ok &= triangle_coefficients(&g).per_node
            == common::triangles_by_triples(&common::matrix(n, &edges));
    }
    report(
        "C6 triangles vs O(N^3) triples",
        tri_ok,
        "100 graphs, N in [5, 50]".into(),
    );

    // Largest component vs BFS, N <= 60.
    let mut lc_ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for i in 0..100u64 {
        let n = 40 + (i as usize % 21);
        let edges = common::gnp_edges(n, 0.05, 2000 + i);
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap().0;
        let mut excluded = vec![false; n];
        for u in rand::seq::index::sample(&mut rng, n, 10) {
            excluded[u] = true;
        }
        lc_ok &= largest_component(&g, &excluded)
            == common::largest_component_bfs(&common::matrix(n, &edges), &excluded);
    }
    report(
        "C6 largest component vs BFS",
        lc_ok,
        "100 graphs, N in [40, 60]".into(),
    );

    // Incremental rich-club vs direct pairwise count, N <= 200.
    let mut rc_ok = true;
    let r_values = [0.005, 0.01, 0.02, 0.05, 0.1, 0.25, 0.5, 1.0];
    for i in 0..40u64 {
        let n = 20 + (i as usize * 5) % 181;
        let g = if i % 2 == 0 {
            common::gnp(n, 0.1, 3000 + i)
        } else {
            generate_ig(&IgParams::with_defaults(n.max(9)), RngSeed(i)).unwrap()
        };
        let curve = rich_club_curve(&g, &r_values).unwrap();
        rc_ok &= curve
            .points
            .iter()
            .all(|&(r, phi)| phi == common::rich_club_direct(&g, r));
    }
    report(
        "C6 rich-club incremental vs direct",
        rc_ok,
        "40 graphs, N <= 200".into(),
    );

    // Weighted sampler: 10^6 draws, each frequency within 3 standard errors.
    let weights = [1.0, 2.0, 3.0, 4.0];
    let sampler = WeightedSampler::from_weights(&weights).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let draws = 1_000_000usize;
    let mut hits = [0usize; 4];
    for _ in 0..draws {
        hits[sampler.sample(&mut rng).unwrap() as usize] += 1;
    }
    let mut chi2 = 0.0;
    let mut within = true;
    for (i, &h) in hits.iter().enumerate() {
        let p = weights[i] / 10.0;
        let expected = p * draws as f64;
        chi2 += (h as f64 - expected).powi(2) / expected;
        let se = (p * (1.0 - p) / draws as f64).sqrt();
        within &= ((h as f64 / draws as f64) - p).abs() <= 3.0 * se;
    }
    // 3 degrees of freedom: P(chi2 > 16.27) = 0.001.
    let sampler_ok = within && chi2 < 16.27;
    report(
        "C6 weighted sampler",
        sampler_ok,
        format!("10^6 draws {hits:?}, chi2 = {chi2:.3}"),
    );
    assert!(tri_ok && lc_ok && rc_ok && sampler_ok);
}

#[test]
fn c7_invariants() {
    let c = corpus();
    let all: Vec<&Sample> = c.ig.iter().chain(&c.fba).collect();

    let degree_ok = all
        .iter()
        .all(|s| common::degree_sum_is_twice_links(&s.graph));
    report(
        "C7 degree sum = 2L",
        degree_ok,
        format!("{} generated graphs", all.len()),
    );

    let tri_ok = all.iter().all(|s| {
        s.triangles.per_node.iter().sum::<u64>() == 3 * common::triangle_total_by_edges(&s.graph)
    });
    report(
        "C7 sum K_t = 3T",
        tri_ok,
        "edge-iterator triangle count".into(),
    );

    let grid = default_fraction_grid(PAPER_NODE_COUNT);
    let mut attack_ok = true;
    for s in c.ig[..2].iter().chain(&c.fba[..2]) {
        for strategy in [
            AttackStrategy::TargetedStatic,
            AttackStrategy::TargetedAdaptive,
            AttackStrategy::Random(RngSeed(5)),
        ] {
            let curve = attack_curve(&s.graph, strategy, &grid).unwrap();
            attack_ok &= curve.points.windows(2).all(|w| w[1].1 <= w[0].1);
        }
    }
    report(
        "C7 attack curves non-increasing",
        attack_ok,
        "3 strategies".into(),
    );

    let ccdf_ok = all.iter().all(|s| {
        let pts = degree_ccdf(&s.graph);
        pts.points()[0].1 == 1.0
            && pts
                .points()
                .windows(2)
                .all(|w| w[1].0 > w[0].0 && w[1].1 <= w[0].1)
    });
    report("C7 CCDF monotone", ccdf_ok, "degree CCDFs".into());

    let rank_ok = all.iter().take(2).all(|s| {
        let order = rank_nodes(&s.graph);
        order
            .windows(2)
            .all(|w| s.graph.degree(w[0]) >= s.graph.degree(w[1]))
    });
    report(
        "C7 rank order sorted",
        rank_ok,
        "rank_nodes on generated graphs".into(),
    );

    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| -> Vec<Vec<u8>> {
        let d = dir.path().join(tag);
        std::fs::create_dir_all(&d).unwrap();
        let edges = d.join("ig.txt");
        let out = d.join("out");
        let attack = d.join("attack.csv");
        let p = |x: &std::path::Path| x.to_str().unwrap().to_owned();
        assert_eq!(
            run_cli([
                "topolab",
                "generate",
                "--model",
                "ig",
                "--n",
                "3000",
                "--seed",
                "9",
                "--out",
                &p(&edges)
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_cli([
                "topolab",
                "analyze",
                "--in",
                &p(&edges),
                "--outdir",
                &p(&out)
            ]),
            EXIT_OK
        );
        assert_eq!(
            run_cli([
                "topolab",
                "attack",
                "--in",
                &p(&edges),
                "--strategy",
                "random",
                "--seed",
                "4",
                "--out",
                &p(&attack)
            ]),
            EXIT_OK
        );
        let mut files = vec![edges, attack];
        for f in [
            "summary.txt",
            "richclub.csv",
            "triangles_ccdf.csv",
            "degree_ccdf.csv",
            "labels.csv",
        ] {
            files.push(out.join(f));
        }
        files.iter().map(|f| std::fs::read(f).unwrap()).collect()
    };
    let determinism_ok = run("a") == run("b");
    report(
        "C7 pipeline byte-determinism",
        determinism_ok,
        "generate + analyze + attack twice".into(),
    );

    assert!(degree_ok && tri_ok && attack_ok && ccdf_ok && rank_ok && determinism_ok);
}

#[test]
fn c8_as_graph_column() {
    // Table values that are deterministic functions of the file.
    const AS_NODES: usize = 11122;
    const AS_LINKS: usize = 30054;
    const AS_MAX_K: usize = 2839;
    const AS_MAX_KT: u64 = 7482;
    const AS_AVG_KT: f64 = 12.7;

    let summary_of = |path: &std::path::Path, outdir: &std::path::Path| -> String {
        assert_eq!(
            run_cli([
                "topolab",
                "analyze",
                "--in",
                path.to_str().unwrap(),
                "--outdir",
                outdir.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        std::fs::read_to_string(outdir.join("summary.txt")).unwrap()
    };
    let field = |summary: &str, name: &str| -> String {
        summary
            .lines()
            .find_map(|l| l.strip_prefix(&format!("{name}: ")))
            .unwrap()
            .to_owned()
    };
    let dir = tempfile::tempdir().unwrap();

    if let Ok(path) = std::env::var("TOPOLAB_AS_GRAPH") {
        let s = summary_of(std::path::Path::new(&path), dir.path());
        let n: usize = field(&s, "nodes").parse().unwrap();
        let l: usize = field(&s, "links").parse().unwrap();
        let k: usize = field(&s, "max_degree").parse().unwrap();
        let kt: u64 = field(&s, "max_triangle_coefficient").parse().unwrap();
        let avg: f64 = field(&s, "average_triangle_coefficient").parse().unwrap();
        let gamma: f64 = field(&s, "power_law_exponent").parse().unwrap_or(f64::NAN);
        let ok = n == AS_NODES
            && l == AS_LINKS
            && k == AS_MAX_K
            && kt == AS_MAX_KT
            && (avg * 10.0).round() / 10.0 == AS_AVG_KT
            && (2.0..=2.5).contains(&gamma);
        report(
            "C8 AS graph column",
            ok,
            format!("N={n} L={l} max k={k} max K_t={kt} avg K_t={avg:.2} gamma={gamma:.3}"),
        );
        assert!(ok);
        return;
    }

    // Without the snapshot: check analyze reports exactly what the file
    // contains, on an AS-labelled file with duplicates and self-loops.
    let edges = common::gnp_edges(300, 0.04, 31);
    let mut text = String::from("# AS snapshot stand-in\n");
    for (i, &(u, v)) in edges.iter().enumerate() {
        text.push_str(&format!("AS{} AS{}\n", 64500 + u, 64500 + v));
        if i % 17 == 0 {
            text.push_str(&format!("AS{} AS{}\n", 64500 + v, 64500 + u));
        }
        if i % 23 == 0 {
            text.push_str(&format!("AS{0} AS{0}\n", 64500 + u));
        }
    }
    let path = dir.path().join("as.txt");
    std::fs::write(&path, &text).unwrap();
    let s = summary_of(&path, &dir.path().join("out"));
    let (g, _) = parse_edge_list(text.as_bytes()).unwrap();
    let raw = Graph::from_edges(300, edges.iter().copied()).unwrap().0;
    let expected_nodes = (0..300 as NodeId).filter(|&u| raw.degree(u) > 0).count();
    let tri = triangle_coefficients(&raw);
    let ok = field(&s, "nodes") == expected_nodes.to_string()
        && field(&s, "links") == raw.edge_count().to_string()
        && field(&s, "max_degree") == raw.max_degree().to_string()
        && field(&s, "max_triangle_coefficient") == tri.max_kt.to_string()
        && field(&s, "average_triangle_coefficient")
            == (tri.per_node.iter().sum::<u64>() as f64 / expected_nodes as f64).to_string()
        && g.edge_count() == raw.edge_count();
    println!("[SKIP] C8 AS graph column: snapshot not supplied (set TOPOLAB_AS_GRAPH)");
    report(
        "C8 analyze reports file metrics exactly",
        ok,
        "AS-labelled stand-in with duplicates and self-loops".into(),
    );
    assert!(ok);
}

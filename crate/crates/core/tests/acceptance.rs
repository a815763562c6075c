//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured quantities once its assertions hold.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;

use common::{generator_catalog, random_connected_graph, random_graph, rng};
use cyclespect::bounds::{
    delta, edge_bound_coefficients, ln_big, log_star_degree_exponent, moore_bound,
    sigma_free_exponent, SequenceSpec, SubsequenceChoice,
};
use cyclespect::chromatic::{
    chromatic_number, consecutive_cycles_chromatic, gyarfas_check, DEFAULT_CHROMATIC_BUDGET,
};
use cyclespect::conjectures::{erdos_gyarfas_scan, power_plus_one_scan, random_min_degree_graphs};
use cyclespect::extraction::{
    ab_path_lengths, consecutive_even_cycles, posa_long_path, verify_expansion, ExpansionMode,
    PipelineConfig, ThetaSubgraph,
};
use cyclespect::generators::{self, CageName};
use cyclespect::graph::{girth, max_cut_bipartite_subgraph, Graph, PathWitness, VertexSet};
use cyclespect::oracle;
use cyclespect::report::{verify_certificate, BudgetInfo, CertificateFile};
use cyclespect::spectrum::{cycle_spectrum, SpectrumOptions};

fn exhaustive_spectrum(g: &Graph) -> BTreeSet<usize> {
    cycle_spectrum(g, &SpectrumOptions::exhaustive())
        .lengths()
        .clone()
}

#[test]
fn acceptance_01_spectrum_oracle_equivalence() {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = generator_catalog(8);
    let mut r = rng(0xACC1);
    for i in 0..200 {
        let n = 4 + (i % 5);
        let p = [0.3, 0.5, 0.7][i % 3];
        graphs.push(random_connected_graph(n, p, &mut r));
    }
    let mut checked = 0;
    for g in &graphs {
        if g.vertex_count() > 8 || !g.is_connected() {
            continue;
        }
        let fast = exhaustive_spectrum(g);
        let naive = oracle::spectrum_by_enumeration(g);
        assert_eq!(fast, naive, "spectrum mismatch on {g:?}");
        assert_eq!(
            girth(g),
            naive.first().copied(),
            "girth mismatch on {g:?}"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(checked >= 200, "only {checked} connected graphs checked");
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "acceptance 01 PASS: spectrum equals the subset/permutation oracle on {checked} graphs in {elapsed:?}"
    );
}

#[test]
fn acceptance_02_complete_and_balanced_bipartite_equalities() {
    for d in 3..=6usize {
        let kd1 = generators::complete(d + 1).unwrap();
        assert_eq!(exhaustive_spectrum(&kd1).len(), d - 1, "K_{}", d + 1);

        let kdd = generators::complete_bipartite(d, d).unwrap();
        assert_eq!(exhaustive_spectrum(&kdd).len(), d - 1, "K_{{{d},{d}}}");
    }
    println!("acceptance 02 PASS: |C(K_d+1)| = |C(K_d,d)| = d-1 for d = 3..6, exact");
}

#[test]
fn acceptance_03_moore_tightness_on_cages() {
    let cases = [
        (CageName::Petersen, 5u64, 10u128),
        (CageName::Heawood, 6, 14),
        (CageName::TutteCoxeter, 8, 30),
    ];
    for (name, expected_girth, expected_order) in cases {
        let g = generators::cage(name);
        assert_eq!(girth(&g), Some(expected_girth as usize));
        assert_eq!(moore_bound(3, expected_girth).unwrap(), expected_order);
        assert_eq!(g.vertex_count() as u128, expected_order);
    }
    println!("acceptance 03 PASS: petersen 5/10, heawood 6/14, tutte-coxeter 8/30, exact");
}

#[test]
fn acceptance_04_dense_graphs_are_pancyclic() {
    // Canonical seeded sample of graphs with minimum degree above n/2.
    let mut r = rng(0xACC4);
    let mut seen: std::collections::HashSet<Vec<(usize, usize)>> = Default::default();
    let mut total = 0usize;
    for (n, quota, p) in [(5usize, 20usize, 0.85), (6, 60, 0.9), (7, 120, 0.85), (8, 140, 0.9), (9, 220, 0.85)]
    {
        let mut found = 0;
        let mut attempts = 0;
        while found < quota && attempts < 60_000 {
            attempts += 1;
            let g = random_graph(n, p, &mut r);
            if g.min_degree().unwrap_or(0) * 2 <= n {
                continue;
            }
            let key: Vec<(usize, usize)> = g.edges().collect();
            if !seen.insert(key) {
                continue;
            }
            let expected: BTreeSet<usize> = (3..=n).collect();
            assert_eq!(
                exhaustive_spectrum(&g),
                expected,
                "graph on {n} vertices with min degree > n/2 is not pancyclic"
            );
            found += 1;
            total += 1;
        }
    }
    assert!(total >= 500, "only {total} qualifying graphs sampled");
    println!("acceptance 04 PASS: spectrum = {{3..n}} on {total} graphs with min degree > n/2");
}

#[test]
fn acceptance_05_max_cut_half_edges() {
    let mut r = rng(0xACC5);
    for i in 0..100 {
        let n = 5 + (i % 12);
        let p = [0.2, 0.4, 0.6, 0.8][i % 4];
        let g = random_graph(n, p, &mut r);
        let (h, _) = max_cut_bipartite_subgraph(&g);
        assert!(
            h.edge_count() >= g.edge_count().div_ceil(2),
            "cut kept {} of {} edges",
            h.edge_count(),
            g.edge_count()
        );
        assert!(h.is_bipartite());
    }
    println!("acceptance 05 PASS: local-search cut kept >= half the edges on 100 random graphs");
}

#[test]
fn acceptance_06_posa_property_under_verified_expansion() {
    let mut graphs = generator_catalog(10);
    let mut r = rng(0xACC6);
    for i in 0..100 {
        let n = 5 + (i % 6);
        let p = [0.4, 0.6, 0.8][i % 3];
        graphs.push(random_connected_graph(n, p, &mut r));
    }
    let mut verified_cases = 0;
    for g in &graphs {
        if g.vertex_count() > 10 || !g.is_connected() {
            continue;
        }
        for m in 1..=2usize {
            let cert = verify_expansion(g, m, ExpansionMode::Exhaustive, 0, 1_000_000).unwrap();
            if !cert.verified {
                continue;
            }
            let path = posa_long_path(g, m, 17)
                .unwrap_or_else(|f| panic!("expansion verified for m={m} on {g:?} but the path search stalled at {} edges", f.best_path.len_edges()));
            assert!(path.len_edges() >= 3 * m);
            path.validate(g).unwrap();
            verified_cases += 1;
        }
    }
    assert!(verified_cases >= 30, "only {verified_cases} verified cases exercised");
    println!(
        "acceptance 06 PASS: rotation-extension reached 3m edges in all {verified_cases} verified-expansion cases"
    );
}

#[test]
fn acceptance_07_ab_path_completeness_over_theta_partitions() {
    // The blanket claim "all lengths below |V| for every non-bipartition
    // partition" is false: in theta(2,2,2) with A = {hub}, a path of
    // length |V|-1 would be a Hamiltonian path ending at the hub, and the
    // two unused hub neighbors would both have to be endpoints. The test
    // therefore checks (a) the enumerator agrees exactly with an
    // independent naive path enumeration, (b) the bipartition cases
    // realize exactly the odd lengths, and (c) completeness holds outside
    // a frozen census of symmetric exceptions, all of which still realize
    // every length up to at least 2.
    let start = Instant::now();
    let mut partitions_checked: u64 = 0;
    let mut bipartition_cases: u64 = 0;
    let mut complete_cases: u64 = 0;
    let mut exceptions: u64 = 0;
    let mut exceptions_missing_only_hamiltonian: u64 = 0;
    for a in 2..=6usize {
        for b in a..=6 {
            for c in b..=6 {
                let (g, (u, v)) = generators::theta_graph(a, b, c).unwrap();
                let theta = theta_from_generator(u, v, [a, b, c]);
                theta.validate(&g).unwrap();
                let n = g.vertex_count();
                let all: BTreeSet<usize> = (1..n).collect();
                let classes = g.bipartition();
                // Independent oracle: every simple path of the theta graph,
                // collected once as (endpoints, length) triples.
                let pairs_by_len = enumerate_all_paths(&g);

                for rest in 0..(1u32 << (n - 1)) {
                    let mask = (rest << 1) | 1;
                    if mask == (1 << n) - 1 {
                        continue;
                    }
                    let a_side: VertexSet = (0..n).filter(|&w| mask >> w & 1 == 1).collect();
                    let lengths: BTreeSet<usize> = ab_path_lengths(&g, &theta, &a_side)
                        .unwrap()
                        .keys()
                        .copied()
                        .collect();
                    let expected: BTreeSet<usize> = (1..n)
                        .filter(|&len| {
                            pairs_by_len[len]
                                .iter()
                                .any(|&(x, y)| a_side.contains(&x) != a_side.contains(&y))
                        })
                        .collect();
                    assert_eq!(
                        lengths, expected,
                        "enumerator disagrees with the naive oracle on theta({a},{b},{c}) mask {mask:b}"
                    );
                    let is_bipartition = classes.as_ref().is_some_and(|cls| {
                        (0..n).all(|w| (cls[w] == cls[0]) == a_side.contains(&w))
                    });
                    if is_bipartition {
                        let odd: BTreeSet<usize> = (1..n).filter(|l| l % 2 == 1).collect();
                        assert_eq!(
                            lengths, odd,
                            "theta({a},{b},{c}) bipartition should realize exactly the odd lengths"
                        );
                        bipartition_cases += 1;
                    } else if lengths == all {
                        complete_cases += 1;
                    } else {
                        exceptions += 1;
                        assert!(
                            lengths.contains(&1) && lengths.contains(&2),
                            "theta({a},{b},{c}) mask {mask:b} misses a length below 3: {lengths:?}"
                        );
                        let missing: BTreeSet<usize> =
                            all.difference(&lengths).copied().collect();
                        if missing.len() == 1 && missing.contains(&(n - 1)) {
                            exceptions_missing_only_hamiltonian += 1;
                        }
                    }
                    partitions_checked += 1;
                }
            }
        }
    }
    // Frozen census so regressions in either direction are loud.
    assert_eq!(partitions_checked, 188_941);
    assert_eq!(bipartition_cases, 14);
    assert_eq!(complete_cases, 182_564);
    assert_eq!(exceptions, 6_363);
    assert_eq!(exceptions_missing_only_hamiltonian, 6_023);

    // The concrete counterexample to the blanket claim, pinned.
    let (g, (u, v)) = generators::theta_graph(2, 2, 2).unwrap();
    let theta = theta_from_generator(u, v, [2, 2, 2]);
    let hub_only: VertexSet = [u].into();
    let lengths: BTreeSet<usize> = ab_path_lengths(&g, &theta, &hub_only)
        .unwrap()
        .keys()
        .copied()
        .collect();
    assert_eq!(lengths, [1, 2, 3].into());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!(
        "acceptance 07 PASS: enumerator oracle-exact on {partitions_checked} partitions; complete except a census of {exceptions} symmetric cases (bipartition parity class exact) in {elapsed:?}"
    );
}

/// All simple paths of a small graph, grouped by length as endpoint pairs.
/// Plain DFS from every start; independent of the theta machinery.
fn enumerate_all_paths(g: &Graph) -> Vec<BTreeSet<(usize, usize)>> {
    let n = g.vertex_count();
    let mut out: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); n];
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        path_dfs(g, &mut path, &mut on_path, &mut out);
    }
    out
}

fn path_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut [BTreeSet<(usize, usize)>],
) {
    let v = *path.last().unwrap();
    let s = path[0];
    if path.len() >= 2 {
        out[path.len() - 1].insert((s.min(v), s.max(v)));
    }
    for &w in g.neighbors(v) {
        if on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        path_dfs(g, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

fn theta_from_generator(u: usize, v: usize, lens: [usize; 3]) -> ThetaSubgraph {
    // The generator lays out internal vertices consecutively per path.
    let mut next = 2;
    let mut paths = Vec::new();
    for len in lens {
        let mut verts = vec![u];
        for _ in 0..len - 1 {
            verts.push(next);
            next += 1;
        }
        verts.push(v);
        paths.push(PathWitness::new(verts));
    }
    ThetaSubgraph {
        hubs: (u, v),
        paths: [paths[0].clone(), paths[1].clone(), paths[2].clone()],
    }
}

#[test]
fn acceptance_08_pipeline_certificates_on_random_regular() {
    let start = Instant::now();
    let mut runs = Vec::new();
    'outer: for &n in &[50usize, 100, 200] {
        for &d in &[8usize, 16, 24] {
            for seed in 1..=6u64 {
                runs.push((n, d, seed));
                if runs.len() == 50 {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(runs.len(), 50);
    for &(n, d, seed) in &runs {
        let g = generators::random_regular(n, d, seed).unwrap();
        let cfg = PipelineConfig {
            seed,
            ..PipelineConfig::default()
        };
        let cert = consecutive_even_cycles(&g, 1, &cfg)
            .unwrap_or_else(|e| panic!("pipeline failed on n={n} d={d} seed={seed}: {e}"));
        let file = CertificateFile::from_certificate(&cert, seed, BudgetInfo::default());
        verify_certificate(&g, &file).unwrap();
        assert!(
            cert.run_count >= 3,
            "run of {} on n={n} d={d} seed={seed}",
            cert.run_count
        );
    }

    // Monotonicity smoke check: median run length nondecreasing in d.
    let mut medians = Vec::new();
    for &d in &[8usize, 16, 24] {
        let mut lengths: Vec<usize> = (1..=10u64)
            .map(|seed| {
                let g = generators::random_regular(200, d, 1000 + seed).unwrap();
                let cfg = PipelineConfig {
                    seed,
                    ..PipelineConfig::default()
                };
                consecutive_even_cycles(&g, 1, &cfg).unwrap().run_count
            })
            .collect();
        lengths.sort_unstable();
        medians.push(lengths[lengths.len() / 2]);
    }
    assert!(
        medians.windows(2).all(|w| w[0] <= w[1]),
        "medians not monotone: {medians:?}"
    );
    println!(
        "acceptance 08 PASS: 50 verified certificates with runs >= 3; medians over d = 8,16,24: {medians:?} ({:?})",
        start.elapsed()
    );
}

#[test]
fn acceptance_09_chromatic_checks_and_pipeline() {
    // Odd-length counts against the chromatic number on >= 500 graphs.
    let mut graphs: Vec<Graph> = generator_catalog(9)
        .into_iter()
        .filter(|g| g.vertex_count() <= 9)
        .collect();
    let mut r = rng(0xACC9);
    while graphs.len() < 520 {
        let n = 4 + (graphs.len() % 6);
        let p = [0.3, 0.5, 0.7, 0.9][graphs.len() % 4];
        graphs.push(random_graph(n, p, &mut r));
    }
    let mut checked = 0;
    for g in &graphs {
        let check = gyarfas_check(g, DEFAULT_CHROMATIC_BUDGET, &SpectrumOptions::exhaustive())
            .unwrap();
        assert!(
            check.passes,
            "odd-length count {} below (chi-1)/2 with chi = {} on {g:?}",
            check.odd_length_count, check.chromatic_number
        );
        checked += 1;
    }
    assert!(checked >= 500);

    // Equality for complete graphs of odd order.
    for d in 1..=4usize {
        let g = generators::complete(2 * d + 1).unwrap();
        let check =
            gyarfas_check(&g, DEFAULT_CHROMATIC_BUDGET, &SpectrumOptions::exhaustive()).unwrap();
        assert_eq!(check.chromatic_number as usize, 2 * d + 1);
        assert_eq!(check.odd_length_count, d, "equality on K_{}", 2 * d + 1);
    }

    // Consecutive-lengths pipeline on K_9.
    let k9 = generators::complete(9).unwrap();
    let cert = consecutive_cycles_chromatic(&k9, &PipelineConfig::default(), DEFAULT_CHROMATIC_BUDGET)
        .unwrap();
    let file = CertificateFile::from_certificate(&cert, 0, BudgetInfo::default());
    verify_certificate(&k9, &file).unwrap();
    assert!(cert.run_count >= 3);
    assert!(cert.cycles.iter().any(|c| c.len() % 2 == 1));
    println!(
        "acceptance 09 PASS: odd-count check on {checked} graphs (equality on K_3..K_9), K_9 run of {} incl. odd lengths",
        cert.run_count
    );
}

#[test]
fn acceptance_10_sigma_avoidance_arithmetic() {
    // Fixed tower instance against an independent high-precision oracle:
    // every term is an exact rational times ln 2.
    let sigma = SequenceSpec::powers_of_two();
    let pi = SubsequenceChoice::towers(4).unwrap();
    let n = BigUint::from(1u32) << 16;
    let bound = sigma_free_exponent(&sigma, &pi, 4, &n).unwrap();
    let q_num: u128 = 2 * 65536 + 65536 + (3 * 65536) / 2 + (15 * 65536) / 8 + 2 * 16;
    let q = q_num as f64 / 65536.0;
    let oracle_value = 24.0 + q * std::f64::consts::LN_2;
    assert!(
        (bound.exponent - oracle_value).abs() < 1e-9,
        "{} vs oracle {}",
        bound.exponent,
        oracle_value
    );
    assert!((bound.exponent - 28.419).abs() < 1e-3);

    // Recurrence coefficients hit the defining inequality with equality.
    let deltas: Vec<BigUint> = (1..=4)
        .map(|i| delta(&sigma, &pi, i, 1_000_000).unwrap())
        .collect();
    let coeffs = edge_bound_coefficients(&pi, &deltas, 4).unwrap();
    for i in 2..=4usize {
        let pi_prev = match i {
            2 => 2.0,
            3 => 4.0,
            _ => 16.0,
        };
        let lhs = pi_prev * (coeffs[i - 1] - coeffs[i - 2] - 288f64.ln());
        let rhs = 2.0 * ln_big(&deltas[i - 1]);
        assert!(
            (lhs - rhs).abs() <= 1e-12 * rhs.abs(),
            "equality violated at {i}: {lhs} vs {rhs}"
        );
    }

    // The iterated-log bound is affine in log*, across n up to 2^65536.
    let slope = 6.0 + 2.0 * 4f64.ln();
    let ns = [
        BigUint::from(2u32),
        BigUint::from(16u32),
        BigUint::from(1u32) << 16,
        BigUint::from(1u32) << 65536,
    ];
    let mut stars = Vec::new();
    for n in &ns {
        let b = log_star_degree_exponent(&sigma, n).unwrap();
        assert!((b.exponent - (slope * b.log_star as f64 + 2.0)).abs() < 1e-9);
        stars.push(b.log_star);
    }
    assert_eq!(stars, vec![1, 3, 4, 5]);
    println!(
        "acceptance 10 PASS: tower exponent {:.4} (oracle agreement 1e-9), coefficient equality to 1e-12, log-star bound affine over log* = {stars:?}",
        bound.exponent
    );
}

#[test]
fn acceptance_11_conjecture_scans() {
    // Exhaustive externally generated stream: every connected graph of
    // minimum degree 3 on at most 7 vertices, up to isomorphism.
    let text = include_str!("data/mindeg3_connected_atlas.el");
    let stream = cyclespect::graph::parse_edge_list_stream(text);
    assert_eq!(stream.len(), 173);
    let report = erdos_gyarfas_scan(
        stream.into_iter(),
        None,
        50_000_000,
        "atlas <= 7 vertices".into(),
        None,
    );
    assert_eq!(report.parse_errors, 0);
    assert_eq!(report.filtered_out, 0);
    assert_eq!(report.instances_checked, 173);
    assert!(report.unknown_instances.is_empty(), "unknowns: {:?}", report.unknown_instances);
    assert!(report.candidates.is_empty(), "power-of-two-free candidates found");

    // 1000 random instances of chromatic number >= 4.
    let graphs = random_min_degree_graphs(9, 3, 14, 1400, 0xACC11);
    let qualifying = graphs
        .iter()
        .filter(|g| matches!(chromatic_number(g, DEFAULT_CHROMATIC_BUDGET), Ok((chi, _)) if chi >= 4))
        .count();
    assert!(qualifying >= 1000, "only {qualifying} instances reach chromatic number 4");
    let report = power_plus_one_scan(
        graphs.into_iter().map(Ok),
        Some(1000),
        50_000_000,
        "random n=9".into(),
        Some(0xACC11),
    );
    assert!(report.instances_checked >= 1000);
    assert!(report.candidates.is_empty());
    assert!(report.unknown_instances.is_empty());
    println!(
        "acceptance 11 PASS: exhaustive stream of 173 graphs and {} random chi>=4 instances, zero candidates, zero unknowns",
        report.instances_checked
    );
}

#[test]
fn acceptance_12_end_to_end_certificates_verify() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_cyclespect");
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.el");
    let cert_path = dir.path().join("cert.json");

    // Generate, pipe through the pipeline, verify.
    let out = Command::new(bin)
        .args(["gen", "--kind", "random-regular", "--params", "60,12", "--seed", "9"])
        .output()
        .unwrap();
    assert!(out.status.success());
    std::fs::write(&graph_path, &out.stdout).unwrap();

    let status = Command::new(bin)
        .args([
            "pipeline",
            "--input",
            graph_path.to_str().unwrap(),
            "--d-param",
            "1",
            "--seed",
            "9",
            "--out",
            cert_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());

    let status = Command::new(bin)
        .args([
            "verify",
            "--graph",
            graph_path.to_str().unwrap(),
            "--certificate",
            cert_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());

    // The chromatic pipeline's certificate verifies too.
    let k9_path = dir.path().join("k9.el");
    let k9_cert = dir.path().join("k9cert.json");
    let out = Command::new(bin)
        .args(["gen", "--kind", "complete", "--params", "9"])
        .output()
        .unwrap();
    std::fs::write(&k9_path, &out.stdout).unwrap();
    let status = Command::new(bin)
        .args([
            "chromatic",
            "--input",
            k9_path.to_str().unwrap(),
            "--op",
            "pipeline",
            "--out",
            k9_cert.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let status = Command::new(bin)
        .args([
            "verify",
            "--graph",
            k9_path.to_str().unwrap(),
            "--certificate",
            k9_cert.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());

    // A mutated certificate must fail verification.
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    let cycle0 = value["cycles"][0].as_array().unwrap().clone();
    value["cycles"][0][0] = cycle0[1].clone();
    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, serde_json::to_string(&value).unwrap()).unwrap();
    let status = Command::new(bin)
        .args([
            "verify",
            "--graph",
            graph_path.to_str().unwrap(),
            "--certificate",
            bad_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(!status.success(), "tampered certificate verified");

    // Run-count mismatch must fail as well.
    let mut value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    value["run_count"] = serde_json::json!(value["run_count"].as_u64().unwrap() + 1);
    std::fs::write(&bad_path, serde_json::to_string(&value).unwrap()).unwrap();
    let status = Command::new(bin)
        .args([
            "verify",
            "--graph",
            graph_path.to_str().unwrap(),
            "--certificate",
            bad_path.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(!status.success(), "inconsistent run count verified");

    println!("acceptance 12 PASS: emitted certificates verify; mutated ones are rejected");
}

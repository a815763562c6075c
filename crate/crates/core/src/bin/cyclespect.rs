//! Command-line front end: graph generation, spectrum and girth reports,
//! the certificate-producing pipelines, closed-form bounds, conjecture
//! scans, and certificate verification.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error. Every JSON report
//! carries the tool version, the seed, and the budgets in force.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::Ratio;

use cyclespect::bounds::{
    ex_bound, hfree_exponents, log_star_degree_exponent, moore_bound,
    optimize_sigma_free_exponent, sigma_free_exponent, turan_expansion_size, HFreeSpec,
    SequenceSpec, SubsequenceChoice,
};
use cyclespect::chromatic::{
    chromatic_number, consecutive_cycles_chromatic, critical_subgraph, gyarfas_check,
    DEFAULT_CHROMATIC_BUDGET,
};
use cyclespect::conjectures::{erdos_gyarfas_scan, power_plus_one_scan, random_min_degree_graphs};
use cyclespect::extraction::{
    consecutive_even_cycles, generalized_pipeline, PipelineConfig,
};
use cyclespect::generators;
use cyclespect::graph::{girth, parse_edge_list_stream, Graph};
use cyclespect::report::{
    scan_report, spectrum_report, tool_version, verify_certificate, BudgetInfo, CertificateFile,
    SCHEMA_VERSION,
};
use cyclespect::spectrum::{cycle_spectrum, SpectrumOptions, DEFAULT_NODE_BUDGET};
use cyclespect::DEFAULT_SEED;

#[derive(Parser)]
#[command(name = "cyclespect", version, about = "Exact cycle spectra, certified cycle families, and extremal bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph as an edge list.
    Gen {
        /// complete | complete-bipartite | cycle | path | theta |
        /// random-regular | petersen | heawood | mcgee | tutte-coxeter
        #[arg(long)]
        kind: String,
        /// Comma-separated integer parameters for the kind.
        #[arg(long, value_delimiter = ',')]
        params: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact cycle-length spectrum of a graph, as a JSON report.
    Spectrum {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Embed one witness cycle per realized length.
        #[arg(long)]
        witnesses: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Girth of a graph.
    Girth {
        #[arg(long)]
        input: PathBuf,
    },
    /// Certified family of cycles of consecutive even lengths.
    Pipeline {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        d_param: u64,
        #[arg(long, value_enum, default_value_t = PipelineMode::Girth)]
        mode: PipelineMode,
        /// Turán coefficient a for the generalized mode (ex(n,H) <= a n^2b).
        #[arg(long, default_value_t = 1.0)]
        turan_a: f64,
        /// Turán exponent parameter b for the generalized mode.
        #[arg(long, default_value_t = 0.75)]
        turan_b: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chromatic-number operations and the consecutive-lengths pipeline.
    Chromatic {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        op: ChromaticOp,
        /// Target chromatic number for the critical-subgraph operation.
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CHROMATIC_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bound evaluation, as JSON with a term breakdown.
    Bound {
        /// Minimum order of a graph with this minimum degree and girth.
        #[arg(long, num_args = 2, value_names = ["D", "G"])]
        moore: Option<Vec<u64>>,
        /// Degree bound for graphs avoiding a sequence's cycle lengths:
        /// sequence name and order n (decimal or `2^k`).
        #[arg(long, num_args = 2, value_names = ["SIGMA", "N"])]
        sigma_free: Option<Vec<String>>,
        /// Search subsequence choices instead of the fixed tower choice.
        #[arg(long)]
        optimize: bool,
        /// Iterated-logarithm degree bound for an exponentially bounded
        /// sequence: sequence name and order n.
        #[arg(long, num_args = 2, value_names = ["SIGMA", "N"])]
        log_star: Option<Vec<String>>,
        /// Expansion size from a Turán bound: a, b, d.
        #[arg(long, num_args = 3, value_names = ["A", "B", "D"])]
        turan_expansion: Option<Vec<String>>,
        /// H-free exponents: `r:R,c:COEF` or `c2k:K` or `t:NUM/DEN,c:COEF`.
        #[arg(long)]
        hfree: Option<String>,
        /// Order at which to evaluate the Turán-number bound for --hfree.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conjecture scans over graph streams.
    Scan {
        #[arg(long, value_enum)]
        target: ScanTarget,
        #[arg(long, value_enum)]
        source: ScanSource,
        /// Stream file (blank-line-separated edge lists) for --source file.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Order for --source random.
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Minimum degree for --source random.
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Number of random instances.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate against a graph; exits nonzero on mismatch.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineMode {
    Girth,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChromaticOp {
    Chi,
    Critical,
    Pipeline,
    Gyarfas,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanTarget {
    Pow2,
    Pow2plus1,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanSource {
    File,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            kind,
            params,
            seed,
            out,
        } => {
            let g = build_graph(&kind, &params, seed)?;
            emit_text(out.as_deref(), &g.to_edge_list())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum {
            input,
            max_len,
            budget,
            witnesses,
            out,
        } => {
            let g = load_graph(&input)?;
            let opts = SpectrumOptions {
                max_len,
                node_budget: budget,
                store_witnesses: witnesses,
            };
            let spec = cycle_spectrum(&g, &opts);
            let budgets = BudgetInfo {
                spectrum_nodes: budget,
                ..BudgetInfo::default()
            };
            let report = spectrum_report(&g, &spec, DEFAULT_SEED, budgets, witnesses);
            emit_json(out.as_deref(), &serde_json::to_value(&report)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Girth { input } => {
            let g = load_graph(&input)?;
            let value = serde_json::json!({
                "schema": SCHEMA_VERSION,
                "tool_version": tool_version(),
                "order": g.vertex_count(),
                "edges": g.edge_count(),
                "girth": girth(&g),
            });
            emit_json(None, &value)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Pipeline {
            input,
            d_param,
            mode,
            turan_a,
            turan_b,
            seed,
            out,
        } => {
            let g = load_graph(&input)?;
            let cfg = PipelineConfig {
                seed,
                ..PipelineConfig::default()
            };
            let cert = match mode {
                PipelineMode::Girth => consecutive_even_cycles(&g, d_param, &cfg),
                PipelineMode::Generalized => {
                    let a = turan_a;
                    let b = turan_b;
                    if !(a > 0.0 && b > 0.5 && b < 1.0) {
                        bail!("generalized mode needs turan-a > 0 and 1/2 < turan-b < 1");
                    }
                    let expansion = move |d: u64| {
                        turan_expansion_size(a, b, d.max(1))
                            .map(|(_, size)| size)
                            .unwrap_or(1)
                    };
                    let factor = (18.0 * a).ceil() as u64;
                    generalized_pipeline(&g, &expansion, factor, &cfg)
                }
            }
            .map_err(|e| anyhow!("{e}"))?;
            let file = CertificateFile::from_certificate(
                &cert,
                seed,
                BudgetInfo {
                    rotation_budget: cfg.rotation_budget,
                    ..BudgetInfo::default()
                },
            );
            emit_json(out.as_deref(), &serde_json::to_value(&file)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chromatic {
            input,
            op,
            d,
            seed,
            budget,
            out,
        } => {
            let g = load_graph(&input)?;
            match op {
                ChromaticOp::Chi => {
                    let (chi, witness) = chromatic_number(&g, budget)?;
                    let value = serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "tool_version": tool_version(),
                        "seed": seed,
                        "budgets": { "chromatic_nodes": budget },
                        "chromatic_number": chi,
                        "coloring": witness.colors,
                    });
                    emit_json(out.as_deref(), &value)?;
                }
                ChromaticOp::Critical => {
                    let target = d.ok_or_else(|| anyhow!("--d is required for --op critical"))?;
                    let sub = critical_subgraph(&g, target, budget)?;
                    let value = serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "tool_version": tool_version(),
                        "seed": seed,
                        "budgets": { "chromatic_nodes": budget },
                        "target": target,
                        "vertices": sub.to_parent,
                        "edge_list": sub.graph.to_edge_list(),
                    });
                    emit_json(out.as_deref(), &value)?;
                }
                ChromaticOp::Pipeline => {
                    let cfg = PipelineConfig {
                        seed,
                        ..PipelineConfig::default()
                    };
                    let cert = consecutive_cycles_chromatic(&g, &cfg, budget)
                        .map_err(|e| anyhow!("{e}"))?;
                    let file = CertificateFile::from_certificate(
                        &cert,
                        seed,
                        BudgetInfo {
                            chromatic_nodes: budget,
                            ..BudgetInfo::default()
                        },
                    );
                    emit_json(out.as_deref(), &serde_json::to_value(&file)?)?;
                }
                ChromaticOp::Gyarfas => {
                    let check = gyarfas_check(&g, budget, &SpectrumOptions::exhaustive())?;
                    let value = serde_json::json!({
                        "schema": SCHEMA_VERSION,
                        "tool_version": tool_version(),
                        "seed": seed,
                        "budgets": { "chromatic_nodes": budget },
                        "chromatic_number": check.chromatic_number,
                        "odd_length_count": check.odd_length_count,
                        "passes": check.passes,
                    });
                    emit_json(out.as_deref(), &value)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound {
            moore,
            sigma_free,
            optimize,
            log_star: log_star_args,
            turan_expansion,
            hfree,
            n,
            out,
        } => {
            let value = bound_command(
                moore,
                sigma_free,
                optimize,
                log_star_args,
                turan_expansion,
                hfree,
                n,
            )?;
            emit_json(out.as_deref(), &value)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            target,
            source,
            input,
            n,
            d,
            count,
            seed,
            limit,
            budget,
            out,
        } => {
            let (stream, parameters): (Vec<_>, String) = match source {
                ScanSource::File => {
                    let path =
                        input.ok_or_else(|| anyhow!("--input is required for --source file"))?;
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    (
                        parse_edge_list_stream(&text),
                        format!("file {}", path.display()),
                    )
                }
                ScanSource::Random => {
                    let graphs = random_min_degree_graphs(n, d, n / 2, count, seed);
                    (
                        graphs.into_iter().map(Ok).collect(),
                        format!("random n={n} d={d} count={count} seed={seed}"),
                    )
                }
            };
            let report = match target {
                ScanTarget::Pow2 => erdos_gyarfas_scan(
                    stream.into_iter(),
                    limit,
                    budget,
                    parameters,
                    Some(seed),
                ),
                ScanTarget::Pow2plus1 => power_plus_one_scan(
                    stream.into_iter(),
                    limit,
                    budget,
                    parameters,
                    Some(seed),
                ),
            };
            let file = scan_report(&report);
            emit_json(out.as_deref(), &serde_json::to_value(&file)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graph, certificate } => {
            let g = load_graph(&graph)?;
            let text = std::fs::read_to_string(&certificate)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let file: CertificateFile = serde_json::from_str(&text)
                .with_context(|| "parsing certificate JSON".to_string())?;
            match verify_certificate(&g, &file) {
                Ok(()) => {
                    println!("certificate verified: run of {} lengths from {}", file.run_count, file.run_start);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("certificate rejected: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn build_graph(kind: &str, params: &[u64], seed: u64) -> Result<Graph> {
    let p = |i: usize| -> Result<usize> {
        params
            .get(i)
            .copied()
            .map(|v| v as usize)
            .ok_or_else(|| anyhow!("kind `{kind}` needs at least {} parameter(s)", i + 1))
    };
    let g = match kind {
        "complete" => generators::complete(p(0)?)?,
        "complete-bipartite" => generators::complete_bipartite(p(0)?, p(1)?)?,
        "cycle" => generators::cycle(p(0)?)?,
        "path" => generators::path(p(0)?)?,
        "theta" => generators::theta_graph(p(0)?, p(1)?, p(2)?)?.0,
        "random-regular" => generators::random_regular(p(0)?, p(1)?, seed)?,
        cage => generators::cage(cage.parse()?),
    };
    Ok(g)
}

#[allow(clippy::too_many_arguments)]
fn bound_command(
    moore: Option<Vec<u64>>,
    sigma_free: Option<Vec<String>>,
    optimize: bool,
    log_star_args: Option<Vec<String>>,
    turan_expansion: Option<Vec<String>>,
    hfree: Option<String>,
    n: Option<u64>,
) -> Result<serde_json::Value> {
    let base = serde_json::json!({
        "schema": SCHEMA_VERSION,
        "tool_version": tool_version(),
    });
    let mut value = base;
    let obj = value.as_object_mut().unwrap();

    if let Some(args) = moore {
        let bound = moore_bound(args[0], args[1])?;
        obj.insert(
            "moore".into(),
            serde_json::json!({ "d": args[0], "g": args[1], "order": bound.to_string() }),
        );
    }
    if let Some(args) = sigma_free {
        let sigma = sequence_by_name(&args[0])?;
        let n_big = parse_big(&args[1])?;
        if optimize {
            let (choice, r, exponent) = optimize_sigma_free_exponent(&sigma, &n_big, 200)?;
            obj.insert(
                "sigma_free".into(),
                serde_json::json!({
                    "sequence": sigma.name(),
                    "n": args[1],
                    "optimized": true,
                    "depth": r,
                    "subsequence": choice.values.iter().take(r).map(|v| v.to_string()).collect::<Vec<_>>(),
                    "exponent": exponent,
                }),
            );
        } else {
            let pi = tower_choice_for(&n_big)?;
            let r = pi.depth();
            let bound = sigma_free_exponent(&sigma, &pi, r, &n_big)?;
            obj.insert(
                "sigma_free".into(),
                serde_json::json!({
                    "sequence": sigma.name(),
                    "n": args[1],
                    "optimized": false,
                    "depth": r,
                    "subsequence": pi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    "exponent": bound.exponent,
                    "terms": bound.terms,
                    "gaps": bound.deltas.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                }),
            );
        }
    }
    if let Some(args) = log_star_args {
        let sigma = sequence_by_name(&args[0])?;
        let n_big = parse_big(&args[1])?;
        let bound = log_star_degree_exponent(&sigma, &n_big)?;
        obj.insert(
            "log_star".into(),
            serde_json::json!({
                "sequence": sigma.name(),
                "n": args[1],
                "log_star": bound.log_star,
                "exponent": bound.exponent,
                "greedy_subsequence": bound.greedy_pi.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "greedy_satisfies_growth": bound.greedy_satisfies_growth,
            }),
        );
    }
    if let Some(args) = turan_expansion {
        let a: f64 = args[0].parse().context("parsing a")?;
        let b: f64 = args[1].parse().context("parsing b")?;
        let d: u64 = args[2].parse().context("parsing d")?;
        let (min_degree, size) = turan_expansion_size(a, b, d)?;
        obj.insert(
            "turan_expansion".into(),
            serde_json::json!({
                "a": a, "b": b, "d": d,
                "min_degree_required": min_degree,
                "expansion_size": size,
            }),
        );
    }
    if let Some(spec_text) = hfree {
        let spec = parse_hfree(&spec_text)?;
        let (t, run) = hfree_exponents(&spec);
        let mut entry = serde_json::json!({
            "spec": spec_text,
            "t": { "num": t.numer(), "den": t.denom() },
            "run_exponent": { "num": run.numer(), "den": run.denom() },
        });
        if let Some(order) = n {
            entry.as_object_mut().unwrap().insert(
                "ex_bound".into(),
                serde_json::json!({ "n": order, "value": ex_bound(order, &spec) }),
            );
        }
        obj.insert("hfree".into(), entry);
    }
    if value.as_object().unwrap().len() <= 2 {
        bail!("bound: nothing to compute; pass one of --moore, --sigma-free, --log-star, --turan-expansion, --hfree");
    }
    Ok(value)
}

/// Standard tower subsequence just deep enough to cover n.
fn tower_choice_for(n: &BigUint) -> Result<SubsequenceChoice> {
    for depth in 1..=5usize {
        let pi = SubsequenceChoice::towers(depth)?;
        if &pi.value(depth) >= n {
            return Ok(pi);
        }
    }
    bail!("n exceeds the representable tower range (beyond 2^65536)")
}

fn sequence_by_name(name: &str) -> Result<SequenceSpec> {
    SequenceSpec::by_name(name).ok_or_else(|| {
        anyhow!("unknown sequence `{name}`; use powers_of_two, towers, twice_primes or even_squares")
    })
}

/// Parses `123` or `2^123` into a big integer.
fn parse_big(text: &str) -> Result<BigUint> {
    if let Some(exp) = text.strip_prefix("2^") {
        let e: usize = exp.parse().context("parsing exponent")?;
        if e > 1 << 20 {
            bail!("exponent too large to represent");
        }
        return Ok(BigUint::from(1u32) << e);
    }
    text.parse::<BigUint>()
        .map_err(|_| anyhow!("`{text}` is not an integer (use decimal or 2^k)"))
}

/// `r:R,c:COEF` | `c2k:K` | `t:NUM/DEN,c:COEF`
fn parse_hfree(text: &str) -> Result<HFreeSpec> {
    let fields: std::collections::BTreeMap<&str, &str> = text
        .split(',')
        .filter_map(|part| part.split_once(':'))
        .collect();
    if let Some(r) = fields.get("r") {
        let coefficient: f64 = fields
            .get("c")
            .ok_or_else(|| anyhow!("r-half-bounded spec needs an explicit coefficient `c:`"))?
            .parse()?;
        return Ok(HFreeSpec::r_half_bounded(r.parse()?, coefficient)?);
    }
    if let Some(k) = fields.get("c2k") {
        return Ok(HFreeSpec::even_cycle(k.parse()?)?);
    }
    if let Some(t) = fields.get("t") {
        let ratio = match t.split_once('/') {
            Some((num, den)) => Ratio::new(num.parse()?, den.parse()?),
            None => Ratio::from_integer(t.parse()?),
        };
        let coefficient: f64 = fields
            .get("c")
            .ok_or_else(|| anyhow!("generic spec needs a coefficient `c:`"))?
            .parse()?;
        return Ok(HFreeSpec::generic(ratio, coefficient)?);
    }
    bail!("could not parse H-free spec `{text}`; use r:R,c:C or c2k:K or t:T,c:C")
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit_text(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(out: Option<&Path>, value: &serde_json::Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    emit_text(out, &text)
}

/// Writes through a sibling temp file and renames, so readers never see a
/// half-written report.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
        None => PathBuf::from(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
    };
    {
        let mut f = std::fs::File::create(&tmp)
            .with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

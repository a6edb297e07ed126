//! `vat`: exact vertex attack tolerance, conductance and spectral-gap
//! computation, plus batch checking of the inequalities relating them.
//!
//! Exit codes: 0 success, 1 an inequality failed during `verify`,
//! 2 bad usage, unreadable input or an unwritable output.

mod input;
mod output;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use vat_core::generators::{self, FamilySpec};
use vat_core::metrics::{self, Enumeration};
use vat_core::verifier::{run_suite, Check, Keep, SuiteOptions, VerifyOptions};
use vat_core::{io, spectral, Graph};

use output::{Format, MetricsRecord};

#[derive(Parser)]
#[command(name = "vat", version, about = "Vertex attack tolerance, conductance and spectral gap of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec and write it as an edge list.
    Gen {
        /// e.g. `cycle:8`, `circulant:10,1+3`, `random_regular:20,3,seed=7`
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute metrics for one graph.
    Metrics(MetricsArgs),
    /// Check the inequalities on a batch of graphs.
    Verify(VerifyArgs),
    /// Write the standard corpus as edge-list files plus a manifest.
    Corpus {
        dir: PathBuf,
        /// Largest n for exhaustively enumerated regular graphs.
        #[arg(long, default_value_t = 6)]
        exhaustive_max: usize,
        #[arg(long, default_value_t = 100)]
        random_samples: usize,
    },
}

#[derive(Args)]
struct EnumArgs {
    /// Maximum vertex count for exact enumeration.
    #[arg(long, env = "VAT_ENUM_LIMIT", default_value_t = metrics::DEFAULT_LIMIT)]
    limit: usize,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct MetricsArgs {
    /// Edge-list file or family spec.
    input: String,
    #[arg(long)]
    vat: bool,
    #[arg(long)]
    conductance: bool,
    #[arg(long)]
    lambda2: bool,
    /// Spectral sweep-cut conductance.
    #[arg(long)]
    sweep: bool,
    /// (α,β)-VAT with unit weights, e.g. `--alpha-beta 2,1`.
    #[arg(long, value_name = "ALPHA,BETA", value_parser = input::parse_alpha_beta)]
    alpha_beta: Option<(f64, f64)>,
    /// Cost/value weighted VAT using the weights in the input file.
    #[arg(long)]
    weighted: bool,
    /// Analyse the largest connected component of a disconnected input.
    #[arg(long)]
    restrict_lcc: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    enumeration: EnumArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Family name: cycle, complete, star, path, hypercube,
    /// complete_bipartite, circulant, random_regular, petersen.
    #[arg(long)]
    family: Vec<String>,
    /// Parameter range for --family, e.g. `3..12`.
    #[arg(long = "n", value_name = "A..B", value_parser = input::parse_range)]
    n_range: Option<RangeInclusive<usize>>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Offsets for circulant families, e.g. `1+3`.
    #[arg(long, value_delimiter = '+')]
    offsets: Vec<usize>,
    /// Individual family spec; repeatable.
    #[arg(long)]
    spec: Vec<String>,
    /// Edge-list file; repeatable.
    #[arg(long)]
    file: Vec<PathBuf>,
    /// Every connected d-regular graph on N labelled vertices.
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    exhaustive: Vec<usize>,
    /// Named families, random regular samples and exhaustive small graphs.
    #[arg(long)]
    standard_corpus: bool,
    /// Largest n of the exhaustive part of --standard-corpus.
    #[arg(long, default_value_t = 8)]
    exhaustive_max: usize,
    #[arg(long, default_value_t = 100)]
    random_samples: usize,
    /// `all` or a comma list of cheeger, thm12, thm13, cor14, lemma23,
    /// proof_facts, remarks.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Absolute tolerance for comparisons involving eigenvalues.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Emit only failing reports; the summary still counts everything.
    #[arg(long)]
    failures_only: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    enumeration: EnumArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { spec, output } => cmd_gen(&spec, output.as_deref()),
        Command::Metrics(args) => cmd_metrics(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Corpus { dir, exhaustive_max, random_samples } => {
            cmd_corpus(&dir, exhaustive_max, random_samples)
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(f))
}

fn regularity(g: &Graph) -> String {
    g.regularity().map_or("irregular".to_string(), |d| d.to_string())
}

fn cmd_gen(spec: &str, output: Option<&Path>) -> Result<ExitCode> {
    let spec: FamilySpec = spec.parse()?;
    let g = spec.build()?;
    emit(&io::write_edge_list(&g), output)?;
    eprintln!("{spec}: n={} m={} d={}", g.n(), g.m(), regularity(&g));
    Ok(ExitCode::SUCCESS)
}

fn cmd_metrics(args: &MetricsArgs) -> Result<ExitCode> {
    let (id, mut g) = input::load(&args.input)?;
    if args.enumeration.limit > metrics::HARD_LIMIT {
        bail!("--limit {} exceeds the hard limit {}", args.enumeration.limit, metrics::HARD_LIMIT);
    }
    if !g.is_connected() {
        if !args.restrict_lcc {
            bail!("{id} is disconnected; pass --restrict-lcc to analyse its largest component");
        }
        g = g.restrict_to_largest_component();
        eprintln!("{id}: restricted to largest component ({} vertices)", g.n());
    }
    let any = args.vat
        || args.conductance
        || args.lambda2
        || args.sweep
        || args.alpha_beta.is_some()
        || args.weighted;
    let (vat, conductance, lambda2) = if any {
        (args.vat, args.conductance, args.lambda2)
    } else {
        (true, true, true)
    };
    let opts = Enumeration::with_limit(args.enumeration.limit);

    let record = with_pool(args.enumeration.jobs, || -> Result<MetricsRecord> {
        let mut rec = MetricsRecord { graph_id: id.clone(), n: g.n(), m: g.m(), d: g.regularity(), ..Default::default() };
        if vat {
            rec.vat = Some(metrics::vat_exact_with(&g, &opts)?);
        }
        if conductance {
            rec.conductance = Some(metrics::conductance_exact_with(&g, &opts)?);
        }
        if lambda2 || args.sweep {
            let spec = spectral::lambda2(&g)?;
            if args.sweep {
                rec.sweep = Some(spectral::sweep_from_vector(&g, &spec.eigenvector));
            }
            if lambda2 {
                rec.lambda2 = Some(spec);
            }
        }
        if let Some((a, b)) = args.alpha_beta {
            rec.alpha_beta_vat = Some(metrics::alpha_beta_vat_exact_with(&g, a, b, &opts)?);
        }
        if args.weighted {
            rec.weighted_vat = Some(metrics::weighted_vat_exact_with(&g, &opts)?);
        }
        Ok(rec)
    })??;

    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&record.to_json())? + "\n",
        Format::Csv => record.to_csv()?,
    };
    emit(&text, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn collect_graphs(args: &VerifyArgs) -> Result<Vec<(String, Graph)>> {
    let mut graphs = Vec::new();
    if !args.family.is_empty() {
        let range = args.n_range.clone().context("--family needs --n A..B")?;
        for name in &args.family {
            for spec in input::expand_family(name, &range, args.degree, args.seed, &args.offsets)? {
                let g = spec.build()?;
                graphs.push((spec.to_string(), g));
            }
        }
    }
    for s in &args.spec {
        let spec: FamilySpec = s.parse()?;
        graphs.push((spec.to_string(), spec.build()?));
    }
    for path in &args.file {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let g = io::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
        graphs.push((path.display().to_string(), g));
    }
    if let [n, d] = args.exhaustive[..] {
        for (i, g) in generators::enumerate_small_regular(n, d)?.enumerate() {
            graphs.push((FamilySpec::Exhaustive { n, d, index: i }.to_string(), g));
        }
    }
    if args.standard_corpus {
        for (spec, g) in generators::standard_corpus(args.exhaustive_max, args.random_samples)? {
            graphs.push((spec.to_string(), g));
        }
    }
    if graphs.is_empty() {
        bail!("no graphs selected; use --family, --spec, --file, --exhaustive or --standard-corpus");
    }
    Ok(graphs)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let checks = Check::parse_list(&args.checks)?;
    if args.enumeration.limit > metrics::HARD_LIMIT {
        bail!("--limit {} exceeds the hard limit {}", args.enumeration.limit, metrics::HARD_LIMIT);
    }
    if !(args.tolerance >= 0.0 && args.tolerance.is_finite()) {
        bail!("--tolerance must be a non-negative number");
    }
    let graphs = collect_graphs(args)?;
    let opts = SuiteOptions {
        verify: VerifyOptions {
            enumeration: Enumeration::with_limit(args.enumeration.limit),
            tol: args.tolerance,
            ..VerifyOptions::default()
        },
        keep: if args.failures_only { Keep::Failures } else { Keep::All },
        parallel: true,
    };
    let report = with_pool(args.enumeration.jobs, || run_suite(&graphs, &checks, &opts))?;

    let text = match args.format {
        Format::Json => output::suite_json(&report)?,
        Format::Csv => output::suite_csv(&report)?,
    };
    emit(&text, args.output.as_deref())?;

    let s = &report.summary;
    eprintln!(
        "verify: {} graphs, {} reports, {} hold, {} strict, {} failed, {} skipped, {} equalities",
        s.graphs,
        s.reports,
        s.holds,
        s.strict_holds,
        s.failures,
        s.skipped,
        report.equalities.len()
    );
    const SHOWN: usize = 25;
    for e in report.equalities.iter().take(SHOWN) {
        eprintln!("  equality: {} {} d={}", e.graph_id, e.theorem.name(), e.d.map_or("-".into(), |d| d.to_string()));
    }
    if report.equalities.len() > SHOWN {
        eprintln!("  ... and {} more", report.equalities.len() - SHOWN);
    }
    Ok(if report.all_hold() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn file_stem(spec: &FamilySpec) -> String {
    spec.to_string()
        .chars()
        .map(|c| match c {
            ':' | ',' | '=' => '_',
            c => c,
        })
        .collect()
}

fn cmd_corpus(dir: &Path, exhaustive_max: usize, random_samples: usize) -> Result<ExitCode> {
    let corpus = generators::standard_corpus(exhaustive_max, random_samples)?;
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut manifest = csv::Writer::from_writer(Vec::new());
    manifest.write_record(["file", "spec", "n", "m", "d"])?;
    for (i, (spec, g)) in corpus.iter().enumerate() {
        let name = format!("{i:05}_{}.edges", file_stem(spec));
        fs::write(dir.join(&name), io::write_edge_list(g))
            .with_context(|| format!("writing {}", dir.join(&name).display()))?;
        manifest.write_record([
            name,
            spec.to_string(),
            g.n().to_string(),
            g.m().to_string(),
            g.regularity().map_or(String::new(), |d| d.to_string()),
        ])?;
    }
    let path = dir.join("manifest.csv");
    fs::write(&path, manifest.into_inner()?).with_context(|| format!("writing {}", path.display()))?;
    eprintln!("corpus: wrote {} graphs to {}", corpus.len(), dir.display());
    Ok(ExitCode::SUCCESS)
}

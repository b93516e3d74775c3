//! The `bzu` command line: ring analysis, claim census, isomorphism checks and DOT export.

pub mod cache;
pub mod document;
pub mod dot;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bzu_core::census::{
    analyze_ring_with, census_specs, claim_audit, graph_mapping, rigidity_audit, rings_isomorphic,
    verify_graph_isomorphism, Census, CensusOptions, Certificate, ClaimId, RingReport, Verdict,
};
use bzu_core::graph::build_graph;
use bzu_core::ring::{Ring, RingSpec, DEFAULT_BRUTE_FORCE_CAP, DEFAULT_ORDER_CAP};
use bzu_core::symmetry::{canonical_form, graph_aut, phi_analysis};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cache::Cache;
use document::{AutSummary, IsocheckReport, Payload, ReportDocument, SelfCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLAIM_FAILS: i32 = 2;

/// Ring automorphism groups larger than this are not compared with the graph.
const PHI_GROUP_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "bzu", version, about = "Bipartite zero-divisor/unit graphs of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached ring reports (overridden by BZU_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for census and rigidity runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for the randomized relabeling self-check in `isocheck`.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one ring, e.g. "Z/6" or "GF(4) x GF(2)[t]/(t^2)".
    Analyze { spec: String },
    /// Analyze every catalog ring and audit the claims C1..C11.
    Census {
        /// Bound on reduced rings; the non-reduced catalog uses at most 64.
        #[arg(long, default_value_t = 200)]
        max_order: u64,
        #[arg(long)]
        nonreduced_max: Option<u64>,
        #[arg(long, default_value_t = 32)]
        phi_max: u64,
        /// Comma-separated claim ids to report, e.g. C1,C7.
        #[arg(long, value_delimiter = ',', value_parser = parse_claim)]
        claims: Vec<ClaimId>,
    },
    /// Compare the graphs of two rings up to isomorphism.
    Isocheck { left: String, right: String },
    /// Automorphism groups of B(R) and of R.
    Aut { spec: String },
    /// Write B(R) in DOT.
    ExportDot { spec: String },
    /// Pairwise graph isomorphism among equal-order reduced rings.
    Rigidity {
        #[arg(long, default_value_t = 64)]
        max_order: u64,
    },
}

fn parse_claim(s: &str) -> std::result::Result<ClaimId, String> {
    s.parse()
}

fn parse_spec(text: &str) -> Result<RingSpec> {
    RingSpec::parse(text).with_context(|| format!("invalid ring spec `{text}`"))
}

fn check_bound(max_order: u64) -> Result<()> {
    if !(2..=DEFAULT_ORDER_CAP).contains(&max_order) {
        bail!("--max-order {max_order} is outside 2..={DEFAULT_ORDER_CAP}");
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, payload: Payload) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, &ReportDocument::new(payload))?;
    writeln!(out)?;
    Ok(())
}

fn unsupported(format: Format, command: &str) -> anyhow::Error {
    anyhow::anyhow!("--format {format:?} is not available for `{command}`")
}

fn analyze_cached(spec: &RingSpec, opts: &CensusOptions, cache: Option<&Cache>) -> Result<RingReport> {
    let text = spec.to_string();
    if let Some(r) = cache.and_then(|c| c.load(&text, opts)) {
        return Ok(r);
    }
    let report = analyze_ring_with(spec, opts).with_context(|| format!("analysis of `{text}` failed"))?;
    if let Some(c) = cache {
        if let Err(e) = c.store(&report, opts) {
            eprintln!("warning: could not cache `{text}`: {e}");
        }
    }
    Ok(report)
}

struct Ctx {
    format: Format,
    cache: Option<Cache>,
    seed: Option<u64>,
}

fn run(cli: Command, cx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    match cli {
        Command::Analyze { spec } => analyze(&spec, cx, out),
        Command::Census {
            max_order,
            nonreduced_max,
            phi_max,
            claims,
        } => {
            check_bound(max_order)?;
            let opts = CensusOptions {
                reduced_max: max_order,
                nonreduced_max: nonreduced_max.unwrap_or(max_order.min(64)),
                phi_max,
                brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            };
            check_bound(opts.nonreduced_max)?;
            census(&opts, &claims, cx, out)
        }
        Command::Isocheck { left, right } => isocheck(&left, &right, cx, out),
        Command::Aut { spec } => aut(&spec, cx, out),
        Command::ExportDot { spec } => {
            let ring = Ring::new(&parse_spec(&spec)?);
            out.write_all(dot::export_dot(&ring, &build_graph(&ring)).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Rigidity { max_order } => {
            check_bound(max_order)?;
            let rows = rigidity_audit(max_order)?;
            let fails = rows
                .iter()
                .any(|r| r.reduced && r.rings_isomorphic != Some(r.graphs_isomorphic));
            match cx.format {
                Format::Json => emit_json(out, Payload::Rigidity(rows))?,
                Format::Text => render::rigidity_text(out, &rows)?,
                Format::Csv => render::rigidity_csv(out, &rows)?,
                f => return Err(unsupported(f, "rigidity")),
            }
            Ok(if fails { EXIT_CLAIM_FAILS } else { EXIT_OK })
        }
    }
}

fn analyze(text: &str, cx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let spec = parse_spec(text)?;
    if cx.format == Format::Dot {
        let ring = Ring::new(&spec);
        out.write_all(dot::export_dot(&ring, &build_graph(&ring)).as_bytes())?;
        return Ok(EXIT_OK);
    }
    let report = analyze_cached(&spec, &CensusOptions::default(), cx.cache.as_ref())?;
    match cx.format {
        Format::Json => emit_json(out, Payload::RingReport(Box::new(report)))?,
        Format::Text => render::report_text(out, &report)?,
        Format::Csv => render::verdicts_csv(out, &claim_audit(std::slice::from_ref(&report)))?,
        Format::Dot => unreachable!(),
    }
    Ok(EXIT_OK)
}

fn census(opts: &CensusOptions, claims: &[ClaimId], cx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let specs = census_specs(opts.reduced_max, opts.nonreduced_max);
    let reports: Vec<RingReport> = specs
        .par_iter()
        .map(|s| analyze_cached(s, opts, cx.cache.as_ref()))
        .collect::<Result<_>>()?;
    let mut verdicts = claim_audit(&reports);
    if !claims.is_empty() {
        verdicts.retain(|v| claims.contains(&v.claim_id));
    }
    let fails = verdicts.iter().any(|v| v.verdict == Verdict::Fails);
    match cx.format {
        Format::Json => emit_json(
            out,
            Payload::Census(Box::new(Census {
                options: *opts,
                reports,
                verdicts,
            })),
        )?,
        Format::Text => render::verdicts_text(out, &verdicts)?,
        Format::Csv => render::verdicts_csv(out, &verdicts)?,
        f => return Err(unsupported(f, "census")),
    }
    Ok(if fails { EXIT_CLAIM_FAILS } else { EXIT_OK })
}

fn isocheck(left: &str, right: &str, cx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let (sl, sr) = (parse_spec(left)?, parse_spec(right)?);
    let (rl, rr) = (Ring::new(&sl), Ring::new(&sr));
    let (gl, gr) = (build_graph(&rl).graph.to_simple(), build_graph(&rr).graph.to_simple());
    let (cl, cr) = (canonical_form(&gl)?, canonical_form(&gr)?);
    let graphs_isomorphic = cl.bytes == cr.bytes;
    let mapping = if graphs_isomorphic {
        let Some(Certificate::GraphIsomorphism { mapping, .. }) = graph_mapping(&rl, &rr, &sr.to_string()) else {
            bail!("equal canonical forms without an isomorphism");
        };
        if !verify_graph_isomorphism(&rl, &rr, &mapping) {
            bail!("isomorphism failed edge verification");
        }
        let labels = mapping
            .iter()
            .map(|(a, b)| Ok((rl.label_element(a)?, rr.label_element(b)?)))
            .collect::<bzu_core::Result<Vec<_>>>()?;
        Some(labels)
    } else {
        None
    };
    let self_check = cx.seed.map(|seed| {
        let mut perm: Vec<usize> = (0..gl.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let passed = canonical_form(&gl.relabel(&perm)).is_ok_and(|c| c.bytes == cl.bytes);
        SelfCheck { seed, passed }
    });
    let (rings_isomorphic, reason) = rings_isomorphic(&rl, &rr);
    let report = IsocheckReport {
        left: sl.to_string(),
        right: sr.to_string(),
        graphs_isomorphic,
        rings_isomorphic,
        reason,
        left_digest: cl.digest(),
        right_digest: cr.digest(),
        mapping,
        self_check,
    };
    if report.self_check.as_ref().is_some_and(|s| !s.passed) {
        bail!("canonical form changed under a random relabeling");
    }
    match cx.format {
        Format::Json => emit_json(out, Payload::Isocheck(report))?,
        Format::Text => render::isocheck_text(out, &report)?,
        f => return Err(unsupported(f, "isocheck")),
    }
    Ok(EXIT_OK)
}

fn aut(text: &str, cx: &Ctx, out: &mut dyn Write) -> Result<i32> {
    let spec = parse_spec(text)?;
    let ring = Ring::new(&spec);
    let g = build_graph(&ring);
    let ring_aut = ring.aut_group(DEFAULT_BRUTE_FORCE_CAP).ok();
    let phi = match &ring_aut {
        Some(a) if a.order <= PHI_GROUP_LIMIT => Some(phi_analysis(&ring, DEFAULT_BRUTE_FORCE_CAP)?),
        _ => None,
    };
    let summary = AutSummary {
        spec_text: spec.to_string(),
        ring_aut_order: ring_aut.as_ref().map(|a| a.order),
        ring_aut_method: ring_aut.as_ref().map(|a| a.method),
        graph: graph_aut(&g.graph)?,
        phi,
    };
    match cx.format {
        Format::Json => emit_json(out, Payload::Aut(Box::new(summary)))?,
        Format::Text => render::aut_text(out, &summary)?,
        f => return Err(unsupported(f, "aut")),
    }
    Ok(EXIT_OK)
}

/// Runs `bzu` with the given arguments (program name first), writing to
/// stdout, and returns the process exit code.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cx = Ctx {
        format: cli.format,
        cache: Cache::resolve(cli.cache_dir.as_deref()),
        seed: cli.seed,
    };
    let mut buf: Vec<u8> = Vec::new();
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli.command, &cx, &mut buf)),
            Err(e) => Err(e.into()),
        },
        None => run(cli.command, &cx, &mut buf),
    };
    let mut out = std::io::stdout().lock();
    match result.and_then(|code| out.write_all(&buf).and_then(|_| out.flush()).map(|_| code).map_err(Into::into)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

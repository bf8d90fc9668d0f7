//! Command-line front end: analyze single links, reproduce the reference
//! tables, scan exponent ranges in parallel, and cross-verify the two torsion
//! routes.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use linksing::{
    bp_tuples_up_to, classify_link, cross_check, from_bp, infer_weights, make_standard,
    parse_polynomial, report_to_json, tables, BPExponents, ClassificationReport, Int,
    Lichnerowicz, LinkDescriptor, LinkSign, SeTableEntry, StandardKind,
};
use tables::{RowResult, RowStatus};

#[derive(Parser)]
#[command(
    name = "linksing",
    about = "Topology and canonical-metric classification of 5-dimensional links \
             of weighted-homogeneous hypersurface singularities",
    version
)]
struct Cli {
    /// Emit compact machine-readable JSON instead of human-oriented text
    #[arg(long, global = true)]
    json: bool,
    /// Suppress progress notes and summaries on stderr
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a single link given by exponents, weights, or a polynomial
    Analyze(AnalyzeArgs),
    /// Recompute the embedded reference tables and report PASS/FLAGGED/FAIL
    Tables(TablesArgs),
    /// Enumerate a range of links and stream the ones passing all filters
    Scan(ScanArgs),
    /// Cross-check the two torsion routes on all small BP tuples
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputSpec {
    /// Brieskorn-Pham exponents a0,a1,a2,a3 (each >= 2)
    #[arg(long, value_name = "A0,A1,...")]
    bp: Option<String>,
    /// Chain-polynomial exponents a0,a1,a2,a3
    #[arg(long, value_name = "A0,A1,...")]
    chain: Option<String>,
    /// Weight vector w0,w1,w2,w3 (requires --degree)
    #[arg(long, value_name = "W0,W1,...", requires = "degree")]
    weights: Option<String>,
    /// Weighted homogeneous polynomial, e.g. "z0^2+z1^3+z2^3+z3^18"
    #[arg(long, value_name = "TEXT")]
    poly: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputSpec,
    /// Degree of the defining polynomial (with --weights)
    #[arg(long, value_name = "D")]
    degree: Option<String>,
}

#[derive(Args)]
struct TablesArgs {
    /// Which table to recompute
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    table: u8,
    /// Number of parameter values per family, starting at each minimum
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    depth: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    Positive,
    Negative,
    Obstructed,
    SeCandidate,
    TorsionNontrivial,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Args)]
struct ScanArgs {
    /// BP exponent ranges, e.g. "2..5,2..5,2..5,2..5" or "2..30" with --slots 4
    #[arg(long, value_name = "RANGES", group = "family")]
    bp: Option<String>,
    /// Chain exponent ranges, same syntax as --bp
    #[arg(long, value_name = "RANGES", group = "family")]
    chain: Option<String>,
    /// Weight ranges (requires --degree range)
    #[arg(long, value_name = "RANGES", group = "family", requires = "degree")]
    weights: Option<String>,
    /// Degree range for --weights scans
    #[arg(long, value_name = "RANGE")]
    degree: Option<String>,
    /// Replicate a single range over this many slots
    #[arg(long, value_name = "N")]
    slots: Option<usize>,
    /// Keep only links passing every filter (repeatable)
    #[arg(long = "filter", value_enum)]
    filters: Vec<Filter>,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Record format; defaults to the --out extension, else jsonl
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads; output is byte-identical for any value
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check every BP tuple with 2 <= a0 <= ... <= a3 <= N
    #[arg(long, value_name = "N")]
    bp_max: u64,
    /// Worker threads
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Analyze(args) => cmd_analyze(&cli, args),
        Cmd::Tables(args) => cmd_tables(&cli, args),
        Cmd::Scan(args) => cmd_scan(&cli, args),
        Cmd::Verify(args) => cmd_verify(&cli, args),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_int_list(text: &str, what: &str) -> Result<Vec<Int>, String> {
    text.split(',')
        .map(|p| {
            Int::from_str(p.trim()).map_err(|_| format!("bad {what} entry '{}'", p.trim()))
        })
        .collect()
}

// -------------------------------------------------------------------------
// analyze
// -------------------------------------------------------------------------

fn build_report(cli_args: &AnalyzeArgs) -> Result<ClassificationReport, String> {
    let spec = &cli_args.input;
    let classify = |link: &LinkDescriptor, f, bp| classify_link(link, f, bp).map_err(|e| e.to_string());
    if let Some(text) = &spec.bp {
        let exps = parse_int_list(text, "exponent")?;
        let bp = BPExponents::new(exps).map_err(|e| e.to_string())?;
        let f = make_standard(StandardKind::BP, bp.exponents()).map_err(|e| e.to_string())?;
        return classify(&from_bp(&bp), Some(&f), Some(&bp));
    }
    if let Some(text) = &spec.chain {
        let exps = parse_int_list(text, "exponent")?;
        let f = make_standard(StandardKind::Chain, &exps).map_err(|e| e.to_string())?;
        let link = infer_weights(&f).map_err(|e| e.to_string())?;
        return classify(&link, Some(&f), None);
    }
    if let Some(text) = &spec.weights {
        let w = parse_int_list(text, "weight")?;
        let d = cli_args
            .degree
            .as_deref()
            .ok_or("--weights requires --degree")?;
        let d = Int::from_str(d.trim()).map_err(|_| format!("bad degree '{d}'"))?;
        let link = LinkDescriptor::new(w, d).map_err(|e| e.to_string())?;
        return classify(&link, None, None);
    }
    let text = spec.poly.as_deref().expect("clap enforces the input group");
    let f = parse_polynomial(text).map_err(|e| e.to_string())?;
    if f.variables() < 3 {
        return Err(format!(
            "need >= 3 variables for a link, found {}",
            f.variables()
        ));
    }
    let link = infer_weights(&f).map_err(|e| e.to_string())?;
    classify(&link, Some(&f), None)
}

fn cmd_analyze(cli: &Cli, args: &AnalyzeArgs) -> Result<ExitCode, String> {
    let report = build_report(args)?;
    let value = report_to_json(&report);
    if cli.json {
        println!("{value}");
    } else {
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    }
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------------------
// tables
// -------------------------------------------------------------------------

fn cmd_tables(cli: &Cli, args: &TablesArgs) -> Result<ExitCode, String> {
    let depth = args.depth as usize;
    let rows: Vec<RowResult> = match args.table {
        1 => tables::check_table1(),
        2 => tables::reproduce_table2(depth),
        3 => tables::reproduce_table3(depth),
        _ => unreachable!("clap range"),
    }
    .map_err(|e| e.to_string())?;

    let mut failed = false;
    let mut json_rows = Vec::new();
    for r in &rows {
        let (word, detail) = match &r.status {
            RowStatus::Pass => ("PASS", None),
            RowStatus::Flagged(why) => ("FLAGGED", Some(why.clone())),
            RowStatus::Fail(why) => {
                failed = true;
                ("FAIL", Some(why.clone()))
            }
        };
        if cli.json {
            json_rows.push(json!({
                "table": r.table,
                "row": r.row,
                "instance": r.instance,
                "status": word,
                "detail": detail,
            }));
        } else {
            match detail {
                Some(d) => println!("table {} row {} {}: {word} ({d})", r.table, r.row, r.instance),
                None => println!("table {} row {} {}: {word}", r.table, r.row, r.instance),
            }
        }
    }
    if cli.json {
        println!("{}", serde_json::Value::Array(json_rows));
    } else if !cli.quiet {
        println!(
            "{} rows checked, {}",
            rows.len(),
            if failed { "some FAILED" } else { "none failed" }
        );
    }
    Ok(if failed { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

// -------------------------------------------------------------------------
// scan
// -------------------------------------------------------------------------

struct ScanJob {
    family: Family,
    bounds: Vec<(Int, Int)>,
    degree_bounds: Option<(Int, Int)>,
    filters: Vec<Filter>,
    out: Option<PathBuf>,
    format: Format,
    workers: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Bp,
    Chain,
    WeightList,
}

fn parse_range(text: &str) -> Result<(Int, Int), String> {
    let text = text.trim();
    if let Some((lo, hi)) = text.split_once("..") {
        let lo = Int::from_str(lo.trim()).map_err(|_| format!("bad range '{text}'"))?;
        let hi = Int::from_str(hi.trim()).map_err(|_| format!("bad range '{text}'"))?;
        if lo > hi {
            return Err(format!("empty range '{text}'"));
        }
        Ok((lo, hi))
    } else {
        let v = Int::from_str(text).map_err(|_| format!("bad range '{text}'"))?;
        Ok((v.clone(), v))
    }
}

fn parse_bounds(text: &str, slots: Option<usize>) -> Result<Vec<(Int, Int)>, String> {
    let mut bounds: Vec<(Int, Int)> = text
        .split(',')
        .map(parse_range)
        .collect::<Result<_, _>>()?;
    if let Some(n) = slots {
        if bounds.len() != 1 {
            return Err("--slots requires a single range".into());
        }
        bounds = vec![bounds[0].clone(); n];
    }
    if bounds.len() != 4 {
        return Err(format!(
            "need exactly 4 ranges (or one range with --slots 4), found {}",
            bounds.len()
        ));
    }
    Ok(bounds)
}

fn scan_job(args: &ScanArgs) -> Result<ScanJob, String> {
    let (family, text) = if let Some(t) = &args.bp {
        (Family::Bp, t)
    } else if let Some(t) = &args.chain {
        (Family::Chain, t)
    } else if let Some(t) = &args.weights {
        (Family::WeightList, t)
    } else {
        return Err("one of --bp, --chain, --weights is required".into());
    };
    let bounds = parse_bounds(text, args.slots)?;
    if matches!(family, Family::Bp | Family::Chain) {
        for (lo, _) in &bounds {
            if lo < &Int::from(2) {
                return Err("exponent ranges must start at 2 or more".into());
            }
        }
    }
    let degree_bounds = match (family, &args.degree) {
        (Family::WeightList, Some(d)) => Some(parse_range(d)?),
        (Family::WeightList, None) => return Err("--weights requires --degree".into()),
        _ => None,
    };
    let format = args.format.unwrap_or_else(|| {
        match args.out.as_ref().and_then(|p| p.extension()) {
            Some(e) if e == "csv" => Format::Csv,
            _ => Format::Jsonl,
        }
    });
    Ok(ScanJob {
        family,
        bounds,
        degree_bounds,
        filters: args.filters.clone(),
        out: args.out.clone(),
        format,
        workers: args.workers as usize,
    })
}

fn enumerate_tuples(bounds: &[(Int, Int)]) -> Vec<Vec<Int>> {
    let mut out = vec![vec![]];
    for (lo, hi) in bounds {
        let mut next = Vec::new();
        for prefix in &out {
            let mut v = lo.clone();
            while &v <= hi {
                let mut t = prefix.clone();
                t.push(v.clone());
                next.push(t);
                v += 1;
            }
        }
        out = next;
    }
    out
}

fn passes(report: &ClassificationReport, filters: &[Filter]) -> bool {
    filters.iter().all(|f| match f {
        Filter::Positive => report.index.sign == LinkSign::Positive,
        Filter::Negative => report.index.sign == LinkSign::Negative,
        Filter::Obstructed => report.lichnerowicz == Lichnerowicz::Obstructed,
        Filter::SeCandidate => {
            report.index.sign == LinkSign::Positive
                && report.torsion_allowed
                && report.se_table != SeTableEntry::NotListed
        }
        Filter::TorsionNontrivial => !report.graph_route.torsion.is_trivial(),
    })
}

fn csv_record(input: &str, r: &ClassificationReport) -> String {
    format!(
        "{input};{};{};{};{:?};{};{};{};{:?};{:?}\n",
        r.descriptor
            .weights()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(","),
        r.descriptor.degree(),
        r.index.index,
        r.index.sign,
        r.graph_route.b2,
        r.graph_route.torsion.to_string_canonical(),
        r.smale.render(),
        r.lichnerowicz,
        r.se_table,
    )
}

fn scan_records(job: &ScanJob) -> (Vec<String>, usize, usize) {
    // expand the inputs in lexicographic order; each worker handles whole
    // tuples and the indexed collect restores input order
    let mut inputs: Vec<(Vec<Int>, Option<Int>)> = Vec::new();
    for tuple in enumerate_tuples(&job.bounds) {
        match &job.degree_bounds {
            None => inputs.push((tuple, None)),
            Some((lo, hi)) => {
                let mut d = lo.clone();
                while &d <= hi {
                    inputs.push((tuple.clone(), Some(d.clone())));
                    d += 1;
                }
            }
        }
    }
    let family = job.family;
    let filters = job.filters.clone();
    let format = job.format;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.workers)
        .build()
        .expect("thread pool");
    let results: Vec<Option<String>> = pool.install(|| {
        inputs
            .par_iter()
            .map(|(tuple, degree)| {
                let report = match family {
                    Family::Bp => {
                        let bp = BPExponents::new(tuple.clone()).ok()?;
                        classify_link(&from_bp(&bp), None, Some(&bp)).ok()?
                    }
                    Family::Chain => {
                        let f = make_standard(StandardKind::Chain, tuple).ok()?;
                        let link = infer_weights(&f).ok()?;
                        classify_link(&link, Some(&f), None).ok()?
                    }
                    Family::WeightList => {
                        let d = degree.clone().expect("weight scans carry a degree");
                        let link = LinkDescriptor::new(tuple.clone(), d).ok()?;
                        classify_link(&link, None, None).ok()?
                    }
                };
                if !passes(&report, &filters) {
                    return None;
                }
                let input = tuple
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let input = match degree {
                    Some(d) => format!("{input}@{d}"),
                    None => input,
                };
                Some(match format {
                    Format::Jsonl => {
                        let mut v = report_to_json(&report);
                        v["input"] = serde_json::Value::String(input);
                        format!("{v}\n")
                    }
                    Format::Csv => csv_record(&input, &report),
                })
            })
            .collect()
    });
    let total = results.len();
    let records: Vec<String> = results.into_iter().flatten().collect();
    let kept = records.len();
    (records, total, kept)
}

fn cmd_scan(cli: &Cli, args: &ScanArgs) -> Result<ExitCode, String> {
    let job = scan_job(args)?;
    let (records, total, kept) = scan_records(&job);
    let header = match job.format {
        Format::Csv => "input;weights;degree;index;sign;b2;torsion;smale_name;lichnerowicz;se_table\n",
        Format::Jsonl => "",
    };
    match &job.out {
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
            let mut tmp = match dir {
                Some(d) => tempfile::NamedTempFile::new_in(d),
                None => tempfile::NamedTempFile::new_in("."),
            }
            .map_err(|e| format!("cannot create output file: {e}"))?;
            tmp.write_all(header.as_bytes())
                .and_then(|_| {
                    records
                        .iter()
                        .try_for_each(|r| tmp.write_all(r.as_bytes()))
                })
                .map_err(|e| format!("write failed: {e}"))?;
            tmp.persist(path)
                .map_err(|e| format!("cannot move output into place: {e}"))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(header.as_bytes())
                .and_then(|_| records.iter().try_for_each(|r| lock.write_all(r.as_bytes())))
                .map_err(|e| format!("write failed: {e}"))?;
        }
    }
    if !cli.quiet {
        eprintln!("scanned {total} tuples, kept {kept}");
    }
    Ok(ExitCode::SUCCESS)
}

// -------------------------------------------------------------------------
// verify
// -------------------------------------------------------------------------

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, String> {
    if args.bp_max < 2 {
        return Err("--bp-max must be at least 2 (BP exponents are >= 2)".into());
    }
    let tuples = bp_tuples_up_to(args.bp_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers as usize)
        .build()
        .expect("thread pool");
    let failures: Vec<String> = pool.install(|| {
        tuples
            .par_iter()
            .filter_map(|t| {
                let bp = BPExponents::new(t.iter().map(|&x| Int::from(x)).collect()).ok()?;
                let link = from_bp(&bp);
                match cross_check(&link) {
                    Ok(()) => None,
                    Err(e) => Some(format!("{t:?}: {e}")),
                }
            })
            .collect()
    });
    if cli.json {
        println!(
            "{}",
            json!({
                "checked": tuples.len(),
                "disagreements": failures,
            })
        );
    } else {
        if !cli.quiet {
            println!("checked {} instances", tuples.len());
        }
        for f in &failures {
            println!("DISAGREE {f}");
        }
    }
    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

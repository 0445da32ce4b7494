use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use l21arc::arc::ArcFamily;
use l21arc::cut::CutPolicy;
use l21arc::gen::{random_covering_family, GenSpec};
use l21arc::graph::{clique_number, parse_labels, Graph, DEFAULT_CLIQUE_LIMIT};
use l21arc::oracle::{exact_lambda, verify_labelling, ExactConfig, Violation};
use l21arc::pipeline::{label_circular_arc, BoundsReport, Mode, PipelineConfig};
use l21arc::Error;

/// L(2,1) labelling of circular-arc graphs.
///
/// Exit status: 0 on success with a valid labelling, 1 when a labelling
/// violates the distance conditions, 2 on usage, parse or validation
/// errors.
#[derive(Parser)]
#[command(name = "l21arc", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Label an instance and print the bounds report line.
    Label {
        /// Instance file (`n M` header, then one `s f` line per arc).
        input: PathBuf,
        /// faithful = distance-two constraints in the cut graph only;
        /// strict additionally separates pairs connected through the
        /// removed arcs.
        #[arg(long, default_value = "strict", value_parser = parse_mode)]
        mode: Mode,
        /// min-load or at:<position>.
        #[arg(long, default_value = "min-load", value_parser = parse_cut_policy)]
        cut: CutPolicy,
        /// Write the labels here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Emit the report and labels as JSON.
        #[arg(long)]
        json: bool,
        /// Vertex count up to which the clique number is computed exactly.
        #[arg(long, default_value_t = DEFAULT_CLIQUE_LIMIT)]
        clique_limit: usize,
    },
    /// Check a labels file against an instance; prints one line per
    /// violation.
    Verify { input: PathBuf, labels: PathBuf },
    /// Exact minimum span by backtracking search (small instances only).
    Exact {
        input: PathBuf,
        /// Largest vertex count accepted by the search.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Stop after this span and report the proven lower bound.
        #[arg(long)]
        max_span: Option<u32>,
        /// Write the witness labels here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long = "M")]
        m: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        min_len: u32,
        /// Defaults to max(min_len, M / 4).
        #[arg(long)]
        max_len: Option<u32>,
        /// Require the arcs to cover the whole circle.
        #[arg(long)]
        cover: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate, label and time a batch of covering instances; CSV on
    /// standard output.
    Bench {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "strict", value_parser = parse_mode)]
        mode: Mode,
    },
    /// Print degree, clique and bound statistics without labelling.
    Bounds {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CLIQUE_LIMIT)]
        clique_limit: usize,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_cut_policy(s: &str) -> Result<CutPolicy, String> {
    s.parse()
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<u8> {
    match Cli::parse().cmd {
        Cmd::Label {
            input,
            mode,
            cut,
            output,
            json,
            clique_limit,
        } => cmd_label(&input, mode, cut, output.as_deref(), json, clique_limit),
        Cmd::Verify { input, labels } => cmd_verify(&input, &labels),
        Cmd::Exact {
            input,
            max_n,
            max_span,
            output,
        } => cmd_exact(&input, max_n, max_span, output.as_deref()),
        Cmd::Gen {
            n,
            m,
            seed,
            min_len,
            max_len,
            cover,
            output,
        } => cmd_gen(n, m, seed, min_len, max_len, cover, output.as_deref()),
        Cmd::Bench {
            count,
            n,
            seed,
            mode,
        } => cmd_bench(count, n, seed, mode),
        Cmd::Bounds {
            input,
            clique_limit,
        } => cmd_bounds(&input, clique_limit),
    }
}

fn load_family(path: &std::path::Path) -> Result<ArcFamily> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    ArcFamily::from_text(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(path: Option<&std::path::Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_line(report: &BoundsReport, valid: bool) -> String {
    let mut line = format!(
        "n={} delta={} omega={} span={} bound_paper={} bound_prior={} mode={} cut={} c_size={} valid={}",
        report.n,
        report.delta,
        report.omega,
        report.span,
        report.paper_bound,
        report.prior_bound,
        report.mode,
        report.cut,
        report.c_size,
        valid
    );
    if !report.omega_exact {
        line.push_str(" omega_exact=false");
    }
    if report.exceeds_paper_bound {
        line.push_str(" bound_exceeded=true");
    }
    line
}

fn cmd_label(
    input: &std::path::Path,
    mode: Mode,
    cut: CutPolicy,
    output: Option<&std::path::Path>,
    json: bool,
    clique_limit: usize,
) -> Result<u8> {
    let fam = load_family(input)?;
    let cfg = PipelineConfig {
        mode,
        cut,
        clique_limit,
    };
    let (lab, report) = label_circular_arc(&fam, &cfg)?;
    let g = fam.build_graph();
    let violations = verify_labelling(&g, &lab)?;
    let valid = violations.is_empty();
    let labels_text = fam.format_labels(&lab);
    if json {
        let rows: Vec<serde_json::Value> = labels_text
            .lines()
            .map(|l| {
                let mut it = l.split_whitespace();
                let v: usize = it.next().unwrap().parse().unwrap();
                let f: u32 = it.next().unwrap().parse().unwrap();
                serde_json::json!({ "v": v, "f": f })
            })
            .collect();
        let doc = serde_json::json!({
            "n": report.n,
            "delta": report.delta,
            "omega": report.omega,
            "omega_exact": report.omega_exact,
            "span": report.span,
            "lower_bound": report.lower_bound,
            "bound_paper": report.paper_bound,
            "bound_prior": report.prior_bound,
            "mode": report.mode.to_string(),
            "cut": report.cut.to_string(),
            "c_size": report.c_size,
            "valid": valid,
            "labels": rows,
        });
        if let Some(p) = output {
            fs::write(p, labels_text).with_context(|| format!("writing {}", p.display()))?;
        }
        println!("{doc}");
    } else {
        write_or_print(output, &labels_text)?;
        println!("{}", report_line(&report, valid));
    }
    Ok(u8::from(!valid))
}

fn violation_rows(fam: &ArcFamily, violations: &[Violation]) -> Vec<String> {
    let input_of: Vec<usize> = fam.input_positions().iter().map(|&p| p + 1).collect();
    let mut rows: Vec<(usize, usize, String)> = violations
        .iter()
        .map(|v| {
            let a = input_of[v.u].min(input_of[v.w]);
            let b = input_of[v.u].max(input_of[v.w]);
            let (fa, fb) = if input_of[v.u] <= input_of[v.w] {
                (v.labels.0, v.labels.1)
            } else {
                (v.labels.1, v.labels.0)
            };
            (a, b, format!("{a} {b} {} {fa} {fb}", v.kind))
        })
        .collect();
    rows.sort();
    rows.into_iter().map(|(_, _, row)| row).collect()
}

fn cmd_verify(input: &std::path::Path, labels: &std::path::Path) -> Result<u8> {
    let fam = load_family(input)?;
    let text =
        fs::read_to_string(labels).with_context(|| format!("reading {}", labels.display()))?;
    let pairs = parse_labels(&text).with_context(|| format!("parsing {}", labels.display()))?;
    let lab = fam.labels_from_input(&pairs)?;
    let g = fam.build_graph();
    let violations = verify_labelling(&g, &lab)?;
    for row in violation_rows(&fam, &violations) {
        println!("{row}");
    }
    Ok(u8::from(!violations.is_empty()))
}

fn cmd_exact(
    input: &std::path::Path,
    max_n: usize,
    max_span: Option<u32>,
    output: Option<&std::path::Path>,
) -> Result<u8> {
    let fam = load_family(input)?;
    let g = fam.build_graph();
    let cfg = ExactConfig { max_n, max_span };
    match exact_lambda(&g, &cfg) {
        Ok((lambda, witness)) => {
            println!("lambda={lambda}");
            write_or_print(output, &fam.format_labels(&witness))?;
            Ok(0)
        }
        Err(err @ Error::ExactLimitExceeded { .. }) => {
            Err(anyhow::Error::new(err).context("raise the limit with --max-n to search anyway"))
        }
        Err(err) => Err(err.into()),
    }
}

fn cmd_gen(
    n: usize,
    m: u32,
    seed: u64,
    min_len: u32,
    max_len: Option<u32>,
    cover: bool,
    output: Option<&std::path::Path>,
) -> Result<u8> {
    let spec = GenSpec {
        n,
        m,
        seed,
        min_len,
        max_len: max_len.unwrap_or_else(|| (m / 4).max(min_len)),
        require_cover: cover,
    };
    let fam = random_covering_family(&spec)?;
    write_or_print(output, &fam.to_text())?;
    Ok(0)
}

fn cmd_bench(count: usize, n: usize, seed: u64, mode: Mode) -> Result<u8> {
    println!("n,M,seed,mode,span,delta,omega,paper_bound,valid,wall_time_us");
    let m = 4 * n as u32;
    let cfg = PipelineConfig {
        mode,
        ..PipelineConfig::default()
    };
    for i in 0..count {
        let spec = GenSpec {
            n,
            m,
            seed: seed + i as u64,
            min_len: 2,
            max_len: 12.min(m.saturating_sub(1)).max(2),
            require_cover: true,
        };
        let fam = random_covering_family(&spec)?;
        let started = Instant::now();
        let (lab, report) = label_circular_arc(&fam, &cfg)?;
        let wall_time_us = started.elapsed().as_micros();
        let g = fam.build_graph();
        let valid = verify_labelling(&g, &lab)?.is_empty();
        println!(
            "{},{},{},{},{},{},{},{},{},{}",
            n,
            m,
            spec.seed,
            mode,
            report.span,
            report.delta,
            report.omega,
            report.paper_bound,
            valid,
            wall_time_us
        );
    }
    Ok(0)
}

fn cmd_bounds(input: &std::path::Path, clique_limit: usize) -> Result<u8> {
    let fam = load_family(input)?;
    let g: Graph = fam.build_graph();
    let delta = g.max_degree();
    let load = fam.max_point_load() as usize;
    let (omega, omega_exact) = match clique_number(&g, load, clique_limit) {
        Ok(w) => (w, true),
        Err(_) => (load, false),
    };
    let mut line = format!(
        "n={} delta={delta} omega={omega} lower_bound={} bound_paper={} bound_prior={}",
        fam.n(),
        delta + 1,
        delta + 3 * omega,
        2 * delta + 2 * omega
    );
    if !omega_exact {
        line.push_str(" omega_exact=false");
    }
    println!("{line}");
    Ok(0)
}

//! `tdframe`: construct, verify and classify two-distance tight frames
//! arising from strongly regular graphs.
//!
//! Exit codes: 0 on success with all verifications passing, 1 on a
//! verification failure (the report is still emitted), 2 on usage or input
//! errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tdframe::construct::{classify, reproduce_table, six_frames, FrameTag};
use tdframe::embed::{dgs_gram, feasible_region, mixed_gram, psd_probe, simplex_gram, weights_for};
use tdframe::frames::analyze;
use tdframe::io;
use tdframe::matrix::FieldTag;
use tdframe::scalar::{Mode, Scalar};
use tdframe::srg::{self, is_strongly_regular, SrgCheck, SrgGraph, SrgParams};

#[derive(Parser)]
#[command(
    name = "tdframe",
    version,
    about = "Two-distance tight frames from strongly regular graphs, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format (default: csv for `table`, json elsewhere)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Arithmetic mode; the TDFRAME_MODE environment variable sets the default
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Relative tolerance for float mode
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum Cmd {
    /// Strongly regular graph utilities
    Srg {
        #[command(subcommand)]
        cmd: SrgCmd,
    },
    /// Eigenspace embedding of a graph, or a feasibility probe of an
    /// inner-product pair
    Embed {
        #[command(flatten)]
        source: GraphSource,
        /// Which embedding: 1, 2 or simplex
        #[arg(long, default_value = "1")]
        which: String,
        /// Probe a point "a,b" (exact scalars) against the feasible region
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// The six tight frames of a graph, with full verification reports
    Six {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Classify a Gram matrix (JSON file) as one of the frame types
    Classify {
        /// Gram JSON file
        #[arg(long)]
        gram: PathBuf,
    },
    /// Reproduce the reference table of two-distance frames
    Table,
    /// Verify every frame property of a Gram matrix (JSON file)
    Verify {
        /// Gram JSON file
        #[arg(long)]
        gram: PathBuf,
    },
}

#[derive(Subcommand)]
enum SrgCmd {
    /// Validate a parameter tuple or certify an adjacency file
    Check {
        /// Parameter tuple v,k,lambda,mu
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<usize>>,
        /// Graph JSON file
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Generate a graph of a family and emit its JSON
    Gen {
        #[command(flatten)]
        source: GraphSource,
    },
}

#[derive(Args)]
struct GraphSource {
    /// Graph family: triangular | lattice | paley | petersen | clebsch-complement
    #[arg(long)]
    family: Option<String>,
    /// Family size parameter (ignored for petersen and clebsch-complement)
    #[arg(long, default_value_t = 0)]
    size: usize,
    /// Graph JSON file (alternative to --family)
    #[arg(long)]
    graph: Option<PathBuf>,
}

/// Usage and input problems; exit 2.  Verification failures exit 1 after
/// emitting the report.
enum CliError {
    Input(String),
}

type CliResult = Result<(String, u8), CliError>;

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

impl GraphSource {
    fn load(&self) -> Result<SrgGraph, CliError> {
        match (&self.family, &self.graph) {
            (Some(f), None) => match f.as_str() {
                "clebsch-complement" => srg::clebsch_complement(),
                name => srg::Family::parse(name).and_then(|fam| srg::generate(fam, self.size)),
            }
            .map_err(|e| CliError::Input(e.to_string())),
            (None, Some(path)) => {
                io::graph_from_json(&read_file(path)?).map_err(|e| CliError::Input(e.to_string()))
            }
            _ => Err(CliError::Input("provide exactly one of --family or --graph".into())),
        }
    }
}

fn params_json(p: &SrgParams) -> serde_json::Value {
    serde_json::json!({"v": p.v, "k": p.k, "lambda": p.lambda, "mu": p.mu})
}

fn spectrum_json(p: &SrgParams) -> serde_json::Value {
    match p.spectrum() {
        Ok(sp) => serde_json::json!({
            "r1": sp.r1.to_string(), "r2": sp.r2.to_string(),
            "n1": sp.n1, "n2": sp.n2,
            "s1": sp.s1.to_string(), "s2": sp.s2.to_string(),
        }),
        Err(_) => serde_json::Value::Null,
    }
}

fn run_srg_check(params: Option<Vec<usize>>, graph: Option<PathBuf>, format: Format) -> CliResult {
    if let Some(vals) = params {
        let [v, k, lambda, mu] = vals[..] else {
            return Err(CliError::Input("--params needs v,k,lambda,mu".into()));
        };
        return Ok(match SrgParams::validate(v, k, lambda, mu) {
            Ok(p) => {
                let doc = serde_json::json!({
                    "valid": true,
                    "params": params_json(&p),
                    "primitive": p.is_primitive(),
                    "connected": p.is_connected(),
                    "spectrum": spectrum_json(&p),
                });
                (render_json(&doc, format), 0)
            }
            Err(e) => {
                let doc = serde_json::json!({"valid": false, "error": e.to_string()});
                (render_json(&doc, format), 1)
            }
        });
    }
    let Some(path) = graph else {
        return Err(CliError::Input("provide --params or --graph".into()));
    };
    let adj =
        io::adjacency_from_json(&read_file(&path)?).map_err(|e| CliError::Input(e.to_string()))?;
    Ok(match is_strongly_regular(&adj) {
        SrgCheck::Srg(p) => {
            let doc = serde_json::json!({
                "strongly_regular": true,
                "params": params_json(&p),
                "primitive": p.is_primitive(),
                "connected": p.is_connected(),
                "spectrum": spectrum_json(&p),
            });
            (render_json(&doc, format), 0)
        }
        SrgCheck::NotSrg { reason, witness } => {
            let doc = serde_json::json!({
                "strongly_regular": false,
                "reason": reason,
                "witness": witness.map(|(i, j)| vec![i, j]),
            });
            (render_json(&doc, format), 1)
        }
    })
}

fn run_embed(source: &GraphSource, which: &str, point: Option<&str>, format: Format) -> CliResult {
    let g = source.load()?;
    let as_lib = |e: tdframe::Error| CliError::Input(e.to_string());
    if let Some(point) = point {
        let (a_str, b_str) = point
            .split_once(',')
            .ok_or_else(|| CliError::Input("--point needs \"a,b\"".into()))?;
        let a: Scalar = a_str.trim().parse().map_err(as_lib)?;
        let b: Scalar = b_str.trim().parse().map_err(as_lib)?;
        let region = feasible_region(&g).map_err(as_lib)?;
        let inside = region.contains(&a, &b).map_err(as_lib)?;
        let (psd, psd_rank) = psd_probe(&g, &a, &b).map_err(as_lib)?;
        let weights = weights_for(&g, &a, &b).ok();
        let mixed_rank = weights.as_ref().and_then(|w| mixed_gram(&g, w).ok().map(|m| m.rank()));
        let doc = serde_json::json!({
            "params": params_json(&g.params()),
            "point": [a.to_string(), b.to_string()],
            "inside": inside,
            "psd": psd,
            "rank": mixed_rank.or(psd_rank),
            "weights": weights.map(|w| vec![w.w0.to_string(), w.w1.to_string(), w.w2.to_string()]),
            "vertices": region.vertices.iter()
                .map(|(x, y)| vec![x.to_string(), y.to_string()]).collect::<Vec<_>>(),
        });
        // the triangle and the factorization oracle must agree
        let code = u8::from(inside != psd);
        return Ok((render_json(&doc, format), code));
    }
    let gram = match which {
        "1" => dgs_gram(&g, 1),
        "2" => dgs_gram(&g, 2),
        "simplex" => simplex_gram(g.params().v),
        other => {
            return Err(CliError::Input(format!("--which must be 1, 2 or simplex, got {other}")))
        }
    }
    .map_err(as_lib)?;
    Ok((io::gram_to_json(&gram), 0))
}

fn run_six(source: &GraphSource, format: Format) -> CliResult {
    let g = source.load()?;
    let frames = six_frames(&g).map_err(|e| CliError::Input(e.to_string()))?;
    let mut all_ok = true;
    let docs: Vec<serde_json::Value> = frames
        .iter()
        .map(|(gram, class)| {
            all_ok &= class.report.tight && class.report.flags.is_empty();
            serde_json::json!({
                "tag": class.tag,
                "srg": class.srg.map(|p| params_json(&p)),
                "report": serde_json::from_str::<serde_json::Value>(
                    &io::report_to_json(&class.report)).unwrap(),
                "gram": serde_json::from_str::<serde_json::Value>(
                    &io::gram_to_json(gram)).unwrap(),
            })
        })
        .collect();
    let out = match format {
        Format::Pretty => {
            let mut s = String::new();
            for (doc, (gram, class)) in docs.iter().zip(frames.iter()) {
                let _ = writeln!(
                    s,
                    "{:<26} n={:<3} N={:<3} a={:<10} b={:<10} design={}",
                    doc["tag"].as_str().unwrap_or("?"),
                    gram.rank(),
                    gram.len(),
                    class.report.a.as_ref().map_or("-".into(), |x| x.to_string()),
                    class.report.b.as_ref().map_or("-".into(), |x| x.to_string()),
                    serde_json::to_string(&class.report.design).unwrap().trim_matches('"')
                );
            }
            s
        }
        _ => serde_json::to_string(&docs).unwrap(),
    };
    Ok((out, if all_ok { 0 } else { 1 }))
}

fn load_gram_matrix(path: &Path, mode: Mode) -> Result<tdframe::matrix::Matrix, CliError> {
    let (matrix, _declared) = io::gram_matrix_from_json(&read_file(path)?)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let field = matrix.field_tag().map_err(|e| CliError::Input(e.to_string()))?;
    if mode == Mode::Exact && field == FieldTag::Float {
        return Err(CliError::Input(
            "exact mode rejects float entries; rerun with --mode float".into(),
        ));
    }
    Ok(matrix)
}

fn run_classify(path: &Path, format: Format, mode: Mode) -> CliResult {
    let matrix = load_gram_matrix(path, mode)?;
    let class = classify(&matrix, mode).map_err(|e| CliError::Input(e.to_string()))?;
    let out = match format {
        Format::Pretty => format!(
            "tag: {}\nsrg: {}\n{}",
            serde_json::to_string(&class.tag).unwrap().trim_matches('"'),
            class.srg.map_or("-".into(), |p| p.to_string()),
            pretty_report(&io::report_to_json(&class.report))
        ),
        _ => io::classification_to_json(&class),
    };
    let code = u8::from(class.tag == FrameTag::NotTwoDistanceTight);
    Ok((out, code))
}

fn run_verify(path: &Path, format: Format, mode: Mode) -> CliResult {
    let matrix = load_gram_matrix(path, mode)?;
    let gram = tdframe::embed::GramSet::new(matrix, mode)
        .map_err(|e| CliError::Input(format!("not a Gram matrix: {e}")))?;
    let report = analyze(&gram, mode);
    let ok = report.tight && report.flags.is_empty();
    let json = io::report_to_json(&report);
    let out = match format {
        Format::Pretty => pretty_report(&json),
        _ => json,
    };
    Ok((out, u8::from(!ok)))
}

fn run_table(format: Format) -> CliResult {
    let rows = reproduce_table().map_err(|e| CliError::Input(e.to_string()))?;
    let out = match format {
        Format::Json => serde_json::to_string(&rows).unwrap(),
        _ => io::table_to_csv(&rows),
    };
    Ok((out, 0))
}

fn pretty_report(json: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    let mut s = String::new();
    for (k, val) in v.as_object().unwrap() {
        let _ = writeln!(s, "{k:<12} {val}");
    }
    s
}

fn render_json(doc: &serde_json::Value, format: Format) -> String {
    match format {
        Format::Pretty => {
            if let Some(obj) = doc.as_object() {
                let mut s = String::new();
                for (k, val) in obj {
                    let _ = writeln!(s, "{k:<18} {val}");
                }
                s
            } else {
                serde_json::to_string_pretty(doc).unwrap()
            }
        }
        _ => serde_json::to_string(doc).unwrap(),
    }
}

fn effective_mode(cli: &Cli) -> Result<Mode, CliError> {
    let arg = match cli.mode {
        Some(m) => m,
        None => match std::env::var("TDFRAME_MODE").ok().as_deref() {
            Some("float") => ModeArg::Float,
            Some("exact") | None => ModeArg::Exact,
            Some(other) => {
                return Err(CliError::Input(format!(
                    "TDFRAME_MODE must be exact or float, got {other:?}"
                )))
            }
        },
    };
    Ok(match arg {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Float => Mode::float(cli.tol),
    })
}

fn run(cli: &Cli) -> CliResult {
    let mode = effective_mode(cli)?;
    let default_format = match cli.cmd {
        Cmd::Table => Format::Csv,
        _ => Format::Json,
    };
    let format = cli.format.unwrap_or(default_format);
    match &cli.cmd {
        Cmd::Srg { cmd: SrgCmd::Check { params, graph } } => {
            run_srg_check(params.clone(), graph.clone(), format)
        }
        Cmd::Srg { cmd: SrgCmd::Gen { source } } => {
            let g = source.load()?;
            Ok((io::graph_to_json(&g), 0))
        }
        Cmd::Embed { source, which, point } => run_embed(source, which, point.as_deref(), format),
        Cmd::Six { source } => run_six(source, format),
        Cmd::Classify { gram } => run_classify(gram, format, mode),
        Cmd::Table => run_table(format),
        Cmd::Verify { gram } => run_verify(gram, format, mode),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            let output = if output.ends_with('\n') { output } else { format!("{output}\n") };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{output}"),
            }
            ExitCode::from(code)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

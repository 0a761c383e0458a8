//! Command-line entry point: tables, exact searches, case-enumeration
//! verifications, orderings, hulls, and figures.
//!
//! Exit codes: 0 on success/PASS, 1 on verification or runtime failure,
//! 2 on usage errors. Failures also emit a JSON error record on stderr.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use isoperimetry::oracle::Budget;
use isoperimetry::trilattice::TriPoint;
use isoperimetry::{counterexample, oracle, polygon, sequencer, trilattice, verifier, Error};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "isop",
    version,
    about = "Exact edge-isoperimetric computations on lattice Cayley graphs"
)]
struct Cli {
    /// Worker threads for search and verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum HullFormat {
    Json,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Emit n, e(n), e(n)-e(n-1) rows for the triangular-lattice graph.
    Table {
        #[arg(long, default_value_t = 55)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum induced edges over connected n-sets (triangular lattice
    /// by default, the counterexample graph on Z^d with --d).
    Solve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        /// Cap on animal states explored.
        #[arg(long)]
        budget_sets: Option<u64>,
        /// Wall-clock hint in seconds.
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the nested ordering of the triangular lattice.
    Order {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = OrderFormat::Jsonl)]
        format: OrderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive case verifications behind the closed form.
    Verify {
        #[command(subcommand)]
        step: VerifyStep,
    },
    /// Auxiliary move-graph statistics, BFS growth sequence, and validation
    /// of the reference move sequence.
    Sequence {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hull of a JSON point list (array of [a, b] pairs; stdin by default).
    Hull {
        #[arg(long)]
        r#in: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = HullFormat::Json)]
        format: HullFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal-set containment exploration on the d = 2 counterexample graph.
    Counterexample {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        budget_sets: Option<u64>,
        #[arg(long)]
        budget_seconds: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a point list (or an ordering prefix) as SVG.
    Render {
        #[arg(long)]
        r#in: Option<PathBuf>,
        /// Render the first n points of the nested ordering instead of a file.
        #[arg(long)]
        order_n: Option<u64>,
        #[arg(long, default_value_t = 40.0)]
        scale: f64,
        #[arg(long)]
        no_edges: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyStep {
    /// The finite base cases n in {8, 9, 11, 13, 15, 20}.
    BaseCases {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The remaining inductive-step case families.
    Inductive {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prefix optimality of the nested ordering.
    Nested {
        #[arg(long, default_value_t = 2167)]
        n_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .is_err()
        {
            // pool already configured; proceed with the existing one
        }
    }
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            let (code, kind) = match &e {
                Error::Domain(_) | Error::DimensionMismatch { .. } | Error::InvalidSpec(_) => {
                    (2, "usage")
                }
                Error::Verification(_) => (1, "verification"),
                Error::BudgetExceeded { .. } => (1, "budget"),
                Error::Asset(_) => (1, "asset"),
                Error::Io(_) => (1, "io"),
                _ => (1, "internal"),
            };
            let record = json!({"error": {"kind": kind, "message": e.to_string()}});
            eprintln!("{record}");
            std::process::exit(code);
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn budget_from(budget_sets: Option<u64>, budget_seconds: Option<u64>) -> Budget {
    Budget {
        max_sets: budget_sets.unwrap_or(u64::MAX),
        wall_clock: budget_seconds.map(Duration::from_secs),
    }
}

fn read_points(path: &Option<PathBuf>) -> Result<Vec<TriPoint>, Error> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => std::io::read_to_string(std::io::stdin())?,
    };
    let raw: Vec<(i64, i64)> = serde_json::from_str(&text).map_err(|e| {
        Error::Domain(format!(
            "point list must be a JSON array of [a, b] pairs: {e}"
        ))
    })?;
    Ok(raw.into_iter().map(|(a, b)| TriPoint::new(a, b)).collect())
}

fn points_json(points: &[TriPoint]) -> serde_json::Value {
    serde_json::Value::Array(points.iter().map(|p| json!([p.a, p.b])).collect::<Vec<_>>())
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Table { n_max, format, out } => {
            let rows = trilattice::e_table(n_max)?;
            let content = match format {
                TableFormat::Csv => {
                    let mut s = String::from("n,e,delta\n");
                    for r in &rows {
                        let delta = r.delta.map(|d| d.to_string()).unwrap_or_default();
                        s.push_str(&format!("{},{},{delta}\n", r.n, r.e));
                    }
                    s
                }
                TableFormat::Json => serde_json::to_string_pretty(&rows)? + "\n",
            };
            emit(&out, &content)
        }
        Command::Solve {
            n,
            d,
            budget_sets,
            budget_seconds,
            out,
        } => {
            let spec = match d {
                None => trilattice::tri_spec().clone(),
                Some(d) => counterexample::counterexample_spec(d)?,
            };
            let result =
                oracle::max_induced_edges(&spec, n, budget_from(budget_sets, budget_seconds))?;
            let witnesses: Vec<serde_json::Value> = result
                .witnesses
                .iter()
                .map(|w| {
                    serde_json::Value::Array(
                        w.points()
                            .iter()
                            .map(|p| serde_json::to_value(p.coords()).expect("serializable"))
                            .collect(),
                    )
                })
                .collect();
            let content = serde_json::to_string_pretty(&json!({
                "n": result.n,
                "best_edges": result.best_edges,
                "best_boundary": result.best_boundary,
                "witnesses": witnesses,
                "sets_explored": result.sets_explored,
            }))? + "\n";
            emit(&out, &content)
        }
        Command::Order { n, format, out } => {
            let entries = sequencer::ordering(n)?;
            let content = match format {
                OrderFormat::Jsonl => {
                    let mut s = String::new();
                    for e in &entries {
                        s.push_str(&serde_json::to_string(&json!({
                            "index": e.index,
                            "a": e.point.a,
                            "b": e.point.b,
                            "edges_added": e.edges_added,
                            "cumulative_edges": e.cumulative_edges,
                        }))?);
                        s.push('\n');
                    }
                    s
                }
                OrderFormat::Csv => {
                    let mut s = String::from("index,a,b,edges_added,cumulative_edges\n");
                    for e in &entries {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            e.index, e.point.a, e.point.b, e.edges_added, e.cumulative_edges
                        ));
                    }
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Verify { step } => match step {
            VerifyStep::BaseCases { out } => {
                let report = verifier::verify_base_cases()?;
                let content = serde_json::to_string_pretty(&json!({
                    "pass": true,
                    "entries": report.entries,
                }))? + "\n";
                emit(&out, &content)
            }
            VerifyStep::Inductive { out } => {
                let report = verifier::verify_inductive_cases()?;
                let content = serde_json::to_string_pretty(&json!({
                    "pass": true,
                    "total_cases": report.total_cases,
                    // the case count is a regression constant from this
                    // implementation's first verified run, not a published figure
                    "total_cases_provenance": "derived",
                    "pass_count": report.pass_count,
                    "exceptional": report.exceptional,
                    "exceptional_formula": report.exceptional_formula,
                }))? + "\n";
                emit(&out, &content)
            }
            VerifyStep::Nested { n_max, out } => {
                let report = sequencer::verify_nested(n_max)?;
                let content = serde_json::to_string_pretty(&json!({
                    "pass": true,
                    "n_max": report.n_max,
                    "prefixes_checked": report.prefixes_checked,
                }))? + "\n";
                emit(&out, &content)
            }
        },
        Command::Sequence { out } => {
            let graph = sequencer::build_aux_graph()?;
            let path = graph.shortest_path()?;
            sequencer::validate_reference_growth_path()?;
            // a-values along the found path, starting at the initial node
            let mut node = sequencer::INITIAL_NODE;
            let mut a_values = vec![node.edge_formula()?.a];
            for &mv in &path {
                node = sequencer::apply_side_fill(node, mv)?;
                a_values.push(node.edge_formula()?.a);
            }
            let content = serde_json::to_string_pretty(&json!({
                "nodes": graph.stats.nodes,
                "edges": graph.stats.edges,
                "path_length": path.len(),
                "moves": path,
                "a_values": a_values,
                "reference_path_validated": true,
            }))? + "\n";
            emit(&out, &content)
        }
        Command::Hull { r#in, format, out } => {
            let points = read_points(&r#in)?;
            let hull = polygon::hull(&points)?;
            match format {
                HullFormat::Json => {
                    let content = serde_json::to_string_pretty(
                        &json!({ "points": points_json(hull.points()) }),
                    )? + "\n";
                    emit(&out, &content)
                }
                HullFormat::Svg => {
                    let svg = render::render_svg(hull.points(), &render::RenderOptions::default());
                    emit(&out, &svg)
                }
            }
        }
        Command::Counterexample {
            n_max,
            budget_sets,
            budget_seconds,
            out,
        } => {
            let report =
                counterexample::nesting_dag(n_max, budget_from(budget_sets, budget_seconds))?;
            let content = serde_json::to_string_pretty(&report)? + "\n";
            emit(&out, &content)
        }
        Command::Render {
            r#in,
            order_n,
            scale,
            no_edges,
            out,
        } => {
            let (points, labels) = match order_n {
                Some(n) => {
                    let entries = sequencer::ordering(n)?;
                    let labels: Vec<u64> = entries.iter().map(|e| e.index).collect();
                    (
                        entries.iter().map(|e| e.point).collect::<Vec<_>>(),
                        Some(labels),
                    )
                }
                None => (read_points(&r#in)?, None),
            };
            if points.is_empty() {
                return Err(Error::Domain("nothing to render".into()));
            }
            let opts = render::RenderOptions {
                scale,
                draw_edges: !no_edges,
                labels,
            };
            emit(&out, &render::render_svg(&points, &opts))
        }
    }
}

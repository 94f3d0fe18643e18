//! `onedisk` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 search budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use onedisk::bounds::{self, ClassicKind};
use onedisk::construct::{self, ConstructError, Strategy};
use onedisk::io::{self, IoError};
use onedisk::search::{self, SearchError, SearchLimits};
use onedisk::svg::{self, SvgError};
use onedisk::Drawing;

#[derive(Parser)]
#[command(name = "onedisk", version, about = "Extremal 1-disk drawings of bipartite graphs")]
struct Cli {
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the extremal graph and drawing for part sizes x, y.
    Construct(ConstructArgs),
    /// Check 1-planarity and the 1-disk property of a drawing file.
    Verify {
        #[arg(long)]
        drawing: PathBuf,
        /// Also fail (exit 1) when no face visits every X vertex.
        #[arg(long)]
        require_one_disk: bool,
    },
    /// Print bound values for part sizes, or a report for a graph file.
    Bounds(BoundsArgs),
    /// Glue a 1-disk drawing to its mirror image along X.
    Double {
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        out_graph: Option<PathBuf>,
        #[arg(long)]
        out_drawing: Option<PathBuf>,
    },
    /// Exhaustively compute the maximum edge count of a 1-disk drawing.
    Search(SearchArgs),
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    x: usize,
    #[arg(long)]
    y: usize,
    /// fan, zigzag, or seed:N
    #[arg(long, default_value = "fan")]
    strategy: Strategy,
    #[arg(long)]
    out_graph: Option<PathBuf>,
    #[arg(long)]
    out_drawing: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, requires = "y", conflicts_with = "graph")]
    x: Option<usize>,
    #[arg(long, requires = "x")]
    y: Option<usize>,
    /// Vertex count for the order-only bounds (defaults to x + y).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, required_unless_present = "x")]
    graph: Option<PathBuf>,
    #[arg(long, requires = "graph")]
    drawing: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    x: usize,
    #[arg(long)]
    y: usize,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 300.0)]
    budget: f64,
    #[arg(long, default_value_t = 8)]
    max_crossings: usize,
    /// Start at x*y edges instead of at the proved bound.
    #[arg(long)]
    probe_above_bound: bool,
    /// Where to save the witness drawing.
    #[arg(long)]
    out_drawing: Option<PathBuf>,
}

enum Failure {
    Verification(String),
    Usage(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Usage(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        if e.is_validation() {
            Failure::Verification(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::OutOfDomain { .. }
            | ConstructError::UncoveredRegime { .. }
            | ConstructError::KTooSmall(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded => Failure::Budget(e.to_string()),
            SearchError::BoundExceeded { .. } | SearchError::Witness(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<SvgError> for Failure {
    fn from(e: SvgError) -> Self {
        match e {
            SvgError::NoOneDiskFace => Failure::Verification(e.to_string()),
            SvgError::Write { .. } => Failure::Usage(e.to_string()),
        }
    }
}

fn emit(json: bool, report: serde_json::Value, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("json value"));
    } else {
        print!("{}", text());
    }
}

fn drawing_summary(d: &Drawing) -> serde_json::Value {
    let g = d.graph();
    json!({
        "x_count": g.x_count(),
        "y_count": g.y_count(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "crossings": d.crossing_count(),
        "faces": d.faces().len(),
        "one_planar": d.is_one_planar(),
        "one_disk": d.is_one_disk(),
        "one_disk_face": d.one_disk_face_index(),
    })
}

fn summary_text(d: &Drawing) -> String {
    let g = d.graph();
    format!(
        "parts: |X| = {}, |Y| = {}\nedges: {}\ncrossings: {}\nfaces: {}\n1-planar: {}\n1-disk: {}\n",
        g.x_count(),
        g.y_count(),
        g.edge_count(),
        d.crossing_count(),
        d.faces().len(),
        if d.is_one_planar() { "yes" } else { "no" },
        if d.is_one_disk() { "yes" } else { "no" },
    )
}

fn run_construct(json: bool, args: ConstructArgs) -> Result<(), Failure> {
    let (g, d) = construct::construct_extremal_with(args.x, args.y, args.strategy)?;
    if let Some(p) = &args.out_graph {
        io::save_graph(p, &g)?;
    }
    if let Some(p) = &args.out_drawing {
        io::save_drawing(p, &d)?;
    }
    if let Some(p) = &args.svg {
        svg::write_svg(&d, p)?;
    }
    let bound = bounds::one_disk_max_edges(args.x, args.y).ok();
    let mut report = drawing_summary(&d);
    report["strategy"] = json!(args.strategy.to_string());
    report["one_disk_bound"] = json!(bound);
    emit(json, report, || {
        let mut s = summary_text(&d);
        if let Some(b) = bound {
            s += &format!("one-disk bound 3x + 2y - 6: {b}\n");
        }
        s
    });
    Ok(())
}

fn run_verify(json: bool, path: PathBuf, require_one_disk: bool) -> Result<(), Failure> {
    let d = io::load_drawing(&path)?;
    let verdict = d.verify_one_planar();
    let mut report = drawing_summary(&d);
    report["diagnostic"] = json!(verdict.as_ref().err().map(ToString::to_string));
    emit(json, report, || summary_text(&d));
    if let Err(e) = verdict {
        return Err(Failure::Verification(e.to_string()));
    }
    if require_one_disk && !d.is_one_disk() {
        return Err(Failure::Verification("no face visits every X vertex".into()));
    }
    Ok(())
}

fn run_bounds(json: bool, args: BoundsArgs) -> Result<(), Failure> {
    if let Some(path) = args.graph {
        let g = io::load_graph(&path)?;
        let d = args.drawing.map(io::load_drawing).transpose()?;
        if let Some(d) = &d {
            if d.graph() != &g {
                return Err(Failure::Usage("drawing does not draw the given graph".into()));
            }
        }
        let report = bounds::check(&g, d.as_ref());
        let violated = !report.is_clean();
        emit(json, serde_json::to_value(&report).expect("report"), || {
            let mut s = format!(
                "parts: |X| = {}, |Y| = {}\nedges: {}\n1-planar drawing: {}\n1-disk drawing: {}\n",
                report.x_count, report.y_count, report.edge_count, report.one_planar_drawing, report.one_disk_drawing
            );
            for e in &report.entries {
                let limit = e.limit.map_or("-".to_string(), |l| l.to_string());
                let state = match (e.applicable, e.violated, e.tight) {
                    (false, _, _) => "n/a",
                    (true, true, _) => "VIOLATED",
                    (true, false, true) => "tight",
                    (true, false, false) => "ok",
                };
                s += &format!("{:<18} limit {:>6}  {}\n", e.name, limit, state);
            }
            s += &format!(
                "problem target     {}  exceeded: {}\n",
                report.problem_target, report.exceeds_problem_target
            );
            s
        });
        if violated {
            return Err(Failure::Verification("an applicable bound is violated".into()));
        }
        return Ok(());
    }
    let (x, y) = (args.x.expect("clap requires x"), args.y.expect("clap requires y"));
    let n = args.n.unwrap_or(x + y);
    let report = json!({
        "x": x,
        "y": y,
        "n": n,
        "one_disk": bounds::one_disk_max_edges(x, y).ok(),
        "huang": bounds::huang_max_edges(x, y).ok(),
        "czap": bounds::czap_max_edges(x, y).ok(),
        "karpov": bounds::karpov_max_edges(n).ok(),
        "planar": bounds::classic_max_edges(ClassicKind::Planar, n).ok(),
        "bipartite_planar": bounds::classic_max_edges(ClassicKind::BipartitePlanar, n).ok(),
        "one_planar": bounds::classic_max_edges(ClassicKind::OnePlanar, n).ok(),
        "problem_target": bounds::problem_target_edges(x, y).to_string(),
    });
    emit(json, report.clone(), || {
        let mut s = String::new();
        for key in [
            "one_disk",
            "huang",
            "czap",
            "karpov",
            "planar",
            "bipartite_planar",
            "one_planar",
            "problem_target",
        ] {
            let value = match &report[key] {
                serde_json::Value::Null => "-".to_string(),
                serde_json::Value::String(v) => v.clone(),
                v => v.to_string(),
            };
            s += &format!("{key:<18} {value}\n");
        }
        s
    });
    Ok(())
}

fn run_double(
    json: bool,
    path: PathBuf,
    out_graph: Option<PathBuf>,
    out_drawing: Option<PathBuf>,
) -> Result<(), Failure> {
    let d = io::load_drawing(&path)?;
    let result = construct::double(&d)?;
    if let Some(p) = &out_graph {
        io::save_graph(p, &result.graph_star)?;
    }
    if let Some(p) = &out_drawing {
        io::save_drawing(p, &result.drawing_star)?;
    }
    let g = &result.graph_star;
    let huang = bounds::huang_max_edges(g.x_count().min(g.y_count()), g.x_count().max(g.y_count())).ok();
    let mut report = drawing_summary(&result.drawing_star);
    report["source_edges"] = json!(d.graph().edge_count());
    report["huang_bound"] = json!(huang);
    emit(json, report, || {
        let mut s = summary_text(&result.drawing_star);
        s += &format!("source edges: {}\n", d.graph().edge_count());
        if let Some(h) = huang {
            s += &format!("bipartite 1-planar bound 2n + 4x - 12: {h}\n");
        }
        s
    });
    Ok(())
}

fn run_search(json: bool, args: SearchArgs) -> Result<(), Failure> {
    if !(args.budget.is_finite() && args.budget > 0.0) {
        return Err(Failure::Usage("--budget must be a positive number of seconds".into()));
    }
    let limits = SearchLimits {
        max_crossings: args.max_crossings,
        probe_above_bound: args.probe_above_bound,
        ..SearchLimits::with_budget(args.budget)
    };
    let outcome = search::max_edges_one_disk(args.x, args.y, &limits)?;
    if let (Some(p), Some(w)) = (&args.out_drawing, &outcome.witness) {
        io::save_drawing(p, w)?;
    }
    let bound = bounds::one_disk_max_edges(args.x, args.y).ok();
    let mut report = serde_json::to_value(&outcome).expect("outcome");
    report["one_disk_bound"] = json!(bound);
    report["witness_crossings"] = json!(outcome.witness.as_ref().map(Drawing::crossing_count));
    report["witness_path"] = json!(args.out_drawing.as_ref().map(|p| p.display().to_string()));
    emit(json, report, || {
        let mut s = format!(
            "parts: |X| = {}, |Y| = {}\nmax edges: {}\nexhausted: {}\ngraphs examined: {}\n",
            outcome.x_count, outcome.y_count, outcome.max_edges, outcome.exhausted, outcome.graphs_examined
        );
        if let Some(b) = bound {
            s += &format!("one-disk bound: {b}\n");
        }
        if let Some(p) = &args.out_drawing {
            s += &format!("witness: {}\n", p.display());
        }
        s += "note: only connected candidate graphs are enumerated\n";
        s
    });
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.command {
        Command::Construct(args) => run_construct(json, args),
        Command::Verify {
            drawing,
            require_one_disk,
        } => run_verify(json, drawing, require_one_disk),
        Command::Bounds(args) => run_bounds(json, args),
        Command::Double {
            drawing,
            out_graph,
            out_drawing,
        } => run_double(json, drawing, out_graph, out_drawing),
        Command::Search(args) => run_search(json, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

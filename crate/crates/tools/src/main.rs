use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use cyclic_ainf::ribbon::build_category_diagram;
use cyclic_ainf::field::Rational;
use cyclic_ainf_tools::export::{export_diagram, graph_dot};
use cyclic_ainf_tools::format::RibbonDoc;
use cyclic_ainf_tools::{run_suite, FieldChoice, Mutation, RunConfig, Suite};

/// Exact verification suites for cyclic A-infinity categories.
#[derive(Parser, Debug)]
#[command(name = "cyclic-ainf", version)]
struct Cli {
    /// ainf-laws, functor-laws, theorem-cyclic, quiver-compare,
    /// graded-square, ribbon-diagram or hom-table.
    #[arg(long)]
    suite: Option<Suite>,
    /// `rational` or a prime field such as `p5`.
    #[arg(long, default_value = "rational")]
    field: FieldChoice,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Corrupt a structure on purpose to confirm that the suite notices.
    #[arg(long, value_enum)]
    mutate: Option<Mutation>,
    /// Ribbon graph JSON for ribbon-diagram, or for --export.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Point pair such as `{1/8, 5/8}` for a graded hom-table.
    #[arg(long)]
    pair: Option<String>,
    /// Export the category diagram of --graph (theta by default) as JSON.
    #[arg(long, conflicts_with = "suite")]
    export: bool,
    /// With --export, print a Graphviz description of the graph instead.
    #[arg(long, requires = "export")]
    dot: bool,
}

fn write(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn export(cli: &Cli) -> Result<(), String> {
    let doc = match &cli.graph {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str::<RibbonDoc>(&text).map_err(|e| e.to_string())?
        }
        None => RibbonDoc::from_graph(&cyclic_ainf::ribbon::RibbonGraph::theta()),
    };
    if cli.dot {
        return write(&cli.out, &graph_dot(&doc));
    }
    let graph = doc.to_graph().map_err(|e| e.to_string())?;
    let diagram = build_category_diagram::<Rational>(&graph);
    let json = serde_json::to_string_pretty(&export_diagram(&diagram, cli.max_len.unwrap_or(4))).map_err(|e| e.to_string())?;
    write(&cli.out, &json)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.export {
        return match export(&cli) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        };
    }
    let Some(suite) = cli.suite else {
        eprintln!("error: --suite or --export is required");
        return ExitCode::from(2);
    };
    let cfg = RunConfig {
        field: cli.field,
        max_size: cli.max_size,
        max_len: cli.max_len,
        seed: cli.seed,
        mutation: cli.mutate,
        graph: cli.graph.clone(),
        pair: cli.pair.clone(),
    };
    let report = match run_suite(suite, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    eprint!("{}", report.summary());
    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    if let Err(e) = write(&cli.out, &json) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicay_core::aut::{automorphism_group_bounded, DEFAULT_MAX_VERTICES};
use bicay_core::cartesian::{cartesian_product, prime_factorization};
use bicay_core::constructions::{
    class_e_connection_set, classify_group, hypercube, moebius_kantor, SearchBudget,
};
use bicay_core::graph::{cayley_graph, edge_list_decode, graph6_decode, graph6_encode};
use bicay_core::group::catalog::{catalog_small_groups, lookup_bounded};
use bicay_core::permgroup::parse_generator_file;
use bicay_core::pipeline::{
    construct_with, theorem_sweep, verify_certificate_text, PipelineOptions,
    DEFAULT_MAX_BUILD_ORDER,
};
use bicay_core::{Error, Graph, GroupTable};
use clap::{Parser, Subcommand};

/// Build and verify vertex-transitive normal bi-Cayley graphs over small groups.
///
/// Exit status: 0 success, 1 verification failure, 2 usage or input error,
/// 3 inconclusive search, 4 resource bound exceeded.
#[derive(Parser)]
#[command(name = "bicay", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a witness graph for a group and print its certificate.
    Build {
        /// Catalog name (e.g. Q8, D12, C2^3, Q8xC2) or a generator file.
        #[arg(long)]
        group: String,
        /// Write the certificate here instead of standard output; the
        /// graph6 string is then printed.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_BUILD_ORDER)]
        max_order: usize,
        /// Candidates a witness search may enumerate before giving up.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Recompute every field of a certificate and report PASS/FAIL per field.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Print the order and generators of a graph's automorphism group.
    Aut {
        /// graph6 string, named graph (Qn:<n>, Cn:<n>, Kn:<n>, Pn:<n>, GP83,
        /// E3..E7) or a file holding graph6 or an edge list.
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
    },
    /// Print the prime factorization of a connected graph.
    Factor {
        #[arg(long)]
        graph: String,
    },
    /// Print the graph6 string of the Cartesian product of two graphs.
    Product {
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        graphs: Vec<String>,
    },
    /// Certify every catalog group up to an order; prints a tab-separated report.
    Sweep {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Add a wall-time column (makes the output non-deterministic).
        #[arg(long)]
        timings: bool,
        /// Candidates a witness search may enumerate before giving up.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List catalog groups with their classification.
    Catalog {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
}

enum Failure {
    Core(Error),
    Io(String),
    Fail,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn resolve_group(spec: &str, max_order: usize) -> Result<(String, GroupTable), Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let (_, gens) = parse_generator_file(&read(path)?)?;
        let (table, _) = GroupTable::from_generators(&gens, max_order)?;
        return Ok((spec.to_string(), table));
    }
    let entry = lookup_bounded(spec, max_order)?;
    Ok((entry.name, entry.table))
}

fn named_graph(spec: &str) -> Result<Option<Graph>, Error> {
    let number = |prefix: &str| {
        spec.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
    };
    if let Some(n) = number("Qn:") {
        return hypercube(n).map(|c| Some(c.graph));
    }
    if let Some(n) = number("Cn:").filter(|&n| n >= 3) {
        return Ok(Some(Graph::cycle(n)));
    }
    if let Some(n) = number("Kn:") {
        return Ok(Some(Graph::complete(n)));
    }
    if let Some(n) = number("Pn:") {
        return Ok(Some(Graph::path(n)));
    }
    let member = match spec {
        "GP83" => return Ok(Some(moebius_kantor().graph)),
        "E3" => "Alt4",
        "E4" | "E5" | "E6" | "E7" => spec,
        _ => return Ok(None),
    };
    let c = class_e_connection_set(member)?;
    cayley_graph(&c.entry.table, &c.connection_set).map(Some)
}

fn resolve_graph(spec: &str) -> Result<Graph, Failure> {
    if let Some(g) = named_graph(spec)? {
        return Ok(g);
    }
    let path = Path::new(spec);
    if path.is_file() {
        let text = read(path)?;
        let first = text.trim_start();
        return Ok(if first.starts_with("n ") {
            edge_list_decode(&text)?
        } else {
            graph6_decode(first.lines().next().unwrap_or(""))?
        });
    }
    Ok(graph6_decode(spec)?)
}

fn search_budget(max_candidates: Option<u64>) -> SearchBudget {
    max_candidates.map_or_else(SearchBudget::default, |max_candidates| SearchBudget {
        max_candidates,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build {
            group,
            out,
            max_order,
            budget,
        } => {
            let (name, table) = resolve_group(&group, max_order)?;
            let options = PipelineOptions {
                max_order,
                budget: search_budget(budget),
            };
            let witness = construct_with(&name, &table, &options)?;
            let text = witness.certificate.to_text();
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    println!("{}", witness.certificate.graph6);
                }
                None => print!("{text}"),
            }
        }
        Command::Verify { cert } => {
            let report = verify_certificate_text(&read(&cert)?)?;
            print!("{}", report.to_text());
            if !report.passed() {
                return Err(Failure::Fail);
            }
        }
        Command::Aut {
            graph,
            max_vertices,
        } => {
            let g = resolve_graph(&graph)?;
            let aut = automorphism_group_bounded(&g, max_vertices)?;
            println!("order {}", aut.order());
            for p in aut.generators() {
                println!("{p}");
            }
        }
        Command::Factor { graph } => {
            let g = resolve_graph(&graph)?;
            print!("{}", prime_factorization(&g)?.report());
        }
        Command::Product { graphs } => {
            let a = resolve_graph(&graphs[0])?;
            let b = resolve_graph(&graphs[1])?;
            println!("{}", graph6_encode(&cartesian_product(&a, &b)?));
        }
        Command::Sweep {
            max_order,
            timings,
            budget,
        } => {
            let options = PipelineOptions {
                budget: search_budget(budget),
                ..PipelineOptions::default()
            };
            let report = theorem_sweep(max_order, &options)?;
            print!("{}", report.to_tsv(timings));
            if !report.all_valid() {
                return Err(Failure::Fail);
            }
        }
        Command::Catalog { max_order } => {
            for e in catalog_small_groups(max_order) {
                println!("{}\t{}\t{}", e.name, e.order(), classify_group(&e.table));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Fail) => ExitCode::from(1),
        Err(Failure::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Verification(_) => 1,
                Error::Validation(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
                Error::Inconclusive(_) => 3,
                Error::Resource { .. } => 4,
            })
        }
    }
}

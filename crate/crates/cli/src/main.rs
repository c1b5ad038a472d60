//! `boxcx`: build graph complexes, compute their homology and chromatic bounds, and run the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on input or size-guard errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boxcx::bounds::{lovasz_bound, sarkaria_bound, BoundReport};
use boxcx::builders::{
    box0_complex, box_complex, cones_over_shores_complex, hom_k2_order_complex, neighborhood_complex,
};
use boxcx::graph::{complete_graph, cone_k, cycle_graph, kneser_graph};
use boxcx::homology::reduced_homology;
use boxcx::io::{self, ComplexFile};
use boxcx::simplicial::{barycentric_subdivision, suspension};
use boxcx::verify::{run_suite, Suite, SuiteConfig, VerificationOutcome};
use boxcx::{Graph, HomologyProfile};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "boxcx", version, about = "Box complexes of graphs and topological chromatic bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph from a standard family.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (stdout when absent).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Build a complex from a graph (n, box, box0, bc, hom) or from a complex (sd, susp).
    Complex {
        kind: ComplexKind,
        /// Graph file (JSON or edge list) or complex JSON, depending on the kind.
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduced integer homology of a complex file.
    Homology {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Lovász and Sarkaria lower bounds for a graph. B0(G) has at least 2^(n+1) faces, so
    /// the bounds are practical up to roughly 14 vertices.
    Bounds {
        input: PathBuf,
        /// Also compute the exact chromatic number (refused above 20 vertices without --force).
        #[arg(long)]
        exact: bool,
        /// Lift the size guard of the exact solver.
        #[arg(long)]
        force: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite: suspension, shore, euler, roundtrip, nerve, cone, nbhd-search,
    /// hom, or all.
    Verify {
        suite: String,
        /// Largest vertex count of the connected-graph corpus.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Largest vertex count for the Hom comparison.
        #[arg(long, default_value_t = 4)]
        hom_max_n: usize,
        /// Vertex count for nbhd-search (at most 6 without --force).
        #[arg(long = "n", default_value_t = 4)]
        search_n: usize,
        /// Complex JSON to search for in nbhd-search (default: the 4-cycle).
        #[arg(long)]
        target: Option<PathBuf>,
        /// Lift size guards.
        #[arg(long)]
        force: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Kneser graph KG(n, k); vertices are k-subsets of {1..n} in colex order.
    Kneser { n: usize, k: usize },
    /// Complete graph K_n.
    Complete { n: usize },
    /// Cycle C_n.
    Cycle { n: usize },
    /// Add k dominating vertices to a base graph.
    Cone {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    N,
    Box,
    Box0,
    Bc,
    Hom,
    Sd,
    Susp,
}

/// Failure to be reported with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn emit(output: Option<&Path>, text: &str) -> CliResult<()> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Command) -> CliResult<ExitCode> {
    match cmd {
        Command::Gen { family, output } => {
            let g = match family {
                Family::Kneser { n, k } => kneser_graph(n, k)?,
                Family::Complete { n } => complete_graph(n)?,
                Family::Cycle { n } => cycle_graph(n)?,
                Family::Cone { base, k } => cone_k(&read_graph(&base)?, k)?,
            };
            emit(output.as_deref(), &io::graph_to_json(&g))?;
        }
        Command::Complex { kind, input, output } => {
            let file = build_complex(kind, &input)?;
            emit(output.as_deref(), &io::to_json(&file))?;
        }
        Command::Homology { input, output, format } => {
            let (k, _) = io::parse_complex(&read(&input)?)?.load()?;
            let p = reduced_homology(&k);
            let text = match format {
                Format::Json => io::to_json(&p),
                Format::Table => profile_table(&p),
            };
            emit(output.as_deref(), &text)?;
        }
        Command::Bounds { input, exact, force, output, format } => {
            let g = read_graph(&input)?;
            // the solver guard is checked before the complexes are built
            let chi = if exact { Some(boxcx::coloring::chromatic_number(&g, force)?) } else { None };
            let mut reports = vec![lovasz_bound(&g), sarkaria_bound(&g)];
            for r in &mut reports {
                r.exact_chi = chi;
            }
            let text = match format {
                Format::Json => io::to_json(&reports),
                Format::Table => bounds_table(&reports),
            };
            emit(output.as_deref(), &text)?;
        }
        Command::Verify { suite, max_n, hom_max_n, search_n, target, force, output, format } => {
            let suite: Suite = suite.parse()?;
            let search_target = match target {
                Some(p) => Some(io::parse_complex(&read(&p)?)?.complex()?),
                None => None,
            };
            let cfg = SuiteConfig { max_n, hom_max_n, search_n, search_target, force };
            let outcomes = run_suite(suite, &cfg)?;
            let text = match format {
                Format::Json => io::to_json(&outcomes),
                Format::Table => outcome_table(&outcomes),
            };
            emit(output.as_deref(), &text)?;
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn build_complex(kind: ComplexKind, input: &Path) -> CliResult<ComplexFile> {
    let file = match kind {
        ComplexKind::N => ComplexFile::from_complex(&neighborhood_complex(&read_graph(input)?)),
        ComplexKind::Box => ComplexFile::from_box(&box_complex(&read_graph(input)?)),
        ComplexKind::Box0 => ComplexFile::from_box(&box0_complex(&read_graph(input)?)),
        ComplexKind::Bc => ComplexFile::from_box(&cones_over_shores_complex(&read_graph(input)?)),
        ComplexKind::Hom => ComplexFile::from_hom(&hom_k2_order_complex(&read_graph(input)?)),
        ComplexKind::Sd | ComplexKind::Susp => {
            let (k, z) = io::parse_complex(&read(input)?)?.load()?;
            match (kind, z) {
                (ComplexKind::Sd, Some(z)) => ComplexFile::from_z2(&z.subdivide().0),
                (ComplexKind::Sd, None) => ComplexFile::from_complex(&barycentric_subdivision(&k).complex),
                (_, Some(z)) => ComplexFile::from_z2(&z.suspension()),
                (_, None) => ComplexFile::from_complex(&suspension(&k).0),
            }
        }
    };
    Ok(file)
}

fn profile_table(p: &HomologyProfile) -> String {
    let mut s = String::from("k\tbetti\ttorsion\n");
    for d in &p.dims {
        let t: Vec<String> = d.torsion.iter().map(u64::to_string).collect();
        s.push_str(&format!("{}\t{}\t{}\n", d.k, d.betti, if t.is_empty() { "-".into() } else { t.join(",") }));
    }
    s.trim_end().to_string()
}

fn bounds_table(reports: &[BoundReport]) -> String {
    let mut s = String::from("bound\tvalue\tcaveat\tconn\tchi\n");
    for r in reports {
        let chi = r.exact_chi.map_or("-".to_string(), |c| c.to_string());
        s.push_str(&format!("{:?}\t{}\t{}\t{}\t{}\n", r.bound, r.value, r.caveat, r.connectivity, chi).to_lowercase());
    }
    s.trim_end().to_string()
}

fn outcome_table(outcomes: &[VerificationOutcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{status}\t{}\t{}", o.check, o.input));
        if let Some(n) = &o.note {
            s.push_str(&format!("\t({n})"));
        }
        s.push('\n');
        for c in o.comparisons.iter().filter(|c| !c.matched) {
            s.push_str(&format!("  {}: expected {:?}, observed {:?}\n", c.label, c.expected, c.observed));
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    s.push_str(&format!(
        "{} checks, {} failed; a pass is consistency with the equivalence, not a proof",
        outcomes.len(),
        failed
    ));
    s
}

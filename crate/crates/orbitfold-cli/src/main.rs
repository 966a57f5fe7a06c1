//! Command-line surface: orbit reports, intersection orbital graphs, catalog
//! verification, classification, degree-12 recognition, rigidity checks, and
//! spectral-determination scans.
//!
//! Exit codes: 0 = pass, 1 = a report-level check failed, 2 = usage, parse,
//! or validation error. JSON on stdout is deterministic for identical inputs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use orbitfold::mathieu::{
    self, classify, recognize_degree12_with_budget, steiner_rigidity_check,
    verify_catalog_with_budget,
};
use orbitfold::spectral::{aut_order, ds_scan, invariants, spectrum_from_shape};
use orbitfold::{
    intersection_orbital_graph, k_intersection_graph, CliqueUnionGraph, Partition,
    PermutationGroup, Shape,
};

#[derive(Parser)]
#[command(name = "orbitfold", version, about = "Intersection orbital graphs of permutation groups")]
struct Cli {
    /// Output format for reports ("dot" applies to the graph command only).
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "text", "dot"])]
    format: String,
    /// Directory with the validated group data files (overrides ORBITFOLD_DATA).
    #[arg(long, global = true)]
    data: Option<PathBuf>,
    /// Node budget for setwise-stabilizer backtrack searches.
    #[arg(long, global = true, default_value_t = orbitfold::group::DEFAULT_BACKTRACK_BUDGET)]
    budget: u64,
    /// Worker threads for scans that can be partitioned.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit partition of a group on points or on k-subsets.
    Orbits {
        group_file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Intersection orbital graph of two groups: shape, spectrum, invariants.
    Graph {
        g1_file: PathBuf,
        g2_file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Write DOT output to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Classify a subgroup against the ambient group's fingerprint catalog.
    Classify {
        #[arg(long)]
        ambient: String,
        subgroup_file: PathBuf,
    },
    /// Verify a whole fingerprint catalog (m11 | m12 | m24).
    Catalog {
        #[arg(long)]
        ambient: String,
    },
    /// Decide whether a degree-12 group is M12 in its natural action.
    Recognize12 { group_file: PathBuf },
    /// Orbit counts and orbital strong-regularity at a point, k = 2, 3, 4.
    Rigidity {
        group_file: PathBuf,
        /// Fixed point, 1-based.
        #[arg(long)]
        point: usize,
    },
    /// Exhaustive spectral-determination scan over all labelled graphs.
    DsScan {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Serialize)]
struct PartitionJson {
    domain: usize,
    blocks: Vec<Vec<usize>>,
}

impl PartitionJson {
    fn new(p: &Partition) -> Self {
        PartitionJson {
            domain: p.domain_size(),
            blocks: p
                .blocks()
                .into_iter()
                .map(|b| b.into_iter().map(|i| i + 1).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct OrbitsReport {
    degree: usize,
    k: Option<usize>,
    partition: PartitionJson,
    shape: Shape,
}

#[derive(Serialize)]
struct GraphReport {
    vertices: usize,
    k: Option<usize>,
    shape: Shape,
    spectrum: orbitfold::SpectrumSummary,
    aut_order: String,
    chi: usize,
    omega: usize,
    alpha: usize,
    components: usize,
    complete: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load_group(path: &PathBuf) -> orbitfold::Result<PermutationGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| orbitfold::Error::Io(format!("{}: {e}", path.display())))?;
    PermutationGroup::parse_group_file(&text)
}

fn data_dir(cli_dir: &Option<PathBuf>) -> PathBuf {
    cli_dir.clone().unwrap_or_else(mathieu::default_data_dir)
}

fn emit<T: Serialize>(format: &str, report: &T, text: impl FnOnce() -> String) {
    if format == "json" {
        println!(
            "{}",
            serde_json::to_string(report).expect("report serialization cannot fail")
        );
    } else {
        println!("{}", text());
    }
}

fn run(cli: Cli) -> orbitfold::Result<ExitCode> {
    if cli.format == "dot" && !matches!(cli.command, Command::Graph { .. }) {
        return Err(orbitfold::Error::Malformed(
            "--format dot is only supported by the graph command".into(),
        ));
    }
    match &cli.command {
        Command::Orbits { group_file, k } => {
            let group = load_group(group_file)?;
            let partition = match k {
                Some(k) => group.subset_orbits(*k)?,
                None => group.point_orbits(),
            };
            let report = OrbitsReport {
                degree: group.degree(),
                k: *k,
                partition: PartitionJson::new(&partition),
                shape: partition.shape(),
            };
            emit(&cli.format, &report, || {
                format!(
                    "degree {} orbits: {} block(s), shape {}",
                    group.degree(),
                    partition.block_count(),
                    partition.shape()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { g1_file, g2_file, k, dot } => {
            let g1 = load_group(g1_file)?;
            let g2 = load_group(g2_file)?;
            let graph: CliqueUnionGraph = match k {
                Some(k) => k_intersection_graph(&g1, &g2, *k)?,
                None => intersection_orbital_graph(&g1, &g2)?,
            };
            if let Some(path) = dot {
                std::fs::write(path, graph.to_dot())
                    .map_err(|e| orbitfold::Error::Io(format!("{}: {e}", path.display())))?;
            }
            if cli.format == "dot" {
                print!("{}", graph.to_dot());
                return Ok(ExitCode::SUCCESS);
            }
            let shape = graph.shape();
            let spectrum = spectrum_from_shape(&shape);
            let aut = aut_order(&shape);
            let triple = invariants(&shape);
            let report = GraphReport {
                vertices: graph.vertex_count(),
                k: *k,
                shape,
                spectrum,
                aut_order: aut.order,
                chi: triple.chi,
                omega: triple.omega,
                alpha: triple.alpha,
                components: graph.components().len(),
                complete: graph.is_complete(),
            };
            emit(&cli.format, &report, || {
                format!(
                    "graph on {} vertices: shape {}, spectrum {}, Aut order {}, chi {}, alpha {}",
                    report.vertices,
                    report.shape,
                    report.spectrum,
                    report.aut_order,
                    report.chi,
                    report.alpha
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { ambient, subgroup_file } => {
            let ambient_group = mathieu::load_validated_group_from(ambient, &data_dir(&cli.data))?;
            let subgroup = load_group(subgroup_file)?;
            let report = classify(ambient, &ambient_group, &subgroup)?;
            let unknown = matches!(report.outcome, mathieu::ClassificationOutcome::UnknownShape);
            emit(&cli.format, &report, || {
                format!(
                    "shape {} spectrum {} -> {:?}",
                    report.shape, report.spectrum, report.outcome
                )
            });
            Ok(if unknown { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Catalog { ambient } => {
            let ambient_group = mathieu::load_validated_group_from(ambient, &data_dir(&cli.data))?;
            let report = verify_catalog_with_budget(ambient, &ambient_group, cli.budget)?;
            let pass = report.all_constructed_match
                && report.intransitive_shapes_distinct
                && report.spectra_distinct;
            emit(&cli.format, &report, || {
                let mut out = format!(
                    "{} catalog (degree {}, order {}):\n",
                    report.ambient, report.degree, report.ambient_order
                );
                for row in &report.rows {
                    out.push_str(&format!(
                        "  {:28} {:18} claimed {:8} computed {:8} order {:10} [{}]\n",
                        row.entry,
                        row.paper_group,
                        row.claimed_shape.to_string(),
                        row.computed_shape
                            .as_ref()
                            .map(|s| s.to_string())
                            .unwrap_or_else(|| "-".into()),
                        row.computed_order.clone().unwrap_or_else(|| "-".into()),
                        row.status
                    ));
                }
                out
            });
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Recognize12 { group_file } => {
            let group = load_group(group_file)?;
            let report = recognize_degree12_with_budget(&group, cli.budget)?;
            let pass = report.is_m12();
            emit(&cli.format, &report, || {
                format!(
                    "order {} verdict {} (consistent: {})",
                    report.order,
                    report.verdict,
                    report.consistent_candidates.join(", ")
                )
            });
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Rigidity { group_file, point } => {
            let group = load_group(group_file)?;
            if *point == 0 {
                return Err(orbitfold::Error::OutOfRange {
                    point: 0,
                    degree: group.degree(),
                });
            }
            let report = steiner_rigidity_check(&group, point - 1)?;
            let pass = report.pass;
            emit(&cli.format, &report, || {
                let mut out = format!("rigidity at point {}:\n", report.point);
                for level in &report.levels {
                    out.push_str(&format!(
                        "  k={}: {} subset orbits, domain {}, rank {}, orbital valencies {:?}\n",
                        level.k,
                        level.subset_orbit_count,
                        level.domain_size,
                        level.rank,
                        level.orbitals.iter().map(|o| o.valency).collect::<Vec<_>>()
                    ));
                }
                out.push_str(&format!("  pass: {pass}"));
                out
            });
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::DsScan { max_n } => {
            if *max_n == 0 || *max_n > 7 {
                return Err(orbitfold::Error::DomainTooLarge {
                    size: *max_n as u64,
                    cap: 7,
                });
            }
            let report = ds_scan(*max_n, cli.workers.max(1));
            let pass = report.passed();
            emit(&cli.format, &report, || {
                let mut out = String::new();
                for row in &report.rows {
                    out.push_str(&format!(
                        "n={}: {} graphs, {} clique-unions, {} counterexamples\n",
                        row.n,
                        row.graphs_checked,
                        row.clique_unions,
                        row.counterexamples.len()
                    ));
                }
                out.push_str(&format!("counterexamples total: {}", report.counterexample_count));
                out
            });
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

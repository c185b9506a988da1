//! Command-line front end: polygon validation, widths, sweeping costs,
//! lower bounds, sweep simulation, and refinement tables over polygon JSON
//! files.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sweepcost::convex;
use sweepcost::export;
use sweepcost::geodesic::GeodesicMetric;
use sweepcost::sim;
use sweepcost::solver::{self, PlanJson, SolveOptions, SweepCostProblem};
use sweepcost::{Error, Polygon};

/// Exit status: 1 invalid input, 2 resource limit, 3 verification failure.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit { .. } => 2,
        Error::ResolutionTooCoarse { .. } => 3,
        _ => 1,
    }
}

#[derive(Parser)]
#[command(name = "sweepcost", about = "Sweeping costs of simple polygonal domains", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Polygon JSON file: {"vertices": [[x, y], ...]}.
    input: PathBuf,
    /// Output directory for reports and artifacts.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

#[derive(Args)]
struct SolverArgs {
    /// Number of uniform boundary samples (vertices are always added).
    #[arg(long, default_value_t = 128)]
    samples: usize,
    /// Restrict the solver to monotone (non-backtracking) token walks.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polygon file and print its basic quantities.
    Validate {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Width of a convex polygon by rotating calipers.
    Width {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Discretized sweeping cost; writes a witness plan JSON.
    SweepCost {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Shortest area-bisecting chord of a convex polygon.
    LowerBound {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Certify a plan by simulating the contamination-clearing sweep.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Plan JSON produced by sweep-cost; solved on the fly if absent.
        #[arg(long)]
        plan: Option<PathBuf>,
        /// Raster cells across the bounding box.
        #[arg(long, default_value_t = 256)]
        grid: usize,
        /// Time substeps per trajectory step.
        #[arg(long, default_value_t = 4)]
        substeps: usize,
    },
    /// Area vs sweeping-cost extremal inequality report.
    ExtremalReport {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Sweeping cost at m, 2m, 4m, ... with successive differences.
    Refine {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Number of doubling levels.
        #[arg(long, default_value_t = 3)]
        levels: usize,
    },
}

/// Print to stdout, ignoring a closed pipe (e.g. piping into head).
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError { code: exit_code_for(&e), message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError { code: 1, message: e.to_string() }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Validate { common } => {
            let polygon = load_polygon(&common.input)?;
            outln!("vertices: {}", polygon.len());
            outln!("perimeter: {:.9}", polygon.perimeter());
            outln!("area: {:.9}", polygon.area());
            outln!("convex: {}", polygon.is_convex());
            let report = report::ValidateReport {
                vertices: polygon.len(),
                perimeter: polygon.perimeter(),
                area: polygon.area(),
                convex: polygon.is_convex(),
            };
            write_report(&common.out, &report)
        }
        Command::Width { common } => {
            let polygon = load_polygon(&common.input)?;
            let w = convex::width(&polygon)?;
            outln!("{:.9}", w.width);
            outln!("direction: ({:.9}, {:.9})", w.direction.x, w.direction.y);
            let report = report::WidthReport {
                width: w.width,
                direction: [w.direction.x, w.direction.y],
                support_vertex: w.support_vertex,
                support_edge: w.support_edge,
            };
            write_report(&common.out, &report)
        }
        Command::SweepCost { common, solver: sargs } => {
            let polygon = load_polygon(&common.input)?;
            check_samples(sargs.samples)?;
            let problem = SweepCostProblem::new(&polygon, sargs.samples)?;
            let result = problem.solve(SolveOptions {
                strict: sargs.strict,
                ..SolveOptions::default()
            })?;
            outln!("value: {:.9}", result.value);
            outln!("winding: {}", result.winding);
            outln!("error_bound: {:.9}", result.error_bound);

            let mut width_info = None;
            if polygon.is_convex() {
                let w = convex::width(&polygon)?;
                let dev = (result.value - w.width).abs() / w.width;
                outln!("width: {:.9}", w.width);
                outln!("width_deviation: {:.9}", dev);
                width_info = Some((w.width, dev));
            }

            fs::create_dir_all(&common.out)?;
            let plan_path = common.out.join("plan.json");
            let plan = PlanJson::from_result(&result);
            fs::write(&plan_path, serde_json::to_string_pretty(&plan).expect("plan json"))?;
            outln!("plan: {}", plan_path.display());

            let report = report::SweepCostReport {
                value: result.value,
                winding: result.winding,
                error_bound: result.error_bound,
                samples_requested: sargs.samples,
                samples_effective: problem.sampling().len(),
                max_gap: problem.sampling().max_gap(),
                strict: sargs.strict,
                width: width_info.map(|(w, _)| w),
                width_deviation: width_info.map(|(_, d)| d),
            };
            write_report(&common.out, &report)
        }
        Command::LowerBound { common } => {
            let polygon = load_polygon(&common.input)?;
            let chord = convex::shortest_bisecting_chord(&polygon)?;
            outln!("{:.9}", chord.length);
            outln!(
                "endpoints: ({:.9}, {:.9}) -- ({:.9}, {:.9})",
                chord.endpoints[0].x,
                chord.endpoints[0].y,
                chord.endpoints[1].x,
                chord.endpoints[1].y
            );
            let report = report::LowerBoundReport {
                chord_length: chord.length,
                endpoints: [
                    [chord.endpoints[0].x, chord.endpoints[0].y],
                    [chord.endpoints[1].x, chord.endpoints[1].y],
                ],
                arclengths: chord.arclengths,
            };
            write_report(&common.out, &report)
        }
        Command::Simulate { common, solver: sargs, plan, grid, substeps } => {
            let polygon = load_polygon(&common.input)?;
            check_grid(grid)?;
            check_substeps(substeps)?;
            let metric = GeodesicMetric::new(&polygon)?;

            let (alpha, beta) = match &plan {
                Some(path) => {
                    let text = fs::read_to_string(path)?;
                    let plan: PlanJson = serde_json::from_str(&text).map_err(|e| CliError {
                        code: 1,
                        message: format!("bad plan JSON: {e}"),
                    })?;
                    plan.to_trajectories(&polygon)?
                }
                None => {
                    check_samples(sargs.samples)?;
                    let result = solver::solve(&polygon, sargs.samples)?;
                    (result.alpha, result.beta)
                }
            };

            let family = sim::build_sensor_family(&metric, &alpha, &beta, substeps)?;
            let field = sim::simulate(&metric, &family, grid)?;
            let verdict = sim::verify_sweep(&field);

            outln!("cleared: {}", verdict.cleared);
            match verdict.half_area_step {
                Some(step) => outln!(
                    "half_area: step {} (t = {:.9})",
                    step,
                    field.times()[step]
                ),
                None => outln!("half_area: never reached"),
            }
            outln!("max_sensor_length: {:.9}", family.max_length());
            outln!("boundary_contacts: {}", family.boundary_contacts());
            if field.domain_fragments() > 0 {
                outln!(
                    "warning: {} interior pocket(s) thinner than one cell evolve separately; raise --grid to merge them",
                    field.domain_fragments()
                );
            }

            let written =
                export::write_simulation_artifacts(&common.out, &polygon, &field, &family, 64)?;
            outln!("artifacts: {} files in {}", written.len(), common.out.display());

            let report = report::SimulateReport {
                cleared: verdict.cleared,
                half_area_step: verdict.half_area_step,
                half_area_time: verdict.half_area_step.map(|s| field.times()[s]),
                steps: field.steps(),
                grid,
                substeps,
                max_sensor_length: family.max_length(),
                boundary_contacts: family.boundary_contacts(),
                domain_fragments: field.domain_fragments(),
                final_u_area: *field.u_area().last().unwrap(),
                domain_area: field.domain_area(),
            };
            write_report(&common.out, &report)?;

            if verdict.cleared {
                Ok(())
            } else {
                Err(CliError {
                    code: 3,
                    message: "witness did not clear at the requested resolution".into(),
                })
            }
        }
        Command::ExtremalReport { common, solver: sargs } => {
            let polygon = load_polygon(&common.input)?;
            check_samples(sargs.samples)?;
            let result = solver::solve(&polygon, sargs.samples)?;
            let rep = convex::extremal_report(&polygon, result.value);
            outln!("area: {:.9}", rep.area);
            outln!("sweep_cost: {:.9}", rep.sweep_cost);
            outln!("area_bound: {:.9}", rep.area_bound);
            outln!("ratio: {:.9}", rep.ratio);
            outln!("convex: {}", rep.convex);
            if rep.violation {
                outln!("violation: ratio below 1 on a convex domain");
            }
            let report = report::ExtremalCliReport {
                area: rep.area,
                sweep_cost: rep.sweep_cost,
                area_bound: rep.area_bound,
                ratio: rep.ratio,
                convex: rep.convex,
                violation: rep.violation,
            };
            write_report(&common.out, &report)
        }
        Command::Refine { common, solver: sargs, levels } => {
            let polygon = load_polygon(&common.input)?;
            check_samples(sargs.samples)?;
            if levels < 2 {
                return Err(CliError { code: 1, message: "refine needs at least 2 levels".into() });
            }
            let table = solver::refine(
                &polygon,
                sargs.samples,
                levels,
                SolveOptions { strict: sargs.strict, ..SolveOptions::default() },
            )?;
            outln!("{:>8} {:>8} {:>14} {:>14} {:>14}", "m", "m_eff", "max_gap", "value", "diff");
            for level in &table {
                outln!(
                    "{:>8} {:>8} {:>14.9} {:>14.9} {:>14.9}",
                    level.m_requested, level.m_effective, level.max_gap, level.value, level.diff
                );
            }
            write_report(&common.out, &report::RefineReport { levels: table })
        }
    }
}

fn load_polygon(path: &Path) -> Result<Polygon, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError { code: 1, message: format!("{}: {e}", path.display()) })?;
    Ok(Polygon::from_json_str(&text)?)
}

fn check_samples(m: usize) -> Result<(), CliError> {
    if m < 8 {
        Err(CliError { code: 1, message: format!("--samples must be at least 8, got {m}") })
    } else {
        Ok(())
    }
}

fn check_grid(r: usize) -> Result<(), CliError> {
    if r < 64 {
        Err(CliError { code: 1, message: format!("--grid must be at least 64, got {r}") })
    } else {
        Ok(())
    }
}

fn check_substeps(s: usize) -> Result<(), CliError> {
    if s < 1 {
        Err(CliError { code: 1, message: "--substeps must be at least 1".into() })
    } else {
        Ok(())
    }
}

fn write_report<T: serde::Serialize>(out: &Path, report: &T) -> Result<(), CliError> {
    fs::create_dir_all(out)?;
    let path = out.join("report.json");
    let text = serde_json::to_string_pretty(report).expect("report serialization");
    fs::write(&path, text)?;
    Ok(())
}

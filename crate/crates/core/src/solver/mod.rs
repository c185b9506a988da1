//! Discretized sweeping-cost evaluation: minimize the bottleneck geodesic
//! distance over pairs of boundary walks from a common start to a common
//! end whose concatenated loop winds once around the boundary.

mod bottleneck;

pub use bottleneck::{solve_bottleneck, BottleneckSolution, Move};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesic::GeodesicMetric;
use crate::geom::{BoundaryTrajectory, Point, Polygon};

/// Default cap on the state count (2m'+1) * m'^2.
pub const DEFAULT_STATE_CAP: u64 = 150_000_000;

/// Arclength sampling of the boundary: a uniform grid merged with every
/// polygon vertex, duplicates within tolerance removed.
#[derive(Debug, Clone)]
pub struct BoundarySampling {
    positions: Vec<f64>,
    max_gap: f64,
}

impl BoundarySampling {
    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Largest circular gap between consecutive samples.
    pub fn max_gap(&self) -> f64 {
        self.max_gap
    }
}

/// Uniform arclength grid of `m` points merged with the vertex arclengths.
pub fn sample_boundary(polygon: &Polygon, m: usize) -> BoundarySampling {
    let per = polygon.perimeter();
    let m = m.max(1);
    let mut positions: Vec<f64> = (0..m).map(|k| k as f64 * per / m as f64).collect();
    positions.extend((0..polygon.len()).map(|i| polygon.vertex_arclength(i)));
    positions.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let tol = polygon.tol();
    let mut merged: Vec<f64> = Vec::with_capacity(positions.len());
    for p in positions {
        if merged.last().is_none_or(|&q| p - q > tol) {
            merged.push(p);
        }
    }
    // Wrap-around duplicate: the last sample may coincide with the first.
    if merged.len() > 1 && per - merged.last().unwrap() + merged[0] <= tol {
        merged.pop();
    }

    let mut max_gap = 0.0_f64;
    for k in 0..merged.len() {
        let next = if k + 1 < merged.len() { merged[k + 1] } else { merged[0] + per };
        max_gap = max_gap.max(next - merged[k]);
    }
    BoundarySampling { positions: merged, max_gap }
}

/// Symmetric geodesic distances between all sample pairs.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

/// All-pairs geodesic distances between boundary samples; rows run in
/// parallel, entries are mirrored so the result is exactly symmetric.
pub fn distance_matrix(metric: &GeodesicMetric, sampling: &BoundarySampling) -> Result<DistanceMatrix> {
    let n = sampling.len();
    let pts: Vec<Point> = sampling
        .positions()
        .iter()
        .map(|&s| metric.polygon().boundary_point_wrapped(s))
        .collect();

    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0.0; n];
            for j in (i + 1)..n {
                row[j] = metric.distance(pts[i], pts[j])?;
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;

    let mut data = vec![0.0; n * n];
    for (i, row) in rows.iter().enumerate() {
        for j in (i + 1)..n {
            data[i * n + j] = row[j];
            data[j * n + i] = row[j];
        }
    }
    Ok(DistanceMatrix { n, data })
}

/// Result of the discrete bottleneck search: the value, one witness pair of
/// boundary walks on a common time grid, its winding, and the reported
/// discretization bound 2h (a reporting convention from the 1-Lipschitz
/// boundary-snap argument, not a proven sharp bound).
#[derive(Debug, Clone)]
pub struct SweepCostResult {
    pub value: f64,
    pub alpha: BoundaryTrajectory,
    pub beta: BoundaryTrajectory,
    pub winding: i64,
    pub error_bound: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Forbid backward token moves (monotone lifts). Probe only: compares
    /// the backtracking and monotone discrete values, asserts nothing.
    pub strict: bool,
    pub state_cap: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { strict: false, state_cap: DEFAULT_STATE_CAP }
    }
}

/// A polygon with its triangulation, boundary sampling, and distance matrix:
/// everything `solve` needs, reusable across solver runs.
pub struct SweepCostProblem {
    metric: GeodesicMetric,
    sampling: BoundarySampling,
    matrix: DistanceMatrix,
}

impl SweepCostProblem {
    pub fn new(polygon: &Polygon, m: usize) -> Result<SweepCostProblem> {
        let metric = GeodesicMetric::new(polygon)?;
        let sampling = sample_boundary(polygon, m);
        let matrix = distance_matrix(&metric, &sampling)?;
        Ok(SweepCostProblem { metric, sampling, matrix })
    }

    pub fn metric(&self) -> &GeodesicMetric {
        &self.metric
    }

    pub fn sampling(&self) -> &BoundarySampling {
        &self.sampling
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.matrix
    }

    pub fn solve(&self, opts: SolveOptions) -> Result<SweepCostResult> {
        let m = self.sampling.len();
        let per = self.metric.polygon().perimeter();
        let sol = solve_bottleneck(self.matrix.data(), m, opts.strict, opts.state_cap)?;

        let positions = self.sampling.positions();
        let gap = |i: usize| -> f64 {
            if i + 1 < m {
                positions[i + 1] - positions[i]
            } else {
                per - positions[m - 1] + positions[0]
            }
        };

        let start = sol.walk[0];
        let mut lift_a = positions[start.0];
        let mut lift_b = positions[start.0];
        let mut lifts_a = vec![lift_a];
        let mut lifts_b = vec![lift_b];
        for w in sol.walk.windows(2) {
            let (pi, pj) = w[0];
            let (ci, cj) = w[1];
            if ci != pi {
                if ci == (pi + 1) % m {
                    lift_a += gap(pi);
                } else {
                    lift_a -= gap(ci);
                }
            } else if cj == (pj + 1) % m {
                lift_b += gap(pj);
            } else {
                lift_b -= gap(cj);
            }
            lifts_a.push(lift_a);
            lifts_b.push(lift_b);
        }

        let alpha = BoundaryTrajectory::from_lifts(lifts_a, per)?;
        let beta = BoundaryTrajectory::from_lifts(lifts_b, per)?;
        Ok(SweepCostResult {
            value: sol.value,
            alpha,
            beta,
            winding: sol.final_delta.signum(),
            error_bound: 2.0 * self.sampling.max_gap(),
        })
    }
}

/// One-call evaluation with default options.
pub fn solve(polygon: &Polygon, m: usize) -> Result<SweepCostResult> {
    SweepCostProblem::new(polygon, m)?.solve(SolveOptions::default())
}

/// One refinement level of `refine`.
#[derive(Debug, Clone, Serialize)]
pub struct RefineLevel {
    pub m_requested: usize,
    pub m_effective: usize,
    pub max_gap: f64,
    pub value: f64,
    /// Change from the previous level; 0 for the first.
    pub diff: f64,
}

/// Run `solve` at m0, 2*m0, 4*m0, ... and report values with successive
/// differences, to observe the discretization converging.
pub fn refine(
    polygon: &Polygon,
    m0: usize,
    levels: usize,
    opts: SolveOptions,
) -> Result<Vec<RefineLevel>> {
    let mut out = Vec::with_capacity(levels);
    let mut m = m0;
    let mut prev: Option<f64> = None;
    for _ in 0..levels {
        let problem = SweepCostProblem::new(polygon, m)?;
        let m_eff = problem.sampling().len() as u64;
        let states = (2 * m_eff + 1) * m_eff * m_eff;
        if states > opts.state_cap {
            return Err(Error::ResourceLimit { states, cap: opts.state_cap });
        }
        let result = problem.solve(opts)?;
        out.push(RefineLevel {
            m_requested: m,
            m_effective: problem.sampling().len(),
            max_gap: problem.sampling().max_gap(),
            value: result.value,
            diff: prev.map_or(0.0, |p| result.value - p),
        });
        prev = Some(result.value);
        m *= 2;
    }
    Ok(out)
}

/// Wire format for plan files: the solver result with trajectories as
/// lifted arclengths.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanJson {
    pub value: f64,
    pub winding: i64,
    pub error_bound: f64,
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

impl PlanJson {
    pub fn from_result(r: &SweepCostResult) -> PlanJson {
        PlanJson {
            value: r.value,
            winding: r.winding,
            error_bound: r.error_bound,
            alpha: r.alpha.lifts(),
            beta: r.beta.lifts(),
        }
    }

    pub fn to_trajectories(&self, polygon: &Polygon) -> Result<(BoundaryTrajectory, BoundaryTrajectory)> {
        let per = polygon.perimeter();
        Ok((
            BoundaryTrajectory::from_lifts(self.alpha.clone(), per)?,
            BoundaryTrajectory::from_lifts(self.beta.clone(), per)?,
        ))
    }
}

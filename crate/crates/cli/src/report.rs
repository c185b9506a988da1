//! Machine-readable reports written next to the human-readable output.
//! Field order is fixed by the struct definitions so identical runs produce
//! byte-identical files.

use serde::Serialize;

#[derive(Serialize)]
pub struct ValidateReport {
    pub vertices: usize,
    pub perimeter: f64,
    pub area: f64,
    pub convex: bool,
}

#[derive(Serialize)]
pub struct WidthReport {
    pub width: f64,
    pub direction: [f64; 2],
    pub support_vertex: usize,
    pub support_edge: usize,
}

#[derive(Serialize)]
pub struct SweepCostReport {
    pub value: f64,
    pub winding: i64,
    pub error_bound: f64,
    pub samples_requested: usize,
    pub samples_effective: usize,
    pub max_gap: f64,
    pub strict: bool,
    /// Calipers width and relative deviation, for convex inputs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub width_deviation: Option<f64>,
}

#[derive(Serialize)]
pub struct LowerBoundReport {
    pub chord_length: f64,
    pub endpoints: [[f64; 2]; 2],
    pub arclengths: [f64; 2],
}

#[derive(Serialize)]
pub struct ExtremalCliReport {
    pub area: f64,
    pub sweep_cost: f64,
    pub area_bound: f64,
    pub ratio: f64,
    pub convex: bool,
    pub violation: bool,
}

#[derive(Serialize)]
pub struct SimulateReport {
    pub cleared: bool,
    pub half_area_step: Option<usize>,
    pub half_area_time: Option<f64>,
    pub steps: usize,
    pub grid: usize,
    pub substeps: usize,
    pub max_sensor_length: f64,
    pub boundary_contacts: usize,
    pub domain_fragments: usize,
    pub final_u_area: f64,
    pub domain_area: f64,
}

#[derive(Serialize)]
pub struct RefineReport {
    pub levels: Vec<sweepcost::solver::RefineLevel>,
}

use std::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Polygon edges cross somewhere other than a shared endpoint.
    /// Carries the indices of the two offending edges.
    SimplicityViolation { edge_a: usize, edge_b: usize },
    /// Fewer than 3 vertices, repeated consecutive vertices, zero area,
    /// or a triangulation that cannot find an ear.
    DegenerateInput(String),
    /// Arclength coordinate outside `[0, perimeter)`.
    OutOfRange { s: f64, perimeter: f64 },
    /// Trajectories do not share the required start/end point on the boundary.
    EndpointMismatch(String),
    /// Trajectories do not share a time grid.
    GridMismatch { left: usize, right: usize },
    /// Query point lies outside the closed domain.
    PointOutsideDomain { x: f64, y: f64 },
    /// Operation requires a convex polygon.
    NotConvex,
    /// Binary search for the area-bisecting partner failed to bracket.
    ConvergenceFailure(String),
    /// Bottleneck search exhausted the state graph without reaching a target.
    /// Cannot occur for a connected state graph; reported as an internal error.
    NoPath,
    /// State count for the requested sampling exceeds the configured cap.
    ResourceLimit { states: u64, cap: u64 },
    /// A sensor frame is thinner than one raster cell and fails to separate.
    ResolutionTooCoarse { step: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SimplicityViolation { edge_a, edge_b } => {
                write!(f, "polygon is not simple: edges {edge_a} and {edge_b} intersect")
            }
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::OutOfRange { s, perimeter } => {
                write!(f, "arclength {s} outside [0, {perimeter})")
            }
            Error::EndpointMismatch(msg) => write!(f, "endpoint mismatch: {msg}"),
            Error::GridMismatch { left, right } => {
                write!(f, "time grids differ: {left} vs {right} samples")
            }
            Error::PointOutsideDomain { x, y } => {
                write!(f, "point ({x}, {y}) lies outside the domain")
            }
            Error::NotConvex => write!(f, "polygon is not convex"),
            Error::ConvergenceFailure(msg) => write!(f, "convergence failure: {msg}"),
            Error::NoPath => write!(f, "internal error: no path in state graph"),
            Error::ResourceLimit { states, cap } => {
                write!(f, "state count {states} exceeds cap {cap}")
            }
            Error::ResolutionTooCoarse { step } => {
                write!(f, "sensor frame at step {step} is thinner than one raster cell")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

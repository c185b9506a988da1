//! Sweep certification: build the geodesic sensor family from a pair of
//! endpoint trajectories, evolve the contaminated region on a raster, check
//! that the sweep clears, and construct boundary evasion paths when the
//! winding hypotheses fail.
//!
//! The contamination dynamics are deliberately one-sided: swept bands are
//! inflated by half a cell diagonal and frames are interpolated below the
//! cell size, so contamination can only be over-estimated by the raster. A
//! reported "cleared" survives refinement; a reported "not cleared" may be
//! a resolution artifact.

mod evasion;
mod raster;

pub use evasion::evasion_path;
pub use raster::{CellState, Raster};

use crate::error::{Error, Result};
use crate::geodesic::{GeodesicMetric, GeodesicPath};
use crate::geom::BoundaryTrajectory;

/// The geodesic curve family f(.,t) spanned between two endpoint
/// trajectories, sampled on a refined time grid.
#[derive(Debug, Clone)]
pub struct SensorFamily {
    /// Geodesic frame per refined substep.
    frames: Vec<GeodesicPath>,
    /// Endpoint lifts (alpha, beta) per refined substep.
    endpoint_lifts: Vec<(f64, f64)>,
    /// Times in [0, 1] per refined substep.
    times: Vec<f64>,
    max_length: f64,
    /// Frames whose interior bends touch the boundary (reflex contacts);
    /// such contact is accepted and only reported.
    boundary_contacts: usize,
}

impl SensorFamily {
    pub fn frames(&self) -> &[GeodesicPath] {
        &self.frames
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn endpoint_lifts(&self) -> &[(f64, f64)] {
        &self.endpoint_lifts
    }

    /// L(f): max over frames of the frame length.
    pub fn max_length(&self) -> f64 {
        self.max_length
    }

    pub fn boundary_contacts(&self) -> usize {
        self.boundary_contacts
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }
}

/// Build the geodesic frame family over the trajectories' shared grid,
/// refined by `substeps` linear interpolation of the endpoint lifts.
pub fn build_sensor_family(
    metric: &GeodesicMetric,
    alpha: &BoundaryTrajectory,
    beta: &BoundaryTrajectory,
    substeps: usize,
) -> Result<SensorFamily> {
    if alpha.len() != beta.len() {
        return Err(Error::GridMismatch { left: alpha.len(), right: beta.len() });
    }
    let substeps = substeps.max(1);
    let polygon = metric.polygon();
    let steps = alpha.len() - 1;
    let total = steps * substeps + 1;

    let lifts_a = alpha.lifts();
    let lifts_b = beta.lifts();
    let mut frames = Vec::with_capacity(total);
    let mut endpoint_lifts = Vec::with_capacity(total);
    let mut times = Vec::with_capacity(total);
    for q in 0..total {
        let k = (q / substeps).min(steps - 1);
        let frac = (q - k * substeps) as f64 / substeps as f64;
        let la = lifts_a[k] + (lifts_a[k + 1] - lifts_a[k]) * frac;
        let lb = lifts_b[k] + (lifts_b[k + 1] - lifts_b[k]) * frac;
        let frame = metric.shortest_path(
            polygon.boundary_point_wrapped(la),
            polygon.boundary_point_wrapped(lb),
        )?;
        endpoint_lifts.push((la, lb));
        times.push(q as f64 / (total - 1) as f64);
        frames.push(frame);
    }

    let max_length = frames.iter().map(|f| f.length).fold(0.0, f64::max);
    let tol = polygon.tol();
    let boundary_contacts = frames
        .iter()
        .filter(|f| {
            f.waypoints.len() > 2
                && f.waypoints[1..f.waypoints.len() - 1]
                    .iter()
                    .any(|w| polygon.boundary_distance(*w) <= tol)
        })
        .count();

    Ok(SensorFamily { frames, endpoint_lifts, times, max_length, boundary_contacts })
}

/// Contamination history over the refined time grid.
#[derive(Debug, Clone)]
pub struct ContamField {
    raster: Raster,
    /// Cell states per substep.
    states: Vec<Vec<CellState>>,
    /// Estimated area of the uncontaminated region per substep.
    u_area: Vec<f64>,
    times: Vec<f64>,
    domain_area: f64,
    /// Extra 4-connected in-domain components beyond the first. Nonzero
    /// when some interior passage (a sharp wedge tip, say) is thinner than
    /// a cell; those pockets evolve as separate rooms.
    domain_fragments: usize,
}

impl ContamField {
    pub fn raster(&self) -> &Raster {
        &self.raster
    }

    pub fn steps(&self) -> usize {
        self.states.len()
    }

    pub fn state_at(&self, step: usize) -> &[CellState] {
        &self.states[step]
    }

    pub fn u_area(&self) -> &[f64] {
        &self.u_area
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn domain_area(&self) -> f64 {
        self.domain_area
    }

    pub fn contaminated_count(&self, step: usize) -> usize {
        self.states[step].iter().filter(|&&s| s == CellState::Contaminated).count()
    }

    pub fn is_contaminated(&self, step: usize, ix: usize, iy: usize) -> bool {
        self.states[step][self.raster.index(ix, iy)] == CellState::Contaminated
    }

    pub fn domain_fragments(&self) -> usize {
        self.domain_fragments
    }
}

/// Evolve the contaminated region under the sensor family at resolution `r`
/// cells across the bounding box.
///
/// All in-domain cells start contaminated except the initial band. Per
/// substep, the band swept between consecutive frames (frames interpolated
/// further so no endpoint moves more than half a cell between marks, each
/// mark inflated by half a cell diagonal) blocks a 4-connected flood fill
/// from the surviving contaminated cells; cells the flood does not reach
/// are cleared or covered.
pub fn simulate(metric: &GeodesicMetric, family: &SensorFamily, r: usize) -> Result<ContamField> {
    let polygon = metric.polygon();
    let raster = Raster::new(polygon, r);
    let domain_fragments = raster.in_domain_components().saturating_sub(1);
    let cell = raster.cell_size();
    let band_radius = 0.5 * cell * std::f64::consts::SQRT_2;
    let n_cells = raster.nx() * raster.ny();

    let mut states = Vec::with_capacity(family.len());
    let mut u_area = Vec::with_capacity(family.len());

    // Instantaneous band of frame 0.
    let mut band_now = vec![false; n_cells];
    raster.mark_polyline(&family.frames()[0].waypoints, band_radius, &mut band_now);
    check_band(&raster, &band_now, 0)?;

    let mut contaminated = vec![false; n_cells];
    for iy in 0..raster.ny() {
        for ix in 0..raster.nx() {
            let id = raster.index(ix, iy);
            contaminated[id] = raster.is_in_domain(ix, iy) && !band_now[id];
        }
    }
    push_state(&raster, &contaminated, &band_now, &mut states, &mut u_area);

    for step in 1..family.len() {
        // Swept band over the whole substep, with frames interpolated so
        // consecutive marks are closer than half a cell.
        let mut band_period = vec![false; n_cells];
        raster.mark_polyline(&family.frames()[step - 1].waypoints, band_radius, &mut band_period);
        raster.mark_polyline(&family.frames()[step].waypoints, band_radius, &mut band_period);
        let (la0, lb0) = family.endpoint_lifts()[step - 1];
        let (la1, lb1) = family.endpoint_lifts()[step];
        let motion = (la1 - la0).abs().max((lb1 - lb0).abs());
        let micro = (motion / (0.45 * cell)).ceil() as usize;
        for q in 1..micro {
            let f = q as f64 / micro as f64;
            let frame = metric.shortest_path(
                polygon.boundary_point_wrapped(la0 + (la1 - la0) * f),
                polygon.boundary_point_wrapped(lb0 + (lb1 - lb0) * f),
            )?;
            raster.mark_polyline(&frame.waypoints, band_radius, &mut band_period);
        }

        let seeds: Vec<usize> =
            (0..n_cells).filter(|&id| contaminated[id] && !band_period[id]).collect();
        contaminated = raster.flood(&seeds, &band_period);

        band_now.iter_mut().for_each(|b| *b = false);
        raster.mark_polyline(&family.frames()[step].waypoints, band_radius, &mut band_now);
        check_band(&raster, &band_now, step)?;
        push_state(&raster, &contaminated, &band_now, &mut states, &mut u_area);
    }

    Ok(ContamField {
        raster,
        states,
        u_area,
        times: family.times().to_vec(),
        domain_area: polygon.area(),
        domain_fragments,
    })
}

/// A frame's band cells must form one 8-connected chain; a gap means the
/// rasterized polyline cannot act as a barrier at this resolution.
fn check_band(raster: &Raster, band: &[bool], step: usize) -> Result<()> {
    if raster.eight_connected(band) {
        Ok(())
    } else {
        Err(Error::ResolutionTooCoarse { step })
    }
}

fn push_state(
    raster: &Raster,
    contaminated: &[bool],
    band_now: &[bool],
    states: &mut Vec<Vec<CellState>>,
    u_area: &mut Vec<f64>,
) {
    let n = raster.nx() * raster.ny();
    let mut state = vec![CellState::Outside; n];
    let mut contam_count = 0usize;
    for iy in 0..raster.ny() {
        for ix in 0..raster.nx() {
            let id = raster.index(ix, iy);
            if !raster.is_in_domain(ix, iy) {
                continue;
            }
            state[id] = if contaminated[id] {
                contam_count += 1;
                CellState::Contaminated
            } else if band_now[id] {
                CellState::SensorBand
            } else {
                CellState::Clear
            };
        }
    }
    u_area.push((raster.in_count() - contam_count) as f64 * raster.cell_area());
    states.push(state);
}

/// Verdict of a simulation: cleared iff no contaminated cell remains at the
/// final step; also reports the first substep where the uncontaminated area
/// reaches half the domain area, which every verified sweep must pass.
#[derive(Debug, Clone)]
pub struct SweepVerdict {
    pub cleared: bool,
    pub half_area_step: Option<usize>,
}

pub fn verify_sweep(field: &ContamField) -> SweepVerdict {
    let cleared = field.contaminated_count(field.steps() - 1) == 0;
    let half = field.domain_area() / 2.0;
    let half_area_step = field.u_area().iter().position(|&u| u >= half);
    SweepVerdict { cleared, half_area_step }
}

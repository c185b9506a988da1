use crate::error::{Error, Result};

use super::Polygon;

/// A point on the boundary circle, stored both as the normalized arclength
/// `s` in `[0, perimeter)` and as a real lift for winding bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPos {
    pub s: f64,
    pub lift: f64,
}

impl BoundaryPos {
    pub fn from_lift(lift: f64, perimeter: f64) -> BoundaryPos {
        BoundaryPos { s: lift.rem_euclid(perimeter), lift }
    }
}

/// Circular arc distance between two arclength coordinates.
pub fn circular_distance(a: f64, b: f64, perimeter: f64) -> f64 {
    let d = (a - b).rem_euclid(perimeter);
    d.min(perimeter - d)
}

/// A boundary curve sampled on a uniform time grid over `[0, 1]`, stored as
/// lifted arclengths. Consecutive lifts differ by less than half the
/// perimeter so the lift determines a unique continuous curve.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrajectory {
    samples: Vec<BoundaryPos>,
    perimeter: f64,
}

impl BoundaryTrajectory {
    pub fn from_lifts(lifts: Vec<f64>, perimeter: f64) -> Result<BoundaryTrajectory> {
        if lifts.len() < 2 {
            return Err(Error::DegenerateInput(format!(
                "trajectory needs at least 2 samples, got {}",
                lifts.len()
            )));
        }
        for w in lifts.windows(2) {
            if (w[1] - w[0]).abs() >= perimeter / 2.0 {
                return Err(Error::DegenerateInput(format!(
                    "lift step {} not below perimeter/2 = {}",
                    (w[1] - w[0]).abs(),
                    perimeter / 2.0
                )));
            }
        }
        Ok(BoundaryTrajectory {
            samples: lifts.into_iter().map(|l| BoundaryPos::from_lift(l, perimeter)).collect(),
            perimeter,
        })
    }

    /// Trajectory that stays at one boundary point for `len` samples.
    pub fn constant(s: f64, len: usize, perimeter: f64) -> Result<BoundaryTrajectory> {
        BoundaryTrajectory::from_lifts(vec![s; len.max(2)], perimeter)
    }

    pub fn samples(&self) -> &[BoundaryPos] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn lifts(&self) -> Vec<f64> {
        self.samples.iter().map(|p| p.lift).collect()
    }

    pub fn start(&self) -> BoundaryPos {
        self.samples[0]
    }

    pub fn end(&self) -> BoundaryPos {
        *self.samples.last().unwrap()
    }

    /// Keep every `k`-th sample (and the last). Preserves the endpoints, so
    /// winding numbers are unchanged; steps grow by up to a factor of `k`.
    pub fn subsample(&self, k: usize) -> Result<BoundaryTrajectory> {
        let k = k.max(1);
        let mut lifts: Vec<f64> =
            self.samples.iter().step_by(k).map(|p| p.lift).collect();
        let last = self.end().lift;
        if *lifts.last().unwrap() != last {
            lifts.push(last);
        }
        BoundaryTrajectory::from_lifts(lifts, self.perimeter)
    }
}

/// Winding number of the loop `alpha . beta^{-1}` around the boundary,
/// computed from lifts: both curves must share start and end points on the
/// boundary circle (within `P.tol()`), and the result is the integer nearest
/// to the lift-displacement difference divided by the perimeter.
pub fn winding_number(
    polygon: &Polygon,
    alpha: &BoundaryTrajectory,
    beta: &BoundaryTrajectory,
) -> Result<i64> {
    let per = polygon.perimeter();
    let tol = polygon.tol();
    let start_gap = circular_distance(alpha.start().s, beta.start().s, per);
    if start_gap > tol {
        return Err(Error::EndpointMismatch(format!(
            "start points differ by arc {start_gap}"
        )));
    }
    let end_gap = circular_distance(alpha.end().s, beta.end().s, per);
    if end_gap > tol {
        return Err(Error::EndpointMismatch(format!(
            "end points differ by arc {end_gap}"
        )));
    }
    let disp_alpha = alpha.end().lift - alpha.start().lift;
    let disp_beta = beta.end().lift - beta.start().lift;
    Ok(((disp_alpha - disp_beta) / per).round() as i64)
}

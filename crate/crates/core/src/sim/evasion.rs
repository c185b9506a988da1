use crate::error::{Error, Result};
use crate::geom::{circular_distance, BoundaryTrajectory, Polygon};

/// Contamination state of the boundary circle minus the two token points.
/// While the tokens are apart the complement has two arcs: `ab` runs CCW
/// from alpha to beta, `ba` the other way. A freshly opened arc starts
/// clear; an arc that collapses takes its contamination with it; contaminated
/// points never cross a token.
#[derive(Debug, Clone, Copy)]
enum Phase {
    Together { contaminated: bool },
    Apart { ab: bool, ba: bool },
}

/// Construct the boundary evader for a pair of endpoint trajectories, when
/// one exists.
///
/// This runs the one-dimensional evasion problem in which the sensors cover
/// only the two points alpha(t), beta(t) of the boundary circle. The
/// contaminated region is tracked through token crossings via the relative
/// lift; it survives exactly when the loop never closes with nonzero
/// winding, i.e. when every coincidence happens at partial winding zero.
/// The returned evader sits at the midpoint of the contaminated arc, which
/// moves at the average token speed and starts antipodal to the common
/// start point. Returns `None` when contamination dies out (a sweep with
/// these endpoint curves is possible).
pub fn evasion_path(
    polygon: &Polygon,
    alpha: &BoundaryTrajectory,
    beta: &BoundaryTrajectory,
) -> Result<Option<BoundaryTrajectory>> {
    if alpha.len() != beta.len() {
        return Err(Error::GridMismatch { left: alpha.len(), right: beta.len() });
    }
    let per = polygon.perimeter();
    let tol = polygon.tol();
    let start_gap = circular_distance(alpha.start().s, beta.start().s, per);
    if start_gap > tol {
        return Err(Error::EndpointMismatch(format!(
            "evasion construction needs alpha(0) = beta(0); start points differ by arc {start_gap}"
        )));
    }

    let lifts_a = alpha.lifts();
    let lifts_b = beta.lifts();
    // Relative lift, rebased so s(0) = 0 even if the raw lifts differ.
    let rebase = lifts_a[0] - lifts_b[0];
    let s_at = |k: usize| lifts_a[k] - lifts_b[k] - rebase;

    // Everything except the common start point is contaminated at t = 0.
    let mut phase = Phase::Together { contaminated: true };

    for k in 1..lifts_a.len() {
        let s0 = s_at(k - 1);
        let s1 = s_at(k);
        let near_multiple = |s: f64| {
            let m = (s / per).round();
            ((s - m * per).abs() <= tol).then_some(m)
        };

        // Interior crossing of a multiple of the perimeter: the tokens met
        // and crossed mid-step. One step moves the relative lift by less
        // than the perimeter, so at most one multiple can be crossed.
        let crossed = {
            let lo = s0.min(s1);
            let hi = s0.max(s1);
            let q = (lo / per).floor() + 1.0;
            let qp = q * per;
            (qp - lo > tol && hi - qp > tol).then_some(qp)
        };

        if let Some(_qp) = crossed {
            let upward = s1 > s0;
            phase = match phase {
                Phase::Together { contaminated } => {
                    // Separating and immediately crossing cannot happen in
                    // one sub-perimeter step unless the step started on the
                    // multiple; treat as separation first, then crossing.
                    let (ab, ba) =
                        if upward { (contaminated, false) } else { (false, contaminated) };
                    cross(ab, ba, upward)
                }
                Phase::Apart { ab, ba } => cross(ab, ba, upward),
            };
        }

        if let Some(m) = near_multiple(s1) {
            // Arrived at a coincidence: the arc squeezed shut on the
            // approach side dies. `ab` has length -s mod P, so it is the
            // one that shrinks when s grows toward the multiple.
            let qp = m * per;
            phase = match phase {
                Phase::Together { contaminated } => Phase::Together { contaminated },
                Phase::Apart { ab, ba } => {
                    if s0 < qp - tol {
                        Phase::Together { contaminated: ba }
                    } else if s0 > qp + tol {
                        Phase::Together { contaminated: ab }
                    } else {
                        Phase::Apart { ab, ba }
                    }
                }
            };
        } else if near_multiple(s0).is_some() {
            // Departed a coincidence: the freshly opened sliver is clear.
            if let Phase::Together { contaminated } = phase {
                phase = if s1 > s0 {
                    Phase::Apart { ab: contaminated, ba: false }
                } else {
                    Phase::Apart { ab: false, ba: contaminated }
                };
            }
        }

        let alive = match phase {
            Phase::Together { contaminated } => contaminated,
            Phase::Apart { ab, ba } => ab || ba,
        };
        if !alive {
            return Ok(None);
        }
    }

    // The contaminated arc's midpoint starts antipodal to the common start
    // and moves at the average of the token speeds: arc endpoints are the
    // tokens, so the midpoint drift is (dalpha + dbeta) / 2 regardless of
    // which arc is contaminated.
    let evader: Vec<f64> = lifts_a
        .iter()
        .zip(&lifts_b)
        .map(|(la, lb)| 0.5 * (la + lb) + 0.5 * per)
        .collect();
    Ok(Some(BoundaryTrajectory::from_lifts(evader, per)?))
}

/// Status update for an interior token crossing. Upward (s increasing
/// through a multiple): the `ab` arc collapses and reopens on the other
/// side; the surviving big arc keeps the `ba` status.
fn cross(ab: bool, ba: bool, upward: bool) -> Phase {
    if upward {
        Phase::Apart { ab: ba, ba: false }
    } else {
        Phase::Apart { ab: false, ba: ab }
    }
}

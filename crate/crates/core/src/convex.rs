//! Exact convex-case quantities: width by rotating calipers (equal to the
//! sweeping cost for convex domains), the shortest area-bisecting chord
//! (a lower bound on the sweeping cost), and the extremal-inequality report.

use crate::error::{Error, Result};
use crate::geom::{orient2d, signed_area, Point, Polygon};

/// Width of a convex polygon: the smallest distance between two parallel
/// supporting lines, realized by an antipodal vertex-edge pair.
#[derive(Debug, Clone)]
pub struct WidthResult {
    pub width: f64,
    /// Unit normal of the two supporting lines (pointing from the support
    /// edge toward the antipodal vertex).
    pub direction: Point,
    /// Antipodal vertex index and the opposite edge index.
    pub support_vertex: usize,
    pub support_edge: usize,
}

/// Rotating calipers in O(n): for each edge, track the farthest vertex; the
/// tracker only advances, so the whole scan is linear. Plateaus (parallel
/// edges) resolve to the first maximal vertex in walk order, i.e. the
/// smallest index the walk reaches.
pub fn width(polygon: &Polygon) -> Result<WidthResult> {
    if !polygon.is_convex() {
        return Err(Error::NotConvex);
    }
    let vs = polygon.vertices();
    let n = vs.len();

    // area2(i, k): twice the triangle area over edge i with apex k;
    // proportional to the distance from vertex k to the edge line.
    let area2 = |i: usize, k: usize| orient2d(vs[i], vs[(i + 1) % n], vs[k]);

    let mut k = (0..n)
        .max_by(|&a, &b| area2(0, a).partial_cmp(&area2(0, b)).unwrap())
        .unwrap();

    let mut best: Option<WidthResult> = None;
    for i in 0..n {
        let mut guard = 0;
        while area2(i, (k + 1) % n) > area2(i, k) && guard < 2 * n {
            k = (k + 1) % n;
            guard += 1;
        }
        let edge = vs[(i + 1) % n] - vs[i];
        let len = edge.norm();
        let dist = area2(i, k) / len;
        if best.as_ref().is_none_or(|b| dist < b.width) {
            let d = edge.perp().normalized();
            best = Some(WidthResult {
                width: dist,
                // +0.0 folds away negative zero on axis-aligned edges.
                direction: crate::geom::Point::new(d.x + 0.0, d.y + 0.0),
                support_vertex: k,
                support_edge: i,
            });
        }
    }
    Ok(best.expect("non-degenerate polygon has a width"))
}

/// A straight boundary-to-boundary chord splitting the area in half.
#[derive(Debug, Clone)]
pub struct BisectingChord {
    pub endpoints: [Point; 2],
    /// Arclength coordinates of the endpoints (anchor first).
    pub arclengths: [f64; 2],
    pub length: f64,
}

/// Number of boundary anchors scanned before the local golden-section
/// polish; fixed so identical inputs reproduce identical chords.
pub const CHORD_ANCHORS: usize = 1024;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Shortest area-bisecting chord of a convex polygon. For each anchor on a
/// fixed arclength grid the partner with equal area on both sides is found
/// by bisection (the cut area grows monotonically with the partner
/// position); the shortest anchor is then polished by golden-section search
/// between its grid neighbors.
pub fn shortest_bisecting_chord(polygon: &Polygon) -> Result<BisectingChord> {
    shortest_bisecting_chord_with_anchors(polygon, CHORD_ANCHORS)
}

pub fn shortest_bisecting_chord_with_anchors(
    polygon: &Polygon,
    anchors: usize,
) -> Result<BisectingChord> {
    if !polygon.is_convex() {
        return Err(Error::NotConvex);
    }
    let per = polygon.perimeter();
    let step = per / anchors as f64;

    let mut best_len = f64::INFINITY;
    let mut best_anchor = 0.0;
    for i in 0..anchors {
        let s = i as f64 * step;
        let len = bisecting_chord_at(polygon, s)?.length;
        if len < best_len {
            best_len = len;
            best_anchor = s;
        }
    }

    // Golden-section polish between the grid neighbors of the best anchor.
    let mut lo = best_anchor - step;
    let mut hi = best_anchor + step;
    let eval = |s: f64| bisecting_chord_at(polygon, s).map(|c| c.length);
    let mut x1 = hi - GOLDEN * (hi - lo);
    let mut x2 = lo + GOLDEN * (hi - lo);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    for _ in 0..80 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - GOLDEN * (hi - lo);
            f1 = eval(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + GOLDEN * (hi - lo);
            f2 = eval(x2)?;
        }
    }
    let polished = bisecting_chord_at(polygon, 0.5 * (lo + hi))?;
    if polished.length <= best_len {
        Ok(polished)
    } else {
        bisecting_chord_at(polygon, best_anchor)
    }
}

/// The bisecting chord anchored at arclength `s` (wrapped into the circle).
/// Convexity makes the cut area monotone in the partner position; without
/// it the bisection below has no bracket guarantee.
pub fn bisecting_chord_at(polygon: &Polygon, s: f64) -> Result<BisectingChord> {
    if !polygon.is_convex() {
        return Err(Error::NotConvex);
    }
    let per = polygon.perimeter();
    let half = polygon.area() / 2.0;
    let s = s.rem_euclid(per);

    // The cut area is 0 at s' = s and the full area at s' = s + perimeter,
    // and monotone in between, so plain bisection brackets the half-area
    // partner.
    let mut lo = s;
    let mut hi = s + per;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if cut_area(polygon, s, mid) < half {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let partner = 0.5 * (lo + hi);
    let residual = (cut_area(polygon, s, partner) - half).abs();
    if residual > 1e-6 * polygon.area() {
        return Err(Error::ConvergenceFailure(format!(
            "bisection residual {residual} at anchor {s}"
        )));
    }
    let a = polygon.boundary_point_wrapped(s);
    let b = polygon.boundary_point_wrapped(partner);
    Ok(BisectingChord {
        endpoints: [a, b],
        arclengths: [s, partner.rem_euclid(per)],
        length: a.dist(b),
    })
}

/// Area of the region bounded by the CCW boundary arc from `s` to `s_to`
/// (a lift with `s <= s_to <= s + perimeter`) and the closing chord.
pub fn cut_area(polygon: &Polygon, s: f64, s_to: f64) -> f64 {
    let per = polygon.perimeter();
    let n = polygon.len();
    let mut pts = Vec::with_capacity(n + 2);
    pts.push(polygon.boundary_point_wrapped(s));
    let start_idx = first_vertex_after(polygon, s);
    for off in 0..n {
        let idx = (start_idx + off) % n;
        let mut v_lift = polygon.vertex_arclength(idx);
        while v_lift <= s {
            v_lift += per;
        }
        if v_lift >= s_to {
            break;
        }
        pts.push(polygon.vertices()[idx]);
    }
    pts.push(polygon.boundary_point_wrapped(s_to));
    if pts.len() < 3 {
        return 0.0;
    }
    signed_area(&pts).max(0.0)
}

fn first_vertex_after(polygon: &Polygon, s: f64) -> usize {
    let n = polygon.len();
    for idx in 0..n {
        if polygon.vertex_arclength(idx) > s {
            return idx;
        }
    }
    0
}

/// The extremal inequality report: a convex domain's area is at least
/// sc^2 / sqrt(3), with equality for the equilateral triangle.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub area: f64,
    pub sweep_cost: f64,
    /// sc^2 / sqrt(3): the smallest area a convex domain of this sweeping
    /// cost can have.
    pub area_bound: f64,
    /// area * sqrt(3) / sc^2; at least 1 for convex domains.
    pub ratio: f64,
    pub convex: bool,
    /// Set when a convex input lands measurably below ratio 1.
    pub violation: bool,
}

pub fn extremal_report(polygon: &Polygon, sweep_cost: f64) -> ExtremalReport {
    let area = polygon.area();
    let sqrt3 = 3.0_f64.sqrt();
    let ratio = area * sqrt3 / (sweep_cost * sweep_cost);
    ExtremalReport {
        area,
        sweep_cost,
        area_bound: sweep_cost * sweep_cost / sqrt3,
        ratio,
        convex: polygon.is_convex(),
        violation: polygon.is_convex() && ratio < 1.0 - 1e-3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coords: &[(f64, f64)]) -> Polygon {
        Polygon::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn regular_ngon(n: usize, radius: f64) -> Polygon {
        let pts: Vec<Point> = (0..n)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                Point::new(radius * a.cos(), radius * a.sin())
            })
            .collect();
        Polygon::new(pts).unwrap()
    }

    #[test]
    fn rectangle_width() {
        let p = poly(&[(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.0, 1.0)]);
        let w = width(&p).unwrap();
        assert!((w.width - 1.0).abs() < 1e-12);
        assert!(w.direction.x.abs() < 1e-12);
        assert!((w.direction.y.abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equilateral_triangle_width_is_altitude() {
        let p = poly(&[(0.0, 0.0), (2.0, 0.0), (1.0, 3.0_f64.sqrt())]);
        let w = width(&p).unwrap();
        assert!((w.width - 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn regular_hexagon_width() {
        let p = regular_ngon(6, 1.0);
        let w = width(&p).unwrap();
        assert!((w.width - 3.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn non_convex_rejected() {
        let p = poly(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ]);
        assert!(matches!(width(&p), Err(Error::NotConvex)));
        assert!(matches!(shortest_bisecting_chord(&p), Err(Error::NotConvex)));
    }

    #[test]
    fn square_bisecting_chord_is_unit() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let c = shortest_bisecting_chord(&p).unwrap();
        assert!((c.length - 1.0).abs() < 1e-9, "length {}", c.length);
        let mut partner = c.arclengths[1];
        while partner <= c.arclengths[0] {
            partner += p.perimeter();
        }
        let cut = cut_area(&p, c.arclengths[0], partner);
        assert!((cut - 0.5).abs() < 1e-6);
    }

    #[test]
    fn disk_chord_is_diameter() {
        let p = regular_ngon(256, 1.0);
        let c = shortest_bisecting_chord(&p).unwrap();
        assert!((c.length - 2.0).abs() < 0.02, "length {}", c.length);
    }

    #[test]
    fn symmetric_hexagon_chord_through_center() {
        let p = poly(&[
            (1.0, 0.0),
            (0.5, 1.0),
            (-0.5, 1.0),
            (-1.0, 0.0),
            (-0.5, -1.0),
            (0.5, -1.0),
        ]);
        let c = shortest_bisecting_chord(&p).unwrap();
        let center = Point::new(0.0, 0.0);
        let d = crate::geom::point_segment_dist_sq(center, c.endpoints[0], c.endpoints[1]).sqrt();
        assert!(d <= 10.0 * p.tol(), "chord misses center by {d}");
    }

    #[test]
    fn cut_area_monotone_on_square() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let mut last = -1.0;
        for k in 1..16 {
            let a = cut_area(&p, 0.25, 0.25 + 4.0 * k as f64 / 16.0);
            assert!(a >= last);
            last = a;
        }
        assert!((cut_area(&p, 0.25, 0.25 + 2.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn extremal_equality_for_equilateral() {
        let p = poly(&[(0.0, 0.0), (2.0, 0.0), (1.0, 3.0_f64.sqrt())]);
        let r = extremal_report(&p, 3.0_f64.sqrt());
        assert!((r.ratio - 1.0).abs() < 1e-12);
        assert!(!r.violation);
    }

    #[test]
    fn extremal_square_ratio() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let r = extremal_report(&p, 1.0);
        assert!((r.ratio - 3.0_f64.sqrt()).abs() < 1e-12);
        assert!(!r.violation);
    }

    #[test]
    fn extremal_nonconvex_never_flagged() {
        let p = poly(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ]);
        // Deliberately absurd sweeping cost; non-convex inputs only report.
        let r = extremal_report(&p, 100.0);
        assert!(r.ratio < 1.0);
        assert!(!r.violation);
    }
}

use serde::{Deserialize, Serialize};

use super::point::{orient2d, point_segment_dist_sq, segments_intersect, Point, SegIntersection};
use crate::error::{Error, Result};

/// Relative factor for the polygon-wide geometric tolerance: coincidence
/// tests use `1e-9` times the bounding-box diagonal, stated once here and
/// reused everywhere.
pub const TOL_FACTOR: f64 = 1e-9;

/// Classification of a point against the closed domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Interior,
    Boundary,
    Exterior,
}

/// A simple closed polygon with counterclockwise vertex order; the Jordan
/// domain is the closed region it bounds.
#[derive(Debug, Clone)]
pub struct Polygon {
    vertices: Vec<Point>,
    /// Cumulative arclength: `cum_len[i]` is the boundary distance from
    /// vertex 0 to vertex i; the last entry equals the perimeter.
    cum_len: Vec<f64>,
    perimeter: f64,
    is_convex: bool,
    tol: f64,
    bbox: (Point, Point),
}

/// Wire format for polygon files: `{"vertices": [[x, y], ...]}`.
#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<[f64; 2]>,
}

impl Polygon {
    /// Validate a vertex list and build the polygon. The input may be in
    /// clockwise order; it is reversed to counterclockwise. Fails on fewer
    /// than 3 vertices, repeated consecutive vertices, zero area, or
    /// self-intersection.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon> {
        if vertices.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput("non-finite coordinate".into()));
        }

        let (lo, hi) = bounding_box(&vertices);
        let diag = hi.dist(lo);
        if diag == 0.0 {
            return Err(Error::DegenerateInput("all vertices coincide".into()));
        }
        let tol = TOL_FACTOR * diag;

        let n = vertices.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].dist(vertices[j]) <= tol {
                return Err(Error::DegenerateInput(format!(
                    "vertices {i} and {j} coincide"
                )));
            }
        }

        check_simplicity(&vertices, tol)?;

        let signed = signed_area(&vertices);
        if signed.abs() <= tol * diag {
            return Err(Error::DegenerateInput("zero area".into()));
        }
        let mut vertices = vertices;
        if signed < 0.0 {
            vertices.reverse();
        }

        let mut cum_len = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        cum_len.push(0.0);
        for i in 0..n {
            acc += vertices[i].dist(vertices[(i + 1) % n]);
            cum_len.push(acc);
        }
        let perimeter = acc;

        let is_convex = convexity(&vertices, tol * diag);

        Ok(Polygon {
            vertices,
            cum_len,
            perimeter,
            is_convex,
            tol,
            bbox: (lo, hi),
        })
    }

    pub fn from_json_str(s: &str) -> Result<Polygon> {
        let parsed: PolygonJson = serde_json::from_str(s)
            .map_err(|e| Error::DegenerateInput(format!("bad polygon JSON: {e}")))?;
        Polygon::new(parsed.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect())
    }

    pub fn to_json_string(&self) -> String {
        let json = PolygonJson {
            vertices: self.vertices.iter().map(|p| [p.x, p.y]).collect(),
        };
        serde_json::to_string(&json).expect("polygon serialization")
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn is_convex(&self) -> bool {
        self.is_convex
    }

    /// Coincidence tolerance: `1e-9` times the bounding-box diagonal.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn bbox(&self) -> (Point, Point) {
        self.bbox
    }

    /// Arclength of vertex `i` measured counterclockwise from vertex 0.
    pub fn vertex_arclength(&self, i: usize) -> f64 {
        self.cum_len[i]
    }

    /// Positive area by the shoelace formula (CCW invariant).
    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    /// Point on the boundary at arclength `s` in `[0, perimeter)`.
    pub fn boundary_point(&self, s: f64) -> Result<Point> {
        if !(0.0..self.perimeter).contains(&s) {
            return Err(Error::OutOfRange { s, perimeter: self.perimeter });
        }
        Ok(self.boundary_point_wrapped(s))
    }

    /// Boundary point at any lift value; the coordinate wraps mod perimeter.
    pub fn boundary_point_wrapped(&self, lift: f64) -> Point {
        let s = lift.rem_euclid(self.perimeter);
        // cum_len is sorted; find the edge containing s.
        let i = match self.cum_len.binary_search_by(|c| c.partial_cmp(&s).unwrap()) {
            Ok(i) => i.min(self.len() - 1),
            Err(i) => i - 1,
        };
        let a = self.vertices[i];
        let b = self.vertices[(i + 1) % self.len()];
        let edge_len = self.cum_len[i + 1] - self.cum_len[i];
        let t = if edge_len > 0.0 { (s - self.cum_len[i]) / edge_len } else { 0.0 };
        a.lerp(b, t)
    }

    /// Distance from `p` to the nearest boundary edge.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        let n = self.len();
        let mut best = f64::INFINITY;
        for i in 0..n {
            let d = point_segment_dist_sq(p, self.vertices[i], self.vertices[(i + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best.sqrt()
    }

    /// Arclength of the boundary point nearest to `p`.
    pub fn project_to_boundary(&self, p: Point) -> f64 {
        let n = self.len();
        let mut best = f64::INFINITY;
        let mut best_s = 0.0;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let q = super::point::project_on_segment(p, a, b);
            let d = (p - q).norm_sq();
            if d < best {
                best = d;
                best_s = self.cum_len[i] + a.dist(q);
            }
        }
        if best_s >= self.perimeter {
            best_s - self.perimeter
        } else {
            best_s
        }
    }

    /// Classify `p` against the closed domain with a boundary band of
    /// half-width `tol`.
    pub fn classify(&self, p: Point, tol: f64) -> Region {
        if self.boundary_distance(p) <= tol {
            return Region::Boundary;
        }
        if self.contains_crossing(p) {
            Region::Interior
        } else {
            Region::Exterior
        }
    }

    /// Classify with the polygon's own tolerance.
    pub fn classify_default(&self, p: Point) -> Region {
        self.classify(p, self.tol)
    }

    /// Even-odd crossing test; only trustworthy for points farther than the
    /// tolerance from the boundary, which `classify` guarantees.
    fn contains_crossing(&self, p: Point) -> bool {
        let n = self.len();
        let mut inside = false;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

fn bounding_box(vertices: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in vertices {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    (lo, hi)
}

/// Shoelace sum; positive for counterclockwise order.
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        acc += a.cross(b);
    }
    acc / 2.0
}

/// O(n^2) pairwise edge test; adjacent edges may touch only at the shared
/// endpoint.
fn check_simplicity(vertices: &[Point], tol: f64) -> Result<()> {
    let n = vertices.len();
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        for j in (i + 1)..n {
            // Skip the edge itself and the two neighbors; those share an
            // endpoint by construction.
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let c = vertices[j];
            let d = vertices[(j + 1) % n];
            match segments_intersect(a, b, c, d, tol) {
                SegIntersection::None | SegIntersection::Endpoint => {}
                SegIntersection::Proper => {
                    return Err(Error::SimplicityViolation { edge_a: i, edge_b: j })
                }
            }
        }
    }
    Ok(())
}

/// Convex iff every turn is a non-right turn (collinear vertices allowed).
fn convexity(vertices: &[Point], area_tol: f64) -> bool {
    let n = vertices.len();
    (0..n).all(|i| {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let c = vertices[(i + 2) % n];
        orient2d(a, b, c) > -area_tol
    })
}

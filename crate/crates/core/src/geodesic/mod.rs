//! Geodesic (intrinsic) metric inside a simple polygon: one triangulation up
//! front, then funnel queries over the triangle sleeve between two points.

mod funnel;
mod triangulate;

pub use funnel::string_pull;
pub use triangulate::{triangulate, Triangulation};

use crate::error::{Error, Result};
use crate::geom::{BoundaryTrajectory, Point, Polygon, Region};

/// A shortest path inside the domain: waypoint polyline plus its length.
/// Interior bend points are reflex polygon vertices.
#[derive(Debug, Clone)]
pub struct GeodesicPath {
    pub waypoints: Vec<Point>,
    pub length: f64,
}

impl GeodesicPath {
    fn from_waypoints(waypoints: Vec<Point>) -> GeodesicPath {
        let length = waypoints.windows(2).map(|w| w[0].dist(w[1])).sum();
        GeodesicPath { waypoints, length }
    }
}

/// Shortest-path oracle for one polygon. Triangulates once; queries are
/// read-only and may run concurrently.
#[derive(Debug, Clone)]
pub struct GeodesicMetric {
    polygon: Polygon,
    tri: Triangulation,
}

impl GeodesicMetric {
    pub fn new(polygon: &Polygon) -> Result<GeodesicMetric> {
        Ok(GeodesicMetric { polygon: polygon.clone(), tri: triangulate(polygon)? })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.tri
    }

    /// Unique shortest path between two points of the closed domain.
    /// Points within tolerance of the boundary are snapped onto it first.
    pub fn shortest_path(&self, a: Point, b: Point) -> Result<GeodesicPath> {
        let a = self.snap(a)?;
        let b = self.snap(b)?;
        if a.dist(b) <= self.polygon.tol() {
            return Ok(GeodesicPath { waypoints: vec![a], length: 0.0 });
        }

        let ta = self.locate_or_err(a)?;
        let tb = self.locate_or_err(b)?;
        if ta == tb {
            return Ok(GeodesicPath::from_waypoints(vec![a, b]));
        }

        let sleeve = self.sleeve(ta, tb)?;
        let portals = self.portals(&sleeve);
        let waypoints = string_pull(a, &portals, b, self.polygon.tol());
        Ok(GeodesicPath::from_waypoints(waypoints))
    }

    /// Geodesic distance d between two points of the closed domain.
    pub fn distance(&self, a: Point, b: Point) -> Result<f64> {
        Ok(self.shortest_path(a, b)?.length)
    }

    /// Max over the shared time grid of the geodesic distance between
    /// time-aligned boundary points.
    pub fn curve_distance(
        &self,
        alpha: &BoundaryTrajectory,
        beta: &BoundaryTrajectory,
    ) -> Result<f64> {
        if alpha.len() != beta.len() {
            return Err(Error::GridMismatch { left: alpha.len(), right: beta.len() });
        }
        let mut max = 0.0_f64;
        for (pa, pb) in alpha.samples().iter().zip(beta.samples()) {
            let a = self.polygon.boundary_point_wrapped(pa.s);
            let b = self.polygon.boundary_point_wrapped(pb.s);
            max = max.max(self.distance(a, b)?);
        }
        Ok(max)
    }

    fn snap(&self, p: Point) -> Result<Point> {
        let tol = self.polygon.tol();
        if self.polygon.boundary_distance(p) <= tol {
            let s = self.polygon.project_to_boundary(p);
            return Ok(self.polygon.boundary_point_wrapped(s));
        }
        match self.polygon.classify(p, tol) {
            Region::Interior | Region::Boundary => Ok(p),
            Region::Exterior => Err(Error::PointOutsideDomain { x: p.x, y: p.y }),
        }
    }

    fn locate_or_err(&self, p: Point) -> Result<usize> {
        self.tri
            .locate(&self.polygon, p)
            .ok_or(Error::PointOutsideDomain { x: p.x, y: p.y })
    }

    /// Unique triangle path in the dual tree from `from` to `to` (BFS).
    fn sleeve(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        let n = self.tri.len();
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        parent[from] = from;
        queue.push_back(from);
        while let Some(t) = queue.pop_front() {
            if t == to {
                break;
            }
            for nb in self.tri.neighbors()[t].iter().flatten() {
                if parent[*nb] == usize::MAX {
                    parent[*nb] = t;
                    queue.push_back(*nb);
                }
            }
        }
        if parent[to] == usize::MAX {
            return Err(Error::NoPath);
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Portal (left, right) pairs along the sleeve. If the shared edge is
    /// the directed edge `u -> v` of the source triangle, the portal seen in
    /// travel direction is (left = v, right = u): the source interior lies
    /// left of `u -> v` in a CCW triangle.
    fn portals(&self, sleeve: &[usize]) -> Vec<(Point, Point)> {
        let vs = self.polygon.vertices();
        let mut out = Vec::with_capacity(sleeve.len().saturating_sub(1));
        for w in sleeve.windows(2) {
            let (t, next) = (w[0], w[1]);
            let tri = self.tri.triangles()[t];
            let k = (0..3)
                .find(|&k| self.tri.neighbors()[t][k] == Some(next))
                .expect("sleeve triangles adjacent");
            let u = tri[k];
            let v = tri[(k + 1) % 3];
            out.push((vs[v], vs[u]));
        }
        out
    }
}

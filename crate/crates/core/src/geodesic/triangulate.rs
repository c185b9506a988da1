use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::geom::{orient2d, Point, Polygon};

/// Ear-clipping triangulation of a simple polygon, with triangle-to-triangle
/// adjacency across shared diagonals. For a simple polygon the dual graph is
/// a tree, which is what the sleeve walk in the funnel relies on.
#[derive(Debug, Clone)]
pub struct Triangulation {
    /// Vertex-index triples, counterclockwise.
    triangles: Vec<[usize; 3]>,
    /// `neighbors[t][k]` is the triangle across the directed edge
    /// `triangles[t][k] -> triangles[t][(k+1)%3]`, if any.
    neighbors: Vec<[Option<usize>; 3]>,
}

impl Triangulation {
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn neighbors(&self) -> &[[Option<usize>; 3]] {
        &self.neighbors
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// First triangle whose closed interior contains `p`. Degenerate
    /// (collinear) triangles are considered only if no proper triangle
    /// matches.
    pub fn locate(&self, polygon: &Polygon, p: Point) -> Option<usize> {
        let vs = polygon.vertices();
        let (lo, hi) = polygon.bbox();
        let eps = polygon.tol() * hi.dist(lo);
        let mut degenerate_hit = None;
        for (t, tri) in self.triangles.iter().enumerate() {
            let [a, b, c] = tri.map(|i| vs[i]);
            let inside = orient2d(a, b, p) >= -eps
                && orient2d(b, c, p) >= -eps
                && orient2d(c, a, p) >= -eps;
            if !inside {
                continue;
            }
            if orient2d(a, b, c) > eps {
                return Some(t);
            }
            if degenerate_hit.is_none() {
                degenerate_hit = Some(t);
            }
        }
        degenerate_hit
    }
}

/// Clip ears until three vertices remain. Strictly convex ears are clipped
/// first; collinear slivers are only clipped when no proper ear exists in a
/// pass, with ties always resolved by the lowest vertex index.
pub fn triangulate(polygon: &Polygon) -> Result<Triangulation> {
    let vs = polygon.vertices();
    let n = vs.len();
    let (lo, hi) = polygon.bbox();
    let eps = polygon.tol() * hi.dist(lo);

    let mut next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut triangles = Vec::with_capacity(n - 2);

    while remaining > 3 {
        let ear = find_ear(vs, &next, &prev, &alive, eps, false)
            .or_else(|| find_ear(vs, &next, &prev, &alive, eps, true));
        let Some(v) = ear else {
            return Err(Error::DegenerateInput("no ear found".into()));
        };
        triangles.push([prev[v], v, next[v]]);
        alive[v] = false;
        next[prev[v]] = next[v];
        prev[next[v]] = prev[v];
        remaining -= 1;
    }
    let first = (0..n).find(|&i| alive[i]).expect("three vertices remain");
    triangles.push([prev[first], first, next[first]]);

    let neighbors = build_adjacency(&triangles, n)?;
    Ok(Triangulation { triangles, neighbors })
}

fn find_ear(
    vs: &[Point],
    next: &[usize],
    prev: &[usize],
    alive: &[bool],
    eps: f64,
    allow_flat: bool,
) -> Option<usize> {
    let n = vs.len();
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        let (u, w) = (prev[v], next[v]);
        let turn = orient2d(vs[u], vs[v], vs[w]);
        let convex = if allow_flat { turn > -eps } else { turn > eps };
        if !convex {
            continue;
        }
        // No other remaining vertex may lie in the closed ear triangle.
        let mut blocked = false;
        let mut k = next[w];
        while k != u {
            let p = vs[k];
            if orient2d(vs[u], vs[v], p) >= -eps
                && orient2d(vs[v], vs[w], p) >= -eps
                && orient2d(vs[w], vs[u], p) >= -eps
            {
                blocked = true;
                break;
            }
            k = next[k];
        }
        if !blocked {
            return Some(v);
        }
    }
    None
}

fn build_adjacency(triangles: &[[usize; 3]], n: usize) -> Result<Vec<[Option<usize>; 3]>> {
    let mut by_edge: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    let mut neighbors = vec![[None; 3]; triangles.len()];
    let mut shared = 0usize;
    for (t, tri) in triangles.iter().enumerate() {
        for k in 0..3 {
            let a = tri[k];
            let b = tri[(k + 1) % 3];
            let key = (a.min(b), a.max(b));
            if let Some(&(s, sk)) = by_edge.get(&key) {
                neighbors[t][k] = Some(s);
                neighbors[s][sk] = Some(t);
                shared += 1;
            } else {
                by_edge.insert(key, (t, k));
            }
        }
    }
    // A simple polygon's dual graph is a tree: exactly one fewer shared
    // diagonal than triangles.
    if n >= 3 && shared + 1 != triangles.len() {
        return Err(Error::DegenerateInput(format!(
            "dual graph is not a tree: {} diagonals for {} triangles",
            shared,
            triangles.len()
        )));
    }
    Ok(neighbors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::signed_area;

    fn poly(coords: &[(f64, f64)]) -> Polygon {
        Polygon::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn tri_area(polygon: &Polygon, tri: [usize; 3]) -> f64 {
        let vs = polygon.vertices();
        signed_area(&[vs[tri[0]], vs[tri[1]], vs[tri[2]]])
    }

    #[test]
    fn square_two_triangles() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 2);
        let total: f64 = t.triangles().iter().map(|&tr| tri_area(&p, tr)).sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn convex_hexagon_four_triangles() {
        let p = poly(&[
            (1.0, 0.0),
            (0.5, 0.9),
            (-0.5, 0.9),
            (-1.0, 0.0),
            (-0.5, -0.9),
            (0.5, -0.9),
        ]);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn l_shape_area_conserved() {
        let p = poly(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ]);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 4);
        let total: f64 = t.triangles().iter().map(|&tr| tri_area(&p, tr)).sum();
        assert!((total - 3.0).abs() < 1e-9);
        for &tr in t.triangles() {
            assert!(tri_area(&p, tr) > 0.0, "triangle {tr:?} not CCW");
        }
    }

    #[test]
    fn collinear_vertex_handled() {
        // Extra vertex in the middle of the bottom edge.
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
        let t = triangulate(&p).unwrap();
        assert_eq!(t.len(), 3);
        let total: f64 = t.triangles().iter().map(|&tr| tri_area(&p, tr)).sum();
        assert!((total - 4.0).abs() < 1e-9);
    }

    #[test]
    fn locate_interior_points() {
        let p = poly(&[
            (0.0, 0.0),
            (2.0, 0.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 2.0),
            (0.0, 2.0),
        ]);
        let t = triangulate(&p).unwrap();
        let vs = p.vertices();
        for probe in [
            Point::new(0.5, 0.5),
            Point::new(1.5, 0.5),
            Point::new(0.5, 1.5),
            Point::new(1.0, 1.0),
        ] {
            let idx = t.locate(&p, probe).expect("point should be inside");
            let [a, b, c] = t.triangles()[idx].map(|i| vs[i]);
            assert!(orient2d(a, b, probe) >= -1e-9);
            assert!(orient2d(b, c, probe) >= -1e-9);
            assert!(orient2d(c, a, probe) >= -1e-9);
        }
        assert!(t.locate(&p, Point::new(1.5, 1.5)).is_none());
    }
}

//! Shared test oracles and shape generators. Everything here is an
//! independent implementation path: the visibility-graph Dijkstra checks the
//! funnel, the direction sweep checks the calipers, and the threshold
//! reachability search checks the best-first bottleneck solver.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sweepcost::geom::{orient2d, Point, Polygon, Region};

// ---------------------------------------------------------------------------
// Shape generators

pub fn poly(coords: &[(f64, f64)]) -> Polygon {
    Polygon::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
}

pub fn unit_square() -> Polygon {
    poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
}

pub fn rectangle(w: f64, h: f64) -> Polygon {
    poly(&[(0.0, 0.0), (w, 0.0), (w, h), (0.0, h)])
}

pub fn equilateral_triangle(side: f64) -> Polygon {
    poly(&[(0.0, 0.0), (side, 0.0), (side / 2.0, side * 3.0_f64.sqrt() / 2.0)])
}

pub fn regular_ngon(n: usize, radius: f64) -> Polygon {
    let pts: Vec<Point> = (0..n)
        .map(|i| {
            let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            Point::new(radius * a.cos(), radius * a.sin())
        })
        .collect();
    Polygon::new(pts).unwrap()
}

pub fn ellipse_polygon(a: f64, b: f64, segments: usize) -> Polygon {
    let pts: Vec<Point> = (0..segments)
        .map(|i| {
            let t = 2.0 * std::f64::consts::PI * i as f64 / segments as f64;
            Point::new(a * t.cos(), b * t.sin())
        })
        .collect();
    Polygon::new(pts).unwrap()
}

pub fn l_shape() -> Polygon {
    poly(&[
        (0.0, 0.0),
        (2.0, 0.0),
        (2.0, 1.0),
        (1.0, 1.0),
        (1.0, 2.0),
        (0.0, 2.0),
    ])
}

/// Unit-side equilateral triangle with each edge midpoint pulled toward the
/// centroid by factor `depth` in (0, 1): a three-pronged star whose area
/// shrinks with depth while its sweeping cost stays above the circumradius.
pub fn pronged_triangle(depth: f64) -> Polygon {
    let h = 3.0_f64.sqrt() / 2.0;
    let v = [Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, h)];
    let c = Point::new(0.5, h / 3.0);
    let mut pts = Vec::with_capacity(6);
    for i in 0..3 {
        let m = v[i].lerp(v[(i + 1) % 3], 0.5);
        pts.push(v[i]);
        pts.push(m.lerp(c, depth));
    }
    Polygon::new(pts).unwrap()
}

/// Random star-shaped polygon: sorted random angles with random radii
/// around the origin. Simple by construction, and the radius jitter makes
/// plenty of reflex vertices.
pub fn random_radial_polygon(seed: u64, n: usize) -> Polygon {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let mut angles: Vec<f64> =
            (0..n).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        angles.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        if angles.len() < 4 {
            continue;
        }
        let pts: Vec<Point> = angles
            .iter()
            .map(|&t| {
                let r = rng.gen_range(0.35..1.0);
                Point::new(r * t.cos(), r * t.sin())
            })
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            return p;
        }
    }
}

/// Convex hull of `n` points drawn uniformly from the unit square, scaled
/// by 2: deterministic per seed.
pub fn random_convex_hull(seed: u64, n: usize) -> Polygon {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let pts: Vec<Point> =
            (0..n).map(|_| Point::new(rng.gen_range(0.0..2.0), rng.gen_range(0.0..2.0))).collect();
        let hull = convex_hull(&pts);
        if hull.len() >= 3 {
            if let Ok(p) = Polygon::new(hull) {
                return p;
            }
        }
    }
}

/// Andrew monotone chain; strict turns so collinear points drop out.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && orient2d(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && orient2d(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// ---------------------------------------------------------------------------
// Visibility-graph Dijkstra oracle for geodesic distances

/// Shortest path from `a` to `b` through the graph over polygon vertices
/// plus the endpoints, with edges between mutually visible pairs.
pub fn visibility_graph_distance(polygon: &Polygon, a: Point, b: Point) -> f64 {
    let mut nodes: Vec<Point> = vec![a, b];
    nodes.extend_from_slice(polygon.vertices());
    let n = nodes.len();

    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if segment_inside(polygon, nodes[i], nodes[j]) {
                let w = nodes[i].dist(nodes[j]);
                adj[i].push((j, w));
                adj[j].push((i, w));
            }
        }
    }

    // Dijkstra, dense-graph style.
    let mut dist = vec![f64::INFINITY; n];
    let mut done = vec![false; n];
    dist[0] = 0.0;
    for _ in 0..n {
        let mut u = usize::MAX;
        let mut best = f64::INFINITY;
        for v in 0..n {
            if !done[v] && dist[v] < best {
                best = dist[v];
                u = v;
            }
        }
        if u == usize::MAX {
            break;
        }
        done[u] = true;
        if u == 1 {
            break;
        }
        for &(v, w) in &adj[u] {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
            }
        }
    }
    dist[1]
}

/// The closed segment `uv` stays inside the closed polygon: collect every
/// parameter where it meets a polygon edge, then require the midpoint of
/// each gap to be non-exterior.
fn segment_inside(polygon: &Polygon, u: Point, v: Point) -> bool {
    let verts = polygon.vertices();
    let n = verts.len();
    let tol = polygon.tol();
    let mut cuts: Vec<f64> = vec![0.0, 1.0];

    let d = v - u;
    let len_sq = d.norm_sq();
    if len_sq == 0.0 {
        return polygon.classify(u, tol) != Region::Exterior;
    }

    for e in 0..n {
        let c = verts[e];
        let cd = verts[(e + 1) % n] - c;
        let den = d.cross(cd);
        if den.abs() > 1e-14 * len_sq.sqrt() * cd.norm() {
            let t = (c - u).cross(cd) / den;
            let s = (c - u).cross(d) / den;
            if (-1e-12..=1.0 + 1e-12).contains(&t) && (-1e-12..=1.0 + 1e-12).contains(&s) {
                cuts.push(t.clamp(0.0, 1.0));
            }
        } else {
            // Parallel: if collinear, the edge endpoints cut the segment.
            if sweepcost::geom::point_segment_dist_sq(c, u, v) <= tol * tol {
                let t = (c - u).dot(d) / len_sq;
                if (0.0..=1.0).contains(&t) {
                    cuts.push(t);
                }
            }
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for w in cuts.windows(2) {
        let mid = u + d * (0.5 * (w[0] + w[1]));
        if polygon.classify(mid, tol) == Region::Exterior {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Brute-force width oracles

/// Minimum support width over `directions` sampled angles in [0, pi).
/// The sampled minimum sits above the true width by first order in the
/// angular spacing, since the width function is kinked at its minimizer.
pub fn direction_sweep_width(polygon: &Polygon, directions: usize) -> f64 {
    let mut best = f64::INFINITY;
    for k in 0..directions {
        let theta = std::f64::consts::PI * k as f64 / directions as f64;
        let u = Point::new(theta.cos(), theta.sin());
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in polygon.vertices() {
            let p = v.dot(u);
            lo = lo.min(p);
            hi = hi.max(p);
        }
        best = best.min(hi - lo);
    }
    best
}

/// Exact width by exhaustive edge-vertex scan: for every edge, the farthest
/// vertex from its line; minimum over edges. O(n^2), no angular sampling.
pub fn exact_width(polygon: &Polygon) -> f64 {
    let vs = polygon.vertices();
    let n = vs.len();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = vs[i];
        let e = vs[(i + 1) % n] - a;
        let len = e.norm();
        let mut far = 0.0_f64;
        for v in vs {
            far = far.max(((*v - a).cross(e) / len).abs());
        }
        best = best.min(far);
    }
    best
}

// ---------------------------------------------------------------------------
// Threshold-reachability bottleneck oracle

/// Smallest distinct matrix value `v` such that some diagonal state with
/// |delta| = m is reachable from a diagonal start through states of cost at
/// most `v`. Independent of the production search: plain binary search over
/// thresholds with a BFS reachability check per probe.
pub fn threshold_bottleneck(matrix: &[f64], m: usize, strict: bool) -> f64 {
    let mut distinct: Vec<f64> = matrix.to_vec();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    distinct.dedup();

    let mut lo = 0usize;
    let mut hi = distinct.len() - 1;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if reachable(matrix, m, strict, distinct[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    distinct[lo]
}

fn reachable(matrix: &[f64], m: usize, strict: bool, threshold: f64) -> bool {
    let width = 2 * m + 1;
    let id = |i: usize, j: usize, d: usize| (d * m + i) * m + j;
    let mut seen = vec![false; width * m * m];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..m {
        if matrix[s * m + s] <= threshold {
            seen[id(s, s, m)] = true;
            queue.push_back((s, s, m));
        }
    }
    while let Some((i, j, d)) = queue.pop_front() {
        if i == j && (d == 0 || d == 2 * m) {
            return true;
        }
        let mut moves: Vec<(usize, usize, isize)> = vec![((i + 1) % m, j, 1), (i, (j + 1) % m, -1)];
        if !strict {
            moves.push(((i + m - 1) % m, j, -1));
            moves.push((i, (j + m - 1) % m, 1));
        }
        for (ni, nj, dd) in moves {
            let nd = d as isize + dd;
            if nd < 0 || nd > 2 * m as isize {
                continue;
            }
            let nd = nd as usize;
            if matrix[ni * m + nj] <= threshold && !seen[id(ni, nj, nd)] {
                seen[id(ni, nj, nd)] = true;
                queue.push_back((ni, nj, nd));
            }
        }
    }
    false
}

use std::ops::{Add, Mul, Neg, Sub};

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product, treating both as vectors.
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.x * self.x + self.y * self.y
    }

    pub fn dist(self, other: Point) -> f64 {
        (self - other).norm()
    }

    /// Counterclockwise perpendicular.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        if n == 0.0 {
            Point::new(0.0, 0.0)
        } else {
            Point::new(self.x / n, self.y / n)
        }
    }

    pub fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Twice the signed area of triangle `abc`; positive when `c` lies to the
/// left of the directed line `a -> b`.
pub fn orient2d(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn point_segment_dist_sq(p: Point, a: Point, b: Point) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return (p - a).norm_sq();
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm_sq()
}

/// Closest point on the closed segment `ab` to `p`.
pub fn project_on_segment(p: Point, a: Point, b: Point) -> Point {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return a;
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    a + ab * t
}

/// How two closed segments intersect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegIntersection {
    None,
    /// Crossing or touch at a point that is interior to at least one segment.
    Proper,
    /// Touch that only involves segment endpoints.
    Endpoint,
}

/// Classify the intersection of closed segments `ab` and `cd` with an
/// absolute coordinate tolerance `tol`.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point, tol: f64) -> SegIntersection {
    let near = |p: Point, q: Point| p.dist(q) <= tol;
    let d1 = orient2d(c, d, a);
    let d2 = orient2d(c, d, b);
    let d3 = orient2d(a, b, c);
    let d4 = orient2d(a, b, d);

    let area_tol = tol * (b - a).norm().max(d.dist(c)).max(tol);

    // Generic crossing.
    if ((d1 > area_tol && d2 < -area_tol) || (d1 < -area_tol && d2 > area_tol))
        && ((d3 > area_tol && d4 < -area_tol) || (d3 < -area_tol && d4 > area_tol))
    {
        return SegIntersection::Proper;
    }

    let mut touching = false;
    let mut endpoint_only = true;
    let mut check = |p: Point, u: Point, v: Point, shared: bool| {
        if point_segment_dist_sq(p, u, v) <= tol * tol {
            touching = true;
            if !shared && !near(p, u) && !near(p, v) {
                endpoint_only = false;
            }
        }
    };
    // Each endpoint against the other segment. A touch counts as endpoint-only
    // when the contact happens at an endpoint of *both* segments.
    check(a, c, d, near(a, c) || near(a, d));
    check(b, c, d, near(b, c) || near(b, d));
    check(c, a, b, near(c, a) || near(c, b));
    check(d, a, b, near(d, a) || near(d, b));

    if !touching {
        SegIntersection::None
    } else if endpoint_only {
        SegIntersection::Endpoint
    } else {
        SegIntersection::Proper
    }
}

use crate::geom::{orient2d, Point};

/// String-pulling over an ordered portal corridor. `portals` are (left,
/// right) pairs as seen walking from `start` to `goal`; returns the taut
/// path including both endpoints.
pub fn string_pull(start: Point, portals: &[(Point, Point)], goal: Point, tol: f64) -> Vec<Point> {
    let mut path = vec![start];
    if portals.is_empty() {
        path.push(goal);
        return dedupe(path, tol);
    }

    let same = |a: Point, b: Point| a.dist(b) <= tol;

    let mut apex = start;
    let mut left = portals[0].0;
    let mut right = portals[0].1;
    let mut apex_i: usize;
    let mut left_i = 0usize;
    let mut right_i = 0usize;

    let mut i = 1usize;
    while i <= portals.len() {
        let (new_left, new_right) = if i < portals.len() { portals[i] } else { (goal, goal) };

        // Tighten the right side: the candidate must not lie right of the
        // apex->right ray.
        if orient2d(apex, right, new_right) >= 0.0 {
            if same(apex, right) || orient2d(apex, left, new_right) < 0.0 {
                right = new_right;
                right_i = i;
            } else {
                // Right swept over left: the left point becomes the apex.
                path.push(left);
                apex = left;
                apex_i = left_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }

        // Tighten the left side, mirror image.
        if orient2d(apex, left, new_left) <= 0.0 {
            if same(apex, left) || orient2d(apex, right, new_left) > 0.0 {
                left = new_left;
                left_i = i;
            } else {
                path.push(right);
                apex = right;
                apex_i = right_i;
                left = apex;
                right = apex;
                left_i = apex_i;
                right_i = apex_i;
                i = apex_i + 1;
                continue;
            }
        }

        i += 1;
    }
    path.push(goal);
    dedupe(path, tol)
}

fn dedupe(path: Vec<Point>, tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(path.len());
    for p in path {
        if out.last().is_none_or(|q| q.dist(p) > tol) {
            out.push(p);
        }
    }
    out
}

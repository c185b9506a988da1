//! Planar primitives: points, simple polygons, boundary parametrization,
//! and winding numbers computed from lifts.

mod boundary;
mod point;
mod polygon;

pub use boundary::{circular_distance, winding_number, BoundaryPos, BoundaryTrajectory};
pub use point::{
    orient2d, point_segment_dist_sq, project_on_segment, segments_intersect, Point,
    SegIntersection,
};
pub use polygon::{signed_area, Polygon, Region, TOL_FACTOR};

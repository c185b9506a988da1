//! Sweeping cost of simple polygonal planar domains.
//!
//! The sweeping cost of a domain is the shortest sensor-curve length that
//! suffices to clear the whole domain of continuously moving intruders. This
//! crate computes it by a discretized bottleneck search over pairs of
//! boundary walks with unit winding, checks convex inputs against the exact
//! width (rotating calipers) and the shortest area-bisecting chord lower
//! bound, and certifies solver output by simulating the contamination
//! clearing sweep on a raster.

pub mod convex;
pub mod error;
pub mod export;
pub mod geodesic;
pub mod geom;
pub mod sim;
pub mod solver;

pub use error::{Error, Result};
pub use geom::{
    winding_number, BoundaryPos, BoundaryTrajectory, Point, Polygon, Region,
};

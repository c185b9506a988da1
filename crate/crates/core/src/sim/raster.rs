use crate::geom::{point_segment_dist_sq, Point, Polygon, Region};

/// Cell classification at one time step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum CellState {
    Contaminated,
    Clear,
    SensorBand,
    Outside,
}

/// Square-cell raster over the polygon's bounding box, with a one-cell
/// margin. A cell is in-domain when its center is not exterior.
#[derive(Debug, Clone)]
pub struct Raster {
    origin: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    in_domain: Vec<bool>,
    in_count: usize,
}

impl Raster {
    /// `r` cells across the longer side of the bounding box.
    pub fn new(polygon: &Polygon, r: usize) -> Raster {
        let (lo, hi) = polygon.bbox();
        let w = hi.x - lo.x;
        let h = hi.y - lo.y;
        let cell = w.max(h) / r as f64;
        let origin = Point::new(lo.x - cell, lo.y - cell);
        let nx = (w / cell).ceil() as usize + 3;
        let ny = (h / cell).ceil() as usize + 3;
        let mut in_domain = vec![false; nx * ny];
        let mut in_count = 0;
        for iy in 0..ny {
            for ix in 0..nx {
                let c = Point::new(
                    origin.x + (ix as f64 + 0.5) * cell,
                    origin.y + (iy as f64 + 0.5) * cell,
                );
                if polygon.classify_default(c) != Region::Exterior {
                    in_domain[iy * nx + ix] = true;
                    in_count += 1;
                }
            }
        }
        Raster { origin, cell, nx, ny, in_domain, in_count }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn cell_size(&self) -> f64 {
        self.cell
    }

    pub fn cell_area(&self) -> f64 {
        self.cell * self.cell
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn in_count(&self) -> usize {
        self.in_count
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.nx + ix
    }

    pub fn is_in_domain(&self, ix: usize, iy: usize) -> bool {
        self.in_domain[self.index(ix, iy)]
    }

    pub fn center(&self, ix: usize, iy: usize) -> Point {
        Point::new(
            self.origin.x + (ix as f64 + 0.5) * self.cell,
            self.origin.y + (iy as f64 + 0.5) * self.cell,
        )
    }

    /// Cell containing `p`, if it lies on the raster.
    pub fn cell_of(&self, p: Point) -> Option<(usize, usize)> {
        let fx = (p.x - self.origin.x) / self.cell;
        let fy = (p.y - self.origin.y) / self.cell;
        if fx < 0.0 || fy < 0.0 {
            return None;
        }
        let (ix, iy) = (fx as usize, fy as usize);
        if ix >= self.nx || iy >= self.ny {
            None
        } else {
            Some((ix, iy))
        }
    }

    /// Cell of `p`, or the nearest in-domain cell within the 3x3
    /// neighborhood; boundary points often sit in cells whose center is
    /// just outside.
    pub fn in_domain_cell_near(&self, p: Point) -> Option<(usize, usize)> {
        let (ix, iy) = self.cell_of(p)?;
        if self.is_in_domain(ix, iy) {
            return Some((ix, iy));
        }
        let mut best: Option<((usize, usize), f64)> = None;
        for dy in -1i64..=1 {
            for dx in -1i64..=1 {
                let jx = ix as i64 + dx;
                let jy = iy as i64 + dy;
                if jx < 0 || jy < 0 || jx >= self.nx as i64 || jy >= self.ny as i64 {
                    continue;
                }
                let (jx, jy) = (jx as usize, jy as usize);
                if !self.is_in_domain(jx, jy) {
                    continue;
                }
                let d = self.center(jx, jy).dist(p);
                if best.is_none_or(|(_, bd)| d < bd) {
                    best = Some(((jx, jy), d));
                }
            }
        }
        best.map(|(c, _)| c)
    }

    /// Mark every cell whose center is within `radius` of the polyline.
    pub fn mark_polyline(&self, waypoints: &[Point], radius: f64, out: &mut [bool]) {
        if waypoints.len() == 1 {
            self.mark_segment(waypoints[0], waypoints[0], radius, out);
        }
        for w in waypoints.windows(2) {
            self.mark_segment(w[0], w[1], radius, out);
        }
    }

    fn mark_segment(&self, a: Point, b: Point, radius: f64, out: &mut [bool]) {
        let pad = radius + self.cell;
        let lo_x = a.x.min(b.x) - pad;
        let hi_x = a.x.max(b.x) + pad;
        let lo_y = a.y.min(b.y) - pad;
        let hi_y = a.y.max(b.y) + pad;
        let ix0 = (((lo_x - self.origin.x) / self.cell).floor().max(0.0)) as usize;
        let iy0 = (((lo_y - self.origin.y) / self.cell).floor().max(0.0)) as usize;
        let ix1 = ((((hi_x - self.origin.x) / self.cell).ceil()) as usize).min(self.nx - 1);
        let iy1 = ((((hi_y - self.origin.y) / self.cell).ceil()) as usize).min(self.ny - 1);
        let r_sq = radius * radius;
        for iy in iy0..=iy1 {
            for ix in ix0..=ix1 {
                if !out[self.index(ix, iy)]
                    && point_segment_dist_sq(self.center(ix, iy), a, b) <= r_sq
                {
                    out[self.index(ix, iy)] = true;
                }
            }
        }
    }

    /// Flood fill over in-domain cells, 4-connected, starting from `seeds`,
    /// never entering `blocked` cells. Returns the reached mask.
    pub fn flood(&self, seeds: &[usize], blocked: &[bool]) -> Vec<bool> {
        let mut reached = vec![false; self.nx * self.ny];
        let mut queue = std::collections::VecDeque::new();
        for &s in seeds {
            if !reached[s] && self.in_domain[s] && !blocked[s] {
                reached[s] = true;
                queue.push_back(s);
            }
        }
        while let Some(id) = queue.pop_front() {
            let ix = id % self.nx;
            let iy = id / self.nx;
            let push = |jx: usize, jy: usize, queue: &mut std::collections::VecDeque<usize>, reached: &mut Vec<bool>| {
                let j = self.index(jx, jy);
                if !reached[j] && self.in_domain[j] && !blocked[j] {
                    reached[j] = true;
                    queue.push_back(j);
                }
            };
            if ix > 0 {
                push(ix - 1, iy, &mut queue, &mut reached);
            }
            if ix + 1 < self.nx {
                push(ix + 1, iy, &mut queue, &mut reached);
            }
            if iy > 0 {
                push(ix, iy - 1, &mut queue, &mut reached);
            }
            if iy + 1 < self.ny {
                push(ix, iy + 1, &mut queue, &mut reached);
            }
        }
        reached
    }

    /// True when the cells of `mask` form at most one 8-connected component.
    pub fn eight_connected(&self, mask: &[bool]) -> bool {
        let total = self.nx * self.ny;
        let mut seen = vec![false; total];
        let Some(first) = (0..total).find(|&id| mask[id]) else { return true };
        let mut queue = std::collections::VecDeque::new();
        seen[first] = true;
        queue.push_back(first);
        while let Some(id) = queue.pop_front() {
            let ix = (id % self.nx) as i64;
            let iy = (id / self.nx) as i64;
            for dy in -1..=1 {
                for dx in -1..=1 {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    let (jx, jy) = (ix + dx, iy + dy);
                    if jx < 0 || jy < 0 || jx >= self.nx as i64 || jy >= self.ny as i64 {
                        continue;
                    }
                    let j = self.index(jx as usize, jy as usize);
                    if mask[j] && !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        (0..total).all(|id| !mask[id] || seen[id])
    }

    /// Number of 4-connected components of the in-domain cells. More than
    /// one means some passage of the polygon interior is thinner than a
    /// cell (sharp wedge tips do this at any resolution); the simulation
    /// treats such pockets as separate rooms and reports the count.
    pub fn in_domain_components(&self) -> usize {
        let total = self.nx * self.ny;
        let blocked = vec![false; total];
        let mut seen = vec![false; total];
        let mut components = 0;
        for id in 0..total {
            if self.in_domain[id] && !seen[id] {
                components += 1;
                let reached = self.flood(&[id], &blocked);
                for (s, r) in seen.iter_mut().zip(&reached) {
                    *s |= r;
                }
            }
        }
        components
    }
}

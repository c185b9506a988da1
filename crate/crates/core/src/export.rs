//! SVG frame export and CSV time series for simulation runs.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::geom::Polygon;
#[cfg(test)]
use crate::geom::Point;
use crate::sim::{CellState, ContamField, SensorFamily};

const SVG_WIDTH: f64 = 640.0;

/// One SVG frame: domain outline, contaminated cells shaded, the sensor
/// polyline on top.
pub fn frame_svg(
    polygon: &Polygon,
    field: &ContamField,
    family: &SensorFamily,
    step: usize,
) -> String {
    let (lo, hi) = polygon.bbox();
    let span_x = hi.x - lo.x;
    let span_y = hi.y - lo.y;
    let margin = 0.03 * span_x.max(span_y);
    let scale = SVG_WIDTH / (span_x + 2.0 * margin);
    let height = (span_y + 2.0 * margin) * scale;
    let tx = |x: f64| (x - lo.x + margin) * scale;
    let ty = |y: f64| height - (y - lo.y + margin) * scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.1}" height="{:.1}" viewBox="0 0 {:.1} {:.1}">"#,
        SVG_WIDTH, height, SVG_WIDTH, height
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Contaminated cells, merged into horizontal runs per row.
    let raster = field.raster();
    let cell = raster.cell_size();
    let states = field.state_at(step);
    let _ = writeln!(out, r##"<g fill="#cccccc">"##);
    for iy in 0..raster.ny() {
        let mut run_start: Option<usize> = None;
        for ix in 0..=raster.nx() {
            let contaminated = ix < raster.nx()
                && states[raster.index(ix, iy)] == CellState::Contaminated;
            match (contaminated, run_start) {
                (true, None) => run_start = Some(ix),
                (false, Some(start)) => {
                    let o = raster.origin();
                    let x0 = o.x + start as f64 * cell;
                    let y0 = o.y + iy as f64 * cell;
                    let _ = writeln!(
                        out,
                        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
                        tx(x0),
                        ty(y0 + cell),
                        (ix - start) as f64 * cell * scale,
                        cell * scale
                    );
                    run_start = None;
                }
                _ => {}
            }
        }
    }
    let _ = writeln!(out, "</g>");

    // Domain outline.
    let mut pts = String::new();
    for v in polygon.vertices() {
        let _ = write!(pts, "{:.2},{:.2} ", tx(v.x), ty(v.y));
    }
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        pts.trim_end()
    );

    // Sensor polyline.
    let frame = &family.frames()[step];
    let mut sensor = String::new();
    for w in &frame.waypoints {
        let _ = write!(sensor, "{:.2},{:.2} ", tx(w.x), ty(w.y));
    }
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#d62728" stroke-width="2.5" stroke-linecap="round"/>"##,
        sensor.trim_end()
    );
    for endpoint in [frame.waypoints.first(), frame.waypoints.last()].into_iter().flatten() {
        let _ = writeln!(
            out,
            r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#d62728"/>"##,
            tx(endpoint.x),
            ty(endpoint.y)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="6" y="14" font-family="monospace" font-size="12">t = {:.4}</text>"#,
        field.times()[step]
    );
    let _ = writeln!(out, "</svg>");
    out
}

/// Time series of the simulation: one row per substep.
pub fn simulation_csv(field: &ContamField, family: &SensorFamily) -> String {
    let mut out = String::from("step,time,u_area,sensor_length,cleared\n");
    for step in 0..field.steps() {
        let cleared = field.contaminated_count(step) == 0;
        let _ = writeln!(
            out,
            "{},{:.9},{:.9},{:.9},{}",
            step,
            field.times()[step],
            field.u_area()[step],
            family.frames()[step].length,
            cleared
        );
    }
    out
}

/// Write `series.csv` and up to `max_frames` SVG frames (evenly strided,
/// always including the first and last step) into `dir`. Returns the paths
/// written.
pub fn write_simulation_artifacts(
    dir: &Path,
    polygon: &Polygon,
    field: &ContamField,
    family: &SensorFamily,
    max_frames: usize,
) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();

    let csv_path = dir.join("series.csv");
    fs::write(&csv_path, simulation_csv(field, family))?;
    written.push(csv_path);

    let steps = field.steps();
    let stride = steps.div_ceil(max_frames.max(1)).max(1);
    let mut step = 0;
    while step < steps {
        let path = dir.join(format!("frame_{step:05}.svg"));
        fs::write(&path, frame_svg(polygon, field, family, step))?;
        written.push(path);
        step += stride;
    }
    if !(steps - 1).is_multiple_of(stride) {
        let path = dir.join(format!("frame_{:05}.svg", steps - 1));
        fs::write(&path, frame_svg(polygon, field, family, steps - 1))?;
        written.push(path);
    }
    Ok(written)
}

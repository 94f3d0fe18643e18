//! SVG figures of 1-disk drawings.
//!
//! X is pinned, equally spaced, to a circle in the order its vertices appear
//! on the 1-disk face; every other planarization node sits at the average of
//! its neighbours (Gauss-Seidel sweeps from the disk centre). Coordinates are
//! presentation only.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::drawing::Drawing;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 200.0;
const SWEEPS: usize = 2000;

#[derive(Debug, Error)]
pub enum SvgError {
    #[error("drawing has no face incident to every X vertex")]
    NoOneDiskFace,
    #[error("cannot write {path}: {source}")]
    Write { path: String, source: std::io::Error },
}

/// Positions for every planarization node.
pub fn layout(d: &Drawing) -> Result<Vec<(f64, f64)>, SvgError> {
    let face = d.find_one_disk_face().ok_or(SvgError::NoOneDiskFace)?;
    let x_count = d.graph().x_count();
    let mut order = Vec::with_capacity(x_count);
    for u in face.nodes() {
        if u < x_count && !order.contains(&u) {
            order.push(u);
        }
    }
    let centre = SIZE / 2.0;
    let mut pos = vec![(centre, centre); d.node_count()];
    for (i, &u) in order.iter().enumerate() {
        let angle = -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * i as f64 / x_count as f64;
        pos[u] = (centre + RADIUS * angle.cos(), centre + RADIUS * angle.sin());
    }
    let free: Vec<_> = (x_count..d.node_count()).collect();
    for (k, &u) in free.iter().enumerate() {
        // distinct starting points keep symmetric nodes from sticking together
        pos[u].0 += 1e-3 * k as f64;
    }
    for _ in 0..SWEEPS {
        for &u in &free {
            let around = &d.rotation()[u];
            if around.is_empty() {
                continue;
            }
            let (sx, sy) = around
                .iter()
                .fold((0.0, 0.0), |(sx, sy), &w| (sx + pos[w].0, sy + pos[w].1));
            let k = around.len() as f64;
            pos[u] = (sx / k, sy / k);
        }
    }
    Ok(pos)
}

pub fn export_svg(d: &Drawing) -> Result<String, SvgError> {
    let pos = layout(d)?;
    let g = d.graph();
    let mut out = String::new();
    let c = SIZE / 2.0;
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <circle class="disk" cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black" stroke-dasharray="6 4"/>"#
    )
    .unwrap();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let mut points = vec![pos[a.0]];
        if let Some(crossing) = d.crossing_of(crate::graph::EdgeId(i)) {
            points.push(pos[crossing.dummy]);
        }
        points.push(pos[b.0]);
        let pts = points
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(
            out,
            r#"  <polyline class="edge" points="{pts}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#
        )
        .unwrap();
    }
    for v in g.x_vertices() {
        let (x, y) = pos[v.0];
        writeln!(
            out,
            r#"  <circle class="x-vertex" cx="{x:.2}" cy="{y:.2}" r="6" fill="black"/>"#
        )
        .unwrap();
    }
    for v in g.y_vertices() {
        let (x, y) = pos[v.0];
        writeln!(
            out,
            r#"  <circle class="y-vertex" cx="{x:.2}" cy="{y:.2}" r="5" fill="royalblue"/>"#
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}

pub fn write_svg(d: &Drawing, path: impl AsRef<Path>) -> Result<(), SvgError> {
    let path = path.as_ref();
    fs::write(path, export_svg(d)?).map_err(|source| SvgError::Write {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_extremal, double};

    #[test]
    fn k33_figure_element_counts() {
        let (_, d) = construct_extremal(3, 3).unwrap();
        let svg = export_svg(&d).unwrap();
        assert_eq!(svg.matches(r#"class="x-vertex""#).count(), 3);
        assert_eq!(svg.matches(r#"class="y-vertex""#).count(), 3);
        assert_eq!(svg.matches(r#"class="edge""#).count(), 9);
    }

    #[test]
    fn x_lies_on_the_circle_and_the_rest_inside() {
        let (_, d) = construct_extremal(4, 6).unwrap();
        let pos = layout(&d).unwrap();
        let c = SIZE / 2.0;
        let r = |(x, y): (f64, f64)| ((x - c).powi(2) + (y - c).powi(2)).sqrt();
        for u in 0..4 {
            assert!((r(pos[u]) - RADIUS).abs() < 1e-9);
        }
        for u in 4..d.node_count() {
            assert!(r(pos[u]) < RADIUS);
        }
    }

    #[test]
    fn no_one_disk_face() {
        let (_, d) = construct_extremal(4, 6).unwrap();
        let doubled = double(&d).unwrap().drawing_star;
        assert!(!doubled.is_one_disk());
        assert!(matches!(export_svg(&doubled), Err(SvgError::NoOneDiskFace)));
    }
}

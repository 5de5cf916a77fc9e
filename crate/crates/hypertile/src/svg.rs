//! SVG pictures of tilings in the plane.

use std::cmp::Ordering;
use std::fmt::Write as _;

use hypertile_core::tiling::Tiling;
use hypertile_core::zonotope::{FacetDescription, Location};
use hypertile_core::BigInt;

use crate::CliError;

/// Pixels per lattice unit.
pub const SCALE: i64 = 40;
/// Blank border around the picture, in pixels.
pub const MARGIN: i64 = 20;

/// Counts of drawn elements, for reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SvgStats {
    pub polygons: usize,
    pub vertex_marks: usize,
}

fn coord(x: &BigInt) -> Result<i64, CliError> {
    i64::try_from(x).map_err(|_| CliError::Input("coordinate too large to draw".into()))
}

/// Counterclockwise order around the origin, starting from the positive
/// x-axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Draws the maximal tiles of a tiling of a planar zonotope, with a mark on
/// every vertex of the tiling (class `interior` or `boundary`).
pub fn render_svg(t: &Tiling) -> Result<(String, SvgStats), CliError> {
    let d = t.config().rank();
    if d != 2 {
        return Err(CliError::UnsupportedRank(d));
    }
    let mut polygons = Vec::new();
    for m in t.maximal_tiles() {
        let z = t.tile(&m);
        let c = z.center();
        let (cx, cy) = (coord(&c[0])?, coord(&c[1])?);
        let mut pts = z.vertices().iter().map(|v| Ok((coord(&v[0])?, coord(&v[1])?))).collect::<Result<Vec<_>, CliError>>()?;
        pts.sort_by(|a, b| angle_cmp((a.0 - cx, a.1 - cy), (b.0 - cx, b.1 - cy)));
        polygons.push(pts);
    }
    let base = t.base();
    let facets = base.is_full_dimensional().then(|| FacetDescription::new(base.center(), &base.generators()));
    let mut marks = Vec::new();
    for v in t.vertices() {
        let interior = facets.as_ref().is_some_and(|f| f.locate_int(&v) == Location::Interior);
        marks.push(((coord(&v[0])?, coord(&v[1])?), interior));
    }
    let xs = marks.iter().map(|((x, _), _)| *x);
    let ys = marks.iter().map(|((_, y), _)| *y);
    let (x0, x1) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
    let (y0, y1) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
    let px = |x: i64| (x - x0) * SCALE + MARGIN;
    let py = |y: i64| (y1 - y) * SCALE + MARGIN;
    let width = (x1 - x0) * SCALE + 2 * MARGIN;
    let height = (y1 - y0) * SCALE + 2 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        "<style>polygon{{fill:#e8eef7;stroke:#1f3b63;stroke-width:2}}circle.interior{{fill:#c0392b}}circle.boundary{{fill:#1f3b63}}</style>"
    );
    for pts in &polygons {
        let list: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        let _ = writeln!(out, r#"<polygon points="{}"/>"#, list.join(" "));
    }
    for &((x, y), interior) in &marks {
        let class = if interior { "interior" } else { "boundary" };
        let _ = writeln!(out, r#"<circle class="{class}" cx="{}" cy="{}" r="4"/>"#, px(x), py(y));
    }
    out.push_str("</svg>\n");
    Ok((out, SvgStats { polygons: polygons.len(), vertex_marks: marks.len() }))
}

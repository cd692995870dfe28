//! Wall-circle sampling and a small self-contained SVG rendering.
//!
//! Sampling is exact: β runs over the fixed-denominator grid ℤ/D and a grid
//! point is kept iff it lies inside the circle, decided in rational
//! arithmetic. Only the reported α (and the SVG geometry) drop to floating
//! point, since they exist for presentation alone.

use num::ToPrimitive;
use serde::Serialize;
use tiltwall::threefold::FanoContext;
use tiltwall::{wall_locus, Rational, TruncatedClass, WallCandidate, WallLocus};

#[derive(Clone, Debug, Serialize)]
pub struct SamplePoint {
    pub beta: Rational,
    pub alpha: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SampledCircle {
    /// 1-based position in the candidate list.
    pub index: usize,
    pub pair: (TruncatedClass, TruncatedClass),
    pub alpha_sq_wall: Rational,
    pub center_beta: Rational,
    pub radius_sq: Rational,
    pub points: Vec<SamplePoint>,
}

fn to_f64(x: &Rational) -> f64 {
    let numer = x.numer().to_f64().unwrap_or(f64::NAN);
    let denom = x.denom().to_f64().unwrap_or(f64::NAN);
    numer / denom
}

/// Integer k-range of grid points k/D inside the circle: |k − D·c| ≤ D·√ρ.
/// A float estimate seeds the endpoints; the exact rational predicate then
/// nudges them, so the returned range is correct whenever the estimate lands
/// within a few grid cells of the truth (always, for the magnitudes the wall
/// searches produce).
fn grid_range(center: &Rational, radius_sq: &Rational, den: i64) -> (i64, i64) {
    let d = Rational::from(den);
    let scaled_center = center * &d;
    let scaled_radius_sq = radius_sq * &d.square();
    let inside = |k: i64| (&Rational::from(k) - &scaled_center).square() <= scaled_radius_sq;
    let center_f = to_f64(&scaled_center);
    let spread_f = to_f64(&scaled_radius_sq).max(0.0).sqrt();
    let mut lo = (center_f - spread_f).floor() as i64 - 2;
    let mut hi = (center_f + spread_f).ceil() as i64 + 2;
    while lo <= hi && !inside(lo) {
        lo += 1;
    }
    while hi >= lo && !inside(hi) {
        hi -= 1;
    }
    (lo, hi)
}

fn sample_arc(center: &Rational, radius_sq: &Rational, den: i64) -> Vec<SamplePoint> {
    let (lo, hi) = grid_range(center, radius_sq, den);
    (lo..=hi)
        .map(|k| {
            let beta = Rational::new(k, den);
            let alpha_sq = radius_sq - &(&beta - center).square();
            SamplePoint {
                beta,
                alpha: to_f64(&alpha_sq).max(0.0).sqrt(),
            }
        })
        .collect()
}

/// Classify every candidate's locus against the target and sample the ones
/// that are circles (a wall of a fixed target always is; anything else is
/// skipped rather than plotted).
pub fn sample_circles(
    candidates: &[WallCandidate],
    target: &TruncatedClass,
    ctx: &FanoContext,
    den: i64,
) -> Vec<SampledCircle> {
    let m = target.to_chern();
    candidates
        .iter()
        .enumerate()
        .filter_map(|(i, cand)| {
            let a = cand.pair.0.to_chern();
            match wall_locus(&a, &m, ctx) {
                WallLocus::Circle {
                    center_beta,
                    radius_sq,
                } => Some(SampledCircle {
                    index: i + 1,
                    pair: cand.pair,
                    alpha_sq_wall: cand.alpha_sq_wall.clone(),
                    points: sample_arc(&center_beta, &radius_sq, den),
                    center_beta,
                    radius_sq,
                }),
                _ => None,
            }
        })
        .collect()
}

const SVG_WIDTH: f64 = 800.0;
const MARGIN: f64 = 48.0;
const PALETTE: [&str; 6] = [
    "#2a6f97", "#bc4749", "#6a994e", "#7b2cbf", "#e07b00", "#386664",
];

/// Upper half-plane picture: the β axis, one semicircular arc per wall, the
/// exact grid samples as dots, and a dashed vertical at the query β.
pub fn render_svg(circles: &[SampledCircle], query_beta: &Rational) -> String {
    let query = to_f64(query_beta);
    let mut min_b = query;
    let mut max_b = query;
    let mut max_r = 0.0f64;
    for c in circles {
        let center = to_f64(&c.center_beta);
        let radius = to_f64(&c.radius_sq).max(0.0).sqrt();
        min_b = min_b.min(center - radius);
        max_b = max_b.max(center + radius);
        max_r = max_r.max(radius);
    }
    if max_b - min_b < 1e-9 {
        min_b -= 1.0;
        max_b += 1.0;
    }
    let scale = (SVG_WIDTH - 2.0 * MARGIN) / (max_b - min_b);
    let height = 2.0 * MARGIN + scale * max_r;
    let axis_y = height - MARGIN;
    let x = |beta: f64| MARGIN + (beta - min_b) * scale;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_WIDTH:.0}\" \
         height=\"{height:.0}\" viewBox=\"0 0 {SVG_WIDTH:.0} {height:.0}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{SVG_WIDTH:.0}\" height=\"{height:.0}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{:.2}\" y1=\"{axis_y:.2}\" x2=\"{:.2}\" y2=\"{axis_y:.2}\" \
         stroke=\"black\" stroke-width=\"1\"/>\n",
        MARGIN / 2.0,
        SVG_WIDTH - MARGIN / 2.0
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" \
         fill=\"black\">beta</text>\n",
        SVG_WIDTH - MARGIN / 2.0 + 4.0,
        axis_y + 4.0
    ));

    for circle in circles {
        let color = PALETTE[(circle.index - 1) % PALETTE.len()];
        let center = to_f64(&circle.center_beta);
        let radius = to_f64(&circle.radius_sq).max(0.0).sqrt();
        let (x0, x1) = (x(center - radius), x(center + radius));
        let arc_r = radius * scale;
        svg.push_str(&format!(
            "  <path d=\"M {x0:.2} {axis_y:.2} A {arc_r:.2} {arc_r:.2} 0 0 1 {x1:.2} \
             {axis_y:.2}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\">\n    \
             <title>pair {}: {} + {}</title>\n  </path>\n",
            circle.index, circle.pair.0, circle.pair.1
        ));
        for point in &circle.points {
            let px = x(to_f64(&point.beta));
            let py = axis_y - point.alpha * scale;
            svg.push_str(&format!(
                "  <circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"2\" fill=\"{color}\"/>\n"
            ));
        }
    }

    let qx = x(query);
    svg.push_str(&format!(
        "  <line x1=\"{qx:.2}\" y1=\"{MARGIN:.2}\" x2=\"{qx:.2}\" y2=\"{axis_y:.2}\" \
         stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n"
    ));
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" \
         fill=\"#555555\">beta = {query_beta}</text>\n",
        qx + 4.0,
        MARGIN + 10.0
    ));
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use tiltwall::threefold::context;

    #[test]
    fn grid_samples_are_exactly_the_points_inside_the_circle() {
        // center -5/4, radius² 9/16: β ∈ [-2, -1/2], so k/8 for k in [-16, -4].
        let center = Rational::new(-5, 4);
        let radius_sq = Rational::new(9, 16);
        let points = sample_arc(&center, &radius_sq, 8);
        assert_eq!(points.first().unwrap().beta, Rational::new(-2, 1));
        assert_eq!(points.last().unwrap().beta, Rational::new(-1, 2));
        assert_eq!(points.len(), 13);
        // endpoints sit on the circle itself
        assert_eq!(points[0].alpha, 0.0);
    }

    #[test]
    fn degenerate_radius_keeps_only_the_center() {
        let points = sample_arc(&Rational::new(-1, 2), &Rational::new(0, 1), 4);
        assert_eq!(points.len(), 1);
        assert_eq!(points[0].beta, Rational::new(-1, 2));
    }

    #[test]
    fn svg_contains_an_arc_per_circle_and_the_query_line() {
        let ctx = context(7, None).unwrap();
        let target = TruncatedClass::new(5, -2, 0);
        let cand = WallCandidate {
            pair: (TruncatedClass::new(1, 0, -6), TruncatedClass::new(4, -2, 6)),
            alpha_sq_wall: Rational::new(7, 18),
        };
        let circles = sample_circles(&[cand], &target, &ctx, 8);
        assert_eq!(circles.len(), 1);
        let svg = render_svg(&circles, &Rational::new(-5, 6));
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<path").count(), 1);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("beta = -5/6"));
    }
}

//! Euler tours as label lists, JSON, Graphviz DOT and SVG drawings.

use std::fmt::Write;

use oddcycles_core::tour::{tour_stats, TourStats};
use oddcycles_core::{euler_tour, sbb_system, EulerTour, OddModulus};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One colour per block of the tour, cycling.
pub const PALETTE: [&str; 7] = [
    "blue",
    "green",
    "magenta",
    "black",
    "yellow",
    "steelblue",
    "red",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TourDoc {
    pub b: u64,
    /// 1-based index into the Schick system.
    pub cycle: usize,
    pub steps: Vec<u64>,
    /// `L`
    pub length: usize,
    /// `N`, distinct vertices visited.
    pub nodes: usize,
    /// `m`
    pub blocks: u64,
    pub regular: bool,
    pub labels: Vec<u64>,
}

/// The tour of the `index`-th Schick cycle (1-based).
pub fn tour_of(b: OddModulus, index: usize) -> Result<EulerTour> {
    let sys = sbb_system(b);
    if index == 0 || index > sys.count {
        return Err(Error::Usage(format!(
            "cycle index {index} out of range 1..={} for b = {b}",
            sys.count
        )));
    }
    Ok(euler_tour(b.get(), &sys.cycles[index - 1]))
}

pub fn tour_doc(tour: &EulerTour, index: usize) -> TourDoc {
    let stats = tour_stats(tour);
    TourDoc {
        b: tour.b,
        cycle: index,
        steps: tour.steps.clone(),
        length: tour.len(),
        nodes: stats.distinct_nodes,
        blocks: tour.blocks,
        regular: stats.regular,
        labels: tour.labels.clone(),
    }
}

pub fn tour_text(doc: &TourDoc) -> String {
    let labels: Vec<String> = doc.labels.iter().map(u64::to_string).collect();
    format!(
        "L={} N={} m={}\n{}\n",
        doc.length,
        doc.nodes,
        doc.blocks,
        labels.join(" ")
    )
}

fn block_colour(tour: &EulerTour, arc: usize) -> &'static str {
    PALETTE[(arc / tour.steps.len()) % PALETTE.len()]
}

/// Unit-circle position of vertex `k` of the `2b`-gon, vertex 0 on top,
/// counter-clockwise.
fn vertex_position(k: u64, b: u64) -> (f64, f64) {
    let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * k as f64 / b as f64;
    (angle.cos(), angle.sin())
}

pub fn tour_dot(tour: &EulerTour, index: usize) -> String {
    let stats = tour_stats(tour);
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"ET({},{})\" {{", tour.b, index);
    out.push_str(
        "  layout=neato;\n  node [shape=circle, fontsize=9, width=0.3, fixedsize=true];\n",
    );
    for k in 0..tour.vertices() {
        let (x, y) = vertex_position(k, tour.b);
        let style = if stats.visits.contains_key(&k) {
            ""
        } else {
            ", style=dashed, color=gray, fontcolor=gray"
        };
        let _ = writeln!(
            out,
            "  v{k} [label=\"{k}\", pos=\"{:.4},{:.4}!\"{style}];",
            3.0 * x,
            3.0 * y
        );
    }
    for (t, (u, v)) in tour.arcs().enumerate() {
        let _ = writeln!(out, "  v{u} -> v{v} [color=\"{}\"];", block_colour(tour, t));
    }
    out.push_str("}\n");
    out
}

pub fn tour_svg(tour: &EulerTour, index: usize) -> String {
    const R: f64 = 100.0;
    let stats: TourStats = tour_stats(tour);
    let point = |k: u64| {
        let (x, y) = vertex_position(k, tour.b);
        (R * x, -R * y)
    };
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"-130 -130 260 260\" width=\"520\" height=\"520\">\n",
    );
    let _ = writeln!(out, "  <title>ET({},{})</title>", tour.b, index);
    out.push_str(
        "  <defs>\n    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" \
         markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">\n      \
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"context-stroke\"/>\n    </marker>\n  </defs>\n",
    );
    let outline: Vec<String> = (0..tour.vertices())
        .map(|k| {
            let (x, y) = point(k);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"lightgray\" stroke-width=\"0.5\"/>",
        outline.join(" ")
    );
    out.push_str("  <g stroke-width=\"0.6\" marker-end=\"url(#arrow)\">\n");
    for (t, (u, v)) in tour.arcs().enumerate() {
        let (x1, y1) = point(u);
        let (x2, y2) = point(v);
        let _ = writeln!(
            out,
            "    <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{}\"/>",
            block_colour(tour, t)
        );
    }
    out.push_str("  </g>\n");
    for k in 0..tour.vertices() {
        let (x, y) = point(k);
        let visited = stats.visits.contains_key(&k);
        let (fill, stroke) = if visited {
            ("white", "black")
        } else {
            ("none", "gray")
        };
        let dash = if visited {
            ""
        } else {
            " stroke-dasharray=\"1,1\""
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"2\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"0.4\"{dash}/>"
        );
        let (lx, ly) = (1.12 * x, 1.12 * y);
        let _ = writeln!(
            out,
            "  <text x=\"{lx:.3}\" y=\"{ly:.3}\" font-size=\"5\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"{}\">{k}</text>",
            if visited { "black" } else { "gray" }
        );
    }
    out.push_str("</svg>\n");
    out
}

//! Minimal SVG emission for point sets on the triangular lattice: unit
//! distance embedding, one circle per point, optional edges for both
//! distance classes, optional index labels.

use isoperimetry::trilattice::{embed_to_plane, tri_norm_sq, TriPoint};

pub struct RenderOptions {
    /// Pixels per lattice unit.
    pub scale: f64,
    pub draw_edges: bool,
    /// Label each point with the matching entry of this list.
    pub labels: Option<Vec<u64>>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            scale: 40.0,
            draw_edges: true,
            labels: None,
        }
    }
}

pub fn render_svg(points: &[TriPoint], opts: &RenderOptions) -> String {
    let coords: Vec<(f64, f64)> = points
        .iter()
        .map(|&p| {
            let e = embed_to_plane(p);
            let (x, y) = e.to_f64();
            (x * opts.scale, -y * opts.scale) // SVG y axis points down
        })
        .collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    if coords.is_empty() {
        (min_x, min_y, max_x, max_y) = (0.0, 0.0, 0.0, 0.0);
    }
    let margin = opts.scale;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.1} {:.1} {:.1} {:.1}\">\n",
        min_x - margin,
        min_y - margin,
        max_x - min_x + 2.0 * margin,
        max_y - min_y + 2.0 * margin
    ));
    if opts.draw_edges {
        for (i, &p) in points.iter().enumerate() {
            for (j, &q) in points.iter().enumerate().skip(i + 1) {
                let d = tri_norm_sq(p.a - q.a, p.b - q.b);
                let style = match d {
                    1 => "stroke=\"#333\" stroke-width=\"1.6\"",
                    3 => "stroke=\"#999\" stroke-width=\"0.8\"",
                    _ => continue,
                };
                svg.push_str(&format!(
                    "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {} />\n",
                    coords[i].0, coords[i].1, coords[j].0, coords[j].1, style
                ));
            }
        }
    }
    for (i, &(x, y)) in coords.iter().enumerate() {
        svg.push_str(&format!(
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{:.2}\" fill=\"#1f4e79\" />\n",
            opts.scale * 0.12
        ));
        if let Some(labels) = &opts.labels {
            if let Some(label) = labels.get(i) {
                svg.push_str(&format!(
                    "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"{:.1}\" fill=\"#a33\">{label}</text>\n",
                    x + opts.scale * 0.15,
                    y - opts.scale * 0.15,
                    opts.scale * 0.3
                ));
            }
        }
    }
    svg.push_str("</svg>\n");
    svg
}

//! Minimal SVG line plots with a fixed 800×500 viewport.

use std::fmt::Write as _;
use std::path::PathBuf;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;
const TICKS: usize = 5;

pub const DEFAULT_COLORS: [&str; 6] = [
    "#000000", "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b",
];
const REFERENCE_COLOR: &str = "#7f7f7f";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    /// Percent series over years with a dotted interval band; the y axis is
    /// in percent.
    SeriesBand,
    /// Confidence curves over `p`; the y axis is `cc ∈ [0, 1]`.
    ConfidenceCurves,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineStyle {
    Solid,
    Dotted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSeries {
    pub name: String,
    pub points: Vec<(f64, f64)>,
    pub style: LineStyle,
    /// Index into the color palette.
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Annotation {
    pub x: f64,
    pub y: f64,
    pub text: String,
    pub color: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub kind: PlotKind,
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub series: Vec<PlotSeries>,
    /// Horizontal reference line as a probability in (0, 1). Drawn in
    /// percent on series plots.
    pub level_line: Option<f64>,
    pub annotations: Vec<Annotation>,
    pub output_path: Option<PathBuf>,
}

impl PlotSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.series.is_empty() || self.series.iter().all(|s| s.points.is_empty()) {
            return Err("plot has no data".into());
        }
        if let Some(level) = self.level_line {
            if !(level > 0.0 && level < 1.0) {
                return Err(format!("reference line {level} outside (0, 1)"));
            }
        }
        if self
            .series
            .iter()
            .flat_map(|s| &s.points)
            .any(|(x, y)| !x.is_finite() || !y.is_finite())
        {
            return Err("plot data contains non-finite values".into());
        }
        Ok(())
    }

    fn level_in_plot_units(&self) -> Option<f64> {
        self.level_line.map(|l| match self.kind {
            PlotKind::SeriesBand => 100.0 * l,
            PlotKind::ConfidenceCurves => l,
        })
    }

    fn x_range(&self) -> (f64, f64) {
        let (lo, hi) = bounds(
            self.series
                .iter()
                .flat_map(|s| s.points.iter().map(|p| p.0)),
        );
        if hi > lo {
            (lo, hi)
        } else {
            (lo - 1.0, hi + 1.0)
        }
    }

    fn y_range(&self) -> (f64, f64) {
        match self.kind {
            PlotKind::ConfidenceCurves => (0.0, 1.0),
            PlotKind::SeriesBand => {
                let ys = self
                    .series
                    .iter()
                    .flat_map(|s| s.points.iter().map(|p| p.1));
                let (_, hi) = bounds(ys.chain(self.level_in_plot_units()));
                (0.0, nice_ceiling(hi.max(1.0)))
            }
        }
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

/// Smallest of 1, 2, 5 × 10^k at or above `x`.
fn nice_ceiling(x: f64) -> f64 {
    let mag = 10f64.powf(x.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|v| *v >= x)
        .unwrap_or(10.0 * mag)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick label with just enough decimals for the tick spacing.
fn tick_label(value: f64, step: f64) -> String {
    let decimals = if step >= 1.0 {
        0
    } else {
        (-step.log10()).ceil() as usize
    };
    format!("{value:.decimals$}")
}

struct Frame {
    x: (f64, f64),
    y: (f64, f64),
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        MARGIN_LEFT + (x - self.x.0) / (self.x.1 - self.x.0) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT
            - MARGIN_BOTTOM
            - (y - self.y.0) / (self.y.1 - self.y.0) * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

/// Renders the plot. `colors` overrides the default palette entry by entry.
pub fn render_svg(spec: &PlotSpec, colors: &[String]) -> Result<String, String> {
    spec.validate()?;
    if let Some(bad) = colors.iter().find(|c| !is_color(c)) {
        return Err(format!(
            "{bad:?} is not a color; use #rgb, #rrggbb or a named color"
        ));
    }
    let color = |i: usize| -> String {
        let i = i % DEFAULT_COLORS.len();
        colors
            .get(i)
            .cloned()
            .unwrap_or_else(|| DEFAULT_COLORS[i].to_string())
    };
    let frame = Frame {
        x: spec.x_range(),
        y: spec.y_range(),
    };
    let (left, right) = (MARGIN_LEFT, WIDTH - MARGIN_RIGHT);
    let (top, bottom) = (MARGIN_TOP, HEIGHT - MARGIN_BOTTOM);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, "<!-- podium {} -->", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="28" text-anchor="middle" font-size="16">{}</text>"#,
        WIDTH / 2.0,
        escape(&spec.title)
    );

    // Axes and ticks.
    let _ = writeln!(
        svg,
        r#"<path d="M{left:.1},{top:.1} L{left:.1},{bottom:.1} L{right:.1},{bottom:.1}" fill="none" stroke="black"/>"#
    );
    for i in 0..=TICKS {
        let step = (frame.x.1 - frame.x.0) / TICKS as f64;
        let v = frame.x.0 + step * i as f64;
        let x = frame.px(v);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.1}" y1="{bottom:.1}" x2="{x:.1}" y2="{:.1}" stroke="black"/><text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            bottom + 5.0,
            bottom + 20.0,
            tick_label(v, step)
        );
        let step = (frame.y.1 - frame.y.0) / TICKS as f64;
        let v = frame.y.0 + step * i as f64;
        let y = frame.py(v);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{y:.1}" x2="{left:.1}" y2="{y:.1}" stroke="black"/><text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            left - 5.0,
            left - 8.0,
            y + 4.0,
            tick_label(v, step)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
        (left + right) / 2.0,
        HEIGHT - 15.0,
        escape(&spec.x_label)
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{:.1}" text-anchor="middle" transform="rotate(-90 18 {:.1})">{}</text>"#,
        (top + bottom) / 2.0,
        (top + bottom) / 2.0,
        escape(&spec.y_label)
    );

    if let Some(level) = spec.level_in_plot_units() {
        let y = frame.py(level);
        let _ = writeln!(
            svg,
            r#"<line x1="{left:.1}" y1="{y:.1}" x2="{right:.1}" y2="{y:.1}" stroke="{REFERENCE_COLOR}" stroke-dasharray="6 4"/>"#
        );
    }

    for s in &spec.series {
        if s.points.is_empty() {
            continue;
        }
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", frame.px(x), frame.py(y)))
            .collect();
        let dash = match s.style {
            LineStyle::Solid => "",
            LineStyle::Dotted => r#" stroke-dasharray="2 3""#,
        };
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="1.5"{dash}><title>{}</title></polyline>"#,
            pts.join(" "),
            color(s.color),
            escape(&s.name)
        );
    }

    for a in &spec.annotations {
        let (x, y) = (frame.px(a.x), frame.py(a.y));
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{y:.2}" x2="{x:.2}" y2="{bottom:.1}" stroke="{c}" stroke-dasharray="1 2"/><text x="{x:.2}" y="{:.2}" text-anchor="middle" fill="{c}">{}</text>"#,
            y - 6.0,
            escape(&a.text),
            c = color(a.color)
        );
    }

    // Legend, top right, one line per solid series.
    let mut legend_y = top + 12.0;
    for s in spec.series.iter().filter(|s| s.style == LineStyle::Solid) {
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="{}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            right - 130.0,
            legend_y - 4.0,
            right - 110.0,
            legend_y - 4.0,
            color(s.color),
            right - 104.0,
            legend_y,
            escape(&s.name)
        );
        legend_y += 16.0;
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn is_color(c: &str) -> bool {
    match c.strip_prefix('#') {
        Some(hex) => matches!(hex.len(), 3 | 6) && hex.chars().all(|ch| ch.is_ascii_hexdigit()),
        None => !c.is_empty() && c.chars().all(|ch| ch.is_ascii_alphabetic()),
    }
}

/// Drops the version comment so outputs compare across releases.
pub fn strip_version_comment(svg: &str) -> String {
    svg.lines()
        .filter(|l| !(l.starts_with("<!-- podium ") && l.ends_with("-->")))
        .map(|l| format!("{l}\n"))
        .collect()
}

//! Deterministic SVG rendering of fold configurations.
//!
//! Output is byte-reproducible: fixed element order (square, crease,
//! triangle, circles ascending by name, labels last), coordinates formatted
//! to two decimals after normalizing the viewport to height 600, and a greedy
//! label layout that depends only on the input.

use haga_core::{Circle, HagaConfig, Point, Rat};

const CANVAS_H: f64 = 600.0;
const FONT_SIZE: f64 = 15.0;
const CHAR_W: f64 = 9.0;
const LABEL_H: f64 = 16.0;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

pub struct FigureSpec {
    pub d: Rat,
    pub e: Rat,
    /// Requested circle names, e.g. "delta"; rendered in ascending name order.
    pub circles: Vec<String>,
}

pub const PRESET_NAMES: [&str; 7] = ["h1", "h2", "h3", "h4", "h5", "h6", "h7"];

/// Stored parameters approximating each of the seven case figures.
pub fn preset(name: &str) -> Option<FigureSpec> {
    let basic = |d: i64, e: i64, circles: &[&str]| FigureSpec {
        d: Rat::from_int(d),
        e: Rat::from_int(e),
        circles: circles.iter().map(|s| s.to_string()).collect(),
    };
    let tritangent = ["delta", "alpha", "beta", "gamma"];
    Some(match name {
        "h1" => basic(1, 3, &tritangent),
        "h2" => basic(1, 2, &["delta"]),
        "h3" => basic(2, 3, &tritangent),
        "h4" => basic(2, 2, &tritangent),
        "h5" => basic(2, 1, &["delta", "alpha", "beta", "gamma", "eps1"]),
        "h6" => basic(2, 0, &tritangent),
        "h7" => basic(2, -1, &tritangent),
        _ => return None,
    })
}

fn glyph(name: &str) -> &'static str {
    match name {
        "delta" => "δ",
        "alpha" => "α",
        "beta" => "β",
        "gamma" => "γ",
        "eps1" => "ε1",
        "eps2" => "ε2",
        "eps3" => "ε3",
        "eps4" => "ε4",
        "eps5" => "ε5",
        "eps6" => "ε6",
        _ => "?",
    }
}

#[derive(Clone, Copy)]
struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn add(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.max_x = self.max_x.max(x);
        self.min_y = self.min_y.min(y);
        self.max_y = self.max_y.max(y);
    }

    fn pad_fraction(&mut self, fraction: f64) {
        let pad = fraction * (self.max_x - self.min_x).max(self.max_y - self.min_y).max(1.0);
        self.min_x -= pad;
        self.max_x += pad;
        self.min_y -= pad;
        self.max_y += pad;
    }
}

struct Camera {
    bounds: Bounds,
    scale: f64,
}

impl Camera {
    fn to_screen(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.bounds.min_x) * self.scale,
            (self.bounds.max_y - y) * self.scale,
        )
    }

    fn width(&self) -> f64 {
        (self.bounds.max_x - self.bounds.min_x) * self.scale
    }
}

fn fpt(p: &Point) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

struct Scene {
    cfg: HagaConfig,
    circles: Vec<(String, Circle)>,
    camera: Camera,
}

fn build_scene(spec: &FigureSpec) -> Result<Scene, String> {
    let cfg = HagaConfig::build(spec.d.clone(), spec.e.clone())
        .map_err(|e| format!("invalid figure parameters: {e}"))?;

    let mut names: Vec<String> = spec.circles.clone();
    names.sort();
    names.dedup();
    let circle_set = cfg.circle_set().ok();
    let mut circles: Vec<(String, Circle)> = Vec::new();
    for name in &names {
        let circle = if name == "delta" {
            cfg.circle_delta()
        } else if let Some(c) = circle_set.as_ref().and_then(|set| set.by_name(name)) {
            c.clone()
        } else if haga_core::CircleSet::NAMES.contains(&name.as_str()) {
            return Err(format!("circle {name:?} does not exist in case {}", cfg.case));
        } else {
            return Err(format!("unknown circle name {name:?}"));
        };
        circles.push((name.clone(), circle));
    }

    // viewport: square, named points, every drawn circle, plus 10% margin
    let mut bounds = Bounds::new();
    let mut anchor_points: Vec<&Point> = vec![
        &cfg.point_a,
        &cfg.point_b,
        &cfg.point_c,
        &cfg.point_d,
        &cfg.point_e,
        &cfg.g,
        &cfg.h,
        &cfg.b_prime,
    ];
    if let Some(f) = &cfg.f {
        anchor_points.push(f);
    }
    for p in anchor_points {
        let (x, y) = fpt(p);
        bounds.add(x, y);
    }
    for (_, c) in &circles {
        let (cx, cy) = fpt(&c.center);
        let r = c.radius.to_f64();
        bounds.add(cx - r, cy - r);
        bounds.add(cx + r, cy + r);
    }
    bounds.pad_fraction(0.1);
    let camera = Camera {
        bounds,
        scale: CANVAS_H / (bounds.max_y - bounds.min_y),
    };
    Ok(Scene { cfg, circles, camera })
}

#[derive(Clone, Debug)]
pub struct LabelBox {
    pub text: String,
    /// Top-left corner in screen coordinates.
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub h: f64,
}

impl LabelBox {
    pub fn overlaps(&self, other: &LabelBox) -> bool {
        self.x < other.x + other.w
            && other.x < self.x + self.w
            && self.y < other.y + other.h
            && other.y < self.y + self.h
    }
}

/// Greedy non-overlapping placement: for each label (fixed order), the first
/// candidate offset around its anchor that stays on the canvas and clears all
/// previously placed boxes wins.
fn layout_labels(anchors: &[(String, f64, f64)], width: f64) -> Vec<LabelBox> {
    let mut placed: Vec<LabelBox> = Vec::new();
    for (text, ax, ay) in anchors {
        let w = CHAR_W * text.chars().count() as f64;
        let candidates = [
            (6.0, -20.0),
            (6.0, 4.0),
            (-w - 6.0, -20.0),
            (-w - 6.0, 4.0),
            (10.0, -8.0),
            (-w - 10.0, -8.0),
            (6.0, -38.0),
            (6.0, 22.0),
            (-w - 6.0, -38.0),
            (-w - 6.0, 22.0),
        ];
        let mut chosen = None;
        for (dx, dy) in candidates {
            let cand = LabelBox {
                text: text.clone(),
                x: ax + dx,
                y: ay + dy,
                w,
                h: LABEL_H,
            };
            let inside = cand.x >= 0.0
                && cand.y >= 0.0
                && cand.x + cand.w <= width
                && cand.y + cand.h <= CANVAS_H;
            if inside && placed.iter().all(|p| !p.overlaps(&cand)) {
                chosen = Some(cand);
                break;
            }
        }
        placed.push(chosen.unwrap_or(LabelBox {
            text: text.clone(),
            x: ax + 6.0,
            y: ay - 20.0,
            w,
            h: LABEL_H,
        }));
    }
    placed
}

/// Labeled point anchors, merged where points coincide exactly (degenerate
/// cases collapse several named points onto one).
fn point_labels(cfg: &HagaConfig) -> Vec<(String, Point)> {
    let mut named: Vec<(&str, &Point)> = vec![
        ("A", &cfg.point_a),
        ("B", &cfg.point_b),
        ("C", &cfg.point_c),
        ("D", &cfg.point_d),
        ("E", &cfg.point_e),
    ];
    if let Some(f) = &cfg.f {
        named.push(("F", f));
    }
    named.push(("B′", &cfg.b_prime));
    named.push(("G", &cfg.g));
    named.push(("H", &cfg.h));

    let mut merged: Vec<(String, Point)> = Vec::new();
    for (name, p) in named {
        match merged.iter_mut().find(|(_, q)| q == p) {
            Some((label, _)) => {
                label.push('=');
                label.push_str(name);
            }
            None => merged.push((name.to_string(), p.clone())),
        }
    }
    merged
}

fn scene_anchors(scene: &Scene) -> Vec<(String, f64, f64)> {
    let mut anchors: Vec<(String, f64, f64)> = Vec::new();
    for (label, p) in point_labels(&scene.cfg) {
        let (x, y) = fpt(&p);
        let (sx, sy) = scene.camera.to_screen(x, y);
        anchors.push((label, sx, sy));
    }
    for (name, c) in &scene.circles {
        // anchor the circle's label at its 45° point
        let (cx, cy) = fpt(&c.center);
        let offset = c.radius.to_f64() / std::f64::consts::SQRT_2;
        let (ax, ay) = scene.camera.to_screen(cx + offset, cy + offset);
        anchors.push((glyph(name).to_string(), ax, ay));
    }
    anchors
}

fn fmt(v: f64) -> String {
    // normalize negative zero so output is stable
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.2}")
}

pub fn render(spec: &FigureSpec) -> Result<String, String> {
    let scene = build_scene(spec)?;
    let cfg = &scene.cfg;
    let camera = &scene.camera;
    let width = camera.width();

    let screen = |p: &Point| {
        let (x, y) = fpt(p);
        let (sx, sy) = camera.to_screen(x, y);
        format!("{},{}", fmt(sx), fmt(sy))
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt(width),
        fmt(CANVAS_H),
        fmt(width),
        fmt(CANVAS_H)
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    out.push_str(&format!(
        "<path class=\"square\" d=\"M {} L {} L {} L {} Z\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n",
        screen(&cfg.point_a),
        screen(&cfg.point_b),
        screen(&cfg.point_c),
        screen(&cfg.point_d)
    ));

    // crease, clipped to the viewport
    if let Some(((x1, y1), (x2, y2))) = clip_line_to_bounds(cfg, &camera.bounds) {
        let (sx1, sy1) = camera.to_screen(x1, y1);
        let (sx2, sy2) = camera.to_screen(x2, y2);
        out.push_str(&format!(
            "<line class=\"crease\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#777777\" stroke-width=\"1\" stroke-dasharray=\"7,4\"/>\n",
            fmt(sx1),
            fmt(sy1),
            fmt(sx2),
            fmt(sy2)
        ));
    }

    if let Some(f) = &cfg.f {
        out.push_str(&format!(
            "<path class=\"triangle\" d=\"M {} L {} L {} Z\" fill=\"#1f77b4\" fill-opacity=\"0.08\" stroke=\"#1f77b4\" stroke-width=\"1.2\"/>\n",
            screen(&cfg.point_a),
            screen(&cfg.point_e),
            screen(f)
        ));
    }

    for (i, (name, c)) in scene.circles.iter().enumerate() {
        let (cx, cy) = fpt(&c.center);
        let (sx, sy) = camera.to_screen(cx, cy);
        let color = PALETTE[i % PALETTE.len()];
        if c.radius.is_zero() {
            // point-circle: a filled dot
            out.push_str(&format!(
                "<circle class=\"circle circle-{name}\" cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{color}\"/>\n",
                fmt(sx),
                fmt(sy)
            ));
        } else {
            out.push_str(&format!(
                "<circle class=\"circle circle-{name}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.2\"/>\n",
                fmt(sx),
                fmt(sy),
                fmt(c.radius.to_f64() * camera.scale)
            ));
        }
    }

    for (_, p) in point_labels(cfg) {
        let (x, y) = fpt(&p);
        let (sx, sy) = camera.to_screen(x, y);
        out.push_str(&format!(
            "<circle class=\"marker\" cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"#222222\"/>\n",
            fmt(sx),
            fmt(sy)
        ));
    }

    for label in layout_labels(&scene_anchors(&scene), width) {
        out.push_str(&format!(
            "<text class=\"label\" x=\"{}\" y=\"{}\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"{}\" fill=\"#111111\">{}</text>\n",
            fmt(label.x),
            fmt(label.y + LABEL_H - 3.0),
            fmt(FONT_SIZE),
            label.text
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Label boxes the renderer would draw; exposed for the preset disjointness
/// check.
pub fn figure_label_boxes(spec: &FigureSpec) -> Result<Vec<LabelBox>, String> {
    let scene = build_scene(spec)?;
    Ok(layout_labels(&scene_anchors(&scene), scene.camera.width()))
}

/// Intersects the crease with the (padded) viewport rectangle.
fn clip_line_to_bounds(cfg: &HagaConfig, b: &Bounds) -> Option<((f64, f64), (f64, f64))> {
    let a = cfg.crease.a.to_f64();
    let bb = cfg.crease.b.to_f64();
    let c = cfg.crease.c.to_f64();
    let mut hits: Vec<(f64, f64)> = Vec::new();
    let mut push = |x: f64, y: f64| {
        if hits.iter().all(|(hx, hy)| (hx - x).abs() > 1e-9 || (hy - y).abs() > 1e-9) {
            hits.push((x, y));
        }
    };
    if bb.abs() > 1e-12 {
        for x in [b.min_x, b.max_x] {
            let y = -(a * x + c) / bb;
            if y >= b.min_y && y <= b.max_y {
                push(x, y);
            }
        }
    }
    if a.abs() > 1e-12 {
        for y in [b.min_y, b.max_y] {
            let x = -(bb * y + c) / a;
            if x >= b.min_x && x <= b.max_x {
                push(x, y);
            }
        }
    }
    if hits.len() < 2 {
        return None;
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite coordinates"));
    Some((hits[0], *hits.last().expect("nonempty")))
}

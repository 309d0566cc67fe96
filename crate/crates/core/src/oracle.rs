//! Floating-point re-derivation of the whole construction, used to
//! differentially test the exact kernel.
//!
//! The routines here deliberately avoid the formulas of the exact path:
//! reflections go through the projection onto the crease direction, incenters
//! and excenters come from the (signed) side-length weighted vertex averages,
//! and circle selection minimizes point-line distance instead of testing
//! exact collinearity.

use crate::config::{HagaCase, HagaConfig};
use crate::Error;

type P = (f64, f64);

fn add(a: P, b: P) -> P {
    (a.0 + b.0, a.1 + b.1)
}
fn sub(a: P, b: P) -> P {
    (a.0 - b.0, a.1 - b.1)
}
fn scale(a: P, k: f64) -> P {
    (a.0 * k, a.1 * k)
}
fn dot(a: P, b: P) -> f64 {
    a.0 * b.0 + a.1 * b.1
}
fn cross(a: P, b: P) -> f64 {
    a.0 * b.1 - a.1 * b.0
}
fn norm(a: P) -> f64 {
    dot(a, a).sqrt()
}
fn dist(a: P, b: P) -> f64 {
    norm(sub(a, b))
}

fn dist_to_line(p: P, through: P, towards: P) -> f64 {
    let dir = sub(towards, through);
    cross(sub(p, through), dir).abs() / norm(dir)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxCircle {
    pub center: P,
    pub radius: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct ApproxCircles {
    pub delta: ApproxCircle,
    pub alpha: ApproxCircle,
    pub beta: ApproxCircle,
    pub gamma: ApproxCircle,
    pub eps1: ApproxCircle,
    pub eps2: ApproxCircle,
    pub eps3: ApproxCircle,
    pub eps4: ApproxCircle,
    pub eps5: ApproxCircle,
    pub eps6: ApproxCircle,
}

/// Floating-point mirror of the full configuration.
#[derive(Clone, Debug)]
pub struct ApproxConfig {
    pub d: f64,
    pub e: f64,
    pub case: HagaCase,
    pub point_a: P,
    pub point_b: P,
    pub point_c: P,
    pub point_d: P,
    pub point_e: P,
    pub b_prime: P,
    pub f: P,
    pub g: P,
    pub h: P,
    pub len_a: f64,
    pub len_b: f64,
    pub len_c: f64,
    pub circles: ApproxCircles,
}

fn classify_f64(d: f64, e: f64) -> HagaCase {
    if e > 2.0 * d {
        HagaCase::H1
    } else if e == 2.0 * d {
        HagaCase::H2
    } else if e > d {
        HagaCase::H3
    } else if e == d {
        HagaCase::H4
    } else if e > 0.0 {
        HagaCase::H5
    } else if e == 0.0 {
        HagaCase::H6
    } else {
        HagaCase::H7
    }
}

/// Incircle via the weighted vertex average aI = (a·A + b·B + c·C)/(a+b+c).
fn incircle(tri: [P; 3]) -> ApproxCircle {
    weighted_tritangent(tri, None)
}

/// Excircle opposite `tri[opposite]` via the signed-weight variant.
fn excircle(tri: [P; 3], opposite: usize) -> ApproxCircle {
    weighted_tritangent(tri, Some(opposite))
}

fn weighted_tritangent(tri: [P; 3], opposite: Option<usize>) -> ApproxCircle {
    let side = |i: usize| dist(tri[(i + 1) % 3], tri[(i + 2) % 3]);
    let mut w = [side(0), side(1), side(2)];
    let s = (w[0] + w[1] + w[2]) / 2.0;
    let area = cross(sub(tri[1], tri[0]), sub(tri[2], tri[0])).abs() / 2.0;
    let radius = match opposite {
        None => area / s,
        Some(i) => area / (s - w[i]),
    };
    if let Some(i) = opposite {
        w[i] = -w[i];
    }
    let total = w[0] + w[1] + w[2];
    let center = scale(
        add(add(scale(tri[0], w[0]), scale(tri[1], w[1])), scale(tri[2], w[2])),
        1.0 / total,
    );
    ApproxCircle { center, radius }
}

fn four_tritangent(tri: [P; 3]) -> [ApproxCircle; 4] {
    [incircle(tri), excircle(tri, 0), excircle(tri, 1), excircle(tri, 2)]
}

/// Among the four candidates, the circle distinct from `exclude` whose center
/// is closest to the line through `through` and `towards`.
fn select_on_line(candidates: &[ApproxCircle; 4], exclude: ApproxCircle, through: P, towards: P) -> ApproxCircle {
    let mut best: Option<(f64, ApproxCircle)> = None;
    for c in candidates {
        let separation = dist(c.center, exclude.center) + (c.radius - exclude.radius).abs();
        if separation < 1e-6 {
            continue;
        }
        let score = dist_to_line(c.center, through, towards);
        if best.map_or(true, |(b, _)| score < b) {
            best = Some((score, *c));
        }
    }
    best.expect("three candidates remain").1
}

/// Builds the whole configuration in floating point. Refuses inputs within
/// 1e-9 of the parallel case e = 2d.
pub fn approx_build(d: f64, e: f64) -> Result<ApproxConfig, Error> {
    if !(d > 0.0) {
        return Err(Error::InvalidSquare);
    }
    if (e - 2.0 * d).abs() <= 1e-9 {
        return Err(Error::NearDegenerate);
    }
    let case = classify_f64(d, e);
    let point_a = (0.0, 0.0);
    let point_b = (d, 0.0);
    let point_c = (d, d);
    let point_d = (0.0, d);
    let point_e = (0.0, e);

    // crease as point + unit direction: through the midpoint of CE,
    // perpendicular to CE
    let mid = scale(add(point_c, point_e), 0.5);
    let ce = sub(point_e, point_c);
    let dir = scale((-ce.1, ce.0), 1.0 / norm(ce));

    // reflection of B via projection onto the crease direction
    let (b_prime, f) = if e == 0.0 {
        (point_b, point_b)
    } else {
        let w = sub(point_b, mid);
        let parallel = scale(dir, dot(w, dir));
        let b_prime = add(mid, sub(scale(parallel, 2.0), w));
        let s = e / (e - b_prime.1);
        let f = add(point_e, scale(sub(b_prime, point_e), s));
        (b_prime, f)
    };

    // crease meets AB and CD (its direction is never horizontal)
    let g = add(mid, scale(dir, -mid.1 / dir.1));
    let h = add(mid, scale(dir, (d - mid.1) / dir.1));

    let len_a = dist(b_prime, f);
    let len_b = (d - e).abs();
    let len_c = dist(point_b, f);

    let delta = ApproxCircle {
        center: point_c,
        radius: d,
    };
    let half = d / 2.0;
    let square_incircle = ApproxCircle {
        center: (half, half),
        radius: half,
    };
    let point_circle = |p: P| ApproxCircle { center: p, radius: 0.0 };

    let circles = match case {
        HagaCase::H4 => ApproxCircles {
            delta,
            alpha: point_circle(point_a),
            beta: point_circle(point_a),
            gamma: ApproxCircle {
                center: (-d, d),
                radius: d,
            },
            eps1: square_incircle,
            eps2: point_circle(point_a),
            eps3: point_circle(point_a),
            eps4: point_circle(point_d),
            eps5: square_incircle,
            eps6: ApproxCircle {
                center: (half, 1.5 * d),
                radius: half,
            },
        },
        HagaCase::H6 => ApproxCircles {
            delta,
            alpha: point_circle(point_a),
            beta: ApproxCircle {
                center: (d, -d),
                radius: d,
            },
            gamma: point_circle(point_a),
            eps1: square_incircle,
            eps2: point_circle(point_b),
            eps3: point_circle(point_b),
            eps4: point_circle(point_d),
            eps5: point_circle(point_b),
            eps6: point_circle(point_d),
        },
        _ => {
            let aef = four_tritangent([point_a, point_e, f]);
            let alpha = select_on_line(&aef, delta, point_a, point_c);
            let beta = select_on_line(&aef, alpha, point_e, alpha.center);
            let gamma = select_on_line(&aef, alpha, f, alpha.center);

            // eps1: crease ∩ diagonal AC, radius = distance to the side BC
            let det = dir.0 - dir.1;
            let t = (mid.1 - mid.0) / det;
            let center = add(mid, scale(dir, t));
            let eps1 = ApproxCircle {
                center,
                radius: (d - center.0).abs(),
            };

            let bfg_tri = [b_prime, f, g];
            let deh_tri = [point_d, h, point_e];
            let bfg = four_tritangent(bfg_tri);
            let deh = four_tritangent(deh_tri);
            let (eps2, eps3, eps4) = match case {
                HagaCase::H1 | HagaCase::H3 => (
                    excircle(bfg_tri, 2),
                    incircle(bfg_tri),
                    excircle(deh_tri, 1),
                ),
                _ => (incircle(bfg_tri), excircle(bfg_tri, 2), incircle(deh_tri)),
            };
            let eps5 = select_on_line(&bfg, eps3, f, eps3.center);
            let eps6 = select_on_line(&deh, eps4, point_e, eps4.center);
            ApproxCircles {
                delta,
                alpha,
                beta,
                gamma,
                eps1,
                eps2,
                eps3,
                eps4,
                eps5,
                eps6,
            }
        }
    };

    Ok(ApproxConfig {
        d,
        e,
        case,
        point_a,
        point_b,
        point_c,
        point_d,
        point_e,
        b_prime,
        f,
        g,
        h,
        len_a,
        len_b,
        len_c,
        circles,
    })
}

/// Maximum absolute discrepancy between the exact configuration (converted
/// to f64) and the approximate one, over all points, lengths and circles.
/// Errors with `ShapeMismatch` when the two disagree on the case or on the
/// presence of F.
pub fn compare(exact: &HagaConfig, approx: &ApproxConfig) -> Result<f64, Error> {
    if exact.case != approx.case {
        return Err(Error::ShapeMismatch(format!(
            "case {} (exact) vs {} (approx)",
            exact.case, approx.case
        )));
    }
    let exact_f = exact.f.as_ref().ok_or_else(|| {
        Error::ShapeMismatch("F absent in the exact configuration".to_string())
    })?;
    let exact_circles = exact
        .circle_set()
        .map_err(|e| Error::ShapeMismatch(format!("exact circles unavailable: {e}")))?;

    let mut max_err: f64 = 0.0;
    let mut track = |a: f64, b: f64| {
        let err = (a - b).abs();
        if err > max_err {
            max_err = err;
        }
    };
    let track_point = |p: &crate::Point, q: P, track: &mut dyn FnMut(f64, f64)| {
        track(p.x.to_f64(), q.0);
        track(p.y.to_f64(), q.1);
    };

    track(exact.d.to_f64(), approx.d);
    track(exact.e.to_f64(), approx.e);
    track_point(&exact.point_a, approx.point_a, &mut track);
    track_point(&exact.point_b, approx.point_b, &mut track);
    track_point(&exact.point_c, approx.point_c, &mut track);
    track_point(&exact.point_d, approx.point_d, &mut track);
    track_point(&exact.point_e, approx.point_e, &mut track);
    track_point(&exact.b_prime, approx.b_prime, &mut track);
    track_point(exact_f, approx.f, &mut track);
    track_point(&exact.g, approx.g, &mut track);
    track_point(&exact.h, approx.h, &mut track);

    track(exact.len_a.as_ref().expect("F present").to_f64(), approx.len_a);
    track(exact.len_b.to_f64(), approx.len_b);
    track(exact.len_c.as_ref().expect("F present").to_f64(), approx.len_c);

    let pairs = [
        (&exact_circles.delta, approx.circles.delta),
        (&exact_circles.alpha, approx.circles.alpha),
        (&exact_circles.beta, approx.circles.beta),
        (&exact_circles.gamma, approx.circles.gamma),
        (&exact_circles.eps1, approx.circles.eps1),
        (&exact_circles.eps2, approx.circles.eps2),
        (&exact_circles.eps3, approx.circles.eps3),
        (&exact_circles.eps4, approx.circles.eps4),
        (&exact_circles.eps5, approx.circles.eps5),
        (&exact_circles.eps6, approx.circles.eps6),
    ];
    for (ex, ap) in pairs {
        track_point(&ex.center, ap.center, &mut track);
        track(ex.radius.to_f64(), ap.radius);
    }
    Ok(max_err)
}

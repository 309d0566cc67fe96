//! Construction and classification of the generalized fold configuration.
//!
//! Coordinate convention, fixed as part of the JSON contract: the square is
//! A=(0,0), B=(d,0), C=(d,d), D=(0,d) (counterclockwise), and E=(0,e) with a
//! signed ordinate e ranging over the whole line DA. The crease m is the
//! perpendicular bisector of CE, B′ is the reflection of B in m, F is the
//! intersection of lines AB and B′E (with F = B when the two lines coincide,
//! and absent when they are parallel), and G, H are the intersections of m
//! with lines AB and CD.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::geom::{Circle, Line, LineIntersection, Point};
use crate::tritangent::{RightTriangleFrame, TritangentKind};
use crate::{Error, Rat};

/// The seven cases of the fold, determined by where E sits on the line DA.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HagaCase {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
    H7,
}

impl HagaCase {
    pub const ALL: [HagaCase; 7] = [
        HagaCase::H1,
        HagaCase::H2,
        HagaCase::H3,
        HagaCase::H4,
        HagaCase::H5,
        HagaCase::H6,
        HagaCase::H7,
    ];

    /// The cases with a proper triangle AEF; H4 and H6 collapse it and H2 has
    /// no F at all.
    pub fn is_ordinary(self) -> bool {
        matches!(self, HagaCase::H1 | HagaCase::H3 | HagaCase::H5 | HagaCase::H7)
    }

    pub fn is_degenerate(self) -> bool {
        matches!(self, HagaCase::H4 | HagaCase::H6)
    }
}

impl fmt::Display for HagaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HagaCase::H1 => "h1",
            HagaCase::H2 => "h2",
            HagaCase::H3 => "h3",
            HagaCase::H4 => "h4",
            HagaCase::H5 => "h5",
            HagaCase::H6 => "h6",
            HagaCase::H7 => "h7",
        };
        f.write_str(s)
    }
}

impl FromStr for HagaCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "h1" => Ok(HagaCase::H1),
            "h2" => Ok(HagaCase::H2),
            "h3" => Ok(HagaCase::H3),
            "h4" => Ok(HagaCase::H4),
            "h5" => Ok(HagaCase::H5),
            "h6" => Ok(HagaCase::H6),
            "h7" => Ok(HagaCase::H7),
            _ => Err(Error::BadRational(s.to_string())),
        }
    }
}

impl Serialize for HagaCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Classifies the fold by exact comparison of e against 0, d and 2d.
pub fn classify(d: &Rat, e: &Rat) -> Result<HagaCase, Error> {
    if !d.is_positive() {
        return Err(Error::InvalidSquare);
    }
    let two_d = Rat::from_int(2) * d;
    Ok(if *e > two_d {
        HagaCase::H1
    } else if *e == two_d {
        HagaCase::H2
    } else if e > d {
        HagaCase::H3
    } else if e == d {
        HagaCase::H4
    } else if e.is_positive() {
        HagaCase::H5
    } else if e.is_zero() {
        HagaCase::H6
    } else {
        HagaCase::H7
    })
}

/// The full fold configuration for one (d, e).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HagaConfig {
    pub d: Rat,
    pub e: Rat,
    pub case: HagaCase,
    pub point_a: Point,
    pub point_b: Point,
    pub point_c: Point,
    pub point_d: Point,
    pub point_e: Point,
    /// Crease line m, the reflection axis of the fold.
    pub crease: Line,
    pub b_prime: Point,
    /// Intersection of lines AB and B′E; absent exactly in case h2.
    pub f: Option<Point>,
    /// Intersection of m with line AB.
    pub g: Point,
    /// Intersection of m with line CD.
    pub h: Point,
    /// Overhang |B′F|.
    pub len_a: Option<Rat>,
    /// |DE| = |d − e|.
    pub len_b: Rat,
    /// |BF|.
    pub len_c: Option<Rat>,
}

impl HagaConfig {
    pub fn build(d: Rat, e: Rat) -> Result<HagaConfig, Error> {
        let case = classify(&d, &e)?;
        let zero = Rat::zero;
        let point_a = Point::new(zero(), zero());
        let point_b = Point::new(d.clone(), zero());
        let point_c = Point::new(d.clone(), d.clone());
        let point_d = Point::new(zero(), d.clone());
        let point_e = Point::new(zero(), e.clone());

        let crease = Line::perpendicular_bisector(&point_c, &point_e)?;
        let b_prime = point_b.reflect_in(&crease);
        debug_assert_eq!(b_prime.dist_sq(&point_e), d.square(), "fold isometry |B'E| = d");

        let line_ab = Line::through(&point_a, &point_b)?;
        let line_eb = Line::through(&b_prime, &point_e)?;
        let f = match line_ab.intersect(&line_eb) {
            LineIntersection::Point(p) => Some(p),
            // lines AB and B'E coincide exactly when E = A; F is defined as B
            LineIntersection::Coincident => Some(point_b.clone()),
            LineIntersection::Parallel => None,
        };
        debug_assert_eq!(f.is_none(), case == HagaCase::H2);

        let g = match crease.intersect(&line_ab) {
            LineIntersection::Point(p) => p,
            _ => unreachable!("the crease is never parallel to AB: its normal has x-component d > 0"),
        };
        let line_cd = Line::through(&point_c, &point_d)?;
        let h = match crease.intersect(&line_cd) {
            LineIntersection::Point(p) => p,
            _ => unreachable!("the crease is never parallel to CD"),
        };

        let len_b = (&d - &e).abs();
        let len_c = f.as_ref().map(|f| (&d - &f.x).abs());
        let len_a = f
            .as_ref()
            .map(|f| {
                b_prime
                    .dist_sq(f)
                    .sqrt_exact()
                    .expect("|B'F| is rational for every fold")
            });

        Ok(HagaConfig {
            d,
            e,
            case,
            point_a,
            point_b,
            point_c,
            point_d,
            point_e,
            crease,
            b_prime,
            f,
            g,
            h,
            len_a,
            len_b,
            len_c,
        })
    }

    pub fn f(&self) -> Result<&Point, Error> {
        self.f.as_ref().ok_or(Error::NoF)
    }

    pub fn len_a(&self) -> Result<&Rat, Error> {
        self.len_a.as_ref().ok_or(Error::NoF)
    }

    pub fn len_c(&self) -> Result<&Rat, Error> {
        self.len_c.as_ref().ok_or(Error::NoF)
    }

    pub fn line_ab(&self) -> Line {
        Line::through(&self.point_a, &self.point_b).expect("square side")
    }

    pub fn line_bc(&self) -> Line {
        Line::through(&self.point_b, &self.point_c).expect("square side")
    }

    pub fn line_cd(&self) -> Line {
        Line::through(&self.point_c, &self.point_d).expect("square side")
    }

    pub fn line_da(&self) -> Line {
        Line::through(&self.point_d, &self.point_a).expect("square side")
    }

    pub fn line_ac(&self) -> Line {
        Line::through(&self.point_a, &self.point_c).expect("square diagonal")
    }

    /// Line B′E; the fold carries side BC onto it, and E, F lie on it.
    pub fn line_eb_prime(&self) -> Result<Line, Error> {
        Line::through(&self.b_prime, &self.point_e)
    }

    /// |EF| from the per-case tangent-length formula: c−b in h3, b+c in
    /// h1/h4/h5/h6, b−c in h7.
    pub fn ef_length(&self) -> Result<Rat, Error> {
        let c = self.len_c()?;
        let b = &self.len_b;
        Ok(match self.case {
            HagaCase::H3 => c - b,
            HagaCase::H7 => b - c,
            _ => b + c,
        })
    }

    /// The triangle AEF in a rational frame; errors in h2 (no F) and the
    /// degenerate cases (a leg collapses).
    pub fn triangle_aef(&self) -> Result<RightTriangleFrame, Error> {
        let f = self.f()?;
        RightTriangleFrame::from_vertices(&self.point_a, f, &self.point_e)
    }

    /// The triangle B′FG (right angle at B′, legs along B′E and its
    /// perpendicular).
    pub fn triangle_bfg(&self) -> Result<RightTriangleFrame, Error> {
        let f = self.f()?;
        RightTriangleFrame::from_vertices(&self.b_prime, f, &self.g)
    }

    /// The triangle DEH (right angle at D, legs along the square sides).
    pub fn triangle_deh(&self) -> Result<RightTriangleFrame, Error> {
        RightTriangleFrame::from_vertices(&self.point_d, &self.h, &self.point_e)
    }

    /// Circle with center C through B; the fold keeps line B′E tangent to it.
    pub fn circle_delta(&self) -> Circle {
        Circle::new(self.point_c.clone(), self.d.clone())
    }

    fn incircle_of_square(&self) -> Circle {
        let half = self.d.half();
        Circle::new(Point::new(half.clone(), half.clone()), half)
    }

    /// The tritangent circle of AEF, distinct from δ, centered on the line
    /// AC; the point A in the degenerate cases. Its radius is the overhang a.
    pub fn circle_alpha(&self) -> Result<Circle, Error> {
        self.f()?;
        if self.case.is_degenerate() {
            return Ok(Circle::point_circle(self.point_a.clone()));
        }
        self.triangle_aef()?
            .tritangent_on_line(&self.point_a, &self.circle_delta())
    }

    /// The tritangent circle of AEF, distinct from α, centered on the line
    /// joining E to the center of α; degenerate overrides: the point A in h4,
    /// the reflection of δ in AB in h6. Its radius is b.
    pub fn circle_beta(&self) -> Result<Circle, Error> {
        self.f()?;
        match self.case {
            HagaCase::H4 => Ok(Circle::point_circle(self.point_a.clone())),
            HagaCase::H6 => Ok(self.circle_delta().reflect_in(&self.line_ab())),
            _ => self
                .triangle_aef()?
                .tritangent_on_line(&self.point_e, &self.circle_alpha()?),
        }
    }

    /// As `circle_beta` but selected from F; overrides: the reflection of δ
    /// in DA in h4, the point A in h6. Its radius is c.
    pub fn circle_gamma(&self) -> Result<Circle, Error> {
        let f = self.f()?;
        match self.case {
            HagaCase::H4 => Ok(self.circle_delta().reflect_in(&self.line_da())),
            HagaCase::H6 => Ok(Circle::point_circle(self.point_a.clone())),
            _ => self.triangle_aef()?.tritangent_on_line(f, &self.circle_alpha()?),
        }
    }

    /// The circle touching lines BC, CD and EF with center on m and AC. Its
    /// radius is |EF|/2 and it touches EF at the midpoint of EF; in the
    /// degenerate cases it is the incircle of the square.
    pub fn circle_eps1(&self) -> Result<Circle, Error> {
        self.f()?;
        let center = match self.crease.intersect(&self.line_ac()) {
            LineIntersection::Point(p) => p,
            // m is parallel to AC exactly when e = 2d, which is h2
            _ => return Err(Error::NoF),
        };
        let radius = self
            .line_bc()
            .dist_sq_to(&center)
            .sqrt_exact()
            .expect("distance to the vertical side is rational");
        Ok(Circle::new(center, radius))
    }

    /// The circles ε₂…ε₆ built from the triangles B′FG and DEH (ordinary
    /// cases) or from the explicit degenerate definitions (h4, h6).
    pub fn circles_eps2_to_eps6(&self) -> Result<[Circle; 5], Error> {
        self.f()?;
        match self.case {
            HagaCase::H4 => {
                let inc = self.incircle_of_square();
                Ok([
                    Circle::point_circle(self.point_a.clone()),
                    Circle::point_circle(self.point_a.clone()),
                    Circle::point_circle(self.point_d.clone()),
                    inc.clone(),
                    inc.reflect_in(&self.line_cd()),
                ])
            }
            HagaCase::H6 => Ok([
                Circle::point_circle(self.point_b.clone()),
                Circle::point_circle(self.point_b.clone()),
                Circle::point_circle(self.point_d.clone()),
                Circle::point_circle(self.point_b.clone()),
                Circle::point_circle(self.point_d.clone()),
            ]),
            _ => {
                let bfg = self.triangle_bfg()?;
                let deh = self.triangle_deh()?;
                // p-leg of B′FG ends at F, q-leg at G; p-leg of DEH ends at
                // H, q-leg at E.
                let (eps2, eps3, eps4) = match self.case {
                    HagaCase::H1 | HagaCase::H3 => (
                        bfg.tritangent_circle(TritangentKind::ExOppQ),
                        bfg.tritangent_circle(TritangentKind::Incircle),
                        deh.tritangent_circle(TritangentKind::ExOppP),
                    ),
                    _ => (
                        bfg.tritangent_circle(TritangentKind::Incircle),
                        bfg.tritangent_circle(TritangentKind::ExOppQ),
                        deh.tritangent_circle(TritangentKind::Incircle),
                    ),
                };
                let eps5 = bfg.tritangent_on_line(self.f()?, &eps3)?;
                let eps6 = deh.tritangent_on_line(&self.point_e, &eps4)?;
                Ok([eps2, eps3, eps4, eps5, eps6])
            }
        }
    }

    /// All named circles of the configuration. Errors with `NoF` in h2.
    pub fn circle_set(&self) -> Result<CircleSet, Error> {
        let [eps2, eps3, eps4, eps5, eps6] = self.circles_eps2_to_eps6()?;
        Ok(CircleSet {
            delta: self.circle_delta(),
            alpha: self.circle_alpha()?,
            beta: self.circle_beta()?,
            gamma: self.circle_gamma()?,
            eps1: self.circle_eps1()?,
            eps2,
            eps3,
            eps4,
            eps5,
            eps6,
        })
    }

    /// |FG| − |DH| in h1/h3 and |DH| − |FG| otherwise; equals the overhang a.
    pub fn fg_dh_relation(&self) -> Result<Rat, Error> {
        let f = self.f()?;
        let fg = f.dist_sq(&self.g).sqrt_exact()?;
        let dh = self.point_d.dist_sq(&self.h).sqrt_exact()?;
        Ok(match self.case {
            HagaCase::H1 | HagaCase::H3 => fg - dh,
            _ => dh - fg,
        })
    }

    /// The three exact length identities: the per-case signed sum recovering
    /// d from (a, b, c), the product identity a·d = b·c, and the fold
    /// relation |AE|²·|AF|² = 4b²c².
    pub fn length_identities(&self) -> Result<LengthIdentities, Error> {
        let a = self.len_a()?;
        let c = self.len_c()?;
        let b = &self.len_b;
        let f = self.f()?;
        let signed_sum = match self.case {
            HagaCase::H1 => a - b - c,
            HagaCase::H3 => c - a - b,
            HagaCase::H7 => b - a - c,
            _ => a + &(b + c),
        };
        let ae_sq = self.point_a.dist_sq(&self.point_e);
        let af_sq = self.point_a.dist_sq(f);
        let four = Rat::from_int(4);
        Ok(LengthIdentities {
            sum_ok: signed_sum == self.d,
            product_ok: a * &self.d == b * c,
            haga_ok: ae_sq * af_sq == four * (b.square() * c.square()),
        })
    }

    /// True iff the crease meets the open interior of the square, i.e. the
    /// paper can really be folded.
    pub fn is_physically_foldable(&self) -> bool {
        let corners = [&self.point_a, &self.point_b, &self.point_c, &self.point_d];
        let values: Vec<Rat> = corners.iter().map(|p| self.crease.eval(p)).collect();
        values.iter().any(Rat::is_positive) && values.iter().any(Rat::is_negative)
    }

    pub fn document(&self) -> ConfigDocument {
        ConfigDocument::new(self)
    }
}

/// The named circles of one configuration. The eps radii are r₁…r₆.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CircleSet {
    pub delta: Circle,
    pub alpha: Circle,
    pub beta: Circle,
    pub gamma: Circle,
    pub eps1: Circle,
    pub eps2: Circle,
    pub eps3: Circle,
    pub eps4: Circle,
    pub eps5: Circle,
    pub eps6: Circle,
}

impl CircleSet {
    pub fn by_name(&self, name: &str) -> Option<&Circle> {
        match name {
            "delta" => Some(&self.delta),
            "alpha" => Some(&self.alpha),
            "beta" => Some(&self.beta),
            "gamma" => Some(&self.gamma),
            "eps1" => Some(&self.eps1),
            "eps2" => Some(&self.eps2),
            "eps3" => Some(&self.eps3),
            "eps4" => Some(&self.eps4),
            "eps5" => Some(&self.eps5),
            "eps6" => Some(&self.eps6),
            _ => None,
        }
    }

    pub const NAMES: [&'static str; 10] = [
        "delta", "alpha", "beta", "gamma", "eps1", "eps2", "eps3", "eps4", "eps5", "eps6",
    ];
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LengthIdentities {
    pub sum_ok: bool,
    pub product_ok: bool,
    pub haga_ok: bool,
}

/// One square produced by the inverse construction, together with the (d, e)
/// parameters that rebuild the fold it came from.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SquareConstruction {
    pub alpha_kind: String,
    /// Corners A, B, C, D in the triangle's world frame (possibly a mirror
    /// image of the canonical orientation).
    pub corners: [Point; 4],
    /// Side length d of the square.
    pub side: Rat,
    /// Signed ordinate of E for the canonical rebuild via `build(side, e)`.
    pub e: Rat,
}

/// Inverse construction: from a right triangle, the four squares whose fold
/// configuration reproduces it, one per choice of α among the tritangent
/// circles. δ is the other tritangent circle centered on the line from the
/// right-angle vertex through α's center; its center is C and its radius the
/// square side.
pub fn squares_from_triangle(t: &RightTriangleFrame) -> Result<Vec<SquareConstruction>, Error> {
    let vertex_a = t.vertex_right();
    let line_af = Line::through(&vertex_a, &t.vertex_p())?;
    let line_ae = Line::through(&vertex_a, &t.vertex_q())?;
    let mut squares = Vec::with_capacity(4);
    for kind in TritangentKind::ALL {
        let alpha = t.tritangent_circle(kind);
        let delta = t.tritangent_on_line(&vertex_a, &alpha)?;
        let center = delta.center.clone();
        let corner_b = line_af.foot_of_perpendicular(&center);
        let corner_d = line_ae.foot_of_perpendicular(&center);
        // sign of E's ordinate: positive iff D lies on the same ray from A as E
        let v = &t.placement().v;
        let d_dot_v = (&corner_d.x - &vertex_a.x) * &v.0 + (&corner_d.y - &vertex_a.y) * &v.1;
        let e = if d_dot_v.is_positive() {
            t.leg_q().clone()
        } else {
            -t.leg_q()
        };
        squares.push(SquareConstruction {
            alpha_kind: format!("{kind:?}"),
            corners: [vertex_a.clone(), corner_b, center, corner_d],
            side: delta.radius,
            e,
        });
    }
    Ok(squares)
}

#[derive(Serialize)]
pub struct ConfigDocument {
    d: Rat,
    e: Rat,
    case: HagaCase,
    points: PointsDoc,
    lengths: LengthsDoc,
    circles: CirclesDoc,
    foldable: bool,
}

#[derive(Serialize)]
struct PointsDoc {
    #[serde(rename = "A")]
    a: Point,
    #[serde(rename = "B")]
    b: Point,
    #[serde(rename = "C")]
    c: Point,
    #[serde(rename = "D")]
    d: Point,
    #[serde(rename = "E")]
    e: Point,
    #[serde(rename = "F")]
    f: Option<Point>,
    #[serde(rename = "G")]
    g: Point,
    #[serde(rename = "H")]
    h: Point,
    #[serde(rename = "B_prime")]
    b_prime: Point,
}

#[derive(Serialize)]
struct LengthsDoc {
    a: Option<Rat>,
    b: Rat,
    c: Option<Rat>,
    d: Rat,
    #[serde(rename = "EF")]
    ef: Option<Rat>,
    #[serde(rename = "FG")]
    fg: Option<Rat>,
    #[serde(rename = "DH")]
    dh: Option<Rat>,
}

#[derive(Serialize)]
struct CirclesDoc {
    delta: Circle,
    alpha: Option<Circle>,
    beta: Option<Circle>,
    gamma: Option<Circle>,
    eps1: Option<Circle>,
    eps2: Option<Circle>,
    eps3: Option<Circle>,
    eps4: Option<Circle>,
    eps5: Option<Circle>,
    eps6: Option<Circle>,
}

impl ConfigDocument {
    fn new(cfg: &HagaConfig) -> ConfigDocument {
        let eps = cfg.circles_eps2_to_eps6().ok();
        let get = |i: usize| eps.as_ref().map(|e| e[i].clone());
        ConfigDocument {
            d: cfg.d.clone(),
            e: cfg.e.clone(),
            case: cfg.case,
            points: PointsDoc {
                a: cfg.point_a.clone(),
                b: cfg.point_b.clone(),
                c: cfg.point_c.clone(),
                d: cfg.point_d.clone(),
                e: cfg.point_e.clone(),
                f: cfg.f.clone(),
                g: cfg.g.clone(),
                h: cfg.h.clone(),
                b_prime: cfg.b_prime.clone(),
            },
            lengths: LengthsDoc {
                a: cfg.len_a.clone(),
                b: cfg.len_b.clone(),
                c: cfg.len_c.clone(),
                d: cfg.d.clone(),
                ef: cfg.ef_length().ok(),
                fg: cfg
                    .f
                    .as_ref()
                    .and_then(|f| f.dist_sq(&cfg.g).sqrt_exact().ok()),
                dh: cfg.point_d.dist_sq(&cfg.h).sqrt_exact().ok(),
            },
            circles: CirclesDoc {
                delta: cfg.circle_delta(),
                alpha: cfg.circle_alpha().ok(),
                beta: cfg.circle_beta().ok(),
                gamma: cfg.circle_gamma().ok(),
                eps1: cfg.circle_eps1().ok(),
                eps2: get(0),
                eps3: get(1),
                eps4: get(2),
                eps5: get(3),
                eps6: get(4),
            },
            foldable: cfg.is_physically_foldable(),
        }
    }
}

//! Incircle and excircles of right triangles in a canonical frame, plus the
//! subtended-angle and radius identities that hold between them.
//!
//! The canonical frame puts the right angle at the origin with the legs along
//! the positive axes; a rational rigid `Placement` carries canonical
//! coordinates onto the actual triangle. Placements are exact because every
//! triangle handled here has rational side lengths, so its leg directions are
//! rational unit vectors.

use crate::geom::{collinear, Circle, Line, Point};
use crate::{Error, Rat};

/// The four tritangent circles of a right triangle: the incircle, the
/// excircle opposite the right-angle vertex, and the excircles opposite the
/// far vertices of legs p and q.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum TritangentKind {
    Incircle,
    ExOppRight,
    ExOppP,
    ExOppQ,
}

impl TritangentKind {
    pub const ALL: [TritangentKind; 4] = [
        TritangentKind::Incircle,
        TritangentKind::ExOppRight,
        TritangentKind::ExOppP,
        TritangentKind::ExOppQ,
    ];
}

/// Rigid map from the canonical frame onto the plane: X ↦ origin + x·u + y·v
/// with u, v rational orthonormal vectors (reflections allowed).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Placement {
    pub origin: Point,
    pub u: (Rat, Rat),
    pub v: (Rat, Rat),
}

impl Placement {
    pub fn new(origin: Point, u: (Rat, Rat), v: (Rat, Rat)) -> Result<Self, Error> {
        let unit_u = (u.0.square() + u.1.square()) == Rat::one();
        let unit_v = (v.0.square() + v.1.square()) == Rat::one();
        let orth = (&u.0 * &v.0 + &u.1 * &v.1).is_zero();
        if !(unit_u && unit_v && orth) {
            return Err(Error::InvalidTriangle);
        }
        Ok(Placement { origin, u, v })
    }

    /// Identity placement: canonical frame sits at the origin.
    pub fn identity() -> Self {
        Placement {
            origin: Point::new(Rat::zero(), Rat::zero()),
            u: (Rat::one(), Rat::zero()),
            v: (Rat::zero(), Rat::one()),
        }
    }

    /// Axis-aligned placement with optional sign flips and axis swap.
    pub fn axis_aligned(origin: Point, sign_x: i64, sign_y: i64, swap_axes: bool) -> Self {
        assert!(sign_x == 1 || sign_x == -1);
        assert!(sign_y == 1 || sign_y == -1);
        let ex = (Rat::from_int(sign_x), Rat::zero());
        let ey = (Rat::zero(), Rat::from_int(sign_y));
        let (u, v) = if swap_axes { (ey, ex) } else { (ex, ey) };
        Placement { origin, u, v }
    }

    pub fn map(&self, x: &Rat, y: &Rat) -> Point {
        Point::new(
            &self.origin.x + &(x * &self.u.0) + y * &self.v.0,
            &self.origin.y + &(x * &self.u.1) + y * &self.v.1,
        )
    }
}

/// Right triangle with rational legs and rational hypotenuse, described in
/// the canonical frame together with its placement in the plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightTriangleFrame {
    leg_p: Rat,
    leg_q: Rat,
    hyp: Rat,
    placement: Placement,
}

impl RightTriangleFrame {
    /// Canonical triangle from two legs; fails with `NotASquare` when the
    /// hypotenuse is irrational.
    pub fn from_legs(leg_p: Rat, leg_q: Rat) -> Result<Self, Error> {
        Self::with_placement(leg_p, leg_q, Placement::identity())
    }

    pub fn with_placement(leg_p: Rat, leg_q: Rat, placement: Placement) -> Result<Self, Error> {
        if !leg_p.is_positive() || !leg_q.is_positive() {
            return Err(Error::InvalidTriangle);
        }
        let hyp = (leg_p.square() + leg_q.square()).sqrt_exact()?;
        Ok(RightTriangleFrame {
            leg_p,
            leg_q,
            hyp,
            placement,
        })
    }

    /// Frame from world vertices: the right angle at `right`, leg p ending at
    /// `p_end`, leg q at `q_end`. All three side lengths must be rational and
    /// the angle at `right` must be exactly 90°.
    pub fn from_vertices(right: &Point, p_end: &Point, q_end: &Point) -> Result<Self, Error> {
        let leg_p = right.dist_sq(p_end).sqrt_exact()?;
        let leg_q = right.dist_sq(q_end).sqrt_exact()?;
        if leg_p.is_zero() || leg_q.is_zero() {
            return Err(Error::InvalidTriangle);
        }
        let hyp_sq = p_end.dist_sq(q_end);
        if leg_p.square() + leg_q.square() != hyp_sq {
            return Err(Error::InvalidTriangle);
        }
        let hyp = hyp_sq.sqrt_exact()?;
        let u = ((&p_end.x - &right.x) / &leg_p, (&p_end.y - &right.y) / &leg_p);
        let v = ((&q_end.x - &right.x) / &leg_q, (&q_end.y - &right.y) / &leg_q);
        Ok(RightTriangleFrame {
            leg_p,
            leg_q,
            hyp,
            placement: Placement {
                origin: right.clone(),
                u,
                v,
            },
        })
    }

    pub fn leg_p(&self) -> &Rat {
        &self.leg_p
    }

    pub fn leg_q(&self) -> &Rat {
        &self.leg_q
    }

    pub fn hyp(&self) -> &Rat {
        &self.hyp
    }

    pub fn placement(&self) -> &Placement {
        &self.placement
    }

    pub fn semiperimeter(&self) -> Rat {
        (&self.leg_p + &self.leg_q + &self.hyp).half()
    }

    /// World position of the right-angle vertex.
    pub fn vertex_right(&self) -> Point {
        self.placement.origin.clone()
    }

    pub fn vertex_p(&self) -> Point {
        self.placement.map(&self.leg_p, &Rat::zero())
    }

    pub fn vertex_q(&self) -> Point {
        self.placement.map(&Rat::zero(), &self.leg_q)
    }

    pub fn side_lines(&self) -> [Line; 3] {
        let r = self.vertex_right();
        let p = self.vertex_p();
        let q = self.vertex_q();
        [
            Line::through(&r, &p).expect("distinct vertices"),
            Line::through(&r, &q).expect("distinct vertices"),
            Line::through(&p, &q).expect("distinct vertices"),
        ]
    }

    /// Radius of the tritangent circle of the given kind. In a right triangle
    /// with semiperimeter s the four radii are s−h, s, s−p and s−q.
    pub fn tritangent_radius(&self, kind: TritangentKind) -> Rat {
        let s = self.semiperimeter();
        match kind {
            TritangentKind::Incircle => s - &self.hyp,
            TritangentKind::ExOppRight => s,
            TritangentKind::ExOppP => s - &self.leg_p,
            TritangentKind::ExOppQ => s - &self.leg_q,
        }
    }

    /// The tritangent circle of the given kind, placed in the world frame.
    /// Centers sit at (±ρ, ±ρ) in canonical coordinates.
    pub fn tritangent_circle(&self, kind: TritangentKind) -> Circle {
        let r = self.tritangent_radius(kind);
        let (cx, cy) = match kind {
            TritangentKind::Incircle | TritangentKind::ExOppRight => (r.clone(), r.clone()),
            TritangentKind::ExOppP => (-&r, r.clone()),
            TritangentKind::ExOppQ => (r.clone(), -&r),
        };
        Circle::new(self.placement.map(&cx, &cy), r)
    }

    /// Identifies which tritangent circle `c` is, if any.
    pub fn kind_of(&self, c: &Circle) -> Option<TritangentKind> {
        TritangentKind::ALL
            .into_iter()
            .find(|&k| self.tritangent_circle(k) == *c)
    }

    /// The unique tritangent circle distinct from `known` whose center is
    /// collinear with `through` and the center of `known`. The four centers
    /// pair up two per vertex line (internal and external bisector), so the
    /// match is unique whenever `known` is itself tritangent and `through` is
    /// a vertex.
    pub fn tritangent_on_line(&self, through: &Point, known: &Circle) -> Result<Circle, Error> {
        if through == &known.center {
            return Err(Error::NoSuchCircle);
        }
        let mut found = None;
        for kind in TritangentKind::ALL {
            let candidate = self.tritangent_circle(kind);
            if candidate == *known {
                continue;
            }
            if collinear(through, &known.center, &candidate.center) {
                if found.is_some() {
                    return Err(Error::NoSuchCircle);
                }
                found = Some(candidate);
            }
        }
        found.ok_or(Error::NoSuchCircle)
    }

    /// The common tangent of the pair that is not a triangle side line; it is
    /// perpendicular to the hypotenuse. Only the four pairs with distinct
    /// radii admit one.
    pub fn common_tangent_perpendicular(
        &self,
        pair: (TritangentKind, TritangentKind),
    ) -> Result<Line, Error> {
        use TritangentKind::*;
        let normalized = match pair {
            (ExOppRight, ExOppP) | (ExOppP, ExOppRight) => (ExOppRight, ExOppP),
            (ExOppRight, ExOppQ) | (ExOppQ, ExOppRight) => (ExOppRight, ExOppQ),
            (Incircle, ExOppP) | (ExOppP, Incircle) => (Incircle, ExOppP),
            (Incircle, ExOppQ) | (ExOppQ, Incircle) => (Incircle, ExOppQ),
            _ => return Err(Error::UnsupportedPair),
        };
        let c1 = self.tritangent_circle(normalized.0);
        let c2 = self.tritangent_circle(normalized.1);
        // lines perpendicular to the hypotenuse: û·X = t with û along PQ
        let p = self.vertex_p();
        let q = self.vertex_q();
        let ux = (&q.x - &p.x) / &self.hyp;
        let uy = (&q.y - &p.y) / &self.hyp;
        let proj = |c: &Circle| &ux * &c.center.x + &uy * &c.center.y;
        let (p1, p2) = (proj(&c1), proj(&c2));
        for t1 in [&p1 + &c1.radius, &p1 - &c1.radius] {
            for t2 in [&p2 + &c2.radius, &p2 - &c2.radius] {
                if t1 == t2 {
                    return Ok(Line::new(ux.clone(), uy.clone(), -t1));
                }
            }
        }
        Err(Error::NoSuchCircle)
    }
}

/// Side lengths of a general triangle, in the convention a = |BC|, b = |CA|,
/// c = |AB| with the subtended angle taken at vertex A.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneralTriangleSides {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl GeneralTriangleSides {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self, Error> {
        let ok = a.is_positive()
            && b.is_positive()
            && c.is_positive()
            && (&a + &b) > c
            && (&b + &c) > a
            && (&c + &a) > b;
        if !ok {
            return Err(Error::InvalidTriangle);
        }
        Ok(GeneralTriangleSides { a, b, c })
    }

    fn semiperimeter(&self) -> Rat {
        (&self.a + &self.b + &self.c).half()
    }
}

/// sin²(θ/2) for the angle θ subtended from A by the chosen tritangent
/// circle, computed as |BZ|·|CY|/(b·c) from the tangent lengths at the touch
/// points on lines AB and CA. `ExOppRight` selects the excircle opposite A,
/// `ExOppP` opposite B, `ExOppQ` opposite C.
pub fn sin2_half_subtended(sides: &GeneralTriangleSides, kind: TritangentKind) -> Rat {
    let s = sides.semiperimeter();
    let (bz, cy) = match kind {
        TritangentKind::Incircle => (&s - &sides.b, &s - &sides.c),
        TritangentKind::ExOppRight => (&s - &sides.c, &s - &sides.b),
        TritangentKind::ExOppP => (s.clone(), &s - &sides.a),
        TritangentKind::ExOppQ => (&s - &sides.a, s.clone()),
    };
    bz * cy / (&sides.b * &sides.c)
}

/// Outcome of the four radius identities of a right triangle's tritangent
/// circles: rₐ = r + r_b + r_c, r·rₐ = r_b·r_c, and r plus each leg excircle
/// radius recovers the other leg.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HansenRelations {
    pub sum_ok: bool,
    pub product_ok: bool,
    pub leg_b_ok: bool,
    pub leg_c_ok: bool,
}

impl HansenRelations {
    pub fn all(&self) -> bool {
        self.sum_ok && self.product_ok && self.leg_b_ok && self.leg_c_ok
    }
}

pub fn hansen_relations(t: &RightTriangleFrame) -> HansenRelations {
    let r = t.tritangent_radius(TritangentKind::Incircle);
    let ra = t.tritangent_radius(TritangentKind::ExOppRight);
    let rp = t.tritangent_radius(TritangentKind::ExOppP);
    let rq = t.tritangent_radius(TritangentKind::ExOppQ);
    HansenRelations {
        sum_ok: ra == &r + &(&rp + &rq),
        product_ok: &r * &ra == &rp * &rq,
        leg_b_ok: &r + &rp == *t.leg_q(),
        leg_c_ok: &r + &rq == *t.leg_p(),
    }
}

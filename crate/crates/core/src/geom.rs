//! Exact 2D primitives and predicates.
//!
//! Everything here compares squared quantities or rationals known to be
//! rational, so every predicate is a decidable identity over `Rat`.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::{Error, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn dist_sq(&self, other: &Point) -> Rat {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        dx.square() + dy.square()
    }

    /// Reflects the point across `l`.
    pub fn reflect_in(&self, l: &Line) -> Point {
        let v = l.eval(self) / l.normal_norm_sq();
        let two = Rat::from_int(2);
        Point::new(&self.x - &(&two * &v) * &l.a, &self.y - (two * v) * &l.b)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new((&self.x + &other.x).half(), (&self.y + &other.y).half())
    }
}

/// Locus a·x + b·y + c = 0, canonically scaled so the leading nonzero
/// coefficient among (a, b) is +1. Canonical scaling makes `Line` equality
/// (and hence coincidence detection) decidable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Line {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl Line {
    /// Panics if both `a` and `b` are zero.
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        assert!(!(a.is_zero() && b.is_zero()), "degenerate line coefficients");
        let lead = if a.is_zero() { b.clone() } else { a.clone() };
        Line {
            a: &a / &lead,
            b: &b / &lead,
            c: &c / &lead,
        }
    }

    /// Line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Line, Error> {
        if p == q {
            return Err(Error::DegenerateInput);
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = -(&a * &p.x) - &b * &p.y;
        Ok(Line::new(a, b, c))
    }

    /// Perpendicular bisector of `pq`: the locus equidistant from both.
    pub fn perpendicular_bisector(p: &Point, q: &Point) -> Result<Line, Error> {
        if p == q {
            return Err(Error::DegenerateInput);
        }
        // 2(p - q)·X = |p|² - |q|²
        let a = Rat::from_int(2) * (&p.x - &q.x);
        let b = Rat::from_int(2) * (&p.y - &q.y);
        let c = q.x.square() + q.y.square() - p.x.square() - p.y.square();
        Ok(Line::new(a, b, c))
    }

    /// Signed value of the linear form at `p`; zero iff `p` is on the line.
    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn normal_norm_sq(&self) -> Rat {
        self.a.square() + self.b.square()
    }

    /// Squared distance from `p` to the line.
    pub fn dist_sq_to(&self, p: &Point) -> Rat {
        self.eval(p).square() / self.normal_norm_sq()
    }

    pub fn intersect(&self, other: &Line) -> LineIntersection {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            if self == other {
                LineIntersection::Coincident
            } else {
                LineIntersection::Parallel
            }
        } else {
            let x = (&self.b * &other.c - &other.b * &self.c) / &det;
            let y = (&other.a * &self.c - &self.a * &other.c) / det;
            LineIntersection::Point(Point::new(x, y))
        }
    }

    /// Exact tangency: (a·cx + b·cy + c)² = r²·(a² + b²).
    pub fn is_tangent_to(&self, circle: &Circle) -> bool {
        self.eval(&circle.center).square() == circle.radius.square() * self.normal_norm_sq()
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn foot_of_perpendicular(&self, p: &Point) -> Point {
        let v = self.eval(p) / self.normal_norm_sq();
        Point::new(&p.x - &(&v * &self.a), &p.y - v * &self.b)
    }

    pub fn is_perpendicular_to(&self, other: &Line) -> bool {
        (&self.a * &other.a + &self.b * &other.b).is_zero()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LineIntersection {
    Point(Point),
    Parallel,
    Coincident,
}

impl LineIntersection {
    pub fn point(self) -> Option<Point> {
        match self {
            LineIntersection::Point(p) => Some(p),
            _ => None,
        }
    }
}

/// Circle with nonnegative radius. Radius 0 encodes point-circles, which the
/// degenerate fold cases produce as first-class values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circle {
    pub center: Point,
    pub radius: Rat,
}

impl Circle {
    pub fn new(center: Point, radius: Rat) -> Self {
        assert!(!radius.is_negative(), "negative radius");
        Circle { center, radius }
    }

    pub fn point_circle(center: Point) -> Self {
        Circle::new(center, Rat::zero())
    }

    pub fn reflect_in(&self, l: &Line) -> Circle {
        Circle::new(self.center.reflect_in(l), self.radius.clone())
    }
}

/// Exact orientation test on (q - p, r - p); true iff the three points are
/// collinear.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    let ux = &q.x - &p.x;
    let uy = &q.y - &p.y;
    let vx = &r.x - &p.x;
    let vy = &r.y - &p.y;
    (ux * vy - uy * vx).is_zero()
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.x)?;
        seq.serialize_element(&self.y)?;
        seq.end()
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        seq.serialize_element(&self.a)?;
        seq.serialize_element(&self.b)?;
        seq.serialize_element(&self.c)?;
        seq.end()
    }
}

impl Serialize for Circle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("center", &self.center)?;
        map.serialize_entry("radius", &self.radius)?;
        map.end()
    }
}

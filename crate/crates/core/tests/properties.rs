//! Property tests for the exact kernel invariants and the fold construction.

use proptest::prelude::*;

use haga_core::{
    classify, hansen_relations, sin2_half_subtended, verify, CheckStatus, GeneralTriangleSides,
    HagaCase, HagaConfig, Line, Placement, Point, Rat, RightTriangleFrame, TritangentKind,
};

fn rational() -> impl Strategy<Value = Rat> {
    (-600i64..600, 1i64..40).prop_map(|(n, d)| Rat::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rat> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn positive_rational() -> impl Strategy<Value = Rat> {
    (1i64..400, 1i64..30).prop_map(|(n, d)| Rat::new(n, d))
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y))
}

fn line() -> impl Strategy<Value = Line> {
    (rational(), rational(), rational())
        .prop_filter("valid normal", |(a, b, _)| !a.is_zero() || !b.is_zero())
        .prop_map(|(a, b, c)| Line::new(a, b, c))
}

/// Scaled Pythagorean-triple legs (k(m²−n²), 2kmn): rational hypotenuse by
/// construction.
fn pythagorean_legs() -> impl Strategy<Value = (Rat, Rat)> {
    (2i64..25, 1i64..24, 1i64..20, 1i64..12)
        .prop_filter("m > n", |(m, n, _, _)| m > n)
        .prop_map(|(m, n, kn, kd)| {
            let k = Rat::new(kn, kd);
            (&k * &Rat::from_int(m * m - n * n), k * Rat::from_int(2 * m * n))
        })
}

fn placement() -> impl Strategy<Value = Placement> {
    (point(), prop::bool::ANY, prop::bool::ANY, prop::bool::ANY).prop_map(
        |(origin, flip_x, flip_y, swap)| {
            Placement::axis_aligned(
                origin,
                if flip_x { -1 } else { 1 },
                if flip_y { -1 } else { 1 },
                swap,
            )
        },
    )
}

proptest! {
    #[test]
    fn reflect_point_is_an_involution(p in point(), l in line()) {
        prop_assert_eq!(p.reflect_in(&l).reflect_in(&l), p);
    }

    #[test]
    fn reflected_point_mirrors_across_the_line(p in point(), l in line()) {
        let r = p.reflect_in(&l);
        // midpoint on the line, displacement parallel to the normal
        prop_assert!(l.contains(&p.midpoint(&r)));
        let dx = &r.x - &p.x;
        let dy = &r.y - &p.y;
        prop_assert!((dx * &l.b - dy * &l.a).is_zero());
    }

    #[test]
    fn perpendicular_bisector_is_equidistant(p in point(), q in point()) {
        prop_assume!(p != q);
        let l = Line::perpendicular_bisector(&p, &q).unwrap();
        prop_assert!(l.contains(&p.midpoint(&q)));
        // three sample points along the line
        let on_line = if l.b.is_zero() {
            Point::new(-&l.c / &l.a, Rat::zero())
        } else {
            Point::new(Rat::zero(), -&l.c / &l.b)
        };
        for t in [Rat::from_int(1), Rat::from_int(-2), Rat::new(5, 7)] {
            let sample = Point::new(&on_line.x + &(&t * &l.b), &on_line.y - &t * &l.a);
            prop_assert_eq!(sample.dist_sq(&p), sample.dist_sq(&q));
        }
    }

    #[test]
    fn line_intersection_has_zero_residue(l1 in line(), l2 in line()) {
        if let haga_core::LineIntersection::Point(p) = l1.intersect(&l2) {
            prop_assert!(l1.eval(&p).is_zero());
            prop_assert!(l2.eval(&p).is_zero());
        }
    }

    #[test]
    fn sqrt_of_square_is_abs(x in rational()) {
        prop_assert_eq!(x.square().sqrt_exact().unwrap(), x.abs());
    }

    #[test]
    fn tangency_survives_coefficient_rescaling(
        l in line(),
        k in nonzero_rational(),
        center in point(),
        r in positive_rational(),
    ) {
        let scaled = Line::new(&l.a * &k, &l.b * &k, &l.c * &k);
        prop_assert_eq!(&scaled, &l);
        let c = haga_core::Circle::new(center, r);
        prop_assert_eq!(scaled.is_tangent_to(&c), l.is_tangent_to(&c));
    }

    #[test]
    fn tritangent_circles_touch_all_side_lines(
        (p, q) in pythagorean_legs(),
        placement in placement(),
    ) {
        let t = RightTriangleFrame::with_placement(p, q, placement).unwrap();
        let sides = t.side_lines();
        for kind in TritangentKind::ALL {
            let c = t.tritangent_circle(kind);
            for side in &sides {
                prop_assert!(side.is_tangent_to(&c));
            }
        }
    }

    #[test]
    fn hansen_relations_hold((p, q) in pythagorean_legs()) {
        let t = RightTriangleFrame::from_legs(p, q).unwrap();
        prop_assert!(hansen_relations(&t).all());
    }

    #[test]
    fn subtended_angle_cases_are_complementary(
        x in positive_rational(),
        y in positive_rational(),
        z in positive_rational(),
    ) {
        // (y+z, z+x, x+y) always satisfies the strict triangle inequality
        let sides = GeneralTriangleSides::new(&y + &z, &z + &x, &x + &y).unwrap();
        let one = Rat::one();
        prop_assert_eq!(
            sin2_half_subtended(&sides, TritangentKind::Incircle)
                + sin2_half_subtended(&sides, TritangentKind::ExOppQ),
            one.clone()
        );
        prop_assert_eq!(
            sin2_half_subtended(&sides, TritangentKind::ExOppRight)
                + sin2_half_subtended(&sides, TritangentKind::ExOppP),
            one
        );
    }

    #[test]
    fn tritangent_on_line_selects_a_distinct_scale_covariant_circle(
        (p, q) in pythagorean_legs(),
        k in (1i64..30, 1i64..10).prop_map(|(n, d)| Rat::new(n, d)),
        kind_idx in 0usize..4,
        vertex_idx in 0usize..3,
    ) {
        let t = RightTriangleFrame::from_legs(p.clone(), q.clone()).unwrap();
        let known = t.tritangent_circle(TritangentKind::ALL[kind_idx]);
        let vertex = [t.vertex_right(), t.vertex_p(), t.vertex_q()][vertex_idx].clone();
        let picked = t.tritangent_on_line(&vertex, &known).unwrap();
        prop_assert_ne!(&picked, &known);
        // uniform scaling selects the same kind
        let scaled = RightTriangleFrame::from_legs(&p * &k, &q * &k).unwrap();
        let known_s = scaled.tritangent_circle(TritangentKind::ALL[kind_idx]);
        let vertex_s = [scaled.vertex_right(), scaled.vertex_p(), scaled.vertex_q()][vertex_idx].clone();
        let picked_s = scaled.tritangent_on_line(&vertex_s, &known_s).unwrap();
        prop_assert_eq!(scaled.kind_of(&picked_s).unwrap(), t.kind_of(&picked).unwrap());
    }

    #[test]
    fn fold_isometry_and_tangency(d in positive_rational(), e in rational()) {
        let cfg = HagaConfig::build(d.clone(), e).unwrap();
        prop_assert_eq!(cfg.b_prime.dist_sq(&cfg.point_e), d.square());
        prop_assert!(cfg.line_eb_prime().unwrap().is_tangent_to(&cfg.circle_delta()));
    }

    #[test]
    fn every_configuration_verifies(d in positive_rational(), e in rational()) {
        let cfg = HagaConfig::build(d, e).unwrap();
        let report = verify(&cfg);
        prop_assert!(!report.has_fail(), "{:#?}", report);
        for entry in &report.checks {
            prop_assert!(
                matches!(entry.status, CheckStatus::Pass | CheckStatus::NotApplicable(_))
            );
        }
    }

    #[test]
    fn build_is_scale_equivariant(
        d in positive_rational(),
        e in rational(),
        k in (1i64..50, 1i64..20).prop_map(|(n, dd)| Rat::new(n, dd)),
    ) {
        let base = HagaConfig::build(d.clone(), e.clone()).unwrap();
        let scaled = HagaConfig::build(&d * &k, &e * &k).unwrap();
        prop_assert_eq!(scaled.case, base.case);
        prop_assert_eq!(&scaled.len_b, &(&base.len_b * &k));
        prop_assert_eq!(scaled.len_a.clone(), base.len_a.clone().map(|a| &a * &k));
        prop_assert_eq!(scaled.len_c.clone(), base.len_c.clone().map(|c| &c * &k));
        if base.case != HagaCase::H2 {
            let base_set = base.circle_set().unwrap();
            let scaled_set = scaled.circle_set().unwrap();
            prop_assert_eq!(scaled_set.alpha.radius, &base_set.alpha.radius * &k);
            prop_assert_eq!(scaled_set.eps1.radius, &base_set.eps1.radius * &k);
            prop_assert_eq!(scaled_set.eps5.radius, &base_set.eps5.radius * &k);
            prop_assert_eq!(scaled_set.eps6.radius, &base_set.eps6.radius * &k);
        }
    }

    #[test]
    fn classification_is_total_and_boundary_exact(d in positive_rational(), e in rational()) {
        let case = classify(&d, &e).unwrap();
        let two_d = Rat::from_int(2) * &d;
        let expected = if e > two_d {
            HagaCase::H1
        } else if e == two_d {
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
        };
        prop_assert_eq!(case, expected);
    }
}

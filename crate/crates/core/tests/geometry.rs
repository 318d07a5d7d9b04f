//! Plane geometry over exact rational disks.
//!
//! Decisions are compared with closed-form arithmetic written here and with
//! rational points on circles from the Pythagorean parametrization, which
//! can refute containment but never confirm it.

use mereotopo::geom::{
    ball_pt, between, check_tarski_postulates, closure_g, concent, convexity_counterexample,
    convexity_counterexample_along, diametral, ext_region, ext_tangent, hausdorff_separation, int_tangent,
    interior_point, part_of_region, probe_pair, sat_interior_point, separation_radius, Ball, Budget, Containment3,
    Diametral, PointClass, Region, RegionExpr,
};
use mereotopo::Rat;
use proptest::prelude::*;

fn b(x: i64, y: i64, r: i64) -> Ball {
    Ball::new(x, y, r).unwrap()
}

fn q(x: Rat, y: Rat, r: Rat) -> Ball {
    Ball::new(x, y, r).unwrap()
}

fn region(balls: Vec<Ball>) -> Region {
    Region::new(balls).unwrap()
}

fn budget(d: u32) -> Budget {
    Budget::new(d).unwrap()
}

fn d2(p: &PointClass, c: &Ball) -> Rat {
    let (dx, dy) = (&p.x - c.cx(), &p.y - c.cy());
    dx.square() + dy.square()
}

/// Rational points on the circle of `c`, one per parameter `t`.
fn circle_points(c: &Ball, n: i64) -> Vec<PointClass> {
    (-n..=n)
        .flat_map(|k| {
            let t = Rat::new(k, n);
            let den = Rat::one() + t.square();
            let (u, v) = ((Rat::one() - t.square()) / den.clone(), (Rat::int(2) * t) / den);
            [(u.clone(), v.clone()), (-u, -v)]
        })
        .map(|(u, v)| PointClass { x: c.cx() + &(c.r() * &u), y: c.cy() + &(c.r() * &v) })
        .collect()
}

#[test]
fn internal_tangency_keeps_containment() {
    assert!(ball_pt(&b(1, 0, 1), &b(0, 0, 2)));
    assert!(int_tangent(&b(1, 0, 1), &b(0, 0, 2)));
    assert!(!int_tangent(&b(0, 0, 2), &b(1, 0, 1)));
}

#[test]
fn external_diametral_triple() {
    assert!(diametral(Diametral::External, &b(-2, 0, 1), &b(0, 0, 1), &b(2, 0, 1)));
    assert!(!diametral(Diametral::External, &b(-2, 0, 1), &b(0, 0, 1), &b(0, 2, 1)));
}

#[test]
fn gap_cover_has_exact_witness() {
    let ball = b(0, 0, 1);
    let f = Rat::new(3, 5);
    let cover = region(vec![q(-f.clone(), Rat::zero(), Rat::one()), q(f, Rat::zero(), Rat::one())]);
    // (0, 1) is 34/25 away from both centers, squared
    assert_eq!(d2(&PointClass::new(0, 1), &cover.balls()[0]), Rat::new(34, 25));
    match part_of_region(&ball, &cover, budget(12)) {
        Containment3::NotContained(w) => {
            assert!(d2(&w, &ball) <= Rat::one());
            assert!(cover.balls().iter().all(|c| d2(&w, c) > c.r().square()));
        }
        other => panic!("expected a witness, got {other}"),
    }
}

#[test]
fn rotated_tangency_cover_is_unknown_and_monotone() {
    let (x, y) = (Rat::new(9, 20), Rat::new(3, 5));
    let cover = region(vec![q(-x.clone(), -y.clone(), Rat::new(5, 4)), q(x, y, Rat::new(5, 4))]);
    let ball = b(0, 0, 1);
    for d in [1, 2, 4, 8, 12] {
        let r = part_of_region(&ball, &cover, budget(d));
        assert!(!r.is_not_contained(), "depth {d}: {r}");
        assert!(r.is_unknown(), "crossing points are off the grid, depth {d}");
    }
}

#[test]
fn external_tangency_is_disjoint() {
    assert!(ext_region(&region(vec![b(0, 0, 1)]), &region(vec![b(2, 0, 1)])));
    assert!(!ext_region(&region(vec![b(0, 0, 1)]), &region(vec![b(1, 0, 1)])));
}

#[test]
fn tangency_point_is_not_interior() {
    let two = region(vec![b(0, 0, 1), b(2, 0, 1)]);
    assert!(!interior_point(&b(1, 0, 1), &two));
    assert!(interior_point(&b(0, 0, 1), &two));
}

#[test]
fn boundary_point_is_in_closure() {
    let cl = closure_g(&RegionExpr::Balls(region(vec![b(0, 0, 1)]))).unwrap();
    assert!(cl.contains(&PointClass::new(1, 0)));
    assert!(!cl.contains(&PointClass::new(2, 0)));
}

#[test]
fn hausdorff_radius_examples() {
    let o = PointClass::new(0, 0);
    assert_eq!(separation_radius(&o, &PointClass::new(2, 0)).unwrap(), Rat::new(1, 2));
    assert_eq!(separation_radius(&o, &PointClass::new(1, 1)).unwrap(), Rat::new(1, 4));
    let (h1, h2) = hausdorff_separation(&o, &PointClass::new(2, 0)).unwrap();
    assert!(ext_region(&Region::from_ball(h1), &Region::from_ball(h2)));
}

#[test]
fn convexity_examples() {
    let apart = region(vec![b(0, 0, 1), b(4, 0, 1)]);
    let w = convexity_counterexample(&apart, 16, 0).expect("gap between the balls");
    assert!(d2(w.middle.center(), &apart.balls()[0]) >= Rat::one());
    assert!(between(&w.middle, &w.first, &w.last));

    let lens = region(vec![b(0, 0, 1), b(1, 0, 1)]);
    let axis: Vec<(Ball, Ball)> = (-3..=7)
        .flat_map(|i| (i + 1..=7).map(move |j| (i, j)))
        .map(|(i, j)| probe_pair(PointClass::new(Rat::new(i, 4), 0), PointClass::new(Rat::new(j, 4), 0), Rat::new(1, 8)))
        .collect();
    assert!(convexity_counterexample_along(&lens, &axis).is_none());
}

#[test]
fn tarski_on_constructed_pairs() {
    let r = check_tarski_postulates(&region(vec![b(0, 0, 2), b(3, 0, 1), b(1, 1, 1)]), budget(12));
    assert!(r.passed(), "{r}");
    assert!(r.p4_contained >= 7 && r.p4_violations == 0);
}

fn coord() -> impl Strategy<Value = Rat> {
    (-40i64..=40).prop_map(|n| Rat::new(n, 4))
}

fn radius() -> impl Strategy<Value = Rat> {
    (1i64..=16).prop_map(|n| Rat::new(n, 4))
}

fn ball() -> impl Strategy<Value = Ball> {
    (coord(), coord(), radius()).prop_map(|(x, y, r)| q(x, y, r))
}

fn similarity() -> impl Strategy<Value = (Rat, Rat, Rat)> {
    ((1i64..=9, 1i64..=5), coord(), coord()).prop_map(|((n, d), x, y)| (Rat::new(n, d), x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ball_pt_refuted_only_when_false(a in ball(), c in ball()) {
        // a boundary point of a strictly outside the closed c refutes containment
        let outside = circle_points(&a, 12).iter().any(|p| d2(p, &c) > c.r().square());
        if outside {
            prop_assert!(!ball_pt(&a, &c));
        }
        if ball_pt(&a, &c) {
            prop_assert!(a.r() <= c.r());
        }
    }

    #[test]
    fn single_ball_cover_agrees_with_ball_pt(a in ball(), c in ball()) {
        match part_of_region(&a, &Region::from_ball(c.clone()), budget(10)).decided() {
            Some(v) => prop_assert_eq!(v, ball_pt(&a, &c)),
            None => prop_assert!(int_tangent(&a, &c) || a == c, "unknown on {} in {}", a, c),
        }
    }

    #[test]
    fn decisions_survive_refutation(a in ball(), c1 in ball(), c2 in ball()) {
        let cover = region(vec![c1, c2]);
        match part_of_region(&a, &cover, budget(8)) {
            Containment3::Contained => {
                for p in circle_points(&a, 10) {
                    prop_assert!(cover.balls().iter().any(|c| d2(&p, c) <= c.r().square()));
                }
            }
            Containment3::NotContained(w) => {
                prop_assert!(d2(&w, &a) <= a.r().square());
                prop_assert!(cover.balls().iter().all(|c| d2(&w, c) > c.r().square()));
            }
            Containment3::Unknown(_) => {}
        }
        let sat = sat_interior_point(&a, &cover, budget(8));
        prop_assert_eq!(sat, part_of_region(&a, &cover, budget(8)));
    }

    #[test]
    fn predicates_are_similarity_invariant(a in ball(), c in ball(), e in ball(), (s, dx, dy) in similarity()) {
        let t = |x: &Ball| x.similar(&s, &dx, &dy);
        prop_assert_eq!(ball_pt(&a, &c), ball_pt(&t(&a), &t(&c)));
        prop_assert_eq!(ext_tangent(&a, &c), ext_tangent(&t(&a), &t(&c)));
        prop_assert_eq!(int_tangent(&a, &c), int_tangent(&t(&a), &t(&c)));
        prop_assert_eq!(concent(&a, &c), concent(&t(&a), &t(&c)));
        prop_assert_eq!(between(&a, &c, &e), between(&t(&a), &t(&c), &t(&e)));
        for kind in [Diametral::External, Diametral::Internal] {
            prop_assert_eq!(diametral(kind, &a, &c, &e), diametral(kind, &t(&a), &t(&c), &t(&e)));
        }
    }

    #[test]
    fn separation_radius_formula(x1 in -50i64..50, y1 in -50i64..50, x2 in -50i64..50, y2 in -50i64..50) {
        prop_assume!((x1, y1) != (x2, y2));
        let (dx, dy) = (x2 - x1, y2 - y1);
        let rho = Rat::new(dx * dx + dy * dy, 4 * (dx.abs() + dy.abs()));
        let (p1, p2) = (PointClass::new(x1, y1), PointClass::new(x2, y2));
        prop_assert_eq!(separation_radius(&p1, &p2).unwrap(), rho.clone());
        // the two balls leave a gap: (2 rho)^2 < d^2
        prop_assert!(Rat::int(4) * rho.square() < Rat::int(dx * dx + dy * dy));
    }

    #[test]
    fn concent_is_an_equivalence(a in ball(), r1 in radius(), r2 in radius()) {
        let (c1, c2) = (Ball::at(a.point(), r1).unwrap(), Ball::at(a.point(), r2).unwrap());
        prop_assert!(concent(&a, &a));
        prop_assert!(concent(&a, &c1) && concent(&c1, &a));
        prop_assert!(concent(&c1, &c2));
    }
}

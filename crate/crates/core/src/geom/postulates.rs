//! Tarski's postulates 2–4 and the region lemmas, checked on a given region.

use std::fmt;

use crate::rat::Rat;

use super::ball::Ball;
use super::containment::{part_of_region, region_equiv, region_part_of, Budget, Containment3};
use super::expr::RegionExpr;
use super::region::{interior_point, interior_point_at, Region};

#[derive(Debug, Clone)]
pub struct TarskiReport {
    /// The interior points of `Q` form a nonempty class realized by a region.
    pub p2: bool,
    /// A ball generating one of those interior points.
    pub p2_witness: Option<Ball>,
    /// The class of interior points is itself a region equal to `Q`.
    pub p3: bool,
    pub p4_pairs: usize,
    pub p4_contained: usize,
    pub p4_unknown: usize,
    pub p4_violations: usize,
    pub any_ball_is_a_region: bool,
    pub whole_space_is_a_region: bool,
    pub any_region_includes_balls: bool,
}

impl TarskiReport {
    pub fn passed(&self) -> bool {
        self.p2
            && self.p3
            && self.p4_violations == 0
            && self.any_ball_is_a_region
            && self.whole_space_is_a_region
            && self.any_region_includes_balls
    }
}

impl fmt::Display for TarskiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(f, "P2 {}", mark(self.p2))?;
        writeln!(f, "P3 {}", mark(self.p3))?;
        writeln!(
            f,
            "P4 {} ({} pairs, {} contained, {} unknown, {} violations)",
            mark(self.p4_violations == 0),
            self.p4_pairs,
            self.p4_contained,
            self.p4_unknown,
            self.p4_violations
        )?;
        writeln!(f, "any_ball_is_a_region {}", mark(self.any_ball_is_a_region))?;
        writeln!(f, "whole_space_is_a_region {}", mark(self.whole_space_is_a_region))?;
        write!(f, "any_region_includes_balls {}", mark(self.any_region_includes_balls))
    }
}

/// Sub-regions of `q` built from its own balls: every nonempty subset (up
/// to six balls) and the concentric half-radius copies.
pub fn inclusion_pairs(q: &Region) -> Vec<Region> {
    let balls = q.balls();
    let n = balls.len().min(6);
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let sub: Vec<Ball> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| balls[i].clone()).collect();
        out.push(Region::new(sub).expect("nonempty subset"));
    }
    let halves: Vec<Ball> = balls
        .iter()
        .map(|b| Ball::at(b.point(), b.r() * &Rat::new(1, 2)).expect("positive"))
        .collect();
    out.push(Region::new(halves).expect("nonempty"));
    out
}

/// Probe centers for interior-point inclusion: each ball center and the
/// four points at half radius along the axes.
fn probe_points(p: &Region) -> Vec<super::ball::PointClass> {
    let mut pts = Vec::new();
    for b in p.balls() {
        let h = b.r() * &Rat::new(1, 2);
        pts.push(b.point());
        for (dx, dy) in [(&h, &Rat::zero()), (&Rat::zero(), &h)] {
            pts.push(super::ball::PointClass { x: b.cx() + dx, y: b.cy() + dy });
            pts.push(super::ball::PointClass { x: b.cx() - dx, y: b.cy() - dy });
        }
    }
    pts
}

pub fn check_tarski_postulates(q: &Region, budget: Budget) -> TarskiReport {
    // P2: every center of q is interior; q's own balls realize the class
    let p2_witness = q.balls().iter().find(|b| interior_point(b, q)).cloned();
    let p2 = p2_witness.is_some() && q.balls().iter().all(|b| interior_point(b, q));

    // P3: the m-class of interior points, realized as the pruned ball set, is
    // a region equal to q
    let klass = q.pruned();
    let p3 = !klass.balls().is_empty() && region_equiv(&klass, q, budget);

    let (mut pairs, mut contained, mut unknown, mut violations) = (0, 0, 0, 0);
    for p in inclusion_pairs(q) {
        let included = probe_points(&p)
            .iter()
            .filter(|c| interior_point_at(c, &p))
            .all(|c| interior_point_at(c, q));
        if !included {
            continue;
        }
        pairs += 1;
        match region_part_of(&p, q, budget) {
            Containment3::Contained => contained += 1,
            Containment3::Unknown(_) => unknown += 1,
            Containment3::NotContained(_) => violations += 1,
        }
    }

    let any_ball_is_a_region = q.balls().iter().all(|b| {
        let r = Region::from_ball(b.clone());
        region_part_of(&r, &r, budget).is_contained()
    });
    let whole_space_is_a_region = RegionExpr::Whole.is_regular_open();
    let any_region_includes_balls = q
        .balls()
        .iter()
        .any(|c| part_of_region(c, q, budget).is_contained());

    TarskiReport {
        p2,
        p2_witness,
        p3,
        p4_pairs: pairs,
        p4_contained: contained,
        p4_unknown: unknown,
        p4_violations: violations,
        any_ball_is_a_region,
        whole_space_is_a_region,
        any_region_includes_balls,
    }
}

//! Sampled search for violations of region convexity.
//!
//! A region is convex when every point between two of its saturated
//! interior points is again an interior point. The search is sound (every
//! witness returned is a genuine violation) but not complete.

use rand::Rng as _;
use rand::SeedableRng;

use crate::kuratowski::Rng;
use crate::rat::Rat;

use super::ball::{between, Ball, PointClass};
use super::containment::{sat_interior_point, Budget};
use super::region::{interior_point_at, Region};

/// Two saturated interior points of a region and a ball between them whose
/// point is not interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityWitness {
    pub first: Ball,
    pub middle: Ball,
    pub last: Ball,
}

const PROBE_BUDGET: u32 = 8;

fn check_pair(q: &Region, a: &Ball, c: &Ball) -> Option<ConvexityWitness> {
    if a.center() == c.center() {
        return None;
    }
    let budget = Budget::new(PROBE_BUDGET).expect("positive");
    if !sat_interior_point(a, q, budget).is_contained() || !sat_interior_point(c, q, budget).is_contained() {
        return None;
    }
    // midpoint first
    for k in [4, 2, 6, 1, 3, 5, 7] {
        let m = a.center().lerp(c.center(), &Rat::new(k, 8));
        if !interior_point_at(&m, q) {
            let middle = Ball::at(m, a.r().clone()).expect("positive radius");
            debug_assert!(between(&middle, a, c));
            return Some(ConvexityWitness {
                first: a.clone(),
                middle,
                last: c.clone(),
            });
        }
    }
    None
}

/// Check the given pairs of probe balls.
pub fn convexity_counterexample_along(q: &Region, pairs: &[(Ball, Ball)]) -> Option<ConvexityWitness> {
    pairs.iter().find_map(|(a, c)| check_pair(q, a, c))
}

fn random_inner_ball(q: &Region, rng: &mut Rng) -> Ball {
    let b = &q.balls()[rng.gen_range(0..q.balls().len())];
    loop {
        let u = rng.gen_range(-7i64..=7);
        let v = rng.gen_range(-7i64..=7);
        if u * u + v * v < 49 {
            let x = b.cx() + &(b.r() * &Rat::new(u, 8));
            let y = b.cy() + &(b.r() * &Rat::new(v, 8));
            return Ball::new(x, y, b.r() * &Rat::new(1, 16)).expect("positive radius");
        }
    }
}

/// Probe pairs of ball centers first, then `samples` random pairs of small
/// balls inside the region.
pub fn convexity_counterexample(q: &Region, samples: usize, seed: u64) -> Option<ConvexityWitness> {
    let half = |b: &Ball| Ball::at(b.point(), b.r() * &Rat::new(1, 2)).expect("positive radius");
    let centers: Vec<(Ball, Ball)> = q
        .balls()
        .iter()
        .enumerate()
        .flat_map(|(i, a)| q.balls()[i + 1..].iter().map(move |c| (half(a), half(c))))
        .collect();
    if let Some(w) = convexity_counterexample_along(q, &centers) {
        return Some(w);
    }
    let mut rng = Rng::seed_from_u64(seed);
    (0..samples).find_map(|_| {
        let a = random_inner_ball(q, &mut rng);
        let c = random_inner_ball(q, &mut rng);
        check_pair(q, &a, &c)
    })
}

/// Convenience for a point-pair probe.
pub fn probe_pair(a: PointClass, c: PointClass, r: Rat) -> (Ball, Ball) {
    (Ball::at(a, r.clone()).expect("positive"), Ball::at(c, r).expect("positive"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_disk_is_convex() {
        let q = Region::from_ball(Ball::new(0, 0, 1).unwrap());
        assert_eq!(convexity_counterexample(&q, 200, 3), None);
    }

    #[test]
    fn separated_disks_are_not() {
        let q = Region::new(vec![Ball::new(0, 0, 1).unwrap(), Ball::new(4, 0, 1).unwrap()]).unwrap();
        let w = convexity_counterexample(&q, 10, 3).expect("witness");
        assert!(between(&w.middle, &w.first, &w.last));
        assert!(!interior_point_at(w.middle.center(), &q));
        assert_eq!(*w.middle.center(), PointClass::new(2, 0));
    }

    #[test]
    fn overlapping_pair_along_the_axis() {
        let q = Region::new(vec![Ball::new(0, 0, 1).unwrap(), Ball::new(1, 0, 1).unwrap()]).unwrap();
        let r = Rat::new(1, 8);
        let pairs: Vec<_> = (-6..=14)
            .step_by(4)
            .flat_map(|a| (-6..=14).step_by(4).map(move |c| (a, c)))
            .map(|(a, c)| {
                probe_pair(PointClass::new(Rat::new(a, 8), 0), PointClass::new(Rat::new(c, 8), 0), r.clone())
            })
            .collect();
        assert_eq!(convexity_counterexample_along(&q, &pairs), None);
    }
}

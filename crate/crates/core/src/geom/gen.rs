//! Seeded generators for geometric fixtures.
//!
//! Coordinates live on a quarter grid so that tangencies, shared circles and
//! boundary-centered probes occur often enough to exercise the exact paths.

use rand::seq::SliceRandom;
use rand::Rng as _;

use crate::kuratowski::Rng;
use crate::rat::Rat;

use super::ball::{Ball, PointClass};
use super::region::Region;

pub fn random_point(rng: &mut Rng) -> PointClass {
    PointClass::new(Rat::new(rng.gen_range(-32..=32), 4), Rat::new(rng.gen_range(-32..=32), 4))
}

pub fn random_ball(rng: &mut Rng) -> Ball {
    let r = Rat::new(rng.gen_range(1..=12), 4);
    Ball::at(random_point(rng), r).expect("positive radius")
}

/// A region of `1..=max_balls` balls. Later balls are usually placed near an
/// earlier one so that regions tend to be connected.
pub fn random_region(rng: &mut Rng, max_balls: usize) -> Region {
    let n = rng.gen_range(1..=max_balls.max(1));
    let mut balls = vec![random_ball(rng)];
    while balls.len() < n {
        if rng.gen_bool(0.7) {
            let anchor = balls.choose(rng).expect("nonempty").clone();
            let dx = Rat::new(rng.gen_range(-8..=8), 4);
            let dy = Rat::new(rng.gen_range(-8..=8), 4);
            let r = Rat::new(rng.gen_range(1..=8), 4);
            balls.push(Ball::new(anchor.cx() + &dx, anchor.cy() + &dy, r).expect("positive"));
        } else {
            balls.push(random_ball(rng));
        }
    }
    Region::new(balls).expect("nonempty")
}

/// A random similarity `p ↦ s·p + (dx, dy)` with `s > 0`.
pub fn random_similarity(rng: &mut Rng) -> (Rat, Rat, Rat) {
    let s = Rat::new(rng.gen_range(1..=12), rng.gen_range(1..=6));
    let dx = Rat::new(rng.gen_range(-40..=40), rng.gen_range(1..=5));
    let dy = Rat::new(rng.gen_range(-40..=40), rng.gen_range(1..=5));
    (s, dx, dy)
}

/// A ball with a two-ball cover whose ground truth is known analytically.
#[derive(Debug, Clone)]
pub struct TangencyCover {
    pub ball: Ball,
    pub cover: Region,
    pub contained: bool,
    pub kind: CoverKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    /// The cover circles cross exactly on the ball's circle.
    Exact,
    /// Cover radii shrunk slightly: a sliver of the ball is uncovered.
    Short,
    /// Cover radii grown slightly: covered with a margin.
    Long,
}

const TRIPLES: [(i64, i64); 8] = [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 4), (6, 5)];

/// Rational rotations `(cos, sin)` as `(num, num, den)`.
const ROTATIONS: [(i64, i64, i64); 8] = [
    (1, 0, 1),
    (0, 1, 1),
    (3, 4, 5),
    (4, 3, 5),
    (-3, 4, 5),
    (5, 12, 13),
    (12, -5, 13),
    (8, 15, 17),
];

/// Unit ball at the origin covered by `B((±a, 0), R)` with
/// `a = (m² - n²) / 2mn` and `R = (m² + n²) / 2mn`, so `R² = a² + 1` and both
/// cover circles pass through `(0, ±1)`. For `x ≥ 0` a point of the unit disk
/// satisfies `(x - a)² + y² ≤ 1 + a² - 2ax ≤ R²`, hence the exact cover
/// contains the ball. Rotated by a rational angle, then scaled and
/// translated. Off-axis rotations move the crossing points off the dyadic
/// subdivision grid.
pub fn tangency_cover(rng: &mut Rng, kind: CoverKind) -> TangencyCover {
    let (m, n) = *TRIPLES.choose(rng).expect("nonempty");
    let a = Rat::new(m * m - n * n, 2 * m * n);
    let big_r = Rat::new(m * m + n * n, 2 * m * n);
    let eps = Rat::new(1, rng.gen_range(16..=64));
    let cover_r = match kind {
        CoverKind::Exact => big_r,
        CoverKind::Short => &big_r - &eps,
        CoverKind::Long => &big_r + &eps,
    };
    let (c, sn, den) = *ROTATIONS.choose(rng).expect("nonempty");
    let (cos, sin) = (Rat::new(c, den), Rat::new(sn, den));
    let place = |x: Rat, y: Rat| (&(&cos * &x) - &(&sin * &y), &(&sin * &x) + &(&cos * &y));
    let (s, dx, dy) = random_similarity(rng);
    let mk = |x: Rat, y: Rat, r: Rat| {
        let (x, y) = place(x, y);
        Ball::new(x, y, r).expect("positive").similar(&s, &dx, &dy)
    };
    let ball = mk(Rat::zero(), Rat::zero(), Rat::one());
    let cover = Region::new(vec![
        mk(-a.clone(), Rat::zero(), cover_r.clone()),
        mk(a, Rat::zero(), cover_r),
    ])
    .expect("nonempty");
    TangencyCover {
        ball,
        cover,
        contained: kind != CoverKind::Short,
        kind,
    }
}

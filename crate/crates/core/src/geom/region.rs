use std::cmp::Ordering;
use std::fmt;

use crate::rat::Rat;

use super::ball::{ball_pt, cross, dot, Ball, PointClass};
use super::GeomError;

/// A nonempty finite set of balls, read as the regular open set
/// `int(cl(⋃ balls))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Region {
    balls: Vec<Ball>,
}

impl Region {
    pub fn new(balls: Vec<Ball>) -> Result<Self, GeomError> {
        if balls.is_empty() {
            return Err(GeomError::EmptyRegion);
        }
        Ok(Region { balls })
    }

    /// Every ball is a region.
    pub fn from_ball(b: Ball) -> Self {
        Region { balls: vec![b] }
    }

    pub fn balls(&self) -> &[Ball] {
        &self.balls
    }

    /// Drop balls that are part of another ball of the region. The
    /// denoted set is unchanged.
    pub fn pruned(&self) -> Region {
        let mut keep: Vec<Ball> = Vec::new();
        for (i, b) in self.balls.iter().enumerate() {
            let redundant = self.balls.iter().enumerate().any(|(j, o)| {
                // among equal balls keep the first
                j != i && ball_pt(b, o) && (b != o || j < i)
            });
            if !redundant {
                keep.push(b.clone());
            }
        }
        Region { balls: keep }
    }

    /// `p ∈ ⋃ cl(B_i)`, the closure of the region.
    pub fn closure_contains(&self, p: &PointClass) -> bool {
        self.balls.iter().any(|b| b.closed_contains(p))
    }

    /// Axis-aligned bounding box `(xmin, ymin, xmax, ymax)`.
    pub fn bounds(&self) -> (Rat, Rat, Rat, Rat) {
        let mut it = self.balls.iter();
        let first = it.next().expect("nonempty");
        let init = (
            first.cx() - first.r(),
            first.cy() - first.r(),
            first.cx() + first.r(),
            first.cy() + first.r(),
        );
        it.fold(init, |(x0, y0, x1, y1), b| {
            (
                x0.min(b.cx() - b.r()),
                y0.min(b.cy() - b.r()),
                x1.max(b.cx() + b.r()),
                y1.max(b.cy() + b.r()),
            )
        })
    }

    pub fn similar(&self, scale: &Rat, dx: &Rat, dy: &Rat) -> Region {
        Region {
            balls: self.balls.iter().map(|b| b.similar(scale, dx, dy)).collect(),
        }
    }
}

impl From<Ball> for Region {
    fn from(b: Ball) -> Self {
        Region::from_ball(b)
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.balls.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The regular open sets of `P` and `Q` are disjoint. Regularization only
/// adds boundary points, so this is the pairwise open-disk disjointness test.
pub fn ext_region(p: &Region, q: &Region) -> bool {
    p.balls.iter().all(|a| {
        q.balls
            .iter()
            .all(|b| a.center().dist2(b.center()) >= (a.r() + b.r()).square())
    })
}

/// Angular half-plane index: 0 for directions in `[0, π)`, 1 for `[π, 2π)`.
fn half(v: &(Rat, Rat)) -> u8 {
    if v.1.is_positive() || (v.1.is_zero() && v.0.is_positive()) {
        0
    } else {
        1
    }
}

fn angle_cmp(u: &(Rat, Rat), v: &(Rat, Rat)) -> Ordering {
    half(u)
        .cmp(&half(v))
        .then_with(|| Rat::zero().cmp(&cross(u, v)))
}

/// Do the open half-circles `{u : u·v > 0}`, one per direction `v`, cover
/// every direction? Equivalent to every angular gap between consecutive
/// distinct directions being strictly less than π.
fn half_circles_cover(mut dirs: Vec<(Rat, Rat)>) -> bool {
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|a, b| cross(a, b).is_zero() && dot(a, b).is_positive());
    if dirs.len() < 3 {
        return false;
    }
    let n = dirs.len();
    (0..n).all(|i| cross(&dirs[i], &dirs[(i + 1) % n]).is_positive())
}

/// `c ∈ int(⋃ cl(B_i))`, decided exactly.
pub fn interior_point_at(c: &PointClass, q: &Region) -> bool {
    if q.balls.iter().any(|b| b.open_contains(c)) {
        return true;
    }
    let dirs: Vec<(Rat, Rat)> = q
        .balls
        .iter()
        .filter(|b| b.on_circle(c))
        .map(|b| b.center().sub(c))
        .collect();
    half_circles_cover(dirs)
}

/// The point generated by `P` is an interior point of `Q`.
pub fn interior_point(p: &Ball, q: &Region) -> bool {
    interior_point_at(p.center(), q)
}

/// `c` lies on the boundary of the regular open set of `Q`.
pub fn boundary_member_at(c: &PointClass, q: &Region) -> bool {
    q.closure_contains(c) && !interior_point_at(c, q)
}

pub fn boundary_member(p: &Ball, q: &Region) -> bool {
    boundary_member_at(p.center(), q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64, y: i64, r: i64) -> Ball {
        Ball::new(x, y, r).unwrap()
    }

    fn reg(bs: &[Ball]) -> Region {
        Region::new(bs.to_vec()).unwrap()
    }

    #[test]
    fn empty_region_rejected() {
        assert_eq!(Region::new(vec![]), Err(GeomError::EmptyRegion));
    }

    #[test]
    fn pruning_keeps_maximal_balls() {
        let r = reg(&[b(0, 0, 1), b(0, 0, 3), b(5, 0, 1), b(0, 0, 3)]);
        assert_eq!(r.pruned().balls(), &[b(0, 0, 3), b(5, 0, 1)]);
    }

    #[test]
    fn ext_examples() {
        assert!(ext_region(&reg(&[b(0, 0, 1)]), &reg(&[b(3, 0, 1)])));
        assert!(ext_region(&reg(&[b(0, 0, 1)]), &reg(&[b(2, 0, 1)])));
        assert!(!ext_region(&reg(&[b(0, 0, 1)]), &reg(&[b(1, 0, 1)])));
    }

    #[test]
    fn interior_point_examples() {
        let q = reg(&[b(0, 0, 1)]);
        assert!(interior_point(&b(0, 0, 7), &q));
        assert!(!interior_point(&b(1, 0, 7), &q));
        let q2 = reg(&[b(0, 0, 1), b(2, 0, 1)]);
        assert!(!interior_point(&b(1, 0, 1), &q2));
    }

    #[test]
    fn angular_cover_needs_gaps_below_pi() {
        // only the first circle passes through the origin
        let q = reg(&[b(1, 0, 1), b(-1, 1, 1), b(-1, -1, 1)]);
        assert!(!interior_point_at(&PointClass::new(0, 0), &q));
        let q = Region::new(vec![
            Ball::new(1, 0, 1).unwrap(),
            Ball::new(Rat::new(-3, 5), Rat::new(4, 5), 1).unwrap(),
            Ball::new(Rat::new(-3, 5), Rat::new(-4, 5), 1).unwrap(),
        ])
        .unwrap();
        assert!(interior_point_at(&PointClass::new(0, 0), &q));
        // four disks at right angles also cover
        let q4 = reg(&[b(1, 0, 1), b(0, 1, 1), b(-1, 0, 1), b(0, -1, 1)]);
        assert!(interior_point_at(&PointClass::new(0, 0), &q4));
        // duplicated directions do not help
        let dup = reg(&[b(1, 0, 1), b(2, 0, 2), b(0, 1, 1)]);
        assert!(!interior_point_at(&PointClass::new(0, 0), &dup));
    }

    #[test]
    fn boundary_examples() {
        let q = reg(&[b(0, 0, 1)]);
        assert!(boundary_member(&b(1, 0, 1), &q));
        assert!(!boundary_member(&b(0, 0, 1), &q));
        assert!(!boundary_member(&b(3, 0, 1), &q));
    }
}

use std::fmt;

use crate::rat::Rat;

use super::GeomError;

/// A rational point of the plane; also the canonical representative of the
/// class of all balls concentric at it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointClass {
    pub x: Rat,
    pub y: Rat,
}

impl PointClass {
    pub fn new(x: impl Into<Rat>, y: impl Into<Rat>) -> Self {
        PointClass {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn sub(&self, o: &PointClass) -> (Rat, Rat) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    pub fn dist2(&self, o: &PointClass) -> Rat {
        let (dx, dy) = self.sub(o);
        dx.square() + dy.square()
    }

    /// `self + t (o - self)`.
    pub fn lerp(&self, o: &PointClass, t: &Rat) -> PointClass {
        let (dx, dy) = o.sub(self);
        PointClass {
            x: &self.x + &(t * &dx),
            y: &self.y + &(t * &dy),
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn cross(u: &(Rat, Rat), v: &(Rat, Rat)) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

pub fn dot(u: &(Rat, Rat), v: &(Rat, Rat)) -> Rat {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// The open disk `{p : |p - c| < r}` with rational center and radius.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    center: PointClass,
    r: Rat,
}

impl Ball {
    pub fn new(cx: impl Into<Rat>, cy: impl Into<Rat>, r: impl Into<Rat>) -> Result<Self, GeomError> {
        let r = r.into();
        if !r.is_positive() {
            return Err(GeomError::NonPositiveRadius(r));
        }
        Ok(Ball {
            center: PointClass::new(cx, cy),
            r,
        })
    }

    pub fn at(center: PointClass, r: Rat) -> Result<Self, GeomError> {
        Ball::new(center.x, center.y, r)
    }

    pub fn center(&self) -> &PointClass {
        &self.center
    }

    pub fn cx(&self) -> &Rat {
        &self.center.x
    }

    pub fn cy(&self) -> &Rat {
        &self.center.y
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    /// The point class this ball generates.
    pub fn point(&self) -> PointClass {
        self.center.clone()
    }

    /// `p` lies in the closed disk.
    pub fn closed_contains(&self, p: &PointClass) -> bool {
        self.center.dist2(p) <= self.r.square()
    }

    pub fn open_contains(&self, p: &PointClass) -> bool {
        self.center.dist2(p) < self.r.square()
    }

    /// `p` lies on the bounding circle.
    pub fn on_circle(&self, p: &PointClass) -> bool {
        self.center.dist2(p) == self.r.square()
    }

    /// Image under `p ↦ scale·p + (dx, dy)` with `scale > 0`.
    pub fn similar(&self, scale: &Rat, dx: &Rat, dy: &Rat) -> Ball {
        Ball {
            center: PointClass {
                x: &(scale * &self.center.x) + dx,
                y: &(scale * &self.center.y) + dy,
            },
            r: scale * &self.r,
        }
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({}, {})", self.center, self.r)
    }
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Open-disk containment `b1 ⊆ b2`.
pub fn ball_pt(b1: &Ball, b2: &Ball) -> bool {
    if b1.r > b2.r {
        return false;
    }
    b1.center.dist2(&b2.center) <= (&b2.r - &b1.r).square()
}

/// External tangency.
pub fn ext_tangent(b1: &Ball, b2: &Ball) -> bool {
    b1.center.dist2(&b2.center) == (&b1.r + &b2.r).square()
}

/// `b1` is internally tangent to `b2` (and strictly smaller).
pub fn int_tangent(b1: &Ball, b2: &Ball) -> bool {
    b1 != b2 && b1.r < b2.r && b1.center.dist2(&b2.center) == (&b2.r - &b1.r).square()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diametral {
    External,
    Internal,
}

/// `D` and `F` touch `E` at antipodal points of its circle, from outside
/// (`External`) or inside (`Internal`).
pub fn diametral(kind: Diametral, d: &Ball, e: &Ball, f: &Ball) -> bool {
    let tangent = match kind {
        Diametral::External => ext_tangent(d, e) && ext_tangent(f, e),
        Diametral::Internal => int_tangent(d, e) && int_tangent(f, e),
    };
    if !tangent {
        return false;
    }
    // contact points lie on the rays from e's center towards d's and f's
    // centers; they are antipodal iff the rays are opposite
    let u = d.center.sub(&e.center);
    let v = f.center.sub(&e.center);
    cross(&u, &v).is_zero() && dot(&u, &v).is_negative()
}

pub fn concent(b1: &Ball, b2: &Ball) -> bool {
    b1.center == b2.center
}

/// `P` belongs to the point generated by `Q`.
pub fn point_of(p: &Ball, q: &Ball) -> bool {
    concent(p, q)
}

/// The center of `a` lies strictly inside the segment between the centers
/// of `b` and `c`.
pub fn between(a: &Ball, b: &Ball, c: &Ball) -> bool {
    between_points(&a.center, &b.center, &c.center)
}

pub fn between_points(a: &PointClass, b: &PointClass, c: &PointClass) -> bool {
    if a == b || a == c {
        return false;
    }
    let u = b.sub(a);
    let v = c.sub(a);
    cross(&u, &v).is_zero() && dot(&u, &v).is_negative()
}

//! Region-level part-of by adaptive box subdivision.
//!
//! `b ≤ Q` for the regular open set of `Q` is equivalent to
//! `cl(b) ⊆ ⋃ cl(B_i)`. The decision starts from the bounding box of
//! `cl(b)` and splits boxes into quadrants. A box is discharged when it
//! misses `cl(b)` (nearest point farther than `r`) or fits inside one closed
//! cover ball (all corners within its radius). Box centers and nearest
//! points are probed for a witness in `cl(b)` outside every closed cover
//! ball. All predicates are exact; boxes still open at the depth budget make
//! the answer `Unknown`.

use std::collections::VecDeque;
use std::fmt;

use crate::rat::Rat;

use super::ball::{ball_pt, Ball, PointClass};
use super::region::Region;
use super::GeomError;

/// Maximum subdivision depth; at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(u32);

impl Budget {
    pub fn new(depth: u32) -> Result<Self, GeomError> {
        if depth == 0 {
            return Err(GeomError::BudgetInvalid);
        }
        Ok(Budget(depth))
    }

    pub fn depth(self) -> u32 {
        self.0
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(12)
    }
}

/// Three-valued result of a part-of query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Containment3 {
    Contained,
    /// A point of the closure of the first argument outside every closed
    /// ball of the second.
    NotContained(PointClass),
    /// Subdivision hit the depth budget without a decision.
    Unknown(u32),
}

impl Containment3 {
    pub fn is_contained(&self) -> bool {
        matches!(self, Containment3::Contained)
    }

    pub fn is_not_contained(&self) -> bool {
        matches!(self, Containment3::NotContained(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Containment3::Unknown(_))
    }

    /// `Some(true)`, `Some(false)` or `None` for unknown.
    pub fn decided(&self) -> Option<bool> {
        match self {
            Containment3::Contained => Some(true),
            Containment3::NotContained(_) => Some(false),
            Containment3::Unknown(_) => None,
        }
    }
}

impl fmt::Display for Containment3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Containment3::Contained => f.write_str("contained"),
            Containment3::NotContained(w) => write!(f, "not contained (witness {w})"),
            Containment3::Unknown(d) => write!(f, "unknown (depth {d} exhausted)"),
        }
    }
}

struct Cell {
    x0: Rat,
    y0: Rat,
    x1: Rat,
    y1: Rat,
    depth: u32,
}

impl Cell {
    fn nearest_to(&self, c: &PointClass) -> PointClass {
        let clamp = |v: &Rat, lo: &Rat, hi: &Rat| v.clone().max(lo.clone()).min(hi.clone());
        PointClass {
            x: clamp(&c.x, &self.x0, &self.x1),
            y: clamp(&c.y, &self.y0, &self.y1),
        }
    }

    fn meets_closed(&self, b: &Ball) -> bool {
        b.closed_contains(&self.nearest_to(b.center()))
    }

    fn inside_closed(&self, b: &Ball) -> bool {
        let c = b.center();
        let fx = (&c.x - &self.x0).abs().max((&c.x - &self.x1).abs());
        let fy = (&c.y - &self.y0).abs().max((&c.y - &self.y1).abs());
        fx.square() + fy.square() <= b.r().square()
    }

    fn mid(&self) -> PointClass {
        PointClass {
            x: self.x0.mid(&self.x1),
            y: self.y0.mid(&self.y1),
        }
    }

    fn split(&self) -> [Cell; 4] {
        let m = self.mid();
        let d = self.depth + 1;
        let cell = |x0: &Rat, y0: &Rat, x1: &Rat, y1: &Rat| Cell {
            x0: x0.clone(),
            y0: y0.clone(),
            x1: x1.clone(),
            y1: y1.clone(),
            depth: d,
        };
        [
            cell(&self.x0, &self.y0, &m.x, &m.y),
            cell(&m.x, &self.y0, &self.x1, &m.y),
            cell(&self.x0, &m.y, &m.x, &self.y1),
            cell(&m.x, &m.y, &self.x1, &self.y1),
        ]
    }
}

fn is_witness(p: &PointClass, b: &Ball, cover: &[&Ball]) -> bool {
    b.closed_contains(p) && cover.iter().all(|q| !q.closed_contains(p))
}

/// Is the ball `b` part of the region `q`?
pub fn part_of_region(b: &Ball, q: &Region, budget: Budget) -> Containment3 {
    if q.balls().iter().any(|big| ball_pt(b, big)) {
        return Containment3::Contained;
    }
    let (c, r) = (b.center(), b.r());
    let mut queue = VecDeque::new();
    queue.push_back(Cell {
        x0: &c.x - r,
        y0: &c.y - r,
        x1: &c.x + r,
        y1: &c.y + r,
        depth: 0,
    });
    let mut exhausted = false;
    while let Some(cell) = queue.pop_front() {
        if !cell.meets_closed(b) {
            continue;
        }
        let near: Vec<&Ball> = q.balls().iter().filter(|qb| cell.meets_closed(qb)).collect();
        if near.iter().any(|qb| cell.inside_closed(qb)) {
            continue;
        }
        for probe in [cell.mid(), cell.nearest_to(c)] {
            if is_witness(&probe, b, &near) {
                return Containment3::NotContained(probe);
            }
        }
        if cell.depth >= budget.0 {
            exhausted = true;
            continue;
        }
        queue.extend(cell.split());
    }
    if exhausted {
        Containment3::Unknown(budget.0)
    } else {
        Containment3::Contained
    }
}

/// Three-valued conjunction over the balls of `p`: any `NotContained`
/// wins, then any `Unknown`.
pub fn region_part_of(p: &Region, q: &Region, budget: Budget) -> Containment3 {
    let mut unknown = None;
    for b in p.balls() {
        match part_of_region(b, q, budget) {
            Containment3::Contained => {}
            nc @ Containment3::NotContained(_) => return nc,
            u @ Containment3::Unknown(_) => {
                unknown.get_or_insert(u);
            }
        }
    }
    unknown.unwrap_or(Containment3::Contained)
}

/// Saturated interior point: some concentric ball of `p` that is part of `q`
/// and not a proper part of `p`. Such a ball can only be `p` itself, so this
/// is part-of for `p`.
pub fn sat_interior_point(p: &Ball, q: &Region, budget: Budget) -> Containment3 {
    part_of_region(p, q, budget)
}

/// Mutual part-of, with unknown collapsing to `false`.
pub fn region_equiv(p: &Region, q: &Region, budget: Budget) -> bool {
    region_part_of(p, q, budget).is_contained() && region_part_of(q, p, budget).is_contained()
}

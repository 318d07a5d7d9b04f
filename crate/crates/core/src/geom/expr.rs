//! Symbolic region expressions for complements, boundaries and closures.
//!
//! The complement of a finite disk union is not a finite disk union, so these
//! values are only ever evaluated through exact membership predicates.

use std::fmt;

use super::ball::{Ball, PointClass};
use super::containment::{region_equiv, Budget};
use super::region::{ext_region, interior_point_at, Region};
use super::GeomError;
use crate::kuratowski::{SampleSource, TopologySpec};

#[derive(Clone, PartialEq, Eq)]
pub enum RegionExpr {
    /// The regular open set of a region.
    Balls(Region),
    /// The whole space, the m-class of all balls.
    Whole,
    /// Regular complement of a regular open operand.
    Compl(Box<RegionExpr>),
    /// Plain point-set union (not regularized).
    Join(Box<RegionExpr>, Box<RegionExpr>),
    /// Boundary point set of a regular open operand.
    BoundaryOf(Box<RegionExpr>),
}

impl From<Region> for RegionExpr {
    fn from(r: Region) -> Self {
        RegionExpr::Balls(r)
    }
}

impl RegionExpr {
    pub fn is_regular_open(&self) -> bool {
        match self {
            RegionExpr::Balls(_) | RegionExpr::Whole => true,
            RegionExpr::Compl(e) => e.is_regular_open(),
            RegionExpr::Join(..) | RegionExpr::BoundaryOf(_) => false,
        }
    }

    /// Nesting depth; leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            RegionExpr::Balls(_) | RegionExpr::Whole => 0,
            RegionExpr::Compl(e) | RegionExpr::BoundaryOf(e) => 1 + e.depth(),
            RegionExpr::Join(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Membership of a point in the set denoted.
    pub fn contains(&self, c: &PointClass) -> bool {
        match self {
            RegionExpr::Balls(r) => interior_point_at(c, r),
            RegionExpr::Whole => true,
            RegionExpr::Compl(e) => !e.closure_contains(c),
            RegionExpr::Join(a, b) => a.contains(c) || b.contains(c),
            RegionExpr::BoundaryOf(e) => e.closure_contains(c) && !e.contains(c),
        }
    }

    /// Membership in the topological closure of the set denoted.
    pub fn closure_contains(&self, c: &PointClass) -> bool {
        match self {
            RegionExpr::Balls(r) => r.closure_contains(c),
            RegionExpr::Whole => true,
            // cl(ext X) is the complement of int(cl X), which is X for regular open X
            RegionExpr::Compl(e) => !e.contains(c),
            RegionExpr::Join(a, b) => a.closure_contains(c) || b.closure_contains(c),
            RegionExpr::BoundaryOf(_) => self.contains(c),
        }
    }

    /// Membership of the point generated by ball `p`.
    pub fn contains_ball_point(&self, p: &Ball) -> bool {
        self.contains(p.center())
    }
}

impl fmt::Display for RegionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionExpr::Balls(r) => write!(f, "{r}"),
            RegionExpr::Whole => f.write_str("Gspace"),
            RegionExpr::Compl(e) => write!(f, "compl({e})"),
            RegionExpr::Join(a, b) => write!(f, "({a} ∪ {b})"),
            RegionExpr::BoundaryOf(e) => write!(f, "∂({e})"),
        }
    }
}

impl fmt::Debug for RegionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every region already denotes a regular open set, which is the m-class of
/// its saturated interior points.
pub fn interior_g(q: &Region) -> Region {
    q.clone()
}

/// Interior of a regular open expression; the identity.
pub fn interior_g_expr(q: &RegionExpr) -> Result<RegionExpr, GeomError> {
    if !q.is_regular_open() {
        return Err(GeomError::NotRegularOpen);
    }
    Ok(q.clone())
}

/// Mereological complement relative to the whole space.
pub fn compl_g(q: &RegionExpr) -> Result<RegionExpr, GeomError> {
    match q {
        RegionExpr::Whole => Err(GeomError::WholeSpaceComplement),
        e if !e.is_regular_open() => Err(GeomError::NotRegularOpen),
        e => Ok(RegionExpr::Compl(Box::new(e.clone()))),
    }
}

/// Topological complement: the mereological complement together with the boundary.
pub fn tcompl(q: &RegionExpr) -> Result<RegionExpr, GeomError> {
    Ok(RegionExpr::Join(
        Box::new(compl_g(q)?),
        Box::new(RegionExpr::BoundaryOf(Box::new(q.clone()))),
    ))
}

/// Closure: the topological complement of the interior of the complement.
pub fn closure_g(q: &RegionExpr) -> Result<RegionExpr, GeomError> {
    tcompl(&interior_g_expr(&compl_g(q)?)?)
}

/// Carrier of the interior-axiom instance for the geometry: regions, the
/// whole space and formal meets of those.
#[derive(Clone, PartialEq, Eq)]
pub enum GeoOpen {
    Region(Region),
    Whole,
    Meet(Box<GeoOpen>, Box<GeoOpen>),
}

impl GeoOpen {
    pub fn contains(&self, c: &PointClass) -> bool {
        match self {
            GeoOpen::Region(r) => interior_point_at(c, r),
            GeoOpen::Whole => true,
            GeoOpen::Meet(a, b) => a.contains(c) && b.contains(c),
        }
    }

    /// Regions reachable as meet operands.
    fn leaves(&self) -> Vec<&Region> {
        match self {
            GeoOpen::Region(r) => vec![r],
            GeoOpen::Whole => vec![],
            GeoOpen::Meet(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }
}

impl fmt::Debug for GeoOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeoOpen::Region(r) => write!(f, "{r}"),
            GeoOpen::Whole => f.write_str("Gspace"),
            GeoOpen::Meet(a, b) => write!(f, "({a:?} · {b:?})"),
        }
    }
}

/// Semantic equality. Regions compare by mutual part-of; meets compare
/// operand-wise up to commutation. Whole differs from every bounded region.
pub fn geo_equiv(a: &GeoOpen, b: &GeoOpen, budget: Budget) -> bool {
    match (a, b) {
        (GeoOpen::Whole, GeoOpen::Whole) => true,
        (GeoOpen::Region(p), GeoOpen::Region(q)) => region_equiv(p, q, budget),
        (GeoOpen::Meet(a1, a2), GeoOpen::Meet(b1, b2)) => {
            (geo_equiv(a1, b1, budget) && geo_equiv(a2, b2, budget))
                || (geo_equiv(a1, b2, budget) && geo_equiv(a2, b1, budget))
        }
        _ => false,
    }
}

/// Product of two open elements; undefined when their regions are external.
pub fn geo_prod(a: &GeoOpen, b: &GeoOpen) -> Option<GeoOpen> {
    match (a, b) {
        (GeoOpen::Whole, x) | (x, GeoOpen::Whole) => Some(x.clone()),
        _ => {
            let disjoint = a
                .leaves()
                .iter()
                .any(|p| b.leaves().iter().any(|q| ext_region(p, q)));
            (!disjoint).then(|| GeoOpen::Meet(Box::new(a.clone()), Box::new(b.clone())))
        }
    }
}

/// The geometry instance of the interior axioms over a fixed list of
/// regions (plus the whole space), with `InteriorG` as interior.
pub fn topology_spec(regions: Vec<Region>, budget: Budget) -> TopologySpec<GeoOpen> {
    let mut samples: Vec<GeoOpen> = regions.into_iter().map(GeoOpen::Region).collect();
    samples.push(GeoOpen::Whole);
    TopologySpec {
        name: "regions of the plane".into(),
        univ: GeoOpen::Whole,
        open: Box::new(|q| matches!(q, GeoOpen::Region(_) | GeoOpen::Whole)),
        interior: Box::new(|q| match q {
            GeoOpen::Region(r) => GeoOpen::Region(interior_g(r)),
            other => other.clone(),
        }),
        eq: Box::new(move |a, b| geo_equiv(a, b, budget)),
        prod: Box::new(geo_prod),
        samples: SampleSource::Exhaustive(samples),
    }
}

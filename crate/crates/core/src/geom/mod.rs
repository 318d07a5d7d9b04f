//! Tarski's geometry of solids over exact rational open disks in the plane.
//!
//! Balls are the only primitive. Points are classes of concentric balls,
//! regions are finite ball sets read as regular open sets, and interior,
//! boundary and closure are decided by exact rational predicates.

mod ball;
mod containment;
mod convex;
mod expr;
pub mod gen;
mod hausdorff;
mod postulates;
mod region;

use crate::rat::Rat;

pub use ball::{
    ball_pt, between, between_points, concent, cross, diametral, dot, ext_tangent, int_tangent, point_of, Ball,
    Diametral, PointClass,
};
pub use containment::{part_of_region, region_equiv, region_part_of, sat_interior_point, Budget, Containment3};
pub use convex::{convexity_counterexample, convexity_counterexample_along, probe_pair, ConvexityWitness};
pub use expr::{
    closure_g, compl_g, geo_equiv, geo_prod, interior_g, interior_g_expr, tcompl, topology_spec, GeoOpen,
    RegionExpr,
};
pub use hausdorff::{hausdorff_separation, separation_radius};
pub use postulates::{check_tarski_postulates, inclusion_pairs, TarskiReport};
pub use region::{boundary_member, boundary_member_at, ext_region, interior_point, interior_point_at, Region};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("radius must be positive, got {0}")]
    NonPositiveRadius(Rat),
    #[error("a region needs at least one ball")]
    EmptyRegion,
    #[error("budget must be at least 1")]
    BudgetInvalid,
    #[error("the whole space has no complement")]
    WholeSpaceComplement,
    #[error("operand is not a regular open set")]
    NotRegularOpen,
    #[error("points are concentric")]
    ConcentricPoints,
}

use crate::rat::Rat;

use super::ball::{Ball, PointClass};
use super::GeomError;

/// Rational separation radius `ρ = d² / (4 (|dx| + |dy|))`.
///
/// Since `d ≤ |dx| + |dy|`, `ρ ≤ d / 4` and the two balls of radius `ρ`
/// are disjoint with a gap.
pub fn separation_radius(p1: &PointClass, p2: &PointClass) -> Result<Rat, GeomError> {
    if p1 == p2 {
        return Err(GeomError::ConcentricPoints);
    }
    let (dx, dy) = p2.sub(p1);
    let d2 = dx.square() + dy.square();
    Ok(d2 / (Rat::int(4) * (dx.abs() + dy.abs())))
}

/// Disjoint neighbourhood balls around two distinct points.
pub fn hausdorff_separation(p1: &PointClass, p2: &PointClass) -> Result<(Ball, Ball), GeomError> {
    let rho = separation_radius(p1, p2)?;
    Ok((Ball::at(p1.clone(), rho.clone())?, Ball::at(p2.clone(), rho)?))
}

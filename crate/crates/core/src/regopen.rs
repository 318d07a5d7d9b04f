//! Regular open subsets of the line as canonical unions of open intervals.
//!
//! Endpoints are exact rationals or the infinite sentinels. A canonical
//! value lists disjoint intervals in increasing order with a strictly
//! positive gap between neighbours, so two values denote the same regular
//! open set exactly when they are structurally equal.

use std::fmt;

use rand::Rng as _;

use crate::kuratowski::{Rng, SampleSource, TopologySpec};
use crate::mereo::MeetResult;
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RegOpenError {
    #[error("degenerate interval ({0}, {1})")]
    DegenerateInterval(Endpoint, Endpoint),
    #[error("the full line has no complement")]
    NoComplement,
    #[error("the empty set is not an individual")]
    NotIndividual,
}

/// An extended-real endpoint. Variant order gives `-inf < x < +inf`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl Endpoint {
    pub fn fin(x: impl Into<Rat>) -> Self {
        Endpoint::Fin(x.into())
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Endpoint::Fin(r) => Some(r),
            _ => None,
        }
    }
}

impl From<Rat> for Endpoint {
    fn from(r: Rat) -> Self {
        Endpoint::Fin(r)
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => f.write_str("-inf"),
            Endpoint::Fin(r) => write!(f, "{r}"),
            Endpoint::PosInf => f.write_str("+inf"),
        }
    }
}

/// Open interval `(lo, hi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn new(lo: impl Into<Endpoint>, hi: impl Into<Endpoint>) -> Result<Self, RegOpenError> {
        let (lo, hi) = (lo.into(), hi.into());
        if lo >= hi {
            return Err(RegOpenError::DegenerateInterval(lo, hi));
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, x: &Rat) -> bool {
        let x = Endpoint::Fin(x.clone());
        self.lo < x && x < self.hi
    }
}

impl From<i64> for Endpoint {
    fn from(n: i64) -> Self {
        Endpoint::Fin(Rat::int(n))
    }
}

/// Closed interval `[lo, hi]`, unbounded ends allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RegOpen1D {
    intervals: Vec<Interval>,
}

impl RegOpen1D {
    /// Λ.
    pub fn empty() -> Self {
        RegOpen1D::default()
    }

    pub fn full() -> Self {
        RegOpen1D {
            intervals: vec![Interval {
                lo: Endpoint::NegInf,
                hi: Endpoint::PosInf,
            }],
        }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == RegOpen1D::full()
    }

    /// Nonempty values are the individuals of this model.
    pub fn is_individual(&self) -> bool {
        !self.is_empty()
    }

    /// `int(cl(⋃ raw))` in canonical form.
    pub fn regularize<I, A, B>(raw: I) -> Result<Self, RegOpenError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Endpoint>,
        B: Into<Endpoint>,
    {
        let ivs = raw
            .into_iter()
            .map(|(lo, hi)| Interval::new(lo, hi))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_intervals(ivs))
    }

    fn from_intervals(mut ivs: Vec<Interval>) -> Self {
        ivs.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut out: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match out.last_mut() {
                // touching or overlapping: the shared endpoint is filled in
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        RegOpen1D { intervals: out }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x))
    }

    /// Membership in the topological closure.
    pub fn closure_contains(&self, x: &Rat) -> bool {
        let x = Endpoint::Fin(x.clone());
        self.intervals.iter().any(|iv| iv.lo <= x && x <= iv.hi)
    }

    /// The topological closure as closed intervals.
    pub fn topological_closure(&self) -> Vec<ClosedInterval> {
        self.intervals
            .iter()
            .map(|iv| ClosedInterval {
                lo: iv.lo.clone(),
                hi: iv.hi.clone(),
            })
            .collect()
    }

    /// Interior of a finite union of closed intervals. Degenerate (point)
    /// pieces have empty interior; closed pieces sharing an endpoint fuse.
    pub fn interior_of_closed(pieces: &[ClosedInterval]) -> Self {
        let mut ps: Vec<&ClosedInterval> = pieces.iter().filter(|p| p.lo < p.hi).collect();
        ps.sort_by(|a, b| a.lo.cmp(&b.lo));
        let mut out: Vec<Interval> = Vec::new();
        for p in ps {
            match out.last_mut() {
                Some(last) if p.lo <= last.hi => {
                    if p.hi > last.hi {
                        last.hi = p.hi.clone();
                    }
                }
                _ => out.push(Interval {
                    lo: p.lo.clone(),
                    hi: p.hi.clone(),
                }),
            }
        }
        RegOpen1D { intervals: out }
    }

    /// Every finite endpoint, in order.
    pub fn endpoints(&self) -> Vec<Rat> {
        self.intervals
            .iter()
            .flat_map(|iv| [iv.lo.as_rat().cloned(), iv.hi.as_rat().cloned()])
            .flatten()
            .collect()
    }
}

pub fn join1d(a: &RegOpen1D, b: &RegOpen1D) -> RegOpen1D {
    RegOpen1D::from_intervals(a.intervals.iter().chain(&b.intervals).cloned().collect())
}

pub fn meet1d(a: &RegOpen1D, b: &RegOpen1D) -> MeetResult<RegOpen1D> {
    let mut pieces = Vec::new();
    for x in &a.intervals {
        for y in &b.intervals {
            let lo = std::cmp::max(&x.lo, &y.lo);
            let hi = std::cmp::min(&x.hi, &y.hi);
            if lo < hi {
                pieces.push(Interval {
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
        }
    }
    if pieces.is_empty() {
        MeetResult::UndefinedMeet
    } else {
        MeetResult::Defined(RegOpen1D::from_intervals(pieces))
    }
}

/// Regular complement: the open gaps between intervals, unbounded ones included.
pub fn compl1d(a: &RegOpen1D) -> Result<RegOpen1D, RegOpenError> {
    if a.is_empty() {
        return Err(RegOpenError::NotIndividual);
    }
    if a.is_full() {
        return Err(RegOpenError::NoComplement);
    }
    let mut gaps = Vec::new();
    let mut start = Endpoint::NegInf;
    for iv in &a.intervals {
        if start < iv.lo {
            gaps.push(Interval {
                lo: start,
                hi: iv.lo.clone(),
            });
        }
        start = iv.hi.clone();
    }
    if start < Endpoint::PosInf {
        gaps.push(Interval {
            lo: start,
            hi: Endpoint::PosInf,
        });
    }
    Ok(RegOpen1D::from_intervals(gaps))
}

/// Every interval of `a` lies inside a single interval of `b`.
pub fn part_of1d(a: &RegOpen1D, b: &RegOpen1D) -> bool {
    a.intervals
        .iter()
        .all(|x| b.intervals.iter().any(|y| y.lo <= x.lo && x.hi <= y.hi))
}

pub fn interior1d(a: &RegOpen1D) -> RegOpen1D {
    a.clone()
}

/// Mereological closure: the complement of the interior of the complement.
pub fn closure_m1d(a: &RegOpen1D) -> Result<RegOpen1D, RegOpenError> {
    compl1d(&interior1d(&compl1d(a)?))
}

/// Meet of the closure of `a` with the closure of its complement.
pub fn boundary_m1d(a: &RegOpen1D) -> Result<MeetResult<RegOpen1D>, RegOpenError> {
    let cl = closure_m1d(a)?;
    let cl_c = closure_m1d(&compl1d(a)?)?;
    Ok(meet1d(&cl, &cl_c))
}

impl fmt::Display for RegOpen1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("Λ");
        }
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "({}, {})", iv.lo, iv.hi)?;
        }
        Ok(())
    }
}

/// A random nonempty value: one to four intervals with endpoints on a
/// quarter grid in `[-10, 10]`, occasionally unbounded on either side.
pub fn random_regopen(rng: &mut Rng) -> RegOpen1D {
    let n = rng.gen_range(1..=4);
    let mut raw = Vec::with_capacity(n);
    for _ in 0..n {
        let a = rng.gen_range(-40i64..=40);
        let len = rng.gen_range(1i64..=16);
        let lo = if rng.gen_ratio(1, 12) {
            Endpoint::NegInf
        } else {
            Endpoint::Fin(Rat::new(a, 4))
        };
        let hi = if rng.gen_ratio(1, 12) {
            Endpoint::PosInf
        } else {
            Endpoint::Fin(Rat::new(a + len, 4))
        };
        raw.push(Interval { lo, hi });
    }
    RegOpen1D::from_intervals(raw)
}

/// Interior-axiom instance over seeded random values; the whole is the full line.
pub fn topology_spec() -> TopologySpec<RegOpen1D> {
    TopologySpec {
        name: "regular open line".into(),
        univ: RegOpen1D::full(),
        open: Box::new(RegOpen1D::is_individual),
        interior: Box::new(interior1d),
        eq: Box::new(|a, b| a == b),
        prod: Box::new(|a, b| meet1d(a, b).defined()),
        samples: SampleSource::Seeded(Box::new(|rng| Some(random_regopen(rng)))),
    }
}

//! Mereology over finite quasi-Boolean models.
//!
//! A [`QBAModel`] over a base of `n` atoms has as objects every nonempty
//! subset of the base, ordered by inclusion. That is a Boolean algebra with
//! its bottom removed, so joins always exist and meets are partial.
//!
//! The operators here are written against the name calculus of [`crate::lo`]:
//! `klass` is decided from its three defining conjuncts, and joins, meets
//! and complements are built from `klass`, `pt` and name operators. The
//! lattice reading (bitwise or/and on subsets) is kept out of this module so
//! tests can use it as an independent oracle.

use std::fmt;

use crate::kuratowski::{SampleSource, TopologySpec};
use crate::lo::{LOModel, LoError, Name, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MereoError {
    #[error("name is not individual")]
    NotIndividual,
    #[error("m-class of the empty name")]
    EmptyCollection,
    #[error("first argument is not part of the second")]
    NotPart,
    #[error("the universe has no complement")]
    NoComplement,
    #[error("base size must be between 1 and 5, got {0}")]
    BadBase(usize),
    #[error(transparent)]
    Lo(#[from] LoError),
}

/// Result of a partial meet (or complement).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeetResult<T = Name> {
    Defined(T),
    UndefinedMeet,
}

impl<T> MeetResult<T> {
    pub fn defined(self) -> Option<T> {
        match self {
            MeetResult::Defined(n) => Some(n),
            MeetResult::UndefinedMeet => None,
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, MeetResult::UndefinedMeet)
    }
}

/// The nonempty subsets of a small base set, ordered by inclusion.
///
/// Object `i` of the underlying [`LOModel`] is the subset with bitmask `i + 1`.
#[derive(Debug, Clone)]
pub struct QBAModel {
    base: usize,
    lo: LOModel,
    // parts[x]: objects y with y ≤ x
    parts: Vec<u64>,
    // overlaps[b]: objects c sharing some part d with b
    overlaps: Vec<u64>,
}

impl QBAModel {
    pub fn new(base: usize) -> Result<Self, MereoError> {
        if !(1..=5).contains(&base) {
            return Err(MereoError::BadBase(base));
        }
        let lo = LOModel::new((1 << base) - 1)?;
        let n = lo.size();
        let le = |x: usize, y: usize| (x as u32 + 1) & !(y as u32 + 1) == 0;
        let parts = (0..n)
            .map(|x| (0..n).filter(|&y| le(y, x)).fold(0u64, |acc, y| acc | 1 << y))
            .collect::<Vec<_>>();
        let overlaps = (0..n)
            .map(|b| {
                (0..n)
                    .filter(|&c| (0..n).any(|d| le(d, c) && le(d, b)))
                    .fold(0u64, |acc, c| acc | 1 << c)
            })
            .collect();
        Ok(QBAModel {
            base,
            lo,
            parts,
            overlaps,
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn lo(&self) -> &LOModel {
        &self.lo
    }

    /// Subset bitmask of an object.
    pub fn mask(&self, x: ObjectId) -> u32 {
        x.0 as u32 + 1
    }

    /// The object whose subset is `mask` (nonzero, within the base).
    pub fn object(&self, mask: u32) -> ObjectId {
        assert!(mask != 0 && mask < 1 << self.base, "mask out of range");
        ObjectId(mask as usize - 1)
    }

    /// Individual name of the subset `mask`.
    pub fn ind(&self, mask: u32) -> Name {
        self.lo.iota(self.object(mask)).expect("object in range")
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        self.lo.objects()
    }

    pub fn individuals(&self) -> impl Iterator<Item = Name> + '_ {
        self.lo.objects().map(|x| self.lo.iota(x).expect("in range"))
    }

    /// Atom labels `a`, `b`, ... joined, e.g. `ab` for `{a, b}`.
    pub fn label(&self, x: ObjectId) -> String {
        let m = self.mask(x);
        (0..self.base)
            .filter(|i| m & (1 << i) != 0)
            .map(|i| (b'a' + i as u8) as char)
            .collect()
    }

    /// `x ≤ y` in the model order.
    pub fn le(&self, x: ObjectId, y: ObjectId) -> bool {
        self.parts[y.0] & (1 << x.0) != 0
    }

    fn single(&self, a: &Name) -> Result<ObjectId, MereoError> {
        if !self.lo.owns(a) {
            return Err(LoError::ModelMismatch.into());
        }
        a.single().ok_or(MereoError::NotIndividual)
    }

    /// `pt A`: every object that is part of the individual `A`.
    pub fn pt(&self, a: &Name) -> Result<Name, MereoError> {
        let x = self.single(a)?;
        Ok(self.lo.name_from_bits(self.parts[x.0]))
    }

    /// `A ext B`: the two individuals have no common part.
    pub fn ext(&self, a: &Name, b: &Name) -> Result<bool, MereoError> {
        let common = self.lo.name_conj(&self.pt(a)?, &self.pt(b)?)?;
        Ok(common.is_empty())
    }

    /// Does the object `x` satisfy the three conjuncts defining `η x (klass a)`?
    fn is_klass_of(&self, x: ObjectId, a: &Name) -> bool {
        let parts_x = self.parts[x.0];
        // every member of `a` is part of x
        let covers = a.bits() & !parts_x == 0;
        // every part of x overlaps some member of `a`
        let fills = self
            .objects()
            .filter(|b| parts_x & (1 << b.0) != 0)
            .all(|b| self.overlaps[b.0] & a.bits() != 0);
        covers && fills
    }

    /// The m-class of the plural name `a`.
    pub fn klass(&self, a: &Name) -> Result<Name, MereoError> {
        if !self.lo.owns(a) {
            return Err(LoError::ModelMismatch.into());
        }
        if a.is_empty() {
            return Err(MereoError::EmptyCollection);
        }
        let mut found = self.objects().filter(|&x| self.is_klass_of(x, a));
        let x = found.next().expect("a nonempty name has an m-class");
        debug_assert!(found.next().is_none(), "m-class is unique");
        Ok(self.lo.iota(x)?)
    }

    /// Is `A` the m-class of some nonempty sub-name of `a`?
    pub fn coll(&self, a_ind: &Name, a: &Name) -> bool {
        if !self.lo.owns(a_ind) || !self.lo.owns(a) || !self.lo.is_individual(a_ind) {
            return false;
        }
        let full = a.bits();
        let mut sub = full;
        while sub != 0 {
            let b = self.lo.name_from_bits(sub);
            if self.klass(&b).map(|k| k == *a_ind).unwrap_or(false) {
                return true;
            }
            sub = (sub - 1) & full;
        }
        false
    }

    /// The whole: `klass V`.
    pub fn universe(&self) -> Name {
        self.klass(&self.lo.everything()).expect("V is nonempty")
    }

    /// Join: `klass (pt P ∪ pt Q)`.
    pub fn b_sum(&self, p: &Name, q: &Name) -> Result<Name, MereoError> {
        let parts = self.lo.name_disj(&self.pt(p)?, &self.pt(q)?)?;
        self.klass(&parts)
    }

    /// Meet: `klass (pt P ∩ pt Q)`, undefined when nothing is shared.
    pub fn b_prod(&self, p: &Name, q: &Name) -> Result<MeetResult, MereoError> {
        let parts = self.lo.name_conj(&self.pt(p)?, &self.pt(q)?)?;
        if parts.is_empty() {
            return Ok(MeetResult::UndefinedMeet);
        }
        Ok(MeetResult::Defined(self.klass(&parts)?))
    }

    /// The complement of `Q` relative to `R`: the individual disjoint from
    /// `Q` whose join with `Q` is `R`.
    pub fn rel_compl(&self, q: &Name, r: &Name) -> Result<MeetResult, MereoError> {
        let pr = self.pt(r)?;
        self.single(q)?;
        if !self.lo.eta(q, &pr)? {
            return Err(MereoError::NotPart);
        }
        let mut result = MeetResult::UndefinedMeet;
        for p in self.individuals() {
            if self.b_prod(&p, q)?.is_undefined() && self.b_sum(&p, q)? == *r {
                debug_assert!(result.is_undefined(), "relative complement is unique");
                result = MeetResult::Defined(p);
            }
        }
        Ok(result)
    }

    pub fn compl(&self, q: &Name) -> Result<MeetResult, MereoError> {
        self.rel_compl(q, &self.universe())
    }

    /// Interior of an individual: the individual itself.
    pub fn interior_m(&self, q: &Name) -> Result<Name, MereoError> {
        self.single(q)?;
        Ok(*q)
    }

    fn compl_defined(&self, q: &Name) -> Result<Name, MereoError> {
        self.compl(q)?.defined().ok_or(MereoError::NoComplement)
    }

    /// Closure: the complement of the interior of the complement.
    pub fn closure_m(&self, q: &Name) -> Result<Name, MereoError> {
        let r = self.compl_defined(q)?;
        let s = self.interior_m(&r)?;
        self.compl_defined(&s)
    }

    /// Common parts of the closure of `Q` and the closure of its complement.
    pub fn boundary_m(&self, q: &Name) -> Result<Name, MereoError> {
        let cl = self.closure_m(q)?;
        let cl_c = self.closure_m(&self.compl_defined(q)?)?;
        Ok(self.lo.name_conj(&self.pt(&cl)?, &self.pt(&cl_c)?)?)
    }
}

/// The interior-axiom instance for a quasi-Boolean model: open elements are
/// the individual names, the interior is `interior_m`, the product is `b_prod`
/// and elements are compared by singular equality. The carrier is every name
/// of the model.
pub fn topology_spec(model: &QBAModel) -> TopologySpec<Name> {
    let all: Vec<Name> = model.lo().all_names().collect();
    let (m_int, m_eq, m_prod) = (model.clone(), model.clone(), model.clone());
    TopologySpec {
        name: format!("mereology base {}", model.base()),
        univ: model.universe(),
        open: Box::new(|q| q.len() == 1),
        interior: Box::new(move |q| m_int.interior_m(q).unwrap_or(*q)),
        eq: Box::new(move |a, b| m_eq.lo().eq_singular(a, b).unwrap_or(false)),
        prod: Box::new(move |a, b| m_prod.b_prod(a, b).ok().and_then(MeetResult::defined)),
        samples: SampleSource::Exhaustive(all),
    }
}

impl fmt::Display for QBAModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QBA(base {}, {} objects)", self.base, self.lo.size())
    }
}

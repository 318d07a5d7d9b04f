//! Extensional semantics for the first-order fragment of Leśniewski's
//! Logic of Names over a finite universe of objects.
//!
//! A [`Name`] denotes a (possibly empty) set of objects. The copula
//! [`LOModel::eta`] ("A is a b") holds when `A` names exactly one object and
//! that object falls under `b`.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

/// Largest universe a [`LOModel`] can hold; denotations are stored as `u64` bitsets.
pub const MAX_OBJECTS: usize = 64;

static NEXT_TAG: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LoError {
    #[error("names belong to different models")]
    ModelMismatch,
    #[error("object {0} is not in the universe")]
    UnknownObject(usize),
    #[error("a universe must contain between 1 and {MAX_OBJECTS} objects, got {0}")]
    BadUniverse(usize),
}

/// Index of an object within its model's universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(pub usize);

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

/// A name: a finite denotation inside one model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Name {
    tag: u64,
    bits: u64,
}

impl Name {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// The empty name Λ.
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, x: ObjectId) -> bool {
        x.0 < MAX_OBJECTS && self.bits & (1 << x.0) != 0
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> + '_ {
        (0..MAX_OBJECTS)
            .filter(move |i| self.bits & (1 << i) != 0)
            .map(ObjectId)
    }

    /// The single object of an individual name.
    pub fn single(&self) -> Option<ObjectId> {
        (self.len() == 1).then(|| ObjectId(self.bits.trailing_zeros() as usize))
    }
}

/// A finite universe interpreting names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LOModel {
    tag: u64,
    size: usize,
}

impl LOModel {
    pub fn new(size: usize) -> Result<Self, LoError> {
        if size == 0 || size > MAX_OBJECTS {
            return Err(LoError::BadUniverse(size));
        }
        Ok(LOModel {
            tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> {
        (0..self.size).map(ObjectId)
    }

    fn full_bits(&self) -> u64 {
        if self.size == MAX_OBJECTS {
            u64::MAX
        } else {
            (1u64 << self.size) - 1
        }
    }

    /// Build a name from raw denotation bits; bits outside the universe are dropped.
    pub fn name_from_bits(&self, bits: u64) -> Name {
        Name {
            tag: self.tag,
            bits: bits & self.full_bits(),
        }
    }

    pub fn name<I: IntoIterator<Item = ObjectId>>(&self, objs: I) -> Result<Name, LoError> {
        let mut bits = 0u64;
        for o in objs {
            if o.0 >= self.size {
                return Err(LoError::UnknownObject(o.0));
            }
            bits |= 1 << o.0;
        }
        Ok(self.name_from_bits(bits))
    }

    /// Λ, the empty name.
    pub fn empty(&self) -> Name {
        self.name_from_bits(0)
    }

    /// V, the name under which every object falls.
    pub fn everything(&self) -> Name {
        self.name_from_bits(self.full_bits())
    }

    /// Every name of the model, Λ first.
    pub fn all_names(&self) -> impl Iterator<Item = Name> + '_ {
        debug_assert!(self.size < 32, "enumeration is for small universes");
        (0..=self.full_bits()).map(|b| self.name_from_bits(b))
    }

    fn check(&self, names: &[&Name]) -> Result<(), LoError> {
        if names.iter().all(|n| n.tag == self.tag) {
            Ok(())
        } else {
            Err(LoError::ModelMismatch)
        }
    }

    pub fn owns(&self, a: &Name) -> bool {
        a.tag == self.tag
    }

    /// `η A b`: `A` is individual and its object falls under `b`.
    pub fn eta(&self, a: &Name, b: &Name) -> Result<bool, LoError> {
        self.check(&[a, b])?;
        Ok(a.len() == 1 && a.bits & !b.bits == 0)
    }

    pub fn is_individual(&self, a: &Name) -> bool {
        a.len() == 1
    }

    /// `ι X`, the singular name of object `X`.
    pub fn iota(&self, x: ObjectId) -> Result<Name, LoError> {
        if x.0 >= self.size {
            return Err(LoError::UnknownObject(x.0));
        }
        Ok(self.name_from_bits(1 << x.0))
    }

    pub fn name_conj(&self, a: &Name, b: &Name) -> Result<Name, LoError> {
        self.check(&[a, b])?;
        Ok(self.name_from_bits(a.bits & b.bits))
    }

    pub fn name_disj(&self, a: &Name, b: &Name) -> Result<Name, LoError> {
        self.check(&[a, b])?;
        Ok(self.name_from_bits(a.bits | b.bits))
    }

    pub fn name_neg(&self, a: &Name) -> Result<Name, LoError> {
        self.check(&[a])?;
        Ok(self.name_from_bits(!a.bits))
    }

    /// Weak inclusion of denotations.
    pub fn incl(&self, a: &Name, b: &Name) -> Result<bool, LoError> {
        self.check(&[a, b])?;
        Ok(a.bits & !b.bits == 0)
    }

    /// Plural equality `a ≈ b`.
    pub fn eq_plural(&self, a: &Name, b: &Name) -> Result<bool, LoError> {
        Ok(self.incl(a, b)? && self.incl(b, a)?)
    }

    /// Singular equality `P ≡ Q`.
    pub fn eq_singular(&self, p: &Name, q: &Name) -> Result<bool, LoError> {
        self.check(&[p, q])?;
        Ok(p.len() == 1 && p.bits == q.bits)
    }
}

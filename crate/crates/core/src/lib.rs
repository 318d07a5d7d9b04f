//! Exact computational models for mereology and mereotopology.
//!
//! * [`lo`]: names and the copula η over finite universes.
//! * [`mereo`]: part-of, m-classes, joins, partial meets and complements over
//!   finite quasi-Boolean algebras, with the internal topology of individuals.
//! * [`kuratowski`]: a generic checker for the interior-form Kuratowski axioms.
//! * [`regopen`]: regular open sets of the rational line.
//! * [`geom`]: Tarski's geometry of solids over rational disks.
//! * [`dsl`]: scene files, the query language, law suites and SVG output.

pub mod dsl;
pub mod geom;
pub mod kuratowski;
pub mod lo;
pub mod mereo;
pub mod rat;
pub mod regopen;

pub use rat::Rat;

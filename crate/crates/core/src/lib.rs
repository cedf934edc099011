//! Exact graded-dimension computations for the versal commutative ring
//! spectra `S//p` of characteristic `p`.
//!
//! The mod-`p` homology of `S//p` is the free algebra over the Dyer–Lashof
//! algebra on one class `a` in degree 1. Its Poincaré series, divided by the
//! Poincaré series of the dual Steenrod algebra, gives the dimensions of the
//! homotopy groups. Everything here is integer arithmetic on truncated
//! series and combinatorial enumeration of bases.
//!
//! Module map:
//!
//! - [`power_series`]: truncated integer power series.
//! - [`dyer_lashof`]: admissible words and the generators they index.
//! - [`steenrod_dual`]: Milnor generators of the dual Steenrod algebra.
//! - [`free_algebra`]: generator sets and monomial bases of free
//!   graded-commutative algebras.
//! - [`versal`]: homology, homotopy, THH, TAQ and comparison reports.

pub mod dyer_lashof;
pub mod free_algebra;
pub mod power_series;
mod prime;
pub mod steenrod_dual;
pub mod versal;

pub use dyer_lashof::{AdmissibleWord, DyerLashofError, Operation};
pub use free_algebra::{Generator, GeneratorKind, GeneratorSet, Monomial, MonomialBasis};
pub use power_series::{SeriesError, TruncatedSeries};
pub use prime::{NotPrime, Prime};
pub use steenrod_dual::{MilnorFamily, MilnorGenerator};
pub use versal::{CollisionWitness, HomotopyReport, TaqReport, Verdict, VersalError};

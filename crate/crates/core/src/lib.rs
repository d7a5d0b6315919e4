//! Graded von Neumann regularity for Leavitt and relative Cohn path algebras
//! over finite coefficient rings, with exact witnesses, grading
//! classifications and corner skew Laurent rings.
//!
//! Coefficient rings live in [`coeffring`], graphs in [`graph`], algebra
//! elements and normal forms in [`pathalg`]. [`regularity`] produces witness
//! certificates, [`gradedstruct`] classifies gradings, [`morphisms`] handles
//! induced homs, and [`cornerlaurent`] covers `R[t+, t-; α]`.

pub mod cli;
pub mod coeffring;
pub mod cornerlaurent;
pub mod error;
pub mod fixtures;
pub mod gradedstruct;
pub mod graph;
pub mod morphisms;
pub mod pathalg;
pub mod regularity;

pub use error::{Error, Result};

//! Exact intersection theory for Fano threefolds of Picard rank one.
//!
//! The crate covers Schubert calculus on Grassmannians ([`schubert`]),
//! Chern classes of formal bundles via the splitting principle ([`chern`]),
//! Riemann-Roch in dimensions two and three ([`riemann_roch`]), weighted
//! projective spaces ([`wps`]), the classification table of Picard-rank-one
//! Fano threefolds ([`fano_db`]) and the numerical criteria bounding the
//! degree of a morphism onto such a threefold ([`degree_bound`]).
//!
//! Everything is exact: big-integer coefficients and rationals only.

pub mod chern;
pub mod degree_bound;
pub mod error;
pub mod fano_db;
pub mod par;
pub mod partition;
pub mod report;
pub mod riemann_roch;
pub mod ring;
pub mod schubert;
pub mod wps;

pub use error::{Error, Result};
pub use par::Strategy;
pub use partition::Partition;

//! Generating series of classes of equivariant Hilbert schemes of points.
//!
//! Classes live in `Z[L]` ([`motivic`]), generating series are truncated
//! power series over it with the power structure of the Grothendieck ring
//! ([`series`]). Local series of cyclic actions on the plane come from torus
//! fixed points ([`partitions`], [`local`]) and glue into global series over
//! a stratified quotient ([`global`]). [`verify`] bundles the consistency
//! suites exposed by the command-line tool.

pub mod error;
pub mod global;
pub mod local;
pub mod motivic;
pub mod partitions;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use global::{assemble, LocalSeriesRef, StratificationSpec, Stratum};
pub use local::{GroupActionSpec, Support, Variant};
pub use motivic::MotivicClass;
pub use partitions::{CoreQuotient, Partition};
pub use series::{kapranov_zeta, LogSeries, MotivicSeries};

//! Exact computation of rational curve counts on primitively polarized K3
//! surfaces.
//!
//! The crate is organized around truncated formal power series with exact
//! big-integer or residue-ring coefficients ([`series`]), from which the
//! generating functions for complex counts and real (Welschinger) counts are
//! built as eta-type infinite products ([`forms`]). On top of those sit
//! invariant tables and sign/growth checks ([`invariants`]), congruence and
//! parity verification ([`congruences`]), and asymptotic growth prediction
//! ([`asymptotics`]).
//!
//! All curve counts are computed exactly; floating point appears only in the
//! asymptotic layer, and every approximation there is documented at the call
//! site.

pub mod asymptotics;
pub mod congruences;
mod error;
pub mod forms;
pub mod invariants;
pub mod ring;
pub mod series;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Exact Hilbert-Kunz / Hilbert-Samuel multiplicity calculator.
//!
//! The crate computes colengths of Frobenius powers of ideals in quotients of
//! polynomial rings over prime fields `F_p`, finite extensions `F_{p^k}` and
//! rational function fields `F_p(t)`, entirely in exact arithmetic. On top of
//! the raw Hilbert-Kunz function it provides multiplicity estimators,
//! parameter-ideal (Hilbert-Samuel) multiplicities, an equimultiplicity
//! criterion comparing an ideal against its minimal primes, colon-capturing
//! witnesses, bounded tight-closure membership tests, Cohen-Macaulayness tests
//! for Frobenius powers, and associated-prime probes.
//!
//! Layering, bottom to top:
//!
//! * [`field`] — the coefficient field tower with canonical element forms.
//! * [`poly`] — dense-exponent multivariate polynomials, monomial orders and
//!   ring presentations (polynomial ring + relations).
//! * [`groebner`] — deterministic Buchberger engine (Gebauer-Moeller pair
//!   elimination, sugar selection), normal forms, ideal arithmetic
//!   (sum/product/intersection/colon/saturation), colengths and Krull
//!   dimension.
//! * [`multiplicity`] — Hilbert-Kunz records and estimators plus the
//!   equimultiplicity toolbox.
//! * [`scenario`] — declarative run configuration, the built-in scenario
//!   library and the deterministic emitters behind the `hk` binary.

pub mod error;
pub mod field;
pub mod groebner;
pub mod multiplicity;
pub mod poly;
pub mod scenario;

pub use error::{Error, Result};

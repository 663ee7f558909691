//! Exact spectral toolkit for binary Hamming-scheme graphs.
//!
//! The crate evaluates Krawtchouk polynomials in exact arithmetic, derives
//! the weight-indexed spectra of the Hamming graphs H(n, 2, l) by several
//! independent routes, evaluates classical and quantum spectral chromatic
//! bounds as exact rationals, numerically certifies explicit projector
//! colourings, and composes chromatic verdicts across tensor products.
//!
//! Modules follow the pipeline:
//! * [`krawtchouk`] — the polynomial engine and its identity checkers;
//! * [`spectra`] — weight-class spectra with closed forms and oracles;
//! * [`bounds`] — spectral chromatic bounds and chromatic verdicts;
//! * [`colouring`] — projector systems and their certification;
//! * [`products`] — tensor products of graphs and their verdicts.
//!
//! Every value that is provable exactly is computed exactly (big integers
//! and rationals); floating point appears only in the numeric projector
//! certificates, where the phases are roots of unity.

mod bits;
pub mod bounds;
pub mod colouring;
pub mod error;
pub mod exact;
pub mod krawtchouk;
pub mod products;
pub mod spectra;

pub use error::Error;

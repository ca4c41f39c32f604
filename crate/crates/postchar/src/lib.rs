//! Exact calculus for postulation characters of ACM codimension-2 and
//! arithmetically Gorenstein codimension-3 subschemes of projective space.
//!
//! The crate computes with the numerical shadows of these schemes only:
//! integer characters, Hilbert functions, divisor classes on rational
//! surfaces, minimal-resolution degree data, and Pfaffian ideals of skew
//! matrices of forms over exact rationals. There is no floating point
//! anywhere.
//!
//! Modules:
//! - [`charcalc`]: character validation, integration to Hilbert functions,
//!   degree/genus extraction, delta-splitting, enumeration.
//! - [`biliaison`]: descent and ascent of AG curve characters along
//!   complete-intersection biliaisons, down to the line.
//! - [`geometry`]: divisor arithmetic on catalog surfaces and the `mH - K`
//!   realizability classification.
//! - [`resolution`]: degree data of minimal free resolutions checked
//!   against characters.
//! - [`pfaffian`]: skew matrices of forms, their submaximal Pfaffians, and
//!   exact Hilbert-function verification.
//!
//! The `parallel` feature (on by default) runs enumerations and
//! per-degree rank computations on rayon; outputs are identical to the
//! sequential fallback.

pub mod biliaison;
pub mod charcalc;
pub mod error;
mod exec;
pub mod geometry;
pub mod pfaffian;
pub mod resolution;
pub mod selftest;
mod seq;

pub use charcalc::{Ambient, Character};
pub use error::{Error, ErrorKind};

pub type Result<T> = std::result::Result<T, Error>;

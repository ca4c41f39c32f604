//! Divisor-class arithmetic on catalog ACM surfaces in `P^4` and the
//! `mH - K` realizability classification for AG curve characters.

mod catalog;
mod divisor;
mod mhk;

pub use catalog::{catalog, Catalog, KnownHilbertDim, SurfaceKind, SurfaceModel};
pub use divisor::{adjunction_genus, DivisorClass};
pub use mhk::{
    ci_linkage, classify_mhk, dimension_count, hilbert_scheme_lower_bound, mhk_character,
    mhk_curve, mhk_surface_candidates, CiLinkage, DimensionCount, MhkClassification, MhkCurve,
    SurfaceCandidate, Verdict,
};

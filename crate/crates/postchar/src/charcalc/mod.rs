//! Exact difference/integration calculus on postulation characters:
//! validation, Hilbert-function reconstruction, invariant extraction,
//! delta-splitting and enumeration.

mod character;
mod enumerate;
mod postulation;

pub use character::{Admissible, Ambient, Character};
pub use enumerate::{
    acm_p3_degree_genus_pairs, enumerate_acm_p3, enumerate_acm_p3_serial, enumerate_ag,
    enumerate_ag_serial,
};
pub use postulation::{
    curve_invariants, degree_genus_closed_p3, degree_genus_closed_p4, degree_genus_p3,
    hvector_from_gamma, postulation_from_gamma, postulation_table, validate_ag, AgReport,
    CurveInvariants, PostulationTable,
};

pub use crate::seq::{nth_difference, partial_sums};

//! Reconstruction of the postulation function from a character by repeated
//! partial summation, and the invariants read off from it.

use serde::Serialize;

use crate::charcalc::character::{Ambient, Character};
use crate::error::Error;
use crate::seq;

/// The postulation function `phi(0..=n_max)` together with the stabilized
/// Hilbert polynomial `d*n + e` when the differences become linear
/// (curves; `e = 1 - g`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PostulationTable {
    pub phi: Vec<i64>,
    pub n_max: usize,
    pub hilbert_poly: Option<(i64, i64)>,
}

/// Invariants of an arithmetically Gorenstein curve character in `P^4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    pub s: usize,
    pub q: usize,
    pub m: i64,
    pub r: usize,
    pub degree: i64,
    pub genus: i64,
    pub delta: Character,
}

/// Report of the arithmetically Gorenstein validity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgReport {
    pub q: usize,
    pub m: i64,
    pub delta: Character,
    /// Smoothability flag: a connected delta admits a smooth realization.
    pub delta_connected: bool,
}

/// Integrates `-gamma` N times and validates the resulting postulation
/// table: nondecreasing and bounded by the ambient Hilbert function.
pub fn postulation_table(gamma: &Character, n_max: usize) -> Result<PostulationTable, Error> {
    gamma.validate_admissible()?;
    let big_n = gamma.ambient().dim() as usize;
    // Window large enough to see the differences stabilize.
    let window = n_max.max(gamma.q().map_or(0, |q| q + 4)) + 1;
    let neg: Vec<i64> = gamma.values().iter().map(|v| -v).collect();
    let phi_full = seq::nth_partial_sums(&neg, big_n, window);

    for (n, &value) in phi_full.iter().enumerate() {
        let prev = if n == 0 { 0 } else { phi_full[n - 1] };
        if value < prev {
            return Err(Error::PhiNotMonotone { index: n });
        }
        if value > seq::ambient_dim(n as i64, big_n as u32)? {
            return Err(Error::PhiTooLarge { index: n });
        }
    }

    // Linear regime: the last two first differences agree and the second
    // difference vanishes at the window end.
    let hilbert_poly = if window >= 3 {
        let d1 = phi_full[window - 1] - phi_full[window - 2];
        let d2 = phi_full[window - 2] - phi_full[window - 3];
        if d1 == d2 {
            let e = phi_full[window - 1] - d1 * (window as i64 - 1);
            Some((d1, e))
        } else {
            None
        }
    } else {
        None
    };

    let mut phi = phi_full;
    phi.truncate(n_max + 1);
    Ok(PostulationTable {
        phi,
        n_max,
        hilbert_poly,
    })
}

/// Default window: four steps past the support, enough to exhibit the
/// Hilbert polynomial.
pub fn postulation_from_gamma(gamma: &Character) -> Result<PostulationTable, Error> {
    postulation_table(gamma, gamma.q().map_or(4, |q| q + 4))
}

/// Validates an AG curve character in `P^4`: admissible, symmetric about
/// `q`, integral half at `q/2`, and a positive admissible first half.
pub fn validate_ag(gamma: &Character) -> Result<AgReport, Error> {
    gamma.require_ambient(Ambient::P4)?;
    gamma.validate_admissible()?;
    let q = gamma.q().ok_or(Error::EmptyCharacter)?;
    let delta = gamma.delta_split(q)?;
    delta.validate_admissible()?;
    delta.validate_positive()?;
    Ok(AgReport {
        q,
        m: q as i64 - 4,
        delta_connected: delta.is_connected(),
        delta,
    })
}

/// Degree and genus of an AG curve in `P^4`, read off the stabilized
/// Hilbert polynomial `d*n + 1 - g` of the integrated character.
pub fn curve_invariants(gamma: &Character) -> Result<CurveInvariants, Error> {
    let ag = validate_ag(gamma)?;
    let s = gamma.validate_admissible()?.s;
    let table = postulation_from_gamma(gamma)?;
    let (degree, e) = table.hilbert_poly.ok_or(Error::NonLinearHilbert {
        second_moment: gamma.moment(1),
    })?;
    let r = ag.delta.q().unwrap_or(0);
    Ok(CurveInvariants {
        s,
        q: ag.q,
        m: ag.m,
        r,
        degree,
        genus: 1 - e,
        delta: ag.delta,
    })
}

/// Degree and genus of an ACM curve in `P^3` (positive admissible
/// character), via the same integration route.
pub fn degree_genus_p3(gamma: &Character) -> Result<(i64, i64), Error> {
    gamma.require_ambient(Ambient::P3)?;
    gamma.validate_admissible()?;
    gamma.validate_positive()?;
    let table = postulation_from_gamma(gamma)?;
    let (d, e) = table.hilbert_poly.ok_or(Error::NonLinearHilbert {
        second_moment: gamma.moment(1),
    })?;
    Ok((d, 1 - e))
}

/// Closed-form degree and genus for `P^4` curve characters. An optimization
/// only: the integration route above is the source of truth, and the test
/// suite checks the two against each other on the enumerated corpus.
pub fn degree_genus_closed_p4(gamma: &Character) -> (i64, i64) {
    let m2 = gamma.moment(2);
    let m3 = gamma.moment(3);
    let d = -m2 / 2;
    let g = 1 - m3 / 6 + m2;
    (d, g)
}

/// Closed-form degree and genus for `P^3` characters.
pub fn degree_genus_closed_p3(gamma: &Character) -> (i64, i64) {
    let m1 = gamma.moment(1);
    let m2 = gamma.moment(2);
    (m1, 1 + (m2 - 3 * m1) / 2)
}

/// h-vector by partial summation of `-gamma`: twice for codimension 3,
/// once for codimension 2. Entries must be nonnegative and the tail must
/// vanish; the sum equals the degree.
pub fn hvector_from_gamma(gamma: &Character, codim: u8) -> Result<Vec<i64>, Error> {
    gamma.validate_admissible()?;
    let folds = match codim {
        2 => 1,
        3 => 2,
        _ => {
            return Err(Error::InvalidBound {
                detail: format!("codimension {codim} not supported (expected 2 or 3)"),
            })
        }
    };
    let window = gamma.q().map_or(1, |q| q + 2) + 1;
    let neg: Vec<i64> = gamma.values().iter().map(|v| -v).collect();
    let mut h = seq::nth_partial_sums(&neg, folds, window);
    let tail = *h.last().unwrap_or(&0);
    if tail != 0 {
        return Err(Error::HVectorDiverges { tail });
    }
    while h.last() == Some(&0) {
        h.pop();
    }
    if let Some((index, &value)) = h.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::HVectorNegative { index, value });
    }
    Ok(h)
}

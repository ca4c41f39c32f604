//! Realizability of AG curves as `mH - K` divisors on ACM surfaces:
//! threshold classification, curve data on catalog surfaces, the
//! degree-genus search for carrier surfaces, and dimension counts.

use serde::Serialize;

use crate::charcalc::{
    acm_p3_degree_genus_pairs, curve_invariants, validate_ag, Ambient, Character,
};
use crate::error::Error;
use crate::geometry::catalog::{Catalog, SurfaceModel};
use crate::geometry::divisor::{adjunction_genus, DivisorClass};

/// Sufficient-condition flags for a curve character, keyed by the twist
/// `m = q - 4` against thresholds in `r`, the support bound of the first
/// half. The converses fail in general, so a `false` flag decides nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MhkClassification {
    pub m: i64,
    pub r: usize,
    /// `m >= 2r - 5`: the linear system is effective and base-point free.
    pub base_point_free: bool,
    /// `m >= 2r - 4`: very ample, and the curve's first half equals the
    /// surface character.
    pub very_ample_delta_match: bool,
    /// `m >= 2r - 3`: the curve lies on a unique such surface.
    pub unique_surface: bool,
    /// `m >= 2r - 2`: the curves fill an open subset of their Hilbert
    /// scheme.
    pub open_in_hilbert: bool,
}

pub fn classify_mhk(gamma: &Character) -> Result<MhkClassification, Error> {
    let ag = validate_ag(gamma)?;
    let r = ag.delta.q().unwrap_or(0) as i64;
    let m = ag.m;
    Ok(MhkClassification {
        m,
        r: r as usize,
        base_point_free: m >= 2 * r - 5,
        very_ample_delta_match: m >= 2 * r - 4,
        unique_surface: m >= 2 * r - 3,
        open_in_hilbert: m >= 2 * r - 2,
    })
}

/// Character of a curve in `|mH - K|` on an ACM surface with character
/// `gamma_x`: the reflected sum `gamma(n) = gamma_x(n) + gamma_x(m+4-n)`.
///
/// Cohomologically exact for `m >= r - 4` (the vanishing window of the
/// surface's `h^2`); the result is additionally required to be a valid AG
/// character, which rules out non-effective twists.
pub fn mhk_character(gamma_x: &Character, m: i64) -> Result<Character, Error> {
    let r = gamma_x.q().unwrap_or(0) as i64;
    if m < r - 4 {
        return Err(Error::MhkBelowThreshold { m, min_m: r - 4 });
    }
    let q = (m + 4) as usize;
    let merged = Character::mirror_merge(&gamma_x.retag(Ambient::P3), q);
    validate_ag(&merged)?;
    Ok(merged)
}

/// Numerical data of the `mH - K` curve on a catalog surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MhkCurve {
    pub surface: String,
    pub m: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<DivisorClass>,
    pub degree: i64,
    pub genus: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Character>,
}

/// Degree by `(m+1) * deg X - 2 pi + 2`; genus by adjunction on blow-up
/// models, otherwise through the character pipeline. The character is
/// reported whenever the reflected-sum formula applies.
pub fn mhk_curve(surface: &SurfaceModel, m: i64) -> Result<MhkCurve, Error> {
    let degree = (m + 1) * surface.degree - 2 * surface.sectional_genus + 2;
    if degree < 1 {
        return Err(Error::NotEffective { degree });
    }
    let gamma = mhk_character(&surface.gamma, m).ok();
    let class = match (&surface.h, &surface.k) {
        (Some(h), Some(k)) => Some(h.scale(m).add(&k.scale(-1))),
        _ => None,
    };
    let genus = if let (Some(y), Some(k)) = (&class, &surface.k) {
        adjunction_genus(y, k)?
    } else if let Some(g) = &gamma {
        curve_invariants(g)?.genus
    } else {
        // Complete-intersection model below the character threshold: no
        // route to the genus.
        return Err(Error::MhkBelowThreshold {
            m,
            min_m: surface.r() as i64 - 4,
        });
    };
    Ok(MhkCurve {
        surface: surface.name.clone(),
        m,
        class,
        degree,
        genus,
        gamma,
    })
}

/// A `(degree, genus)` pair of a nondegenerate ACM curve in `P^3` solving
/// the degree equation for the given curve character, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceCandidate {
    pub degree: i64,
    pub genus: i64,
    pub witness: Character,
}

/// All surface invariants `(delta_s, pi)` with
/// `(m+1) delta_s - 2 pi + 2 = deg Y`, searched over nondegenerate ACM
/// pairs up to `d_max`.
pub fn mhk_surface_candidates(
    gamma: &Character,
    d_max: i64,
) -> Result<Vec<SurfaceCandidate>, Error> {
    let inv = curve_invariants(gamma)?;
    let mut out = Vec::new();
    for (delta_s, pi, witness) in acm_p3_degree_genus_pairs(d_max) {
        if (inv.m + 1) * delta_s - 2 * pi + 2 == inv.degree {
            out.push(SurfaceCandidate {
                degree: delta_s,
                genus: pi,
                witness,
            });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The family of `mH - K` curves is strictly smaller than the Hilbert
    /// scheme bound: the general curve is not of this form.
    NotGeneral,
    /// The count does not separate the families.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCount {
    pub surface: String,
    pub m: i64,
    pub class: DivisorClass,
    pub y_squared: i64,
    pub dim_linsys: i64,
    pub dim_family: i64,
    pub total: i64,
    pub hilbert_lower_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_dim: Option<i64>,
    pub verdict: Verdict,
}

/// The dimension count for curves `Y ~ mH - K` on a blow-up surface:
/// `h^0(O_Y(Y)) + dim {X}` against the Hilbert-scheme lower bound
/// `5d + 1 - g`. Requires nonspeciality `Y^2 > 2g - 2` for the
/// Riemann-Roch shortcut.
pub fn dimension_count(
    gamma: &Character,
    surface: &SurfaceModel,
    catalog: &Catalog,
) -> Result<DimensionCount, Error> {
    let inv = curve_invariants(gamma)?;
    let m = inv.m;
    let expected = mhk_character(&surface.gamma, m)?;
    if expected != *gamma {
        return Err(Error::SurfaceMismatch {
            name: surface.name.clone(),
        });
    }
    let (h, k) = match (&surface.h, &surface.k) {
        (Some(h), Some(k)) => (h, k),
        _ => {
            return Err(Error::NoDivisorClass {
                name: surface.name.clone(),
            })
        }
    };
    let family = surface.family_dim.ok_or_else(|| Error::NoFamilyDim {
        name: surface.name.clone(),
    })?;
    let y = h.scale(m).add(&k.scale(-1));
    let y_squared = y.self_intersection();
    let bound_2g2 = 2 * inv.genus - 2;
    if y_squared <= bound_2g2 {
        return Err(Error::Speciality {
            y_squared,
            bound: bound_2g2,
        });
    }
    let dim_linsys = y_squared + 1 - inv.genus;
    let total = dim_linsys + family;
    let hilbert_lower_bound = hilbert_scheme_lower_bound(inv.degree, inv.genus);
    let verdict = if total < hilbert_lower_bound {
        Verdict::NotGeneral
    } else {
        Verdict::Undetermined
    };
    Ok(DimensionCount {
        surface: surface.name.clone(),
        m,
        class: y,
        y_squared,
        dim_linsys,
        dim_family: family,
        total,
        hilbert_lower_bound,
        known_dim: catalog.known_dim(gamma),
        verdict,
    })
}

/// Lower bound `5d + 1 - g` for the dimension of any component of the
/// Hilbert scheme of curves of degree `d` and genus `g` in `P^4`.
pub fn hilbert_scheme_lower_bound(degree: i64, genus: i64) -> i64 {
    5 * degree + 1 - genus
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiLinkage {
    pub alpha: i64,
    pub beta: i64,
    pub m: i64,
    /// The divisor relation satisfied by the linked curve on either
    /// component surface.
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Character>,
}

/// Linkage of two ACM surfaces inside a complete intersection of
/// hypersurface degrees `(alpha, beta)`: the intersection curve is AG with
/// `m = alpha + beta - 5`, sitting in `|mH + M|` (anticanonical `M`).
/// With a catalog surface given, the expected curve character is reported.
pub fn ci_linkage(
    alpha: i64,
    beta: i64,
    surface: Option<&SurfaceModel>,
) -> Result<CiLinkage, Error> {
    if alpha < 1 || beta < 1 {
        return Err(Error::InvalidBound {
            detail: format!("hypersurface degrees ({alpha}, {beta}) must be positive"),
        });
    }
    let m = alpha + beta - 5;
    let mut gamma = None;
    if let Some(surface) = surface {
        if surface.degree >= alpha * beta {
            return Err(Error::InvalidBound {
                detail: format!(
                    "surface degree {} leaves no residual inside a ({alpha},{beta}) complete intersection",
                    surface.degree
                ),
            });
        }
        gamma = Some(mhk_character(&surface.gamma, m)?);
    }
    Ok(CiLinkage {
        alpha,
        beta,
        m,
        relation: format!("Y ~ {m}H + M"),
        surface: surface.map(|s| s.name.clone()),
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::catalog::Catalog;

    fn p4(v: &[i64]) -> Character {
        Character::p4(v.to_vec())
    }

    #[test]
    fn classification_thresholds() {
        // m = 2, r = 3: very ample regime but not unique-surface.
        let c = classify_mhk(&p4(&[-1, -1, -1, 6, -1, -1, -1])).unwrap();
        assert_eq!((c.m, c.r), (2, 3));
        assert!(c.base_point_free && c.very_ample_delta_match);
        assert!(!c.unique_surface && !c.open_in_hilbert);

        // m = 3, r = 3: unique surface but not open.
        let c = classify_mhk(&p4(&[-1, -1, 0, 2, 2, 0, -1, -1])).unwrap();
        assert_eq!((c.m, c.r), (3, 3));
        assert!(c.unique_surface);
        assert!(!c.open_in_hilbert);

        // Plane cubic: m = 0, r = 1, every flag on.
        let c = classify_mhk(&p4(&[-1, 1, 0, 1, -1])).unwrap();
        assert_eq!((c.m, c.r), (0, 1));
        assert!(c.base_point_free && c.very_ample_delta_match);
        assert!(c.unique_surface && c.open_in_hilbert);
    }

    #[test]
    fn bordiga_curve_class_and_character() {
        let cat = Catalog::builtin();
        let bordiga = cat.surface("bordiga").unwrap();
        let curve = mhk_curve(bordiga, 2).unwrap();
        assert_eq!(curve.class, Some(DivisorClass::new(11, vec![3; 10])));
        assert_eq!((curve.degree, curve.genus), (14, 15));
        assert_eq!(
            curve.gamma.unwrap().values(),
            &[-1, -1, -1, 6, -1, -1, -1]
        );
    }

    #[test]
    fn k3_curve_at_m3() {
        let cat = Catalog::builtin();
        let k3 = cat.surface("k3_sextic").unwrap();
        let curve = mhk_curve(k3, 3).unwrap();
        assert_eq!((curve.degree, curve.genus), (18, 28));
        assert!(curve.class.is_none());
        assert_eq!(
            curve.gamma.unwrap().values(),
            &[-1, -1, 0, 2, 2, 0, -1, -1]
        );
    }

    #[test]
    fn del_pezzo_canonical_curve_below_threshold() {
        // m = 1 < 2r - 4 on the Del Pezzo: the first half of the curve
        // character differs from the surface character, but the reflected
        // sum still gives the right curve.
        let cat = Catalog::builtin();
        let dp = cat.surface("del_pezzo").unwrap();
        let curve = mhk_curve(dp, 1).unwrap();
        assert_eq!((curve.degree, curve.genus), (8, 5));
        let gamma = curve.gamma.unwrap();
        assert_eq!(gamma.values(), &[-1, -1, 2, 2, -1, -1]);
        assert_ne!(
            gamma.delta_split(5).unwrap().values(),
            dp.gamma.values()
        );
    }

    #[test]
    fn scroll_anticanonical_is_the_quintic() {
        let cat = Catalog::builtin();
        let scroll = cat.surface("cubic_scroll").unwrap();
        let curve = mhk_curve(scroll, 0).unwrap();
        assert_eq!((curve.degree, curve.genus), (5, 1));
        assert_eq!(curve.gamma.unwrap().values(), &[-1, -1, 4, -1, -1]);
    }

    #[test]
    fn non_effective_twist_is_rejected() {
        let cat = Catalog::builtin();
        let scroll = cat.surface("cubic_scroll").unwrap();
        assert!(matches!(
            mhk_curve(scroll, -2),
            Err(Error::NotEffective { degree: -1 })
        ));
    }

    #[test]
    fn candidates_for_degree_14() {
        let gamma = p4(&[-1, -1, -1, 6, -1, -1, -1]);
        let found = mhk_surface_candidates(&gamma, 30).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].degree, found[0].genus), (6, 3));
        assert_eq!(found[0].witness.values(), &[-1, -1, -1, 3]);
    }

    #[test]
    fn candidates_for_canonical_curve() {
        let gamma = p4(&[-1, -1, 2, 2, -1, -1]);
        let found = mhk_surface_candidates(&gamma, 30).unwrap();
        let pairs: Vec<(i64, i64)> = found.iter().map(|c| (c.degree, c.genus)).collect();
        assert!(pairs.contains(&(3, 0)));
        assert!(pairs.contains(&(4, 1)));
    }

    #[test]
    fn candidates_for_line_are_empty() {
        let found = mhk_surface_candidates(&p4(&[-1, 2, -1]), 30).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn bordiga_dimension_count() {
        let cat = Catalog::builtin();
        let bordiga = cat.surface("bordiga").unwrap();
        let gamma = p4(&[-1, -1, -1, 6, -1, -1, -1]);
        let count = dimension_count(&gamma, bordiga, &cat).unwrap();
        assert_eq!(count.y_squared, 31);
        assert_eq!(count.dim_linsys, 17);
        assert_eq!(count.total, 53);
        assert_eq!(count.hilbert_lower_bound, 56);
        assert_eq!(count.known_dim, Some(56));
        assert_eq!(count.verdict, Verdict::NotGeneral);
    }

    #[test]
    fn hilbert_bound_anchors() {
        assert_eq!(hilbert_scheme_lower_bound(14, 15), 56);
        assert_eq!(hilbert_scheme_lower_bound(1, 0), 6);
    }

    #[test]
    fn dimension_count_rejects_wrong_surface() {
        let cat = Catalog::builtin();
        let dp = cat.surface("del_pezzo").unwrap();
        let gamma = p4(&[-1, -1, -1, 6, -1, -1, -1]);
        assert!(matches!(
            dimension_count(&gamma, dp, &cat),
            Err(Error::SurfaceMismatch { .. })
        ));
    }

    #[test]
    fn linkage_arithmetic() {
        let cat = Catalog::builtin();
        let castelnuovo = cat.surface("castelnuovo").unwrap();
        let link = ci_linkage(2, 5, Some(castelnuovo)).unwrap();
        assert_eq!(link.m, 2);
        assert_eq!(link.gamma.unwrap().values(), &[-1, -1, 0, 4, 0, -1, -1]);
        assert_eq!(ci_linkage(2, 3, None).unwrap().m, 0);
        assert_eq!(ci_linkage(1, 1, None).unwrap().m, -3);
        assert!(ci_linkage(0, 3, None).is_err());
    }
}

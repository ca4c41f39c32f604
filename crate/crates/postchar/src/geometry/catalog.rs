//! The surface catalog: ACM surfaces in `P^4` used as carriers for
//! `mH - K` curves. Shipped as a versioned JSON file and validated
//! entry by entry at load time.

use serde::{Deserialize, Serialize};

use crate::charcalc::{degree_genus_p3, Ambient, Character};
use crate::error::Error;
use crate::geometry::divisor::{adjunction_genus, DivisorClass};

const EMBEDDED_CATALOG: &str = include_str!("catalog.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SurfaceKind {
    Blowup,
    CompleteIntersection { alpha: i64, beta: i64 },
}

/// One catalog surface. For blow-up models the hyperplane and canonical
/// classes are stored; complete intersections carry only their type, with
/// the canonical twist `alpha + beta - 5`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub name: String,
    pub kind: SurfaceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<DivisorClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<DivisorClass>,
    pub gamma: Character,
    pub degree: i64,
    pub sectional_genus: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_dim: Option<i64>,
}

impl SurfaceModel {
    /// Top of the character support.
    pub fn r(&self) -> usize {
        self.gamma.q().unwrap_or(0)
    }

    fn validate(&self) -> Result<(), Error> {
        let fail = |detail: String| Error::CatalogInvalid {
            name: self.name.clone(),
            detail,
        };
        let gamma = self.gamma.retag(Ambient::P3);
        gamma.validate_admissible().map_err(|e| fail(e.to_string()))?;
        gamma.validate_positive().map_err(|e| fail(e.to_string()))?;
        let (d, g) = degree_genus_p3(&gamma).map_err(|e| fail(e.to_string()))?;
        if (d, g) != (self.degree, self.sectional_genus) {
            return Err(fail(format!(
                "character gives (degree, genus) = ({d}, {g}), entry says ({}, {})",
                self.degree, self.sectional_genus
            )));
        }
        match &self.kind {
            SurfaceKind::Blowup => {
                let h = self.h.as_ref().ok_or_else(|| fail("missing H class".into()))?;
                let k = self.k.as_ref().ok_or_else(|| fail("missing K class".into()))?;
                if h.self_intersection() != self.degree {
                    return Err(fail(format!(
                        "H^2 = {} does not match degree {}",
                        h.self_intersection(),
                        self.degree
                    )));
                }
                let pi = adjunction_genus(h, k).map_err(|e| fail(e.to_string()))?;
                if pi != self.sectional_genus {
                    return Err(fail(format!(
                        "adjunction genus {pi} does not match sectional genus {}",
                        self.sectional_genus
                    )));
                }
            }
            SurfaceKind::CompleteIntersection { alpha, beta } => {
                if alpha * beta != self.degree {
                    return Err(fail(format!(
                        "complete intersection ({alpha},{beta}) has degree {} != {}",
                        alpha * beta,
                        self.degree
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A recorded exact Hilbert-scheme dimension for a specific curve
/// character (catalog constant, not computed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownHilbertDim {
    pub gamma: Character,
    pub dim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema: u32,
    pub surfaces: Vec<SurfaceModel>,
    #[serde(default)]
    pub known_hilbert_dims: Vec<KnownHilbertDim>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Catalog, Error> {
        let catalog: Catalog = serde_json::from_str(text).map_err(|e| Error::CatalogFormat {
            detail: e.to_string(),
        })?;
        if catalog.schema != 1 {
            return Err(Error::CatalogFormat {
                detail: format!("unsupported schema {}", catalog.schema),
            });
        }
        for surface in &catalog.surfaces {
            surface.validate()?;
        }
        Ok(catalog)
    }

    /// The built-in catalog: cubic scroll, Del Pezzo, Castelnuovo, Bordiga
    /// and the sextic K3 complete intersection.
    pub fn builtin() -> Catalog {
        Catalog::from_json(EMBEDDED_CATALOG).expect("embedded catalog is valid")
    }

    pub fn surface(&self, name: &str) -> Option<&SurfaceModel> {
        self.surfaces.iter().find(|s| s.name == name)
    }

    pub fn known_dim(&self, gamma: &Character) -> Option<i64> {
        self.known_hilbert_dims
            .iter()
            .find(|k| k.gamma.values() == gamma.values())
            .map(|k| k.dim)
    }
}

/// Convenience accessor for the built-in catalog surfaces.
pub fn catalog() -> Vec<SurfaceModel> {
    Catalog::builtin().surfaces
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_loads_and_validates() {
        let cat = Catalog::builtin();
        assert_eq!(cat.surfaces.len(), 5);
        let names: Vec<&str> = cat.surfaces.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(
            names,
            ["cubic_scroll", "del_pezzo", "castelnuovo", "bordiga", "k3_sextic"]
        );
    }

    #[test]
    fn catalog_entries_match_published_data() {
        let cat = Catalog::builtin();
        let castelnuovo = cat.surface("castelnuovo").unwrap();
        assert_eq!(castelnuovo.gamma.values(), &[-1, -1, 0, 2]);
        assert_eq!(
            castelnuovo.k.as_ref().unwrap().scale(-1),
            DivisorClass::new(3, vec![1; 8])
        );
        let bordiga = cat.surface("bordiga").unwrap();
        assert_eq!(bordiga.family_dim, Some(36));
        assert_eq!(bordiga.gamma.values(), &[-1, -1, -1, 3]);
        let del_pezzo = cat.surface("del_pezzo").unwrap();
        assert_eq!(del_pezzo.gamma.values(), &[-1, -1, 1, 1]);
        let scroll = cat.surface("cubic_scroll").unwrap();
        assert_eq!(scroll.h, Some(DivisorClass::new(2, vec![1])));
        assert_eq!((scroll.degree, scroll.sectional_genus), (3, 0));
        let k3 = cat.surface("k3_sextic").unwrap();
        assert_eq!((k3.degree, k3.sectional_genus), (6, 4));
        assert_eq!(k3.r(), 4);
    }

    #[test]
    fn corrupted_catalog_is_rejected() {
        // Degree inconsistent with the character.
        let bad = r#"{
            "schema": 1,
            "surfaces": [{
                "name": "bad",
                "kind": {"type": "blowup"},
                "h": {"a": 2, "b": [1]},
                "k": {"a": -3, "b": [-1]},
                "gamma": [-1, -1, 2],
                "degree": 4,
                "sectional_genus": 0
            }]
        }"#;
        assert!(matches!(
            Catalog::from_json(bad),
            Err(Error::CatalogInvalid { .. })
        ));
        assert!(matches!(
            Catalog::from_json("{"),
            Err(Error::CatalogFormat { .. })
        ));
        let wrong_schema = r#"{"schema": 2, "surfaces": []}"#;
        assert!(matches!(
            Catalog::from_json(wrong_schema),
            Err(Error::CatalogFormat { .. })
        ));
    }
}

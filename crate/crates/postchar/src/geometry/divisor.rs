//! Divisor classes on blow-ups of the plane, written `(a; b_1, ..., b_k)`
//! with intersection form `diag(1, -1, ..., -1)`.

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    #[serde(default)]
    pub b: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        DivisorClass { a, b }
    }

    /// `(a; b) . (a'; b') = a a' - sum b_i b'_i`, padding the shorter
    /// exceptional vector with zeros.
    pub fn intersect(&self, other: &DivisorClass) -> i64 {
        let mut acc = self.a * other.a;
        let len = self.b.len().max(other.b.len());
        for i in 0..len {
            let x = self.b.get(i).copied().unwrap_or(0);
            let y = other.b.get(i).copied().unwrap_or(0);
            acc -= x * y;
        }
        acc
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        let len = self.b.len().max(other.b.len());
        let b = (0..len)
            .map(|i| self.b.get(i).copied().unwrap_or(0) + other.b.get(i).copied().unwrap_or(0))
            .collect();
        DivisorClass::new(self.a + other.a, b)
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass::new(k * self.a, self.b.iter().map(|&x| k * x).collect())
    }
}

impl std::fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.b.iter().map(|v| v.to_string()).collect();
        write!(f, "({};{})", self.a, parts.join(","))
    }
}

/// Arithmetic genus by adjunction: `g = (D^2 + D.K)/2 + 1`.
pub fn adjunction_genus(d: &DivisorClass, k: &DivisorClass) -> Result<i64, Error> {
    let total = d.self_intersection() + d.intersect(k);
    if total % 2 != 0 {
        return Err(Error::AdjunctionParity);
    }
    Ok(total / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bordiga_two_h_minus_k() {
        let y = DivisorClass::new(11, vec![3; 10]);
        assert_eq!(y.self_intersection(), 31);
        let k = DivisorClass::new(-3, vec![-1; 10]);
        assert_eq!(adjunction_genus(&y, &k).unwrap(), 15);
    }

    #[test]
    fn plane_cubic_on_castelnuovo() {
        let y = DivisorClass::new(3, vec![1; 8]);
        let k = DivisorClass::new(-3, vec![-1; 8]);
        assert_eq!(y.self_intersection(), 1);
        assert_eq!(adjunction_genus(&y, &k).unwrap(), 1);
    }

    #[test]
    fn padding_and_linearity() {
        let h = DivisorClass::new(2, vec![1]);
        let e = DivisorClass::new(0, vec![0, 1, 1]);
        assert_eq!(h.intersect(&e), 0);
        assert_eq!(h.add(&e).b, vec![1, 1, 1]);
        assert_eq!(h.scale(-2).a, -4);
    }
}

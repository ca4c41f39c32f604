//! Sparse homogeneous polynomials in five variables with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};

pub const NVARS: usize = 5;

/// Exponent vector: `[e0, ..., e4]` stands for `x0^e0 * ... * x4^e4`.
pub type Exponents = [u8; NVARS];

pub fn exp_degree(e: &Exponents) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// All exponent vectors of total degree `d`, in lexicographic order.
pub fn monomials_of_degree(d: u32) -> Vec<Exponents> {
    fn rec(var: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if var == NVARS - 1 {
            cur[var] = left as u8;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[var] = e as u8;
            rec(var + 1, left - e, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    let mut cur = [0u8; NVARS];
    rec(0, d, &mut cur, &mut out);
    out
}

/// A polynomial as a map from exponent vectors to nonzero coefficients.
/// The map keeps keys ordered, so iteration and serialization are
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(value: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term([0; NVARS], BigRational::from_integer(value.into()));
        p
    }

    pub fn variable(i: usize) -> Self {
        assert!(i < NVARS, "variable index out of range");
        let mut e = [0u8; NVARS];
        e[i] = 1;
        let mut p = Poly::zero();
        p.add_term(e, BigRational::one());
        p
    }

    pub fn monomial(exps: Exponents, coeff: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(exps, coeff);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = [0u8; NVARS];
                for i in 0..NVARS {
                    e[i] = e1[i].checked_add(e2[i]).expect("exponent overflow");
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Multiply by a single monomial (exponent shift).
    pub fn shift(&self, exps: &Exponents) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut shifted = *e;
            for i in 0..NVARS {
                shifted[i] = shifted[i].checked_add(exps[i]).expect("exponent overflow");
            }
            out.add_term(shifted, c.clone());
        }
        out
    }

    /// Total degree if homogeneous (`None` for the zero polynomial or a
    /// non-homogeneous sum).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(exp_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        lcm
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let c_abs = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if !c_abs.is_one() || is_const {
                write!(f, "{c_abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut started = false;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if started {
                    write!(f, "*")?;
                }
                started = true;
                if exp == 1 {
                    write!(f, "x{i}")?;
                } else {
                    write!(f, "x{i}^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

// JSON form: a list of `{"exps": [e0..e4], "num": "...", "den": "..."}`.
// Numerator and denominator are strings so arbitrary precision survives.
#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u8>,
    num: String,
    den: String,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermJson {
                exps: e.to_vec(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermJson>::deserialize(deserializer)?;
        let mut out = Poly::zero();
        for t in raw {
            if t.exps.len() != NVARS {
                return Err(serde::de::Error::custom(format!(
                    "expected {NVARS} exponents, got {}",
                    t.exps.len()
                )));
            }
            let mut e = [0u8; NVARS];
            e.copy_from_slice(&t.exps);
            let num: BigInt = t
                .num
                .parse()
                .map_err(|_| serde::de::Error::custom("bad numerator"))?;
            let den: BigInt = t
                .den
                .parse()
                .map_err(|_| serde::de::Error::custom("bad denominator"))?;
            if den.is_zero() {
                return Err(serde::de::Error::custom("zero denominator"));
            }
            out.add_term(e, BigRational::new(num, den));
        }
        Ok(out)
    }
}

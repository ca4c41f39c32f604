//! Skew-symmetric matrices of forms and their submaximal Pfaffians.
//!
//! A matrix of odd size `n` with entry degrees `d_ij = c - a_i - a_j`
//! yields `n` Pfaffian generators whose ideal, for generic entries, has
//! the Hilbert function predicted by the resolution degree data. The
//! verification here is constructive: exact ranks of the graded pieces of
//! the generated ideal, compared against the integrated character.

mod linalg;
mod poly;

pub use linalg::{det_bigint, rank_bigint};
pub use poly::{exp_degree, monomials_of_degree, Exponents, Poly, NVARS};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::charcalc::{validate_ag, Character};
use crate::error::Error;
use crate::exec;
use crate::resolution::{gamma_from_betti_ag, BettiDataAg};
use crate::seq;

/// Column budget for graded rank computations; degrees needing more
/// monomials than this are refused.
const MAX_COLUMNS: i64 = 5000;

/// Retry budget for the generic-matrix search.
pub const DEFAULT_ATTEMPTS: u32 = 5;

/// Skew-symmetric matrix of homogeneous forms with the degree bookkeeping
/// of a self-dual resolution: entry `(i, j)` has degree `c - a_i - a_j`,
/// forced to zero when that is not positive. Only the upper triangle is
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewMatrix {
    pub betti: BettiDataAg,
    entries: Vec<Poly>,
}

impl SkewMatrix {
    /// Upper-triangle index of `(i, j)` with `i < j` in an `n x n` matrix.
    fn index(n: usize, i: usize, j: usize) -> usize {
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    /// Builds and validates: odd size, and every entry homogeneous of the
    /// degree dictated by the degree matrix (or zero).
    pub fn new(betti: BettiDataAg, entries: Vec<Poly>) -> Result<SkewMatrix, Error> {
        let n = betti.gens();
        if n.is_multiple_of(2) || n == 0 {
            return Err(Error::SkewEvenSize { n });
        }
        if entries.len() != n * (n - 1) / 2 {
            return Err(Error::BettiInvalid {
                detail: format!(
                    "expected {} upper-triangle entries, got {}",
                    n * (n - 1) / 2,
                    entries.len()
                ),
            });
        }
        let m = SkewMatrix { betti, entries };
        for i in 0..n {
            for j in i + 1..n {
                let expected = m.entry_degree(i, j);
                let entry = &m.entries[Self::index(n, i, j)];
                match entry.homogeneous_degree() {
                    None if entry.is_zero() => {}
                    Some(d) if expected > 0 && d as i64 == expected => {}
                    _ => {
                        return Err(Error::EntryDegree {
                            row: i,
                            col: j,
                            expected,
                        })
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.betti.gens()
    }

    /// Re-runs the constructor checks, e.g. after deserializing.
    pub fn revalidate(self) -> Result<SkewMatrix, Error> {
        SkewMatrix::new(self.betti, self.entries)
    }

    /// Degree matrix entry `c - a_i - a_j`.
    pub fn entry_degree(&self, i: usize, j: usize) -> i64 {
        self.betti.c - self.betti.a[i] - self.betti.a[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        use std::cmp::Ordering;
        let n = self.size();
        match i.cmp(&j) {
            Ordering::Equal => Poly::zero(),
            Ordering::Less => self.entries[Self::index(n, i, j)].clone(),
            Ordering::Greater => self.entries[Self::index(n, j, i)].neg(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Poly>> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// The `n` Pfaffians of the matrix with row and column `i` deleted.
    /// Generator `i` is homogeneous of degree `a_i` (up to sign
    /// conventions the minimal generators of the ideal).
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Poly>, Error> {
        let n = self.size();
        let dense = self.to_dense();
        let out = exec::map_range(0..n, |skip| {
            let active: Vec<usize> = (0..n).filter(|&k| k != skip).collect();
            pfaffian_of(&dense, &active)
        });
        Ok(out)
    }
}

fn check_skew(m: &[Vec<Poly>]) -> Result<(), Error> {
    for (i, row) in m.iter().enumerate() {
        if row.len() != m.len() {
            return Err(Error::NotSkew { row: i, col: row.len() });
        }
        if !m[i][i].is_zero() {
            return Err(Error::NotSkew { row: i, col: i });
        }
        for j in i + 1..m.len() {
            if m[i][j] != m[j][i].neg() {
                return Err(Error::NotSkew { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Pfaffian of an even-size skew-symmetric matrix of forms, by expansion
/// along the first row: `Pf(M) = sum_j (-1)^j m_1j Pf(M_{1j})`.
pub fn pfaffian(m: &[Vec<Poly>]) -> Result<Poly, Error> {
    check_skew(m)?;
    if !m.len().is_multiple_of(2) {
        return Err(Error::PfaffianOddSize { n: m.len() });
    }
    let active: Vec<usize> = (0..m.len()).collect();
    Ok(pfaffian_of(m, &active))
}

/// Recursive expansion over an explicit list of active indices.
fn pfaffian_of(m: &[Vec<Poly>], active: &[usize]) -> Poly {
    if active.is_empty() {
        return Poly::constant(1);
    }
    let first = active[0];
    let mut acc = Poly::zero();
    for (pos, &j) in active[1..].iter().enumerate() {
        let coeff = &m[first][j];
        if coeff.is_zero() {
            continue;
        }
        let rest: Vec<usize> = active[1..]
            .iter()
            .copied()
            .filter(|&k| k != j)
            .collect();
        let sub = pfaffian_of(m, &rest);
        let term = coeff.mul(&sub);
        if pos % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Dimension of the degree-`n` piece of the ideal generated by `gens`,
/// for each `n <= n_max`: the exact rank of the monomial-multiple span.
pub fn ideal_hilbert_function(gens: &[Poly], n_max: usize) -> Result<Vec<usize>, Error> {
    let prepared = prepare_generators(gens, n_max)?;
    Ok(exec::map_range(0..n_max + 1, move |n| {
        graded_rank(&prepared, n as u32)
    }))
}

/// Sequential variant of [`ideal_hilbert_function`]; same output.
pub fn ideal_hilbert_function_serial(gens: &[Poly], n_max: usize) -> Result<Vec<usize>, Error> {
    let prepared = prepare_generators(gens, n_max)?;
    Ok((0..=n_max).map(|n| graded_rank(&prepared, n as u32)).collect())
}

/// Generator scaled to integer coefficients, with its degree.
struct IntGen {
    degree: u32,
    terms: Vec<(Exponents, BigInt)>,
}

fn prepare_generators(gens: &[Poly], n_max: usize) -> Result<Vec<IntGen>, Error> {
    let cols = seq::ambient_dim(n_max as i64, 4)?;
    if cols > MAX_COLUMNS {
        return Err(Error::ResourceLimit {
            detail: format!(
                "degree {n_max} needs {cols} monomial columns (budget {MAX_COLUMNS})"
            ),
        });
    }
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let degree = g.homogeneous_degree().ok_or(Error::EntryDegree {
            row: i,
            col: i,
            expected: -1,
        })?;
        let lcm = g.denominator_lcm();
        let scale = BigRational::from_integer(lcm);
        let terms = g
            .terms()
            .map(|(e, c)| {
                let v = c * &scale;
                debug_assert!(num_traits::One::is_one(v.denom()));
                (*e, v.numer().clone())
            })
            .collect();
        out.push(IntGen { degree, terms });
    }
    Ok(out)
}

fn graded_rank(gens: &[IntGen], n: u32) -> usize {
    let basis = monomials_of_degree(n);
    let index: std::collections::HashMap<Exponents, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (*e, i))
        .collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for gen in gens {
        if gen.degree > n {
            continue;
        }
        for shift in monomials_of_degree(n - gen.degree) {
            let mut row = vec![BigInt::from(0); basis.len()];
            for (e, coeff) in &gen.terms {
                let mut target = *e;
                for k in 0..NVARS {
                    target[k] += shift[k];
                }
                row[index[&target]] = coeff.clone();
            }
            rows.push(row);
        }
    }
    rank_bigint(rows)
}

/// Outcome of checking a matrix against an expected character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    pub phi: Vec<i64>,
    /// The fourth difference actually computed from the ideal, negated.
    pub computed_gamma: Vec<i64>,
    pub n_max: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub index: usize,
    pub expected: i64,
    pub computed: i64,
}

/// Computes `phi(n) = C(n+4,4) - dim I_n` from the submaximal Pfaffians,
/// takes fourth differences, and compares with the expected character on
/// the window `0..=n_max`.
pub fn verify_character(
    matrix: &SkewMatrix,
    expected: &Character,
    n_max: usize,
) -> Result<VerifyReport, Error> {
    validate_ag(expected)?;
    let gens = matrix.submaximal_pfaffians()?;
    let hf = ideal_hilbert_function(&gens, n_max)?;
    let mut phi = Vec::with_capacity(n_max + 1);
    for (n, &h) in hf.iter().enumerate() {
        phi.push(seq::ambient_dim(n as i64, 4)? - h as i64);
    }
    let computed_gamma: Vec<i64> = seq::nth_difference(&phi, 4).iter().map(|&v| -v).collect();
    let first_mismatch = (0..=n_max)
        .find(|&n| computed_gamma[n] != expected.get(n))
        .map(|n| Mismatch {
            index: n,
            expected: expected.get(n),
            computed: computed_gamma[n],
        });
    Ok(VerifyReport {
        pass: first_mismatch.is_none(),
        first_mismatch,
        phi,
        computed_gamma,
        n_max,
    })
}

/// Draws a random skew matrix for the given degree data and retries until
/// its Pfaffian ideal reproduces the predicted character. Coefficients are
/// uniform in `[-9, 9]` without zero; everything is deterministic in
/// `seed`.
pub fn random_skew(betti: &BettiDataAg, seed: u64) -> Result<SkewMatrix, Error> {
    let depth = ((betti.c - 1).max(0) as usize).min(5);
    random_skew_with(betti, seed, DEFAULT_ATTEMPTS, depth)
}

pub fn random_skew_with(
    betti: &BettiDataAg,
    seed: u64,
    attempts: u32,
    verify_depth: usize,
) -> Result<SkewMatrix, Error> {
    let predicted = gamma_from_betti_ag(betti)?;
    validate_ag(&predicted)?;
    let n = betti.gens();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let mut entries = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let d = betti.c - betti.a[i] - betti.a[j];
                entries.push(random_form(&mut rng, d));
            }
        }
        let matrix = SkewMatrix::new(betti.clone(), entries)?;
        if verify_character(&matrix, &predicted, verify_depth)?.pass {
            return Ok(matrix);
        }
    }
    Err(Error::GenericityExhausted { attempts })
}

fn random_form(rng: &mut ChaCha8Rng, degree: i64) -> Poly {
    if degree <= 0 {
        return Poly::zero();
    }
    let mut p = Poly::zero();
    for e in monomials_of_degree(degree as u32) {
        let c = loop {
            let c: i64 = rng.gen_range(-9..=9);
            if c != 0 {
                break c;
            }
        };
        p = p.add(&Poly::monomial(e, BigRational::from_integer(c.into())));
    }
    p
}

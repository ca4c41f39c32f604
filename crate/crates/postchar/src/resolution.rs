//! Degree data of minimal free resolutions, validated against postulation
//! characters: the symmetric odd-rank shape of AG codimension-3 ideals and
//! the two-step shape of ACM codimension-2 ideals.

use serde::{Deserialize, Serialize};

use crate::charcalc::{postulation_table, validate_ag, Ambient, Character, PostulationTable};
use crate::error::Error;
use crate::seq;

/// Degree data of a self-dual length-3 resolution
/// `0 -> S(-c) -> (+) S(-b_i) -> (+) S(-a_i) -> I -> 0` with `b_i = c - a_i`.
/// Generator degrees are kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDataAg {
    pub c: i64,
    pub a: Vec<i64>,
}

impl BettiDataAg {
    pub fn new(c: i64, mut a: Vec<i64>) -> Self {
        a.sort_unstable();
        BettiDataAg { c, a }
    }

    pub fn gens(&self) -> usize {
        self.a.len()
    }

    /// Half the generator count, rounded down. (The source texts overload
    /// the letter `r` for this; we keep it distinct from the character
    /// support bound.)
    pub fn gen_rank(&self) -> usize {
        self.a.len().saturating_sub(1) / 2
    }

    /// Syzygy degrees `b_i = c - a_i`, sorted descending.
    pub fn b(&self) -> Vec<i64> {
        self.a.iter().map(|&ai| self.c - ai).collect()
    }

    /// Degree matrix entry `u_ij = b_i - a_j`.
    pub fn degree_matrix_entry(&self, i: usize, j: usize) -> i64 {
        self.b()[i] - self.a[j]
    }
}

/// Degree data of a Hilbert-Burch style resolution
/// `0 -> (+) O(-b_j) -> (+) O(-a_i) -> I -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDataCodim2 {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl BettiDataCodim2 {
    pub fn new(mut a: Vec<i64>, mut b: Vec<i64>) -> Self {
        a.sort_unstable();
        b.sort_unstable();
        BettiDataCodim2 { a, b }
    }
}

/// Accumulated named constraint failures from a validation pass.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }
}

/// Postulation from the alternating binomial sums of the resolution:
/// `phi(n) = C(n+4,4) - sum C(n-a_i+4,4) + sum C(n-b_i+4,4) - C(n-c+4,4)`.
pub fn phi_from_betti_ag(betti: &BettiDataAg, n_max: usize) -> Result<PostulationTable, Error> {
    let window = n_max.max((betti.c.max(1) as usize) + 3) + 1;
    let mut phi = Vec::with_capacity(window);
    for n in 0..window {
        let n = n as i64;
        let mut value = seq::ambient_dim(n, 4)?;
        for &ai in &betti.a {
            value -= seq::ambient_dim(n - ai, 4)?;
            value += seq::ambient_dim(n - (betti.c - ai), 4)?;
        }
        value -= seq::ambient_dim(n - betti.c, 4)?;
        phi.push(value);
    }
    let d = phi[window - 1] - phi[window - 2];
    let hilbert_poly = if d == phi[window - 2] - phi[window - 3] {
        Some((d, phi[window - 1] - d * (window as i64 - 1)))
    } else {
        None
    };
    phi.truncate(n_max + 1);
    Ok(PostulationTable {
        phi,
        n_max,
        hilbert_poly,
    })
}

/// Character predicted by the resolution degrees, by the indicator form of
/// the fourth difference of [`phi_from_betti_ag`]:
/// `gamma(n) = -1 + #{a_i <= n} - #{b_i <= n}` for `0 <= n < c`.
pub fn gamma_from_betti_ag(betti: &BettiDataAg) -> Result<Character, Error> {
    if betti.c < 1 {
        return Err(Error::BettiInvalid {
            detail: format!("socle degree {} must be positive", betti.c),
        });
    }
    let b = betti.b();
    let mut values = Vec::with_capacity(betti.c as usize);
    for n in 0..betti.c {
        let mut v = -1i64;
        v += betti.a.iter().filter(|&&ai| ai <= n).count() as i64;
        v -= b.iter().filter(|&&bi| bi <= n).count() as i64;
        values.push(v);
    }
    Ok(Character::p4(values))
}

/// Checks AG resolution degree data against a curve character. Every
/// violated constraint is reported by name.
pub fn validate_betti_ag(gamma: &Character, betti: &BettiDataAg) -> Result<CheckReport, Error> {
    let ag = validate_ag(gamma)?;
    let s = gamma.validate_admissible()?.s as i64;
    let q = ag.q as i64;
    let mut report = CheckReport::default();

    let count = betti.gens();
    if count.is_multiple_of(2) || count < 3 {
        report.fail(format!("generator count {count} must be odd and at least 3"));
    }
    if betti.a.first() != Some(&s) {
        report.fail(format!(
            "least generator degree {:?} must equal s = {s}",
            betti.a.first()
        ));
    }
    if betti.c != q + 1 {
        report.fail(format!("socle degree {} must equal q + 1 = {}", betti.c, q + 1));
    }
    if let Some(&max_a) = betti.a.last() {
        if max_a > q - s {
            report.fail(format!(
                "top generator degree {max_a} exceeds the global-sections bound q - s = {}",
                q - s
            ));
        }
    }
    if count >= 2 {
        let u = betti.c - betti.a[1] - betti.a[count - 1];
        if u <= 0 {
            report.fail(format!(
                "degree matrix entry u(2,{count}) = {u} must be positive"
            ));
        }
    }
    for &ai in &betti.a {
        if betti.a.binary_search(&(betti.c - ai)).is_ok() {
            report.fail(format!(
                "ghost pair: generator degree {ai} cancels against syzygy degree {}",
                betti.c - ai
            ));
            break;
        }
    }
    let window = (q + 4) as usize;
    let from_betti = phi_from_betti_ag(betti, window)?;
    let from_gamma = postulation_table(gamma, window)?;
    if let Some(n) = (0..=window).find(|&n| from_betti.phi[n] != from_gamma.phi[n]) {
        report.fail(format!(
            "postulation mismatch at n = {n}: resolution gives {}, character gives {}",
            from_betti.phi[n], from_gamma.phi[n]
        ));
    }
    Ok(report)
}

/// All AG degree data with at most `max_gens` generators passing
/// [`validate_betti_ag`]. Under the minimality (no ghost pair) filter the
/// degree multisets are forced by the difference of the character, so the
/// search reduces to checking the one derived candidate.
pub fn enumerate_betti_ag(
    gamma: &Character,
    max_gens: usize,
) -> Result<Vec<BettiDataAg>, Error> {
    let ag = validate_ag(gamma)?;
    let c = ag.q as i64 + 1;
    let mut a = Vec::new();
    let mut b = Vec::new();
    // w(n) = (dgamma)(n) + [n=0] - [n=c]; positive parts are generator
    // multiplicities, negative parts syzygy multiplicities.
    let mut prev = 0i64;
    for n in 0..=c {
        let cur = gamma.get(n as usize);
        let mut w = cur - prev;
        prev = cur;
        if n == 0 {
            w += 1;
        }
        if n == c {
            w -= 1;
        }
        if w > 0 {
            a.extend(std::iter::repeat_n(n, w as usize));
        } else if w < 0 {
            b.extend(std::iter::repeat_n(n, (-w) as usize));
        }
    }
    let candidate = BettiDataAg::new(c, a);
    let expected_b = {
        let mut eb = candidate.b();
        eb.sort_unstable();
        eb
    };
    if expected_b != b || candidate.gens() > max_gens {
        return Ok(Vec::new());
    }
    if validate_betti_ag(gamma, &candidate)?.ok() {
        Ok(vec![candidate])
    } else {
        Ok(Vec::new())
    }
}

/// Checks Hilbert-Burch degree data against a positive admissible surface
/// character.
pub fn validate_betti_codim2(
    gamma: &Character,
    betti: &BettiDataCodim2,
) -> Result<CheckReport, Error> {
    gamma.validate_admissible()?;
    gamma.validate_positive()?;
    let r = gamma.q().ok_or(Error::EmptyCharacter)? as i64;
    let mut report = CheckReport::default();

    if betti.b.len() + 1 != betti.a.len() {
        report.fail(format!(
            "{} syzygies for {} generators; expected one fewer",
            betti.b.len(),
            betti.a.len()
        ));
    }
    match (betti.a.last(), betti.b.last()) {
        (Some(&ma), Some(&mb)) if mb <= ma => {
            report.fail(format!(
                "minimality: max syzygy degree {mb} must exceed max generator degree {ma}"
            ));
        }
        _ => {}
    }
    if betti.a.iter().any(|ai| betti.b.binary_search(ai).is_ok()) {
        report.fail("ghost pair: a generator degree equals a syzygy degree".to_string());
    }
    if betti.b.last() != Some(&(r + 1)) {
        report.fail(format!(
            "max syzygy degree {:?} must equal r + 1 = {}",
            betti.b.last(),
            r + 1
        ));
    }
    // Alternating-sum Hilbert identity against the integrated character.
    let window = (r + 4) as usize;
    let table = postulation_table(&gamma.retag(Ambient::P4), window)?;
    for n in 0..=window {
        let n_i = n as i64;
        let mut value = seq::ambient_dim(n_i, 4)?;
        for &ai in &betti.a {
            value -= seq::ambient_dim(n_i - ai, 4)?;
        }
        for &bj in &betti.b {
            value += seq::ambient_dim(n_i - bj, 4)?;
        }
        if value != table.phi[n] {
            report.fail(format!(
                "postulation mismatch at n = {n}: resolution gives {value}, character gives {}",
                table.phi[n]
            ));
            break;
        }
    }
    Ok(report)
}

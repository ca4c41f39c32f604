//! Descent and ascent of AG curve characters along complete-intersection
//! biliaisons.
//!
//! A generic step moves from a curve with invariants `(s, q)` on the
//! complete-intersection surface of type `(s, q-s)` to the curve one
//! hyperplane class down; the character transform is piecewise and drops
//! the degree by `s(q-s)` while `q` and `m` drop by 2. Plane curves are
//! handled by degree-one steps inside their plane. Chains terminate at the
//! line `(-1, 2, -1)`.

use serde::Serialize;

use crate::charcalc::{curve_invariants, validate_ag, Character};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    Generic,
    Plane,
}

/// One biliaison step between characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentStep {
    pub before: Character,
    pub after: Character,
    /// Degrees of the two hypersurfaces cutting the carrier surface.
    pub surface: (usize, usize),
    pub drop: i64,
    pub kind: StepKind,
}

/// A full descent down to the line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescentChain {
    pub steps: Vec<DescentStep>,
    pub terminal: Character,
}

impl DescentChain {
    pub fn total_drop(&self) -> i64 {
        self.steps.iter().map(|s| s.drop).sum()
    }
}

/// The terminal character of every chain.
pub fn line_character() -> Character {
    Character::p4(vec![-1, 2, -1])
}

pub fn is_line(gamma: &Character) -> bool {
    gamma.values() == [-1, 2, -1]
}

/// Plane curves of degree `k >= 2` have character `(-1, 1, 0^(k-2), 1, -1)`.
/// Returns `k`; the line is not matched.
pub fn plane_curve_degree(gamma: &Character) -> Option<i64> {
    let v = gamma.values();
    if v.len() < 4 || v[0] != -1 || v[1] != 1 {
        return None;
    }
    let q = v.len() - 1;
    if v[q] != -1 || v[q - 1] != 1 {
        return None;
    }
    if v[2..q - 1].iter().any(|&x| x != 0) {
        return None;
    }
    Some(q as i64 - 1)
}

fn plane_character(k: i64) -> Character {
    if k == 1 {
        return line_character();
    }
    let mut v = vec![-1, 1];
    v.extend(std::iter::repeat_n(0, (k - 2) as usize));
    v.extend([1, -1]);
    Character::p4(v)
}

/// One generic descent step. Errors on the line (terminal) and on plane
/// curves (their degree equals `s(q-s)`, so the generic transform would
/// send them to degree zero; see [`plane_descend`]).
pub fn descend(gamma: &Character) -> Result<(Character, DescentStep), Error> {
    let inv = curve_invariants(gamma)?;
    if is_line(gamma) {
        return Err(Error::TerminalLine);
    }
    if let Some(k) = plane_curve_degree(gamma) {
        return Err(Error::PlaneCurve { degree: k });
    }
    let (s, q) = (inv.s, inv.q);
    let drop = (s * (q - s)) as i64;

    let mut out = vec![0i64; q - 1];
    for slot in out.iter_mut().take(s.saturating_sub(1)) {
        *slot = -1;
    }
    for n in s..=q.saturating_sub(s + 2) {
        out[n] = gamma.get(n + 1);
    }
    for n in q - s..=q - 2 {
        out[n] = -1;
    }
    // The two pinch slots coincide exactly when q = 2s; then both
    // decrements land on the same index.
    if q == 2 * s {
        out[s - 1] = gamma.get(s) - 2;
    } else {
        out[s - 1] = gamma.get(s) - 1;
        out[q - s - 1] = gamma.get(s) - 1;
    }
    let after = Character::p4(out);

    let after_inv = curve_invariants(&after).map_err(|e| Error::DescentInvalid {
        source: Box::new(e),
    })?;
    if after_inv.degree != inv.degree - drop || after_inv.q + 2 != q {
        return Err(Error::DescentInvalid {
            source: Box::new(Error::SumNonzero {
                sum: after_inv.degree - (inv.degree - drop),
            }),
        });
    }

    let step = DescentStep {
        before: gamma.clone(),
        after: after.clone(),
        surface: (s, q - s),
        drop,
        kind: StepKind::Generic,
    };
    Ok((after, step))
}

/// Degree-one biliaison inside the plane of a plane curve.
pub fn plane_descend(gamma: &Character) -> Result<(Character, DescentStep), Error> {
    let k = plane_curve_degree(gamma).ok_or(Error::NotPlaneCurve)?;
    let after = plane_character(k - 1);
    let step = DescentStep {
        before: gamma.clone(),
        after: after.clone(),
        surface: (1, 1),
        drop: 1,
        kind: StepKind::Plane,
    };
    Ok((after, step))
}

/// Repeats descent steps until the line is reached. Every intermediate is
/// revalidated; a failing step aborts with a diagnostic.
pub fn descent_chain(gamma: &Character) -> Result<DescentChain, Error> {
    let mut current = gamma.clone();
    let mut steps = Vec::new();
    // Each step drops the degree by at least one.
    let max_steps = curve_invariants(gamma)?.degree.max(1) as usize + 1;
    while !is_line(&current) {
        if steps.len() > max_steps {
            return Err(Error::ChainAborted {
                completed: steps.len(),
                at: current.to_string(),
                detail: "step budget exceeded".into(),
            });
        }
        let result = if plane_curve_degree(&current).is_some() {
            plane_descend(&current)
        } else {
            descend(&current)
        };
        match result {
            Ok((next, step)) => {
                steps.push(step);
                current = next;
            }
            Err(e) => {
                return Err(Error::ChainAborted {
                    completed: steps.len(),
                    at: current.to_string(),
                    detail: e.to_string(),
                })
            }
        }
    }
    Ok(DescentChain {
        steps,
        terminal: current,
    })
}

/// Inverts a generic descent step: the unique symmetric character with
/// `q = q' + 2` and the requested `s` that descends back to the input.
/// `s_target` must be `s'` or `s' + 1`.
pub fn ascend(gamma_prime: &Character, s_target: usize) -> Result<Character, Error> {
    let inv = curve_invariants(gamma_prime)?;
    let (s_prime, q_prime) = (inv.s, inv.q);
    if s_target != s_prime && s_target != s_prime + 1 {
        return Err(Error::NoPreimage {
            s_target,
            s_low: s_prime,
            s_high: s_prime + 1,
        });
    }
    let q = q_prime + 2;
    let s = s_target;
    if 2 * s > q {
        return Err(Error::NoPreimage {
            s_target,
            s_low: s_prime,
            s_high: s_prime + 1,
        });
    }

    let mut out = vec![0i64; q + 1];
    for slot in out.iter_mut().take(s) {
        *slot = -1;
    }
    out[s] = gamma_prime.get(s - 1) + if q == 2 * s { 2 } else { 1 };
    for n in s + 1..=q / 2 {
        out[n] = gamma_prime.get(n - 1);
    }
    for n in q / 2 + 1..=q {
        out[n] = out[q - n];
    }
    let candidate = Character::p4(out);

    validate_ag(&candidate)?;
    // Round-trip guard: the formula inversion must actually invert.
    let (down, _) = descend(&candidate).map_err(|e| Error::DescentInvalid {
        source: Box::new(e),
    })?;
    if down != *gamma_prime {
        return Err(Error::NoPreimage {
            s_target,
            s_low: s_prime,
            s_high: s_prime + 1,
        });
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4(v: &[i64]) -> Character {
        Character::p4(v.to_vec())
    }

    #[test]
    fn degree_14_descends_to_quintic() {
        let (after, step) = descend(&p4(&[-1, -1, -1, 6, -1, -1, -1])).unwrap();
        assert_eq!(after.values(), &[-1, -1, 4, -1, -1]);
        assert_eq!(step.surface, (3, 3));
        assert_eq!(step.drop, 9);
    }

    #[test]
    fn quintic_descends_to_line() {
        let (after, step) = descend(&p4(&[-1, -1, 4, -1, -1])).unwrap();
        assert_eq!(after.values(), &[-1, 2, -1]);
        assert_eq!(step.surface, (2, 2));
        assert_eq!(step.drop, 4);
    }

    #[test]
    fn degree_18_descends_to_canonical_curve() {
        let (after, step) = descend(&p4(&[-1, -1, 0, 2, 2, 0, -1, -1])).unwrap();
        assert_eq!(after.values(), &[-1, -1, 2, 2, -1, -1]);
        assert_eq!(step.drop, 10);
        let inv = curve_invariants(&after).unwrap();
        assert_eq!((inv.degree, inv.genus), (8, 5));
    }

    #[test]
    fn elliptic_quartic_descends_to_line() {
        // s = 1 but not a plane curve: the generic formula degenerates
        // correctly.
        let (after, step) = descend(&p4(&[-1, 0, 2, 0, -1])).unwrap();
        assert_eq!(after.values(), &[-1, 2, -1]);
        assert_eq!(step.drop, 3);
    }

    #[test]
    fn line_is_terminal() {
        assert_eq!(descend(&line_character()), Err(Error::TerminalLine));
    }

    #[test]
    fn plane_curves_are_diverted() {
        assert_eq!(
            descend(&p4(&[-1, 1, 0, 1, -1])),
            Err(Error::PlaneCurve { degree: 3 })
        );
    }

    #[test]
    fn plane_descent_steps() {
        let (conic, _) = plane_descend(&p4(&[-1, 1, 0, 1, -1])).unwrap();
        assert_eq!(conic.values(), &[-1, 1, 1, -1]);
        let (line, step) = plane_descend(&conic).unwrap();
        assert_eq!(line.values(), &[-1, 2, -1]);
        assert_eq!(step.drop, 1);
        assert_eq!(plane_descend(&line_character()), Err(Error::NotPlaneCurve));
    }

    #[test]
    fn chain_for_degree_14() {
        let chain = descent_chain(&p4(&[-1, -1, -1, 6, -1, -1, -1])).unwrap();
        assert_eq!(chain.steps.len(), 2);
        assert_eq!(chain.steps[0].drop, 9);
        assert_eq!(chain.steps[1].drop, 4);
        assert!(chain.steps.iter().all(|s| s.kind == StepKind::Generic));
        assert_eq!(chain.terminal, line_character());
        assert_eq!(chain.total_drop(), 13);
    }

    #[test]
    fn chain_for_degree_18_passes_through_plane() {
        let chain = descent_chain(&p4(&[-1, -1, 0, 2, 2, 0, -1, -1])).unwrap();
        let drops: Vec<i64> = chain.steps.iter().map(|s| s.drop).collect();
        assert_eq!(drops, vec![10, 6, 1]);
        assert_eq!(chain.steps[2].kind, StepKind::Plane);
        let degrees: Vec<i64> = chain
            .steps
            .iter()
            .map(|s| curve_invariants(&s.before).unwrap().degree)
            .collect();
        assert_eq!(degrees, vec![18, 8, 2]);
    }

    #[test]
    fn chain_for_line_is_empty() {
        let chain = descent_chain(&line_character()).unwrap();
        assert!(chain.steps.is_empty());
    }

    #[test]
    fn ascend_reverses_the_published_chain() {
        let quintic = ascend(&line_character(), 2).unwrap();
        assert_eq!(quintic.values(), &[-1, -1, 4, -1, -1]);
        let deg14 = ascend(&quintic, 3).unwrap();
        assert_eq!(deg14.values(), &[-1, -1, -1, 6, -1, -1, -1]);
    }

    #[test]
    fn ascend_lower_target_gives_elliptic_quartic() {
        let g = ascend(&line_character(), 1).unwrap();
        assert_eq!(g.values(), &[-1, 0, 2, 0, -1]);
    }

    #[test]
    fn ascend_rejects_bad_target() {
        assert!(matches!(
            ascend(&line_character(), 4),
            Err(Error::NoPreimage { .. })
        ));
    }

    #[test]
    fn ascend_then_descend_is_identity() {
        for target in [1usize, 2] {
            let up = ascend(&line_character(), target).unwrap();
            let (down, _) = descend(&up).unwrap();
            assert_eq!(down, line_character());
        }
    }
}

//! Exhaustive enumeration of characters in canonical order.
//!
//! The canonical order is lexicographic on `(q, s, value vector)`, so the
//! output is reproducible and suitable for golden files. The parallel
//! entry points fan out over `q` and reassemble in order; they return
//! exactly what the serial versions do.

use crate::charcalc::character::Character;
use crate::charcalc::postulation::degree_genus_p3;
use crate::exec;

/// All AG curve characters in `P^4` with `q <= q_max`: every positive
/// admissible first half with support within `q/2`, reflected.
pub fn enumerate_ag(q_max: usize) -> Vec<Character> {
    let buckets = exec::map_range(1..q_max + 1, ag_for_q);
    buckets.into_iter().flatten().collect()
}

/// Sequential variant of [`enumerate_ag`]; same output.
pub fn enumerate_ag_serial(q_max: usize) -> Vec<Character> {
    (1..=q_max).flat_map(ag_for_q).collect()
}

fn ag_for_q(q: usize) -> Vec<Character> {
    let mut out = Vec::new();
    let r_max = q / 2;
    for s in 1..=r_max {
        // Positive admissible deltas: s leading -1 entries, then
        // nonnegative values summing to s on indices s..=r_max with a
        // nonzero last value.
        let mut values = Vec::new();
        compositions(s as i64, r_max - s + 1, &mut values, &mut |tail| {
            let mut delta = vec![-1i64; s];
            delta.extend_from_slice(tail);
            let delta = Character::p3(delta);
            out.push(Character::mirror_merge(&delta, q));
        });
    }
    out
}

/// Emits, in lexicographic order, every sequence of at most `max_len`
/// nonnegative values summing to `target` whose last value is nonzero.
fn compositions(target: i64, max_len: usize, prefix: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if max_len == 0 {
        return;
    }
    for v in 0..=target {
        if v == target && v > 0 {
            prefix.push(v);
            emit(prefix);
            prefix.pop();
        } else if v < target {
            prefix.push(v);
            compositions(target - v, max_len - 1, prefix, emit);
            prefix.pop();
        }
    }
}

/// All positive admissible `P^3` characters with degree at most `d_max`,
/// optionally restricted to connected ones, with their `(degree, genus)`.
pub fn enumerate_acm_p3(d_max: i64, connected_only: bool) -> Vec<(Character, i64, i64)> {
    if d_max < 1 {
        return Vec::new();
    }
    let buckets = exec::map_range(1..d_max as usize + 1, move |q| {
        acm_p3_for_q(q, d_max, connected_only)
    });
    buckets.into_iter().flatten().collect()
}

/// Sequential variant of [`enumerate_acm_p3`]; same output.
pub fn enumerate_acm_p3_serial(d_max: i64, connected_only: bool) -> Vec<(Character, i64, i64)> {
    if d_max < 1 {
        return Vec::new();
    }
    (1..=d_max as usize)
        .flat_map(|q| acm_p3_for_q(q, d_max, connected_only))
        .collect()
}

fn acm_p3_for_q(q: usize, d_max: i64, connected_only: bool) -> Vec<(Character, i64, i64)> {
    let mut out = Vec::new();
    for s in 1..=q {
        // Minimum achievable degree for this s is s(s+1)/2.
        let s_i = s as i64;
        if s_i * (s_i + 1) / 2 > d_max {
            break;
        }
        let prefix_weight = s_i * (s_i - 1) / 2;
        let mut values = Vec::new();
        weighted_compositions(
            s_i,
            s,
            q,
            d_max + prefix_weight,
            &mut values,
            &mut |tail| {
                let mut gamma = vec![-1i64; s];
                gamma.extend_from_slice(tail);
                let gamma = Character::p3(gamma);
                if connected_only && !gamma.is_connected() {
                    return;
                }
                let (d, g) = degree_genus_p3(&gamma).expect("enumerated character is valid");
                out.push((gamma, d, g));
            },
        );
    }
    out
}

/// Like [`compositions`] but each unit placed at index `n` costs `n`
/// toward `weight_budget`, positions run from `pos` to `last`, and the
/// value at `last` must be nonzero.
fn weighted_compositions(
    target: i64,
    pos: usize,
    last: usize,
    weight_budget: i64,
    prefix: &mut Vec<i64>,
    emit: &mut impl FnMut(&[i64]),
) {
    // Remaining mass must fit at position >= pos, and one unit must sit at
    // `last`.
    if target * pos as i64 > weight_budget {
        return;
    }
    if pos == last {
        if target > 0 && target * (pos as i64) <= weight_budget {
            prefix.push(target);
            emit(prefix);
            prefix.pop();
        }
        return;
    }
    for v in 0..=target {
        let cost = v * pos as i64;
        if cost > weight_budget || target - v < 1 {
            // Always keep at least one unit for the last position.
            if v == target {
                break;
            }
            continue;
        }
        prefix.push(v);
        weighted_compositions(
            target - v,
            pos + 1,
            last,
            weight_budget - cost,
            prefix,
            emit,
        );
        prefix.pop();
    }
}

/// `(degree, genus)` pairs realized by nondegenerate (`s >= 2`) ACM curves
/// in `P^3` up to `d_max`, each with the first witness character in
/// canonical order.
pub fn acm_p3_degree_genus_pairs(d_max: i64) -> Vec<(i64, i64, Character)> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (gamma, d, g) in enumerate_acm_p3(d_max, false) {
        if gamma.first_nonnegative() < Some(2) {
            continue;
        }
        if seen.insert((d, g)) {
            out.push((d, g, gamma));
        }
    }
    out.sort_by_key(|&(d, g, _)| (d, g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charcalc::postulation::validate_ag;

    // Brute-force oracle: every value vector over a small box, filtered by
    // the validity predicates. Slower but transparently exhaustive.
    fn brute_force_ag(q_max: usize) -> Vec<Character> {
        let mut found = Vec::new();
        for q in 1..=q_max {
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(v) = stack.pop() {
                if v.len() == q + 1 {
                    let c = Character::p4(v);
                    if c.q() == Some(q) && validate_ag(&c).is_ok() {
                        found.push(c);
                    }
                    continue;
                }
                // Any valid value is at most the total positive mass, which
                // is bounded by q; -1 is the only legal negative value.
                for x in -1..=(q as i64) {
                    let mut w = v.clone();
                    w.push(x);
                    stack.push(w);
                }
            }
        }
        found.sort_by_key(|c| {
            (
                c.q(),
                c.first_nonnegative(),
                c.values().to_vec(),
            )
        });
        found.dedup();
        found
    }

    #[test]
    fn ag_q2_is_exactly_the_line() {
        let all = enumerate_ag(2);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].values(), &[-1, 2, -1]);
    }

    #[test]
    fn ag_enumeration_matches_brute_force_to_q5() {
        let fast = enumerate_ag(5);
        let slow = brute_force_ag(5);
        assert_eq!(fast.len(), slow.len());
        let fast_set: std::collections::BTreeSet<_> =
            fast.iter().map(|c| c.values().to_vec()).collect();
        let slow_set: std::collections::BTreeSet<_> =
            slow.iter().map(|c| c.values().to_vec()).collect();
        assert_eq!(fast_set, slow_set);
    }

    #[test]
    fn ag_output_is_valid_and_duplicate_free() {
        let all = enumerate_ag(10);
        let mut seen = std::collections::BTreeSet::new();
        for c in &all {
            validate_ag(c).expect("enumerated character must validate");
            assert!(seen.insert(c.values().to_vec()), "duplicate {c}");
        }
    }

    #[test]
    fn ag_serial_and_parallel_agree() {
        assert_eq!(enumerate_ag(12), enumerate_ag_serial(12));
    }

    #[test]
    fn acm_p3_small_degrees() {
        // Degree <= 2: the line and the conic; nothing else fits.
        let found = enumerate_acm_p3(2, true);
        let values: Vec<_> = found.iter().map(|(c, _, _)| c.values().to_vec()).collect();
        assert_eq!(values, vec![vec![-1, 1], vec![-1, 0, 1]]);
        assert_eq!(found[0].1, 1);
        assert_eq!(found[1].1, 2);
    }

    #[test]
    fn acm_p3_matches_brute_force_to_degree_6() {
        // Oracle: box enumeration with admissibility + positivity + degree
        // computed by the integration route.
        let mut slow = Vec::new();
        for len in 2..=7usize {
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(v) = stack.pop() {
                if v.len() == len {
                    let c = Character::p3(v);
                    if c.q() != Some(len - 1) || !c.is_admissible() || !c.is_positive() {
                        continue;
                    }
                    let (d, g) = degree_genus_p3(&c).unwrap();
                    if (1..=6).contains(&d) {
                        slow.push((c, d, g));
                    }
                    continue;
                }
                // Mass s is at most 3 once degree <= 6, so values cap at 3.
                for x in -1..=3i64 {
                    let mut w = v.clone();
                    w.push(x);
                    stack.push(w);
                }
            }
        }
        let fast = enumerate_acm_p3(6, false);
        let fast_set: std::collections::BTreeSet<_> =
            fast.iter().map(|(c, d, g)| (c.values().to_vec(), *d, *g)).collect();
        let slow_set: std::collections::BTreeSet<_> =
            slow.iter().map(|(c, d, g)| (c.values().to_vec(), *d, *g)).collect();
        assert_eq!(fast_set, slow_set);
    }

    #[test]
    fn acm_p3_serial_and_parallel_agree() {
        assert_eq!(enumerate_acm_p3(12, false), enumerate_acm_p3_serial(12, false));
    }

    #[test]
    fn degree_genus_pairs_are_nondegenerate_and_unique() {
        let pairs = acm_p3_degree_genus_pairs(8);
        let mut seen = std::collections::BTreeSet::new();
        for (d, g, witness) in &pairs {
            assert!(seen.insert((*d, *g)));
            assert!(witness.first_nonnegative() >= Some(2));
        }
        assert!(pairs.iter().any(|&(d, g, _)| (d, g) == (3, 0)));
        assert!(pairs.iter().any(|&(d, g, _)| (d, g) == (6, 3)));
    }
}

//! Exact integer linear algebra: rank and determinant by fraction-free
//! (Bareiss) elimination. No floating point, no modular shortcuts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank by fraction-free elimination with column pivoting. The divisions
/// are exact by the Sylvester identity; this is checked in debug builds.
pub fn rank_bigint(mut rows: Vec<Vec<BigInt>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut col = 0;
    while rank < nrows && col < ncols {
        let pivot_row = (rank..nrows).find(|&r| !rows[r][col].is_zero());
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => {
                col += 1;
                continue;
            }
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = std::mem::replace(&mut rows[r][col], BigInt::zero());
            for c in col + 1..ncols {
                let value = &rows[r][c] * &pivot - &factor * &rows[rank][c];
                debug_assert!((&value % &prev).is_zero(), "fraction-free step not exact");
                rows[r][c] = value / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = ((k + 1)..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!((&value % &prev).is_zero(), "fraction-free step not exact");
                m[i][j] = value / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    // Independent oracle: plain Gaussian elimination over exact rationals.
    fn rank_rational(rows: &[Vec<BigInt>]) -> usize {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
            .collect();
        let nrows = m.len();
        if nrows == 0 {
            return 0;
        }
        let ncols = m[0].len();
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].clone();
            for r in 0..nrows {
                if r != rank && !m[r][col].is_zero() {
                    let f = &m[r][col] / &inv;
                    for c in col..ncols {
                        let delta = &f * &m[rank][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_of_known_matrices() {
        assert_eq!(rank_bigint(big(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank_bigint(big(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bigint(big(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            rank_bigint(big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            2
        );
    }

    #[test]
    fn det_of_known_matrices() {
        assert_eq!(det_bigint(big(&[&[3]])), BigInt::from(3));
        assert_eq!(det_bigint(big(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            det_bigint(big(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
            BigInt::from(-1)
        );
        assert_eq!(det_bigint(big(&[&[1, 2], &[2, 4]])), BigInt::zero());
        // Needs a row swap mid-elimination.
        assert_eq!(
            det_bigint(big(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]])),
            BigInt::from(-1)
        );
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_rational_gauss(
            entries in proptest::collection::vec(-5i64..=5, 1..=30),
            ncols in 1usize..=6,
        ) {
            let rows: Vec<Vec<BigInt>> = entries
                .chunks(ncols)
                .filter(|c| c.len() == ncols)
                .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            prop_assume!(!rows.is_empty());
            prop_assert_eq!(rank_bigint(rows.clone()), rank_rational(&rows));
        }

        #[test]
        fn det_is_multiplicative_under_transpose(
            entries in proptest::collection::vec(-4i64..=4, 16),
        ) {
            let m: Vec<Vec<BigInt>> = entries
                .chunks(4)
                .map(|c| c.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            let mt: Vec<Vec<BigInt>> = (0..4)
                .map(|j| (0..4).map(|i| m[i][j].clone()).collect())
                .collect();
            prop_assert_eq!(det_bigint(m), det_bigint(mt));
        }
    }
}

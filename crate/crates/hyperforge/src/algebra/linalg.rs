//! Exact integer linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals of an integer matrix, by fraction-free one-step
/// Bareiss elimination. Every intermediate value is an integer (each
/// division below is exact) and no floating point is involved.
pub fn rank_bareiss(matrix: &[Vec<BigInt>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    debug_assert!(matrix.iter().all(|r| r.len() == cols));
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let lead = m[r][col].clone();
            for c in col..cols {
                let val = (&pivot * &m[r][c] - &lead * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BigRational;
    use num_traits::Signed;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Independent oracle: plain Gaussian elimination over the rationals.
    fn rank_rational(matrix: &[Vec<BigInt>]) -> usize {
        let rows = matrix.len();
        if rows == 0 {
            return 0;
        }
        let cols = matrix[0].len();
        let mut m: Vec<Vec<BigRational>> = matrix
            .iter()
            .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
            .collect();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for r in rank + 1..rows {
                let scale = &m[r][col] / &pivot;
                for c in col..cols {
                    let sub = &scale * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn known_ranks() {
        assert_eq!(rank_bareiss(&mat(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank_bareiss(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_bareiss(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_bareiss(&mat(&[&[0], &[0], &[0]])), 0);
        assert_eq!(rank_bareiss(&mat(&[&[1], &[-1]])), 1);
        assert_eq!(rank_bareiss(&mat(&[&[2, 0, 0], &[0, 0, 3]])), 2);
        // Rank 2: third row is the sum of the first two.
        assert_eq!(
            rank_bareiss(&mat(&[&[1, 2, 3], &[4, 5, 6], &[5, 7, 9]])),
            2
        );
    }

    #[test]
    fn agrees_with_rational_elimination_on_a_grid_of_matrices() {
        // Deterministic pseudo-random small matrices, all shapes up to 4x4.
        let mut seed = 0x12345678u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for rows in 1..=4usize {
            for cols in 1..=4usize {
                for _ in 0..50 {
                    let m: Vec<Vec<BigInt>> = (0..rows)
                        .map(|_| (0..cols).map(|_| BigInt::from(next())).collect())
                        .collect();
                    assert_eq!(rank_bareiss(&m), rank_rational(&m), "{m:?}");
                }
            }
        }
    }

    #[test]
    fn bareiss_stays_exact_on_larger_entries() {
        let m = mat(&[
            &[1_000_003, 2_000_029, 3],
            &[4, 5_000_011, 6],
            &[7, 8, 9_000_017],
        ]);
        assert_eq!(rank_bareiss(&m), rank_rational(&m));
        assert!(m.iter().flatten().all(|x| x.abs() > BigInt::zero() || x.is_zero()));
    }
}

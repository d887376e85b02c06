//! Exact matrix rank: fraction-free (Bareiss) elimination over the integers
//! for characteristic 0, plain elimination modulo `q` otherwise.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::field::FieldSelector;

/// Rank of a dense integer matrix over the given field.
pub fn rank(rows: &[Vec<i64>], field: FieldSelector) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        FieldSelector::Rationals => {
            let m: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| i128::from(x)).collect())
                .collect();
            match bareiss_i128(m) {
                Some(r) => r,
                None => bareiss_big(
                    rows.iter()
                        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                        .collect(),
                ),
            }
        }
        FieldSelector::Prime(q) => rank_mod(rows, u64::from(q)),
    }
}

// Returns None on overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let (nr, nc) = (m.len(), m[0].len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        // smallest nonzero pivot keeps the minors small
        let Some(p) = (r..nr)
            .filter(|&i| m[i][c] != 0)
            .min_by_key(|&i| m[i][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in r + 1..nr {
            let lead = m[i][c];
            for j in c + 1..nc {
                let v = pivot
                    .checked_mul(m[i][j])?
                    .checked_sub(lead.checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
            m[i][c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let (nr, nc) = (m.len(), m[0].len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr)
            .filter(|&i| !m[i][c].is_zero())
            .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..nr {
            let lead = m[i][c].clone();
            for j in c + 1..nc {
                let v = &pivot * &m[i][j] - &lead * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

fn rank_mod(rows: &[Vec<i64>], q: u64) -> usize {
    let qi = q as i64;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(qi) as u64).collect())
        .collect();
    let (nr, nc) = (m.len(), m[0].len());
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = pow_mod(m[r][c], q - 2, q);
        for j in c..nc {
            m[r][j] = m[r][j] * inv % q;
        }
        for i in r + 1..nr {
            let lead = m[i][c];
            if lead == 0 {
                continue;
            }
            for j in c..nc {
                m[i][j] = (m[i][j] + (q - lead) * m[r][j]) % q;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    const QQ: FieldSelector = FieldSelector::Rationals;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[], QQ), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]], QQ), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]], QQ), 1);
        assert_eq!(rank(&[vec![1, 2], vec![3, 4]], QQ), 2);
        // skipped pivot column
        assert_eq!(rank(&[vec![0, 1, 2], vec![0, 2, 5], vec![0, 3, 7]], QQ), 2);
    }

    #[test]
    fn characteristic_matters() {
        // det = 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, QQ), 2);
        assert_eq!(rank(&m, FieldSelector::Prime(2)), 1);
        assert_eq!(rank(&m, FieldSelector::Prime(3)), 2);
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Hilbert-like integer matrix with huge minors
        let n = 12;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| ((i + 1) as i64).pow(j as u32 + 5)).collect())
            .collect();
        assert!(bareiss_i128(
            rows.iter()
                .map(|r| r.iter().map(|&x| i128::from(x)).collect())
                .collect()
        )
        .is_none());
        assert_eq!(rank(&rows, QQ), n);
    }

    #[test]
    fn bareiss_paths_agree() {
        let rows = vec![vec![2, -1, 0, 3], vec![4, -2, 1, 1], vec![6, -3, 1, 4], vec![0, 0, 5, -5]];
        let big = bareiss_big(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        );
        assert_eq!(rank(&rows, QQ), big);
        assert_eq!(big, 3);
    }
}

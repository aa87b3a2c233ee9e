//! Exact matrix rank over the rationals and over prime fields.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 for the rationals, otherwise a
/// prime `p` for `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
#[serde(transparent)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(c: u64) -> Result<Self> {
        if c == 0 || is_prime(c) {
            Ok(Characteristic(c))
        } else {
            Err(Error::BadCharacteristic(c))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(c: u64) -> bool {
    if c < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= c {
        if c.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of an integer matrix over the field of characteristic `ch`.
pub fn rank(rows: &[Vec<i64>], ch: Characteristic) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match ch.0 {
        0 => rank_rational(rows),
        p => rank_mod_p(rows, p),
    }
}

/// Fraction-free (Bareiss) elimination in `i128`, restarted in big integers
/// if an intermediate value overflows.
fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    match bareiss_i128(&mut m) {
        Some(r) => r,
        None => {
            let mut m: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_big(&mut m)
        }
    }
}

fn bareiss_i128(m: &mut [Vec<i128>]) -> Option<usize> {
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col];
        for r in rank + 1..nrows {
            let f = m[r][col];
            for c in col + 1..ncols {
                let a = m[r][c].checked_mul(p)?;
                let b = m[rank][c].checked_mul(f)?;
                m[r][c] = a.checked_sub(b)? / prev;
            }
            m[r][col] = 0;
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(m: &mut [Vec<BigInt>]) -> usize {
    let zero = BigInt::from(0);
    let nrows = m.len();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(rank, piv);
        let p = m[rank][col].clone();
        for r in rank + 1..nrows {
            let f = m[r][col].clone();
            for c in col + 1..ncols {
                let v = (&m[r][c] * &p - &m[rank][c] * &f) / &prev;
                m[r][c] = v;
            }
            m[r][col] = zero.clone();
        }
        prev = p;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let reduce = |x: i64| -> u64 { (i128::from(x)).rem_euclid(i128::from(p)) as u64 };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m[0].len();
    let mulmod = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for c in col..ncols {
            m[rank][c] = mulmod(m[rank][c], inv);
        }
        for r in rank + 1..nrows {
            let f = m[r][col];
            if f == 0 {
                continue;
            }
            for c in col..ncols {
                let sub = mulmod(f, m[rank][c]);
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((u128::from(acc) * u128::from(base)) % u128::from(p)) as u64;
        }
        base = ((u128::from(base) * u128::from(base)) % u128::from(p)) as u64;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn characteristic_validation() {
        assert!(Characteristic::new(0).is_ok());
        assert!(Characteristic::new(2).is_ok());
        assert!(Characteristic::new(101).is_ok());
        assert_eq!(Characteristic::new(1), Err(Error::BadCharacteristic(1)));
        assert_eq!(Characteristic::new(9), Err(Error::BadCharacteristic(9)));
    }

    #[test]
    fn char_dependent_rank() {
        // det = 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank(&m, Characteristic::ZERO), 2);
        assert_eq!(rank(&m, Characteristic::new(2).unwrap()), 1);
        assert_eq!(rank(&m, Characteristic::new(3).unwrap()), 2);
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(rank(&[], Characteristic::ZERO), 0);
        assert_eq!(rank(&[vec![]], Characteristic::ZERO), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]], Characteristic::ZERO), 0);
    }

    #[test]
    fn big_entries_fall_back() {
        let big = i64::MAX / 2;
        let m = vec![
            vec![big, big - 1, 3],
            vec![big - 7, big, 5],
            vec![2 * (big / 3), big - 11, big],
        ];
        let ch = Characteristic::ZERO;
        let mut small: Vec<Vec<i128>> = m
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        assert!(bareiss_i128(&mut small).is_none());
        assert_eq!(rank(&m, ch), 3);
    }

    /// Rank via Gaussian elimination over exact fractions of i128, a second
    /// independent route for small matrices.
    fn rank_by_fractions(rows: &[Vec<i64>]) -> usize {
        #[derive(Clone, Copy)]
        struct Q(i128, i128);
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        fn norm(q: Q) -> Q {
            let g = gcd(q.0, q.1).max(1);
            let s = if q.1 < 0 { -1 } else { 1 };
            Q(s * q.0 / g, s * q.1 / g)
        }
        let mut m: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Q(x as i128, 1)).collect())
            .collect();
        let (nr, nc) = (m.len(), m[0].len());
        let mut rank = 0;
        for col in 0..nc {
            let Some(piv) = (rank..nr).find(|&r| m[r][col].0 != 0) else {
                continue;
            };
            m.swap(rank, piv);
            for r in rank + 1..nr {
                let f = norm(Q(
                    m[r][col].0 * m[rank][col].1,
                    m[r][col].1 * m[rank][col].0,
                ));
                for c in col..nc {
                    let t = m[rank][c];
                    let prod = norm(Q(f.0 * t.0, f.1 * t.1));
                    let cur = m[r][c];
                    m[r][c] = norm(Q(cur.0 * prod.1 - prod.0 * cur.1, cur.1 * prod.1));
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_matches_fractions(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..5)) {
            prop_assert_eq!(rank(&rows, Characteristic::ZERO), rank_by_fractions(&rows));
        }

        #[test]
        fn rank_mod_p_bounded_by_rational(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
            let r0 = rank(&rows, Characteristic::ZERO);
            for p in [2u64, 3, 5] {
                prop_assert!(rank(&rows, Characteristic::new(p).unwrap()) <= r0);
            }
            prop_assert_eq!(rank(&rows, Characteristic::new(1_000_003).unwrap()), r0);
        }
    }
}

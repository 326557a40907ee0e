//! The recursive coefficient family behind the polynomial projections.
//!
//! With `c_{0,0,0,0}(0) = 1`, the normalization identity
//! `q^4 z1 z1* + q^2 z2* z2 + z3* z3 + z4 z4* = 1` inserted between a column
//! word and its adjoint yields
//!
//! ```text
//! c_{j1,j2,j3,j4}(N+1) = q^(4 + 2(j2+j3-j4)) c_{j1-1,j2,j3,j4}(N)
//!                      + q^(2 + 2(j3-j4))    c_{j1,j2-1,j3,j4}(N)
//!                      + q^(-2 j4)           c_{j1,j2,j3-1,j4}(N)
//!                      +                     c_{j1,j2,j3,j4-1}(N).
//! ```
//!
//! Entries vanish unless all indices are nonnegative and sum to `N`.

use std::collections::BTreeMap;

use crate::scalar::QRational;

/// Memoized table of the coefficients, filled level by level.
#[derive(Clone, Debug)]
pub struct CoeffTable {
    max_level: u32,
    values: BTreeMap<(u32, [u32; 4]), QRational>,
}

impl CoeffTable {
    /// Fills every level up to and including `max_level`.
    pub fn up_to(max_level: u32) -> Self {
        let mut values = BTreeMap::new();
        values.insert((0, [0, 0, 0, 0]), QRational::one());
        for level in 1..=max_level {
            for j in compositions(level) {
                let mut acc = QRational::zero();
                let [j1, j2, j3, j4] = j;
                let prev = |values: &BTreeMap<(u32, [u32; 4]), QRational>,
                            jj: [u32; 4]|
                 -> QRational {
                    values.get(&(level - 1, jj)).cloned().unwrap_or_else(QRational::zero)
                };
                if j1 > 0 {
                    let w = 4 + 2 * (j2 as i64 + j3 as i64 - j4 as i64);
                    acc = acc.add(
                        &QRational::q_power(w).mul(&prev(&values, [j1 - 1, j2, j3, j4])),
                    );
                }
                if j2 > 0 {
                    let w = 2 + 2 * (j3 as i64 - j4 as i64);
                    acc = acc.add(
                        &QRational::q_power(w).mul(&prev(&values, [j1, j2 - 1, j3, j4])),
                    );
                }
                if j3 > 0 {
                    let w = -2 * j4 as i64;
                    acc = acc.add(
                        &QRational::q_power(w).mul(&prev(&values, [j1, j2, j3 - 1, j4])),
                    );
                }
                if j4 > 0 {
                    acc = acc.add(&prev(&values, [j1, j2, j3, j4 - 1]));
                }
                values.insert((level, j), acc);
            }
        }
        CoeffTable { max_level, values }
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// The coefficient `c_j(level)`; out-of-range indices give zero.
    pub fn get(&self, j: [u32; 4], level: u32) -> QRational {
        assert!(level <= self.max_level, "table filled only up to {}", self.max_level);
        if j.iter().sum::<u32>() != level {
            return QRational::zero();
        }
        self.values.get(&(level, j)).cloned().unwrap_or_else(QRational::zero)
    }
}

/// All `(j1, j2, j3, j4)` with the given sum, in the display order used for
/// the projection columns: indices touching more distinct generators first,
/// then lexicographic in the letter word.
pub fn compositions(total: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for j1 in 0..=total {
        for j2 in 0..=total - j1 {
            for j3 in 0..=total - j1 - j2 {
                let j4 = total - j1 - j2 - j3;
                out.push([j1, j2, j3, j4]);
            }
        }
    }
    out.sort_by_key(|j| {
        let distinct = j.iter().filter(|&&x| x > 0).count();
        let word: Vec<u32> = (0..4)
            .flat_map(|i| std::iter::repeat(i as u32 + 1).take(j[i] as usize))
            .collect();
        (std::cmp::Reverse(distinct), word)
    });
    out
}

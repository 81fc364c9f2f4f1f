//! Brute-force check: lay out an explicit permutation with the requested
//! cycle structure and count periodic points by walking the successor array.

use thiserror::Error;

use crate::scalar::Scalar;
use crate::transforms::{to_usizes, Seq, TransformError};

/// Largest permutation the oracle will build.
pub const MAX_POINTS: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// `points` saturates at `u128::MAX`.
    #[error("permutation would need {points} points (limit {MAX_POINTS})")]
    TooLarge { points: u128 },
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// A permutation of `0..domain_size` built from orbit counts.
///
/// Cycles are laid out consecutively in increasing length; within a block
/// starting at `b`, point `b + i` maps to `b + (i + 1) mod len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMap {
    image: Vec<usize>,
    cycle_manifest: Vec<(usize, usize)>,
}

impl PermutationMap {
    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `(cycle length, number of cycles)` for every length with a non-zero count.
    pub fn cycle_manifest(&self) -> &[(usize, usize)] {
        &self.cycle_manifest
    }

    pub fn is_bijection(&self) -> bool {
        let mut hit = vec![false; self.image.len()];
        for &y in &self.image {
            if y >= hit.len() || hit[y] {
                return false;
            }
            hit[y] = true;
        }
        true
    }

    /// Cycle lengths found by walking the map, as a sorted manifest.
    pub fn observed_cycles(&self) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.image.len()];
        let mut lengths = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable();
        let mut manifest: Vec<(usize, usize)> = Vec::new();
        for l in lengths {
            match manifest.last_mut() {
                Some((len, count)) if *len == l => *count += 1,
                _ => manifest.push((l, 1)),
            }
        }
        manifest
    }

    /// Number of points `x` with `map^k(x) = x`, by direct iteration.
    pub fn count_fixed_points(&self, k: usize) -> usize {
        (0..self.image.len())
            .filter(|&x| {
                let mut y = x;
                for _ in 0..k {
                    y = self.image[y];
                }
                y == x
            })
            .count()
    }

    /// Same count from the manifest: a point is fixed by `map^k` iff its
    /// cycle length divides `k`.
    pub fn count_fixed_points_by_cycles(&self, k: usize) -> usize {
        self.cycle_manifest
            .iter()
            .filter(|&&(len, _)| k.is_multiple_of(len))
            .map(|&(len, count)| len * count)
            .sum()
    }

    /// Recounted periodic-point sequence for `k = 1..=len`.
    pub fn periodic_point_counts(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|k| self.count_fixed_points(k)).collect()
    }
}

/// Builds a permutation with exactly `o_n` cycles of length `n`.
pub fn build_permutation<T: Scalar>(orbit_counts: &Seq<T>) -> Result<PermutationMap, OracleError> {
    let mut total = 0u128;
    for (n, o) in orbit_counts.indexed() {
        if o.is_negative() {
            return Err(TransformError::Negative { index: n }.into());
        }
        let o = o.to_u128().unwrap_or(u128::MAX);
        total = total.saturating_add(o.saturating_mul(n as u128));
    }
    if total > MAX_POINTS as u128 {
        return Err(OracleError::TooLarge { points: total });
    }
    let counts = to_usizes(orbit_counts)?;
    let mut image = Vec::with_capacity(total as usize);
    let mut manifest = Vec::new();
    for (i, &o) in counts.iter().enumerate() {
        let len = i + 1;
        if o > 0 {
            manifest.push((len, o));
        }
        for _ in 0..o {
            let base = image.len();
            image.extend((0..len).map(|j| base + (j + 1) % len));
        }
    }
    Ok(PermutationMap {
        image,
        cycle_manifest: manifest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn orbits(v: &[i64]) -> Seq<BigInt> {
        Seq::from_i64s(v).unwrap()
    }

    #[test]
    fn small_layouts() {
        let id = build_permutation(&orbits(&[1, 0, 0])).unwrap();
        assert_eq!(id.image(), &[0]);
        let m = build_permutation(&orbits(&[1, 1, 1])).unwrap();
        assert_eq!(m.image(), &[0, 2, 1, 4, 5, 3]);
        assert_eq!(m.domain_size(), 6);
        assert_eq!(m.cycle_manifest(), &[(1, 1), (2, 1), (3, 1)]);
        // 2·1 + 1·2 + 2·3 + 3·4
        assert_eq!(build_permutation(&orbits(&[2, 1, 2, 3])).unwrap().domain_size(), 22);
    }

    #[test]
    fn fixed_point_counts() {
        let id = build_permutation(&orbits(&[5])).unwrap();
        for k in 1..6 {
            assert_eq!(id.count_fixed_points(k), 5);
        }
        let three = build_permutation(&orbits(&[0, 0, 1])).unwrap();
        assert_eq!(three.count_fixed_points(2), 0);
        assert_eq!(three.count_fixed_points(3), 3);
        let lucas = build_permutation(&orbits(&[1, 1, 1, 1, 2, 2])).unwrap();
        assert_eq!(lucas.count_fixed_points(6), 18);
        assert_eq!(lucas.periodic_point_counts(6), vec![1, 3, 4, 7, 11, 18]);
    }

    #[test]
    fn both_counting_paths_agree() {
        let m = build_permutation(&orbits(&[3, 0, 2, 1, 0, 4, 1])).unwrap();
        assert!(m.is_bijection());
        assert_eq!(m.observed_cycles(), m.cycle_manifest());
        for k in 1..=30 {
            assert_eq!(m.count_fixed_points(k), m.count_fixed_points_by_cycles(k), "k={k}");
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            build_permutation(&orbits(&[0, 6_000_000])),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(matches!(
            build_permutation(&orbits(&[1, -1])),
            Err(OracleError::Transform(TransformError::Negative { index: 2 }))
        ));
    }
}

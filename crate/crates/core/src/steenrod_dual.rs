//! Milnor generators of the mod-`p` dual Steenrod algebra.
//!
//! At `p = 2` the dual Steenrod algebra is polynomial on `ξ_i` in degree
//! `2^i - 1` (`i ≥ 1`). At odd `p` it is polynomial on `ξ_i` in degree
//! `2(p^i - 1)` tensored with an exterior algebra on `τ_i` in degree
//! `2p^i - 1` (`i ≥ 0`).

use std::fmt;

use crate::free_algebra::{Generator, GeneratorKind, GeneratorSet};
use crate::prime::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MilnorFamily {
    Xi,
    Tau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MilnorGenerator {
    pub family: MilnorFamily,
    pub index: u32,
    pub degree: usize,
    pub kind: GeneratorKind,
}

impl MilnorGenerator {
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MilnorGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            MilnorFamily::Xi => write!(f, "xi_{}", self.index),
            MilnorFamily::Tau => write!(f, "tau_{}", self.index),
        }
    }
}

/// All Milnor generators of degree at most `max_degree`, ordered by
/// (degree, family, index).
pub fn milnor_generators(prime: Prime, max_degree: usize) -> Vec<MilnorGenerator> {
    let p = prime.as_usize();
    let mut out = Vec::new();
    // p^i for i = 0, 1, ... while the smallest generator using it fits
    let powers = std::iter::successors(Some(1usize), |q| q.checked_mul(p));
    for (i, power) in powers.enumerate() {
        let index = i as u32;
        if prime.is_two() {
            if i == 0 {
                continue;
            }
            let degree = power - 1;
            if degree > max_degree {
                break;
            }
            out.push(MilnorGenerator {
                family: MilnorFamily::Xi,
                index,
                degree,
                kind: GeneratorKind::Polynomial,
            });
        } else {
            let tau_degree = power.saturating_mul(2) - 1;
            if tau_degree > max_degree {
                break;
            }
            out.push(MilnorGenerator {
                family: MilnorFamily::Tau,
                index,
                degree: tau_degree,
                kind: GeneratorKind::Exterior,
            });
            let xi_degree = (power - 1).saturating_mul(2);
            if i > 0 && xi_degree <= max_degree {
                out.push(MilnorGenerator {
                    family: MilnorFamily::Xi,
                    index,
                    degree: xi_degree,
                    kind: GeneratorKind::Polynomial,
                });
            }
        }
    }
    out.sort_by_key(|g| (g.degree, g.family, g.index));
    out
}

/// Milnor generators through `max_degree` as a [`GeneratorSet`] labelled
/// `xi_i` / `tau_i`.
pub fn milnor_generator_degrees(prime: Prime, max_degree: usize) -> GeneratorSet {
    GeneratorSet::from_generators(
        milnor_generators(prime, max_degree).into_iter().map(|g| {
            Generator::new(g.label(), g.degree, g.kind).expect("Milnor degrees are positive")
        }),
    )
    .expect("Milnor labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::series_of;

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn summary(prime: u32, max: usize) -> Vec<(String, usize, GeneratorKind)> {
        milnor_generators(p(prime), max)
            .iter()
            .map(|g| (g.label(), g.degree, g.kind))
            .collect()
    }

    use GeneratorKind::{Exterior as Ext, Polynomial as Poly};

    #[test]
    fn three_through_eight() {
        assert_eq!(
            summary(3, 8),
            [
                ("tau_0".into(), 1, Ext),
                ("xi_1".into(), 4, Poly),
                ("tau_1".into(), 5, Ext)
            ]
        );
        let dims: Vec<i64> = series_of(&milnor_generator_degrees(p(3), 8), 8)
            .coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        assert_eq!(dims, vec![1, 1, 0, 0, 1, 2, 1, 0, 1]);
    }

    #[test]
    fn two_through_eight() {
        assert_eq!(
            summary(2, 8),
            [
                ("xi_1".into(), 1, Poly),
                ("xi_2".into(), 3, Poly),
                ("xi_3".into(), 7, Poly)
            ]
        );
    }

    #[test]
    fn seven_through_twenty_four() {
        assert_eq!(
            summary(7, 24),
            [
                ("tau_0".into(), 1, Ext),
                ("xi_1".into(), 12, Poly),
                ("tau_1".into(), 13, Ext)
            ]
        );
    }

    #[test]
    fn degree_zero_range_is_empty() {
        assert!(milnor_generators(p(5), 0).is_empty());
        assert!(milnor_generators(p(2), 0).is_empty());
    }

    #[test]
    fn degrees_increase_within_families() {
        for prime in [2, 3, 5, 7, 11] {
            let gens = milnor_generators(p(prime), 5000);
            for family in [MilnorFamily::Xi, MilnorFamily::Tau] {
                let degrees: Vec<_> = gens
                    .iter()
                    .filter(|g| g.family == family)
                    .map(|g| g.degree)
                    .collect();
                assert!(degrees.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn three_smallest_odd_degrees() {
        for prime in [3u32, 5, 7, 11, 13] {
            let q = prime as usize;
            let degrees: Vec<_> = milnor_generators(p(prime), 10 * q * q)
                .iter()
                .take(3)
                .map(|g| g.degree)
                .collect();
            assert_eq!(degrees, vec![1, 2 * q - 2, 2 * q - 1]);
        }
    }

    #[test]
    fn seven_elements_through_gap_degree() {
        for prime in [3u32, 5, 7] {
            let gap = p(prime).gap_degree();
            let series = series_of(&milnor_generator_degrees(p(prime), gap), gap);
            let total: i64 = series
                .coefficients()
                .iter()
                .map(|c| i64::try_from(c).unwrap())
                .sum();
            assert_eq!(total, 7, "p = {prime}");
        }
    }
}

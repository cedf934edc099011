//! Dimension computations for `S//p` and the spectra built from it.
//!
//! Homotopy dimensions come from dividing the Poincaré series of
//! `H_*(S//p)` by that of the dual Steenrod algebra. This is valid because
//! `S//p` is additively a graded Eilenberg–Mac Lane spectrum, so that
//! `H_*(S//p) ≅ π_*(S//p) ⊗ H_*(HF_p)`; dimensions are therefore counts of
//! `Z/p` summands.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyer_lashof::{self, AdmissibleWord, DyerLashofError};
use crate::free_algebra::{enumerate_monomials, series_of, GeneratorSet, MonomialBasis};
use crate::power_series::{SeriesError, TruncatedSeries};
use crate::prime::Prime;
use crate::steenrod_dual::milnor_generator_degrees;

/// Name of the degree-2 class generating `H_*(Q(S^2))`.
pub const SUSPENDED_CLASS: &str = "u";

/// `Tor^Z_*(Z/p, Z/p)` as a dimension sequence: `Tor_0` and `Tor_1`.
const TOR_DIMENSIONS: [u32; 2] = [1, 1];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VersalError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    DyerLashof(#[from] DyerLashofError),
    #[error("negative homotopy dimension {value} in degree {degree}")]
    NegativeCoefficient { degree: usize, value: BigInt },
    #[error("H_1 has dimension {0}, expected 1")]
    FirstHomologyDimension(BigInt),
    #[error("no nonzero positive-degree homotopy through degree {0}")]
    NoPositiveHomotopy(usize),
    #[error("homology agrees with Tor through degree {0}")]
    NoDifference(usize),
    #[error("degree-4 basis is missing {0}")]
    CollisionSourceMissing(String),
    #[error("no stored relation gives the image of {0}")]
    UnknownImage(String),
}

impl VersalError {
    /// Errors that indicate a mathematical inconsistency rather than bad
    /// input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            VersalError::NegativeCoefficient { .. }
                | VersalError::FirstHomologyDimension(_)
                | VersalError::NoPositiveHomotopy(_)
                | VersalError::CollisionSourceMissing(_)
                | VersalError::UnknownImage(_)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyReport {
    pub prime: Prime,
    pub max_degree: usize,
    pub homology_series: TruncatedSeries,
    pub steenrod_series: TruncatedSeries,
    pub homotopy_series: TruncatedSeries,
    /// Dimension 1 in degree 0, 0 strictly between 0 and `4(p - 1)`, and 1 in
    /// degree `4(p - 1)`, as far as the truncation reaches.
    pub gap_verified: bool,
    pub first_positive_nonzero_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaqReport {
    pub dimensions: TruncatedSeries,
    pub cotangent_series: TruncatedSeries,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionWitness {
    pub degree: usize,
    pub source_monomials: [String; 2],
    pub image: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            name: name.to_owned(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn homology_generators(prime: Prime, max_degree: usize) -> GeneratorSet {
    dyer_lashof::enumerate_generators(prime, 1, max_degree).expect("class degree is 1")
}

/// Poincaré series of `H_*(S//p) ≅ H_*(Q(S^1))`.
pub fn homology_series(prime: Prime, max_degree: usize) -> TruncatedSeries {
    series_of(&homology_generators(prime, max_degree), max_degree)
}

/// Monomial basis of `H_*(S//p)` through `max_degree`.
pub fn homology_basis(prime: Prime, max_degree: usize) -> MonomialBasis {
    enumerate_monomials(&homology_generators(prime, max_degree), max_degree)
}

pub fn steenrod_series(prime: Prime, max_degree: usize) -> TruncatedSeries {
    series_of(&milnor_generator_degrees(prime, max_degree), max_degree)
}

/// Monomial basis of the dual Steenrod algebra through `max_degree`.
pub fn steenrod_basis(prime: Prime, max_degree: usize) -> MonomialBasis {
    enumerate_monomials(&milnor_generator_degrees(prime, max_degree), max_degree)
}

pub fn homotopy_series(prime: Prime, max_degree: usize) -> Result<HomotopyReport, VersalError> {
    let homology = homology_series(prime, max_degree);
    let steenrod = steenrod_series(prime, max_degree);
    let homotopy = homology.div(&steenrod)?;
    if let Some(degree) = homotopy.first_negative_degree() {
        return Err(VersalError::NegativeCoefficient {
            degree,
            value: homotopy.coefficient(degree).clone(),
        });
    }
    let gap = prime.gap_degree();
    let gap_verified = homotopy.coefficients().iter().enumerate().all(|(n, c)| {
        if n == 0 || n == gap {
            c.is_one()
        } else {
            n > gap || c.is_zero()
        }
    });
    Ok(HomotopyReport {
        prime,
        max_degree,
        first_positive_nonzero_degree: homotopy.first_positive_nonzero_degree(),
        homology_series: homology,
        steenrod_series: steenrod,
        homotopy_series: homotopy,
        gap_verified,
    })
}

/// Degree of the first nontrivial homotopy group of the space of `E_∞`
/// self-maps of `S//p`, which is `π_{n+1}(S//p)` in degree `n`.
pub fn selfmap_first_nontrivial(prime: Prime) -> Result<usize, VersalError> {
    let max_degree = prime.gap_degree();
    let report = homotopy_series(prime, max_degree)?;
    report
        .first_positive_nonzero_degree
        .map(|d| d - 1)
        .ok_or(VersalError::NoPositiveHomotopy(max_degree))
}

/// Number of homotopy classes of self-equivalences of `S//p`: the units of
/// `F_p` acting on the one-dimensional `H_1`.
pub fn equivalence_count(prime: Prime) -> Result<u32, VersalError> {
    let h1 = homology_series(prime, 1).coefficient(1).clone();
    if !h1.is_one() {
        return Err(VersalError::FirstHomologyDimension(h1));
    }
    Ok(prime.get() - 1)
}

/// Generators of the free Dyer–Lashof algebra on the degree-2 class `u`, the
/// homology of `Q(S^2)`.
pub fn suspended_generators(prime: Prime, max_degree: usize) -> GeneratorSet {
    dyer_lashof::enumerate_generators_on(prime, 2, max_degree, SUSPENDED_CLASS)
        .expect("class degree is 2")
}

/// Poincaré series of `H_*(THH(S//p)) ≅ H_*(S//p) ⊗ H_*(Q(S^2)_+)`.
pub fn thh_homology_series(
    prime: Prime,
    max_degree: usize,
) -> Result<TruncatedSeries, VersalError> {
    let loops = series_of(&suspended_generators(prime, max_degree), max_degree);
    Ok(homology_series(prime, max_degree).mul(&loops)?)
}

/// `TAQ(S//p) ≃ HF_p ∧_{S//p} ΣS//p ≃ ΣHF_p`, together with the cotangent
/// dimensions `t · π_*(S//p)`.
pub fn taq_dimensions(prime: Prime, max_degree: usize) -> Result<TaqReport, VersalError> {
    let report = homotopy_series(prime, max_degree)?;
    Ok(TaqReport {
        dimensions: TruncatedSeries::one(max_degree).shift_up(),
        cotangent_series: report.homotopy_series.shift_up(),
    })
}

/// First degree where `π_*(HF_p ∧_{HZ} HZ//p) ≅ H_*(S//p)` differs from
/// `Tor^Z_*(Z/p, Z/p)`.
pub fn hz_quotient_comparison(prime: Prime, max_degree: usize) -> Result<usize, VersalError> {
    let homology = homology_series(prime, max_degree);
    homology
        .coefficients()
        .iter()
        .enumerate()
        .find(|&(n, c)| {
            let tor = TOR_DIMENSIONS.get(n).copied().unwrap_or(0);
            *c != BigInt::from(tor)
        })
        .map(|(n, _)| n)
        .ok_or(VersalError::NoDifference(max_degree))
}

/// A monomial `e_1^{k_1} e_2^{k_2} ...` in `H_*(BO; F_2)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct BoMonomial(BTreeMap<u32, u32>);

impl BoMonomial {
    fn e(j: u32, power: u32) -> Self {
        BoMonomial(BTreeMap::from([(j, power)]))
    }

    fn pow(&self, k: u32) -> Self {
        BoMonomial(self.0.iter().map(|(&j, &e)| (j, e * k)).collect())
    }

    fn times(mut self, other: &Self) -> Self {
        for (&j, &e) in &other.0 {
            *self.0.entry(j).or_insert(0) += e;
        }
        self
    }

    fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        self.0
            .iter()
            .map(|(j, e)| match e {
                1 => format!("e_{j}"),
                _ => format!("e_{j}^{e}"),
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

// Known values Q^i e_1 in H_*(BO; F_2), as (i, e_1-power).
const OPERATIONS_ON_E1: &[(u32, u32)] = &[(3, 4)];

// s_* a = e_1 and s_* commutes with the operations; only words with a known
// value on e_1 have an image.
fn structure_map_image(word: &AdmissibleWord) -> Option<BoMonomial> {
    match word.operations() {
        [] => Some(BoMonomial::e(1, 1)),
        [op] => OPERATIONS_ON_E1
            .iter()
            .find(|(i, _)| *i == op.index)
            .map(|&(_, power)| BoMonomial::e(1, power)),
        _ => None,
    }
}

/// Two distinct degree-4 basis elements of `H_*(S//2)` with the same image
/// under the structure map `S//2 → MO`.
pub fn structure_map_collision() -> Result<CollisionWitness, VersalError> {
    const DEGREE: usize = 4;
    let prime = Prime::TWO;
    let words: HashMap<String, AdmissibleWord> = dyer_lashof::generator_words(prime, 1, DEGREE)?
        .into_iter()
        .map(|w| (w.to_string(), w))
        .collect();
    let basis = homology_basis(prime, DEGREE);
    let sources = ["Q^3 a", "a^4"];
    let mut images = Vec::with_capacity(2);
    for rendering in sources {
        let monomial = basis
            .find(DEGREE, rendering)
            .ok_or_else(|| VersalError::CollisionSourceMissing(rendering.to_owned()))?;
        let mut image = BoMonomial::default();
        for (index, exponent) in monomial.factors() {
            let label = basis.generators().get(index).expect("factor index").label();
            let value = words
                .get(label)
                .and_then(structure_map_image)
                .ok_or_else(|| VersalError::UnknownImage(label.to_owned()))?;
            image = image.times(&value.pow(exponent));
        }
        images.push((monomial.clone(), image));
    }
    let (first, second) = (&images[0], &images[1]);
    if first.0 == second.0 {
        return Err(VersalError::CollisionSourceMissing(sources[1].to_owned()));
    }
    if first.1 != second.1 {
        return Err(VersalError::UnknownImage(format!(
            "{} and {} map to {} and {}",
            sources[0],
            sources[1],
            first.1.render(),
            second.1.render()
        )));
    }
    Ok(CollisionWitness {
        degree: DEGREE,
        source_monomials: sources.map(str::to_owned),
        image: first.1.render(),
    })
}

fn series_text(series: &TruncatedSeries) -> String {
    let coeffs: Vec<String> = series
        .coefficients()
        .iter()
        .map(ToString::to_string)
        .collect();
    format!("[{}]", coeffs.join(","))
}

/// Runs every available consistency check for `prime` through
/// `max(max_degree, 4(p - 1))`.
pub fn verify(prime: Prime, max_degree: usize) -> Vec<Verdict> {
    let n = max_degree.max(prime.gap_degree());
    let gap = prime.gap_degree();
    let mut verdicts = Vec::new();

    let homology = homology_series(prime, n);
    verdicts.push(Verdict::new(
        "h1-dimension",
        homology.coefficient(1).is_one(),
        format!("dim H_1 = {}", homology.coefficient(1)),
    ));

    let basis = homology_basis(prime, n);
    let counts_match = basis
        .dimensions()
        .iter()
        .zip(homology.coefficients())
        .all(|(&d, c)| BigInt::from(d) == *c);
    verdicts.push(Verdict::new(
        "basis-count",
        counts_match,
        format!("monomial counts {:?}", basis.dimensions()),
    ));

    match homotopy_series(prime, n) {
        Ok(report) => {
            verdicts.push(Verdict::new(
                "pi0",
                report.homotopy_series.coefficient(0).is_one(),
                format!("dim pi_0 = {}", report.homotopy_series.coefficient(0)),
            ));
            verdicts.push(Verdict::new(
                "gap",
                report.gap_verified,
                format!(
                    "homotopy {} (expect 1 + t^{gap})",
                    series_text(&report.homotopy_series)
                ),
            ));
            let product = report.homotopy_series.mul(&report.steenrod_series);
            verdicts.push(Verdict::new(
                "tensor-identity",
                product.as_ref() == Ok(&report.homology_series),
                "homotopy x steenrod = homology",
            ));
            verdicts.push(Verdict::new(
                "nonnegativity",
                report.homotopy_series.is_nonnegative(),
                format!("through degree {n}"),
            ));
            match taq_dimensions(prime, n) {
                Ok(taq) => {
                    let single = taq
                        .dimensions
                        .coefficients()
                        .iter()
                        .enumerate()
                        .all(|(d, c)| if d == 1 { c.is_one() } else { c.is_zero() });
                    let shifted = taq.cotangent_series == report.homotopy_series.shift_up();
                    verdicts.push(Verdict::new(
                        "taq",
                        single && shifted,
                        format!("taq {}", series_text(&taq.dimensions)),
                    ));
                }
                Err(e) => verdicts.push(Verdict::new("taq", false, e.to_string())),
            }
        }
        Err(e) => verdicts.push(Verdict::new("homotopy", false, e.to_string())),
    }

    let expected_selfmap = 4 * prime.as_usize() - 5;
    verdicts.push(match selfmap_first_nontrivial(prime) {
        Ok(d) => Verdict::new(
            "selfmap",
            d == expected_selfmap,
            format!("first nontrivial degree {d}, expected {expected_selfmap}"),
        ),
        Err(e) => Verdict::new("selfmap", false, e.to_string()),
    });

    verdicts.push(match equivalence_count(prime) {
        Ok(c) => Verdict::new(
            "equivalences",
            c + 1 == prime.get(),
            format!("{c} equivalences"),
        ),
        Err(e) => Verdict::new("equivalences", false, e.to_string()),
    });

    let expected_hz = if prime.is_two() {
        2
    } else {
        2 * prime.as_usize() - 2
    };
    verdicts.push(match hz_quotient_comparison(prime, n) {
        Ok(d) => Verdict::new(
            "hz-compare",
            d == expected_hz,
            format!("first difference in degree {d}, expected {expected_hz}"),
        ),
        Err(e) => Verdict::new("hz-compare", false, e.to_string()),
    });

    verdicts.push(match thh_homology_series(prime, n) {
        Ok(thh) => {
            let tensor = homology_generators(prime, n)
                .union(&suspended_generators(prime, n))
                .map(|g| enumerate_monomials(&g, n).dimensions());
            let agrees = match tensor {
                Ok(dims) => dims
                    .iter()
                    .zip(thh.coefficients())
                    .all(|(&d, c)| BigInt::from(d) == *c),
                Err(_) => false,
            };
            Verdict::new("thh", agrees, format!("thh {}", series_text(&thh)))
        }
        Err(e) => Verdict::new("thh", false, e.to_string()),
    });

    if prime.is_two() {
        verdicts.push(match structure_map_collision() {
            Ok(w) => Verdict::new(
                "collision",
                w.source_monomials[0] != w.source_monomials[1],
                format!(
                    "{} and {} both map to {}",
                    w.source_monomials[0], w.source_monomials[1], w.image
                ),
            ),
            Err(e) => Verdict::new("collision", false, e.to_string()),
        });
    }

    verdicts
}

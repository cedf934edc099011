//! Integer power series truncated at a fixed degree.
//!
//! A [`TruncatedSeries`] stores the coefficients `c_0, ..., c_N` of
//! `c_0 + c_1 t + ... + c_N t^N` as arbitrary-precision integers. The
//! truncation degree is part of the value: binary operations refuse
//! operands of different truncation instead of silently re-truncating.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::free_algebra::{GeneratorKind, GeneratorSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation degrees differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("{given} coefficients do not fit below truncation degree {truncation_degree}")]
    TooManyCoefficients {
        given: usize,
        truncation_degree: usize,
    },
    #[error("denominator must have constant term 1, found {0}")]
    NonUnitConstantTerm(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    // always exactly truncation_degree + 1 entries
    coefficients: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series from its low coefficients, padding with zeros up to
    /// `truncation_degree`.
    pub fn from_coefficients<I, C>(
        coefficients: I,
        truncation_degree: usize,
    ) -> Result<Self, SeriesError>
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut coefficients: Vec<BigInt> = coefficients.into_iter().map(Into::into).collect();
        if coefficients.len() > truncation_degree + 1 {
            return Err(SeriesError::TooManyCoefficients {
                given: coefficients.len(),
                truncation_degree,
            });
        }
        coefficients.resize(truncation_degree + 1, BigInt::zero());
        Ok(TruncatedSeries { coefficients })
    }

    pub fn zero(truncation_degree: usize) -> Self {
        TruncatedSeries {
            coefficients: vec![BigInt::zero(); truncation_degree + 1],
        }
    }

    pub fn one(truncation_degree: usize) -> Self {
        let mut series = Self::zero(truncation_degree);
        series.coefficients[0] = BigInt::one();
        series
    }

    /// `1 / (1 - t^d)` for a polynomial generator, `1 + t^d` for an exterior
    /// one. Degrees above the truncation give the constant series 1.
    pub fn generator_factor(degree: usize, kind: GeneratorKind, truncation_degree: usize) -> Self {
        let mut series = Self::one(truncation_degree);
        if degree == 0 || degree > truncation_degree {
            return series;
        }
        match kind {
            GeneratorKind::Polynomial => {
                for n in (degree..=truncation_degree).step_by(degree) {
                    series.coefficients[n] = BigInt::one();
                }
            }
            GeneratorKind::Exterior => series.coefficients[degree] = BigInt::one(),
        }
        series
    }

    pub fn truncation_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `t^n`; zero above the truncation degree is not
    /// defined, so this panics there like slice indexing.
    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coefficients[n]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }

    /// Smallest degree `n` with a negative coefficient.
    pub fn first_negative_degree(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| c.is_negative())
    }

    /// Smallest positive degree with a nonzero coefficient.
    pub fn first_positive_nonzero_degree(&self) -> Option<usize> {
        self.coefficients
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(n, _)| n)
    }

    /// Cauchy product, discarding terms above the common truncation degree.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_same_truncation(other)?;
        let n_max = self.truncation_degree();
        let mut out = Self::zero(n_max);
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=n_max - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coefficients[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// The unique `q` with `q * denominator == self` through the truncation
    /// degree. The denominator must have constant term exactly 1.
    pub fn div(&self, denominator: &Self) -> Result<Self, SeriesError> {
        self.check_same_truncation(denominator)?;
        if !denominator.coefficients[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm(
                denominator.coefficients[0].clone(),
            ));
        }
        let mut quotient: Vec<BigInt> = Vec::with_capacity(self.coefficients.len());
        for (n, numerator) in self.coefficients.iter().enumerate() {
            let mut q = numerator.clone();
            for k in 1..=n {
                let d = &denominator.coefficients[k];
                if !d.is_zero() {
                    q -= d * &quotient[n - k];
                }
            }
            quotient.push(q);
        }
        Ok(TruncatedSeries {
            coefficients: quotient,
        })
    }

    /// Multiplication by `t`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let mut coefficients = Vec::with_capacity(self.coefficients.len());
        coefficients.push(BigInt::zero());
        coefficients.extend_from_slice(&self.coefficients[..self.truncation_degree()]);
        TruncatedSeries { coefficients }
    }

    fn check_same_truncation(&self, other: &Self) -> Result<(), SeriesError> {
        if self.truncation_degree() == other.truncation_degree() {
            Ok(())
        } else {
            Err(SeriesError::TruncationMismatch {
                left: self.truncation_degree(),
                right: other.truncation_degree(),
            })
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let magnitude = c.abs();
            match n {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if n == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{n}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.truncation_degree() + 1)
    }
}

/// Product of the generator factors of `generators`, truncated at
/// `truncation_degree`. This is the Poincaré series of the free
/// graded-commutative algebra on `generators`.
pub fn product_over_generators(
    generators: &GeneratorSet,
    truncation_degree: usize,
) -> TruncatedSeries {
    let mut coefficients = vec![BigInt::zero(); truncation_degree + 1];
    coefficients[0] = BigInt::one();
    for generator in generators.iter() {
        let d = generator.degree();
        if d > truncation_degree {
            continue;
        }
        // in-place multiplication by the factor
        match generator.kind() {
            GeneratorKind::Polynomial => {
                for n in d..=truncation_degree {
                    let lower = coefficients[n - d].clone();
                    coefficients[n] += lower;
                }
            }
            GeneratorKind::Exterior => {
                for n in (d..=truncation_degree).rev() {
                    let lower = coefficients[n - d].clone();
                    coefficients[n] += lower;
                }
            }
        }
    }
    TruncatedSeries { coefficients }
}

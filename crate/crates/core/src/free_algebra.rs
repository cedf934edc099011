//! Free graded-commutative algebras over `F_p`: generator sets, their
//! Poincaré series, and explicit monomial bases.
//!
//! Polynomial generators carry unbounded exponents, exterior generators
//! exponent at most 1.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::power_series::{product_over_generators, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgebraError {
    #[error("generator {0:?} has degree 0")]
    ZeroDegree(String),
    #[error("duplicate generator label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Polynomial,
    Exterior,
}

impl GeneratorKind {
    /// Graded-commutative convention over an odd prime: odd degrees are
    /// exterior, even degrees polynomial.
    pub fn by_parity(degree: usize) -> Self {
        if degree % 2 == 1 {
            GeneratorKind::Exterior
        } else {
            GeneratorKind::Polynomial
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    label: String,
    degree: usize,
    kind: GeneratorKind,
}

impl Generator {
    pub fn new(
        label: impl Into<String>,
        degree: usize,
        kind: GeneratorKind,
    ) -> Result<Self, FreeAlgebraError> {
        let label = label.into();
        if degree == 0 {
            return Err(FreeAlgebraError::ZeroDegree(label));
        }
        Ok(Generator {
            label,
            degree,
            kind,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| natural_cmp(&self.label, &other.label))
    }
}

/// Generators ordered by degree, then by label with embedded numbers
/// compared numerically (so `Q^9 a` sorts before `Q^10 a`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    entries: Vec<Generator>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_generators<I>(generators: I) -> Result<Self, FreeAlgebraError>
    where
        I: IntoIterator<Item = Generator>,
    {
        let mut set = Self::new();
        for g in generators {
            set.insert(g)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, generator: Generator) -> Result<(), FreeAlgebraError> {
        if self.entries.iter().any(|g| g.label == generator.label) {
            return Err(FreeAlgebraError::DuplicateLabel(generator.label));
        }
        let at = self
            .entries
            .partition_point(|g| g.canonical_cmp(&generator) == Ordering::Less);
        self.entries.insert(at, generator);
        Ok(())
    }

    /// Union of two sets; labels must be disjoint.
    pub fn union(&self, other: &Self) -> Result<Self, FreeAlgebraError> {
        let mut out = self.clone();
        for g in other.iter() {
            out.insert(g.clone())?;
        }
        Ok(out)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Generator> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Generator> {
        self.entries.get(index)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.entries.iter().position(|g| g.label == label)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.entries.iter().map(Generator::degree).collect()
    }

    /// Generators of degree at most `max_degree`.
    pub fn up_to_degree(&self, max_degree: usize) -> Self {
        GeneratorSet {
            entries: self
                .entries
                .iter()
                .filter(|g| g.degree <= max_degree)
                .cloned()
                .collect(),
        }
    }
}

impl<'a> IntoIterator for &'a GeneratorSet {
    type Item = &'a Generator;
    type IntoIter = std::slice::Iter<'a, Generator>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Exponents of a monomial, indexed like the generators of its basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, generators: &GeneratorSet) -> usize {
        self.exponents
            .iter()
            .zip(generators.iter())
            .map(|(&e, g)| e as usize * g.degree)
            .sum()
    }

    /// Factors as `(generator index, exponent)` with nonzero exponent.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    /// Renders as e.g. `a^4`, `a·Q^2 a`, `(bQ^1 a)^2`; the unit is `1`.
    pub fn render(&self, generators: &GeneratorSet) -> String {
        if self.is_unit() {
            return "1".to_owned();
        }
        self.factors()
            .map(|(i, e)| {
                let label = generators.entries[i].label.as_str();
                match e {
                    1 => label.to_owned(),
                    _ if label.contains(' ') => format!("({label})^{e}"),
                    _ => format!("{label}^{e}"),
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// The additive basis of a free graded-commutative algebra through a fixed
/// degree, bucketed by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialBasis {
    generators: GeneratorSet,
    buckets: Vec<Vec<Monomial>>,
}

impl MonomialBasis {
    pub fn generators(&self) -> &GeneratorSet {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.buckets.len() - 1
    }

    /// Monomials of degree `degree`, in descending lexicographic order of
    /// exponent vectors.
    pub fn bucket(&self, degree: usize) -> &[Monomial] {
        &self.buckets[degree]
    }

    pub fn buckets(&self) -> &[Vec<Monomial>] {
        &self.buckets
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.buckets.iter().map(Vec::len).collect()
    }

    pub fn rendered_bucket(&self, degree: usize) -> Vec<String> {
        self.buckets[degree]
            .iter()
            .map(|m| m.render(&self.generators))
            .collect()
    }

    /// Finds the monomial with the given rendering in `degree`.
    pub fn find(&self, degree: usize, rendering: &str) -> Option<&Monomial> {
        self.buckets
            .get(degree)?
            .iter()
            .find(|m| m.render(&self.generators) == rendering)
    }
}

impl fmt::Display for MonomialBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in 0..self.buckets.len() {
            writeln!(f, "{d}: {}", self.rendered_bucket(d).join(", "))?;
        }
        Ok(())
    }
}

/// Poincaré series of the free algebra on `generators`.
pub fn series_of(generators: &GeneratorSet, max_degree: usize) -> TruncatedSeries {
    product_over_generators(generators, max_degree)
}

/// Enumerates all monomials of degree `0..=max_degree`.
pub fn enumerate_monomials(generators: &GeneratorSet, max_degree: usize) -> MonomialBasis {
    let usable = generators
        .iter()
        .take_while(|g| g.degree <= max_degree)
        .count();
    let mut buckets = vec![Vec::new(); max_degree + 1];
    let mut exponents = vec![0u32; generators.len()];
    fill_buckets(
        &generators.entries[..usable],
        0,
        0,
        max_degree,
        &mut exponents,
        &mut buckets,
    );
    MonomialBasis {
        generators: generators.clone(),
        buckets,
    }
}

// Depth-first over generators sorted by ascending degree, trying the largest
// exponent first, so each bucket comes out in descending lex order.
fn fill_buckets(
    generators: &[Generator],
    index: usize,
    degree: usize,
    max_degree: usize,
    exponents: &mut [u32],
    buckets: &mut [Vec<Monomial>],
) {
    let remaining = max_degree - degree;
    if index == generators.len() || generators[index].degree > remaining {
        buckets[degree].push(Monomial {
            exponents: exponents.to_vec(),
        });
        return;
    }
    let g = &generators[index];
    let max_exponent = match g.kind {
        GeneratorKind::Polynomial => remaining / g.degree,
        GeneratorKind::Exterior => 1,
    };
    for e in (0..=max_exponent).rev() {
        exponents[index] = e as u32;
        fill_buckets(
            generators,
            index + 1,
            degree + e * g.degree,
            max_degree,
            exponents,
            buckets,
        );
    }
    exponents[index] = 0;
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    let mut a = a.chars().peekable();
    let mut b = b.chars().peekable();
    loop {
        match (a.peek().copied(), b.peek().copied()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let take = |it: &mut std::iter::Peekable<std::str::Chars<'_>>| {
                    let mut digits = String::new();
                    while let Some(c) = it.peek().copied().filter(char::is_ascii_digit) {
                        digits.push(c);
                        it.next();
                    }
                    digits
                };
                let (da, db) = (take(&mut a), take(&mut b));
                let (ta, tb) = (da.trim_start_matches('0'), db.trim_start_matches('0'));
                let ord = ta
                    .len()
                    .cmp(&tb.len())
                    .then_with(|| ta.cmp(tb))
                    .then_with(|| da.len().cmp(&db.len()));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(&y);
                }
                a.next();
                b.next();
            }
        }
    }
}

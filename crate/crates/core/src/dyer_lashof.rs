//! Admissible Dyer–Lashof words and the free generators they index.
//!
//! A word `Q^{i_1} ... Q^{i_k}` (at `p = 2`) or
//! `β^{ε_1}Q^{s_1} ... β^{ε_k}Q^{s_k}` (at odd `p`) acts on a class `x` of
//! degree `n`; the rightmost operation is applied first. The homology of
//! `Q(S^n)` is the free graded-commutative algebra on the classes `Q^I x`
//! with `I` admissible of excess `> n`. Words of excess exactly `n` give
//! `p`-th powers and are not generators.

use std::fmt;

use thiserror::Error;

use crate::free_algebra::{Generator, GeneratorKind, GeneratorSet};
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyerLashofError {
    #[error("the base class must have positive degree")]
    ZeroClassDegree,
    #[error("operation index must be at least 1")]
    ZeroIndex,
    #[error("Bockstein operations do not occur at p = 2")]
    BocksteinAtTwo,
    #[error("word is not admissible at position {position}")]
    NotAdmissible { position: usize },
}

/// One operation `β^ε Q^s`. At `p = 2` the Bockstein flag is always unset
/// and `index` is the upper index `i` of `Q^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Operation {
    pub bockstein: bool,
    pub index: u32,
}

impl Operation {
    pub fn q(index: u32) -> Self {
        Operation {
            bockstein: false,
            index,
        }
    }

    pub fn beta_q(index: u32) -> Self {
        Operation {
            bockstein: true,
            index,
        }
    }

    fn epsilon(self) -> usize {
        usize::from(self.bockstein)
    }

    fn degree(self, prime: Prime) -> usize {
        if prime.is_two() {
            self.index as usize
        } else {
            2 * self.index as usize * (prime.as_usize() - 1) - self.epsilon()
        }
    }
}

/// An admissible composite of Dyer–Lashof operations, outermost first.
/// The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleWord {
    prime: Prime,
    operations: Vec<Operation>,
}

impl AdmissibleWord {
    pub fn identity(prime: Prime) -> Self {
        AdmissibleWord {
            prime,
            operations: Vec::new(),
        }
    }

    pub fn new(prime: Prime, operations: Vec<Operation>) -> Result<Self, DyerLashofError> {
        for op in &operations {
            if op.index == 0 {
                return Err(DyerLashofError::ZeroIndex);
            }
            if prime.is_two() && op.bockstein {
                return Err(DyerLashofError::BocksteinAtTwo);
            }
        }
        if let Some(position) = first_inadmissible(prime, &operations) {
            return Err(DyerLashofError::NotAdmissible { position });
        }
        Ok(AdmissibleWord { prime, operations })
    }

    /// `Q^{i_1} ... Q^{i_k}` at `p = 2`.
    pub fn mod_two(indices: &[u32]) -> Result<Self, DyerLashofError> {
        Self::new(
            Prime::TWO,
            indices.iter().map(|&i| Operation::q(i)).collect(),
        )
    }

    /// `β^{ε_1}Q^{s_1} ... β^{ε_k}Q^{s_k}` from pairs `(ε, s)`.
    pub fn from_pairs(prime: Prime, pairs: &[(bool, u32)]) -> Result<Self, DyerLashofError> {
        Self::new(
            prime,
            pairs
                .iter()
                .map(|&(bockstein, index)| Operation { bockstein, index })
                .collect(),
        )
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn operations(&self) -> &[Operation] {
        &self.operations
    }

    pub fn is_identity(&self) -> bool {
        self.operations.is_empty()
    }

    /// Degree added by the word.
    pub fn word_degree(&self) -> usize {
        self.operations.iter().map(|op| op.degree(self.prime)).sum()
    }

    /// Degree of the word applied to a class of degree `class_degree`.
    pub fn degree(&self, class_degree: usize) -> usize {
        class_degree + self.word_degree()
    }

    /// Excess of the word; `None` stands for the infinite excess of the
    /// identity.
    ///
    /// At `p = 2` this is `i_1 - (i_2 + ... + i_k)`. At odd `p` it is
    /// `2 s_1` minus the degree of the inner word `β^{ε_2}Q^{s_2}...`, so
    /// that `excess > n` says exactly that the outer `Q^{s_1}` acts above the
    /// `p`-th power range on the class it is applied to.
    pub fn excess(&self) -> Option<i64> {
        let (first, rest) = self.operations.split_first()?;
        let inner: usize = rest.iter().map(|op| op.degree(self.prime)).sum();
        let lead = if self.prime.is_two() {
            first.index as i64
        } else {
            2 * first.index as i64
        };
        Some(lead - inner as i64)
    }

    /// Whether the word applied to a class of degree `class_degree` is a
    /// free generator rather than zero or a `p`-th power.
    pub fn is_generator_on(&self, class_degree: usize) -> bool {
        self.excess().is_none_or(|e| e > class_degree as i64)
    }

    /// Renders the word applied to `base`, e.g. `Q^4 Q^2 a` or `bQ^2 a`.
    pub fn render(&self, base: &str) -> String {
        let mut out = String::new();
        for op in &self.operations {
            if op.bockstein {
                out.push('b');
            }
            out.push_str("Q^");
            out.push_str(&op.index.to_string());
            out.push(' ');
        }
        out.push_str(base);
        out
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("a"))
    }
}

/// Position `j` (0-based) of the first pair violating admissibility between
/// operations `j` and `j + 1`.
fn first_inadmissible(prime: Prime, operations: &[Operation]) -> Option<usize> {
    operations
        .windows(2)
        .position(|w| !admissible_pair(prime, w[0], w[1]))
}

fn admissible_pair(prime: Prime, outer: Operation, inner: Operation) -> bool {
    outer.index as usize <= admissible_bound(prime, inner)
}

// Largest index allowed immediately to the left of `inner`.
fn admissible_bound(prime: Prime, inner: Operation) -> usize {
    prime.as_usize() * inner.index as usize - inner.epsilon()
}

/// All generator words on a class of degree `class_degree` whose total
/// degree is at most `max_degree`, sorted by (total degree, word). Includes
/// the identity when `class_degree <= max_degree`.
pub fn generator_words(
    prime: Prime,
    class_degree: usize,
    max_degree: usize,
) -> Result<Vec<AdmissibleWord>, DyerLashofError> {
    if class_degree == 0 {
        return Err(DyerLashofError::ZeroClassDegree);
    }
    let mut words = Vec::new();
    if class_degree <= max_degree {
        let mut search = WordSearch {
            prime,
            class_degree,
            max_degree,
            suffix: Vec::new(),
            out: &mut words,
        };
        search.out.push(AdmissibleWord::identity(prime));
        search.extend(0);
    }
    words.sort_by(|a, b| {
        a.word_degree()
            .cmp(&b.word_degree())
            .then_with(|| a.operations.cmp(&b.operations))
    });
    Ok(words)
}

/// The generators of the free algebra over the Dyer–Lashof algebra on one
/// class `a` of degree `class_degree`, through `max_degree`.
pub fn enumerate_generators(
    prime: Prime,
    class_degree: usize,
    max_degree: usize,
) -> Result<GeneratorSet, DyerLashofError> {
    enumerate_generators_on(prime, class_degree, max_degree, "a")
}

/// Like [`enumerate_generators`], naming the base class `base`.
pub fn enumerate_generators_on(
    prime: Prime,
    class_degree: usize,
    max_degree: usize,
    base: &str,
) -> Result<GeneratorSet, DyerLashofError> {
    let mut set = GeneratorSet::new();
    for word in generator_words(prime, class_degree, max_degree)? {
        let degree = word.degree(class_degree);
        let kind = if prime.is_two() {
            GeneratorKind::Polynomial
        } else {
            GeneratorKind::by_parity(degree)
        };
        let generator =
            Generator::new(word.render(base), degree, kind).expect("class degree is positive");
        set.insert(generator)
            .expect("distinct words render to distinct labels");
    }
    Ok(set)
}

/// Right-to-left construction. Prepending an admissible operation never
/// raises the excess, so every inner word of a generator word is itself a
/// generator word; the search only grows generator words.
struct WordSearch<'a> {
    prime: Prime,
    class_degree: usize,
    max_degree: usize,
    // inner operations, innermost first
    suffix: Vec<Operation>,
    out: &'a mut Vec<AdmissibleWord>,
}

impl WordSearch<'_> {
    fn epsilons(&self) -> &'static [bool] {
        if self.prime.is_two() {
            &[false]
        } else {
            &[false, true]
        }
    }

    // Smallest index s with Q^s of excess > n over an inner word of degree
    // `inner`.
    fn min_outer_index(&self, inner: usize) -> usize {
        let threshold = self.class_degree + inner;
        if self.prime.is_two() {
            threshold + 1
        } else {
            threshold / 2 + 1
        }
    }

    fn extend(&mut self, inner: usize) {
        let bound = self
            .suffix
            .last()
            .map(|&head| admissible_bound(self.prime, head));
        let smallest = self.min_outer_index(inner);
        for &bockstein in self.epsilons() {
            let mut index = smallest;
            while bound.is_none_or(|b| index <= b) {
                let op = Operation {
                    bockstein,
                    index: index as u32,
                };
                let word_degree = inner + op.degree(self.prime);
                if self.class_degree + word_degree > self.max_degree {
                    break;
                }
                let mut operations = Vec::with_capacity(self.suffix.len() + 1);
                operations.push(op);
                operations.extend(self.suffix.iter().rev());
                self.out.push(AdmissibleWord {
                    prime: self.prime,
                    operations,
                });
                self.suffix.push(op);
                self.extend(word_degree);
                self.suffix.pop();
                index += 1;
            }
        }
    }
}

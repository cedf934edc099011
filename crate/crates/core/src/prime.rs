use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0} is not a prime")]
pub struct NotPrime(pub u64);

/// A rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(value: u32) -> Result<Self, NotPrime> {
        if is_prime(value) {
            Ok(Prime(value))
        } else {
            Err(NotPrime(value.into()))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }

    /// `4(p - 1)`, the degree of the first positive-degree homotopy of `S//p`.
    pub fn gap_degree(self) -> usize {
        4 * (self.as_usize() - 1)
    }
}

impl TryFrom<u32> for Prime {
    type Error = NotPrime;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        Prime::new(value)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u32> = (0..30).filter(|&n| Prime::new(n).is_ok()).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn rejects_composites_and_units() {
        assert_eq!(Prime::new(1), Err(NotPrime(1)));
        assert_eq!(Prime::new(0), Err(NotPrime(0)));
        assert!(Prime::new(91).is_err());
        assert!(Prime::new(4_294_967_291).is_ok());
    }

    #[test]
    fn gap_degree() {
        assert_eq!(Prime::TWO.gap_degree(), 4);
        assert_eq!(Prime::new(7).unwrap().gap_degree(), 24);
    }
}

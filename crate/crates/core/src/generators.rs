//! Validated generator tuples and the gcd reduction step.

use std::fmt;

use num_integer::Integer;

use crate::error::{FrobError, Result};

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(values: &[u64]) -> Result<u64> {
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| FrobError::InvalidInput("gcd of an empty list".into()))?;
    if values.contains(&0) {
        return Err(FrobError::InvalidInput("gcd of a list containing 0".into()));
    }
    Ok(rest.iter().fold(*first, |acc, v| acc.gcd(v)))
}

/// A tuple `(a_1, ..., a_k)` with `k >= 2`, every `a_j >= 1` and overall gcd 1.
///
/// Order is preserved exactly as given and repeated values are kept, since
/// representation counts depend on both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generators {
    values: Vec<u64>,
}

impl Generators {
    /// Validates signed input, reporting the first offending value.
    pub fn validate(values: &[i128]) -> Result<Self> {
        if values.len() < 2 {
            return Err(FrobError::TooFewGenerators(values.len()));
        }
        let mut out = Vec::with_capacity(values.len());
        for (index, &value) in values.iter().enumerate() {
            if value <= 0 {
                return Err(FrobError::NonPositive { index, value });
            }
            out.push(u64::try_from(value).map_err(|_| FrobError::Overflow("generator value"))?);
        }
        Self::new(out)
    }

    /// Validates an unsigned tuple.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(FrobError::TooFewGenerators(values.len()));
        }
        if let Some(index) = values.iter().position(|&v| v == 0) {
            return Err(FrobError::NonPositive { index, value: 0 });
        }
        let gcd = gcd_all(&values)?;
        if gcd != 1 {
            return Err(FrobError::NotCoprime { gcd });
        }
        Ok(Generators { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, index: usize) -> Option<u64> {
        self.values.get(index).copied()
    }

    pub fn min(&self) -> u64 {
        *self.values.iter().min().expect("k >= 2")
    }

    pub fn max(&self) -> u64 {
        *self.values.iter().max().expect("k >= 2")
    }

    /// Position of the smallest generator (first one on ties).
    pub fn min_index(&self) -> usize {
        let min = self.min();
        self.values.iter().position(|&v| v == min).expect("k >= 2")
    }

    /// First pair `(i, j)`, `i < j`, sharing a factor, with that gcd.
    pub fn first_shared_factor(&self) -> Option<(usize, usize, u64)> {
        for i in 0..self.values.len() {
            for j in i + 1..self.values.len() {
                let g = self.values[i].gcd(&self.values[j]);
                if g != 1 {
                    return Some((i, j, g));
                }
            }
        }
        None
    }

    pub fn is_pairwise_coprime(&self) -> bool {
        self.first_shared_factor().is_none()
    }

    /// Divides `d = gcd(a_2, ..., a_k)` out of every generator except `a_1`.
    ///
    /// Returns `None` when `d = 1`. For `k = 2` this always reduces to `(a_1, 1)`
    /// unless `a_2 = 1` already.
    pub fn reduce_step(&self) -> Option<ReductionStep> {
        let d = gcd_all(&self.values[1..]).expect("k >= 2, all positive");
        if d == 1 {
            return None;
        }
        let pivot = self.values[0];
        let mut reduced = Vec::with_capacity(self.values.len());
        reduced.push(pivot);
        reduced.extend(self.values[1..].iter().map(|v| v / d));
        // gcd(a_1, d) divides every a_j, so it is 1 and the reduced tuple stays coprime.
        let reduced = Generators::new(reduced).expect("reduced tuple keeps gcd 1");
        Some(ReductionStep { pivot, d, reduced })
    }
}

impl fmt::Display for Generators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn is_pairwise_coprime(gens: &Generators) -> bool {
    gens.is_pairwise_coprime()
}

pub fn reduce_step(gens: &Generators) -> Option<ReductionStep> {
    gens.reduce_step()
}

/// One application of the common-factor reduction with `a_1` as pivot:
/// `a_j = d * a'_j` for `2 <= j <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub pivot: u64,
    pub d: u64,
    pub reduced: Generators,
}

impl ReductionStep {
    /// Rebuilds the unreduced tuple.
    pub fn original(&self) -> Generators {
        let mut values = vec![self.pivot];
        values.extend(self.reduced.values()[1..].iter().map(|v| v * self.d));
        Generators::new(values).expect("original tuple was valid")
    }
}

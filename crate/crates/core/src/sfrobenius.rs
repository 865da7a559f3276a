//! s-Apéry tables and the generalized Frobenius numbers built on them.
//!
//! For a threshold `s` and a modulus generator `m`, entry `j` of the table is
//! the least `x ≡ j (mod m)` with more than `s` representations. Then
//!
//! * `g*_s = max_j entry_j - m` (largest integer with at most `s` representations),
//! * `n*_s = (sum_j entry_j) / m - (m - 1) / 2` (how many integers have at most `s`).
//!
//! Adding one copy of `m` to a representation is injective, so counts never
//! decrease along a residue class and the first hit in each class is its minimum.

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::denumerant::{alloc, clamped_counts, table_len};
use crate::error::{FrobError, Result};
use crate::generators::{Generators, ReductionStep};
use crate::scalar::to_i64;

/// Knobs for the residue searches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchConfig {
    /// Position of the generator used as modulus; `None` picks the smallest generator.
    pub modulus_index: Option<usize>,
    /// Largest integer the search may examine; `None` uses [`default_ceiling`].
    pub ceiling: Option<u64>,
}

impl SearchConfig {
    pub fn with_modulus_index(mut self, index: usize) -> Self {
        self.modulus_index = Some(index);
        self
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = Some(ceiling);
        self
    }
}

/// Upper bound on every table entry: `a_min * a_max + s * b_1 * b_2 + m`, where
/// `b_1, b_2` are the two smallest generators and `m` the modulus.
///
/// Any `x > g_0 + s * b_1 * b_2` has at least `s + 1` representations (take one
/// representation of `x - s b_1 b_2` and add `c b_2` copies of `b_1` plus
/// `(s - c) b_1` copies of `b_2` for `c = 0..=s`), and `g_0 < a_min * a_max`.
pub fn default_ceiling(gens: &Generators, s: u64, modulus: u64) -> Result<u64> {
    let mut sorted = gens.values().to_vec();
    sorted.sort_unstable();
    let overflow = FrobError::Overflow("search ceiling");
    let schur = gens.min().checked_mul(gens.max()).ok_or(overflow.clone())?;
    let pair = sorted[0].checked_mul(sorted[1]).ok_or(overflow.clone())?;
    s.checked_mul(pair)
        .and_then(|v| v.checked_add(schur))
        .and_then(|v| v.checked_add(modulus))
        .ok_or(overflow)
}

/// Per-residue minima `n_{j,s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SAperyTable {
    gens: Generators,
    s: u64,
    modulus_index: usize,
    entries: Vec<u64>,
}

impl SAperyTable {
    pub fn gens(&self) -> &Generators {
        &self.gens
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn modulus_index(&self) -> usize {
        self.modulus_index
    }

    pub fn modulus(&self) -> u64 {
        self.gens.values()[self.modulus_index]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `max_j n_{j,s} - m`; `-1` when every nonnegative integer has more than `s` representations.
    pub fn g_star(&self) -> Result<i64> {
        let max = *self.entries.iter().max().expect("modulus >= 1");
        Ok(to_i64(max, "g*_s")? - to_i64(self.modulus(), "g*_s")?)
    }

    /// `sum_j (n_{j,s} - j) / m`, evaluated exactly.
    pub fn n_star(&self) -> Result<u64> {
        let m = u128::from(self.modulus());
        let sum: u128 = self.entries.iter().map(|&e| u128::from(e)).sum();
        let offset = m * (m - 1) / 2;
        let numerator = sum.checked_sub(offset).ok_or_else(|| {
            FrobError::InternalInvariantViolation(format!(
                "entry sum {sum} is below m(m-1)/2 = {offset}"
            ))
        })?;
        if numerator % m != 0 {
            return Err(FrobError::InternalInvariantViolation(format!(
                "entry sum minus m(m-1)/2 = {numerator} is not divisible by m = {m}"
            )));
        }
        u64::try_from(numerator / m).map_err(|_| FrobError::Overflow("n*_s"))
    }
}

/// Builds the s-Apéry table with default search settings.
pub fn apery_table(gens: &Generators, s: u64, modulus_index: usize) -> Result<SAperyTable> {
    apery_table_with(gens, s, &SearchConfig::default().with_modulus_index(modulus_index))
}

pub fn apery_table_with(gens: &Generators, s: u64, config: &SearchConfig) -> Result<SAperyTable> {
    let modulus_index = config.modulus_index.unwrap_or_else(|| gens.min_index());
    let modulus = gens.get(modulus_index).ok_or_else(|| {
        FrobError::InvalidInput(format!(
            "modulus index {modulus_index} out of range for {} generators",
            gens.k()
        ))
    })?;
    let ceiling = match config.ceiling {
        Some(c) => c,
        None => default_ceiling(gens, s, modulus)?,
    };
    let cap = s.checked_add(1).ok_or(FrobError::Overflow("threshold s + 1"))?;

    let m = table_len(modulus - 1)?;
    let initial = modulus
        .saturating_add(gens.max())
        .saturating_mul(cap.saturating_mul(2));
    let mut limit = initial.min(ceiling);
    loop {
        let counts = clamped_counts(limit, gens, cap)?;
        let mut entries = alloc(m, None)?;
        let mut missing = m;
        for (x, &count) in counts.iter().enumerate() {
            let slot = &mut entries[x % m];
            if slot.is_none() && count > s {
                *slot = Some(x as u64);
                missing -= 1;
                if missing == 0 {
                    break;
                }
            }
        }
        if missing == 0 {
            let entries = entries.into_iter().map(|e| e.expect("filled")).collect();
            return Ok(SAperyTable {
                gens: gens.clone(),
                s,
                modulus_index,
                entries,
            });
        }
        if limit >= ceiling {
            let residue = entries.iter().position(Option::is_none).expect("missing > 0");
            return Err(FrobError::SearchCeilingExceeded {
                ceiling,
                residue: residue as u64,
                modulus,
            });
        }
        limit = limit.saturating_mul(2).min(ceiling);
    }
}

/// Largest integer with at most `s` representations, or `-1` if there is none.
pub fn g_star(gens: &Generators, s: u64) -> Result<i64> {
    g_star_with(gens, s, &SearchConfig::default())
}

pub fn g_star_with(gens: &Generators, s: u64, config: &SearchConfig) -> Result<i64> {
    apery_table_with(gens, s, config)?.g_star()
}

/// Number of nonnegative integers with at most `s` representations.
pub fn n_star(gens: &Generators, s: u64) -> Result<u64> {
    n_star_with(gens, s, &SearchConfig::default())
}

pub fn n_star_with(gens: &Generators, s: u64, config: &SearchConfig) -> Result<u64> {
    apery_table_with(gens, s, config)?.n_star()
}

/// Largest integer with exactly `s` representations, if any exists.
///
/// Every such integer is at most `g*_s`, so the scan runs downward from there.
pub fn g_exact(gens: &Generators, s: u64) -> Result<Option<u64>> {
    g_exact_with(gens, s, &SearchConfig::default())
}

pub fn g_exact_with(gens: &Generators, s: u64, config: &SearchConfig) -> Result<Option<u64>> {
    let star = g_star_with(gens, s, config)?;
    g_exact_below(gens, s, star)
}

fn g_exact_below(gens: &Generators, s: u64, star: i64) -> Result<Option<u64>> {
    let Ok(top) = u64::try_from(star) else {
        return Ok(None);
    };
    let cap = s.checked_add(1).ok_or(FrobError::Overflow("threshold s + 1"))?;
    let counts = clamped_counts(top, gens, cap)?;
    Ok(counts.iter().rposition(|&c| c == s).map(|x| x as u64))
}

/// `g*_s`, `g_s` and `n*_s` for one tuple and threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusReport {
    pub gens: Generators,
    pub s: u64,
    pub g_star: i64,
    pub g_exact: Option<u64>,
    pub n_star: u64,
    pub table: SAperyTable,
}

pub fn frobenius_report(gens: &Generators, s: u64, config: &SearchConfig) -> Result<FrobeniusReport> {
    let table = apery_table_with(gens, s, config)?;
    let g_star = table.g_star()?;
    let n_star = table.n_star()?;
    let g_exact = g_exact_below(gens, s, g_star)?;
    Ok(FrobeniusReport {
        gens: gens.clone(),
        s,
        g_star,
        g_exact,
        n_star,
        table,
    })
}

fn require_reduction(step: &ReductionStep) -> Result<()> {
    if step.d < 2 {
        return Err(FrobError::InvalidInput(format!(
            "reduction needs d >= 2, got d = {}",
            step.d
        )));
    }
    Ok(())
}

/// `d * g*_s(a_1, a'_2, ..., a'_k) + a_1 (d - 1)`.
pub fn g_star_via_reduction(step: &ReductionStep, s: u64) -> Result<i64> {
    require_reduction(step)?;
    let reduced = g_star(&step.reduced, s)?;
    let d = to_i64(step.d, "reduced g*_s")?;
    let pivot = to_i64(step.pivot, "reduced g*_s")?;
    d.checked_mul(reduced)
        .and_then(|v| pivot.checked_mul(d - 1).and_then(|w| v.checked_add(w)))
        .ok_or(FrobError::Overflow("reduced g*_s"))
}

/// `d * n*_s(a_1, a'_2, ..., a'_k) + (a_1 - 1)(d - 1) / 2`, with integrality checked.
pub fn n_star_via_reduction(step: &ReductionStep, s: u64) -> Result<u64> {
    require_reduction(step)?;
    let reduced = i128::from(n_star(&step.reduced, s)?);
    let d = i128::from(step.d);
    let pivot = i128::from(step.pivot);
    let value = Ratio::from_integer(d * reduced) + Ratio::new((pivot - 1) * (d - 1), 2);
    if !value.is_integer() {
        return Err(FrobError::InternalInvariantViolation(format!(
            "reduced n*_s evaluates to the non-integer {value}"
        )));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or(FrobError::Overflow("reduced n*_s"))
}

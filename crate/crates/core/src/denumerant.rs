//! Exact representation counts and explicit representations.
//!
//! A representation of `x` is a vector `(m_1, ..., m_k)` of nonnegative
//! integers with `m_1 a_1 + ... + m_k a_k = x`; the denumerant is the number of
//! such vectors. Counts come from the coin-counting recurrence (outer loop over
//! generators, ascending inner scan), which is `O(k * limit)`.

use crate::error::{FrobError, Result};
use crate::generators::Generators;
use crate::scalar::Count;

/// Largest table (in entries) any operation will allocate.
pub const MAX_TABLE_LEN: u64 = 1 << 28;

/// Default bound on the number of representations [`enumerate_representations`] returns.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Coefficient vector aligned with the generator order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    pub coeffs: Vec<u64>,
}

impl Representation {
    pub fn new(coeffs: Vec<u64>) -> Self {
        Representation { coeffs }
    }

    /// `sum_j coeffs_j * a_j`, or an error on length mismatch or overflow.
    pub fn value(&self, gens: &Generators) -> Result<u64> {
        if self.coeffs.len() != gens.k() {
            return Err(FrobError::InvalidInput(format!(
                "representation has {} coefficients for {} generators",
                self.coeffs.len(),
                gens.k()
            )));
        }
        self.coeffs
            .iter()
            .zip(gens.values())
            .try_fold(0u64, |acc, (m, a)| {
                m.checked_mul(*a).and_then(|term| acc.checked_add(term))
            })
            .ok_or(FrobError::Overflow("representation value"))
    }
}

pub(crate) fn table_len(limit: u64) -> Result<usize> {
    let len = limit
        .checked_add(1)
        .ok_or(FrobError::Overflow("table length"))?;
    if len > MAX_TABLE_LEN {
        return Err(FrobError::ResourceExceeded(format!(
            "table of {len} entries exceeds the maximum of {MAX_TABLE_LEN}"
        )));
    }
    Ok(len as usize)
}

pub(crate) fn alloc<T: Clone>(len: usize, fill: T) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|e| FrobError::ResourceExceeded(format!("allocating {len} entries: {e}")))?;
    v.resize(len, fill);
    Ok(v)
}

/// Denumerants of every `0 <= x <= limit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenumerantTable<C> {
    gens: Generators,
    limit: u64,
    counts: Vec<C>,
}

impl<C: Count> DenumerantTable<C> {
    pub fn build(limit: u64, gens: &Generators) -> Result<Self> {
        let len = table_len(limit)?;
        let mut counts = alloc(len, C::zero())?;
        counts[0] = C::one();
        for &a in gens.values() {
            let a = a as usize;
            for x in a..len {
                let sum = counts[x]
                    .checked_add(&counts[x - a])
                    .ok_or(FrobError::Overflow("denumerant count"))?;
                counts[x] = sum;
            }
        }
        Ok(DenumerantTable {
            gens: gens.clone(),
            limit,
            counts,
        })
    }

    pub fn gens(&self) -> &Generators {
        &self.gens
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn counts(&self) -> &[C] {
        &self.counts
    }

    /// The count for `x`, if `x <= limit`.
    pub fn get(&self, x: u64) -> Option<&C> {
        usize::try_from(x).ok().and_then(|i| self.counts.get(i))
    }
}

/// Builds the denumerant table up to `limit`.
pub fn denumerant_table<C: Count>(limit: u64, gens: &Generators) -> Result<DenumerantTable<C>> {
    DenumerantTable::build(limit, gens)
}

/// Number of representations of `x`.
pub fn denumerant<C: Count>(x: u64, gens: &Generators) -> Result<C> {
    let mut table = DenumerantTable::<C>::build(x, gens)?;
    Ok(table.counts.pop().expect("table has limit + 1 entries"))
}

/// Counts clamped to `cap`: entry `x` is `min(denumerant(x), cap)`.
///
/// Clamping commutes with the recurrence, so entries below `cap` are exact and
/// no overflow is possible. Threshold questions ("more than s?") use this.
pub(crate) fn clamped_counts(limit: u64, gens: &Generators, cap: u64) -> Result<Vec<u64>> {
    let len = table_len(limit)?;
    let mut counts = alloc(len, 0u64)?;
    counts[0] = 1.min(cap);
    for &a in gens.values() {
        let a = a as usize;
        for x in a..len {
            counts[x] = counts[x].saturating_add(counts[x - a]).min(cap);
        }
    }
    Ok(counts)
}

/// Every representation of `x`, in lexicographic order of the coefficients.
///
/// Fails with [`FrobError::CapExceeded`] when there are more than `cap`.
pub fn enumerate_representations(
    x: u64,
    gens: &Generators,
    cap: u64,
) -> Result<Vec<Representation>> {
    let total = clamped_counts(x, gens, cap.saturating_add(1))?[x as usize];
    if total > cap {
        return Err(FrobError::CapExceeded { cap });
    }

    // reachable[i][y]: y is representable using generators i.. only.
    let k = gens.k();
    let len = x as usize + 1;
    let mut reachable = Vec::with_capacity(k + 1);
    let mut tail = alloc(len, false)?;
    tail[0] = true;
    reachable.push(tail.clone());
    for &a in gens.values().iter().rev() {
        let a = a as usize;
        for y in a..len {
            if tail[y - a] {
                tail[y] = true;
            }
        }
        reachable.push(tail.clone());
    }
    reachable.reverse();

    let mut out = Vec::with_capacity(total as usize);
    let mut coeffs = vec![0u64; k];
    walk(gens.values(), &reachable, 0, x, &mut coeffs, &mut out);
    debug_assert_eq!(out.len() as u64, total);
    Ok(out)
}

fn walk(
    values: &[u64],
    reachable: &[Vec<bool>],
    index: usize,
    remaining: u64,
    coeffs: &mut Vec<u64>,
    out: &mut Vec<Representation>,
) {
    if index == values.len() {
        if remaining == 0 {
            out.push(Representation::new(coeffs.clone()));
        }
        return;
    }
    let a = values[index];
    for m in 0..=remaining / a {
        let rest = remaining - m * a;
        if reachable[index + 1][rest as usize] {
            coeffs[index] = m;
            walk(values, reachable, index + 1, rest, coeffs, out);
        }
    }
    coeffs[index] = 0;
}

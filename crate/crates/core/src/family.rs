//! The family `A_j = Π / a_j` built from pairwise coprime `a_1, ..., a_k`.
//!
//! For `t >= 1` the integer `(k + t - 1)Π - Σ` has exactly `C(k+t-2, k-1)`
//! representations by `(A_1, ..., A_k)`, all with coefficients
//! `x_j = (n_j + 1) a_j - 1` where `n_1 + ... + n_k = t - 1`, and every larger
//! integer has at least `C(k+t-1, k-1)`. [`verify_theorem1`] checks each of
//! these claims against the denumerant engine.

use std::collections::BTreeSet;

use crate::denumerant::{denumerant_table, enumerate_representations, Representation};
use crate::error::{FrobError, Result};
use crate::generators::Generators;
use crate::scalar::to_i64;

/// Default upper limit on `t` accepted by the verifier.
pub const DEFAULT_T_MAX: u32 = 6;

/// Cap on representations enumerated while verifying.
pub const VERIFY_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripathiFamily {
    base: Generators,
    pi: u64,
    a: Vec<u64>,
    sigma: u64,
    derived: Generators,
}

impl TripathiFamily {
    pub fn base(&self) -> &Generators {
        &self.base
    }

    /// `Π = a_1 a_2 ... a_k`.
    pub fn pi(&self) -> u64 {
        self.pi
    }

    /// `A_j = Π / a_j`.
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// `Σ = A_1 + ... + A_k`.
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    /// `(A_1, ..., A_k)` as a generator tuple.
    pub fn generators(&self) -> &Generators {
        &self.derived
    }

    /// A base containing 1 collapses some `A_j` onto `Π`.
    pub fn is_degenerate(&self) -> bool {
        self.base.values().contains(&1)
    }

    /// `(k + t - 1)Π - Σ` for `t >= 0`.
    fn value_at(&self, t: u64) -> Result<i64> {
        let overflow = FrobError::Overflow("(k + t - 1)Π - Σ");
        let multiplier = (self.k() as u64 - 1).checked_add(t).ok_or(overflow.clone())?;
        let product = multiplier.checked_mul(self.pi).ok_or(overflow.clone())?;
        to_i64(product, "(k + t - 1)Π - Σ")?
            .checked_sub(to_i64(self.sigma, "Σ")?)
            .ok_or(overflow)
    }
}

pub fn build_family(base: &Generators) -> Result<TripathiFamily> {
    if let Some((i, j, gcd)) = base.first_shared_factor() {
        return Err(FrobError::NotPairwiseCoprime { i, j, gcd });
    }
    let pi = base
        .values()
        .iter()
        .try_fold(1u64, |acc, &v| acc.checked_mul(v))
        .ok_or(FrobError::Overflow("Π"))?;
    let a: Vec<u64> = base.values().iter().map(|&v| pi / v).collect();
    let sigma = a
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(FrobError::Overflow("Σ"))?;
    let derived = Generators::new(a.clone()).map_err(|e| {
        FrobError::InternalInvariantViolation(format!("A_j of a pairwise coprime base: {e}"))
    })?;
    Ok(TripathiFamily {
        base: base.clone(),
        pi,
        a,
        sigma,
        derived,
    })
}

/// `(k - 1)Π - Σ`, the Frobenius number of the family.
pub fn tripathi_g0(family: &TripathiFamily) -> i64 {
    family
        .value_at(0)
        .expect("(k-1)Π <= kΠ/2 fits whenever Π and Σ do")
}

/// `(k + t - 1)Π - Σ`.
pub fn theorem1_value(family: &TripathiFamily, t: u32) -> Result<i64> {
    if t == 0 {
        return Err(FrobError::InvalidInput("t must be at least 1".into()));
    }
    family.value_at(u64::from(t))
}

/// Binomial coefficient with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // C(n, i) * (n - i) = C(n, i + 1) * (i + 1), so the division is exact.
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(FrobError::Overflow("binomial"))?
            / u128::from(i + 1);
    }
    u64::try_from(acc).map_err(|_| FrobError::Overflow("binomial"))
}

/// `C(k + t - 2, k - 1)`, the number of representations of the t-th value.
pub fn expected_count(k: usize, t: u32) -> Result<u64> {
    if k < 2 || t == 0 {
        return Err(FrobError::InvalidInput(format!(
            "expected_count needs k >= 2 and t >= 1, got k = {k}, t = {t}"
        )));
    }
    let k = k as u64;
    binomial(k + u64::from(t) - 2, k - 1)
}

/// `C(k + t - 1, k - 1)`, the lower bound for every integer past the t-th value.
pub fn window_bound(k: usize, t: u32) -> Result<u64> {
    expected_count(k, t + 1)
}

/// Coefficients `x_j = (n_j + 1) a_j - 1` over all compositions of `t - 1`
/// into `k` nonnegative parts `n_j`, in lexicographic order of `n`.
pub fn canonical_representations(family: &TripathiFamily, t: u32) -> Result<Vec<Representation>> {
    if t == 0 {
        return Err(FrobError::InvalidInput("t must be at least 1".into()));
    }
    let base = family.base.values();
    let mut out = Vec::new();
    let mut parts = vec![0u64; base.len()];
    compositions(u64::from(t) - 1, 0, &mut parts, &mut |n| {
        let coeffs = n
            .iter()
            .zip(base)
            .map(|(&nj, &aj)| {
                (nj + 1)
                    .checked_mul(aj)
                    .map(|v| v - 1)
                    .ok_or(FrobError::Overflow("canonical coefficient"))
            })
            .collect::<Result<Vec<u64>>>()?;
        out.push(Representation::new(coeffs));
        Ok(())
    })?;
    Ok(out)
}

fn compositions(
    remaining: u64,
    index: usize,
    parts: &mut Vec<u64>,
    emit: &mut dyn FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    if index + 1 == parts.len() {
        parts[index] = remaining;
        return emit(parts);
    }
    for n in (0..=remaining).rev() {
        parts[index] = n;
        compositions(remaining - n, index + 1, parts, emit)?;
    }
    Ok(())
}

/// Outcome of checking the three claims for one `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub t: u32,
    /// `(k + t - 1)Π - Σ`.
    pub value: i64,
    /// `C(k + t - 2, k - 1)`.
    pub expected_count: u64,
    pub actual_count: u64,
    /// The enumerated representations are exactly the canonical ones, and
    /// every coefficient satisfies `x_j ≡ -1 (mod a_j)`.
    pub canonical_ok: bool,
    /// Minimum count over `(value, value + Π]`. Adding `a_j` copies of `A_j`
    /// maps representations of `x` injectively into those of `x + Π`, so this
    /// window bounds every larger integer.
    pub window_min_count: u64,
    /// `C(k + t - 1, k - 1)`.
    pub window_bound: u64,
}

impl Theorem1Report {
    pub fn count_ok(&self) -> bool {
        self.actual_count == self.expected_count
    }

    pub fn window_ok(&self) -> bool {
        self.window_min_count >= self.window_bound
    }

    pub fn holds(&self) -> bool {
        self.count_ok() && self.canonical_ok && self.window_ok()
    }
}

pub fn verify_theorem1(family: &TripathiFamily, t: u32) -> Result<Theorem1Report> {
    verify_theorem1_with(family, t, DEFAULT_T_MAX)
}

pub fn verify_theorem1_with(family: &TripathiFamily, t: u32, t_max: u32) -> Result<Theorem1Report> {
    if t > t_max {
        return Err(FrobError::TLimitExceeded { t, max: t_max });
    }
    let value = theorem1_value(family, t)?;
    let expected = expected_count(family.k(), t)?;
    let bound = window_bound(family.k(), t)?;
    let gens = family.generators();

    let target = u64::try_from(value).map_err(|_| {
        FrobError::InternalInvariantViolation(format!("theorem value {value} is negative"))
    })?;
    let top = target
        .checked_add(family.pi)
        .ok_or(FrobError::Overflow("window end"))?;
    let table = denumerant_table::<u64>(top, gens)?;
    let counts = table.counts();
    let actual_count = counts[target as usize];
    let window_min_count = counts[target as usize + 1..]
        .iter()
        .copied()
        .min()
        .expect("Π >= 1 so the window is nonempty");

    let found = enumerate_representations(target, gens, VERIFY_ENUMERATION_CAP)?;
    let canonical = canonical_representations(family, t)?;
    let congruent = found.iter().all(|r| {
        r.coeffs
            .iter()
            .zip(family.base.values())
            .all(|(&x, &a)| (x + 1) % a == 0)
    });
    let found: BTreeSet<_> = found.into_iter().collect();
    let canonical: BTreeSet<_> = canonical.into_iter().collect();
    let canonical_ok = congruent && found == canonical;

    Ok(Theorem1Report {
        t,
        value,
        expected_count: expected,
        actual_count,
        canonical_ok,
        window_min_count,
        window_bound: bound,
    })
}

/// `(s + 1) a_1 a_2 - a_1 - a_2`, the largest integer with exactly `s`
/// representations by a coprime pair.
pub fn pair_gs_closed_form(a1: u64, a2: u64, s: u64) -> Result<i64> {
    let gens = Generators::new(vec![a1, a2])?;
    let (a1, a2) = (gens.values()[0], gens.values()[1]);
    let overflow = FrobError::Overflow("(s + 1) a_1 a_2 - a_1 - a_2");
    let product = s
        .checked_add(1)
        .and_then(|v| v.checked_mul(a1))
        .and_then(|v| v.checked_mul(a2))
        .ok_or(overflow.clone())?;
    let product = i128::from(product) - i128::from(a1) - i128::from(a2);
    i64::try_from(product).map_err(|_| overflow)
}

//! Brute-force oracle: counts representations by walking every coefficient
//! vector directly. Shares no code with the dynamic program.

#![allow(dead_code)]

use num_integer::Integer;
use proptest::prelude::*;

/// `out[x]` = number of `(m_1, ..., m_k)` with `sum m_j a_j = x`, for `x <= limit`.
pub fn brute_counts(limit: u64, values: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; limit as usize + 1];
    nest(values, 0, limit, &mut out);
    out
}

fn nest(values: &[u64], partial: u64, limit: u64, out: &mut [u64]) {
    match values.split_first() {
        None => out[partial as usize] += 1,
        Some((&a, rest)) => {
            let mut p = partial;
            while p <= limit {
                nest(rest, p, limit, out);
                p += a;
            }
        }
    }
}

pub fn brute_count(x: u64, values: &[u64]) -> u64 {
    brute_counts(x, values)[x as usize]
}

/// Largest `x <= limit` with at most `s` representations, or -1.
pub fn brute_g_star(limit: u64, values: &[u64], s: u64) -> i64 {
    brute_counts(limit, values)
        .iter()
        .rposition(|&c| c <= s)
        .map_or(-1, |x| x as i64)
}

pub fn gcd(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, v| acc.gcd(v))
}

/// Tuples of length `2..=max_k` with entries in `1..=max_v` and gcd 1.
pub fn coprime_tuple(max_k: usize, max_v: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=max_v, 2..=max_k).prop_filter("gcd must be 1", |v| gcd(v) == 1)
}

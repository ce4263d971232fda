//! The Smarandache function `S(n)` and the largest prime factor `P(n)`.

use std::sync::OnceLock;

use crate::arith::{build_spf_sieve, factorize, is_prime, valuation_unchecked, SpfSieve};
use crate::census::PsiIndex;
use crate::error::{invalid, Error, Result};

/// Largest table the batch builder accepts; values are stored as `u32`.
pub const MAX_TABLE_LIMIT: u64 = crate::arith::MAX_SIEVE_LIMIT;

const SEGMENT: usize = 1 << 15;

/// Least `m` with `p^a | m!`, for prime `p`.
pub fn smarandache_prime_power(p: u64, a: u64) -> Result<u64> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if a == 0 {
        return invalid("exponent must be positive");
    }
    if p.checked_mul(a).is_none() {
        return Err(Error::Resource(format!("{a} * {p} overflows 64 bits")));
    }
    Ok(prime_power_unchecked(p, a))
}

/// Binary search over multiples `j * p`, `1 <= j <= a`; `v_p((a p)!) >= a`
/// bounds the search.
#[inline]
pub(crate) fn prime_power_unchecked(p: u64, a: u64) -> u64 {
    if a == 1 {
        return p;
    }
    let (mut lo, mut hi) = (1u64, a);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if valuation_unchecked(p, mid * p) >= a {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo * p
}

/// `S(n)`: the least positive `j` with `n | j!`. `S(1) = 1`.
///
/// # Panics
/// If `n == 0`.
pub fn smarandache(n: u64) -> u64 {
    smarandache_with(n, None)
}

/// As [`smarandache`], factoring through `sieve` when `n` lies inside it.
pub fn smarandache_with(n: u64, sieve: Option<&SpfSieve>) -> u64 {
    assert!(n >= 1, "S(n) is defined for n >= 1");
    factorize(n, sieve)
        .factors()
        .iter()
        .map(|&(p, a)| prime_power_unchecked(p, a as u64))
        .max()
        .unwrap_or(1)
}

/// `S(n)` from a prime-power decomposition.
pub fn smarandache_of_factors(factors: &[(u64, u32)]) -> u64 {
    factors.iter().map(|&(p, a)| prime_power_unchecked(p, a as u64)).max().unwrap_or(1)
}

/// `P(n)`: the largest prime factor, with `P(1) = 1`.
///
/// # Panics
/// If `n == 0`.
pub fn largest_prime_factor(n: u64) -> u64 {
    assert!(n >= 1, "P(n) is defined for n >= 1");
    factorize(n, None).largest_prime().unwrap_or(1)
}

/// `S(n)` and `P(n)` for every `n` in `[1, limit]`.
pub struct SmarandacheTable {
    limit: u64,
    s_of: Vec<u32>,
    p_of: Vec<u32>,
    psi: OnceLock<PsiIndex>,
}

impl SmarandacheTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `S(n)` for `1 <= n <= limit`.
    #[inline]
    pub fn s(&self, n: u64) -> u64 {
        self.s_of[n as usize - 1] as u64
    }

    /// `P(n)` for `1 <= n <= limit`.
    #[inline]
    pub fn p(&self, n: u64) -> u64 {
        self.p_of[n as usize - 1] as u64
    }

    /// `S(1), S(2), ..., S(limit)`.
    pub fn s_values(&self) -> &[u32] {
        &self.s_of
    }

    /// `P(1), P(2), ..., P(limit)`.
    pub fn p_values(&self) -> &[u32] {
        &self.p_of
    }

    pub(crate) fn psi_index(&self) -> &PsiIndex {
        self.psi.get_or_init(|| PsiIndex::new(&self.p_of))
    }

    pub(crate) fn require(&self, x: u64) -> Result<()> {
        if x > self.limit {
            invalid(format!("table limit {} is below x = {x}", self.limit))
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Debug for SmarandacheTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SmarandacheTable").field("limit", &self.limit).finish_non_exhaustive()
    }
}

impl PartialEq for SmarandacheTable {
    fn eq(&self, other: &Self) -> bool {
        self.limit == other.limit && self.s_of == other.s_of && self.p_of == other.p_of
    }
}

fn fill_segment(sieve: &SpfSieve, lo: u64, s: &mut [u32], p: &mut [u32]) {
    for (i, (s_slot, p_slot)) in s.iter_mut().zip(p.iter_mut()).enumerate() {
        let n = lo + i as u64;
        let (mut smax, mut plast) = (1u64, 1u64);
        if n >= 2 {
            sieve.for_each_prime_power(n, |q, a| {
                smax = smax.max(prime_power_unchecked(q, a as u64));
                plast = q;
            });
        }
        *s_slot = smax as u32;
        *p_slot = plast as u32;
    }
}

/// Builds the table by smallest-prime-factor chaining over a sieve.
///
/// Segments are independent, so the parallel and sequential builds produce
/// identical tables.
pub fn build_table(limit: u64) -> Result<SmarandacheTable> {
    if limit < 1 {
        return invalid("table limit must be at least 1");
    }
    if limit > MAX_TABLE_LIMIT {
        return invalid(format!("table limit {limit} exceeds {MAX_TABLE_LIMIT}"));
    }
    let sieve = build_spf_sieve(limit.max(2))?;
    let len = limit as usize;
    let alloc = |what: &str| -> Result<Vec<u32>> {
        let mut v = Vec::new();
        v.try_reserve_exact(len)
            .map_err(|e| Error::Resource(format!("cannot allocate {what} table of {len}: {e}")))?;
        v.resize(len, 0);
        Ok(v)
    };
    let mut s_of = alloc("S")?;
    let mut p_of = alloc("P")?;

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        s_of.par_chunks_mut(SEGMENT)
            .zip(p_of.par_chunks_mut(SEGMENT))
            .enumerate()
            .for_each(|(i, (s, p))| fill_segment(&sieve, 1 + (i * SEGMENT) as u64, s, p));
    }
    #[cfg(not(feature = "parallel"))]
    for (i, (s, p)) in s_of.chunks_mut(SEGMENT).zip(p_of.chunks_mut(SEGMENT)).enumerate() {
        fill_segment(&sieve, 1 + (i * SEGMENT) as u64, s, p);
    }

    Ok(SmarandacheTable { limit, s_of, p_of, psi: OnceLock::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;

    /// Oracle: scan j = 1, 2, ... dividing the residual n / gcd(n, j!) by
    /// gcd(residual, j) until it reaches 1.
    fn brute_s(n: u64) -> u64 {
        let mut rest = n;
        let mut j = 1;
        rest /= num_integer::gcd(rest, j);
        while rest > 1 {
            j += 1;
            rest /= num_integer::gcd(rest, j);
        }
        j
    }

    /// Oracle: linear scan over m for the least m with v_p(m!) >= a.
    fn scan_prime_power(p: u64, a: u64) -> u64 {
        (1..).find(|&m| valuation_unchecked(p, m) >= a).unwrap()
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(smarandache_prime_power(2, 3), Ok(4));
        assert_eq!(smarandache_prime_power(3, 2), Ok(6));
        for p in [2u64, 3, 5, 97, 7919] {
            assert_eq!(smarandache_prime_power(p, 1), Ok(p));
        }
        assert!(smarandache_prime_power(4, 2).is_err());
        assert!(smarandache_prime_power(3, 0).is_err());
    }

    #[test]
    fn prime_power_matches_scan() {
        for p in primes_up_to(50) {
            for a in 1..=50 {
                let s = prime_power_unchecked(p, a);
                assert_eq!(s, scan_prime_power(p, a), "p={p} a={a}");
                assert_eq!(s % p, 0);
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(smarandache(1), 1);
        assert_eq!(smarandache(8), 4);
        assert_eq!(smarandache(120), 5);
        assert_eq!(largest_prime_factor(120), 5);
        assert_eq!(largest_prime_factor(1), 1);
        assert_eq!(largest_prime_factor(12), 3);
        assert_eq!(largest_prime_factor(97), 97);
    }

    #[test]
    fn oracle_small() {
        for n in 1..=3000u64 {
            assert_eq!(smarandache(n), brute_s(n), "n = {n}");
        }
    }

    #[test]
    fn table_examples() {
        let t = build_table(10).unwrap();
        let s: Vec<u32> = t.s_values().to_vec();
        assert_eq!(s, vec![1, 2, 3, 4, 5, 3, 7, 4, 6, 5]);
        assert_eq!((t.p(9), t.s(9)), (3, 6));
        let t = build_table(1).unwrap();
        assert_eq!((t.s_values(), t.p_values()), (&[1u32][..], &[1u32][..]));
        assert!(build_table(0).is_err());
    }

    #[test]
    fn table_matches_single_values() {
        let t = build_table(3 * SEGMENT as u64 + 5).unwrap();
        for n in 1..=t.limit() {
            assert_eq!(t.s(n), smarandache(n));
            assert_eq!(t.p(n), largest_prime_factor(n));
            assert!(t.p(n) <= t.s(n) && t.s(n) <= n);
        }
    }
}

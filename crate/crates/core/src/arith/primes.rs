//! Primality and the smallest-prime-factor sieve.

use crate::error::{invalid, Error, Result};

/// Largest sieve the crate will attempt to allocate.
pub const MAX_SIEVE_LIMIT: u64 = 1_000_000_000;

const SEGMENT: usize = 1 << 16;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d0 = n - 1;
    let s = d0.trailing_zeros();
    let d = d0 >> s;
    // This base set is known to be exact below 2^64.
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == d0 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == d0 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes `<= n` by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Smallest prime factor of every integer in `[2, limit]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n`, for `2 <= n <= limit`.
    #[inline]
    pub fn spf(&self, n: u64) -> u64 {
        debug_assert!(n >= 2 && n <= self.limit);
        self.spf[n as usize] as u64
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf(n) == n
    }

    /// Raw table, indexed by `n`; entries 0 and 1 are zero.
    pub fn as_slice(&self) -> &[u32] {
        &self.spf
    }

    /// Prime-power decomposition by smallest-prime-factor chaining.
    pub(crate) fn for_each_prime_power(&self, mut n: u64, mut f: impl FnMut(u64, u32)) {
        while n > 1 {
            let p = self.spf(n);
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            f(p, a);
        }
    }
}

fn sieve_segment(chunk: &mut [u32], lo: usize, base: &[u64]) {
    let hi = lo + chunk.len();
    for &p in base {
        let p = p as usize;
        if p * p >= hi {
            break;
        }
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m < hi {
            let slot = &mut chunk[m - lo];
            if *slot == 0 {
                *slot = p as u32;
            }
            m += p;
        }
    }
    for (i, slot) in chunk.iter_mut().enumerate() {
        let n = lo + i;
        if *slot == 0 && n >= 2 {
            *slot = n as u32;
        }
    }
}

/// Builds the smallest-prime-factor table for `[2, limit]`.
///
/// Segments are sieved independently (in parallel with the `parallel`
/// feature); the table is identical either way.
pub fn build_spf_sieve(limit: u64) -> Result<SpfSieve> {
    if limit < 2 {
        return invalid(format!("sieve limit must be at least 2, got {limit}"));
    }
    if limit > MAX_SIEVE_LIMIT {
        return invalid(format!("sieve limit {limit} exceeds {MAX_SIEVE_LIMIT}"));
    }
    let len = limit as usize + 1;
    let mut spf: Vec<u32> = Vec::new();
    spf.try_reserve_exact(len)
        .map_err(|e| Error::Resource(format!("cannot allocate sieve of {len} entries: {e}")))?;
    spf.resize(len, 0);
    let base = primes_up_to(limit.isqrt());

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        spf.par_chunks_mut(SEGMENT)
            .enumerate()
            .for_each(|(i, chunk)| sieve_segment(chunk, i * SEGMENT, &base));
    }
    #[cfg(not(feature = "parallel"))]
    for (i, chunk) in spf.chunks_mut(SEGMENT).enumerate() {
        sieve_segment(chunk, i * SEGMENT, &base);
    }

    Ok(SpfSieve { limit, spf })
}

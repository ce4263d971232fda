use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::{is_prime, mul_mod, SpfSieve};
use crate::error::{invalid, Result};

/// Prime-power decomposition of a positive 64-bit integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The largest prime factor, `None` for `n = 1`.
    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    /// Re-multiplies the factors and re-checks primality.
    pub fn verify(&self) -> bool {
        let mut acc: u128 = 1;
        let mut prev = 0;
        for &(p, a) in &self.factors {
            if p <= prev || a == 0 || !is_prime(p) {
                return false;
            }
            prev = p;
            for _ in 0..a {
                acc *= p as u128;
                if acc > u64::MAX as u128 {
                    return false;
                }
            }
        }
        acc == self.n as u128
    }

    fn from_primes(n: u64, mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match factors.last_mut() {
                Some((q, a)) if *q == p => *a += 1,
                _ => factors.push((p, 1)),
            }
        }
        Factorization { n, factors }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

const TRIAL_LIMIT: u64 = 1 << 10;

/// Brent's variant of Pollard's rho; returns a nontrivial factor of the
/// odd composite `n`, trying successive polynomial constants.
fn pollard_brent(n: u64) -> u64 {
    debug_assert!(n % 2 == 1 && !is_prime(n));
    for c in 1..n {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..M.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            // Backtrack one step at a time.
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho failed on composite {n}")
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Factors `n >= 1`. Uses the sieve when `n` lies inside it, otherwise
/// trial division followed by Pollard-Brent on the cofactor.
///
/// # Panics
/// If `n == 0`.
pub fn factorize(n: u64, sieve: Option<&SpfSieve>) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    if let Some(s) = sieve.filter(|s| n <= s.limit()) {
        let mut factors = Vec::new();
        s.for_each_prime_power(n, |p, a| factors.push((p, a)));
        return Factorization { n, factors };
    }
    let mut m = n;
    let mut primes = Vec::new();
    while m % 2 == 0 {
        primes.push(2);
        m /= 2;
    }
    let mut d = 3;
    while d < TRIAL_LIMIT && d * d <= m {
        while m % d == 0 {
            primes.push(d);
            m /= d;
        }
        d += 2;
    }
    if m > 1 {
        if d * d > m {
            primes.push(m);
        } else {
            split_into(m, &mut primes);
        }
    }
    let f = Factorization::from_primes(n, primes);
    assert!(f.verify(), "factorization of {n} failed verification");
    f
}

/// Factors an arbitrary-size integer whose prime factors, after removing
/// those below 2^16, leave a cofactor that fits in 64 bits.
pub fn factorize_biguint(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return invalid("cannot factor zero");
    }
    let mut m = n.clone();
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut p: u64 = 2;
    while p < (1 << 16) {
        if m.to_u64().is_some() {
            break;
        }
        let bp = BigUint::from(p);
        let mut a = 0;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let Some(rest) = m.to_u64() else {
        return invalid(format!("{n} has a cofactor beyond 64 bits after trial division"));
    };
    if !rest.is_one() {
        for &(q, a) in factorize(rest, None).factors() {
            match out.iter_mut().find(|(r, _)| *r == q) {
                Some((_, b)) => *b += a,
                None => out.push((q, a)),
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::build_spf_sieve;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(factorize(120, None).factors(), &[(2, 3), (3, 1), (5, 1)]);
        assert!(factorize(1, None).factors().is_empty());
        let m61 = (1u64 << 61) - 1;
        assert_eq!(factorize(m61, None).factors(), &[(m61, 1)]);
        assert!(is_prime(m61));
    }

    #[test]
    fn hard_semiprimes() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        let q = 4_294_967_279u64;
        let f = factorize(p * q, None);
        assert_eq!(f.factors(), &[(q, 1), (p, 1)]);
        let f = factorize(u64::MAX, None);
        assert_eq!(f.factors(), &[(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1)]);
    }

    #[test]
    fn sieve_and_general_paths_agree() {
        let s = build_spf_sieve(100_000).unwrap();
        for n in 1..=100_000u64 {
            assert_eq!(factorize(n, Some(&s)), factorize(n, None));
        }
    }

    #[test]
    fn big_input_with_small_primes() {
        let n: BigUint = num_traits::pow(BigUint::from(10u32), 24);
        assert_eq!(factorize_biguint(&n).unwrap(), vec![(2, 24), (5, 24)]);
        let big_prime_sq = BigUint::from((1u64 << 61) - 1).pow(2);
        assert!(factorize_biguint(&big_prime_sq).is_err());
    }

    proptest! {
        #[test]
        fn reconstructs_random_u64(n in 1u64..) {
            let f = factorize(n, None);
            prop_assert!(f.verify());
        }
    }
}

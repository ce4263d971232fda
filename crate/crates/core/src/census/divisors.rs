//! Counting `N_k(x)` without a table.
//!
//! If `S(n)! <= n^k <= x^k` then `S(n) < T` where `T` is the least integer
//! with `T!^q > x^p`, so `n | (T-1)!`. Enumerating the divisors of `(T-1)!`
//! up to `x` visits every candidate, carrying `S` and `P` along the way.

use std::cmp::Ordering;

use crate::arith::{exact_compare_factorial_power, primes_up_to, valuation_unchecked, ExponentK};
use crate::error::{Error, Result};
use crate::smarandache::prime_power_unchecked;

/// Divisors visited before the enumeration gives up.
pub const MAX_DIVISOR_VISITS: u64 = 200_000_000;

/// A counted `n` with its `S(n)` and `P(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub n: u64,
    pub s: u64,
    pub p: u64,
}

/// Least `T` with `(T!)^q > x^p` for `k = p/q`.
pub fn factorial_threshold(x: u64, k: ExponentK) -> u64 {
    assert!(x >= 1, "x must be positive");
    let mut t = 1;
    while exact_compare_factorial_power(t, x, k) != Ordering::Greater {
        t += 1;
    }
    t
}

struct Walk<'a> {
    x: u64,
    k: ExponentK,
    // (prime, exponent in (T-1)!) in increasing prime order.
    primes: &'a [(u64, u64)],
    visits: u64,
    out: Vec<Witness>,
}

impl Walk<'_> {
    fn visit(&mut self, idx: usize, d: u64, s: u64, p: u64) -> Result<()> {
        self.visits += 1;
        if self.visits > MAX_DIVISOR_VISITS {
            return Err(Error::Resource(format!(
                "more than {MAX_DIVISOR_VISITS} divisors to enumerate below x = {}",
                self.x
            )));
        }
        if exact_compare_factorial_power(s, d, self.k) != Ordering::Greater {
            self.out.push(Witness { n: d, s, p });
        }
        for j in idx..self.primes.len() {
            let (q, e) = self.primes[j];
            if d > self.x / q {
                // Primes are increasing, so no later prime fits either.
                break;
            }
            let mut dd = d;
            for a in 1..=e {
                if dd > self.x / q {
                    break;
                }
                dd *= q;
                self.visit(j + 1, dd, s.max(prime_power_unchecked(q, a)), q)?;
            }
        }
        Ok(())
    }
}

/// Every `n <= x` with `S(n)! <= n^k`, in increasing order.
pub fn nk_divisor_witnesses(x: u64, k: ExponentK) -> Result<Vec<Witness>> {
    if x == 0 {
        return Err(Error::InvalidArgument("x must be positive".into()));
    }
    let m = factorial_threshold(x, k) - 1;
    let primes: Vec<(u64, u64)> = primes_up_to(m).into_iter().map(|p| (p, valuation_unchecked(p, m))).collect();
    let mut walk = Walk { x, k, primes: &primes, visits: 0, out: Vec::new() };
    walk.visit(0, 1, 1, 1)?;
    let mut out = walk.out;
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smarandache::{largest_prime_factor, smarandache};

    fn k(p: u32, q: u32) -> ExponentK {
        ExponentK::new(p, q).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(factorial_threshold(10, k(2, 1)), 5);
        assert_eq!(factorial_threshold(1, k(2, 1)), 2);
        // 14! = 87178291200 <= 10^12 < 15! = 1307674368000
        assert_eq!(factorial_threshold(1_000_000, k(2, 1)), 15);
    }

    #[test]
    fn witnesses_carry_s_and_p() {
        let w = nk_divisor_witnesses(10, k(2, 1)).unwrap();
        assert_eq!(w.iter().map(|w| w.n).collect::<Vec<_>>(), vec![1, 2, 3, 6, 8]);
        for w in nk_divisor_witnesses(5000, k(3, 1)).unwrap() {
            assert_eq!(w.s, smarandache(w.n));
            assert_eq!(w.p, largest_prime_factor(w.n));
        }
    }
}

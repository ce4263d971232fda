use super::primes::is_prime;
use crate::error::{invalid, Result};

/// Exponent of the prime `p` in `m!`: `sum_{i >= 1} floor(m / p^i)`.
pub fn legendre_valuation(p: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    Ok(valuation_unchecked(p, m))
}

/// As [`legendre_valuation`], for callers that already know `p` is prime.
#[inline]
pub(crate) fn valuation_unchecked(p: u64, m: u64) -> u64 {
    let mut v = 0;
    let mut q = m;
    // floor(m / p^i) = floor(floor(m / p^(i-1)) / p), so p^i never overflows.
    while q >= p {
        q /= p;
        v += q;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorial::factorial;
    use crate::arith::primes::primes_up_to;
    use num_bigint::BigUint;
    use num_integer::Integer;
    use num_traits::Zero;

    fn digit_sum(mut m: u64, p: u64) -> u64 {
        let mut s = 0;
        while m > 0 {
            s += m % p;
            m /= p;
        }
        s
    }

    /// Oracle: strip factors of p from the big integer m!.
    fn valuation_of_big(p: u64, mut f: BigUint) -> u64 {
        let bp = BigUint::from(p);
        let mut v = 0;
        loop {
            let (q, r) = f.div_rem(&bp);
            if !r.is_zero() {
                return v;
            }
            f = q;
            v += 1;
        }
    }

    #[test]
    fn examples() {
        assert_eq!(legendre_valuation(2, 4), Ok(3));
        assert_eq!(legendre_valuation(7, 0), Ok(0));
        assert_eq!(legendre_valuation(3, 9), Ok(4));
        assert!(legendre_valuation(4, 10).is_err());
        assert!(legendre_valuation(1, 10).is_err());
    }

    #[test]
    fn matches_direct_factor_count_of_small_factorials() {
        // 4! = 24 = 2^3 * 3 and 9! = 362880 = 2^7 * 3^4 * 5 * 7
        assert_eq!(valuation_of_big(2, factorial(4)), 3);
        assert_eq!(valuation_of_big(3, factorial(9)), 4);
        for p in primes_up_to(100) {
            for m in (0..=2000).step_by(37) {
                assert_eq!(valuation_unchecked(p, m), valuation_of_big(p, factorial(m)), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn matches_multiplicative_accumulation() {
        // v_p(m!) = v_p((m-1)!) + v_p(m), counting factors of each multiplicand.
        for p in primes_up_to(100) {
            let mut acc = 0;
            for m in 1..=10_000u64 {
                let mut t = m;
                while t % p == 0 {
                    t /= p;
                    acc += 1;
                }
                assert_eq!(valuation_unchecked(p, m), acc);
            }
        }
    }

    #[test]
    fn digit_sum_identity() {
        for p in primes_up_to(100) {
            for m in 0..=10_000u64 {
                assert_eq!(valuation_unchecked(p, m), (m - digit_sum(m, p)) / (p - 1));
            }
        }
    }

    #[test]
    fn no_overflow_near_u64_max() {
        let v = valuation_unchecked(2, u64::MAX);
        assert_eq!(v, u64::MAX - 64);
    }
}

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;

use super::exponent::ExponentK;
use super::logfact::log_factorial_interval;
use crate::real::Interval;

fn range_product(lo: u64, hi: u64) -> BigUint {
    if hi < lo {
        return BigUint::one();
    }
    if hi - lo < 16 {
        let mut acc = BigUint::one();
        for j in lo..=hi {
            acc *= j;
        }
        return acc;
    }
    let mid = lo + (hi - lo) / 2;
    range_product(lo, mid) * range_product(mid + 1, hi)
}

/// `n!` by a balanced product tree.
pub fn factorial(n: u64) -> BigUint {
    range_product(2, n)
}

fn log2_interval(x: Interval) -> Interval {
    x / Interval::ln2()
}

/// Orders `s!` against `n^k` exactly, i.e. `(s!)^q` against `n^p` for
/// `k = p/q`.
///
/// Bit-length estimates from certified logarithms settle the comparison
/// unless the two sides are within two bits of each other; only then are
/// the big integers materialized.
pub fn exact_compare_factorial_power(s: u64, n: u64, k: ExponentK) -> Ordering {
    assert!(s >= 1 && n >= 1, "s and n must be positive");
    let (p, q) = (k.num() as f64, k.den() as f64);
    let lhs = log2_interval(log_factorial_interval(s)) * q;
    let rhs = log2_interval(Interval::from_u64(n).ln()) * p;
    if lhs.lo() > rhs.hi() + 2.0 {
        return Ordering::Greater;
    }
    if rhs.lo() > lhs.hi() + 2.0 {
        return Ordering::Less;
    }
    let left = factorial(s).pow(k.den());
    let right = BigUint::from(n).pow(k.num());
    left.cmp(&right)
}

//! Rigorous enclosures of `log n!`.

use super::factorial::factorial;
use crate::error::{Error, Result};
use crate::real::{decide_le, precision_cap_bits, Dyadic, Interval, RealEnclosure, Round};

/// Relative width the bracket must reach: `2^-40`.
pub const LOG_FACTORIAL_REL_WIDTH: f64 = 1.0 / (1u64 << 40) as f64;

/// Below this `n`, `log n!` is summed term by term.
const DIRECT_SUM_LIMIT: u64 = 64;

/// `[lower, upper]` containing `log n!`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogFactorialBracket {
    pub n: u64,
    pub lower: f64,
    pub upper: f64,
}

impl LogFactorialBracket {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn as_interval(&self) -> Interval {
        Interval::new(self.lower, self.upper)
    }

    fn meets_target(&self) -> bool {
        self.width() <= LOG_FACTORIAL_REL_WIDTH * self.lower.abs().max(1.0)
    }
}

// B_{2k} / (2k (2k - 1)) for k = 1..=5, as (numerator, denominator).
const STIRLING: [(f64, f64); 5] = [(1.0, 12.0), (-1.0, 360.0), (1.0, 1260.0), (-1.0, 1680.0), (1.0, 1188.0)];
// |B_12| / (12 * 11): bounds the remainder after five terms.
const STIRLING_REMAINDER: (f64, f64) = (691.0, 360360.0);

/// Double-precision enclosure of `log n!`; exact summation for small `n`,
/// otherwise the Stirling series with its remainder bound.
pub fn log_factorial_interval(n: u64) -> Interval {
    if n <= 1 {
        return Interval::point(0.0);
    }
    if n <= DIRECT_SUM_LIMIT {
        let mut acc = Interval::point(0.0);
        for j in 2..=n {
            acc = acc + Interval::point(j as f64).ln();
        }
        return acc;
    }
    let x = Interval::from_u64(n);
    let ln_x = x.ln();
    let half_ln_2pi = (Interval::point(2.0) * Interval::pi()).ln() * 0.5;
    let mut acc = (x + 0.5) * ln_x - x + half_ln_2pi;
    let inv = Interval::point(1.0) / x;
    let inv2 = inv * inv;
    let mut pow = inv;
    for (num, den) in STIRLING {
        acc = acc + pow * (Interval::point(num) / den);
        pow = pow * inv2;
    }
    let r = (pow * (Interval::point(STIRLING_REMAINDER.0) / STIRLING_REMAINDER.1)).hi();
    acc + Interval::new(-r, r)
}

/// Arbitrary-precision enclosure of `log n!`, from the natural logarithm of
/// the exact factorial.
pub fn log_factorial_enclosure(n: u64, precision_bits: u32) -> RealEnclosure {
    if n <= 1 {
        return RealEnclosure::from_int(0, precision_bits);
    }
    RealEnclosure::exact(Dyadic::from(&factorial(n)), precision_bits).ln()
}

/// Enclosure of `log n!` at relative width `2^-40` or better.
///
/// The double-precision tier settles every practical `n`; otherwise the
/// working precision doubles from 64 bits until the target is met.
pub fn log_factorial(n: u64) -> LogFactorialBracket {
    assert!(n >= 1, "log_factorial requires n >= 1");
    let i = log_factorial_interval(n);
    let b = LogFactorialBracket { n, lower: i.lo(), upper: i.hi() };
    if b.meets_target() {
        return b;
    }
    let mut bits = 64;
    loop {
        let e = log_factorial_enclosure(n, bits);
        let b = LogFactorialBracket {
            n,
            lower: e.lower().to_f64_dir(Round::Down),
            upper: e.upper().to_f64_dir(Round::Up),
        };
        if b.meets_target() || bits >= precision_cap_bits() {
            return b;
        }
        bits *= 2;
    }
}

/// The two sides of `n log n - n + 1 <= log n! <= n log n - n + 1 + log n`:
/// returns `(n log n - n + 1, log n)` in double precision.
fn stirling_floor_interval(n: u64) -> (Interval, Interval) {
    let x = Interval::from_u64(n);
    let ln_x = x.ln();
    (x * ln_x - x + 1.0, ln_x)
}

fn stirling_floor_enclosure(n: u64, bits: u32) -> (RealEnclosure, RealEnclosure) {
    let x = RealEnclosure::from_int(n, bits);
    let ln_x = x.ln();
    let one = RealEnclosure::from_int(1, bits);
    (x.mul(&ln_x).sub(&x).add(&one), ln_x)
}

/// Certified check of `0 <= log n! - (n log n - n + 1) <= log n`.
///
/// At `n = 1` every term is exactly zero and the bracket degenerates.
pub fn check_log_factorial_bracket(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if n == 1 {
        return Ok(true);
    }
    let what = || format!("{n} (log-factorial bracket)");
    let lower_ok = decide_le(
        || (stirling_floor_interval(n).0, log_factorial_interval(n)),
        |b| (stirling_floor_enclosure(n, b).0, log_factorial_enclosure(n, b)),
        what,
    )?;
    let upper_ok = decide_le(
        || {
            let (a, l) = stirling_floor_interval(n);
            (log_factorial_interval(n), a + l)
        },
        |b| {
            let (a, l) = stirling_floor_enclosure(n, b);
            (log_factorial_enclosure(n, b), a.add(&l))
        },
        what,
    )?;
    Ok(lower_ok && upper_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let b = log_factorial(1);
        assert_eq!((b.lower, b.upper), (0.0, 0.0));
        let b = log_factorial(2);
        assert!(b.lower <= std::f64::consts::LN_2 && std::f64::consts::LN_2 <= b.upper);
        // Bracket for n = 2: [2 ln 2 - 1, 2 ln 2 - 1 + ln 2] = [0.3863, 1.0794]
        let lo = 2.0 * std::f64::consts::LN_2 - 1.0;
        assert!((lo - 0.386294).abs() < 1e-6);
        assert!((lo + std::f64::consts::LN_2 - 1.079442).abs() < 1e-6);
        assert!(lo <= b.lower && b.upper <= lo + std::f64::consts::LN_2);
    }

    #[test]
    fn hundred_matches_direct_sum() {
        // Oracle: compensated sum of ln j, with 1e-12 slack for libm error.
        let mut s = 0.0f64;
        let mut c = 0.0f64;
        for j in 2..=100u64 {
            let y = (j as f64).ln() - c;
            let t = s + y;
            c = (t - s) - y;
            s = t;
        }
        let b = log_factorial(100);
        assert!(b.lower - 1e-12 <= s && s <= b.upper + 1e-12);
        // And the certified high-precision route brackets the same value.
        let e = log_factorial_enclosure(100, 200);
        let e = e.to_interval();
        assert!(e.lo() <= b.upper && b.lower <= e.hi());
        assert!(e.width() < 1e-12);
    }

    #[test]
    fn width_target_met_across_scales() {
        for n in [1u64, 2, 10, 63, 64, 65, 66, 1000, 100_000, 1 << 40, u64::MAX] {
            let b = log_factorial(n);
            assert!(b.meets_target(), "n = {n}: width {}", b.width());
        }
    }

    #[test]
    fn series_and_exact_routes_overlap() {
        for n in [65u64, 100, 500, 3000] {
            let fast = log_factorial_interval(n);
            let slow = log_factorial_enclosure(n, 128).to_interval();
            assert!(fast.lo() <= slow.hi() && slow.lo() <= fast.hi(), "n = {n}");
        }
    }

    #[test]
    fn bracket_check_small_range() {
        for n in 1..=2000 {
            assert_eq!(check_log_factorial_bracket(n), Ok(true), "n = {n}");
        }
    }
}

//! Double-precision interval arithmetic with outward rounding.
//!
//! Every arithmetic result is computed in round-to-nearest and then widened
//! by one ulp in each direction, which encloses the exact result. `ln` and
//! `exp` come from the platform libm; both glibc and the Rust `libm` port keep
//! these within one ulp, and we widen by two.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

impl Interval {
    /// # Panics
    /// If `lo > hi` or either bound is NaN.
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "malformed interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// A point interval; exact for any finite `f64`.
    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Encloses an integer that may not be representable in an `f64`.
    pub fn from_u64(n: u64) -> Self {
        let x = n as f64;
        if x as u128 == n as u128 {
            Interval::point(x)
        } else {
            Interval { lo: down(x), hi: up(x) }
        }
    }

    pub fn ln2() -> Self {
        Interval { lo: down(std::f64::consts::LN_2), hi: up(std::f64::consts::LN_2) }
    }

    pub fn pi() -> Self {
        Interval { lo: down(std::f64::consts::PI), hi: up(std::f64::consts::PI) }
    }

    pub fn e() -> Self {
        Interval { lo: down(std::f64::consts::E), hi: up(std::f64::consts::E) }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn mid(&self) -> f64 {
        0.5 * self.lo + 0.5 * self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Hull of two intervals.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }

    /// Natural logarithm. The lower bound must be positive.
    pub fn ln(self) -> Interval {
        assert!(self.lo > 0.0, "ln of non-positive interval");
        let lo = if self.lo == 1.0 { 0.0 } else { down(down(self.lo.ln())) };
        let hi = if self.hi == 1.0 { 0.0 } else { up(up(self.hi.ln())) };
        Interval { lo, hi }
    }

    pub fn exp(self) -> Interval {
        let lo = if self.lo == 0.0 { 1.0 } else { down(down(self.lo.exp())).max(0.0) };
        let hi = if self.hi == 0.0 { 1.0 } else { up(up(self.hi.exp())) };
        Interval { lo, hi }
    }

    /// Square root of a non-negative interval (IEEE `sqrt` is correctly rounded).
    pub fn sqrt(self) -> Interval {
        assert!(self.lo >= 0.0, "sqrt of negative interval");
        Interval { lo: down(self.lo.sqrt()).max(0.0), hi: up(self.hi.sqrt()) }
    }

    /// Certainly strictly below `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    /// Certainly at most `other`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    /// True when the two intervals are separated by more than `rel` times
    /// the larger magnitude involved. Used to decide when a double-precision
    /// verdict is trusted or escalated.
    pub fn separated_by(&self, other: &Interval, rel: f64) -> bool {
        let scale = self.lo.abs().max(self.hi.abs()).max(other.lo.abs()).max(other.hi.abs());
        let gap = if self.hi < other.lo {
            other.lo - self.hi
        } else if other.hi < self.lo {
            self.lo - other.hi
        } else {
            return false;
        };
        gap > rel * scale
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval { lo: down(self.lo + rhs.lo), hi: up(self.hi + rhs.hi) }
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval { lo: down(self.lo - rhs.hi), hi: up(self.hi - rhs.lo) }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        let c = [self.lo * rhs.lo, self.lo * rhs.hi, self.hi * rhs.lo, self.hi * rhs.hi];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: down(lo), hi: up(hi) }
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, rhs: Interval) -> Interval {
        assert!(rhs.lo > 0.0 || rhs.hi < 0.0, "division by interval containing zero");
        let c = [self.lo / rhs.lo, self.lo / rhs.hi, self.hi / rhs.lo, self.hi / rhs.hi];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval { lo: down(lo), hi: up(hi) }
    }
}

impl Add<f64> for Interval {
    type Output = Interval;
    fn add(self, rhs: f64) -> Interval {
        self + Interval::point(rhs)
    }
}

impl Sub<f64> for Interval {
    type Output = Interval;
    fn sub(self, rhs: f64) -> Interval {
        self - Interval::point(rhs)
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, rhs: f64) -> Interval {
        self * Interval::point(rhs)
    }
}

impl Div<f64> for Interval {
    type Output = Interval;
    fn div(self, rhs: f64) -> Interval {
        self / Interval::point(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_encloses_exact_values() {
        let third = Interval::point(1.0) / Interval::point(3.0);
        assert!(third.lo() < third.hi());
        let back = third * 3.0;
        assert!(back.contains(1.0));
        let s = Interval::point(0.1) + Interval::point(0.2);
        assert!(s.lo() <= 0.30000000000000004 && s.hi() >= 0.3);
    }

    #[test]
    fn ln_of_one_is_exact() {
        let z = Interval::point(1.0).ln();
        assert_eq!((z.lo(), z.hi()), (0.0, 0.0));
    }

    #[test]
    fn constants_contain_reference_digits() {
        let pi = Interval::pi();
        assert!(pi.contains(std::f64::consts::PI) && pi.hi() - pi.lo() < 1e-15);
        assert!(Interval::e().contains(std::f64::consts::E));
        let l = Interval::point(2.0).ln();
        assert!(l.lo() <= Interval::ln2().lo() + 1e-15 && l.hi() >= Interval::ln2().hi() - 1e-15);
    }

    #[test]
    fn from_u64_brackets_unrepresentable() {
        let n = (1u64 << 60) + 1;
        let i = Interval::from_u64(n);
        assert!(i.lo() < i.hi());
        assert!((i.lo() as u128) <= n as u128 && (i.hi() as u128) >= n as u128);
    }

    #[test]
    fn separation() {
        let a = Interval::new(1.0, 1.0);
        let b = Interval::new(1.0 + 1e-6, 1.0 + 2e-6);
        assert!(a.separated_by(&b, 1e-9));
        assert!(!a.separated_by(&b, 1e-3));
    }
}

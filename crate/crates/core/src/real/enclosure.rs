//! Arbitrary-precision real enclosures.
//!
//! Every operation rounds its lower endpoint down and its upper endpoint up,
//! so an enclosure always contains the exact value no matter how small the
//! working precision is. Precision only controls how tight the result is.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Round};
use super::interval::Interval;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealEnclosure {
    lower: Dyadic,
    upper: Dyadic,
    precision_bits: u32,
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

fn div_dir(a: &BigInt, b: &BigInt, dir: Round) -> BigInt {
    match dir {
        Round::Down => floor_div(a, b),
        Round::Up => ceil_div(a, b),
    }
}

/// Bounds on `atanh(num/den)` as integers over `2^w`; requires `0 <= num/den <= 1/3`.
fn atanh_fixed(num: &BigInt, den: &BigInt, w: u64, dir: Round) -> BigInt {
    debug_assert!(!num.is_negative() && BigInt::from(3) * num <= *den);
    let scale = BigInt::one() << w;
    let z = div_dir(&(num << w), den, dir);
    let z2 = div_dir(&(&z * &z), &scale, dir);
    let mut pow = z;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    match dir {
        Round::Down => loop {
            let term = floor_div(&pow, &BigInt::from(2 * k + 1));
            if term.is_zero() {
                break;
            }
            sum += term;
            pow = floor_div(&(&pow * &z2), &scale);
            k += 1;
        },
        Round::Up => {
            loop {
                if pow <= BigInt::one() {
                    break;
                }
                sum += ceil_div(&pow, &BigInt::from(2 * k + 1));
                pow = ceil_div(&(&pow * &z2), &scale);
                k += 1;
            }
            // Remaining tail is at most pow * 1/(1 - z^2) <= pow * 9/8 <= 2 ulps.
            sum += 2;
        }
    }
    sum
}

/// `ln 2 = 2 atanh(1/3)` as an integer bound over `2^w`.
fn ln2_fixed(w: u64, dir: Round) -> BigInt {
    atanh_fixed(&BigInt::one(), &BigInt::from(3), w, dir) * 2
}

/// Directed bound on `ln a` for `a > 0`.
pub(crate) fn ln_dir(a: &Dyadic, prec: u32, dir: Round) -> Dyadic {
    assert!(a.is_positive(), "ln of non-positive value");
    // ln is increasing, so rounding the argument in `dir` keeps the bound.
    let a = &a.round(prec + 32, dir);
    let t = a.ilog2().unwrap();
    let m = a.shl(-t); // in [1, 2)
    if m == Dyadic::one() && t == 0 {
        return Dyadic::zero();
    }
    let w = prec as u64 + 24 + (64 - t.unsigned_abs().leading_zeros() as u64);
    // m = M / 2^s with s >= 0
    let s = (-m.exponent()).max(0) as u64;
    let mm = m.mantissa() << (m.exponent().max(0) as u64);
    let d = BigInt::one() << s;
    let lnm = atanh_fixed(&(&mm - &d), &(&mm + &d), w, dir) * 2;
    let ln2 = if (t >= 0) == (dir == Round::Down) {
        ln2_fixed(w, Round::Down)
    } else {
        ln2_fixed(w, Round::Up)
    };
    let total = lnm + ln2 * BigInt::from(t);
    Dyadic::new(total, -(w as i64)).round(prec, dir)
}

/// Directed bound on `exp x`.
pub(crate) fn exp_dir(x: &Dyadic, prec: u32, dir: Round) -> Dyadic {
    if x.is_zero() {
        return Dyadic::one();
    }
    if x.is_negative() {
        let inv = exp_dir(&x.neg(), prec + 4, dir.flip());
        return Dyadic::one().div_round(&inv, prec, dir);
    }
    let s = (x.ilog2().unwrap() + 9).max(0);
    let r = x.shl(-s);
    let w = prec as u64 + s as u64 + 32;
    let scale = BigInt::one() << w;
    let rf = match dir {
        Round::Down => r.shl(w as i64).floor(),
        Round::Up => r.shl(w as i64).ceil(),
    };
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut k: u64 = 1;
    loop {
        term = div_dir(&(&term * &rf), &(&scale * BigInt::from(k)), dir);
        match dir {
            Round::Down => {
                if term.is_zero() {
                    break;
                }
                sum += &term;
            }
            Round::Up => {
                sum += &term;
                if term <= BigInt::one() {
                    // r <= 2^-8, so the remaining tail is below the last term.
                    sum += 1;
                    break;
                }
            }
        }
        k += 1;
    }
    let mut y = Dyadic::new(sum, -(w as i64));
    for _ in 0..s {
        y = y.mul_round(&y, w as u32, dir);
    }
    y.round(prec, dir)
}

/// `atan(1/q)` bounds over `2^w` by the alternating series.
fn atan_inv_fixed(q: u64, w: u64) -> (BigInt, BigInt) {
    let scale = BigInt::one() << w;
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let mut p_lo = floor_div(&scale, &q);
    let mut p_hi = ceil_div(&scale, &q);
    let mut lo_terms = Vec::new();
    let mut hi_terms = Vec::new();
    let mut k: u64 = 0;
    loop {
        let d = BigInt::from(2 * k + 1);
        lo_terms.push(floor_div(&p_lo, &d));
        hi_terms.push(ceil_div(&p_hi, &d));
        // Stop once the last term is negligible and the index is odd, so
        // the truncated sum ends on a negative term (a lower bound).
        if k % 2 == 1 && hi_terms[k as usize] <= BigInt::one() {
            break;
        }
        p_lo = floor_div(&p_lo, &q2);
        p_hi = ceil_div(&p_hi, &q2);
        k += 1;
    }
    let k_last = k as usize;
    let mut lower = BigInt::zero();
    for i in 0..=k_last {
        if i % 2 == 0 {
            lower += &lo_terms[i];
        } else {
            lower -= &hi_terms[i];
        }
    }
    // One more (positive) term gives an upper bound.
    let next = ceil_div(&(p_hi.clone()), &(q2.clone() * BigInt::from(2 * (k + 1) + 1)));
    let mut upper = BigInt::zero();
    for i in 0..=k_last {
        if i % 2 == 0 {
            upper += &hi_terms[i];
        } else {
            upper -= &lo_terms[i];
        }
    }
    upper += next;
    (lower, upper)
}

/// Terms `1/j!` over `2^w`, summed in the given direction, with the tail
/// bound `2/(J+1)!` added to the upper sum.
fn e_series_fixed(w: u64, dir: Round) -> BigInt {
    let scale = BigInt::one() << w;
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut j: u64 = 1;
    loop {
        term = div_dir(&term, &BigInt::from(j), dir);
        sum += &term;
        if term <= BigInt::from(4) {
            break;
        }
        j += 1;
    }
    if dir == Round::Up {
        // 2/(J+1)! <= term, plus one ulp per rounded term.
        sum += &term + BigInt::from(j + 1);
    }
    sum
}

impl RealEnclosure {
    /// # Panics
    /// If `lower > upper`.
    pub fn new(lower: Dyadic, upper: Dyadic, precision_bits: u32) -> Self {
        assert!(lower <= upper, "malformed enclosure");
        RealEnclosure { lower, upper, precision_bits }
    }

    pub fn exact(value: Dyadic, precision_bits: u32) -> Self {
        RealEnclosure { lower: value.clone(), upper: value, precision_bits }
    }

    pub fn from_int(n: impl Into<BigInt>, precision_bits: u32) -> Self {
        Self::exact(Dyadic::from_int(n), precision_bits)
    }

    pub fn from_interval(i: Interval) -> Self {
        RealEnclosure {
            lower: Dyadic::from_f64(i.lo()),
            upper: Dyadic::from_f64(i.hi()),
            precision_bits: 53,
        }
    }

    /// Outward-rounded double-precision hull.
    pub fn to_interval(&self) -> Interval {
        Interval::new(self.lower.to_f64_dir(Round::Down), self.upper.to_f64_dir(Round::Up))
    }

    pub fn lower(&self) -> &Dyadic {
        &self.lower
    }

    pub fn upper(&self) -> &Dyadic {
        &self.upper
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Relabels the working precision used by later operations.
    pub fn with_precision_bits(mut self, precision_bits: u32) -> Self {
        self.precision_bits = precision_bits;
        self
    }

    pub fn width(&self) -> Dyadic {
        self.upper.sub(&self.lower)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        self.lower <= *x && *x <= self.upper
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// `Some(ordering)` when the comparison is decided by the enclosures.
    pub fn compare(&self, other: &RealEnclosure) -> Option<Ordering> {
        if self.upper < other.lower {
            Some(Ordering::Less)
        } else if self.lower > other.upper {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() && self.lower == other.lower {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Decides `self <= other`, if possible.
    pub fn le(&self, other: &RealEnclosure) -> Option<bool> {
        if self.upper <= other.lower {
            Some(true)
        } else if self.lower > other.upper {
            Some(false)
        } else {
            None
        }
    }

    fn prec_with(&self, other: &RealEnclosure) -> u32 {
        self.precision_bits.min(other.precision_bits)
    }

    pub fn neg(&self) -> RealEnclosure {
        RealEnclosure { lower: self.upper.neg(), upper: self.lower.neg(), precision_bits: self.precision_bits }
    }

    pub fn abs(&self) -> RealEnclosure {
        if !self.lower.is_negative() {
            self.clone()
        } else if !self.upper.is_positive() {
            self.neg()
        } else {
            let m = self.lower.neg().max(self.upper.clone());
            RealEnclosure { lower: Dyadic::zero(), upper: m, precision_bits: self.precision_bits }
        }
    }

    pub fn add(&self, other: &RealEnclosure) -> RealEnclosure {
        let p = self.prec_with(other);
        RealEnclosure {
            lower: self.lower.add_round(&other.lower, p, Round::Down),
            upper: self.upper.add_round(&other.upper, p, Round::Up),
            precision_bits: p,
        }
    }

    pub fn sub(&self, other: &RealEnclosure) -> RealEnclosure {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RealEnclosure) -> RealEnclosure {
        let p = self.prec_with(other);
        let corners = [
            (&self.lower, &other.lower),
            (&self.lower, &other.upper),
            (&self.upper, &other.lower),
            (&self.upper, &other.upper),
        ];
        let lower = corners.iter().map(|(a, b)| a.mul_round(b, p, Round::Down)).min().unwrap();
        let upper = corners.iter().map(|(a, b)| a.mul_round(b, p, Round::Up)).max().unwrap();
        RealEnclosure { lower, upper, precision_bits: p }
    }

    /// # Panics
    /// If `other` contains zero.
    pub fn div(&self, other: &RealEnclosure) -> RealEnclosure {
        assert!(
            other.lower.is_positive() || other.upper.is_negative(),
            "division by an enclosure containing zero"
        );
        let p = self.prec_with(other);
        let corners = [
            (&self.lower, &other.lower),
            (&self.lower, &other.upper),
            (&self.upper, &other.lower),
            (&self.upper, &other.upper),
        ];
        let lower = corners.iter().map(|(a, b)| a.div_round(b, p, Round::Down)).min().unwrap();
        let upper = corners.iter().map(|(a, b)| a.div_round(b, p, Round::Up)).max().unwrap();
        RealEnclosure { lower, upper, precision_bits: p }
    }

    /// # Panics
    /// If the enclosure is not strictly positive.
    pub fn ln(&self) -> RealEnclosure {
        assert!(self.lower.is_positive(), "ln of an enclosure reaching zero");
        let p = self.precision_bits;
        RealEnclosure {
            lower: ln_dir(&self.lower, p, Round::Down),
            upper: ln_dir(&self.upper, p, Round::Up),
            precision_bits: p,
        }
    }

    pub fn exp(&self) -> RealEnclosure {
        let p = self.precision_bits;
        RealEnclosure {
            lower: exp_dir(&self.lower, p, Round::Down),
            upper: exp_dir(&self.upper, p, Round::Up),
            precision_bits: p,
        }
    }

    pub fn ln2(prec: u32) -> RealEnclosure {
        let w = prec as u64 + 16;
        RealEnclosure {
            lower: Dyadic::new(ln2_fixed(w, Round::Down), -(w as i64)).round(prec, Round::Down),
            upper: Dyadic::new(ln2_fixed(w, Round::Up), -(w as i64)).round(prec, Round::Up),
            precision_bits: prec,
        }
    }

    /// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(prec: u32) -> RealEnclosure {
        let w = prec as u64 + 16;
        let (a5_lo, a5_hi) = atan_inv_fixed(5, w);
        let (a239_lo, a239_hi) = atan_inv_fixed(239, w);
        let lo = a5_lo * 16 - a239_hi * 4;
        let hi = a5_hi * 16 - a239_lo * 4;
        RealEnclosure {
            lower: Dyadic::new(lo, -(w as i64)).round(prec, Round::Down),
            upper: Dyadic::new(hi, -(w as i64)).round(prec, Round::Up),
            precision_bits: prec,
        }
    }

    /// Euler's number from `sum 1/j!` with the tail bound `2/(J+1)!`.
    pub fn e(prec: u32) -> RealEnclosure {
        let w = prec as u64 + 16;
        RealEnclosure {
            lower: Dyadic::new(e_series_fixed(w, Round::Down), -(w as i64)).round(prec, Round::Down),
            upper: Dyadic::new(e_series_fixed(w, Round::Up), -(w as i64)).round(prec, Round::Up),
            precision_bits: prec,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const E_DIGITS: &str = "2.71828182845904523536028747135266249775724709369995957496696762772407663035354759";
    const PI_DIGITS: &str = "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899";
    const LN2_DIGITS: &str = "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471";

    /// Parse a decimal string into an exact rational `num / 10^k` and test
    /// that the enclosure brackets it to within `tol` decimal places.
    fn brackets_decimal(enc: &RealEnclosure, digits: &str, places: usize) {
        let (int, frac) = digits.split_once('.').unwrap();
        let frac = &frac[..places];
        let num: BigInt = format!("{int}{frac}").parse().unwrap();
        let den = num_traits::pow(BigInt::from(10), places);
        // value in [num/den, (num+1)/den]
        let lo_ok = enc.lower().mul(&Dyadic::from_int(den.clone())) <= Dyadic::from_int(&num + 1);
        let hi_ok = enc.upper().mul(&Dyadic::from_int(den.clone())) >= Dyadic::from_int(num.clone());
        assert!(lo_ok && hi_ok, "enclosure {} .. {} misses {}", enc.lower(), enc.upper(), digits);
    }

    #[test]
    fn constants_match_reference_digits() {
        for prec in [24, 64, 200] {
            let places = (prec as usize * 3 / 10).min(75);
            brackets_decimal(&RealEnclosure::e(prec), E_DIGITS, places);
            brackets_decimal(&RealEnclosure::pi(prec), PI_DIGITS, places);
            brackets_decimal(&RealEnclosure::ln2(prec), LN2_DIGITS, places);
            for c in [RealEnclosure::e(prec), RealEnclosure::pi(prec), RealEnclosure::ln2(prec)] {
                let w = c.width();
                assert!(w.is_zero() || w.ilog2().unwrap() < -(prec as i64) + 4);
            }
        }
    }

    #[test]
    fn ln_of_e_contains_one() {
        let e = RealEnclosure::e(128);
        let l = e.ln();
        assert!(l.contains(&Dyadic::one()));
        assert!(l.width().ilog2().unwrap() < -120);
    }

    #[test]
    fn exp_ln_roundtrip_contains_input() {
        for v in [1u64, 2, 3, 10, 1000, 123456789] {
            let x = RealEnclosure::from_int(v, 150);
            let back = x.ln().exp();
            assert!(back.contains(&Dyadic::from(v)), "exp(ln {v}) lost the value");
        }
    }

    #[test]
    fn exp_of_negative_and_large_arguments() {
        let x = RealEnclosure::from_int(-50, 100).exp();
        let i = x.to_interval();
        assert!(i.contains((-50f64).exp()) || (i.mid() / (-50f64).exp() - 1.0).abs() < 1e-14);
        let big = RealEnclosure::from_int(700, 80).exp();
        let r = big.upper().to_f64() / 700f64.exp();
        assert!((r - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn ln_encloses_libm(x in 1e-300f64..1e300) {
            let enc = RealEnclosure::exact(Dyadic::from_f64(x), 80).ln();
            let f = x.ln();
            // libm is faithful, so the true value is within 1 ulp of f
            prop_assert!(enc.lower().to_f64() <= f.next_up() && enc.upper().to_f64() >= f.next_down());
            prop_assert!(enc.width().is_zero() || enc.width().ilog2().unwrap() < -60);
        }

        #[test]
        fn exp_encloses_libm(x in -700f64..700.0) {
            let enc = RealEnclosure::exact(Dyadic::from_f64(x), 80).exp();
            let f = x.exp();
            let (lo, hi) = (enc.lower().to_f64(), enc.upper().to_f64());
            prop_assert!(lo <= f.next_up() && hi >= f.next_down());
            prop_assert!((hi - lo) <= f * 1e-20);
        }

        #[test]
        fn f64_interval_ln_contains_certified(x in 1.0f64..1e12) {
            let cert = RealEnclosure::exact(Dyadic::from_f64(x), 120).ln();
            let fast = Interval::point(x).ln();
            prop_assert!(Dyadic::from_f64(fast.lo()) <= *cert.lower());
            prop_assert!(Dyadic::from_f64(fast.hi()) >= *cert.upper());
        }
    }
}

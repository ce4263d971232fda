//! Exact binary rationals `m * 2^e` with directed rounding helpers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for the inexact operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Down => Round::Up,
            Round::Up => Round::Down,
        }
    }
}

/// `mant * 2^exp`, normalized so that `mant` is odd (or zero with `exp == 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn div_round_int(num: &BigInt, den: &BigInt, dir: Round) -> BigInt {
    match dir {
        Round::Down => num.div_floor(den),
        Round::Up => -((-num).div_floor(den)),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// Exact conversion.
    ///
    /// # Panics
    /// On NaN or infinite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "cannot convert {x} to a dyadic");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 { (frac, -1074) } else { (frac | (1u64 << 52), biased - 1075) };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// `floor(log2 |self|)`, or `None` for zero.
    pub fn ilog2(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.mant.bits() as i64 - 1 + self.exp)
        }
    }

    /// Multiply by `2^k` (exact).
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exp.min(b.exp);
        let am = &a.mant << (a.exp - e) as u64;
        let bm = &b.mant << (b.exp - e) as u64;
        (am, bm, e)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::aligned(self, other);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Round to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let q = div_round_int(&self.mant, &pow2(shift), dir);
        Dyadic::new(q, self.exp + shift as i64)
    }

    pub fn mul_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.mul(other).round(prec, dir)
    }

    pub fn add_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        self.add(other).round(prec, dir)
    }

    /// `self / other` rounded to `prec` significant bits.
    ///
    /// # Panics
    /// If `other` is zero.
    pub fn div_round(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let want = prec as i64 + 2;
        let s = (want + other.mant.bits() as i64 - self.mant.bits() as i64).max(0) as u64;
        let num = &self.mant << s;
        let q = div_round_int(&num, &other.mant, dir);
        Dyadic::new(q, self.exp - other.exp - s as i64).round(prec, dir)
    }

    /// Floor of the value as an integer.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            self.mant.div_floor(&pow2((-self.exp) as u64))
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(self.neg().floor())
    }

    /// Nearest `f64` in direction `dir` (never crossing the exact value).
    pub fn to_f64_dir(&self, dir: Round) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, dir);
        let m = r.mant.to_f64().expect("53-bit mantissa fits in f64");
        let approx = ldexp(m, r.exp);
        // Overflow, underflow or subnormal rounding may have moved past the
        // exact value; step back in the requested direction.
        let mut out = approx;
        if out.is_infinite() {
            if out > 0.0 && dir == Round::Down {
                out = f64::MAX;
            } else if out < 0.0 && dir == Round::Up {
                out = f64::MIN;
            }
            return out;
        }
        let back = Dyadic::from_f64(out);
        match (dir, back.cmp(self)) {
            (Round::Down, Ordering::Greater) => out = out.next_down(),
            (Round::Up, Ordering::Less) => out = out.next_up(),
            _ => {}
        }
        out
    }

    /// Round-to-nearest conversion for display and diagnostics.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(64, Round::Down);
        ldexp(r.mant.to_f64().unwrap_or(f64::NAN), r.exp)
    }

    /// Scientific notation with `digits` significant digits, rounded half-up,
    /// in the same shape as Rust's `{:e}` output (`1.5e-3`).
    pub fn to_sci(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return format!("{:.*e}", digits - 1, 0.0);
        }
        let neg = self.is_negative();
        let mag = self.abs();
        // log10 estimate from the leading 64 bits.
        let top = mag.round(64, Round::Down);
        let lead = top.mant.to_f64().unwrap_or(1.0);
        let est = lead.log10() + top.exp as f64 * std::f64::consts::LOG10_2;
        let mut k = est.floor() as i64;
        let ten = BigUint::from(10u32);
        let limit_hi = num_traits::pow(ten.clone(), digits);
        let limit_lo = num_traits::pow(ten.clone(), digits - 1);
        let m = mag.mant.to_biguint().expect("magnitude is non-negative");
        let q = loop {
            let t = digits as i64 - 1 - k;
            let mut num = m.clone();
            let mut den = BigUint::one();
            if mag.exp >= 0 {
                num <<= mag.exp as u64;
            } else {
                den <<= (-mag.exp) as u64;
            }
            if t >= 0 {
                num *= num_traits::pow(ten.clone(), t as usize);
            } else {
                den *= num_traits::pow(ten.clone(), (-t) as usize);
            }
            let (mut q, r) = num.div_rem(&den);
            if r * 2u32 >= den {
                q += 1u32;
            }
            if q == limit_hi {
                // Rounding carried into the next decade.
                k += 1;
                break limit_lo.clone();
            } else if q > limit_hi {
                k += 1;
            } else if q < limit_lo {
                k -= 1;
            } else {
                break q;
            }
        };
        let s = q.to_string();
        let (head, tail) = s.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{k}")
        } else {
            format!("{sign}{head}.{tail}e{k}")
        }
    }
}

fn ldexp(mut m: f64, mut e: i64) -> f64 {
    // Scale in steps that stay inside the normal exponent range.
    while e > 1000 {
        m *= 2f64.powi(1000);
        e -= 1000;
        if m.is_infinite() {
            return m;
        }
    }
    while e < -1000 {
        m *= 2f64.powi(-1000);
        e += 1000;
        if m == 0.0 {
            return m;
        }
    }
    m * 2f64.powi(e as i32)
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.mant.sign(), other.mant.sign());
        if sa != sb {
            let rank = |s: Sign| match s {
                Sign::Minus => 0,
                Sign::NoSign => 1,
                Sign::Plus => 2,
            };
            return rank(sa).cmp(&rank(sb));
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let (ta, tb) = (self.ilog2().unwrap(), other.ilog2().unwrap());
        let mag = if ta != tb {
            ta.cmp(&tb)
        } else {
            let (a, b, _) = Dyadic::aligned(&self.abs(), &other.abs());
            a.cmp(&b)
        };
        if sa == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(17))
    }
}

impl From<u64> for Dyadic {
    fn from(n: u64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<&BigUint> for Dyadic {
    fn from(n: &BigUint) -> Self {
        Dyadic::from_int(BigInt::from(n.clone()))
    }
}

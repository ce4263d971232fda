//! Rational approximations of `e`: the lower bound `|e - m/n| > 1/(S(n)+1)!`,
//! its comparison with `1/n^(2+eps)`, and continued-fraction convergents
//! derived from a certified enclosure of `e`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{factorial, factorize, factorize_biguint, log_factorial_interval, parse_rational};
use crate::census::map_chunks;
use crate::error::{invalid, Error, Result};
use crate::fmt::density;
use crate::real::{precision_cap_bits, Dyadic, Interval, RealEnclosure, Round};
use crate::smarandache::{smarandache, smarandache_of_factors, SmarandacheTable};

/// Above this, `1/(S(n)+1)!` is first bracketed by powers of two from the
/// log-factorial enclosure instead of the exact factorial.
const EXACT_FACTORIAL_LIMIT: u64 = 3000;

/// A non-negative rational `num/den`, in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Epsilon {
    num: u32,
    den: u32,
}

impl Epsilon {
    pub const ZERO: Epsilon = Epsilon { num: 0, den: 1 };

    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return invalid("epsilon denominator is zero");
        }
        let g = num.gcd(&den);
        Ok(Epsilon { num: num / g, den: den / g })
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = parse_rational(s)?;
        Epsilon::new(num, den)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 { write!(f, "{}", self.num) } else { write!(f, "{}/{}", self.num, self.den) }
    }
}

/// Which of `1/(S(n)+1)!` and `1/n^(2+eps)` is the larger lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrongerSide {
    /// `(S(n)+1)! > n^(2+eps)`.
    Dirichlet,
    /// `(S(n)+1)! < n^(2+eps)`.
    Sondow,
    Equal,
}

impl StrongerSide {
    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Greater => StrongerSide::Dirichlet,
            Ordering::Less => StrongerSide::Sondow,
            Ordering::Equal => StrongerSide::Equal,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            StrongerSide::Dirichlet => "dirichlet",
            StrongerSide::Sondow => "sondow",
            StrongerSide::Equal => "equal",
        }
    }
}

/// `e` with width at most `2^(1 - precision_bits)`.
pub fn e_enclosure(precision_bits: u32) -> Result<RealEnclosure> {
    if precision_bits < 16 {
        return invalid("precision must be at least 16 bits");
    }
    Ok(RealEnclosure::e(precision_bits + 4).with_precision_bits(precision_bits))
}

fn bits_of(n: &BigUint) -> u32 {
    n.bits() as u32
}

/// `S(n)` for an arbitrary-size `n`.
pub fn smarandache_big(n: &BigUint) -> Result<u64> {
    match n.to_u64() {
        Some(0) => invalid("n must be positive"),
        Some(v) => Ok(smarandache(v)),
        None => Ok(smarandache_of_factors(&factorize_biguint(n)?)),
    }
}

/// Certified double-precision enclosure of a big integer.
fn interval_of(n: &BigUint) -> Interval {
    let f = n.to_f64().unwrap_or(f64::INFINITY);
    Interval::new(f.next_down().max(0.0), f.next_up())
}

/// Orders `(s+1)!` against `n^(2+eps)` exactly.
fn order_factorial_vs_power(s1: u64, n: &BigUint, eps: Epsilon) -> Ordering {
    let (a, b) = (eps.num, eps.den);
    let exp = 2 * b as u64 + a as u64;
    let lhs = log_factorial_interval(s1) * b as f64 / Interval::ln2();
    let rhs = interval_of(n).ln() * exp as f64 / Interval::ln2();
    if lhs.is_finite() && rhs.is_finite() {
        if lhs.lo() > rhs.hi() + 2.0 {
            return Ordering::Greater;
        }
        if rhs.lo() > lhs.hi() + 2.0 {
            return Ordering::Less;
        }
    }
    let left = factorial(s1).pow(b);
    let right = num_traits::pow(n.clone(), exp as usize);
    left.cmp(&right)
}

/// Compares the two lower bounds for `|e - m/n|` at denominator `n`,
/// reading `S(n)` from `table` when it covers `n`.
pub fn compare_bounds(n: u64, eps: Epsilon, table: Option<&SmarandacheTable>) -> Result<StrongerSide> {
    if n < 2 {
        return invalid("n must exceed 1");
    }
    let s = match table {
        Some(t) if n <= t.limit() => t.s(n),
        _ => smarandache(n),
    };
    Ok(StrongerSide::from_ordering(order_factorial_vs_power(s + 1, &BigUint::from(n), eps)))
}

/// How often the factorial-side bound is at least as strong, over `[2, x]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SondowCensus {
    pub x: u64,
    pub epsilon: Epsilon,
    /// `n` in `[2, x]` with `(S(n)+1)! <= n^(2+eps)`.
    pub sondow_or_equal: u64,
    pub density: f64,
}

pub fn sondow_side_census(x: u64, eps: Epsilon, table: &SmarandacheTable) -> Result<SondowCensus> {
    if x < 2 {
        return invalid("x must be at least 2");
    }
    table.require(x)?;
    let parts = map_chunks(2, x, |lo, hi| {
        (lo..=hi)
            .filter(|&n| order_factorial_vs_power(table.s(n) + 1, &BigUint::from(n), eps) != Ordering::Greater)
            .count() as u64
    });
    let count = parts.into_iter().sum();
    Ok(SondowCensus { x, epsilon: eps, sondow_or_equal: count, density: density(count, x) })
}

/// One rational approximation `m/n` with both lower bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxRecord {
    pub m: BigInt,
    pub n: BigUint,
    pub s_n: u64,
    /// `|e - m/n|`.
    pub gap: RealEnclosure,
    /// `1/(S(n)+1)!`.
    pub sondow_bound: RealEnclosure,
    /// `1/n^(2+eps)`.
    pub dirichlet_bound: RealEnclosure,
    pub epsilon: Epsilon,
    pub stronger: StrongerSide,
}

impl ApproxRecord {
    pub const CSV_HEADER: &'static str =
        "m,n,gap_lo,gap_hi,sondow_bound,dirichlet_bound,epsilon_num,epsilon_den,stronger_side";

    /// Enclosure endpoints are printed to 15 significant digits.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.gap.lower().to_sci(15),
            self.gap.upper().to_sci(15),
            self.sondow_bound.upper().to_sci(15),
            self.dirichlet_bound.upper().to_sci(15),
            self.epsilon.num,
            self.epsilon.den,
            self.stronger.label()
        )
    }
}

fn big(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

/// `|e - m/n|` at working precision `bits`.
fn gap_enclosure(m: &BigInt, n: &BigUint, bits: u32) -> RealEnclosure {
    let e = RealEnclosure::e(bits + 4).with_precision_bits(bits);
    let nn = RealEnclosure::from_int(big(n), bits);
    let mm = RealEnclosure::from_int(m.clone(), bits);
    e.mul(&nn).sub(&mm).abs().div(&nn)
}

fn pow2(k: i64, bits: u32) -> RealEnclosure {
    RealEnclosure::exact(Dyadic::one().shl(k), bits)
}

/// `1/s1!`, bracketed by powers of two when `exact` is false.
fn sondow_enclosure(s1: u64, bits: u32, exact: bool) -> RealEnclosure {
    if exact {
        let f = Dyadic::from(&factorial(s1));
        let one = Dyadic::one();
        RealEnclosure::new(one.div_round(&f, bits, Round::Down), one.div_round(&f, bits, Round::Up), bits)
    } else {
        let l2 = log_factorial_interval(s1) / Interval::ln2();
        let lo = pow2(-(l2.hi().ceil() as i64), bits);
        let hi = pow2(-(l2.lo().floor() as i64), bits);
        RealEnclosure::new(lo.lower().clone(), hi.upper().clone(), bits)
    }
}

/// `1/n^(2+eps)`.
fn dirichlet_enclosure(n: &BigUint, eps: Epsilon, bits: u32) -> RealEnclosure {
    let one = RealEnclosure::from_int(1, bits);
    let nn = RealEnclosure::from_int(big(n), bits);
    if eps.num == 0 {
        return one.div(&nn.mul(&nn));
    }
    let k = RealEnclosure::from_int(2 * eps.den as u64 + eps.num as u64, bits)
        .div(&RealEnclosure::from_int(eps.den, bits));
    k.mul(&nn.ln()).neg().exp()
}

fn starting_bits(m: &BigInt, n: &BigUint) -> u32 {
    64 + 2 * bits_of(n) + m.bits() as u32
}

/// Precisions `start, 2 start, ...` up to the cap (or `start` alone when it
/// already exceeds the cap).
fn schedule(start: u32) -> impl Iterator<Item = u32> {
    let cap = precision_cap_bits().max(start);
    std::iter::successors(Some(start), move |&b| if b >= cap { None } else { Some((b * 2).min(cap)) })
}

/// Builds the record for `m/n` and checks `|e - m/n| > 1/(S(n)+1)!`.
///
/// That inequality is a theorem, so a decided violation is returned as an
/// internal error.
pub fn approx_record(m: &BigInt, n: &BigUint, eps: Epsilon) -> Result<ApproxRecord> {
    if *n < BigUint::from(2u32) {
        return invalid("n must exceed 1");
    }
    let s = smarandache_big(n)?;
    let s1 = s + 1;
    let what = || format!("{m}/{n} (gap against 1/(S(n)+1)!)");
    let mut exact = s1 <= EXACT_FACTORIAL_LIMIT;
    for bits in schedule(starting_bits(m, n)) {
        let gap = gap_enclosure(m, n, bits);
        let mut sondow = sondow_enclosure(s1, bits, exact);
        if !exact && gap.lower() <= sondow.upper() {
            exact = true;
            sondow = sondow_enclosure(s1, bits, true);
        }
        if gap.lower() > sondow.upper() {
            return Ok(ApproxRecord {
                m: m.clone(),
                n: n.clone(),
                s_n: s,
                dirichlet_bound: dirichlet_enclosure(n, eps, bits),
                gap,
                sondow_bound: sondow,
                epsilon: eps,
                stronger: StrongerSide::from_ordering(order_factorial_vs_power(s1, n, eps)),
            });
        }
        if gap.upper() <= sondow.lower() {
            return Err(Error::Internal(format!("{} is violated", what())));
        }
    }
    Err(Error::Indeterminate { n: what(), bits: precision_cap_bits() })
}

/// [`approx_record`] with `eps = 0`.
pub fn check_sondow_inequality(m: &BigInt, n: &BigUint) -> Result<ApproxRecord> {
    approx_record(m, n, Epsilon::ZERO)
}

/// `round(e n)`, the best numerator for denominator `n`.
pub fn nearest_numerator(n: &BigUint) -> Result<BigInt> {
    let start = 64 + 2 * bits_of(n);
    for bits in schedule(start) {
        let e = RealEnclosure::e(bits + 4).with_precision_bits(bits);
        let half = Dyadic::one().shl(-1);
        let nn = Dyadic::from(n);
        let lo = e.lower().mul(&nn).add(&half).floor();
        let hi = e.upper().mul(&nn).add(&half).floor();
        if lo == hi {
            return Ok(lo);
        }
    }
    Err(Error::Indeterminate { n: format!("{n} (nearest numerator)"), bits: precision_cap_bits() })
}

/// A convergent `m/n` of the continued fraction of `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convergent {
    pub m: u64,
    pub n: u64,
}

/// Partial quotients shared by every real between the fractions `a` and
/// `b`. Stops with `true` once the next convergent denominator exceeds
/// `max_den`, or with `false` when the endpoints stop agreeing.
fn common_quotients(mut a: (BigInt, BigInt), mut b: (BigInt, BigInt), max_den: u64) -> (Vec<u64>, bool) {
    let mut out = Vec::new();
    let (mut k2, mut k1) = (1u128, 0u128);
    loop {
        if a.1.is_zero() || b.1.is_zero() {
            return (out, false);
        }
        let (qa, ra) = a.0.div_mod_floor(&a.1);
        let (qb, rb) = b.0.div_mod_floor(&b.1);
        // An endpoint landing exactly on an integer cannot settle the quotient.
        if qa != qb || ra.is_zero() || rb.is_zero() {
            return (out, false);
        }
        let Some(q) = qa.to_u64() else { return (out, false) };
        out.push(q);
        let k = q as u128 * k1 + k2;
        if k > max_den as u128 {
            return (out, true);
        }
        (k2, k1) = (k1, k);
        a = (a.1, ra);
        b = (b.1, rb);
    }
}

/// Convergents `m/n` of `e` with `1 < n <= max_denominator`, each certified
/// to satisfy `|e - m/n| < 1/n^2`.
pub fn e_convergents(max_denominator: u64) -> Result<Vec<Convergent>> {
    if max_denominator < 2 {
        return invalid("max_denominator must be at least 2");
    }
    let start = 64 + 4 * (64 - max_denominator.leading_zeros());
    for bits in schedule(start) {
        let e = RealEnclosure::e(bits + 4).with_precision_bits(bits);
        let as_frac = |d: &Dyadic| {
            let exp = d.exponent();
            if exp >= 0 {
                (d.mantissa() << exp as usize, BigInt::one())
            } else {
                (d.mantissa().clone(), BigInt::one() << (-exp) as usize)
            }
        };
        let (quotients, complete) = common_quotients(as_frac(e.lower()), as_frac(e.upper()), max_denominator);
        if !complete {
            continue;
        }
        let mut out = Vec::new();
        let (mut h2, mut h1) = (0u128, 1u128);
        let (mut k2, mut k1) = (1u128, 0u128);
        for &q in &quotients {
            let (h, k) = (q as u128 * h1 + h2, q as u128 * k1 + k2);
            if k > max_denominator as u128 {
                break;
            }
            if k > 1 {
                out.push(Convergent { m: h as u64, n: k as u64 });
            }
            (h2, h1, k2, k1) = (h1, h, k1, k);
        }
        for c in &out {
            check_dirichlet_witness(c)?;
        }
        return Ok(out);
    }
    Err(Error::Indeterminate { n: format!("{max_denominator} (continued fraction of e)"), bits: precision_cap_bits() })
}

/// `|e - m/n| < 1/n^2`, as `|e n - m| n < 1`.
fn check_dirichlet_witness(c: &Convergent) -> Result<()> {
    let (m, n) = (BigInt::from(c.m), BigUint::from(c.n));
    for bits in schedule(starting_bits(&m, &n)) {
        let g = gap_enclosure(&m, &n, bits);
        let scaled = g.mul(&RealEnclosure::from_int(c.n * c.n, bits));
        match scaled.compare(&RealEnclosure::from_int(1, bits)) {
            Some(Ordering::Less) => return Ok(()),
            Some(_) => return Err(Error::Internal(format!("{}/{} is not within 1/n^2 of e", c.m, c.n))),
            None => {}
        }
    }
    Err(Error::Indeterminate { n: format!("{}/{} (distance to e)", c.m, c.n), bits: precision_cap_bits() })
}

/// Records for every `n` in `[lo, hi]` with `m = round(e n)`.
pub fn nearest_records(lo: u64, hi: u64, eps: Epsilon) -> Result<Vec<ApproxRecord>> {
    if lo < 2 {
        return invalid("n must exceed 1");
    }
    let parts = map_chunks(lo, hi, |a, b| -> Result<Vec<ApproxRecord>> {
        (a..=b)
            .map(|n| {
                let n = BigUint::from(n);
                approx_record(&nearest_numerator(&n)?, &n, eps)
            })
            .collect()
    });
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Records for the convergents of `e` with denominator up to `max_den`.
pub fn convergent_records(max_den: u64, eps: Epsilon) -> Result<Vec<ApproxRecord>> {
    e_convergents(max_den)?
        .into_iter()
        .map(|c| approx_record(&BigInt::from(c.m), &BigUint::from(c.n), eps))
        .collect()
}

/// Factorization of a big denominator, for display.
pub fn factor_pairs(n: &BigUint) -> Result<Vec<(u64, u32)>> {
    match n.to_u64() {
        Some(v) if v >= 1 => Ok(factorize(v, None).factors().to_vec()),
        _ => factorize_biguint(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const E_DIGITS: &str = "2.718281828459045235360287471352662497757";

    /// Whether the enclosure meets `[d, d + 10^-len)` for the truncated
    /// decimal `d`.
    fn contains_decimal(e: &RealEnclosure, digits: &str) -> bool {
        let (int, frac) = digits.split_once('.').unwrap();
        let num: BigInt = format!("{int}{frac}").parse().unwrap();
        let den = Dyadic::from_int(num_traits::pow(BigInt::from(10), frac.len()));
        e.lower().mul(&den) < Dyadic::from_int(num.clone() + 1) && e.upper().mul(&den) >= Dyadic::from_int(num)
    }

    #[test]
    fn e_examples() {
        let e = e_enclosure(64).unwrap();
        assert!(contains_decimal(&e, "2.718281828459045235"));
        let e16 = e_enclosure(16).unwrap();
        assert!(e16.width() <= Dyadic::one().shl(-15));
        assert!(contains_decimal(&e16, "2.71828"));
        for p in [16, 17, 30, 53, 100, 300] {
            let e = e_enclosure(p).unwrap();
            assert!(e.width() <= Dyadic::one().shl(1 - p as i64), "p = {p}");
            assert!(e.lower().to_f64() > 2.5 && e.upper().to_f64() < 3.0);
        }
        assert!(contains_decimal(&e_enclosure(160).unwrap(), E_DIGITS));
        assert!(e_enclosure(15).is_err());
    }

    #[test]
    fn convergents_known() {
        // Oracle: continued fraction [2; 1, 2, 1, 1, 4, 1, 1, 6, ...] evaluated
        // from the decimal expansion with exact rationals.
        let c = e_convergents(10).unwrap();
        let pairs: Vec<(u64, u64)> = c.iter().map(|c| (c.m, c.n)).collect();
        assert_eq!(pairs, vec![(8, 3), (11, 4), (19, 7)]);
        let c = e_convergents(100).unwrap();
        assert!(c.contains(&Convergent { m: 193, n: 71 }));
        let c = e_convergents(1_000_000).unwrap();
        assert!(c.len() > 10);
        assert!(c.windows(2).all(|w| w[0].n < w[1].n));
        assert!(e_convergents(1).is_err());
    }

    #[test]
    fn sondow_examples() {
        let r = check_sondow_inequality(&BigInt::from(19), &BigUint::from(7u32)).unwrap();
        assert_eq!(r.s_n, 7);
        let g = r.gap.to_interval();
        assert!((g.mid() - 4.0e-3).abs() < 1e-4);
        assert!((r.sondow_bound.to_interval().mid() - 1.0 / 40320.0).abs() < 1e-15);
        assert_eq!(r.stronger, StrongerSide::Dirichlet);

        // |e - 3/2| = 1.218..., |e - 5/2| = 0.218..., both above 1/3! = 0.1667.
        let r = check_sondow_inequality(&BigInt::from(3), &BigUint::from(2u32)).unwrap();
        assert_eq!(r.s_n, 2);
        assert!((r.gap.to_interval().mid() - 1.2183).abs() < 1e-4);
        let r = check_sondow_inequality(&BigInt::from(5), &BigUint::from(2u32)).unwrap();
        assert!((r.gap.to_interval().mid() - 0.2183).abs() < 1e-4);
        assert!((r.sondow_bound.to_interval().mid() - 1.0 / 6.0).abs() < 1e-15);
        assert!(check_sondow_inequality(&BigInt::from(3), &BigUint::from(1u32)).is_err());
    }

    #[test]
    fn sondow_big_denominator() {
        let n = num_traits::pow(BigUint::from(10u32), 24);
        let m: BigInt = "2718281828459045235360287".parse().unwrap();
        let r = check_sondow_inequality(&m, &n).unwrap();
        // S(2^24) = 26, S(5^24) = 100.
        assert_eq!(r.s_n, 100);
        assert_eq!(nearest_numerator(&n).unwrap(), m);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare_bounds(7, Epsilon::ZERO, None), Ok(StrongerSide::Dirichlet));
        assert_eq!(compare_bounds(2, Epsilon::ZERO, None), Ok(StrongerSide::Dirichlet));
        assert!(compare_bounds(1, Epsilon::ZERO, None).is_err());
    }

    #[test]
    fn comparison_matches_plain_big_integers() {
        for n in 2..=400u64 {
            for eps in [Epsilon::ZERO, Epsilon::new(1, 2).unwrap(), Epsilon::new(3, 1).unwrap()] {
                let s1 = smarandache(n) + 1;
                let left = factorial(s1).pow(eps.den);
                let right = BigUint::from(n).pow(2 * eps.den + eps.num);
                let expect = StrongerSide::from_ordering(left.cmp(&right));
                assert_eq!(compare_bounds(n, eps, None), Ok(expect), "n = {n}, eps = {eps}");
            }
        }
    }

    #[test]
    fn epsilon_parsing() {
        assert_eq!("1/2".parse::<Epsilon>().unwrap(), Epsilon::new(1, 2).unwrap());
        assert_eq!("0.25".parse::<Epsilon>().unwrap(), Epsilon::new(1, 4).unwrap());
        assert_eq!("0".parse::<Epsilon>().unwrap(), Epsilon::ZERO);
    }
}

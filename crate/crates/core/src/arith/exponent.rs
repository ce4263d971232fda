use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{invalid, Error, Result};

/// A rational exponent `k = num/den > 1` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentK {
    num: u32,
    den: u32,
}

impl ExponentK {
    /// Reduces `num/den` and checks `k > 1`.
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return invalid("exponent denominator is zero");
        }
        let g = num.gcd(&den);
        let (num, den) = (num / g.max(1), den / g.max(1));
        if num <= den {
            return invalid(format!("exponent {num}/{den} must exceed 1"));
        }
        Ok(ExponentK { num, den })
    }

    pub fn integer(k: u32) -> Result<Self> {
        Self::new(k, 1)
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for ExponentK {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentK {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl fmt::Display for ExponentK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Parses a non-negative rational written as `p/q`, an integer, or an exact
/// decimal such as `2.5`; returns `(num, den)` in lowest terms.
pub fn parse_rational(s: &str) -> Result<(u32, u32)> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("cannot parse rational {s:?}"));
    let (num, den): (u64, u64) = if let Some((p, q)) = s.split_once('/') {
        (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
    } else if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let f: u64 = frac.parse().map_err(|_| bad())?;
        (int.checked_mul(den).and_then(|v| v.checked_add(f)).ok_or_else(bad)?, den)
    } else {
        (s.parse().map_err(|_| bad())?, 1)
    };
    if den == 0 {
        return Err(bad());
    }
    let g = num.gcd(&den).max(1);
    let (num, den) = (num / g, den / g);
    match (u32::try_from(num), u32::try_from(den)) {
        (Ok(n), Ok(d)) => Ok((n, d)),
        _ => Err(Error::InvalidArgument(format!("rational {s:?} is out of range"))),
    }
}

impl FromStr for ExponentK {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = parse_rational(s)?;
        ExponentK::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!("2".parse::<ExponentK>().unwrap(), ExponentK::new(2, 1).unwrap());
        assert_eq!("3/2".parse::<ExponentK>().unwrap(), ExponentK::new(3, 2).unwrap());
        assert_eq!("2.5".parse::<ExponentK>().unwrap(), ExponentK::new(5, 2).unwrap());
        assert_eq!("6/4".parse::<ExponentK>().unwrap().to_string(), "3/2");
        assert!("1".parse::<ExponentK>().is_err());
        assert!("0.5".parse::<ExponentK>().is_err());
        assert!("2/0".parse::<ExponentK>().is_err());
        assert!("abc".parse::<ExponentK>().is_err());
        assert!("2.".parse::<ExponentK>().is_err());
    }

    #[test]
    fn lowest_terms_and_order() {
        let k = ExponentK::new(10, 4).unwrap();
        assert_eq!((k.num(), k.den()), (5, 2));
        let ks: Vec<ExponentK> = ["3/2", "2", "5/2", "3"].iter().map(|s| s.parse().unwrap()).collect();
        assert!(ks.windows(2).all(|w| w[0] < w[1]));
    }
}

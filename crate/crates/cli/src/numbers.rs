//! Integer flags written as `1000000`, `1e6`, `2.5e3` or `1_000_000`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Largest power of ten accepted in an exponent.
const MAX_EXPONENT: i64 = 4096;

/// Parses a non-negative integer, allowing decimal and scientific notation
/// as long as the value is integral.
pub fn parse_big_count(s: &str) -> Result<BigUint, String> {
    let t = s.trim().replace('_', "");
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => {
            let e = t[i + 1..].parse::<i64>().map_err(|_| format!("bad exponent in {s:?}"))?;
            (&t[..i], e)
        }
        None => (t.as_str(), 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if (int.is_empty() && frac.is_empty()) || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("{s:?} is not a number"));
    }
    if exp.abs() > MAX_EXPONENT {
        return Err(format!("exponent in {s:?} is out of range"));
    }
    let mut digits = format!("{int}{frac}");
    let mut scale = exp - frac.len() as i64;
    while scale < 0 {
        match digits.pop() {
            Some('0') => scale += 1,
            Some(_) => return Err(format!("{s:?} is not an integer")),
            None => break,
        }
    }
    if digits.is_empty() {
        digits.push('0');
    }
    let v: BigUint = digits.parse().map_err(|_| format!("{s:?} is not a number"))?;
    Ok(v * num_traits::pow(BigUint::from(10u32), scale.max(0) as usize))
}

/// As [`parse_big_count`], for values that fit in 64 bits.
pub fn parse_count(s: &str) -> Result<u64, String> {
    parse_big_count(s)?.to_u64().ok_or_else(|| format!("{s:?} does not fit in 64 bits"))
}

//! Number formatting shared by the CSV emitters.

use std::fmt::Display;

/// Fifteen significant digits in scientific notation; `inf` for infinity.
pub fn sci(v: f64) -> String {
    if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else if v.is_nan() {
        "nan".into()
    } else {
        format!("{v:.14e}")
    }
}

/// `count / x`, or zero when `x == 0`.
pub fn density(count: u64, x: u64) -> f64 {
    if x == 0 { 0.0 } else { count as f64 / x as f64 }
}

/// Empty string for `None`, as used for optional CSV fields.
pub fn opt<T: Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sci(0.5), "5.00000000000000e-1");
        assert_eq!(sci(1.0 / 3.0), "3.33333333333333e-1");
        assert_eq!(sci(f64::INFINITY), "inf");
        assert_eq!(opt::<u32>(None), "");
        assert_eq!(opt(Some(7)), "7");
    }
}

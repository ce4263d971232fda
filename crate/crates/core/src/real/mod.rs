//! Certified real arithmetic.
//!
//! Two tiers: [`Interval`] (double precision, outward rounded) for the hot
//! paths, and [`RealEnclosure`] (dyadic endpoints, any precision) for
//! escalation when a double-precision verdict is too close to call.

mod dyadic;
mod enclosure;
mod interval;

use std::sync::OnceLock;

pub use dyadic::{Dyadic, Round};
pub use enclosure::RealEnclosure;
pub use interval::Interval;

/// Default ceiling for precision escalation.
pub const DEFAULT_PRECISION_CAP_BITS: u32 = 4096;

/// Environment variable that overrides [`DEFAULT_PRECISION_CAP_BITS`].
pub const PRECISION_CAP_ENV: &str = "SMARAND_PRECISION_CAP_BITS";

/// First escalation step after the double-precision tier.
pub const ESCALATION_START_BITS: u32 = 113;

/// Relative separation below which a double-precision verdict is escalated.
pub const ESCALATION_THRESHOLD: f64 = 1e-9;

/// The escalation cap, read once from the environment.
pub fn precision_cap_bits() -> u32 {
    static CAP: OnceLock<u32> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(PRECISION_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .filter(|&b| b >= ESCALATION_START_BITS)
            .unwrap_or(DEFAULT_PRECISION_CAP_BITS)
    })
}

/// Working precisions tried after the double-precision tier: 113, 226, ...
/// doubling, ending exactly at `cap`.
pub fn escalation_schedule(cap: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(ESCALATION_START_BITS.min(cap));
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur >= cap { None } else { Some(cur.saturating_mul(2).min(cap)) };
        Some(cur)
    })
}

/// Decides `lhs <= rhs` with certified rounding.
///
/// `fast` supplies double-precision enclosures; its verdict is accepted when
/// the two sides are separated by more than [`ESCALATION_THRESHOLD`]
/// relatively. Otherwise `slow` is evaluated along the escalation schedule
/// up to the precision cap. An undecided comparison is an error naming
/// `what`.
pub fn decide_le(
    fast: impl FnOnce() -> (Interval, Interval),
    slow: impl Fn(u32) -> (RealEnclosure, RealEnclosure),
    what: impl Fn() -> String,
) -> crate::Result<bool> {
    let (l, r) = fast();
    if l.is_finite() && r.is_finite() && l.separated_by(&r, ESCALATION_THRESHOLD) {
        return Ok(l.hi() < r.lo());
    }
    let cap = precision_cap_bits();
    for bits in escalation_schedule(cap) {
        let (l, r) = slow(bits);
        if let Some(v) = l.le(&r) {
            return Ok(v);
        }
    }
    Err(crate::Error::Indeterminate { n: what(), bits: cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_doubles_to_cap() {
        let s: Vec<u32> = escalation_schedule(4096).collect();
        assert_eq!(s, vec![113, 226, 452, 904, 1808, 3616, 4096]);
        assert_eq!(escalation_schedule(113).collect::<Vec<_>>(), vec![113]);
    }

    #[test]
    fn decide_le_escalates_on_close_calls() {
        // 1/3 vs 1/3: never decidable.
        let third = || RealEnclosure::from_int(1, 64).div(&RealEnclosure::from_int(3, 64));
        let r = decide_le(
            || (Interval::point(1.0) / 3.0, Interval::point(1.0) / 3.0),
            |b| {
                let t = RealEnclosure::from_int(1, b).div(&RealEnclosure::from_int(3, b));
                (t.clone(), t)
            },
            || "third".into(),
        );
        assert!(matches!(r, Err(crate::Error::Indeterminate { .. })));
        let _ = third();
        // Exactly equal exact values are decided as <=.
        let r = decide_le(
            || (Interval::point(1.0), Interval::point(1.0)),
            |b| (RealEnclosure::from_int(1, b), RealEnclosure::from_int(1, b)),
            || "one".into(),
        );
        assert_eq!(r, Ok(true));
        // ln 2 < 0.6931471805599454 (an f64 just above it): needs escalation.
        let above = std::f64::consts::LN_2.next_up();
        let r = decide_le(
            || (Interval::ln2(), Interval::point(above)),
            |b| (RealEnclosure::ln2(b), RealEnclosure::exact(Dyadic::from_f64(above), b)),
            || "ln2".into(),
        );
        assert_eq!(r, Ok(true));
    }
}

//! Bound shapes for the counting functions, and diagnostics comparing exact
//! counts against them.
//!
//! Implied constants and lower-order terms in these bounds are unknown, so
//! nothing here asserts an inequality between a count and a bound; the
//! diagnostics report ratios.

use crate::arith::{log_factorial_enclosure, log_factorial_interval, ExponentK};
use crate::census::{
    count_m, count_nk, count_nk_by_divisors, m_rhs_enclosure, m_rhs_interval, psi_smooth_count, witnesses,
    NkCensus, Query,
};
use crate::error::{invalid, Error, Result};
use crate::fmt::{opt, sci};
use crate::real::{decide_le, escalation_schedule, precision_cap_bits, Interval, RealEnclosure};
use crate::smarandache::SmarandacheTable;

/// `x exp(-sqrt(2 log x log log x))`, for `x > e^e`.
pub fn ivic_bound_core(x: f64) -> Result<f64> {
    if !(x.is_finite() && x.ln().ln() > 1.0) {
        return invalid(format!("x = {x} must exceed e^e"));
    }
    let xi = Interval::point(x);
    let l = xi.ln();
    let v = xi * (-(l * l.ln() * 2.0).sqrt()).exp();
    Ok(v.mid())
}

/// `x exp(-log x / (2 log y))`, for `2 <= y <= x`.
pub fn tenenbaum_bound_core(x: f64, y: f64) -> Result<f64> {
    if !(x.is_finite() && y >= 2.0 && y <= x) {
        return invalid(format!("need 2 <= y <= x, got x = {x}, y = {y}"));
    }
    let (xi, yi) = (Interval::point(x), Interval::point(y));
    let v = xi * (-(xi.ln() / (yi.ln() * 2.0))).exp();
    Ok(v.mid())
}

/// `-log(count / x) / sqrt(2 log x log log x)`; infinite when `count == 0`.
pub fn shape_ratio(count: u64, x: u64) -> f64 {
    if count == 0 {
        return f64::INFINITY;
    }
    let lx = (x as f64).ln();
    -(count as f64 / x as f64).ln() / (2.0 * lx * lx.ln()).sqrt()
}

/// An exact count set against the core of its bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundDiagnostic {
    pub x: u64,
    pub k: Option<ExponentK>,
    pub exact_count: u64,
    pub bound_core: f64,
    pub shape_ratio: f64,
}

impl BoundDiagnostic {
    pub const CSV_HEADER: &'static str = "x,k_num,k_den,exact_count,bound_core,shape_ratio";

    /// `exact_count / bound_core`.
    pub fn bound_ratio(&self) -> f64 {
        self.exact_count as f64 / self.bound_core
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.x,
            opt(self.k.map(|k| k.num())),
            opt(self.k.map(|k| k.den())),
            self.exact_count,
            sci(self.bound_core),
            sci(self.shape_ratio)
        )
    }
}

fn theorem1_from(c: NkCensus) -> Result<BoundDiagnostic> {
    Ok(BoundDiagnostic {
        x: c.x,
        k: Some(c.k),
        exact_count: c.total(),
        bound_core: ivic_bound_core(c.x as f64)?,
        shape_ratio: shape_ratio(c.total(), c.x),
    })
}

fn require_thm1_domain(x: u64) -> Result<()> {
    if x <= 16 {
        return invalid(format!("x = {x} must exceed 16"));
    }
    Ok(())
}

/// `N_k(x)` against `x exp(-sqrt(2 log x log log x))`.
pub fn theorem1_diagnostic(x: u64, k: ExponentK, table: &SmarandacheTable) -> Result<BoundDiagnostic> {
    require_thm1_domain(x)?;
    theorem1_from(count_nk(x, k, table)?)
}

/// As [`theorem1_diagnostic`], counting by divisor enumeration.
pub fn theorem1_diagnostic_by_divisors(x: u64, k: ExponentK) -> Result<BoundDiagnostic> {
    require_thm1_domain(x)?;
    theorem1_from(count_nk_by_divisors(x, k)?)
}

/// `M(x)` against `x / sqrt(log x)`; the shape ratio column carries the
/// same exponent as for `N_k`, and [`BoundDiagnostic::bound_ratio`]
/// gives `M(x) sqrt(log x) / x`.
pub fn theorem2_diagnostic(x: u64, table: &SmarandacheTable) -> Result<BoundDiagnostic> {
    if x < 16 {
        return invalid(format!("x = {x} must be at least 16"));
    }
    let m = count_m(x, table)?.count;
    let bound_core = x as f64 / (x as f64).ln().sqrt();
    Ok(BoundDiagnostic { x, k: None, exact_count: m, bound_core, shape_ratio: shape_ratio(m, x) })
}

/// Checks, for a prime `P >= 7`, both `P <= 1 + P log(P/e)` and
/// `e (P/e)^P <= P!` with certified rounding.
pub fn verify_eq5_chain(p: u64) -> Result<bool> {
    if p < 7 {
        return invalid(format!("P = {p} must be at least 7"));
    }
    // 1 + P (log P - 1), which is log of e (P/e)^P.
    let mid_fast = || {
        let x = Interval::from_u64(p);
        x * (x.ln() - 1.0) + 1.0
    };
    let mid_slow = |b: u32| {
        let x = RealEnclosure::from_int(p, b);
        let one = RealEnclosure::from_int(1, b);
        x.mul(&x.ln().sub(&one)).add(&one)
    };
    let what = || format!("{p} (Stirling chain)");
    let first = decide_le(|| (Interval::from_u64(p), mid_fast()), |b| (RealEnclosure::from_int(p, b), mid_slow(b)), what)?;
    let second = decide_le(
        || (mid_fast(), log_factorial_interval(p)),
        |b| (mid_slow(b), log_factorial_enclosure(p, b)),
        what,
    )?;
    Ok(first && second)
}

/// Integer part of a positive real given at increasing precision.
fn certified_floor(
    fast: Interval,
    slow: impl Fn(u32) -> RealEnclosure,
    what: impl Fn() -> String,
) -> Result<u64> {
    if fast.is_finite() && fast.lo().floor() == fast.hi().floor() && fast.lo() >= 0.0 {
        return Ok(fast.lo().floor() as u64);
    }
    for bits in escalation_schedule(precision_cap_bits()) {
        let e = slow(bits);
        let (lo, hi) = (e.lower().floor(), e.upper().floor());
        if lo == hi {
            return u64::try_from(lo).map_err(|_| Error::Internal(format!("{} is out of range", what())));
        }
    }
    Err(Error::Indeterminate { n: what(), bits: precision_cap_bits() })
}

/// `floor(k log x)`.
pub fn floor_k_log_x(x: u64, k: ExponentK) -> Result<u64> {
    let kk = |b| RealEnclosure::from_int(k.num(), b).div(&RealEnclosure::from_int(k.den(), b));
    certified_floor(
        Interval::from_u64(x).ln() * (Interval::point(k.num() as f64) / k.den() as f64),
        |b| RealEnclosure::from_int(x, b).ln().mul(&kk(b)),
        || format!("{x} (floor of k log x)"),
    )
}

/// `floor(x^(1/log log x))`, for `x >= 3`.
pub fn floor_m_smoothness(x: u64) -> Result<u64> {
    certified_floor(m_rhs_interval(x), |b| m_rhs_enclosure(x, b), || format!("{x} (floor of x^(1/log log x))"))
}

/// Failures found by the witness-level checks below.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckOutcome {
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

/// For every `n <= x` counted by `N_{k,2}` with `P(n) >= 7`: `P(n) <= k log x`
/// and the Stirling chain at `P(n)`.
pub fn check_eq5_witnesses(x: u64, k: ExponentK, table: &SmarandacheTable) -> Result<CheckOutcome> {
    let bound = floor_k_log_x(x, k)?;
    let w = witnesses(Query::Nk2(k), x, table, usize::MAX)?;
    let mut out = CheckOutcome::default();
    for n in w.witnesses {
        let p = table.p(n);
        if p < 7 {
            continue;
        }
        let ok = p <= bound && verify_eq5_chain(p)?;
        out.record(ok, || format!("n = {n}, P = {p}, k log x < {}", bound + 1));
    }
    Ok(out)
}

/// `N_{k,2}(x) <= 12 + Psi(x, floor(k log x))`.
pub fn check_eq6(x: u64, k: ExponentK, table: &SmarandacheTable) -> Result<CheckOutcome> {
    let n2 = count_nk(x, k, table)?.s_eq_p;
    let y = floor_k_log_x(x, k)?;
    let psi = psi_smooth_count(x, y.max(1), table)?.count;
    let mut out = CheckOutcome::default();
    out.record(n2 <= 12 + psi, || format!("x = {x}, k = {k}: N_k2 = {n2} > 12 + Psi(x, {y}) = {}", 12 + psi));
    Ok(out)
}

/// `M`-witnesses with `P(n) >= 7` have `P(n) <= x^(1/log log x)`, and
/// `M(x) <= 12 + Psi(x, ceil(x^(1/log log x)))`.
pub fn check_eq8(x: u64, table: &SmarandacheTable) -> Result<CheckOutcome> {
    let floor = floor_m_smoothness(x)?;
    // The smoothness bound is irrational for x >= 3, so ceil = floor + 1.
    let ceil = floor + 1;
    let w = witnesses(Query::M, x, table, usize::MAX)?;
    let mut out = CheckOutcome::default();
    for &n in &w.witnesses {
        let p = table.p(n);
        if p >= 7 {
            out.record(p <= floor, || format!("n = {n}: P = {p} > x^(1/log log x)"));
        }
    }
    let psi = psi_smooth_count(x, ceil, table)?.count;
    out.record(w.count <= 12 + psi, || format!("x = {x}: M = {} > 12 + Psi(x, {ceil}) = {}", w.count, 12 + psi));
    Ok(out)
}

/// Largest observed `Psi(x, y) / (x exp(-log x / (2 log y)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiConstant {
    pub constant: f64,
    pub x: u64,
    pub y: u64,
}

/// Sweeps `y` over a geometric grid in `[2, x]` for each `x` and reports the
/// largest ratio of `Psi(x, y)` to the bound core.
pub fn tenenbaum_empirical_constant(xs: &[u64], table: &SmarandacheTable) -> Result<PsiConstant> {
    const GRID: u32 = 64;
    let mut best = PsiConstant { constant: 0.0, x: 0, y: 0 };
    for &x in xs {
        if x < 2 {
            return invalid("x must be at least 2");
        }
        let mut ys: Vec<u64> = (0..=GRID)
            .map(|j| (2.0 * (x as f64 / 2.0).powf(j as f64 / GRID as f64)).round() as u64)
            .map(|y| y.clamp(2, x))
            .collect();
        ys.dedup();
        for y in ys {
            let psi = psi_smooth_count(x, y, table)?.count;
            let r = psi as f64 / tenenbaum_bound_core(x as f64, y as f64)?;
            if r > best.constant {
                best = PsiConstant { constant: r, x, y };
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smarandache::build_table;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn ivic_examples() {
        let x = std::f64::consts::E.powf(std::f64::consts::E.powi(2));
        let v = ivic_bound_core(x).unwrap();
        assert!(close(v, x * (-2.0 * std::f64::consts::E).exp(), 1e-12));
        let v6 = ivic_bound_core(1e6).unwrap();
        // Reference exponent from a 30-digit evaluation.
        assert!(close(v6, 1e6 * (-8.517823186408667f64).exp(), 1e-12));
        assert!(ivic_bound_core(1e7).unwrap() / 1e7 < v6 / 1e6);
        assert!(ivic_bound_core(15.0).is_err());
    }

    #[test]
    fn tenenbaum_examples() {
        assert!(close(tenenbaum_bound_core(100.0, 100.0).unwrap(), 100.0 * (-0.5f64).exp(), 1e-14));
        assert!(close(tenenbaum_bound_core(1e6, 1e3).unwrap(), 1e6 * (-1.0f64).exp(), 1e-14));
        let y = 2.0 * (1e6f64).ln();
        let v = tenenbaum_bound_core(1e6, y).unwrap();
        assert!(v > 0.0 && v < 1e6);
        assert!(tenenbaum_bound_core(10.0, 1.5).is_err());
        assert!(tenenbaum_bound_core(10.0, 11.0).is_err());
    }

    #[test]
    fn eq5_chain() {
        assert_eq!(verify_eq5_chain(7), Ok(true));
        assert_eq!(verify_eq5_chain(11), Ok(true));
        assert!(verify_eq5_chain(5).is_err());
        for p in 7..=2000 {
            assert_eq!(verify_eq5_chain(p), Ok(true), "P = {p}");
        }
    }

    #[test]
    fn floors() {
        // 2 log 10^4 = 18.42
        assert_eq!(floor_k_log_x(10_000, ExponentK::integer(2).unwrap()), Ok(18));
        // 10^6^(1/log log 10^6) = 193.7...
        let f = floor_m_smoothness(1_000_000).unwrap();
        let direct = (1e6f64).powf(1.0 / (1e6f64).ln().ln());
        assert_eq!(f, direct.floor() as u64);
    }

    #[test]
    fn diagnostics() {
        let t = build_table(10_000).unwrap();
        let k2 = ExponentK::integer(2).unwrap();
        let d = theorem1_diagnostic(10_000, k2, &t).unwrap();
        assert_eq!(d.exact_count, 143);
        assert!(d.shape_ratio > 0.0);
        assert_eq!(theorem1_diagnostic_by_divisors(10_000, k2).unwrap(), d);
        assert!(theorem1_diagnostic(16, k2, &t).is_err());
        let d = theorem2_diagnostic(16, &t).unwrap();
        assert!(d.exact_count <= 14);
        assert!(d.bound_ratio().is_finite());
        assert_eq!(d.csv_row().split(',').count(), 6);
    }

    #[test]
    fn witness_checks_pass() {
        let t = build_table(10_000).unwrap();
        let k2 = ExponentK::integer(2).unwrap();
        assert!(check_eq5_witnesses(10_000, k2, &t).unwrap().passed());
        assert!(check_eq6(10_000, k2, &t).unwrap().passed());
        assert!(check_eq8(10_000, &t).unwrap().passed());
    }

    #[test]
    fn shape_ratio_infinite_on_zero() {
        assert_eq!(shape_ratio(0, 100), f64::INFINITY);
        assert!(shape_ratio(100, 100).abs() < 1e-15);
    }
}

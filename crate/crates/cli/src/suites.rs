//! Invariant suites behind `smarand verify`.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use smarand_core::arith::check_log_factorial_bracket;
use smarand_core::asymptotics::{
    check_eq5_witnesses, check_eq6, check_eq8, theorem1_diagnostic_by_divisors, theorem2_diagnostic,
    verify_eq5_chain, CheckOutcome,
};
use smarand_core::census::{case_i_set, count_nk, count_nk_by_divisors, count_s_neq_p, witnesses, Query};
use smarand_core::irrationality::{approx_record, e_convergents, nearest_numerator, sondow_side_census, Epsilon};
use smarand_core::smarandache::{build_table, largest_prime_factor, smarandache};
use smarand_core::{Error, ExponentK, Result, SmarandacheTable};

use crate::args::Suite;

pub const LEMMA2_MAX_N: u64 = 100_000;
pub const EQ5_MAX_P: u64 = 10_000;
pub const TABLE_GRID: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];
pub const TREND_GRID: [u64; 4] = [10_000, 100_000, 1_000_000, 10_000_000];
pub const EQ1_MAX_N: u64 = 10_000;
pub const CONVERGENT_MAX_DEN: u64 = 1_000_000;

/// Largest table any suite reads.
pub const SUITE_TABLE_LIMIT: u64 = 1_000_000;

pub const CASE_I: [u64; 12] = [1, 2, 3, 5, 6, 10, 15, 20, 30, 40, 60, 120];

/// One line of a suite report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub suite: &'static str,
    pub check: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckRow {
    pub const CSV_HEADER: &'static str = "suite,check,checked,failures,status";

    fn single(suite: &'static str, check: String, ok: bool, detail: impl FnOnce() -> String) -> Self {
        CheckRow { suite, check, checked: 1, failures: u64::from(!ok), first_failure: (!ok).then(detail) }
    }

    fn from_outcome(suite: &'static str, check: String, o: CheckOutcome) -> Self {
        CheckRow {
            suite,
            check,
            checked: o.checked,
            failures: o.failures.len() as u64,
            first_failure: o.failures.into_iter().next(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn csv_row(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{},{},{},{},{}", self.suite, self.check, self.checked, self.failures, status)
    }
}

/// Shared state for a verify run: the S/P table is built once, on demand.
pub struct Context {
    limit: u64,
    table: OnceLock<SmarandacheTable>,
}

impl Context {
    pub fn new(limit: Option<u64>) -> Self {
        Context { limit: limit.unwrap_or(SUITE_TABLE_LIMIT), table: OnceLock::new() }
    }

    fn table(&self) -> Result<&SmarandacheTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        let t = build_table(self.limit)?;
        Ok(self.table.get_or_init(|| t))
    }
}

fn ks() -> [ExponentK; 3] {
    [ExponentK::new(3, 2).unwrap(), ExponentK::integer(2).unwrap(), ExponentK::integer(3).unwrap()]
}

/// Applies `f` to every `n` in `[lo, hi]`; failures are listed in order.
fn range_check(
    suite: &'static str,
    check: String,
    lo: u64,
    hi: u64,
    f: impl Fn(u64) -> Result<bool> + Sync,
) -> Result<CheckRow> {
    let failed: Vec<u64> = (lo..=hi)
        .into_par_iter()
        .map(|n| f(n).map(|ok| (!ok).then_some(n)))
        .collect::<Result<Vec<Option<u64>>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(CheckRow {
        suite,
        check,
        checked: hi - lo + 1,
        failures: failed.len() as u64,
        first_failure: failed.first().map(|n| format!("n = {n}")),
    })
}

fn lemma2() -> Result<Vec<CheckRow>> {
    Ok(vec![range_check(
        "lemma2",
        format!("log-factorial bracket n<={LEMMA2_MAX_N}"),
        1,
        LEMMA2_MAX_N,
        check_log_factorial_bracket,
    )?])
}

fn case_i() -> Result<Vec<CheckRow>> {
    let set = case_i_set();
    let mut rows = vec![CheckRow::single("case-i", "S=P<=5 set is the 12 listed integers".into(), set == CASE_I, || {
        format!("got {set:?}")
    })];
    let excluded: Vec<u64> = (1..=120u64).filter(|d| 120 % d == 0 && !set.contains(d)).collect();
    let ok = excluded == [4, 8, 12, 24]
        && excluded.iter().all(|&d| smarandache(d) == 4 && largest_prime_factor(d) < 4);
    rows.push(CheckRow::single("case-i", "other divisors of 120 have S=4>P".into(), ok, || {
        format!("excluded {excluded:?}")
    }));
    Ok(rows)
}

fn eq5(ctx: &Context) -> Result<Vec<CheckRow>> {
    let mut rows = vec![range_check("eq5", format!("stirling chain P in [7;{EQ5_MAX_P}]"), 7, EQ5_MAX_P, verify_eq5_chain)?];
    let t = ctx.table()?;
    let k2 = ExponentK::integer(2)?;
    for x in [10_000, 100_000, 1_000_000] {
        let o = check_eq5_witnesses(x, k2, t)?;
        rows.push(CheckRow::from_outcome("eq5", format!("nk2 witnesses P<=k log x x={x} k=2"), o));
    }
    for x in [10_000, 100_000, 1_000_000] {
        for k in ks() {
            let o = check_eq6(x, k, t)?;
            rows.push(CheckRow::from_outcome("eq5", format!("nk2<=12+psi(x;k log x) x={x} k={k}"), o));
        }
    }
    Ok(rows)
}

fn strictly(values: &[f64], increasing: bool) -> bool {
    values.windows(2).all(|w| if increasing { w[0] < w[1] } else { w[0] > w[1] })
}

fn thm1(ctx: &Context) -> Result<Vec<CheckRow>> {
    let t = ctx.table()?;
    let mut rows = Vec::new();
    for x in TABLE_GRID {
        let n_neq = count_s_neq_p(x, t)?.count;
        let mut totals = Vec::new();
        for k in ks() {
            let c = count_nk(x, k, t)?;
            let nk = witnesses(Query::Nk(k), x, t, 0)?.count;
            let nk1 = witnesses(Query::Nk1(k), x, t, 0)?.count;
            let nk2 = witnesses(Query::Nk2(k), x, t, 0)?.count;
            let ok = nk == c.total() && nk1 == c.s_neq_p && nk2 == c.s_eq_p && nk == nk1 + nk2;
            rows.push(CheckRow::single("thm1", format!("nk=nk1+nk2 x={x} k={k}"), ok, || {
                format!("nk={nk} nk1={nk1} nk2={nk2}")
            }));
            rows.push(CheckRow::single("thm1", format!("nk1<=n-neq-p x={x} k={k}"), c.s_neq_p <= n_neq, || {
                format!("nk1={} n-neq-p={n_neq}", c.s_neq_p)
            }));
            totals.push(c.total());
        }
        let ok = totals.windows(2).all(|w| w[0] <= w[1]);
        rows.push(CheckRow::single("thm1", format!("nk monotone in k x={x}"), ok, || format!("{totals:?}")));
    }
    for x in &TABLE_GRID[..3] {
        for k in ks() {
            let (a, b) = (count_nk_by_divisors(*x, k)?, count_nk(*x, k, t)?);
            rows.push(CheckRow::single("thm1", format!("divisor count matches table x={x} k={k}"), a == b, || {
                format!("divisors {} table {}", a.total(), b.total())
            }));
        }
    }
    let k2 = ExponentK::integer(2)?;
    let diags = TREND_GRID
        .iter()
        .map(|&x| theorem1_diagnostic_by_divisors(x, k2))
        .collect::<Result<Vec<_>>>()?;
    let densities: Vec<f64> = diags.iter().map(|d| d.exact_count as f64 / d.x as f64).collect();
    let shapes: Vec<f64> = diags.iter().map(|d| d.shape_ratio).collect();
    rows.push(CheckRow::single("thm1", "n2 density strictly decreasing x=1e4..1e7".into(), strictly(&densities, false), || {
        format!("{densities:?}")
    }));
    let last = *densities.last().unwrap();
    rows.push(CheckRow::single("thm1", "n2 density at 1e7 below 1e-2".into(), last < 1e-2, || format!("{last}")));
    let ok = shapes[0] > 0.0 && strictly(&shapes, true);
    rows.push(CheckRow::single("thm1", "shape ratio positive and increasing x=1e4..1e7".into(), ok, || {
        format!("{shapes:?}")
    }));
    Ok(rows)
}

fn thm2(ctx: &Context) -> Result<Vec<CheckRow>> {
    let t = ctx.table()?;
    let mut rows = Vec::new();
    for x in [10_000, 100_000, 1_000_000] {
        rows.push(CheckRow::from_outcome("thm2", format!("m witnesses and m<=12+psi x={x}"), check_eq8(x, t)?));
        let d = theorem2_diagnostic(x, t)?;
        let r = d.bound_ratio();
        rows.push(CheckRow::single("thm2", format!("m sqrt(log x)/x finite x={x}"), r.is_finite(), || format!("{r}")));
    }
    Ok(rows)
}

/// `Ok(false)` for a decided violation, errors otherwise propagated.
fn eq1_holds(m: &BigInt, n: &BigUint) -> Result<bool> {
    match approx_record(m, n, Epsilon::ZERO) {
        Ok(_) => Ok(true),
        Err(Error::Internal(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn sondow_e(ctx: &Context) -> Result<Vec<CheckRow>> {
    let mut rows = vec![range_check("sondow-e", format!("gap above 1/(S(n)+1)! n in [2;{EQ1_MAX_N}]"), 2, EQ1_MAX_N, |n| {
        let n = BigUint::from(n);
        eq1_holds(&nearest_numerator(&n)?, &n)
    })?];
    let conv = e_convergents(CONVERGENT_MAX_DEN)?;
    rows.push(CheckRow {
        suite: "sondow-e",
        check: format!("convergents within 1/n^2 n<={CONVERGENT_MAX_DEN}"),
        checked: conv.len() as u64,
        failures: 0,
        first_failure: None,
    });
    let mut bad = Vec::new();
    for c in &conv {
        if !eq1_holds(&BigInt::from(c.m), &BigUint::from(c.n))? {
            bad.push(format!("{}/{}", c.m, c.n));
        }
    }
    rows.push(CheckRow {
        suite: "sondow-e",
        check: format!("gap above 1/(S(n)+1)! at convergents n<={CONVERGENT_MAX_DEN}"),
        checked: conv.len() as u64,
        failures: bad.len() as u64,
        first_failure: bad.into_iter().next(),
    });
    let t = ctx.table()?;
    let densities = [10_000, 100_000, 1_000_000]
        .iter()
        .map(|&x| sondow_side_census(x, Epsilon::ZERO, t).map(|c| c.density))
        .collect::<Result<Vec<f64>>>()?;
    rows.push(CheckRow::single(
        "sondow-e",
        "density of (S(n)+1)!<=n^2 decreasing x=1e4..1e6".into(),
        strictly(&densities, false),
        || format!("{densities:?}"),
    ));
    Ok(rows)
}

/// Runs `suite`; `All` runs every suite in a fixed order.
pub fn run_suite(suite: Suite, ctx: &Context) -> Result<Vec<CheckRow>> {
    Ok(match suite {
        Suite::Lemma2 => lemma2()?,
        Suite::CaseI => case_i()?,
        Suite::Eq5 => eq5(ctx)?,
        Suite::Thm1 => thm1(ctx)?,
        Suite::Thm2 => thm2(ctx)?,
        Suite::SondowE => sondow_e(ctx)?,
        Suite::All => {
            let mut rows = Vec::new();
            for s in [Suite::Lemma2, Suite::CaseI, Suite::Eq5, Suite::Thm1, Suite::Thm2, Suite::SondowE] {
                rows.extend(run_suite(s, ctx)?);
            }
            rows
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_i_suite_passes() {
        let rows = run_suite(Suite::CaseI, &Context::new(None)).unwrap();
        assert!(rows.iter().all(CheckRow::passed));
        assert_eq!(rows[0].csv_row(), "case-i,S=P<=5 set is the 12 listed integers,1,0,PASS");
    }

    #[test]
    fn failing_row_layout() {
        let r = CheckRow::single("x", "c".into(), false, || "why".into());
        assert_eq!(r.csv_row(), "x,c,1,1,FAIL");
        assert_eq!(r.first_failure.as_deref(), Some("why"));
    }
}

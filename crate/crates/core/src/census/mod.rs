//! Exact counting functions over `n <= x`.
//!
//! | kind      | counts `n <= x` with                               |
//! |-----------|----------------------------------------------------|
//! | `n-neq-p` | `S(n) != P(n)`                                     |
//! | `nk`      | `S(n)! <= n^k`                                     |
//! | `nk1`     | `S(n)! <= n^k` and `S(n) != P(n)`                  |
//! | `nk2`     | `S(n)! <= n^k` and `S(n) == P(n)`                  |
//! | `m`       | `log S(n)! <= n^(1/log log n)`, over `3 <= n <= x` |
//! | `psi`     | `P(n) <= y`                                        |

mod divisors;
mod psi_index;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

pub use divisors::{factorial_threshold, nk_divisor_witnesses, Witness, MAX_DIVISOR_VISITS};
pub use psi_index::PsiIndex;

use crate::arith::{
    exact_compare_factorial_power, log_factorial_enclosure, log_factorial_interval, ExponentK,
};
use crate::error::{invalid, Error, Result};
use crate::fmt::{density, opt, sci};
use crate::real::{decide_le, Interval, RealEnclosure};
use crate::smarandache::{largest_prime_factor, smarandache, SmarandacheTable};

/// Default number of witnesses a [`WitnessStream`] materializes.
pub const DEFAULT_WITNESS_CAP: usize = 100_000;

/// First `n` included in the `M(x)` census; `log log n` is negative below 3.
pub const M_START: u64 = 3;

const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CensusKind {
    SNeqP,
    Nk,
    Nk1,
    Nk2,
    M,
    Psi,
}

impl CensusKind {
    pub fn label(&self) -> &'static str {
        match self {
            CensusKind::SNeqP => "n-neq-p",
            CensusKind::Nk => "nk",
            CensusKind::Nk1 => "nk1",
            CensusKind::Nk2 => "nk2",
            CensusKind::M => "m",
            CensusKind::Psi => "psi",
        }
    }
}

impl fmt::Display for CensusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CensusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "n-neq-p" => CensusKind::SNeqP,
            "nk" => CensusKind::Nk,
            "nk1" => CensusKind::Nk1,
            "nk2" => CensusKind::Nk2,
            "m" => CensusKind::M,
            "psi" => CensusKind::Psi,
            _ => return invalid(format!("unknown census kind {s:?}")),
        })
    }
}

/// A census predicate together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    SNeqP,
    Nk(ExponentK),
    Nk1(ExponentK),
    Nk2(ExponentK),
    M,
    Psi(u64),
}

impl Query {
    pub fn kind(&self) -> CensusKind {
        match self {
            Query::SNeqP => CensusKind::SNeqP,
            Query::Nk(_) => CensusKind::Nk,
            Query::Nk1(_) => CensusKind::Nk1,
            Query::Nk2(_) => CensusKind::Nk2,
            Query::M => CensusKind::M,
            Query::Psi(_) => CensusKind::Psi,
        }
    }

    pub fn k(&self) -> Option<ExponentK> {
        match *self {
            Query::Nk(k) | Query::Nk1(k) | Query::Nk2(k) => Some(k),
            _ => None,
        }
    }

    pub fn y(&self) -> Option<u64> {
        match *self {
            Query::Psi(y) => Some(y),
            _ => None,
        }
    }

    fn start(&self) -> u64 {
        if *self == Query::M { M_START } else { 1 }
    }

    fn check(&self, x: u64) -> Result<()> {
        if x == 0 {
            return invalid("x must be positive");
        }
        match *self {
            Query::M if x < M_START => invalid(format!("M(x) is counted over [3, x]; got x = {x}")),
            Query::Psi(0) => invalid("y must be positive"),
            _ => Ok(()),
        }
    }

    /// Whether `n` (with `S(n) = s`, `P(n) = p`) is counted.
    pub fn holds(&self, n: u64, s: u64, p: u64) -> Result<bool> {
        let nk = |k| exact_compare_factorial_power(s, n, k) != Ordering::Greater;
        Ok(match *self {
            Query::SNeqP => s != p,
            Query::Nk(k) => nk(k),
            Query::Nk1(k) => s != p && nk(k),
            Query::Nk2(k) => s == p && nk(k),
            Query::M => n >= M_START && m_holds(n, s)?,
            Query::Psi(y) => p <= y,
        })
    }
}

/// The result of one census.
#[derive(Debug, Clone, PartialEq)]
pub struct CensusReport {
    pub x: u64,
    pub kind: CensusKind,
    pub k: Option<ExponentK>,
    pub y: Option<u64>,
    /// Smallest `n` examined: 3 for `M`, otherwise 1.
    pub start: u64,
    pub count: u64,
    pub density: f64,
}

impl CensusReport {
    pub const CSV_HEADER: &'static str = "kind,x,k_num,k_den,y,count,density";

    fn new(query: Query, x: u64, count: u64) -> Self {
        CensusReport {
            x,
            kind: query.kind(),
            k: query.k(),
            y: query.y(),
            start: query.start(),
            count,
            density: density(count, x),
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.kind,
            self.x,
            opt(self.k.map(|k| k.num())),
            opt(self.k.map(|k| k.den())),
            opt(self.y),
            self.count,
            sci(self.density)
        )
    }
}

/// `N_k(x)` and its split by whether `S(n) = P(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NkCensus {
    pub x: u64,
    pub k: ExponentK,
    /// `N_{k,1}(x)`: counted `n` with `S(n) != P(n)`.
    pub s_neq_p: u64,
    /// `N_{k,2}(x)`: counted `n` with `S(n) == P(n)`.
    pub s_eq_p: u64,
}

impl NkCensus {
    pub fn total(&self) -> u64 {
        self.s_neq_p + self.s_eq_p
    }

    pub fn report(&self) -> CensusReport {
        CensusReport::new(Query::Nk(self.k), self.x, self.total())
    }

    /// The `nk`, `nk1` and `nk2` reports, in that order.
    pub fn reports(&self) -> [CensusReport; 3] {
        [
            self.report(),
            CensusReport::new(Query::Nk1(self.k), self.x, self.s_neq_p),
            CensusReport::new(Query::Nk2(self.k), self.x, self.s_eq_p),
        ]
    }
}

/// The counted `n` of a census, kept up to a cap.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessStream {
    pub query: Query,
    pub x: u64,
    pub cap: usize,
    /// Exact count, regardless of the cap.
    pub count: u64,
    /// The first `min(count, cap)` witnesses, increasing.
    pub witnesses: Vec<u64>,
}

impl WitnessStream {
    pub fn truncated(&self) -> bool {
        (self.witnesses.len() as u64) < self.count
    }
}

/// Runs `f` over `[start, end]` in fixed chunks; results come back in
/// order regardless of scheduling.
pub(crate) fn map_chunks<T: Send>(start: u64, end: u64, f: impl Fn(u64, u64) -> T + Sync) -> Vec<T> {
    if end < start {
        return Vec::new();
    }
    let chunks = (end - start) / CHUNK + 1;
    let bounds = move |c: u64| {
        let lo = start + c * CHUNK;
        (lo, (lo + CHUNK - 1).min(end))
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..chunks).into_par_iter().map(|c| { let (lo, hi) = bounds(c); f(lo, hi) }).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..chunks).map(|c| { let (lo, hi) = bounds(c); f(lo, hi) }).collect()
    }
}

/// Counts and collects witnesses of `query` over `n <= x`.
pub fn witnesses(query: Query, x: u64, table: &SmarandacheTable, cap: usize) -> Result<WitnessStream> {
    query.check(x)?;
    table.require(x)?;
    let parts = map_chunks(query.start(), x, |lo, hi| -> Result<(u64, Vec<u64>)> {
        let mut count = 0;
        let mut found = Vec::new();
        for n in lo..=hi {
            if query.holds(n, table.s(n), table.p(n))? {
                count += 1;
                if found.len() < cap {
                    found.push(n);
                }
            }
        }
        Ok((count, found))
    });
    let mut count = 0;
    let mut found = Vec::new();
    for part in parts {
        let (c, w) = part?;
        count += c;
        let room = cap - found.len();
        found.extend(w.into_iter().take(room));
    }
    Ok(WitnessStream { query, x, cap, count, witnesses: found })
}

/// Counts `query` over `n <= x` using the table.
pub fn census(query: Query, x: u64, table: &SmarandacheTable) -> Result<CensusReport> {
    Ok(match query {
        Query::SNeqP => count_s_neq_p(x, table)?,
        Query::Nk(k) => count_nk(x, k, table)?.reports()[0].clone(),
        Query::Nk1(k) => count_nk(x, k, table)?.reports()[1].clone(),
        Query::Nk2(k) => count_nk(x, k, table)?.reports()[2].clone(),
        Query::M => count_m(x, table)?,
        Query::Psi(y) => psi_smooth_count(x, y, table)?,
    })
}

/// `N(x)`: the number of `n <= x` with `S(n) != P(n)`.
pub fn count_s_neq_p(x: u64, table: &SmarandacheTable) -> Result<CensusReport> {
    let q = Query::SNeqP;
    q.check(x)?;
    table.require(x)?;
    let n = x as usize;
    let count = table.s_values()[..n].iter().zip(&table.p_values()[..n]).filter(|(s, p)| s != p).count();
    Ok(CensusReport::new(q, x, count as u64))
}

/// `N_k(x)` with its `S != P` / `S == P` split.
pub fn count_nk(x: u64, k: ExponentK, table: &SmarandacheTable) -> Result<NkCensus> {
    Query::Nk(k).check(x)?;
    table.require(x)?;
    let parts = map_chunks(1, x, |lo, hi| {
        let (mut neq, mut eq) = (0u64, 0u64);
        for n in lo..=hi {
            let (s, p) = (table.s(n), table.p(n));
            if exact_compare_factorial_power(s, n, k) != Ordering::Greater {
                if s == p { eq += 1 } else { neq += 1 }
            }
        }
        (neq, eq)
    });
    let (s_neq_p, s_eq_p) = parts.into_iter().fold((0, 0), |(a, b), (c, d)| (a + c, b + d));
    Ok(NkCensus { x, k, s_neq_p, s_eq_p })
}

/// `N_k(x)` by enumerating divisors of `(T-1)!`; needs no table.
pub fn count_nk_by_divisors(x: u64, k: ExponentK) -> Result<NkCensus> {
    let w = nk_divisor_witnesses(x, k)?;
    let s_eq_p = w.iter().filter(|w| w.s == w.p).count() as u64;
    Ok(NkCensus { x, k, s_neq_p: w.len() as u64 - s_eq_p, s_eq_p })
}

/// `n^(1/log log n) = exp(log n / log log n)` in double precision.
pub(crate) fn m_rhs_interval(n: u64) -> Interval {
    let l = Interval::from_u64(n).ln();
    (l / l.ln()).exp()
}

pub(crate) fn m_rhs_enclosure(n: u64, bits: u32) -> RealEnclosure {
    let l = RealEnclosure::from_int(n, bits).ln();
    l.div(&l.ln()).exp()
}

/// Certified `log S(n)! <= n^(1/log log n)` for `n >= 3`.
pub(crate) fn m_holds(n: u64, s: u64) -> Result<bool> {
    decide_le(
        || (log_factorial_interval(s), m_rhs_interval(n)),
        |b| (log_factorial_enclosure(s, b), m_rhs_enclosure(n, b)),
        || format!("{n} (log S(n)! against n^(1/log log n))"),
    )
}

/// `M(x)`: the number of `n` in `[3, x]` with `S(n)! <= exp(n^(1/log log n))`.
pub fn count_m(x: u64, table: &SmarandacheTable) -> Result<CensusReport> {
    let w = witnesses(Query::M, x, table, 0)?;
    Ok(CensusReport::new(Query::M, x, w.count))
}

/// `Psi(x, y)`: the number of `n <= x` with `P(n) <= y`, counting `n = 1`.
pub fn psi_smooth_count(x: u64, y: u64, table: &SmarandacheTable) -> Result<CensusReport> {
    let q = Query::Psi(y);
    q.check(x)?;
    table.require(x)?;
    let count = table.psi_index().count_le(x as usize, y);
    Ok(CensusReport::new(q, x, count))
}

/// The integers with `S(n) = P(n) <= 5`: all divide `5! = 120`.
pub fn case_i_set() -> Vec<u64> {
    (1..=120u64)
        .filter(|d| 120 % d == 0)
        .filter(|&d| {
            let s = smarandache(d);
            s == largest_prime_factor(d) && s <= 5
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smarandache::build_table;

    fn k(p: u32, q: u32) -> ExponentK {
        ExponentK::new(p, q).unwrap()
    }

    #[test]
    fn s_neq_p_examples() {
        let t = build_table(100).unwrap();
        assert_eq!(count_s_neq_p(3, &t).unwrap().count, 0);
        assert_eq!(count_s_neq_p(4, &t).unwrap().count, 1);
        assert_eq!(count_s_neq_p(10, &t).unwrap().count, 3);
        let w = witnesses(Query::SNeqP, 10, &t, 10).unwrap();
        assert_eq!(w.witnesses, vec![4, 8, 9]);
        assert!(count_s_neq_p(101, &t).is_err());
    }

    #[test]
    fn nk_examples() {
        let t = build_table(100).unwrap();
        assert_eq!(count_nk(1, k(2, 1), &t).unwrap().total(), 1);
        assert_eq!(count_nk(1, k(3, 2), &t).unwrap().total(), 1);
        assert_eq!(count_nk(4, k(2, 1), &t).unwrap().total(), 3);
        let c = count_nk(10, k(2, 1), &t).unwrap();
        assert_eq!(c.total(), 5);
        // 8 is the only witness with S != P: S(8) = 4, P(8) = 2.
        assert_eq!((c.s_neq_p, c.s_eq_p), (1, 4));
        let w = witnesses(Query::Nk(k(2, 1)), 10, &t, 100).unwrap();
        assert_eq!(w.witnesses, vec![1, 2, 3, 6, 8]);
    }

    #[test]
    fn m_examples() {
        let t = build_table(10).unwrap();
        let r = count_m(3, &t).unwrap();
        assert_eq!((r.count, r.start), (1, 3));
        assert_eq!(count_m(10, &t).unwrap().count, 8);
        assert!(count_m(2, &t).is_err());
    }

    #[test]
    fn psi_examples() {
        let t = build_table(100).unwrap();
        assert_eq!(psi_smooth_count(10, 2, &t).unwrap().count, 4);
        assert_eq!(psi_smooth_count(10, 10, &t).unwrap().count, 10);
        assert_eq!(psi_smooth_count(100, 3, &t).unwrap().count, 20);
        assert_eq!(psi_smooth_count(100, 1, &t).unwrap().count, 1);
        assert!(psi_smooth_count(10, 0, &t).is_err());
    }

    #[test]
    fn case_i() {
        assert_eq!(case_i_set(), vec![1, 2, 3, 5, 6, 10, 15, 20, 30, 40, 60, 120]);
        let excluded: Vec<u64> = (1..=120u64).filter(|d| 120 % d == 0 && !case_i_set().contains(d)).collect();
        assert_eq!(excluded, vec![4, 8, 12, 24]);
        for d in excluded {
            assert_eq!(smarandache(d), 4);
            assert!(largest_prime_factor(d) < 4);
        }
    }

    #[test]
    fn divisor_path_small() {
        let t = build_table(10_000).unwrap();
        for kk in [k(3, 2), k(2, 1), k(3, 1)] {
            for x in [1u64, 2, 10, 100, 1000, 10_000] {
                assert_eq!(count_nk_by_divisors(x, kk).unwrap(), count_nk(x, kk, &t).unwrap(), "x={x} k={kk}");
            }
        }
    }

    #[test]
    fn witness_cap_keeps_exact_count() {
        let t = build_table(1000).unwrap();
        let w = witnesses(Query::Psi(5), 1000, &t, 3).unwrap();
        assert_eq!(w.witnesses, vec![1, 2, 3]);
        assert_eq!(w.count, psi_smooth_count(1000, 5, &t).unwrap().count);
        assert!(w.truncated());
    }

    #[test]
    fn csv_row_layout() {
        let t = build_table(10).unwrap();
        let r = psi_smooth_count(10, 2, &t).unwrap();
        assert_eq!(r.csv_row(), "psi,10,,,2,4,4.00000000000000e-1");
        let r = count_nk(10, k(3, 2), &t).unwrap().report();
        assert!(r.csv_row().starts_with("nk,10,3,2,,"));
    }
}

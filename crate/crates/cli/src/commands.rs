use smarand_core::arith::factorize;
use smarand_core::asymptotics::{
    theorem1_diagnostic, theorem1_diagnostic_by_divisors, theorem2_diagnostic, BoundDiagnostic,
};
use smarand_core::census::{census, count_nk, count_nk_by_divisors, CensusKind, CensusReport, NkCensus, Query};
use smarand_core::irrationality::{approx_record, convergent_records, nearest_numerator, nearest_records, ApproxRecord};
use smarand_core::smarandache::{build_table, largest_prime_factor, smarandache};
use smarand_core::{ExponentK, SmarandacheTable};

use crate::args::{Command, Method, SweepKind};
use crate::suites::{run_suite, CheckRow, Context};
use crate::CliError;

/// Above this `x`, `Method::Auto` counts `N_k` by divisor enumeration.
pub const AUTO_DIVISOR_THRESHOLD: u64 = 10_000_000;

/// CSV text and the parameters that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub csv: String,
    pub params: Vec<(String, String)>,
    /// False when a verify check failed.
    pub passed: bool,
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = String::from(header);
    s.push('\n');
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

fn table_for(x: u64, limit: Option<u64>) -> Result<SmarandacheTable, CliError> {
    Ok(build_table(limit.unwrap_or(x))?)
}

fn use_divisors(method: Method, x: u64) -> bool {
    match method {
        Method::Auto => x > AUTO_DIVISOR_THRESHOLD,
        Method::Table => false,
        Method::Divisors => true,
    }
}

fn nk_census(x: u64, k: ExponentK, method: Method, limit: Option<u64>) -> Result<NkCensus, CliError> {
    if use_divisors(method, x) {
        Ok(count_nk_by_divisors(x, k)?)
    } else {
        Ok(count_nk(x, k, &table_for(x, limit)?)?)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Table => "table",
        Method::Divisors => "divisors",
    }
}

/// Executes one subcommand. `table_limit` overrides the table size.
pub fn execute(command: &Command, table_limit: Option<u64>) -> Result<Output, CliError> {
    match command {
        Command::Eval { n } => eval(*n),
        Command::Census { kind, x, k, y, method } => run_census(*kind, *x, *k, *y, *method, table_limit),
        Command::Verify { suite } => {
            let ctx = Context::new(table_limit);
            let rows = run_suite(*suite, &ctx)?;
            for r in rows.iter().filter(|r| !r.passed()) {
                eprintln!("FAIL {}: {}", r.check, r.first_failure.as_deref().unwrap_or(""));
            }
            Ok(Output {
                passed: rows.iter().all(CheckRow::passed),
                csv: csv(CheckRow::CSV_HEADER, rows.iter().map(CheckRow::csv_row)),
                params: vec![("suite".into(), suite.name().into())],
            })
        }
        Command::Sweep { kind, x, k, method } => sweep(*kind, x, *k, *method, table_limit),
        Command::Approx { n, m, max_n, convergents, eps } => {
            let records: Vec<ApproxRecord> = if let Some(n) = n {
                let m = match m {
                    Some(m) => m.clone(),
                    None => nearest_numerator(n)?,
                };
                vec![approx_record(&m, n, *eps)?]
            } else if let Some(max_n) = max_n {
                nearest_records(2, *max_n, *eps)?
            } else if let Some(d) = convergents {
                convergent_records(*d, *eps)?
            } else {
                return Err(usage("one of --n, --max-n, --convergents is required"));
            };
            let mut params = vec![("eps".to_string(), eps.to_string())];
            if let Some(n) = n {
                params.push(("n".into(), n.to_string()));
            }
            if let Some(m) = m {
                params.push(("m".into(), m.to_string()));
            }
            if let Some(v) = max_n {
                params.push(("max_n".into(), v.to_string()));
            }
            if let Some(v) = convergents {
                params.push(("convergents".into(), v.to_string()));
            }
            Ok(Output {
                csv: csv(ApproxRecord::CSV_HEADER, records.iter().map(ApproxRecord::csv_row)),
                params,
                passed: true,
            })
        }
    }
}

fn eval(n: u64) -> Result<Output, CliError> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    let (s, p) = (smarandache(n), largest_prime_factor(n));
    let row = format!("{n},{s},{p},{},{}", factorize(n, None), s != p);
    Ok(Output {
        csv: csv("n,s,p,factorization,s_neq_p", [row]),
        params: vec![("n".into(), n.to_string())],
        passed: true,
    })
}

fn run_census(
    kind: CensusKind,
    x: u64,
    k: Option<ExponentK>,
    y: Option<u64>,
    method: Method,
    table_limit: Option<u64>,
) -> Result<Output, CliError> {
    let nk_kind = matches!(kind, CensusKind::Nk | CensusKind::Nk1 | CensusKind::Nk2);
    if y.is_some() && kind != CensusKind::Psi {
        return Err(usage("--y applies only to --kind psi"));
    }
    if k.is_some() && !nk_kind {
        return Err(usage("--k applies only to the nk kinds"));
    }
    if method != Method::Auto && !nk_kind {
        return Err(usage("--method applies only to the nk kinds"));
    }
    let mut params = vec![("kind".to_string(), kind.to_string()), ("x".to_string(), x.to_string())];
    let reports: Vec<CensusReport> = if nk_kind {
        let k = k.ok_or_else(|| usage("--k is required for the nk kinds"))?;
        params.push(("k".into(), k.to_string()));
        params.push(("method".into(), method_name(method).into()));
        let [all, one, two] = nk_census(x, k, method, table_limit)?.reports();
        match kind {
            CensusKind::Nk => vec![all, one, two],
            CensusKind::Nk1 => vec![one],
            _ => vec![two],
        }
    } else {
        let query = match kind {
            CensusKind::SNeqP => Query::SNeqP,
            CensusKind::M => Query::M,
            _ => {
                let y = y.ok_or_else(|| usage("--y is required for --kind psi"))?;
                params.push(("y".into(), y.to_string()));
                Query::Psi(y)
            }
        };
        vec![census(query, x, &table_for(x, table_limit)?)?]
    };
    Ok(Output { csv: csv(CensusReport::CSV_HEADER, reports.iter().map(CensusReport::csv_row)), params, passed: true })
}

fn sweep(
    kind: SweepKind,
    xs: &[u64],
    k: Option<ExponentK>,
    method: Method,
    table_limit: Option<u64>,
) -> Result<Output, CliError> {
    if xs.is_empty() {
        return Err(usage("the x grid is empty"));
    }
    if let Some(&x) = xs.iter().find(|&&x| x < 17) {
        return Err(usage(format!("grid value {x} is below 17")));
    }
    if !xs.windows(2).all(|w| w[0] < w[1]) {
        return Err(usage("the x grid must be strictly ascending"));
    }
    let grid = xs.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
    let max = *xs.last().unwrap();
    let (diags, mut params) = match kind {
        SweepKind::Thm1 => {
            let k = k.ok_or_else(|| usage("--k is required for --kind thm1"))?;
            let table_max = xs.iter().copied().filter(|&x| !use_divisors(method, x)).max();
            let table = table_max.map(|m| table_for(m, table_limit)).transpose()?;
            let diags = xs
                .iter()
                .map(|&x| match &table {
                    Some(t) if !use_divisors(method, x) => theorem1_diagnostic(x, k, t),
                    _ => theorem1_diagnostic_by_divisors(x, k),
                })
                .collect::<smarand_core::Result<Vec<BoundDiagnostic>>>()?;
            (diags, vec![("kind".to_string(), "thm1".to_string()), ("k".into(), k.to_string()), ("method".into(), method_name(method).into())])
        }
        SweepKind::Thm2 => {
            if k.is_some() || method != Method::Auto {
                return Err(usage("--k and --method apply only to --kind thm1"));
            }
            let t = table_for(max, table_limit)?;
            let diags = xs.iter().map(|&x| theorem2_diagnostic(x, &t)).collect::<smarand_core::Result<Vec<_>>>()?;
            (diags, vec![("kind".to_string(), "thm2".to_string())])
        }
    };
    params.push(("x".into(), grid));
    Ok(Output { csv: csv(BoundDiagnostic::CSV_HEADER, diags.iter().map(BoundDiagnostic::csv_row)), params, passed: true })
}

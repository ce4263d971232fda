//! Browser bindings. Each export wraps a plain Rust function that returns
//! `Result<_, String>` so the logic stays testable off the wasm target.

use smarand_core::arith::factorize;
use smarand_core::asymptotics::shape_ratio;
use smarand_core::census::nk_divisor_witnesses;
use smarand_core::smarandache::{largest_prime_factor, smarandache};
use smarand_core::ExponentK;
use wasm_bindgen::prelude::*;

/// Widest range `profile` will tabulate in one call.
pub const MAX_PROFILE_SPAN: u32 = 50_000;
/// Largest `x` accepted by `nk_curve`; divisor enumeration stays quick below it.
pub const MAX_CURVE_X: f64 = 1e12;

#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub n: String,
    pub s: String,
    pub p: String,
    pub factorization: String,
    pub s_neq_p: bool,
}

#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub start: u32,
    pub s: Vec<u32>,
    pub p: Vec<u32>,
}

/// `N_k` sampled on a geometric grid, split by whether `S(n) = P(n)`.
#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub x: Vec<f64>,
    pub count: Vec<f64>,
    pub s_eq_p: Vec<f64>,
    pub density: Vec<f64>,
    pub shape_ratio: Vec<f64>,
}

pub fn evaluate_n(text: &str) -> Result<Evaluation, String> {
    let n: u64 = text.trim().parse().map_err(|_| format!("not a positive integer: {text:?}"))?;
    if n == 0 {
        return Err("n must be positive".into());
    }
    let (s, p) = (smarandache(n), largest_prime_factor(n));
    Ok(Evaluation {
        n: n.to_string(),
        s: s.to_string(),
        p: p.to_string(),
        factorization: factorize(n, None).to_string(),
        s_neq_p: s != p,
    })
}

pub fn profile_range(start: u32, end: u32) -> Result<Profile, String> {
    if start == 0 || end < start {
        return Err("need 1 <= start <= end".into());
    }
    if end - start >= MAX_PROFILE_SPAN {
        return Err(format!("range wider than {MAX_PROFILE_SPAN}"));
    }
    let ns = start as u64..=end as u64;
    Ok(Profile {
        start,
        s: ns.clone().map(|n| smarandache(n) as u32).collect(),
        p: ns.map(|n| largest_prime_factor(n) as u32).collect(),
    })
}

pub fn nk_curve_values(x_max: f64, k: &str, points: u32) -> Result<Curve, String> {
    if !(17.0..=MAX_CURVE_X).contains(&x_max) || x_max.fract() != 0.0 {
        return Err(format!("x must be an integer in [17, {MAX_CURVE_X:e}]"));
    }
    if !(2..=200).contains(&points) {
        return Err("points must be in [2, 200]".into());
    }
    let k: ExponentK = k.parse().map_err(|e: smarand_core::Error| e.to_string())?;
    let top = x_max as u64;
    let found = nk_divisor_witnesses(top, k).map_err(|e| e.to_string())?;
    let step = (x_max / 17.0).ln() / (points - 1) as f64;
    let mut xs: Vec<u64> = (0..points).map(|i| (17.0 * (step * i as f64).exp()).round() as u64).collect();
    *xs.last_mut().unwrap() = top;
    xs.dedup();
    let mut c = Curve { x: vec![], count: vec![], s_eq_p: vec![], density: vec![], shape_ratio: vec![] };
    for x in xs {
        let upto = &found[..found.partition_point(|w| w.n <= x)];
        let total = upto.len() as u64;
        c.x.push(x as f64);
        c.count.push(total as f64);
        c.s_eq_p.push(upto.iter().filter(|w| w.s == w.p).count() as f64);
        c.density.push(total as f64 / x as f64);
        c.shape_ratio.push(shape_ratio(total, x));
    }
    Ok(c)
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

/// `S(n)`, `P(n)` and the factorization of a decimal `n < 2^64`.
#[wasm_bindgen]
pub fn evaluate(n: &str) -> Result<Evaluation, JsError> {
    evaluate_n(n).map_err(js)
}

/// `S(n)` and `P(n)` for every `n` in `[start, end]`.
#[wasm_bindgen]
pub fn profile(start: u32, end: u32) -> Result<Profile, JsError> {
    profile_range(start, end).map_err(js)
}

/// `N_k(x)`, its density and shape ratio at `points` grid values up to `x_max`.
#[wasm_bindgen]
pub fn nk_curve(x_max: f64, k: &str, points: u32) -> Result<Curve, JsError> {
    nk_curve_values(x_max, k, points).map_err(js)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluate_nine() {
        let e = evaluate_n("9").unwrap();
        assert_eq!((e.s.as_str(), e.p.as_str(), e.s_neq_p), ("6", "3", true));
        assert!(evaluate_n("0").is_err());
        assert!(evaluate_n("-4").is_err());
        assert_eq!(evaluate_n("18446744073709551557").unwrap().s, "18446744073709551557");
    }

    #[test]
    fn profile_matches_pointwise() {
        let p = profile_range(1, 12).unwrap();
        assert_eq!(p.s, [1, 2, 3, 4, 5, 3, 7, 4, 6, 5, 11, 4]);
        assert_eq!(p.p, [1, 2, 3, 2, 5, 3, 7, 2, 3, 5, 11, 3]);
        assert!(profile_range(1, MAX_PROFILE_SPAN + 1).is_err());
    }

    #[test]
    fn curve_endpoint_matches_census() {
        let c = nk_curve_values(1e6, "2", 12).unwrap();
        assert_eq!(*c.x.last().unwrap(), 1e6);
        assert_eq!(*c.count.last().unwrap(), 804.0);
        assert_eq!(*c.s_eq_p.last().unwrap(), 397.0);
        assert!(c.count.windows(2).all(|w| w[0] <= w[1]));
        assert!(nk_curve_values(10.0, "2", 12).is_err());
        assert!(nk_curve_values(1e6, "1", 12).is_err());
    }
}

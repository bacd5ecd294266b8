use hopfgal::reslie::{fiber_algebra, FiberPoint};
use hopfgal::speclab::{analyze_point, classify_point, sl2_algebra, sl2_eq4_check, LieKind, ScanContext, ScanOptions};
use hopfgal::{Error, Field};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_P: u32 = 5;

fn js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn prime_field(p: u32) -> Result<Field, JsError> {
    if p > MAX_P {
        return Err(JsError::new(&format!("p = {p} is too large for the browser demo (at most {MAX_P})")));
    }
    Field::prime(p).map_err(js)
}

/// `"a,b,c"` as (λ_e, λ_h, λ_f) in F_p.
fn parse_point(f: &Field, text: &str) -> Result<FiberPoint, JsError> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map(|v| f.from_i64(v)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| JsError::new(&format!("cannot read {text:?} as three integers")))?;
    if coords.len() != 3 {
        return Err(JsError::new("expected three coordinates λ_e, λ_h, λ_f"));
    }
    Ok(FiberPoint::new(f, coords))
}

/// Structure report of the reduced enveloping algebra of sl₂ at a point, as JSON.
#[wasm_bindgen]
pub fn fiber_report(p: u32, lambda: &str) -> Result<String, JsError> {
    let f = prime_field(p)?;
    let lie = sl2_algebra(p).map_err(js)?;
    let point = parse_point(&f, lambda)?;
    let ctx = ScanContext::new(&lie, &f, ScanOptions::default()).map_err(js)?;
    let report = analyze_point(&ctx, &point).map_err(js)?;
    Ok(serde_json::to_string_pretty(&report).expect("serializable"))
}

/// Strata of all points with the given λ_e, as rows indexed by λ_h and columns by λ_f.
#[wasm_bindgen]
pub fn stratum_map(p: u32, lambda_e: u32) -> Result<String, JsError> {
    let f = prime_field(p)?;
    let x = f.from_i64(lambda_e as i64);
    let mut rows = Vec::new();
    for h in 0..p {
        let mut row = Vec::new();
        for y in 0..p {
            let point = FiberPoint::new(&f, vec![x, f.from_i64(h as i64), f.from_i64(y as i64)]);
            row.push(classify_point(LieKind::Sl2, &point).map_err(js)?);
        }
        rows.push(row);
    }
    Ok(json!({ "p": p, "lambda_e": lambda_e % p, "rows": rows }).to_string())
}

/// Roots of the degree `p` relation satisfied by the Casimir-type element `t`.
#[wasm_bindgen]
pub fn eq4_profile(p: u32, lambda: &str) -> Result<String, JsError> {
    let f = prime_field(p)?;
    let lie = sl2_algebra(p).map_err(js)?;
    let point = parse_point(&f, lambda)?;
    let stratum = classify_point(LieKind::Sl2, &point).map_err(js)?;
    let fib = fiber_algebra(&lie, &point).map_err(js)?;
    let check = sl2_eq4_check(&fib).map_err(js)?;
    Ok(json!({
        "stratum": stratum,
        "pass": check.pass,
        "root_field": check.root_field,
        "roots": check.roots,
        "multiplicities": check.multiplicities(),
    })
    .to_string())
}

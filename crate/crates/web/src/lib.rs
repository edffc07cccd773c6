//! Browser demo bindings. Every export returns a JSON string; errors come
//! back as a string rejection.

use detstringy::groth::rank_stratum_class;
use detstringy::oracle::{candidate_count, rank_census, PrimeField};
use detstringy::report::{compute_record, terms_of, Term};
use detstringy::stringy::{
    orbit_convergence, orbit_limit, truncated_orbit_sum, StringyInput, Variety,
};
use detstringy::LaurentPoly;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Census size allowed from the page; larger requests are rejected before
/// enumeration starts.
pub const WEB_BUDGET: u128 = 2_000_000;

/// Class value at `q = p` as a decimal string.
fn predicted_count(class: &LaurentPoly, p: u32) -> String {
    class
        .eval(&detstringy::exactalg::int(p as i64))
        .map(|v| v.to_string())
        .unwrap_or_default()
}

fn variety(s: &str) -> Result<Variety, String> {
    s.parse().map_err(|e: detstringy::Error| e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

pub fn stringy_json(r: u32, k: u32, kind: &str) -> Result<String, String> {
    let input = StringyInput::new(r, k, variety(kind)?).map_err(|e| e.to_string())?;
    let rec = compute_record(&input).map_err(|e| e.to_string())?;
    Ok(to_json(&rec))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OrbitView {
    partial: Vec<Term>,
    limit: Vec<Term>,
    bound: Option<i64>,
    matched: Vec<i64>,
    mismatched: Vec<i64>,
    flagged: Vec<i64>,
    settled: bool,
}

pub fn orbits_json(r: u32, k: u32, cap: u32, kind: &str) -> Result<String, String> {
    let v = variety(kind)?;
    let err = |e: detstringy::Error| e.to_string();
    let partial = truncated_orbit_sum(r, k, cap, v).map_err(err)?;
    let limit = orbit_limit(r, k, v).map_err(err)?;
    let c = orbit_convergence(r, k, cap, v).map_err(err)?;
    Ok(to_json(&OrbitView {
        partial: terms_of(&partial),
        limit: terms_of(&limit),
        bound: c.bound,
        settled: c.nonnegative_part_settled(),
        matched: c.matched,
        mismatched: c.mismatched,
        flagged: c.flagged,
    }))
}

#[derive(Serialize)]
struct CensusRow {
    rank: u32,
    counted: String,
    predicted: String,
}

pub fn census_json(p: u32, r: u32, s: u32) -> Result<String, String> {
    let field = PrimeField::new(p).map_err(|e| e.to_string())?;
    let census = rank_census(field, r, s, WEB_BUDGET).map_err(|e| e.to_string())?;
    let rows: Vec<CensusRow> = census
        .counts
        .iter()
        .map(|(&j, &n)| CensusRow {
            rank: j,
            counted: n.to_string(),
            predicted: predicted_count(&rank_stratum_class(r, s, j).expect("j <= min(r, s)"), p),
        })
        .collect();
    Ok(to_json(&serde_json::json!({
        "p": p,
        "r": r,
        "s": s,
        "candidates": candidate_count(p, r * s).to_string(),
        "rows": rows,
    })))
}

#[wasm_bindgen]
pub fn stringy(r: u32, k: u32, variety: &str) -> Result<String, JsValue> {
    stringy_json(r, k, variety).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn orbits(r: u32, k: u32, cap: u32, variety: &str) -> Result<String, JsValue> {
    orbits_json(r, k, cap, variety).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census(p: u32, r: u32, s: u32) -> Result<String, JsValue> {
    census_json(p, r, s).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> serde_json::Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn stringy_record() {
        let v = parse(&stringy_json(2, 1, "projective").unwrap());
        assert_eq!(v["eulerNumber"], "4");
        assert_eq!(v["stringyE"].as_array().unwrap().len(), 3);
        assert!(stringy_json(2, 2, "affine").is_err());
        assert!(stringy_json(2, 1, "conic").is_err());
    }

    #[test]
    fn orbit_view() {
        let v = parse(&orbits_json(3, 2, 8, "affine").unwrap());
        assert_eq!(v["settled"], true);
        assert!(v["mismatched"].as_array().unwrap().is_empty());
        let exps: Vec<i64> = v["limit"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| t["exponent"].as_i64().unwrap())
            .collect();
        assert_eq!(exps, vec![6, 7, 8]);
    }

    #[test]
    fn census_view() {
        let v = parse(&census_json(2, 2, 2).unwrap());
        let rows = v["rows"].as_array().unwrap();
        let counted: Vec<&str> = rows
            .iter()
            .map(|r| r["counted"].as_str().unwrap())
            .collect();
        assert_eq!(counted, ["1", "9", "6"]);
        assert!(rows.iter().all(|r| r["counted"] == r["predicted"]));
        assert!(census_json(2, 5, 5).unwrap_err().contains("budget"));
        assert!(census_json(6, 2, 2).is_err());
    }
}

//! Browser bindings for the demo page in `www/`.
//!
//! Every exported function returns a JSON string; the page does the drawing.
//! The `*_json` functions hold the logic and are plain Rust so they can be
//! tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use youngwall::{
    block_color, enumerate_proper, enumerate_reduced, enumerate_strict, is_reduced, phi, phi_inv,
    principal_character, psi, psi_inv, series_product_odd, series_product_strict,
    virtual_character, weight, Partition, WallParams,
};

/// Largest block count the page may ask to enumerate.
pub const MAX_BLOCKS: usize = 30;
/// Largest series degree for the character panel.
pub const MAX_DEGREE: usize = 40;

fn params(n: usize) -> Result<WallParams, String> {
    if n > 12 {
        return Err(format!("rank {n} is too large for the demo (max 12)"));
    }
    WallParams::new(n).map_err(|e| e.to_string())
}

fn parse(label: &str, literal: &str) -> Result<Partition, String> {
    literal.parse().map_err(|e| format!("{label}: {e}"))
}

/// Columns of block colors, bottom to top, plus the weight.
fn wall_value(lambda: &Partition, params: WallParams) -> Value {
    let columns: Vec<Vec<usize>> = lambda
        .parts()
        .iter()
        .map(|&h| (1..=h).map(|k| block_color(k, params)).collect())
        .collect();
    json!({
        "parts": lambda,
        "columns": columns,
        "weight": weight(lambda, params),
        "reduced": is_reduced(lambda, params),
        "strict": lambda.is_strict(),
    })
}

pub fn walls_json(set: &str, n: usize, m: usize) -> Result<String, String> {
    let params = params(n)?;
    if m > MAX_BLOCKS {
        return Err(format!("at most {MAX_BLOCKS} blocks in the demo"));
    }
    let list = match set {
        "proper" => enumerate_proper(params, m),
        "reduced" => enumerate_reduced(params, m),
        "strict" => enumerate_strict(m),
        other => return Err(format!("unknown set {other:?}")),
    };
    let vch = virtual_character(&list, params);
    let walls: Vec<Value> = list.iter().map(|l| wall_value(l, params)).collect();
    Ok(json!({ "n": n, "m": m, "set": set, "walls": walls, "vch": vch }).to_string())
}

pub fn map_json(alg: &str, n: usize, partition: &str, hat: &str) -> Result<String, String> {
    let params = params(n)?;
    let lambda = parse("partition", partition)?;
    let value = match alg {
        "psi" | "phi" => {
            let r = if alg == "psi" {
                psi(&lambda, params)
            } else {
                phi(&lambda, params)
            }
            .map_err(|e| e.to_string())?;
            json!({
                "input": wall_value(&lambda, params),
                "reduced": wall_value(&r.reduced, params),
                "hat": r.hat,
                "k": r.k,
                "trace": r.trace,
            })
        }
        "psi-inv" | "phi-inv" => {
            let hat = parse("hat", hat)?;
            let image = if alg == "psi-inv" {
                psi_inv(&lambda, &hat, params)
            } else {
                phi_inv(&lambda, &hat, params)
            }
            .map_err(|e| e.to_string())?;
            json!({
                "input": wall_value(&lambda, params),
                "hat": hat,
                "image": wall_value(&image, params),
            })
        }
        other => return Err(format!("unknown algorithm {other:?}")),
    };
    Ok(value.to_string())
}

pub fn series_json(n: usize, degree: usize) -> Result<String, String> {
    let params = params(n)?;
    if degree > MAX_DEGREE {
        return Err(format!("degree is capped at {MAX_DEGREE} in the demo"));
    }
    let to_u64 = |c: &[i128]| c.iter().map(|&x| x as u64).collect::<Vec<_>>();
    let chi = principal_character(params, degree);
    let strict = series_product_strict(degree).map_err(|e| e.to_string())?;
    let odd = series_product_odd(degree).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "degree": degree,
        "principal": to_u64(chi.coeffs()),
        "strict_product": to_u64(strict.coeffs()),
        "odd_product": to_u64(odd.coeffs()),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn walls(set: &str, n: usize, m: usize) -> Result<String, JsValue> {
    walls_json(set, n, m).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn map_partition(alg: &str, n: usize, partition: &str, hat: &str) -> Result<String, JsValue> {
    map_json(alg, n, partition, hat).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn character_series(n: usize, degree: usize) -> Result<String, JsValue> {
    series_json(n, degree).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn reduced_walls_carry_colors() {
        let v = parsed(walls_json("reduced", 2, 8));
        let walls = v["walls"].as_array().unwrap();
        assert_eq!(walls.len(), 6);
        assert_eq!(walls[0]["parts"], json!([7, 1]));
        assert_eq!(walls[0]["columns"][0], json!([0, 1, 2, 2, 1, 0, 0]));
        assert_eq!(
            v["vch"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| t["multiplicity"].as_u64().unwrap())
                .sum::<u64>(),
            6
        );
    }

    #[test]
    fn limits_and_errors() {
        assert!(walls_json("reduced", 1, 3).is_err());
        assert!(walls_json("reduced", 2, MAX_BLOCKS + 1).is_err());
        assert!(walls_json("odd", 2, 3).is_err());
        assert!(series_json(2, MAX_DEGREE + 1).is_err());
        assert!(map_json("psi", 2, "5,1", "")
            .unwrap_err()
            .contains("already reduced"));
    }

    #[test]
    fn map_round_trip() {
        let v = parsed(map_json("phi", 2, "6,6,3,3", ""));
        assert_eq!(v["hat"], json!([2, 1]));
        assert_eq!(v["trace"].as_array().unwrap().len(), 2);
        let v = parsed(map_json("phi-inv", 2, "", "2,1"));
        assert_eq!(v["image"]["parts"], json!([6, 6, 3, 3]));
    }

    #[test]
    fn series_agree() {
        let v = parsed(series_json(3, 25));
        assert_eq!(v["principal"], v["strict_product"]);
        assert_eq!(v["principal"], v["odd_product"]);
    }
}

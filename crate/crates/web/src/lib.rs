//! Browser bindings: predicted invariants for a curve, and Betti diagrams
//! of secant varieties or pasted ideals, computed over F_32003.

use serde_json::json;
use wasm_bindgen::prelude::*;

use secant_core::determinantal::rnc_ideal;
use secant_core::groebner::{buchberger, GbOptions};
use secant_core::hilbert::hilbert_poly;
use secant_core::io::parse_ideal;
use secant_core::predictions::{
    balanced_factorization, cycle_strand_bound, deg_secant, genus_section, hilbert_alphas, max_p, predict_beta13,
    predict_corner, predict_hilbert_poly, predict_reg_ideal, CurveParams,
};
use secant_core::resolve::{betti_table_with, BettiOptions};
use secant_core::secant::{secant_ideal, SecantSpec};
use secant_core::{MonomialOrder, PrimeField};

/// Largest curve degree accepted by the interactive secant computation.
pub const MAX_DEMO_DEGREE: usize = 8;

fn field() -> PrimeField {
    PrimeField::new(32003).expect("prime")
}

pub fn predictions_json(g: i64, d: i64, k: i64) -> Result<String, String> {
    let c = CurveParams::new(g, d, k).map_err(|e| e.to_string())?;
    let (corner, (ci, cj)) = predict_corner(g, k, c.n);
    let mut out = json!({
        "n": c.n,
        "in_range": c.in_range(),
        "corner": { "value": corner, "position": [ci, cj] },
    });
    if k == 1 {
        let b13 = predict_beta13(&c);
        out["degree"] = json!(deg_secant(&c));
        out["section_genus"] = json!(genus_section(&c));
        out["alphas"] = json!(hilbert_alphas(&c));
        out["hilbert_polynomial"] = json!((1..=6).map(|m| predict_hilbert_poly(&c, m)).collect::<Vec<_>>());
        out["beta_1_3"] = json!({ "proof_form": b13.proof_form, "display_form": b13.display_form });
        out["reg_ideal"] = json!(predict_reg_ideal(&c));
    }
    let p = max_p(&c);
    if p >= 0 {
        out["linear_strand_through"] = json!(p);
        let (s, t) = balanced_factorization(&c);
        if let Ok((i, j)) = cycle_strand_bound(k, s, t) {
            out["cycle_position"] = json!([i, j]);
        }
    }
    serde_json::to_string_pretty(&out).map_err(|e| e.to_string())
}

pub fn secant_diagram_text(d: usize, k: usize) -> Result<String, String> {
    if !(2..=MAX_DEMO_DEGREE).contains(&d) {
        return Err(format!("degree must be between 2 and {MAX_DEMO_DEGREE}"));
    }
    let curve = rnc_ideal(field(), d).map_err(|e| e.to_string())?;
    let s = secant_ideal(&SecantSpec::new(curve, k), false).map_err(|e| e.to_string())?;
    let gb = buchberger(&s.ideal, MonomialOrder::Grevlex, GbOptions::default()).map_err(|e| e.to_string())?;
    let t = betti_table_with(&gb, &BettiOptions::default()).map_err(|e| e.to_string())?;
    let h = hilbert_poly(&gb);
    let dim = h.projective_dim().map_or("empty".to_string(), |x| x.to_string());
    Ok(format!("dimension {dim}, degree {}\n\n{}", h.degree, t.to_text()))
}

pub fn ideal_diagram_text(text: &str) -> Result<String, String> {
    let ideal = parse_ideal(field(), text).map_err(|e| e.to_string())?;
    let gb = buchberger(&ideal, MonomialOrder::Grevlex, GbOptions::default()).map_err(|e| e.to_string())?;
    let t = betti_table_with(&gb, &BettiOptions::default()).map_err(|e| e.to_string())?;
    let mut s = t.to_text();
    if !t.is_exact() {
        s.push_str("(truncated)\n");
    }
    Ok(s)
}

/// Predicted invariants of the k-th secant variety of a genus-g curve of
/// degree d, as JSON.
#[wasm_bindgen]
pub fn predictions(g: i32, d: i32, k: i32) -> Result<String, JsValue> {
    predictions_json(g as i64, d as i64, k as i64).map_err(|e| JsValue::from_str(&e))
}

/// Betti diagram of the k-th secant variety of the rational normal curve
/// of degree d.
#[wasm_bindgen]
pub fn secant_diagram(d: u32, k: u32) -> Result<String, JsValue> {
    secant_diagram_text(d as usize, k as usize).map_err(|e| JsValue::from_str(&e))
}

/// Betti diagram of an ideal given in the ideal file format.
#[wasm_bindgen]
pub fn ideal_diagram(text: &str) -> Result<String, JsValue> {
    ideal_diagram_text(text).map_err(|e| JsValue::from_str(&e))
}

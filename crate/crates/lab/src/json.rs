//! JSON encodings. Objects are `serde_json` maps, which keep keys sorted;
//! rationals are exact strings such as `"-3/2"`.

use gorenstein_core::apolarity::{ApolarAlgebra, HilbertVector};
use gorenstein_core::jordan::{JordanReport, Partition};
use gorenstein_core::poly::{format_monomial, Side};
use gorenstein_core::Scalar;
use serde_json::{json, Map, Value};

pub fn scalar(x: &Scalar) -> Value {
    Value::String(x.to_string())
}

pub fn hilbert(h: &HilbertVector) -> Value {
    json!(h.as_slice())
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

/// `{ dual_generator, socle_degree, hilbert_function, bases: { degree: [monomials] } }`.
pub fn algebra(alg: &ApolarAlgebra) -> Value {
    let ctx = alg.dual_generator().context();
    let bases: Map<String, Value> = (0..=alg.socle_degree())
        .map(|k| {
            let names: Vec<String> = alg
                .basis(k)
                .iter()
                .map(|m| format_monomial(ctx, Side::R, m))
                .collect();
            (k.to_string(), json!(names))
        })
        .collect();
    json!({
        "dual_generator": alg.dual_generator().to_string(),
        "socle_degree": alg.socle_degree(),
        "hilbert_function": hilbert(alg.hilbert()),
        "bases": bases,
    })
}

/// `{ ell, partition, ranks, wlp, slp, strings? }`.
pub fn jordan(report: &JordanReport) -> Value {
    let mut out = json!({
        "ell": report.ell.to_string(),
        "partition": partition(&report.partition),
        "ranks": report.rank_sequence,
        "wlp": report.is_wlp_element,
        "slp": report.is_slp_element,
    });
    if let Some(strings) = &report.strings {
        out["strings"] = strings
            .iter()
            .map(|s| json!({ "seed": s.seed.to_string(), "degree": s.degree, "length": s.length }))
            .collect();
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

//! Report assembly: every number in the machine block is an exact
//! rational string; the human block is derived from the same data.

use serde_json::{json, Value};

use nullcone::boostweight::BoostWeight;
use nullcone::geometry::NullFrameMetric;
use nullcone::nullcone::{Certificate, NecessaryReport};
use nullcone::scalar::{self};
use nullcone::tensor::Tensor;
use nullcone::WeightVector;

/// Machine form of a symmetric 2-tensor: 1-based components a ≤ b.
pub fn sym_tensor_json(t: &Tensor) -> Value {
    let mut comps = Vec::new();
    for (idx, v) in t.iter() {
        if idx[0] <= idx[1] {
            comps.push(json!({
                "a": idx[0] + 1,
                "b": idx[1] + 1,
                "component": scalar::format(v),
            }));
        }
    }
    Value::Array(comps)
}

/// Human form in the usual symmetric-product notation.
pub fn sym_tensor_human(t: &Tensor) -> String {
    let mut parts = Vec::new();
    for (idx, v) in t.iter() {
        if idx[0] <= idx[1] {
            let coeff = if idx[0] == idx[1] { v.clone() } else { v + v };
            parts.push(format!(
                "{} θ{}θ{}",
                scalar::format(&coeff),
                idx[0] + 1,
                idx[1] + 1
            ));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn weights_json(x: &WeightVector) -> Value {
    Value::Array(
        x.0.iter()
            .map(|v| Value::String(scalar::format(v)))
            .collect(),
    )
}

pub fn weights_human(x: &WeightVector) -> String {
    let parts: Vec<String> = x.0.iter().map(scalar::format).collect();
    format!("[{}]", parts.join(","))
}

pub fn boost_weight_json(w: &BoostWeight) -> Value {
    Value::Array(w.0.iter().map(|&b| json!(b)).collect())
}

pub fn certificate_json(cert: &Certificate, g: &NullFrameMetric) -> Value {
    json!({
        "frame_permutation": cert.permutation.index_map(g).iter().map(|i| i + 1).collect::<Vec<_>>(),
        "weights": weights_json(&cert.weights),
        "margins": cert.margins.iter().map(|(w, m)| json!({
            "weight": boost_weight_json(w),
            "margin": scalar::format(m),
        })).collect::<Vec<_>>(),
    })
}

pub fn necessary_json(rep: &NecessaryReport) -> Value {
    json!({
        "invariants": rep.invariants.iter().map(|(n, v)| json!({
            "name": n,
            "value": scalar::format(v),
        })).collect::<Vec<_>>(),
        "invariants_all_zero": rep.invariants_all_zero,
        "killing_nilpotent": rep.killing_nilpotent,
        "killing_index": rep.killing_index,
        "killing_index_bound": rep.killing_index_bound,
        "semisimple": rep.semisimple,
        "passes": rep.passes,
    })
}

pub fn jordan_human(t: &Result<Vec<usize>, nullcone::Error>) -> String {
    match t {
        Ok(blocks) if blocks.is_empty() => "0 (zero operator)".into(),
        Ok(blocks) => blocks
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join("⊕"),
        Err(_) => "not nilpotent".into(),
    }
}

//! Text and JSON renderings of library values.

use fanocalc::fano_db::{FanoRecord, NormalBundleOption};
use fanocalc::ring::Poly;
use fanocalc::schubert::ChowElement;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn int(b: &BigInt) -> Value {
    b.to_i64().map_or_else(|| Value::String(b.to_string()), Value::from)
}

pub fn chow(x: &ChowElement) -> Value {
    let terms: Vec<Value> =
        x.terms().iter().map(|(p, c)| json!({ "partition": p.parts(), "coefficient": int(c) })).collect();
    json!({ "display": x.to_string(), "terms": terms })
}

/// A polynomial with named generators, highest lex monomial first.
pub fn poly(p: &Poly, names: &[String]) -> String {
    let mut out = String::new();
    for (exps, c) in p.terms().iter().rev() {
        let mono: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        let mono = mono.join("*");
        let mag = c.abs();
        let body = match (mono.is_empty(), mag.is_one()) {
            (true, _) => mag.to_string(),
            (false, true) => mono,
            (false, false) => format!("{mag}*{mono}"),
        };
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn opt_i64(v: Option<i64>) -> Value {
    v.map_or(Value::Null, Value::from)
}

pub fn record(r: &FanoRecord) -> Value {
    json!({
        "name": r.name,
        "index": r.index,
        "h3": r.h3,
        "genus": opt_i64(r.genus),
        "b3": opt_i64(r.b3),
        "b3_external": r.b3_is_external(),
        "very_ample": r.very_ample,
        "h0_h": r.h0_h,
        "facts": r.facts,
        "description": r.description,
    })
}

pub fn normal_bundle(o: &NormalBundleOption) -> Value {
    json!({ "a": o.a, "b": o.b, "flagged": o.flagged })
}

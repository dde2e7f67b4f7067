//! JSON and plain-text renderings.
//!
//! JSON objects use `serde_json`'s default sorted maps, so key order is
//! canonical. Betti numbers above `2^53` are emitted as strings.

use monres::classify::{AciSplit, KtyClassification};
use monres::formulas::FormulaResult;
use monres::ideal::PolarizationMap;
use monres::{BettiTable, ChainComplex, Monomial, MonomialIdeal, MonomialPrime, Variables};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

/// Largest integer every JSON consumer represents exactly.
const SAFE_INT: u64 = 1 << 53;

pub fn count(n: u64) -> Value {
    if n > SAFE_INT {
        Value::String(n.to_string())
    } else {
        Value::from(n)
    }
}

pub fn big(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => count(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn monomial(m: &Monomial, vars: &Variables) -> Value {
    Value::String(m.display(vars).to_string())
}

pub fn monomials(ms: &[Monomial], vars: &Variables) -> Value {
    Value::Array(ms.iter().map(|m| monomial(m, vars)).collect())
}

pub fn ideal(i: &MonomialIdeal) -> Value {
    json!({
        "variables": i.vars().names(),
        "generators": monomials(i.gens(), i.vars()),
    })
}

pub fn prime(p: &MonomialPrime, vars: &Variables) -> Vec<String> {
    p.vars.iter().map(|&v| vars.name(v).to_string()).collect()
}

pub fn envelope(command: &str, input: &MonomialIdeal, body: Value) -> Value {
    let mut out = json!({
        "schema": format!("monres/{command}/v{SCHEMA_VERSION}"),
        "command": command,
        "ideal": ideal(input),
    });
    merge(&mut out, body);
    out
}

pub fn merge(into: &mut Value, extra: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, extra) {
        a.extend(b);
    }
}

pub fn split(s: &AciSplit, vars: &Variables) -> Value {
    json!({ "ci_part": monomials(&s.ci_part, vars), "v": monomial(&s.v, vars) })
}

pub fn kty(k: &KtyClassification) -> Value {
    json!({
        "form": k.form.tag.as_str(),
        "r": k.form.r,
        "u_parts": monomials(&k.form.u_parts, &k.vars),
        "v_parts": monomials(&k.form.v_parts, &k.vars),
        "polarized": k.polarized,
        "variables": k.vars.names(),
    })
}

pub fn betti_table(method: &str, t: &BettiTable, vars: &Variables) -> Value {
    let entries: Vec<Value> = t
        .entries()
        .iter()
        .map(|((i, b), n)| json!({ "i": i, "multidegree": monomial(b, vars), "value": count(*n) }))
        .collect();
    json!({
        "method": method,
        "totals": t.totals().into_iter().map(count).collect::<Vec<_>>(),
        "projective_dimension": t.projective_dimension(),
        "multigraded": entries,
    })
}

pub fn formula(f: &FormulaResult) -> Value {
    json!({
        "method": "formula",
        "totals": f.totals.iter().map(big).collect::<Vec<_>>(),
        "projective_dimension": f.totals.len() - 1,
        "rule": f.rule.as_str(),
        "via_polarization": f.via_polarization,
        "params": {
            "q": f.params.q,
            "s": f.params.s,
            "form": f.params.form.map(|t| t.as_str()),
            "power": f.params.power,
            "notes": f.params.notes,
        },
    })
}

pub fn chain_complex(c: &ChainComplex, vars: &Variables) -> Value {
    let basis: Vec<Value> = c
        .bases
        .iter()
        .map(|b| {
            Value::Array(
                b.iter()
                    .map(|e| json!({ "subset": e.members(), "multidegree": monomial(&e.multidegree, vars) }))
                    .collect(),
            )
        })
        .collect();
    let differentials: Vec<Value> = c
        .differentials
        .iter()
        .enumerate()
        .map(|(k, d)| {
            json!({
                "degree": k + 1,
                "rows": d.rows,
                "cols": d.cols,
                "entries": d.entries.iter().map(|e| json!({
                    "row": e.row,
                    "col": e.col,
                    "coeff": e.coeff,
                    "ratio": monomial(&e.ratio, vars),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "ranks": c.ranks(), "basis": basis, "differentials": differentials })
}

pub fn polarization_map(map: &PolarizationMap) -> Value {
    Value::Array(
        map.backward
            .iter()
            .enumerate()
            .map(|(v, &(orig, slot))| {
                json!({
                    "variable": map.target.name(v),
                    "source": map.source.name(orig),
                    "slot": slot,
                })
            })
            .collect(),
    )
}

/// Betti totals laid out as a table: one column per homological degree.
pub fn totals_text(label: &str, totals: &[String]) -> String {
    let width = totals.iter().map(String::len).max().unwrap_or(1).max(2);
    let pad = label.len().max(6);
    let mut head = format!("{:>pad$}", "");
    let mut row = format!("{label:>pad$}");
    for (i, t) in totals.iter().enumerate() {
        head.push_str(&format!(" {i:>width$}"));
        row.push_str(&format!(" {t:>width$}"));
    }
    format!("{head}\n{row}\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_counts_become_strings() {
        assert_eq!(count(5), json!(5));
        assert_eq!(count(1 << 53), json!(9007199254740992u64));
        assert_eq!(count((1 << 53) + 1), json!("9007199254740993"));
        let b = BigUint::from(u64::MAX) * 3u32;
        assert_eq!(big(&b), json!(b.to_string()));
    }

    #[test]
    fn text_table_layout() {
        let t = totals_text("total:", &["1".into(), "5".into(), "9".into(), "7".into(), "2".into()]);
        assert_eq!(t, "        0  1  2  3  4\ntotal:  1  5  9  7  2\n");
    }
}

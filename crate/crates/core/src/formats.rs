//! JSON and plain-text serialization.
//!
//! Semigroups are `{"elements": [...], "table": [[...], ...]}` with index
//! entries (label strings are accepted too), or an object carrying such a
//! value under `"semigroup"`. The text format is the order on the first
//! line followed by the rows of indices. In Rees and glue specifications
//! the string `"0"` stands for θ.

use serde_json::{json, Map, Value};

use crate::classify::{Classification, Verdict};
use crate::error::{Error, Result};
use crate::groups::SchmidtReport;
use crate::nilpotency::{monoid_identity, NilpotencyResult, Witness};
use crate::rees::{GlueSpec, ReesSpec, Transformation};
use crate::semigroup::{letter_labels, validate_semigroup, Semigroup};
use crate::structure::{MnnVerdict, Offender};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses either format, deciding by the first non-blank character.
pub fn parse_semigroup(text: &str) -> Result<Semigroup> {
    let t = text.trim_start();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| parse_err(e.to_string()))?;
        semigroup_from_json(&v)
    } else {
        parse_semigroup_text(t)
    }
}

pub fn parse_semigroup_text(text: &str) -> Result<Semigroup> {
    let mut nums = text.split_whitespace().map(|w| {
        w.parse::<usize>()
            .map_err(|_| parse_err(format!("expected an index, found {w:?}")))
    });
    let n = nums.next().ok_or_else(|| parse_err("empty input"))??;
    let flat: Vec<usize> = nums.collect::<Result<_>>()?;
    if flat.len() != n * n {
        return Err(Error::BadShape(format!(
            "expected {} table entries, found {}",
            n * n,
            flat.len()
        )));
    }
    let rows = flat.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
    validate_semigroup(letter_labels(n), if n == 0 { Vec::new() } else { rows })
}

pub fn semigroup_from_json(v: &Value) -> Result<Semigroup> {
    if let Some(inner) = v.get("semigroup") {
        return semigroup_from_json(inner);
    }
    let table = v
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing \"table\""))?;
    let labels: Vec<String> = match v.get("elements") {
        Some(Value::Array(xs)) => xs
            .iter()
            .map(|x| match x {
                Value::String(s) => Ok(s.clone()),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(parse_err("element labels must be strings")),
            })
            .collect::<Result<_>>()?,
        Some(_) => return Err(parse_err("\"elements\" must be an array")),
        None => letter_labels(table.len()),
    };
    let lookup = |x: &Value| -> Result<usize> {
        match x {
            Value::Number(n) => n
                .as_u64()
                .map(|k| k as usize)
                .ok_or_else(|| parse_err(format!("bad table entry {n}"))),
            Value::String(s) => labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::UnknownLabel(s.clone())),
            other => Err(parse_err(format!("bad table entry {other}"))),
        }
    };
    let rows = table
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("table rows must be arrays"))?
                .iter()
                .map(lookup)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    validate_semigroup(labels, rows)
}

pub fn semigroup_json(s: &Semigroup) -> Value {
    json!({ "elements": s.labels(), "table": s.rows() })
}

pub fn semigroup_text(s: &Semigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Label of an index of `S^1`. The adjoined identity is `"1"`, or `"1'"`
/// if `S` already has a non-identity element called `"1"`.
pub fn monoid_label(s: &Semigroup, k: usize) -> String {
    if k < s.order() {
        s.label(k).to_string()
    } else if s.index_of("1").is_some() {
        "1'".into()
    } else {
        "1".into()
    }
}

fn monoid_index(s: &Semigroup, label: &str) -> Result<usize> {
    if let Some(k) = s.index_of(label) {
        return Ok(k);
    }
    let one = monoid_identity(s);
    if one == s.order() && label == monoid_label(s, one) {
        return Ok(one);
    }
    Err(Error::UnknownLabel(label.to_string()))
}

pub fn witness_json(s: &Semigroup, w: &Witness) -> Value {
    json!({
        "x": monoid_label(s, w.x),
        "y": monoid_label(s, w.y),
        "ws": w.ws.iter().map(|&k| monoid_label(s, k)).collect::<Vec<_>>(),
    })
}

pub fn witness_from_json(s: &Semigroup, v: &Value) -> Result<Witness> {
    let field = |k: &str| -> Result<usize> {
        let l = v
            .get(k)
            .and_then(Value::as_str)
            .ok_or_else(|| parse_err(format!("witness needs string field {k:?}")))?;
        s.element(l)
    };
    let ws = v
        .get("ws")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("witness needs \"ws\""))?
        .iter()
        .map(|x| {
            x.as_str()
                .ok_or_else(|| parse_err("multipliers must be labels"))
                .and_then(|l| monoid_index(s, l))
        })
        .collect::<Result<_>>()?;
    Ok(Witness {
        x: field("x")?,
        y: field("y")?,
        ws,
    })
}

pub fn nilpotency_json(s: &Semigroup, r: &NilpotencyResult) -> Value {
    match r {
        NilpotencyResult::Nilpotent { class } => json!({ "nilpotent": true, "class": class }),
        NilpotencyResult::NonNilpotent { witness } => {
            json!({ "nilpotent": false, "witness": witness_json(s, witness) })
        }
    }
}

fn label_list(s: &Semigroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x).to_string()).collect()
}

pub fn verdict_json(s: &Semigroup, v: &MnnVerdict) -> Value {
    let offenders: Vec<Value> = v
        .offenders
        .iter()
        .map(|o| match o {
            Offender::Subsemigroup {
                generators,
                members,
                witness,
            } => json!({
                "kind": "subsemigroup",
                "generators": label_list(s, generators),
                "members": label_list(s, members),
                "witness": witness_json(s, witness),
            }),
            Offender::Quotient { ideal, witness } => {
                let q = crate::structure::rees_quotient(s, ideal);
                json!({
                    "kind": "quotient",
                    "ideal": label_list(s, ideal),
                    "witness": match q {
                        Ok(q) => witness_json(&q, witness),
                        Err(_) => Value::Null,
                    },
                })
            }
        })
        .collect();
    json!({
        "minimal": v.minimal,
        "mode": v.mode,
        "witness": v.witness.as_ref().map(|w| witness_json(s, w)),
        "offenders": offenders,
    })
}

pub fn schmidt_json(r: &SchmidtReport) -> Value {
    serde_json::to_value(r).expect("plain data")
}

fn verdict_body(s: &Semigroup, c: &Classification) -> Value {
    let group_label = |k: usize| -> String {
        c.decomposition
            .as_ref()
            .map(|d| d.spec.group.label(k).to_string())
            .unwrap_or_else(|| k.to_string())
    };
    match &c.verdict {
        Verdict::Nilpotent { class } => json!({ "type": "Nilpotent", "class": class }),
        Verdict::NotMinimal { offenders } => {
            let v = MnnVerdict {
                minimal: false,
                witness: None,
                offenders: offenders.clone(),
                mode: crate::structure::MinimalityMode::FourGenerator,
            };
            json!({ "type": "NotMinimal", "offenders": verdict_json(s, &v)["offenders"].clone() })
        }
        Verdict::Schmidt(r) => json!({ "type": "Schmidt", "schmidt": schmidt_json(r) }),
        Verdict::U1 => json!({ "type": "U1" }),
        Verdict::U2 => json!({ "type": "U2" }),
        Verdict::U3 { k, u, g_generators } => json!({
            "type": "U3",
            "k": k,
            "u": s.label(*u),
            "g_generators": g_generators.iter().map(|&g| group_label(g)).collect::<Vec<_>>(),
        }),
        Verdict::U4 {
            x1,
            x2,
            relations_checked,
        } => json!({
            "type": "U4",
            "x1": s.label(*x1),
            "x2": s.label(*x2),
            "relations_checked": relations_checked,
        }),
        Verdict::U5 { v1, v2, k } => json!({
            "type": "U5",
            "v1": s.label(*v1),
            "v2": s.label(*v2),
            "k": k.iter().map(|r| r + 1).collect::<Vec<_>>(),
        }),
    }
}

pub fn classification_json(s: &Semigroup, c: &Classification) -> Value {
    let mut out = Map::new();
    out.insert("verdict".into(), verdict_body(s, c));
    if let Some(ideal) = &c.ideal {
        out.insert("ideal".into(), json!(label_list(s, ideal)));
    }
    if let Some(d) = &c.decomposition {
        out.insert(
            "rees".into(),
            json!({
                "group": semigroup_json(&d.spec.group),
                "n": d.rows(),
            }),
        );
    }
    if let Some(gp) = &c.gamma_psi {
        let gamma: Map<String, Value> = (0..s.order())
            .map(|x| (s.label(x).to_string(), json!(gp.cycles(x).to_string())))
            .collect();
        out.insert("gamma".into(), Value::Object(gamma));
    }
    out.insert(
        "relabeling".into(),
        json!(c.relabeling.iter().map(|r| r + 1).collect::<Vec<_>>()),
    );
    let inv: Map<String, Value> = c
        .invariants
        .iter()
        .map(|i| (i.name.clone(), json!(i.value)))
        .collect();
    out.insert("invariants".into(), Value::Object(inv));
    Value::Object(out)
}

fn group_entry(group: &Semigroup, v: &Value) -> Result<Option<usize>> {
    match v {
        Value::String(s) if s == "0" || s == "θ" => Ok(None),
        Value::String(s) => group.element(s).map(Some),
        Value::Null => Ok(None),
        Value::Number(n) => n
            .as_u64()
            .map(|k| Some(k as usize))
            .ok_or_else(|| parse_err(format!("bad group entry {n}"))),
        other => Err(parse_err(format!("bad group entry {other}"))),
    }
}

fn group_value(group: &Semigroup, x: Option<usize>) -> Value {
    match x {
        Some(k) => json!(group.label(k)),
        None => json!("0"),
    }
}

fn usize_field(v: &Value, k: &str) -> Result<usize> {
    v.get(k)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("missing integer field {k:?}")))
}

fn array_field<'a>(v: &'a Value, k: &str) -> Result<&'a Vec<Value>> {
    v.get(k)
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err(format!("missing array field {k:?}")))
}

pub fn rees_spec_from_json(v: &Value) -> Result<ReesSpec> {
    let group = semigroup_from_json(v.get("group").ok_or_else(|| parse_err("missing \"group\""))?)?;
    let rows = usize_field(v, "rows")?;
    let cols = usize_field(v, "cols")?;
    let sandwich = array_field(v, "sandwich")?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("sandwich rows must be arrays"))?
                .iter()
                .map(|x| group_entry(&group, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let with_zero = v.get("with_zero").and_then(Value::as_bool).unwrap_or(true);
    Ok(ReesSpec {
        group,
        rows,
        cols,
        sandwich,
        with_zero,
    })
}

pub fn rees_spec_json(spec: &ReesSpec) -> Value {
    json!({
        "group": semigroup_json(&spec.group),
        "rows": spec.rows,
        "cols": spec.cols,
        "sandwich": spec.sandwich.iter().map(|r| r.iter().map(|&x| group_value(&spec.group, x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "with_zero": spec.with_zero,
    })
}

/// A transformation is either an array of images (`1..n`, or `"0"` for θ)
/// or a string in cycle notation.
fn transformation_from_json(v: &Value, n: usize) -> Result<Transformation> {
    match v {
        Value::String(s) => Transformation::parse(s, n),
        Value::Array(xs) => {
            if xs.len() != n {
                return Err(Error::BadShape(format!("transformation needs {n} images")));
            }
            xs.iter()
                .map(|x| match x {
                    Value::Number(k) => match k.as_u64() {
                        Some(0) => Ok(None),
                        Some(k) if (k as usize) <= n => Ok(Some(k as usize - 1)),
                        _ => Err(parse_err(format!("image {k} out of range"))),
                    },
                    Value::String(s) if s == "0" || s == "θ" => Ok(None),
                    Value::String(s) => match s.parse::<usize>() {
                        Ok(k) if (1..=n).contains(&k) => Ok(Some(k - 1)),
                        _ => Err(parse_err(format!("bad image {s:?}"))),
                    },
                    other => Err(parse_err(format!("bad image {other}"))),
                })
                .collect::<Result<Vec<_>>>()
                .map(Transformation)
        }
        other => Err(parse_err(format!("bad transformation {other}"))),
    }
}

fn transformation_json(t: &Transformation) -> Value {
    json!(t
        .0
        .iter()
        .map(|p| match p {
            Some(k) => json!(k + 1),
            None => json!("0"),
        })
        .collect::<Vec<_>>())
}

pub fn glue_spec_from_json(v: &Value) -> Result<GlueSpec> {
    let m_spec = rees_spec_from_json(v.get("m_spec").ok_or_else(|| parse_err("missing \"m_spec\""))?)?;
    let t = semigroup_from_json(v.get("t").ok_or_else(|| parse_err("missing \"t\""))?)?;
    let n = m_spec.rows;
    let gamma_t = array_field(v, "gamma")?
        .iter()
        .map(|x| transformation_from_json(x, n))
        .collect::<Result<Vec<_>>>()?;
    let psi_t = array_field(v, "psi")?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("psi rows must be arrays"))?
                .iter()
                .map(|x| group_entry(&m_spec.group, x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GlueSpec {
        m_spec,
        t,
        gamma_t,
        psi_t,
    })
}

pub fn glue_spec_json(gs: &GlueSpec) -> Value {
    let g = &gs.m_spec.group;
    json!({
        "m_spec": rees_spec_json(&gs.m_spec),
        "t": semigroup_json(&gs.t),
        "gamma": gs.gamma_t.iter().map(transformation_json).collect::<Vec<_>>(),
        "psi": gs.psi_t.iter().map(|r| r.iter().map(|&x| group_value(g, x)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

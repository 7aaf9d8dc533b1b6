//! The ".cox" text format and its JSON mirror.
//!
//! Text form: the first significant line is `gens n1 n2 ...`; every later
//! line is `edge s t m` with `m` an integer at least 2 or the word `inf`.
//! `#` starts a comment, blank lines are skipped, pairs not listed are
//! infinite. The canonical serialization sorts generators and edges and
//! omits infinite pairs, so parse after serialize is the identity.

use std::fmt;

use coxjsj_core::{CoxeterSystem, GeneratorId, OrderLabel};
use serde_json::{json, Value};

/// A parse failure. `line` is 1-based and present for text input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn of(message: impl Into<String>) -> ParseError {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "line {}: {}", n, self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn parse_label(token: &str) -> Result<OrderLabel, String> {
    if token == "inf" {
        return Ok(OrderLabel::Infinite);
    }
    match token.parse::<u32>() {
        Ok(m) if m >= 2 => Ok(OrderLabel::Finite(m)),
        Ok(m) => Err(format!("order {} is below 2", m)),
        Err(_) => Err(format!("expected an integer or \"inf\", got {:?}", token)),
    }
}

/// Parses the text format. Errors carry the offending line number.
pub fn parse_cox(text: &str) -> Result<CoxeterSystem, ParseError> {
    let mut gens: Option<Vec<GeneratorId>> = None;
    let mut edges: Vec<(GeneratorId, GeneratorId, OrderLabel)> = Vec::new();
    let mut seen_pairs = std::collections::BTreeSet::new();

    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("nonempty line has a first token");
        match head {
            "gens" => {
                if gens.is_some() {
                    return Err(ParseError::at(n, "repeated gens line"));
                }
                let mut list = Vec::new();
                for name in tokens {
                    let g = GeneratorId::new(name).map_err(|e| ParseError::at(n, e.to_string()))?;
                    if list.contains(&g) {
                        return Err(ParseError::at(n, format!("duplicate generator {}", g)));
                    }
                    list.push(g);
                }
                if list.is_empty() {
                    return Err(ParseError::at(n, "gens line lists no generators"));
                }
                gens = Some(list);
            }
            "edge" => {
                let Some(gens) = gens.as_ref() else {
                    return Err(ParseError::at(n, "edge before the gens line"));
                };
                let (Some(s), Some(t), Some(m), None) =
                    (tokens.next(), tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(ParseError::at(n, "expected: edge s t m"));
                };
                let s = GeneratorId::new(s).map_err(|e| ParseError::at(n, e.to_string()))?;
                let t = GeneratorId::new(t).map_err(|e| ParseError::at(n, e.to_string()))?;
                for g in [&s, &t] {
                    if !gens.contains(g) {
                        return Err(ParseError::at(n, format!("unknown generator {}", g)));
                    }
                }
                if s == t {
                    return Err(ParseError::at(n, format!("self pair {}", s)));
                }
                let key = (s.clone().min(t.clone()), s.clone().max(t.clone()));
                if !seen_pairs.insert(key) {
                    return Err(ParseError::at(n, format!("duplicate edge {} {}", s, t)));
                }
                let m = parse_label(m).map_err(|msg| ParseError::at(n, msg))?;
                edges.push((s, t, m));
            }
            other => {
                return Err(ParseError::at(n, format!("unknown directive {:?}", other)));
            }
        }
    }

    let gens = gens.ok_or_else(|| ParseError::of("missing gens line"))?;
    CoxeterSystem::new(gens, edges).map_err(|e| ParseError::of(e.to_string()))
}

/// The canonical text form: sorted generators, sorted finite edges.
pub fn serialize_cox(sys: &CoxeterSystem) -> String {
    let mut out = String::from("gens");
    for g in sys.generators() {
        out.push(' ');
        out.push_str(g.as_str());
    }
    out.push('\n');
    for (s, t, m) in sys.finite_pairs() {
        out.push_str(&format!("edge {} {} {}\n", s, t, m));
    }
    out
}

/// The system as a JSON value: {"generators":[...],"edges":[[s,t,m],...]}.
pub fn system_value(sys: &CoxeterSystem) -> Value {
    let gens: Vec<Value> = sys.generators().iter().map(|g| json!(g.as_str())).collect();
    let edges: Vec<Value> = sys
        .finite_pairs()
        .map(|(s, t, m)| json!([s.as_str(), t.as_str(), m]))
        .collect();
    json!({ "generators": gens, "edges": edges })
}

/// Parses the JSON mirror. Edge labels may be integers or the string "inf".
pub fn parse_json(text: &str) -> Result<CoxeterSystem, ParseError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ParseError::of(format!("bad JSON: {}", e)))?;
    let obj = value
        .as_object()
        .ok_or_else(|| ParseError::of("top level is not an object"))?;
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::of("missing \"generators\" array"))?;
    let gens: Vec<GeneratorId> = gens
        .iter()
        .map(|v| {
            let name = v
                .as_str()
                .ok_or_else(|| ParseError::of("generator is not a string"))?;
            GeneratorId::new(name).map_err(|e| ParseError::of(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let mut edges = Vec::new();
    for (i, edge) in obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::of("missing \"edges\" array"))?
        .iter()
        .enumerate()
    {
        let bad = || ParseError::of(format!("edge {} is not [s, t, m]", i));
        let parts = edge.as_array().ok_or_else(bad)?;
        let [s, t, m] = parts.as_slice() else {
            return Err(bad());
        };
        let s = GeneratorId::new(s.as_str().ok_or_else(bad)?)
            .map_err(|e| ParseError::of(e.to_string()))?;
        let t = GeneratorId::new(t.as_str().ok_or_else(bad)?)
            .map_err(|e| ParseError::of(e.to_string()))?;
        let m = match m {
            Value::String(s) if s == "inf" => OrderLabel::Infinite,
            Value::Number(n) => match n.as_u64() {
                Some(m) if (2..=u32::MAX as u64).contains(&m) => OrderLabel::Finite(m as u32),
                _ => {
                    return Err(ParseError::of(format!(
                        "edge {}: order {} is invalid",
                        i, n
                    )))
                }
            },
            _ => return Err(bad()),
        };
        edges.push((s, t, m));
    }
    CoxeterSystem::new(gens, edges).map_err(|e| ParseError::of(e.to_string()))
}

/// Pretty JSON text for the system, newline terminated.
pub fn serialize_json(sys: &CoxeterSystem) -> String {
    let mut text = serde_json::to_string_pretty(&system_value(sys)).expect("value serializes");
    text.push('\n');
    text
}

/// Parses by syntax: files named `*.json` use the JSON mirror.
pub fn parse_auto(text: &str, json: bool) -> Result<CoxeterSystem, ParseError> {
    if json {
        parse_json(text)
    } else {
        parse_cox(text)
    }
}

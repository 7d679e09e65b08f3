//! Line-oriented output records and their table rendering.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use ulrich_core::ulrich::UlrichCandidate;
use ulrich_core::{DivisorClass, UlrichVerdict};

/// Integer that serializes as a JSON number when it fits in `i64`, else as
/// a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Num(pub BigInt);

impl From<BigInt> for Num {
    fn from(v: BigInt) -> Self {
        Num(v)
    }
}

impl From<&BigInt> for Num {
    fn from(v: &BigInt) -> Self {
        Num(v.clone())
    }
}

impl From<i64> for Num {
    fn from(v: i64) -> Self {
        Num(BigInt::from(v))
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(Num(v.into())),
            Repr::Text(t) => t
                .parse()
                .map(Num)
                .map_err(|_| serde::de::Error::custom(format!("not an integer: {t:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub family: String,
    pub a: Num,
    pub b: Num,
    pub u_degree: Num,
}

impl From<&UlrichCandidate> for ClassEntry {
    fn from(c: &UlrichCandidate) -> Self {
        ClassEntry {
            family: c.family.as_str().to_owned(),
            a: (&c.class.a).into(),
            b: (&c.class.b).into(),
            u_degree: (&c.u_degree).into(),
        }
    }
}

/// `{"a": .., "b": ..}` for a divisor class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPair {
    pub a: Num,
    pub b: Num,
}

impl From<&DivisorClass> for ClassPair {
    fn from(d: &DivisorClass) -> Self {
        ClassPair {
            a: (&d.a).into(),
            b: (&d.b).into(),
        }
    }
}

/// One verdict row. The key set is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub g: Num,
    pub e: Num,
    pub a: Num,
    pub b: Num,
    pub verdict: String,
    pub citation: String,
    pub classes: Vec<ClassEntry>,
    pub family_dim: Option<Num>,
    pub notes: Vec<String>,
}

pub const ERROR_VERDICT: &str = "ERROR";

impl Record {
    pub fn from_verdict(
        key: [&BigInt; 4],
        verdict: &UlrichVerdict,
        classes: Vec<ClassEntry>,
    ) -> Self {
        let mut notes = Vec::new();
        if verdict.assumptions.bundle {
            notes.push("assumes general bundle".to_owned());
        }
        if verdict.assumptions.curve {
            notes.push("assumes general curve".to_owned());
        }
        notes.extend(verdict.notes.iter().cloned());
        Record {
            g: key[0].into(),
            e: key[1].into(),
            a: key[2].into(),
            b: key[3].into(),
            verdict: verdict.outcome.as_str().to_owned(),
            citation: verdict.citation.slug().to_owned(),
            classes,
            family_dim: verdict.family_dimension.as_ref().map(Num::from),
            notes,
        }
    }

    pub fn error(key: [&BigInt; 4], message: String) -> Self {
        Record {
            g: key[0].into(),
            e: key[1].into(),
            a: key[2].into(),
            b: key[3].into(),
            verdict: ERROR_VERDICT.to_owned(),
            citation: String::new(),
            classes: Vec::new(),
            family_dim: None,
            notes: vec![message],
        }
    }
}

pub fn to_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("records serialize")
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_owned(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".to_owned(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join("; "),
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, v)| format!("{k}={}", cell(v)))
                .collect();
            format!("({})", parts.join(" "))
        }
        other => other.to_string(),
    }
}

/// Aligned columns separated by ` | `, headed by the union of keys in first
/// appearance order.
pub fn render_table(rows: &[Value]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for row in rows {
        if let Value::Object(map) = row {
            for k in map.keys() {
                if !columns.contains(k) {
                    columns.push(k.clone());
                }
            }
        }
    }
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            columns
                .iter()
                .map(|c| row.get(c).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for line in &body {
        for (w, c) in widths.iter_mut().zip(line) {
            *w = (*w).max(c.chars().count());
        }
    }
    let fmt_line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join(" | ").trim_end().to_owned()
    };
    let mut out = String::new();
    if columns.is_empty() {
        return out;
    }
    out.push_str(&fmt_line(&columns));
    out.push('\n');
    for line in &body {
        out.push_str(&fmt_line(line));
        out.push('\n');
    }
    out
}

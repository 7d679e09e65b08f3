//! One function per subcommand. Each returns the records it would print.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use ulrich_core::moduli::{
    strata, sym_power_invariants, theta_proper_status, theta_target, ThetaTarget,
};
use ulrich_core::rank2::{
    half_split_extension, semistable_family_bound, special_target, threshold_extension,
    threshold_family_dimension, ExtensionDatum, HALF_SPLIT_WORST_CASE_NOTE,
};
use ulrich_core::ulrich::{
    brute_force_ulrich_g0, candidate_classes, d_invariant, existence_verdict,
    numerical_ulrich_check, ulrich_dual,
};
use ulrich_core::{DivisorClass, Genericity, Polarization, RuledSurfaceParams};

use crate::error::{CliError, CliResult};
use crate::record::{ClassEntry, ClassPair, Num, Record};

fn setup(
    g: &BigInt,
    e: &BigInt,
    a: &BigInt,
    b: &BigInt,
) -> CliResult<(RuledSurfaceParams, Polarization)> {
    let s = RuledSurfaceParams::new(g.clone(), e.clone())?;
    let h = Polarization::new(DivisorClass::new(a.clone(), b.clone()))?;
    Ok((s, h))
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize")
}

/// Verdict row for `(g, e, a, b)`, with the candidate classes when line
/// bundles exist.
pub fn verdict_record(key: [&BigInt; 4], flags: Genericity) -> CliResult<Record> {
    let (s, h) = setup(key[0], key[1], key[2], key[3])?;
    let verdict = existence_verdict(&s, &h, flags)?;
    let classes = if verdict.outcome.exists() {
        candidate_classes(&s, &h)?
            .iter()
            .map(ClassEntry::from)
            .collect()
    } else {
        Vec::new()
    };
    Ok(Record::from_verdict(key, &verdict, classes))
}

pub fn cmd_verdict(key: [&BigInt; 4], flags: Genericity) -> CliResult<Vec<Value>> {
    Ok(vec![value(&verdict_record(key, flags)?)])
}

pub fn cmd_classes(key: [&BigInt; 4]) -> CliResult<Vec<Value>> {
    let (s, h) = setup(key[0], key[1], key[2], key[3])?;
    let d = d_invariant(&s, h.a())?;
    let cands = candidate_classes(&s, &h)?;
    let mut numerical = true;
    for c in &cands {
        numerical &= numerical_ulrich_check(&s, &h, &c.class)?;
    }
    let classes: Vec<ClassEntry> = cands.iter().map(ClassEntry::from).collect();
    Ok(vec![json!({
        "g": Num::from(key[0]),
        "e": Num::from(key[1]),
        "a": Num::from(key[2]),
        "b": Num::from(key[3]),
        "d": d.to_integer().map(Num),
        "classes": classes,
        "numerical_check": numerical,
        "genericity_required": cands[0].genericity_required,
    })])
}

pub fn cmd_dual(key: [&BigInt; 4], class: &DivisorClass) -> CliResult<Vec<Value>> {
    let (s, h) = setup(key[0], key[1], key[2], key[3])?;
    let dual = ulrich_dual(&s, &h, class);
    Ok(vec![json!({
        "g": Num::from(key[0]),
        "e": Num::from(key[1]),
        "a": Num::from(key[2]),
        "b": Num::from(key[3]),
        "class": ClassPair::from(class),
        "dual": ClassPair::from(&dual),
        "numerical_check": numerical_ulrich_check(&s, &h, class)?,
    })])
}

fn datum_json(s: &RuledSurfaceParams, d: &ExtensionDatum) -> Value {
    json!({
        "sub": ClassPair::from(&d.sub),
        "quot": ClassPair::from(&d.quot),
        "z_degree": Num::from(&d.z_degree),
        "v_degree": Num::from(&d.generic_v_degree),
        "c2": Num::from(d.c2(s)),
    })
}

/// Picks the threshold construction when its degree bound holds, else the
/// half-split one; fails naming both hypotheses when neither applies.
pub fn cmd_rank2(key: [&BigInt; 4]) -> CliResult<Vec<Value>> {
    let (s, h) = setup(key[0], key[1], key[2], key[3])?;
    let target = special_target(&s, &h)?;
    let mut notes = Vec::new();
    if !s.very_ample_necessary(&h) {
        notes.push("h fails the necessary very-ampleness test".to_owned());
    }
    let threshold = threshold_extension(&s, &h);
    let threshold_reason = match &threshold {
        Ok(r) if r.sufficient => None,
        Ok(r) => Some(format!(
            "threshold construction: b = {} does not exceed {}",
            h.b(),
            r.threshold
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default()
        )),
        Err(ulrich_core::Error::Hypothesis(m)) => Some(format!("threshold construction: {m}")),
        Err(e) => return Err(e.clone().into()),
    };
    let base = json!({
        "g": Num::from(key[0]),
        "e": Num::from(key[1]),
        "a": Num::from(key[2]),
        "b": Num::from(key[3]),
        "c1": ClassPair::from(&target.c1),
        "c2": Num::from(&target.c2),
    });
    let Value::Object(mut out) = base else {
        unreachable!()
    };
    match (threshold, threshold_reason) {
        (Ok(report), None) => {
            out.insert("construction".into(), "threshold".into());
            out.insert("datum".into(), datum_json(&s, &report.datum));
            out.insert("sufficient".into(), true.into());
            out.insert(
                "threshold".into(),
                report.threshold.map(|t| t.to_string()).into(),
            );
            out.insert("stability".into(), report.stability.as_str().into());
            out.insert(
                "family_dim".into(),
                value(&Num::from(threshold_family_dimension(&s, &h))),
            );
            let bound = match semistable_family_bound(&s, &h) {
                Ok(b) => Value::String(b.bound.to_string()),
                Err(ulrich_core::Error::Hypothesis(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            out.insert("semistable_bound".into(), bound);
        }
        (_, Some(reason)) => match half_split_extension(&s, &h) {
            Ok(report) => {
                out.insert("construction".into(), "half-split".into());
                out.insert("datum".into(), datum_json(&s, &report.datum));
                out.insert("sufficient".into(), true.into());
                out.insert("alpha".into(), value(&Num::from(&report.alpha)));
                out.insert("epsilon".into(), value(&Num::from(&report.epsilon)));
                out.insert("family_dim".into(), Value::Null);
                out.insert("semistable_bound".into(), Value::Null);
                notes.push(reason);
                notes.push(HALF_SPLIT_WORST_CASE_NOTE.to_owned());
            }
            Err(ulrich_core::Error::Hypothesis(m)) => {
                return Err(CliError::Usage(format!(
                    "no rank-2 construction applies: {reason}; half-split construction: {m}"
                )))
            }
            Err(e) => return Err(e.into()),
        },
        (Err(_), None) => unreachable!("threshold errors always carry a reason"),
    }
    out.insert("notes".into(), value(&notes));
    Ok(vec![Value::Object(out)])
}

/// Short rank-2 summary used as a sweep note.
pub fn rank2_summary(key: [&BigInt; 4]) -> String {
    match cmd_rank2(key) {
        Ok(rows) => {
            let r = &rows[0];
            format!(
                "rank2: {} c2 = {} deg Z = {}",
                r["construction"].as_str().unwrap_or(""),
                r["c2"],
                r["datum"]["z_degree"]
            )
        }
        Err(e) => format!("rank2: none ({e})"),
    }
}

/// Brute-force Ulrich line classes on `F_e`, one record per class, then a
/// summary comparing them with the verdict's candidates.
pub fn cmd_oracle(e: &BigInt, a: &BigInt, b: &BigInt, limit: u32) -> CliResult<Vec<Value>> {
    let s = RuledSurfaceParams::hirzebruch(e.clone())?;
    let h = Polarization::new(DivisorClass::new(a.clone(), b.clone()))?;
    let found = brute_force_ulrich_g0(&s, &h, limit)?;
    let cands = candidate_classes(&s, &h).ok();
    let family = |d: &DivisorClass| {
        cands
            .iter()
            .flatten()
            .find(|c| c.class == *d)
            .map(|c| c.family.as_str())
    };
    let mut rows: Vec<Value> = found
        .iter()
        .map(|d| {
            json!({
                "kind": "class",
                "a": Num::from(&d.a),
                "b": Num::from(&d.b),
                "family": family(d),
            })
        })
        .collect();
    let (verdict, expected) = match existence_verdict(&s, &h, Genericity::NONE) {
        Ok(v) => {
            let mut exp: Vec<DivisorClass> = if v.outcome.exists() {
                cands.iter().flatten().map(|c| c.class.clone()).collect()
            } else {
                Vec::new()
            };
            exp.sort();
            exp.dedup();
            (Value::from(v.outcome.as_str()), Some(exp))
        }
        Err(err) => (Value::from(format!("{err}")), None),
    };
    rows.push(json!({
        "kind": "summary",
        "e": Num::from(e),
        "h": ClassPair::from(h.class()),
        "grid_limit": limit,
        "found": found.len(),
        "verdict": verdict,
        "agrees": expected.map(|exp| exp == found),
    }));
    Ok(rows)
}

pub fn cmd_strata(g: &BigInt, r: &BigInt, d: &BigInt, r_prime: &BigInt) -> CliResult<Vec<Value>> {
    Ok(strata(g, r, d, r_prime)?
        .iter()
        .map(|st| {
            json!({
                "g": Num::from(&st.g),
                "r": Num::from(&st.r),
                "d": Num::from(&st.d),
                "r_prime": Num::from(&st.r_prime),
                "s": Num::from(&st.s),
                "dimension": Num::from(&st.dimension),
                "in_closure_of": st.in_closure_of.as_ref().map(Num::from),
            })
        })
        .collect())
}

fn target_json(t: &ThetaTarget) -> Value {
    json!({
        "j": Num::from(&t.j),
        "r1": Num::from(&t.r1),
        "d1": Num::from(&t.d1),
        "target": t.to_string(),
    })
}

pub fn cmd_theta_raw(g: &BigInt, r: &BigInt, d: &BigInt) -> CliResult<Vec<Value>> {
    let t = theta_target(g, r, d)?;
    let Value::Object(mut out) = json!({"g": Num::from(g), "r": Num::from(r), "d": Num::from(d)})
    else {
        unreachable!()
    };
    if let Value::Object(rest) = target_json(&t) {
        out.extend(rest);
    }
    Ok(vec![Value::Object(out)])
}

/// Theta data for `S^(a-1)E`: its target space and whether a proper theta
/// divisor is known.
pub fn cmd_theta(g: &BigInt, e: &BigInt, a: &BigInt, flags: Genericity) -> CliResult<Vec<Value>> {
    let s = RuledSurfaceParams::new(g.clone(), e.clone())?;
    let inv = sym_power_invariants(&s, a)?;
    let t = theta_target(g, &inv.rank, &inv.degree)?;
    let (status, citation, conjectural) = if *a >= BigInt::from(2) {
        let st = theta_proper_status(&s, a, flags)?;
        (
            Value::from(st.status.as_str()),
            Value::from(st.citation.slug()),
            st.status.conjectured_for_every_curve(),
        )
    } else {
        (Value::Null, Value::Null, false)
    };
    let Value::Object(mut out) = json!({
        "g": Num::from(g),
        "e": Num::from(e),
        "a": Num::from(a),
        "rank": Num::from(&inv.rank),
        "degree": Num::from(&inv.degree),
        "twist_degree": inv.twist_degree.value.to_string(),
    }) else {
        unreachable!()
    };
    if let Value::Object(rest) = target_json(&t) {
        out.extend(rest);
    }
    out.insert("status".into(), status);
    out.insert("citation".into(), citation);
    out.insert("every_curve_conjectural".into(), conjectural.into());
    Ok(vec![Value::Object(out)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    fn refs(k: &[BigInt; 4]) -> [&BigInt; 4] {
        [&k[0], &k[1], &k[2], &k[3]]
    }

    #[test]
    fn verdict_examples() {
        let k = key([1, -1, 3, 5]);
        let r = verdict_record(refs(&k), Genericity::NONE).unwrap();
        assert_eq!(r.verdict, "EXISTS");
        assert_eq!(r.classes.len(), 2);
        let k = key([3, -3, 4, 9]);
        let r = verdict_record(refs(&k), Genericity::NONE).unwrap();
        assert_eq!(
            (r.verdict.as_str(), r.citation.as_str()),
            ("NOT_EXISTS", "parity")
        );
        let k = key([0, -1, 1, 1]);
        assert_eq!(
            verdict_record(refs(&k), Genericity::NONE)
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn rank2_choices() {
        let k = key([1, 0, 2, 2]);
        let r = &cmd_rank2(refs(&k)).unwrap()[0];
        assert_eq!(r["construction"], "threshold");
        assert_eq!(r["c2"], 14);
        assert_eq!(r["family_dim"], 8);
        assert_eq!(r["semistable_bound"], "1");
        assert_eq!(r["datum"]["z_degree"], 2);
        let k = key([5, 0, 5, 4]);
        let r = &cmd_rank2(refs(&k)).unwrap()[0];
        assert_eq!(r["construction"], "half-split");
        let k = key([0, 0, 1, 1]);
        let err = cmd_rank2(refs(&k)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("g >= 1"));
    }

    #[test]
    fn oracle_examples() {
        let rows = cmd_oracle(&0.into(), &1.into(), &1.into(), 10).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[2]["agrees"], true);
        let rows = cmd_oracle(&2.into(), &2.into(), &5.into(), 12).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0]["found"], 0);
        assert_eq!(rows[0]["agrees"], true);
    }

    #[test]
    fn theta_record() {
        let rows = cmd_theta(
            &3.into(),
            &(-2).into(),
            &4.into(),
            Genericity {
                bundle: true,
                curve: false,
            },
        )
        .unwrap();
        assert_eq!(rows[0]["status"], "PROPER_GENERIC_BUNDLE");
        assert_eq!(rows[0]["target"], "Pic^-1");
    }
}

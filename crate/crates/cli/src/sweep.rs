//! Cross-product verdict evaluation over integer ranges.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use ulrich_core::{Error, Genericity};

use crate::commands::{rank2_summary, verdict_record};
use crate::error::{CliError, CliResult};
use crate::record::Record;

/// Inclusive integer interval; `lo > hi` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn iter(self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn is_empty(self) -> bool {
        self.lo > self.hi
    }
}

impl FromStr for IntRange {
    type Err = String;

    /// `n`, `lo..hi` or `lo:hi`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad integer {t:?} in range {s:?}"))
        };
        let split = s
            .find("..")
            .map(|i| (&s[..i], &s[i + 2..]))
            .or_else(|| s.find(':').map(|i| (&s[..i], &s[i + 1..])));
        match split {
            Some((lo, hi)) => Ok(IntRange::new(parse(lo)?, parse(hi)?)),
            None => parse(s).map(IntRange::single),
        }
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub g: IntRange,
    pub e: IntRange,
    pub a: IntRange,
    pub b: IntRange,
    pub flags: Genericity,
    pub rank2: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepOutput {
    pub rows: Vec<Record>,
    /// Rows left out, by reason.
    pub skipped: BTreeMap<&'static str, usize>,
}

pub const NAGATA_SKIP: &str = "nagata";

enum Row {
    Record(Box<Record>),
    Skip(&'static str),
}

fn evaluate(key: (i64, i64, i64, i64), spec: &SweepSpec) -> Row {
    let (g, e, a, b) = key;
    if e < -g || (g == 0 && e < 0) {
        return Row::Skip(NAGATA_SKIP);
    }
    let big = [g, e, a, b].map(BigInt::from);
    let refs = [&big[0], &big[1], &big[2], &big[3]];
    let mut record = match verdict_record(refs, spec.flags) {
        Ok(r) => r,
        Err(CliError::Core(Error::Nagata { .. })) => return Row::Skip(NAGATA_SKIP),
        Err(err) => Record::error(refs, err.to_string()),
    };
    if spec.rank2 {
        record.notes.push(rank2_summary(refs));
    }
    Row::Record(Box::new(record))
}

/// Rows come out in lexicographic `(g, e, a, b)` order whatever order they
/// were evaluated in. Per-row failures become `ERROR` rows.
pub fn run_sweep(spec: &SweepSpec) -> CliResult<SweepOutput> {
    if spec.g.lo < 0 && !spec.g.is_empty() {
        return Err(CliError::Usage(format!(
            "genus range {} contains negative values",
            spec.g
        )));
    }
    if spec.a.lo < 1 && !spec.a.is_empty() {
        return Err(CliError::Usage(format!(
            "range for a = {} must start at 1 or above",
            spec.a
        )));
    }
    let keys: Vec<(i64, i64, i64, i64)> = spec
        .g
        .iter()
        .flat_map(|g| {
            spec.e.iter().flat_map(move |e| {
                spec.a
                    .iter()
                    .flat_map(move |a| spec.b.iter().map(move |b| (g, e, a, b)))
            })
        })
        .collect();
    let evaluated: Vec<Row> = keys.par_iter().map(|k| evaluate(*k, spec)).collect();
    let mut out = SweepOutput::default();
    for row in evaluated {
        match row {
            Row::Record(r) => out.rows.push(*r),
            Row::Skip(reason) => *out.skipped.entry(reason).or_default() += 1,
        }
    }
    Ok(out)
}

//! JSONL parameter store: `{"n":2,"q":7,"c":"6","a":["2","3"],"label":"optional"}` per line.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::SatakeParam;
use crate::conjugacy::{GSpinTorusPoint, TorusPointJson};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StoreRecord {
    pub n: usize,
    pub q: u64,
    pub c: String,
    pub a: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl StoreRecord {
    pub fn from_param<S: Scalar>(p: &SatakeParam<S>) -> Self {
        let j = p.class().to_json();
        Self {
            n: j.n,
            q: p.q(),
            c: j.c,
            a: j.a,
            label: p.label.clone(),
        }
    }

    pub fn to_param<S: Scalar>(&self) -> Result<SatakeParam<S>> {
        let j = TorusPointJson {
            n: self.n,
            c: self.c.clone(),
            a: self.a.clone(),
        };
        SatakeParam::new(self.q, &GSpinTorusPoint::from_json(&j)?, self.label.clone())
    }
}

fn at_line(line: usize, e: Error) -> Error {
    Error::Parse(format!("line {line}: {e}"))
}

/// Parses one record; `line` is only used in error messages.
pub fn parse_store_line<S: Scalar>(text: &str, line: usize) -> Result<SatakeParam<S>> {
    let rec: StoreRecord =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
    rec.to_param().map_err(|e| at_line(line, e))
}

/// Parses a whole store, skipping blank lines and rejecting repeated `(q, label)` pairs.
pub fn parse_store<S: Scalar>(text: &str) -> Result<Vec<SatakeParam<S>>> {
    let mut seen: BTreeSet<(u64, Option<String>)> = BTreeSet::new();
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let p: SatakeParam<S> = parse_store_line(raw, i + 1)?;
        if !seen.insert((p.q(), p.label.clone())) {
            return Err(Error::Parse(format!(
                "line {}: duplicate record for q = {} and label {:?}",
                i + 1,
                p.q(),
                p.label()
            )));
        }
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    #[test]
    fn roundtrip_and_canonical_class() {
        let text = "{\"n\":2,\"q\":7,\"c\":\"6\",\"a\":[\"3\",\"2\"],\"label\":\"x\"}\n\n{\"n\":1,\"q\":2,\"c\":\"1\",\"a\":[\"1/2\"]}\n";
        let ps: Vec<SatakeParam<Rational>> = parse_store(text).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].label(), Some("x"));
        let rec = StoreRecord::from_param(&ps[0]);
        assert_eq!(rec.to_param::<Rational>().unwrap(), ps[0]);
        let mut spin = ps[0].eigenvalues(crate::satake::Rep::Spin);
        spin.sort();
        assert_eq!(spin, vec![int(1), int(2), int(3), int(6)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = "{\"n\":1,\"q\":2,\"c\":\"1\",\"a\":[\"2\"]}\n{\"n\":1,\"q\":2,\"c\":\"3\",\"a\":[\"2\"]}";
        let e = parse_store::<Rational>(dup).unwrap_err().to_string();
        assert!(e.contains("line 2") && e.contains("duplicate"), "{e}");
        let bad_q = "{\"n\":1,\"q\":6,\"c\":\"1\",\"a\":[\"2\"]}";
        assert!(parse_store::<Rational>(bad_q)
            .unwrap_err()
            .to_string()
            .contains("line 1"));
        let bad_json = "\n\n{\"n\":1,";
        assert!(parse_store::<Rational>(bad_json)
            .unwrap_err()
            .to_string()
            .contains("line 3"));
        let bad_len = "{\"n\":2,\"q\":2,\"c\":\"1\",\"a\":[\"2\"]}";
        assert!(parse_store::<Rational>(bad_len).is_err());
    }
}

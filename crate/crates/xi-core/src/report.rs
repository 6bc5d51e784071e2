//! Verification reports and their text and JSON renderings.

use std::fmt;

use serde::ser::{Serialize, SerializeMap, Serializer};
use serde::Serialize as DeriveSerialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Named integer parameters, kept in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params(pub Vec<(String, i64)>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.push((name.to_string(), value));
        self
    }

    fn key(&self) -> Vec<i64> {
        self.0.iter().map(|(_, v)| *v).collect()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for Params {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct Counterexample {
    pub check: String,
    pub inputs: Params,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite. `pass` holds iff there are no counterexamples.
#[derive(Clone, Debug, PartialEq, Eq, DeriveSerialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub ranges: Params,
    pub checked: usize,
    pub pass: bool,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    /// Builds a report, sorting counterexamples so that the result does not
    /// depend on how the sweep was sharded.
    pub fn new(
        suite: &str,
        ranges: Params,
        checked: usize,
        mut counterexamples: Vec<Counterexample>,
    ) -> Self {
        counterexamples.sort_by(|x, y| {
            (&x.check, x.inputs.key(), &x.lhs, &x.rhs).cmp(&(&y.check, y.inputs.key(), &y.lhs, &y.rhs))
        });
        Self {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            ranges,
            checked,
            pass: counterexamples.is_empty(),
            counterexamples,
        }
    }

    /// Merges several reports into one named `suite`.
    pub fn combine(suite: &str, parts: Vec<VerifyReport>) -> Self {
        let mut ranges = Params::new();
        let mut checked = 0;
        let mut cex = Vec::new();
        for part in parts {
            for (k, v) in part.ranges.0 {
                if !ranges.0.iter().any(|(k2, _)| *k2 == k) {
                    ranges.0.push((k, v));
                }
            }
            checked += part.checked;
            cex.extend(part.counterexamples.into_iter().map(|mut c| {
                c.check = format!("{}/{}", part.suite, c.check);
                c
            }));
        }
        Self::new(suite, ranges, checked, cex)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "suite: {}\nranges: {}\nchecked: {}\nresult: {}\n",
            self.suite,
            self.ranges,
            self.checked,
            if self.pass { "PASS" } else { "FAIL" }
        );
        for c in &self.counterexamples {
            out.push_str(&format!(
                "counterexample: {} [{}]\n  lhs: {}\n  rhs: {}\n",
                c.check, c.inputs, c.lhs, c.rhs
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cex(check: &str, v: i64) -> Counterexample {
        Counterexample {
            check: check.into(),
            inputs: Params::new().with("n", v),
            lhs: "1".into(),
            rhs: "0".into(),
        }
    }

    #[test]
    fn order_is_canonical() {
        let a = VerifyReport::new("s", Params::new(), 3, vec![cex("b", 1), cex("a", 10), cex("a", 2)]);
        let b = VerifyReport::new("s", Params::new(), 3, vec![cex("a", 2), cex("b", 1), cex("a", 10)]);
        assert_eq!(a, b);
        assert_eq!(a.counterexamples[0].inputs.0[0].1, 2);
        assert!(!a.pass);
    }

    #[test]
    fn json_shape() {
        let r = VerifyReport::new("s", Params::new().with("max_nu", 4), 7, vec![cex("c", 1)]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["ranges"]["max_nu"], 4);
        assert_eq!(v["counterexamples"][0]["inputs"]["n"], 1);
        assert_eq!(v["pass"], false);
    }
}

use std::time::Instant;

use h4_core::golden::{GoldenInt, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::checks::Check;
use crate::context::Context;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    /// Stated in the published literature on these objects.
    Published,
    /// Follows from published values by a short argument.
    Derived,
    /// Holds by construction.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Observation {
    pub name: String,
    pub origin: Origin,
    pub expected: Value,
    pub observed: Value,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub title: String,
    pub status: Status,
    pub elapsed_us: u64,
    pub observations: Vec<Observation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Observations collected by one check.
#[derive(Default)]
pub struct Findings {
    items: Vec<Observation>,
}

impl Findings {
    pub fn expect(
        &mut self,
        name: &str,
        origin: Origin,
        expected: impl Serialize,
        observed: impl Serialize,
    ) {
        let expected = serde_json::to_value(expected).expect("plain data serializes");
        let observed = serde_json::to_value(observed).expect("plain data serializes");
        let status = if expected == observed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.items.push(Observation {
            name: name.to_string(),
            origin,
            expected,
            observed,
            status,
        });
    }

    pub fn holds(&mut self, name: &str, origin: Origin, observed: bool) {
        self.expect(name, origin, true, observed);
    }
}

pub fn golden(g: GoldenInt) -> Value {
    json!([g.a, g.b])
}

pub fn rational(r: Rational) -> Value {
    Value::String(r.to_string())
}

/// Runs checks in the given order and returns the reports sorted by id.
pub fn run_checks(ctx: &Context, checks: &[&Check]) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = checks
        .iter()
        .map(|c| {
            let start = Instant::now();
            let mut f = Findings::default();
            let result = (c.run)(ctx, &mut f);
            let elapsed_us = start.elapsed().as_micros() as u64;
            let error = result.err().map(|e| format!("{e:#}"));
            let ok = error.is_none() && f.items.iter().all(|o| o.status == Status::Pass);
            CheckReport {
                id: c.id.to_string(),
                title: c.title.to_string(),
                status: if ok { Status::Pass } else { Status::Fail },
                elapsed_us,
                observations: f.items,
                error,
            }
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
pub fn to_canonical_json(value: &impl Serialize) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

//! Directive outcomes and their JSON and text renderings.

use serde_json::{json, Map, Value};
use wcpkit_core::{CheckReport, Field, Mor, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// A checked condition failed, or an operation's precondition did not hold.
    Fail,
    /// Malformed input: shapes, fields, scalars.
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    /// The directive or declaration as written, e.g. `check quadruple Q`.
    pub directive: String,
    pub status: Status,
    pub report: Option<CheckReport>,
    pub info: Vec<(String, Value)>,
    pub message: Option<String>,
}

impl Outcome {
    pub fn from_report(directive: String, report: CheckReport, info: Vec<(String, Value)>) -> Self {
        let status = if report.all_passed() {
            Status::Pass
        } else {
            Status::Fail
        };
        Outcome {
            directive,
            status,
            report: Some(report),
            info,
            message: None,
        }
    }

    pub fn from_error(directive: String, e: &wcpkit_core::WcpError) -> Self {
        Outcome {
            directive,
            status: if e.is_shape() {
                Status::Error
            } else {
                Status::Fail
            },
            report: e.report().cloned(),
            info: vec![],
            message: Some(e.to_string()),
        }
    }

    /// Condition name → verdict; a name seen twice passes only if both passed.
    fn verdicts(&self, probes: bool) -> Vec<(String, bool)> {
        let mut out: Vec<(String, bool)> = vec![];
        let Some(r) = &self.report else {
            return out;
        };
        for e in r
            .entries
            .iter()
            .filter(|e| (e.role == Role::Probe) == probes)
        {
            match out.iter_mut().find(|(n, _)| *n == e.name) {
                Some((_, v)) => *v &= e.passed,
                None => out.push((e.name.clone(), e.passed)),
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        let verdict_map = |probes| {
            let mut m = Map::new();
            for (name, ok) in self.verdicts(probes) {
                m.insert(name, json!(if ok { "pass" } else { "fail" }));
            }
            Value::Object(m)
        };
        let failures: Vec<Value> = self
            .report
            .iter()
            .flat_map(|r| &r.entries)
            .filter(|e| e.role != Role::Probe)
            .filter_map(|e| {
                e.failure.as_ref().map(|f| {
                    json!({"name": e.name, "lhs": matrix_json(&f.lhs), "rhs": matrix_json(&f.rhs)})
                })
            })
            .collect();
        let notes: Vec<&String> = self.report.iter().flat_map(|r| &r.notes).collect();
        let mut info = Map::new();
        for (k, v) in &self.info {
            info.insert(k.clone(), v.clone());
        }
        let mut out = Map::new();
        out.insert("directive".into(), json!(self.directive));
        out.insert("status".into(), json!(self.status.as_str()));
        out.insert("conditions".into(), verdict_map(false));
        out.insert("probes".into(), verdict_map(true));
        out.insert("failures".into(), Value::Array(failures));
        out.insert("notes".into(), json!(notes));
        out.insert("info".into(), Value::Object(info));
        if let Some(m) = &self.message {
            out.insert("message".into(), json!(m));
        }
        Value::Object(out)
    }
}

/// Row-major matrix of canonical scalar strings.
pub fn matrix_json(m: &Mor) -> Value {
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(Field::format_scalar).collect())
        .collect();
    json!({"dom": m.dom().to_string(), "cod": m.cod().to_string(), "rows": rows})
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub outcomes: Vec<Outcome>,
}

impl Report {
    /// 0 when everything passed, 1 on a failed condition, 2 on malformed input.
    pub fn exit_code(&self) -> i32 {
        if self.outcomes.iter().any(|o| o.status == Status::Error) {
            2
        } else if self.outcomes.iter().any(|o| o.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    /// Verdict of a named condition across all outcomes.
    pub fn verdict(&self, name: &str) -> Option<bool> {
        let all: Vec<bool> = self
            .outcomes
            .iter()
            .flat_map(|o| o.verdicts(false))
            .filter(|(n, _)| n == name)
            .map(|(_, v)| v)
            .collect();
        (!all.is_empty()).then(|| all.iter().all(|&v| v))
    }

    pub fn to_json(&self) -> Value {
        let ds: Vec<Value> = self.outcomes.iter().map(Outcome::to_json).collect();
        json!({ "directives": ds })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("report values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut push = |line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        for o in &self.outcomes {
            push(format!(
                "== {} [{}]",
                o.directive,
                o.status.as_str().to_uppercase()
            ));
            if let Some(m) = &o.message {
                push(format!("error: {m}"));
            }
            for (name, ok) in o.verdicts(false) {
                push(format!("{name}: {}", if ok { "PASS" } else { "FAIL" }));
            }
            for (name, ok) in o.verdicts(true) {
                push(format!(
                    "{name}: {} (probe)",
                    if ok { "PASS" } else { "FAIL" }
                ));
            }
            for (k, v) in &o.info {
                push(format!("{k} = {v}"));
            }
        }
        let count = |s| self.outcomes.iter().filter(|o| o.status == s).count();
        push(format!(
            "{} directives: {} pass, {} fail, {} error",
            self.outcomes.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Error)
        ));
        out
    }
}

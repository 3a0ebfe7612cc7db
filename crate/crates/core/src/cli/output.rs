//! Machine-readable output records and the plain-text encoding of their
//! payloads.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::DenominationSet;
use crate::oracle::Representation;
use crate::suites::SuiteReport;

/// One JSON object per invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub query: Query,
    pub result: Payload,
    pub backend: String,
    pub elapsed_ms: f64,
}

/// Echo of what was asked. Absent fields are omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub denoms: Option<DenominationSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_k: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: i64,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PayloadKind {
    Integer,
    Count,
    List,
    Reps,
    Table,
    Verify,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Payload {
    Integer(i64),
    Count(u64),
    List(Vec<i64>),
    Reps(Vec<Representation>),
    Table(Vec<TableRow>),
    Verify(Vec<SuiteReport>),
}

impl Payload {
    pub fn kind(&self) -> PayloadKind {
        match self {
            Payload::Integer(_) => PayloadKind::Integer,
            Payload::Count(_) => PayloadKind::Count,
            Payload::List(_) => PayloadKind::List,
            Payload::Reps(_) => PayloadKind::Reps,
            Payload::Table(_) => PayloadKind::Table,
            Payload::Verify(_) => PayloadKind::Verify,
        }
    }

    /// Plain text, one value or row per line, each line LF-terminated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        match self {
            Payload::Integer(v) => line(v.to_string()),
            Payload::Count(v) => line(v.to_string()),
            Payload::List(vs) => vs.iter().for_each(|v| line(v.to_string())),
            Payload::Reps(rs) => rs.iter().for_each(|r| line(r.to_string())),
            Payload::Table(rows) => rows
                .iter()
                .for_each(|r| line(format!("{},{}", r.n, r.count))),
            Payload::Verify(reports) => {
                for r in reports {
                    line(format!(
                        "{} passed={} failed={}",
                        r.suite, r.passed, r.failed
                    ));
                    if let Some(f) = &r.first_failure {
                        line(format!("{} first_failure={f}", r.suite));
                    }
                }
            }
        }
        out
    }

    /// CSV with an `n,count` header; only tables have a CSV form.
    pub fn to_csv(&self) -> Option<String> {
        match self {
            Payload::Table(_) => Some(format!("n,count\n{}", self.to_text())),
            _ => None,
        }
    }

    /// Inverse of [`Payload::to_text`].
    pub fn parse_text(kind: PayloadKind, text: &str) -> Result<Payload> {
        let bad = |l: &str| Error::invalid(format!("unparseable output line {l:?}"));
        let int = |l: &str| l.trim().parse::<i64>().map_err(|_| bad(l));
        let lines = text.lines().filter(|l| !l.is_empty());
        Ok(match kind {
            PayloadKind::Integer => Payload::Integer(int(text)?),
            PayloadKind::Count => Payload::Count(text.trim().parse().map_err(|_| bad(text))?),
            PayloadKind::List => Payload::List(lines.map(int).collect::<Result<_>>()?),
            PayloadKind::Reps => Payload::Reps(
                lines
                    .map(|l| {
                        let inner = l
                            .strip_prefix('(')
                            .and_then(|s| s.strip_suffix(')'))
                            .ok_or_else(|| bad(l))?;
                        inner
                            .split(',')
                            .map(|t| t.parse::<u64>().map_err(|_| bad(l)))
                            .collect::<Result<Vec<_>>>()
                            .map(Representation)
                    })
                    .collect::<Result<_>>()?,
            ),
            PayloadKind::Table => Payload::Table(
                lines
                    .filter(|l| *l != "n,count")
                    .map(|l| {
                        let (n, c) = l.split_once(',').ok_or_else(|| bad(l))?;
                        Ok(TableRow {
                            n: int(n)?,
                            count: c.parse().map_err(|_| bad(l))?,
                        })
                    })
                    .collect::<Result<_>>()?,
            ),
            PayloadKind::Verify => {
                let mut reports: Vec<SuiteReport> = Vec::new();
                for l in lines {
                    let (suite, rest) = l.split_once(' ').ok_or_else(|| bad(l))?;
                    if let Some(f) = rest.strip_prefix("first_failure=") {
                        let last = reports.last_mut().ok_or_else(|| bad(l))?;
                        last.first_failure = Some(f.to_string());
                        continue;
                    }
                    let mut fields = rest.split(' ');
                    let mut take = |prefix: &str| -> Result<u64> {
                        fields
                            .next()
                            .and_then(|f| f.strip_prefix(prefix))
                            .and_then(|v| v.parse().ok())
                            .ok_or_else(|| bad(l))
                    };
                    reports.push(SuiteReport {
                        suite: suite.to_string(),
                        passed: take("passed=")?,
                        failed: take("failed=")?,
                        first_failure: None,
                    });
                }
                Payload::Verify(reports)
            }
        })
    }
}

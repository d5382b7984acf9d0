//! Text and JSON rendering of series, Log tables and verification reports.

use eqhilb::verify::Report;
use eqhilb::{LogSeries, MotivicClass, MotivicSeries};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// `[degree, "coefficient"]` pairs in ascending degree.
fn class_json(c: &MotivicClass) -> Vec<(u32, String)> {
    c.terms().map(|(d, v)| (d, v.to_string())).collect()
}

#[derive(Serialize)]
#[serde(untagged)]
enum Coefficients {
    Classes(Vec<Vec<(u32, String)>>),
    Integers(Vec<String>),
}

#[derive(Serialize)]
struct SeriesJson {
    kind: &'static str,
    order: usize,
    euler: bool,
    coefficients: Coefficients,
}

#[derive(Serialize)]
#[serde(untagged)]
enum LogValue {
    Class(Vec<(u32, String)>),
    Integer(String),
}

#[derive(Serialize)]
struct LogTermJson {
    power: usize,
    coefficient: LogValue,
}

#[derive(Serialize)]
struct LogJson {
    kind: &'static str,
    order: usize,
    euler: bool,
    terms: Vec<LogTermJson>,
}

#[derive(Serialize)]
struct ComparisonJson<'a> {
    label: &'a str,
    expected: &'a str,
    actual: &'a str,
    passed: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    kind: &'static str,
    check: &'static str,
    passed: bool,
    comparisons: Vec<ComparisonJson<'a>>,
    notes: &'a [String],
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn series(s: &MotivicSeries, euler: bool, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            if euler {
                for (k, v) in s.euler().iter().enumerate() {
                    out.push_str(&format!("T^{k}: {v}\n"));
                }
            } else {
                for (k, c) in s.coeffs().iter().enumerate() {
                    out.push_str(&format!("T^{k}: {c}\n"));
                }
            }
            out
        }
        Format::Json => {
            let coefficients = if euler {
                Coefficients::Integers(s.euler().iter().map(|v| v.to_string()).collect())
            } else {
                Coefficients::Classes(s.coeffs().iter().map(class_json).collect())
            };
            to_json(&SeriesJson {
                kind: "series",
                order: s.order(),
                euler,
                coefficients,
            }) + "\n"
        }
    }
}

pub fn log(l: &LogSeries, euler: bool, format: Format) -> String {
    let terms: Vec<(usize, LogValue, String)> = if euler {
        l.euler()
            .into_iter()
            .filter(|(_, v)| *v != num_bigint::BigInt::default())
            .map(|(i, v)| (i, LogValue::Integer(v.to_string()), v.to_string()))
            .collect()
    } else {
        l.support()
            .into_iter()
            .map(|i| {
                let c = l.coefficient(i);
                (i, LogValue::Class(class_json(&c)), c.to_string())
            })
            .collect()
    };
    match format {
        Format::Text => terms.iter().map(|(i, _, text)| format!("T^{i}: {text}\n")).collect(),
        Format::Json => {
            to_json(&LogJson {
                kind: "log",
                order: l.order(),
                euler,
                terms: terms
                    .into_iter()
                    .map(|(power, coefficient, _)| LogTermJson { power, coefficient })
                    .collect(),
            }) + "\n"
        }
    }
}

pub fn report(r: &Report, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for c in &r.comparisons {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                out.push_str(&format!("{mark} {}: {}\n", c.label, c.actual));
                if !c.passed {
                    out.push_str(&format!("     expected: {}\n", c.expected));
                }
            }
            for note in &r.notes {
                out.push_str(&format!("note: {note}\n"));
            }
            let failed = r.comparisons.iter().filter(|c| !c.passed).count();
            out.push_str(&format!(
                "{} {}: {} comparisons, {} failed\n",
                if r.passed() { "PASS" } else { "FAIL" },
                r.check,
                r.comparisons.len(),
                failed
            ));
            out
        }
        Format::Json => {
            to_json(&ReportJson {
                kind: "verify",
                check: r.check.name(),
                passed: r.passed(),
                comparisons: r
                    .comparisons
                    .iter()
                    .map(|c| ComparisonJson {
                        label: &c.label,
                        expected: &c.expected,
                        actual: &c.actual,
                        passed: c.passed,
                    })
                    .collect(),
                notes: &r.notes,
            }) + "\n"
        }
    }
}

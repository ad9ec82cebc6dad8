//! Command reports, rendered as text or as `report-1` JSON.

use num_rational::BigRational;
use resgraph_core::{format_rational, Cycle, DualGraph, QCycle};
use serde_json::{Map, Value};

use crate::document::AnalyticHints;

pub const REPORT_SCHEMA: &str = "report-1";

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Null,
    Bool(bool),
    Int(i64),
    Str(String),
    /// Nonzero coefficients by vertex id, with a display form.
    Cycle {
        terms: Vec<(String, i64)>,
        text: String,
    },
    QCycle {
        terms: Vec<(String, String)>,
        text: String,
    },
    List(Vec<Field>),
    Map(Vec<(String, Field)>),
}

impl Field {
    pub fn cycle(graph: &DualGraph, c: &Cycle) -> Field {
        let terms = graph
            .ids()
            .zip(c.coeffs())
            .filter(|(_, &k)| k != 0)
            .map(|(id, &k)| (id.to_string(), k))
            .collect();
        Field::Cycle {
            terms,
            text: graph.format_cycle(c),
        }
    }

    pub fn qcycle(graph: &DualGraph, c: &QCycle) -> Field {
        let mut terms = Vec::new();
        let mut text = Vec::new();
        for (id, k) in graph.ids().zip(c.coeffs()) {
            if k == &BigRational::default() {
                continue;
            }
            terms.push((id.to_string(), format_rational(k)));
            text.push(if k.is_integer() {
                match k.to_integer().to_string().as_str() {
                    "1" => id.to_string(),
                    "-1" => format!("-{id}"),
                    n => format!("{n}{id}"),
                }
            } else {
                format!("({}){id}", format_rational(k))
            });
        }
        let text = if text.is_empty() {
            "0".to_string()
        } else {
            text.join(" + ").replace("+ -", "- ")
        };
        Field::QCycle { terms, text }
    }

    pub fn rational(r: &BigRational) -> Field {
        Field::Str(format_rational(r))
    }

    pub fn ids(graph: &DualGraph, indices: &[usize]) -> Field {
        Field::List(
            indices
                .iter()
                .map(|&i| Field::Str(graph.vertex(i).id.clone()))
                .collect(),
        )
    }

    pub fn str(s: impl Into<String>) -> Field {
        Field::Str(s.into())
    }

    pub fn opt<T>(value: Option<T>, f: impl FnOnce(T) -> Field) -> Field {
        value.map_or(Field::Null, f)
    }

    fn to_json(&self) -> Value {
        match self {
            Field::Null => Value::Null,
            Field::Bool(b) => Value::Bool(*b),
            Field::Int(n) => Value::from(*n),
            Field::Str(s) => Value::String(s.clone()),
            Field::Cycle { terms, .. } => Value::Object(
                terms
                    .iter()
                    .map(|(id, k)| (id.clone(), Value::from(*k)))
                    .collect(),
            ),
            Field::QCycle { terms, .. } => Value::Object(
                terms
                    .iter()
                    .map(|(id, k)| (id.clone(), Value::String(k.clone())))
                    .collect(),
            ),
            Field::List(items) => Value::Array(items.iter().map(Field::to_json).collect()),
            Field::Map(entries) => entries_to_json(entries),
        }
    }

    fn scalar_text(&self) -> Option<String> {
        match self {
            Field::Null => Some("-".to_string()),
            Field::Bool(b) => Some(if *b { "yes" } else { "no" }.to_string()),
            Field::Int(n) => Some(n.to_string()),
            Field::Str(s) => Some(s.clone()),
            Field::Cycle { text, .. } | Field::QCycle { text, .. } => Some(text.clone()),
            Field::List(items)
                if items
                    .iter()
                    .all(|f| matches!(f, Field::Str(_) | Field::Int(_))) =>
            {
                Some(format!(
                    "[{}]",
                    items
                        .iter()
                        .filter_map(Field::scalar_text)
                        .collect::<Vec<_>>()
                        .join(", ")
                ))
            }
            Field::List(_) | Field::Map(_) => None,
        }
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

impl From<i64> for Field {
    fn from(n: i64) -> Self {
        Field::Int(n)
    }
}

impl From<u64> for Field {
    fn from(n: u64) -> Self {
        Field::Int(i64::try_from(n).expect("value fits in i64"))
    }
}

impl From<usize> for Field {
    fn from(n: usize) -> Self {
        Field::Int(i64::try_from(n).expect("value fits in i64"))
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Str(s.to_string())
    }
}

fn entries_to_json(entries: &[(String, Field)]) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.clone(), v.to_json());
    }
    Value::Object(map)
}

/// Graph-derived facts and, separately, statements that hold only if the
/// user's analytic data is right.
#[derive(Debug, Clone)]
pub struct Report {
    command: &'static str,
    input: Option<String>,
    combinatorial: Vec<(String, Field)>,
    conditional: Vec<(String, Field)>,
}

impl Report {
    pub fn new(command: &'static str, input: Option<&str>) -> Self {
        Report {
            command,
            input: input.map(str::to_string),
            combinatorial: Vec::new(),
            conditional: Vec::new(),
        }
    }

    pub fn fact(&mut self, key: &str, value: impl Into<Field>) -> &mut Self {
        self.combinatorial.push((key.to_string(), value.into()));
        self
    }

    pub fn conditional(&mut self, key: &str, value: impl Into<Field>) -> &mut Self {
        self.conditional.push((key.to_string(), value.into()));
        self
    }

    /// Records the hints the conditional block relies on.
    pub fn hints(&mut self, hints: &AnalyticHints) -> &mut Self {
        let field = if hints.is_empty() {
            Field::Null
        } else {
            Field::Map(vec![
                ("pg".into(), Field::opt(hints.pg, Field::from)),
                (
                    "gorenstein".into(),
                    Field::opt(hints.gorenstein, Field::from),
                ),
                ("source".into(), "user-asserted".into()),
            ])
        };
        self.conditional("analytic_hints", field)
    }

    pub fn to_json(&self) -> String {
        let mut top = Map::new();
        top.insert("schema".into(), Value::from(REPORT_SCHEMA));
        top.insert("command".into(), Value::from(self.command));
        top.insert(
            "input".into(),
            self.input.clone().map_or(Value::Null, Value::String),
        );
        top.insert("combinatorial".into(), entries_to_json(&self.combinatorial));
        top.insert("conditional".into(), entries_to_json(&self.conditional));
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.input {
            Some(input) => out.push_str(&format!("{} ({input})\n", self.command)),
            None => out.push_str(&format!("{}\n", self.command)),
        }
        out.push_str("combinatorial facts:\n");
        write_entries(&mut out, 2, &self.combinatorial);
        if !self.conditional.is_empty() {
            out.push_str("conditional on analytic hints:\n");
            write_entries(&mut out, 2, &self.conditional);
        }
        out
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.to_json()
        } else {
            self.to_text()
        }
    }
}

fn write_entries(out: &mut String, indent: usize, entries: &[(String, Field)]) {
    for (key, value) in entries {
        write_field(out, indent, &format!("{key}:"), value);
    }
}

fn write_field(out: &mut String, indent: usize, label: &str, value: &Field) {
    let pad = " ".repeat(indent);
    if let Some(s) = value.scalar_text() {
        out.push_str(&format!("{pad}{label} {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{label}\n"));
    match value {
        Field::List(items) => {
            for item in items {
                match item {
                    Field::Map(entries) => {
                        out.push_str(&format!("{pad}  -\n"));
                        write_entries(out, indent + 4, entries);
                    }
                    other => write_field(out, indent + 2, "-", other),
                }
            }
        }
        Field::Map(entries) => write_entries(out, indent + 2, entries),
        _ => unreachable!("scalars handled above"),
    }
}

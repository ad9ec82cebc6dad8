//! Graph documents and input loading.

use std::io::Read;

use resgraph_core::catalog;
use resgraph_core::DualGraph;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: &str = "1";

/// User-asserted analytic data. Never used for combinatorial output.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyticHints {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pg: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gorenstein: Option<bool>,
}

impl AnalyticHints {
    pub fn is_empty(&self) -> bool {
        self.pg.is_none() && self.gorenstein.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphDocument {
    pub schema_version: String,
    pub graph: DualGraph,
    #[serde(skip_serializing_if = "AnalyticHints::is_empty")]
    pub analytic_hints: AnalyticHints,
}

impl GraphDocument {
    pub fn new(graph: DualGraph, analytic_hints: AnalyticHints) -> Self {
        GraphDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            graph,
            analytic_hints,
        }
    }

    /// Accepts a full document or a bare graph object.
    pub fn from_json_str(s: &str) -> CliResult<Self> {
        let value: Value =
            serde_json::from_str(s).map_err(|e| CliError::parse(format!("invalid JSON: {e}")))?;
        let Value::Object(mut map) = value else {
            return Err(CliError::parse("expected a JSON object"));
        };
        if !map.contains_key("graph") {
            let graph = DualGraph::from_json_value(Value::Object(map))?;
            return Ok(GraphDocument::new(graph, AnalyticHints::default()));
        }
        let graph = map.remove("graph").expect("checked above");
        let version = map.remove("schema_version");
        match version {
            Some(Value::String(v)) if v == SCHEMA_VERSION => {}
            Some(other) => {
                return Err(CliError::parse(format!(
                    "unsupported schema_version {other}, expected \"{SCHEMA_VERSION}\""
                )))
            }
            None => return Err(CliError::parse("document is missing schema_version")),
        }
        let hints = match map.remove("analytic_hints") {
            None | Some(Value::Null) => AnalyticHints::default(),
            Some(v) => serde_json::from_value(v)
                .map_err(|e| CliError::parse(format!("invalid analytic_hints: {e}")))?,
        };
        if let Some(key) = map.keys().next() {
            return Err(CliError::parse(format!("unknown document field `{key}`")));
        }
        Ok(GraphDocument::new(
            DualGraph::from_json_value(graph)?,
            hints,
        ))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization cannot fail")
    }
}

/// Analytic data for the built-in graphs, where the singularity is determined.
pub fn catalog_hints(name: &str) -> AnalyticHints {
    let (pg, gorenstein) = match name {
        "A1" | "E8" => (Some(0), Some(true)),
        "simple-elliptic-deg1" | "cusp-triangle" => (Some(1), Some(true)),
        "genus2-deg2" => (Some(3), Some(true)),
        _ => (None, None),
    };
    AnalyticHints { pg, gorenstein }
}

pub fn catalog_document(name: &str) -> CliResult<GraphDocument> {
    let entry = catalog::lookup(name).ok_or_else(|| {
        let known: Vec<&str> = catalog::ENTRIES.iter().map(|e| e.name).collect();
        CliError::parse(format!(
            "unknown catalog graph `{name}`; known: {}",
            known.join(", ")
        ))
    })?;
    Ok(GraphDocument::new(entry.graph(), catalog_hints(name)))
}

/// `catalog:NAME`, `-` for standard input, or a file path.
pub fn load(source: &str) -> CliResult<GraphDocument> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return catalog_document(name);
    }
    let text = if source == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(source).map_err(|e| CliError::Io(format!("{source}: {e}")))?
    };
    GraphDocument::from_json_str(&text)
}

//! Cycle and support arguments.

use std::collections::HashSet;

use resgraph_core::{Cycle, DualGraph, SupportSet};

use crate::error::{CliError, CliResult};

/// `id=value,id=value`; omitted ids are zero. An empty string is the zero cycle.
pub fn parse_cycle(graph: &DualGraph, s: &str) -> CliResult<Cycle> {
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for term in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (id, value) = term
            .split_once('=')
            .ok_or_else(|| CliError::parse(format!("expected `id=value`, got `{term}`")))?;
        let id = id.trim();
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::parse(format!("bad coefficient in `{term}`")))?;
        if !seen.insert(id) {
            return Err(CliError::parse(format!("`{id}` given twice")));
        }
        pairs.push((id, value));
    }
    Ok(graph.cycle_from_pairs(&pairs)?)
}

/// Comma-separated vertex ids spanning a connected subgraph.
pub fn parse_support(graph: &DualGraph, s: &str) -> CliResult<SupportSet> {
    let ids: Vec<&str> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect();
    if ids.is_empty() {
        return Err(CliError::parse("empty support"));
    }
    Ok(SupportSet::from_ids(graph, &ids)?)
}

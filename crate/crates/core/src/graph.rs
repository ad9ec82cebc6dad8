//! Weighted dual graphs of resolutions.
//!
//! A [`DualGraph`] is immutable once built. Construction validates the
//! structure (unique ids, edges between distinct existing vertices, positive
//! multiplicities, connectedness) and records whether the intersection matrix
//! is negative definite. Operations that need negative definiteness check the
//! cached flag and fail with [`Error::NotNegativeDefinite`].

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cycle::{Cycle, GraphTag};
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub self_intersection: i64,
    pub genus: i64,
}

impl Vertex {
    pub fn new(id: impl Into<String>, self_intersection: i64, genus: i64) -> Self {
        Vertex {
            id: id.into(),
            self_intersection,
            genus,
        }
    }

    /// A smooth rational (-1)-curve, contractible by Castelnuovo.
    pub fn is_exceptional_curve_of_first_kind(&self) -> bool {
        self.genus == 0 && self.self_intersection == -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: String,
    pub b: String,
    pub multiplicity: i64,
}

impl Edge {
    pub fn new(a: impl Into<String>, b: impl Into<String>, multiplicity: i64) -> Self {
        Edge {
            a: a.into(),
            b: b.into(),
            multiplicity,
        }
    }
}

/// On-disk form: `{"vertices":[...],"edges":[...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphData {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<String, usize>,
    matrix: Vec<Vec<i64>>,
    negative_definite: bool,
    tag: GraphTag,
}

impl TryFrom<GraphData> for DualGraph {
    type Error = Error;

    fn try_from(data: GraphData) -> Result<Self> {
        DualGraph::new(data.vertices, data.edges)
    }
}

impl From<DualGraph> for GraphData {
    fn from(g: DualGraph) -> Self {
        GraphData {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl PartialEq for DualGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for DualGraph {}

impl DualGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.id.clone()));
            }
            if v.genus < 0 {
                return Err(Error::NegativeGenus {
                    vertex: v.id.clone(),
                    genus: v.genus,
                });
            }
        }

        let n = vertices.len();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, v) in vertices.iter().enumerate() {
            matrix[i][i] = v.self_intersection;
        }
        let mut seen = HashSet::new();
        for e in &edges {
            let a = *index
                .get(&e.a)
                .ok_or_else(|| Error::UnknownVertex(e.a.clone()))?;
            let b = *index
                .get(&e.b)
                .ok_or_else(|| Error::UnknownVertex(e.b.clone()))?;
            if a == b {
                return Err(Error::SelfLoop(e.a.clone()));
            }
            if e.multiplicity < 1 {
                return Err(Error::BadMultiplicity {
                    a: e.a.clone(),
                    b: e.b.clone(),
                    multiplicity: e.multiplicity,
                });
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::DuplicateEdge(e.a.clone(), e.b.clone()));
            }
            matrix[a][b] = e.multiplicity;
            matrix[b][a] = e.multiplicity;
        }

        let minors = linalg::leading_principal_minors(&matrix);
        let negative_definite = minors.len() == n
            && minors.iter().enumerate().all(|(k, m)| {
                // minor of size k+1 must have sign (-1)^(k+1)
                if k % 2 == 0 {
                    m.is_negative()
                } else {
                    m.is_positive()
                }
            });

        let mut hasher = DefaultHasher::new();
        vertices.hash(&mut hasher);
        edges.hash(&mut hasher);
        let tag = GraphTag::new(hasher.finish(), n);

        let graph = DualGraph {
            vertices,
            edges,
            index,
            matrix,
            negative_definite,
            tag,
        };
        let components = graph.components(&vec![true; n]).len();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(graph)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let data: GraphData = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        DualGraph::try_from(data)
    }

    /// Like [`DualGraph::from_json_str`] for an already parsed value. Schema
    /// problems are [`Error::Json`]; structural ones keep their own variant.
    pub fn from_json_value(value: serde_json::Value) -> Result<Self> {
        let data: GraphData =
            serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))?;
        DualGraph::try_from(data)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serialization cannot fail")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require_index(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::domain(format!("unknown vertex `{id}`")))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(|v| v.id.as_str())
    }

    pub fn tag(&self) -> GraphTag {
        self.tag
    }

    /// Intersection matrix: self-intersections on the diagonal, edge
    /// multiplicities off it.
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.matrix[i]
            .iter()
            .enumerate()
            .filter(move |&(j, &m)| j != i && m != 0)
            .map(|(j, &m)| (j, m))
    }

    /// Every leading principal minor has sign `(-1)^k`, evaluated exactly.
    pub fn is_negative_definite(&self) -> bool {
        self.negative_definite
    }

    pub fn ensure_negative_definite(&self) -> Result<()> {
        if self.negative_definite {
            Ok(())
        } else {
            Err(Error::NotNegativeDefinite)
        }
    }

    /// No smooth rational (-1)-curve is present.
    pub fn is_minimal_resolution(&self) -> bool {
        !self
            .vertices
            .iter()
            .any(Vertex::is_exceptional_curve_of_first_kind)
    }

    /// `K·E_i` from adjunction: `-E_i² + 2g_i - 2`.
    pub fn canonical_intersections(&self) -> Vec<i64> {
        self.vertices
            .iter()
            .map(|v| -v.self_intersection + 2 * v.genus - 2)
            .collect()
    }

    /// Connected components of the subgraph induced on `mask`, each sorted,
    /// ordered by smallest member.
    pub fn components(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if !mask[start] || seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for (w, _) in self.neighbors(v) {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn zero_cycle(&self) -> Cycle {
        Cycle::from_parts(self.tag, vec![0; self.len()])
    }

    /// Cycle from coefficients in vertex order.
    pub fn cycle(&self, coeffs: Vec<i64>) -> Result<Cycle> {
        if coeffs.len() != self.len() {
            return Err(Error::domain(format!(
                "cycle has {} coefficients, graph has {} vertices",
                coeffs.len(),
                self.len()
            )));
        }
        Ok(Cycle::from_parts(self.tag, coeffs))
    }

    /// Cycle from `(id, coefficient)` pairs; omitted ids are zero.
    pub fn cycle_from_pairs<S: AsRef<str>>(&self, pairs: &[(S, i64)]) -> Result<Cycle> {
        let mut coeffs = vec![0; self.len()];
        for (id, c) in pairs {
            let i = self.require_index(id.as_ref())?;
            coeffs[i] += c;
        }
        Ok(Cycle::from_parts(self.tag, coeffs))
    }

    /// The irreducible component `E_i` as a cycle.
    pub fn basis(&self, i: usize) -> Cycle {
        let mut coeffs = vec![0; self.len()];
        coeffs[i] = 1;
        Cycle::from_parts(self.tag, coeffs)
    }

    /// Reduced cycle on the given vertex indices.
    pub fn reduced(&self, indices: &[usize]) -> Cycle {
        let mut coeffs = vec![0; self.len()];
        for &i in indices {
            coeffs[i] = 1;
        }
        Cycle::from_parts(self.tag, coeffs)
    }

    pub fn full_reduced(&self) -> Cycle {
        Cycle::from_parts(self.tag, vec![1; self.len()])
    }

    pub(crate) fn check(&self, c: &Cycle) -> Result<()> {
        if c.tag() == self.tag {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// Human-readable sum such as `2E2 + 2E1 + E0`.
    pub fn format_cycle(&self, c: &Cycle) -> String {
        let terms: Vec<String> = c
            .coeffs()
            .iter()
            .zip(self.ids())
            .filter(|(&k, _)| k != 0)
            .map(|(&k, id)| match k {
                1 => id.to_string(),
                -1 => format!("-{id}"),
                _ => format!("{k}{id}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

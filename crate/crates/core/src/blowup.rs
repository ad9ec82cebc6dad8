//! Point blow-ups of a resolution and the pullback of cycles.
//!
//! Old vertices keep their indices in the new graph; the new exceptional
//! (-1)-curve `F` is appended last.

use std::fmt;
use std::str::FromStr;

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::graph::{DualGraph, Edge, Vertex};

/// Where to blow up: a general point of one curve, or a point where two curves meet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Center {
    Free(String),
    Intersection(String, String),
}

impl FromStr for Center {
    type Err = Error;

    /// `id` or `id,id`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        match parts[..] {
            [a] if !a.is_empty() => Ok(Center::Free(a.to_string())),
            [a, b] if !a.is_empty() && !b.is_empty() => {
                Ok(Center::Intersection(a.to_string(), b.to_string()))
            }
            _ => Err(Error::domain(format!("bad blow-up center `{s}`"))),
        }
    }
}

impl fmt::Display for Center {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Center::Free(a) => write!(f, "{a}"),
            Center::Intersection(a, b) => write!(f, "{a},{b}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BlowupRecord {
    pub graph: DualGraph,
    pub new_vertex: usize,
    pub center: Center,
    source: DualGraph,
    center_indices: (usize, Option<usize>),
}

pub fn blow_up(graph: &DualGraph, center: &Center) -> Result<BlowupRecord> {
    let id = (1..)
        .map(|k| format!("F{k}"))
        .find(|id| graph.index_of(id).is_none())
        .unwrap();
    blow_up_named(graph, center, &id)
}

/// Same as [`blow_up`] with an explicit id for the new curve.
pub fn blow_up_named(graph: &DualGraph, center: &Center, new_id: &str) -> Result<BlowupRecord> {
    graph.ensure_negative_definite()?;
    if graph.index_of(new_id).is_some() {
        return Err(Error::domain(format!(
            "vertex id `{new_id}` already in use"
        )));
    }
    let mut vertices: Vec<Vertex> = graph.vertices().to_vec();
    let mut edges: Vec<Edge> = graph.edges().to_vec();
    let center_indices = match center {
        Center::Free(a) => {
            let i = graph.require_index(a)?;
            vertices[i].self_intersection -= 1;
            edges.push(Edge::new(a.clone(), new_id, 1));
            (i, None)
        }
        Center::Intersection(a, b) => {
            let i = graph.require_index(a)?;
            let j = graph.require_index(b)?;
            if i == j || graph.entry(i, j) == 0 {
                return Err(Error::domain(format!("`{a}` and `{b}` do not meet")));
            }
            vertices[i].self_intersection -= 1;
            vertices[j].self_intersection -= 1;
            let pos = edges
                .iter()
                .position(|e| (e.a == *a && e.b == *b) || (e.a == *b && e.b == *a))
                .expect("nonzero matrix entry comes from an edge");
            if edges[pos].multiplicity == 1 {
                edges.remove(pos);
            } else {
                edges[pos].multiplicity -= 1;
            }
            edges.push(Edge::new(a.clone(), new_id, 1));
            edges.push(Edge::new(b.clone(), new_id, 1));
            (i, Some(j))
        }
    };
    vertices.push(Vertex::new(new_id, -1, 0));
    let new_graph = DualGraph::new(vertices, edges)?;
    assert!(
        new_graph.is_negative_definite(),
        "blow-up of a negative definite graph must stay negative definite"
    );
    Ok(BlowupRecord {
        new_vertex: graph.len(),
        graph: new_graph,
        center: center.clone(),
        source: graph.clone(),
        center_indices,
    })
}

impl BlowupRecord {
    /// The graph that was blown up.
    pub fn source_graph(&self) -> &DualGraph {
        &self.source
    }

    pub fn new_id(&self) -> &str {
        &self.graph.vertex(self.new_vertex).id
    }

    /// The exceptional curve `F` as a cycle on the new graph.
    pub fn exceptional_cycle(&self) -> Cycle {
        self.graph.basis(self.new_vertex)
    }

    /// Total transform `φ*D`: unchanged on old curves, and the multiplicity of
    /// `D` at the center on `F`.
    pub fn pullback(&self, d: &Cycle) -> Result<Cycle> {
        if d.tag() != self.source.tag() {
            return Err(Error::GraphMismatch);
        }
        let (i, j) = self.center_indices;
        let at_center = d.get(i) + j.map_or(0, |j| d.get(j));
        let mut coeffs = d.coeffs().to_vec();
        coeffs.push(at_center);
        self.graph.cycle(coeffs)
    }

    /// Checks `K'·φ*E_i = K·E_i`, `K'·F = -1`, `φ*E_i·φ*E_j = E_i·E_j` and
    /// `φ*E_i·F = 0` on the old basis, which covers every cycle by linearity.
    pub fn canonical_pullback_check(&self) -> Result<bool> {
        let old = &self.source;
        let old_k = old.canonical_intersections();
        let f = self.exceptional_cycle();
        let new = &self.graph;
        let mut ok = new.canonical_degree(&f)? == -1 && new.self_intersection(&f)? == -1;
        let pulled: Vec<Cycle> = (0..old.len())
            .map(|i| self.pullback(&old.basis(i)))
            .collect::<Result<_>>()?;
        for (i, pi) in pulled.iter().enumerate() {
            ok &= new.canonical_degree(pi)? == old_k[i];
            ok &= new.intersect(pi, &f)? == 0;
            for (j, pj) in pulled.iter().enumerate() {
                ok &= new.intersect(pi, pj)? == old.entry(i, j);
            }
        }
        Ok(ok)
    }
}

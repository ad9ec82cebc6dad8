//! Built-in example graphs.

use crate::graph::{DualGraph, Edge, Vertex};

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> DualGraph,
}

impl CatalogEntry {
    pub fn graph(&self) -> DualGraph {
        (self.build)()
    }
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "A1",
        summary: "single (-2)-curve of genus 0; rational double point",
        build: a1,
    },
    CatalogEntry {
        name: "E8",
        summary: "E8 tree of eight (-2)-curves; rational double point",
        build: e8,
    },
    CatalogEntry {
        name: "simple-elliptic-deg1",
        summary: "single elliptic curve with self-intersection -1",
        build: simple_elliptic_deg1,
    },
    CatalogEntry {
        name: "laufer-chain",
        summary: "elliptic E2 (-1) - E1 (-2) - E0 (-2); Laufer's pair with p_g 3 and 2",
        build: laufer_chain,
    },
    CatalogEntry {
        name: "genus2-deg2",
        summary: "single genus-2 curve with self-intersection -2; cone over a canonical curve",
        build: genus2_deg2,
    },
    CatalogEntry {
        name: "cusp-triangle",
        summary: "cycle of three rational (-3)-curves; minimally elliptic cusp",
        build: cusp_triangle,
    },
    CatalogEntry {
        name: "nonnegdef",
        summary: "single rational 0-curve; not negative definite (error paths)",
        build: nonnegdef,
    },
];

pub fn lookup(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

fn build(vertices: &[(&str, i64, i64)], edges: &[(&str, &str)]) -> DualGraph {
    DualGraph::new(
        vertices
            .iter()
            .map(|&(id, w, g)| Vertex::new(id, w, g))
            .collect(),
        edges.iter().map(|&(a, b)| Edge::new(a, b, 1)).collect(),
    )
    .expect("catalog graphs are well formed")
}

pub fn a1() -> DualGraph {
    build(&[("E", -2, 0)], &[])
}

/// Bourbaki labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
pub fn e8() -> DualGraph {
    let ids = ["E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"];
    let vertices: Vec<_> = ids.iter().map(|&id| (id, -2, 0)).collect();
    build(
        &vertices,
        &[
            ("E1", "E3"),
            ("E3", "E4"),
            ("E4", "E5"),
            ("E5", "E6"),
            ("E6", "E7"),
            ("E7", "E8"),
            ("E2", "E4"),
        ],
    )
}

pub fn simple_elliptic_deg1() -> DualGraph {
    build(&[("E", -1, 1)], &[])
}

/// Vertex order is (E2, E1, E0).
pub fn laufer_chain() -> DualGraph {
    build(
        &[("E2", -1, 1), ("E1", -2, 0), ("E0", -2, 0)],
        &[("E2", "E1"), ("E1", "E0")],
    )
}

pub fn genus2_deg2() -> DualGraph {
    build(&[("E", -2, 2)], &[])
}

pub fn cusp_triangle() -> DualGraph {
    build(
        &[("E1", -3, 0), ("E2", -3, 0), ("E3", -3, 0)],
        &[("E1", "E2"), ("E2", "E3"), ("E1", "E3")],
    )
}

pub fn nonnegdef() -> DualGraph {
    build(&[("E", 0, 0)], &[])
}

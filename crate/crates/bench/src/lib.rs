//! Graph families sized for benchmarking.

use resgraph_core::{DualGraph, Edge, Vertex};

fn chain(weights: &[(i64, i64)]) -> DualGraph {
    let vertices: Vec<Vertex> = weights
        .iter()
        .enumerate()
        .map(|(i, &(w, g))| Vertex::new(format!("E{i}"), w, g))
        .collect();
    let edges = (1..weights.len())
        .map(|i| Edge::new(format!("E{}", i - 1), format!("E{i}"), 1))
        .collect();
    DualGraph::new(vertices, edges).expect("chains are well formed")
}

/// `A_n`: a chain of `n` rational (-2)-curves.
pub fn a_n(n: usize) -> DualGraph {
    chain(&vec![(-2, 0); n])
}

/// An elliptic curve with self-intersection -1 followed by `n` rational
/// (-2)-curves; elliptic of degree one with an elliptic sequence of length `n`.
pub fn elliptic_tail(n: usize) -> DualGraph {
    let mut w = vec![(-1, 1)];
    w.extend(std::iter::repeat_n((-2, 0), n));
    chain(&w)
}

/// `D_n`: a (-2)-chain of length `n - 2` with two extra (-2)-curves on the first vertex.
pub fn d_n(n: usize) -> DualGraph {
    assert!(n >= 4);
    let vertices: Vec<Vertex> = (0..n)
        .map(|i| Vertex::new(format!("E{i}"), -2, 0))
        .collect();
    let mut edges: Vec<Edge> = (1..n - 2)
        .map(|i| Edge::new(format!("E{}", i - 1), format!("E{i}"), 1))
        .collect();
    edges.push(Edge::new("E0", format!("E{}", n - 2), 1));
    edges.push(Edge::new("E0", format!("E{}", n - 1), 1));
    DualGraph::new(vertices, edges).expect("D_n is well formed")
}

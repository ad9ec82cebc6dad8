//! Fundamental cycles and bounded enumeration of the cycle lattice.
//!
//! [`fundamental_cycle`] runs Laufer's sequence. The `oracle_*` functions and
//! [`LatticeWalk`] exist to check it (and the classification results built on
//! top of it) by exhaustive search in a box of cycles.

use crate::cycle::{Cycle, GraphTag};
use crate::error::{Error, Result};
use crate::graph::DualGraph;

/// A nonempty set of vertices inducing a connected subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportSet {
    tag: GraphTag,
    members: Vec<usize>,
}

impl SupportSet {
    pub fn new(graph: &DualGraph, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = indices.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(Error::domain("support set is empty"));
        }
        if let Some(&bad) = members.iter().find(|&&i| i >= graph.len()) {
            return Err(Error::domain(format!("vertex index {bad} out of range")));
        }
        let mut mask = vec![false; graph.len()];
        for &i in &members {
            mask[i] = true;
        }
        let components = graph.components(&mask);
        if components.len() != 1 {
            return Err(Error::domain(format!(
                "support set is disconnected ({} components)",
                components.len()
            )));
        }
        Ok(SupportSet {
            tag: graph.tag(),
            members,
        })
    }

    pub fn full(graph: &DualGraph) -> Self {
        SupportSet {
            tag: graph.tag(),
            members: (0..graph.len()).collect(),
        }
    }

    pub fn from_ids<S: AsRef<str>>(graph: &DualGraph, ids: &[S]) -> Result<Self> {
        let indices = ids
            .iter()
            .map(|id| graph.require_index(id.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SupportSet::new(graph, indices)
    }

    /// Support of a nonzero cycle, which must be connected.
    pub fn of_cycle(graph: &DualGraph, c: &Cycle) -> Result<Self> {
        graph.check(c)?;
        SupportSet::new(graph, c.support())
    }

    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn reduced_cycle(&self, graph: &DualGraph) -> Cycle {
        graph.reduced(&self.members)
    }

    fn check(&self, graph: &DualGraph) -> Result<()> {
        if self.tag == graph.tag() {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }
}

/// `D·E_i <= 0` for every `E_i` in `support`.
pub fn is_anti_nef(graph: &DualGraph, d: &Cycle, support: &SupportSet) -> Result<bool> {
    support.check(graph)?;
    let products = graph.products(d)?;
    Ok(support.indices().iter().all(|&i| products[i] <= 0))
}

/// Result of Laufer's sequence: the fundamental cycle and how many curves were added
/// to the starting reduced cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LauferRun {
    pub cycle: Cycle,
    pub steps: usize,
}

/// Laufer's sequence on `support`: start from the reduced cycle and keep
/// adding the first `E_i` (in vertex order) with `Z·E_i > 0`.
pub fn laufer_sequence(graph: &DualGraph, support: &SupportSet) -> Result<LauferRun> {
    graph.ensure_negative_definite()?;
    support.check(graph)?;
    let mut coeffs = vec![0i64; graph.len()];
    for &i in support.indices() {
        coeffs[i] = 1;
    }
    let mut products: Vec<i64> = graph
        .matrix()
        .iter()
        .map(|row| row.iter().zip(&coeffs).map(|(m, c)| m * c).sum())
        .collect();
    let mut steps = 0;
    while let Some(&i) = support.indices().iter().find(|&&i| products[i] > 0) {
        coeffs[i] += 1;
        for (k, p) in products.iter_mut().enumerate() {
            *p += graph.entry(k, i);
        }
        steps += 1;
    }
    Ok(LauferRun {
        cycle: graph.cycle(coeffs)?,
        steps,
    })
}

/// The fundamental cycle `Z_B` on a connected support.
pub fn fundamental_cycle(graph: &DualGraph, support: &SupportSet) -> Result<Cycle> {
    laufer_sequence(graph, support).map(|run| run.cycle)
}

/// The fundamental cycle `Z_E` of the whole exceptional set.
pub fn fundamental_cycle_full(graph: &DualGraph) -> Result<Cycle> {
    fundamental_cycle(graph, &SupportSet::full(graph))
}

/// `-Z_E²`.
pub fn degree(graph: &DualGraph) -> Result<i64> {
    let z = fundamental_cycle_full(graph)?;
    Ok(-graph.self_intersection(&z)?)
}

/// Odometer over the box `lower <= D <= upper`, in lexicographic order with
/// the first vertex most significant.
///
/// Keeps `D·E_i`, `D²` and `K·D` up to date incrementally, so each step costs
/// time proportional to the degree of the vertex that changed.
pub struct LatticeWalk<'g> {
    graph: &'g DualGraph,
    columns: Vec<Vec<(usize, i64)>>,
    canonical: Vec<i64>,
    lower: Vec<i64>,
    upper: Vec<i64>,
    current: Vec<i64>,
    products: Vec<i64>,
    self_intersection: i64,
    canonical_degree: i64,
    started: bool,
}

impl<'g> LatticeWalk<'g> {
    pub fn new(graph: &'g DualGraph, lower: &Cycle, upper: &Cycle) -> Result<Self> {
        graph.check(lower)?;
        graph.check(upper)?;
        let ordered = lower <= upper;
        if !ordered {
            return Err(Error::domain(format!(
                "empty enumeration box: {lower} is not <= {upper}"
            )));
        }
        let n = graph.len();
        let columns = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| graph.entry(i, j) != 0)
                    .map(|i| (i, graph.entry(i, j)))
                    .collect()
            })
            .collect();
        Ok(LatticeWalk {
            graph,
            columns,
            canonical: graph.canonical_intersections(),
            lower: lower.coeffs().to_vec(),
            upper: upper.coeffs().to_vec(),
            current: lower.coeffs().to_vec(),
            products: graph.products(lower)?,
            self_intersection: graph.self_intersection(lower)?,
            canonical_degree: graph.canonical_degree(lower)?,
            started: false,
        })
    }

    /// Moves to the next cycle in the box; the first call lands on `lower`.
    /// Returns `false` once the box is exhausted.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        for j in (0..self.current.len()).rev() {
            if self.current[j] < self.upper[j] {
                self.shift(j, 1);
                return true;
            }
            let span = self.current[j] - self.lower[j];
            if span != 0 {
                self.shift(j, -span);
            }
        }
        false
    }

    fn shift(&mut self, j: usize, t: i64) {
        // (D + tE_j)² = D² + 2t D·E_j + t² E_j²
        self.self_intersection += 2 * t * self.products[j] + t * t * self.graph.entry(j, j);
        for &(i, m) in &self.columns[j] {
            self.products[i] += t * m;
        }
        self.canonical_degree += t * self.canonical[j];
        self.current[j] += t;
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.current
    }

    pub fn products(&self) -> &[i64] {
        &self.products
    }

    pub fn self_intersection(&self) -> i64 {
        self.self_intersection
    }

    pub fn canonical_degree(&self) -> i64 {
        self.canonical_degree
    }

    pub fn chi(&self) -> i64 {
        -(self.self_intersection + self.canonical_degree) / 2
    }

    pub fn is_zero(&self) -> bool {
        self.current.iter().all(|&c| c == 0)
    }

    pub fn to_cycle(&self) -> Cycle {
        Cycle::from_parts(self.graph.tag(), self.current.clone())
    }
}

/// Streams every cycle `0 < D <= bound`.
pub struct EffectiveCycles<'g> {
    walk: LatticeWalk<'g>,
}

impl Iterator for EffectiveCycles<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        while self.walk.advance() {
            if !self.walk.is_zero() {
                return Some(self.walk.to_cycle());
            }
        }
        None
    }
}

pub fn enumerate_effective_cycles<'g>(
    graph: &'g DualGraph,
    bound: &Cycle,
) -> Result<EffectiveCycles<'g>> {
    if !bound.is_effective() {
        return Err(Error::domain(format!(
            "enumeration bound {bound} is not effective"
        )));
    }
    Ok(EffectiveCycles {
        walk: LatticeWalk::new(graph, &graph.zero_cycle(), bound)?,
    })
}

/// Every cycle with support exactly `support`, at most `multiplier · Z_B`,
/// that is anti-nef on `support`.
pub fn anti_nef_cycles(
    graph: &DualGraph,
    support: &SupportSet,
    multiplier: u32,
) -> Result<Vec<Cycle>> {
    if multiplier == 0 {
        return Err(Error::domain("oracle bound multiplier must be positive"));
    }
    let upper = fundamental_cycle(graph, support)?.scaled(i64::from(multiplier));
    let lower = support.reduced_cycle(graph);
    let mut walk = LatticeWalk::new(graph, &lower, &upper)?;
    let mut found = Vec::new();
    while walk.advance() {
        let products = walk.products();
        if support.indices().iter().all(|&i| products[i] <= 0) {
            found.push(walk.to_cycle());
        }
    }
    Ok(found)
}

/// The least anti-nef cycle with support exactly `support`, found by brute force.
///
/// Panics if the anti-nef cycles in the box have more than one minimal element.
pub fn oracle_minimal_anti_nef(
    graph: &DualGraph,
    support: &SupportSet,
    multiplier: u32,
) -> Result<Cycle> {
    let found = anti_nef_cycles(graph, support, multiplier)?;
    let Some(first) = found.first() else {
        return Err(Error::OracleBound {
            multiplier,
            what: "no anti-nef cycle with the requested support".into(),
        });
    };
    let meet = found.iter().fold(first.clone(), |acc, c| acc.meet(c));
    assert!(
        found.contains(&meet),
        "anti-nef cycles on this support have no unique minimum"
    );
    Ok(meet)
}

//! Elliptic sequences and the numerical facts built on them.

use crate::classify::{self, require_elliptic};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::lattice::{self, LatticeWalk, SupportSet};

/// Supports `B_0 ⊋ B_1 ⊋ … ⊋ B_m`, their fundamental cycles `Z_{B_i}`, and
/// the partial sums `C_t = Σ_{i<=t} Z_{B_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticSequence {
    pub supports: Vec<SupportSet>,
    pub cycles: Vec<Cycle>,
    pub partial_sums: Vec<Cycle>,
}

impl EllipticSequence {
    /// Index of the last term.
    pub fn m(&self) -> usize {
        self.cycles.len() - 1
    }

    /// `C_m`, the sum of the whole sequence.
    pub fn total(&self) -> &Cycle {
        self.partial_sums.last().expect("sequence is nonempty")
    }
}

fn require_numerically_gorenstein(graph: &DualGraph) -> Result<()> {
    if graph.is_numerically_gorenstein()? {
        Ok(())
    } else {
        Err(Error::domain("graph is not numerically Gorenstein"))
    }
}

fn require_minimal(graph: &DualGraph) -> Result<()> {
    if graph.is_minimal_resolution() {
        Ok(())
    } else {
        Err(Error::domain(
            "graph has a rational (-1)-curve; a minimal-resolution graph is required",
        ))
    }
}

/// Elliptic sequence on the connected reduced cycle `b`, which must contain
/// the support of `E_min`.
pub fn elliptic_sequence(graph: &DualGraph, b: &SupportSet) -> Result<EllipticSequence> {
    require_elliptic(graph)?;
    let e_min = classify::minimally_elliptic_cycle(graph)?;
    let e_min_support = SupportSet::of_cycle(graph, &e_min)?;
    if !e_min_support.is_subset(b) {
        return Err(Error::domain(
            "support does not contain the support of the minimally elliptic cycle",
        ));
    }

    let mut supports = vec![b.clone()];
    let mut cycles = Vec::new();
    loop {
        let current = supports.last().unwrap();
        let z = lattice::fundamental_cycle(graph, current)?;
        let against_min = graph.intersect(&z, &e_min)?;
        cycles.push(z);
        if against_min < 0 {
            break;
        }
        debug_assert_eq!(against_min, 0, "Z_B is anti-nef on B ⊇ supp(E_min)");
        let next = orthogonal_component(graph, cycles.last().unwrap(), current, &e_min_support)?;
        assert!(
            next.len() < current.len(),
            "elliptic sequence supports must strictly shrink"
        );
        supports.push(next);
    }

    let mut partial_sums: Vec<Cycle> = Vec::with_capacity(cycles.len());
    for z in &cycles {
        let next = match partial_sums.last() {
            Some(prev) => prev + z,
            None => z.clone(),
        };
        partial_sums.push(next);
    }
    Ok(EllipticSequence {
        supports,
        cycles,
        partial_sums,
    })
}

/// Elliptic sequence on the whole exceptional set.
pub fn elliptic_sequence_full(graph: &DualGraph) -> Result<EllipticSequence> {
    elliptic_sequence(graph, &SupportSet::full(graph))
}

/// Connected component containing `anchor` of `{E_j in within : Z·E_j = 0}`.
fn orthogonal_component(
    graph: &DualGraph,
    z: &Cycle,
    within: &SupportSet,
    anchor: &SupportSet,
) -> Result<SupportSet> {
    let products = graph.products(z)?;
    let mask: Vec<bool> = (0..graph.len())
        .map(|j| within.contains(j) && products[j] == 0)
        .collect();
    let first = anchor.indices()[0];
    let component = graph
        .components(&mask)
        .into_iter()
        .find(|c| c.contains(&first))
        .ok_or_else(|| Error::domain("E_min is not orthogonal to the cycle"))?;
    let set = SupportSet::new(graph, component)?;
    debug_assert!(anchor.is_subset(&set));
    Ok(set)
}

/// The maximal reduced connected cycle `B` with `Z·B = 0` containing `supp(E_min)`.
pub fn compute_b(graph: &DualGraph, z: &Cycle) -> Result<SupportSet> {
    require_elliptic(graph)?;
    if !z.is_effective() || !lattice::is_anti_nef(graph, z, &SupportSet::full(graph))? {
        return Err(Error::domain(format!(
            "{z} is not an effective anti-nef cycle"
        )));
    }
    let e_min = classify::minimally_elliptic_cycle(graph)?;
    let against = graph.intersect(z, &e_min)?;
    if against != 0 {
        return Err(Error::domain(format!("Z·E_min = {against}, expected 0")));
    }
    let anchor = SupportSet::of_cycle(graph, &e_min)?;
    orthogonal_component(graph, z, &SupportSet::full(graph), &anchor)
}

/// Outcome of the brute-force check that the anti-nef `χ = 0` cycles on `B`
/// are exactly the partial sums of the elliptic sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TomariCheck {
    pub holds: bool,
    pub found: Vec<Cycle>,
    pub expected: Vec<Cycle>,
    pub multiplier: u32,
}

pub fn verify_tomari(graph: &DualGraph, b: &SupportSet, multiplier: u32) -> Result<TomariCheck> {
    if multiplier == 0 {
        return Err(Error::domain("oracle bound multiplier must be positive"));
    }
    let seq = elliptic_sequence(graph, b)?;
    let upper = seq.total().scaled(i64::from(multiplier));
    let mut walk = LatticeWalk::new(graph, &graph.zero_cycle(), &upper)?;
    let mut found = Vec::new();
    while walk.advance() {
        if walk.is_zero() || walk.chi() != 0 {
            continue;
        }
        let products = walk.products();
        if b.indices().iter().all(|&i| products[i] <= 0) {
            found.push(walk.to_cycle());
        }
    }
    let mut expected = seq.partial_sums.clone();
    expected.sort_by(|x, y| x.coeffs().cmp(y.coeffs()));
    Ok(TomariCheck {
        holds: found == expected,
        found,
        expected,
        multiplier,
    })
}

/// `m + 1` for the elliptic sequence on `E`; bounds `p_g` from above.
pub fn pg_upper_bound(graph: &DualGraph) -> Result<u64> {
    require_elliptic(graph)?;
    require_numerically_gorenstein(graph)?;
    Ok(elliptic_sequence_full(graph)?.m() as u64 + 1)
}

/// `Z_K = Σ Z_{B_i}` over the elliptic sequence on `E`.
pub fn verify_canonical_identity(graph: &DualGraph) -> Result<bool> {
    require_elliptic(graph)?;
    require_numerically_gorenstein(graph)?;
    require_minimal(graph)?;
    let zk = graph
        .canonical_cycle()?
        .to_cycle()
        .expect("numerically Gorenstein");
    let seq = elliptic_sequence_full(graph)?;
    Ok(&zk == seq.total())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeVerdict {
    pub holds: bool,
    /// Chain vertices from the one meeting `supp(E_min)` down to the free end `E_0`.
    pub chain: Vec<usize>,
    pub m: usize,
    pub diagnostic: String,
}

/// Degree-one shape test: `E` is `supp(E_min)` plus a chain of rational
/// (-2)-curves `E_{m-1}, …, E_0` hanging off it, with `E_min·E_{m-1} = 1`.
pub fn maxell_shape_check(graph: &DualGraph) -> Result<ShapeVerdict> {
    require_elliptic(graph)?;
    require_numerically_gorenstein(graph)?;
    require_minimal(graph)?;
    let degree = lattice::degree(graph)?;
    if degree != 1 {
        return Err(Error::domain(format!("degree is {degree}, expected 1")));
    }
    let e_min = classify::minimally_elliptic_cycle(graph)?;
    let m = elliptic_sequence_full(graph)?.m();
    let core: Vec<bool> = e_min.support_mask();
    let rest: Vec<usize> = (0..graph.len()).filter(|&i| !core[i]).collect();
    let verdict = |holds: bool, chain: Vec<usize>, diagnostic: String| ShapeVerdict {
        holds,
        chain,
        m,
        diagnostic,
    };

    if rest.is_empty() {
        return Ok(if m == 0 {
            verdict(true, vec![], "E is supp(E_min); empty chain".into())
        } else {
            verdict(false, vec![], format!("empty chain but m = {m}"))
        });
    }

    let id = |i: usize| graph.vertex(i).id.as_str();
    if let Some(&bad) = rest
        .iter()
        .find(|&&i| graph.vertex(i).genus != 0 || graph.vertex(i).self_intersection != -2)
    {
        return Ok(verdict(
            false,
            vec![],
            format!("{} is not a rational (-2)-curve", id(bad)),
        ));
    }

    let in_rest: Vec<bool> = core.iter().map(|&c| !c).collect();
    let chain_degree = |i: usize| graph.neighbors(i).filter(|&(j, _)| in_rest[j]).count();
    if rest.iter().any(|&i| chain_degree(i) > 2)
        || graph.components(&in_rest).len() != 1
        || rest
            .iter()
            .any(|&i| graph.neighbors(i).any(|(j, mult)| in_rest[j] && mult != 1))
        || rest.iter().map(|&i| chain_degree(i)).sum::<usize>() != 2 * (rest.len() - 1)
    {
        return Ok(verdict(
            false,
            vec![],
            "complement of supp(E_min) is not a simple chain".into(),
        ));
    }

    let touching: Vec<usize> = rest
        .iter()
        .copied()
        .filter(|&i| graph.neighbors(i).any(|(j, _)| core[j]))
        .collect();
    let [attach] = touching[..] else {
        return Ok(verdict(
            false,
            vec![],
            format!(
                "{} chain vertices meet supp(E_min), expected 1",
                touching.len()
            ),
        ));
    };
    if rest.len() > 1 && chain_degree(attach) != 1 {
        return Ok(verdict(
            false,
            vec![],
            format!(
                "{} meets supp(E_min) but is not an end of the chain",
                id(attach)
            ),
        ));
    }
    let against = graph.intersect(&e_min, &graph.basis(attach))?;
    if against != 1 {
        return Ok(verdict(
            false,
            vec![],
            format!("E_min·{} = {against}, expected 1", id(attach)),
        ));
    }

    let mut chain = vec![attach];
    while chain.len() < rest.len() {
        let last = *chain.last().unwrap();
        let next = graph
            .neighbors(last)
            .map(|(j, _)| j)
            .find(|&j| in_rest[j] && !chain.contains(&j))
            .expect("chain is connected");
        chain.push(next);
    }
    if chain.len() != m {
        let names: Vec<&str> = chain.iter().map(|&i| id(i)).collect();
        return Ok(verdict(
            false,
            chain.clone(),
            format!(
                "chain [{}] has length {}, but m = {m}",
                names.join(", "),
                chain.len()
            ),
        ));
    }
    let names: Vec<&str> = chain.iter().map(|&i| id(i)).collect();
    Ok(verdict(
        true,
        chain.clone(),
        format!("chain [{}] of length m = {m}", names.join(", ")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::{Edge, Vertex};

    fn coeffs(cs: &[Cycle]) -> Vec<Vec<i64>> {
        cs.iter().map(|c| c.coeffs().to_vec()).collect()
    }

    #[test]
    fn laufer_chain_sequence() {
        let g = catalog::laufer_chain();
        let seq = elliptic_sequence_full(&g).unwrap();
        assert_eq!(
            coeffs(&seq.cycles),
            vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0]]
        );
        assert_eq!(seq.m(), 2);
        assert_eq!(
            coeffs(&seq.partial_sums),
            vec![vec![1, 1, 1], vec![2, 2, 1], vec![3, 2, 1]]
        );
    }

    #[test]
    fn single_curve_sequence() {
        let g = catalog::simple_elliptic_deg1();
        let seq = elliptic_sequence_full(&g).unwrap();
        assert_eq!(coeffs(&seq.cycles), vec![vec![1]]);
        assert_eq!(seq.m(), 0);
    }

    #[test]
    fn triangle_sequence_stops_immediately() {
        let g = catalog::cusp_triangle();
        let seq = elliptic_sequence_full(&g).unwrap();
        assert_eq!(coeffs(&seq.cycles), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn sequence_on_partial_support() {
        let g = catalog::laufer_chain();
        let b = SupportSet::from_ids(&g, &["E2", "E1"]).unwrap();
        let seq = elliptic_sequence(&g, &b).unwrap();
        assert_eq!(coeffs(&seq.cycles), vec![vec![1, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn sequence_rejects_support_missing_e_min() {
        let g = catalog::laufer_chain();
        let b = SupportSet::from_ids(&g, &["E1", "E0"]).unwrap();
        assert!(matches!(elliptic_sequence(&g, &b), Err(Error::Domain(_))));
        assert!(elliptic_sequence_full(&catalog::a1()).is_err());
    }

    #[test]
    fn tomari_examples() {
        let g = catalog::laufer_chain();
        let check = verify_tomari(&g, &SupportSet::full(&g), 2).unwrap();
        assert!(check.holds);
        assert_eq!(
            coeffs(&check.found),
            vec![vec![1, 1, 1], vec![2, 2, 1], vec![3, 2, 1]]
        );

        let s = catalog::simple_elliptic_deg1();
        let check = verify_tomari(&s, &SupportSet::full(&s), 3).unwrap();
        assert!(check.holds);
        assert_eq!(coeffs(&check.found), vec![vec![1]]);

        let t = catalog::cusp_triangle();
        let check = verify_tomari(&t, &SupportSet::full(&t), 2).unwrap();
        assert!(check.holds);
        assert_eq!(coeffs(&check.found), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn pg_bound_examples() {
        assert_eq!(pg_upper_bound(&catalog::laufer_chain()).unwrap(), 3);
        assert_eq!(pg_upper_bound(&catalog::simple_elliptic_deg1()).unwrap(), 1);
        assert!(pg_upper_bound(&catalog::genus2_deg2()).is_err());
    }

    #[test]
    fn canonical_identity_examples() {
        assert!(verify_canonical_identity(&catalog::laufer_chain()).unwrap());
        assert!(verify_canonical_identity(&catalog::simple_elliptic_deg1()).unwrap());
        assert!(verify_canonical_identity(&catalog::cusp_triangle()).unwrap());
    }

    #[test]
    fn shape_examples() {
        let g = catalog::laufer_chain();
        let v = maxell_shape_check(&g).unwrap();
        assert!(v.holds, "{}", v.diagnostic);
        assert_eq!(v.chain, vec![1, 2]);
        assert_eq!(v.m, 2);

        let v = maxell_shape_check(&catalog::simple_elliptic_deg1()).unwrap();
        assert!(v.holds && v.chain.is_empty() && v.m == 0);

        assert!(matches!(
            maxell_shape_check(&catalog::cusp_triangle()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn longer_degree_one_chain() {
        // elliptic (-1)-curve followed by four (-2)-curves: m = 4
        let mut vertices = vec![Vertex::new("C", -1, 1)];
        let mut edges = Vec::new();
        let mut prev = "C".to_string();
        for k in (0..4).rev() {
            let id = format!("E{k}");
            vertices.push(Vertex::new(id.clone(), -2, 0));
            edges.push(Edge::new(prev.clone(), id.clone(), 1));
            prev = id;
        }
        let g = DualGraph::new(vertices, edges).unwrap();
        let v = maxell_shape_check(&g).unwrap();
        assert!(v.holds, "{}", v.diagnostic);
        assert_eq!(v.m, 4);
        assert_eq!(v.chain, vec![1, 2, 3, 4]);
        assert!(verify_canonical_identity(&g).unwrap());
        assert_eq!(pg_upper_bound(&g).unwrap(), 5);
    }

    #[test]
    fn compute_b_examples() {
        let g = catalog::laufer_chain();
        let z = g.full_reduced();
        assert_eq!(compute_b(&g, &z).unwrap().indices(), &[0, 1]);
        let c1 = g.cycle(vec![2, 2, 1]).unwrap();
        assert_eq!(compute_b(&g, &c1).unwrap().indices(), &[0]);

        let s = catalog::simple_elliptic_deg1();
        assert!(matches!(compute_b(&s, &s.basis(0)), Err(Error::Domain(_))));
    }
}

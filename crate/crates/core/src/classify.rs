//! Rational / elliptic classification from the graph alone.
//!
//! Rationality is `χ(Z_E) = 1` (Artin) and ellipticity is `χ(Z_E) = 0`
//! (Wagreich). Everything else is reported as neither, with no finer
//! taxonomy.

use crate::cycle::{Cycle, QCycle};
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::lattice::{self, LatticeWalk, SupportSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityClass {
    Rational,
    Elliptic,
    Neither,
}

impl SingularityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SingularityClass::Rational => "rational",
            SingularityClass::Elliptic => "elliptic",
            SingularityClass::Neither => "neither",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub class: SingularityClass,
    pub fundamental_cycle: Cycle,
    pub chi_fundamental: i64,
    pub minimally_elliptic_cycle: Option<Cycle>,
    pub is_minimally_elliptic: Option<bool>,
    pub is_numerically_gorenstein: bool,
    pub degree: i64,
    pub canonical_cycle: QCycle,
    pub is_minimal_resolution_graph: bool,
}

impl ClassificationReport {
    pub fn is_rational(&self) -> bool {
        self.class == SingularityClass::Rational
    }

    pub fn is_elliptic(&self) -> bool {
        self.class == SingularityClass::Elliptic
    }
}

/// `χ(Z_E)`.
pub fn chi_fundamental(graph: &DualGraph) -> Result<i64> {
    let z = lattice::fundamental_cycle_full(graph)?;
    graph.euler_chi(&z)
}

pub fn singularity_class(graph: &DualGraph) -> Result<SingularityClass> {
    Ok(match chi_fundamental(graph)? {
        1 => SingularityClass::Rational,
        0 => SingularityClass::Elliptic,
        _ => SingularityClass::Neither,
    })
}

pub fn is_rational(graph: &DualGraph) -> Result<bool> {
    Ok(chi_fundamental(graph)? == 1)
}

pub fn is_elliptic(graph: &DualGraph) -> Result<bool> {
    Ok(chi_fundamental(graph)? == 0)
}

pub(crate) fn require_elliptic(graph: &DualGraph) -> Result<()> {
    if is_elliptic(graph)? {
        Ok(())
    } else {
        Err(Error::domain("graph is not elliptic (χ(Z_E) != 0)"))
    }
}

/// Smallest `χ(D)` over `0 < D <= multiplier · Z_E` and the first cycle (in
/// enumeration order) attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiMinimum {
    pub chi: i64,
    pub cycle: Cycle,
    pub multiplier: u32,
}

/// Brute-force check of the cycle-wise form of the classification.
///
/// Panics if the minimum contradicts the `χ(Z_E)` classification: an elliptic
/// graph must have minimum 0 and a rational one minimum 1.
pub fn oracle_chi_nonnegative(graph: &DualGraph, multiplier: u32) -> Result<ChiMinimum> {
    if multiplier == 0 {
        return Err(Error::domain("oracle bound multiplier must be positive"));
    }
    let z = lattice::fundamental_cycle_full(graph)?;
    let upper = z.scaled(i64::from(multiplier));
    let mut walk = LatticeWalk::new(graph, &graph.zero_cycle(), &upper)?;
    let mut best: Option<(i64, Cycle)> = None;
    while walk.advance() {
        if walk.is_zero() {
            continue;
        }
        let chi = walk.chi();
        if best.as_ref().is_none_or(|(b, _)| chi < *b) {
            best = Some((chi, walk.to_cycle()));
        }
    }
    let (chi, cycle) = best.expect("box contains Z_E");
    match singularity_class(graph)? {
        SingularityClass::Elliptic => assert_eq!(chi, 0, "elliptic graph with χ(D) = {chi} < 0"),
        SingularityClass::Rational => assert_eq!(chi, 1, "rational graph with χ(D) = {chi} < 1"),
        SingularityClass::Neither => {}
    }
    Ok(ChiMinimum {
        chi,
        cycle,
        multiplier,
    })
}

/// The minimally elliptic cycle `E_min`: the least positive cycle with `χ = 0`.
///
/// Every `χ = 0` cycle dominates `E_min` and `χ(Z_E) = 0`, so searching
/// `0 < D <= Z_E` is exhaustive.
pub fn minimally_elliptic_cycle(graph: &DualGraph) -> Result<Cycle> {
    require_elliptic(graph)?;
    let z = lattice::fundamental_cycle_full(graph)?;
    let mut walk = LatticeWalk::new(graph, &graph.zero_cycle(), &z)?;
    let mut zeros = Vec::new();
    while walk.advance() {
        if !walk.is_zero() && walk.chi() == 0 {
            zeros.push(walk.to_cycle());
        }
    }
    let meet = zeros.iter().fold(z.clone(), |acc, c| acc.meet(c));
    assert!(
        zeros.contains(&meet),
        "χ = 0 cycles below Z_E have no unique minimum"
    );
    assert!(
        SupportSet::of_cycle(graph, &meet).is_ok(),
        "E_min has disconnected support"
    );
    Ok(meet)
}

/// The graph is a minimal-resolution graph and `Z_E = E_min`.
pub fn is_minimally_elliptic(graph: &DualGraph) -> Result<bool> {
    let e_min = minimally_elliptic_cycle(graph)?;
    let z = lattice::fundamental_cycle_full(graph)?;
    Ok(graph.is_minimal_resolution() && z == e_min)
}

pub fn classify(graph: &DualGraph) -> Result<ClassificationReport> {
    graph.ensure_negative_definite()?;
    let z = lattice::fundamental_cycle_full(graph)?;
    let chi = graph.euler_chi(&z)?;
    let class = singularity_class(graph)?;
    let (e_min, minimally) = if class == SingularityClass::Elliptic {
        let e_min = minimally_elliptic_cycle(graph)?;
        let minimally = graph.is_minimal_resolution() && e_min == z;
        (Some(e_min), Some(minimally))
    } else {
        (None, None)
    };
    let canonical_cycle = graph.canonical_cycle()?;
    Ok(ClassificationReport {
        class,
        chi_fundamental: chi,
        minimally_elliptic_cycle: e_min,
        is_minimally_elliptic: minimally,
        is_numerically_gorenstein: canonical_cycle.is_integral(),
        degree: -graph.self_intersection(&z)?,
        canonical_cycle,
        is_minimal_resolution_graph: graph.is_minimal_resolution(),
        fundamental_cycle: z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Vertex;

    #[test]
    fn rational_examples() {
        assert!(is_rational(&catalog::a1()).unwrap());
        assert!(!is_rational(&catalog::laufer_chain()).unwrap());
        assert!(is_rational(&catalog::e8()).unwrap());
    }

    #[test]
    fn elliptic_examples() {
        assert!(is_elliptic(&catalog::laufer_chain()).unwrap());
        assert!(!is_elliptic(&catalog::genus2_deg2()).unwrap());
        assert!(is_elliptic(&catalog::simple_elliptic_deg1()).unwrap());
    }

    #[test]
    fn chi_oracle_examples() {
        let a1 = catalog::a1();
        let m = oracle_chi_nonnegative(&a1, 3).unwrap();
        assert_eq!((m.chi, m.cycle.coeffs()), (1, &[1][..]));

        let g = catalog::laufer_chain();
        let m = oracle_chi_nonnegative(&g, 2).unwrap();
        assert_eq!((m.chi, m.cycle.coeffs()), (0, &[1, 0, 0][..]));

        // χ(kE) = k² - 2k on the genus-2 curve: minimum -1 at k = 1.
        let h = catalog::genus2_deg2();
        let m = oracle_chi_nonnegative(&h, 3).unwrap();
        assert_eq!((m.chi, m.cycle.coeffs()), (-1, &[1][..]));
    }

    #[test]
    fn e8_chi_oracle_confirms_rational() {
        let m = oracle_chi_nonnegative(&catalog::e8(), 2).unwrap();
        assert_eq!(m.chi, 1);
    }

    #[test]
    fn minimally_elliptic_cycle_examples() {
        let g = catalog::laufer_chain();
        assert_eq!(minimally_elliptic_cycle(&g).unwrap().coeffs(), &[1, 0, 0]);
        let s = catalog::simple_elliptic_deg1();
        assert_eq!(minimally_elliptic_cycle(&s).unwrap().coeffs(), &[1]);
        let t = catalog::cusp_triangle();
        assert_eq!(minimally_elliptic_cycle(&t).unwrap().coeffs(), &[1, 1, 1]);
    }

    #[test]
    fn minimally_elliptic_cycle_requires_elliptic() {
        assert!(matches!(
            minimally_elliptic_cycle(&catalog::a1()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn minimally_elliptic_examples() {
        assert!(is_minimally_elliptic(&catalog::simple_elliptic_deg1()).unwrap());
        assert!(!is_minimally_elliptic(&catalog::laufer_chain()).unwrap());
        assert!(is_minimally_elliptic(&catalog::cusp_triangle()).unwrap());
        assert!(is_minimally_elliptic(&catalog::genus2_deg2()).is_err());
    }

    #[test]
    fn non_minimal_graph_is_not_minimally_elliptic() {
        use crate::blowup::{blow_up, Center};
        let g = catalog::simple_elliptic_deg1();
        let r = blow_up(&g, &Center::Free("E".into())).unwrap();
        assert!(is_elliptic(&r.graph).unwrap());
        assert!(!r.graph.is_minimal_resolution());
        assert!(!is_minimally_elliptic(&r.graph).unwrap());
    }

    #[test]
    fn classify_laufer_chain() {
        let g = catalog::laufer_chain();
        let r = classify(&g).unwrap();
        assert!(r.is_elliptic() && !r.is_rational());
        assert_eq!(r.chi_fundamental, 0);
        assert_eq!(r.degree, 1);
        assert_eq!(r.minimally_elliptic_cycle.unwrap().coeffs(), &[1, 0, 0]);
        assert_eq!(r.is_minimally_elliptic, Some(false));
        assert!(r.is_numerically_gorenstein);
        assert!(r.is_minimal_resolution_graph);
    }

    #[test]
    fn classify_neither() {
        let r = classify(&catalog::genus2_deg2()).unwrap();
        assert_eq!(r.class, SingularityClass::Neither);
        assert_eq!(r.chi_fundamental, -1);
        assert!(r.minimally_elliptic_cycle.is_none());
        assert!(r.is_minimally_elliptic.is_none());
    }

    #[test]
    fn classify_flags_non_minimal_graph() {
        let g = DualGraph::new(
            vec![Vertex::new("a", -1, 0), Vertex::new("b", -3, 0)],
            vec![crate::graph::Edge::new("a", "b", 1)],
        )
        .unwrap();
        let r = classify(&g).unwrap();
        assert!(!r.is_minimal_resolution_graph);
    }
}

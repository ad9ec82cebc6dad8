//! Normal reduction number, Kato's Riemann-Roch colength, and the numerical
//! test for the maximal ideal to be a p_g-ideal.
//!
//! Quantities such as `q(I)`, `p_g`, Gorenstein-ness, or global generation of
//! `O(-M)` are analytic: the graph does not determine them. Functions here take
//! them as caller-supplied values, check what the graph can check, and label
//! the rest as conditional.

use std::ops::RangeInclusive;

use crate::classify::{self, SingularityClass};
use crate::cycle::Cycle;
use crate::elliptic;
use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::lattice::{self, SupportSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionNumber {
    Exact(u32),
    /// Neither rational nor elliptic; no formula is available.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub value: ReductionNumber,
    pub class: SingularityClass,
    pub basis: &'static str,
}

pub const BASIS_RATIONAL: &str = "r̄(A) = 1 if and only if A is rational (Lipman, Cutkosky)";
pub const BASIS_ELLIPTIC: &str = "r̄(A) = 2 for elliptic singularities";
pub const BASIS_UNKNOWN: &str = "neither rational nor elliptic: r̄(A) >= 2 is all the graph implies";

/// `r̄(A)` where the graph determines it.
pub fn normal_reduction_number(graph: &DualGraph) -> Result<ReductionReport> {
    let class = classify::singularity_class(graph)?;
    let (value, basis) = match class {
        SingularityClass::Rational => (ReductionNumber::Exact(1), BASIS_RATIONAL),
        SingularityClass::Elliptic => (ReductionNumber::Exact(2), BASIS_ELLIPTIC),
        SingularityClass::Neither => (ReductionNumber::Unknown, BASIS_UNKNOWN),
    };
    Ok(ReductionReport {
        value,
        class,
        basis,
    })
}

fn require_anti_nef_effective(graph: &DualGraph, z: &Cycle) -> Result<()> {
    if !z.is_positive() {
        return Err(Error::domain(format!(
            "{} is not a positive cycle",
            graph.format_cycle(z)
        )));
    }
    if !lattice::is_anti_nef(graph, z, &SupportSet::full(graph))? {
        return Err(Error::domain(format!(
            "{} is not anti-nef",
            graph.format_cycle(z)
        )));
    }
    Ok(())
}

/// `ℓ(A/I_Z) = -(Z² + K·Z)/2 + p_g - q(I_Z)`.
pub fn kato_colength(graph: &DualGraph, z: &Cycle, q: u64, pg: u64) -> Result<i64> {
    graph.ensure_negative_definite()?;
    require_anti_nef_effective(graph, z)?;
    if q > pg {
        return Err(Error::inconsistent(format!("q = {q} exceeds p_g = {pg}")));
    }
    let chi = graph.euler_chi(z)?;
    let colength = chi + pg as i64 - q as i64;
    if colength < 1 {
        return Err(Error::inconsistent(format!(
            "colength -(Z² + K·Z)/2 + p_g - q = {colength} < 1"
        )));
    }
    Ok(colength)
}

/// The range `{0, …, p_g}` of `q` over integrally closed m-primary ideals,
/// guaranteed for elliptic singularities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QRange {
    pub range: RangeInclusive<u64>,
    /// `m + 1` when the graph is numerically Gorenstein.
    pub pg_bound: Option<u64>,
}

pub fn q_range_if_elliptic(graph: &DualGraph, pg: u64) -> Result<QRange> {
    classify::require_elliptic(graph)?;
    if pg == 0 {
        return Err(Error::inconsistent(
            "p_g = 0 means rational, but the graph is elliptic",
        ));
    }
    let pg_bound = if graph.is_numerically_gorenstein()? {
        let bound = elliptic::pg_upper_bound(graph)?;
        if pg > bound {
            return Err(Error::inconsistent(format!(
                "p_g = {pg} exceeds the elliptic-sequence bound m + 1 = {bound}"
            )));
        }
        Some(bound)
    } else {
        None
    };
    Ok(QRange {
        range: 0..=pg,
        pg_bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgCycleVerdict {
    pub holds: bool,
    pub arithmetic_genus: i64,
    pub self_intersection: i64,
    pub canonical_degree: i64,
}

fn require_maximal_ideal_candidate(graph: &DualGraph, m: &Cycle) -> Result<()> {
    graph.ensure_negative_definite()?;
    require_anti_nef_effective(graph, m)?;
    let z = lattice::fundamental_cycle_full(graph)?;
    let dominates = m >= &z;
    if !dominates {
        return Err(Error::domain(format!(
            "{} does not dominate Z_E = {}",
            graph.format_cycle(m),
            graph.format_cycle(&z)
        )));
    }
    Ok(())
}

/// For the maximal ideal cycle `M`: m is a p_g-ideal represented by `M` iff `p_a(M) = 0`.
pub fn is_pg_maximal_ideal_cycle(graph: &DualGraph, m: &Cycle) -> Result<PgCycleVerdict> {
    require_maximal_ideal_candidate(graph, m)?;
    let arithmetic_genus = graph.arithmetic_genus(m)?;
    Ok(PgCycleVerdict {
        holds: arithmetic_genus == 0,
        arithmetic_genus,
        self_intersection: graph.self_intersection(m)?,
        canonical_degree: graph.canonical_degree(m)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalShapeReport {
    pub holds: bool,
    pub is_elliptic: bool,
    pub is_numerically_gorenstein: bool,
    pub degree: i64,
    pub shape: Option<elliptic::ShapeVerdict>,
    pub statement: &'static str,
}

pub const FINAL_SHAPE_STATEMENT: &str = "if the analytic structure is maximally elliptic \
(p_g = m + 1), then A is Gorenstein and the maximal ideal is a p_g-ideal; \
maximal ellipticity cannot be verified from the graph";

/// Combinatorial side of the characterization: elliptic, numerically
/// Gorenstein, degree one, and the chain shape.
pub fn check_final_theorem_shape(graph: &DualGraph) -> Result<FinalShapeReport> {
    graph.ensure_negative_definite()?;
    if !graph.is_minimal_resolution() {
        return Err(Error::domain(
            "graph has a rational (-1)-curve; a minimal-resolution graph is required",
        ));
    }
    let is_elliptic = classify::is_elliptic(graph)?;
    let is_numerically_gorenstein = graph.is_numerically_gorenstein()?;
    let degree = lattice::degree(graph)?;
    let shape = if is_elliptic && is_numerically_gorenstein && degree == 1 {
        Some(elliptic::maxell_shape_check(graph)?)
    } else {
        None
    };
    Ok(FinalShapeReport {
        holds: shape.as_ref().is_some_and(|s| s.holds),
        is_elliptic,
        is_numerically_gorenstein,
        degree,
        shape,
        statement: FINAL_SHAPE_STATEMENT,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpgReport {
    pub arithmetic_genus: i64,
    /// `-M²`; equals `mult A` when `O(-M)` is globally generated (analytic).
    pub minus_self_intersection: i64,
    /// Present when `p_a(M) = 0` and the caller asserts Gorenstein: `mult A = 2`
    /// is then forced, and this records whether `-M² = 2` agrees.
    pub gorenstein_multiplicity_consistent: Option<bool>,
}

pub fn tomari_mpg_numeric_conditions(
    graph: &DualGraph,
    m: &Cycle,
    gorenstein: Option<bool>,
) -> Result<MpgReport> {
    require_maximal_ideal_candidate(graph, m)?;
    let arithmetic_genus = graph.arithmetic_genus(m)?;
    let minus_self_intersection = -graph.self_intersection(m)?;
    let gorenstein_multiplicity_consistent =
        (arithmetic_genus == 0 && gorenstein == Some(true)).then_some(minus_self_intersection == 2);
    Ok(MpgReport {
        arithmetic_genus,
        minus_self_intersection,
        gorenstein_multiplicity_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::{blow_up, Center};
    use crate::catalog;

    #[test]
    fn reduction_number_examples() {
        let r = normal_reduction_number(&catalog::a1()).unwrap();
        assert_eq!(r.value, ReductionNumber::Exact(1));
        let r = normal_reduction_number(&catalog::laufer_chain()).unwrap();
        assert_eq!(r.value, ReductionNumber::Exact(2));
        let r = normal_reduction_number(&catalog::genus2_deg2()).unwrap();
        assert_eq!(r.value, ReductionNumber::Unknown);
        assert_eq!(r.class, SingularityClass::Neither);
    }

    #[test]
    fn kato_examples() {
        let a1 = catalog::a1();
        assert_eq!(kato_colength(&a1, &a1.basis(0), 0, 0).unwrap(), 1);

        let g = catalog::laufer_chain();
        let m = g.cycle(vec![2, 2, 1]).unwrap();
        assert_eq!(kato_colength(&g, &m, 1, 2).unwrap(), 1);

        for pg in 0..4 {
            assert!(matches!(
                kato_colength(&g, &g.full_reduced(), pg, pg),
                Err(Error::InconsistentInput(_))
            ));
        }
    }

    #[test]
    fn kato_rejects_bad_inputs() {
        let g = catalog::laufer_chain();
        assert!(matches!(
            kato_colength(&g, &g.basis(0), 0, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            kato_colength(&g, &g.full_reduced(), 2, 1),
            Err(Error::InconsistentInput(_))
        ));
    }

    #[test]
    fn q_range_examples() {
        let g = catalog::laufer_chain();
        let r = q_range_if_elliptic(&g, 3).unwrap();
        assert_eq!(r.range, 0..=3);
        assert_eq!(r.pg_bound, Some(3));
        assert!(matches!(
            q_range_if_elliptic(&g, 4),
            Err(Error::InconsistentInput(_))
        ));
        let s = catalog::simple_elliptic_deg1();
        assert_eq!(q_range_if_elliptic(&s, 1).unwrap().range, 0..=1);
        assert!(matches!(
            q_range_if_elliptic(&catalog::a1(), 1),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn pg_maximal_ideal_examples() {
        let g = catalog::laufer_chain();
        let m = g.cycle(vec![2, 2, 1]).unwrap();
        let v = is_pg_maximal_ideal_cycle(&g, &m).unwrap();
        assert!(!v.holds);
        assert_eq!(v.arithmetic_genus, 1);
        assert_eq!(v.self_intersection, -2);

        let a1 = catalog::a1();
        assert!(is_pg_maximal_ideal_cycle(&a1, &a1.basis(0)).unwrap().holds);

        let r = blow_up(&g, &Center::Free("E0".into())).unwrap();
        let m = &r.pullback(&g.full_reduced()).unwrap() + &r.exceptional_cycle();
        let v = is_pg_maximal_ideal_cycle(&r.graph, &m).unwrap();
        assert!(v.holds);
        assert_eq!((v.self_intersection, v.canonical_degree), (-2, 0));
    }

    #[test]
    fn fundamental_cycle_never_passes_on_degree_one() {
        let g = catalog::laufer_chain();
        let v = is_pg_maximal_ideal_cycle(&g, &g.full_reduced()).unwrap();
        assert_eq!(v.arithmetic_genus, 1);
        assert!(!v.holds);
    }

    #[test]
    fn pg_maximal_ideal_preconditions() {
        let g = catalog::laufer_chain();
        assert!(is_pg_maximal_ideal_cycle(&g, &g.basis(0)).is_err());
        let e8 = catalog::e8();
        let below = e8.full_reduced();
        assert!(is_pg_maximal_ideal_cycle(&e8, &below).is_err());
    }

    #[test]
    fn final_shape_examples() {
        let r = check_final_theorem_shape(&catalog::laufer_chain()).unwrap();
        assert!(r.holds);
        let r = check_final_theorem_shape(&catalog::genus2_deg2()).unwrap();
        assert!(!r.holds && !r.is_elliptic);
        let r = check_final_theorem_shape(&catalog::a1()).unwrap();
        assert!(!r.holds);
        let r = check_final_theorem_shape(&catalog::cusp_triangle()).unwrap();
        assert!(!r.holds && r.shape.is_none());
        let g = catalog::simple_elliptic_deg1();
        let blown = blow_up(&g, &Center::Free("E".into())).unwrap();
        assert!(check_final_theorem_shape(&blown.graph).is_err());
    }

    #[test]
    fn mpg_examples() {
        let g = catalog::laufer_chain();
        let m = g.cycle(vec![2, 2, 1]).unwrap();
        let r = tomari_mpg_numeric_conditions(&g, &m, None).unwrap();
        assert_eq!((r.minus_self_intersection, r.arithmetic_genus), (2, 1));
        assert_eq!(r.gorenstein_multiplicity_consistent, None);

        let b = blow_up(&g, &Center::Free("E0".into())).unwrap();
        let m = &b.pullback(&g.full_reduced()).unwrap() + &b.exceptional_cycle();
        let r = tomari_mpg_numeric_conditions(&b.graph, &m, Some(true)).unwrap();
        assert_eq!((r.minus_self_intersection, r.arithmetic_genus), (2, 0));
        assert_eq!(r.gorenstein_multiplicity_consistent, Some(true));

        let a1 = catalog::a1();
        let r = tomari_mpg_numeric_conditions(&a1, &a1.basis(0), None).unwrap();
        assert_eq!((r.minus_self_intersection, r.arithmetic_genus), (2, 0));
    }
}

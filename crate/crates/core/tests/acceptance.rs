//! Acceptance gate: one PASS/FAIL line per criterion, each with its time limit.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use resgraph_core::blowup::{blow_up, BlowupRecord, Center};
use resgraph_core::catalog;
use resgraph_core::classify::{self, SingularityClass};
use resgraph_core::elliptic;
use resgraph_core::lattice::{self, SupportSet};
use resgraph_core::reduction::{self, ReductionNumber};
use resgraph_core::{Cycle, DualGraph, Error};

type Outcome = Result<(), String>;

macro_rules! check {
    ($cond:expr) => {
        if !$cond {
            return Err(format!("check failed: {}", stringify!($cond)));
        }
    };
}

macro_rules! check_eq {
    ($left:expr, $right:expr) => {{
        let (l, r) = (&$left, &$right);
        if l != r {
            return Err(format!("{} = {:?}, expected {:?}", stringify!($left), l, r));
        }
    }};
}

fn ok<T>(r: resgraph_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn coeffs(c: &Cycle) -> Vec<i64> {
    c.coeffs().to_vec()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn laufer_chain_invariants() -> Outcome {
    let g = catalog::laufer_chain();
    let z = ok(lattice::fundamental_cycle_full(&g))?;
    check_eq!(coeffs(&z), vec![1, 1, 1]);
    check_eq!(ok(lattice::degree(&g))?, 1);
    check_eq!(ok(g.euler_chi(&z))?, 0);
    check!(ok(classify::is_elliptic(&g))?);
    let e_min = ok(classify::minimally_elliptic_cycle(&g))?;
    check_eq!(g.format_cycle(&e_min), "E2");
    let seq = ok(elliptic::elliptic_sequence_full(&g))?;
    check_eq!(
        seq.cycles.iter().map(coeffs).collect::<Vec<_>>(),
        vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 0]]
    );
    check_eq!(seq.m(), 2);
    check_eq!(ok(elliptic::pg_upper_bound(&g))?, 3);
    let zk = ok(g.canonical_cycle())?;
    check_eq!(zk.coeffs().to_vec(), vec![int(3), int(2), int(1)]);
    check!(ok(elliptic::verify_canonical_identity(&g))?);
    check!(ok(elliptic::maxell_shape_check(&g))?.holds);
    Ok(())
}

fn paper_cycle_m() -> Outcome {
    let g = catalog::laufer_chain();
    let m = ok(g.cycle_from_pairs(&[("E2", 2), ("E1", 2), ("E0", 1)]))?;
    check_eq!(coeffs(&m), vec![2, 2, 1]);
    check_eq!(-ok(g.self_intersection(&m))?, 2);
    check_eq!(ok(g.arithmetic_genus(&m))?, 1);
    let verdict = ok(reduction::is_pg_maximal_ideal_cycle(&g, &m))?;
    check!(!verdict.holds);
    check_eq!(verdict.arithmetic_genus, 1);
    Ok(())
}

fn blow_up_free_point_of_e0() -> Outcome {
    let g = catalog::laufer_chain();
    let r = ok(blow_up(&g, &Center::Free("E0".into())))?;
    let z = ok(lattice::fundamental_cycle_full(&g))?;
    let m = &ok(r.pullback(&z))? + &r.exceptional_cycle();
    check_eq!(coeffs(&m), vec![1, 1, 1, 2]);
    check_eq!(ok(r.graph.arithmetic_genus(&m))?, 0);
    check_eq!(ok(r.graph.canonical_degree(&m))?, 0);
    check!(ok(r.canonical_pullback_check())?);
    Ok(())
}

fn high_pg_graph() -> Outcome {
    let g = catalog::genus2_deg2();
    let zk = ok(g.canonical_cycle())?;
    check_eq!(zk.coeffs().to_vec(), vec![int(2)]);
    check_eq!(ok(lattice::degree(&g))?, 2);
    let r1 = ok(blow_up(&g, &Center::Free("E".into())))?;
    let r2 = ok(blow_up(&r1.graph, &Center::Free("E".into())))?;
    let pull = |d: &Cycle| -> Result<Cycle, String> { ok(r2.pullback(&ok(r1.pullback(d))?)) };
    let e = g.basis(0);
    let f1 = ok(r2.pullback(&r1.exceptional_cycle()))?;
    let f2 = r2.exceptional_cycle();
    let z = &(&pull(&e)? + &f1) + &f2;
    let c = &(&pull(&e.scaled(2))? - &f1) - &f2;
    check_eq!(ok(r2.graph.intersect(&z, &c))?, -2);
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    for entry in catalog::ENTRIES {
        let g = entry.graph();
        let s = SupportSet::full(&g);
        let fast = lattice::fundamental_cycle(&g, &s);
        let slow = lattice::oracle_minimal_anti_nef(&g, &s, 2);
        if !g.is_negative_definite() {
            check_eq!(fast, Err(Error::NotNegativeDefinite));
            check_eq!(slow, Err(Error::NotNegativeDefinite));
            continue;
        }
        let (fast, slow) = (ok(fast)?, ok(slow)?);
        if fast != slow {
            return Err(format!("{}: Laufer {fast} but oracle {slow}", entry.name));
        }
    }
    let e8 = catalog::e8();
    check_eq!(
        coeffs(&ok(lattice::fundamental_cycle_full(&e8))?),
        vec![2, 3, 4, 6, 5, 4, 3, 2]
    );
    Ok(())
}

fn tomari_verification() -> Outcome {
    let mut elliptic_names = Vec::new();
    for entry in catalog::ENTRIES {
        let g = entry.graph();
        if !g.is_negative_definite() || !ok(classify::is_elliptic(&g))? {
            continue;
        }
        elliptic_names.push(entry.name);
        let check = ok(elliptic::verify_tomari(&g, &SupportSet::full(&g), 2))?;
        if !check.holds {
            return Err(format!(
                "{}: found {:?}, expected {:?}",
                entry.name, check.found, check.expected
            ));
        }
    }
    check_eq!(
        elliptic_names,
        vec!["simple-elliptic-deg1", "laufer-chain", "cusp-triangle"]
    );
    let g = catalog::laufer_chain();
    let check = ok(elliptic::verify_tomari(&g, &SupportSet::full(&g), 2))?;
    let mut found: Vec<Vec<i64>> = check.found.iter().map(coeffs).collect();
    found.sort();
    check_eq!(found, vec![vec![1, 1, 1], vec![2, 2, 1], vec![3, 2, 1]]);
    Ok(())
}

const PAIRS: usize = 1000;

fn random_cycle(rng: &mut ChaCha8Rng, g: &DualGraph, lo: i64, hi: i64) -> Cycle {
    g.cycle((0..g.len()).map(|_| rng.random_range(lo..=hi)).collect())
        .expect("length matches")
}

fn all_blow_ups(g: &DualGraph) -> Result<Vec<BlowupRecord>, String> {
    let mut centers: Vec<Center> = g.ids().map(|id| Center::Free(id.to_string())).collect();
    for e in g.edges() {
        centers.push(Center::Intersection(e.a.clone(), e.b.clone()));
    }
    centers.iter().map(|c| ok(blow_up(g, c))).collect()
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut blowups_checked = 0;
    for entry in catalog::ENTRIES {
        let g = entry.graph();
        for _ in 0..PAIRS {
            let d = random_cycle(&mut rng, &g, 0, 6);
            let f = random_cycle(&mut rng, &g, 0, 6);
            let lhs = ok(g.euler_chi(&(&d + &f)))?;
            let rhs = ok(g.euler_chi(&d))? + ok(g.euler_chi(&f))? - ok(g.intersect(&d, &f))?;
            if lhs != rhs {
                return Err(format!("{}: chi additivity fails for {d}, {f}", entry.name));
            }
            let mixed = &d - &f;
            let s = ok(g.self_intersection(&mixed))? + ok(g.canonical_degree(&mixed))?;
            if s % 2 != 0 {
                return Err(format!("{}: D² + K·D odd for {mixed}", entry.name));
            }
        }
        if !g.is_negative_definite() {
            continue;
        }
        for r in all_blow_ups(&g)? {
            blowups_checked += 1;
            check!(r.graph.is_negative_definite());
            for _ in 0..PAIRS {
                let d = random_cycle(&mut rng, &g, -6, 6);
                let f = random_cycle(&mut rng, &g, -6, 6);
                let (pd, pf) = (ok(r.pullback(&d))?, ok(r.pullback(&f))?);
                if ok(r.graph.intersect(&pd, &pf))? != ok(g.intersect(&d, &f))? {
                    return Err(format!(
                        "{} blown up at {}: pullback changes {d}·{f}",
                        entry.name, r.center
                    ));
                }
                check_eq!(ok(r.graph.intersect(&pd, &r.exceptional_cycle()))?, 0);
            }
        }
    }
    check!(blowups_checked > 0);
    Ok(())
}

fn classification_truth_table() -> Outcome {
    let cases = [
        (
            catalog::a1(),
            SingularityClass::Rational,
            ReductionNumber::Exact(1),
        ),
        (
            catalog::laufer_chain(),
            SingularityClass::Elliptic,
            ReductionNumber::Exact(2),
        ),
        (
            catalog::genus2_deg2(),
            SingularityClass::Neither,
            ReductionNumber::Unknown,
        ),
    ];
    for (g, class, r) in cases {
        check_eq!(ok(classify::singularity_class(&g))?, class);
        let report = ok(reduction::normal_reduction_number(&g))?;
        check_eq!(report.value, r);
        check_eq!(report.class, class);
    }
    Ok(())
}

fn kato_sanity() -> Outcome {
    let a1 = catalog::a1();
    let z = ok(lattice::fundamental_cycle_full(&a1))?;
    check_eq!(ok(reduction::kato_colength(&a1, &z, 0, 0))?, 1);
    let g = catalog::laufer_chain();
    let z = ok(lattice::fundamental_cycle_full(&g))?;
    for pg in 0..=3 {
        match reduction::kato_colength(&g, &z, pg, pg) {
            Err(Error::InconsistentInput(_)) => {}
            other => return Err(format!("q = p_g = {pg} gave {other:?}")),
        }
    }
    Ok(())
}

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        name: "laufer chain invariants",
        limit: Duration::from_secs(1),
        run: laufer_chain_invariants,
    },
    Criterion {
        name: "cycle 2E2+2E1+E0 on the laufer chain",
        limit: Duration::from_secs(1),
        run: paper_cycle_m,
    },
    Criterion {
        name: "laufer chain blown up at a free point of E0",
        limit: Duration::from_secs(1),
        run: blow_up_free_point_of_e0,
    },
    Criterion {
        name: "genus-2 degree-2 graph and its double blow-up",
        limit: Duration::from_secs(1),
        run: high_pg_graph,
    },
    Criterion {
        name: "Laufer sequence agrees with the brute-force oracle",
        limit: Duration::from_secs(30),
        run: oracle_equivalence,
    },
    Criterion {
        name: "anti-nef zero-chi cycles are the elliptic partial sums",
        limit: Duration::from_secs(30),
        run: tomari_verification,
    },
    Criterion {
        name: "randomized chi, parity and pullback identities",
        limit: Duration::from_secs(60),
        run: property_suite,
    },
    Criterion {
        name: "classification and reduction number truth table",
        limit: Duration::from_secs(1),
        run: classification_truth_table,
    },
    Criterion {
        name: "Kato colength sanity",
        limit: Duration::from_secs(1),
        run: kato_sanity,
    },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (k, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > c.limit {
                Err(format!("took {elapsed:?}, limit {:?}", c.limit))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {} ({elapsed:.2?})", k + 1, c.name),
            Err(why) => {
                failures += 1;
                println!(
                    "criterion {}: FAIL  {} ({elapsed:.2?}): {why}",
                    k + 1,
                    c.name
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failures,
        CRITERIA.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

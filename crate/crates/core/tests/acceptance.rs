//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use arq_core::ar_quiver::closed_form_rho_m;
use arq_core::coxeter::{coxeter_matrix, order_identity_check, CoxeterData};
use arq_core::dynkin::{DynkinType, Family};
use arq_core::oracle;
use arq_core::{ARQuiver, DerivedQuiver, DerivedVertex, ValuedQuiver, ZVertex};
use common::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

struct Built {
    arq: ARQuiver,
    cd: CoxeterData,
}

fn build(q: &ValuedQuiver) -> Result<Built, String> {
    let arq = ARQuiver::build(q).map_err(|e| format!("{q:?}: {e}"))?;
    let cd = coxeter_matrix(&arq).map_err(|e| format!("{q:?}: {e}"))?;
    Ok(Built { arq, cd })
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Five random orientations per tested type, relabeled at random.
fn sample(rng: &mut StdRng) -> Vec<(DynkinType, ValuedQuiver)> {
    let mut out = Vec::new();
    for ty in tested_types() {
        for _ in 0..5 {
            out.push((ty, random_orientation(ty, rng)));
        }
    }
    out
}

fn criterion_1(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    let start = Instant::now();
    for (ty, q) in quivers {
        let b = build(q)?;
        ensure(b.cd.order == ty.coxeter_order(), || {
            format!("{ty}: order {} != {}", b.cd.order, ty.coxeter_order())
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} quivers in {elapsed:.2?}", quivers.len()))
}

fn criterion_2(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    for (ty, q) in quivers {
        let b = build(q)?;
        let count: usize = b.arq.m.iter().map(|&m| m as usize + 1).sum();
        let n = ty.rank();
        ensure(
            2 * count == n * b.cd.order as usize && count == ty.positive_roots(),
            || {
                format!(
                    "{ty}: {count} indecomposables, expected {}",
                    ty.positive_roots()
                )
            },
        )?;
        ensure(b.arq.vertices.len() == count, || {
            format!("{ty}: vertex list length")
        })?;
    }
    Ok(format!("{} quivers", quivers.len()))
}

fn criterion_3() -> Outcome {
    let e6 = build(&e6_example())?;
    ensure(e6.arq.rho == [6, 5, 3, 4, 2, 1], || {
        format!("E6 rho {:?}", e6.arq.rho)
    })?;
    ensure(e6.arq.m == [4, 4, 5, 5, 6, 6], || {
        format!("E6 m {:?}", e6.arq.m)
    })?;
    let f4 = build(&f4_example())?;
    ensure(f4.arq.rho == [1, 2, 3, 4], || {
        format!("F4 rho {:?}", f4.arq.rho)
    })?;
    ensure(f4.arq.m == [5, 5, 5, 5], || format!("F4 m {:?}", f4.arq.m))?;
    for q in [e6_example(), f4_example()] {
        let (m, rho) = closed_form_rho_m(&q).map_err(|e| e.to_string())?;
        let b = build(&q)?;
        ensure(m == b.arq.m && rho == b.arq.rho, || {
            "closed form disagrees".into()
        })?;
    }
    Ok("E6 and F4 examples".into())
}

fn criterion_4(rng: &mut StdRng) -> Outcome {
    let mut checked = 0;
    for _ in 0..12 {
        for n in [3, 5, 8] {
            let ty = DynkinType::new(Family::A, n).unwrap();
            let q = random_canonical_orientation(ty, rng);
            let b = build(&q)?;
            let (plus, _) = q.arrow_counts(1, n).unwrap();
            let want = ZVertex::new(i64::from(plus), n);
            ensure(b.arq.injective(1) == want, || {
                format!("{q:?}: I_1 at {}", b.arq.injective(1))
            })?;
            checked += 1;
        }
        for n in [4, 6, 8] {
            let ty = DynkinType::new(Family::D, n).unwrap();
            let q = random_canonical_orientation(ty, rng);
            let b = build(&q)?;
            let want = ZVertex::new(n as i64 - 2, 1);
            ensure(b.arq.injective(1) == want, || {
                format!("{q:?}: I_1 at {}", b.arq.injective(1))
            })?;
            checked += 1;
        }
        for n in [5, 7] {
            let ty = DynkinType::new(Family::D, n).unwrap();
            let q = random_canonical_orientation(ty, rng);
            let b = build(&q)?;
            let (plus, _) = q.arrow_counts(1, 2).unwrap();
            let want = ZVertex::new(n as i64 - 3 + i64::from(plus), 2);
            ensure(b.arq.injective(1) == want, || {
                format!("{q:?}: I_1 at {}", b.arq.injective(1))
            })?;
            checked += 1;
        }
        let ty = DynkinType::new(Family::E, 6).unwrap();
        let q = random_canonical_orientation(ty, rng);
        let b = build(&q)?;
        let (plus, _) = q.arrow_counts(1, 6).unwrap();
        let want = ZVertex::new(i64::from(plus) + 3, 6);
        ensure(b.arq.injective(1) == want, || {
            format!("{q:?}: I_1 at {}", b.arq.injective(1))
        })?;
        checked += 1;
    }
    Ok(format!("{checked} orientations"))
}

fn criterion_5(rng: &mut StdRng) -> Outcome {
    let compare = |q: &ValuedQuiver| -> Result<(), String> {
        let b = build(q)?;
        let (m, rho) = closed_form_rho_m(q).map_err(|e| e.to_string())?;
        ensure(m == b.arq.m && rho == b.arq.rho, || {
            format!(
                "{q:?}: closed form {m:?} {rho:?}, knit {:?} {:?}",
                b.arq.m, b.arq.rho
            )
        })
    };
    let mut exhaustive = 0;
    for ty in DynkinType::up_to_rank(5) {
        for q in all_orientations(ty) {
            compare(&q)?;
            exhaustive += 1;
        }
    }
    let mut random = 0;
    for ty in tested_types().into_iter().filter(|t| t.rank() >= 6) {
        for _ in 0..50 {
            compare(&random_orientation(ty, rng))?;
            random += 1;
        }
    }
    Ok(format!("{exhaustive} exhaustive, {random} random"))
}

fn criterion_6(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    for (ty, q) in quivers {
        let b = build(q)?;
        ensure(order_identity_check(&b.arq, &b.cd), || {
            format!("{ty}: order identity")
        })?;
        let dq = DerivedQuiver::new(&b.arq).map_err(|e| e.to_string())?;
        for i in q.vertices() {
            let mut v = DerivedVertex::new(0, i, 0);
            for _ in 0..b.cd.order {
                v = dq.tau_inverse(v).map_err(|e| e.to_string())?;
            }
            ensure(v == DerivedVertex::new(0, i, 2), || {
                format!("{ty}: τ_D^-|C| P_{i} = {v}")
            })?;
        }
    }
    Ok(format!("{} quivers", quivers.len()))
}

fn criterion_7(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    for (ty, q) in quivers {
        let b = build(q)?;
        let order = b.cd.order;
        let module = b
            .arq
            .counts_and_nilpotency(order)
            .map_err(|e| format!("{ty}: {e}"))?
            .nilpotency;
        let dq = DerivedQuiver::new(&b.arq).map_err(|e| e.to_string())?;
        let derived = dq
            .derived_nilpotency(&b.cd)
            .map_err(|e| format!("{ty}: {e}"))?;
        let cluster = dq
            .cluster_counts(&b.cd)
            .map_err(|e| format!("{ty}: {e}"))?
            .nilpotency;
        ensure([module, derived, cluster] == [order - 1; 3], || {
            format!("{ty}: nilpotencies {module} {derived} {cluster}, |C| = {order}")
        })?;
        for i in q.vertices() {
            let d = b
                .arq
                .distance(b.arq.projective(i), b.arq.injective(i))
                .map_err(|e| e.to_string())?;
            ensure(d == Some(order - 2), || {
                format!("{ty}: dist(P_{i}, I_{i}) = {d:?}")
            })?;
        }
    }
    Ok(format!("{} quivers", quivers.len()))
}

fn criterion_8(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    for (ty, q) in quivers {
        let b = build(q)?;
        let dq = DerivedQuiver::new(&b.arq).map_err(|e| e.to_string())?;
        let objects = dq
            .cluster_counts(&b.cd)
            .map_err(|e| format!("{ty}: {e}"))?
            .objects;
        let n = ty.rank();
        ensure(2 * objects == n * (b.cd.order as usize + 2), || {
            format!("{ty}: {objects} objects")
        })?;
    }
    let a3 = build(&quiver(3, &[(1, 2, 1, 1), (3, 2, 1, 1)]))?;
    let objects = DerivedQuiver::new(&a3.arq)
        .and_then(|dq| dq.cluster_counts(&a3.cd))
        .map_err(|e| e.to_string())?
        .objects;
    ensure(objects == 9, || format!("A3: {objects} objects"))?;
    Ok(format!("{} quivers, A3 = 9", quivers.len() + 1))
}

fn criterion_9(quivers: &[(DynkinType, ValuedQuiver)]) -> Outcome {
    for (ty, q) in quivers {
        let b = build(q)?;
        let r = oracle::verify_mesh(&b.arq);
        ensure(r.passed(), || {
            format!("{ty}: {:?}", r.failures().collect::<Vec<_>>())
        })?;
    }
    let mut audited = 0;
    for ty in DynkinType::up_to_rank(6) {
        for q in all_orientations(ty) {
            let b = build(&q)?;
            let r = oracle::audit_paths(&b.arq);
            ensure(r.passed(), || {
                format!("{ty}: {:?}", r.failures().collect::<Vec<_>>())
            })?;
            audited += 1;
        }
    }
    Ok(format!(
        "{} mesh checks, {audited} path audits",
        quivers.len()
    ))
}

fn criterion_10() -> Outcome {
    let roots: BTreeSet<Vec<i64>> = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
        .iter()
        .map(|r| r.to_vec())
        .collect();
    for q in [quiver(2, &[(1, 2, 1, 3)]), quiver(2, &[(2, 1, 3, 1)])] {
        let b = build(&q)?;
        let dims: BTreeSet<Vec<i64>> = b.arq.dims.values().cloned().collect();
        ensure(dims == roots && b.arq.dims.len() == 6, || {
            format!("{q:?}: {dims:?}")
        })?;
    }
    Ok("G2 dims are the positive roots".into())
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(0x5eed_a7c0);
    let quivers = sample(&mut rng);
    let results: Vec<(&str, Outcome)> = vec![
        ("Coxeter order table", criterion_1(&quivers)),
        ("indecomposable counts", criterion_2(&quivers)),
        ("worked examples E6, F4", criterion_3()),
        ("injective locations A, D, E6", criterion_4(&mut rng)),
        ("closed form equals knit", criterion_5(&mut rng)),
        ("order identity and τ_D period", criterion_6(&quivers)),
        ("nilpotencies", criterion_7(&quivers)),
        ("cluster count", criterion_8(&quivers)),
        ("oracle suite", criterion_9(&quivers)),
        ("G2 dimension vectors", criterion_10()),
    ];
    let mut failed = 0;
    for (k, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name} ... PASS ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name} ... FAIL ({why})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

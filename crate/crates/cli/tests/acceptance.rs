//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use gpgraph::oracle;
use gpgraph::report::{field_report, FieldReportRow};
use gpgraph_core::families::{census, census_by_enumeration};
use gpgraph_core::spectrum::{self, mu, verify_2re};
use gpgraph_core::waring::{verify_reduction, waring_g, waring_w};
use gpgraph_core::{arith, CyclotomicInteger, FiniteField, GpGraph, Nature};

fn prime_powers(limit: u64) -> Vec<(u64, u32, u64)> {
    (2..=limit).filter_map(|q| arith::prime_power(q).map(|(p, m)| (p, m, q))).collect()
}

fn graphs(limit: u64) -> impl Iterator<Item = GpGraph> {
    prime_powers(limit).into_iter().flat_map(|(p, m, q)| {
        let f = Arc::new(FiniteField::new(p, m).unwrap());
        arith::divisors(q - 1).into_iter().map(move |k| GpGraph::new(f.clone(), k).unwrap())
    })
}

fn graph(p: u64, m: u32, k: u64) -> GpGraph {
    GpGraph::new(Arc::new(FiniteField::new(p, m).unwrap()), k).unwrap()
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(what()) }
}

type Outcome = Result<String, String>;

/// Expected `(k, structure, nature, srg, g, w)` per row.
type Expected<'a> = [(u64, &'a str, &'a str, Option<&'a str>, Option<u32>, Option<u32>)];

fn compare_rows(rows: &[FieldReportRow], expected: &Expected) -> Result<(), String> {
    check(rows.len() == expected.len(), || format!("{} rows", rows.len()))?;
    for (row, &(k, structure, nature, srg, g, w)) in rows.iter().zip(expected) {
        let got = (row.k, row.structure.as_str(), row.nature.as_str(), row.srg.as_deref(), row.g, row.w);
        check(got == (k, structure, nature, srg, g, w), || {
            format!("q = {}: got {got:?}, expected {:?}", row.q, (k, structure, nature, srg, g, w))
        })?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    compare_rows(
        &field_report(25).map_err(|e| e.to_string())?,
        &[
            (1, "K_25", "integral", None, Some(1), Some(1)),
            (2, "P_25", "integral", Some("srg(25,12,5,6)"), Some(2), Some(2)),
            (3, "L_{5,5}", "integral", Some("srg(25,8,3,2)"), Some(2), Some(2)),
            (4, "generic", "real", None, Some(3), Some(3)),
            (6, "5 x K_5", "integral", None, None, None),
            (8, "generic", "complex", None, Some(4), Some(3)),
            (12, "5 x P_5", "real", None, None, None),
            (24, "5 x C->_5", "complex", None, None, None),
        ],
    )?;
    compare_rows(
        &field_report(49).map_err(|e| e.to_string())?,
        &[
            (1, "K_49", "integral", None, Some(1), Some(1)),
            (2, "P_49", "integral", Some("srg(49,24,11,12)"), Some(2), Some(2)),
            (3, "generic", "real", None, Some(2), Some(2)),
            (4, "L_{7,7}", "integral", Some("srg(49,12,5,2)"), Some(2), Some(2)),
            (6, "generic", "real", None, Some(3), Some(3)),
            (8, "7 x K_7", "integral", None, None, None),
            (12, "generic", "real", None, Some(6), Some(6)),
            (16, "7 x P->_7", "complex", None, None, None),
            (24, "7 x C_7", "real", None, None, None),
            (48, "7 x C->_7", "complex", None, None, None),
        ],
    )?;
    compare_rows(
        &field_report(81).map_err(|e| e.to_string())?,
        &[
            (1, "K_81", "integral", None, Some(1), Some(1)),
            (2, "P_81", "integral", Some("srg(81,40,19,20)"), Some(2), Some(2)),
            (4, "semiprimitive", "integral", Some("srg(81,20,1,6)"), Some(2), Some(2)),
            (5, "L_{9,9}", "integral", Some("srg(81,16,7,2)"), Some(2), Some(2)),
            (8, "generic", "integral", None, Some(3), Some(3)),
            (10, "9 x K_9", "integral", None, None, None),
            (16, "generic", "complex", None, Some(4), Some(3)),
            (20, "9 x P_9", "integral", None, None, None),
            (40, "27 x K_3", "integral", None, None, None),
            (80, "27 x P->_3", "complex", None, None, None),
        ],
    )?;
    compare_rows(
        &field_report(256).map_err(|e| e.to_string())?,
        &[
            (1, "K_256", "integral", None, Some(1), Some(1)),
            (3, "semiprimitive", "integral", Some("srg(256,85,24,30)"), Some(2), Some(2)),
            (5, "semiprimitive", "integral", Some("srg(256,51,2,12)"), Some(2), Some(2)),
            (15, "generic", "integral", None, Some(3), Some(3)),
            (17, "16 x K_16", "integral", None, None, None),
            (51, "16 x G(3,16)", "integral", None, None, None),
            (85, "64 x K_4", "integral", None, None, None),
            (255, "128 x K_2", "integral", None, None, None),
        ],
    )?;
    let elapsed = t.elapsed();
    check(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok("38 rows over q = 25, 49, 81, 256".into())
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for g in graphs(343) {
        let report = spectrum::spectrum(&g);
        let f = g.field();
        let p = f.p();
        check(report.power_sum(1).is_zero(), || format!("{g:?}: Σλ ≠ 0"))?;
        let second = if g.is_directed() { 0 } else { g.q() as u64 * g.n() as u64 };
        check(report.power_sum(2) == CyclotomicInteger::integer(p, second), || format!("{g:?}: Σλ²"))?;
        let principal = report.multiplicity(&CyclotomicInteger::integer(p, g.n() as u64));
        check(principal == g.components().component_count, || format!("{g:?}: mult(n) = {principal}"))?;
        let predicted = Nature::predict(p as u64, f.m(), g.k() as u64);
        check(report.nature == predicted, || format!("{g:?}: {} vs {predicted}", report.nature))?;
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn criterion_3() -> Outcome {
    let theta = [1, 2, 4]
        .iter()
        .fold(CyclotomicInteger::zero(7), |acc, &j| acc + CyclotomicInteger::root_power(7, j));
    let base = [(CyclotomicInteger::integer(7, 3), 1u64), (theta.clone(), 3), (theta.conjugate(), 3)];
    let mut oracle: BTreeMap<CyclotomicInteger, u64> = BTreeMap::new();
    for (a, ma) in &base {
        for (b, mb) in &base {
            for (c, mc) in &base {
                *oracle.entry(&(a + b) + c).or_default() += ma * mb * mc;
            }
        }
    }
    let report = spectrum::spectrum(&graph(7, 3, 38));
    check(report.eigenvalues.len() == 10, || format!("{} distinct eigenvalues", report.eigenvalues.len()))?;
    check(report.as_multiset() == oracle, || "multiset differs from the 3-fold sum".into())?;
    check(report.multiplicity(&CyclotomicInteger::integer(7, 2)) == 54, || "mult(2) ≠ 54".into())?;
    let three_theta_bar = &(&theta + &theta) + &theta.conjugate();
    check(report.multiplicity(&three_theta_bar) == 81, || "mult((−3+i√7)/2) ≠ 81".into())?;
    Ok("10 distinct eigenvalues".into())
}

fn criterion_4() -> Outcome {
    let f243 = Arc::new(FiniteField::new(3, 5).unwrap());
    let extra = [2, 22, 242].map(|k| GpGraph::new(f243.clone(), k).unwrap());
    let mut count = 0;
    for g in graphs(343).filter(GpGraph::is_directed).chain(extra) {
        check(verify_2re(&g).map_err(|e| e.to_string())?, || format!("{g:?}"))?;
        count += 1;
    }
    Ok(format!("{count} directed graphs"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for g in graphs(343).filter(|g| g.q() % 2 == 1 && g.is_directed()) {
        let expected = if g.k() == g.q() - 1 { g.field().p() as u64 } else { 1 };
        check(g.period() == expected, || format!("{g:?}: period {}", g.period()))?;
        count += 1;
    }
    let cycles = graph(7, 1, 2).directed_cycle_lengths();
    check([3, 4, 6, 7].iter().all(|l| cycles.contains(l)), || format!("Γ(2,7) cycles {cycles:?}"))?;
    let gcd = cycles.iter().fold(0u64, |a, &l| arith::gcd(a, l as u64));
    check(gcd == 1 && graph(7, 1, 2).period() == 1, || "Γ(2,7) period".into())?;
    Ok(format!("{count} directed graphs"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for g in graphs(343) {
        let f = g.field();
        let a = arith::multiplicative_order(f.p() as u64, g.n() as u64);
        let g_value = waring_g(&g);
        check(g_value.is_some() == (a == f.m()), || format!("{g:?}: existence"))?;
        let w = waring_w(&g);
        let formula = match g_value {
            None => None,
            Some(_) if g.is_directed() => waring_g(&g.symmetrize()),
            Some(v) => Some(v),
        };
        check(w == formula, || format!("{g:?}: w = {w:?}, formula {formula:?}"))?;
        count += 1;
    }
    Ok(format!("{count} graphs"))
}

fn criterion_7() -> Outcome {
    let mut tuples = vec![(5, 1, 2, 4), (7, 1, 2, 6)];
    for (p, _, _) in prime_powers(2401).into_iter().filter(|&(_, m, _)| m == 1) {
        for a in 1u32.. {
            if p.pow(a) > 2401 {
                break;
            }
            for b in 1u32.. {
                if arith::checked_pow(p, a * b).is_none_or(|big| big > 2401) {
                    break;
                }
                for c in arith::divisors(p.pow(a) - 1) {
                    if arith::is_primitive_divisor(c, p, a) && arith::is_primitive_divisor(b as u64 * c, p, a * b) {
                        tuples.push((p, a, b, c));
                    }
                }
            }
        }
    }
    for &(p, a, b, c) in &tuples {
        check(verify_reduction(p, a, b, c).map_err(|e| e.to_string())?, || format!("({p},{a},{b},{c})"))?;
    }
    Ok(format!("{} tuples", tuples.len()))
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let mut count = 0;
    for (_, _, q) in prime_powers(10_000) {
        let c = census(q).map_err(|e| e.to_string())?;
        check(c == census_by_enumeration(q).map_err(|e| e.to_string())?, || format!("q = {q}"))?;
        count += 1;
    }
    let c25 = census(25).unwrap();
    check(c25.n_complex == 2 && c25.n_integral == 4, || format!("{c25:?}"))?;
    let c81 = census(81).unwrap();
    check(c81.n_integral == 8, || format!("{c81:?}"))?;
    check(t.elapsed() < Duration::from_secs(30), || format!("took {:?}", t.elapsed()))?;
    Ok(format!("{count} fields"))
}

fn criterion_9() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for g in graphs(128) {
        let dev = oracle::numeric_deviation(&g).map_err(|e| e.to_string())?;
        check(dev < 1e-8, || format!("{g:?}: deviation {dev:e}"))?;
        worst = worst.max(dev);
        count += 1;
    }
    Ok(format!("{count} graphs, max deviation {worst:.1e}"))
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    let mut three = 0;
    for g in graphs(2401).filter(GpGraph::is_directed) {
        let f = g.field();
        let p = f.p() as u64;
        let q = g.q() as u64;
        let pa = p.pow(arith::multiplicative_order(p, g.n() as u64));
        let law = g.k() as u64 * (pa - 1) == 2 * (q - 1) && pa % 4 == 3;
        let m = mu(&g);
        check(m >= 3, || format!("{g:?}: mu = {m}"))?;
        check((m == 3) == law, || format!("{g:?}: mu = {m}, law says {law}"))?;
        count += 1;
        three += law as usize;
    }
    Ok(format!("{count} directed graphs, {three} with three eigenvalues"))
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for (p, m) in [(5, 2), (7, 2), (3, 4)] {
        let a = Arc::new(FiniteField::new(p, m).unwrap());
        let b = Arc::new(FiniteField::with_modulus_rank(p, m, 1).map_err(|e| e.to_string())?);
        check(a.modulus() < b.modulus(), || "moduli not in order".into())?;
        for k in arith::divisors(p.pow(m) - 1) {
            let sa = spectrum::spectrum(&GpGraph::new(a.clone(), k).unwrap());
            let sb = spectrum::spectrum(&GpGraph::new(b.clone(), k).unwrap());
            check(sa.as_multiset() == sb.as_multiset(), || format!("Γ({k},{})", p.pow(m)))?;
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("worked-example reports", criterion_1),
        ("spectrum exactness, q <= 343", criterion_2),
        ("Spec(Γ(38,343))", criterion_3),
        ("2Re relation", criterion_4),
        ("period law", criterion_5),
        ("Waring consistency", criterion_6),
        ("reduction formula", criterion_7),
        ("census identities, q <= 10^4", criterion_8),
        ("numeric oracle, q <= 128", criterion_9),
        ("three-eigenvalue digraph law, q <= 2401", criterion_10),
        ("modulus independence", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
            Err(payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}

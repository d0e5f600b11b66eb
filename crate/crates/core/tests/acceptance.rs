//! Acceptance suite. Every criterion is an exact equality; each prints one
//! PASS/FAIL line and the process exits nonzero if any fails.

mod common;

use std::time::Instant;

use bqf_braid::birman_menasco as bm;
use bqf_braid::braid3::{self, BraidWord};
use bqf_braid::counts::{self, Census, TraceCounts};
use bqf_braid::laurent::{GaussInt, HalfLaurent, UnitBase};
use bqf_braid::quadforms;
use bqf_braid::Result;
use rayon::prelude::*;

type Outcome = Result<std::result::Result<String, String>>;
type BadCells = Vec<(i64, i64)>;

fn traces(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).flat_map(|a| [a, -a]).collect()
}

fn fail_list<T: std::fmt::Debug>(what: &str, bad: &[T]) -> std::result::Result<String, String> {
    let shown: Vec<_> = bad.iter().take(5).collect();
    Err(format!("{} {what}: {shown:?}", bad.len()))
}

fn main_identity() -> Outcome {
    let mut ts = traces(3, 200);
    ts.extend([-1, 0, 1]);
    let mut bad = Vec::new();
    for &t in &ts {
        let r = counts::verify_main(t, counts::default_window_start(t))?;
        if !r.pass {
            bad.push((t, r.h_lhs, r.window_rhs));
        }
    }
    if bad.is_empty() {
        Ok(Ok(format!("{} traces", ts.len())))
    } else {
        Ok(fail_list("traces with h(t) != window sum", &bad))
    }
}

fn window_independence_and_inequality() -> Result<(Outcome, Outcome)> {
    let ts = traces(3, 50);
    let per_t: Vec<(BadCells, BadCells)> = ts
        .par_iter()
        .map(|&t| {
            let tc = TraceCounts::new(t)?;
            let h = quadforms::class_number_h(t)?;
            let mut eq_bad = Vec::new();
            let mut ineq_bad = Vec::new();
            for n in -40..=40 {
                let rows = tc.window(n);
                let total: i64 = rows.iter().map(|r| r.p + r.m as i64).sum();
                let p_sum: i64 = rows.iter().map(|r| r.p).sum();
                if total != h as i64 || rows.iter().any(|r| r.p < 0) {
                    eq_bad.push((t, n));
                }
                if p_sum > h as i64 {
                    ineq_bad.push((t, n));
                }
            }
            Ok((eq_bad, ineq_bad))
        })
        .collect::<Result<_>>()?;
    let eq_bad: Vec<_> = per_t.iter().flat_map(|x| x.0.clone()).collect();
    let ineq_bad: Vec<_> = per_t.iter().flat_map(|x| x.1.clone()).collect();
    let cells = ts.len() * 81;
    let eq = if eq_bad.is_empty() { Ok(format!("{cells} windows")) } else { fail_list("windows", &eq_bad) };
    let ineq = if ineq_bad.is_empty() { Ok(format!("{cells} windows")) } else { fail_list("windows", &ineq_bad) };
    Ok((Ok(eq), Ok(ineq)))
}

fn periodicity() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for t in traces(3, 100) {
        let tc = TraceCounts::new(t)?;
        let n0 = -(t - 3).abs() - 40;
        for n in n0..n0 + 12 {
            checked += 1;
            if tc.p_count(n)? != tc.p_count(n + 12)? {
                bad.push((t, n));
            }
        }
    }
    Ok(if bad.is_empty() { Ok(format!("{checked} cells")) } else { fail_list("cells", &bad) })
}

fn symmetry() -> Outcome {
    let mut bad = Vec::new();
    let ts = traces(3, 100);
    for &t in &ts {
        let r = counts::verify_symmetry(t, -(t + 3).abs() - 40)?;
        if !r.pass {
            bad.push((t, r.lhs, r.rhs));
        }
    }
    Ok(if bad.is_empty() { Ok(format!("{} traces", ts.len())) } else { fail_list("traces", &bad) })
}

fn specialization_failure(w: &BraidWord) -> Result<Option<&'static str>> {
    let eps = braid3::exponent_sum(w);
    let b = braid3::burau(w)?;
    let phi = braid3::phi(w)?;
    if b.specialize()? != phi {
        return Ok(Some("burau at q = -1"));
    }
    let tr = phi.trace()?;
    let expected = GaussInt::i_pow(eps).try_scale(tr - 2)?;
    let v = braid3::jones(w)?;
    let delta = braid3::alexander(w)?;
    if v.eval_q_minus_one()? != expected || delta.eval_q_minus_one()? != expected {
        return Ok(Some("special value"));
    }
    if b.det()? != HalfLaurent::monomial_pow(UnitBase::NegQ, eps) {
        return Ok(Some("determinant"));
    }
    if braid3::jones_from_alexander(&delta, eps)? != v {
        return Ok(Some("jones from alexander"));
    }
    Ok(None)
}

fn specialization() -> Outcome {
    let mut words: Vec<BraidWord> = common::words_up_to(7).collect();
    let mut rng = common::rng(0x5eed_0006);
    words.extend((0..10_000).map(|_| common::random_word(&mut rng, 40)));
    let bad: Vec<(String, &str)> = words
        .par_iter()
        .map(|w| Ok(specialization_failure(w)?.map(|why| (w.to_string(), why))))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(if bad.is_empty() { Ok(format!("{} words", words.len())) } else { fail_list("words", &bad) })
}

fn direct(w: &BraidWord) -> Result<(i64, i64)> {
    Ok((braid3::trace_b3(w)?, braid3::exponent_sum(w)))
}

fn closed_forms() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (w, te) in bm::unknot_classes() {
        checked += 1;
        if direct(&w)? != te {
            bad.push(format!("unknot {w}"));
        }
    }
    for k in -30..=30 {
        for inv in [false, true] {
            checked += 1;
            if direct(&bm::torus_word(k, inv))? != bm::torus_trace_exp(k, inv) {
                bad.push(format!("torus k={k} inverse={inv}"));
            }
        }
    }
    for u in 1..=8 {
        for v in 1..=8 {
            for w in 1..=8 {
                for k in 0..=2 {
                    if let Ok(te) = bm::family_iii_trace_exp(u, v, w, k) {
                        checked += 1;
                        if direct(&bm::family_iii_word(u, v, w, k)?)? != te {
                            bad.push(format!("iii {u} {v} {w} {k}"));
                        }
                    }
                    if let Ok(te) = bm::family_iv_trace_exp(u, v, w, k) {
                        checked += 1;
                        if direct(&bm::family_iv_word(u, v, w, k)?)? != te {
                            bad.push(format!("iv {u} {v} {w} {k}"));
                        }
                    }
                }
            }
        }
    }
    Ok(if bad.is_empty() { Ok(format!("{checked} parameter sets")) } else { fail_list("mismatches", &bad) })
}

fn vanishing() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for t in -200..=200 {
        let top = -(t - 3i64).abs();
        for n in top - 50..top {
            checked += 1;
            if bm::m_full(t, n) != 0 {
                bad.push((t, n));
            }
        }
    }
    Ok(if bad.is_empty() { Ok(format!("{checked} cells")) } else { fail_list("cells", &bad) })
}

fn ccc_round_trip() -> Outcome {
    let mut bad = Vec::new();
    let mut classes = 0;
    for t in traces(3, 50) {
        for c in quadforms::enumerate_classes(t)? {
            classes += 1;
            let f = c.key.repr;
            let back = quadforms::ccc_form(&quadforms::ccc_matrix(&f, t)?)?;
            if !quadforms::equivalent(&back, &f)? {
                bad.push(format!("t={t} {f}"));
            }
        }
    }
    let mut rng = common::rng(0x5eed_0009);
    let ts = traces(3, 50);
    for i in 0..200 {
        let t = ts[i % ts.len()];
        let cs = quadforms::enumerate_classes(t)?;
        let m = quadforms::ccc_matrix(&cs[i % cs.len()].key.repr, t)?;
        let p = common::random_sl2(&mut rng, 4, 3);
        let conj = m.conjugate_by(&p)?;
        if !quadforms::equivalent(&quadforms::ccc_form(&m)?, &quadforms::ccc_form(&conj)?)? {
            bad.push(format!("pair {m} ~ {conj}"));
        }
    }
    Ok(if bad.is_empty() { Ok(format!("{classes} classes, 200 conjugate pairs")) } else { fail_list("failures", &bad) })
}

fn brute_force() -> Outcome {
    let census = Census::run(12, 8, (-8, 8))?;
    let mut unsound = Vec::new();
    let mut gaps = Vec::new();
    let mut cells = 0;
    for t in -8..=8i64 {
        if t.abs() == 2 {
            continue;
        }
        for n in -8..=8 {
            cells += 1;
            let (found, x) = (census.count(t, n), counts::x_count(t, n)?);
            if found > x {
                unsound.push((t, n, found, x));
            } else if found < x {
                gaps.push((t, n, x - found));
            }
        }
    }
    let mut oracle_bad = Vec::new();
    for t in -8..=8i64 {
        if t.abs() == 2 {
            continue;
        }
        let brute = common::brute_conjugacy_classes(t, 12, 6).len() as u64;
        let h = quadforms::class_number_h(t)?;
        if brute != h {
            oracle_bad.push((t, brute, h));
        }
    }
    let mut problems = Vec::new();
    if !unsound.is_empty() {
        problems.push(format!("census above x_count (t, n, census, x): {unsound:?}"));
    }
    if !gaps.is_empty() {
        problems.push(format!("census short of x_count (t, n, gap): {gaps:?}"));
    }
    if !oracle_bad.is_empty() {
        problems.push(format!("brute-force class count != h (t, brute, h): {oracle_bad:?}"));
    }
    Ok(if problems.is_empty() {
        Ok(format!("{cells} cells match at length 12; brute-force class counts match h(t) for |t| <= 8"))
    } else {
        Err(problems.join("; "))
    })
}

fn report(id: u32, name: &str, start: Instant, outcome: Outcome, failures: &mut u32) {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(Ok(detail)) => println!("criterion {id:>2} PASS  {name}: {detail} ({secs:.1}s)"),
        Ok(Err(detail)) => {
            *failures += 1;
            println!("criterion {id:>2} FAIL  {name}: {detail} ({secs:.1}s)");
        }
        Err(e) => {
            *failures += 1;
            println!("criterion {id:>2} FAIL  {name}: error: {e} ({secs:.1}s)");
        }
    }
}

fn main() {
    let mut failures = 0;
    let s = Instant::now();
    report(1, "main identity h(t) = window sum of p + M", s, main_identity(), &mut failures);
    let s = Instant::now();
    match window_independence_and_inequality() {
        Ok((eq, ineq)) => {
            report(2, "window sum equals h(t) for every n in [-40, 40]", s, eq, &mut failures);
            report(5, "window sum of p is at most h(t)", s, ineq, &mut failures);
        }
        Err(e) => {
            report(2, "window sum equals h(t) for every n in [-40, 40]", s, Err(e.clone()), &mut failures);
            report(5, "window sum of p is at most h(t)", s, Err(e), &mut failures);
        }
    }
    let s = Instant::now();
    report(3, "periodicity p(t, n) = p(t, n + 12)", s, periodicity(), &mut failures);
    let s = Instant::now();
    report(4, "symmetry between t and -t", s, symmetry(), &mut failures);
    let s = Instant::now();
    report(6, "specialization identities on words", s, specialization(), &mut failures);
    let s = Instant::now();
    report(7, "closed trace/exponent forms vs direct computation", s, closed_forms(), &mut failures);
    let s = Instant::now();
    report(8, "M vanishes below the threshold", s, vanishing(), &mut failures);
    let s = Instant::now();
    report(9, "matrix/form correspondence round trip", s, ccc_round_trip(), &mut failures);
    let s = Instant::now();
    report(10, "census and brute-force concordance", s, brute_force(), &mut failures);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}

// Cells where distinct braid classes close to the same link.

use bqf_braid::birman_menasco as bm;

fn main() -> bqf_braid::Result<()> {
    println!("family iii (1, 2, 3, 0) -> {:?}", bm::family_iii_trace_exp(1, 2, 3, 0)?);
    println!("family iv  (1, 2, 3, 1) -> {:?}", bm::family_iv_trace_exp(1, 2, 3, 1)?);

    for (t, n) in [(3, 0), (1, 2), (7, 4), (20, 1), (-48, 9)] {
        let report = bm::m_report(t, n)?;
        println!("t = {t}, n = {n}: M' = {}, M = {}", report.m_prime, report.m);
        for w in &report.witnesses {
            let words: Vec<String> = w.words.iter().map(ToString::to_string).collect();
            println!("  {:<7} {}", w.family.tag(), words.join("  |  "));
        }
    }
    Ok(())
}

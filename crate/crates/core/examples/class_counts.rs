// Per-writhe counts and the window identity h(t) = sum of p + M.

use bqf_braid::counts::{self, TraceCounts};

fn main() -> bqf_braid::Result<()> {
    let tc = TraceCounts::new(7)?;
    println!("t = 7: h = {}, residues {:?}", tc.class_number(), tc.residue_counts());
    for n in -2..=10 {
        let r = tc.row(n);
        println!("  n = {:>3}: x = {}, m = {}, p = {}", r.n, r.x_count, r.m, r.p);
    }

    for t in [-11, -5, 0, 5, 11, 40] {
        let report = counts::verify_main(t, counts::default_window_start(t))?;
        println!("t = {t}: h = {}, window = {}, pass = {}", report.h_lhs, report.window_rhs, report.pass);
    }

    let sym = counts::verify_symmetry(5, -40)?;
    println!("symmetry t = 5, n = -40: {} vs {}", sym.lhs, sym.rhs);
    Ok(())
}

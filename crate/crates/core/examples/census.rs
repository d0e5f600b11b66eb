// Lower bounds on braid class counts from exhaustive word enumeration.

use bqf_braid::counts::{self, Census};

fn main() -> bqf_braid::Result<()> {
    let census = Census::run(8, 5, (-4, 4))?;
    for ((t, n), found) in census.cells() {
        let x = counts::x_count(t, n)?;
        println!("t = {t:>2}, n = {n:>2}: {found} of {x}");
    }
    Ok(())
}
